//! Cyclic MDS codes on the n-th roots of unity with G = r P_0 + s P_inf.

use cyclic_ag::lincode::Budget;
use cyclic_ag::sigma::example_roots_of_unity;

fn main() -> cyclic_ag::Result<()> {
    let budget = Budget::default();
    for (q, n) in [(7u32, 6u64), (9, 4), (9, 8), (13, 12)] {
        for (r, s) in [(0, 1), (1, 1), (2, 1), (-1, 3)] {
            if r + s > n as i64 - 2 {
                continue;
            }
            let ex = example_roots_of_unity(q, n, r, s)?;
            let d = ex.code.min_distance(&budget)?;
            println!(
                "q={q:>2} n={n:>2} r={r:>2} s={s}: [{}, {}, {d}] cyclic {} mds {}",
                ex.code.len(),
                ex.code.dimension(),
                ex.cyclic,
                ex.code.is_mds(&budget)?
            );
        }
    }
    Ok(())
}
