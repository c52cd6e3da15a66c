//! Codes on the Frobenius conjugates of a primitive element.
//!
//! The Frobenius automorphism is semilinear, so the rotation of a codeword
//! is its coordinatewise p-th power. Only some of these codes are closed
//! under the plain rotation; the shift test reports which.

use cyclic_ag::sigma::example_frobenius;

fn main() -> cyclic_ag::Result<()> {
    for (p, m) in [(2u32, 2u32), (2, 3), (3, 2), (2, 4)] {
        for r in -1..=m as i64 {
            for s in -1..m as i64 - r {
                let ex = example_frobenius(p, m, r, s)?;
                if ex.code.dimension() == 0 {
                    continue;
                }
                let f = ex.code.field().clone();
                println!(
                    "GF({}^{}) r={r:>2} s={s:>2}: places {} k={} cyclic {}",
                    p,
                    m,
                    ex.places.iter().map(|pl| pl.format(&f)).collect::<Vec<_>>().join(" "),
                    ex.code.dimension(),
                    ex.cyclic
                );
            }
        }
    }
    Ok(())
}
