//! Codes on the roots of x^p - x - alpha under the translation x -> x + 1.

use cyclic_ag::lincode::Budget;
use cyclic_ag::sigma::example_artin_schreier;

fn main() -> cyclic_ag::Result<()> {
    for q in [4u32, 8, 9, 25] {
        for s in 1..=3 {
            let ex = example_artin_schreier(q, s)?;
            let f = ex.code.field().clone();
            println!(
                "q={q:>2} s={s}: places {} [{}, {}, {:?}] cyclic {}",
                ex.places.iter().map(|p| p.format(&f)).collect::<Vec<_>>().join(" "),
                ex.code.len(),
                ex.code.dimension(),
                ex.code.min_distance(&Budget::default()).ok(),
                ex.cyclic
            );
        }
    }
    Ok(())
}
