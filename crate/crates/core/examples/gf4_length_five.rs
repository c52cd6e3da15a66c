//! The length-5 cyclic code over GF(4) whose divisor sits on an invariant place of degree 2.

use cyclic_ag::lincode::{format_matrix, Budget};
use cyclic_ag::sigma::example_degree_two_place;

fn main() -> cyclic_ag::Result<()> {
    for r in 1..=3 {
        let ex = example_degree_two_place(r)?;
        let f = ex.code.field().clone();
        let report = ex.report.expect("Möbius map");
        println!("G = {}", ex.divisor.format(&f));
        println!("  places {}", ex.places.iter().map(|p| p.format(&f)).collect::<Vec<_>>().join(", "));
        println!(
            "  [n, k, d] = [{}, {}, {:?}], cyclic {}",
            ex.code.len(),
            ex.code.dimension(),
            ex.code.min_distance(&Budget::default()).ok(),
            ex.cyclic
        );
        for (name, ok) in report.flags() {
            println!("  {name}: {ok}");
        }
        println!("{}", format_matrix(&f, ex.code.generator()));
    }
    Ok(())
}
