//! Building C(A, alpha, beta, r) directly and checking the cyclicity hypotheses.

use cyclic_ag::lincode::{format_matrix, Budget};
use cyclic_ag::sigma::{construct_sigma_code, verify_sigma_cyclic, SigmaCodeSpec};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::parse("2^3", None)?;
    let map = MobiusMap::diagonal(&f, f.primitive_element())?;
    let spec = SigmaCodeSpec::new(map, ProjPoint::Finite(f.one()), ProjPoint::Infinity, 3)?;
    let code = construct_sigma_code(&spec)?;
    let report = verify_sigma_cyclic(&spec.map, &spec.places()?, &spec.divisor());
    println!("{}: [{}, {}, {}]", spec.describe(), code.len(), code.dimension(), code.min_distance(&Budget::default())?);
    println!("{}", format_matrix(&f, code.generator()));
    for (name, ok) in report.flags() {
        println!("{name}: {ok}");
    }
    Ok(())
}
