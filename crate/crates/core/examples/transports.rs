//! Moving the point of G from a finite fixed point to 0 and then to infinity
//! without changing the code.

use cyclic_ag::lincode::format_matrix;
use cyclic_ag::sigma::{construct_sigma_code, transport_beta_to_zero, transport_zero_to_infinity, SigmaCodeSpec};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(7)?;
    // The orbit map t -> 3t + 5 fixes 1 and infinity.
    let a = MobiusMap::triangular(&f, f.from_int(3), f.from_int(5))?;
    let spec = SigmaCodeSpec::new(a, ProjPoint::Finite(f.zero()), ProjPoint::Finite(f.one()), 2)?;
    let at_zero = transport_beta_to_zero(&spec)?;
    let at_inf = transport_zero_to_infinity(&at_zero)?;
    let reference = construct_sigma_code(&spec)?;
    for s in [&spec, &at_zero, &at_inf] {
        let code = construct_sigma_code(s)?;
        let orbit: Vec<String> = s.orbit()?.iter().map(|p| p.format(&f)).collect();
        println!("{}  orbit {}  equal to the first: {}", s.describe(), orbit.join(","), code.codes_equal(&reference)?);
    }
    println!("common reduced generator:\n{}", format_matrix(&f, reference.rref()));
    Ok(())
}
