//! The systematic part W of C(A, alpha, inf, r) for triangular A, computed in
//! closed form and by elimination.

use cyclic_ag::lincode::format_matrix;
use cyclic_ag::sigma::{construct_sigma_code, standard_form_closed, SigmaCodeSpec};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(7)?;
    let a = f.from_int(3);
    for b in [0, 1, 4] {
        let map = MobiusMap::triangular(&f, a, f.from_int(b))?;
        let alpha = if map.is_fixed(ProjPoint::Finite(f.one())) { f.zero() } else { f.one() };
        let closed = standard_form_closed(&map, alpha, 2)?;
        let spec = SigmaCodeSpec::new(map.clone(), ProjPoint::Finite(alpha), ProjPoint::Infinity, 2)?;
        let eliminated = construct_sigma_code(&spec)?.standard_form()?;
        println!("A = [{map}], alpha = {}: closed form equals elimination: {}", f.format(alpha), closed == eliminated.w);
        println!("{}", format_matrix(&f, &closed));
    }
    Ok(())
}
