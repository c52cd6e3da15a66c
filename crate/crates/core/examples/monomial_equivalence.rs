//! Deciding monomial equivalence of small codes.

use cyclic_ag::lincode::{monomial_equivalence, Budget, Equivalence, LinearCode};
use cyclic_ag::sigma::{construct_sigma_code, SigmaCodeSpec};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(7)?;
    let code = |a: i64| -> cyclic_ag::Result<LinearCode> {
        let spec = SigmaCodeSpec::new(MobiusMap::diagonal(&f, f.from_int(a))?, ProjPoint::Finite(f.one()), ProjPoint::Infinity, 2)?;
        construct_sigma_code(&spec)
    };
    let (c3, c5) = (code(3)?, code(5)?);
    let budget = Budget::default();
    match monomial_equivalence(&c3, &c5, &budget) {
        Equivalence::Equivalent(w) => println!("D_3 and D_5 codes: EQUIVALENT via perm {:?}", w.perm),
        other => println!("D_3 and D_5 codes: {other:?}"),
    }
    let repetition = LinearCode::repetition(&f, 6)?;
    println!("D_3 code vs repetition code: {:?}", monomial_equivalence(&c3, &repetition, &budget));
    let tight = Budget { permutations: 100, ..budget };
    println!("with a budget of 100 permutations: {:?}", monomial_equivalence(&c3, &c5, &tight));
    Ok(())
}
