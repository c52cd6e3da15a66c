//! Every C(A, alpha, beta, r) of a given length and dimension reduces to one
//! representative.

use cyclic_ag::sigma::{canonicalize, construct_sigma_code, SigmaCodeSpec};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(5)?;
    let specs = [
        SigmaCodeSpec::new(MobiusMap::diagonal(&f, f.from_int(3))?, ProjPoint::Finite(f.one()), ProjPoint::Infinity, 1)?,
        SigmaCodeSpec::new(MobiusMap::parse(&f, "1,0;1,2")?, ProjPoint::Finite(f.one()), ProjPoint::Finite(f.zero()), 1)?,
        SigmaCodeSpec::new(MobiusMap::parse(&f, "2,4;0,1")?, ProjPoint::Finite(f.zero()), ProjPoint::Finite(f.from_int(1)), 1)?,
        SigmaCodeSpec::new(MobiusMap::parse(&f, "1,3;0,1")?, ProjPoint::Finite(f.zero()), ProjPoint::Infinity, 2)?,
    ];
    for spec in specs {
        let canon = canonicalize(&spec)?;
        println!("{}", spec.describe());
        for step in &canon.steps {
            println!("  -> {}  ({}, {:?})", step.spec.describe(), step.name, step.relation);
        }
        let moved = construct_sigma_code(&spec)?.apply_monomial(&canon.witness)?;
        let target = construct_sigma_code(&canon.spec)?;
        println!("  witness perm {:?}, maps the code onto the representative: {}", canon.witness.perm, moved.codes_equal(&target)?);
    }
    Ok(())
}
