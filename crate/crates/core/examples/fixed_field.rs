//! A generator of the fixed field of <sigma> and the decomposition of its places.

use cyclic_ag::fixedfield::{fiber_decomposition, invariant_generator, splitting_report};
use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(7)?;
    for text in ["1,1;0,1", "1,0;0,3", "0,1;1,0", "0,1;1,1"] {
        let map = MobiusMap::parse(&f, text)?;
        let gen = invariant_generator(&map)?;
        println!("sigma = [{map}]: z = {} (m = {}, {})", gen.z, gen.m, gen.method);
        for t in ProjPoint::all(&f) {
            let fiber = fiber_decomposition(&gen, t);
            let parts: Vec<String> = fiber.iter().map(|fp| format!("{}^{}", fp.place.format(&f), fp.e)).collect();
            println!("  z = {:>3}: {}", t.format(&f), parts.join(" "));
        }
        let alpha = ProjPoint::all(&f).into_iter().find(|&p| !map.is_fixed(p)).expect("moved point");
        let report = splitting_report(&map, alpha)?;
        println!("  orbit of {} (n = {}) lies over z = {}; splitting holds: {}", alpha.format(&f), report.n(), report.t.format(&f), report.holds());
    }
    Ok(())
}
