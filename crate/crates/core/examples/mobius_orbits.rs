//! Orbits of Möbius maps on the projective line.

use cyclic_ag::{Field, MobiusMap, ProjPoint};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::new(2, 2, Some(&[1, 1, 1]))?;
    let a = MobiusMap::parse(&f, "1,1;b,0")?;
    let orbit = a.orbit(ProjPoint::Finite(f.one()))?;
    println!("sigma(x) = (x+1)/(bx) has order {}", a.order());
    println!("orbit of 1: {}", orbit.iter().map(|p| p.format(&f)).collect::<Vec<_>>().join(", "));

    let f7 = Field::prime(7)?;
    for (a, b) in [(1, 3), (2, 0), (3, 5), (6, 1)] {
        let m = MobiusMap::triangular(&f7, f7.from_int(a), f7.from_int(b))?;
        let fixed: Vec<String> = m.fixed_points().iter().map(|p| p.format(&f7)).collect();
        println!(
            "[{m}]: order {} (closed form {}), fixed points {fixed:?}",
            m.order(),
            m.order_triangular()?
        );
        let alpha = ProjPoint::all(&f7).into_iter().find(|&p| !m.is_fixed(p)).expect("moved point");
        let orbit = m.orbit(alpha)?;
        println!("  orbit of {}: {}", alpha.format(&f7), orbit.iter().map(|p| p.format(&f7)).collect::<Vec<_>>().join(" -> "));
    }
    Ok(())
}
