//! Riemann-Roch spaces on the projective line and the action of sigma on divisors.

use cyclic_ag::rfield::{in_riemann_roch_space, rr_basis, rr_basis_paper};
use cyclic_ag::{Divisor, Field, MobiusMap};

fn main() -> cyclic_ag::Result<()> {
    let f = Field::prime(5)?;
    for text in ["3*inf", "2*a=0 + 1*inf", "1*a=1 + -1*a=2", "-1*inf"] {
        let g = Divisor::parse(&f, text)?;
        let basis = rr_basis(&f, &g);
        println!("L({}) has dimension {}:", g.format(&f), basis.len());
        for z in &basis {
            println!("  {z}  in L(G): {}", in_riemann_roch_space(z, &g));
        }
    }
    let basis = rr_basis_paper(&f, f.from_int(2), 3);
    println!("basis 1/(x-2)^j: {}", basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    let a = MobiusMap::parse(&f, "1,0;0,2")?;
    let g = Divisor::parse(&f, "1*a=0 + 2*a=1")?;
    println!("sigma(x) = x/2 maps {} to {}", g.format(&f), g.image(&a).format(&f));
    Ok(())
}
