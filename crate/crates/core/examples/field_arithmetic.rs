//! Arithmetic in GF(9) and GF(4): orders, primitive elements and Frobenius orbits.

use cyclic_ag::Field;

fn main() -> cyclic_ag::Result<()> {
    let f = Field::parse("3^2", None)?;
    println!("GF({}) with modulus {:?}", f.q(), f.modulus());
    let g = f.primitive_element();
    for a in f.nonzero_elements() {
        println!(
            "{:>6}  order {}  = {}^{}  frobenius orbit {:?}",
            f.format(a),
            f.element_order(a)?,
            f.format(g),
            f.log(a).unwrap_or(0),
            f.frobenius_orbit(a).iter().map(|&x| f.format(x)).collect::<Vec<_>>()
        );
    }

    let gf4 = Field::new(2, 2, Some(&[1, 1, 1]))?;
    let b = gf4.generator();
    println!("in GF(4): b^2 + b + 1 = {}", gf4.format(gf4.add(gf4.mul(b, b), gf4.add(b, gf4.one()))));
    println!("b^-1 = {}", gf4.format(gf4.inv(b)));
    Ok(())
}
