//! Fixed field of a cyclic group of Möbius automorphisms of F_q(x), and
//! the decomposition of its places in F_q(x).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pgl2::{MobiusMap, ProjPoint};
use crate::rfield::{Place, Poly, RatFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Trace,
    Norm,
    PowerSum2,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Trace => "trace",
            Method::Norm => "norm",
            Method::PowerSum2 => "power-sum-2",
        })
    }
}

/// A rational function of degree `m` fixed by the map, so that it
/// generates the fixed field of the group of order `m`.
#[derive(Clone, Debug)]
pub struct InvariantGenerator {
    pub z: RatFn,
    pub m: u64,
    pub method: Method,
}

/// `sigma^i(x)` for `i = 0..m`: the Möbius function of `A^i`.
fn conjugates(map: &MobiusMap, m: u64) -> Vec<RatFn> {
    let f = map.field();
    let mut out = Vec::with_capacity(m as usize);
    let mut power = MobiusMap::identity(f);
    for _ in 0..m {
        let [a, b, c, d] = power.entries();
        let num = Poly::from_coeffs(f, vec![b, a]);
        let den = Poly::from_coeffs(f, vec![d, c]);
        out.push(RatFn::new(num, den).expect("invertible matrix"));
        power = power.compose(map);
    }
    out
}

/// Tries the trace, the norm and the second power sum of the orbit of `x`,
/// returning the first of degree `m`.
pub fn invariant_generator(map: &MobiusMap) -> Result<InvariantGenerator> {
    let f = map.field();
    let m = map.order();
    if m < 2 {
        return Err(Error::IdentityMap);
    }
    let conj = conjugates(map, m);
    let zero = RatFn::constant(f, f.zero());
    let one = RatFn::constant(f, f.one());
    let candidates = [
        (Method::Trace, conj.iter().fold(zero.clone(), |acc, g| &acc + g)),
        (Method::Norm, conj.iter().fold(one, |acc, g| &acc * g)),
        (Method::PowerSum2, conj.iter().fold(zero, |acc, g| &acc + &(g * g))),
    ];
    for (method, z) in candidates {
        if z.degree() as u64 == m && z.substitute(map) == z {
            return Ok(InvariantGenerator { z, m, method });
        }
    }
    Err(Error::DegenerateGenerator { m: m as u32 })
}

/// A place in a fiber with its multiplicity `e`; its degree is `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPlace {
    pub place: Place,
    pub e: u32,
}

impl FiberPlace {
    pub fn f(&self) -> usize {
        self.place.degree()
    }
}

/// Places of F_q(x) lying over the place `z = t` of the fixed field, from
/// the factorization of `num(z) - t den(z)` (or `den(z)` for `t = inf`).
/// Infinity appears with multiplicity `m` minus the degree of that
/// polynomial.
pub fn fiber_decomposition(gen: &InvariantGenerator, t: ProjPoint) -> Vec<FiberPlace> {
    let z = &gen.z;
    let poly = match t {
        ProjPoint::Finite(t) => z.num() - &z.den().scale(t),
        ProjPoint::Infinity => z.den().clone(),
    };
    let mut out: Vec<FiberPlace> = poly
        .factor()
        .into_iter()
        .map(|(g, e)| {
            let place = if g.degree() == Some(1) {
                Place::finite(g.field().neg(g.coeff(0)))
            } else {
                Place::Irreducible(g)
            };
            FiberPlace { place, e }
        })
        .collect();
    let deg = poly.degree().unwrap_or(0) as u64;
    if deg < gen.m {
        out.push(FiberPlace { place: Place::infinity(), e: (gen.m - deg) as u32 });
    }
    out.sort_by(|a, b| a.place.cmp(&b.place));
    out
}

/// Decomposition of the place below an orbit.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub generator: InvariantGenerator,
    pub orbit: Vec<ProjPoint>,
    /// Common value of `z` on the orbit (the first one if not constant).
    pub t: ProjPoint,
    pub constant_on_orbit: bool,
    pub fiber: Vec<FiberPlace>,
    /// The rational places of the fiber are exactly the orbit.
    pub fiber_is_orbit: bool,
    /// Every orbit place has `e f = m / n`.
    pub ef_uniform: bool,
    /// `sum e f` over the fiber.
    pub total: u64,
}

impl SplittingReport {
    pub fn n(&self) -> usize {
        self.orbit.len()
    }

    pub fn m(&self) -> u64 {
        self.generator.m
    }

    pub fn holds(&self) -> bool {
        self.constant_on_orbit && self.fiber_is_orbit && self.ef_uniform && self.total == self.m()
    }
}

pub fn splitting_report(map: &MobiusMap, alpha: ProjPoint) -> Result<SplittingReport> {
    let generator = invariant_generator(map)?;
    let orbit = map.orbit(alpha)?;
    let values: Vec<ProjPoint> = orbit.iter().map(|&p| generator.z.value_at(p)).collect();
    let t = values[0];
    let constant_on_orbit = values.iter().all(|&v| v == t);
    let fiber = fiber_decomposition(&generator, t);
    let mut rational: Vec<ProjPoint> = fiber.iter().filter_map(|fp| fp.place.point()).collect();
    let mut sorted_orbit = orbit.clone();
    rational.sort();
    sorted_orbit.sort();
    let fiber_is_orbit = rational == sorted_orbit;
    let expected = generator.m / orbit.len() as u64;
    let ef_uniform = fiber
        .iter()
        .filter(|fp| fp.place.point().is_some_and(|p| orbit.contains(&p)))
        .all(|fp| fp.e as u64 * fp.f() as u64 == expected);
    let total = fiber.iter().map(|fp| fp.e as u64 * fp.f() as u64).sum();
    Ok(SplittingReport { generator, orbit, t, constant_on_orbit, fiber, fiber_is_orbit, ef_uniform, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn total(fiber: &[FiberPlace]) -> u64 {
        fiber.iter().map(|fp| fp.e as u64 * fp.f() as u64).sum()
    }

    #[test]
    fn translation_uses_norm() {
        let f = Field::prime(5).unwrap();
        let g = invariant_generator(&MobiusMap::translation(&f, f.one())).unwrap();
        assert_eq!(g.method, Method::Norm);
        assert_eq!(g.m, 5);
        // x^5 - x
        let want = Poly::from_coeffs(&f, vec![f.zero(), f.from_int(-1), f.zero(), f.zero(), f.zero(), f.one()]);
        assert_eq!(g.z, RatFn::from_poly(want));
        let fiber = fiber_decomposition(&g, ProjPoint::Finite(f.zero()));
        assert_eq!(fiber.len(), 5);
        assert!(fiber.iter().all(|fp| fp.e == 1 && fp.f() == 1));
    }

    #[test]
    fn scaling_uses_norm() {
        let f = Field::prime(7).unwrap();
        let g = invariant_generator(&MobiusMap::diagonal(&f, f.from_int(3)).unwrap()).unwrap();
        assert_eq!(g.method, Method::Norm);
        assert_eq!(g.z.degree(), 6);
        assert_eq!(g.z.den().degree(), Some(0));
        let at_zero = fiber_decomposition(&g, ProjPoint::Finite(f.zero()));
        assert_eq!(at_zero, vec![FiberPlace { place: Place::finite(f.zero()), e: 6 }]);
        let report = splitting_report(&MobiusMap::diagonal(&f, f.from_int(3)).unwrap(), ProjPoint::Finite(f.one())).unwrap();
        assert!(report.holds());
        assert_eq!(report.fiber.len(), 6);
    }

    #[test]
    fn involution_uses_trace() {
        let f = Field::prime(7).unwrap();
        let inv = MobiusMap::parse(&f, "0,1;1,0").unwrap();
        let g = invariant_generator(&inv).unwrap();
        assert_eq!(g.method, Method::Trace);
        let want = RatFn::new(
            Poly::from_coeffs(&f, vec![f.one(), f.zero(), f.one()]),
            Poly::from_coeffs(&f, vec![f.zero(), f.one()]),
        )
        .unwrap();
        assert_eq!(g.z, want);
        for t in ProjPoint::all(&f) {
            assert_eq!(total(&fiber_decomposition(&g, t)), 2);
        }
    }

    #[test]
    fn order_five_map_over_gf4() {
        let f = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let map = MobiusMap::new(&f, f.one(), f.one(), f.generator(), f.zero()).unwrap();
        let report = splitting_report(&map, ProjPoint::Finite(f.one())).unwrap();
        assert!(report.holds(), "{report:?}");
        assert!(report.fiber.iter().any(|fp| fp.place == Place::infinity()));
        for t in ProjPoint::all(&f) {
            assert_eq!(total(&fiber_decomposition(&report.generator, t)), 5);
        }
    }

    #[test]
    fn identity_is_rejected() {
        let f = Field::prime(5).unwrap();
        assert!(matches!(invariant_generator(&MobiusMap::identity(&f)), Err(Error::IdentityMap)));
    }
}
