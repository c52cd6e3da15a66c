//! PGL2(F_q) acting on the projective line.
//!
//! A [`MobiusMap`] with matrix `[[a, b], [c, d]]` stands for the automorphism
//! `sigma` of F_q(x) with `sigma(x) = (ax + b)/(cx + d)`. On points of
//! P^1(F_q), and therefore on rational places, `sigma` acts through the
//! inverse matrix: `sigma(P_t) = P_{A^{-1} t}`. Orbits are generated with
//! `A^{-1}` so that `sigma` moves each orbit entry to the next one.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A point of P^1(F_q).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjPoint {
    Finite(Elem),
    Infinity,
}

impl ProjPoint {
    pub fn is_infinity(self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn finite(self) -> Option<Elem> {
        match self {
            ProjPoint::Finite(a) => Some(a),
            ProjPoint::Infinity => None,
        }
    }

    /// All `q + 1` points: field elements in canonical order, then infinity.
    pub fn all(field: &Field) -> Vec<ProjPoint> {
        field.elements().map(ProjPoint::Finite).chain(std::iter::once(ProjPoint::Infinity)).collect()
    }

    /// `t -> 1/t` on P^1, exchanging 0 and infinity.
    pub fn reciprocal(self, field: &Field) -> ProjPoint {
        match self {
            ProjPoint::Infinity => ProjPoint::Finite(field.zero()),
            ProjPoint::Finite(a) if a.is_zero() => ProjPoint::Infinity,
            ProjPoint::Finite(a) => ProjPoint::Finite(field.inv(a)),
        }
    }

    pub fn format(self, field: &Field) -> String {
        match self {
            ProjPoint::Finite(a) => field.format(a),
            ProjPoint::Infinity => "inf".into(),
        }
    }

    pub fn parse(field: &Field, s: &str) -> Result<ProjPoint> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            Ok(ProjPoint::Infinity)
        } else {
            field.parse_elem(s).map(ProjPoint::Finite)
        }
    }
}

/// Element of PGL2(F_q), normalized so that the first nonzero entry of
/// `(a, b, c, d)` is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct MobiusMap {
    field: Field,
    m: [Elem; 4],
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MobiusMap({})", self)
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.m.map(|e| self.field.format(e));
        write!(f, "{a},{b};{c},{d}")
    }
}

impl Serialize for MobiusMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl MobiusMap {
    pub fn new(field: &Field, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<MobiusMap> {
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        if det.is_zero() {
            return Err(Error::DegenerateMatrix);
        }
        let lead = [a, b, c, d].into_iter().find(|e| !e.is_zero()).expect("nonzero determinant");
        let s = field.inv(lead);
        Ok(MobiusMap { field: field.clone(), m: [a, b, c, d].map(|e| field.mul(e, s)) })
    }

    pub fn identity(field: &Field) -> MobiusMap {
        let (o, z) = (field.one(), field.zero());
        MobiusMap { field: field.clone(), m: [o, z, z, o] }
    }

    /// `[[1, b], [0, 1]]`, i.e. `x -> x + b`.
    pub fn translation(field: &Field, b: Elem) -> MobiusMap {
        MobiusMap::new(field, field.one(), b, field.zero(), field.one()).expect("unipotent")
    }

    /// `[[1, 0], [0, a]]`.
    pub fn diagonal(field: &Field, a: Elem) -> Result<MobiusMap> {
        MobiusMap::new(field, field.one(), field.zero(), field.zero(), a)
    }

    /// Triangular form `[[1, -b], [0, a]]`, whose inverse acts as
    /// `t -> a t + b`.
    pub fn triangular(field: &Field, a: Elem, b: Elem) -> Result<MobiusMap> {
        MobiusMap::new(field, field.one(), field.neg(b), field.zero(), a)
    }

    /// Parses `a,b;c,d` with field-element entries.
    pub fn parse(field: &Field, s: &str) -> Result<MobiusMap> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!("matrix {s:?} must look like a,b;c,d")));
        }
        let mut e = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!("matrix {s:?} must look like a,b;c,d")));
            }
            for c in cols {
                e.push(field.parse_elem(c)?);
            }
        }
        MobiusMap::new(field, e[0], e[1], e[2], e[3])
    }

    /// Every element of PGL2(F_q), in normalized-entry order.
    pub fn all(field: &Field) -> Vec<MobiusMap> {
        let one = field.one();
        let zero = field.zero();
        let mut out = Vec::new();
        // a = 1
        for b in field.elements() {
            for c in field.elements() {
                for d in field.elements() {
                    if let Ok(m) = MobiusMap::new(field, one, b, c, d) {
                        out.push(m);
                    }
                }
            }
        }
        // a = 0, b = 1
        for c in field.nonzero_elements() {
            for d in field.elements() {
                out.push(MobiusMap::new(field, zero, one, c, d).expect("det = -c"));
            }
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> [Elem; 4] {
        self.m
    }

    pub fn a(&self) -> Elem {
        self.m[0]
    }

    pub fn b(&self) -> Elem {
        self.m[1]
    }

    pub fn c(&self) -> Elem {
        self.m[2]
    }

    pub fn d(&self) -> Elem {
        self.m[3]
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = self.m;
        b.is_zero() && c.is_zero() && a == d
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        let [e, g, h, k] = other.m;
        let dot = |x, y, z, w| f.add(f.mul(x, y), f.mul(z, w));
        MobiusMap::new(f, dot(a, e, b, h), dot(a, g, b, k), dot(c, e, d, h), dot(c, g, d, k))
            .expect("product of invertible matrices")
    }

    /// `[[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> MobiusMap {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        MobiusMap::new(f, d, f.neg(b), f.neg(c), a).expect("invertible")
    }

    pub fn pow(&self, mut e: u64) -> MobiusMap {
        let mut result = MobiusMap::identity(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        result
    }

    /// Fractional-linear action of the matrix itself: `t -> (at + b)/(ct + d)`.
    pub fn apply(&self, t: ProjPoint) -> ProjPoint {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        match t {
            ProjPoint::Finite(t) => {
                let den = f.add(f.mul(c, t), d);
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(f.mul(f.add(f.mul(a, t), b), f.inv(den)))
                }
            }
            ProjPoint::Infinity if c.is_zero() => ProjPoint::Infinity,
            ProjPoint::Infinity => ProjPoint::Finite(f.mul(a, f.inv(c))),
        }
    }

    /// `A^{-1} . t`, by the explicit case table:
    /// `(d t - b)/(-c t + a)` when `a != c t`, infinity otherwise;
    /// `A^{-1} . inf = -d/c` when `c != 0`, infinity otherwise.
    pub fn apply_inverse(&self, t: ProjPoint) -> ProjPoint {
        let f = &self.field;
        let [a, b, c, d] = self.m;
        match t {
            ProjPoint::Finite(t) => {
                if a == f.mul(c, t) {
                    ProjPoint::Infinity
                } else {
                    let num = f.sub(f.mul(d, t), b);
                    let den = f.sub(a, f.mul(c, t));
                    ProjPoint::Finite(f.mul(num, f.inv(den)))
                }
            }
            ProjPoint::Infinity if c.is_zero() => ProjPoint::Infinity,
            ProjPoint::Infinity => ProjPoint::Finite(f.neg(f.mul(d, f.inv(c)))),
        }
    }

    /// Order in PGL2(F_q), by iterated multiplication.
    pub fn order(&self) -> u64 {
        let mut cur = self.clone();
        let mut t = 1u64;
        while !cur.is_identity() {
            cur = cur.compose(self);
            t += 1;
        }
        t
    }

    pub fn fixed_points(&self) -> Vec<ProjPoint> {
        ProjPoint::all(&self.field).into_iter().filter(|&t| self.apply_inverse(t) == t).collect()
    }

    pub fn is_fixed(&self, t: ProjPoint) -> bool {
        self.apply_inverse(t) == t
    }

    /// `(alpha_1, ..., alpha_n)` with `alpha_1 = alpha` and
    /// `alpha_{i+1} = A^{-1} . alpha_i`, stopping before the first repeat.
    pub fn orbit(&self, alpha: ProjPoint) -> Result<Vec<ProjPoint>> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        if self.is_fixed(alpha) {
            return Err(Error::FixedPoint(alpha.format(&self.field)));
        }
        let mut out = vec![alpha];
        let mut cur = self.apply_inverse(alpha);
        while cur != alpha {
            out.push(cur);
            cur = self.apply_inverse(cur);
        }
        Ok(out)
    }

    /// Order of the stabilizer of `alpha` inside the cyclic group generated
    /// by the map: `order / |orbit|`.
    pub fn isotropy_order(&self, alpha: ProjPoint) -> u64 {
        let m = self.order();
        let n = if self.is_identity() || self.is_fixed(alpha) {
            1
        } else {
            self.orbit(alpha).expect("non-fixed point").len() as u64
        };
        m / n
    }

    /// Whether infinity is fixed, i.e. `c = 0`.
    pub fn is_triangular(&self) -> bool {
        self.c().is_zero()
    }

    /// `(a, b)` such that the map equals `[[1, -b], [0, a]]`.
    pub fn triangular_params(&self) -> Option<(Elem, Elem)> {
        if !self.is_triangular() {
            return None;
        }
        // Normalization makes the (1,1) entry 1 whenever c = 0.
        Some((self.d(), self.field.neg(self.b())))
    }

    /// Closed-form order of a triangular map: `p` when `a = 1`, otherwise the
    /// multiplicative order of `a`.
    pub fn order_triangular(&self) -> Result<u64> {
        let (a, _) = self
            .triangular_params()
            .ok_or_else(|| Error::WrongShape("expected [[1,-b],[0,a]]".into()))?;
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        if a == self.field.one() {
            Ok(self.field.p() as u64)
        } else {
            Ok(self.field.element_order(a)? as u64)
        }
    }

    /// `alpha_j - alpha_i` from the closed form
    /// `(b + (a - 1) alpha) a^{i-1} sum_{k=0}^{j-i-1} a^k` (1-based indices).
    pub fn orbit_difference(&self, alpha: Elem, i: usize, j: usize) -> Result<Elem> {
        let f = &self.field;
        let (a, b) = self
            .triangular_params()
            .ok_or_else(|| Error::WrongShape("expected [[1,-b],[0,a]]".into()))?;
        let n = self.orbit(ProjPoint::Finite(alpha))?.len();
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange(format!("need 1 <= i < j <= {n}, got ({i}, {j})")));
        }
        let lead = f.add(b, f.mul(f.sub(a, f.one()), alpha));
        let geometric = (0..(j - i) as u64).fold(f.zero(), |acc, k| f.add(acc, f.pow(a, k)));
        Ok(f.mul(f.mul(lead, f.pow(a, (i - 1) as u64)), geometric))
    }

    /// Order of the map computed from its fixed-point structure, used as a
    /// cross-check of [`MobiusMap::order`]: the smallest `t` dividing
    /// `|PGL2| = q(q^2-1)` such that the power is the identity.
    pub fn order_by_divisors(&self) -> u64 {
        let q = self.field.q() as u64;
        let group = q * (q * q - 1);
        let mut divisors: Vec<u64> = (1..=group).filter(|d| group.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        *divisors.iter().find(|&&d| self.pow(d).is_identity()).expect("Lagrange")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn example_map(f: &Field) -> MobiusMap {
        // [[1, 1], [b, 0]]
        MobiusMap::new(f, f.one(), f.one(), f.generator(), f.zero()).unwrap()
    }

    #[test]
    fn example_orbit_over_gf4() {
        let f = gf4();
        let a = example_map(&f);
        let b = f.generator();
        assert_eq!(a.apply_inverse(ProjPoint::Finite(f.one())), ProjPoint::Finite(b));
        assert_eq!(a.order(), 5);
        let orbit = a.orbit(ProjPoint::Finite(f.one())).unwrap();
        let want = vec![
            ProjPoint::Finite(f.one()),
            ProjPoint::Finite(b),
            ProjPoint::Finite(f.add(b, f.one())),
            ProjPoint::Infinity,
            ProjPoint::Finite(f.zero()),
        ];
        assert_eq!(orbit, want);
        let shown: Vec<String> = orbit.iter().map(|t| t.format(&f)).collect();
        assert_eq!(shown.join(", "), "1, b, b+1, inf, 0");
        assert_eq!(a.isotropy_order(ProjPoint::Finite(f.one())), 1);
        // inverse is [[0,1],[b,1]]
        assert_eq!(a.inverse(), MobiusMap::new(&f, f.zero(), f.one(), b, f.one()).unwrap());
    }

    #[test]
    fn diagonal_map_over_gf5() {
        let f = Field::prime(5).unwrap();
        let a = MobiusMap::diagonal(&f, f.from_int(2)).unwrap();
        assert_eq!(a.apply_inverse(ProjPoint::Finite(f.one())), ProjPoint::Finite(f.from_int(2)));
        assert_eq!(a.order(), 4);
        assert_eq!(a.fixed_points(), vec![ProjPoint::Finite(f.zero()), ProjPoint::Infinity]);
    }

    #[test]
    fn translation_fixes_only_infinity() {
        let f = Field::prime(7).unwrap();
        let t = MobiusMap::translation(&f, f.one());
        assert_eq!(t.fixed_points(), vec![ProjPoint::Infinity]);
        assert_eq!(MobiusMap::identity(&f).fixed_points().len(), 8);
    }

    #[test]
    fn orbits() {
        let f7 = Field::prime(7).unwrap();
        let a = MobiusMap::diagonal(&f7, f7.from_int(3)).unwrap();
        let orbit: Vec<_> = a.orbit(ProjPoint::Finite(f7.one())).unwrap();
        let want: Vec<_> = [1, 3, 2, 6, 4, 5].iter().map(|&v| ProjPoint::Finite(f7.from_int(v))).collect();
        assert_eq!(orbit, want);

        let f5 = Field::prime(5).unwrap();
        let shift = MobiusMap::parse(&f5, "1,-1;0,1").unwrap();
        let orbit = shift.orbit(ProjPoint::Finite(f5.zero())).unwrap();
        let want: Vec<_> = (0..5).map(|v| ProjPoint::Finite(f5.from_int(v))).collect();
        assert_eq!(orbit, want);

        assert!(matches!(shift.orbit(ProjPoint::Infinity), Err(Error::FixedPoint(_))));
        assert_eq!(MobiusMap::identity(&f5).orbit(ProjPoint::Infinity), Err(Error::IdentityMap));
    }

    #[test]
    fn triangular_orders() {
        let f5 = Field::prime(5).unwrap();
        let t = MobiusMap::triangular(&f5, f5.one(), f5.one()).unwrap();
        assert_eq!(t.order_triangular().unwrap(), 5);
        for b in f5.elements() {
            let m = MobiusMap::triangular(&f5, f5.from_int(2), b).unwrap();
            assert_eq!(m.order_triangular().unwrap(), 4);
        }
        let f4 = gf4();
        let t = MobiusMap::triangular(&f4, f4.one(), f4.one()).unwrap();
        assert_eq!(t.order_triangular().unwrap(), 2);
        assert_eq!(MobiusMap::identity(&f4).order_triangular(), Err(Error::IdentityMap));
        assert!(matches!(example_map(&f4).order_triangular(), Err(Error::WrongShape(_))));
    }

    #[test]
    fn orbit_difference_examples() {
        let f5 = Field::prime(5).unwrap();
        let a = MobiusMap::triangular(&f5, f5.from_int(2), f5.one()).unwrap();
        let orbit = a.orbit(ProjPoint::Finite(f5.one())).unwrap();
        let want: Vec<_> = [1, 3, 2, 0].iter().map(|&v| ProjPoint::Finite(f5.from_int(v))).collect();
        assert_eq!(orbit, want);
        assert_eq!(a.orbit_difference(f5.one(), 1, 3).unwrap(), f5.one());
        assert!(matches!(a.orbit_difference(f5.one(), 3, 5), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(a.orbit_difference(f5.one(), 2, 2), Err(Error::IndexOutOfRange(_))));

        let f7 = Field::prime(7).unwrap();
        let a = MobiusMap::triangular(&f7, f7.from_int(3), f7.zero()).unwrap();
        assert_eq!(a.orbit_difference(f7.one(), 1, 2).unwrap(), f7.from_int(2));
    }

    #[test]
    fn group_size_and_orders() {
        let f = Field::prime(5).unwrap();
        let all = MobiusMap::all(&f);
        assert_eq!(all.len(), 5 * 24);
        for m in all.iter().take(40) {
            assert_eq!(m.order(), m.order_by_divisors());
        }
    }

    #[test]
    fn parse_and_display() {
        let f = gf4();
        let m = MobiusMap::parse(&f, "1,1;b,0").unwrap();
        assert_eq!(m.to_string(), "1,1;b,0");
        // scaling by b is normalized away
        let scaled = MobiusMap::parse(&f, "b,b;b+1,0").unwrap();
        assert_eq!(scaled, m);
        assert_eq!(MobiusMap::parse(&f, "1,1;1,1"), Err(Error::DegenerateMatrix));
        assert!(MobiusMap::parse(&f, "1,1,1;0").is_err());
    }
}
