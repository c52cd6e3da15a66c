//! Polynomials and rational functions over F_q, places and divisors of the
//! rational function field F_q(x), Riemann-Roch spaces and evaluation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg;
use crate::pgl2::{MobiusMap, ProjPoint};

/// Polynomial over a finite field, ascending coefficients, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Degree first, then coefficients from the top.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.field.format(c);
            let cs = if cs.contains('+') && i > 0 { format!("({cs})") } else { cs };
            let coef = if c == self.field.one() && i > 0 { String::new() } else { cs };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl Poly {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(field, coeffs)
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: Elem) -> Poly {
        Poly::from_coeffs(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(self.field.one())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l)),
        }
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, t: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, t), c))
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv_lead);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    /// Whether `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divmod(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Multiplicity of `factor` in `self` (`self` nonzero, `factor` of
    /// positive degree).
    pub fn multiplicity(&self, factor: &Poly) -> u32 {
        debug_assert!(factor.degree().unwrap_or(0) > 0);
        let mut k = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (quot, r) = cur.divmod(factor).expect("nonzero factor");
            if !r.is_zero() {
                break;
            }
            cur = quot;
            k += 1;
        }
        k
    }

    /// Roots in F_q by exhaustive evaluation, in canonical order.
    pub fn roots(&self) -> Vec<Elem> {
        if self.is_zero() {
            return self.field.elements().collect();
        }
        self.field.elements().filter(|&t| self.eval(t).is_zero()).collect()
    }

    /// Irreducibility over F_q.
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(deg) => {
                let factors = self.factor();
                factors.len() == 1 && factors[0].1 == 1 && factors[0].0.degree() == Some(deg)
            }
        }
    }

    fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Poly {
        (self * other).divmod(modulus).expect("nonzero modulus").1
    }

    fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).divmod(modulus).expect("nonzero modulus").1;
        let mut base = self.divmod(modulus).expect("nonzero modulus").1;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(&base, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        result
    }

    /// Monic irreducible factors with multiplicities, sorted by degree and
    /// then canonically. The leading coefficient is dropped.
    pub fn factor(&self) -> Vec<(Poly, u32)> {
        let f = &self.field;
        let q = f.q() as u64;
        let mut rest = self.monic();
        let mut out = Vec::new();
        let x = Poly::x(f);
        // x^(q^d) mod rest, advanced one Frobenius step per degree.
        let mut frob = x.clone();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            frob = frob.pow_mod(q, &rest);
            // Product of the distinct irreducible factors of degree d.
            let block = rest.gcd(&(&frob - &x)).expect("same field");
            if block.degree().unwrap_or(0) > 0 {
                for g in block.split_equal_degree(d) {
                    let e = rest.multiplicity(&g);
                    rest = rest.exact_div(&g.pow(e));
                    out.push((g, e));
                }
                frob = frob.divmod(&rest).expect("nonzero").1;
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push((rest, 1));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Splits a squarefree product of irreducibles of degree `d`, trying
    /// splitting polynomials in a fixed order.
    fn split_equal_degree(&self, d: usize) -> Vec<Poly> {
        let deg = self.degree().expect("nonzero");
        if deg == d {
            return vec![self.monic()];
        }
        let f = &self.field;
        let q = f.q() as u64;
        for size in 1..deg {
            for u in monic_polys(f, size) {
                for c in f.nonzero_elements() {
                    let u = u.scale(c);
                    let w = if f.p() == 2 {
                        // Absolute trace to F_2.
                        let steps = f.m() as usize * d;
                        let mut acc = Poly::zero(f);
                        let mut term = u.divmod(self).expect("nonzero").1;
                        for _ in 0..steps {
                            acc = &acc + &term;
                            term = term.mul_mod(&term, self);
                        }
                        acc
                    } else {
                        // u^((q^d - 1)/2) as a product of Frobenius images of
                        // u^((q - 1)/2).
                        let mut v = u.pow_mod((q - 1) / 2, self);
                        let mut acc = v.clone();
                        for _ in 1..d {
                            v = v.pow_mod(q, self);
                            acc = acc.mul_mod(&v, self);
                        }
                        &acc - &Poly::one(f)
                    };
                    let h = self.gcd(&w).expect("same field");
                    let hd = h.degree().unwrap_or(0);
                    if hd > 0 && hd < deg {
                        let mut parts = h.split_equal_degree(d);
                        parts.extend(self.exact_div(&h).split_equal_degree(d));
                        return parts;
                    }
                }
            }
        }
        unreachable!("a splitting polynomial of degree < {deg} always exists")
    }
}

/// Monic polynomials of degree `d` in canonical order.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.q() as u64;
    let count = q.pow(d as u32);
    (0..count).map(move |mut v| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(field.elem((v % q) as u32).expect("in range"));
            v /= q;
        }
        coeffs.push(field.one());
        Poly::from_coeffs(field, coeffs)
    })
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }
}

/// Rational function in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<RatFn> {
        num.check_field(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = num.field.clone();
        if num.is_zero() {
            return Ok(RatFn { num, den: Poly::one(&field) });
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let l = field.inv(den.lead().expect("nonzero"));
        Ok(RatFn { num: num.scale(l), den: den.scale(l) })
    }

    pub fn from_poly(p: Poly) -> RatFn {
        let one = Poly::one(&p.field);
        RatFn { num: p, den: one }
    }

    pub fn x(field: &Field) -> RatFn {
        RatFn::from_poly(Poly::x(field))
    }

    pub fn constant(field: &Field, c: Elem) -> RatFn {
        RatFn::from_poly(Poly::constant(field, c))
    }

    pub fn field(&self) -> &Field {
        &self.num.field
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `max(deg num, deg den)`; constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn inv(&self) -> Result<RatFn> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> RatFn {
        // Powers of coprime polynomials stay coprime.
        RatFn { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `f((ax + b)/(cx + d))`, i.e. the image of `f` under the automorphism
    /// attached to `map`.
    pub fn substitute(&self, map: &MobiusMap) -> RatFn {
        let f = self.field();
        let [a, b, c, d] = map.entries();
        let top = Poly::from_coeffs(f, vec![b, a]);
        let bottom = Poly::from_coeffs(f, vec![d, c]);
        let l = self.degree();
        let top_pows: Vec<Poly> = std::iter::successors(Some(Poly::one(f)), |p| Some(p * &top)).take(l + 1).collect();
        let bot_pows: Vec<Poly> =
            std::iter::successors(Some(Poly::one(f)), |p| Some(p * &bottom)).take(l + 1).collect();
        let homogenize = |p: &Poly| {
            let mut acc = Poly::zero(f);
            for (i, &ci) in p.coeffs.iter().enumerate() {
                if !ci.is_zero() {
                    acc = &acc + &(&top_pows[i] * &bot_pows[l - i]).scale(ci);
                }
            }
            acc
        };
        RatFn::new(homogenize(&self.num), homogenize(&self.den)).expect("nondegenerate substitution")
    }

    /// Valuation at a place: order of vanishing (negative for poles).
    pub fn valuation(&self, place: &Place) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        let field = self.field();
        match place.defining_poly(field) {
            None => self.den.degree().unwrap_or(0) as i64 - self.num.degree().unwrap_or(0) as i64,
            Some(q) => self.num.multiplicity(&q) as i64 - self.den.multiplicity(&q) as i64,
        }
    }

    /// Residue class at a rational place.
    pub fn eval_at(&self, t: ProjPoint) -> Result<Elem> {
        let f = self.field();
        match t {
            ProjPoint::Finite(g) => {
                let den = self.den.eval(g);
                if den.is_zero() {
                    return Err(Error::Pole(f.format(g)));
                }
                Ok(f.mul(self.num.eval(g), f.inv(den)))
            }
            ProjPoint::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("nonzero denominator");
                match dn {
                    None => Ok(f.zero()),
                    Some(dn) if dn < dd => Ok(f.zero()),
                    Some(dn) if dn == dd => Ok(f.mul(self.num.coeffs[dn], f.inv(self.den.coeffs[dd]))),
                    Some(_) => Err(Error::Pole("inf".into())),
                }
            }
        }
    }

    /// Value as a point of P^1, with poles sent to infinity.
    pub fn value_at(&self, t: ProjPoint) -> ProjPoint {
        match self.eval_at(t) {
            Ok(v) => ProjPoint::Finite(v),
            Err(_) => ProjPoint::Infinity,
        }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

/// A place of F_q(x).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    /// `P_t` for a point `t` of P^1(F_q): the zero of `x - t`, or the pole of
    /// `x` when `t` is infinity.
    Rational(ProjPoint),
    /// Zero of a monic irreducible polynomial of degree at least 2.
    Irreducible(Poly),
}

impl Place {
    pub fn finite(a: Elem) -> Place {
        Place::Rational(ProjPoint::Finite(a))
    }

    pub fn infinity() -> Place {
        Place::Rational(ProjPoint::Infinity)
    }

    /// Place of a polynomial of degree >= 2, normalized to be monic.
    pub fn irreducible(poly: &Poly) -> Result<Place> {
        let monic = poly.monic();
        if monic.degree().unwrap_or(0) < 2 {
            return Err(Error::InvalidPlace(format!("{poly} has degree < 2; use a rational place")));
        }
        if !monic.is_irreducible() {
            return Err(Error::InvalidPlace(format!("{poly} is reducible")));
        }
        Ok(Place::Irreducible(monic))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Rational(_) => 1,
            Place::Irreducible(p) => p.degree().expect("nonzero"),
        }
    }

    pub fn point(&self) -> Option<ProjPoint> {
        match self {
            Place::Rational(t) => Some(*t),
            Place::Irreducible(_) => None,
        }
    }

    /// Monic generator of the place's prime ideal; `None` for `P_inf`.
    pub fn defining_poly(&self, field: &Field) -> Option<Poly> {
        match self {
            Place::Rational(ProjPoint::Finite(a)) => Some(Poly::linear(field, *a)),
            Place::Rational(ProjPoint::Infinity) => None,
            Place::Irreducible(p) => Some(p.clone()),
        }
    }

    /// Image under the automorphism attached to `map`.
    pub fn image(&self, map: &MobiusMap) -> Place {
        place_image(map, self)
    }

    pub fn format(&self, field: &Field) -> String {
        match self {
            Place::Rational(ProjPoint::Infinity) => "inf".into(),
            Place::Rational(ProjPoint::Finite(a)) => format!("a={}", field.format(*a)),
            Place::Irreducible(p) => {
                let c: Vec<String> = p.coeffs().iter().map(|&c| field.format(c)).collect();
                format!("poly:{}", c.join(","))
            }
        }
    }

    /// Parses `a=<elem>`, `inf`, or `poly:c0,c1,...`.
    pub fn parse(field: &Field, s: &str) -> Result<Place> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Place::infinity());
        }
        if let Some(e) = s.strip_prefix("a=") {
            return Ok(Place::finite(field.parse_elem(e)?));
        }
        if let Some(c) = s.strip_prefix("poly:") {
            let coeffs = c.split(',').map(|x| field.parse_elem(x)).collect::<Result<Vec<_>>>()?;
            return Place::irreducible(&Poly::from_coeffs(field, coeffs));
        }
        Err(Error::Parse(format!("place {s:?}: expected a=<elem>, inf or poly:c0,c1,...")))
    }
}

/// `f((ax + b)/(cx + d))`.
pub fn mobius_substitute(f: &RatFn, map: &MobiusMap) -> RatFn {
    f.substitute(map)
}

/// `sigma(P)` for the automorphism `sigma(x) = (ax+b)/(cx+d)`. Rational
/// places move by `A^{-1}`; an irreducible place maps to the place of the
/// numerator of its defining polynomial after substitution.
pub fn place_image(map: &MobiusMap, place: &Place) -> Place {
    match place {
        Place::Rational(t) => Place::Rational(map.apply_inverse(*t)),
        Place::Irreducible(p) => {
            let image = RatFn::from_poly(p.clone()).substitute(map);
            Place::Irreducible(image.num().monic())
        }
    }
}

/// Finite formal sum of places with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn new() -> Divisor {
        Divisor::default()
    }

    pub fn single(place: Place, coeff: i64) -> Divisor {
        let mut d = Divisor::new();
        d.add_term(place, coeff);
        d
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Place, i64)>) -> Divisor {
        let mut d = Divisor::new();
        for (p, c) in terms {
            d.add_term(p, c);
        }
        d
    }

    pub fn add_term(&mut self, place: Place, coeff: i64) {
        let entry = self.terms.entry(place.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&place);
        }
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.terms.get(place).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, &c)| c * p.degree() as i64).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sigma(G)`, place by place.
    pub fn image(&self, map: &MobiusMap) -> Divisor {
        Divisor::from_terms(self.iter().map(|(p, c)| (place_image(map, p), c)))
    }

    pub fn format(&self, field: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.iter().map(|(p, c)| format!("{c}*{}", p.format(field))).collect();
        parts.join(" + ")
    }

    /// Parses `2*a=0 + 1*inf`; terms are separated by `+` surrounded by
    /// whitespace, and a missing coefficient means 1. `0` is the zero divisor.
    pub fn parse(field: &Field, s: &str) -> Result<Divisor> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Divisor::new());
        }
        let mut d = Divisor::new();
        for term in s.split(" + ") {
            let term = term.trim();
            let (coeff, place) = match term.split_once('*') {
                Some((c, p)) if !c.contains('=') && !c.contains(':') => {
                    let c = c.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{term:?}: {e}")))?;
                    (c, p)
                }
                _ => (1, term),
            };
            d.add_term(Place::parse(field, place)?, coeff);
        }
        Ok(d)
    }
}

/// Whether `(z) >= -G`, i.e. `z` lies in L(G).
pub fn in_riemann_roch_space(z: &RatFn, g: &Divisor) -> bool {
    if z.is_zero() {
        return true;
    }
    let field = z.field();
    for (place, c) in g.iter() {
        if z.valuation(place) < -c {
            return false;
        }
    }
    // Away from Sup(G) the function must be regular.
    let mut rest = z.den().clone();
    for place in g.support() {
        if let Some(q) = place.defining_poly(field) {
            let e = rest.multiplicity(&q);
            if e > 0 {
                rest = rest.exact_div(&q.pow(e));
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        return false;
    }
    g.coeff(&Place::infinity()) != 0 || z.valuation(&Place::infinity()) >= 0
}

/// Basis of L(G) for a divisor of F_q(x): `h x^t / prod q_i^{r_i}` for
/// `t = 0..=deg G`, where the denominator collects the finite places with
/// positive coefficient and `h` the ones with negative coefficient.
pub fn rr_basis(field: &Field, g: &Divisor) -> Vec<RatFn> {
    let deg = g.degree();
    if deg < 0 {
        return Vec::new();
    }
    let mut poles = Poly::one(field);
    let mut zeros = Poly::one(field);
    for (place, c) in g.iter() {
        let Some(q) = place.defining_poly(field) else {
            continue;
        };
        if c > 0 {
            poles = &poles * &q.pow(c as u32);
        } else {
            zeros = &zeros * &q.pow((-c) as u32);
        }
    }
    (0..=deg as usize)
        .map(|t| {
            let num = &zeros * &Poly::monomial(field, field.one(), t);
            RatFn::new(num, poles.clone()).expect("nonzero denominator")
        })
        .collect()
}

/// `{1, 1/(x - beta), ..., 1/(x - beta)^r}`, a basis of L(r P_beta).
pub fn rr_basis_paper(field: &Field, beta: Elem, r: usize) -> Vec<RatFn> {
    let lin = Poly::linear(field, beta);
    (0..=r)
        .map(|j| RatFn::new(Poly::one(field), lin.pow(j as u32)).expect("nonzero"))
        .collect()
}

/// Residue class `f(P)` at a rational place.
pub fn evaluate_at_place(f: &RatFn, place: &Place) -> Result<Elem> {
    match place {
        Place::Rational(t) => f.eval_at(*t),
        Place::Irreducible(_) => Err(Error::NotRational(place.format(f.field()))),
    }
}

/// Dimension of the F_q-span of `funcs`, computed from numerators over a
/// common denominator.
pub fn span_dimension(field: &Field, funcs: &[RatFn]) -> usize {
    if funcs.is_empty() {
        return 0;
    }
    let mut common = Poly::one(field);
    for f in funcs {
        let g = common.gcd(f.den()).expect("same field");
        common = &common * &f.den().exact_div(&g);
    }
    let nums: Vec<Poly> = funcs.iter().map(|f| f.num() * &common.exact_div(f.den())).collect();
    let width = nums.iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
    let rows: Vec<Vec<Elem>> = nums.iter().map(|p| (0..width).map(|i| p.coeff(i)).collect()).collect();
    linalg::rank(field, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn poly(f: &Field, c: &[i64]) -> Poly {
        Poly::from_coeffs(f, c.iter().map(|&x| f.from_int(x)).collect())
    }

    /// `x^2 + b^2 x + b^2` over GF(4).
    fn example_q(f: &Field) -> Poly {
        let b2 = f.mul(f.generator(), f.generator());
        Poly::from_coeffs(f, vec![b2, b2, f.one()])
    }

    #[test]
    fn gcd_and_divmod() {
        let f = Field::prime(5).unwrap();
        let g = poly(&f, &[-1, 0, 1]).gcd(&poly(&f, &[-1, 1])).unwrap();
        assert_eq!(g, poly(&f, &[-1, 1]));
        let (q, r) = poly(&f, &[1, 2, 3, 4]).divmod(&poly(&f, &[1, 1])).unwrap();
        assert_eq!(&(&q * &poly(&f, &[1, 1])) + &r, poly(&f, &[1, 2, 3, 4]));
        assert_eq!(poly(&f, &[1]).divmod(&Poly::zero(&f)), Err(Error::DivisionByZero));
        let other = Field::prime(7).unwrap();
        assert_eq!(poly(&f, &[1, 1]).gcd(&poly(&other, &[1, 1])), Err(Error::FieldMismatch));
        assert_eq!(poly(&f, &[1, 1]).divmod(&poly(&other, &[1, 1])).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn irreducibility() {
        let f = gf4();
        assert!(example_q(&f).is_irreducible());
        assert!(!poly(&f, &[1, 0, 1]).is_irreducible());
        let f3 = Field::prime(3).unwrap();
        // (x^2+1)^2 has no roots but is reducible
        assert!(!poly(&f3, &[1, 0, 1]).pow(2).is_irreducible());
        assert!(poly(&f3, &[1, 0, 1]).is_irreducible());
    }

    /// Irreducibility by trial division over all monic divisors.
    fn trial_irreducible(p: &Poly) -> bool {
        let deg = p.degree().unwrap();
        deg >= 1 && !(1..=deg / 2).any(|d| monic_polys(p.field(), d).any(|g| g.divides(p)))
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for (q, max_deg) in [(2, 7), (3, 5), (4, 4), (5, 4), (9, 3)] {
            let f = Field::from_order(q).unwrap();
            for d in 1..=max_deg {
                for g in monic_polys(&f, d) {
                    assert_eq!(g.is_irreducible(), trial_irreducible(&g), "{g} over GF({q})");
                }
            }
        }
    }

    #[test]
    fn factorization_of_high_degree_products() {
        for q in [8, 9, 13, 16] {
            let f = Field::from_order(q).unwrap();
            // Irreducibles of degree 1..=4 chosen from the canonical order.
            let mut want: Vec<(Poly, u32)> = Vec::new();
            for d in 1..=4usize {
                let g = monic_polys(&f, d).find(trial_irreducible).unwrap();
                want.push((g, (d % 2 + 1) as u32));
            }
            let prod = want.iter().fold(Poly::one(&f), |acc, (g, e)| &acc * &g.pow(*e));
            want.sort_by(|a, b| a.0.cmp(&b.0));
            assert_eq!(prod.factor(), want);
        }
    }

    #[test]
    fn roots_of_x6_minus_1() {
        let f = Field::prime(7).unwrap();
        let roots = poly(&f, &[-1, 0, 0, 0, 0, 0, 1]).roots();
        assert_eq!(roots, (1..7).map(|v| f.from_int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn factorization_multiplies_back() {
        let f = Field::prime(3).unwrap();
        let p = &(&poly(&f, &[1, 0, 1]).pow(2) * &poly(&f, &[2, 1]).pow(3)) * &poly(&f, &[2, 2, 0, 1]);
        let factors = p.factor();
        let mut prod = Poly::one(&f);
        for (g, e) in &factors {
            assert!(g.is_irreducible());
            prod = &prod * &g.pow(*e);
        }
        assert_eq!(prod, p.monic());
    }

    #[test]
    fn substitution_example_gf4() {
        let f = gf4();
        let b = f.generator();
        let b2 = f.mul(b, b);
        let map = MobiusMap::new(&f, f.one(), f.one(), b, f.zero()).unwrap();
        let q = example_q(&f);
        let image = RatFn::from_poly(q.clone()).substitute(&map);
        // (b^2 / x^2) * q
        let want = RatFn::new(q.scale(b2), Poly::monomial(&f, f.one(), 2)).unwrap();
        assert_eq!(image, want);
        assert_eq!(place_image(&map, &Place::irreducible(&q).unwrap()), Place::irreducible(&q).unwrap());
    }

    #[test]
    fn substitution_identity_and_shift() {
        let f = Field::prime(5).unwrap();
        let x = RatFn::x(&f);
        assert_eq!(x.substitute(&MobiusMap::identity(&f)), x);
        let shift = MobiusMap::parse(&f, "1,-1;0,1").unwrap();
        let alpha = f.from_int(3);
        let lin = RatFn::from_poly(Poly::linear(&f, alpha));
        assert_eq!(lin.substitute(&shift), RatFn::from_poly(Poly::linear(&f, f.from_int(4))));
        assert_eq!(place_image(&shift, &Place::finite(f.zero())), Place::finite(f.one()));
        assert_eq!(place_image(&MobiusMap::identity(&f), &Place::infinity()), Place::infinity());
    }

    #[test]
    fn basis_for_rp_infinity() {
        let f = Field::prime(7).unwrap();
        let basis = rr_basis(&f, &Divisor::single(Place::infinity(), 3));
        let want: Vec<RatFn> = (0..4).map(|t| RatFn::from_poly(Poly::monomial(&f, f.one(), t))).collect();
        assert_eq!(basis, want);
    }

    #[test]
    fn basis_with_two_places() {
        let f = Field::prime(7).unwrap();
        let g = Divisor::from_terms([(Place::finite(f.zero()), 2), (Place::infinity(), 1)]);
        let basis = rr_basis(&f, &g);
        let x2 = Poly::monomial(&f, f.one(), 2);
        let want: Vec<RatFn> = (0..4)
            .map(|t| RatFn::new(Poly::monomial(&f, f.one(), t), x2.clone()).unwrap())
            .collect();
        assert_eq!(basis, want);
        assert!(basis.iter().all(|z| in_riemann_roch_space(z, &g)));
        assert!(!in_riemann_roch_space(&RatFn::new(Poly::one(&f), x2.pow(2)).unwrap(), &g));
        assert!(!in_riemann_roch_space(&RatFn::from_poly(x2), &g));
        assert_eq!(span_dimension(&f, &basis), 4);
    }

    #[test]
    fn basis_for_degree_two_place() {
        let f = gf4();
        let q = example_q(&f);
        let g = Divisor::single(Place::irreducible(&q).unwrap(), 1);
        let basis = rr_basis(&f, &g);
        assert_eq!(basis.len(), 3);
        assert!(basis.iter().all(|z| in_riemann_roch_space(z, &g)));
        let listed = vec![
            RatFn::new(Poly::one(&f), q.clone()).unwrap(),
            RatFn::new(Poly::x(&f), q.clone()).unwrap(),
            RatFn::constant(&f, f.one()),
        ];
        assert_eq!(span_dimension(&f, &listed), 3);
        let mut both = basis.clone();
        both.extend(listed);
        assert_eq!(span_dimension(&f, &both), 3);
    }

    #[test]
    fn negative_coefficients() {
        let f = Field::prime(5).unwrap();
        let g = Divisor::from_terms([(Place::finite(f.zero()), -1), (Place::infinity(), 3)]);
        let basis = rr_basis(&f, &g);
        assert_eq!(basis.len(), 3);
        assert!(basis.iter().all(|z| in_riemann_roch_space(z, &g)));
        assert!(!in_riemann_roch_space(&RatFn::constant(&f, f.one()), &g));
        assert!(rr_basis(&f, &Divisor::single(Place::infinity(), -1)).is_empty());
    }

    #[test]
    fn pole_power_basis_spans_same_space() {
        let f = Field::prime(7).unwrap();
        let beta = f.from_int(3);
        let pole_powers = rr_basis_paper(&f, beta, 2);
        let default = rr_basis(&f, &Divisor::single(Place::finite(beta), 2));
        assert_eq!(span_dimension(&f, &pole_powers), 3);
        let mut both = pole_powers.clone();
        both.extend(default);
        assert_eq!(span_dimension(&f, &both), 3);

        let zero_basis = rr_basis_paper(&f, f.zero(), 2);
        let x = Poly::x(&f);
        assert_eq!(zero_basis[2], RatFn::new(Poly::one(&f), x.pow(2)).unwrap());
        let f4 = gf4();
        assert_eq!(rr_basis_paper(&f4, f4.generator(), 1).len(), 2);
    }

    #[test]
    fn evaluation_rules() {
        let f = Field::prime(5).unwrap();
        let x = RatFn::x(&f);
        assert_eq!(evaluate_at_place(&x, &Place::finite(f.from_int(3))).unwrap(), f.from_int(3));
        let r = RatFn::new(poly(&f, &[1, 1]), poly(&f, &[2, 1])).unwrap();
        assert_eq!(evaluate_at_place(&r, &Place::infinity()).unwrap(), f.one());
        let inv_sq = RatFn::new(Poly::one(&f), poly(&f, &[-2, 1]).pow(2)).unwrap();
        assert_eq!(evaluate_at_place(&inv_sq, &Place::infinity()).unwrap(), f.zero());
        assert!(matches!(evaluate_at_place(&inv_sq, &Place::finite(f.from_int(2))), Err(Error::Pole(_))));
        assert!(matches!(evaluate_at_place(&x, &Place::infinity()), Err(Error::Pole(_))));
        let q = Place::irreducible(&poly(&f, &[2, 0, 1])).unwrap();
        assert!(matches!(evaluate_at_place(&x, &q), Err(Error::NotRational(_))));
    }

    #[test]
    fn place_and_divisor_strings() {
        let f = gf4();
        let d = Divisor::parse(&f, "2*a=0 + 1*inf").unwrap();
        assert_eq!(d.degree(), 3);
        assert_eq!(d.coeff(&Place::finite(f.zero())), 2);
        assert_eq!(Divisor::parse(&f, &d.format(&f)).unwrap(), d);
        let g = Divisor::parse(&f, "1*a=b+1 + poly:b+1,b+1,1").unwrap();
        assert_eq!(g.degree(), 3);
        assert!(Place::parse(&f, "poly:1,0,1").is_err());
        assert!(Place::parse(&f, "bogus").is_err());
        assert_eq!(Divisor::parse(&f, "-1*inf").unwrap().degree(), -1);
    }
}
