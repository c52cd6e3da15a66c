//! Finite fields GF(p^m) in polynomial-basis representation.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! of its coefficient vector over GF(p). Integer order on that encoding is
//! the lexicographic order on `(c_{m-1}, ..., c_0)`, which is the canonical
//! order used for every deterministic choice (modulus, primitive element,
//! element of a given order).
//!
//! Multiplication goes through discrete-log tables built at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

const ADD_TABLE_LIMIT: u32 = 256;

/// An element of a [`Field`]. Only meaningful together with its field.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    /// Integer encoding of the coefficient vector (base-`p` digits).
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Handle to a finite field. Cloning is cheap; all clones share tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    // exp has length 2(q-1) so that log a + log b never needs reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}, modulus {:?})", self.0.p, self.0.m, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Dense polynomials over GF(p), ascending coefficients. Only used while
// building a field.
mod zp {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let inv_lead = inv(f[df], p);
        while r.len() > df {
            let shift = r.len() - 1 - df;
            let c = r[r.len() - 1] * inv_lead % p;
            for (i, &fi) in f.iter().enumerate() {
                let t = c * fi % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        r as u32
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for v in 0..count {
                let mut g = digits(v, p, d);
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push((v % p as u64) as u32);
            v /= p as u64;
        }
        out
    }
}

impl Field {
    /// Builds GF(p^m). With `modulus == None` the canonical modulus is used:
    /// the monic irreducible of degree `m` with lexicographically smallest
    /// `(a_{m-1}, ..., a_0)`.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE as u64);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge { p, m }),
        };
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        c.len()
                    )));
                }
                if c.iter().any(|&x| x >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
                }
                if c[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !zp::is_irreducible(c, p) {
                    return Err(Error::InvalidModulus(format!("{c:?} is reducible over GF({p})")));
                }
                c.to_vec()
            }
            None => Self::canonical_modulus(p, m),
        };
        Ok(Self::build(p, m, q, modulus))
    }

    /// Prime field GF(p) with modulus `x`.
    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1, None)
    }

    /// GF(q) with the canonical modulus; `q` must be a prime power.
    pub fn from_order(q: u32) -> Result<Field> {
        let (p, m) = split_prime_power(q)?;
        Self::new(p, m, None)
    }

    /// Parses a field spec `p^m` (or a bare prime power `q`) with an optional
    /// ascending, comma separated modulus `c0,c1,...,cm`.
    pub fn parse(spec: &str, modulus: Option<&str>) -> Result<Field> {
        let spec = spec.trim();
        let (p, m) = if let Some((p, m)) = spec.split_once('^') {
            let p = p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            let m = m.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            (p, m)
        } else {
            let q = spec.parse::<u32>().map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            split_prime_power(q)?
        };
        let coeffs = match modulus {
            Some(s) => Some(
                s.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(format!("modulus coefficient {c:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Self::new(p, m, coeffs.as_deref())
    }

    fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for v in 0..count {
            let mut f = zp::digits(v, p, m as usize);
            f.push(1);
            if zp::is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        let to_poly = |e: u32| {
            let mut d = zp::digits(e as u64, p, m as usize);
            zp::trim(&mut d);
            d
        };
        let from_poly = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let slow_mul = |a: u32, b: u32| from_poly(&zp::rem(&zp::mul(&to_poly(a), &to_poly(b), p), &modulus, p));
        let slow_pow = |a: u32, mut e: u64| {
            let mut r = 1u32;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    r = slow_mul(r, base);
                }
                base = slow_mul(base, base);
                e >>= 1;
            }
            r
        };

        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let primitive = (1..q)
            .find(|&g| factors.iter().all(|&l| slow_pow(g, order / l) != 1))
            .expect("multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = cur;
            exp[i + q as usize - 1] = cur;
            log[cur as usize] = i as u32;
            cur = slow_mul(cur, primitive);
        }

        let neg = (0..q)
            .map(|e| {
                let d = zp::digits(e as u64, p, m as usize);
                d.iter().rev().fold(0u32, |acc, &c| acc * p + (p - c) % p)
            })
            .collect();

        let mut inner = Inner { p, m, q, modulus, primitive: Elem(primitive), exp, log, neg, add: None };
        if q <= ADD_TABLE_LIMIT && p != 2 {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = digit_add(p, m, a, b) as u16;
                }
            }
            inner.add = Some(table);
        }
        Field(Arc::new(inner))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Ascending coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// Class of the polynomial variable (printed `b`). For prime fields this
    /// is the root of the degree-one modulus.
    pub fn generator(&self) -> Elem {
        if self.0.m == 1 {
            self.neg(Elem(self.0.modulus[0]))
        } else {
            Elem(self.0.p)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element with the given index (see [`Elem::index`]).
    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.0.q {
            Ok(Elem(index))
        } else {
            Err(Error::Parse(format!("index {index} outside GF({})", self.0.q)))
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.q).map(Elem)
    }

    /// Coefficient vector `(c_0, ..., c_{m-1})` over GF(p).
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        zp::digits(a.0 as u64, self.0.p, self.0.m as usize)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Elem> {
        if c.len() > self.0.m as usize || c.iter().any(|&x| x >= self.0.p) {
            return Err(Error::Parse(format!("{c:?} is not a coefficient vector of {self}")));
        }
        Ok(Elem(c.iter().rev().fold(0u32, |acc, &x| acc * self.0.p + x)))
    }

    pub fn is_in_prime_field(&self, a: Elem) -> bool {
        a.0 < self.0.p
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.p == 2 {
            Elem(a.0 ^ b.0)
        } else if let Some(t) = &inner.add {
            Elem(t[(a.0 * inner.q + b.0) as usize] as u32)
        } else {
            Elem(digit_add(inner.p, inner.m, a.0, b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let inner = &*self.0;
        Elem(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse. Panics on zero; see [`Field::checked_inv`].
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.checked_inv(a).expect("inverse of zero")
    }

    pub fn checked_inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let inner = &*self.0;
        let l = inner.log[a.0 as usize];
        Some(Elem(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.checked_inv(b).map(|bi| self.mul(a, bi)).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem(1);
        }
        if a.0 == 0 {
            return Elem(0);
        }
        let inner = &*self.0;
        let ord = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64 * (e % ord) % ord;
        Elem(inner.exp[l as usize])
    }

    /// Discrete logarithm to the base [`Field::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// Smallest `t >= 1` with `a^t = 1`.
    pub fn element_order(&self, a: Elem) -> Result<u32> {
        let l = self.log(a).ok_or(Error::ZeroElement)?;
        let ord = (self.0.q - 1) as u64;
        Ok((ord / gcd(l as u64, ord)) as u32)
    }

    /// Canonically smallest element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Elem {
        self.0.primitive
    }

    /// Canonically smallest element of multiplicative order exactly `n`.
    pub fn find_element_of_order(&self, n: u64) -> Result<Elem> {
        let ord = (self.0.q - 1) as u64;
        if n == 0 || !ord.is_multiple_of(n) {
            return Err(Error::NoElementOfOrder { n, q: self.0.q });
        }
        Ok(self
            .nonzero_elements()
            .find(|&a| self.element_order(a).map(u64::from) == Ok(n))
            .expect("cyclic group has elements of every divisor order"))
    }

    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.0.p as u64)
    }

    /// `(a, a^p, a^{p^2}, ...)` up to the first repetition.
    pub fn frobenius_orbit(&self, a: Elem) -> Vec<Elem> {
        let mut out = vec![a];
        let mut cur = self.frobenius(a);
        while cur != a {
            out.push(cur);
            cur = self.frobenius(cur);
        }
        out
    }

    /// Polynomial in the generator symbol `b`, e.g. `b^2+2b+1`; prime-field
    /// elements print as integers.
    pub fn format(&self, a: Elem) -> String {
        if a.0 == 0 {
            return "0".into();
        }
        if self.0.m == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let coef = if ci == 1 && i > 0 { String::new() } else { ci.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}b"),
                _ => format!("{coef}b^{i}"),
            });
        }
        terms.join("+")
    }

    /// Inverse of [`Field::format`]. Also accepts `-` between terms, `*`
    /// between coefficient and `b`, and integers outside `[0, p)`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut acc = self.zero();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' if !first => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(Error::Parse(format!("malformed element {s:?}"))),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = self.parse_term(&body[..end], &s)?;
            acc = if negative { self.sub(acc, term) } else { self.add(acc, term) };
            rest = &body[end..];
        }
        Ok(acc)
    }

    fn parse_term(&self, term: &str, whole: &str) -> Result<Elem> {
        let bad = || Error::Parse(format!("malformed element {whole:?}"));
        if term.is_empty() {
            return Err(bad());
        }
        let (coef, power) = match term.find('b') {
            None => (term, None),
            Some(i) => {
                if self.0.m == 1 {
                    return Err(Error::Parse(format!("{whole:?}: prime fields have no symbol b")));
                }
                let after = &term[i + 1..];
                let k = if after.is_empty() {
                    1
                } else {
                    after.strip_prefix('^').ok_or_else(bad)?.parse::<u64>().map_err(|_| bad())?
                };
                (term[..i].trim_end_matches('*'), Some(k))
            }
        };
        let c = if coef.is_empty() {
            if power.is_none() {
                return Err(bad());
            }
            self.one()
        } else {
            let v = coef.parse::<u64>().map_err(|_| bad())?;
            self.from_int((v % self.0.p as u64) as i64)
        };
        Ok(match power {
            None => c,
            Some(k) => self.mul(c, self.pow(self.generator(), k)),
        })
    }
}

fn digit_add(p: u32, m: u32, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0u32;
    let mut place = 1u32;
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

/// Splits a prime power `q = p^m`.
pub fn split_prime_power(q: u32) -> Result<(u32, u32)> {
    let factors = prime_factors(q as u64);
    if factors.len() != 1 {
        return Err(Error::Parse(format!("{q} is not a prime power")));
    }
    let p = factors[0] as u32;
    let mut m = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        m += 1;
    }
    Ok((p, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(f: &Field, a: Elem) -> u32 {
        let mut x = a;
        let mut t = 1;
        while x != f.one() {
            x = f.mul(x, a);
            t += 1;
        }
        t
    }

    #[test]
    fn gf4_from_given_modulus() {
        let f = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f.q(), 4);
        let b = f.generator();
        // b^2 + b + 1 = 0
        let lhs = f.add(f.add(f.mul(b, b), b), f.one());
        assert!(lhs.is_zero());
        assert_eq!(f.format(b), "b");
        assert_eq!(f.format(f.mul(b, b)), "b+1");
    }

    #[test]
    fn prime_field_uses_modulus_x() {
        let f = Field::new(5, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 5);
    }

    #[test]
    fn canonical_modulus_gf9() {
        // degree-2 monic candidates in order: x^2, x^2+1, ...; x^2 is
        // reducible and x^2+1 has no root mod 3.
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(Field::from_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::from_order(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn construct_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(2, 3, Some(&[1, 1, 1])), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(2, 17, None), Err(Error::FieldTooLarge { .. })));
        assert!(Field::new(2, 16, None).is_ok());
    }

    #[test]
    fn element_orders() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.element_order(f7.one()).unwrap(), 1);
        assert_eq!(f7.element_order(f7.from_int(3)).unwrap(), 6);
        assert_eq!(f7.element_order(f7.zero()), Err(Error::ZeroElement));
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.element_order(f4.generator()).unwrap(), 3);
        for f in [f7, f4, Field::from_order(9).unwrap(), Field::from_order(16).unwrap()] {
            for a in f.nonzero_elements() {
                assert_eq!(f.element_order(a).unwrap(), brute_order(&f, a));
            }
        }
    }

    #[test]
    fn primitive_elements() {
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.primitive_element(), f4.generator());
        assert_eq!(Field::prime(5).unwrap().primitive_element(), Elem(2));
        assert_eq!(Field::prime(2).unwrap().primitive_element(), Elem(1));
    }

    #[test]
    fn frobenius_orbits() {
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let b = f4.generator();
        assert_eq!(f4.frobenius_orbit(b), vec![b, f4.add(b, f4.one())]);
        let f9 = Field::from_order(9).unwrap();
        for a in 0..3 {
            assert_eq!(f9.frobenius_orbit(f9.from_int(a)).len(), 1);
        }
        let f8 = Field::from_order(8).unwrap();
        assert_eq!(f8.frobenius_orbit(f8.primitive_element()).len(), 3);
    }

    #[test]
    fn elements_of_given_order() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.find_element_of_order(6).unwrap(), f7.from_int(3));
        assert_eq!(f7.find_element_of_order(1).unwrap(), f7.one());
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(f5.find_element_of_order(3), Err(Error::NoElementOfOrder { .. })));
    }

    #[test]
    fn format_and_parse() {
        let f9 = Field::from_order(9).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.parse_elem(&f9.format(a)).unwrap(), a);
        }
        let b = f9.generator();
        assert_eq!(f9.parse_elem("2*b + 1").unwrap(), f9.add(f9.mul(f9.from_int(2), b), f9.one()));
        assert_eq!(f9.parse_elem("-1").unwrap(), f9.from_int(2));
        assert_eq!(f9.parse_elem("b^2").unwrap(), f9.mul(b, b));
        assert!(f9.parse_elem("b+").is_err());
        assert!(f9.parse_elem("").is_err());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse_elem("-2").unwrap(), f5.from_int(3));
        assert!(f5.parse_elem("b").is_err());
    }

    #[test]
    fn parse_field_spec() {
        let f = Field::parse("2^2", Some("1,1,1")).unwrap();
        assert_eq!(f.q(), 4);
        assert_eq!(Field::parse("7", None).unwrap().q(), 7);
        assert!(Field::parse("6", None).is_err());
    }

    #[test]
    fn deterministic_construction() {
        let a = Field::from_order(27).unwrap();
        let b = Field::from_order(27).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.primitive_element(), b.primitive_element());
        for x in a.elements() {
            assert_eq!(a.inv_or_zero(x), b.inv_or_zero(x));
        }
    }

    impl Field {
        fn inv_or_zero(&self, a: Elem) -> Elem {
            self.checked_inv(a).unwrap_or(Elem(0))
        }
    }

    #[test]
    fn fermat_holds() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49] {
            let f = Field::from_order(q).unwrap();
            for a in f.nonzero_elements() {
                assert_eq!(f.pow(a, (q - 1) as u64), f.one());
                assert_eq!(f.mul(a, f.inv(a)), f.one());
                assert_eq!(f.add(a, f.neg(a)), f.zero());
            }
        }
    }
}
