//! Cyclic AG-codes from automorphism orbits: construction, verification,
//! transports between equal codes, the closed-form standard form and
//! canonical representatives.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::lincode::{Budget, LinearCode, MonomialMap};
use crate::linalg::{self, Matrix};
use crate::pgl2::{MobiusMap, ProjPoint};
use crate::rfield::{evaluate_at_place, place_image, rr_basis, rr_basis_paper, Divisor, Place, Poly, RatFn};

/// Parameters of the code C(A, alpha, beta, r): D is the orbit of `alpha`
/// and G = r P_beta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCodeSpec {
    pub map: MobiusMap,
    pub alpha: ProjPoint,
    pub beta: ProjPoint,
    pub r: i64,
    /// Evaluate the basis `1/(x - beta)^j` instead of the default one
    /// (finite `beta` only).
    pub paper_basis: bool,
}

impl SigmaCodeSpec {
    pub fn new(map: MobiusMap, alpha: ProjPoint, beta: ProjPoint, r: i64) -> Result<SigmaCodeSpec> {
        let spec = SigmaCodeSpec { map, alpha, beta, r, paper_basis: false };
        spec.orbit()?;
        Ok(spec)
    }

    pub fn with_paper_basis(mut self, on: bool) -> SigmaCodeSpec {
        self.paper_basis = on;
        self
    }

    pub fn field(&self) -> &Field {
        self.map.field()
    }

    /// Validated orbit `(alpha_1, ..., alpha_n)`.
    pub fn orbit(&self) -> Result<Vec<ProjPoint>> {
        let f = self.field();
        if self.map.is_identity() {
            return Err(Error::IdentityMap);
        }
        if self.map.is_fixed(self.alpha) {
            return Err(Error::FixedSeed(self.alpha.format(f)));
        }
        if !self.map.is_fixed(self.beta) {
            return Err(Error::MovingBeta(self.beta.format(f)));
        }
        let orbit = self.map.orbit(self.alpha)?;
        if orbit.contains(&self.beta) {
            return Err(Error::SupportOverlap(self.beta.format(f)));
        }
        let max = orbit.len() as i64 - 2;
        if self.r < 1 || self.r > max {
            return Err(Error::ROutOfRange { r: self.r, max });
        }
        Ok(orbit)
    }

    pub fn length(&self) -> Result<usize> {
        Ok(self.orbit()?.len())
    }

    pub fn places(&self) -> Result<Vec<Place>> {
        Ok(self.orbit()?.into_iter().map(Place::Rational).collect())
    }

    pub fn divisor(&self) -> Divisor {
        Divisor::single(Place::Rational(self.beta), self.r)
    }

    pub fn describe(&self) -> String {
        let f = self.field();
        format!("C([{}], {}, {}, {})", self.map, self.alpha.format(f), self.beta.format(f), self.r)
    }
}

fn check_evaluation_places(field: &Field, d: &[Place], g: &Divisor) -> Result<()> {
    for (i, p) in d.iter().enumerate() {
        if !matches!(p, Place::Rational(_)) {
            return Err(Error::NotRational(p.format(field)));
        }
        if d[..i].contains(p) {
            return Err(Error::DuplicatePlace(p.format(field)));
        }
        if g.coeff(p) != 0 {
            return Err(Error::SupportOverlap(p.format(field)));
        }
    }
    Ok(())
}

fn evaluation_rows(basis: &[RatFn], d: &[Place]) -> Result<Matrix> {
    basis
        .iter()
        .map(|z| d.iter().map(|p| evaluate_at_place(z, p)).collect::<Result<Vec<Elem>>>())
        .collect()
}

/// C_L(D, G): evaluations of a basis of L(G) at the places of `d`, in order.
/// A divisor of negative degree yields the zero code.
pub fn construct_ag_code(field: &Field, d: &[Place], g: &Divisor) -> Result<LinearCode> {
    check_evaluation_places(field, d, g)?;
    let rows = evaluation_rows(&rr_basis(field, g), d)?;
    LinearCode::new(field, d.len(), rows)
}

/// The code C(A, alpha, beta, r).
pub fn construct_sigma_code(spec: &SigmaCodeSpec) -> Result<LinearCode> {
    let field = spec.field();
    let d = spec.places()?;
    match (spec.paper_basis, spec.beta) {
        (true, ProjPoint::Finite(beta)) => {
            let basis = rr_basis_paper(field, beta, spec.r as usize);
            LinearCode::new(field, d.len(), evaluation_rows(&basis, &d)?)
        }
        _ => construct_ag_code(field, &d, &spec.divisor()),
    }
}

/// Outcome of checking the hypotheses of the cyclicity lemma for a map,
/// an ordered set of places and a divisor.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub places_distinct: bool,
    /// `sigma(P_i) = P_{i+1}` and `sigma(P_n) = P_1`.
    pub shift_condition: bool,
    #[serde(rename = "D_invariant")]
    pub d_invariant: bool,
    #[serde(rename = "G_invariant")]
    pub g_invariant: bool,
    pub supports_disjoint: bool,
    /// `m = n k` with `k` the isotropy order of `P_1`.
    pub order_divisibility: bool,
    pub code_cyclic: bool,
    /// For every basis function `u` of L(G) there is `v` in L(G) with
    /// `v(P_i) = u(P_{i+1})`.
    pub induced_permutation_preserves_code: bool,
    pub n: usize,
    pub m: u64,
    pub k: u64,
    pub dimension: Option<usize>,
    pub distance: Option<usize>,
}

impl VerificationReport {
    /// Hypotheses of the cyclicity lemma.
    pub fn hypotheses_hold(&self) -> bool {
        self.places_distinct && self.shift_condition && self.d_invariant && self.g_invariant && self.supports_disjoint
    }

    pub fn all_hold(&self) -> bool {
        self.hypotheses_hold()
            && self.order_divisibility
            && self.code_cyclic
            && self.induced_permutation_preserves_code
    }

    pub fn flags(&self) -> [(&'static str, bool); 8] {
        [
            ("places_distinct", self.places_distinct),
            ("shift_condition", self.shift_condition),
            ("D_invariant", self.d_invariant),
            ("G_invariant", self.g_invariant),
            ("supports_disjoint", self.supports_disjoint),
            ("order_divisibility", self.order_divisibility),
            ("code_cyclic", self.code_cyclic),
            ("induced_permutation_preserves_code", self.induced_permutation_preserves_code),
        ]
    }
}

/// Evaluates each flag independently; failures are reported, not raised.
pub fn verify_sigma_cyclic(map: &MobiusMap, d: &[Place], g: &Divisor) -> VerificationReport {
    let field = map.field();
    let n = d.len();
    let places_distinct = (0..n).all(|i| !d[..i].contains(&d[i]));
    let shift_condition = n > 0 && (0..n).all(|i| place_image(map, &d[i]) == d[(i + 1) % n]);
    let mut image: Vec<Place> = d.iter().map(|p| place_image(map, p)).collect();
    let mut sorted = d.to_vec();
    image.sort();
    sorted.sort();
    let d_invariant = image == sorted;
    let g_invariant = g.image(map) == *g;
    let supports_disjoint = d.iter().all(|p| g.coeff(p) == 0);

    let m = map.order();
    let k = match d.first() {
        Some(first) => {
            let mut power = map.clone();
            let mut count = 0;
            for _ in 0..m {
                if place_image(&power, first) == *first {
                    count += 1;
                }
                power = power.compose(map);
            }
            count
        }
        None => 0,
    };
    let order_divisibility = m == n as u64 * k;

    let basis = rr_basis(field, g);
    let code = construct_ag_code(field, d, g).ok();
    let code_cyclic = code.as_ref().is_some_and(LinearCode::is_cyclic);
    let induced_permutation_preserves_code = match (&code, evaluation_rows(&basis, d)) {
        (Some(_), Ok(rows)) => {
            let columns = linalg::transpose(&rows);
            rows.iter().all(|u| {
                let mut target = u.clone();
                target.rotate_left(1);
                columns.is_empty() || linalg::solve(field, &columns, &target).is_some()
            })
        }
        _ => false,
    };
    let dimension = code.as_ref().map(LinearCode::dimension);
    let distance = code.as_ref().and_then(|c| c.min_distance(&Budget::default()).ok());
    VerificationReport {
        places_distinct,
        shift_condition,
        d_invariant,
        g_invariant,
        supports_disjoint,
        order_divisibility,
        code_cyclic,
        induced_permutation_preserves_code,
        n,
        m,
        k,
        dimension,
        distance,
    }
}

/// A worked construction: the code, its evaluation places and divisor,
/// and the shift-test verdict.
#[derive(Clone, Debug)]
pub struct ExampleOutcome {
    pub code: LinearCode,
    pub places: Vec<Place>,
    pub divisor: Divisor,
    /// `None` when the automorphism is not a Möbius map (Frobenius).
    pub map: Option<MobiusMap>,
    pub cyclic: bool,
    pub report: Option<VerificationReport>,
}

fn outcome(field: &Field, map: Option<MobiusMap>, places: Vec<Place>, divisor: Divisor) -> Result<ExampleOutcome> {
    let code = construct_ag_code(field, &places, &divisor)?;
    let cyclic = code.is_cyclic();
    let report = map.as_ref().map(|a| verify_sigma_cyclic(a, &places, &divisor));
    Ok(ExampleOutcome { code, places, divisor, map, cyclic, report })
}

fn zero_infinity_divisor(field: &Field, r: i64, s: i64) -> Divisor {
    Divisor::from_terms([(Place::finite(field.zero()), r), (Place::infinity(), s)])
}

/// Places at the Frobenius conjugates of the primitive element of GF(p^m),
/// with G = r P_0 + s P_inf.
pub fn example_frobenius(p: u32, m: u32, r: i64, s: i64) -> Result<ExampleOutcome> {
    if m < 2 {
        return Err(Error::InvalidParameters("the Frobenius example needs m >= 2".into()));
    }
    let field = Field::new(p, m, None)?;
    let orbit = field.frobenius_orbit(field.primitive_element());
    if r + s >= orbit.len() as i64 {
        return Err(Error::InvalidParameters(format!("need r + s < n = {}", orbit.len())));
    }
    let places = orbit.into_iter().map(Place::finite).collect();
    outcome(&field, None, places, zero_infinity_divisor(&field, r, s))
}

/// `sigma(x) = w^{-1} x` with `w` of order `n`, D at the powers of `w`,
/// G = r P_0 + s P_inf.
pub fn example_roots_of_unity(q: u32, n: u64, r: i64, s: i64) -> Result<ExampleOutcome> {
    let field = Field::from_order(q)?;
    if n < 2 || !(q as u64 - 1).is_multiple_of(n) {
        return Err(Error::InvalidParameters(format!("need n >= 2 dividing q - 1 = {}", q - 1)));
    }
    if r + s > n as i64 - 2 {
        return Err(Error::InvalidParameters(format!("need r + s <= n - 2 = {}", n as i64 - 2)));
    }
    let omega = field.find_element_of_order(n)?;
    let map = MobiusMap::diagonal(&field, omega)?;
    let places = map.orbit(ProjPoint::Finite(field.one()))?.into_iter().map(Place::Rational).collect();
    outcome(&field, Some(map), places, zero_infinity_divisor(&field, r, s))
}

/// `sigma(x) = x - 1` over GF(q), q = p^m with m >= 2; D at the roots
/// `alpha, alpha + 1, ...` of `x^p - x - (alpha^p - alpha)` for the smallest
/// `alpha` outside the prime field, G = s P_inf.
pub fn example_artin_schreier(q: u32, s: i64) -> Result<ExampleOutcome> {
    let field = Field::from_order(q)?;
    if field.m() < 2 {
        return Err(Error::InvalidParameters("the Artin-Schreier example needs a non-prime field".into()));
    }
    if s < 1 {
        return Err(Error::InvalidParameters("need s >= 1".into()));
    }
    let alpha = field.elements().find(|&e| !field.is_in_prime_field(e)).expect("m >= 2");
    let map = MobiusMap::translation(&field, field.neg(field.one()));
    let places = map.orbit(ProjPoint::Finite(alpha))?.into_iter().map(Place::Rational).collect();
    outcome(&field, Some(map), places, Divisor::single(Place::infinity(), s))
}

/// Roots of `x^p - x - (alpha^p - alpha)`, the orbit of the Artin-Schreier
/// example as a set.
pub fn artin_schreier_roots(field: &Field, alpha: Elem) -> Vec<Elem> {
    let p = field.p() as usize;
    let a = field.sub(field.pow(alpha, p as u64), alpha);
    let mut coeffs = vec![field.zero(); p + 1];
    coeffs[0] = field.neg(a);
    coeffs[1] = field.neg(field.one());
    coeffs[p] = field.add(coeffs[p], field.one());
    Poly::from_coeffs(field, coeffs).roots()
}

/// GF(4) with `b^2 + b + 1 = 0`, the map `[[1,1],[b,0]]`, D the orbit of 1
/// (all five rational places) and G = r Q with Q the place of
/// `x^2 + b^2 x + b^2`.
pub fn example_degree_two_place(r: i64) -> Result<ExampleOutcome> {
    let field = Field::new(2, 2, Some(&[1, 1, 1]))?;
    let b = field.generator();
    let b2 = field.mul(b, b);
    let map = MobiusMap::new(&field, field.one(), field.one(), b, field.zero())?;
    let q = Poly::from_coeffs(&field, vec![b2, b2, field.one()]);
    let places = map.orbit(ProjPoint::Finite(field.one()))?.into_iter().map(Place::Rational).collect();
    outcome(&field, Some(map), places, Divisor::single(Place::irreducible(&q)?, r))
}

/// Moves a finite nonzero `beta` to 0 by the translation `x -> x + beta`:
/// the new map is `T^{-1} A T` with `T = [[1, beta], [0, 1]]` and the seed
/// becomes `alpha - beta`. The two codes are equal.
pub fn transport_beta_to_zero(spec: &SigmaCodeSpec) -> Result<SigmaCodeSpec> {
    spec.orbit()?;
    let f = spec.field();
    let beta = match spec.beta {
        ProjPoint::Finite(b) if !b.is_zero() => b,
        other => return Err(Error::InvalidParameters(format!("beta must be finite and nonzero, got {}", other.format(f)))),
    };
    let t = MobiusMap::translation(f, beta);
    let map = t.inverse().compose(&spec.map).compose(&t);
    let alpha = match spec.alpha {
        ProjPoint::Finite(a) => ProjPoint::Finite(f.sub(a, beta)),
        ProjPoint::Infinity => ProjPoint::Infinity,
    };
    Ok(SigmaCodeSpec { map, alpha, beta: ProjPoint::Finite(f.zero()), r: spec.r, paper_basis: spec.paper_basis })
}

/// `C([[1,0],[c,d]], alpha, 0, r) = C([[d,c],[0,1]], 1/alpha, inf, r)`.
pub fn transport_zero_to_infinity(spec: &SigmaCodeSpec) -> Result<SigmaCodeSpec> {
    let f = spec.field();
    if spec.beta != ProjPoint::Finite(f.zero()) {
        return Err(Error::InvalidParameters(format!("beta must be 0, got {}", spec.beta.format(f))));
    }
    if spec.alpha == ProjPoint::Finite(f.zero()) {
        return Err(Error::InvalidParameters("alpha = 0 has no inverse in the orbit correspondence".into()));
    }
    spec.orbit()?;
    let [a, b, c, d] = spec.map.entries();
    if a != f.one() || !b.is_zero() {
        return Err(Error::WrongShape("expected [[1,0],[c,d]]".into()));
    }
    let map = MobiusMap::new(f, d, c, f.zero(), f.one())?;
    Ok(SigmaCodeSpec { map, alpha: spec.alpha.reciprocal(f), beta: ProjPoint::Infinity, r: spec.r, paper_basis: false })
}

/// `sum_{u < t} a^u` as an explicit sum.
fn geometric(field: &Field, a: Elem, t: usize) -> Elem {
    (0..t as u64).fold(field.zero(), |acc, u| field.add(acc, field.pow(a, u)))
}

/// `W` in the standard form `(I_k | W)` of C(A, alpha, inf, r) for
/// triangular `A = [[1,-b],[0,a]]`, from the closed formula in `a` alone.
pub fn standard_form_closed(map: &MobiusMap, alpha: Elem, r: i64) -> Result<Matrix> {
    let f = map.field();
    let (a, _) = map.triangular_params().ok_or_else(|| Error::WrongShape("expected [[1,-b],[0,a]]".into()))?;
    let n = map.orbit(ProjPoint::Finite(alpha))?.len();
    if n < 3 {
        return Err(Error::InvalidParameters(format!("orbit length {n} < 3")));
    }
    let max = n as i64 - 2;
    if r < 1 || r > max {
        return Err(Error::ROutOfRange { r, max });
    }
    let k = r as usize + 1;
    let sums: Vec<Elem> = (0..n).map(|t| geometric(f, a, t)).collect();
    let mut w = vec![vec![f.zero(); n - k]; k];
    for i in 1..=k {
        let sign = if (k - i) % 2 == 1 { f.neg(f.one()) } else { f.one() };
        let lead = f.mul(sign, f.pow(a, ((k - i) * (k - i + 1) / 2) as u64));
        for j in k + 1..=n {
            let mut v = lead;
            for s in 1..i {
                v = f.mul(v, f.mul(sums[j - s], f.inv(sums[i - s])));
            }
            for s in i + 1..=k {
                v = f.mul(v, f.mul(sums[j - s], f.inv(sums[s - i])));
            }
            w[i - 1][j - k - 1] = v;
        }
    }
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    Equal,
    Equivalent,
}

#[derive(Clone, Debug)]
pub struct CanonStep {
    pub name: &'static str,
    pub relation: Relation,
    pub spec: SigmaCodeSpec,
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub spec: SigmaCodeSpec,
    pub relation: Relation,
    /// Monomial map taking the input code onto the canonical code.
    pub witness: MonomialMap,
    pub steps: Vec<CanonStep>,
}

/// Reduces a spec to `C(D_c, 1, inf, r)` with `c` the smallest element of
/// order `n`, or to `C(T, 1, inf, r)` with `T = [[1,1],[0,1]]` when the
/// length is the characteristic.
pub fn canonicalize(spec: &SigmaCodeSpec) -> Result<Canonical> {
    let n = spec.length()?;
    let f = spec.field().clone();
    let mut steps = Vec::new();
    let mut cur = spec.clone();
    if matches!(cur.beta, ProjPoint::Finite(b) if !b.is_zero()) {
        cur = transport_beta_to_zero(&cur)?;
        steps.push(CanonStep { name: "translate beta to 0", relation: Relation::Equal, spec: cur.clone() });
    }
    if cur.beta == ProjPoint::Finite(f.zero()) {
        cur = transport_zero_to_infinity(&cur)?;
        steps.push(CanonStep { name: "invert beta 0 to infinity", relation: Relation::Equal, spec: cur.clone() });
    }
    let (a, _) = cur.map.triangular_params().expect("infinity is fixed");
    let mut witness = MonomialMap::identity(&f, n);
    if a == f.one() {
        let t = MobiusMap::translation(&f, f.one());
        let next = SigmaCodeSpec::new(t, ProjPoint::Finite(f.one()), ProjPoint::Infinity, cur.r)?;
        if next != cur {
            cur = next;
            steps.push(CanonStep { name: "normalize to translation", relation: Relation::Equal, spec: cur.clone() });
        }
    } else {
        let diag = SigmaCodeSpec::new(MobiusMap::diagonal(&f, a)?, ProjPoint::Finite(f.one()), ProjPoint::Infinity, cur.r)?;
        if diag != cur {
            cur = diag;
            steps.push(CanonStep { name: "normalize to diagonal", relation: Relation::Equal, spec: cur.clone() });
        }
        let c = f.find_element_of_order(n as u64)?;
        if c != a {
            // Column j of C(D_c) is c^j; it equals column perm[j] of C(D_a).
            let perm = (0..n)
                .map(|j| {
                    let target = f.pow(c, j as u64);
                    (0..n).find(|&i| f.pow(a, i as u64) == target).expect("same cyclic group")
                })
                .collect();
            witness = MonomialMap::permutation(&f, perm);
            cur = SigmaCodeSpec::new(MobiusMap::diagonal(&f, c)?, ProjPoint::Finite(f.one()), ProjPoint::Infinity, cur.r)?;
            steps.push(CanonStep { name: "reorder to canonical diagonal", relation: Relation::Equivalent, spec: cur.clone() });
        }
    }
    let relation = if steps.iter().any(|s| s.relation == Relation::Equivalent) {
        Relation::Equivalent
    } else {
        Relation::Equal
    };
    Ok(Canonical { spec: cur, relation, witness, steps })
}
