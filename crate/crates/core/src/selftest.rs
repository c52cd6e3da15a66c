//! Exhaustive desk-scale acceptance checks. Each criterion compares the
//! library against an oracle computed along a different path: point
//! permutations instead of matrix powers, explicit orbit recurrences,
//! plain codeword enumeration, Vandermonde elimination and brute-force
//! monomial search.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::fixedfield::{fiber_decomposition, invariant_generator, splitting_report};
use crate::gf::{Elem, Field};
use crate::lincode::{monomial_equivalence, Budget, Equivalence, LinearCode, MonomialMap};
use crate::linalg::{self, Matrix};
use crate::pgl2::{MobiusMap, ProjPoint};
use crate::rfield::{place_image, Place, Poly};
use crate::sigma::{
    canonicalize, construct_sigma_code, example_artin_schreier, example_degree_two_place, example_frobenius,
    example_roots_of_unity, standard_form_closed, transport_beta_to_zero, transport_zero_to_infinity, Relation,
    SigmaCodeSpec,
};

const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}  {} ({} cases, {} failures)", self.id, self.title, self.cases, self.failures)?;
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

/// Case counter that keeps the first few failures.
struct Tally {
    cases: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { cases: 0, failures: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(describe());
            }
        }
    }

    fn finish(self, id: u8, title: &'static str) -> CriterionResult {
        CriterionResult {
            id,
            title,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            examples: self.examples,
        }
    }
}

pub type Criterion = fn() -> CriterionResult;

pub const CRITERIA: [(u8, Criterion); 10] = [
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6),
    (7, criterion_7),
    (8, criterion_8),
    (9, criterion_9),
    (10, criterion_10),
];

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(_, run)| run()).collect()
}

fn fields(orders: &[u32]) -> Vec<Field> {
    orders.iter().map(|&q| Field::from_order(q).expect("prime power")).collect()
}

/// Order of the permutation a map induces on P^1, from its cycle lengths.
fn action_order(map: &MobiusMap) -> u64 {
    let points = ProjPoint::all(map.field());
    let mut order = 1u64;
    for &start in &points {
        let mut len = 1u64;
        let mut cur = map.apply(start);
        while cur != start {
            cur = map.apply(cur);
            len += 1;
        }
        order = order / crate::gf::gcd(order, len) * len;
    }
    order
}

/// `[[1,-b],[0,a]]` for all `a != 0` and all `b`, except the identity.
fn triangular_maps(f: &Field) -> Vec<(Elem, Elem, MobiusMap)> {
    let mut out = Vec::new();
    for a in f.nonzero_elements() {
        for b in f.elements() {
            let map = MobiusMap::triangular(f, a, b).expect("a != 0");
            if !map.is_identity() {
                out.push((a, b, map));
            }
        }
    }
    out
}

/// Every valid C(A, alpha, beta, r) with orbit length at most `max_n`.
pub fn valid_specs(f: &Field, max_n: usize) -> Vec<SigmaCodeSpec> {
    let mut out = Vec::new();
    for map in MobiusMap::all(f) {
        if map.is_identity() {
            continue;
        }
        let fixed = map.fixed_points();
        if fixed.is_empty() {
            continue;
        }
        let n = map.order() as usize;
        if n > max_n || n < 3 {
            continue;
        }
        for alpha in ProjPoint::all(f) {
            if fixed.contains(&alpha) {
                continue;
            }
            for &beta in &fixed {
                for r in 1..=n as i64 - 2 {
                    out.push(SigmaCodeSpec { map: map.clone(), alpha, beta, r, paper_basis: false });
                }
            }
        }
    }
    out
}

/// Weight distribution by plain enumeration of all `q^k` combinations of
/// the generator rows.
pub fn naive_weights(code: &LinearCode) -> Vec<u64> {
    let f = code.field();
    let rows = code.generator();
    let n = code.len();
    let q = f.q() as usize;
    let elems: Vec<Elem> = f.elements().collect();
    let mut counts = vec![0u64; n + 1];
    let total = q.pow(rows.len() as u32);
    for mut idx in 0..total {
        let mut word = vec![f.zero(); n];
        for row in rows {
            let c = elems[idx % q];
            idx /= q;
            if c.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(c, g));
            }
        }
        counts[word.iter().filter(|x| !x.is_zero()).count()] += 1;
    }
    counts
}

fn naive_distance(code: &LinearCode) -> Option<usize> {
    let w = naive_weights(code);
    (1..w.len()).find(|&i| w[i] > 0)
}

/// Closure under the rotation by a rank comparison.
fn rotation_closed(code: &LinearCode) -> bool {
    let rows = code.generator();
    let mut all = rows.clone();
    for row in rows {
        let mut s = row.clone();
        s.rotate_left(1);
        all.push(s);
    }
    linalg::rank(code.field(), &all) == linalg::rank(code.field(), rows)
}

/// `W` from eliminating the Vandermonde matrix `(alpha_i^t)`.
fn vandermonde_w(f: &Field, orbit: &[Elem], k: usize) -> Option<Matrix> {
    let rows: Matrix = (0..k).map(|t| orbit.iter().map(|&x| f.pow(x, t as u64)).collect()).collect();
    let (red, pivots) = linalg::rref(f, &rows);
    if pivots != (0..k).collect::<Vec<_>>() {
        return None;
    }
    Some(red.iter().map(|row| row[k..].to_vec()).collect())
}

/// Brute-force search over all `n! (q-1)^n` monomial maps.
fn exhaustive_monomial(c1: &LinearCode, c2: &LinearCode) -> Option<MonomialMap> {
    let f = c1.field();
    let n = c1.len();
    let units: Vec<Elem> = f.nonzero_elements().collect();
    for perm in (0..n).permutations(n) {
        for scale in (0..n).map(|_| units.iter().copied()).multi_cartesian_product() {
            let map = MonomialMap { perm: perm.clone(), scale };
            if c1.rref().iter().all(|row| c2.contains(&map.apply(f, row))) {
                return Some(map);
            }
        }
    }
    None
}

/// The order-5 map over GF(4): order, orbit, invariant place and code.
pub fn criterion_1() -> CriterionResult {
    let mut t = Tally::new();
    let f = Field::new(2, 2, Some(&[1, 1, 1])).expect("GF(4)");
    let b = f.generator();
    let map = MobiusMap::new(&f, f.one(), f.one(), b, f.zero()).expect("invertible");
    t.check(map.order() == 5 && action_order(&map) == 5, || format!("order {}", map.order()));
    let orbit: Vec<String> = map.orbit(ProjPoint::Finite(f.one())).map(|o| o.iter().map(|p| p.format(&f)).collect()).unwrap_or_default();
    t.check(orbit == ["1", "b", "b+1", "inf", "0"], || format!("orbit {orbit:?}"));
    let b2 = f.mul(b, b);
    let q = Place::irreducible(&Poly::from_coeffs(&f, vec![b2, b2, f.one()])).expect("irreducible");
    t.check(place_image(&map, &q) == q, || "Q is moved".into());
    match example_degree_two_place(1) {
        Ok(ex) => {
            t.check(ex.code.len() == 5 && ex.code.dimension() == 3, || format!("[{}, {}]", ex.code.len(), ex.code.dimension()));
            t.check(ex.code.is_cyclic() && rotation_closed(&ex.code), || "code not cyclic".into());
            let all = ex.report.as_ref().is_some_and(|r| r.all_hold());
            t.check(all, || format!("report {:?}", ex.report));
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    t.finish(1, "order-5 map and length-5 code over GF(4)")
}

/// MDS parameters of the roots-of-unity codes.
pub fn criterion_2() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[5, 7, 8, 9]) {
        let q = f.q();
        for n in (3..q as u64).filter(|n| (q as u64 - 1).is_multiple_of(*n)) {
            for total in 1..=n as i64 - 2 {
                for r in -1..=total + 1 {
                    let s = total - r;
                    let label = || format!("q={q} n={n} r={r} s={s}");
                    match example_roots_of_unity(q, n, r, s) {
                        Ok(ex) => {
                            let k = ex.code.dimension();
                            let d = naive_distance(&ex.code);
                            let ok = k as i64 == total + 1 && d == Some(n as usize - total as usize);
                            t.check(ok, || format!("{}: k={k} d={d:?}", label()));
                        }
                        Err(e) => t.check(false, || format!("{}: {e}", label())),
                    }
                }
            }
        }
    }
    t.finish(2, "MDS parameters k = r+s+1, d = n-(r+s)")
}

/// Closed-form order of triangular maps.
pub fn criterion_3() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[2, 3, 4, 5, 7, 8, 9, 11, 13, 16]) {
        for (a, b, map) in triangular_maps(&f) {
            let closed = map.order_triangular().ok();
            let ok = closed == Some(map.order()) && closed == Some(action_order(&map));
            t.check(ok, || format!("q={} a={} b={}: {closed:?} vs {}", f.q(), f.format(a), f.format(b), map.order()));
        }
    }
    t.finish(3, "triangular order formula")
}

/// Closed-form orbit differences.
pub fn criterion_4() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[2, 3, 4, 5, 7, 8, 9]) {
        for (a, b, map) in triangular_maps(&f) {
            for alpha in f.elements() {
                if map.is_fixed(ProjPoint::Finite(alpha)) {
                    continue;
                }
                // A^{-1} acts as t -> a t + b.
                let mut orbit = vec![alpha];
                loop {
                    let next = f.add(f.mul(a, *orbit.last().expect("nonempty")), b);
                    if next == alpha {
                        break;
                    }
                    orbit.push(next);
                }
                let n = orbit.len();
                for i in 1..n {
                    for j in i + 1..=n {
                        let direct = f.sub(orbit[j - 1], orbit[i - 1]);
                        let closed = map.orbit_difference(alpha, i, j).ok();
                        t.check(closed == Some(direct), || {
                            format!("q={} a={} b={} alpha={} i={i} j={j}", f.q(), f.format(a), f.format(b), f.format(alpha))
                        });
                    }
                }
            }
        }
    }
    t.finish(4, "orbit difference formula")
}

/// Closed-form standard form and its independence of `b`.
pub fn criterion_5() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[5, 7, 8, 9]) {
        let mut by_a: BTreeMap<(Elem, i64), Matrix> = BTreeMap::new();
        for (a, b, map) in triangular_maps(&f) {
            let n = map.order() as usize;
            if n < 3 {
                continue;
            }
            let alpha = std::iter::once(f.one())
                .chain(f.elements())
                .find(|&x| !map.is_fixed(ProjPoint::Finite(x)))
                .expect("a non-fixed point");
            let orbit: Vec<Elem> = map
                .orbit(ProjPoint::Finite(alpha))
                .expect("non-fixed")
                .into_iter()
                .map(|p| p.finite().expect("infinity is fixed"))
                .collect();
            for r in 1..=n as i64 - 2 {
                let label = || format!("q={} a={} b={} r={r}", f.q(), f.format(a), f.format(b));
                let closed = standard_form_closed(&map, alpha, r).ok();
                let oracle = vandermonde_w(&f, &orbit, r as usize + 1);
                let built = SigmaCodeSpec::new(map.clone(), ProjPoint::Finite(alpha), ProjPoint::Infinity, r)
                    .and_then(|s| construct_sigma_code(&s))
                    .and_then(|c| c.standard_form())
                    .ok()
                    .map(|sf| sf.w);
                t.check(closed.is_some() && closed == oracle && closed == built, || format!("{}: mismatch", label()));
                if let Some(w) = closed {
                    let first = by_a.entry((a, r)).or_insert_with(|| w.clone());
                    t.check(*first == w, || format!("{}: depends on b", label()));
                }
            }
        }
    }
    t.finish(5, "closed-form standard form, independent of b")
}

/// Transports between equal codes.
pub fn criterion_6() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[2, 3, 4, 5, 7, 8, 9]) {
        for spec in valid_specs(&f, 8) {
            let label = || spec.describe();
            let Ok(code) = construct_sigma_code(&spec) else {
                t.check(false, || format!("{}: construction failed", label()));
                continue;
            };
            match spec.beta {
                ProjPoint::Finite(b) if !b.is_zero() => {
                    let moved = transport_beta_to_zero(&spec).and_then(|s| construct_sigma_code(&s));
                    let ok = moved.is_ok_and(|c| code.codes_equal(&c).unwrap_or(false));
                    t.check(ok, || format!("{}: beta -> 0", label()));
                }
                ProjPoint::Finite(_) => {
                    let moved = transport_zero_to_infinity(&spec);
                    let inverted = moved.as_ref().ok().and_then(|m| m.orbit().ok()).is_some_and(|o| {
                        o == spec.orbit().expect("valid").iter().map(|p| p.reciprocal(&f)).collect::<Vec<_>>()
                    });
                    let equal = moved.and_then(|s| construct_sigma_code(&s)).is_ok_and(|c| code.codes_equal(&c).unwrap_or(false));
                    t.check(equal && inverted, || format!("{}: 0 -> inf", label()));
                }
                ProjPoint::Infinity => {}
            }
        }
    }
    t.finish(6, "transports beta -> 0 -> inf give equal codes")
}

/// Canonical representatives and their witnesses.
pub fn criterion_7() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[5, 7]) {
        let mut canon_codes: BTreeMap<(usize, i64), Matrix> = BTreeMap::new();
        for spec in valid_specs(&f, f.q() as usize + 1) {
            let n = spec.length().expect("valid");
            let label = || spec.describe();
            let (Ok(code), Ok(canon)) = (construct_sigma_code(&spec), canonicalize(&spec)) else {
                t.check(false, || format!("{}: failed", label()));
                continue;
            };
            let Ok(canon_code) = construct_sigma_code(&canon.spec) else {
                t.check(false, || format!("{}: canonical spec invalid", label()));
                continue;
            };
            let witnessed = code.apply_monomial(&canon.witness).and_then(|c| c.codes_equal(&canon_code)).unwrap_or(false);
            t.check(witnessed, || format!("{}: witness fails", label()));
            if canon.relation == Relation::Equal {
                t.check(code.codes_equal(&canon_code).unwrap_or(false), || format!("{}: not equal", label()));
            }
            let first = canon_codes.entry((n, spec.r)).or_insert_with(|| canon_code.rref().clone());
            t.check(*first == *canon_code.rref(), || format!("{}: second canonical code", label()));

            if f.q() == 5 && n == 4 && canon.relation == Relation::Equivalent {
                t.check(exhaustive_monomial(&code, &canon_code).is_some(), || format!("{}: no monomial map", label()));
                let decided = matches!(monomial_equivalence(&code, &canon_code, &Budget::default()), Equivalence::Equivalent(_));
                t.check(decided, || format!("{}: search disagrees", label()));
            }
        }
    }
    t.finish(7, "canonical forms and equivalence witnesses")
}

/// Cyclicity of every constructed code.
pub fn criterion_8() -> CriterionResult {
    let mut t = Tally::new();
    let mut check = |label: String, code: Option<&LinearCode>| {
        let ok = code.is_some_and(|c| c.is_cyclic() && rotation_closed(c));
        t.check(ok, || label);
    };
    for f in fields(&[4, 5, 7, 8, 9]) {
        for spec in valid_specs(&f, 8) {
            check(spec.describe(), construct_sigma_code(&spec).ok().as_ref());
        }
    }
    for (p, m) in [(2, 2), (2, 3), (3, 2)] {
        let n = m as i64;
        for r in -1..=n {
            for s in -1..n - r {
                check(format!("frobenius p={p} m={m} r={r} s={s}"), example_frobenius(p, m, r, s).ok().map(|e| e.code).as_ref());
            }
        }
    }
    for q in [3u32, 4, 5, 7, 8, 9] {
        for n in (2..q as u64).filter(|n| (q as u64 - 1).is_multiple_of(*n)) {
            let n_i = n as i64;
            for r in -1..=n_i {
                for s in -1..=n_i - 2 - r {
                    let ex = example_roots_of_unity(q, n, r, s).ok();
                    check(format!("roots of unity q={q} n={n} r={r} s={s}"), ex.map(|e| e.code).as_ref());
                }
            }
        }
    }
    for q in [4u32, 8, 9] {
        for s in 1..=4 {
            check(format!("artin-schreier q={q} s={s}"), example_artin_schreier(q, s).ok().map(|e| e.code).as_ref());
        }
    }
    for r in 1..=3 {
        check(format!("degree-two place r={r}"), example_degree_two_place(r).ok().map(|e| e.code).as_ref());
    }
    t.finish(8, "every constructed code is cyclic")
}

/// Maps of order q+1 (no rational fixed point, maximal order).
fn order_q_plus_one(f: &Field) -> Vec<MobiusMap> {
    MobiusMap::all(f).into_iter().filter(|m| m.order() == f.q() as u64 + 1).collect()
}

/// Fixed field generator and fiber structure.
pub fn criterion_9() -> CriterionResult {
    let mut t = Tally::new();
    for f in fields(&[2, 3, 4, 5, 7, 8, 9]) {
        let mut inventory: Vec<MobiusMap> = Vec::new();
        inventory.extend(f.nonzero_elements().map(|b| MobiusMap::translation(&f, b)));
        inventory.extend(f.nonzero_elements().filter(|&a| a != f.one()).map(|a| MobiusMap::diagonal(&f, a).expect("a != 0")));
        inventory.extend(order_q_plus_one(&f));
        if f.q() == 4 {
            let ex = MobiusMap::new(&f, f.one(), f.one(), f.generator(), f.zero()).expect("invertible");
            if !inventory.contains(&ex) {
                inventory.push(ex);
            }
        }
        for map in inventory {
            let label = || format!("q={} A=[{map}]", f.q());
            let Ok(gen) = invariant_generator(&map) else {
                t.check(false, || format!("{}: no generator", label()));
                continue;
            };
            let m = map.order();
            let points = ProjPoint::all(&f);
            let substituted = gen.z.substitute(&map) == gen.z;
            let invariant = substituted && points.iter().all(|&p| gen.z.value_at(map.apply_inverse(p)) == gen.z.value_at(p));
            t.check(gen.m == m && gen.z.degree() as u64 == m && invariant, || format!("{}: generator", label()));
            for &tp in &points {
                let total: u64 = fiber_decomposition(&gen, tp).iter().map(|fp| fp.e as u64 * fp.f() as u64).sum();
                t.check(total == m, || format!("{}: fiber over {} sums to {total}", label(), tp.format(&f)));
            }
            for &alpha in &points {
                if map.is_fixed(alpha) {
                    continue;
                }
                let ok = splitting_report(&map, alpha).is_ok_and(|r| r.holds());
                t.check(ok, || format!("{}: splitting at {}", label(), alpha.format(&f)));
            }
        }
    }
    t.finish(9, "fixed field generator and fibers")
}

/// Designed distance `d >= n - deg G`.
pub fn criterion_10() -> CriterionResult {
    let mut t = Tally::new();
    let budget = Budget::default();
    let mut seen: HashSet<(u32, Matrix)> = HashSet::new();
    let mut check = |label: String, code: LinearCode, deg_g: i64| {
        let n = code.len() as i64;
        if deg_g >= n || code.dimension() == 0 {
            return;
        }
        if !seen.insert((code.field().q(), code.rref().clone())) {
            return;
        }
        let d = code.min_distance(&budget).ok();
        t.check(d.is_some_and(|d| d as i64 >= n - deg_g), || format!("{label}: d={d:?} deg G={deg_g}"));
    };
    for f in fields(&[4, 5, 7, 8, 9]) {
        for spec in valid_specs(&f, 8) {
            if let Ok(code) = construct_sigma_code(&spec) {
                check(spec.describe(), code, spec.r);
            }
        }
    }
    for q in [3u32, 4, 5, 7, 8, 9] {
        for n in (2..q as u64).filter(|n| (q as u64 - 1).is_multiple_of(*n)) {
            let n_i = n as i64;
            for r in -1..=n_i {
                for s in -1..=n_i - 2 - r {
                    if let Ok(ex) = example_roots_of_unity(q, n, r, s) {
                        check(format!("roots of unity q={q} n={n} r={r} s={s}"), ex.code, r + s);
                    }
                }
            }
        }
    }
    for (p, m) in [(2, 2), (2, 3), (3, 2)] {
        for r in -1..=m as i64 {
            for s in -1..m as i64 - r {
                if let Ok(ex) = example_frobenius(p, m, r, s) {
                    check(format!("frobenius p={p} m={m} r={r} s={s}"), ex.code, r + s);
                }
            }
        }
    }
    for q in [4u32, 8, 9] {
        for s in 1..=4 {
            if let Ok(ex) = example_artin_schreier(q, s) {
                check(format!("artin-schreier q={q} s={s}"), ex.code, s);
            }
        }
    }
    for r in 1..=2 {
        if let Ok(ex) = example_degree_two_place(r) {
            check(format!("degree-two place r={r}"), ex.code, 2 * r);
        }
    }
    t.finish(10, "designed distance d >= n - deg G")
}
