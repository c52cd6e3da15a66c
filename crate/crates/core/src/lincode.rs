//! Linear codes over F_q: rank, weights, cyclicity, standard form and
//! monomial equivalence.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{self, Matrix};

/// Enumeration limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum `q^k` for codeword enumeration.
    pub codewords: u64,
    /// Maximum `n!` for the permutation search.
    pub permutations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { codewords: 10_000_000, permutations: 40_320 }
    }
}

/// A linear code given by a spanning set of its codewords.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
    rref: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Code spanned by `rows`; each row must have length `n >= 1`. Rows may
    /// be dependent.
    pub fn new(field: &Field, n: usize, rows: Matrix) -> Result<LinearCode> {
        if n == 0 {
            return Err(Error::InvalidCode("length must be at least 1".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidCode(format!("row of length {} in a code of length {n}", bad.len())));
        }
        if rows.iter().flatten().any(|e| e.index() >= field.q()) {
            return Err(Error::InvalidCode("entry outside the field".into()));
        }
        let (rref, pivots) = linalg::rref(field, &rows);
        Ok(LinearCode { field: field.clone(), n, generator: rows, rref, pivots })
    }

    pub fn full_space(field: &Field, n: usize) -> Result<LinearCode> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        LinearCode::new(field, n, rows)
    }

    pub fn repetition(field: &Field, n: usize) -> Result<LinearCode> {
        LinearCode::new(field, n, vec![vec![field.one(); n]])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.dimension() == 0
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Reduced row-echelon basis.
    pub fn rref(&self) -> &Matrix {
        &self.rref
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && linalg::reduce(&self.field, &self.rref, &self.pivots, v).iter().all(|x| x.is_zero())
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::CodeMismatch);
        }
        Ok(())
    }

    /// Same row space.
    pub fn codes_equal(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.rref == other.rref)
    }

    fn check_budget(&self, budget: &Budget) -> Result<()> {
        let needed = (self.field.q() as u128).pow(self.dimension() as u32);
        if needed > budget.codewords as u128 {
            return Err(Error::BudgetExceeded { needed, budget: budget.codewords });
        }
        Ok(())
    }

    /// Weight counts over codewords whose first nonzero coordinate (in
    /// the rref basis) is 1. Each nonzero weight count of the code is
    /// `q - 1` times this.
    fn projective_weights(&self) -> Vec<u64> {
        let f = &self.field;
        let q = f.q();
        let rows = &self.rref;
        let mut counts = vec![0u64; self.n + 1];
        let elems: Vec<Elem> = f.elements().collect();
        for lead in 0..rows.len() {
            let tail = &rows[lead + 1..];
            let mut word = rows[lead].clone();
            let mut digits = vec![0u32; tail.len()];
            'words: loop {
                counts[word.iter().filter(|x| !x.is_zero()).count()] += 1;
                let mut j = 0;
                loop {
                    if j == tail.len() {
                        break 'words;
                    }
                    let old = elems[digits[j] as usize];
                    digits[j] = (digits[j] + 1) % q;
                    let delta = f.sub(elems[digits[j] as usize], old);
                    for (w, &g) in word.iter_mut().zip(&tail[j]) {
                        *w = f.add(*w, f.mul(delta, g));
                    }
                    if digits[j] != 0 {
                        break;
                    }
                    j += 1;
                }
            }
        }
        counts
    }

    /// `W[i]` = number of codewords of weight `i`, by exhaustive enumeration.
    pub fn weight_enumerator(&self, budget: &Budget) -> Result<Vec<u64>> {
        self.check_budget(budget)?;
        let scale = (self.field.q() - 1) as u64;
        let mut w: Vec<u64> = self.projective_weights().into_iter().map(|c| c * scale).collect();
        w[0] = 1;
        Ok(w)
    }

    /// Minimum nonzero weight, by exhaustive enumeration.
    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::InvalidCode("zero code has no minimum distance".into()));
        }
        self.check_budget(budget)?;
        let counts = self.projective_weights();
        Ok((1..=self.n).find(|&w| counts[w] > 0).expect("nonzero code"))
    }

    /// Singleton equality `d = n - k + 1`.
    pub fn is_mds(&self, budget: &Budget) -> Result<bool> {
        let d = self.min_distance(budget)?;
        Ok(d + self.dimension() == self.n + 1)
    }

    /// Closed under `s(c_1, ..., c_n) = (c_2, ..., c_n, c_1)`.
    pub fn is_cyclic(&self) -> bool {
        self.rref.iter().all(|g| {
            let mut s = g.clone();
            s.rotate_left(1);
            self.contains(&s)
        })
    }

    /// Column permutation `perm` (position `j` holds original column
    /// `perm[j]`) and `W` with the permuted rref equal to `(I_k | W)`.
    pub fn standard_form(&self) -> Result<StandardForm> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::InvalidCode("zero code has no standard form".into()));
        }
        let rest: Vec<usize> = (0..self.n).filter(|j| !self.pivots.contains(j)).collect();
        let perm: Vec<usize> = self.pivots.iter().copied().chain(rest.iter().copied()).collect();
        let w = self.rref.iter().map(|row| rest.iter().map(|&j| row[j]).collect()).collect();
        Ok(StandardForm { perm, w })
    }

    /// Image under a monomial map.
    pub fn apply_monomial(&self, map: &MonomialMap) -> Result<LinearCode> {
        if map.perm.len() != self.n || map.scale.len() != self.n {
            return Err(Error::CodeMismatch);
        }
        let rows = self.generator.iter().map(|row| map.apply(&self.field, row)).collect();
        LinearCode::new(&self.field, self.n, rows)
    }

    pub fn summary(&self, budget: &Budget) -> CodeSummary {
        let d = if self.dimension() > 0 { self.min_distance(budget).ok() } else { None };
        CodeSummary {
            n: self.n,
            k: self.dimension(),
            d,
            generator: self.generator.iter().map(|r| r.iter().map(|&e| self.field.format(e)).collect()).collect(),
            weight_enumerator: self.weight_enumerator(budget).ok(),
        }
    }
}

/// Row-per-line, comma-separated display.
pub fn format_matrix(field: &Field, m: &[Vec<Elem>]) -> String {
    m.iter().map(|row| row.iter().map(|&e| field.format(e)).join(", ")).join("\n")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub perm: Vec<usize>,
    pub w: Matrix,
}

impl StandardForm {
    pub fn is_identity_perm(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Machine-readable view of a code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub generator: Vec<Vec<String>>,
    pub weight_enumerator: Option<Vec<u64>>,
}

/// Monomial map `c'[j] = scale[j] * c[perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scale: Vec<Elem>,
}

impl MonomialMap {
    pub fn identity(field: &Field, n: usize) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), scale: vec![field.one(); n] }
    }

    pub fn permutation(field: &Field, perm: Vec<usize>) -> MonomialMap {
        let n = perm.len();
        MonomialMap { perm, scale: vec![field.one(); n] }
    }

    pub fn apply(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        self.perm.iter().zip(&self.scale).map(|(&p, &s)| field.mul(s, v[p])).collect()
    }

    /// `other` after `self`: applying the result equals applying `self`,
    /// then `other`.
    pub fn then(&self, field: &Field, other: &MonomialMap) -> MonomialMap {
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let scale = other.perm.iter().zip(&other.scale).map(|(&p, &s)| field.mul(s, self.scale[p])).collect();
        MonomialMap { perm, scale }
    }

    pub fn is_pure_permutation(&self, field: &Field) -> bool {
        self.scale.iter().all(|&s| s == field.one())
    }

    /// The `n x n` matrix `M` with `c' = c M`.
    pub fn matrix(&self, field: &Field) -> Matrix {
        let n = self.perm.len();
        let mut m = vec![vec![field.zero(); n]; n];
        for (j, (&p, &s)) in self.perm.iter().zip(&self.scale).enumerate() {
            m[p][j] = s;
        }
        m
    }
}

/// Reason for an inequivalence verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Field,
    Length,
    Dimension,
    WeightEnumerator,
    NoMonomialMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent(MonomialMap),
    Inequivalent(Invariant),
    Undecided,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Decides whether `c2 = c1 M` for a monomial matrix `M`.
pub fn monomial_equivalence(c1: &LinearCode, c2: &LinearCode, budget: &Budget) -> Equivalence {
    if c1.field != c2.field {
        return Equivalence::Inequivalent(Invariant::Field);
    }
    if c1.n != c2.n {
        return Equivalence::Inequivalent(Invariant::Length);
    }
    if c1.dimension() != c2.dimension() {
        return Equivalence::Inequivalent(Invariant::Dimension);
    }
    let field = &c1.field;
    let n = c1.n;
    if c1.dimension() == 0 {
        return Equivalence::Equivalent(MonomialMap::identity(field, n));
    }
    if let (Ok(w1), Ok(w2)) = (c1.weight_enumerator(budget), c2.weight_enumerator(budget)) {
        if w1 != w2 {
            return Equivalence::Inequivalent(Invariant::WeightEnumerator);
        }
    }
    if factorial(n) > budget.permutations as u128 {
        return Equivalence::Undecided;
    }
    for perm in (0..n).permutations(n) {
        if let Some(scale) = scaling_for(c1, c2, &perm) {
            let map = MonomialMap { perm, scale };
            let verified = c1.apply_monomial(&map).and_then(|img| img.codes_equal(c2)).unwrap_or(false);
            if verified {
                return Equivalence::Equivalent(map);
            }
        }
    }
    Equivalence::Inequivalent(Invariant::NoMonomialMap)
}

/// Column scaling `lambda` with `rowspace(c1 perm lambda) = c2`, if any.
fn scaling_for(c1: &LinearCode, c2: &LinearCode, perm: &[usize]) -> Option<Vec<Elem>> {
    let f = &c1.field;
    let n = c1.n;
    let k = c1.dimension();
    let target = &c2.rref;
    let pivots = &c2.pivots;
    let mut h: Matrix = c1.rref.iter().map(|row| perm.iter().map(|&p| row[p]).collect()).collect();
    // Reduce the permuted basis to the identity on c2's pivot columns.
    for (i, &col) in pivots.iter().enumerate() {
        let r = (i..k).find(|&r| !h[r][col].is_zero())?;
        h.swap(i, r);
        let inv = f.inv(h[i][col]);
        for v in h[i].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = h[i].clone();
        for (r, row) in h.iter_mut().enumerate() {
            if r == i || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(c, p));
            }
        }
    }
    // After scaling, entry (i, j) becomes h[i][j] * lambda_j / lambda_{p_i}.
    let mut edges: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); n];
    for i in 0..k {
        for j in 0..n {
            let (hv, tv) = (h[i][j], target[i][j]);
            if hv.is_zero() != tv.is_zero() {
                return None;
            }
            if !hv.is_zero() && j != pivots[i] {
                // lambda_j = ratio * lambda_{p_i}
                let ratio = f.mul(tv, f.inv(hv));
                edges[pivots[i]].push((j, ratio));
                edges[j].push((pivots[i], f.inv(ratio)));
            }
        }
    }
    let mut scale: Vec<Option<Elem>> = vec![None; n];
    for start in 0..n {
        if scale[start].is_some() {
            continue;
        }
        scale[start] = Some(f.one());
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = scale[u].expect("assigned");
            for &(v, ratio) in &edges[u] {
                let want = f.mul(ratio, su);
                match scale[v] {
                    None => {
                        scale[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(sv) if sv != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(scale.into_iter().map(|s| s.expect("assigned")).collect())
}
