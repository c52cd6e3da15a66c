//! Dense Gaussian elimination over a [`Field`].

use crate::gf::{Elem, Field};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduced row-echelon form. Zero rows are dropped; the second component
/// lists the pivot column of each remaining row.
pub fn rref(field: &Field, rows: &[Vec<Elem>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][col]);
        for v in m[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    rref(field, rows).1.len()
}

/// Reduces `v` against an rref basis; the result is zero iff `v` lies in
/// the row space.
pub fn reduce(field: &Field, basis: &[Vec<Elem>], pivots: &[usize], v: &[Elem]) -> Vec<Elem> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        let c = out[p];
        if c.is_zero() {
            continue;
        }
        for (x, &b) in out.iter_mut().zip(row) {
            *x = field.sub(*x, field.mul(c, b));
        }
    }
    out
}

/// Solves `a y = b` for `y`. Returns `None` when inconsistent.
pub fn solve(field: &Field, a: &[Vec<Elem>], b: &[Elem]) -> Option<Vec<Elem>> {
    let ncols = a.first().map_or(0, Vec::len);
    let augmented: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let (red, pivots) = rref(field, &augmented);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut y = vec![field.zero(); ncols];
    for (row, &p) in red.iter().zip(&pivots) {
        y[p] = row[ncols];
    }
    Some(y)
}

pub fn transpose(m: &[Vec<Elem>]) -> Matrix {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_solve() {
        let f = Field::prime(5).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let m = vec![e(&[1, 2, 3]), e(&[0, 1, 1]), e(&[1, 3, 4])];
        let (red, piv) = rref(&f, &m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(red.len(), 2);
        assert!(reduce(&f, &red, &piv, &e(&[4, 3, 2])).iter().all(|x| x.is_zero()));
        assert!(!reduce(&f, &red, &piv, &e(&[0, 0, 1])).iter().all(|x| x.is_zero()));

        let a = vec![e(&[1, 1]), e(&[1, 2])];
        let y = solve(&f, &a, &e(&[3, 4])).unwrap();
        assert_eq!(y, e(&[2, 1]));
        let singular = vec![e(&[1, 1]), e(&[2, 2])];
        assert!(solve(&f, &singular, &e(&[1, 3])).is_none());
    }
}
