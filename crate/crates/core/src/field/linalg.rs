//! Dense linear algebra over `F_q`. Matrices are row-major `Vec<Vec<Fq>>`.

use crate::field::fq::{Fq, FqField};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &FqField, m: &mut [Vec<Fq>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &FqField, m: &[Vec<Fq>]) -> usize {
    let mut w = m.to_vec();
    rref(f, &mut w).len()
}

/// Basis of the right kernel `{x : m x = 0}` for a matrix with `cols` columns.
pub fn kernel(f: &FqField, m: &[Vec<Fq>], cols: usize) -> Vec<Vec<Fq>> {
    let mut w = m.to_vec();
    let pivots = rref(f, &mut w);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Fq::ZERO; cols];
        v[free] = Fq::ONE;
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(w[i][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m x = b`, or `None` if the system is inconsistent.
pub fn solve(f: &FqField, m: &[Vec<Fq>], b: &[Fq], cols: usize) -> Option<Vec<Fq>> {
    let mut aug: Vec<Vec<Fq>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Fq::ZERO; cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][cols];
    }
    Some(x)
}

/// Incremental row space over `F_q`, kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(usize, Vec<Fq>)>,
}

impl Span {
    pub fn new() -> Self {
        Span { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, f: &FqField, v: &[Fq]) -> Vec<Fq> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p];
            if !c.is_zero() {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, f: &FqField, v: &[Fq]) -> bool {
        self.reduce(f, v).iter().all(|c| c.is_zero())
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, f: &FqField, v: &[Fq]) -> bool {
        let mut w = self.reduce(f, v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[p]).unwrap();
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &FqField, rows: &[&[i64]]) -> Vec<Vec<Fq>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = FqField::prime(3).unwrap();
        let a = m(&f, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 1, 1]]);
        let ker = kernel(&f, &a, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &a {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(Fq::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = FqField::prime(5).unwrap();
        let a = m(&f, &[&[1, 1], &[1, 4]]);
        let x = solve(&f, &a, &[f.from_int(3), f.from_int(1)], 2).unwrap();
        assert_eq!(f.add(x[0], x[1]), f.from_int(3));
        let b = m(&f, &[&[1, 1], &[2, 2]]);
        assert!(solve(&f, &b, &[f.from_int(1), f.from_int(1)], 2).is_none());
    }

    #[test]
    fn span_membership() {
        let f = FqField::prime(2).unwrap();
        let mut s = Span::new();
        assert!(s.insert(&f, &[Fq::ONE, Fq::ONE, Fq::ZERO]));
        assert!(s.insert(&f, &[Fq::ZERO, Fq::ONE, Fq::ONE]));
        assert!(!s.insert(&f, &[Fq::ONE, Fq::ZERO, Fq::ONE]));
        assert!(s.contains(&f, &[Fq::ONE, Fq::ZERO, Fq::ONE]));
        assert_eq!(s.dim(), 2);
    }
}
