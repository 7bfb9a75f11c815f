//! Full-rank `A`-lattices in `F^s` in Hermite normal form.
//!
//! A lattice is `B A^s / den` where the columns of `B` form the basis. `B`
//! is upper triangular with monic diagonal, and each entry to the right of
//! the diagonal is reduced modulo the diagonal entry of its row. The
//! denominator is monic and shares no factor with all entries of `B`.

use crate::apoly::{rat_solve, APoly, RatFunc, RatMatrix};
use crate::error::{Error, Result};
use crate::field::fq::FqField;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ALattice {
    /// Row-major `s x s` basis matrix.
    basis: Vec<Vec<APoly>>,
    den: APoly,
}

/// Column HNF of the integral lattice spanned by `gens` (vectors of length `s`).
/// Returns the row-major basis matrix.
pub fn hnf(f: &FqField, gens: &[Vec<APoly>], s: usize) -> Result<Vec<Vec<APoly>>> {
    let mut pool: Vec<Vec<APoly>> = gens
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    if let Some(bad) = pool.iter().find(|g| g.len() != s) {
        return Err(Error::InvalidInput(format!(
            "generator of length {} in dimension {s}",
            bad.len()
        )));
    }
    let mut cols: Vec<Vec<APoly>> = vec![Vec::new(); s];
    for i in (0..s).rev() {
        let pivot = loop {
            let nz: Vec<usize> = (0..pool.len()).filter(|&c| !pool[c][i].is_zero()).collect();
            if nz.is_empty() {
                return Err(Error::RankError {
                    rank: s - 1 - i,
                    expected: s,
                });
            }
            let p = *nz.iter().min_by_key(|&&c| pool[c][i].deg()).unwrap();
            let mut done = true;
            for &c in &nz {
                if c == p {
                    continue;
                }
                let (q, r) = pool[c][i].divrem(f, &pool[p][i])?;
                let pc = pool[p].clone();
                for (x, y) in pool[c].iter_mut().zip(&pc) {
                    *x = x.sub(f, &q.mul(f, y));
                }
                if !r.is_zero() {
                    done = false;
                }
            }
            if done {
                break p;
            }
        };
        let mut col = pool.swap_remove(pivot);
        let inv = f.inv(col[i].lead())?;
        for x in col.iter_mut() {
            *x = x.scale(f, inv);
        }
        cols[i] = col;
        pool.retain(|g| g.iter().any(|x| !x.is_zero()));
    }
    for j in 0..s {
        for i in (0..j).rev() {
            let q = cols[j][i].divrem(f, &cols[i][i])?.0;
            if q.is_zero() {
                continue;
            }
            let ci = cols[i].clone();
            for (x, y) in cols[j].iter_mut().zip(&ci) {
                *x = x.sub(f, &q.mul(f, y));
            }
        }
    }
    Ok((0..s)
        .map(|i| (0..s).map(|j| cols[j][i].clone()).collect())
        .collect())
}

fn common_denominator(f: &FqField, gens: &[Vec<RatFunc>]) -> APoly {
    gens.iter()
        .flatten()
        .fold(APoly::one(), |acc, x| acc.lcm(f, x.den()))
}

impl ALattice {
    /// `A^s`.
    pub fn identity(s: usize) -> Self {
        let basis = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| if i == j { APoly::one() } else { APoly::zero() })
                    .collect()
            })
            .collect();
        ALattice {
            basis,
            den: APoly::one(),
        }
    }

    /// The lattice spanned by `gens / den`.
    pub fn from_generators(
        f: &FqField,
        gens: &[Vec<APoly>],
        den: &APoly,
        s: usize,
    ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let basis = hnf(f, gens, s)?;
        Ok(Self::normalized(f, basis, den.clone()))
    }

    /// The lattice spanned by vectors over `F`.
    pub fn from_rat_generators(f: &FqField, gens: &[Vec<RatFunc>], s: usize) -> Result<Self> {
        let d = common_denominator(f, gens);
        let ints: Vec<Vec<APoly>> = gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| x.num().mul(f, &d.div_exact(f, x.den()).unwrap()))
                    .collect()
            })
            .collect();
        Self::from_generators(f, &ints, &d, s)
    }

    fn normalized(f: &FqField, mut basis: Vec<Vec<APoly>>, den: APoly) -> Self {
        let lc = f.inv(den.lead()).unwrap();
        let mut den = den.scale(f, lc);
        let content = basis
            .iter()
            .flatten()
            .fold(den.clone(), |acc, x| acc.gcd(f, x));
        if !content.is_one() {
            for x in basis.iter_mut().flatten() {
                *x = x.div_exact(f, &content).unwrap();
            }
            den = den.div_exact(f, &content).unwrap();
        }
        ALattice { basis, den }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<APoly>] {
        &self.basis
    }

    pub fn den(&self) -> &APoly {
        &self.den
    }

    pub fn entry(&self, i: usize, j: usize) -> &APoly {
        &self.basis[i][j]
    }

    /// Integral part of basis vector `j` (column `j`); the vector is this
    /// divided by `den`.
    pub fn column(&self, j: usize) -> Vec<APoly> {
        self.basis.iter().map(|row| row[j].clone()).collect()
    }

    pub fn rat_column(&self, f: &FqField, j: usize) -> Vec<RatFunc> {
        self.basis
            .iter()
            .map(|row| RatFunc::new(f, row[j].clone(), self.den.clone()).unwrap())
            .collect()
    }

    pub fn rat_basis(&self, f: &FqField) -> Vec<Vec<RatFunc>> {
        (0..self.dim()).map(|j| self.rat_column(f, j)).collect()
    }

    /// Determinant of the basis as an element of `F`.
    pub fn det(&self, f: &FqField) -> RatFunc {
        let num = (0..self.dim()).fold(APoly::one(), |acc, i| acc.mul(f, &self.basis[i][i]));
        RatFunc::new(f, num, self.den.pow(f, self.dim() as u64)).unwrap()
    }

    /// Coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coords(&self, f: &FqField, v: &[RatFunc]) -> Option<Vec<APoly>> {
        let s = self.dim();
        let den = RatFunc::from_poly(self.den.clone());
        let mut x = vec![APoly::zero(); s];
        for i in (0..s).rev() {
            let mut rhs = v[i].mul(f, &den);
            for j in i + 1..s {
                if !self.basis[i][j].is_zero() && !x[j].is_zero() {
                    rhs = rhs.sub(f, &RatFunc::from_poly(self.basis[i][j].mul(f, &x[j])));
                }
            }
            let xi = rhs
                .div(f, &RatFunc::from_poly(self.basis[i][i].clone()))
                .ok()?;
            x[i] = xi.as_poly()?.clone();
        }
        Some(x)
    }

    pub fn contains(&self, f: &FqField, v: &[RatFunc]) -> bool {
        self.coords(f, v).is_some()
    }

    /// Whether `other ⊆ self`.
    pub fn contains_lattice(&self, f: &FqField, other: &ALattice) -> bool {
        (0..other.dim()).all(|j| self.contains(f, &other.rat_column(f, j)))
    }

    /// `χ(self / sub)`: the monic index of a sublattice.
    pub fn index(&self, f: &FqField, sub: &ALattice) -> Result<APoly> {
        if !self.contains_lattice(f, sub) {
            return Err(Error::NotSublattice);
        }
        let q = sub.det(f).div(f, &self.det(f))?;
        let p = q
            .as_poly()
            .ok_or_else(|| crate::error::internal("non-polynomial lattice index"))?;
        Ok(p.monic(f))
    }

    pub fn sum(&self, f: &FqField, other: &ALattice) -> Result<ALattice> {
        let mut gens = self.rat_basis(f);
        gens.extend(other.rat_basis(f));
        Self::from_rat_generators(f, &gens, self.dim())
    }

    pub fn scale(&self, f: &FqField, c: &RatFunc) -> Result<ALattice> {
        if c.is_zero() {
            return Err(Error::EmptyIdeal);
        }
        let gens: Vec<Vec<RatFunc>> = self
            .rat_basis(f)
            .into_iter()
            .map(|v| v.iter().map(|x| x.mul(f, c)).collect())
            .collect();
        Self::from_rat_generators(f, &gens, self.dim())
    }

    /// Inverse of the basis matrix, row-major, over `F`.
    fn inverse(&self, f: &FqField) -> Result<RatMatrix> {
        let s = self.dim();
        let b: RatMatrix = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| RatFunc::new(f, self.basis[i][j].clone(), self.den.clone()).unwrap())
                    .collect()
            })
            .collect();
        let mut cols = Vec::with_capacity(s);
        for j in 0..s {
            let e: Vec<RatFunc> = (0..s)
                .map(|i| {
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect();
            cols.push(rat_solve(f, &b, &e)?);
        }
        Ok((0..s)
            .map(|i| (0..s).map(|j| cols[j][i].clone()).collect())
            .collect())
    }

    /// Dual lattice `{v : v·w ∈ A for all w}` under the standard pairing.
    pub fn dual(&self, f: &FqField) -> Result<ALattice> {
        let inv = self.inverse(f)?;
        // rows of B^{-1} span the dual
        Self::from_rat_generators(f, &inv, self.dim())
    }

    pub fn intersect(&self, f: &FqField, other: &ALattice) -> Result<ALattice> {
        self.dual(f)?.sum(f, &other.dual(f)?)?.dual(f)
    }

    /// `self ∩ A e_0` is generated by this polynomial times `e_0`, for
    /// lattices whose first basis column is a multiple of `e_0`.
    pub fn first_axis_generator(&self, f: &FqField) -> RatFunc {
        RatFunc::new(f, self.basis[0][0].clone(), self.den.clone()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &FqField, v: &[i64]) -> APoly {
        APoly::from_ints(f, v)
    }

    #[test]
    fn identity_and_diagonal() {
        let f = FqField::prime(2).unwrap();
        let id = ALattice::identity(3);
        let gens: Vec<Vec<APoly>> = id
            .rat_basis(&f)
            .iter()
            .map(|v| v.iter().map(|x| x.num().clone()).collect())
            .collect();
        assert_eq!(
            ALattice::from_generators(&f, &gens, &APoly::one(), 3).unwrap(),
            id
        );
        let t = APoly::t();
        let z = APoly::zero();
        let d = ALattice::from_generators(
            &f,
            &[vec![t.clone(), z.clone()], vec![z, t.clone()]],
            &APoly::one(),
            2,
        )
        .unwrap();
        assert_eq!(d.entry(0, 0), &t);
        assert_eq!(d.entry(1, 1), &t);
        assert!(d.entry(0, 1).is_zero());
    }

    #[test]
    fn rank_deficiency() {
        let f = FqField::prime(3).unwrap();
        let v = vec![APoly::one(), APoly::t()];
        let w = vec![APoly::t(), p(&f, &[0, 0, 1])];
        assert!(matches!(
            ALattice::from_generators(&f, &[v, w], &APoly::one(), 2),
            Err(Error::RankError { .. })
        ));
    }

    #[test]
    fn index_of_scaling() {
        let f = FqField::prime(3).unwrap();
        let l = ALattice::identity(3);
        let tl = l.scale(&f, &RatFunc::from_poly(APoly::t())).unwrap();
        assert_eq!(l.index(&f, &tl).unwrap(), p(&f, &[0, 0, 0, 1]));
        assert_eq!(l.index(&f, &l).unwrap(), APoly::one());
        assert_eq!(tl.index(&f, &l), Err(Error::NotSublattice));
    }

    #[test]
    fn denominator_is_reduced() {
        let f = FqField::prime(2).unwrap();
        let t = APoly::t();
        let l = ALattice::from_generators(
            &f,
            &[
                vec![t.clone(), APoly::zero()],
                vec![APoly::zero(), t.clone()],
            ],
            &t,
            2,
        )
        .unwrap();
        assert_eq!(l, ALattice::identity(2));
    }

    #[test]
    fn intersection_and_sum() {
        let f = FqField::prime(2).unwrap();
        let t = APoly::t();
        let t1 = p(&f, &[1, 1]);
        let a = ALattice::from_generators(
            &f,
            &[
                vec![t.clone(), APoly::zero()],
                vec![APoly::zero(), APoly::one()],
            ],
            &APoly::one(),
            2,
        )
        .unwrap();
        let b = ALattice::from_generators(
            &f,
            &[
                vec![t1.clone(), APoly::zero()],
                vec![APoly::zero(), APoly::one()],
            ],
            &APoly::one(),
            2,
        )
        .unwrap();
        let i = a.intersect(&f, &b).unwrap();
        assert_eq!(i.entry(0, 0), &t.mul(&f, &t1));
        assert_eq!(a.sum(&f, &b).unwrap(), ALattice::identity(2));
    }
}
