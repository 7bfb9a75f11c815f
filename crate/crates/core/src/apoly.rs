//! The polynomial ring `A = F_q[T]`, its fraction field, and matrices over it.
//!
//! All operations take the coefficient field explicitly; values carry no
//! context and are plain data.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::fq::{Fq, FqField};
use crate::field::fqpoly;
use crate::text::{render_poly, Order};

/// A polynomial over `F_q`, little-endian, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct APoly(Vec<Fq>);

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<usize> = self.0.iter().map(|c| c.index()).collect();
        write!(f, "A{v:?}")
    }
}

impl APoly {
    pub fn zero() -> Self {
        APoly(Vec::new())
    }

    pub fn one() -> Self {
        APoly(vec![Fq::ONE])
    }

    /// The variable `T`.
    pub fn t() -> Self {
        APoly(vec![Fq::ZERO, Fq::ONE])
    }

    pub fn constant(c: Fq) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Fq, deg: usize) -> Self {
        let mut v = vec![Fq::ZERO; deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn new(mut coeffs: Vec<Fq>) -> Self {
        fqpoly::trim(&mut coeffs);
        APoly(coeffs)
    }

    /// From integer coefficients mapped through `Z -> F_p`.
    pub fn from_ints(f: &FqField, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| f.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.0.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn into_coeffs(self) -> Vec<Fq> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [Fq::ONE]
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`.
    pub fn deg(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn lead(&self) -> Fq {
        self.0.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fq::ONE
    }

    pub fn add(&self, f: &FqField, o: &APoly) -> APoly {
        APoly(fqpoly::add(f, &self.0, &o.0))
    }

    pub fn sub(&self, f: &FqField, o: &APoly) -> APoly {
        APoly(fqpoly::sub(f, &self.0, &o.0))
    }

    pub fn neg(&self, f: &FqField) -> APoly {
        APoly(fqpoly::neg(f, &self.0))
    }

    pub fn mul(&self, f: &FqField, o: &APoly) -> APoly {
        APoly(fqpoly::mul(f, &self.0, &o.0))
    }

    pub fn scale(&self, f: &FqField, c: Fq) -> APoly {
        APoly(fqpoly::scale(f, &self.0, c))
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: usize) -> APoly {
        if self.is_zero() {
            return APoly::zero();
        }
        let mut v = vec![Fq::ZERO; k];
        v.extend_from_slice(&self.0);
        APoly(v)
    }

    pub fn divrem(&self, f: &FqField, o: &APoly) -> Result<(APoly, APoly)> {
        let (q, r) = fqpoly::divrem(f, &self.0, &o.0)?;
        Ok((APoly(q), APoly(r)))
    }

    /// Remainder modulo a nonzero polynomial.
    pub fn rem(&self, f: &FqField, o: &APoly) -> APoly {
        APoly(fqpoly::rem(f, &self.0, &o.0))
    }

    /// Exact quotient, or `None` if `o` does not divide `self`.
    pub fn div_exact(&self, f: &FqField, o: &APoly) -> Option<APoly> {
        let (q, r) = self.divrem(f, o).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &FqField, o: &APoly) -> bool {
        if self.is_zero() {
            return o.is_zero();
        }
        o.rem(f, self).is_zero()
    }

    pub fn monic(&self, f: &FqField) -> APoly {
        APoly(fqpoly::monic(f, &self.0))
    }

    pub fn gcd(&self, f: &FqField, o: &APoly) -> APoly {
        APoly(fqpoly::gcd(f, &self.0, &o.0))
    }

    /// `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn xgcd(&self, f: &FqField, o: &APoly) -> (APoly, APoly, APoly) {
        let (g, s, t) = fqpoly::xgcd(f, &self.0, &o.0);
        (APoly(g), APoly(s), APoly(t))
    }

    pub fn lcm(&self, f: &FqField, o: &APoly) -> APoly {
        if self.is_zero() || o.is_zero() {
            return APoly::zero();
        }
        let g = self.gcd(f, o);
        self.mul(f, &o.div_exact(f, &g).unwrap()).monic(f)
    }

    pub fn pow(&self, f: &FqField, exp: u64) -> APoly {
        APoly(fqpoly::pow(f, &self.0, exp))
    }

    /// `self^exp mod m`.
    pub fn powmod(&self, f: &FqField, mut exp: u64, m: &APoly) -> Result<APoly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut result = APoly::one().rem(f, m);
        let mut base = self.rem(f, m);
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(f, &base).rem(f, m);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(f, &base).rem(f, m);
            }
        }
        Ok(result)
    }

    pub fn eval(&self, f: &FqField, x: Fq) -> Fq {
        fqpoly::eval(f, &self.0, x)
    }

    pub fn derivative(&self, f: &FqField) -> APoly {
        APoly(fqpoly::derivative(f, &self.0))
    }

    /// Largest `v` with `p^v | self`; `self` must be nonzero.
    pub fn valuation(&self, f: &FqField, p: &APoly) -> u32 {
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(f, p) {
            v += 1;
            cur = q;
        }
        v
    }

    pub fn render(&self, f: &FqField, var: &str) -> String {
        let c: Vec<String> = self
            .0
            .iter()
            .map(|&x| {
                if x.is_zero() {
                    String::new()
                } else {
                    f.render(x)
                }
            })
            .collect();
        render_poly(&c, var, Order::Descending)
    }
}

/// Monic irreducible factors of a nonzero polynomial, by trial division.
pub fn prime_factors(f: &FqField, a: &APoly) -> Vec<APoly> {
    let mut rest = a.monic(f);
    let mut out = Vec::new();
    let mut deg = 1;
    while rest.deg() > 0 {
        if 2 * deg > rest.deg() as usize {
            out.push(rest.clone());
            break;
        }
        let count = (f.q() as u64).pow(deg as u32);
        for idx in 0..count {
            let cand = APoly(fqpoly::monic_from_index(f, deg, idx));
            if let Some(q) = rest.div_exact(f, &cand) {
                out.push(cand.clone());
                rest = q;
                while let Some(q) = rest.div_exact(f, &cand) {
                    rest = q;
                }
            }
        }
        deg += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// An element of `F = F_q(T)`, with monic denominator coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: APoly,
    den: APoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: APoly::zero(),
            den: APoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: APoly::one(),
            den: APoly::one(),
        }
    }

    pub fn from_poly(a: APoly) -> Self {
        RatFunc {
            num: a,
            den: APoly::one(),
        }
    }

    pub fn new(f: &FqField, num: APoly, den: APoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(f, &den);
        let mut num = num.div_exact(f, &g).unwrap();
        let mut den = den.div_exact(f, &g).unwrap();
        let lc = f.inv(den.lead())?;
        num = num.scale(f, lc);
        den = den.scale(f, lc);
        Ok(RatFunc { num, den })
    }

    pub fn num(&self) -> &APoly {
        &self.num
    }

    pub fn den(&self) -> &APoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&APoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, f: &FqField, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(f, self.num.add(f, &o.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(f, &o.den).add(f, &o.num.mul(f, &self.den));
        RatFunc::new(f, num, self.den.mul(f, &o.den)).unwrap()
    }

    pub fn neg(&self, f: &FqField) -> RatFunc {
        RatFunc {
            num: self.num.neg(f),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, f: &FqField, o: &RatFunc) -> RatFunc {
        self.add(f, &o.neg(f))
    }

    pub fn mul(&self, f: &FqField, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(f, self.num.mul(f, &o.num), self.den.mul(f, &o.den)).unwrap()
    }

    pub fn inv(&self, f: &FqField) -> Result<RatFunc> {
        RatFunc::new(f, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, f: &FqField, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(f, &o.inv(f)?))
    }
}

/// Square matrix over `F`, row-major.
pub type RatMatrix = Vec<Vec<RatFunc>>;

/// Solves `m x = b` for a nonsingular square matrix over `F`.
pub fn rat_solve(f: &FqField, m: &RatMatrix, b: &[RatFunc]) -> Result<Vec<RatFunc>> {
    let n = m.len();
    let mut aug: Vec<Vec<RatFunc>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let pr = (c..n)
            .find(|&i| !aug[i][c].is_zero())
            .ok_or(Error::DivisionByZero)?;
        aug.swap(c, pr);
        let inv = aug[c][c].inv(f)?;
        for x in aug[c].iter_mut() {
            *x = x.mul(f, &inv);
        }
        let pivot = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x = x.sub(f, &factor.mul(f, y));
                }
            }
        }
    }
    Ok(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Determinant of a square matrix over `A`, by elimination over `F`.
pub fn det(f: &FqField, m: &[Vec<APoly>]) -> APoly {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .map(|r| r.iter().cloned().map(RatFunc::from_poly).collect())
        .collect();
    let mut d = RatFunc::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return APoly::zero();
        };
        if pr != c {
            a.swap(c, pr);
            d = d.neg(f);
        }
        d = d.mul(f, &a[c][c]);
        let inv = a[c][c].inv(f).unwrap();
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].mul(f, &inv);
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x = x.sub(f, &factor.mul(f, y));
                }
            }
        }
    }
    d.as_poly()
        .cloned()
        .expect("determinant of a polynomial matrix is a polynomial")
}
