//! The extension `k = F_q[z]/(g)` of degree `n` over `F_q`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::fq::{Fq, FqField};
use crate::field::fqpoly;

/// Largest supported degree `[k : F_q]`.
pub const MAX_N: usize = 16;

/// An element of `k`, stored as its coordinates over `F_q` in the power
/// basis of the generator. Coordinates at positions `>= n` are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KElem(pub(crate) [Fq; MAX_N]);

impl KElem {
    pub const ZERO: KElem = KElem([Fq::ZERO; MAX_N]);

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.0[i]
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self
            .0
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |i| i + 1);
        write!(f, "K{:?}", &self.0[..top])
    }
}

/// Order by integer index `sum c_i q^i`, i.e. highest coordinate first.
impl Ord for KElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for KElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The tower `F_p ⊆ F_q ⊆ k`. Immutable after construction.
#[derive(Clone)]
pub struct FieldTower {
    fq: FqField,
    n: usize,
    g: Vec<Fq>,
    /// `z^(n+i) mod g` for `i < n - 1`.
    reduce: Vec<KElem>,
    /// `frob[j][i] = z^(i q^j)`.
    frob: Vec<Vec<KElem>>,
    symbol: String,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTower({:?}, g={:?})", self.fq, self.g)
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.fq == other.fq && self.g == other.g
    }
}
impl Eq for FieldTower {}

impl FieldTower {
    /// Builds `k = F_q[z]/(g)`; `g` is monic and irreducible over `F_q`.
    pub fn new(fq: FqField, g: &[Fq]) -> Result<Self> {
        let g = fqpoly::trimmed(g);
        let n = match fqpoly::degree(&g) {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::InvalidInput("g must have degree >= 1".into())),
        };
        if n > MAX_N {
            return Err(Error::InvalidInput(format!(
                "[k:F_q] = {n} exceeds the supported maximum {MAX_N}"
            )));
        }
        if g[n] != Fq::ONE {
            return Err(Error::InvalidInput("g must be monic".into()));
        }
        if !fq.is_irreducible(&g) {
            return Err(Error::Reducible(format!("g = {g:?} over F_q")));
        }
        let mut tower = FieldTower {
            fq,
            n,
            g,
            reduce: Vec::new(),
            frob: Vec::new(),
            symbol: "z".into(),
        };
        tower.precompute();
        Ok(tower)
    }

    /// `F_{q^n}` over the standard `F_q`, defined by the first monic
    /// irreducible polynomial of degree `n` in index order.
    pub fn standard(p: u32, e: usize, n: usize) -> Result<Self> {
        Self::standard_over(FqField::standard(p, e)?, n)
    }

    /// `F_{q^n}` over a given `F_q`, by the first monic irreducible
    /// polynomial of degree `n` in index order.
    pub fn standard_over(fq: FqField, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!("unsupported degree n = {n}")));
        }
        let count = (fq.q() as u64).pow(n as u32);
        for idx in 0..count {
            let g = fqpoly::monic_from_index(&fq, n, idx);
            if fq.is_irreducible(&g) {
                return Self::new(fq, &g);
            }
        }
        Err(Error::Internal("no irreducible polynomial found".into()))
    }

    /// Same tower, rendering the generator of `k` as `symbol`.
    pub fn with_symbol(mut self, symbol: &str) -> Self {
        self.symbol = symbol.to_string();
        self
    }

    fn precompute(&mut self) {
        let n = self.n;
        let mut red = Vec::with_capacity(n.saturating_sub(1));
        // z^n = -(g_0 + ... + g_{n-1} z^{n-1})
        let mut cur = KElem::ZERO;
        for i in 0..n {
            cur.0[i] = self.fq.neg(self.g[i]);
        }
        for _ in 0..n.saturating_sub(1) {
            red.push(cur);
            cur = self.mul_by_gen(&cur);
        }
        self.reduce = red;
        let q = self.fq.q() as u128;
        let mut frob = Vec::with_capacity(n);
        let mut zq = self.gen();
        for _ in 0..n {
            let mut col = Vec::with_capacity(n);
            let mut acc = self.one();
            for _ in 0..n {
                col.push(acc);
                acc = self.mul(&acc, &zq);
            }
            frob.push(col);
            zq = self.pow(&zq, q);
        }
        self.frob = frob;
    }

    fn mul_by_gen(&self, a: &KElem) -> KElem {
        let n = self.n;
        let top = a.0[n - 1];
        let mut out = KElem::ZERO;
        for i in (1..n).rev() {
            out.0[i] = a.0[i - 1];
        }
        if !top.is_zero() {
            for i in 0..n {
                out.0[i] = self.fq.sub(out.0[i], self.fq.mul(top, self.g[i]));
            }
        }
        out
    }

    pub fn fq(&self) -> &FqField {
        &self.fq
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> usize {
        self.fq.q()
    }
    pub fn g(&self) -> &[Fq] {
        &self.g
    }
    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    /// `q^n`, the cardinality of `k`.
    pub fn size(&self) -> u128 {
        (self.q() as u128).pow(self.n as u32)
    }

    pub fn zero(&self) -> KElem {
        KElem::ZERO
    }

    pub fn one(&self) -> KElem {
        self.from_fq(Fq::ONE)
    }

    /// The generator `z` of `k` over `F_q`.
    pub fn gen(&self) -> KElem {
        if self.n == 1 {
            let mut a = KElem::ZERO;
            a.0[0] = self.fq.neg(self.g[0]);
            return a;
        }
        let mut a = KElem::ZERO;
        a.0[1] = Fq::ONE;
        a
    }

    pub fn from_fq(&self, c: Fq) -> KElem {
        let mut a = KElem::ZERO;
        a.0[0] = c;
        a
    }

    pub fn from_int(&self, v: i64) -> KElem {
        self.from_fq(self.fq.from_int(v))
    }

    /// Element with the given coordinates (little-endian in the generator).
    pub fn from_coeffs(&self, coeffs: &[Fq]) -> Result<KElem> {
        let c = fqpoly::trimmed(coeffs);
        if c.len() > self.n {
            return Err(Error::InvalidInput(format!(
                "{} coordinates exceed [k:F_q] = {}",
                c.len(),
                self.n
            )));
        }
        let mut a = KElem::ZERO;
        a.0[..c.len()].copy_from_slice(&c);
        Ok(a)
    }

    pub fn coeffs(&self, a: &KElem) -> Vec<Fq> {
        a.0[..self.n].to_vec()
    }

    /// Whether `a` lies in `F_q`; returns it if so.
    pub fn as_fq(&self, a: &KElem) -> Option<Fq> {
        if a.0[1..].iter().all(|c| c.is_zero()) {
            Some(a.0[0])
        } else {
            None
        }
    }

    pub fn add(&self, a: &KElem, b: &KElem) -> KElem {
        let mut out = KElem::ZERO;
        for i in 0..self.n {
            out.0[i] = self.fq.add(a.0[i], b.0[i]);
        }
        out
    }

    pub fn sub(&self, a: &KElem, b: &KElem) -> KElem {
        let mut out = KElem::ZERO;
        for i in 0..self.n {
            out.0[i] = self.fq.sub(a.0[i], b.0[i]);
        }
        out
    }

    pub fn neg(&self, a: &KElem) -> KElem {
        let mut out = KElem::ZERO;
        for i in 0..self.n {
            out.0[i] = self.fq.neg(a.0[i]);
        }
        out
    }

    pub fn scale(&self, a: &KElem, c: Fq) -> KElem {
        let mut out = KElem::ZERO;
        for i in 0..self.n {
            out.0[i] = self.fq.mul(a.0[i], c);
        }
        out
    }

    pub fn mul(&self, a: &KElem, b: &KElem) -> KElem {
        let n = self.n;
        let f = &self.fq;
        let mut prod = [Fq::ZERO; 2 * MAX_N];
        for i in 0..n {
            let x = a.0[i];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = b.0[j];
                if !y.is_zero() {
                    prod[i + j] = f.add(prod[i + j], f.mul(x, y));
                }
            }
        }
        let mut out = KElem::ZERO;
        out.0[..n].copy_from_slice(&prod[..n]);
        for k in 0..n.saturating_sub(1) {
            let c = prod[n + k];
            if c.is_zero() {
                continue;
            }
            let r = &self.reduce[k];
            for i in 0..n {
                out.0[i] = f.add(out.0[i], f.mul(c, r.0[i]));
            }
        }
        out
    }

    pub fn pow(&self, a: &KElem, mut exp: u128) -> KElem {
        let mut result = self.one();
        let mut base = *a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn inv(&self, a: &KElem) -> Result<KElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = fqpoly::xgcd(&self.fq, &self.coeffs(a), &self.g);
        if g != [Fq::ONE] {
            return Err(Error::Internal(
                "defining polynomial of k is not irreducible".into(),
            ));
        }
        self.from_coeffs(&s)
    }

    pub fn div(&self, a: &KElem, b: &KElem) -> Result<KElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^(q^j)`, via the precomputed Frobenius matrices.
    pub fn frob(&self, a: &KElem, j: usize) -> KElem {
        let j = j % self.n;
        if j == 0 {
            return *a;
        }
        let cols = &self.frob[j];
        let mut out = KElem::ZERO;
        for (i, col) in cols.iter().enumerate() {
            let c = a.0[i];
            if c.is_zero() {
                continue;
            }
            for l in 0..self.n {
                out.0[l] = self.fq.add(out.0[l], self.fq.mul(c, col.0[l]));
            }
        }
        out
    }

    /// Index `sum c_i q^i` of an element; a bijection `k -> 0..q^n`.
    pub fn index(&self, a: &KElem) -> u128 {
        let q = self.q() as u128;
        a.0[..self.n]
            .iter()
            .rev()
            .fold(0u128, |acc, c| acc * q + c.index() as u128)
    }

    pub fn from_index(&self, mut idx: u128) -> KElem {
        let q = self.q() as u128;
        let mut a = KElem::ZERO;
        for i in 0..self.n {
            a.0[i] = self.fq.from_index((idx % q) as usize);
            idx /= q;
        }
        a
    }

    /// All `q^n` elements, in index order.
    pub fn elements(&self) -> impl Iterator<Item = KElem> + '_ {
        (0..self.size()).map(move |i| self.from_index(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = KElem> + '_ {
        (1..self.size()).map(move |i| self.from_index(i))
    }

    /// Distinct Galois conjugates `a, a^q, a^(q^2), ...`.
    pub fn conjugates(&self, a: &KElem) -> Vec<KElem> {
        let mut out = vec![*a];
        loop {
            let next = self.frob(out.last().unwrap(), 1);
            if next == *a {
                return out;
            }
            out.push(next);
        }
    }

    /// Monic minimal polynomial of `a` over `F_q`, little-endian.
    pub fn minpoly(&self, a: &KElem) -> Vec<Fq> {
        let mut poly = vec![self.one()];
        for c in self.conjugates(a) {
            let mut next = vec![KElem::ZERO; poly.len() + 1];
            for (i, p) in poly.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], p);
                next[i] = self.sub(&next[i], &self.mul(p, &c));
            }
            poly = next;
        }
        poly.iter()
            .map(|c| self.as_fq(c).expect("minimal polynomial over F_q"))
            .collect()
    }

    /// Evaluates a polynomial over `F_q` at a point of `k`.
    pub fn eval_fq_poly(&self, f: &[Fq], a: &KElem) -> KElem {
        f.iter().rev().fold(KElem::ZERO, |acc, &c| {
            self.add(&self.mul(&acc, a), &self.from_fq(c))
        })
    }

    /// All roots in `k` of a polynomial over `F_q`, in index order.
    pub fn roots(&self, f: &[Fq]) -> Vec<KElem> {
        if fqpoly::degree(f).is_none() {
            return self.elements().collect();
        }
        self.elements()
            .filter(|a| self.eval_fq_poly(f, a).is_zero())
            .collect()
    }

    pub fn render(&self, a: &KElem) -> String {
        let coeffs: Vec<String> = a.0[..self.n]
            .iter()
            .map(|&c| {
                if c.is_zero() {
                    String::new()
                } else {
                    self.fq.render(c)
                }
            })
            .collect();
        crate::text::render_poly(&coeffs, &self.symbol, crate::text::Order::Descending)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldTower {
        let fq = FqField::prime(2).unwrap();
        let g: Vec<Fq> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        FieldTower::new(fq, &g).unwrap().with_symbol("t")
    }

    #[test]
    fn generator_relation_f16() {
        let k = f16();
        let t = k.gen();
        assert_eq!(k.pow(&t, 4), k.add(&t, &k.one()));
        assert_eq!(k.render(&k.pow(&t, 4)), "t+1");
    }

    #[test]
    fn generator_relation_f9() {
        let fq = FqField::prime(3).unwrap();
        let g: Vec<Fq> = [2, 1, 1].iter().map(|&x| fq.from_int(x)).collect();
        let k = FieldTower::new(fq, &g).unwrap().with_symbol("t");
        let t = k.gen();
        assert_eq!(k.render(&k.mul(&t, &t)), "2*t+1");
    }

    #[test]
    fn frobenius_matches_power() {
        let k = FieldTower::standard(3, 1, 4).unwrap();
        for a in k.elements().step_by(7) {
            for j in 0..5 {
                assert_eq!(k.frob(&a, j), k.pow(&a, 3u128.pow(j as u32)));
            }
        }
    }

    #[test]
    fn inverses_and_roots() {
        let k = f16();
        for a in k.nonzero_elements() {
            assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
        let fq = k.fq();
        let p: Vec<Fq> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        assert_eq!(k.roots(&p).len(), 4);
        assert_eq!(k.roots(&[Fq::ZERO, Fq::ONE]), vec![KElem::ZERO]);
        assert_eq!(k.minpoly(&k.gen()), p);
    }

    #[test]
    fn degree_one_tower() {
        let k = FieldTower::standard(2, 1, 1).unwrap();
        assert_eq!(k.size(), 2);
        assert_eq!(k.elements().count(), 2);
        assert_eq!(k.frob(&k.gen(), 1), k.gen());
    }

    #[test]
    fn index_order() {
        let k = FieldTower::standard(2, 2, 2).unwrap();
        let all: Vec<KElem> = k.elements().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.len(), 16);
    }
}
