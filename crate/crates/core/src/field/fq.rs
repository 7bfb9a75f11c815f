//! The finite field `F_q = F_p[y]/(h)` with precomputed operation tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::fqpoly;

/// An element of `F_q`, encoded as the integer `sum a_i p^i` of its
/// coordinates in the power basis of `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(pub(crate) u8);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Largest supported field size; operation tables are `q * q` bytes.
pub const MAX_Q: u32 = 256;

/// `F_q` as an extension of the prime field, with addition, multiplication
/// and inversion tables.
#[derive(Clone)]
pub struct FqField {
    p: u32,
    e: usize,
    q: usize,
    h: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqField(p={}, h={:?})", self.p, self.h)
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h
    }
}
impl Eq for FqField {}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial division of a monic polynomial over `F_p` by all monic
/// polynomials of degree `1..=deg/2`.
fn fp_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for dd in 1..=deg / 2 {
        let count = (p as u64).pow(dd as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(dd + 1);
            let mut rest = idx;
            for _ in 0..dd {
                div.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            div.push(1);
            if fp_rem(p, f, &div).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn fp_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = fp_inv(p, b[db]);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = r.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p * p - c * bj % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn fp_inv(p: u32, a: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

impl FqField {
    /// Builds `F_p[y]/(h)`. `h` is little-endian, monic, with entries in `0..p`.
    pub fn new(p: u32, h: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if h.len() < 2 || *h.last().unwrap() != 1 {
            return Err(Error::InvalidInput("h must be monic of degree >= 1".into()));
        }
        if h.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput(
                "coefficients of h must be reduced mod p".into(),
            ));
        }
        let e = h.len() - 1;
        let q64 = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if q64 > MAX_Q as u64 {
            return Err(Error::InvalidInput(format!(
                "q = {p}^{e} exceeds the supported maximum {MAX_Q}"
            )));
        }
        if !fp_irreducible(p, h) {
            return Err(Error::Reducible(format!("h = {h:?} over F_{p}")));
        }
        let q = q64 as usize;
        let digits = |x: usize| -> Vec<u32> {
            let mut v = Vec::with_capacity(e);
            let mut rest = x;
            for _ in 0..e {
                v.push((rest % p as usize) as u32);
                rest /= p as usize;
            }
            v
        };
        let encode = |v: &[u32]| -> usize {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = encode(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u8;
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s) as u8;
                let mut prod = vec![0u32; 2 * e];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let red = fp_rem(p, &prod, h);
                let mut red = red;
                red.resize(e, 0);
                mul[a * q + b] = encode(&red) as u8;
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                    break;
                }
            }
        }
        Ok(FqField {
            p,
            e,
            q,
            h: h.to_vec(),
            add,
            mul,
            neg,
            inv,
        })
    }

    /// The prime field `F_p`, presented with `h = y`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, &[0, 1])
    }

    /// `F_{p^e}` defined by the first monic irreducible polynomial of degree
    /// `e` in the order of its coefficient encoding.
    pub fn standard(p: u32, e: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidInput(
                "extension degree must be positive".into(),
            ));
        }
        let count = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if count > MAX_Q as u64 {
            return Err(Error::InvalidInput(format!(
                "q = {p}^{e} exceeds the supported maximum {MAX_Q}"
            )));
        }
        for idx in 0..count {
            let mut h = Vec::with_capacity(e + 1);
            let mut rest = idx;
            for _ in 0..e {
                h.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            h.push(1);
            if fp_irreducible(p, &h) {
                return Self::new(p, &h);
            }
        }
        Err(Error::Internal("no irreducible polynomial found".into()))
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> usize {
        self.e
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn h(&self) -> &[u32] {
        &self.h
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.add[a.index() * self.q + b.index()])
    }
    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        Fq(self.neg[a.index()])
    }
    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.mul[a.index() * self.q + b.index()])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Fq(self.inv[a.index()]))
        }
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, mut exp: u64) -> Fq {
        let mut result = Fq::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Image of an integer under `Z -> F_p ⊆ F_q`.
    pub fn from_int(&self, v: i64) -> Fq {
        Fq(v.rem_euclid(self.p as i64) as u8)
    }

    /// Element with the given coordinates over `F_p` (little-endian in `y`).
    pub fn from_digits(&self, digits: &[u32]) -> Result<Fq> {
        if digits.len() > self.e || digits.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidInput(format!(
                "{digits:?} is not a reduced element of F_q"
            )));
        }
        Ok(Fq(digits
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
            as u8))
    }

    pub fn digits(&self, a: Fq) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e);
        let mut rest = a.index();
        for _ in 0..self.e {
            v.push((rest % self.p as usize) as u32);
            rest /= self.p as usize;
        }
        v
    }

    pub fn from_index(&self, idx: usize) -> Fq {
        debug_assert!(idx < self.q);
        Fq(idx as u8)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(|i| Fq(i as u8))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (1..self.q).map(|i| Fq(i as u8))
    }

    /// Whether `a` lies in the prime field.
    pub fn is_prime_field_elem(&self, a: Fq) -> bool {
        a.index() < self.p as usize
    }

    /// Text form: an integer for prime fields, otherwise a polynomial in `y`.
    pub fn render(&self, a: Fq) -> String {
        if self.e == 1 {
            return a.index().to_string();
        }
        let digits: Vec<String> = self
            .digits(a)
            .iter()
            .map(|&d| if d == 0 { String::new() } else { d.to_string() })
            .collect();
        crate::text::render_poly(&digits, "y", crate::text::Order::Descending)
    }

    /// Whether a monic polynomial over `F_q` (little-endian) is irreducible,
    /// by trial division up to half its degree.
    pub fn is_irreducible(&self, f: &[Fq]) -> bool {
        let f = fqpoly::trimmed(f);
        let deg = match fqpoly::degree(&f) {
            Some(d) => d,
            None => return false,
        };
        if deg == 0 {
            return false;
        }
        for dd in 1..=deg / 2 {
            let count = (self.q as u64).pow(dd as u32);
            for idx in 0..count {
                let div = fqpoly::monic_from_index(self, dd, idx);
                if fqpoly::rem(self, &f, &div).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small_fields() {
        for (p, e) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)] {
            let f = FqField::standard(p, e).unwrap();
            assert_eq!(f.q(), (p as usize).pow(e as u32));
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn reducible_h_rejected() {
        assert!(matches!(
            FqField::new(2, &[1, 0, 1]),
            Err(Error::Reducible(_))
        ));
        assert!(FqField::new(2, &[1, 1, 1]).is_ok());
        assert!(FqField::new(4, &[0, 1]).is_err());
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = FqField::prime(3).unwrap();
        assert_eq!(f.inv(Fq::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn render_f4() {
        let f = FqField::standard(2, 2).unwrap();
        assert_eq!(f.h(), &[1, 1, 1]);
        assert_eq!(f.render(f.from_digits(&[1, 1]).unwrap()), "y+1");
        assert_eq!(f.render(f.from_digits(&[0, 1]).unwrap()), "y");
    }
}
