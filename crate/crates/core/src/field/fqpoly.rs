//! Dense univariate polynomials over `F_q` as little-endian coefficient
//! slices. Results are always trimmed (no trailing zeros; zero is empty).

use crate::error::{Error, Result};
use crate::field::fq::{Fq, FqField};

pub fn trim(v: &mut Vec<Fq>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn trimmed(v: &[Fq]) -> Vec<Fq> {
    let mut w = v.to_vec();
    trim(&mut w);
    w
}

pub fn degree(v: &[Fq]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn add(f: &FqField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub fn neg(f: &FqField, a: &[Fq]) -> Vec<Fq> {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &FqField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(Fq::ZERO);
        let y = b.get(i).copied().unwrap_or(Fq::ZERO);
        out.push(f.sub(x, y));
    }
    trim(&mut out);
    out
}

pub fn scale(f: &FqField, a: &[Fq], c: Fq) -> Vec<Fq> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul(f: &FqField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fq::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`.
pub fn divrem(f: &FqField, a: &[Fq], b: &[Fq]) -> Result<(Vec<Fq>, Vec<Fq>)> {
    let db = degree(b).ok_or(Error::DivisionByZero)?;
    let lead_inv = f.inv(b[db])?;
    let mut r = trimmed(a);
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![Fq::ZERO; r.len() - db];
    while r.len() > db {
        let top = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        let c = f.mul(top, lead_inv);
        q[shift] = c;
        for j in 0..=db {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    Ok((q, r))
}

pub fn rem(f: &FqField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    divrem(f, a, b).expect("nonzero divisor").1
}

/// Scales a nonzero polynomial to leading coefficient one.
pub fn monic(f: &FqField, a: &[Fq]) -> Vec<Fq> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).expect("nonzero leading coefficient");
            scale(f, &a[..=d], inv)
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(f: &FqField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let mut x = trimmed(a);
    let mut y = trimmed(b);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd(f: &FqField, a: &[Fq], b: &[Fq]) -> (Vec<Fq>, Vec<Fq>, Vec<Fq>) {
    let (mut r0, mut r1) = (trimmed(a), trimmed(b));
    let (mut s0, mut s1) = (vec![Fq::ONE], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Fq::ONE]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).expect("nonzero");
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (Vec::new(), s0, t0),
        Some(d) => {
            let inv = f.inv(r0[d]).unwrap();
            (scale(f, &r0, inv), scale(f, &s0, inv), scale(f, &t0, inv))
        }
    }
}

pub fn pow(f: &FqField, a: &[Fq], mut exp: u64) -> Vec<Fq> {
    let mut result = vec![Fq::ONE];
    let mut base = trimmed(a);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul(f, &result, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul(f, &base, &base);
        }
    }
    result
}

pub fn eval(f: &FqField, a: &[Fq], x: Fq) -> Fq {
    a.iter()
        .rev()
        .fold(Fq::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn derivative(f: &FqField, a: &[Fq]) -> Vec<Fq> {
    let mut out: Vec<Fq> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
        .collect();
    trim(&mut out);
    out
}

/// The monic polynomial of degree `deg` whose lower coefficients encode
/// `idx` in base `q`.
pub fn monic_from_index(f: &FqField, deg: usize, idx: u64) -> Vec<Fq> {
    let mut v = from_index(f, deg, idx);
    v.resize(deg, Fq::ZERO);
    v.push(Fq::ONE);
    v
}

/// Polynomial of degree `< len` whose coefficients encode `idx` in base `q`.
pub fn from_index(f: &FqField, len: usize, idx: u64) -> Vec<Fq> {
    let q = f.q() as u64;
    let mut v = Vec::with_capacity(len);
    let mut rest = idx;
    for _ in 0..len {
        v.push(f.from_index((rest % q) as usize));
        rest /= q;
    }
    trim(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &FqField, v: &[i64]) -> Vec<Fq> {
        trimmed(&v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn long_division_f2() {
        let f = FqField::prime(2).unwrap();
        let (q, r) = divrem(&f, &p(&f, &[1, 1, 0, 0, 1]), &p(&f, &[1, 0, 1])).unwrap();
        assert_eq!(q, p(&f, &[1, 0, 1]));
        assert_eq!(r, p(&f, &[0, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let f = FqField::prime(5).unwrap();
        let a = p(&f, &[1, 2, 3, 4]);
        let b = p(&f, &[2, 0, 1]);
        let (g, s, t) = xgcd(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
        assert_eq!(g, gcd(&f, &a, &b));
    }

    #[test]
    fn division_by_zero() {
        let f = FqField::prime(3).unwrap();
        assert_eq!(divrem(&f, &p(&f, &[1]), &[]), Err(Error::DivisionByZero));
    }
}
