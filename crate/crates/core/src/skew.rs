//! The skew polynomial ring `k{τ}` with `τ a = a^q τ`.

use crate::error::{Error, Result};
use crate::field::tower::{FieldTower, KElem};
use crate::text::{render_poly, Order};

/// `sum c_i τ^i`, little-endian in `τ`, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct SkewPoly(Vec<KElem>);

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly(Vec::new())
    }

    pub fn new(mut coeffs: Vec<KElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly(coeffs)
    }

    pub fn constant(c: KElem) -> Self {
        Self::new(vec![c])
    }

    pub fn one(k: &FieldTower) -> Self {
        Self::constant(k.one())
    }

    /// `c τ^i`.
    pub fn monomial(c: KElem, i: usize) -> Self {
        let mut v = vec![KElem::ZERO; i + 1];
        v[i] = c;
        Self::new(v)
    }

    pub fn tau_pow(k: &FieldTower, i: usize) -> Self {
        Self::monomial(k.one(), i)
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> KElem {
        self.0.get(i).copied().unwrap_or(KElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> KElem {
        self.0.last().copied().unwrap_or(KElem::ZERO)
    }

    pub fn is_monic(&self, k: &FieldTower) -> bool {
        self.lead() == k.one()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn tau_valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, k: &FieldTower, o: &SkewPoly) -> SkewPoly {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| k.add(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn sub(&self, k: &FieldTower, o: &SkewPoly) -> SkewPoly {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| k.sub(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn neg(&self, k: &FieldTower) -> SkewPoly {
        SkewPoly(self.0.iter().map(|c| k.neg(c)).collect())
    }

    /// `c · self`.
    pub fn left_scale(&self, k: &FieldTower, c: &KElem) -> SkewPoly {
        Self::new(self.0.iter().map(|x| k.mul(c, x)).collect())
    }

    pub fn mul(&self, k: &FieldTower, o: &SkewPoly) -> SkewPoly {
        if self.is_zero() || o.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![KElem::ZERO; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    let t = k.mul(a, &k.frob(b, i));
                    out[i + j] = k.add(&out[i + j], &t);
                }
            }
        }
        Self::new(out)
    }

    /// `c τ^e · self`.
    fn mul_monomial_left(&self, k: &FieldTower, c: &KElem, e: usize) -> SkewPoly {
        let mut out = vec![KElem::ZERO; e];
        out.extend(self.0.iter().map(|b| k.mul(c, &k.frob(b, e))));
        Self::new(out)
    }

    /// Right division: `self = quo · g + rem` with `deg rem < deg g`.
    pub fn rdivmod(&self, k: &FieldTower, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let lg = g.lead();
        let mut rem = self.clone();
        let mut quo = vec![KElem::ZERO; self.0.len().saturating_sub(dg)];
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let e = dr - dg;
            let c = k.div(&rem.lead(), &k.frob(&lg, e))?;
            quo[e] = c;
            rem = rem.sub(k, &g.mul_monomial_left(k, &c, e));
        }
        Ok((Self::new(quo), rem))
    }

    /// Whether `g` right-divides `self`.
    pub fn right_divisible_by(&self, k: &FieldTower, g: &SkewPoly) -> Result<bool> {
        Ok(self.rdivmod(k, g)?.1.is_zero())
    }

    /// Left multiple by the inverse leading coefficient.
    pub fn monic(&self, k: &FieldTower) -> SkewPoly {
        if self.is_zero() {
            return SkewPoly::zero();
        }
        let inv = k.inv(&self.lead()).unwrap();
        self.left_scale(k, &inv)
    }

    /// Applies `a ↦ a^(q^j)` to every coefficient.
    pub fn frob_coeffs(&self, k: &FieldTower, j: usize) -> SkewPoly {
        SkewPoly(self.0.iter().map(|c| k.frob(c, j)).collect())
    }

    pub fn pow(&self, k: &FieldTower, mut exp: u64) -> SkewPoly {
        let mut result = SkewPoly::one(k);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(k, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(k, &base);
            }
        }
        result
    }

    pub fn render(&self, k: &FieldTower) -> String {
        let c: Vec<String> = self
            .0
            .iter()
            .map(|x| {
                if x.is_zero() {
                    String::new()
                } else {
                    k.render(x)
                }
            })
            .collect();
        render_poly(&c, "tau", Order::Ascending)
    }
}

/// `(g, a, b)` with `a·f + b·h = g`, `g` the monic right gcd.
pub fn bezout(
    k: &FieldTower,
    f: &SkewPoly,
    h: &SkewPoly,
) -> Result<(SkewPoly, SkewPoly, SkewPoly)> {
    if f.is_zero() && h.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let (mut r0, mut r1) = (f.clone(), h.clone());
    let (mut a0, mut a1) = (SkewPoly::one(k), SkewPoly::zero());
    let (mut b0, mut b1) = (SkewPoly::zero(), SkewPoly::one(k));
    while !r1.is_zero() {
        let (q, r) = r0.rdivmod(k, &r1)?;
        let a2 = a0.sub(k, &q.mul(k, &a1));
        let b2 = b0.sub(k, &q.mul(k, &b1));
        r0 = std::mem::replace(&mut r1, r);
        a0 = std::mem::replace(&mut a1, a2);
        b0 = std::mem::replace(&mut b1, b2);
    }
    let inv = k.inv(&r0.lead())?;
    Ok((
        r0.left_scale(k, &inv),
        a0.left_scale(k, &inv),
        b0.left_scale(k, &inv),
    ))
}

/// Monic generator of the left ideal `sum k{τ} f_i`, with certificates
/// `c_i` such that `sum c_i f_i` equals it.
pub fn rgcd_with_certificates(
    k: &FieldTower,
    fs: &[SkewPoly],
) -> Result<(SkewPoly, Vec<SkewPoly>)> {
    let mut g = SkewPoly::zero();
    let mut certs: Vec<SkewPoly> = Vec::with_capacity(fs.len());
    for f in fs {
        if f.is_zero() {
            certs.push(SkewPoly::zero());
            continue;
        }
        if g.is_zero() {
            let inv = k.inv(&f.lead())?;
            g = f.left_scale(k, &inv);
            certs.push(SkewPoly::constant(inv));
            continue;
        }
        let (ng, a, b) = bezout(k, &g, f)?;
        for c in certs.iter_mut() {
            *c = a.mul(k, c);
        }
        certs.push(b);
        g = ng;
    }
    if g.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    Ok((g, certs))
}

pub fn rgcd(k: &FieldTower, fs: &[SkewPoly]) -> Result<SkewPoly> {
    let mut g = SkewPoly::zero();
    for f in fs {
        if f.is_zero() {
            continue;
        }
        g = if g.is_zero() {
            f.clone()
        } else {
            rgcd_pair(k, &g, f)?
        };
    }
    if g.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    Ok(g.monic(k))
}

fn rgcd_pair(k: &FieldTower, f: &SkewPoly, h: &SkewPoly) -> Result<SkewPoly> {
    let (mut a, mut b) = (f.clone(), h.clone());
    while !b.is_zero() {
        let r = a.rdivmod(k, &b)?.1;
        a = std::mem::replace(&mut b, r);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fq::FqField;

    fn f16() -> FieldTower {
        let fq = FqField::prime(2).unwrap();
        let g: Vec<_> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        FieldTower::new(fq, &g).unwrap().with_symbol("t")
    }

    #[test]
    fn commutation_rule() {
        let k = f16();
        let a = k.gen();
        let lhs = SkewPoly::tau_pow(&k, 1).mul(&k, &SkewPoly::constant(a));
        assert_eq!(lhs, SkewPoly::monomial(k.frob(&a, 1), 1));
        let pi = SkewPoly::tau_pow(&k, 4);
        let c = SkewPoly::constant(a);
        assert_eq!(pi.mul(&k, &c), c.mul(&k, &pi));
    }

    #[test]
    fn division_identity() {
        let k = f16();
        let t = k.gen();
        let f = SkewPoly::new(vec![t, k.one(), k.mul(&t, &t), t, k.one()]);
        let g = SkewPoly::new(vec![k.one(), t, t]);
        let (q, r) = f.rdivmod(&k, &g).unwrap();
        assert_eq!(q.mul(&k, &g).add(&k, &r), f);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(
            f.rdivmod(&k, &SkewPoly::one(&k)).unwrap(),
            (f.clone(), SkewPoly::zero())
        );
        assert_eq!(f.rdivmod(&k, &SkewPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_of_left_multiples() {
        let k = f16();
        let t = k.gen();
        let f = SkewPoly::new(vec![t, k.one()]);
        let tau = SkewPoly::tau_pow(&k, 1);
        let g = rgcd(&k, &[tau.mul(&k, &f), tau.mul(&k, &tau).mul(&k, &f)]).unwrap();
        assert_eq!(g, tau.mul(&k, &f).monic(&k));
        let (h, a, b) = bezout(&k, &f, &f).unwrap();
        assert_eq!(a.mul(&k, &f).add(&k, &b.mul(&k, &f)), h);
        assert_eq!(rgcd(&k, &[SkewPoly::zero()]), Err(Error::EmptyIdeal));
    }

    #[test]
    fn rendering() {
        let k = f16();
        let t = k.gen();
        let one = k.one();
        let w = SkewPoly::new(vec![
            k.add(&k.add(&k.pow(&t, 3), &t), &one),
            k.add(&k.pow(&t, 3), &k.pow(&t, 2)),
            k.add(&t, &one),
            one,
        ]);
        assert_eq!(w.render(&k), "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
    }
}
