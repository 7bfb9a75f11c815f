//! Drinfeld `A`-modules over `k`, given by the image of `T`.

use std::sync::Arc;

use crate::apoly::APoly;
use crate::error::{Error, Result};
use crate::field::tower::{FieldTower, KElem};
use crate::skew::SkewPoly;

/// `φ` with `φ_T = t + g_1 τ + ... + g_r τ^r`.
#[derive(Clone, Debug)]
pub struct DrinfeldModule {
    k: Arc<FieldTower>,
    phi_t: SkewPoly,
    char_poly: APoly,
}

impl PartialEq for DrinfeldModule {
    fn eq(&self, other: &Self) -> bool {
        *self.k == *other.k && self.phi_t == other.phi_t
    }
}
impl Eq for DrinfeldModule {}

impl DrinfeldModule {
    pub fn new(k: Arc<FieldTower>, phi_t: SkewPoly) -> Result<Self> {
        match phi_t.degree() {
            None | Some(0) => {
                return Err(Error::InvalidInput(
                    "φ_T must have τ-degree at least 1".into(),
                ))
            }
            Some(_) => {}
        }
        let t = phi_t.coeff(0);
        let char_poly = APoly::new(k.minpoly(&t));
        Ok(DrinfeldModule {
            k,
            phi_t,
            char_poly,
        })
    }

    pub fn from_coeffs(k: Arc<FieldTower>, coeffs: Vec<KElem>) -> Result<Self> {
        Self::new(k, SkewPoly::new(coeffs))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.k
    }

    pub fn tower_arc(&self) -> &Arc<FieldTower> {
        &self.k
    }

    pub fn phi_t(&self) -> &SkewPoly {
        &self.phi_t
    }

    pub fn rank(&self) -> usize {
        self.phi_t.degree().unwrap()
    }

    /// `t = γ(T)`.
    pub fn t(&self) -> KElem {
        self.phi_t.coeff(0)
    }

    /// The `A`-characteristic `𝔭`, the minimal polynomial of `t` over `F_q`.
    pub fn characteristic(&self) -> &APoly {
        &self.char_poly
    }

    pub fn d(&self) -> usize {
        self.char_poly.degree().unwrap()
    }

    pub fn n(&self) -> usize {
        self.k.n()
    }

    /// `φ_a` by Horner's rule.
    pub fn eval(&self, a: &APoly) -> SkewPoly {
        let k = &*self.k;
        let mut acc = SkewPoly::zero();
        for c in a.coeffs().iter().rev() {
            acc = acc
                .mul(k, &self.phi_t)
                .add(k, &SkewPoly::constant(k.from_fq(*c)));
        }
        acc
    }

    /// `φ_{T^j}` for `j = 0..count`.
    pub fn t_powers(&self, count: usize) -> Vec<SkewPoly> {
        let k = &*self.k;
        let mut out = Vec::with_capacity(count);
        let mut cur = SkewPoly::one(k);
        for _ in 0..count {
            out.push(cur.clone());
            cur = cur.mul(k, &self.phi_t);
        }
        out
    }

    /// The height `H`: the τ-valuation of `φ_𝔭` divided by `d`.
    pub fn height(&self) -> Result<usize> {
        let v = self
            .eval(&self.char_poly)
            .tau_valuation()
            .ok_or_else(|| crate::error::internal("φ_𝔭 = 0"))?;
        let d = self.d();
        if v % d != 0 {
            return Err(crate::error::internal(format!(
                "τ-valuation {v} of φ_𝔭 not divisible by d = {d}"
            )));
        }
        Ok(v / d)
    }

    /// The Frobenius `π = τ^n`.
    pub fn frobenius(&self) -> SkewPoly {
        SkewPoly::tau_pow(&self.k, self.k.n())
    }

    /// Whether `u` is an isogeny `self → psi`: `u φ_T = ψ_T u`, `u ≠ 0`.
    pub fn is_isogeny(&self, u: &SkewPoly, psi: &DrinfeldModule) -> bool {
        let k = &*self.k;
        !u.is_zero() && u.mul(k, &self.phi_t) == psi.phi_t.mul(k, u)
    }

    /// `c φ c^{-1}`: coefficient `i` becomes `c^(1-q^i) g_i`.
    pub fn twist(&self, c: &KElem) -> Result<DrinfeldModule> {
        let k = &*self.k;
        let cinv = k.inv(c)?;
        let coeffs: Vec<KElem> = self
            .phi_t
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, g)| k.mul(&k.mul(c, g), &k.frob(&cinv, i)))
            .collect();
        DrinfeldModule::from_coeffs(self.k.clone(), coeffs)
    }

    /// Some `c ∈ k^×` with `c φ_T c^{-1} = ψ_T`, by exhaustive search.
    pub fn is_isomorphic(&self, psi: &DrinfeldModule) -> Option<KElem> {
        if self.phi_t.degree() != psi.phi_t.degree() || self.t() != psi.t() {
            return None;
        }
        let k = &*self.k;
        k.nonzero_elements()
            .find(|c| self.twist(c).map(|m| m.phi_t == psi.phi_t).unwrap_or(false))
    }

    /// The least coefficient vector in the twist orbit, in index order
    /// compared from `g_1` upwards.
    pub fn canonical_form(&self) -> Vec<KElem> {
        let k = &*self.k;
        let r = self.rank();
        let gs = &self.phi_t.coeffs()[1..];
        let mut best: Option<Vec<KElem>> = None;
        for c in k.nonzero_elements() {
            let cinv = k.inv(&c).unwrap();
            let mut v = Vec::with_capacity(r);
            let mut better = best.is_none();
            let mut decided = better;
            for (i, g) in gs.iter().enumerate() {
                let i = i + 1;
                let x = k.mul(&k.mul(&c, g), &k.frob(&cinv, i));
                if !decided {
                    let cur = best.as_ref().unwrap()[i - 1];
                    match x.cmp(&cur) {
                        std::cmp::Ordering::Less => {
                            better = true;
                            decided = true;
                        }
                        std::cmp::Ordering::Greater => {
                            decided = true;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                    if decided && !better {
                        break;
                    }
                }
                v.push(x);
            }
            if better {
                best = Some(v);
            }
        }
        let mut out = vec![self.t()];
        out.extend(best.unwrap());
        out
    }

    pub fn render(&self) -> String {
        self.phi_t.render(&self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fq::FqField;

    fn ex38() -> DrinfeldModule {
        let fq = FqField::prime(2).unwrap();
        let g: Vec<_> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        let k = Arc::new(FieldTower::new(fq, &g).unwrap().with_symbol("t"));
        let t = k.gen();
        let coeffs = vec![t, KElem::ZERO, k.pow(&t, 3), k.one()];
        DrinfeldModule::from_coeffs(k, coeffs).unwrap()
    }

    #[test]
    fn characteristic_and_height() {
        let phi = ex38();
        let f = phi.tower().fq().clone();
        assert_eq!(
            phi.characteristic(),
            &APoly::from_ints(&f, &[1, 1, 0, 0, 1])
        );
        assert_eq!(phi.d(), 4);
        assert_eq!(phi.rank(), 3);
        assert_eq!(phi.height().unwrap(), 1);
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let phi = ex38();
        let k = phi.tower().clone();
        let f = k.fq().clone();
        let a = APoly::from_ints(&f, &[1, 1]);
        let b = APoly::from_ints(&f, &[0, 1, 1]);
        assert_eq!(
            phi.eval(&a.mul(&f, &b)),
            phi.eval(&a).mul(&k, &phi.eval(&b))
        );
        assert_eq!(phi.eval(&APoly::t()), *phi.phi_t());
        let sq = phi.eval(&a.pow(&f, 2));
        assert_eq!(
            sq.render(&k),
            "(t^2+1)+t^3*tau^2+(t^2+t+1)*tau^3+tau^4+t*tau^5+tau^6"
        );
    }

    #[test]
    fn twist_and_isomorphism() {
        let phi = ex38();
        let k = phi.tower().clone();
        let c = k.add(&k.gen(), &k.one());
        let psi = phi.twist(&c).unwrap();
        assert!(phi.is_isogeny(&SkewPoly::constant(c), &psi));
        let w = phi.is_isomorphic(&psi).unwrap();
        assert_eq!(phi.twist(&w).unwrap(), psi);
        assert_eq!(phi.canonical_form(), psi.canonical_form());
        assert!(phi.is_isogeny(&phi.frobenius(), &phi));
    }
}
