//! The Frobenius field `F̃ = F[x]/(m(x))` with elements in the power basis
//! `1, π, ..., π^(s-1)` over a single common denominator.

use crate::apoly::{det, rat_solve, APoly, RatFunc, RatMatrix};
use crate::error::{Error, Result};
use crate::field::fq::FqField;
use crate::text::{render_poly, Order};

/// `numer / den` with `den` monic and coprime to the content of `numer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FElem {
    numer: Vec<APoly>,
    den: APoly,
}

impl FElem {
    pub fn numer(&self) -> &[APoly] {
        &self.numer
    }

    pub fn den(&self) -> &APoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.numer.iter().all(|c| c.is_zero())
    }

    /// Whether the element lies in `A[π]`.
    pub fn is_integral_in_power_basis(&self) -> bool {
        self.den.is_one()
    }
}

/// Arithmetic context for `F[x]/(m)`, `m` monic over `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTilde {
    fq: FqField,
    m: Vec<APoly>,
}

impl FTilde {
    /// `m` little-endian in `x`, monic, degree `s >= 1`.
    pub fn new(fq: FqField, m: Vec<APoly>) -> Result<Self> {
        if m.len() < 2 || !m.last().unwrap().is_one() {
            return Err(Error::InvalidInput(
                "m must be monic in x of degree >= 1".into(),
            ));
        }
        Ok(FTilde { fq, m })
    }

    pub fn fq(&self) -> &FqField {
        &self.fq
    }

    pub fn m(&self) -> &[APoly] {
        &self.m
    }

    pub fn s(&self) -> usize {
        self.m.len() - 1
    }

    /// Whether `gcd(m, m') = 1` over `F`, i.e. `F̃/F` is separable.
    pub fn is_separable(&self) -> bool {
        let f = &self.fq;
        let dm: Vec<APoly> = self
            .m
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(f, &APoly::from_ints(f, &[i as i64])))
            .collect();
        if dm.iter().all(|c| c.is_zero()) {
            return false;
        }
        let el = self.from_coords(dm, APoly::one()).expect("nonzero");
        !self.norm(&el).is_zero()
    }

    pub fn from_coords(&self, mut numer: Vec<APoly>, den: APoly) -> Result<FElem> {
        let f = &self.fq;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numer.len() > self.s() {
            return Err(Error::InvalidInput(format!(
                "{} coordinates in degree {}",
                numer.len(),
                self.s()
            )));
        }
        numer.resize(self.s(), APoly::zero());
        if numer.iter().all(|c| c.is_zero()) {
            return Ok(self.zero());
        }
        let lc = f.inv(den.lead())?;
        let mut den = den.scale(f, lc);
        for c in numer.iter_mut() {
            *c = c.scale(f, lc);
        }
        let g = numer.iter().fold(den.clone(), |acc, c| acc.gcd(f, c));
        if !g.is_one() {
            for c in numer.iter_mut() {
                *c = c.div_exact(f, &g).unwrap();
            }
            den = den.div_exact(f, &g).unwrap();
        }
        Ok(FElem { numer, den })
    }

    pub fn from_rat(&self, v: &[RatFunc]) -> FElem {
        let f = &self.fq;
        let d = v.iter().fold(APoly::one(), |acc, x| acc.lcm(f, x.den()));
        let numer = v
            .iter()
            .map(|x| x.num().mul(f, &d.div_exact(f, x.den()).unwrap()))
            .collect();
        self.from_coords(numer, d).expect("nonzero denominator")
    }

    pub fn to_rat(&self, a: &FElem) -> Vec<RatFunc> {
        a.numer
            .iter()
            .map(|c| RatFunc::new(&self.fq, c.clone(), a.den.clone()).unwrap())
            .collect()
    }

    pub fn zero(&self) -> FElem {
        FElem {
            numer: vec![APoly::zero(); self.s()],
            den: APoly::one(),
        }
    }

    pub fn from_apoly(&self, a: &APoly) -> FElem {
        let mut numer = vec![APoly::zero(); self.s()];
        numer[0] = a.clone();
        FElem {
            numer,
            den: APoly::one(),
        }
    }

    pub fn from_ratfunc(&self, a: &RatFunc) -> FElem {
        let mut numer = vec![APoly::zero(); self.s()];
        numer[0] = a.num().clone();
        self.from_coords(numer, a.den().clone()).unwrap()
    }

    pub fn one(&self) -> FElem {
        self.from_apoly(&APoly::one())
    }

    /// The class of `x`, i.e. the Frobenius `π`.
    pub fn pi(&self) -> FElem {
        self.pi_pow(1)
    }

    pub fn pi_pow(&self, k: usize) -> FElem {
        let mut v = vec![APoly::zero(); k + 1];
        v[k] = APoly::one();
        FElem {
            numer: self.reduce_poly(v),
            den: APoly::one(),
        }
    }

    /// Reduces a polynomial in `x` over `A` modulo `m`.
    fn reduce_poly(&self, mut v: Vec<APoly>) -> Vec<APoly> {
        let f = &self.fq;
        let s = self.s();
        while v.len() > s {
            let c = v.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let base = v.len() - s;
            for i in 0..s {
                if !self.m[i].is_zero() {
                    v[base + i] = v[base + i].sub(f, &c.mul(f, &self.m[i]));
                }
            }
        }
        v.resize(s, APoly::zero());
        v
    }

    fn poly_mul(&self, a: &[APoly], b: &[APoly]) -> Vec<APoly> {
        let f = &self.fq;
        let mut out = vec![APoly::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(f, &x.mul(f, y));
                }
            }
        }
        self.reduce_poly(out)
    }

    pub fn add(&self, a: &FElem, b: &FElem) -> FElem {
        let f = &self.fq;
        if a.den == b.den {
            let numer = a
                .numer
                .iter()
                .zip(&b.numer)
                .map(|(x, y)| x.add(f, y))
                .collect();
            return self.from_coords(numer, a.den.clone()).unwrap();
        }
        let numer = a
            .numer
            .iter()
            .zip(&b.numer)
            .map(|(x, y)| x.mul(f, &b.den).add(f, &y.mul(f, &a.den)))
            .collect();
        self.from_coords(numer, a.den.mul(f, &b.den)).unwrap()
    }

    pub fn neg(&self, a: &FElem) -> FElem {
        FElem {
            numer: a.numer.iter().map(|x| x.neg(&self.fq)).collect(),
            den: a.den.clone(),
        }
    }

    pub fn sub(&self, a: &FElem, b: &FElem) -> FElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FElem, b: &FElem) -> FElem {
        let numer = self.poly_mul(&a.numer, &b.numer);
        self.from_coords(numer, a.den.mul(&self.fq, &b.den))
            .unwrap()
    }

    pub fn scale(&self, a: &FElem, c: &RatFunc) -> FElem {
        let f = &self.fq;
        let numer = a.numer.iter().map(|x| x.mul(f, c.num())).collect();
        self.from_coords(numer, a.den.mul(f, c.den())).unwrap()
    }

    pub fn pow(&self, a: &FElem, mut exp: u64) -> FElem {
        let mut result = self.one();
        let mut base = a.clone();
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

    /// Matrix of multiplication by `numer` (ignoring the denominator) in the
    /// power basis; column `j` holds `numer * π^j`.
    pub fn mult_matrix(&self, numer: &[APoly]) -> Vec<Vec<APoly>> {
        let s = self.s();
        let cols: Vec<Vec<APoly>> = (0..s)
            .map(|j| {
                let mut e = vec![APoly::zero(); j + 1];
                e[j] = APoly::one();
                self.poly_mul(numer, &e)
            })
            .collect();
        (0..s)
            .map(|i| (0..s).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    pub fn inv(&self, a: &FElem) -> Result<FElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.fq;
        let m: RatMatrix = self
            .mult_matrix(&a.numer)
            .into_iter()
            .map(|r| r.into_iter().map(RatFunc::from_poly).collect())
            .collect();
        let mut e = vec![RatFunc::zero(); self.s()];
        e[0] = RatFunc::one();
        let y = rat_solve(f, &m, &e)?;
        let d = RatFunc::from_poly(a.den.clone());
        Ok(self.from_rat(&y.iter().map(|x| x.mul(f, &d)).collect::<Vec<_>>()))
    }

    pub fn div(&self, a: &FElem, b: &FElem) -> Result<FElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `N_{F̃/F}(a)`, the determinant of multiplication by `a`.
    pub fn norm(&self, a: &FElem) -> RatFunc {
        let f = &self.fq;
        let d = det(f, &self.mult_matrix(&a.numer));
        RatFunc::new(f, d, a.den.pow(f, self.s() as u64)).unwrap()
    }

    pub fn trace(&self, a: &FElem) -> RatFunc {
        let f = &self.fq;
        let m = self.mult_matrix(&a.numer);
        let t = (0..self.s()).fold(APoly::zero(), |acc, i| acc.add(f, &m[i][i]));
        RatFunc::new(f, t, a.den.clone()).unwrap()
    }

    /// Monic minimal polynomial over `F` of `a`, from its powers.
    pub fn minimal_polynomial(&self, a: &FElem) -> Vec<RatFunc> {
        let f = &self.fq;
        let s = self.s();
        let mut powers = vec![self.to_rat(&self.one())];
        for k in 1..=s {
            let p = self.to_rat(&self.pow(a, k as u64));
            if let Some(c) = solve_combination(f, &powers, &p) {
                let mut out: Vec<RatFunc> = c.into_iter().map(|x| x.neg(f)).collect();
                out.push(RatFunc::one());
                return out;
            }
            powers.push(p);
        }
        unreachable!("degree of an element divides s")
    }

    /// Text form as a polynomial in `pi` over `F`.
    pub fn render(&self, a: &FElem, var: &str) -> String {
        let f = &self.fq;
        let c: Vec<String> = a
            .numer
            .iter()
            .map(|x| {
                if x.is_zero() {
                    String::new()
                } else {
                    x.render(f, "T")
                }
            })
            .collect();
        let body = render_poly(&c, var, Order::Descending);
        if a.den.is_one() {
            body
        } else {
            format!("({body})/({})", a.den.render(f, "T"))
        }
    }
}

/// Solves `sum c_i v_i = w` over `F` for linearly independent `v_i`.
fn solve_combination(f: &FqField, vs: &[Vec<RatFunc>], w: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let k = vs.len();
    let s = w.len();
    let mut rows: Vec<Vec<RatFunc>> = (0..s)
        .map(|i| {
            let mut r: Vec<RatFunc> = (0..k).map(|j| vs[j][i].clone()).collect();
            r.push(w[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=k {
        let Some(pr) = (r..s).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if c == k {
            return None;
        }
        rows.swap(r, pr);
        let inv = rows[r][c].inv(f).unwrap();
        for x in rows[r].iter_mut() {
            *x = x.mul(f, &inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let fac = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = x.sub(f, &fac.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = vec![RatFunc::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = rows[i][k].clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_38() -> FTilde {
        let f = FqField::prime(2).unwrap();
        let m = vec![
            APoly::from_ints(&f, &[1, 1, 0, 0, 1]),
            APoly::one(),
            APoly::t(),
            APoly::one(),
        ];
        FTilde::new(f, m).unwrap()
    }

    #[test]
    fn norm_of_pi_is_constant_term_up_to_sign() {
        let ft = example_38();
        let f = ft.fq().clone();
        assert_eq!(
            ft.norm(&ft.pi()),
            RatFunc::from_poly(APoly::from_ints(&f, &[1, 1, 0, 0, 1]))
        );
    }

    #[test]
    fn pi_satisfies_m() {
        let ft = example_38();
        let pi = ft.pi();
        let mut acc = ft.zero();
        for (i, c) in ft.m().to_vec().iter().enumerate() {
            acc = ft.add(
                &acc,
                &ft.scale(&ft.pow(&pi, i as u64), &RatFunc::from_poly(c.clone())),
            );
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn inverse_and_reduction() {
        let ft = example_38();
        let f = ft.fq().clone();
        assert_eq!(ft.inv(&ft.one()).unwrap(), ft.one());
        let t1 = APoly::from_ints(&f, &[1, 1]);
        let p1 = ft.add(&ft.pi(), &ft.one());
        let e3 = ft.scale(
            &ft.mul(&p1, &p1),
            &RatFunc::new(&f, APoly::one(), t1.clone()).unwrap(),
        );
        assert_eq!(e3.den(), &t1);
        assert_eq!(e3.numer(), &[APoly::one(), APoly::zero(), APoly::one()]);
        let x = ft.add(&e3, &ft.pi());
        assert_eq!(ft.mul(&x, &ft.inv(&x).unwrap()), ft.one());
        assert_eq!(ft.minimal_polynomial(&ft.pi()).len(), 4);
    }
}
