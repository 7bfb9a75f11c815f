//! Frobenius invariants: the minimal polynomial `m(x)` of `π` over `F`, its
//! transpose `m̃(T)` over `F_q[π]`, the height, and the local-maximality
//! verdict for `A[π]` at `π`.

use serde::Serialize;

use crate::apoly::APoly;
use crate::drinfeld::DrinfeldModule;
use crate::error::{internal, Result};
use crate::field::fq::{Fq, FqField};
use crate::field::linalg;
use crate::field::tower::FieldTower;
use crate::skew::SkewPoly;
use crate::text::{render_poly, Order};

/// Expands skew polynomials into `F_q`-coordinates: entry `(l, c)` of the
/// vector is coordinate `c` of the `τ^l` coefficient.
pub(crate) fn skew_coords(k: &FieldTower, f: &SkewPoly, len: usize) -> Vec<Fq> {
    let n = k.n();
    let mut v = vec![Fq::ZERO; len * n];
    for (l, c) in f.coeffs().iter().enumerate() {
        for i in 0..n {
            v[l * n + i] = c.coeff(i);
        }
    }
    v
}

fn columns_to_rows(cols: &[Vec<Fq>], rows: usize) -> Vec<Vec<Fq>> {
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

/// `f · τ^e`.
pub(crate) fn shift_right(f: &SkewPoly, e: usize) -> SkewPoly {
    let mut v = vec![crate::field::tower::KElem::ZERO; e];
    v.extend_from_slice(f.coeffs());
    SkewPoly::new(v)
}

/// Sum of `φ_{c_i} π^i`, i.e. the image of a polynomial in `x` over `A`
/// under `x ↦ π`.
pub fn eval_at_pi(phi: &DrinfeldModule, poly: &[APoly]) -> SkewPoly {
    let k = phi.tower();
    let n = phi.n();
    let mut acc = SkewPoly::zero();
    for (i, c) in poly.iter().enumerate() {
        acc = acc.add(k, &shift_right(&phi.eval(c), n * i));
    }
    acc
}

fn divisors(x: usize) -> Vec<usize> {
    (1..=x).filter(|d| x.is_multiple_of(*d)).collect()
}

/// Minimal polynomial of `π` over `F`, little-endian in `x`, monic.
pub fn minpoly_pi(phi: &DrinfeldModule) -> Result<Vec<APoly>> {
    let k = phi.tower();
    let f = k.fq();
    let n = phi.n();
    let r = phi.rank();
    for s in divisors(r) {
        let bounds: Vec<usize> = (0..s).map(|i| ((s - i) * n).div_ceil(r)).collect();
        let max_j = *bounds.iter().max().unwrap();
        let tp = phi.t_powers(max_j + 1);
        let len = (r * max_j + n * (s - 1)).max(n * s) + 1;
        let mut cols = Vec::new();
        for (i, &b) in bounds.iter().enumerate() {
            for p in tp.iter().take(b + 1) {
                cols.push(skew_coords(k, &shift_right(p, n * i), len));
            }
        }
        let target = skew_coords(k, &SkewPoly::tau_pow(k, n * s).neg(k), len);
        let rows = columns_to_rows(&cols, len * n);
        let Some(x) = linalg::solve(f, &rows, &target, cols.len()) else {
            continue;
        };
        if !linalg::kernel(f, &rows, cols.len()).is_empty() {
            return Err(internal(format!(
                "non-unique monic relation of degree {s} for π"
            )));
        }
        let mut m = Vec::with_capacity(s + 1);
        let mut pos = 0;
        for &b in &bounds {
            m.push(APoly::new(x[pos..pos + b + 1].to_vec()));
            pos += b + 1;
        }
        m.push(APoly::one());
        if !eval_at_pi(phi, &m).is_zero() {
            return Err(internal("m(π) ≠ 0"));
        }
        return Ok(m);
    }
    Err(internal(
        "no monic relation for π found within the degree bounds",
    ))
}

/// Transpose of a bivariate polynomial: `sum_i c_i(T) x^i` becomes
/// `sum_j (sum_i c_i[j] π^i) T^j`. Applying it twice is the identity.
pub fn transpose(poly: &[APoly]) -> Vec<APoly> {
    let deg = poly.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    (0..deg)
        .map(|j| APoly::new(poly.iter().map(|c| c.coeff(j)).collect()))
        .collect()
}

/// `m̃` together with `[F̃:K] = deg_T m̃`.
pub fn rewrite_m_tilde(m: &[APoly]) -> (Vec<APoly>, usize) {
    let mt = transpose(m);
    let nk = mt.len().saturating_sub(1);
    (mt, nk)
}

/// `m̃` scaled so its leading `T`-coefficient is 1 (it lies in `F_q^×`).
pub fn monic_m_tilde(f: &FqField, mt: &[APoly]) -> Result<Vec<APoly>> {
    let lead = mt.last().ok_or_else(|| internal("empty m̃"))?;
    if lead.deg() != 0 {
        return Err(internal("leading coefficient of m̃ is not a constant"));
    }
    let inv = f.inv(lead.lead())?;
    Ok(mt.iter().map(|c| c.scale(f, inv)).collect())
}

/// Renders a polynomial in `var` whose coefficients are polynomials in `coef_var`.
pub fn render_bivariate(f: &FqField, poly: &[APoly], var: &str, coef_var: &str) -> String {
    let c: Vec<String> = poly
        .iter()
        .map(|p| {
            if p.is_zero() {
                String::new()
            } else {
                p.render(f, coef_var)
            }
        })
        .collect();
    render_poly(&c, var, Order::Descending)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub lhs: usize,
    pub rhs: usize,
    pub locally_maximal: bool,
}

/// `⌈n/(H d)⌉` against `[F̃:K]/d`; `A[π]` is locally maximal at `π` iff equal.
pub fn local_maximality(n: usize, d: usize, h: usize, nk: usize) -> Verdict {
    let lhs = n.div_ceil(h * d);
    let rhs = nk / d;
    Verdict {
        lhs,
        rhs,
        locally_maximal: lhs == rhs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Invariants {
    pub e_k: usize,
    pub e_f: usize,
    pub f_f: usize,
    pub f_k: usize,
}

/// All positive tuples with `e_K f_F = [F̃:K]/d`, `e_F f_F = H [F̃:K]/n`,
/// `e_K H d = e_F n` and `f_K = f_F d`.
pub fn solve_invariants(n: usize, d: usize, h: usize, nk: usize) -> Vec<Invariants> {
    let mut out = Vec::new();
    if d == 0 || n == 0 || !nk.is_multiple_of(d) || !(h * nk).is_multiple_of(n) {
        return out;
    }
    let a = nk / d;
    let b = h * nk / n;
    for e_k in divisors(a) {
        let f_f = a / e_k;
        if !b.is_multiple_of(f_f) {
            continue;
        }
        let e_f = b / f_f;
        if e_k * h * d == e_f * n {
            out.push(Invariants {
                e_k,
                e_f,
                f_f,
                f_k: f_f * d,
            });
        }
    }
    out
}

/// Everything computed about `π` for one module.
#[derive(Clone, Debug)]
pub struct FrobeniusProfile {
    pub m: Vec<APoly>,
    pub s: usize,
    pub m_tilde: Vec<APoly>,
    pub nk: usize,
    pub h: usize,
    pub d: usize,
    pub n: usize,
    pub r: usize,
    pub verdict: Verdict,
    pub solutions: Vec<Invariants>,
}

impl FrobeniusProfile {
    pub fn compute(phi: &DrinfeldModule) -> Result<Self> {
        let m = minpoly_pi(phi)?;
        let s = m.len() - 1;
        let (m_tilde, nk) = rewrite_m_tilde(&m);
        let h = phi.height()?;
        let (d, n, r) = (phi.d(), phi.n(), phi.rank());
        if s * n != nk * r {
            return Err(internal(format!(
                "s·n = {} differs from [F̃:K]·r = {}",
                s * n,
                nk * r
            )));
        }
        let verdict = local_maximality(n, d, h, nk);
        let solutions = solve_invariants(n, d, h, nk);
        Ok(FrobeniusProfile {
            m,
            s,
            m_tilde,
            nk,
            h,
            d,
            n,
            r,
            verdict,
            solutions,
        })
    }

    pub fn is_ordinary(&self) -> bool {
        self.h == 1
    }

    /// Whether `End_k(φ)` is commutative, i.e. `[F̃:F] = r`.
    pub fn is_commutative(&self) -> bool {
        self.s == self.r
    }

    pub fn render_m(&self, f: &FqField) -> String {
        render_bivariate(f, &self.m, "x", "T")
    }

    pub fn render_m_tilde(&self, f: &FqField) -> String {
        render_bivariate(f, &self.m_tilde, "T", "pi")
    }

    /// `m̃ mod π`, which is `m(0)` read as a polynomial in `T`.
    pub fn m_bar(&self) -> APoly {
        self.m[0].clone()
    }

    /// Checks the structural facts about `m`: leading `T`-coefficient of `m̃`
    /// constant, `m(0)` of strictly dominant degree, and `m̄ = unit · 𝔭^([F̃:K]/d)`.
    pub fn check_structure(&self, f: &FqField, p: &APoly) -> Result<()> {
        if self.m_tilde.last().map(|c| c.deg()) != Some(0) {
            return Err(internal("leading coefficient of m̃ not in F_q^×"));
        }
        if self.m[1..self.s].iter().any(|c| c.deg() >= self.nk as i64) {
            return Err(internal("m(0) does not dominate the other coefficients"));
        }
        if !self.nk.is_multiple_of(self.d) {
            return Err(internal("d does not divide [F̃:K]"));
        }
        if self.m_bar().monic(f) != p.pow(f, (self.nk / self.d) as u64) {
            return Err(internal("m̄ is not a unit times a power of 𝔭"));
        }
        Ok(())
    }

    pub fn corollaries(&self) -> CorollaryReport {
        let small_height = self.h * self.s <= self.r;
        let prime_field = self.d == self.n;
        let implied = small_height || prime_field;
        CorollaryReport {
            small_height,
            prime_field,
            verdict: self.verdict.locally_maximal,
            consistent: !implied || self.verdict.locally_maximal,
            commutative_criterion_holds: !self.is_commutative()
                || self.verdict.locally_maximal == (self.h == 1 || prime_field),
        }
    }
}

/// Which sufficient conditions for local maximality fire on a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    /// `H <= r/[F̃:F]`.
    pub small_height: bool,
    /// `k = F_𝔭`.
    pub prime_field: bool,
    pub verdict: bool,
    /// The verdict agrees with every condition that fired.
    pub consistent: bool,
    /// With commutative `End`, verdict iff `H = 1` or `d = n`.
    pub commutative_criterion_holds: bool,
}

/// Isogenous iff the Frobenius minimal polynomials agree.
pub fn same_isogeny_class(phi: &DrinfeldModule, psi: &DrinfeldModule) -> Result<bool> {
    Ok(phi.tower() == psi.tower() && minpoly_pi(phi)? == minpoly_pi(psi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn supersingular_tau_squared() {
        let k = Arc::new(FieldTower::standard(3, 1, 3).unwrap());
        let phi =
            DrinfeldModule::from_coeffs(k.clone(), vec![k.zero(), k.zero(), k.one()]).unwrap();
        let prof = FrobeniusProfile::compute(&phi).unwrap();
        let f = k.fq();
        assert_eq!(
            prof.m,
            vec![
                APoly::from_ints(f, &[0, 0, 0, -1]),
                APoly::zero(),
                APoly::one()
            ]
        );
        assert_eq!(prof.nk, 3);
        assert_eq!(prof.h, 2);
        assert_eq!(
            prof.verdict,
            Verdict {
                lhs: 2,
                rhs: 3,
                locally_maximal: false
            }
        );
        prof.check_structure(f, phi.characteristic()).unwrap();
        assert_eq!(transpose(&transpose(&prof.m)), prof.m);
    }

    #[test]
    fn invariant_solver() {
        let one = |e_k, e_f, f_f, f_k| Invariants { e_k, e_f, f_f, f_k };
        assert_eq!(solve_invariants(4, 2, 1, 4), vec![one(2, 1, 1, 2)]);
        assert_eq!(solve_invariants(6, 2, 2, 6), vec![one(3, 2, 1, 2)]);
        assert_eq!(
            solve_invariants(6, 3, 2, 6),
            vec![one(1, 1, 2, 6), one(2, 2, 1, 3)]
        );
        assert!(solve_invariants(4, 2, 3, 3).is_empty());
    }
}
