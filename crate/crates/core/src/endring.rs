//! `End_k(φ)` as an `A`-order in `F̃ = F(π)`, for modules whose Frobenius
//! generates a field of degree `r` over `F`.

use std::sync::Arc;

use crate::apoly::{rat_solve, APoly, RatFunc};
use crate::drinfeld::DrinfeldModule;
use crate::error::{internal, Error, Result};
use crate::field::fq::{Fq, FqField};
use crate::field::linalg::{self, Span};
use crate::field::tower::KElem;
use crate::frobenius::{eval_at_pi, shift_right, skew_coords, FrobeniusProfile};
use crate::ftilde::{FElem, FTilde};
use crate::lattice::{hnf, ALattice};
use crate::orders::{det_degree, lattice_elems, lattice_span, Order};
use crate::skew::SkewPoly;

/// A basis element over `F_q[π]` with its τ-degree.
#[derive(Clone, Debug)]
struct PiBasisElem {
    skew: SkewPoly,
    degree: usize,
    elem: FElem,
}

#[derive(Clone, Debug)]
pub struct EndRing {
    phi: DrinfeldModule,
    profile: FrobeniusProfile,
    ft: Arc<FTilde>,
    pi_basis: Vec<PiBasisElem>,
    order: Order,
    skew_basis: Vec<SkewPoly>,
}

/// Outcome of a linear equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinEquiv {
    /// `I = J u`.
    Yes(FElem),
    No,
    /// The search would need isogenies of τ-degree above the bound.
    Unknown {
        needed_degree: i64,
    },
}

impl LinEquiv {
    pub fn label(&self) -> &'static str {
        match self {
            LinEquiv::Yes(_) => "yes",
            LinEquiv::No => "no",
            LinEquiv::Unknown { .. } => "unknown",
        }
    }
}

fn lead_vec(k_n: usize, c: &KElem) -> Vec<Fq> {
    (0..k_n).map(|i| c.coeff(i)).collect()
}

impl EndRing {
    pub fn compute(phi: &DrinfeldModule) -> Result<Self> {
        let profile = FrobeniusProfile::compute(phi)?;
        let (s, r) = (profile.s, profile.r);
        if s != r {
            return Err(Error::NonCommutativeEndomorphismRing { s, r });
        }
        let k = phi.tower();
        let f = k.fq().clone();
        let n = k.n();
        let nk = profile.nk;
        let ft = Arc::new(FTilde::new(f.clone(), profile.m.clone())?);

        // successive minima are bounded by those of A[π] = ⊕ F_q[π] T^j
        let cap = r * nk.saturating_sub(1);
        let len = cap + r + 1;
        let mut cols = Vec::with_capacity((cap + 1) * n);
        for l in 0..=cap {
            for c in 0..n {
                let mut e = [Fq::ZERO; 16];
                e[c] = Fq::ONE;
                let u = SkewPoly::monomial(k.from_coeffs(&e[..n])?, l);
                let comm = u.mul(k, phi.phi_t()).sub(k, &phi.phi_t().mul(k, &u));
                cols.push(skew_coords(k, &comm, len));
            }
        }
        let rows: Vec<Vec<Fq>> = (0..len * n)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        let ker = linalg::kernel(&f, &rows, cols.len());

        // echelon with the highest τ-degree first
        let width = (cap + 1) * n;
        let perm = |j: usize| width - 1 - j;
        let mut ech: Vec<Vec<Fq>> = ker
            .iter()
            .map(|v| (0..width).map(|j| v[perm(j)]).collect())
            .collect();
        let pivots = linalg::rref(&f, &mut ech);
        let mut elems: Vec<(usize, SkewPoly)> = Vec::with_capacity(ech.len());
        for (row, &p) in ech.iter().zip(&pivots) {
            let coeffs = (0..=cap)
                .map(|l| {
                    let v: Vec<Fq> = (0..n).map(|c| row[perm(l * n + c)]).collect();
                    k.from_coeffs(&v)
                })
                .collect::<Result<Vec<KElem>>>()?;
            elems.push((cap - p / n, SkewPoly::new(coeffs)));
        }
        elems.sort_by_key(|(d, _)| *d);

        let mut spans: Vec<Span> = (0..n).map(|_| Span::new()).collect();
        let mut chosen: Vec<(usize, SkewPoly)> = Vec::new();
        for (deg, u) in elems {
            debug_assert_eq!(u.degree(), Some(deg));
            if spans[deg % n].insert(&f, &lead_vec(n, &u.lead())) {
                chosen.push((deg, u));
            }
        }
        if chosen.len() != nk {
            return Err(internal(format!(
                "found {} basis elements over F_q[π], expected {nk}",
                chosen.len()
            )));
        }
        let expected: usize = chosen.iter().map(|(d, _)| (cap - d) / n + 1).sum();
        if expected != ker.len() {
            return Err(internal(format!(
                "centralizer dimension {} differs from {expected}",
                ker.len()
            )));
        }

        let mut ring = EndRing {
            phi: phi.clone(),
            profile,
            ft: ft.clone(),
            pi_basis: chosen
                .into_iter()
                .map(|(degree, skew)| PiBasisElem {
                    skew,
                    degree,
                    elem: ft.zero(),
                })
                .collect(),
            order: Order::a_pi(ft.clone()),
            skew_basis: Vec::new(),
        };

        // T^j = sum_i P_ij(π) b_i, then invert over F_q(π)
        let tp = phi.t_powers(nk);
        let mut p: Vec<Vec<RatFunc>> = vec![Vec::with_capacity(nk); nk];
        for u in &tp {
            let c = ring
                .reduce_pi(u)
                .ok_or_else(|| internal("φ_{T^j} does not reduce"))?;
            for (row, x) in p.iter_mut().zip(c) {
                row.push(RatFunc::from_poly(x));
            }
        }
        for i in 0..nk {
            let e: Vec<RatFunc> = (0..nk)
                .map(|j| {
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect();
            let y = rat_solve(&f, &p, &e)?;
            let mut acc = ft.zero();
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let num = pi_poly(&ft, yj.num());
                let den = ft.inv(&pi_poly(&ft, yj.den()))?;
                let tj = ft.from_apoly(&APoly::monomial(Fq::ONE, j));
                acc = ft.add(&acc, &ft.mul(&ft.mul(&num, &den), &tj));
            }
            ring.pi_basis[i].elem = acc;
        }
        for b in &ring.pi_basis {
            if ring.to_skew(&b.elem)? != b.skew {
                return Err(internal("basis element does not round-trip"));
            }
        }

        let gens: Vec<FElem> = ring
            .pi_basis
            .iter()
            .flat_map(|b| {
                (0..s)
                    .map(|a| ft.mul(&ft.pi_pow(a), &b.elem))
                    .collect::<Vec<_>>()
            })
            .collect();
        let lattice = lattice_span(&ft, &gens)?;
        ring.order = Order::new(ft.clone(), lattice)?;
        if !ring.order.is_integral(&ALattice::identity(s)) {
            return Err(internal("End does not contain A[π]"));
        }
        ring.skew_basis = ring
            .order
            .basis()
            .iter()
            .map(|e| ring.to_skew(e))
            .collect::<Result<Vec<_>>>()?;
        for u in &ring.skew_basis {
            if u.mul(k, phi.phi_t()) != phi.phi_t().mul(k, u) {
                return Err(internal("basis element does not commute with φ_T"));
            }
        }
        Ok(ring)
    }

    pub fn module(&self) -> &DrinfeldModule {
        &self.phi
    }

    pub fn profile(&self) -> &FrobeniusProfile {
        &self.profile
    }

    pub fn ft(&self) -> &FTilde {
        &self.ft
    }

    pub fn ft_arc(&self) -> &Arc<FTilde> {
        &self.ft
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn lattice(&self) -> &ALattice {
        self.order.lattice()
    }

    pub fn rank(&self) -> usize {
        self.order.rank()
    }

    /// The HNF basis as elements of `F̃` (the first one is 1).
    pub fn basis(&self) -> Vec<FElem> {
        self.order.basis()
    }

    /// The HNF basis as isogenies `φ → φ`.
    pub fn skew_basis(&self) -> &[SkewPoly] {
        &self.skew_basis
    }

    /// τ-degrees of the basis over `F_q[π]`.
    pub fn pi_degrees(&self) -> Vec<usize> {
        self.pi_basis.iter().map(|b| b.degree).collect()
    }

    pub fn pi_basis_skew(&self) -> Vec<SkewPoly> {
        self.pi_basis.iter().map(|b| b.skew.clone()).collect()
    }

    pub fn mult_table(&self) -> Vec<Vec<Vec<APoly>>> {
        self.order.mult_table()
    }

    /// `χ(End / A[π])`.
    pub fn index_over_a_pi(&self) -> Result<APoly> {
        self.order.index_of(&ALattice::identity(self.rank()))
    }

    /// Coordinates over `F_q[π]` (as polynomials in `π`) of a skew polynomial
    /// in `End`, or `None` if it is not an endomorphism.
    fn reduce_pi(&self, u: &SkewPoly) -> Option<Vec<APoly>> {
        let k = self.phi.tower();
        let f = k.fq();
        let n = k.n();
        let mut out: Vec<Vec<Fq>> = vec![Vec::new(); self.pi_basis.len()];
        let mut rest = u.clone();
        while let Some(deg) = rest.degree() {
            let idx: Vec<usize> = (0..self.pi_basis.len())
                .filter(|&i| {
                    self.pi_basis[i].degree % n == deg % n && self.pi_basis[i].degree <= deg
                })
                .collect();
            let m: Vec<Vec<Fq>> = (0..n)
                .map(|row| {
                    idx.iter()
                        .map(|&i| self.pi_basis[i].skew.lead().coeff(row))
                        .collect()
                })
                .collect();
            let x = linalg::solve(f, &m, &lead_vec(n, &rest.lead()), idx.len())?;
            for (&i, &c) in idx.iter().zip(&x) {
                if c.is_zero() {
                    continue;
                }
                let e = (deg - self.pi_basis[i].degree) / n;
                let term = shift_right(&self.pi_basis[i].skew, e * n).left_scale(k, &k.from_fq(c));
                rest = rest.sub(k, &term);
                let v = &mut out[i];
                if v.len() <= e {
                    v.resize(e + 1, Fq::ZERO);
                }
                v[e] = f.add(v[e], c);
            }
            if rest.degree().is_some_and(|d| d >= deg) {
                return None;
            }
        }
        Some(out.into_iter().map(APoly::new).collect())
    }

    /// The element of `F̃` realised by an endomorphism.
    pub fn from_skew(&self, u: &SkewPoly) -> Result<FElem> {
        let c = self
            .reduce_pi(u)
            .ok_or_else(|| Error::InvalidInput("not an endomorphism of φ".into()))?;
        let ft = &*self.ft;
        let mut acc = ft.zero();
        for (ci, b) in c.iter().zip(&self.pi_basis) {
            if !ci.is_zero() {
                acc = ft.add(&acc, &ft.mul(&pi_poly(ft, ci), &b.elem));
            }
        }
        Ok(acc)
    }

    /// The isogeny realising `x ∈ End`: `u φ_D = sum φ_{X_i} π^i` for
    /// `x = X / D`.
    pub fn to_skew(&self, x: &FElem) -> Result<SkewPoly> {
        let k = self.phi.tower();
        let y = eval_at_pi(&self.phi, x.numer());
        let (q, rem) = y.rdivmod(k, &self.phi.eval(x.den()))?;
        if !rem.is_zero() {
            return Err(Error::InvalidInput("element is not in End".into()));
        }
        Ok(q)
    }

    /// Coordinates in the HNF basis of `End`.
    pub fn coords(&self, x: &FElem) -> Option<Vec<APoly>> {
        self.order.coords(x)
    }

    pub fn from_coords(&self, a: &[APoly]) -> FElem {
        self.order.from_coords(a)
    }

    /// The ideal generated by elements given in `End`-coordinates.
    pub fn ideal_from_coords(&self, gens: &[Vec<APoly>]) -> Result<ALattice> {
        let s = self.rank();
        let mut elems = Vec::new();
        let basis = self.basis();
        for g in gens {
            if g.len() != s {
                return Err(Error::InvalidInput(format!(
                    "generator with {} coordinates, expected {s}",
                    g.len()
                )));
            }
            let x = self.from_coords(g);
            if x.is_zero() {
                continue;
            }
            elems.extend(basis.iter().map(|b| self.ft.mul(b, &x)));
        }
        if elems.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        lattice_span(&self.ft, &elems).map_err(|e| match e {
            Error::RankError { .. } => Error::EmptyIdeal,
            e => e,
        })
    }

    /// `End`-coordinates of the HNF basis of a lattice, when integral.
    pub fn ideal_coords(&self, l: &ALattice) -> Option<Vec<Vec<APoly>>> {
        lattice_elems(&self.ft, l)
            .iter()
            .map(|x| self.coords(x))
            .collect()
    }

    /// All `x ∈ End` of τ-degree at most `deg`, as an `F_q`-basis in
    /// increasing degree.
    fn degree_space(&self, deg: usize) -> Vec<(usize, FElem)> {
        let n = self.phi.n();
        let mut out = Vec::new();
        for b in &self.pi_basis {
            let mut e = 0;
            while b.degree + n * e <= deg {
                out.push((b.degree + n * e, self.ft.mul(&self.ft.pi_pow(e), &b.elem)));
                e += 1;
            }
        }
        out
    }

    /// Decides whether `I = J u` for some `u ∈ F̃^×`. Candidates are the
    /// isogenies in `c (I : J)` of τ-degree `s deg c + deg χ(I) - deg χ(J)`;
    /// the answer is `Unknown` when that degree exceeds `bound`.
    pub fn lin_equiv(&self, i: &ALattice, j: &ALattice, bound: usize) -> Result<LinEquiv> {
        let ft = &*self.ft;
        let f = ft.fq();
        let s = self.rank();
        if !self.order.weakly_equivalent(i, j)? {
            return Ok(LinEquiv::No);
        }
        let l = self.order.colon(i, j)?;
        let c = l.sum(f, self.lattice())?.index(f, self.lattice())?;
        let dn = det_degree(ft, i) - det_degree(ft, j);
        let target = s as i64 * c.deg() + dn;
        if target < 0 {
            return Ok(LinEquiv::No);
        }
        if target > bound as i64 {
            return Ok(LinEquiv::Unknown {
                needed_degree: target,
            });
        }
        let target = target as usize;
        let cl = l.scale(f, &RatFunc::from_poly(c.clone()))?;
        let h = self
            .ideal_coords(&cl)
            .ok_or_else(|| internal("c (I:J) is not integral"))?;
        let h = hnf(f, &h, s)?;
        let cands = self.degree_space(target);
        let mut cols = Vec::with_capacity(cands.len());
        for (_, x) in &cands {
            let a = self
                .coords(x)
                .ok_or_else(|| internal("degree space element outside End"))?;
            cols.push(flatten(&h, &reduce_mod_hnf(f, &h, a)));
        }
        let height = cols.first().map_or(0, |c| c.len());
        let rows: Vec<Vec<Fq>> = (0..height)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect();
        let ker = if height == 0 {
            (0..cands.len())
                .map(|i| {
                    (0..cands.len())
                        .map(|j| if i == j { Fq::ONE } else { Fq::ZERO })
                        .collect()
                })
                .collect()
        } else {
            linalg::kernel(f, &rows, cands.len())
        };
        let Some(v) = ker.iter().find(|v| {
            v.iter()
                .zip(&cands)
                .any(|(x, (d, _))| !x.is_zero() && *d == target)
        }) else {
            return Ok(LinEquiv::No);
        };
        let mut w = ft.zero();
        for (x, (_, e)) in v.iter().zip(&cands) {
            if !x.is_zero() {
                w = ft.add(&w, &ft.scale(e, &RatFunc::from_poly(APoly::constant(*x))));
            }
        }
        let u = ft.scale(&w, &RatFunc::new(f, APoly::one(), c)?);
        if self.order.ideal_mul(j, &self.order.principal(&u)?)? != *i {
            return Err(internal("linear equivalence witness fails"));
        }
        Ok(LinEquiv::Yes(u))
    }

    pub fn is_principal(&self, i: &ALattice, bound: usize) -> Result<LinEquiv> {
        self.lin_equiv(i, self.lattice(), bound)
    }
}

/// `sum c_l π^l` in `F̃` for a polynomial in `π` stored as an `APoly`.
fn pi_poly(ft: &FTilde, c: &APoly) -> FElem {
    let mut acc = ft.zero();
    for (l, x) in c.coeffs().iter().enumerate() {
        if !x.is_zero() {
            acc = ft.add(
                &acc,
                &ft.scale(&ft.pi_pow(l), &RatFunc::from_poly(APoly::constant(*x))),
            );
        }
    }
    acc
}

/// Canonical representative of `a` modulo the columns of an upper
/// triangular basis; linear over `F_q`.
pub(crate) fn reduce_mod_hnf(f: &FqField, h: &[Vec<APoly>], mut a: Vec<APoly>) -> Vec<APoly> {
    for i in (0..h.len()).rev() {
        let q = a[i].divrem(f, &h[i][i]).unwrap().0;
        if q.is_zero() {
            continue;
        }
        for (x, row) in a.iter_mut().zip(h).take(i + 1) {
            *x = x.sub(f, &q.mul(f, &row[i]));
        }
    }
    a
}

/// The `F_q`-coordinates of a reduced vector, `deg h_ii` per entry.
pub(crate) fn flatten(h: &[Vec<APoly>], a: &[APoly]) -> Vec<Fq> {
    let mut out = Vec::new();
    for (i, x) in a.iter().enumerate() {
        let d = h[i][i].deg().max(0) as usize;
        out.extend((0..d).map(|j| x.coeff(j)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::tower::FieldTower;
    use crate::field::FqField;

    fn ex38() -> DrinfeldModule {
        let fq = FqField::prime(2).unwrap();
        let g: Vec<_> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        let k = Arc::new(FieldTower::new(fq, &g).unwrap().with_symbol("t"));
        let t = k.gen();
        DrinfeldModule::from_coeffs(k.clone(), vec![t, KElem::ZERO, k.pow(&t, 3), k.one()]).unwrap()
    }

    #[test]
    fn example_end_ring() {
        let phi = ex38();
        let e = EndRing::compute(&phi).unwrap();
        let k = phi.tower();
        let f = k.fq();
        assert_eq!(e.rank(), 3);
        assert_eq!(e.index_over_a_pi().unwrap(), APoly::from_ints(f, &[1, 1]));
        let one_pi = SkewPoly::one(k).add(k, &SkewPoly::tau_pow(k, 4));
        let x = e.from_skew(&one_pi).unwrap();
        assert!(e.order().contains(&x));
        assert_eq!(e.to_skew(&x).unwrap(), one_pi);
        for (b, u) in e.basis().iter().zip(e.skew_basis()) {
            assert_eq!(&e.to_skew(b).unwrap(), u);
            assert_eq!(&e.from_skew(u).unwrap(), b);
        }
        assert!(e.from_skew(&SkewPoly::tau_pow(k, 1)).is_err());
        let all = e.lattice().clone();
        assert!(matches!(
            e.is_principal(&all, 64).unwrap(),
            LinEquiv::Yes(_)
        ));
    }
}
