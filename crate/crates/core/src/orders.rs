//! `A`-orders and fractional ideals inside `F̃`, all stored as lattices in
//! the power basis `1, π, ..., π^(s-1)`.

use std::sync::Arc;

use serde::Serialize;

use crate::apoly::{prime_factors, rat_solve, APoly, RatFunc, RatMatrix};
use crate::error::{internal, Error, Result};
use crate::field::fqpoly;
use crate::ftilde::{FElem, FTilde};
use crate::lattice::ALattice;

/// Basis vectors of a lattice as elements of `F̃`.
pub fn lattice_elems(ft: &FTilde, l: &ALattice) -> Vec<FElem> {
    (0..l.dim())
        .map(|j| ft.from_coords(l.column(j), l.den().clone()).unwrap())
        .collect()
}

/// The `A`-span of some elements of `F̃`.
pub fn lattice_span(ft: &FTilde, elems: &[FElem]) -> Result<ALattice> {
    let gens: Vec<Vec<RatFunc>> = elems.iter().map(|e| ft.to_rat(e)).collect();
    ALattice::from_rat_generators(ft.fq(), &gens, ft.s())
}

pub fn lattice_mul(ft: &FTilde, l: &ALattice, m: &ALattice) -> Result<ALattice> {
    let a = lattice_elems(ft, l);
    let b = lattice_elems(ft, m);
    let prods: Vec<FElem> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| ft.mul(x, y)))
        .collect();
    lattice_span(ft, &prods)
}

/// `x · L`.
pub fn lattice_scale(ft: &FTilde, l: &ALattice, x: &FElem) -> Result<ALattice> {
    if x.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let prods: Vec<FElem> = lattice_elems(ft, l).iter().map(|b| ft.mul(b, x)).collect();
    lattice_span(ft, &prods)
}

/// `(I : J) = {x ∈ F̃ : x J ⊆ I}`.
pub fn colon(ft: &FTilde, i: &ALattice, j: &ALattice) -> Result<ALattice> {
    let mut acc: Option<ALattice> = None;
    for b in lattice_elems(ft, j) {
        let part = lattice_scale(ft, i, &ft.inv(&b)?)?;
        acc = Some(match acc {
            None => part,
            Some(a) => a.intersect(ft.fq(), &part)?,
        });
    }
    acc.ok_or(Error::EmptyIdeal)
}

/// `deg χ` of a full-rank lattice's determinant, `deg num - deg den`.
pub fn det_degree(ft: &FTilde, l: &ALattice) -> i64 {
    let d = l.det(ft.fq());
    d.num().deg() - d.den().deg()
}

/// An `A`-order in `F̃`: a full-rank lattice containing 1 and closed under
/// multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    ft: Arc<FTilde>,
    lattice: ALattice,
}

impl Order {
    pub fn new(ft: Arc<FTilde>, lattice: ALattice) -> Result<Self> {
        let o = Order { ft, lattice };
        if !o.contains(&o.ft.one()) {
            return Err(internal("order does not contain 1"));
        }
        let b = o.basis();
        for x in &b {
            for y in &b {
                if !o.contains(&o.ft.mul(x, y)) {
                    return Err(internal("lattice is not closed under multiplication"));
                }
            }
        }
        Ok(o)
    }

    /// `A[π]`, the power-basis lattice.
    pub fn a_pi(ft: Arc<FTilde>) -> Self {
        let s = ft.s();
        Order {
            ft,
            lattice: ALattice::identity(s),
        }
    }

    pub fn ft(&self) -> &FTilde {
        &self.ft
    }

    pub fn ft_arc(&self) -> &Arc<FTilde> {
        &self.ft
    }

    pub fn lattice(&self) -> &ALattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.dim()
    }

    pub fn basis(&self) -> Vec<FElem> {
        lattice_elems(&self.ft, &self.lattice)
    }

    pub fn contains(&self, x: &FElem) -> bool {
        self.lattice.contains(self.ft.fq(), &self.ft.to_rat(x))
    }

    /// Coordinates of `x` in the order's HNF basis.
    pub fn coords(&self, x: &FElem) -> Option<Vec<APoly>> {
        self.lattice.coords(self.ft.fq(), &self.ft.to_rat(x))
    }

    pub fn from_coords(&self, a: &[APoly]) -> FElem {
        let mut acc = self.ft.zero();
        for (c, e) in a.iter().zip(self.basis()) {
            if !c.is_zero() {
                acc = self
                    .ft
                    .add(&acc, &self.ft.scale(&e, &RatFunc::from_poly(c.clone())));
            }
        }
        acc
    }

    /// `table[i][j]` holds the coordinates of `b_i b_j`.
    pub fn mult_table(&self) -> Vec<Vec<Vec<APoly>>> {
        let b = self.basis();
        b.iter()
            .map(|x| {
                b.iter()
                    .map(|y| self.coords(&self.ft.mul(x, y)).expect("order is closed"))
                    .collect()
            })
            .collect()
    }

    /// `χ(self / sub)` for a sublattice.
    pub fn index_of(&self, sub: &ALattice) -> Result<APoly> {
        self.lattice.index(self.ft.fq(), sub)
    }

    /// Whether `l` is a (fractional) ideal: closed under the order's basis.
    pub fn is_ideal(&self, l: &ALattice) -> bool {
        let f = self.ft.fq();
        let b = self.basis();
        lattice_elems(&self.ft, l).iter().all(|x| {
            b.iter()
                .all(|y| l.contains(f, &self.ft.to_rat(&self.ft.mul(x, y))))
        })
    }

    /// Whether `l ⊆ self`.
    pub fn is_integral(&self, l: &ALattice) -> bool {
        self.lattice.contains_lattice(self.ft.fq(), l)
    }

    /// `χ(O/I)` for an integral ideal.
    pub fn ideal_norm(&self, i: &ALattice) -> Result<APoly> {
        self.index_of(i)
    }

    pub fn principal(&self, x: &FElem) -> Result<ALattice> {
        lattice_scale(&self.ft, &self.lattice, x)
    }

    pub fn ideal_mul(&self, i: &ALattice, j: &ALattice) -> Result<ALattice> {
        lattice_mul(&self.ft, i, j)
    }

    pub fn colon(&self, i: &ALattice, j: &ALattice) -> Result<ALattice> {
        colon(&self.ft, i, j)
    }

    /// `O_I = (I : I)`.
    pub fn multiplicator_ring(&self, i: &ALattice) -> Result<Order> {
        let l = colon(&self.ft, i, i)?;
        Order::new(self.ft.clone(), l)
    }

    /// `I` and `J` are weakly equivalent iff `1 ∈ (I:J)(J:I)`.
    pub fn weakly_equivalent(&self, i: &ALattice, j: &ALattice) -> Result<bool> {
        let p = lattice_mul(&self.ft, &colon(&self.ft, i, j)?, &colon(&self.ft, j, i)?)?;
        Ok(p.contains(self.ft.fq(), &self.ft.to_rat(&self.ft.one())))
    }

    /// Dual lattice under the bilinear form `(x, y) ↦ λ(xy)`.
    pub fn dual(&self, l: &ALattice, form: DualForm) -> Result<ALattice> {
        let ft = &*self.ft;
        let f = ft.fq();
        if form == DualForm::Trace && !ft.is_separable() {
            return Err(Error::InseparableExtension);
        }
        let b = lattice_elems(ft, l);
        let s = b.len();
        let lambda = |x: &FElem| -> RatFunc {
            match form {
                DualForm::Trace => ft.trace(x),
                DualForm::TopCoefficient => {
                    RatFunc::new(f, x.numer()[s - 1].clone(), x.den().clone()).unwrap()
                }
            }
        };
        let gram: RatMatrix = (0..s)
            .map(|i| (0..s).map(|j| lambda(&ft.mul(&b[i], &b[j]))).collect())
            .collect();
        let mut dual = Vec::with_capacity(s);
        for i in 0..s {
            let e: Vec<RatFunc> = (0..s)
                .map(|j| {
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect();
            let c = rat_solve(f, &gram, &e).map_err(|_| Error::InseparableExtension)?;
            let mut acc = ft.zero();
            for (cj, bj) in c.iter().zip(&b) {
                if !cj.is_zero() {
                    acc = ft.add(&acc, &ft.scale(bj, cj));
                }
            }
            dual.push(acc);
        }
        lattice_span(ft, &dual)
    }

    /// Gorenstein data from `C = O^∨ (O : O^∨)`.
    pub fn gorenstein(&self, form: DualForm) -> Result<GorensteinReport> {
        let dual = self.dual(&self.lattice, form)?;
        let c = lattice_mul(&self.ft, &dual, &colon(&self.ft, &self.lattice, &dual)?)?;
        let chi = self.index_of(&c)?;
        let bad_primes = if chi.is_one() {
            Vec::new()
        } else {
            prime_factors(self.ft.fq(), &chi)
        };
        Ok(GorensteinReport {
            form,
            defect_index: chi.clone(),
            gorenstein: chi.is_one(),
            bad_primes,
        })
    }

    /// Gorenstein test at a prime via the trace form.
    pub fn is_gorenstein_at(&self, l: &APoly) -> Result<bool> {
        let rep = self.gorenstein(DualForm::Trace)?;
        Ok(!l.divides(self.ft.fq(), &rep.defect_index))
    }

    pub fn is_gorenstein(&self) -> Result<bool> {
        Ok(self.gorenstein(DualForm::Trace)?.gorenstein)
    }

    /// Gorenstein verdict with the trace form when `F̃/F` is separable and
    /// the top power-basis coefficient otherwise.
    pub fn gorenstein_any(&self) -> Result<GorensteinReport> {
        if self.ft.is_separable() {
            self.gorenstein(DualForm::Trace)
        } else {
            self.gorenstein(DualForm::TopCoefficient)
        }
    }

    /// All integral ideals `I` with `deg χ(O/I) <= max_deg`, each once.
    pub fn integral_ideals(&self, max_deg: usize, limit: u128) -> Result<Vec<ALattice>> {
        let f = self.ft.fq();
        let s = self.rank();
        let q = f.q() as u128;
        let table = self.mult_table();
        let mut out = Vec::new();
        let mut tuples = Vec::new();
        degree_tuples(s, max_deg, &mut Vec::new(), &mut tuples);
        let mut total: u128 = 0;
        for t in &tuples {
            let mut c: u128 = 1;
            for (i, &d) in t.iter().enumerate() {
                c = c.saturating_mul(q.saturating_pow((d * (s - i)) as u32));
            }
            total = total.saturating_add(c);
        }
        if total > limit {
            return Err(Error::TooLarge {
                candidates: total,
                limit,
            });
        }
        for t in tuples {
            // d_0 O ⊆ I forces every diagonal degree to be at most d_0
            if t.iter().any(|&d| d > t[0]) {
                continue;
            }
            let diag_choices: Vec<Vec<APoly>> = t
                .iter()
                .map(|&d| {
                    (0..q.pow(d as u32))
                        .map(|idx| APoly::new(fqpoly::monic_from_index(f, d, idx as u64)))
                        .collect()
                })
                .collect();
            let mut diag = vec![APoly::zero(); s];
            enumerate_diagonals(&diag_choices, 0, &mut diag, &mut |diag| {
                if diag.iter().any(|d| !d.divides(f, &diag[0])) {
                    return;
                }
                let mut slots = Vec::new();
                for i in 0..s {
                    for j in i + 1..s {
                        slots.push((i, j, diag[i].deg().max(0) as usize));
                    }
                }
                let mut h: Vec<Vec<APoly>> = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| {
                                if i == j {
                                    diag[i].clone()
                                } else {
                                    APoly::zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                enumerate_offdiag(f, &slots, 0, &mut h, &mut |h| {
                    if is_ideal_hnf(f, h, &table) {
                        out.push(h.clone());
                    }
                });
            });
        }
        let mut lattices = Vec::with_capacity(out.len());
        for h in out {
            let gens: Vec<Vec<APoly>> = (0..s)
                .map(|j| (0..s).map(|i| h[i][j].clone()).collect())
                .collect();
            let elems: Vec<FElem> = gens.iter().map(|g| self.from_coords(g)).collect();
            lattices.push(lattice_span(&self.ft, &elems)?);
        }
        Ok(lattices)
    }
}

fn degree_tuples(s: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == s {
        out.push(cur.clone());
        return;
    }
    for d in 0..=budget {
        cur.push(d);
        degree_tuples(s, budget - d, cur, out);
        cur.pop();
    }
}

fn enumerate_diagonals(
    choices: &[Vec<APoly>],
    i: usize,
    cur: &mut Vec<APoly>,
    visit: &mut dyn FnMut(&[APoly]),
) {
    if i == choices.len() {
        visit(cur);
        return;
    }
    for c in &choices[i] {
        cur[i] = c.clone();
        enumerate_diagonals(choices, i + 1, cur, visit);
    }
}

fn enumerate_offdiag(
    f: &crate::field::FqField,
    slots: &[(usize, usize, usize)],
    idx: usize,
    h: &mut Vec<Vec<APoly>>,
    visit: &mut dyn FnMut(&Vec<Vec<APoly>>),
) {
    if idx == slots.len() {
        visit(h);
        return;
    }
    let (i, j, d) = slots[idx];
    let count = (f.q() as u64).pow(d as u32);
    for v in 0..count {
        h[i][j] = APoly::new(fqpoly::from_index(f, d, v));
        enumerate_offdiag(f, slots, idx + 1, h, visit);
    }
    h[i][j] = APoly::zero();
}

/// Membership of an integral vector in the column span of an upper
/// triangular matrix, by exact back substitution.
fn in_hnf(f: &crate::field::FqField, h: &[Vec<APoly>], v: &[APoly]) -> bool {
    let s = h.len();
    let mut rest = v.to_vec();
    for i in (0..s).rev() {
        let Some(x) = rest[i].div_exact(f, &h[i][i]) else {
            return false;
        };
        if x.is_zero() {
            continue;
        }
        for (r, row) in rest.iter_mut().zip(h).take(i + 1) {
            *r = r.sub(f, &x.mul(f, &row[i]));
        }
    }
    true
}

fn is_ideal_hnf(f: &crate::field::FqField, h: &[Vec<APoly>], table: &[Vec<Vec<APoly>>]) -> bool {
    let s = h.len();
    for j in 0..s {
        for b in table.iter().skip(1) {
            // b_k · column j
            let mut v = vec![APoly::zero(); s];
            for (l, row) in h.iter().enumerate() {
                let c = &row[j];
                if c.is_zero() {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(&b[l]) {
                    *vi = vi.add(f, &c.mul(f, bi));
                }
            }
            if !in_hnf(f, h, &v) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DualForm {
    /// `Tr_{F̃/F}`; requires `F̃/F` separable.
    Trace,
    /// The coefficient of `π^(s-1)` in the power basis.
    TopCoefficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub form: DualForm,
    /// `χ(O / O^∨(O : O^∨))`.
    pub defect_index: APoly,
    pub gorenstein: bool,
    pub bad_primes: Vec<APoly>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FqField;

    fn ft38() -> Arc<FTilde> {
        let f = FqField::prime(2).unwrap();
        let m = vec![
            APoly::from_ints(&f, &[1, 1, 0, 0, 1]),
            APoly::one(),
            APoly::t(),
            APoly::one(),
        ];
        Arc::new(FTilde::new(f, m).unwrap())
    }

    #[test]
    fn a_pi_is_gorenstein_and_ideals_close() {
        let ft = ft38();
        let o = Order::a_pi(ft.clone());
        assert!(o.is_gorenstein().unwrap());
        let e = o.lattice().clone();
        assert_eq!(o.colon(&e, &e).unwrap(), e);
        let ideals = o.integral_ideals(1, 1_000_000).unwrap();
        assert!(ideals.contains(&e));
        for i in &ideals {
            assert!(o.is_ideal(i));
            let chi = o.ideal_norm(i).unwrap();
            let scaled = lattice_scale(&ft, &e, &ft.from_apoly(&chi)).unwrap();
            assert!(i.contains_lattice(ft.fq(), &scaled));
        }
    }

    #[test]
    fn example_order_is_not_gorenstein_at_t_plus_one() {
        let ft = ft38();
        let f = ft.fq().clone();
        let t1 = APoly::from_ints(&f, &[1, 1]);
        let p1 = ft.add(&ft.pi(), &ft.one());
        let e3 = ft.scale(
            &ft.mul(&p1, &p1),
            &RatFunc::new(&f, APoly::one(), t1.clone()).unwrap(),
        );
        let l = lattice_span(&ft, &[ft.one(), p1.clone(), e3.clone()]).unwrap();
        let o = Order::new(ft.clone(), l).unwrap();
        assert_eq!(o.index_of(&ALattice::identity(3)).unwrap(), t1);
        assert!(!o.is_gorenstein_at(&t1).unwrap());
        assert!(o.is_gorenstein_at(&APoly::t()).unwrap());
        let i = lattice_span(
            &ft,
            &[p1.clone(), e3.clone(), ft.from_apoly(&t1.pow(&f, 3))],
        )
        .unwrap();
        assert!(o.is_ideal(&i));
        assert_eq!(o.ideal_norm(&i).unwrap(), t1.pow(&f, 3));
        assert!(o.weakly_equivalent(&i, &i).unwrap());
    }
}
