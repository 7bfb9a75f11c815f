//! The ideal action `I ↦ I*φ`, annihilators of `φ[I]` and kernel ideals.

use crate::apoly::{APoly, RatFunc};
use crate::drinfeld::DrinfeldModule;
use crate::endring::EndRing;
use crate::error::{internal, Error, Result};
use crate::field::{linalg, Fq};
use crate::frobenius::skew_coords;
use crate::ftilde::FElem;
use crate::lattice::ALattice;
use crate::orders::{lattice_elems, lattice_span, Order};
use crate::skew::{rgcd_with_certificates, SkewPoly};

#[derive(Clone, Debug)]
pub struct IdealAction {
    /// Monic generator of `k{τ} I`.
    pub u: SkewPoly,
    /// `I*φ`, with `ψ_T u = u φ_T`.
    pub psi: DrinfeldModule,
    /// Skew realisations of the HNF basis of `I`.
    pub generators: Vec<SkewPoly>,
    /// `u = sum certificates_i · generators_i`.
    pub certificates: Vec<SkewPoly>,
}

/// Scales a fractional ideal into `End` by its least common denominator.
pub fn make_integral(e: &EndRing, i: &ALattice) -> Result<ALattice> {
    let f = e.ft().fq();
    if e.order().is_integral(i) {
        return Ok(i.clone());
    }
    let c = i.sum(f, e.lattice())?.index(f, e.lattice())?;
    let scaled = i.scale(f, &RatFunc::from_poly(c))?;
    if !e.order().is_integral(&scaled) {
        return Err(internal("scaled ideal is not integral"));
    }
    Ok(scaled)
}

/// `I*φ` for an integral ideal `I` of `End(φ)`.
pub fn act(e: &EndRing, i: &ALattice) -> Result<IdealAction> {
    let phi = e.module();
    let k = phi.tower();
    if !e.order().is_integral(i) {
        return Err(Error::InvalidInput("ideal is not integral".into()));
    }
    let generators = lattice_elems(e.ft(), i)
        .iter()
        .map(|x| e.to_skew(x))
        .collect::<Result<Vec<_>>>()?;
    let (u, certificates) = rgcd_with_certificates(k, &generators)?;
    let (psi_t, rem) = u.mul(k, phi.phi_t()).rdivmod(k, &u)?;
    if !rem.is_zero() {
        return Err(internal("u_I φ_T is not right divisible by u_I"));
    }
    let psi = DrinfeldModule::new(phi.tower_arc().clone(), psi_t)?;
    if psi.t() != phi.t() || psi.rank() != phi.rank() {
        return Err(internal("I*φ has the wrong characteristic or rank"));
    }
    Ok(IdealAction {
        u,
        psi,
        generators,
        certificates,
    })
}

/// `J = k{τ}I ∩ End`, computed modulo `χ(E/I)·E`.
pub fn annihilator(e: &EndRing, i: &ALattice, u: &SkewPoly) -> Result<ALattice> {
    let phi = e.module();
    let k = phi.tower();
    let f = k.fq();
    let ft = e.ft();
    let chi = e.order().ideal_norm(i)?;
    if chi.is_one() {
        return Ok(e.lattice().clone());
    }
    let du = u.degree().ok_or(Error::EmptyIdeal)?;
    let basis = e.basis();
    let skew = e.skew_basis();
    let dc = chi.degree().unwrap();
    let tp = phi.t_powers(dc);
    let mut elems = Vec::with_capacity(dc * basis.len());
    let mut cols = Vec::with_capacity(dc * basis.len());
    for (a, ta) in tp.iter().enumerate() {
        for (b, sb) in basis.iter().zip(skew) {
            let rem = ta.mul(k, sb).rdivmod(k, u)?.1;
            cols.push(skew_coords(k, &rem, du));
            elems.push(ft.scale(b, &RatFunc::from_poly(APoly::monomial(Fq::ONE, a))));
        }
    }
    let height = du * k.n();
    let rows: Vec<Vec<_>> = (0..height)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let ker = if height == 0 {
        (0..cols.len())
            .map(|i| {
                (0..cols.len())
                    .map(|j| if i == j { Fq::ONE } else { Fq::ZERO })
                    .collect()
            })
            .collect()
    } else {
        linalg::kernel(f, &rows, cols.len())
    };
    let mut gens: Vec<FElem> = basis
        .iter()
        .map(|b| ft.scale(b, &RatFunc::from_poly(chi.clone())))
        .collect();
    for v in ker {
        let mut acc = ft.zero();
        for (x, el) in v.iter().zip(&elems) {
            if !x.is_zero() {
                acc = ft.add(
                    &acc,
                    &ft.scale(el, &RatFunc::from_poly(APoly::constant(*x))),
                );
            }
        }
        gens.push(acc);
    }
    let j = lattice_span(ft, &gens)?;
    if !j.contains_lattice(f, i) {
        return Err(internal("annihilator does not contain I"));
    }
    Ok(j)
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub is_kernel: bool,
    pub annihilator: ALattice,
    /// An element of `J \ I`; the generator of `J ∩ A` when that one works.
    pub witness: Option<FElem>,
}

pub fn kernel_test(e: &EndRing, i: &ALattice) -> Result<KernelReport> {
    let act = act(e, i)?;
    kernel_test_with(e, i, &act.u)
}

pub fn kernel_test_with(e: &EndRing, i: &ALattice, u: &SkewPoly) -> Result<KernelReport> {
    let ft = e.ft();
    let f = ft.fq();
    let j = annihilator(e, i, u)?;
    if j == *i {
        return Ok(KernelReport {
            is_kernel: true,
            annihilator: j,
            witness: None,
        });
    }
    let g = ft.from_ratfunc(&j.first_axis_generator(f));
    let witness = if !i.contains(f, &ft.to_rat(&g)) {
        g
    } else {
        lattice_elems(ft, &j)
            .into_iter()
            .find(|x| !i.contains(f, &ft.to_rat(x)))
            .ok_or_else(|| internal("J ≠ I but every basis element of J lies in I"))?
    };
    Ok(KernelReport {
        is_kernel: false,
        annihilator: j,
        witness: Some(witness),
    })
}

/// `O_I` against an independently computed `End(I*φ)`.
#[derive(Clone, Debug)]
pub struct EndComparison {
    pub multiplicator_ring: Order,
    pub end_psi: EndRing,
    pub contained: bool,
    pub equal: bool,
}

pub fn compare_end(e: &EndRing, i: &ALattice, act: &IdealAction) -> Result<EndComparison> {
    let f = e.ft().fq();
    let oi = e.order().multiplicator_ring(i)?;
    let end_psi = EndRing::compute(&act.psi)?;
    if end_psi.ft().m() != e.ft().m() {
        return Err(internal("I*φ has a different Frobenius minimal polynomial"));
    }
    let contained = end_psi.lattice().contains_lattice(f, oi.lattice());
    let equal = end_psi.lattice() == oi.lattice();
    Ok(EndComparison {
        multiplicator_ring: oi,
        end_psi,
        contained,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::tower::{FieldTower, KElem};
    use crate::field::FqField;
    use std::sync::Arc;

    #[test]
    fn example_non_kernel_ideal() {
        let fq = FqField::prime(2).unwrap();
        let g: Vec<_> = [1, 1, 0, 0, 1].iter().map(|&x| fq.from_int(x)).collect();
        let k = Arc::new(FieldTower::new(fq.clone(), &g).unwrap().with_symbol("t"));
        let t = k.gen();
        let phi =
            DrinfeldModule::from_coeffs(k.clone(), vec![t, KElem::ZERO, k.pow(&t, 3), k.one()])
                .unwrap();
        let e = EndRing::compute(&phi).unwrap();
        let ft = e.ft();
        let t1 = APoly::from_ints(&fq, &[1, 1]);
        let e2 = ft.add(&ft.pi(), &ft.one());
        let e3 = ft.scale(
            &ft.mul(&e2, &e2),
            &RatFunc::new(&fq, APoly::one(), t1.clone()).unwrap(),
        );
        let gens: Vec<FElem> = e
            .basis()
            .iter()
            .flat_map(|b| [ft.mul(b, &e2), ft.mul(b, &e3)])
            .collect();
        let i = lattice_span(ft, &gens).unwrap();
        assert_eq!(e.order().ideal_norm(&i).unwrap(), t1.pow(&fq, 3));
        let a = act(&e, &i).unwrap();
        assert_eq!(a.u.render(&k), "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
        let rep = kernel_test_with(&e, &i, &a.u).unwrap();
        assert!(!rep.is_kernel);
        assert_eq!(rep.witness.unwrap(), ft.from_apoly(&t1.pow(&fq, 2)));
        let cmp = compare_end(&e, &i, &a).unwrap();
        assert!(cmp.contained);
        let unit = act(&e, e.lattice()).unwrap();
        assert_eq!(unit.u, SkewPoly::one(&k));
        assert_eq!(unit.psi, phi);
        assert!(kernel_test(&e, e.lattice()).unwrap().is_kernel);
    }
}
