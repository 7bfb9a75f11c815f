//! JSON input specs and serializable reports.
//!
//! Elements of `F_q` are written as their index `0..q` (base-`p` digits of
//! the coordinates over `F_p`); elements of `k` as lists of such indices,
//! little-endian in the generator of `k`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::action::{act, compare_end, kernel_test_with};
use crate::apoly::APoly;
use crate::drinfeld::DrinfeldModule;
use crate::endring::EndRing;
use crate::error::{Error, Result};
use crate::field::fq::{Fq, FqField};
use crate::field::tower::{FieldTower, KElem};
use crate::frobenius::{CorollaryReport, FrobeniusProfile, Invariants, Verdict};
use crate::ftilde::{FElem, FTilde};
use crate::lattice::ALattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    /// Extension degree of `F_q` over `F_p`.
    #[serde(default = "one")]
    pub e: usize,
    /// Defining polynomial of `F_q` over `F_p`; the standard one if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<u32>>,
    pub n: usize,
    /// Defining polynomial of `k` over `F_q`; the standard one if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
}

fn one() -> usize {
    1
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldTower> {
        let fq = match &self.h {
            Some(h) => {
                if h.len() != self.e + 1 {
                    return Err(Error::InvalidInput(format!(
                        "h has degree {}, expected e = {}",
                        h.len() - 1,
                        self.e
                    )));
                }
                FqField::new(self.p, h)?
            }
            None => FqField::standard(self.p, self.e)?,
        };
        let tower = match &self.g {
            Some(g) => {
                let coeffs = g
                    .iter()
                    .map(|&c| fq_from_index(&fq, c))
                    .collect::<Result<Vec<Fq>>>()?;
                if coeffs.len() != self.n + 1 {
                    return Err(Error::InvalidInput(format!(
                        "g has degree {}, expected n = {}",
                        g.len() - 1,
                        self.n
                    )));
                }
                FieldTower::new(fq, &coeffs)?
            }
            None => FieldTower::standard_over(fq, self.n)?,
        };
        Ok(match &self.symbol {
            Some(s) => tower.with_symbol(s),
            None => tower,
        })
    }

    pub fn of(k: &FieldTower) -> Self {
        let fq = k.fq();
        FieldSpec {
            p: fq.p(),
            e: fq.e(),
            h: Some(fq.h().to_vec()),
            n: k.n(),
            g: Some(k.g().iter().map(|c| c.index()).collect()),
            symbol: Some(k.symbol().to_string()),
        }
    }
}

fn fq_from_index(f: &FqField, idx: usize) -> Result<Fq> {
    if idx >= f.q() {
        return Err(Error::InvalidInput(format!(
            "{idx} is not an element index of F_{}",
            f.q()
        )));
    }
    Ok(f.from_index(idx))
}

pub fn kelem_from_json(k: &FieldTower, v: &[usize]) -> Result<KElem> {
    if v.len() > k.n() {
        return Err(Error::InvalidInput(format!(
            "{} coordinates for an element of a degree-{} field",
            v.len(),
            k.n()
        )));
    }
    let c = v
        .iter()
        .map(|&x| fq_from_index(k.fq(), x))
        .collect::<Result<Vec<Fq>>>()?;
    k.from_coeffs(&c)
}

pub fn kelem_to_json(k: &FieldTower, a: &KElem) -> Vec<usize> {
    let mut v: Vec<usize> = k.coeffs(a).iter().map(|c| c.index()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub field: FieldSpec,
    /// Coefficients of `φ_T`, from `τ^0` upwards.
    #[serde(rename = "phi_T")]
    pub phi_t: Vec<Vec<usize>>,
}

impl ModuleSpec {
    pub fn build(&self) -> Result<DrinfeldModule> {
        let k = Arc::new(self.field.build()?);
        let coeffs = self
            .phi_t
            .iter()
            .map(|c| kelem_from_json(&k, c))
            .collect::<Result<Vec<_>>>()?;
        DrinfeldModule::from_coeffs(k, coeffs)
    }

    pub fn of(phi: &DrinfeldModule) -> Self {
        let k = phi.tower();
        ModuleSpec {
            field: FieldSpec::of(k),
            phi_t: phi
                .phi_t()
                .coeffs()
                .iter()
                .map(|c| kelem_to_json(k, c))
                .collect(),
        }
    }
}

/// Generators in coordinates relative to the HNF basis of `End(φ)`, each
/// coordinate a polynomial in `T` given little-endian by element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub generators: Vec<Vec<Vec<usize>>>,
}

impl IdealSpec {
    pub fn build(&self, e: &EndRing) -> Result<ALattice> {
        let f = e.ft().fq();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|c| apoly_from_json(f, c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        e.ideal_from_coords(&gens)
    }

    pub fn of(e: &EndRing, i: &ALattice) -> Option<Self> {
        let gens = e.ideal_coords(i)?;
        Some(IdealSpec {
            generators: gens
                .iter()
                .map(|g| g.iter().map(apoly_to_json).collect())
                .collect(),
        })
    }
}

pub fn apoly_from_json(f: &FqField, v: &[usize]) -> Result<APoly> {
    Ok(APoly::new(
        v.iter()
            .map(|&x| fq_from_index(f, x))
            .collect::<Result<Vec<_>>>()?,
    ))
}

pub fn apoly_to_json(a: &APoly) -> Vec<usize> {
    a.coeffs().iter().map(|c| c.index()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub module: ModuleSpec,
    pub phi_t: String,
    pub rank: usize,
    pub characteristic: String,
    pub d: usize,
    pub n: usize,
    pub m: String,
    pub s: usize,
    pub m_tilde: String,
    pub nk: usize,
    pub height: usize,
    pub ordinary: bool,
    pub commutative: bool,
    pub verdict: Verdict,
    pub invariant_solutions: Vec<Invariants>,
    pub corollaries: CorollaryReport,
}

impl AnalyzeReport {
    pub fn build(phi: &DrinfeldModule) -> Result<Self> {
        let p = FrobeniusProfile::compute(phi)?;
        let f = phi.tower().fq();
        p.check_structure(f, phi.characteristic())?;
        Ok(AnalyzeReport {
            module: ModuleSpec::of(phi),
            phi_t: phi.render(),
            rank: p.r,
            characteristic: phi.characteristic().render(f, "T"),
            d: p.d,
            n: p.n,
            m: p.render_m(f),
            s: p.s,
            m_tilde: p.render_m_tilde(f),
            nk: p.nk,
            height: p.h,
            ordinary: p.is_ordinary(),
            commutative: p.is_commutative(),
            verdict: p.verdict,
            invariant_solutions: p.solutions.clone(),
            corollaries: p.corollaries(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out += &format!("phi_T = {}\n", self.phi_t);
        out += &format!(
            "rank r = {}, characteristic p = {} (d = {}), n = {}\n",
            self.rank, self.characteristic, self.d, self.n
        );
        out += &format!("m(x) = {}\n", self.m);
        out += &format!(
            "[F~:F] = {}, commutative End: {}\n",
            self.s, self.commutative
        );
        out += &format!("m~(T) = {}\n", self.m_tilde);
        out += &format!("[F~:K] = {}\n", self.nk);
        out += &format!(
            "height H = {} ({})\n",
            self.height,
            if self.ordinary {
                "ordinary"
            } else {
                "not ordinary"
            }
        );
        out += &format!(
            "locally maximal at pi: {} (ceil(n/(Hd)) = {}, [F~:K]/d = {})\n",
            self.verdict.locally_maximal, self.verdict.lhs, self.verdict.rhs
        );
        let sols: Vec<String> = self
            .invariant_solutions
            .iter()
            .map(|i| {
                format!(
                    "(e_K={}, e_F={}, f_F={}, f_K={})",
                    i.e_k, i.e_f, i.f_f, i.f_k
                )
            })
            .collect();
        out += &format!(
            "invariant solutions: {}\n",
            if sols.is_empty() {
                "none".to_string()
            } else {
                sols.join(", ")
            }
        );
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisElement {
    pub skew: String,
    pub pi_coordinates: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinEntry {
    pub prime: String,
    pub gorenstein: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndRingReport {
    pub module: ModuleSpec,
    pub m: String,
    pub rank: usize,
    pub basis: Vec<BasisElement>,
    /// `table[i][j]` lists the coordinates of `e_i e_j`.
    pub mult_table: Vec<Vec<Vec<String>>>,
    pub index_over_a_pi: String,
    pub dual_form: String,
    pub gorenstein: bool,
    pub gorenstein_at: Vec<GorensteinEntry>,
}

pub fn render_felem(ft: &FTilde, x: &FElem) -> String {
    ft.render(x, "pi")
}

impl EndRingReport {
    pub fn build(e: &EndRing) -> Result<Self> {
        let phi = e.module();
        let k = phi.tower();
        let ft = e.ft();
        let f = ft.fq();
        let basis = e
            .basis()
            .iter()
            .zip(e.skew_basis())
            .map(|(x, u)| BasisElement {
                skew: u.render(k),
                pi_coordinates: render_felem(ft, x),
            })
            .collect();
        let mult_table = e
            .mult_table()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.iter().map(|x| x.render(f, "T")).collect())
                    .collect()
            })
            .collect();
        let index = e.index_over_a_pi()?;
        let g = e.order().gorenstein_any()?;
        let mut primes = crate::apoly::prime_factors(f, &index);
        for p in &g.bad_primes {
            if !primes.contains(p) {
                primes.push(p.clone());
            }
        }
        let gorenstein_at = primes
            .iter()
            .map(|l| GorensteinEntry {
                prime: l.render(f, "T"),
                gorenstein: !l.divides(f, &g.defect_index),
            })
            .collect();
        Ok(EndRingReport {
            module: ModuleSpec::of(phi),
            m: e.profile().render_m(f),
            rank: e.rank(),
            basis,
            mult_table,
            index_over_a_pi: index.render(f, "T"),
            dual_form: format!("{:?}", g.form),
            gorenstein: g.gorenstein,
            gorenstein_at,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("m(x) = {}\nEnd has rank {} over A\n", self.m, self.rank);
        for (i, b) in self.basis.iter().enumerate() {
            out += &format!("e{} = {}  [{}]\n", i + 1, b.skew, b.pi_coordinates);
        }
        for (i, row) in self.mult_table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if j < i {
                    continue;
                }
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.as_str() != "0")
                    .map(|(l, x)| format!("({x})e{}", l + 1))
                    .collect();
                let rhs = if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                };
                out += &format!("e{}*e{} = {}\n", i + 1, j + 1, rhs);
            }
        }
        out += &format!("chi(End/A[pi]) = {}\n", self.index_over_a_pi);
        out += &format!(
            "Gorenstein: {} (dual form {})\n",
            self.gorenstein, self.dual_form
        );
        for g in &self.gorenstein_at {
            out += &format!("  at {}: {}\n", g.prime, g.gorenstein);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealActReport {
    pub ideal: IdealSpec,
    pub norm: String,
    pub u: String,
    pub psi_t: String,
    pub psi: ModuleSpec,
    pub kernel_ideal: bool,
    pub witness: Option<String>,
    pub annihilator: Option<IdealSpec>,
    pub multiplicator_ring_in_end_psi: bool,
    pub multiplicator_ring_equals_end_psi: bool,
}

impl IdealActReport {
    pub fn build(e: &EndRing, i: &ALattice) -> Result<Self> {
        let f = e.ft().fq();
        let k = e.module().tower();
        let a = act(e, i)?;
        let kr = kernel_test_with(e, i, &a.u)?;
        let cmp = compare_end(e, i, &a)?;
        Ok(IdealActReport {
            ideal: IdealSpec::of(e, i).expect("integral ideal"),
            norm: e.order().ideal_norm(i)?.render(f, "T"),
            u: a.u.render(k),
            psi_t: a.psi.render(),
            psi: ModuleSpec::of(&a.psi),
            kernel_ideal: kr.is_kernel,
            witness: kr.witness.as_ref().map(|w| render_felem(e.ft(), w)),
            annihilator: if kr.is_kernel {
                None
            } else {
                IdealSpec::of(e, &kr.annihilator)
            },
            multiplicator_ring_in_end_psi: cmp.contained,
            multiplicator_ring_equals_end_psi: cmp.equal,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("chi(End/I) = {}\n", self.norm);
        out += &format!("u_I = {}\n", self.u);
        out += &format!("(I*phi)_T = {}\n", self.psi_t);
        out += &format!("kernel ideal: {}\n", self.kernel_ideal);
        if let Some(w) = &self.witness {
            out += &format!("witness in Ann \\ I: {w}\n");
        }
        out += &format!(
            "O_I in End(I*phi): {}, equal: {}\n",
            self.multiplicator_ring_in_end_psi, self.multiplicator_ring_equals_end_psi
        );
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelTestReport {
    pub ideal: IdealSpec,
    pub norm: String,
    pub kernel_ideal: bool,
    /// `k{τ}I ∩ End`.
    pub annihilator: IdealSpec,
    pub annihilator_norm: String,
    pub witness: Option<String>,
}

impl KernelTestReport {
    pub fn build(e: &EndRing, i: &ALattice) -> Result<Self> {
        let f = e.ft().fq();
        let kr = crate::action::kernel_test(e, i)?;
        let missing = || crate::error::internal("ideal is not integral");
        Ok(KernelTestReport {
            ideal: IdealSpec::of(e, i).ok_or_else(missing)?,
            norm: e.order().ideal_norm(i)?.render(f, "T"),
            kernel_ideal: kr.is_kernel,
            annihilator: IdealSpec::of(e, &kr.annihilator).ok_or_else(missing)?,
            annihilator_norm: e.order().ideal_norm(&kr.annihilator)?.render(f, "T"),
            witness: kr.witness.as_ref().map(|w| render_felem(e.ft(), w)),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("chi(End/I) = {}\n", self.norm);
        out += &format!("chi(End/Ann) = {}\n", self.annihilator_norm);
        out += &format!("kernel ideal: {}\n", self.kernel_ideal);
        if let Some(w) = &self.witness {
            out += &format!("witness in Ann \\ I: {w}\n");
        }
        out
    }
}
