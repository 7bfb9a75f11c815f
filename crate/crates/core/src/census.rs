//! Exhaustive enumeration of Drinfeld modules over a small field, split into
//! isomorphism and isogeny classes, with the class-level checks on
//! endomorphism rings and the ideal action.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::action::{act, compare_end, kernel_test_with};
use crate::apoly::APoly;
use crate::drinfeld::DrinfeldModule;
use crate::endring::{EndRing, LinEquiv};
use crate::error::{Error, Result};
use crate::field::fqpoly;
use crate::field::tower::{FieldTower, KElem};
use crate::frobenius::{FrobeniusProfile, Verdict};
use crate::io::{kelem_to_json, FieldSpec};
use crate::lattice::ALattice;
use crate::orders::lattice_scale;

pub const SCHEMA_VERSION: u32 = 1;
pub const CANDIDATE_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusConfig {
    pub field: FieldSpec,
    pub r: usize,
    /// Restrict to one characteristic (coefficients of `𝔭` as element
    /// indices, little-endian); all characteristics otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<Vec<usize>>,
    #[serde(default = "default_max_norm_deg")]
    pub max_norm_deg: usize,
    #[serde(default = "default_lin_equiv_bound")]
    pub lin_equiv_bound: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_max_norm_deg() -> usize {
    6
}

fn default_lin_equiv_bound() -> usize {
    64
}

/// One `A`-characteristic with its chosen root `t`.
#[derive(Clone, Debug)]
pub struct Characteristic {
    pub p: APoly,
    pub t: KElem,
}

/// Every monic irreducible `𝔭` of degree dividing `n`, each with its least
/// root in `k`.
pub fn characteristics(k: &FieldTower) -> Vec<Characteristic> {
    let f = k.fq();
    let mut out = Vec::new();
    for d in (1..=k.n()).filter(|d| k.n().is_multiple_of(*d)) {
        for idx in 0..(f.q() as u64).pow(d as u32) {
            let p = fqpoly::monic_from_index(f, d, idx);
            if f.is_irreducible(&p) {
                let t = k.roots(&p)[0];
                out.push(Characteristic {
                    p: APoly::new(p),
                    t,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct IsoClass {
    /// The representative with the canonical coefficient vector.
    pub rep: DrinfeldModule,
    pub size: usize,
}

/// All `φ_T = t + g_1 τ + ... + g_r τ^r` with `g_r ≠ 0`, grouped by
/// isomorphism.
pub fn isomorphism_classes(k: &Arc<FieldTower>, r: usize, t: KElem) -> Result<Vec<IsoClass>> {
    let size = k.size();
    let candidates = size.saturating_pow(r as u32 - 1).saturating_mul(size - 1);
    if candidates > CANDIDATE_LIMIT {
        return Err(Error::TooLarge {
            candidates,
            limit: CANDIDATE_LIMIT,
        });
    }
    let keys: Vec<Vec<KElem>> = (0..candidates)
        .into_par_iter()
        .map(|idx| {
            let mut rest = idx;
            let mut coeffs = vec![t];
            for _ in 1..r {
                coeffs.push(k.from_index(rest % size));
                rest /= size;
            }
            coeffs.push(k.from_index(rest + 1));
            DrinfeldModule::from_coeffs(k.clone(), coeffs).map(|m| m.canonical_form())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<Vec<KElem>, usize> = BTreeMap::new();
    for key in keys {
        *counts.entry(key).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(key, size)| {
            Ok(IsoClass {
                rep: DrinfeldModule::from_coeffs(k.clone(), key)?,
                size,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EndSummary {
    pub rank: usize,
    pub index_over_a_pi: String,
    pub is_a_pi: bool,
    pub gorenstein: bool,
    pub dual_form: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRecord {
    pub kind: &'static str,
    pub characteristic: String,
    pub phi_t: String,
    pub phi_t_coeffs: Vec<Vec<usize>>,
    pub class_size: usize,
    pub m: String,
    pub s: usize,
    pub nk: usize,
    pub height: usize,
    pub d: usize,
    pub ordinary: bool,
    pub verdict: Verdict,
    pub end: Option<EndSummary>,
    pub isogeny_class: String,
    pub isomorphism_class: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacteristicEntry {
    pub p: String,
    pub t: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusHeader {
    pub kind: &'static str,
    pub schema_version: u32,
    pub field: FieldSpec,
    pub r: usize,
    pub characteristics: Vec<CharacteristicEntry>,
    pub seed: u64,
    pub modules: usize,
    pub isomorphism_classes: usize,
}

/// A census member with everything computed about it.
#[derive(Clone, Debug)]
pub struct Member {
    pub module: DrinfeldModule,
    pub size: usize,
    pub profile: FrobeniusProfile,
    pub end: Option<EndRing>,
    pub record: CensusRecord,
}

#[derive(Clone, Debug)]
pub struct IsogenyClass {
    pub id: String,
    pub m: String,
    pub members: Vec<usize>,
}

#[derive(Debug)]
pub struct Census {
    pub config: CensusConfig,
    pub tower: Arc<FieldTower>,
    pub header: CensusHeader,
    pub members: Vec<Member>,
    pub isogeny_classes: Vec<IsogenyClass>,
}

fn short_hash(s: &str) -> String {
    hex::encode(&Sha256::digest(s.as_bytes())[..8])
}

fn member(k: &FieldTower, class: IsoClass) -> Result<Member> {
    let phi = class.rep;
    let f = k.fq();
    let profile = FrobeniusProfile::compute(&phi)?;
    profile.check_structure(f, phi.characteristic())?;
    let end = if profile.is_commutative() {
        Some(EndRing::compute(&phi)?)
    } else {
        None
    };
    let end_summary = match &end {
        Some(e) => {
            let index = e.index_over_a_pi()?;
            let g = e.order().gorenstein_any()?;
            Some(EndSummary {
                rank: e.rank(),
                index_over_a_pi: index.render(f, "T"),
                is_a_pi: index.is_one(),
                gorenstein: g.gorenstein,
                dual_form: format!("{:?}", g.form),
            })
        }
        None => None,
    };
    let m = profile.render_m(f);
    let coeffs: Vec<Vec<usize>> = phi
        .phi_t()
        .coeffs()
        .iter()
        .map(|c| kelem_to_json(k, c))
        .collect();
    let record = CensusRecord {
        kind: "class",
        characteristic: phi.characteristic().render(f, "T"),
        phi_t: phi.render(),
        isomorphism_class: short_hash(&format!("{coeffs:?}")),
        phi_t_coeffs: coeffs,
        class_size: class.size,
        isogeny_class: short_hash(&m),
        m,
        s: profile.s,
        nk: profile.nk,
        height: profile.h,
        d: profile.d,
        ordinary: profile.is_ordinary(),
        verdict: profile.verdict,
        end: end_summary,
    };
    Ok(Member {
        module: phi,
        size: class.size,
        profile,
        end,
        record,
    })
}

impl Census {
    pub fn run(config: CensusConfig) -> Result<Census> {
        let tower = Arc::new(config.field.build()?);
        let k = &tower;
        let f = k.fq();
        let mut chars = characteristics(k);
        if let Some(p) = &config.characteristic {
            let want = crate::io::apoly_from_json(f, p)?;
            chars.retain(|c| c.p == want);
            if chars.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "{} is not a monic irreducible polynomial of degree dividing n",
                    want.render(f, "T")
                )));
            }
        }
        let total = (k.size().saturating_pow(config.r as u32 - 1))
            .saturating_mul(k.size() - 1)
            .saturating_mul(chars.len() as u128);
        if total > CANDIDATE_LIMIT {
            return Err(Error::TooLarge {
                candidates: total,
                limit: CANDIDATE_LIMIT,
            });
        }
        let mut classes = Vec::new();
        for c in &chars {
            classes.extend(isomorphism_classes(k, config.r, c.t)?);
        }
        let mut members: Vec<Member> = classes
            .into_par_iter()
            .map(|c| member(k, c))
            .collect::<Result<Vec<_>>>()?;
        members.sort_by(|a, b| {
            (
                &a.record.characteristic,
                &a.record.m,
                &a.record.phi_t_coeffs,
            )
                .cmp(&(
                    &b.record.characteristic,
                    &b.record.m,
                    &b.record.phi_t_coeffs,
                ))
        });
        let mut by_m: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, m) in members.iter().enumerate() {
            by_m.entry(m.record.m.clone()).or_default().push(i);
        }
        let isogeny_classes = by_m
            .into_iter()
            .map(|(m, members)| IsogenyClass {
                id: short_hash(&m),
                m,
                members,
            })
            .collect();
        let header = CensusHeader {
            kind: "header",
            schema_version: SCHEMA_VERSION,
            field: FieldSpec::of(k),
            r: config.r,
            characteristics: chars
                .iter()
                .map(|c| CharacteristicEntry {
                    p: c.p.render(f, "T"),
                    t: kelem_to_json(k, &c.t),
                })
                .collect(),
            seed: config.seed,
            modules: members.iter().map(|m| m.size).sum(),
            isomorphism_classes: members.len(),
        };
        Ok(Census {
            config,
            tower,
            header,
            members,
            isogeny_classes,
        })
    }

    /// Header line followed by one line per isomorphism class.
    pub fn to_jsonl(&self) -> String {
        let mut out = serde_json::to_string(&self.header).unwrap();
        out.push('\n');
        for m in &self.members {
            out += &serde_json::to_string(&m.record).unwrap();
            out.push('\n');
        }
        out
    }

    pub fn theorem_a(&self) -> Vec<TheoremAReport> {
        self.isogeny_classes
            .iter()
            .map(|c| {
                let ms: Vec<&Member> = c.members.iter().map(|&i| &self.members[i]).collect();
                let p = &ms[0].profile;
                let commutative = p.is_commutative();
                let predicted = p.h == 1 || p.n == p.d;
                let a_pi_occurs = ms.iter().any(|m| {
                    m.end
                        .as_ref()
                        .is_some_and(|e| e.index_over_a_pi().is_ok_and(|i| i.is_one()))
                });
                let verdicts_match = ms
                    .iter()
                    .all(|m| m.profile.verdict.locally_maximal == predicted);
                TheoremAReport {
                    isogeny_class: c.id.clone(),
                    m: c.m.clone(),
                    commutative,
                    height: p.h,
                    d: p.d,
                    n: p.n,
                    members: ms.len(),
                    predicted,
                    a_pi_occurs,
                    verdicts_match,
                    holds: !commutative || (a_pi_occurs == predicted && verdicts_match),
                }
            })
            .collect()
    }

    /// Checks the ideal action against the isomorphism classes of every
    /// class containing a member with `End = A[π]`.
    pub fn theorem_b(&self) -> Result<Vec<TheoremBReport>> {
        self.isogeny_classes
            .par_iter()
            .filter_map(|c| {
                let ms: Vec<&Member> = c.members.iter().map(|&i| &self.members[i]).collect();
                let p = &ms[0].profile;
                if !p.is_commutative() || !(p.h == 1 || p.n == p.d) {
                    return None;
                }
                Some(self.theorem_b_class(c, &ms))
            })
            .collect()
    }

    fn theorem_b_class(&self, c: &IsogenyClass, ms: &[&Member]) -> Result<TheoremBReport> {
        let phi0 = ms
            .iter()
            .find(|m| {
                m.end
                    .as_ref()
                    .is_some_and(|e| e.index_over_a_pi().is_ok_and(|i| i.is_one()))
            })
            .ok_or_else(|| {
                Error::CensusViolation(format!("no member of {} has End = A[π]", c.m))
            })?;
        let e = phi0.end.as_ref().unwrap();
        let targets: BTreeSet<Vec<KElem>> = ms.iter().map(|m| m.module.canonical_form()).collect();
        let mut seen: HashSet<ALattice> = HashSet::new();
        // ideal class representatives grouped by the canonical form of I*φ₀
        let mut reps: BTreeMap<Vec<KElem>, Vec<ALattice>> = BTreeMap::new();
        let mut free = true;
        let mut unknowns = 0usize;
        let mut deg = 0;
        loop {
            for i in e.order().integral_ideals(deg, CANDIDATE_LIMIT)? {
                if !seen.insert(i.clone()) {
                    continue;
                }
                let key = act(e, &i)?.psi.canonical_form();
                let bucket = reps.entry(key).or_default();
                let mut matched = false;
                for j in bucket.iter() {
                    match e.lin_equiv(&i, j, self.config.lin_equiv_bound)? {
                        LinEquiv::Yes(_) => {
                            matched = true;
                            break;
                        }
                        LinEquiv::No => {}
                        LinEquiv::Unknown { .. } => unknowns += 1,
                    }
                }
                if !matched {
                    if !bucket.is_empty() {
                        free = false;
                    }
                    bucket.push(i);
                }
            }
            let hit: BTreeSet<&Vec<KElem>> = reps.keys().collect();
            let saturated = targets.iter().all(|t| hit.contains(t));
            if saturated || deg >= self.config.max_norm_deg {
                let stray = reps.keys().filter(|k| !targets.contains(*k)).count();
                let ideal_classes: usize = reps.values().map(|v| v.len()).sum();
                return Ok(TheoremBReport {
                    isogeny_class: c.id.clone(),
                    m: c.m.clone(),
                    phi0: phi0.record.phi_t.clone(),
                    isomorphism_classes: targets.len(),
                    ideal_classes,
                    ideals_enumerated: seen.len(),
                    max_norm_deg: deg,
                    saturated,
                    free,
                    unknowns,
                    holds: saturated
                        && free
                        && stray == 0
                        && unknowns == 0
                        && ideal_classes == targets.len(),
                });
            }
            deg += 1;
        }
    }

    /// Kernel-ideal and multiplicator-ring properties on every member with
    /// commutative `End`, for all integral ideals of norm degree at most
    /// `max_deg`.
    pub fn kernel_properties(&self, max_deg: usize) -> Result<Vec<KernelPropertyReport>> {
        self.members
            .par_iter()
            .enumerate()
            .filter_map(|(idx, m)| m.end.as_ref().map(|e| (idx, m, e)))
            .map(|(idx, m, e)| {
                let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed ^ idx as u64);
                kernel_properties(e, max_deg, self.config.lin_equiv_bound, &mut rng).map(|mut r| {
                    r.phi_t = m.record.phi_t.clone();
                    r
                })
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremAReport {
    pub isogeny_class: String,
    pub m: String,
    pub commutative: bool,
    pub height: usize,
    pub d: usize,
    pub n: usize,
    pub members: usize,
    /// `H = 1` or `n = d`.
    pub predicted: bool,
    pub a_pi_occurs: bool,
    /// Every member's local-maximality verdict equals `predicted`.
    pub verdicts_match: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremBReport {
    pub isogeny_class: String,
    pub m: String,
    pub phi0: String,
    pub isomorphism_classes: usize,
    pub ideal_classes: usize,
    pub ideals_enumerated: usize,
    pub max_norm_deg: usize,
    pub saturated: bool,
    /// Distinct ideal classes went to non-isomorphic modules.
    pub free: bool,
    pub unknowns: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct KernelPropertyReport {
    pub phi_t: String,
    pub gorenstein: bool,
    pub ideals: usize,
    pub kernel_ideals: usize,
    pub violations: Vec<String>,
}

/// A random nonzero element of `End` with coordinates of degree below 2.
fn random_element(e: &EndRing, rng: &mut ChaCha8Rng) -> crate::ftilde::FElem {
    let f = e.ft().fq();
    loop {
        let c: Vec<APoly> = (0..e.rank())
            .map(|_| {
                APoly::new(
                    (0..2)
                        .map(|_| f.from_index(rng.gen_range(0..f.q())))
                        .collect(),
                )
            })
            .collect();
        let x = e.from_coords(&c);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn kernel_properties(
    e: &EndRing,
    max_deg: usize,
    lin_equiv_bound: usize,
    rng: &mut ChaCha8Rng,
) -> Result<KernelPropertyReport> {
    let ft = e.ft();
    let gorenstein = e.order().gorenstein_any()?.gorenstein;
    let ideals = e.order().integral_ideals(max_deg, CANDIDATE_LIMIT)?;
    let mut rep = KernelPropertyReport {
        gorenstein,
        ideals: ideals.len(),
        ..Default::default()
    };
    let mut kernel: Vec<(ALattice, Vec<KElem>)> = Vec::new();
    for i in &ideals {
        let a = act(e, i)?;
        let kr = kernel_test_with(e, i, &a.u)?;
        let key = a.psi.canonical_form();
        if kr.is_kernel {
            rep.kernel_ideals += 1;
        } else if gorenstein {
            rep.violations.push(format!(
                "non-kernel ideal of a Gorenstein End: {:?}",
                e.ideal_coords(i)
            ));
        }
        let cmp = compare_end(e, i, &a)?;
        if !cmp.contained {
            rep.violations.push(format!(
                "O_I not contained in End(I*φ) for {:?}",
                e.ideal_coords(i)
            ));
        }
        if kr.is_kernel && !cmp.equal {
            rep.violations.push(format!(
                "O_I ≠ End(I*φ) for kernel ideal {:?}",
                e.ideal_coords(i)
            ));
        }
        let alpha = random_element(e, rng);
        let ia = lattice_scale(ft, i, &alpha)?;
        let key2 = act(e, &ia)?.psi.canonical_form();
        if key2 != key {
            rep.violations.push(format!(
                "I*φ and (Iα)*φ not isomorphic for {:?}",
                e.ideal_coords(i)
            ));
        }
        if kr.is_kernel {
            for (j, kj) in &kernel {
                if *kj == key && matches!(e.lin_equiv(i, j, lin_equiv_bound)?, LinEquiv::No) {
                    rep.violations.push(format!(
                        "kernel ideals with isomorphic actions are not equivalent: {:?}, {:?}",
                        e.ideal_coords(i),
                        e.ideal_coords(j)
                    ));
                }
            }
            kernel.push((i.clone(), key));
        }
    }
    Ok(rep)
}
