use std::sync::{Arc, OnceLock};

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use drinfeld_core::apoly::{det, APoly};
use drinfeld_core::census::characteristics;
use drinfeld_core::drinfeld::DrinfeldModule;
use drinfeld_core::field::tower::{FieldTower, KElem};
use drinfeld_core::field::FqField;
use drinfeld_core::frobenius::FrobeniusProfile;
use drinfeld_core::lattice::ALattice;
use drinfeld_core::skew::{rgcd_with_certificates, SkewPoly};

pub const CASES: u32 = 1000;

fn config() -> Config {
    Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    }
}

const SHAPES: &[(u32, usize, usize)] = &[
    (2, 1, 1),
    (2, 1, 2),
    (2, 1, 3),
    (2, 1, 4),
    (2, 2, 2),
    (3, 1, 1),
    (3, 1, 2),
    (3, 1, 3),
    (5, 1, 1),
    (5, 1, 2),
];

fn towers() -> &'static [Arc<FieldTower>] {
    static T: OnceLock<Vec<Arc<FieldTower>>> = OnceLock::new();
    T.get_or_init(|| {
        SHAPES
            .iter()
            .map(|&(p, e, n)| Arc::new(FieldTower::standard(p, e, n).unwrap()))
            .collect()
    })
}

fn elem(k: &FieldTower, x: u32) -> KElem {
    k.from_index(x as u128 % k.size())
}

fn skew(k: &FieldTower, xs: &[u32]) -> SkewPoly {
    SkewPoly::new(xs.iter().map(|&x| elem(k, x)).collect())
}

fn apoly(f: &FqField, xs: &[u8]) -> APoly {
    APoly::new(
        xs.iter()
            .map(|&x| f.from_index(x as usize % f.q()))
            .collect(),
    )
}

fn module(k: &Arc<FieldTower>, char_idx: usize, coeffs: &[u32]) -> DrinfeldModule {
    let chars = characteristics(k);
    let t = chars[char_idx % chars.len()].t;
    let mut c: Vec<KElem> = std::iter::once(t)
        .chain(coeffs.iter().map(|&x| elem(k, x)))
        .collect();
    let last = c.len() - 1;
    if c[last].is_zero() {
        c[last] = k.one();
    }
    DrinfeldModule::from_coeffs(k.clone(), c).unwrap()
}

pub fn right_division_identity() -> Result<(), String> {
    let strategy = (
        0..SHAPES.len(),
        vec(any::<u32>(), 0..9),
        vec(any::<u32>(), 1..6),
    );
    TestRunner::new(config())
        .run(&strategy, |(ti, a, b)| {
            let k = &towers()[ti];
            let f = skew(k, &a);
            let g = skew(k, &b);
            prop_assume!(!g.is_zero());
            let (q, r) = f.rdivmod(k, &g).unwrap();
            prop_assert_eq!(q.mul(k, &g).add(k, &r), f.clone());
            prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
            if !f.is_zero() {
                prop_assert_eq!(
                    f.mul(k, &g).degree(),
                    Some(f.degree().unwrap() + g.degree().unwrap())
                );
                prop_assert_eq!(
                    g.mul(k, &f).degree(),
                    Some(f.degree().unwrap() + g.degree().unwrap())
                );
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn right_gcd_certificates() -> Result<(), String> {
    let strategy = (
        0..SHAPES.len(),
        vec(any::<u32>(), 1..4),
        vec(vec(any::<u32>(), 1..5), 1..4),
    );
    TestRunner::new(config())
        .run(&strategy, |(ti, common, cofactors)| {
            let k = &towers()[ti];
            let h = skew(k, &common);
            prop_assume!(!h.is_zero());
            let fs: Vec<SkewPoly> = cofactors.iter().map(|c| skew(k, c).mul(k, &h)).collect();
            prop_assume!(fs.iter().any(|x| !x.is_zero()));
            let (g, certs) = rgcd_with_certificates(k, &fs).unwrap();
            prop_assert!(g.is_monic(k));
            for x in &fs {
                prop_assert!(x.right_divisible_by(k, &g).unwrap());
            }
            let combo = certs
                .iter()
                .zip(&fs)
                .fold(SkewPoly::zero(), |acc, (c, x)| acc.add(k, &c.mul(k, x)));
            prop_assert_eq!(&combo, &g);
            prop_assert!(g.right_divisible_by(k, &h).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn frobenius_minimal_polynomial() -> Result<(), String> {
    let strategy = (0..SHAPES.len(), any::<usize>(), vec(any::<u32>(), 1..4));
    TestRunner::new(config())
        .run(&strategy, |(ti, ci, coeffs)| {
            let k = &towers()[ti];
            let phi = module(k, ci, &coeffs);
            let prof = FrobeniusProfile::compute(&phi).unwrap();
            let f = k.fq();
            let pi = phi.frobenius();
            let mut at_pi = SkewPoly::zero();
            let mut pw = SkewPoly::one(k);
            for c in &prof.m {
                at_pi = at_pi.add(k, &phi.eval(c).mul(k, &pw));
                pw = pw.mul(k, &pi);
            }
            prop_assert!(at_pi.is_zero());
            prop_assert!(prof.m.last().unwrap().is_one());
            prop_assert_eq!(prof.r % prof.s, 0);
            prop_assert_eq!(prof.s * prof.n, prof.nk * prof.r);
            prop_assert_eq!(prof.nk % prof.d, 0);
            let p = phi.characteristic();
            prop_assert_eq!(prof.m[0].monic(f), p.pow(f, (prof.nk / prof.d) as u64));
            prop_assert!(prof.verdict.lhs <= prof.verdict.rhs);
            prop_assert_eq!(
                prof.verdict.locally_maximal,
                prof.verdict.lhs == prof.verdict.rhs
            );
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn hnf_is_canonical() -> Result<(), String> {
    let strategy = (
        0..SHAPES.len(),
        1usize..4,
        vec(vec(any::<u8>(), 0..4), 16),
        vec(
            (any::<usize>(), any::<usize>(), vec(any::<u8>(), 0..3)),
            0..8,
        ),
    );
    TestRunner::new(config())
        .run(&strategy, |(ti, s, raw, mix)| {
            let f = towers()[ti].fq();
            let gens: Vec<Vec<APoly>> = raw
                .chunks(s)
                .take(s + 2)
                .filter(|c| c.len() == s)
                .map(|c| c.iter().map(|x| apoly(f, x)).collect())
                .collect();
            let l = ALattice::from_generators(f, &gens, &APoly::one(), s);
            prop_assume!(l.is_ok());
            let l = l.unwrap();
            // elementary column operations leave the span unchanged
            let mut moved = gens.clone();
            for (a, b, c) in &mix {
                let (a, b) = (a % moved.len(), b % moved.len());
                if a == b {
                    moved.swap(0, a);
                    continue;
                }
                let c = apoly(f, c);
                let src = moved[b].clone();
                for (x, y) in moved[a].iter_mut().zip(&src) {
                    *x = x.add(f, &c.mul(f, y));
                }
            }
            moved.reverse();
            let m = ALattice::from_generators(f, &moved, &APoly::one(), s).unwrap();
            prop_assert_eq!(&l, &m);
            for i in 0..s {
                prop_assert!(l.entry(i, i).is_monic());
                for j in 0..s {
                    if j < i {
                        prop_assert!(l.entry(i, j).is_zero());
                    } else if j > i {
                        prop_assert!(l.entry(i, j).deg() < l.entry(i, i).deg());
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn index_is_multiplicative() -> Result<(), String> {
    let strategy = (
        0..SHAPES.len(),
        1usize..4,
        vec(vec(any::<u8>(), 0..3), 9),
        vec(vec(any::<u8>(), 0..3), 9),
    );
    TestRunner::new(config())
        .run(&strategy, |(ti, s, x, y)| {
            let f = towers()[ti].fq();
            let l = ALattice::identity(s);
            let times = |a: &[Vec<APoly>], b: &[Vec<APoly>]| -> Vec<Vec<APoly>> {
                (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| {
                                (0..s).fold(APoly::zero(), |acc, k| {
                                    acc.add(f, &a[i][k].mul(f, &b[k][j]))
                                })
                            })
                            .collect()
                    })
                    .collect()
            };
            // lower triangular with nonzero diagonal, times upper unitriangular
            let mat = |v: &[Vec<u8>]| -> Vec<Vec<APoly>> {
                let entry = |i: usize, j: usize| {
                    let mut c = v[i * 3 + j].clone();
                    if i == j {
                        c.push(1);
                    }
                    apoly(f, &c)
                };
                let lo: Vec<Vec<APoly>> = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| if j <= i { entry(i, j) } else { APoly::zero() })
                            .collect()
                    })
                    .collect();
                let up: Vec<Vec<APoly>> = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| {
                                if i == j {
                                    APoly::one()
                                } else if j > i {
                                    entry(j, i)
                                } else {
                                    APoly::zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                times(&lo, &up)
            };
            let (xm, ym) = (mat(&x), mat(&y));
            let dx = det(f, &xm);
            let dy = det(f, &ym);
            prop_assert!(!dx.is_zero() && !dy.is_zero());
            let cols = |m: &[Vec<APoly>]| -> Vec<Vec<APoly>> {
                (0..s)
                    .map(|j| (0..s).map(|i| m[i][j].clone()).collect())
                    .collect()
            };
            let prod = times(&xm, &ym);
            let m = ALattice::from_generators(f, &cols(&xm), &APoly::one(), s).unwrap();
            let n = ALattice::from_generators(f, &cols(&prod), &APoly::one(), s).unwrap();
            let lm = l.index(f, &m).unwrap();
            let mn = m.index(f, &n).unwrap();
            let ln = l.index(f, &n).unwrap();
            prop_assert_eq!(&lm, &dx.monic(f));
            prop_assert_eq!(&mn, &dy.monic(f));
            prop_assert_eq!(ln, lm.mul(f, &mn));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub type Suite = fn() -> Result<(), String>;

pub const SUITES: &[(&str, Suite)] = &[
    ("right_division_identity", right_division_identity),
    ("right_gcd_certificates", right_gcd_certificates),
    ("frobenius_minimal_polynomial", frobenius_minimal_polynomial),
    ("hnf_is_canonical", hnf_is_canonical),
    ("index_is_multiplicative", index_is_multiplicative),
];
