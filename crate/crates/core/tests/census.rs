use drinfeld_core::census::{Census, CensusConfig};
use drinfeld_core::io::FieldSpec;

fn config(p: u32, n: usize, r: usize) -> CensusConfig {
    CensusConfig {
        field: FieldSpec {
            p,
            e: 1,
            h: None,
            n,
            g: None,
            symbol: None,
        },
        r,
        characteristic: None,
        max_norm_deg: 6,
        lin_equiv_bound: 64,
        seed: 7,
    }
}

fn check_theorems(p: u32, n: usize, r: usize) {
    let c = Census::run(config(p, n, r)).unwrap();
    let total: usize = c.members.iter().map(|m| m.size).sum();
    assert_eq!(total, c.header.modules);
    let q = (p as usize).pow(n as u32);
    let chars = c.header.characteristics.len();
    assert_eq!(total, chars * q.pow(r as u32 - 1) * (q - 1));
    for class in &c.isogeny_classes {
        let h = c.members[class.members[0]].profile.h;
        assert!(class
            .members
            .iter()
            .all(|&i| c.members[i].record.m == class.m && c.members[i].profile.h == h));
    }
    for a in c.theorem_a() {
        assert!(a.holds, "theorem A fails over q={p} n={n} r={r}: {a:?}");
    }
    for b in c.theorem_b().unwrap() {
        assert!(
            b.holds && b.saturated && b.free && b.unknowns == 0,
            "theorem B fails over q={p} n={n} r={r}: {b:?}"
        );
    }
    for k in c.kernel_properties(2).unwrap() {
        assert!(
            k.violations.is_empty(),
            "kernel properties fail over q={p} n={n} r={r}: {k:?}"
        );
    }
}

#[test]
fn binary_prime_field_rank_two() {
    let c = Census::run(config(2, 1, 2)).unwrap();
    let at_t: Vec<_> = c
        .members
        .iter()
        .filter(|m| m.record.characteristic == "T")
        .collect();
    assert_eq!(at_t.len(), 2);
    assert_eq!(at_t.iter().map(|m| m.size).sum::<usize>(), 2);
    let mut ms: Vec<&str> = at_t.iter().map(|m| m.record.m.as_str()).collect();
    ms.sort();
    assert_eq!(ms, ["x^2+T", "x^2+x+T"]);
    let ordinary = at_t.iter().find(|m| m.record.m == "x^2+x+T").unwrap();
    assert!(ordinary.record.ordinary);
    assert!(ordinary.record.end.as_ref().unwrap().is_a_pi);
    check_theorems(2, 1, 2);
}

#[test]
fn binary_quadratic_field_rank_two() {
    check_theorems(2, 2, 2);
}

#[test]
fn ternary_prime_field_rank_two() {
    check_theorems(3, 1, 2);
}

#[test]
fn ternary_prime_field_rank_three() {
    check_theorems(3, 1, 3);
}

#[test]
fn census_is_deterministic() {
    let a = Census::run(config(2, 2, 2)).unwrap().to_jsonl();
    let b = Census::run(config(2, 2, 2)).unwrap().to_jsonl();
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert!(lines[0].contains("\"kind\":\"header\""));
    assert!(lines[1..].iter().all(|l| l.contains("\"kind\":\"class\"")));
}

#[test]
fn restricted_characteristic() {
    let mut cfg = config(2, 2, 2);
    cfg.characteristic = Some(vec![1, 1, 1]);
    let c = Census::run(cfg).unwrap();
    assert_eq!(c.header.characteristics.len(), 1);
    assert_eq!(c.header.modules, 12);
    assert!(c
        .members
        .iter()
        .all(|m| m.record.characteristic == "T^2+T+1"));
    let mut bad = config(2, 2, 2);
    bad.characteristic = Some(vec![1, 0, 1]);
    assert!(Census::run(bad).is_err());
}

#[test]
fn size_guard() {
    let c = Census::run(config(3, 3, 5));
    assert!(matches!(c, Err(drinfeld_core::Error::TooLarge { .. })));
}
