use std::process::ExitCode;
use std::time::{Duration, Instant};

use drinfeld_core::census::{Census, CensusConfig};
use drinfeld_core::golden::{self, GoldenReport, Status};
use drinfeld_core::io::FieldSpec;

mod common;

use common::props;

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(n: usize, title: &str, limit: Option<Duration>, elapsed: Duration, o: Outcome) -> bool {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let pass = o.pass && in_time;
    let budget = limit
        .map(|l| format!(" (limit {}s)", l.as_secs()))
        .unwrap_or_default();
    println!(
        "{} criterion {n}: {title} [{:.2}s{budget}] {}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        o.detail,
        if in_time { "" } else { "; over time limit" }
    );
    pass
}

fn golden_outcome(rep: &GoldenReport, names: &[&str]) -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for name in names {
        let mut seen = 0;
        for c in rep.example(name) {
            seen += 1;
            if c.status == Status::Fail {
                bad.push(format!("{name}: {} ({})", c.assertion, c.detail));
            }
        }
        if seen == 0 {
            bad.push(format!("{name}: no checks ran"));
        }
        checks += seen;
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{checks} checks")
        } else {
            bad.join("; ")
        },
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn run_examples(names: &[&str]) -> GoldenReport {
    let mut rep = GoldenReport::default();
    for name in names {
        if let Some(r) = golden::run_one(name) {
            rep.checks.extend(r.checks);
        }
    }
    rep
}

const CORPORA: &[(u32, usize, usize)] = &[(2, 1, 2), (2, 2, 2), (3, 1, 2), (3, 1, 3)];

fn corpus(p: u32, n: usize, r: usize) -> CensusConfig {
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

fn main() -> ExitCode {
    let mut all = true;

    let (rep, t) = timed(|| run_examples(&["non-kernel"]));
    all &= line(
        1,
        "non-kernel ideal example end to end",
        Some(Duration::from_secs(10)),
        t,
        golden_outcome(&rep, &["non-kernel"]),
    );

    let section = [
        "tau-squared",
        "octic",
        "sextic-tau4",
        "quartic-ordinary",
        "sextic-height2",
    ];
    let (rep, t) = timed(|| run_examples(&section));
    let mut o = golden_outcome(&rep, &section);
    if rep
        .example("octic")
        .any(|c| c.status == Status::Discrepancy)
    {
        o.detail += "; octic values asserted on the corrected module t+τ+(2t+1)τ²+2τ³+tτ⁴, the printed one does not reproduce them";
    }
    all &= line(
        2,
        "worked example invariants",
        Some(Duration::from_secs(30)),
        t,
        o,
    );

    let (rep, t) = timed(golden::run);
    let flagged = |name: &str| rep.example(name).any(|c| c.status == Status::Discrepancy);
    let o = Outcome {
        pass: flagged("sextic-tau4") && flagged("height-three") && rep.failures() == 0,
        detail: format!(
            "sextic-tau4 DISCREPANCY={}, height-three DISCREPANCY={}, {} discrepancies and {} failures over {} checks",
            flagged("sextic-tau4"),
            flagged("height-three"),
            rep.discrepancies(),
            rep.failures(),
            rep.checks.len()
        ),
    };
    all &= line(
        3,
        "misprints flagged as DISCREPANCY, never FAIL",
        None,
        t,
        o,
    );

    let (results, t) = timed(|| {
        props::SUITES
            .iter()
            .map(|(name, f)| (*name, f()))
            .collect::<Vec<_>>()
    });
    let bad: Vec<String> = results
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    let o = Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!(
                "{} suites x {} cases, fixed seed",
                results.len(),
                props::CASES
            )
        } else {
            bad.join("; ")
        },
    };
    all &= line(4, "randomized property suites", None, t, o);

    let (built, build_time) = timed(|| {
        CORPORA
            .iter()
            .map(|&(p, n, r)| Census::run(corpus(p, n, r)).map(|c| ((p, n, r), c)))
            .collect::<Result<Vec<_>, _>>()
    });
    let censuses = match built {
        Ok(c) => c,
        Err(e) => {
            for (n, title) in [
                (5, "kernel and Gorenstein properties"),
                (6, "Theorem A"),
                (7, "Theorem B"),
            ] {
                line(
                    n,
                    title,
                    None,
                    build_time,
                    Outcome {
                        pass: false,
                        detail: format!("census failed: {e}"),
                    },
                );
            }
            return ExitCode::FAILURE;
        }
    };

    let (o, t) = timed(|| {
        let mut ends = 0;
        let mut ideals = 0;
        let mut bad = Vec::new();
        for ((p, n, r), c) in &censuses {
            match c.kernel_properties(2) {
                Ok(reps) => {
                    for k in reps {
                        ends += 1;
                        ideals += k.ideals;
                        bad.extend(
                            k.violations
                                .iter()
                                .map(|v| format!("q={p} n={n} r={r} {}: {v}", k.phi_t)),
                        );
                    }
                }
                Err(e) => bad.push(format!("q={p} n={n} r={r}: {e}")),
            }
        }
        Outcome {
            pass: bad.is_empty(),
            detail: if bad.is_empty() {
                format!("{ends} End rings, {ideals} ideals of norm degree <= 2, 0 violations")
            } else {
                format!("{} violations: {}", bad.len(), bad.join("; "))
            },
        }
    });
    all &= line(
        5,
        "kernel and Gorenstein properties on the census corpus",
        Some(Duration::from_secs(600)),
        t + build_time,
        o,
    );

    let (o, t) = timed(|| {
        let mut classes = 0;
        let mut bad = Vec::new();
        for ((p, n, r), c) in &censuses {
            for a in c.theorem_a().into_iter().filter(|a| a.commutative) {
                classes += 1;
                if !a.holds {
                    bad.push(format!("q={p} n={n} r={r} {}", a.m));
                }
            }
        }
        Outcome {
            pass: bad.is_empty(),
            detail: if bad.is_empty() {
                format!("{classes} commutative isogeny classes, 0 violations")
            } else {
                bad.join("; ")
            },
        }
    });
    all &= line(6, "Theorem A at desk scale", None, t + build_time, o);

    let (o, t) = timed(|| {
        let mut classes = 0;
        let mut bad = Vec::new();
        for ((p, n, r), c) in &censuses {
            match c.theorem_b() {
                Ok(reps) => {
                    for b in reps {
                        classes += 1;
                        if !(b.holds && b.saturated && b.free && b.unknowns == 0) {
                            bad.push(format!("q={p} n={n} r={r} {}: {b:?}", b.m));
                        }
                    }
                }
                Err(e) => bad.push(format!("q={p} n={n} r={r}: {e}")),
            }
        }
        Outcome {
            pass: bad.is_empty(),
            detail: if bad.is_empty() {
                format!("{classes} isogeny classes, 0 violations")
            } else {
                bad.join("; ")
            },
        }
    });
    all &= line(
        7,
        "Theorem B at desk scale",
        Some(Duration::from_secs(1800)),
        t + build_time,
        o,
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
