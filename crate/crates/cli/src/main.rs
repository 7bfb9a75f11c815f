use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use drinfeld_core::census::{Census, CensusConfig};
use drinfeld_core::endring::EndRing;
use drinfeld_core::golden;
use drinfeld_core::io::{
    AnalyzeReport, EndRingReport, IdealActReport, IdealSpec, KernelTestReport, ModuleSpec,
};
use drinfeld_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "drinfeld",
    version,
    about = "Frobenius invariants, endomorphism rings and ideal actions of Drinfeld modules over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Module spec (or census config for `census`).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Ideal spec, generators in coordinates of the End basis emitted by `endring`.
    #[arg(long, global = true)]
    ideal: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    max_norm_deg: Option<usize>,
    #[arg(long, global = true)]
    lin_equiv_bound: Option<usize>,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Frobenius minimal polynomial, height and local maximality of A[pi].
    Analyze,
    /// The endomorphism ring as an A-order.
    Endring,
    /// The module I*phi for an ideal I of End(phi).
    IdealAct,
    /// Whether an ideal of End(phi) is a kernel ideal.
    KernelTest,
    /// Enumerate all modules over a field and check the class-level theorems.
    Census,
    /// Rerun the worked examples with published values.
    PaperExamples,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

enum Failure {
    Assertion(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::CensusViolation(_) => Failure::Assertion(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: Option<&Path>, what: &str) -> Result<T, Failure> {
    let path = path.ok_or_else(|| Failure::Input(format!("--{what} is required")))?;
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::Input(e.to_string()))
        }
    }
}

fn render<T: Serialize>(cli: &Cli, report: &T, text: impl FnOnce(&T) -> String) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => text(report),
    }
}

fn end_ring(cli: &Cli) -> Result<EndRing, Failure> {
    let spec: ModuleSpec = read_json(cli.input.as_deref(), "input")?;
    let phi = spec.build()?;
    Ok(EndRing::compute(&phi)?)
}

fn census(cli: &Cli) -> Result<(), Failure> {
    let mut config: CensusConfig = read_json(cli.input.as_deref(), "input")?;
    if let Some(d) = cli.max_norm_deg {
        config.max_norm_deg = d;
    }
    if let Some(b) = cli.lin_equiv_bound {
        config.lin_equiv_bound = b;
    }
    if let Some(s) = cli.seed {
        config.seed = s;
    }
    let c = Census::run(config)?;
    let a = c.theorem_a();
    let b = c.theorem_b()?;
    let violations = a.iter().filter(|x| !x.holds).count() + b.iter().filter(|x| !x.holds).count();
    let summary = match cli.format {
        Format::Json => {
            let v = serde_json::json!({ "header": c.header, "theorem_a": a, "theorem_b": b, "violations": violations });
            serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!(
                "{} modules, {} isomorphism classes, {} isogeny classes\n",
                c.header.modules,
                c.header.isomorphism_classes,
                c.isogeny_classes.len()
            );
            for x in a.iter().filter(|x| !x.commutative) {
                s += &format!(
                    "A {} {}: skipped, End is not commutative\n",
                    x.isogeny_class, x.m
                );
            }
            for x in a.iter().filter(|x| x.commutative) {
                s += &format!(
                    "A {} {}: H={} d={} n={} members={} A[pi] occurs={} predicted={} {}\n",
                    x.isogeny_class,
                    x.m,
                    x.height,
                    x.d,
                    x.n,
                    x.members,
                    x.a_pi_occurs,
                    x.predicted,
                    if x.holds { "ok" } else { "VIOLATION" }
                );
            }
            for x in &b {
                s += &format!(
                    "B {} {}: {} ideal classes, {} isomorphism classes (norm degree {}, saturated={}, free={}) {}\n",
                    x.isogeny_class,
                    x.m,
                    x.ideal_classes,
                    x.isomorphism_classes,
                    x.max_norm_deg,
                    x.saturated,
                    x.free,
                    if x.holds { "ok" } else { "VIOLATION" }
                );
            }
            s += &format!("{violations} violations\n");
            s
        }
    };
    match &cli.out {
        Some(p) => {
            fs::write(p, c.to_jsonl())
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            print!("{summary}");
        }
        None => {
            print!("{}", c.to_jsonl());
            eprint!("{summary}");
        }
    }
    if violations > 0 {
        return Err(Failure::Assertion(format!(
            "{violations} census violations"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze => {
            let spec: ModuleSpec = read_json(cli.input.as_deref(), "input")?;
            let report = AnalyzeReport::build(&spec.build()?)?;
            emit(cli, &render(cli, &report, AnalyzeReport::to_text))
        }
        Command::Endring => {
            let report = EndRingReport::build(&end_ring(cli)?)?;
            emit(cli, &render(cli, &report, EndRingReport::to_text))
        }
        Command::IdealAct => {
            let e = end_ring(cli)?;
            let spec: IdealSpec = read_json(cli.ideal.as_deref(), "ideal")?;
            let report = IdealActReport::build(&e, &spec.build(&e)?)?;
            emit(cli, &render(cli, &report, IdealActReport::to_text))
        }
        Command::KernelTest => {
            let e = end_ring(cli)?;
            let spec: IdealSpec = read_json(cli.ideal.as_deref(), "ideal")?;
            let report = KernelTestReport::build(&e, &spec.build(&e)?)?;
            emit(cli, &render(cli, &report, KernelTestReport::to_text))
        }
        Command::Census => census(cli),
        Command::PaperExamples => {
            let report = golden::run();
            emit(cli, &render(cli, &report, golden::GoldenReport::to_text))?;
            match report.failures() {
                0 => Ok(()),
                n => Err(Failure::Assertion(format!("{n} example checks failed"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(m)) => {
            eprintln!("assertion failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
