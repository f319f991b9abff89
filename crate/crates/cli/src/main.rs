//! `bihom`: check, construct, verify and search BiHom-type structures stored
//! in bundle files.
//!
//! Exit statuses: 0 passed, 1 an identity failed, 2 a hypothesis failed,
//! 3 bad input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bihom::construct::Mode;
use bihom::io::{load_bundle, render_bundle, save_bundle};
use bihom::registry::{self, CheckKind, ExitStatus, Theorem, TheoremOptions};
use bihom::search::{run_search, SearchSpec, Target, DEFAULT_LIMIT};
use bihom::{corpus, CheckReport, Error, Field, StructureBundle};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bihom",
    version,
    about = "Exact checks and constructions for BiHom-type algebras"
)]
struct Cli {
    /// Worker threads for checks and searches.
    #[arg(long, global = true, env = "BIHOM_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one axiom system and print every violation.
    Check { kind: String, path: PathBuf },
    /// Run a theorem and write the constructed bundle.
    Construct {
        theorem: String,
        path: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Skip the conclusion check.
        #[arg(long)]
        trust: bool,
        #[command(flatten)]
        opts: TheoremArgs,
    },
    /// Run a theorem end to end and print one line per identity.
    Verify {
        theorem: String,
        path: PathBuf,
        #[command(flatten)]
        opts: TheoremArgs,
    },
    /// Search for derivations, morphisms, r-matrices or products.
    Search {
        target: String,
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
        /// Bundle supplying the product and structure maps.
        #[arg(long)]
        product: Option<PathBuf>,
        /// Sample randomly with this seed instead of scanning exhaustively.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
        #[arg(long)]
        max_results: Option<usize>,
        /// Directory for the result bundles and manifest.
        #[arg(short, long, default_value = "search-out")]
        out: PathBuf,
    },
    /// Write the bundled example corpus.
    Corpus {
        #[arg(short, long, default_value = "corpus")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct TheoremArgs {
    /// Map names of a Yau twist.
    #[arg(long, default_value = "A")]
    twist_a: String,
    #[arg(long, default_value = "B")]
    twist_b: String,
    /// Exponent of the power twist.
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Map used by the lie-star theorems.
    #[arg(long, default_value = "f")]
    f: String,
}

impl TheoremArgs {
    fn options(&self, mode: Mode) -> TheoremOptions {
        TheoremOptions {
            twist_a: self.twist_a.clone(),
            twist_b: self.twist_b.clone(),
            n: self.n,
            p: self.p,
            r: self.r,
            f: self.f.clone(),
            mode,
        }
    }
}

fn print_report(report: &CheckReport) {
    if report.passed {
        println!("PASS");
    } else {
        println!("FAIL ({} violations)", report.violations.len());
        for v in &report.violations {
            println!("  {v}");
        }
    }
}

fn check(kind: &str, path: &Path) -> Result<ExitStatus, Error> {
    let kind: CheckKind = kind.parse()?;
    let b = load_bundle(path)?;
    let report = kind.run(&b)?;
    print_report(&report);
    Ok(ExitStatus::of_report(&report))
}

fn construct(theorem: &str, path: &Path, out: &Path, opts: TheoremOptions) -> Result<ExitStatus, Error> {
    let theorem: Theorem = theorem.parse()?;
    let b = load_bundle(path)?;
    let res = registry::construct(theorem, &b, &opts)?;
    save_bundle(&res.bundle, out)?;
    match res.conclusion {
        Some(_) => println!("{theorem}: conclusion verified, wrote {}", out.display()),
        None => println!("{theorem}: wrote {} without verifying the conclusion", out.display()),
    }
    Ok(ExitStatus::Passed)
}

fn verify(theorem: &str, path: &Path, opts: TheoremOptions) -> Result<ExitStatus, Error> {
    let theorem: Theorem = theorem.parse()?;
    let b = load_bundle(path)?;
    let v = registry::verify(theorem, &b, &opts)?;
    for line in &v.lines {
        println!("{} {}", if line.passed { "PASS" } else { "FAIL" }, line.identity);
    }
    for violation in &v.report.violations {
        println!("  {violation}");
    }
    Ok(v.status())
}

fn summary(target: Target, b: &StructureBundle) -> String {
    match target {
        Target::AybeSolutions | Target::CentralR => b.tensors.get("r").map(ToString::to_string),
        Target::Derivations | Target::GammaDerivations | Target::TauSigmaDerivations => b
            .maps
            .get("D")
            .map(|m| format!("D = {}", bihom::check::Value::Map(m.clone()))),
        Target::AlgebraMorphisms | Target::CommutingMorphismPairs => {
            let mut s = String::new();
            for name in ["A", "B"] {
                if let Some(m) = b.maps.get(name) {
                    let _ = write!(
                        s,
                        "{}{name} = {}",
                        if s.is_empty() { "" } else { "; " },
                        bihom::check::Value::Map(m.clone())
                    );
                }
            }
            Some(s)
        }
        Target::BihomAssocProducts => b.products.get("mul").map(|p| {
            let nz = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            format!("{nz} nonzero structure constants")
        }),
    }
    .unwrap_or_default()
}

fn quote(s: &str) -> String {
    format!("{s:?}")
}

#[allow(clippy::too_many_arguments)]
fn search(
    target: &str,
    field: &str,
    dim: usize,
    product: Option<&Path>,
    seed: Option<u64>,
    samples: u64,
    limit: u64,
    max_results: Option<usize>,
    out: &Path,
) -> Result<ExitStatus, Error> {
    let target: Target = target.parse()?;
    let field: Field = field.parse()?;
    let base = product.map(load_bundle).transpose()?;
    let spec = SearchSpec {
        field,
        dim,
        target,
        seed,
        samples,
        limit,
        max_results,
    };
    let found = run_search(&spec, base.as_ref())?;
    fs::create_dir_all(out)?;
    let mut manifest = String::new();
    let _ = writeln!(
        manifest,
        "target = {}\nfield = {}\ndim = {dim}\ncount = {}",
        quote(target.tag()),
        quote(&field.to_string()),
        found.len()
    );
    if let Some(s) = seed {
        let _ = writeln!(manifest, "seed = {s}");
    }
    for (i, b) in found.iter().enumerate() {
        let file = format!("result-{:04}.bundle", i + 1);
        fs::write(out.join(&file), render_bundle(b)?)?;
        let _ = writeln!(
            manifest,
            "\n[[results]]\nfile = {}\nsummary = {}",
            quote(&file),
            quote(&summary(target, b))
        );
    }
    fs::write(out.join("manifest.toml"), &manifest)?;
    println!("{} result(s) for {target}, written to {}", found.len(), out.display());
    for b in &found {
        println!("  {}", summary(target, b));
    }
    Ok(ExitStatus::Passed)
}

fn write_corpus(out: &Path) -> Result<ExitStatus, Error> {
    fs::create_dir_all(out)?;
    for (name, b) in corpus::all() {
        save_bundle(&b, out.join(format!("{name}.bundle")))?;
    }
    println!("wrote {} bundles to {}", corpus::NAMES.len(), out.display());
    Ok(ExitStatus::Passed)
}

fn run(cli: Cli) -> Result<ExitStatus, Error> {
    match cli.command {
        Command::Check { kind, path } => check(&kind, &path),
        Command::Construct {
            theorem,
            path,
            out,
            trust,
            opts,
        } => construct(
            &theorem,
            &path,
            &out,
            opts.options(if trust { Mode::Trust } else { Mode::Verify }),
        ),
        Command::Verify { theorem, path, opts } => verify(&theorem, &path, opts.options(Mode::Verify)),
        Command::Search {
            target,
            field,
            dim,
            product,
            seed,
            samples,
            limit,
            max_results,
            out,
        } => search(
            &target,
            &field,
            dim,
            product.as_deref(),
            seed,
            samples,
            limit,
            max_results,
            &out,
        ),
        Command::Corpus { out } => write_corpus(&out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::InputError.code() as u8
            } else {
                0
            });
        }
    };
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(ExitStatus::InputError.code() as u8);
        }
    }
    let status = match run(cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::HypothesisFailed { report: Some(r), .. } | Error::ConclusionFailed { report: r, .. } = &e {
                for v in &r.violations {
                    eprintln!("  {v}");
                }
            }
            ExitStatus::of_error(&e)
        }
    };
    ExitCode::from(status.code() as u8)
}
