mod witness_file;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use strange_core::lie::{centralizer_basis, index_monte_carlo, jordan_nilpotent, AlgebraKind, Family, SubalgebraBasis};
use strange_core::partitions::{centralizer_dim_minsum, orbit_dim, Partition};
use strange_core::ratlin::SeededRng;
use strange_core::reproduce::{run_suite, SuiteOptions, SUITES};
use strange_core::seaweed::{borel, dk_index, levi_composition, meander, seaweed_basis, SeaweedSpec};
use strange_core::strange::{check_pair, named_witness, survey, ClassifyConfig, Status, WitnessKind};

use witness_file::{LoadError, WitnessFile};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_INVALID_WITNESS: u8 = 4;

#[derive(Parser)]
#[command(name = "strange", version, about = "Index, seaweed and complementary-subalgebra computations in gl_n and sl_n")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct RunConfig {
    /// Root seed for every random draw.
    #[arg(long, global = true, env = "STRANGE_SEED", default_value_t = 1)]
    seed: u64,
    /// Monte-Carlo trials for index estimates.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Coefficient bound for random integer draws.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    height: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Use all cores. Output does not depend on this flag.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct FamilyArg {
    /// Work in sl_n (the default).
    #[arg(long, conflicts_with = "gl")]
    sl: bool,
    /// Work in gl_n.
    #[arg(long)]
    gl: bool,
}

impl FamilyArg {
    fn family(self) -> Family {
        if self.gl {
            Family::Gl
        } else {
            Family::Sl
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Index of a subalgebra, by Monte-Carlo and (for seaweeds) by meander.
    Index(IndexArgs),
    /// Tests whether a subalgebra is complementary to the centralizer of a nilpotent.
    Check(CheckArgs),
    /// Classifies every nonzero nilpotent orbit of sl_n.
    Survey {
        n: usize,
        /// Conjugation trials for search-based verdicts.
        #[arg(long, default_value_t = 200)]
        search_trials: usize,
    },
    /// Runs a named verification suite.
    Reproduce {
        /// One of thm52, thm63, thm64, frobdims, numerology, sheets, elashvili, bound23, conj75.
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Centralizer of the Jordan nilpotent of a partition.
    Centralizer {
        #[arg(long)]
        partition: Partition,
        #[command(flatten)]
        family: FamilyArg,
        /// Include the basis matrices.
        #[arg(long)]
        basis: bool,
    },
    /// Meander graph and index of a seaweed, e.g. "1|2|6 / 9".
    Meander {
        seaweed: SeaweedSpec,
        #[command(flatten)]
        family: FamilyArg,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "subalgebra")]
struct Subalgebra {
    /// Borel subalgebra of size N.
    #[arg(long, value_name = "N")]
    borel: Option<usize>,
    /// Standard parabolic with Levi simple roots A, e.g. "1,3" or "{1,3}"; needs --n.
    #[arg(long, value_name = "A", requires = "n")]
    parabolic: Option<String>,
    /// Seaweed "top / bottom", e.g. "1|2|6 / 9".
    #[arg(long)]
    seaweed: Option<SeaweedSpec>,
    /// Witness file with a basis.
    #[arg(long, value_name = "FILE")]
    basis: Option<PathBuf>,
}

#[derive(Args)]
struct IndexArgs {
    #[command(flatten)]
    subalgebra: Subalgebra,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    family: FamilyArg,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    partition: Partition,
    /// fig1, solvable, flag2, flag3, parabolic-conjugate, root-conjugate, or a witness file.
    #[arg(long)]
    witness: String,
    /// Conjugation trials for search-based witnesses.
    #[arg(long, default_value_t = 200)]
    search_trials: usize,
    /// Write the witness basis to this file.
    #[arg(long, value_name = "FILE")]
    save_witness: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

impl From<strange_core::Error> for Failure {
    fn from(e: strange_core::Error) -> Self {
        usage(e)
    }
}

/// A command result: the structured report, its text rendering and an exit code.
struct Output {
    value: Value,
    text: String,
    code: u8,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn classify_config(run: &RunConfig, search_trials: usize) -> ClassifyConfig {
    ClassifyConfig {
        seed: run.seed,
        search_trials,
        height: run.height,
        index_trials: run.trials as usize,
    }
}

fn parse_simple_roots(s: &str, n: usize) -> Result<BTreeSet<usize>, Failure> {
    let body = s.trim().trim_start_matches("A=").trim_start_matches('{').trim_end_matches('}');
    let mut a = BTreeSet::new();
    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| usage(format!("bad simple root {tok:?}")))?;
        if i == 0 || i >= n {
            return Err(usage(format!("simple root {i} outside 1..{}", n - 1)));
        }
        a.insert(i);
    }
    Ok(a)
}

fn load_witness(path: &PathBuf) -> Result<(SubalgebraBasis, String), Failure> {
    let file = WitnessFile::read(path).map_err(|e| match e {
        LoadError::Parse(m) | LoadError::Invalid(m) => usage(m),
    })?;
    match file.to_basis() {
        Ok(h) => Ok((h, file.provenance)),
        Err(LoadError::Parse(m)) => Err(usage(m)),
        Err(LoadError::Invalid(m)) => Err(Failure {
            code: EXIT_INVALID_WITNESS,
            message: format!("invalid witness {}: {m}", path.display()),
        }),
    }
}

fn cmd_index(args: &IndexArgs, run: &RunConfig) -> Result<Output, Failure> {
    let family = args.family.family();
    let sub = &args.subalgebra;
    let (label, h, spec) = if let Some(n) = sub.borel {
        let kind = AlgebraKind::new(family, n)?;
        ("borel".to_string(), borel(kind), Some(SeaweedSpec::borel(n)))
    } else if let Some(a) = &sub.parabolic {
        let n = args.n.expect("clap requires --n");
        AlgebraKind::new(family, n)?;
        let a = parse_simple_roots(a, n)?;
        let spec = SeaweedSpec::parabolic(levi_composition(&a, n)?);
        let h = seaweed_basis(&spec, family)?;
        (format!("parabolic {spec}"), h, Some(spec))
    } else if let Some(spec) = &sub.seaweed {
        AlgebraKind::new(family, spec.n())?;
        (format!("seaweed {spec}"), seaweed_basis(spec, family)?, Some(spec.clone()))
    } else {
        let path = sub.basis.as_ref().expect("clap requires one source");
        let (h, provenance) = load_witness(path)?;
        (format!("basis from {} ({provenance})", path.display()), h, None)
    };
    let est = index_monte_carlo(&h, run.trials as usize, run.height, &SeededRng::new(run.seed))?;
    let meander_index = spec.as_ref().map(|s| dk_index(s, h.kind().family));
    let agree = meander_index.map(|m| m == est.upper_bound_on_index);
    let value = json!({
        "subalgebra": label,
        "family": h.kind().family,
        "n": h.n(),
        "dim": h.dim(),
        "monte_carlo": est,
        "meander_index": meander_index,
        "agreement": agree.map(|a| if a { "AGREE" } else { "DISAGREE" }),
    });
    let mut text = format!(
        "{label} in {}, dim {}\nmonte-carlo index bound: {} (max rank {} over {} trials)\n",
        kind_name(h.kind()),
        h.dim(),
        est.upper_bound_on_index,
        est.max_rank_seen,
        est.trials_run
    );
    if let (Some(m), Some(a)) = (meander_index, agree) {
        text.push_str(&format!("meander index: {m}\n{}\n", if a { "AGREE" } else { "DISAGREE" }));
    }
    let code = if agree == Some(false) { EXIT_DISAGREE } else { 0 };
    Ok(Output { value, text, code })
}

fn kind_name(kind: AlgebraKind) -> String {
    match kind.family {
        Family::Gl => format!("gl_{}", kind.n),
        Family::Sl => format!("sl_{}", kind.n),
    }
}

fn cmd_check(args: &CheckArgs, run: &RunConfig) -> Result<Output, Failure> {
    let lambda = &args.partition;
    let (h, source, provenance) = match WitnessKind::parse(&args.witness) {
        Some(kind) => {
            let cfg = classify_config(run, args.search_trials);
            let h = named_witness(lambda, kind, &cfg)?;
            (h, "named".to_string(), kind.name().to_string())
        }
        None => {
            let path = PathBuf::from(&args.witness);
            if !path.exists() {
                return Err(usage(format!(
                    "{:?} is neither a witness name nor a file",
                    args.witness
                )));
            }
            let (h, provenance) = load_witness(&path)?;
            (h, path.display().to_string(), provenance)
        }
    };
    if h.n() != lambda.n() {
        return Err(usage(format!("witness is {0}x{0} but the partition is of {1}", h.n(), lambda.n())));
    }
    if let Some(path) = &args.save_witness {
        WitnessFile::from_basis(&provenance, &h)
            .write(path)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let report = check_pair(lambda, &h, h.kind())?;
    let value = json!({
        "partition": lambda,
        "witness": { "source": source, "provenance": provenance },
        "report": report,
    });
    let verdict = if !report.h_is_subalgebra {
        "witness is not closed under the bracket"
    } else if report.is_strange_pair {
        "strange pair"
    } else {
        "not a strange pair"
    };
    let text = format!(
        "partition ({lambda}) in {}, witness {provenance}\ndim g = {}, dim orbit = {}, dim h = {}\na = {}, b = {}\nclosed: {}\n{verdict}\n",
        kind_name(h.kind()),
        report.dim_g,
        report.dim_orbit,
        report.dim_h,
        report.a,
        report.b,
        report.h_is_subalgebra,
    );
    let code = if !report.h_is_subalgebra {
        EXIT_INVALID_WITNESS
    } else if report.is_strange_pair {
        0
    } else {
        EXIT_NEGATIVE
    };
    Ok(Output { value, text, code })
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Strange => "strange",
        Status::NotStrange => "not strange",
        Status::Unknown => "unknown",
    }
}

fn cmd_survey(n: usize, search_trials: usize, run: &RunConfig) -> Result<Output, Failure> {
    let report = survey(n, &classify_config(run, search_trials))?;
    let mut text = format!("nilpotent orbits of sl_{n}, seed {}\n", run.seed);
    for v in &report.verdicts {
        let kind = v.witness.as_ref().map_or("-", |w| w.kind.name());
        text.push_str(&format!(
            "  {:<14} {:<12} {:<20} {}\n",
            format!("({})", v.partition),
            status_name(v.status),
            kind,
            v.reason
        ));
    }
    let s = &report.summary;
    text.push_str(&format!(
        "{} strange, {} not strange, {} unknown\n",
        s.strange, s.not_strange, s.unknown
    ));
    Ok(Output {
        value: to_value(&report),
        text,
        code: 0,
    })
}

fn cmd_reproduce(suite: &str, n: Option<usize>, max_n: Option<usize>, run: &RunConfig) -> Result<Output, Failure> {
    if !SUITES.contains(&suite) {
        return Err(usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    let opts = SuiteOptions {
        n,
        max_n,
        seed: run.seed,
        trials: run.trials as usize,
        height: run.height,
    };
    let report = run_suite(suite, &opts)?;
    Ok(Output {
        value: to_value(&report),
        text: report.render(),
        code: if report.pass { 0 } else { EXIT_NEGATIVE },
    })
}

fn cmd_centralizer(lambda: &Partition, family: Family, with_basis: bool, run: &RunConfig) -> Result<Output, Failure> {
    let kind = AlgebraKind::new(family, lambda.n())?;
    let c = centralizer_basis(&jordan_nilpotent(lambda), kind)?;
    let formula = centralizer_dim_minsum(lambda) - usize::from(kind.is_sl());
    let est = index_monte_carlo(&c, run.trials as usize, run.height, &SeededRng::new(run.seed))?;
    let mut value = json!({
        "partition": lambda,
        "family": family,
        "n": lambda.n(),
        "dim": c.dim(),
        "formula_dim": formula,
        "orbit_dim": orbit_dim(lambda),
        "index_upper_bound": est.upper_bound_on_index,
    });
    if with_basis {
        value["basis"] = to_value(&WitnessFile::from_basis("centralizer", &c).basis);
    }
    let mut text = format!(
        "centralizer of ({lambda}) in {}: dim {} (sum of min(i,j) formula: {formula})\norbit dim {}\nmonte-carlo index bound {}\n",
        kind_name(kind),
        c.dim(),
        orbit_dim(lambda),
        est.upper_bound_on_index
    );
    if with_basis {
        for m in c.mats() {
            for i in 0..m.rows() {
                let row: Vec<String> = m.row(i).iter().map(|q| format!("{q:>4}")).collect();
                text.push_str(&format!("  [{}]\n", row.join(" ")));
            }
            text.push('\n');
        }
    }
    let code = if c.dim() == formula { 0 } else { EXIT_DISAGREE };
    Ok(Output { value, text, code })
}

fn cmd_meander(spec: &SeaweedSpec, family: Family) -> Result<Output, Failure> {
    let g = meander(spec);
    let index = dk_index(spec, family);
    let value = json!({
        "seaweed": spec.to_string(),
        "family": family,
        "graph": g,
        "index": index,
    });
    let text = format!(
        "seaweed {spec}\n{}index in {}: {index}\n",
        g.render(),
        kind_name(AlgebraKind { family, n: spec.n() })
    );
    Ok(Output { value, text, code: 0 })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let run = &cli.run;
    match &cli.command {
        Command::Index(args) => cmd_index(args, run),
        Command::Check(args) => cmd_check(args, run),
        Command::Survey { n, search_trials } => cmd_survey(*n, *search_trials, run),
        Command::Reproduce { suite, n, max_n } => cmd_reproduce(suite, *n, *max_n, run),
        Command::Centralizer {
            partition,
            family,
            basis,
        } => cmd_centralizer(partition, family.family(), *basis, run),
        Command::Meander { seaweed, family } => cmd_meander(seaweed, family.family()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.run.parallel {
        // Results are order-fixed either way; one thread keeps runs light.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            match cli.run.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.value).expect("json")),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
