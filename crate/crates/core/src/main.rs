//! Command-line frontend: counting bounds, exact desk-scale oracles, seeded
//! randomized constructions, and certificate verification.
//!
//! Every command prints one pretty-printed JSON report document to stdout
//! (diagnostics go to stderr) and exits with a code from a fixed taxonomy:
//! 0 ok, 1 certificate invalid, 2 bad input, 3 a theoretical bound was
//! violated by an exact count, 4 resource limit, 5 trial budget exhausted.
//! Reports are byte-stable for fixed arguments, seed, and input files,
//! regardless of thread count.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pmtk::bounds;
use pmtk::certificate::{verify_certificate, Certificate};
use pmtk::construct::{self, Outcome, TrialFailure};
use pmtk::error::Error;
use pmtk::instance::{self, InstanceBody, MAX_FILE_UNIVERSE};
use pmtk::magnitude::{Magnitude, Rounding, Verdict};
use pmtk::oracle::{self, CountMode, OracleLimits};
use pmtk::report::{exponent_display, render_report, verdict_str, MagnitudeDoc};
use pmtk::setsystem::{SetSystem, Subset};
use pmtk::Result;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_BOUND_VIOLATED: u8 = 3;
const EXIT_RESOURCE_LIMIT: u8 = 4;
const EXIT_TRIALS_EXHAUSTED: u8 = 5;

/// How many trial failures a construct report lists before summarizing.
const FAILURE_LIST_CAP: usize = 10;

#[derive(Parser)]
#[command(
    name = "pmtk",
    version,
    about = "Probabilistic-method toolkit: counting bounds, exact oracles, seeded constructors",
    after_help = "Exit codes: 0 ok, 1 certificate invalid, 2 bad input, 3 bound violated, \
                  4 resource limit, 5 trials exhausted.\n\
                  Set PMTK_THREADS to override the parallelism degree (default: all cores)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counting bounds and guarantees (no enumeration)
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Exact desk-scale enumeration, cross-checked against the bounds
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Seeded randomized constructions returning verified certificates
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Certificate verification
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Instance generators
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Largest vertex count r = 2^floor((n-2)/2) on which a graph without
    /// n-cliques and n-anticliques is guaranteed to exist
    Ramsey {
        #[arg(long)]
        n: u64,
    },
    /// Same guarantee for k-colorings of complete-graph edges
    Multicolor {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Same guarantee for k-colorings of l-element subsets
    Hyper {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
    },
    /// Discrepancy threshold: check or find a with 2^(a^2) >= (2s)^(2n)
    Discrepancy {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        /// Threshold to check; defaults to the smallest satisfying value
        #[arg(long)]
        a: Option<u64>,
    },
    /// Bound the number of graphs on r vertices with an n-clique or n-anticlique
    RamseyBad {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
    },
    /// Bound the number of 2-colorings of l-subsets of [m] with a monochromatic
    /// n-hyperclique
    HyperBad {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Enumerate,
    ClosedForm,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Count sign colorings of [n] with delta(M) >= a for one set M
    CountBad {
        #[arg(long)]
        n: u64,
        /// 1-based elements of M, comma-separated; omit for the empty set
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u64>>,
        #[arg(long)]
        a: u64,
        #[arg(long, value_enum, default_value = "enumerate")]
        mode: ModeArg,
        /// Raise the enumeration caps (may run for a very long time)
        #[arg(long)]
        force: bool,
    },
    /// Count sign colorings with |delta| >= a on at least one set of a system
    CountExceeding {
        /// Set-system document
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        force: bool,
    },
    /// Exact minimum over all colorings of the largest |delta|, with witness
    ExactDiscrepancy {
        /// Set-system document; omit for an empty system
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Universe size when no file is given (default 0)
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        force: bool,
    },
    /// Count graphs on r labeled vertices with an n-clique or n-anticlique
    CountRamsey {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Args)]
struct TrialArgs {
    /// RNG seed; identical seeds replay identical trial sequences
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trial budget
    #[arg(long, default_value_t = construct::DEFAULT_MAX_TRIALS)]
    max_trials: u64,
    /// Also write the witness document to this file
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Graph on r vertices without n-cliques and n-anticliques
    Ramsey {
        #[arg(long)]
        n: u64,
        /// Vertex count; defaults to the guaranteed bound 2^floor((n-2)/2)
        #[arg(long)]
        r: Option<u64>,
        #[command(flatten)]
        opts: TrialArgs,
    },
    /// k-coloring of complete-graph edges without monochromatic n-cliques
    Multicolor {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: Option<u64>,
        #[command(flatten)]
        opts: TrialArgs,
    },
    /// k-coloring of l-subsets of [m] without monochromatic n-hypercliques
    Hyper {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        opts: TrialArgs,
    },
    /// Sign coloring with |delta| < a on every set of a system
    Coloring {
        /// Set-system document
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Threshold; defaults to the smallest a with 2^(a^2) >= (2s)^(2n)
        #[arg(long)]
        a: Option<u64>,
        #[command(flatten)]
        opts: TrialArgs,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check that a graph document has no n-clique and no n-anticlique
    Ramsey {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Check that an edge-coloring document has no monochromatic n-clique
    Multicolor {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Check that a subset-coloring document has no monochromatic n-hyperclique
    Hyper {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Check that a sign-coloring document has |delta| < a on every set
    Coloring {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Set-system document the coloring is checked against
        #[arg(long, value_name = "FILE")]
        system: PathBuf,
        #[arg(long)]
        a: u64,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Sample s pseudo-random clubs of a fixed size from [n]
    Clubs {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long = "size")]
        club_size: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the document here; omit to print it to stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) => EXIT_INVALID_INPUT,
                Error::ResourceLimit(_) => EXIT_RESOURCE_LIMIT,
            }
        }
    };
    ExitCode::from(code)
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("PMTK_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| Error::invalid(format!("PMTK_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::invalid(format!("cannot configure {threads} threads: {e}")))?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Bounds(cmd) => run_bounds(cmd),
        Cmd::Oracle(cmd) => run_oracle(cmd),
        Cmd::Construct(cmd) => run_construct(cmd),
        Cmd::Verify(cmd) => run_verify(cmd),
        Cmd::Gen(cmd) => run_gen(cmd),
    }
}

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

fn read_instance(path: &Path) -> Result<InstanceBody> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    instance::from_json(&text)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn oracle_limits(force: bool) -> OracleLimits {
    if force {
        OracleLimits { max_sign_bits: 63, max_edge_bits: 63 }
    } else {
        OracleLimits::default()
    }
}

/// Short inline rendering of a magnitude for summary lines.
fn magnitude_brief(m: &Magnitude) -> String {
    if let (Some(x), Some(d)) = (m.as_exact(), m.decimal_digits()) {
        if d <= 40 {
            return x.to_string();
        }
    }
    let (lo, hi) = m.log2_sides();
    match (lo, hi) {
        (Some(lo), Some(hi)) => {
            let lo = lo.to_decimal(6, Rounding::LowerBound);
            let hi = hi.to_decimal(6, Rounding::UpperBound);
            if lo == hi {
                format!("2^{lo}")
            } else {
                format!("2^[{lo}, {hi}]")
            }
        }
        (Some(lo), None) => format!(">= 2^{}", lo.to_decimal(6, Rounding::LowerBound)),
        (None, Some(hi)) => format!("<= 2^{}", hi.to_decimal(6, Rounding::UpperBound)),
        (None, None) => "0".to_string(),
    }
}

fn exact_u64(m: &Magnitude) -> Result<u64> {
    m.as_exact()
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::invalid("bound is not an exact machine-size integer"))
}

fn emit<T: Serialize>(kind: &'static str, body: &T) {
    print!("{}", render_report(kind, body));
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BoundBody {
    subject: &'static str,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    formula: &'static str,
    bound: MagnitudeDoc,
    summary: String,
}

#[derive(Serialize)]
struct DiscrepancyBoundBody {
    n: u64,
    s: u64,
    a: u64,
    condition_holds: bool,
    minimal_a: u64,
    summary: String,
}

#[derive(Serialize)]
struct BadCountBody {
    subject: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    verdict: &'static str,
    exact_route: Option<&'static str>,
    log_route: &'static str,
    bad_bound: MagnitudeDoc,
    total: MagnitudeDoc,
    summary: String,
}

fn run_bounds(cmd: BoundsCmd) -> Result<u8> {
    match cmd {
        BoundsCmd::Ramsey { n } => {
            let bound = bounds::erdos_graph_bound(n)?;
            emit(
                "bound-report",
                &BoundBody {
                    subject: "ramsey",
                    n,
                    k: None,
                    l: None,
                    formula: "2^floor((n-2)/2)",
                    bound: MagnitudeDoc::new(&bound),
                    summary: format!("vertex count {}", magnitude_brief(&bound)),
                },
            );
            Ok(EXIT_OK)
        }
        BoundsCmd::Multicolor { n, k } => {
            let bound = bounds::erdos_multicolor_bound(n, k)?;
            emit(
                "bound-report",
                &BoundBody {
                    subject: "multicolor",
                    n,
                    k: Some(k),
                    l: None,
                    formula: "k^floor((n-2)/2)",
                    bound: MagnitudeDoc::new(&bound),
                    summary: format!("vertex count {}", magnitude_brief(&bound)),
                },
            );
            Ok(EXIT_OK)
        }
        BoundsCmd::Hyper { n, k, l } => {
            let bound = bounds::erdos_hypergraph_bound(n, k, l)?;
            emit(
                "bound-report",
                &BoundBody {
                    subject: "hyper",
                    n,
                    k: Some(k),
                    l: Some(l),
                    formula: "k^floor((n-l+1)^(l-1)/l!)",
                    bound: MagnitudeDoc::new(&bound),
                    summary: format!("ground set size {}", magnitude_brief(&bound)),
                },
            );
            Ok(EXIT_OK)
        }
        BoundsCmd::Discrepancy { n, s, a } => {
            let minimal_a = bounds::discrepancy_guarantee(n, s)?;
            let a = a.unwrap_or(minimal_a);
            let condition_holds = bounds::discrepancy_condition_holds(n, s, a)?;
            let summary = if !condition_holds {
                format!("a={a} does not satisfy condition; minimal satisfying a is {minimal_a}")
            } else if a == minimal_a {
                format!("a={a} satisfies condition; it is minimal")
            } else {
                format!("a={a} satisfies condition; minimal satisfying a is {minimal_a}")
            };
            emit(
                "discrepancy-guarantee-report",
                &DiscrepancyBoundBody { n, s, a, condition_holds, minimal_a, summary },
            );
            Ok(EXIT_OK)
        }
        BoundsCmd::RamseyBad { r, n } => {
            let b = bounds::ramsey_bad_count_bound(r, n)?;
            let body = BadCountBody {
                subject: "ramsey-bad",
                r: Some(r),
                m: None,
                n,
                l: None,
                verdict: verdict_str(b.verdict),
                exact_route: b.exact_route.map(verdict_str),
                log_route: verdict_str(b.log_route),
                bad_bound: MagnitudeDoc::new(&b.bad_bound),
                total: MagnitudeDoc::new(&b.total),
                summary: format!(
                    "verdict {}: bad-count bound {} vs total {}",
                    verdict_str(b.verdict),
                    magnitude_brief(&b.bad_bound),
                    magnitude_brief(&b.total)
                ),
            };
            emit("bad-count-report", &body);
            Ok(EXIT_OK)
        }
        BoundsCmd::HyperBad { m, n, l } => {
            let b = bounds::hypergraph_bad_count_bound(m, n, l)?;
            let body = BadCountBody {
                subject: "hyper-bad",
                r: None,
                m: Some(m),
                n,
                l: Some(l),
                verdict: verdict_str(b.verdict),
                exact_route: b.exact_route.map(verdict_str),
                log_route: verdict_str(b.log_route),
                bad_bound: MagnitudeDoc::new(&b.bad_bound),
                total: MagnitudeDoc::new(&b.total),
                summary: format!(
                    "verdict {}: bad-count bound {} vs total {}",
                    verdict_str(b.verdict),
                    magnitude_brief(&b.bad_bound),
                    magnitude_brief(&b.total)
                ),
            };
            emit("bad-count-report", &body);
            Ok(EXIT_OK)
        }
    }
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CountBadBody {
    task: &'static str,
    n: u64,
    set: Vec<u64>,
    a: u64,
    mode: &'static str,
    count: String,
    bound: String,
    verdict: &'static str,
    summary: String,
}

#[derive(Serialize)]
struct CountExceedingBody {
    task: &'static str,
    n: u64,
    s: u64,
    a: u64,
    count: String,
    bound: String,
    verdict: &'static str,
    summary: String,
}

#[derive(Serialize)]
struct OptimumBody {
    task: &'static str,
    n: u64,
    s: u64,
    optimum: u64,
    witness: InstanceBody,
    summary: String,
}

#[derive(Serialize)]
struct CountRamseyBody {
    task: &'static str,
    r: u64,
    n: u64,
    count: String,
    total: String,
    bad_count_bound: MagnitudeDoc,
    verdict: &'static str,
    summary: String,
}

fn verdict_exit(verdict: &str) -> u8 {
    if verdict == "VIOLATED" {
        EXIT_BOUND_VIOLATED
    } else {
        EXIT_OK
    }
}

fn run_oracle(cmd: OracleCmd) -> Result<u8> {
    match cmd {
        OracleCmd::CountBad { n, set, a, mode, force } => {
            if n == 0 || n > MAX_FILE_UNIVERSE {
                return Err(Error::invalid(format!("n must be in [1, {MAX_FILE_UNIVERSE}]")));
            }
            if a > u64::from(u32::MAX) {
                return Err(Error::invalid("threshold a is beyond any universe this tool accepts"));
            }
            let set = set.unwrap_or_default();
            let elements = set
                .iter()
                .map(|&e| {
                    if e < 1 || e > n {
                        Err(Error::invalid(format!("element {e} out of range [1, {n}]")))
                    } else {
                        Ok((e - 1) as usize)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Subset::from_elements(n as usize, &elements)?;
            let (mode, mode_name) = match mode {
                ModeArg::Enumerate => (CountMode::Enumerate, "enumerate"),
                ModeArg::ClosedForm => (CountMode::ClosedForm, "closed-form"),
            };
            let count = oracle::count_bad_colorings(&m, a, mode, &oracle_limits(force))?;
            let exponent =
                exponent_display(2 * (n as i128) * (n as i128) - (a as i128) * (a as i128), 2 * n as i128);
            let verdict = if n <= 4096 {
                if bounds::count_below_chernoff_closed_form(&count, n, a)? {
                    "HOLDS"
                } else {
                    "VIOLATED"
                }
            } else {
                "UNKNOWN"
            };
            let body = CountBadBody {
                task: "count-bad",
                n,
                set,
                a,
                mode: mode_name,
                count: count.to_string(),
                bound: format!("2^{{{exponent}}}"),
                verdict,
                summary: format!("count {count}, bound 2^{{{exponent}}}, {verdict}"),
            };
            emit("count-report", &body);
            Ok(verdict_exit(verdict))
        }
        OracleCmd::CountExceeding { input, a, force } => {
            let sys = instance::decode_set_system(&read_instance(&input)?)?;
            let (n, s) = (sys.n() as u64, sys.s() as u64);
            if n == 0 {
                return Err(Error::invalid("the universe must have at least one element"));
            }
            if a > u64::from(u32::MAX) {
                return Err(Error::invalid("threshold a is beyond any universe this tool accepts"));
            }
            let count = oracle::count_exceeding_colorings(&sys, a, &oracle_limits(force))?;
            let exponent =
                exponent_display(2 * (n as i128) * (n as i128) - (a as i128) * (a as i128), 2 * n as i128);
            let bound = if s == 0 { "0".to_string() } else { format!("{}*2^{{{exponent}}}", 2 * s) };
            let verdict = if bounds::count_below_union_bound(&count, n, s, a)? {
                "HOLDS"
            } else {
                "VIOLATED"
            };
            let body = CountExceedingBody {
                task: "count-exceeding",
                n,
                s,
                a,
                count: count.to_string(),
                bound: bound.clone(),
                verdict,
                summary: format!("count {count}, bound {bound}, {verdict}"),
            };
            emit("count-report", &body);
            Ok(verdict_exit(verdict))
        }
        OracleCmd::ExactDiscrepancy { input, n, force } => {
            let sys = match (input, n) {
                (Some(_), Some(_)) => {
                    return Err(Error::invalid("pass either --in or --n, not both"))
                }
                (Some(path), None) => instance::decode_set_system(&read_instance(&path)?)?,
                (None, n) => SetSystem::new(n.unwrap_or(0) as usize, Vec::new())?,
            };
            let (optimum, witness) = oracle::min_max_discrepancy(&sys, &oracle_limits(force))?;
            let body = OptimumBody {
                task: "exact-discrepancy",
                n: sys.n() as u64,
                s: sys.s() as u64,
                optimum,
                witness: instance::encode_sign_coloring(&witness),
                summary: format!("exact optimum {optimum}"),
            };
            emit("optimum-report", &body);
            Ok(EXIT_OK)
        }
        OracleCmd::CountRamsey { r, n, force } => {
            let count = oracle::count_ramsey_graphs(
                u32::try_from(r).map_err(|_| Error::invalid("r does not fit in 32 bits"))?,
                u32::try_from(n).map_err(|_| Error::invalid("n does not fit in 32 bits"))?,
                &oracle_limits(force),
            )?;
            let b = bounds::ramsey_bad_count_bound(r, n)?;
            let verdict = match b.bad_bound.less_than(&Magnitude::from_u64(count)) {
                Verdict::True => "VIOLATED",
                Verdict::False => "HOLDS",
                Verdict::Indeterminate => "UNKNOWN",
            };
            let total = magnitude_brief(&b.total);
            let body = CountRamseyBody {
                task: "count-ramsey",
                r,
                n,
                count: count.to_string(),
                total: total.clone(),
                bad_count_bound: MagnitudeDoc::new(&b.bad_bound),
                verdict,
                summary: format!(
                    "{count} of {total}; bad-count bound {}: {verdict}",
                    magnitude_brief(&b.bad_bound)
                ),
            };
            emit("count-report", &body);
            Ok(verdict_exit(verdict))
        }
    }
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FailureDoc {
    trial: u64,
    reason: String,
}

#[derive(Serialize)]
struct ConstructBody {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u64>,
    seed: u64,
    max_trials: u64,
    trials_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    success_trial: Option<u64>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<InstanceBody>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_file: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<FailureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failures_omitted: Option<u64>,
    summary: String,
}

impl ConstructBody {
    fn new(kind: &'static str, seed: u64, max_trials: u64, trials_run: u64) -> ConstructBody {
        ConstructBody {
            kind,
            n: None,
            r: None,
            k: None,
            l: None,
            m: None,
            s: None,
            a: None,
            seed,
            max_trials,
            trials_run,
            success_trial: None,
            verified: false,
            witness: None,
            witness_file: None,
            failures: Vec::new(),
            failures_omitted: None,
            summary: String::new(),
        }
    }
}

/// Fills the success/exhaustion half of a construct report. The certificate
/// is re-checked here, independently of the constructor's own accept check;
/// exit 0 requires this second verification to pass.
fn finish_construct<W: Clone>(
    mut body: ConstructBody,
    outcome: &Outcome<W>,
    certify: impl Fn(&W) -> Certificate,
    encode: impl Fn(&W) -> InstanceBody,
    out: Option<&Path>,
) -> Result<(ConstructBody, u8)> {
    match outcome {
        Outcome::Success { witness, trial } => {
            let verification = verify_certificate(&certify(witness))?;
            let doc = encode(witness);
            if let Some(path) = out {
                write_file(path, &instance::to_json(&doc))?;
                body.witness_file = Some(path.display().to_string());
            }
            body.success_trial = Some(*trial);
            body.verified = verification.ok;
            body.witness = Some(doc);
            if verification.ok {
                body.summary = format!(
                    "success at trial {} of {}; certificate verified",
                    trial, body.max_trials
                );
                Ok((body, EXIT_OK))
            } else {
                body.summary = format!("witness failed re-verification: {}", verification.reason);
                Ok((body, EXIT_VERIFY_FAILED))
            }
        }
        Outcome::Exhausted { failures } => {
            body.failures = failures
                .iter()
                .take(FAILURE_LIST_CAP)
                .map(|TrialFailure { trial, reason }| FailureDoc { trial: *trial, reason: reason.clone() })
                .collect();
            if failures.len() > FAILURE_LIST_CAP {
                body.failures_omitted = Some((failures.len() - FAILURE_LIST_CAP) as u64);
            }
            body.summary = format!("exhausted {} trials without a witness", body.max_trials);
            Ok((body, EXIT_TRIALS_EXHAUSTED))
        }
    }
}

fn run_construct(cmd: ConstructCmd) -> Result<u8> {
    let (body, code) = match cmd {
        ConstructCmd::Ramsey { n, r, opts } => {
            let report = construct::find_ramsey_graph(
                n as usize,
                r.map(|v| v as usize),
                opts.seed,
                opts.max_trials,
            )?;
            let mut body = ConstructBody::new("ramsey", opts.seed, opts.max_trials, report.trials_run);
            body.n = Some(n);
            body.r = Some(match (&report.outcome, r) {
                (Outcome::Success { witness, .. }, _) => witness.r() as u64,
                (_, Some(r)) => r,
                (_, None) => exact_u64(&bounds::erdos_graph_bound(n)?)?,
            });
            finish_construct(
                body,
                &report.outcome,
                |g| Certificate::RamseyGraph { n: n as usize, graph: g.clone() },
                instance::encode_graph,
                opts.out.as_deref(),
            )?
        }
        ConstructCmd::Multicolor { n, k, r, opts } => {
            let report = construct::find_multicolor_coloring(
                n as usize,
                k,
                r.map(|v| v as usize),
                opts.seed,
                opts.max_trials,
            )?;
            let mut body =
                ConstructBody::new("multicolor", opts.seed, opts.max_trials, report.trials_run);
            body.n = Some(n);
            body.k = Some(k);
            body.r = Some(match (&report.outcome, r) {
                (Outcome::Success { witness, .. }, _) => witness.r() as u64,
                (_, Some(r)) => r,
                (_, None) => exact_u64(&bounds::erdos_multicolor_bound(n, u64::from(k))?)?,
            });
            finish_construct(
                body,
                &report.outcome,
                |c| Certificate::MulticolorClique { n: n as usize, coloring: c.clone() },
                instance::encode_edge_coloring,
                opts.out.as_deref(),
            )?
        }
        ConstructCmd::Hyper { n, k, l, m, opts } => {
            let report = construct::find_hypergraph_coloring(
                n as usize,
                k,
                l as usize,
                m.map(|v| v as usize),
                opts.seed,
                opts.max_trials,
            )?;
            let mut body = ConstructBody::new("hyper", opts.seed, opts.max_trials, report.trials_run);
            body.n = Some(n);
            body.k = Some(k);
            body.l = Some(l);
            body.m = Some(match (&report.outcome, m) {
                (Outcome::Success { witness, .. }, _) => witness.m() as u64,
                (_, Some(m)) => m,
                (_, None) => exact_u64(&bounds::erdos_hypergraph_bound(n, u64::from(k), l)?)?,
            });
            finish_construct(
                body,
                &report.outcome,
                |c| Certificate::Hyperclique { n: n as usize, coloring: c.clone() },
                instance::encode_subset_coloring,
                opts.out.as_deref(),
            )?
        }
        ConstructCmd::Coloring { input, a, opts } => {
            let sys = instance::decode_set_system(&read_instance(&input)?)?;
            let a = match a {
                Some(a) => a,
                None => bounds::discrepancy_guarantee(sys.n() as u64, sys.s() as u64)?,
            };
            let report =
                construct::find_low_discrepancy_coloring(&sys, Some(a), opts.seed, opts.max_trials)?;
            let mut body =
                ConstructBody::new("coloring", opts.seed, opts.max_trials, report.trials_run);
            body.n = Some(sys.n() as u64);
            body.s = Some(sys.s() as u64);
            body.a = Some(a);
            finish_construct(
                body,
                &report.outcome,
                |x| Certificate::Discrepancy { a, system: sys.clone(), coloring: x.clone() },
                instance::encode_sign_coloring,
                opts.out.as_deref(),
            )?
        }
    };
    emit("construct-report", &body);
    Ok(code)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyBody {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u64>,
    ok: bool,
    reason: String,
    summary: String,
}

fn run_verify(cmd: VerifyCmd) -> Result<u8> {
    let (kind, n, a, cert) = match cmd {
        VerifyCmd::Ramsey { input, n } => {
            let graph = instance::decode_graph(&read_instance(&input)?)?;
            ("ramsey", Some(n), None, Certificate::RamseyGraph { n: n as usize, graph })
        }
        VerifyCmd::Multicolor { input, n } => {
            let coloring = instance::decode_edge_coloring(&read_instance(&input)?)?;
            ("multicolor", Some(n), None, Certificate::MulticolorClique { n: n as usize, coloring })
        }
        VerifyCmd::Hyper { input, n } => {
            let coloring = instance::decode_subset_coloring(&read_instance(&input)?)?;
            ("hyper", Some(n), None, Certificate::Hyperclique { n: n as usize, coloring })
        }
        VerifyCmd::Coloring { input, system, a } => {
            let coloring = instance::decode_sign_coloring(&read_instance(&input)?)?;
            let sys = instance::decode_set_system(&read_instance(&system)?)?;
            ("coloring", None, Some(a), Certificate::Discrepancy { a, system: sys, coloring })
        }
    };
    let verification = verify_certificate(&cert)?;
    let body = VerifyBody {
        kind,
        n,
        a,
        ok: verification.ok,
        reason: verification.reason.clone(),
        summary: format!(
            "{}: {}",
            if verification.ok { "valid" } else { "invalid" },
            verification.reason
        ),
    };
    emit("verify-report", &body);
    Ok(if verification.ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GenBody {
    kind: &'static str,
    n: u64,
    s: u64,
    club_size: u64,
    seed: u64,
    file: String,
    summary: String,
}

fn run_gen(cmd: GenCmd) -> Result<u8> {
    match cmd {
        GenCmd::Clubs { n, s, club_size, seed, out } => {
            let sys = construct::sample_clubs(n as usize, s as usize, club_size as usize, seed)?;
            let text = instance::to_json(&instance::encode_set_system(&sys));
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    let body = GenBody {
                        kind: "clubs",
                        n,
                        s,
                        club_size,
                        seed,
                        file: path.display().to_string(),
                        summary: format!("wrote {} clubs of size {club_size} over [{n}]", s),
                    };
                    emit("generate-report", &body);
                }
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
    }
}
