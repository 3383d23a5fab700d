//! Command-line interface: analyze, verify, sweep, decompose, spectrum.
//!
//! Exit codes: 0 success, 1 a check failed, 2 spec-document error,
//! 3 enumeration cap exceeded. Reports go to `--out` (or stdout); all
//! diagnostics go to stderr, so report output never interleaves with them.
//! Every flag has a `CHEEGERLAB_*` environment variable twin; caps given in
//! the spec document override both.

use crate::combinatorics::EnumConfig;
use crate::corpus;
use crate::graph::Family;
use crate::group::cycle_notation;
use crate::harness::{self, CheckReport, CheckValue, InstanceData, SweepInstance, Verdict};
use crate::matching::birkhoff_decompose;
use crate::report::{self, csv_row, AnalysisReport, ConstantsBlock, CSV_HEADER};
use crate::spec_doc::{self, ResolvedSpec, SpecError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_SPEC_ERROR: u8 = 2;
pub const EXIT_CAP_EXCEEDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cheegerlab",
    version,
    about = "Exact isoperimetric constants of algebraic graphs and a verifier for the classical inequalities relating them"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a full analysis report (constants, witnesses, spectrum, checks)
    Analyze(AnalyzeArgs),
    /// Run the inequality checks and print a margin table
    Verify(VerifyArgs),
    /// Run the full suite over a graph family and write per-instance rows
    Sweep(SweepArgs),
    /// Print the Birkhoff-von Neumann permutations, one per line
    Decompose(SpecOnly),
    /// Print the normalized spectrum
    Spectrum(SpecOnly),
}

#[derive(Args, Clone)]
struct Knobs {
    /// Worker threads for the exhaustive scans
    #[arg(long, env = "CHEEGERLAB_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Max vertex count for subset (2^n) scans
    #[arg(long, env = "CHEEGERLAB_SUBSET_CAP", default_value_t = 24)]
    subset_cap: usize,
    /// Max vertex count for ternary (3^n) scans
    #[arg(long, env = "CHEEGERLAB_TERNARY_CAP", default_value_t = 16)]
    ternary_cap: usize,
    /// Seed for sampled checks
    #[arg(long, env = "CHEEGERLAB_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph-spec document (JSON)
    #[arg(long)]
    spec: PathBuf,
    /// Output path; stdout when omitted
    #[arg(long, env = "CHEEGERLAB_OUT")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, env = "CHEEGERLAB_FORMAT", default_value = "json")]
    format: OutputFormat,
    #[command(flatten)]
    knobs: Knobs,
    /// Self-test hook: feed the spectral stage an inconsistent graph so the
    /// checks must fail
    #[arg(long, hide = true)]
    debug_corrupt_spectrum: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    spec: PathBuf,
    #[command(flatten)]
    knobs: Knobs,
    #[arg(long, hide = true)]
    debug_corrupt_spectrum: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyFlag {
    /// Odd cycles as Cayley graphs of cyclic groups
    OddCycles,
    /// Cayley sum graphs of cyclic groups with S = {0, 1}
    CyclicSums,
    /// Dihedral Cayley graphs with the mixed-parity connection set
    DihedralCayley,
    /// Symmetric-group Cayley graphs (n = 3, 4)
    SymmetricCayley,
    /// Negation-twisted Cayley graphs of odd cyclic groups
    TwistedCayleyNeg,
    /// Negation-twisted Cayley sum graphs of odd cyclic groups
    TwistedSumNeg,
    /// The Petersen orbit graph
    Petersen,
    /// The full standard corpus, filtered by n
    Corpus,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyFlag,
    /// Smallest parameter / vertex count to include
    #[arg(long, default_value_t = 3)]
    min: usize,
    /// Largest parameter / vertex count to include
    #[arg(long, default_value_t = 13)]
    max: usize,
    #[arg(long, env = "CHEEGERLAB_OUT")]
    out: Option<PathBuf>,
    #[command(flatten)]
    knobs: Knobs,
}

#[derive(Args)]
struct SpecOnly {
    #[arg(long)]
    spec: PathBuf,
    #[command(flatten)]
    knobs: Knobs,
}

fn config_for(knobs: &Knobs, doc_caps: Option<&spec_doc::CapsOverride>) -> EnumConfig {
    let mut cfg = EnumConfig {
        subset_cap: knobs.subset_cap,
        ternary_cap: knobs.ternary_cap,
        jobs: knobs.jobs,
    };
    if let Some(caps) = doc_caps {
        if let Some(s) = caps.subset {
            cfg.subset_cap = s;
        }
        if let Some(t) = caps.ternary {
            cfg.ternary_cap = t;
        }
    }
    cfg
}

fn load_resolved(path: &std::path::Path) -> Result<(ResolvedSpec, f64), SpecError> {
    let start = Instant::now();
    let doc = spec_doc::load_document(path)?;
    let resolved = spec_doc::resolve(doc)?;
    Ok((resolved, start.elapsed().as_secs_f64() * 1e3))
}

fn fail_spec(e: &SpecError) -> u8 {
    eprintln!("error: {e}");
    EXIT_SPEC_ERROR
}

fn write_output(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn format_value(v: &CheckValue) -> String {
    match v {
        CheckValue::Exact(r) => r.fraction_string(),
        CheckValue::Real(x) => format!("{x:.9}"),
        CheckValue::Count(c) => c.to_string(),
        CheckValue::Absent => "-".to_string(),
    }
}

fn print_margin_table(checks: &[CheckReport]) {
    println!(
        "{:<34} {:<13} {:>16} {:>16} {:>14}",
        "check", "verdict", "lhs", "rhs", "margin"
    );
    for c in checks {
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Inapplicable => "inapplicable",
        };
        println!(
            "{:<34} {:<13} {:>16} {:>16} {:>14.9}",
            c.check_id,
            verdict,
            format_value(&c.lhs),
            format_value(&c.rhs),
            c.margin
        );
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> u8 {
    let (resolved, build_ms) = match load_resolved(&args.spec) {
        Ok(r) => r,
        Err(e) => return fail_spec(&e),
    };
    let cfg = config_for(&args.knobs, resolved.doc.caps.as_ref());
    if resolved.gr.n() > cfg.subset_cap {
        eprintln!(
            "error: graph on {} vertices exceeds the subset enumeration cap of {}",
            resolved.gr.n(),
            cfg.subset_cap
        );
        return EXIT_CAP_EXCEEDED;
    }
    let report = match report::analyze(
        &resolved,
        &cfg,
        args.knobs.seed,
        build_ms,
        args.debug_corrupt_spectrum,
    ) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    let content = match args.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        OutputFormat::Csv => analyze_csv(&report),
    };
    if let Err(e) = write_output(&args.out, &content) {
        eprintln!("error: cannot write output: {e}");
        return EXIT_SPEC_ERROR;
    }
    EXIT_OK
}

fn analyze_csv(report: &AnalysisReport) -> String {
    let verdicts: Vec<(String, Verdict)> = report
        .checks
        .iter()
        .map(|c| (c.check_id.clone(), c.verdict))
        .collect();
    format!(
        "{CSV_HEADER}\n{}\n",
        csv_row(
            &report.graph.family,
            report.graph.n,
            report.graph.d,
            &report.constants,
            report.spectrum.mu2,
            report.spectrum.mu_n,
            &verdicts,
            "ok",
            &report.graph.adjacency_hash,
        )
    )
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let (resolved, _) = match load_resolved(&args.spec) {
        Ok(r) => r,
        Err(e) => return fail_spec(&e),
    };
    let cfg = config_for(&args.knobs, resolved.doc.caps.as_ref());
    if resolved.gr.n() > cfg.subset_cap {
        eprintln!(
            "error: graph on {} vertices exceeds the subset enumeration cap of {}",
            resolved.gr.n(),
            cfg.subset_cap
        );
        return EXIT_CAP_EXCEEDED;
    }
    let mut data = match InstanceData::compute(
        "verify",
        &resolved.gr,
        &resolved.group,
        &resolved.action,
        &cfg,
    ) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    if args.debug_corrupt_spectrum {
        let n = resolved.gr.n();
        let mut adj = vec![1u32; n * n];
        for v in 0..n {
            adj[v * n + v] = 0;
        }
        let complete = crate::graph::RegularMultigraph::from_adjacency(
            n,
            adj,
            crate::graph::Provenance {
                family: Family::Cayley,
                description: "debug-corrupt-complete".into(),
            },
        )
        .expect("complete graph is regular");
        data.spectrum = match crate::spectral::normalized_spectrum(&complete) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CHECK_FAILED;
            }
        };
    }
    let checks = harness::verify_suite(&data);
    print_margin_table(&checks);
    let failing: Vec<&str> = checks
        .iter()
        .filter(|c| c.verdict == Verdict::Fail)
        .map(|c| c.check_id.as_str())
        .collect();
    if failing.is_empty() {
        EXIT_OK
    } else {
        eprintln!("failed checks: {}", failing.join(", "));
        EXIT_CHECK_FAILED
    }
}

fn sweep_instances(args: &SweepArgs) -> Result<Vec<SweepInstance>, corpus::CorpusError> {
    let (min, max) = (args.min, args.max);
    Ok(match args.family {
        FamilyFlag::OddCycles => corpus::odd_cycles(min, max)?,
        FamilyFlag::CyclicSums => corpus::cyclic_sums(min, max)?,
        FamilyFlag::DihedralCayley => corpus::dihedral_cayley_range(min, max)?,
        FamilyFlag::SymmetricCayley => (min.max(3)..=max.min(4))
            .map(corpus::symmetric_cayley)
            .collect::<Result<Vec<_>, _>>()?,
        FamilyFlag::TwistedCayleyNeg => corpus::twisted_negations(min, max)?,
        FamilyFlag::TwistedSumNeg => corpus::twisted_sum_negations(min, max)?,
        FamilyFlag::Petersen => vec![corpus::petersen()?],
        FamilyFlag::Corpus => corpus::standard_corpus()?
            .into_iter()
            .filter(|i| (min..=max).contains(&i.gr.n()))
            .collect(),
    })
}

fn cmd_sweep(args: &SweepArgs) -> u8 {
    let instances = match sweep_instances(args) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_SPEC_ERROR;
        }
    };
    let cfg = config_for(&args.knobs, None);
    let sweep_report = harness::sweep(&instances, &cfg, args.knobs.seed);
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &sweep_report.rows {
        let constants = ConstantsBlock {
            edge_cheeger: row.edge_cheeger.clone(),
            vertex_cheeger: row.vertex_cheeger.clone(),
            edge_bipartiteness: row.beta_edge.clone(),
            vertex_bipartiteness: row.beta_vert.clone(),
        };
        let status = match &row.skipped {
            Some(reason) => format!("skipped: {reason}"),
            None => "ok".to_string(),
        };
        out.push_str(&csv_row(
            &row.family,
            row.n,
            row.d,
            &constants,
            row.mu2,
            row.mu_n,
            &row.verdicts,
            &status.replace(',', ";"),
            &row.name,
        ));
        out.push('\n');
    }
    let tightness = &sweep_report.tightness;
    for (tag, slot) in [
        ("edge_ratio_min", &tightness.edge_ratio_min),
        ("vert_ratio_min", &tightness.vert_ratio_min),
        ("square_ratio_min", &tightness.square_ratio_min),
    ] {
        match slot {
            Some((value, name)) => out.push_str(&format!(
                "# tightness {tag} = {} ({}) at {name}\n",
                value.fraction_string(),
                value.decimal_string()
            )),
            None => out.push_str(&format!("# tightness {tag} = n/a\n")),
        }
    }
    if let Err(e) = write_output(&args.out, &out) {
        eprintln!("error: cannot write output: {e}");
        return EXIT_SPEC_ERROR;
    }
    if let Some(fatal) = &sweep_report.fatal {
        eprintln!("fatal: {fatal}");
        return EXIT_CHECK_FAILED;
    }
    EXIT_OK
}

fn cmd_decompose(args: &SpecOnly) -> u8 {
    let (resolved, _) = match load_resolved(&args.spec) {
        Ok(r) => r,
        Err(e) => return fail_spec(&e),
    };
    match birkhoff_decompose(&resolved.gr) {
        Ok(list) => {
            for p in list.permutations() {
                println!("{}", cycle_notation(p));
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn cmd_spectrum(args: &SpecOnly) -> u8 {
    let (resolved, _) = match load_resolved(&args.spec) {
        Ok(r) => r,
        Err(e) => return fail_spec(&e),
    };
    match crate::spectral::normalized_spectrum(&resolved.gr) {
        Ok(report) => {
            let line = report
                .eigenvalues
                .iter()
                .map(|&x| format!("{:.9}", if x == 0.0 { 0.0 } else { x }))
                .collect::<Vec<_>>()
                .join(", ");
            println!("{line}");
            println!("mu2 = {:.9}", report.mu2);
            println!("mu_n = {:.9}", report.mu_n);
            println!("upper_gap = {:.9}", report.upper_gap);
            println!("lower_gap = {:.9}", report.lower_gap);
            println!("residual = {:.3e}", report.residual);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

pub fn run(cli: Cli) -> u8 {
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Spectrum(args) => cmd_spectrum(args),
    }
}
