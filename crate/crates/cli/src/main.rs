//! `nbc`: decide, construct and classify 3-balanced vertex colorings.
//!
//! Every subcommand writes JSON to stdout. Exit status is 0 when all of the
//! command's internal cross-checks pass, 1 when one fails (or, for
//! `verify`, when the coloring is not balanced), and 2 on bad input.

mod analyze;

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nbc::circulant::{linear_report, search_report, CirculantFamily, CirculantSpec};
use nbc::classify::{classify_corpus, classify_order, family_scan, Classification, ScanFamily};
use nbc::families::{
    gen_pappus, gen_petersen, mobius_coloring, mobius_ladder, pappus_coloring, petersen_coloring,
    PappusParams, PetersenParams,
};
use nbc::graph::{emit_graph6, parse_graph6, read_graph6_lines};
use nbc::{is_3_balanced, order_precheck, solve_3_balanced, stats, Coloring, Graph, SolverConfig, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "nbc", version, about = "Neighborhood 3-balanced vertex colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    /// Maximum number of color assignments the solver may try.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl SolverArgs {
    fn config(self) -> SolverConfig {
        SolverConfig::with_budget(self.budget)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Search for a 3-balanced coloring; `-` reads graph6 lines from stdin.
    Solve {
        graph: String,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check a coloring (a JSON array of 0/1/2) against a graph.
    Verify { graph: String, coloring: PathBuf },
    /// Generate a family member and its explicit coloring.
    Family {
        name: FamilyName,
        /// `m j` for petersen, `m j k` for pappus, `n` for mobius.
        #[arg(required = true, num_args = 1..)]
        params: Vec<usize>,
        /// Also write the explicit coloring to this file.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Solve every family member in a range and compare with the predicted
    /// condition; prints one JSON line per member.
    Scan {
        family: FamilyName,
        /// `A..=B`, `A-B` or `A..B` (exclusive).
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<usize>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Classify a corpus; prints one JSON record per isomorphism class and a
    /// summary on stderr.
    Classify {
        /// Enumerate all connected cubic graphs on this many vertices.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        /// Read graphs from a graph6 file.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Write the summary as JSON to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Cubic-graph tools.
    Cubic {
        #[command(subcommand)]
        command: CubicCommand,
    },
    /// Circulant-matrix checks.
    Circulant {
        #[command(subcommand)]
        command: CirculantCommand,
    },
}

#[derive(Subcommand)]
enum CubicCommand {
    /// Balancedness, coloring, matchings, forbidden patterns and dataset.
    Analyze {
        graph: String,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Subcommand)]
enum CirculantCommand {
    /// Determinant and constant solution of the count system for `n = 3^a`,
    /// plus the vanishing root-sum search.
    Verify {
        #[arg(long)]
        family: CirculantArg,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        j: usize,
        /// Ring length; defaults to `3n` (petersen) or `lcm(6, n)` (pappus).
        #[arg(long)]
        m: Option<usize>,
        /// Skip the root-sum search.
        #[arg(long)]
        no_search: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Petersen,
    Pappus,
    Mobius,
}

impl From<FamilyName> for ScanFamily {
    fn from(f: FamilyName) -> Self {
        match f {
            FamilyName::Petersen => ScanFamily::Petersen,
            FamilyName::Pappus => ScanFamily::Pappus,
            FamilyName::Mobius => ScanFamily::Mobius,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CirculantArg {
    Petersen,
    Pappus,
}

impl From<CirculantArg> for CirculantFamily {
    fn from(f: CirculantArg) -> Self {
        match f {
            CirculantArg::Petersen => CirculantFamily::Petersen,
            CirculantArg::Pappus => CirculantFamily::Pappus,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((a, b)) = s.split_once("..=") {
        Ok(num(a)?..=num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let b = num(b)?;
        if b == 0 {
            return Err("empty range".into());
        }
        Ok(num(a)?..=b - 1)
    } else if let Some((a, b)) = s.split_once('-') {
        Ok(num(a)?..=num(b)?)
    } else {
        let a = num(s)?;
        Ok(a..=a)
    }
}

fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph6(text.trim()).with_context(|| format!("invalid graph6 {text:?}"))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn print_json_pretty<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SolveRecord {
    graph6: String,
    n: usize,
    edges: usize,
    precheck: nbc::Precheck,
    /// `found`, `none` or `budget`.
    status: &'static str,
    coloring: Option<Coloring>,
    nodes: u64,
    verified: Option<bool>,
    /// For `none`: the reversed-color restart also finds nothing.
    reversed_confirms: Option<bool>,
}

impl SolveRecord {
    fn passed(&self) -> bool {
        match self.status {
            "found" => self.verified == Some(true),
            "none" => self.reversed_confirms == Some(true),
            _ => true,
        }
    }
}

fn solve_one(g: &Graph, config: SolverConfig) -> SolveRecord {
    let outcome = solve_3_balanced(g, config);
    let nodes = outcome.nodes();
    let (status, reversed_confirms) = match outcome.verdict() {
        Some(true) => ("found", None),
        Some(false) => ("none", Some(solve_3_balanced(g, config.reversed()).is_none())),
        None => ("budget", None),
    };
    let coloring = outcome.into_coloring();
    SolveRecord {
        graph6: emit_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        precheck: order_precheck(g),
        status,
        verified: coloring.as_ref().map(|c| is_3_balanced(g, c).unwrap_or(false)),
        coloring,
        nodes,
        reversed_confirms,
    }
}

fn cmd_solve(graph: &str, solver: SolverArgs) -> Result<bool> {
    let graphs = if graph == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        read_graph6_lines(&text).context("invalid graph6 on stdin")?
    } else {
        vec![parse_graph(graph)?]
    };
    let mut ok = true;
    for g in &graphs {
        let r = solve_one(g, solver.config());
        ok &= r.passed();
        print_json(&r)?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct VerifyReport {
    graph6: String,
    balanced: bool,
    stats: nbc::ColorClassStats,
}

fn cmd_verify(graph: &str, coloring: &PathBuf) -> Result<bool> {
    let g = parse_graph(graph)?;
    let text = fs::read_to_string(coloring).with_context(|| format!("reading {}", coloring.display()))?;
    let c: Coloring = serde_json::from_str(&text).context("coloring must be a JSON array of 0, 1 and 2")?;
    let balanced = is_3_balanced(&g, &c)?;
    let report = VerifyReport {
        graph6: emit_graph6(&g),
        balanced,
        stats: stats(&g, &c)?,
    };
    print_json_pretty(&report)?;
    Ok(balanced)
}

#[derive(Serialize)]
struct FamilyReport {
    family: ScanFamily,
    label: String,
    params: Vec<usize>,
    graph6: String,
    n: usize,
    edges: usize,
    predicted_balanced: bool,
    coloring: Option<Coloring>,
    coloring_verifies: Option<bool>,
}

fn cmd_family(name: FamilyName, params: &[usize], out: Option<&PathBuf>) -> Result<bool> {
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("expected {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let (label, g, predicted, coloring) = match name {
        FamilyName::Petersen => {
            arity(2)?;
            let p = PetersenParams::new(params[0], params[1])?;
            (format!("G({},{})", p.m(), p.j()), gen_petersen(p), p.predicted_balanced(), petersen_coloring(p).ok())
        }
        FamilyName::Pappus => {
            arity(3)?;
            let p = PappusParams::new(params[0], params[1], params[2])?;
            let label = format!("P({},{},{})", p.m(), p.j(), p.k());
            (label, gen_pappus(p), p.predicted_balanced(), pappus_coloring(p).ok())
        }
        FamilyName::Mobius => {
            arity(1)?;
            let n = params[0];
            (format!("M_{n}"), mobius_ladder(n)?, n.is_multiple_of(6), mobius_coloring(n).ok())
        }
    };
    let coloring_verifies = coloring.as_ref().map(|c| is_3_balanced(&g, c).unwrap_or(false));
    if let (Some(path), Some(c)) = (out, &coloring) {
        fs::write(path, serde_json::to_string(c)?).with_context(|| format!("writing {}", path.display()))?;
    }
    let report = FamilyReport {
        family: name.into(),
        label,
        params: params.to_vec(),
        graph6: emit_graph6(&g),
        n: g.n(),
        edges: g.edge_count(),
        predicted_balanced: predicted,
        coloring,
        coloring_verifies,
    };
    print_json_pretty(&report)?;
    Ok(report.coloring_verifies != Some(false))
}

fn cmd_scan(family: FamilyName, range: RangeInclusive<usize>, solver: SolverArgs) -> Result<bool> {
    let rows = family_scan(family.into(), range, solver.config());
    for r in &rows {
        print_json(r)?;
    }
    let agree = rows.iter().filter(|r| r.agree).count();
    let solvable = rows.iter().filter(|r| r.solvable == Some(true)).count();
    eprintln!("{} instances, {solvable} balanced, {agree} agree with the prediction", rows.len());
    Ok(agree == rows.len())
}

fn human_summary(c: &Classification) -> String {
    let s = &c.summary;
    let patterns: Vec<String> = s.pattern_counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
    let mut out = format!(
        "{} graphs: {} balanced, {} not balanced, {} undecided (budget)\n\
         precheck failures: {}\n\
         non-balanced cubic: bridge {}, patterns [{}], non-Tait {}\n",
        s.total,
        s.balanced,
        s.not_balanced,
        s.budget_exhausted,
        s.precheck_failed,
        s.with_bridge,
        patterns.join(", "),
        s.non_tait,
    );
    if !s.only_non_tait.is_empty() {
        out += &format!("explained only by the missing Tait coloring: {}\n", s.only_non_tait.join(" "));
    }
    if !s.unexplained.is_empty() {
        out += &format!("unexplained: {}\n", s.unexplained.join(" "));
    }
    out += if s.all_checks_passed {
        "all cross-checks passed"
    } else {
        "cross-check FAILED"
    };
    if !s.inconsistent.is_empty() {
        out += &format!(": {}", s.inconsistent.join(" "));
    }
    out
}

fn cmd_classify(n: Option<usize>, input: Option<&PathBuf>, summary: Option<&PathBuf>, solver: SolverArgs) -> Result<bool> {
    let c = match (n, input) {
        (Some(n), _) => classify_order(n, solver.config())?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graphs = read_graph6_lines(&text).with_context(|| format!("parsing {}", path.display()))?;
            classify_corpus(&graphs, solver.config())
        }
        (None, None) => bail!("give --n or --in"),
    };
    for r in &c.records {
        print_json(r)?;
    }
    if let Some(path) = summary {
        fs::write(path, serde_json::to_string_pretty(&c.summary)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    eprintln!("{}", human_summary(&c));
    Ok(c.summary.all_checks_passed)
}

#[derive(Serialize)]
struct CirculantReport {
    linear: nbc::circulant::LinearReport,
    search: Option<nbc::circulant::SearchReport>,
    checks_passed: bool,
}

fn cmd_circulant(family: CirculantArg, a: u32, j: usize, m: Option<usize>, no_search: bool) -> Result<bool> {
    let family = CirculantFamily::from(family);
    let n = 3usize
        .checked_pow(a)
        .filter(|_| a >= 1)
        .with_context(|| format!("a = {a} out of range"))?;
    let m = m.unwrap_or_else(|| family.default_m(n));
    let spec = CirculantSpec::power_of_three(a, j, Some(m))?;
    let linear = linear_report(family, &spec)?;
    let search = (!no_search).then(|| search_report(family));
    // Extra vanishing sums beyond the expected ones are reported but do not
    // fail the check; a missing expected solution does.
    let checks_passed = linear.passed() && search.as_ref().is_none_or(|s| s.missing.is_empty());
    print_json_pretty(&CirculantReport {
        linear,
        search,
        checks_passed,
    })?;
    Ok(checks_passed)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { graph, solver } => cmd_solve(&graph, solver),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Family { name, params, coloring } => cmd_family(name, &params, coloring.as_ref()),
        Command::Scan { family, range, solver } => cmd_scan(family, range, solver),
        Command::Classify {
            n,
            input,
            summary,
            solver,
        } => cmd_classify(n, input.as_ref(), summary.as_ref(), solver),
        Command::Cubic {
            command: CubicCommand::Analyze { graph, solver },
        } => {
            let report = analyze::analyze(&parse_graph(&graph)?, solver.config())?;
            print_json_pretty(&report)?;
            Ok(report.checks_passed)
        }
        Command::Circulant {
            command:
                CirculantCommand::Verify {
                    family,
                    a,
                    j,
                    m,
                    no_search,
                },
        } => cmd_circulant(family, a, j, m, no_search),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // A closed pipe (`nbc ... | head`) is not an error.
        Err(e) if e.chain().any(|c| c.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
