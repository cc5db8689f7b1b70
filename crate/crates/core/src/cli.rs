//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 numeric or certification
//! failure, 4 limit exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::eigen::{adjacency_matrix, sym_eig, sym_eigvals, RealEigenpair};
use crate::error::Error;
use crate::format::{
    fmt_complex, fmt_num, parse_eigenpair, report_json, report_text, write_eigenpair,
};
use crate::graph::{
    induced_subgraph, parse_graph, parse_signed_graph, EnumerationLimits, Graph, SignedSubgraph,
};
use crate::hypergraph::{eigen_residual, power_hypergraph, DEFAULT_TOL};
use crate::lift::{lift, project, LIFT_TOL};
use crate::spectrum::{
    compare_statements_with, distinct_eigenvalues_with, statement1_eigenvalues_with,
    SpectrumOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "powerhyp",
    version,
    about = "Eigenvalues of power hypergraphs from signed subgraph spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Largest vertex count for induced-subgraph enumeration.
    #[arg(long, default_value_t = 16)]
    max_vertices: usize,
    /// Largest edge count for edge-subset enumeration.
    #[arg(long, default_value_t = 16)]
    max_edges: usize,
    /// Largest cycle rank for signing enumeration.
    #[arg(long, default_value_t = 12)]
    max_cycle_rank: usize,
}

impl LimitArgs {
    fn limits(&self) -> EnumerationLimits {
        EnumerationLimits {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            max_cycle_rank: self.max_cycle_rank,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All distinct eigenvalues of G^(k), each certified.
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        /// Only all-positive signings (the unsigned baseline).
        #[arg(long)]
        baseline: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Eigenvalues found with signings but missed by the unsigned baseline.
    Compare {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Lift an eigenpair of a signed subgraph to a tensor eigenpair of G^(k).
    Lift {
        #[arg(long)]
        graph: PathBuf,
        /// Signed subgraph, written with the graph's vertex labels.
        #[arg(long)]
        signed: PathBuf,
        #[arg(long)]
        k: usize,
        /// Which k-th root of beta^2 to use, by argument ascending.
        #[arg(long, default_value_t = 0)]
        root_index: usize,
        /// Which eigenpair of the signed subgraph, by eigenvalue descending.
        #[arg(long, default_value_t = 0)]
        eigen_index: usize,
    },
    /// Check a candidate eigenpair against the tensor equation.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Eigenpair file, or '-' for stdin.
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Recover a signed subgraph and eigenvalue from a tensor eigenpair.
    Project {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Eigenpair file, or '-' for stdin.
        #[arg(long)]
        pair: PathBuf,
    },
    /// K4 with one negative edge: an eigenvalue of K4^(3) that unsigned
    /// induced subgraphs cannot explain.
    Counterexample,
}

/// Error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Invalid(_) => EXIT_USAGE,
            Error::Cap { .. } => EXIT_CAP,
            Error::Numeric(_) | Error::Certification { .. } => EXIT_NUMERIC,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn read_input(path: &Path) -> std::result::Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn check_k(k: usize) -> std::result::Result<(), Failure> {
    if k < 3 {
        return Err(Failure::usage(format!("--k must be at least 3, got {k}")));
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Spectrum {
            graph,
            k,
            json,
            baseline,
            limits,
        } => cmd_spectrum(&graph, k, json, baseline, limits.limits(), out),
        Command::Compare { graph, k, limits } => cmd_compare(&graph, k, limits.limits(), out),
        Command::Lift {
            graph,
            signed,
            k,
            root_index,
            eigen_index,
        } => cmd_lift(&graph, &signed, k, root_index, eigen_index, out),
        Command::Verify {
            graph,
            k,
            pair,
            tol,
        } => cmd_verify(&graph, k, &pair, tol, out),
        Command::Project { graph, k, pair } => cmd_project(&graph, k, &pair, out),
        Command::Counterexample => cmd_counterexample(out),
    }
}

fn cmd_spectrum(
    graph: &Path,
    k: usize,
    json: bool,
    baseline: bool,
    limits: EnumerationLimits,
    out: &mut dyn Write,
) -> CmdResult {
    check_k(k)?;
    let g = load_graph(graph)?;
    let options = SpectrumOptions {
        limits,
        ..SpectrumOptions::default()
    };
    let report = if baseline {
        statement1_eigenvalues_with(&g, k, &options)?
    } else {
        distinct_eigenvalues_with(&g, k, &options)?
    };
    let text = if json {
        report_json(&report)
    } else {
        report_text(&report)
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_compare(
    graph: &Path,
    k: usize,
    limits: EnumerationLimits,
    out: &mut dyn Write,
) -> CmdResult {
    check_k(k)?;
    let g = load_graph(graph)?;
    let options = SpectrumOptions {
        limits,
        ..SpectrumOptions::default()
    };
    let missed = compare_statements_with(&g, k, &options)?;
    writeln!(out, "missed_by_unsigned {}", missed.len())?;
    for l in missed {
        writeln!(out, "{}", fmt_complex(l))?;
    }
    Ok(EXIT_OK)
}

fn cmd_lift(
    graph: &Path,
    signed: &Path,
    k: usize,
    root_index: usize,
    eigen_index: usize,
    out: &mut dyn Write,
) -> CmdResult {
    check_k(k)?;
    if root_index >= k {
        return Err(Failure::usage(format!(
            "--root-index must be below k = {k}, got {root_index}"
        )));
    }
    let g = load_graph(graph)?;
    let sg = parse_signed_graph(&read_input(signed)?)?;
    let sub = SignedSubgraph::from_parent_labels(&g, &sg, 0)?;
    if sub.handle().is_empty() {
        return Err(Failure::usage("signed subgraph has no edges"));
    }
    let pairs = sym_eig(&adjacency_matrix(&sub.local()))?;
    let ep = pairs.get(eigen_index).ok_or_else(|| {
        Failure::usage(format!(
            "--eigen-index {eigen_index} out of range ({} eigenpairs)",
            pairs.len()
        ))
    })?;
    let h = power_hypergraph(&g, k)?;
    let res = lift(&h, &sub, ep, root_index)?;

    writeln!(out, "# beta {}", fmt_num(res.beta))?;
    writeln!(
        out,
        "# lambda {} (root {root_index} of beta^2)",
        fmt_complex(res.pair.lambda)
    )?;
    writeln!(out, "# residual {}", fmt_num(res.residual))?;
    writeln!(
        out,
        "# vertices 0..{} are base vertices; edge e owns {} + e*{} .. (first is distinguished)",
        g.n(),
        g.n(),
        k - 2
    )?;
    out.write_all(write_eigenpair(k, &res.pair).as_bytes())?;
    Ok(EXIT_OK)
}

fn load_pair(
    g: &Graph,
    k: usize,
    pair: &Path,
) -> std::result::Result<crate::hypergraph::TensorEigenpair, Failure> {
    let (file_k, tp) = parse_eigenpair(&read_input(pair)?)?;
    if file_k != k {
        return Err(Failure::usage(format!(
            "eigenpair file has k = {file_k}, --k is {k}"
        )));
    }
    let total = g.n() + g.m() * (k - 2);
    if tp.x.len() != total {
        return Err(Failure::usage(format!(
            "eigenpair has {} coordinates, G^({k}) has {total} vertices",
            tp.x.len()
        )));
    }
    Ok(tp)
}

fn cmd_verify(graph: &Path, k: usize, pair: &Path, tol: f64, out: &mut dyn Write) -> CmdResult {
    check_k(k)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Failure::usage("--tol must be positive"));
    }
    let g = load_graph(graph)?;
    let tp = load_pair(&g, k, pair)?;
    let h = power_hypergraph(&g, k)?;
    let residual = eigen_residual(&h, &tp)?;
    let pass = residual <= tol;
    writeln!(out, "lambda {}", fmt_complex(tp.lambda))?;
    writeln!(out, "residual {}", fmt_num(residual))?;
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { EXIT_OK } else { EXIT_NUMERIC })
}

fn cmd_project(graph: &Path, k: usize, pair: &Path, out: &mut dyn Write) -> CmdResult {
    check_k(k)?;
    let g = load_graph(graph)?;
    let tp = load_pair(&g, k, pair)?;
    let h = power_hypergraph(&g, k)?;
    let proj = project(&h, &tp)?;
    let vertices: Vec<String> = proj
        .subgraph
        .handle()
        .vertex_list()
        .iter()
        .map(usize::to_string)
        .collect();
    writeln!(out, "support {}", vertices.join(" "))?;
    for &(e, s) in &proj.signing.edges {
        let (u, v) = g.edge(e);
        let label = match s {
            1 => "+1",
            -1 => "-1",
            _ => "0",
        };
        writeln!(out, "edge {u} {v} {label}")?;
    }
    writeln!(out, "beta {}", fmt_complex(proj.beta))?;
    writeln!(out, "residual {}", fmt_num(proj.residual))?;
    Ok(EXIT_OK)
}

/// Angle between two real vectors, accurate for nearly parallel inputs.
pub fn vector_angle(a: &[f64], b: &[f64]) -> f64 {
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>() / (na * nb);
    let perp: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x / na - dot * y / nb;
            d * d
        })
        .sum::<f64>()
        .sqrt();
    perp.atan2(dot.abs())
}

/// Every value the counterexample checks.
#[derive(Clone, Debug, PartialEq)]
pub struct CounterexampleOutcome {
    pub beta: f64,
    pub eigenvector: Vec<f64>,
    pub angle: f64,
    pub lambda: Complex64,
    pub residual: f64,
    /// Eigenvalues of each nonempty induced subgraph of K4, keyed by vertex mask.
    pub induced_spectra: Vec<(u64, Vec<f64>)>,
    pub checks: Vec<(String, bool)>,
}

impl CounterexampleOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn run_counterexample() -> crate::error::Result<CounterexampleOutcome> {
    let k4 = Graph::complete(4);
    let signed = parse_signed_graph("4 6\n0 1 -1\n0 2 +1\n0 3 +1\n1 2 +1\n1 3 +1\n2 3 +1")?;
    let sub = SignedSubgraph::from_parent_labels(&k4, &signed, 0)?;
    let pairs = sym_eig(&adjacency_matrix(&signed))?;
    let sqrt5 = 5f64.sqrt();
    let ep: RealEigenpair = pairs
        .iter()
        .min_by(|a, b| (a.beta - sqrt5).abs().total_cmp(&(b.beta - sqrt5).abs()))
        .expect("four eigenpairs")
        .clone();
    let expected = [sqrt5 - 1.0, sqrt5 - 1.0, 2.0, 2.0];
    let angle = vector_angle(&ep.y, &expected);

    let h = power_hypergraph(&k4, 3)?;
    let lifted = lift(&h, &sub, &ep, 0)?;
    let cube_root = 5f64.powf(1.0 / 3.0);

    let mut induced_spectra = Vec::new();
    for mask in 1..16u64 {
        let local = SignedSubgraph::all_positive(induced_subgraph(&k4, mask)).local();
        induced_spectra.push((mask, sym_eigvals(&adjacency_matrix(&local))?));
    }
    let none_square_five = induced_spectra
        .iter()
        .flat_map(|(_, v)| v)
        .all(|b| (b * b - 5.0).abs() > 1e-6);

    let checks = vec![
        (
            "beta = sqrt(5)".to_string(),
            (ep.beta - sqrt5).abs() <= 1e-9,
        ),
        (
            "eigenvector parallel to (sqrt5-1, sqrt5-1, 2, 2)".to_string(),
            angle <= 1e-8,
        ),
        (
            "lambda = 5^(1/3)".to_string(),
            (lifted.pair.lambda - Complex64::new(cube_root, 0.0)).norm() <= 1e-9,
        ),
        (
            "tensor residual <= 1e-9".to_string(),
            lifted.residual <= LIFT_TOL,
        ),
        (
            "no induced subgraph of K4 has beta^2 = 5".to_string(),
            none_square_five,
        ),
    ];
    Ok(CounterexampleOutcome {
        beta: ep.beta,
        eigenvector: ep.y,
        angle,
        lambda: lifted.pair.lambda,
        residual: lifted.residual,
        induced_spectra,
        checks,
    })
}

fn fmt_list(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| fmt_num(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_counterexample(out: &mut dyn Write) -> CmdResult {
    let outcome = run_counterexample()?;
    writeln!(out, "signed K4 with edge {{0,1}} negative")?;
    writeln!(out, "beta {}", fmt_num(outcome.beta))?;
    writeln!(out, "eigenvector {}", fmt_list(&outcome.eigenvector))?;
    let s5 = 5f64.sqrt();
    writeln!(
        out,
        "expected_direction {}",
        fmt_list(&[s5 - 1.0, s5 - 1.0, 2.0, 2.0])
    )?;
    writeln!(out, "angle {}", fmt_num(outcome.angle))?;
    writeln!(out, "lambda {}", fmt_complex(outcome.lambda))?;
    writeln!(out, "residual {}", fmt_num(outcome.residual))?;
    for size in 1..=4usize {
        let mask = (1u64 << size) - 1;
        let (_, values) = outcome
            .induced_spectra
            .iter()
            .find(|(m, _)| *m == mask)
            .expect("all masks present");
        writeln!(out, "induced K{size} {}", fmt_list(values))?;
    }
    for (name, ok) in &outcome.checks {
        writeln!(out, "[{}] {name}", if *ok { "PASS" } else { "FAIL" })?;
    }
    let passed = outcome.passed();
    writeln!(
        out,
        "counterexample {}",
        if passed { "PASS" } else { "FAIL" }
    )?;
    Ok(if passed { EXIT_OK } else { EXIT_NUMERIC })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("powerhyp").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn counterexample_passes() {
        let (code, out, _) = run_args(&["counterexample"]);
        assert_eq!(code, 0);
        assert!(out.contains("beta 2.2360679775"));
        assert!(out.contains("lambda 1.70997594668 0.0"));
        assert!(out.contains("induced K4 3.0 -1.0 -1.0 -1.0"));
        assert!(out.ends_with("counterexample PASS\n"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["spectrum", "--k", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
        let (code, _, err) = run_args(&["spectrum", "--graph", "/nonexistent", "--k", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn angle_of_parallel_vectors() {
        assert!(vector_angle(&[1.0, 2.0], &[2.0, 4.0]) < 1e-15);
        assert!(vector_angle(&[1.0, 2.0], &[-2.0, -4.0]) < 1e-15);
        assert!(
            (vector_angle(&[1.0, 0.0], &[0.0, 3.0]) - std::f64::consts::FRAC_PI_2).abs() < 1e-15
        );
    }
}
