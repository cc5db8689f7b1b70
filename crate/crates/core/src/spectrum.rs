//! All distinct eigenvalues of `G^(k)` from the spectra of signed subgraphs.
//!
//! For `k = 3` the candidates come from signed induced subgraphs, for
//! `k >= 4` from signed edge-subset subgraphs, one signing per switching
//! class. Each nonzero eigenvalue `β` contributes the `k` roots of
//! `λ^k = β²`; `λ = 0` is always present. Every reported nonzero value is
//! certified by lifting an eigenvector of its source subgraph.
//!
//! The unsigned variant (all-positive signings only) is kept as a baseline:
//! it misses eigenvalues, and [`compare_statements`] lists what it misses.

use std::cmp::Ordering;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::eigen::{
    adjacency_matrix, kth_roots, spectral_radius, sym_eig, sym_eigvals, ComplexScalar,
};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_edge_subsets, enumerate_induced_subgraphs, enumerate_signings_mod_switching,
    EdgeSign, EnumerationLimits, Graph, SignedSubgraph, SubgraphHandle,
};
use crate::hypergraph::{eigen_residual, power_hypergraph, PowerHypergraph, TensorEigenpair};
use crate::lift::{lift, LIFT_TOL, ZERO_BETA_TOL};

/// Two eigenvalues closer than this are reported once.
pub const DEDUP_TOL: f64 = 1e-8;

/// Which subgraphs of `G` are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgraphFamily {
    Induced,
    EdgeSubsets,
}

impl SubgraphFamily {
    /// Induced subgraphs for `k = 3`, all subgraphs otherwise.
    pub fn for_k(k: usize) -> Self {
        if k == 3 {
            SubgraphFamily::Induced
        } else {
            SubgraphFamily::EdgeSubsets
        }
    }
}

/// Which signings of each subgraph are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigningMode {
    /// One representative per switching class.
    ModSwitching,
    /// Only the all-positive signing.
    PositiveOnly,
}

/// The signed subgraph an eigenvalue was read from, in parent labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Provenance {
    pub vertices: Vec<usize>,
    /// `(u, v, sign)` with sign `±1`.
    pub edges: Vec<(usize, usize, i8)>,
}

impl Provenance {
    pub fn of(sub: &SignedSubgraph<'_>) -> Self {
        Provenance {
            vertices: sub.handle().vertex_list(),
            edges: sub
                .labelled_edges()
                .into_iter()
                .map(|(u, v, s)| (u, v, s.value()))
                .collect(),
        }
    }

    /// Single vertex `0`, no edges: the source of `λ = 0`.
    pub fn single_vertex() -> Self {
        Provenance {
            vertices: vec![0],
            edges: Vec::new(),
        }
    }

    /// Rebuilds the signed subgraph inside `g`.
    pub fn to_subgraph<'g>(&self, g: &'g Graph) -> Result<SignedSubgraph<'g>> {
        let mut vertices = 0u64;
        for &v in &self.vertices {
            if v >= g.n() {
                return Err(Error::Invalid(format!(
                    "provenance vertex {v} out of range"
                )));
            }
            vertices |= 1u64 << v;
        }
        let mut by_index = Vec::with_capacity(self.edges.len());
        for &(u, v, s) in &self.edges {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| Error::Invalid(format!("provenance edge {u} {v} not in graph")))?;
            let sign = EdgeSign::from_value(s)
                .ok_or_else(|| Error::Invalid(format!("provenance sign {s} is not ±1")))?;
            by_index.push((e, sign));
        }
        by_index.sort_unstable();
        let edges = by_index.iter().fold(0u64, |acc, &(e, _)| acc | (1u64 << e));
        let handle = SubgraphHandle::new(g, vertices, edges)?;
        SignedSubgraph::new(handle, by_index.into_iter().map(|(_, s)| s).collect())
    }

    pub fn describe(&self) -> String {
        let vertices: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v, s)| format!("{u}-{v}:{}", if *s > 0 { "+" } else { "-" }))
            .collect();
        format!("V={{{}}} E={{{}}}", vertices.join(","), edges.join(","))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub lambda: ComplexScalar,
    /// Argument in `[0, 2π/k)`.
    pub canonical: bool,
    pub beta: f64,
    pub provenance: Provenance,
    pub certified: bool,
    pub residual: f64,
    /// Also produced by unsigned subgraphs alone.
    pub statement1_only: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub total_vertices: usize,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn contains(&self, lambda: ComplexScalar, tol: f64) -> bool {
        self.entries
            .iter()
            .any(|e| (e.lambda - lambda).norm() <= tol)
    }

    pub fn max_modulus(&self) -> f64 {
        self.entries
            .iter()
            .fold(0.0f64, |acc, e| acc.max(e.lambda.norm()))
    }

    pub fn canonical_count(&self) -> usize {
        self.entries.iter().filter(|e| e.canonical).count()
    }

    /// Whether multiplying every entry by `e^{2πi/k}` lands on an entry.
    pub fn is_root_closed(&self, tol: f64) -> bool {
        let omega = Complex64::from_polar(1.0, std::f64::consts::TAU / self.k as f64);
        self.entries
            .iter()
            .all(|e| self.contains(e.lambda * omega, tol))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumOptions {
    pub limits: EnumerationLimits,
    pub dedup_tol: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            limits: EnumerationLimits::default(),
            dedup_tol: DEDUP_TOL,
        }
    }
}

/// A nonzero eigenvalue and the signed subgraph it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub beta: f64,
    pub provenance: Provenance,
    pub all_positive: bool,
}

fn handles<'g>(
    g: &'g Graph,
    family: SubgraphFamily,
    limits: &EnumerationLimits,
) -> Result<Vec<SubgraphHandle<'g>>> {
    let all: Vec<SubgraphHandle<'g>> = match family {
        SubgraphFamily::Induced => enumerate_induced_subgraphs(g, limits.max_vertices)?.collect(),
        SubgraphFamily::EdgeSubsets => enumerate_edge_subsets(g, limits.max_edges)?.collect(),
    };
    // Edgeless subgraphs only have eigenvalue 0.
    Ok(all.into_iter().filter(|h| h.edge_count() > 0).collect())
}

fn signed_subgraphs<'g>(
    h: &SubgraphHandle<'g>,
    mode: SigningMode,
    limits: &EnumerationLimits,
) -> Result<Vec<SignedSubgraph<'g>>> {
    match mode {
        SigningMode::PositiveOnly => Ok(vec![SignedSubgraph::all_positive(*h)]),
        SigningMode::ModSwitching => {
            Ok(enumerate_signings_mod_switching(h, limits.max_cycle_rank)?.collect())
        }
    }
}

/// Every signed subgraph searched for the given family and mode, in
/// enumeration order.
pub fn signed_subgraph_stream<'g>(
    g: &'g Graph,
    family: SubgraphFamily,
    mode: SigningMode,
    limits: &EnumerationLimits,
) -> Result<Vec<SignedSubgraph<'g>>> {
    let mut out = Vec::new();
    for h in handles(g, family, limits)? {
        out.extend(signed_subgraphs(&h, mode, limits)?);
    }
    Ok(out)
}

/// Nonzero eigenvalues of every searched signed subgraph, with provenance.
/// Within one signed subgraph, repeated eigenvalues are listed once.
pub fn collect_candidates(
    g: &Graph,
    family: SubgraphFamily,
    mode: SigningMode,
    limits: &EnumerationLimits,
) -> Result<Vec<Candidate>> {
    let hs = handles(g, family, limits)?;
    let per_handle: Vec<Result<Vec<Candidate>>> = hs
        .par_iter()
        .map(|h| {
            let mut out = Vec::new();
            for sub in signed_subgraphs(h, mode, limits)? {
                let values = sym_eigvals(&adjacency_matrix(&sub.local()))?;
                let provenance = Provenance::of(&sub);
                let all_positive = sub.is_all_positive();
                let mut last: Option<f64> = None;
                for beta in values {
                    if beta.abs() <= ZERO_BETA_TOL {
                        continue;
                    }
                    if last.is_some_and(|b| (b - beta).abs() <= DEDUP_TOL) {
                        continue;
                    }
                    last = Some(beta);
                    out.push(Candidate {
                        beta,
                        provenance: provenance.clone(),
                        all_positive,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for part in per_handle {
        all.extend(part?);
    }
    Ok(all)
}

struct Cluster {
    beta: f64,
    provenance: Provenance,
    statement1: bool,
}

/// Groups candidates whose canonical roots `|β|^{2/k}` chain together within
/// `tol`. Roots of two clusters at the same argument differ by exactly the
/// gap between their moduli, and roots at different arguments are farther
/// apart still, so this is the λ-level tolerance.
fn cluster_candidates(mut candidates: Vec<Candidate>, k: usize, tol: f64) -> Vec<Cluster> {
    let modulus = |b: f64| b.abs().powf(2.0 / k as f64);
    candidates.sort_by(|a, b| {
        a.beta
            .abs()
            .total_cmp(&b.beta.abs())
            .then_with(|| a.provenance.cmp(&b.provenance))
    });
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut prev: Option<f64> = None;
    for c in candidates {
        let r = modulus(c.beta);
        let joins = prev.is_some_and(|p| r - p <= tol);
        prev = Some(r);
        if joins {
            let last = clusters.last_mut().expect("cluster open");
            last.statement1 |= c.all_positive;
            let better = match c.provenance.cmp(&last.provenance) {
                Ordering::Less => true,
                Ordering::Equal => c.beta < last.beta,
                Ordering::Greater => false,
            };
            if better {
                last.beta = c.beta;
                last.provenance = c.provenance;
            }
        } else {
            clusters.push(Cluster {
                beta: c.beta,
                provenance: c.provenance,
                statement1: c.all_positive,
            });
        }
    }
    clusters
}

fn zero_entry(h: &PowerHypergraph) -> Result<SpectrumEntry> {
    let mut x = vec![Complex64::new(0.0, 0.0); h.total_vertices()];
    x[0] = Complex64::new(1.0, 0.0);
    let pair = TensorEigenpair {
        lambda: Complex64::new(0.0, 0.0),
        x,
    };
    let residual = eigen_residual(h, &pair)?;
    Ok(SpectrumEntry {
        lambda: pair.lambda,
        canonical: true,
        beta: 0.0,
        provenance: Provenance::single_vertex(),
        certified: residual <= LIFT_TOL,
        residual,
        statement1_only: true,
    })
}

/// The `k` entries for one cluster, each certified by a lift.
fn cluster_entries(
    g: &Graph,
    h: &PowerHypergraph,
    cluster: &Cluster,
) -> Result<Vec<SpectrumEntry>> {
    let k = h.k();
    let sub = cluster.provenance.to_subgraph(g)?;
    let ep = sym_eig(&adjacency_matrix(&sub.local()))?
        .into_iter()
        .min_by(|a, b| {
            (a.beta - cluster.beta)
                .abs()
                .total_cmp(&(b.beta - cluster.beta).abs())
        })
        .expect("nonempty subgraph");
    let lambdas = kth_roots(Complex64::new(ep.beta * ep.beta, 0.0), k as u32);
    lambdas
        .into_iter()
        .enumerate()
        .map(|(root, lambda)| {
            let lifted = lift(h, &sub, &ep, root)?;
            Ok(SpectrumEntry {
                lambda,
                canonical: root == 0,
                beta: ep.beta,
                provenance: cluster.provenance.clone(),
                certified: lifted.residual <= LIFT_TOL,
                residual: lifted.residual,
                statement1_only: cluster.statement1,
            })
        })
        .collect()
}

/// Drops entries within `tol` of an already kept one, visiting entries in
/// provenance order so the smallest provenance survives. Kept entries stay in
/// their original order.
pub fn dedup_entries(entries: Vec<SpectrumEntry>, tol: f64) -> Vec<SpectrumEntry> {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| entries[a].provenance.cmp(&entries[b].provenance));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        let li = entries[i].lambda;
        if !kept.iter().any(|&j| (entries[j].lambda - li).norm() <= tol) {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    let mut keep = vec![false; entries.len()];
    for i in kept {
        keep[i] = true;
    }
    entries
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}

fn build_report(
    g: &Graph,
    k: usize,
    family: SubgraphFamily,
    mode: SigningMode,
    options: &SpectrumOptions,
) -> Result<SpectrumReport> {
    let h = power_hypergraph(g, k)?;
    let candidates = collect_candidates(g, family, mode, &options.limits)?;
    let clusters = cluster_candidates(candidates, k, options.dedup_tol);

    let per_cluster: Vec<Result<Vec<SpectrumEntry>>> = clusters
        .par_iter()
        .map(|c| cluster_entries(g, &h, c))
        .collect();
    let mut entries = vec![zero_entry(&h)?];
    for part in per_cluster {
        entries.extend(part?);
    }
    if mode == SigningMode::PositiveOnly {
        for e in entries.iter_mut() {
            e.statement1_only = true;
        }
    }
    if let Some(bad) = entries.iter().find(|e| !e.certified) {
        return Err(Error::Certification {
            residual: bad.residual,
            tolerance: LIFT_TOL,
        });
    }
    let entries = dedup_entries(entries, options.dedup_tol);
    Ok(SpectrumReport {
        k,
        n: g.n(),
        m: g.m(),
        total_vertices: h.total_vertices(),
        entries,
    })
}

/// All distinct eigenvalues of `G^(k)`, from signed (induced for `k = 3`)
/// subgraphs.
pub fn distinct_eigenvalues(g: &Graph, k: usize) -> Result<SpectrumReport> {
    distinct_eigenvalues_with(g, k, &SpectrumOptions::default())
}

pub fn distinct_eigenvalues_with(
    g: &Graph,
    k: usize,
    options: &SpectrumOptions,
) -> Result<SpectrumReport> {
    build_report(
        g,
        k,
        SubgraphFamily::for_k(k),
        SigningMode::ModSwitching,
        options,
    )
}

/// The unsigned baseline: same pipeline, all-positive signings only. Every
/// value it reports is a genuine eigenvalue, but not every eigenvalue is
/// reported.
pub fn statement1_eigenvalues(g: &Graph, k: usize) -> Result<SpectrumReport> {
    statement1_eigenvalues_with(g, k, &SpectrumOptions::default())
}

pub fn statement1_eigenvalues_with(
    g: &Graph,
    k: usize,
    options: &SpectrumOptions,
) -> Result<SpectrumReport> {
    build_report(
        g,
        k,
        SubgraphFamily::for_k(k),
        SigningMode::PositiveOnly,
        options,
    )
}

/// Certified eigenvalues that the unsigned baseline misses.
pub fn compare_statements(g: &Graph, k: usize) -> Result<Vec<ComplexScalar>> {
    compare_statements_with(g, k, &SpectrumOptions::default())
}

pub fn compare_statements_with(
    g: &Graph,
    k: usize,
    options: &SpectrumOptions,
) -> Result<Vec<ComplexScalar>> {
    let full = distinct_eigenvalues_with(g, k, options)?;
    let baseline = statement1_eigenvalues_with(g, k, options)?;
    Ok(full
        .entries
        .iter()
        .filter(|e| e.certified && !baseline.contains(e.lambda, options.dedup_tol))
        .map(|e| e.lambda)
        .collect())
}

/// `(max |λ| over the report, ρ(G)^{2/k})`.
pub fn spectral_radius_check(g: &Graph, k: usize) -> Result<(f64, f64)> {
    let report = distinct_eigenvalues(g, k)?;
    let rho = spectral_radius(g)?;
    Ok((report.max_modulus(), rho.powf(2.0 / k as f64)))
}
