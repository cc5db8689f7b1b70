//! The k-power hypergraph of a graph and direct evaluation of its tensor
//! eigen-equation.
//!
//! Vertex indexing: base vertices keep their labels `0..n`. Edge `e` of the
//! base graph receives the block of `k - 2` added vertices
//! `n + e(k-2) .. n + (e+1)(k-2)`; the first vertex of each block is the
//! distinguished one used by the lift.
//!
//! The adjacency tensor is never built. Its entries are `1/(k-1)!` on every
//! ordering of a hyperedge, and `(A x^{k-1})_i` sums over the `(k-1)!`
//! orderings of `h \ {i}` for each hyperedge `h` containing `i`, all with the
//! same product. The factors cancel, so `(A x^{k-1})_i` is exactly the sum
//! over hyperedges `h ∋ i` of the product of `x` over `h \ {i}`.

use std::ops::Range;

use num_complex::Complex64;

use crate::eigen::ComplexScalar;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of hypergraph vertices accepted.
pub const MAX_TOTAL_VERTICES: usize = 4096;

/// Default residual tolerance for [`is_eigenpair`].
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerHypergraph {
    k: usize,
    base: Graph,
    hyperedges: Vec<Vec<usize>>,
}

pub fn power_hypergraph(g: &Graph, k: usize) -> Result<PowerHypergraph> {
    if k < 3 {
        return Err(Error::Invalid(format!(
            "uniformity k must be at least 3, got {k}"
        )));
    }
    let total = g
        .m()
        .checked_mul(k - 2)
        .and_then(|a| a.checked_add(g.n()))
        .unwrap_or(usize::MAX);
    if total > MAX_TOTAL_VERTICES {
        return Err(Error::Cap {
            what: "hypergraph vertex count",
            actual: total,
            limit: MAX_TOTAL_VERTICES,
        });
    }
    let n = g.n();
    let hyperedges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(i, j))| {
            let start = n + e * (k - 2);
            let mut h = vec![i, j];
            h.extend(start..start + k - 2);
            h
        })
        .collect();
    Ok(PowerHypergraph {
        k,
        base: g.clone(),
        hyperedges,
    })
}

impl PowerHypergraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn total_vertices(&self) -> usize {
        self.base.n() + self.base.m() * (self.k - 2)
    }

    /// Each hyperedge lists the base endpoints first, then the added block.
    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn added_vertices(&self, e: usize) -> Range<usize> {
        let start = self.base.n() + e * (self.k - 2);
        start..start + self.k - 2
    }

    pub fn distinguished_vertex(&self, e: usize) -> usize {
        self.base.n() + e * (self.k - 2)
    }
}

/// Candidate eigenpair `(λ, x)` of a power hypergraph.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorEigenpair {
    pub lambda: ComplexScalar,
    pub x: Vec<ComplexScalar>,
}

/// `A x^{k-1}`: for each vertex, the sum over hyperedges containing it of the
/// product of `x` over the rest of the hyperedge.
pub fn tensor_apply(h: &PowerHypergraph, x: &[ComplexScalar]) -> Result<Vec<ComplexScalar>> {
    if x.len() != h.total_vertices() {
        return Err(Error::Invalid(format!(
            "vector has length {}, hypergraph has {} vertices",
            x.len(),
            h.total_vertices()
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut out = vec![Complex64::new(0.0, 0.0); x.len()];
    let mut prefix = vec![one; h.k + 1];
    for edge in &h.hyperedges {
        for (t, &v) in edge.iter().enumerate() {
            prefix[t + 1] = prefix[t] * x[v];
        }
        let mut suffix = one;
        for (t, &v) in edge.iter().enumerate().rev() {
            out[v] += prefix[t] * suffix;
            suffix *= x[v];
        }
    }
    Ok(out)
}

/// `max_v |λ x_v^{k-1} - (A x^{k-1})_v|` with `x` first scaled to unit
/// max-modulus.
pub fn eigen_residual(h: &PowerHypergraph, pair: &TensorEigenpair) -> Result<f64> {
    let scale = pair.x.iter().fold(0.0f64, |acc, c| acc.max(c.norm()));
    if scale == 0.0 {
        return Err(Error::Invalid("eigenvector is the zero vector".into()));
    }
    if !scale.is_finite() {
        return Err(Error::Invalid("eigenvector has non-finite entries".into()));
    }
    let x: Vec<ComplexScalar> = pair.x.iter().map(|c| c / scale).collect();
    let applied = tensor_apply(h, &x)?;
    let power = (h.k - 1) as i32;
    Ok(x.iter()
        .zip(&applied)
        .map(|(xv, tv)| (pair.lambda * xv.powi(power) - tv).norm())
        .fold(0.0f64, f64::max))
}

pub fn is_eigenpair(h: &PowerHypergraph, pair: &TensorEigenpair, tol: f64) -> Result<bool> {
    Ok(eigen_residual(h, pair)? <= tol)
}
