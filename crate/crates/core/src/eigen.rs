//! Dense real-symmetric eigensolver and complex root helpers.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Graph, SignedGraph};

/// Complex scalars throughout the crate.
pub type ComplexScalar = Complex64;

/// Largest matrix accepted by [`sym_eig`].
pub const MAX_DIM: usize = 64;

/// Relative off-diagonal tolerance at which Jacobi sweeps stop.
pub const JACOBI_TOL: f64 = 1e-13;

pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Invalid(format!(
                "{} entries for a {dim}x{dim} matrix",
                data.len()
            )));
        }
        if let Some(x) = data.iter().find(|x| !x.is_finite()) {
            return Err(Error::Invalid(format!("non-finite entry {x}")));
        }
        for i in 0..dim {
            for j in 0..i {
                if data[i * dim + j] != data[j * dim + i] {
                    return Err(Error::Invalid(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SymMatrix { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
        self.data[j * self.dim + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| {
                let row = &self.data[i * self.dim..(i + 1) * self.dim];
                row.iter().zip(x).map(|(a, b)| a * b).sum()
            })
            .collect()
    }
}

/// Eigenvalue and unit eigenvector of a symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RealEigenpair {
    pub beta: f64,
    pub y: Vec<f64>,
}

/// Signed adjacency matrix: `A[u][v]` is the sign of edge `{u, v}`.
pub fn adjacency_matrix(sg: &SignedGraph) -> SymMatrix {
    let g = sg.graph();
    let mut a = SymMatrix::zeros(g.n());
    for (&(u, v), s) in g.edges().iter().zip(sg.signs()) {
        a.set_sym(u, v, s.as_f64());
    }
    a
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi. Returns the diagonalised matrix and, if requested, the
/// accumulated rotation (eigenvectors in columns).
fn jacobi(a: &SymMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let n = a.dim;
    if n == 0 {
        return Err(Error::Invalid("empty matrix".into()));
    }
    if n > MAX_DIM {
        return Err(Error::Cap {
            what: "matrix dimension",
            actual: n,
            limit: MAX_DIM,
        });
    }
    let mut m = a.data.clone();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let target = JACOBI_TOL * a.frobenius_norm();

    let mut sweeps = 0;
    while off_diagonal_norm(&m, n) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    Ok((m, v))
}

/// Full eigendecomposition: eigenvalues nonincreasing, eigenvectors
/// orthonormal with their first nonzero component positive.
pub fn sym_eig(a: &SymMatrix) -> Result<Vec<RealEigenpair>> {
    let n = a.dim;
    let (m, v) = jacobi(a, true)?;
    let v = v.expect("vectors requested");
    let mut pairs: Vec<RealEigenpair> = (0..n)
        .map(|j| {
            let mut y: Vec<f64> = (0..n).map(|i| v[i * n + j]).collect();
            if let Some(first) = y.iter().copied().find(|c| c.abs() > 1e-12) {
                if first < 0.0 {
                    y.iter_mut().for_each(|c| *c = -*c);
                }
            }
            RealEigenpair {
                beta: m[j * n + j],
                y,
            }
        })
        .collect();
    pairs.sort_by(|a, b| b.beta.total_cmp(&a.beta));
    Ok(pairs)
}

/// Eigenvalues only, nonincreasing.
pub fn sym_eigvals(a: &SymMatrix) -> Result<Vec<f64>> {
    let n = a.dim;
    let (m, _) = jacobi(a, false)?;
    let mut values: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// The `k` complex `k`-th roots of `z`, by argument ascending in `[0, 2π)`.
/// For `z = 0` this is `k` zeros.
pub fn kth_roots(z: ComplexScalar, k: u32) -> Vec<ComplexScalar> {
    assert!(k >= 1, "root order must be positive");
    if z == ComplexScalar::new(0.0, 0.0) {
        return vec![ComplexScalar::new(0.0, 0.0); k as usize];
    }
    let r = z.norm().powf(1.0 / f64::from(k));
    let mut theta = z.arg();
    if theta < 0.0 {
        theta += TAU;
    }
    (0..k)
        .map(|j| ComplexScalar::from_polar(r, (theta + TAU * f64::from(j)) / f64::from(k)))
        .collect()
}

/// Largest eigenvalue modulus of the unsigned adjacency matrix.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    let values = sym_eigvals(&adjacency_matrix(&g.all_positive()))?;
    Ok(values.iter().fold(0.0f64, |acc, b| acc.max(b.abs())))
}
