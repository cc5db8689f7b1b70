//! Moving eigenpairs between signed subgraphs of `G` and the power
//! hypergraph `G^(k)`.
//!
//! [`lift`] turns an eigenpair `(β, y)` of a signed subgraph, `β ≠ 0`, into a
//! tensor eigenpair `(λ, x)` with `λ^k = β²`:
//!
//! * base vertex `i` of the subgraph: `x_i^k = y_i²`;
//! * every added vertex `v` on a subgraph edge `{i, j}` with sign `π`:
//!   `x_v^k = π y_i y_j / β`, and the product over the block satisfies
//!   `x_i x_j x^N = λ x_v^k`;
//! * everything else is zero.
//!
//! The fractional powers involved are multi-valued. [`coordinate_roots`]
//! picks the branches per edge: the non-distinguished added vertices get
//! `ω ζ` with `ω^k = π`, `ζ^k = y_i y_j / β`, and the distinguished vertex
//! takes whatever k-th root of `π y_i y_j / β` makes the block product come
//! out right. That root always exists, so no coordination between edges or
//! base vertices is needed. The result is certified against the tensor
//! equation before it is returned.
//!
//! [`project`] goes the other way: it reads the support, the per-edge signs
//! and `β = sqrt(λ^k)` off a nonzero tensor eigenpair.

use num_complex::Complex64;

use crate::eigen::{kth_roots, ComplexScalar, RealEigenpair};
use crate::error::{Error, Result};
use crate::graph::{EdgeSign, SignedSubgraph, SubgraphHandle};
use crate::hypergraph::{eigen_residual, PowerHypergraph, TensorEigenpair};

/// Residual bound every lifted eigenpair must meet.
pub const LIFT_TOL: f64 = 1e-9;

/// Eigenvalues with `|β|` at or below this are treated as zero.
pub const ZERO_BETA_TOL: f64 = 1e-8;

/// Eigenvector entries below this fraction of the largest entry are zeroed
/// before lifting.
pub const EIGENVECTOR_SNAP: f64 = 1e-12;

/// Base vertices with `|x_i|` above this fraction of `max |x|` form the
/// support in [`project`].
pub const SUPPORT_THRESHOLD: f64 = 1e-7;

/// Largest distance from `{+1, -1, 0}` accepted when rounding a recovered sign.
pub const SIGN_ROUNDING_TOL: f64 = 0.1;

/// Bound on the signed-adjacency residual of a projection.
pub const PROJECT_TOL: f64 = 1e-8;

const BRANCH_TOL: f64 = 1e-10;

/// How added-vertex values are built in a lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftVariant {
    /// k-th roots of the edge sign (`π^{3/k}` on the distinguished vertex,
    /// `π^{1/k}` on the others). Works for every `k`.
    Fractional,
    /// The sign itself on every added vertex. Odd `k` only.
    RealSign,
}

/// Values assigned to one edge's added vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeBranch {
    /// The common factor, `ζ^k = y_i y_j / β`.
    pub zeta: ComplexScalar,
    pub distinguished: ComplexScalar,
    /// Value of each of the other `k - 3` added vertices.
    pub other: ComplexScalar,
}

impl EdgeBranch {
    fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        EdgeBranch {
            zeta: z,
            distinguished: z,
            other: z,
        }
    }
}

fn close(a: ComplexScalar, b: ComplexScalar) -> bool {
    (a - b).norm() <= BRANCH_TOL * a.norm().max(b.norm()).max(1.0)
}

/// For odd `k`: the unique `ζ` with `ζ² = a` and `ζ^k = b`, given `a^k = b²`.
fn odd_zeta(a: ComplexScalar, b: ComplexScalar, k: usize) -> ComplexScalar {
    b * a.powi(-((k as i32 - 1) / 2))
}

/// Branch choice for the added vertices of one edge.
///
/// `xi`, `xj` are the lifted values at the endpoints, `b = y_i y_j / β`.
pub fn coordinate_roots(
    xi: ComplexScalar,
    xj: ComplexScalar,
    lambda: ComplexScalar,
    b: f64,
    sign: EdgeSign,
    k: usize,
    variant: LiftVariant,
) -> Result<EdgeBranch> {
    if b == 0.0 {
        return Ok(EdgeBranch::zero());
    }
    let pi = sign.as_f64();
    let bc = Complex64::new(b, 0.0);
    let target = Complex64::new(pi * b, 0.0);
    let a = xi * xj / lambda;
    let odd = k % 2 == 1;

    let branch = match variant {
        LiftVariant::RealSign => {
            if !odd {
                return Err(Error::Invalid(
                    "real-sign lift is only defined for odd k".into(),
                ));
            }
            let zeta = odd_zeta(a, bc, k);
            EdgeBranch {
                zeta,
                distinguished: zeta * pi,
                other: zeta * pi,
            }
        }
        LiftVariant::Fractional => {
            let zeta = if odd {
                odd_zeta(a, bc, k)
            } else {
                kth_roots(bc, k as u32)[0]
            };
            let omega = kth_roots(Complex64::new(pi, 0.0), k as u32)[0];
            let other = omega * zeta;
            let block_product = lambda * target / (xi * xj);
            EdgeBranch {
                zeta,
                distinguished: block_product / other.powi(k as i32 - 3),
                other,
            }
        }
    };

    let ki = k as i32;
    let block = branch.distinguished * branch.other.powi(ki - 3);
    let consistent = close(branch.zeta.powi(ki), bc)
        && close(branch.distinguished.powi(ki), target)
        && close(branch.other.powi(ki), target)
        && close(xi * xj * block, lambda * target);
    if !consistent {
        return Err(Error::Numeric(format!(
            "no consistent root branch for edge value {b}"
        )));
    }
    Ok(branch)
}

/// A certified tensor eigenpair together with where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftResult<'g> {
    pub pair: TensorEigenpair,
    pub subgraph: SignedSubgraph<'g>,
    pub beta: f64,
    pub root_index: usize,
    pub residual: f64,
}

pub fn lift<'g>(
    h: &PowerHypergraph,
    sub: &SignedSubgraph<'g>,
    ep: &RealEigenpair,
    root_index: usize,
) -> Result<LiftResult<'g>> {
    lift_with(h, sub, ep, root_index, LiftVariant::Fractional)
}

/// Lifts `ep`, an eigenpair of `sub.local()`, to `G^(k)` with
/// `λ = kth_roots(β², k)[root_index]`.
pub fn lift_with<'g>(
    h: &PowerHypergraph,
    sub: &SignedSubgraph<'g>,
    ep: &RealEigenpair,
    root_index: usize,
    variant: LiftVariant,
) -> Result<LiftResult<'g>> {
    let k = h.k();
    let handle = sub.handle();
    if handle.parent() != h.base() {
        return Err(Error::Invalid(
            "subgraph does not belong to the hypergraph's base graph".into(),
        ));
    }
    if ep.y.len() != handle.vertex_count() {
        return Err(Error::Invalid(format!(
            "eigenvector has length {}, subgraph has {} vertices",
            ep.y.len(),
            handle.vertex_count()
        )));
    }
    if ep.beta.abs() <= ZERO_BETA_TOL || !ep.beta.is_finite() {
        return Err(Error::Invalid(format!(
            "cannot lift eigenvalue {} (must be nonzero)",
            ep.beta
        )));
    }
    if root_index >= k {
        return Err(Error::Invalid(format!(
            "root index {root_index} out of range for k = {k}"
        )));
    }
    if k == 3 && !handle.is_induced() {
        return Err(Error::Invalid("k = 3 requires an induced subgraph".into()));
    }

    let beta = ep.beta;
    let lambda = kth_roots(Complex64::new(beta * beta, 0.0), k as u32)[root_index];

    let y_max = ep.y.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let y: Vec<f64> =
        ep.y.iter()
            .map(|&v| {
                if v.abs() <= EIGENVECTOR_SNAP * y_max {
                    0.0
                } else {
                    v
                }
            })
            .collect();
    if y_max == 0.0 {
        return Err(Error::Invalid("eigenvector is the zero vector".into()));
    }

    let vertices = handle.vertex_list();
    let base = h.base();
    let mut x = vec![Complex64::new(0.0, 0.0); h.total_vertices()];
    for (&v, &yv) in vertices.iter().zip(&y) {
        x[v] = Complex64::new(yv.abs().powf(2.0 / k as f64), 0.0);
    }
    for (e, &sign) in handle.edge_list().into_iter().zip(sub.signs()) {
        let (u, v) = base.edge(e);
        let yu = y[vertices.binary_search(&u).expect("endpoint in subgraph")];
        let yv = y[vertices.binary_search(&v).expect("endpoint in subgraph")];
        let branch = coordinate_roots(x[u], x[v], lambda, yu * yv / beta, sign, k, variant)?;
        let mut block = h.added_vertices(e);
        let first = block
            .next()
            .expect("k >= 3 gives at least one added vertex");
        x[first] = branch.distinguished;
        for w in block {
            x[w] = branch.other;
        }
    }

    let pair = TensorEigenpair { lambda, x };
    let residual = eigen_residual(h, &pair)?;
    if residual > LIFT_TOL {
        return Err(Error::Certification {
            residual,
            tolerance: LIFT_TOL,
        });
    }
    Ok(LiftResult {
        pair,
        subgraph: sub.clone(),
        beta,
        root_index,
        residual,
    })
}

/// Per-edge signs recovered by [`project`]: `(edge index, sign)` for every
/// base edge inside the support, with sign in `{-1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signing {
    pub edges: Vec<(usize, i8)>,
}

/// A signed subgraph eigenpair recovered from a tensor eigenpair.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection<'g> {
    /// Support vertices with the nonzero-sign edges.
    pub subgraph: SignedSubgraph<'g>,
    pub signing: Signing,
    /// Principal square root of `λ^k`.
    pub beta: ComplexScalar,
    /// `x_i^{k/2}` on the support, ascending vertex order, unit max-modulus.
    pub z: Vec<ComplexScalar>,
    /// `max_i |β z_i - Σ_j sgn(i,j) z_j|`.
    pub residual: f64,
}

pub fn project<'g>(h: &'g PowerHypergraph, pair: &TensorEigenpair) -> Result<Projection<'g>> {
    let k = h.k();
    let base = h.base();
    let lambda = pair.lambda;
    if lambda.norm() == 0.0 {
        return Err(Error::Invalid(
            "cannot project an eigenpair with λ = 0".into(),
        ));
    }
    let residual = eigen_residual(h, pair)?;
    if residual > LIFT_TOL {
        return Err(Error::Certification {
            residual,
            tolerance: LIFT_TOL,
        });
    }
    let scale = pair.x.iter().fold(0.0f64, |acc, c| acc.max(c.norm()));
    let x: Vec<ComplexScalar> = pair.x.iter().map(|c| c / scale).collect();

    let support: Vec<usize> = (0..base.n())
        .filter(|&i| x[i].norm() > SUPPORT_THRESHOLD)
        .collect();
    if support.is_empty() {
        return Err(Error::Numeric(
            "eigenvector vanishes on every base vertex".into(),
        ));
    }
    let vertex_mask = support.iter().fold(0u64, |acc, &v| acc | (1u64 << v));

    let ki = k as i32;
    let half_power = |c: ComplexScalar| {
        if k.is_multiple_of(2) {
            c.powi(ki / 2)
        } else {
            c.powi(ki).sqrt()
        }
    };
    let beta = lambda.powi(ki).sqrt();
    let z_of = |v: usize| half_power(x[v]);

    let mut signing = Vec::new();
    let mut kept_mask = 0u64;
    let mut kept_signs = Vec::new();
    for (e, &(i, j)) in base.edges().iter().enumerate() {
        if (vertex_mask >> i) & 1 == 0 || (vertex_mask >> j) & 1 == 0 {
            continue;
        }
        let block: ComplexScalar = h.added_vertices(e).map(|v| x[v]).product();
        let raw = beta / lambda * x[i] * x[j] * block / (z_of(i) * z_of(j));
        let (value, dist) = [1i8, -1, 0]
            .into_iter()
            .map(|s| (s, (raw - f64::from(s)).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("three candidates");
        if dist > SIGN_ROUNDING_TOL {
            return Err(Error::Numeric(format!(
                "recovered sign {raw} on edge {i} {j} is not close to +1, -1 or 0"
            )));
        }
        if value == 0 && k == 3 {
            return Err(Error::Numeric(format!(
                "zero sign on edge {i} {j} is impossible for k = 3"
            )));
        }
        signing.push((e, value));
        if let Some(s) = EdgeSign::from_value(value) {
            kept_mask |= 1u64 << e;
            kept_signs.push(s);
        }
    }

    let handle = SubgraphHandle::new(base, vertex_mask, kept_mask)?;
    let subgraph = SignedSubgraph::new(handle, kept_signs)?;

    let z_raw: Vec<ComplexScalar> = support.iter().map(|&v| z_of(v)).collect();
    let z_scale = z_raw.iter().fold(0.0f64, |acc, c| acc.max(c.norm()));
    let z: Vec<ComplexScalar> = z_raw.iter().map(|c| c / z_scale).collect();
    let local = |v: usize| support.binary_search(&v).expect("support vertex");
    let mut applied = vec![Complex64::new(0.0, 0.0); support.len()];
    for (u, v, s) in subgraph.labelled_edges() {
        let (a, b) = (local(u), local(v));
        applied[a] += s.as_f64() * z[b];
        applied[b] += s.as_f64() * z[a];
    }
    let eq_residual = z
        .iter()
        .zip(&applied)
        .map(|(zi, ai)| (beta * zi - ai).norm())
        .fold(0.0f64, f64::max);
    if eq_residual > PROJECT_TOL {
        return Err(Error::Certification {
            residual: eq_residual,
            tolerance: PROJECT_TOL,
        });
    }

    Ok(Projection {
        subgraph,
        signing: Signing { edges: signing },
        beta,
        z,
        residual: eq_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{adjacency_matrix, sym_eig, sym_eigvals};
    use crate::graph::{
        edge_subgraph, induced_subgraph, parse_signed_graph, Graph, SignedSubgraph,
    };
    use crate::hypergraph::power_hypergraph;

    fn k4_minus(k4: &Graph) -> SignedSubgraph<'_> {
        let sg = parse_signed_graph("4 6\n0 1 -1\n0 2 +1\n0 3 +1\n1 2 +1\n1 3 +1\n2 3 +1").unwrap();
        SignedSubgraph::from_parent_labels(k4, &sg, 0).unwrap()
    }

    fn top_pair(sub: &SignedSubgraph<'_>) -> RealEigenpair {
        sym_eig(&adjacency_matrix(&sub.local())).unwrap().remove(0)
    }

    #[test]
    fn lifts_single_edge_for_k3() {
        let k2 = Graph::complete(2);
        let h = power_hypergraph(&k2, 3).unwrap();
        let sub = SignedSubgraph::all_positive(induced_subgraph(&k2, 0b11));
        let ep = RealEigenpair {
            beta: 1.0,
            y: vec![1.0 / 2f64.sqrt(); 2],
        };
        let res = lift(&h, &sub, &ep, 0).unwrap();
        assert!((res.pair.lambda - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(res.residual < 1e-15);
        // x ∝ (1, 1, 1): all three coordinates share one modulus.
        let m0 = res.pair.x[0].norm();
        for c in &res.pair.x {
            assert!((c.norm() - m0).abs() < 1e-15);
        }
    }

    #[test]
    fn lifts_k4_minus_to_cube_root_of_five() {
        let k4 = Graph::complete(4);
        let h = power_hypergraph(&k4, 3).unwrap();
        let sub = k4_minus(&k4);
        let ep = top_pair(&sub);
        assert!((ep.beta - 5f64.sqrt()).abs() < 1e-12);
        let res = lift(&h, &sub, &ep, 0).unwrap();
        assert!((res.pair.lambda - Complex64::new(1.7099759467, 0.0)).norm() < 1e-9);
        assert!(res.residual <= LIFT_TOL);

        let res1 = lift(&h, &sub, &ep, 1).unwrap();
        let expected = Complex64::from_polar(5f64.powf(1.0 / 3.0), std::f64::consts::TAU / 3.0);
        assert!((res1.pair.lambda - expected).norm() < 1e-12);
        assert!(res1.residual <= LIFT_TOL);
    }

    #[test]
    fn key_identity_on_every_added_vertex() {
        let k4 = Graph::complete(4);
        for k in [3usize, 4, 5, 6] {
            let h = power_hypergraph(&k4, k).unwrap();
            let sub = k4_minus(&k4);
            let ep = top_pair(&sub);
            for root in 0..k {
                let res = lift(&h, &sub, &ep, root).unwrap();
                let x = &res.pair.x;
                for (e, &(i, j)) in k4.edges().iter().enumerate() {
                    let pi = sub.sign_of(e).unwrap().as_f64();
                    let block: Complex64 = h.added_vertices(e).map(|v| x[v]).product();
                    for v in h.added_vertices(e) {
                        let xv_k = x[v].powi(k as i32);
                        let from_y = pi * ep.y[i] * ep.y[j] / ep.beta;
                        assert!((xv_k - from_y).norm() <= 1e-10, "k={k} v={v}");
                        let from_x = x[i] * x[j] * block / res.pair.lambda;
                        assert!((xv_k - from_x).norm() <= 1e-10, "k={k} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn real_sign_variant_agrees_for_odd_k() {
        let k4 = Graph::complete(4);
        for k in [3usize, 5, 7] {
            let h = power_hypergraph(&k4, k).unwrap();
            let sub = k4_minus(&k4);
            for ep in sym_eig(&adjacency_matrix(&sub.local())).unwrap() {
                if ep.beta.abs() <= ZERO_BETA_TOL {
                    continue;
                }
                for root in 0..k {
                    let a = lift_with(&h, &sub, &ep, root, LiftVariant::RealSign).unwrap();
                    let b = lift_with(&h, &sub, &ep, root, LiftVariant::Fractional).unwrap();
                    assert_eq!(a.pair.lambda, b.pair.lambda);
                    assert!(a.residual <= LIFT_TOL);
                }
            }
        }
        let h4 = power_hypergraph(&k4, 4).unwrap();
        let sub = k4_minus(&k4);
        let ep = top_pair(&sub);
        assert!(lift_with(&h4, &sub, &ep, 0, LiftVariant::RealSign).is_err());
    }

    #[test]
    fn even_k_negative_half_power_on_odd_cycle() {
        // λ² = -β for k = 4 on a triangle: needs the distinguished vertex to
        // take a different branch from the others.
        let k3 = Graph::complete(3);
        let h = power_hypergraph(&k3, 4).unwrap();
        let sub = SignedSubgraph::all_positive(induced_subgraph(&k3, 0b111));
        let ep = top_pair(&sub);
        for root in 0..4 {
            let res = lift(&h, &sub, &ep, root).unwrap();
            assert!(res.residual <= 1e-12, "root {root}: {}", res.residual);
        }
    }

    #[test]
    fn coordinate_roots_examples() {
        let one = Complex64::new(1.0, 0.0);
        let b = coordinate_roots(
            one,
            one,
            one,
            1.0,
            EdgeSign::Plus,
            3,
            LiftVariant::Fractional,
        )
        .unwrap();
        assert!((b.zeta - one).norm() < 1e-15);

        let k4 = Graph::complete(4);
        let h = power_hypergraph(&k4, 3).unwrap();
        let sub = k4_minus(&k4);
        let ep = top_pair(&sub);
        let res = lift(&h, &sub, &ep, 0).unwrap();
        let x = &res.pair.x;
        let bval = ep.y[0] * ep.y[1] / ep.beta;
        let br = coordinate_roots(
            x[0],
            x[1],
            res.pair.lambda,
            bval,
            EdgeSign::Minus,
            3,
            LiftVariant::Fractional,
        )
        .unwrap();
        assert!((br.zeta.powi(3) - bval).norm() < 1e-12);
        assert!((br.zeta * br.zeta - x[0] * x[1] / res.pair.lambda).norm() < 1e-12);

        // k = 4, K2 with sign +1, β = 1: everything real.
        let k2 = Graph::complete(2);
        let h = power_hypergraph(&k2, 4).unwrap();
        let sub = SignedSubgraph::all_positive(induced_subgraph(&k2, 0b11));
        let ep = RealEigenpair {
            beta: 1.0,
            y: vec![1.0 / 2f64.sqrt(); 2],
        };
        let res = lift(&h, &sub, &ep, 0).unwrap();
        assert!(res.residual < 1e-14);
        for v in h.added_vertices(0) {
            assert!(res.pair.x[v].im.abs() < 1e-15);
        }
    }

    #[test]
    fn lift_errors() {
        let k4 = Graph::complete(4);
        let h = power_hypergraph(&k4, 3).unwrap();
        let sub = k4_minus(&k4);
        let mut ep = top_pair(&sub);
        assert!(lift(&h, &sub, &ep, 3).is_err());
        ep.beta = 0.0;
        assert!(lift(&h, &sub, &ep, 0).is_err());

        let path = SignedSubgraph::all_positive(edge_subgraph(&k4, 0b001001));
        assert!(!path.handle().is_induced());
        let ep = top_pair(&path);
        assert!(matches!(lift(&h, &path, &ep, 0), Err(Error::Invalid(_))));
        let h4 = power_hypergraph(&k4, 4).unwrap();
        assert!(lift(&h4, &path, &ep, 0).is_ok());
    }

    #[test]
    fn projects_k4_minus_lift() {
        let k4 = Graph::complete(4);
        let h = power_hypergraph(&k4, 3).unwrap();
        let sub = k4_minus(&k4);
        let res = lift(&h, &sub, &top_pair(&sub), 0).unwrap();
        let proj = project(&h, &res.pair).unwrap();
        assert_eq!(proj.subgraph.handle().vertex_list(), vec![0, 1, 2, 3]);
        assert!((proj.beta * proj.beta - Complex64::new(5.0, 0.0)).norm() < 1e-9);
        assert!(proj.residual <= PROJECT_TOL);
        let negatives = proj
            .subgraph
            .signs()
            .iter()
            .filter(|&&s| s == EdgeSign::Minus)
            .count();
        // One negative edge up to switching: the negative-edge count of a K4
        // signing is odd iff it is in the class of K4 minus one edge.
        assert_eq!(negatives % 2, 1);
        let values = sym_eigvals(&adjacency_matrix(&proj.subgraph.local())).unwrap();
        assert!(values.iter().any(|b| (b - 5f64.sqrt()).abs() < 1e-10));
    }

    #[test]
    fn projects_trivial_k2_pair() {
        let k2 = Graph::complete(2);
        let h = power_hypergraph(&k2, 3).unwrap();
        let pair = TensorEigenpair {
            lambda: Complex64::new(1.0, 0.0),
            x: vec![Complex64::new(1.0, 0.0); 3],
        };
        let proj = project(&h, &pair).unwrap();
        assert_eq!(proj.signing.edges, vec![(0, 1)]);
        assert!((proj.beta.norm() - 1.0).abs() < 1e-15);
        assert!(proj.residual < 1e-15);
    }

    #[test]
    fn project_rejects_zero_lambda() {
        let k2 = Graph::complete(2);
        let h = power_hypergraph(&k2, 3).unwrap();
        let pair = TensorEigenpair {
            lambda: Complex64::new(0.0, 0.0),
            x: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        };
        assert!(project(&h, &pair).is_err());
    }

    #[test]
    fn project_drops_zero_sign_edges_for_k4() {
        // Path 0-1-2 inside a triangle: edge {0,2} is in the induced support
        // but its added vertices are zero.
        let k3 = Graph::complete(3);
        let h = power_hypergraph(&k3, 4).unwrap();
        let e02 = k3.edge_index(0, 2).unwrap();
        let path = SignedSubgraph::all_positive(edge_subgraph(&k3, k3.edge_mask() & !(1 << e02)));
        let ep = top_pair(&path);
        assert!((ep.beta - 2f64.sqrt()).abs() < 1e-12);
        let res = lift(&h, &path, &ep, 0).unwrap();
        let proj = project(&h, &res.pair).unwrap();
        assert!(proj.signing.edges.contains(&(e02, 0)));
        assert_eq!(proj.subgraph.handle().edge_count(), 2);
        assert_eq!(proj.subgraph.handle().vertex_count(), 3);

        // The same vector is not an eigenvector for k = 3 (no zero signs).
        let h3 = power_hypergraph(&k3, 3).unwrap();
        assert!(lift(&h3, &path, &ep, 0).is_err());
    }

    #[test]
    fn project_rejects_non_eigenpairs() {
        let k2 = Graph::complete(2);
        let h = power_hypergraph(&k2, 3).unwrap();
        let pair = TensorEigenpair {
            lambda: Complex64::new(1.0, 0.0),
            x: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.1, 0.0),
            ],
        };
        assert!(matches!(
            project(&h, &pair),
            Err(Error::Certification { .. })
        ));
    }
}
