//! Graphs, signed graphs, subgraph handles and the enumerations that drive
//! the spectrum engine.
//!
//! Vertices are labelled `0..n`. Vertex and edge subsets are stored as 64-bit
//! masks, so graphs are limited to 64 vertices and 64 edges; every enumeration
//! here is exponential in one of those counts anyway.
//!
//! Edge-list text format:
//!
//! ```text
//! # optional comment lines
//! n m
//! u v        (graph)
//! u v +1     (signed graph, sign is +1 or -1)
//! ```

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex or edge count representable by the subset masks.
pub const MAX_MASK_BITS: usize = 64;

pub(crate) fn low_bits(count: usize) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

pub(crate) fn mask_indices(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// Simple undirected graph. Each edge is stored as `(min, max)`; the edge
/// order given at construction is preserved and defines edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("graph must have at least one vertex".into()));
        }
        if n > MAX_MASK_BITS {
            return Err(Error::Cap {
                what: "vertex count",
                actual: n,
                limit: MAX_MASK_BITS,
            });
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            check_edge(n, u, v, &seen).map_err(Error::Invalid)?;
            let e = (u.min(v), u.max(v));
            seen.insert(e);
            list.push(e);
        }
        if list.len() > MAX_MASK_BITS {
            return Err(Error::Cap {
                what: "edge count",
                actual: list.len(),
                limit: MAX_MASK_BITS,
            });
        }
        Ok(Graph { n, edges: list })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid")
    }

    pub fn star(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (0, v))).expect("star is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn edge_mask(&self) -> u64 {
        low_bits(self.m())
    }

    /// The same graph with every edge signed `+1`.
    pub fn all_positive(&self) -> SignedGraph {
        SignedGraph {
            graph: self.clone(),
            signs: vec![EdgeSign::Plus; self.m()],
        }
    }
}

fn check_edge(
    n: usize,
    u: usize,
    v: usize,
    seen: &HashSet<(usize, usize)>,
) -> std::result::Result<(), String> {
    if u >= n || v >= n {
        return Err(format!("endpoint out of range in edge {u} {v} (n = {n})"));
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    if seen.contains(&(u.min(v), u.max(v))) {
        return Err(format!("duplicate edge {u} {v}"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeSign {
    Minus,
    Plus,
}

impl EdgeSign {
    pub fn value(self) -> i8 {
        match self {
            EdgeSign::Plus => 1,
            EdgeSign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.value())
    }

    pub fn flipped(self) -> Self {
        match self {
            EdgeSign::Plus => EdgeSign::Minus,
            EdgeSign::Minus => EdgeSign::Plus,
        }
    }

    pub fn from_value(v: i8) -> Option<Self> {
        match v {
            1 => Some(EdgeSign::Plus),
            -1 => Some(EdgeSign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeSign::Plus => "+1",
            EdgeSign::Minus => "-1",
        })
    }
}

/// A graph with a `±1` sign on every edge, aligned with the edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<EdgeSign>,
}

impl SignedGraph {
    pub fn new(graph: Graph, signs: Vec<EdgeSign>) -> Result<Self> {
        if signs.len() != graph.m() {
            return Err(Error::Invalid(format!(
                "{} signs given for {} edges",
                signs.len(),
                graph.m()
            )));
        }
        Ok(SignedGraph { graph, signs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signs(&self) -> &[EdgeSign] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> EdgeSign {
        self.signs[e]
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == EdgeSign::Plus)
    }
}

/// Flip the sign of every edge with exactly one endpoint in `u`.
pub fn switch(sg: &SignedGraph, u: u64) -> SignedGraph {
    let signs = sg
        .graph
        .edges()
        .iter()
        .zip(&sg.signs)
        .map(|(&(a, b), &s)| {
            let crossing = ((u >> a) & 1) != ((u >> b) & 1);
            if crossing {
                s.flipped()
            } else {
                s
            }
        })
        .collect();
    SignedGraph {
        graph: sg.graph.clone(),
        signs,
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            None
        } else {
            Some((i + 1, tokens))
        }
    })
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("invalid {what} '{token}'")))
}

fn parse_edge_list(text: &str, signed: bool) -> Result<(Graph, Vec<EdgeSign>)> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected header 'n m'"))?;
    if header.len() != 2 {
        return Err(Error::parse(header_line, "header must be 'n m'"));
    }
    let n = parse_usize(header_line, header[0], "vertex count")?;
    let m = parse_usize(header_line, header[1], "edge count")?;
    if n == 0 {
        return Err(Error::parse(header_line, "vertex count must be positive"));
    }
    if n > MAX_MASK_BITS || m > MAX_MASK_BITS {
        return Err(Error::Cap {
            what: if n > MAX_MASK_BITS {
                "vertex count"
            } else {
                "edge count"
            },
            actual: n.max(m),
            limit: MAX_MASK_BITS,
        });
    }

    let width = if signed { 3 } else { 2 };
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut signs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, tokens) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than {m} edge lines")));
        }
        if tokens.len() != width {
            let expected = if signed { "'u v s'" } else { "'u v'" };
            return Err(Error::parse(line, format!("expected {expected}")));
        }
        let u = parse_usize(line, tokens[0], "vertex")?;
        let v = parse_usize(line, tokens[1], "vertex")?;
        check_edge(n, u, v, &seen).map_err(|msg| Error::parse(line, msg))?;
        if signed {
            let s = match tokens[2] {
                "+1" => EdgeSign::Plus,
                "-1" => EdgeSign::Minus,
                other => {
                    return Err(Error::parse(
                        line,
                        format!("sign must be +1 or -1, got '{other}'"),
                    ))
                }
            };
            signs.push(s);
        }
        seen.insert((u.min(v), u.max(v)));
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    let graph = Graph::new(n, edges)?;
    Ok((graph, signs))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_edge_list(text, false).map(|(g, _)| g)
}

pub fn parse_signed_graph(text: &str) -> Result<SignedGraph> {
    let (graph, signs) = parse_edge_list(text, true)?;
    SignedGraph::new(graph, signs)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_signed_graph(sg: &SignedGraph) -> String {
    let g = sg.graph();
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (&(u, v), s) in g.edges().iter().zip(sg.signs()) {
        out.push_str(&format!("{u} {v} {s}\n"));
    }
    out
}

/// A vertex subset and an edge subset of a parent graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphHandle<'g> {
    parent: &'g Graph,
    vertices: u64,
    edges: u64,
}

impl<'g> SubgraphHandle<'g> {
    /// Builds a handle from explicit masks, checking that every selected edge
    /// has both endpoints selected.
    pub fn new(parent: &'g Graph, vertices: u64, edges: u64) -> Result<Self> {
        if vertices & !parent.vertex_mask() != 0 {
            return Err(Error::Invalid("vertex set outside the parent graph".into()));
        }
        if edges & !parent.edge_mask() != 0 {
            return Err(Error::Invalid("edge set outside the parent graph".into()));
        }
        for e in mask_indices(edges) {
            let (u, v) = parent.edge(e);
            if (vertices >> u) & 1 == 0 || (vertices >> v) & 1 == 0 {
                return Err(Error::Invalid(format!(
                    "edge {u} {v} has an endpoint outside the vertex set"
                )));
            }
        }
        Ok(SubgraphHandle {
            parent,
            vertices,
            edges,
        })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices
    }

    pub fn edge_mask(&self) -> u64 {
        self.edges
    }

    /// Parent labels of the vertices, ascending. Position in this list is the
    /// local index used by [`SignedSubgraph::local`].
    pub fn vertex_list(&self) -> Vec<usize> {
        mask_indices(self.vertices).collect()
    }

    /// Parent edge indices, ascending.
    pub fn edge_list(&self) -> Vec<usize> {
        mask_indices(self.edges).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < 64 && (self.vertices >> v) & 1 == 1
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        e < 64 && (self.edges >> e) & 1 == 1
    }

    pub fn is_induced(&self) -> bool {
        induced_edge_mask(self.parent, self.vertices) == self.edges
    }

    /// `m - n + c` for this subgraph.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + connected_components(self).len() - self.vertex_count()
    }
}

fn induced_edge_mask(g: &Graph, s: u64) -> u64 {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| (s >> u) & 1 == 1 && (s >> v) & 1 == 1)
        .fold(0u64, |acc, (e, _)| acc | (1u64 << e))
}

pub fn induced_subgraph(g: &Graph, s: u64) -> SubgraphHandle<'_> {
    debug_assert_eq!(s & !g.vertex_mask(), 0, "vertex set outside the graph");
    let s = s & g.vertex_mask();
    SubgraphHandle {
        parent: g,
        vertices: s,
        edges: induced_edge_mask(g, s),
    }
}

/// Subgraph spanned by an edge set. Vertices not covered by `es` are left out.
pub fn edge_subgraph(g: &Graph, es: u64) -> SubgraphHandle<'_> {
    debug_assert_eq!(es & !g.edge_mask(), 0, "edge set outside the graph");
    let es = es & g.edge_mask();
    let vertices = mask_indices(es).fold(0u64, |acc, e| {
        let (u, v) = g.edge(e);
        acc | (1u64 << u) | (1u64 << v)
    });
    SubgraphHandle {
        parent: g,
        vertices,
        edges: es,
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Components of `h`, ordered by their smallest vertex.
pub fn connected_components<'g>(h: &SubgraphHandle<'g>) -> Vec<SubgraphHandle<'g>> {
    let g = h.parent;
    let mut sets = DisjointSets::new(g.n());
    for e in mask_indices(h.edges) {
        let (u, v) = g.edge(e);
        sets.union(u, v);
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut parts: Vec<(u64, u64)> = Vec::new();
    for v in mask_indices(h.vertices) {
        let r = sets.find(v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => parts[i].0 |= 1u64 << v,
            None => {
                roots.push(r);
                parts.push((1u64 << v, 0));
            }
        }
    }
    for e in mask_indices(h.edges) {
        let r = sets.find(g.edge(e).0);
        let i = roots
            .iter()
            .position(|&x| x == r)
            .expect("edge inside handle");
        parts[i].1 |= 1u64 << e;
    }
    parts
        .into_iter()
        .map(|(vertices, edges)| SubgraphHandle {
            parent: g,
            vertices,
            edges,
        })
        .collect()
}

/// A signing of the edges of a subgraph handle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedSubgraph<'g> {
    handle: SubgraphHandle<'g>,
    signs: Vec<EdgeSign>,
}

impl<'g> SignedSubgraph<'g> {
    /// `signs` is aligned with `handle.edge_list()`.
    pub fn new(handle: SubgraphHandle<'g>, signs: Vec<EdgeSign>) -> Result<Self> {
        if signs.len() != handle.edge_count() {
            return Err(Error::Invalid(format!(
                "{} signs given for {} edges",
                signs.len(),
                handle.edge_count()
            )));
        }
        Ok(SignedSubgraph { handle, signs })
    }

    pub fn all_positive(handle: SubgraphHandle<'g>) -> Self {
        SignedSubgraph {
            signs: vec![EdgeSign::Plus; handle.edge_count()],
            handle,
        }
    }

    /// Interprets a signed graph written with the parent's vertex labels as a
    /// signed subgraph. The vertex set is the set of edge endpoints plus
    /// `extra_vertices`.
    pub fn from_parent_labels(
        parent: &'g Graph,
        sg: &SignedGraph,
        extra_vertices: u64,
    ) -> Result<Self> {
        if sg.graph().n() > parent.n() {
            return Err(Error::Invalid(format!(
                "signed subgraph has {} vertices, parent has {}",
                sg.graph().n(),
                parent.n()
            )));
        }
        let mut edges = 0u64;
        let mut by_index = Vec::new();
        for (&(u, v), &s) in sg.graph().edges().iter().zip(sg.signs()) {
            let e = parent
                .edge_index(u, v)
                .ok_or_else(|| Error::Invalid(format!("edge {u} {v} is not in the graph")))?;
            edges |= 1u64 << e;
            by_index.push((e, s));
        }
        by_index.sort_unstable();
        let spanned = edge_subgraph(parent, edges);
        let handle = SubgraphHandle::new(parent, spanned.vertices | extra_vertices, edges)?;
        Ok(SignedSubgraph {
            handle,
            signs: by_index.into_iter().map(|(_, s)| s).collect(),
        })
    }

    pub fn handle(&self) -> &SubgraphHandle<'g> {
        &self.handle
    }

    pub fn signs(&self) -> &[EdgeSign] {
        &self.signs
    }

    /// Sign of parent edge `e`, if it belongs to the subgraph.
    pub fn sign_of(&self, e: usize) -> Option<EdgeSign> {
        if !self.handle.contains_edge(e) {
            return None;
        }
        let rank = (self.handle.edges & low_bits(e)).count_ones() as usize;
        Some(self.signs[rank])
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == EdgeSign::Plus)
    }

    /// `(vertex, ...)` and `(u, v, sign)` in parent labels.
    pub fn labelled_edges(&self) -> Vec<(usize, usize, EdgeSign)> {
        self.handle
            .edge_list()
            .into_iter()
            .zip(&self.signs)
            .map(|(e, &s)| {
                let (u, v) = self.handle.parent.edge(e);
                (u, v, s)
            })
            .collect()
    }

    /// The subgraph relabelled onto `0..vertex_count`, in ascending parent
    /// label order.
    pub fn local(&self) -> SignedGraph {
        let vertices = self.handle.vertex_list();
        let local_of = |v: usize| vertices.binary_search(&v).expect("endpoint in handle");
        let edges: Vec<(usize, usize)> = self
            .handle
            .edge_list()
            .into_iter()
            .map(|e| {
                let (u, v) = self.handle.parent.edge(e);
                (local_of(u), local_of(v))
            })
            .collect();
        let graph = Graph::new(vertices.len().max(1), edges).expect("relabelled subgraph");
        SignedGraph {
            graph,
            signs: self.signs.clone(),
        }
    }
}

/// Enumeration limits; each enumeration is exponential in one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_cycle_rank: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_vertices: 16,
            max_edges: 16,
            max_cycle_rank: 12,
        }
    }
}

/// All `2^n` induced subgraphs, including the empty one, in mask order.
pub fn enumerate_induced_subgraphs(
    g: &Graph,
    max_vertices: usize,
) -> Result<impl Iterator<Item = SubgraphHandle<'_>>> {
    if g.n() > max_vertices {
        return Err(Error::Cap {
            what: "vertex count",
            actual: g.n(),
            limit: max_vertices,
        });
    }
    Ok((0..=g.vertex_mask()).map(move |s| induced_subgraph(g, s)))
}

/// All `2^m` edge-subset subgraphs, including the empty one, in mask order.
pub fn enumerate_edge_subsets(
    g: &Graph,
    max_edges: usize,
) -> Result<impl Iterator<Item = SubgraphHandle<'_>>> {
    if g.m() > max_edges {
        return Err(Error::Cap {
            what: "edge count",
            actual: g.m(),
            limit: max_edges,
        });
    }
    Ok((0..=g.edge_mask()).map(move |es| edge_subgraph(g, es)))
}

/// One signing per switching class of `h`.
///
/// A spanning forest (greedy over ascending edge indices) is fixed to `+1`;
/// the remaining `m - n + c` edges run through every sign pattern, pattern
/// bit `t` giving the sign of the `t`-th non-forest edge (set bit = `-1`).
/// The all-positive signing comes first.
pub fn enumerate_signings_mod_switching<'g>(
    h: &SubgraphHandle<'g>,
    max_cycle_rank: usize,
) -> Result<impl Iterator<Item = SignedSubgraph<'g>>> {
    let edges = h.edge_list();
    let mut sets = DisjointSets::new(h.parent.n());
    let free: Vec<usize> = edges
        .iter()
        .enumerate()
        .filter_map(|(pos, &e)| {
            let (u, v) = h.parent.edge(e);
            if sets.union(u, v) {
                None
            } else {
                Some(pos)
            }
        })
        .collect();
    let rank = free.len();
    if rank > max_cycle_rank {
        return Err(Error::Cap {
            what: "cycle rank",
            actual: rank,
            limit: max_cycle_rank,
        });
    }
    let handle = *h;
    let count = edges.len();
    Ok((0..(1u64 << rank)).map(move |pattern| {
        let mut signs = vec![EdgeSign::Plus; count];
        for (bit, &pos) in free.iter().enumerate() {
            if (pattern >> bit) & 1 == 1 {
                signs[pos] = EdgeSign::Minus;
            }
        }
        SignedSubgraph { handle, signs }
    }))
}
