#![allow(dead_code)]

use powerhyp::graph::{switch, Graph, SignedGraph};

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = (u.min(v), u.max(v));
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let next = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One graph per isomorphism class on exactly `n` vertices with at most
/// `max_edges` edges, found by minimising the edge mask over all relabellings.
pub fn graph_classes(n: usize, max_edges: usize) -> Vec<Graph> {
    let all_pairs = pairs(n);
    let perms = permutations(n);
    let mut canon = std::collections::BTreeSet::new();
    for mask in 0u32..(1u32 << all_pairs.len()) {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let best = perms
            .iter()
            .map(|p| {
                all_pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .fold(0u32, |acc, (_, &(u, v))| {
                        acc | (1 << pair_index(n, p[u], p[v]))
                    })
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|mask| {
            let edges = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// All isomorphism classes of graphs with `1..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| graph_classes(n, usize::MAX))
        .collect()
}

pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n)
        .into_iter()
        .filter(|g| is_connected(g.n(), g.edges()))
        .collect()
}

/// Every signing of `g`, bit `e` of the index set meaning edge `e` is negative.
pub fn all_signings(g: &Graph) -> Vec<SignedGraph> {
    (0..(1u64 << g.m()))
        .map(|pattern| {
            let signs = (0..g.m())
                .map(|e| {
                    if (pattern >> e) & 1 == 1 {
                        powerhyp::EdgeSign::Minus
                    } else {
                        powerhyp::EdgeSign::Plus
                    }
                })
                .collect();
            SignedGraph::new(g.clone(), signs).unwrap()
        })
        .collect()
}

/// Switching orbits of all signings of `g`, by brute force over every vertex
/// subset.
pub fn switching_orbit_count(g: &Graph) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut orbits = 0;
    for sg in all_signings(g) {
        if seen.contains(sg.signs()) {
            continue;
        }
        orbits += 1;
        for u in 0..(1u64 << g.n()) {
            seen.insert(switch(&sg, u).signs().to_vec());
        }
    }
    orbits
}

fn canonical_mask(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u32, |acc, &(u, v)| acc | (1 << pair_index(n, p[u], p[v])))
        })
        .min()
        .unwrap_or(0)
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| (mask >> i) & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// Connected graphs with exactly `1..=max_m` edges, one per isomorphism
/// class, grown one edge at a time from K2. Index `e - 1` holds the graphs
/// with `e` edges.
pub fn connected_by_edges(max_m: usize) -> Vec<Vec<Graph>> {
    let mut perms_by_n: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::complete(2)]];
    for _ in 1..max_m {
        let mut next = std::collections::BTreeSet::new();
        for g in levels.last().unwrap() {
            let n = g.n();
            let mut children: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
            for (u, v) in pairs(n) {
                if g.edge_index(u, v).is_none() {
                    let mut e = g.edges().to_vec();
                    e.push((u, v));
                    children.push((n, e));
                }
            }
            for u in 0..n {
                let mut e = g.edges().to_vec();
                e.push((u, n));
                children.push((n + 1, e));
            }
            for (cn, edges) in children {
                while perms_by_n.len() <= cn {
                    perms_by_n.push(permutations(perms_by_n.len()));
                }
                next.insert((cn, canonical_mask(cn, &edges, &perms_by_n[cn])));
            }
        }
        levels.push(
            next.into_iter()
                .map(|(n, mask)| from_mask(n, mask))
                .collect(),
        );
    }
    levels
}

/// Disjoint union, relabelling each part after the previous ones.
pub fn disjoint_union(parts: &[&Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::new(offset.max(1), edges).unwrap()
}

/// Every graph with at most `max_m` edges and no isolated vertices, one per
/// isomorphism class, plus the single vertex for `m = 0`.
pub fn graphs_up_to_edges(max_m: usize) -> Vec<Graph> {
    let levels = connected_by_edges(max_m);
    // Components as (edge count, index within level), kept in nondecreasing
    // order so each multiset is produced once.
    let catalogue: Vec<(usize, usize)> = levels
        .iter()
        .enumerate()
        .flat_map(|(e, level)| (0..level.len()).map(move |i| (e + 1, i)))
        .collect();
    fn rec(
        start: usize,
        budget: usize,
        chosen: &mut Vec<usize>,
        catalogue: &[(usize, usize)],
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(chosen.clone());
        for c in start..catalogue.len() {
            if catalogue[c].0 <= budget {
                chosen.push(c);
                rec(c, budget - catalogue[c].0, chosen, catalogue, out);
                chosen.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    rec(0, max_m, &mut Vec::new(), &catalogue, &mut multisets);
    multisets
        .into_iter()
        .map(|ms| {
            let parts: Vec<&Graph> = ms
                .iter()
                .map(|&c| &levels[catalogue[c].0 - 1][catalogue[c].1])
                .collect();
            disjoint_union(&parts)
        })
        .collect()
}
