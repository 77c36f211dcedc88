//! Finite simple graphs and their clique complexes.
//!
//! Vertices are dense integers `0..n`. Every clique of the graph is a simplex
//! of its Whitney complex; the f-vector counts them by dimension and the Euler
//! characteristic is the alternating sum of the f-vector.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Endpoint order and duplicate edges are
    /// normalized away; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Self { n, edges, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Converts 1-based edge listings (as printed in external sources) to a graph.
    pub fn from_one_based(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!(
                    "vertex 0 in a 1-based edge list ({u}, {v})"
                )));
            }
            zero.push((u - 1, v - 1));
        }
        Self::new(n, &zero)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `x`.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex {
                vertex: x,
                n: self.n,
            })
        }
    }

    /// Induced subgraph on `vertices` (deduplicated and sorted), relabeled to
    /// `0..len` with the mapping back to `self` recorded.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut labels: Vec<usize> = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut edges = Vec::new();
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::new(labels.len(), &edges).expect("induced edges are valid");
        Subgraph { graph, labels }
    }

    /// The unit sphere `S(x)`: the subgraph induced by the neighbors of `x`.
    pub fn unit_sphere(&self, x: usize) -> Result<Subgraph> {
        self.check_vertex(x)?;
        Ok(self.induced(&self.adj[x]))
    }

    /// Every clique of the graph, grouped by dimension, lexicographic within
    /// each dimension.
    pub fn cliques(&self) -> Cliques {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        self.for_each_clique(|c| {
            let d = c.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(Simplex {
                vertices: c.to_vec(),
            });
        });
        Cliques { by_dim }
    }

    /// Visits every clique in lexicographic pre-order, extending each clique
    /// only toward higher-indexed vertices.
    pub fn for_each_clique<F: FnMut(&[usize])>(&self, mut visit: F) {
        let mut stack = Vec::new();
        if self.n <= 64 {
            let masks = self.bit_rows();
            for v in 0..self.n {
                stack.push(v);
                visit(&stack);
                let higher = masks[v] & above(v);
                extend_bits(&masks, higher, &mut stack, &mut visit);
                stack.pop();
            }
        } else {
            for v in 0..self.n {
                stack.push(v);
                visit(&stack);
                let higher: Vec<usize> =
                    self.adj[v].iter().copied().filter(|&w| w > v).collect();
                self.extend_lists(&higher, &mut stack, &mut visit);
                stack.pop();
            }
        }
    }

    fn bit_rows(&self) -> Vec<u64> {
        self.adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }

    fn extend_lists<F: FnMut(&[usize])>(
        &self,
        candidates: &[usize],
        stack: &mut Vec<usize>,
        visit: &mut F,
    ) {
        for (i, &w) in candidates.iter().enumerate() {
            stack.push(w);
            visit(stack);
            let next = sorted_intersection(&candidates[i + 1..], &self.adj[w]);
            if !next.is_empty() {
                self.extend_lists(&next, stack, visit);
            }
            stack.pop();
        }
    }

    /// The f-vector `(v_0, v_1, ...)`.
    pub fn f_vector(&self) -> FVector {
        let mut counts: Vec<u64> = Vec::new();
        self.for_each_clique(|c| {
            let d = c.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        });
        FVector { counts }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Clique counts `V_k(x)` of the unit sphere of `x`; empty for isolated `x`.
    pub fn local_clique_vector(&self, x: usize) -> Result<Vec<u64>> {
        Ok(self.unit_sphere(x)?.graph.f_vector().counts)
    }

    /// Checks `sum_x V_{k-1}(x) = (k+1) v_k` for every `k` up to the clique dimension.
    pub fn handshake_check(&self) -> bool {
        let global = self.f_vector().counts;
        let mut sums = vec![0u64; global.len()];
        for x in 0..self.n {
            let local = self.unit_sphere(x).expect("in range").graph.f_vector().counts;
            if local.len() + 1 > global.len() {
                return false;
            }
            for (k, v) in local.iter().enumerate() {
                sums[k + 1] += v;
            }
        }
        (1..global.len()).all(|k| sums[k] == (k as u64 + 1) * global[k])
    }

    /// Serializable form with 0-based vertices.
    pub fn to_json_graph(&self) -> JsonGraph {
        JsonGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_graph()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_graph()
    }
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

fn extend_bits<F: FnMut(&[usize])>(
    masks: &[u64],
    mut candidates: u64,
    stack: &mut Vec<usize>,
    visit: &mut F,
) {
    while candidates != 0 {
        let w = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        stack.push(w);
        visit(stack);
        let next = candidates & masks[w];
        if next != 0 {
            extend_bits(masks, next, stack, visit);
        }
        stack.pop();
    }
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// An induced subgraph together with the labels of its vertices in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the host vertex of local vertex `i`.
    pub labels: Vec<usize>,
}

/// A clique stored as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub vertices: Vec<usize>,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Cliques grouped by dimension: `by_dim[k]` holds the `K_{k+1}` subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cliques {
    pub by_dim: Vec<Vec<Simplex>>,
}

impl Cliques {
    pub fn f_vector(&self) -> FVector {
        FVector {
            counts: self.by_dim.iter().map(|d| d.len() as u64).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// Largest clique dimension, or `None` for the empty graph.
    pub fn dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// Graph JSON: `{"n": <int>, "edges": [[u, v], ...]}` with 0-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl JsonGraph {
    pub fn into_graph(self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }
}
