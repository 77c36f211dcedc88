//! Named graph constructors, seeded random graphs and the inductive dimension.
//!
//! # Random graphs
//!
//! `erdos_renyi(n, p_num, p_den, seed)` visits the pairs `(u, v)`, `u < v`, in
//! lexicographic order and draws one 64-bit word `r` per pair from SplitMix64
//! seeded with `seed`:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15          (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB    (wrapping)
//! r = z ^ (z >> 31)
//! ```
//!
//! The pair becomes an edge iff `r * p_den < p_num * 2^64`, i.e. iff
//! `r / 2^64 < p_num / p_den` in exact arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, Rational};

/// The 25-edge ten-vertex example graph, 1-based as originally listed.
pub const FIG6_EDGES_ONE_BASED: [(usize, usize); 25] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (2, 9), (2, 10),
    (3, 4), (3, 8), (3, 10), (4, 6), (4, 7), (4, 8), (5, 7), (5, 8), (5, 9),
    (5, 10), (6, 7), (6, 8), (7, 8), (7, 10), (8, 10), (9, 10),
];

/// Atom labels of the cytosine graph, in vertex order.
pub const CYTOSINE_ATOMS: [&str; 13] = [
    "N1", "C2", "N3", "C4", "C5", "C6", "O2", "N4", "H1", "H5", "H6", "H4a", "H4b",
];

/// Cytosine bonds (single and double bonds alike) over [`CYTOSINE_ATOMS`].
pub const CYTOSINE_EDGES: [(usize, usize); 13] = [
    // ring N1-C2-N3-C4-C5-C6
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
    // carbonyl oxygen on C2, amine nitrogen on C4
    (1, 6), (3, 7),
    // hydrogens on N1, C5, C6 and the amine
    (0, 8), (4, 9), (5, 10), (7, 11), (7, 12),
];

/// Generator names accepted by [`gen_named`].
pub const REGISTRY: [&str; 11] = [
    "complete", "cycle", "path", "star", "wheel", "octahedron", "diamond", "house", "fig6",
    "cytosine", "erdos_renyi",
];

/// A generator name with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub name: String,
    pub params: Vec<u64>,
}

impl GraphSpec {
    pub fn new(name: &str, params: &[u64]) -> Self {
        Self {
            name: name.to_string(),
            params: params.to_vec(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        gen_named(self)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(u64::to_string).collect();
            write!(f, "({})", p.join(","))?;
        }
        Ok(())
    }
}

/// Parses `name` or `name(a,b,...)`.
impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = match s.split_once('(') {
            None => (s, Vec::new()),
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parameters in '{s}'")))?;
                let params = inner
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad parameter '{t}' in '{s}'")))
                    })
                    .collect::<Result<Vec<u64>>>()?;
                (name, params)
            }
        };
        Ok(Self::new(name.trim(), &params))
    }
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn arity(spec: &GraphSpec, k: usize) -> Result<&[u64]> {
    if spec.params.len() == k {
        Ok(&spec.params)
    } else {
        Err(invalid(
            &spec.name,
            format!("expected {k} parameter(s), got {}", spec.params.len()),
        ))
    }
}

fn size(spec: &GraphSpec, min: u64) -> Result<usize> {
    let n = arity(spec, 1)?[0];
    if n < min {
        return Err(invalid(&spec.name, format!("size must be at least {min}, got {n}")));
    }
    Ok(n as usize)
}

/// Builds the graph named by `spec`.
pub fn gen_named(spec: &GraphSpec) -> Result<Graph> {
    match spec.name.as_str() {
        "complete" => Ok(complete(size(spec, 1)?)),
        "cycle" => Ok(cycle(size(spec, 3)?)),
        "path" => Ok(path(size(spec, 1)?)),
        "star" => Ok(star(size(spec, 1)?)),
        "wheel" => Ok(wheel(size(spec, 3)?)),
        "octahedron" => arity(spec, 0).map(|_| octahedron()),
        "diamond" => arity(spec, 0).map(|_| diamond()),
        "house" => arity(spec, 0).map(|_| house()),
        "fig6" => arity(spec, 0).map(|_| fig6()),
        "cytosine" => arity(spec, 0).map(|_| cytosine()),
        "erdos_renyi" => {
            let p = arity(spec, 4)?;
            erdos_renyi(p[0] as usize, p[1], p[2], p[3])
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("valid")
}

/// `C_n` on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("valid")
}

/// Star on `n` vertices: hub `0` joined to `1..n`.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges).expect("valid")
}

/// Wheel with `n` rim vertices: hub `0`, rim cycle `1..=n`.
pub fn wheel(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    Graph::new(n + 1, &edges).expect("valid")
}

/// `K_{2,2,2}`; vertex `i` is opposite `i + 3`.
pub fn octahedron() -> Graph {
    let edges: Vec<_> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    Graph::new(6, &edges).expect("valid")
}

/// `K_4` minus the edge `1-3`; vertices `0` and `2` have degree 3.
pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).expect("valid")
}

/// Square `A-C-D-B-A` with apex `E` over the edge `C-D`;
/// vertices `A=0, B=1, C=2, D=3, E=4`.
pub fn house() -> Graph {
    Graph::new(5, &[(0, 2), (2, 3), (3, 1), (1, 0), (2, 4), (3, 4)]).expect("valid")
}

pub fn fig6() -> Graph {
    Graph::from_one_based(10, &FIG6_EDGES_ONE_BASED).expect("valid")
}

pub fn cytosine() -> Graph {
    Graph::new(13, &CYTOSINE_EDGES).expect("valid")
}

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `true` with probability exactly `num / den` over the 2^64 outcomes.
    pub fn bernoulli(&mut self, num: u64, den: u64) -> bool {
        (self.next_u64() as u128) * (den as u128) < (num as u128) << 64
    }

    /// Uniform permutation of `0..n` (Fisher–Yates with rejection sampling).
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i as u64 + 1) as usize;
            p.swap(i, j);
        }
        p
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let r = self.next_u64();
            if r < zone {
                return r % bound;
            }
        }
    }
}

/// `G(n, p)` with `p = p_num / p_den`.
pub fn erdos_renyi(n: usize, p_num: u64, p_den: u64, seed: u64) -> Result<Graph> {
    if p_den == 0 || p_num > p_den {
        return Err(invalid(
            "erdos_renyi",
            format!("probability {p_num}/{p_den} is not in [0, 1]"),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Recursive dimension: the empty graph has dimension -1 and
/// `dim(G) = 1 + (1/n) sum_x dim(S(x))`.
pub fn inductive_dimension(g: &Graph) -> Rational {
    let mut memo = HashMap::new();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    dimension_of(g, all, &mut memo)
}

/// Dimension of the subgraph of `g` induced by `subset` (sorted).
fn dimension_of(g: &Graph, subset: Vec<usize>, memo: &mut HashMap<Vec<usize>, Rational>) -> Rational {
    if subset.is_empty() {
        return int(-1);
    }
    if let Some(d) = memo.get(&subset) {
        return d.clone();
    }
    let mut total = Rational::zero();
    for &x in &subset {
        let sphere: Vec<usize> = subset.iter().copied().filter(|&y| g.has_edge(x, y)).collect();
        total += dimension_of(g, sphere, memo);
    }
    let d = int(1) + total / int(subset.len() as i64);
    memo.insert(subset, d.clone());
    d
}
