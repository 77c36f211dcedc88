//! Proper colorings as a finite probability space.
//!
//! The space `Omega_c` holds every proper coloring with colors `1..=c`, in
//! lexicographic order of the color vectors. With the uniform measure the
//! expected index at each vertex equals the curvature there; the statistics
//! below compute that expectation, the expected sub-level clique counts and
//! higher moments of the index, all exactly.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curvature::SphereCliques;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::polynomial::ChromaticPolynomial;
use crate::rational::{self, Rational};

/// A proper coloring with colors in `1..=colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub values: Vec<u32>,
    pub colors: u32,
}

/// All proper `colors`-colorings of a graph, stored row-major.
#[derive(Debug, Clone)]
pub struct ColoringSpace {
    graph: Graph,
    colors: u32,
    flat: Vec<u32>,
}

/// Backtracking state shared by enumeration and the chromatic-number search.
struct Search {
    colors: u32,
    /// `earlier[v]`: neighbors of `v` with a smaller label.
    earlier: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Graph, colors: u32) -> Self {
        let earlier = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
            .collect();
        Self { colors, earlier }
    }

    fn allowed(&self, values: &[u32], v: usize, c: u32) -> bool {
        self.earlier[v].iter().all(|&w| values[w] != c)
    }

    /// Extends the partial coloring `values` to full colorings, calling `emit` for each.
    /// Stops early once `emit` returns `false`.
    fn run<F: FnMut(&[u32]) -> bool>(&self, values: &mut Vec<u32>, emit: &mut F) -> bool {
        let v = values.len();
        if v == self.earlier.len() {
            return emit(values);
        }
        for c in 1..=self.colors {
            if self.allowed(values, v, c) {
                values.push(c);
                let go_on = self.run(values, emit);
                values.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    /// Valid partial colorings of the first `depth` vertices, lexicographic.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut values = Vec::new();
        self.prefixes_rec(depth, &mut values, &mut out);
        out
    }

    fn prefixes_rec(&self, depth: usize, values: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if values.len() == depth {
            out.push(values.clone());
            return;
        }
        let v = values.len();
        for c in 1..=self.colors {
            if self.allowed(values, v, c) {
                values.push(c);
                self.prefixes_rec(depth, values, out);
                values.pop();
            }
        }
    }
}

impl ColoringSpace {
    pub fn enumerate(g: &Graph, colors: u32) -> Result<Self> {
        Self::enumerate_with(g, colors, Exec::default())
    }

    /// Enumerates by backtracking in vertex order with colors tried ascending.
    /// The parallel strategy splits on the colors of the first few vertices
    /// and concatenates the branches in prefix order.
    pub fn enumerate_with(g: &Graph, colors: u32, exec: Exec) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidColorCount(colors));
        }
        let n = g.vertex_count();
        let search = Search::new(g, colors);
        let depth = split_depth(n, colors);
        let prefixes = search.prefixes(depth);
        let chunks = exec.map(&prefixes, |prefix| {
            let mut flat = Vec::new();
            let mut values = prefix.clone();
            search.run(&mut values, &mut |row| {
                flat.extend_from_slice(row);
                true
            });
            flat
        });
        Ok(Self {
            graph: g.clone(),
            colors,
            flat: chunks.concat(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn len(&self) -> usize {
        match self.graph.vertex_count() {
            // the empty graph has exactly one (empty) coloring
            0 => 1,
            n => self.flat.len() / n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.graph.vertex_count() > 0 && self.flat.is_empty()
    }

    pub fn row(&self, r: usize) -> &[u32] {
        let n = self.graph.vertex_count();
        &self.flat[r * n..(r + 1) * n]
    }

    pub fn get(&self, r: usize) -> Result<Coloring> {
        if r >= self.len() {
            return Err(Error::RowOutOfRange { row: r, len: self.len() });
        }
        Ok(Coloring {
            values: self.row(r).to_vec(),
            colors: self.colors,
        })
    }

    pub fn rows(&self) -> Box<dyn Iterator<Item = &[u32]> + '_> {
        match self.graph.vertex_count() {
            0 => Box::new(std::iter::once(&[][..])),
            n => Box::new(self.flat.chunks(n)),
        }
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    /// Position of a coloring in the space, by binary search on the ordering.
    pub fn position(&self, values: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        if self.is_empty() {
            return None;
        }
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.row(mid).cmp(values) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySpace {
                colors: self.colors,
                chromatic: chromatic_number(&self.graph),
            })
        } else {
            Ok(())
        }
    }

    /// Index vector `(i_f(0), ..., i_f(n-1))` of every coloring, in space order.
    pub fn index_vectors(&self) -> Vec<Vec<i64>> {
        self.index_vectors_with(Exec::default())
    }

    pub fn index_vectors_with(&self, exec: Exec) -> Vec<Vec<i64>> {
        let cliques = SphereCliques::all(&self.graph);
        let rows: Vec<&[u32]> = self.rows().collect();
        exec.map(&rows, |row| {
            (0..row.len()).map(|x| cliques[x].index(row, x)).collect()
        })
    }

    /// Exact index statistics over the space with moments up to `max_k`.
    pub fn statistics(&self, max_k: usize) -> Result<IndexStatistics> {
        self.statistics_with(max_k, Exec::default())
    }

    pub fn statistics_with(&self, max_k: usize, exec: Exec) -> Result<IndexStatistics> {
        self.require_nonempty()?;
        let g = &self.graph;
        let n = g.vertex_count();
        let cliques = SphereCliques::all(g);
        let dims: Vec<usize> = (0..n)
            .map(|x| g.local_clique_vector(x).expect("in range").len())
            .collect();
        let rows: Vec<&[u32]> = self.rows().collect();
        let sums = exec.fold_chunks(
            &rows,
            256,
            || Sums::zero(&dims, max_k),
            |mut acc, chunk| {
                for row in chunk {
                    acc.add(&cliques, row, max_k);
                }
                acc
            },
            Sums::merge,
        );
        Ok(IndexStatistics {
            count: rows.len() as u64,
            power_sums: sums.power,
            sublevel_sums: sums.sublevel,
        })
    }

    /// `E[i_f(x)]` for every vertex.
    pub fn index_expectation(&self) -> Result<Vec<Rational>> {
        Ok(self.statistics(1)?.moment_vector(1))
    }

    /// `E[V_k^-(x)]`: expected number of `K_{k+1}` subgraphs of `S(x)` lying
    /// entirely below `f(x)`.
    pub fn sublevel_count_expectation(&self, x: usize, k: usize) -> Result<Rational> {
        self.graph.check_vertex(x)?;
        Ok(self.statistics(1)?.sublevel_expectation(x, k))
    }

    /// Orbits of the color-permutation action, keyed by first-occurrence
    /// relabeling; returns the orbit sizes in order of first appearance.
    pub fn permutation_orbits(&self) -> Vec<usize> {
        let mut order: Vec<Vec<u32>> = Vec::new();
        let mut sizes: HashMap<Vec<u32>, usize> = HashMap::new();
        for row in self.rows() {
            let key = canonical_relabel(row);
            let e = sizes.entry(key.clone()).or_insert(0);
            if *e == 0 {
                order.push(key);
            }
            *e += 1;
        }
        order.iter().map(|k| sizes[k]).collect()
    }
}

/// Number of leading vertices fixed before the branches are handed out.
fn split_depth(n: usize, colors: u32) -> usize {
    let mut depth = 0;
    let mut branches = 1u64;
    while depth < n && branches < 64 {
        branches = branches.saturating_mul(colors as u64);
        depth += 1;
    }
    depth.min(n)
}

/// Relabels colors in order of first occurrence: `(3,1,3,2) -> (1,2,1,3)`.
pub fn canonical_relabel(row: &[u32]) -> Vec<u32> {
    let mut map: HashMap<u32, u32> = HashMap::new();
    row.iter()
        .map(|&c| {
            let next = map.len() as u32 + 1;
            *map.entry(c).or_insert(next)
        })
        .collect()
}

struct Sums {
    /// `power[x][k-1] = sum_f i_f(x)^k`.
    power: Vec<Vec<i128>>,
    /// `sublevel[x][k] = sum_f V_k^-(x)`.
    sublevel: Vec<Vec<u64>>,
}

impl Sums {
    fn zero(dims: &[usize], max_k: usize) -> Self {
        Self {
            power: vec![vec![0; max_k]; dims.len()],
            sublevel: dims.iter().map(|&d| vec![0; d]).collect(),
        }
    }

    fn add(&mut self, cliques: &[SphereCliques], row: &[u32], max_k: usize) {
        for x in 0..row.len() {
            let mut chi = 0i64;
            for d in cliques[x].below(row, row[x]) {
                self.sublevel[x][d] += 1;
                chi += if d % 2 == 0 { 1 } else { -1 };
            }
            let i = (1 - chi) as i128;
            let mut p = 1i128;
            for k in 0..max_k {
                p *= i;
                self.power[x][k] += p;
            }
        }
    }

    fn merge(mut a: Self, b: Self) -> Self {
        for (ra, rb) in a.power.iter_mut().zip(b.power) {
            for (x, y) in ra.iter_mut().zip(rb) {
                *x += y;
            }
        }
        for (ra, rb) in a.sublevel.iter_mut().zip(b.sublevel) {
            for (x, y) in ra.iter_mut().zip(rb) {
                *x += y;
            }
        }
        a
    }
}

/// Exact sums of index powers and sub-level counts over a coloring space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexStatistics {
    pub count: u64,
    power_sums: Vec<Vec<i128>>,
    sublevel_sums: Vec<Vec<u64>>,
}

impl IndexStatistics {
    pub fn max_moment(&self) -> usize {
        self.power_sums.first().map_or(0, Vec::len)
    }

    fn mean(&self, total: BigInt) -> Rational {
        Rational::new(total, BigInt::from(self.count))
    }

    /// `a_k(x) = E[i_f(x)^k]`.
    pub fn moment(&self, x: usize, k: usize) -> Rational {
        assert!(k >= 1 && k <= self.max_moment(), "moment {k} not accumulated");
        self.mean(BigInt::from(self.power_sums[x][k - 1]))
    }

    pub fn moment_vector(&self, k: usize) -> Vec<Rational> {
        (0..self.power_sums.len()).map(|x| self.moment(x, k)).collect()
    }

    /// `a_k = sum_x a_k(x)`.
    pub fn global_moment(&self, k: usize) -> Rational {
        self.moment_vector(k)
            .into_iter()
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn sublevel_expectation(&self, x: usize, k: usize) -> Rational {
        let total = self.sublevel_sums[x].get(k).copied().unwrap_or(0);
        self.mean(BigInt::from(total))
    }

    /// `Var[i_f(x)] = a_2(x) - a_1(x)^2`; needs moments up to 2.
    pub fn variance(&self, x: usize) -> Rational {
        let m1 = self.moment(x, 1);
        self.moment(x, 2) - &m1 * &m1
    }

    pub fn stddev(&self) -> Vec<f64> {
        (0..self.power_sums.len())
            .map(|x| rational::sqrt_f64(&self.variance(x)))
            .collect()
    }
}

/// Least `c` admitting a proper `c`-coloring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> u32 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    // The largest clique is a lower bound.
    let floor = g.f_vector().counts.len() as u32;
    (floor..=n as u32)
        .find(|&c| {
            let search = Search::new(g, c);
            let mut found = false;
            search.run(&mut Vec::with_capacity(n), &mut |_| {
                found = true;
                false
            });
            found
        })
        .expect("n colors always suffice")
}

pub fn chromatic_polynomial(g: &Graph) -> ChromaticPolynomial {
    ChromaticPolynomial::of(g)
}

/// `C(c)/c!` at the chromatic number; 1 means chromatically poor.
pub fn richness(g: &Graph) -> Rational {
    let c = chromatic_number(g);
    let count = chromatic_polynomial(g).eval(c as i64);
    let factorial = (1..=c as u64).fold(BigInt::one(), |a, k| a * k);
    Rational::new(count, factorial)
}

pub fn index_expectation(g: &Graph, colors: u32) -> Result<Vec<Rational>> {
    ColoringSpace::enumerate(g, colors)?.index_expectation()
}

pub fn sublevel_count_expectation(g: &Graph, colors: u32, x: usize, k: usize) -> Result<Rational> {
    ColoringSpace::enumerate(g, colors)?.sublevel_count_expectation(x, k)
}

/// Per-vertex moments `a_k(x)` for `k = 1..=max_k`, and the global `a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moments {
    /// `per_vertex[x][k-1] = a_k(x)`.
    pub per_vertex: Vec<Vec<Rational>>,
    /// `global[k-1] = a_k`.
    pub global: Vec<Rational>,
}

pub fn index_moments(g: &Graph, colors: u32, max_k: usize) -> Result<Moments> {
    let max_k = max_k.max(1);
    let stats = ColoringSpace::enumerate(g, colors)?.statistics(max_k)?;
    let per_vertex = (0..g.vertex_count())
        .map(|x| (1..=max_k).map(|k| stats.moment(x, k)).collect())
        .collect();
    let global = (1..=max_k).map(|k| stats.global_moment(k)).collect();
    Ok(Moments { per_vertex, global })
}

pub fn index_stddev(g: &Graph, colors: u32) -> Result<Vec<f64>> {
    Ok(ColoringSpace::enumerate(g, colors)?.statistics(2)?.stddev())
}

/// Index standard deviations rounded to three places, as the tables print them.
pub fn render_stddev(sigma: &[f64]) -> Vec<String> {
    sigma.iter().map(|&s| rational::decimal(s, 3)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    /// Every vector in `1..=c`^n, filtered to proper colorings.
    fn brute_colorings(g: &Graph, c: u32) -> Vec<Vec<u32>> {
        let n = g.vertex_count();
        let total = (c as u64).pow(n as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut v = vec![0u32; n];
            for i in (0..n).rev() {
                v[i] = (code % c as u64) as u32 + 1;
                code /= c as u64;
            }
            if g.edges().iter().all(|&(a, b)| v[a] != v[b]) {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn triangle_two_colors_is_empty() {
        let s = ColoringSpace::enumerate(&triangle(), 2).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.len(), 0);
        assert_eq!(
            s.index_expectation(),
            Err(Error::EmptySpace { colors: 2, chromatic: 3 })
        );
    }

    #[test]
    fn zero_colors_rejected() {
        assert_eq!(
            ColoringSpace::enumerate(&triangle(), 0).unwrap_err(),
            Error::InvalidColorCount(0)
        );
    }

    #[test]
    fn enumeration_matches_brute_force_in_order() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for c in 1..=4 {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let s = ColoringSpace::enumerate_with(&g, c, exec).unwrap();
                assert_eq!(s.to_vecs(), brute_colorings(&g, c));
            }
        }
    }

    #[test]
    fn triangle_sublevel_expectation() {
        let s = ColoringSpace::enumerate(&triangle(), 3).unwrap();
        assert_eq!(s.len(), 6);
        for x in 0..3 {
            assert_eq!(s.sublevel_count_expectation(x, 0).unwrap(), int(1));
            assert_eq!(s.sublevel_count_expectation(x, 1).unwrap(), rat(1, 3));
            assert_eq!(s.sublevel_count_expectation(x, 5).unwrap(), int(0));
        }
    }

    #[test]
    fn single_vertex_space() {
        let g = Graph::edgeless(1);
        assert_eq!(chromatic_number(&g), 1);
        let stats = ColoringSpace::enumerate(&g, 1).unwrap().statistics(2).unwrap();
        assert_eq!(stats.moment(0, 1), int(1));
        assert_eq!(stats.stddev(), vec![0.0]);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::edgeless(0);
        assert_eq!(chromatic_number(&g), 0);
        let s = ColoringSpace::enumerate(&g, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert!(!s.is_empty());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&triangle()), 3);
        assert_eq!(chromatic_number(&path(4)), 2);
        assert_eq!(chromatic_number(&Graph::edgeless(3)), 1);
        let c5 = Graph::new(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
        assert_eq!(chromatic_number(&c5), 3);
    }

    #[test]
    fn tree_polynomial_and_richness() {
        // x (x - 1)^4
        let p = chromatic_polynomial(&path(5));
        let expected: Vec<BigInt> = [0, 1, -4, 6, -4, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(p.coeffs, expected);
        assert_eq!(richness(&path(5)), int(1));
    }

    #[test]
    fn orbits_of_path() {
        let s = ColoringSpace::enumerate(&path(3), 3).unwrap();
        // 12 colorings: 6 with both ends equal, 6 with three distinct colors
        assert_eq!(s.len(), 12);
        let mut sizes = s.permutation_orbits();
        sizes.sort();
        assert_eq!(sizes, vec![6, 6]);
    }

    #[test]
    fn position_lookup() {
        let s = ColoringSpace::enumerate(&triangle(), 3).unwrap();
        assert_eq!(s.position(&[1, 2, 3]), Some(0));
        assert_eq!(s.position(&[3, 2, 1]), Some(5));
        assert_eq!(s.position(&[1, 1, 2]), None);
        assert!(s.get(6).is_err());
    }

    #[test]
    fn canonical_relabeling() {
        assert_eq!(canonical_relabel(&[3, 1, 3, 2]), vec![1, 2, 1, 3]);
    }
}
