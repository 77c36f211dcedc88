//! Curvature, Poincaré–Hopf indices and the Gauss–Bonnet / Poincaré–Hopf checks.
//!
//! The curvature of a vertex is the alternating sum
//! `K(x) = 1 - V_0(x)/2 + V_1(x)/3 - V_2(x)/4 + ...`, where `V_k(x)` counts the
//! `K_{k+1}` subgraphs of the unit sphere `S(x)`. The index of a locally
//! injective function is `i_f(x) = 1 - chi(S_f^-(x))`, with `S_f^-(x)` the part
//! of the sphere where `f` is strictly smaller than at `x`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{Graph, Subgraph};
use crate::rational::{int, rat, Rational};

/// A real-valued function on the vertices, represented by integer values.
///
/// Only the order of the values matters for indices, so integers are enough
/// for colorings and for injective functions given as rankings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    pub values: Vec<i64>,
}

impl VertexFunction {
    pub fn new(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn from_colors(colors: &[u32]) -> Self {
        Self::new(colors.iter().map(|&c| c as i64).collect())
    }

    /// Order reversal `y -> max + min - f(y)`; keeps positive colorings positive.
    pub fn reversed(&self) -> Self {
        let hi = self.values.iter().copied().max().unwrap_or(0);
        let lo = self.values.iter().copied().min().unwrap_or(0);
        Self::new(self.values.iter().map(|v| hi + lo - v).collect())
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.values.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::FunctionLength {
                got: self.values.len(),
                n: g.vertex_count(),
            })
        }
    }

    /// First neighbor of `x` sharing its value, if any.
    pub fn tie_at(&self, g: &Graph, x: usize) -> Option<usize> {
        g.neighbors(x)
            .iter()
            .copied()
            .find(|&y| self.values[y] == self.values[x])
    }

    pub fn is_locally_injective(&self, g: &Graph) -> bool {
        self.values.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.values[u] != self.values[v])
    }
}

/// `K(x)` as an exact rational.
pub fn curvature(g: &Graph, x: usize) -> Result<Rational> {
    Ok(curvature_from_counts(&g.local_clique_vector(x)?))
}

/// Curvature from the sphere's clique counts `(V_0, V_1, ...)`.
pub fn curvature_from_counts(local: &[u64]) -> Rational {
    let mut k = int(1);
    for (i, &v) in local.iter().enumerate() {
        let term = rat(v as i64, i as i64 + 2);
        if i % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

/// Curvature of every vertex, in vertex order.
pub fn curvatures(g: &Graph) -> Vec<Rational> {
    curvatures_with(g, Exec::default())
}

pub fn curvatures_with(g: &Graph, exec: Exec) -> Vec<Rational> {
    exec.map_range(g.vertex_count(), |x| curvature(g, x).expect("in range"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussBonnet {
    pub sum: Rational,
    pub euler: i64,
    pub ok: bool,
}

/// Compares the total curvature with the Euler characteristic.
pub fn gauss_bonnet_check(g: &Graph) -> GaussBonnet {
    gauss_bonnet_from(g, &curvatures(g))
}

/// Gauss–Bonnet for a supplied curvature vector.
pub fn gauss_bonnet_from(g: &Graph, curv: &[Rational]) -> GaussBonnet {
    let sum: Rational = curv.iter().fold(Rational::zero(), |a, b| a + b);
    let euler = g.euler_characteristic();
    GaussBonnet {
        ok: sum == int(euler),
        sum,
        euler,
    }
}

/// `S_f^-(x)`: the sphere restricted to neighbors with strictly smaller value.
pub fn sub_sphere(g: &Graph, f: &VertexFunction, x: usize) -> Result<Subgraph> {
    g.check_vertex(x)?;
    f.check_len(g)?;
    let fx = f.values[x];
    let below: Vec<usize> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| f.values[y] < fx)
        .collect();
    Ok(g.induced(&below))
}

/// `i_f(x) = 1 - chi(S_f^-(x))`. Fails if a neighbor of `x` ties with `f(x)`.
pub fn index(g: &Graph, f: &VertexFunction, x: usize) -> Result<i64> {
    g.check_vertex(x)?;
    f.check_len(g)?;
    if let Some(neighbor) = f.tie_at(g, x) {
        return Err(Error::NotLocallyInjective {
            vertex: x,
            neighbor,
        });
    }
    Ok(1 - sub_sphere(g, f, x)?.graph.euler_characteristic())
}

pub fn indices(g: &Graph, f: &VertexFunction) -> Result<Vec<i64>> {
    (0..g.vertex_count()).map(|x| index(g, f, x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareHopf {
    pub sum: i64,
    pub euler: i64,
    pub ok: bool,
}

/// Compares `sum_x i_f(x)` with the Euler characteristic.
pub fn poincare_hopf_check(g: &Graph, f: &VertexFunction) -> Result<PoincareHopf> {
    let sum = indices(g, f)?.into_iter().sum();
    let euler = g.euler_characteristic();
    Ok(PoincareHopf {
        sum,
        euler,
        ok: sum == euler,
    })
}

/// `j_f(x) = (i_f(x) + i_{-f}(x)) / 2`, with `-f` the order reversal of `f`.
pub fn symmetric_index(g: &Graph, f: &VertexFunction, x: usize) -> Result<Rational> {
    let up = index(g, f, x)?;
    let down = index(g, &f.reversed(), x)?;
    Ok(rat(up + down, 2))
}

/// Sphere cliques of one vertex in host labels, used by the batch kernels.
#[derive(Debug, Clone, Default)]
pub(crate) struct SphereCliques {
    /// Flattened member lists.
    members: Vec<usize>,
    /// `(start, len)` into `members`; `len - 1` is the dimension.
    spans: Vec<(usize, usize)>,
}

impl SphereCliques {
    pub(crate) fn of(g: &Graph, x: usize) -> Self {
        let sphere = g.unit_sphere(x).expect("in range");
        let mut out = Self::default();
        sphere.graph.for_each_clique(|c| {
            out.spans.push((out.members.len(), c.len()));
            out.members.extend(c.iter().map(|&i| sphere.labels[i]));
        });
        out
    }

    pub(crate) fn all(g: &Graph) -> Vec<Self> {
        (0..g.vertex_count()).map(|x| Self::of(g, x)).collect()
    }

    /// Cliques lying entirely below `level`, visited as their dimension.
    pub(crate) fn below<'a>(
        &'a self,
        values: &'a [u32],
        level: u32,
    ) -> impl Iterator<Item = usize> + 'a {
        self.spans.iter().filter_map(move |&(s, l)| {
            self.members[s..s + l]
                .iter()
                .all(|&y| values[y] < level)
                .then_some(l - 1)
        })
    }

    /// Index at the sphere's center for a locally injective `values`.
    pub(crate) fn index(&self, values: &[u32], center: usize) -> i64 {
        let chi: i64 = self
            .below(values, values[center])
            .map(|d| if d % 2 == 0 { 1 } else { -1 })
            .sum();
        1 - chi
    }
}
