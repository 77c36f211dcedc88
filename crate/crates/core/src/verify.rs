//! Batch verification of the curvature identities on one graph.

use num_traits::Zero;
use serde::Serialize;

use crate::coloring::{ColoringSpace, IndexStatistics};
use crate::curvature::{self, SphereCliques};
use crate::error::Result;
use crate::exec::Exec;
use crate::graph::Graph;
use crate::polynomial::ChromaticPolynomial;
use crate::rational::{int, rat, render, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub colors: u32,
    pub colorings_checked: usize,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.ok)
    }
}

/// Inputs for [`verify`]. `curvature` replaces the computed curvature vector
/// when set, so the checks can be exercised against a corrupted field.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub colors: Option<u32>,
    pub curvature: Option<Vec<Rational>>,
    pub exec: Exec,
}

fn check(name: &'static str, failure: Option<String>, ok_detail: String) -> Check {
    match failure {
        None => Check {
            name,
            ok: true,
            detail: ok_detail,
        },
        Some(detail) => Check {
            name,
            ok: false,
            detail,
        },
    }
}

/// Runs handshake, Gauss–Bonnet, Poincaré–Hopf per coloring, the expected
/// index, the expected sub-level counts, the first moment, the symmetric
/// index and the chromatic-polynomial count. The color count defaults to the
/// chromatic number.
pub fn verify(g: &Graph, opts: &VerifyOptions) -> Result<Verification> {
    let colors = opts
        .colors
        .unwrap_or_else(|| crate::coloring::chromatic_number(g).max(1));
    let euler = g.euler_characteristic();
    let curv = opts
        .curvature
        .clone()
        .unwrap_or_else(|| curvature::curvatures_with(g, opts.exec));
    let mut checks = Vec::new();

    checks.push(check(
        "handshake",
        (!g.handshake_check()).then(|| "sum_x V_{k-1}(x) != (k+1) v_k".to_string()),
        format!("f-vector {:?}", g.f_vector().counts),
    ));

    let gb = curvature::gauss_bonnet_from(g, &curv);
    checks.push(check(
        "gauss-bonnet",
        (!gb.ok).then(|| format!("sum of curvature {} != euler characteristic {}", render(&gb.sum), euler)),
        format!("sum {} = {}", render(&gb.sum), euler),
    ));

    let space = ColoringSpace::enumerate_with(g, colors, opts.exec)?;
    let indices = space.index_vectors_with(opts.exec);
    let ph_fail = indices.iter().enumerate().find_map(|(r, iv)| {
        let s: i64 = iv.iter().sum();
        (s != euler).then(|| format!("coloring row {r}: index sum {s} != {euler}"))
    });
    checks.push(check(
        "poincare-hopf",
        ph_fail,
        format!("{} colorings", indices.len()),
    ));

    let poly = ChromaticPolynomial::of(g);
    let expected_count = poly.eval(colors as i64);
    checks.push(check(
        "chromatic-polynomial",
        (expected_count != space.len().into())
            .then(|| format!("C({colors}) = {expected_count} but {} colorings enumerated", space.len())),
        format!("C({colors}) = {expected_count}"),
    ));

    let stats = space.statistics_with(1, opts.exec)?;
    checks.push(expectation_check(&stats, &curv));
    checks.push(sublevel_check(g, &stats));

    let a1 = stats.global_moment(1);
    checks.push(check(
        "first-moment",
        (a1 != int(euler)).then(|| format!("a_1 = {} != {}", render(&a1), euler)),
        format!("a_1 = {}", render(&a1)),
    ));

    checks.push(symmetric_check(g, &space, euler, opts.exec));

    Ok(Verification {
        colors,
        colorings_checked: space.len(),
        checks,
    })
}

fn expectation_check(stats: &IndexStatistics, curv: &[Rational]) -> Check {
    let expect = stats.moment_vector(1);
    let fail = expect.iter().zip(curv).enumerate().find_map(|(x, (e, k))| {
        (e != k).then(|| format!("vertex {x}: E[i_f] = {} != K = {}", render(e), render(k)))
    });
    check("index-expectation", fail, "E[i_f] = K at every vertex".into())
}

fn sublevel_check(g: &Graph, stats: &IndexStatistics) -> Check {
    let mut fail = None;
    'outer: for x in 0..g.vertex_count() {
        let local = g.local_clique_vector(x).expect("in range");
        for (k, &v) in local.iter().enumerate() {
            let want = rat(v as i64, k as i64 + 2);
            let got = stats.sublevel_expectation(x, k);
            if got != want {
                fail = Some(format!(
                    "vertex {x}, k = {k}: E[V_k^-] = {} != {}",
                    render(&got),
                    render(&want)
                ));
                break 'outer;
            }
        }
    }
    check("sublevel-expectation", fail, "E[V_k^-(x)] = V_k(x)/(k+2)".into())
}

fn symmetric_check(g: &Graph, space: &ColoringSpace, euler: i64, exec: Exec) -> Check {
    let cliques = SphereCliques::all(g);
    let rows: Vec<&[u32]> = space.rows().collect();
    let sums = exec.map(&rows, |row| {
        let hi = row.iter().copied().max().unwrap_or(0);
        let lo = row.iter().copied().min().unwrap_or(0);
        let rev: Vec<u32> = row.iter().map(|&v| hi + lo - v).collect();
        (0..row.len()).fold(Rational::zero(), |acc, x| {
            acc + rat(cliques[x].index(row, x) + cliques[x].index(&rev, x), 2)
        })
    });
    let fail = sums.iter().enumerate().find_map(|(r, s)| {
        (*s != int(euler)).then(|| format!("coloring row {r}: sum of j_f = {} != {euler}", render(s)))
    });
    check("symmetric-index", fail, "sum_x j_f(x) = chi".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn passes_on_fixtures() {
        for g in [generators::diamond(), generators::house(), generators::octahedron(), generators::fig6()] {
            let v = verify(&g, &VerifyOptions::default()).unwrap();
            assert!(v.passed(), "{:?}", v.first_failure());
        }
    }

    #[test]
    fn corrupted_curvature_fails_gauss_bonnet_first() {
        let g = generators::diamond();
        let mut k = curvature::curvatures(&g);
        k[1] += int(1);
        let opts = VerifyOptions {
            curvature: Some(k),
            ..Default::default()
        };
        let v = verify(&g, &opts).unwrap();
        assert!(!v.passed());
        assert_eq!(v.first_failure().unwrap().name, "gauss-bonnet");
        let exp = v.checks.iter().find(|c| c.name == "index-expectation").unwrap();
        assert!(!exp.ok);
        assert!(exp.detail.starts_with("vertex 1:"));
    }

    #[test]
    fn empty_space_is_an_error() {
        let g = generators::complete(3);
        let opts = VerifyOptions {
            colors: Some(2),
            ..Default::default()
        };
        assert!(verify(&g, &opts).is_err());
    }
}
