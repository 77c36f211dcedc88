//! Chromatic polynomials by deletion–contraction.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;

/// Integer coefficients of `C(x)` in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticPolynomial {
    pub coeffs: Vec<BigInt>,
}

impl ChromaticPolynomial {
    pub fn of(g: &Graph) -> Self {
        let mut memo = HashMap::new();
        let edges: Vec<(usize, usize)> = g.edges().to_vec();
        Self {
            coeffs: chromatic(g.vertex_count(), edges, &mut memo),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// `C(0) = 0` (for n ≥ 1), monic, and signs alternating downward from the
    /// leading coefficient.
    pub fn satisfies_invariants(&self) -> bool {
        let n = self.degree();
        if self.coeffs.last() != Some(&BigInt::one()) {
            return false;
        }
        if n >= 1 && !self.coeffs[0].is_zero() {
            return false;
        }
        self.coeffs.iter().enumerate().all(|(k, c)| {
            c.is_zero() || (n - k).is_multiple_of(2) == c.is_positive()
        })
    }
}

impl fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

type Memo = HashMap<(usize, Vec<(usize, usize)>), Vec<BigInt>>;

fn monomial(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[n] = BigInt::one();
    p
}

/// `p(x) * (x - a)`.
fn times_linear(p: &[BigInt], a: i64) -> Vec<BigInt> {
    let a = BigInt::from(a);
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * &a;
    }
    out
}

fn falling_factorial(n: usize) -> Vec<BigInt> {
    (0..n).fold(vec![BigInt::one()], |p, a| times_linear(&p, a as i64))
}

fn subtract(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// Removes vertex `v`, shifting higher labels down; edges stay sorted.
fn remove_vertex(edges: &[(usize, usize)], v: usize) -> Vec<(usize, usize)> {
    let shift = |w: usize| if w > v { w - 1 } else { w };
    edges
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (shift(a), shift(b)))
        .collect()
}

/// Merges `v` into `u` (u < v), dropping parallel edges.
fn contract(edges: &[(usize, usize)], u: usize, v: usize) -> Vec<(usize, usize)> {
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&e| e != (u, v))
        .map(|&(a, b)| {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            let (a, b) = (shift(a), shift(b));
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn chromatic(n: usize, edges: Vec<(usize, usize)>, memo: &mut Memo) -> Vec<BigInt> {
    if edges.is_empty() {
        return monomial(n);
    }
    if edges.len() == n * (n - 1) / 2 {
        return falling_factorial(n);
    }
    let key = (n, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (n, edges) = (key.0, &key.1);

    let mut degree = vec![0usize; n];
    for &(a, b) in edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    // Isolated vertices factor out x, pendant vertices factor out (x - 1).
    let result = if let Some(v) = (0..n).find(|&v| degree[v] <= 1) {
        let rest = chromatic(n - 1, remove_vertex(edges, v), memo);
        times_linear(&rest, degree[v] as i64)
    } else {
        // Delete/contract an edge at a vertex of maximum degree.
        let hub = (0..n).max_by_key(|&v| (degree[v], std::cmp::Reverse(v))).unwrap();
        let &(u, v) = edges.iter().find(|&&(a, b)| a == hub || b == hub).unwrap();
        let deleted: Vec<_> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
        let minus = chromatic(n, deleted, memo);
        let merged = chromatic(n - 1, contract(edges, u, v), memo);
        subtract(minus, &merged)
    };
    memo.insert(key, result.clone());
    result
}
