#![allow(dead_code)]

use chromacurv::generators::{self, SplitMix64};
use chromacurv::Graph;

/// Named fixtures used across the integration suites.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("diamond", generators::diamond()),
        ("house", generators::house()),
        ("octahedron", generators::octahedron()),
        ("wheel(4)", generators::wheel(4)),
        ("cycle(5)", generators::cycle(5)),
        ("path(5)", generators::path(5)),
        ("fig6", generators::fig6()),
        ("cytosine", generators::cytosine()),
    ]
}

/// Every registry generator at small sizes.
pub fn registry_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = fixtures().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    for n in 1..=6 {
        out.push((format!("complete({n})"), generators::complete(n)));
        out.push((format!("path({n})"), generators::path(n)));
        out.push((format!("star({n})"), generators::star(n)));
    }
    for n in 3..=8 {
        out.push((format!("cycle({n})"), generators::cycle(n)));
        out.push((format!("wheel({n})"), generators::wheel(n)));
    }
    out
}

/// `G(n, 1/2)` samples with `n` cycling through 4..=9.
pub fn seeded_gnp(count: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| generators::erdos_renyi(4 + (i % 6) as usize, 1, 2, 1000 + i).unwrap())
        .collect()
}

/// Random labelled tree: vertex `i` hangs off a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.below(i as u64) as usize, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Collects failures for one acceptance criterion and prints a summary line.
pub struct Criterion {
    id: &'static str,
    title: &'static str,
    failures: Vec<String>,
    checked: usize,
}

impl Criterion {
    pub fn new(id: &'static str, title: &'static str) -> Self {
        Self {
            id,
            title,
            failures: Vec::new(),
            checked: 0,
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{label}: got {got:?}, want {want:?}"));
    }

    pub fn finish(self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {}: {} ({} checks)", self.id, self.title, self.checked);
        for f in &self.failures {
            println!("    {f}");
        }
        assert!(self.failures.is_empty(), "criterion {} failed: {:#?}", self.id, self.failures);
    }
}
