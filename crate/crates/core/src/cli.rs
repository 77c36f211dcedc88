//! The `chromacurv` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for usage or
//! input errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::coloring::{self, ColoringSpace};
use crate::curvature;
use crate::error::Error;
use crate::exec::Exec;
use crate::generators::{self, GraphSpec};
use crate::graph::Graph;
use crate::polynomial::ChromaticPolynomial;
use crate::rational::{self, int, render, render_all, Rational};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chromacurv", version, about = "Curvature and coloring index spaces of finite simple graphs")]
pub struct Cli {
    /// Run every kernel sequentially.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a named graph as JSON.
    Gen {
        /// Generator name, e.g. octahedron, wheel, erdos_renyi.
        name: String,
        /// Integer parameters, e.g. `erdos_renyi 10 1 2 42` for n, p_num, p_den, seed.
        params: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print f-vector, Euler characteristic, curvature and coloring statistics.
    Analyze {
        file: PathBuf,
        /// Color count for the coloring probability space.
        #[arg(long, short = 'c')]
        colors: Option<u32>,
        /// Highest index moment to report (needs --colors).
        #[arg(long)]
        moments: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List every proper coloring.
    Colorings {
        file: PathBuf,
        #[arg(long, short = 'c')]
        colors: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also list the index function of every coloring.
        #[arg(long)]
        with_indices: bool,
    },
    /// Check every identity; exit 1 on the first failure.
    Verify {
        file: PathBuf,
        #[arg(long, short = 'c')]
        colors: Option<u32>,
        #[arg(long)]
        json: bool,
        /// Adds 1 to the curvature of this vertex before checking.
        #[arg(long, hide = true)]
        corrupt_curvature: Option<usize>,
    },
    /// Graphviz DOT with "color/index" vertex labels for one coloring.
    Dot {
        file: PathBuf,
        #[arg(long, short = 'c')]
        colors: u32,
        /// Row of the coloring in the enumeration order.
        #[arg(long, visible_alias = "index", conflicts_with = "coloring")]
        coloring_row: Option<usize>,
        /// Explicit coloring, comma separated.
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<u32>>,
    },
    /// Richness histogram over a seeded Erdos-Renyi ensemble.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        p_num: u64,
        #[arg(long, default_value_t = 2)]
        p_den: u64,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Output of one command: stdout text, stderr text and exit code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Default::default()
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Self {
            stderr: format!("error: {err}\n"),
            code: EXIT_USAGE,
            ..Default::default()
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    stderr: text,
                    code,
                    ..Default::default()
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let result = match &cli.command {
        Command::Gen { name, params, out } => cmd_gen(name, params, out.as_deref()),
        Command::Analyze {
            file,
            colors,
            moments,
            json,
        } => read_graph(file).and_then(|g| cmd_analyze(&g, *colors, *moments, *json, exec)),
        Command::Colorings {
            file,
            colors,
            format,
            with_indices,
        } => read_graph(file).and_then(|g| cmd_colorings(&g, *colors, *format, *with_indices, exec)),
        Command::Verify {
            file,
            colors,
            json,
            corrupt_curvature,
        } => read_graph(file).and_then(|g| cmd_verify(&g, *colors, *json, *corrupt_curvature, exec)),
        Command::Dot {
            file,
            colors,
            coloring_row,
            coloring,
        } => read_graph(file).and_then(|g| {
            let pick = match (coloring_row, coloring) {
                (_, Some(c)) => Pick::Values(c.clone()),
                (Some(r), None) => Pick::Row(*r),
                (None, None) => Pick::Row(0),
            };
            cmd_dot(&g, *colors, &pick, exec).map(Outcome::ok)
        }),
        Command::Stats {
            n,
            p_num,
            p_den,
            samples,
            seed,
            json,
        } => cmd_stats(*n, *p_num, *p_den, *samples, *seed, *json, exec).map(Outcome::ok),
    };
    result.unwrap_or_else(Outcome::usage)
}

pub fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_json(&text)
}

pub fn cmd_gen(name: &str, params: &[u64], out: Option<&Path>) -> Result<Outcome, Error> {
    let g = generators::gen_named(&GraphSpec::new(name, params))?;
    let json = g.to_json() + "\n";
    match out {
        Some(path) => {
            let mut f = fs::File::create(path)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            f.write_all(json.as_bytes())
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::default())
        }
        None => Ok(Outcome::ok(json)),
    }
}

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub f_vector: Vec<u64>,
    pub euler_characteristic: i64,
    pub chromatic_number: u32,
    pub chromatic_polynomial: Vec<String>,
    pub inductive_dimension: String,
    pub gauss_bonnet: bool,
    pub handshake: bool,
}

#[derive(Debug, Serialize)]
pub struct VertexRow {
    pub vertex: usize,
    pub degree: usize,
    pub local_cliques: Vec<u64>,
    pub curvature: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_index: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub moments: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ColoringSummary {
    pub colors: u32,
    pub count: String,
    pub richness: String,
    pub expectation_equals_curvature: bool,
    pub global_moments: Vec<String>,
}

/// Everything `analyze` prints. Field order is the JSON field order.
#[derive(Debug, Serialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub vertices: Vec<VertexRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringSummary>,
}

pub fn build_report(g: &Graph, colors: Option<u32>, moments: Option<usize>, exec: Exec) -> Result<Report, Error> {
    let curv = curvature::curvatures_with(g, exec);
    let chromatic = coloring::chromatic_number(g);
    let poly = ChromaticPolynomial::of(g);
    let dim = generators::inductive_dimension(g);
    let graph = GraphSummary {
        n: g.vertex_count(),
        edges: g.edge_count(),
        f_vector: g.f_vector().counts,
        euler_characteristic: g.euler_characteristic(),
        chromatic_number: chromatic,
        chromatic_polynomial: poly.coeffs.iter().map(BigInt::to_string).collect(),
        inductive_dimension: render(&dim),
        gauss_bonnet: curvature::gauss_bonnet_from(g, &curv).ok,
        handshake: g.handshake_check(),
    };
    let mut vertices: Vec<VertexRow> = (0..g.vertex_count())
        .map(|x| VertexRow {
            vertex: x,
            degree: g.degree(x),
            local_cliques: g.local_clique_vector(x).expect("in range"),
            curvature: render(&curv[x]),
            expected_index: None,
            sigma: None,
            moments: Vec::new(),
        })
        .collect();
    let coloring = match colors {
        None => None,
        Some(c) => {
            let space = ColoringSpace::enumerate_with(g, c, exec)?;
            let max_k = moments.unwrap_or(2).max(2);
            let stats = space.statistics_with(max_k, exec)?;
            let expect = stats.moment_vector(1);
            let sigma = coloring::render_stddev(&stats.stddev());
            for (x, row) in vertices.iter_mut().enumerate() {
                row.expected_index = Some(render(&expect[x]));
                row.sigma = Some(sigma[x].clone());
                if let Some(k) = moments {
                    row.moments = (1..=k).map(|k| render(&stats.moment(x, k))).collect();
                }
            }
            Some(ColoringSummary {
                colors: c,
                count: space.len().to_string(),
                richness: render(&coloring::richness(g)),
                expectation_equals_curvature: expect == curv,
                global_moments: (1..=moments.unwrap_or(0))
                    .map(|k| render(&stats.global_moment(k)))
                    .collect(),
            })
        }
    };
    Ok(Report {
        graph,
        vertices,
        coloring,
    })
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn render_report(r: &Report) -> String {
    let g = &r.graph;
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", g.n);
    let _ = writeln!(s, "edges: {}", g.edges);
    let _ = writeln!(s, "f-vector: {}", tuple(&g.f_vector));
    let _ = writeln!(s, "euler characteristic: {}", g.euler_characteristic);
    let _ = writeln!(s, "chromatic number: {}", g.chromatic_number);
    let poly = ChromaticPolynomial {
        coeffs: g.chromatic_polynomial.iter().map(|c| c.parse().expect("integer")).collect(),
    };
    let _ = writeln!(s, "chromatic polynomial: {poly}");
    let dim = rational::parse(&g.inductive_dimension).expect("rational");
    let _ = writeln!(
        s,
        "inductive dimension: {} ({})",
        g.inductive_dimension,
        rational::decimal(rational::to_f64(&dim), 5)
    );
    let _ = writeln!(s, "gauss-bonnet: {}", ok(g.gauss_bonnet));
    let _ = writeln!(s, "handshake: {}", ok(g.handshake));
    if let Some(c) = &r.coloring {
        let _ = writeln!(s, "colors: {}", c.colors);
        let _ = writeln!(s, "C({}) = {}", c.colors, c.count);
        let _ = writeln!(s, "richness {}", c.richness);
        let _ = writeln!(s, "E[i_f]=K: {}", ok(c.expectation_equals_curvature));
        for (k, a) in c.global_moments.iter().enumerate() {
            let _ = writeln!(s, "a_{} = {}", k + 1, a);
        }
    }
    let _ = writeln!(s);
    let mut header = vec!["vertex".to_string(), "degree".into(), "V(x)".into(), "K".into()];
    if r.coloring.is_some() {
        header.push("E[i_f]".into());
        header.push("sigma".into());
    }
    let k_max = r.vertices.first().map_or(0, |v| v.moments.len());
    header.extend((1..=k_max).map(|k| format!("a_{k}")));
    let mut rows = vec![header];
    for v in &r.vertices {
        let mut row = vec![
            v.vertex.to_string(),
            v.degree.to_string(),
            tuple(&v.local_cliques),
            v.curvature.clone(),
        ];
        row.extend(v.expected_index.clone());
        row.extend(v.sigma.clone());
        row.extend(v.moments.iter().cloned());
        rows.push(row);
    }
    s.push_str(&table(&rows));
    s
}

fn ok(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAIL"
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<w$}", w = widths[c]))
            .collect();
        let _ = writeln!(s, "{}", cells.join("  ").trim_end());
    }
    s
}

pub fn cmd_analyze(
    g: &Graph,
    colors: Option<u32>,
    moments: Option<usize>,
    json: bool,
    exec: Exec,
) -> Result<Outcome, Error> {
    let report = build_report(g, colors, moments, exec)?;
    let out = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        render_report(&report)
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct ColoringsWithIndices<'a> {
    colorings: &'a [Vec<u32>],
    indices: &'a [Vec<i64>],
}

fn csv_rows<T: ToString>(out: &mut String, prefix: Option<&str>, rows: &[Vec<T>]) {
    for row in rows {
        let mut cells: Vec<String> = prefix.into_iter().map(str::to_string).collect();
        cells.extend(row.iter().map(T::to_string));
        let _ = writeln!(out, "{}", cells.join(","));
    }
}

pub fn cmd_colorings(g: &Graph, colors: u32, format: Format, with_indices: bool, exec: Exec) -> Result<Outcome, Error> {
    let space = ColoringSpace::enumerate_with(g, colors, exec)?;
    let rows = space.to_vecs();
    let rows: Vec<Vec<u32>> = if space.is_empty() { Vec::new() } else { rows };
    let indices = if with_indices && !rows.is_empty() {
        space.index_vectors_with(exec)
    } else {
        Vec::new()
    };
    let stdout = match format {
        Format::Json if with_indices => {
            serde_json::to_string(&ColoringsWithIndices {
                colorings: &rows,
                indices: &indices,
            })
            .expect("serializes")
                + "\n"
        }
        Format::Json => serde_json::to_string(&rows).expect("serializes") + "\n",
        Format::Csv => {
            let ids: Vec<String> = (0..g.vertex_count()).map(|v| v.to_string()).collect();
            let mut out = String::new();
            if with_indices {
                let _ = writeln!(out, "kind,{}", ids.join(","));
                csv_rows(&mut out, Some("coloring"), &rows);
                csv_rows(&mut out, Some("index"), &indices);
            } else {
                let _ = writeln!(out, "{}", ids.join(","));
                csv_rows(&mut out, None, &rows);
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        stderr: format!("count {}\n", rows.len()),
        code: EXIT_OK,
    })
}

pub fn cmd_verify(
    g: &Graph,
    colors: Option<u32>,
    json: bool,
    corrupt: Option<usize>,
    exec: Exec,
) -> Result<Outcome, Error> {
    let curvature = match corrupt {
        None => None,
        Some(x) => {
            g.check_vertex(x)?;
            let mut k = curvature::curvatures_with(g, exec);
            k[x] += int(1);
            Some(k)
        }
    };
    let v = verify::verify(
        g,
        &VerifyOptions {
            colors,
            curvature,
            exec,
        },
    )?;
    let mut out = String::new();
    if json {
        out = serde_json::to_string_pretty(&v).expect("serializes") + "\n";
    } else {
        for c in &v.checks {
            let _ = writeln!(out, "{:<21} {:<4} {}", c.name, ok(c.ok), c.detail);
        }
        let _ = writeln!(out, "{} colorings checked (c = {})", v.colorings_checked, v.colors);
    }
    let (code, stderr) = match v.first_failure() {
        None => (EXIT_OK, String::new()),
        Some(c) => (EXIT_VERIFY_FAILED, format!("verification failed: {}: {}\n", c.name, c.detail)),
    };
    Ok(Outcome {
        stdout: out,
        stderr,
        code,
    })
}

/// How `dot` selects a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pick {
    Row(usize),
    Values(Vec<u32>),
}

pub fn cmd_dot(g: &Graph, colors: u32, pick: &Pick, exec: Exec) -> Result<String, Error> {
    let space = ColoringSpace::enumerate_with(g, colors, exec)?;
    let row = match pick {
        Pick::Row(r) => *r,
        Pick::Values(v) => space
            .position(v)
            .ok_or_else(|| Error::Parse(format!("{v:?} is not a proper {colors}-coloring of this graph")))?,
    };
    let coloring = space.get(row)?;
    let f = curvature::VertexFunction::from_colors(&coloring.values);
    let idx = curvature::indices(g, &f)?;
    Ok(dot(g, &coloring.values, &idx))
}

/// DOT text with `color/index` labels; nodes and edges in vertex order.
pub fn dot(g: &Graph, colors: &[u32], indices: &[i64]) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for x in 0..g.vertex_count() {
        let _ = writeln!(s, "  {x} [label=\"{}/{}\"];", colors[x], indices[x]);
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Serialize)]
pub struct RichnessHistogram {
    pub n: usize,
    pub p: String,
    pub samples: u64,
    pub seed: u64,
    /// Richness value to number of samples, ordered by value.
    pub histogram: Vec<(String, u64)>,
}

/// Samples `erdos_renyi(n, p, seed + i)` for `i < samples`.
pub fn richness_histogram(n: usize, p_num: u64, p_den: u64, samples: u64, seed: u64, exec: Exec) -> Result<RichnessHistogram, Error> {
    let seeds: Vec<u64> = (0..samples).map(|i| seed.wrapping_add(i)).collect();
    let graphs = seeds
        .iter()
        .map(|&s| generators::erdos_renyi(n, p_num, p_den, s))
        .collect::<Result<Vec<_>, _>>()?;
    let values = exec.map(&graphs, coloring::richness);
    let mut counts: BTreeMap<Rational, u64> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    Ok(RichnessHistogram {
        n,
        p: render(&Rational::new(p_num.into(), p_den.into())),
        samples,
        seed,
        histogram: counts.into_iter().map(|(k, v)| (render(&k), v)).collect(),
    })
}

pub fn cmd_stats(n: usize, p_num: u64, p_den: u64, samples: u64, seed: u64, json: bool, exec: Exec) -> Result<String, Error> {
    let h = richness_histogram(n, p_num, p_den, samples, seed, exec)?;
    if json {
        return Ok(serde_json::to_string_pretty(&h).expect("serializes") + "\n");
    }
    let mut s = format!("richness over {} samples of G({}, {}), seeds {}..\n", h.samples, h.n, h.p, h.seed);
    let mut rows = vec![vec!["richness".to_string(), "count".into()]];
    rows.extend(h.histogram.iter().map(|(k, c)| vec![k.clone(), c.to_string()]));
    s.push_str(&table(&rows));
    Ok(s)
}

/// Renders a rational vector as `(a, b, ...)`.
pub fn rational_tuple(rs: &[Rational]) -> String {
    tuple(&render_all(rs))
}
