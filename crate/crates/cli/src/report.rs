use std::collections::BTreeMap;
use std::time::Instant;

use num_rational::Ratio;
use serde::Serialize;

use selfsim_core::chromatic::{classify_bundle, verify_coloring, Classification};
use selfsim_core::spectral::{
    cheeger_bounds, conductance_exact_limited, jstar_alternating_conductance,
    jstar_alternating_sequence, vertex_expansion_exact_limited, SpectrumMultiset, MAX_EIGEN_ORDER,
};
use selfsim_core::{materialize, Bundle, ExplicitGraph, SelfSimilarSystem, Vertex};

use crate::args::{ColorMethod, ReportArgs};
use crate::commands::{
    closed_spectrum, compute_coloring, emit, load_system, method_name, numeric_spectrum, structured_method,
    Outcome,
};
use crate::failure::Failure;

#[derive(Serialize)]
struct Report {
    tool: Tool,
    config: Config,
    system: SystemInfo,
    counts: Counts,
    classification: Option<Classification>,
    coloring: Option<ColoringSection>,
    spectrum: Option<SpectrumSection>,
    cut: Option<CutSection>,
    levels: Vec<LevelRow>,
    jstar: Option<JStarSection>,
    skipped: BTreeMap<&'static str, String>,
    timings_ms: BTreeMap<&'static str, f64>,
}

#[derive(Serialize)]
struct Tool {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct Config {
    base: String,
    bundle: String,
    k: usize,
    max_vertices: u64,
    max_exact: usize,
    max_enum: usize,
    tol: f64,
}

#[derive(Serialize)]
struct SystemInfo {
    n: usize,
    base_edges: Vec<(usize, usize)>,
    bundle_pairs: Vec<(usize, usize)>,
    bundle_loops: Vec<usize>,
    bundle_simple_edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct Counts {
    vertices: Option<u64>,
    edges_formula: u128,
    edges_materialized: Option<usize>,
    min_degree: Option<usize>,
    max_degree: Option<usize>,
}

#[derive(Serialize)]
struct ColoringSection {
    method: &'static str,
    colors_used: usize,
    exact_chi: Option<usize>,
    verified: bool,
    colors: Vec<usize>,
}

#[derive(Serialize)]
struct SpectrumSection {
    closed_source: Option<&'static str>,
    closed: Option<SpectrumMultiset>,
    numeric: Option<SpectrumMultiset>,
    closed_matches_numeric: Option<bool>,
    gap: Option<f64>,
    cheeger_lower: Option<f64>,
    cheeger_upper: Option<f64>,
}

#[derive(Serialize)]
struct CutSection {
    conductance: String,
    conductance_value: f64,
    witness: Vec<String>,
    witness_verified: bool,
    vertex_expansion: Option<String>,
    vertex_expansion_value: Option<f64>,
    vertex_expansion_witness: Option<Vec<String>>,
}

/// Conductance per level, for comparing `Phi(G^k)` against `Phi(G)`.
#[derive(Serialize)]
pub struct LevelRow {
    pub k: usize,
    pub vertices: usize,
    pub conductance: String,
    pub conductance_value: f64,
    pub at_least_level_one: bool,
}

/// The alternating J* sequence and its conductance floor next to the values
/// recomputed from the corrected recursion.
#[derive(Serialize)]
struct JStarSection {
    alternating_sequence: Vec<f64>,
    alternating_conductance_floor: f64,
    corrected_gap: Option<f64>,
    corrected_cheeger_lower: Option<f64>,
    note: &'static str,
}

const JSTAR_NOTE: &str = "the alternating sequence is not the adjacency spectrum of (K_n, J*); \
     the corrected block recursion is, and the Cheeger floor is recomputed from it";

fn ratio_value(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn labels(graph: &ExplicitGraph, set: &[usize]) -> Vec<String> {
    set.iter().map(|&v| graph.label(v)).collect()
}

/// Exact conductance for each level `1..=k` small enough to enumerate.
pub fn level_table(
    system: &SelfSimilarSystem,
    k: usize,
    max_enum: usize,
    max_vertices: u64,
) -> Result<Vec<LevelRow>, Failure> {
    let mut rows = Vec::new();
    let mut first = None;
    for level in 1..=k {
        if system.vertex_count(level).is_none_or(|v| v as usize > max_enum) || system.n() < 2 {
            break;
        }
        let graph = materialize(system, level, max_vertices)?;
        let phi = conductance_exact_limited(&graph, max_enum)?.conductance;
        let first = *first.get_or_insert(phi);
        rows.push(LevelRow {
            k: level,
            vertices: graph.vertex_count(),
            conductance: phi.to_string(),
            conductance_value: ratio_value(phi),
            at_least_level_one: phi >= first,
        });
    }
    Ok(rows)
}

struct Clock(BTreeMap<&'static str, f64>);

impl Clock {
    fn time<T>(&mut self, key: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.insert(key, start.elapsed().as_secs_f64() * 1e3);
        out
    }
}

pub fn run(a: ReportArgs) -> Outcome {
    let system = load_system(&a.system)?;
    let k = a.system.depth();
    let n = system.n();
    let complete = system.base().edge_count() == n * (n - 1) / 2;
    let mut clock = Clock(BTreeMap::new());
    let mut skipped = BTreeMap::new();

    let graph = match clock.time("materialize", || materialize(&system, k, a.system.max_vertices)) {
        Ok(g) => Some(g),
        Err(e) => {
            skipped.insert("materialize", e.to_string());
            None
        }
    };
    let degrees = graph.as_ref().map(|g| (0..g.vertex_count()).map(|v| g.degree(v)));
    let counts = Counts {
        vertices: system.vertex_count(k),
        edges_formula: system.edge_count(k)?,
        edges_materialized: graph.as_ref().map(ExplicitGraph::edge_count),
        min_degree: degrees.clone().and_then(Iterator::min),
        max_degree: degrees.and_then(Iterator::max),
    };
    if let Some(g) = &graph {
        if counts.edges_materialized.map(|e| e as u128) != Some(counts.edges_formula) {
            return Err(Failure::Invariant("edge formula disagrees with materialized graph".into()));
        }
        let last = system.decode(g.vertex_count() as u64 - 1, k)?;
        if system.degree(&last)? != g.degree(g.vertex_count() - 1) as u128 {
            return Err(Failure::Invariant("degree formula disagrees with materialized graph".into()));
        }
    }

    let classification = if complete { Some(classify_bundle(n, system.bundle())?) } else { None };

    let coloring = match &graph {
        None => None,
        Some(g) => Some(clock.time("coloring", || -> Result<_, Failure> {
            let exact_chi = if g.vertex_count() <= a.max_exact {
                Some(compute_coloring(&system, g, k, ColorMethod::Exact, a.max_exact, a.system.max_vertices)?)
            } else {
                None
            };
            let method = structured_method(&system)
                .or(exact_chi.as_ref().map(|_| ColorMethod::Exact))
                .unwrap_or(ColorMethod::Greedy);
            let (c, _) = match (&exact_chi, method) {
                (Some(found), ColorMethod::Exact) => found.clone(),
                _ => compute_coloring(&system, g, k, method, a.max_exact, a.system.max_vertices)?,
            };
            if !verify_coloring(g, &c)? {
                return Err(Failure::Invariant(format!("{} coloring is improper", method_name(method))));
            }
            Ok(ColoringSection {
                method: method_name(method),
                colors_used: c.colors_used(),
                exact_chi: exact_chi.and_then(|(_, chi)| chi),
                verified: true,
                colors: c.colors().to_vec(),
            })
        })?),
    };

    let closed = closed_spectrum(&system, k).transpose()?;
    let numeric = match &graph {
        Some(g) if g.vertex_count() <= MAX_EIGEN_ORDER => Some(clock.time("spectrum", || numeric_spectrum(g))?),
        Some(_) => {
            skipped.insert("numeric_spectrum", format!("more than {MAX_EIGEN_ORDER} vertices"));
            None
        }
        None => None,
    };
    let regular_degree = graph.as_ref().and_then(ExplicitGraph::regular_degree);
    let reference = numeric.as_ref().or(closed.as_ref().map(|(_, s)| s));
    let bounds = match (reference, regular_degree) {
        (Some(s), Some(d)) => Some(cheeger_bounds(s, d)?),
        _ => None,
    };
    let spectrum = (closed.is_some() || numeric.is_some()).then(|| SpectrumSection {
        closed_source: closed.as_ref().map(|(src, _)| *src),
        closed_matches_numeric: match (&closed, &numeric) {
            (Some((_, c)), Some(m)) => Some(c.matches(m, a.tol)),
            _ => None,
        },
        gap: reference.and_then(SpectrumMultiset::gap),
        cheeger_lower: bounds.map(|b| b.0),
        cheeger_upper: bounds.map(|b| b.1),
        closed: closed.as_ref().map(|(_, s)| s.clone()),
        numeric: numeric.clone(),
    });
    if spectrum.as_ref().and_then(|s| s.closed_matches_numeric) == Some(false) {
        return Err(Failure::Invariant("closed and numeric spectra differ".into()));
    }

    let cut = match &graph {
        Some(g) if g.vertex_count() >= 2 && g.vertex_count() <= a.max_enum => {
            Some(clock.time("cut", || -> Result<_, Failure> {
                let report = conductance_exact_limited(g, a.max_enum)?;
                if !report.recheck(g) {
                    return Err(Failure::Invariant("conductance witness does not recheck".into()));
                }
                let vx = match regular_degree {
                    Some(_) => Some(vertex_expansion_exact_limited(g, a.max_enum)?),
                    None => None,
                };
                Ok(CutSection {
                    conductance: report.conductance.to_string(),
                    conductance_value: ratio_value(report.conductance),
                    witness: labels(g, &report.witness),
                    witness_verified: true,
                    vertex_expansion: vx.as_ref().map(|(r, _)| r.to_string()),
                    vertex_expansion_value: vx.as_ref().map(|(r, _)| ratio_value(*r)),
                    vertex_expansion_witness: vx.as_ref().map(|(_, w)| labels(g, w)),
                })
            })?)
        }
        Some(g) => {
            skipped.insert("cut", format!("{} vertices outside 2..={}", g.vertex_count(), a.max_enum));
            None
        }
        None => None,
    };
    let levels = clock.time("levels", || level_table(&system, k, a.max_enum, a.system.max_vertices))?;

    let jstar = (complete && n >= 2 && Bundle::jstar(n).is_ok_and(|b| &b == system.bundle())).then(|| {
        let corrected = closed.as_ref().map(|(_, s)| s);
        let degree = system.degree(&Vertex::new(vec![1; k])).ok().map(|d| d as usize);
        JStarSection {
            alternating_sequence: jstar_alternating_sequence(n, k),
            alternating_conductance_floor: jstar_alternating_conductance(n, k),
            corrected_gap: corrected.and_then(SpectrumMultiset::gap),
            corrected_cheeger_lower: corrected.zip(degree).and_then(|(s, d)| cheeger_bounds(s, d).ok()).map(|b| b.0),
            note: JSTAR_NOTE,
        }
    });

    let view = system.bundle().view();
    let report = Report {
        tool: Tool { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") },
        config: Config {
            base: a.system.base.clone(),
            bundle: a.system.bundle.clone(),
            k,
            max_vertices: a.system.max_vertices,
            max_exact: a.max_exact,
            max_enum: a.max_enum,
            tol: a.tol,
        },
        system: SystemInfo {
            n,
            base_edges: system.base().edges(),
            bundle_pairs: system.bundle().pairs(),
            bundle_loops: view.loops.into_iter().collect(),
            bundle_simple_edges: view.simple_edges.into_iter().collect(),
        },
        counts,
        classification,
        coloring,
        spectrum,
        cut,
        levels,
        jstar,
        skipped,
        timings_ms: clock.0,
    };
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.to_string()))?;
    text.push('\n');
    emit(a.out.as_deref(), &text)
}
