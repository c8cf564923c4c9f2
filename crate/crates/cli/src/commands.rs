use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use selfsim_core::chromatic::{
    chromatic_number_exact, classify_bundle, clique_witness, coloring_jr_scheme, coloring_k3_special,
    coloring_matching_mod, coloring_mirror_classes, greedy_coloring, k2_catalog, k3_special_system,
    verify_coloring, BoundReason, Classification, Coloring, K2Outcome,
};
use selfsim_core::io::{base_preset, bundle_preset, export, parse_base_graph, parse_bundle, Format};
use selfsim_core::spectral::{
    adjacency_matrix, cheeger_bounds, conductance_exact_limited, eigenvalues_numeric,
    spectrum_block_recursion, spectrum_matching_closed, vertex_expansion_exact_limited, BlockRule,
    SpectrumMultiset, DEFAULT_JACOBI_TOL,
};
use selfsim_core::{materialize, BaseGraph, Bundle, ExplicitGraph, SelfSimilarSystem};

use crate::args::{
    BuildArgs, CatalogArgs, CliqueArgs, ClassifyArgs, ColorArgs, ColorMethod, Command, CutArgs,
    SpectrumArgs, SpectrumMethod, SystemArgs,
};
use crate::failure::Failure;
use crate::report;

pub type Outcome = Result<(), Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Build(a) => build(a),
        Command::Color(a) => color(a),
        Command::Classify(a) => classify(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Cut(a) => cut(a),
        Command::Clique(a) => clique(a),
        Command::Catalog(a) => catalog(a),
        Command::Report(a) => report::run(a),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {path}: {e}")))
}

pub fn load_base(source: &str) -> Result<BaseGraph, Failure> {
    match base_preset(source) {
        Some(base) => Ok(base?),
        None => Ok(parse_base_graph(&read_input(source)?)?),
    }
}

pub fn load_bundle(source: &str, base: &BaseGraph) -> Result<Bundle, Failure> {
    match bundle_preset(source, base) {
        Some(bundle) => Ok(bundle?),
        None => Ok(parse_bundle(&read_input(source)?)?),
    }
}

pub fn load_system(args: &SystemArgs) -> Result<SelfSimilarSystem, Failure> {
    let base = load_base(&args.base)?;
    let bundle = load_bundle(&args.bundle, &base)?;
    Ok(SelfSimilarSystem::new(base, bundle)?)
}

pub fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(a: BuildArgs) -> Outcome {
    let format = Format::from_str(&a.format).map_err(|e| Failure::Usage(e.to_string()))?;
    let system = load_system(&a.system)?;
    let graph = materialize(&system, a.system.depth(), a.system.max_vertices)?;
    emit(a.out.as_deref(), &export(&graph, format))
}

fn is_complete(base: &BaseGraph) -> bool {
    base.edge_count() == base.n() * (base.n() - 1) / 2
}

/// `r` such that the system is `(K_n, J_r)`.
pub fn detect_jr(system: &SelfSimilarSystem) -> Option<usize> {
    let n = system.n();
    if !is_complete(system.base()) {
        return None;
    }
    (0..=n).find(|&r| Bundle::jr(n, r).is_ok_and(|b| &b == system.bundle()))
}

pub fn is_k3_special(system: &SelfSimilarSystem) -> bool {
    k3_special_system().is_ok_and(|s| s.base() == system.base() && s.bundle() == system.bundle())
}

/// The structured construction that applies to `system`, if any.
pub fn structured_method(system: &SelfSimilarSystem) -> Option<ColorMethod> {
    if system.bundle().is_loop_matching() {
        Some(ColorMethod::T31)
    } else if system.bundle().mirrors(system.base()) {
        Some(ColorMethod::T32)
    } else if detect_jr(system).is_some() {
        Some(ColorMethod::T35)
    } else if is_k3_special(system) {
        Some(ColorMethod::T41)
    } else {
        None
    }
}

pub fn method_name(m: ColorMethod) -> &'static str {
    match m {
        ColorMethod::Exact => "exact",
        ColorMethod::Greedy => "greedy",
        ColorMethod::T31 => "t31",
        ColorMethod::T32 => "t32",
        ColorMethod::T35 => "t35",
        ColorMethod::T41 => "t41",
    }
}

/// Runs `method`; the exact solver also reports chi.
pub fn compute_coloring(
    system: &SelfSimilarSystem,
    graph: &ExplicitGraph,
    k: usize,
    method: ColorMethod,
    max_exact: usize,
    limit: u64,
) -> Result<(Coloring, Option<usize>), Failure> {
    let unsupported = |what: &str| Failure::Usage(format!("method {} needs {what}", method_name(method)));
    let coloring = match method {
        ColorMethod::Exact => {
            let (chi, c) = chromatic_number_exact(graph, max_exact)?;
            return Ok((c, Some(chi)));
        }
        ColorMethod::Greedy => greedy_coloring(graph, &(0..graph.vertex_count()).collect::<Vec<_>>())?,
        ColorMethod::T31 => {
            if !system.bundle().is_loop_matching() {
                return Err(unsupported("the loop matching bundle"));
            }
            coloring_matching_mod(system, k, limit)?
        }
        ColorMethod::T32 => {
            if !system.bundle().mirrors(system.base()) {
                return Err(unsupported("a bundle that mirrors the base graph"));
            }
            coloring_mirror_classes(system, k, limit)?
        }
        ColorMethod::T35 => {
            let r = detect_jr(system).ok_or_else(|| unsupported("the system (K_n, jr:<r>)"))?;
            coloring_jr_scheme(system.n(), r, k, limit)?
        }
        ColorMethod::T41 => {
            if !is_k3_special(system) {
                return Err(unsupported("the K_3 bundle {(1,1'),(2,3'),(3,2')}"));
            }
            if k == 1 {
                chromatic_number_exact(graph, max_exact)?.1
            } else {
                coloring_k3_special(k, limit)?
            }
        }
    };
    Ok((coloring, None))
}

fn color(a: ColorArgs) -> Outcome {
    let system = load_system(&a.system)?;
    let k = a.system.depth();
    let graph = materialize(&system, k, a.system.max_vertices)?;
    if let Some(path) = &a.verify {
        let cert = Coloring::from_certificate(&read_input(&path.to_string_lossy())?)?;
        if !verify_coloring(&graph, &cert)? {
            return Err(Failure::Invariant(format!("{} is not a proper coloring of G^{k}", path.display())));
        }
        println!("valid: {} colors on {} vertices", cert.colors_used(), graph.vertex_count());
        return Ok(());
    }
    let (coloring, chi) = compute_coloring(&system, &graph, k, a.method, a.max_exact, a.system.max_vertices)?;
    if !verify_coloring(&graph, &coloring)? {
        return Err(Failure::Invariant(format!("{} coloring is improper", method_name(a.method))));
    }
    let mut summary = format!(
        "method {}: {} colors on {} vertices, verified",
        method_name(a.method),
        coloring.colors_used(),
        graph.vertex_count()
    );
    if let Some(chi) = chi {
        let _ = write!(summary, "; chi = {chi}");
    }
    match &a.out {
        Some(path) => {
            emit(Some(path), &coloring.to_certificate())?;
            println!("{summary}");
            Ok(())
        }
        None => emit(None, &format!("# {summary}\n{}", coloring.to_certificate())),
    }
}

pub fn reason_text(reason: BoundReason) -> &'static str {
    match reason {
        BoundReason::NoLoops => "no loops",
        BoundReason::LoopsOnly => "loops only",
        BoundReason::LoopsAndClique => "loops and simple edges on disjoint vertices",
    }
}

pub fn classification_line(c: &Classification) -> String {
    match c {
        Classification::Infinite { witness } => {
            let edges: Vec<String> =
                witness.bundle_edges().iter().map(|(i, j)| format!("({i},{j}\u{2032})")).collect();
            format!("Infinite; witness {}", edges.join(","))
        }
        Classification::Finite { bound, reason, note } => {
            let mut line = format!("Finite; chi(G^k) <= {bound} for all k ({})", reason_text(*reason));
            if let Some(note) = note {
                let _ = write!(line, "; {note}");
            }
            line
        }
    }
}

fn classify(a: ClassifyArgs) -> Outcome {
    let base = BaseGraph::complete(a.n)?;
    let bundle = load_bundle(&a.bundle, &base)?;
    println!("{}", classification_line(&classify_bundle(a.n, &bundle)?));
    Ok(())
}

/// Closed form or block recursion for `(K_n, matching)` and `(K_n, J*)`.
pub fn closed_spectrum(system: &SelfSimilarSystem, k: usize) -> Option<Result<(&'static str, SpectrumMultiset), Failure>> {
    let n = system.n();
    if n < 2 || !is_complete(system.base()) {
        return None;
    }
    if system.bundle().is_loop_matching() {
        Some(spectrum_matching_closed(n, k).map(|s| ("matching closed form", s)).map_err(Into::into))
    } else if Bundle::jstar(n).is_ok_and(|b| &b == system.bundle()) {
        Some(
            spectrum_matching_closed(n, 1)
                .and_then(|base| spectrum_block_recursion(&base, n, k, BlockRule::JStarCorrected))
                .map(|s| ("jstar corrected block recursion", s))
                .map_err(Into::into),
        )
    } else {
        None
    }
}

pub fn numeric_spectrum(graph: &ExplicitGraph) -> Result<SpectrumMultiset, Failure> {
    Ok(eigenvalues_numeric(&adjacency_matrix(graph), DEFAULT_JACOBI_TOL)?)
}

fn spectrum(a: SpectrumArgs) -> Outcome {
    let system = load_system(&a.system)?;
    let k = a.system.depth();
    let mut out = String::new();
    let closed = match a.method {
        SpectrumMethod::Numeric => None,
        _ => match closed_spectrum(&system, k) {
            Some(r) => Some(r?),
            None if a.method == SpectrumMethod::Closed => {
                return Err(Failure::Usage("no closed form for this system; use --method numeric".into()))
            }
            None => None,
        },
    };
    if let Some((source, s)) = &closed {
        let _ = write!(out, "# {source}\n{}", s.to_text());
    }
    if a.method != SpectrumMethod::Closed {
        let graph = materialize(&system, k, a.system.max_vertices)?;
        let numeric = numeric_spectrum(&graph)?;
        let _ = write!(out, "# numeric\n{}", numeric.to_text());
        if let Some((_, s)) = &closed {
            let matched = s.matches(&numeric, a.tol);
            let _ = writeln!(out, "# match: {} (tol {:e})", if matched { "yes" } else { "no" }, a.tol);
            print!("{out}");
            if !matched {
                return Err(Failure::Invariant("closed and numeric spectra differ".into()));
            }
            return Ok(());
        }
    }
    print!("{out}");
    Ok(())
}

fn labels(graph: &ExplicitGraph, set: &[usize]) -> String {
    set.iter().map(|&v| graph.label(v)).collect::<Vec<_>>().join(" ")
}

fn cut(a: CutArgs) -> Outcome {
    let system = load_system(&a.system)?;
    let k = a.system.depth();
    let graph = materialize(&system, k, a.system.max_vertices)?;
    let report = conductance_exact_limited(&graph, a.max_enum)?;
    if !report.recheck(&graph) {
        return Err(Failure::Invariant("conductance witness does not recheck".into()));
    }
    let phi = report.conductance;
    println!("conductance {phi} ({:.6})", *phi.numer() as f64 / *phi.denom() as f64);
    println!("witness {}", labels(&graph, &report.witness));
    if let Some(d) = graph.regular_degree() {
        let (lo, hi) = cheeger_bounds(&numeric_spectrum(&graph)?, d)?;
        println!("cheeger {lo:.6} <= conductance <= {hi:.6}");
        if a.vertex_expansion {
            let (vx, w) = vertex_expansion_exact_limited(&graph, a.max_enum)?;
            println!("vertex expansion {vx} ({:.6})", *vx.numer() as f64 / *vx.denom() as f64);
            println!("vertex expansion witness {}", labels(&graph, &w));
        }
    } else if a.vertex_expansion {
        return Err(Failure::Usage("vertex expansion needs a regular graph".into()));
    }
    if a.levels {
        println!("level vertices conductance at_least_level_1");
        for row in report::level_table(&system, k, a.max_enum, a.system.max_vertices)? {
            println!("{} {} {} {}", row.k, row.vertices, row.conductance, row.at_least_level_one);
        }
    }
    Ok(())
}

fn clique(a: CliqueArgs) -> Outcome {
    let system = load_system(&a.system)?;
    let k = a.system.depth();
    let (i, j) = match (a.i, a.j) {
        (Some(i), Some(j)) => (i, j),
        _ => {
            let witness = is_complete(system.base())
                .then(|| classify_bundle(system.n(), system.bundle()))
                .transpose()?
                .and_then(|c| c.witness())
                .ok_or_else(|| Failure::Usage("no witness pair found; pass --i and --j".into()))?;
            (witness.i, witness.j)
        }
    };
    let witness = clique_witness(&system, k, i, j)?;
    if !witness.verify(&system)? {
        return Err(Failure::Invariant("clique witness has a non-adjacent pair".into()));
    }
    for v in &witness.vertices {
        println!("{v}");
    }
    println!("# {}-clique in G^{k}, all pairs adjacent", witness.vertices.len());
    Ok(())
}

fn catalog(a: CatalogArgs) -> Outcome {
    let base = BaseGraph::complete(2)?;
    let depth = a.k as usize;
    println!("bundle edges verdict outcome chi(k=1..{depth})");
    for entry in k2_catalog() {
        let system = SelfSimilarSystem::new(base.clone(), entry.bundle.clone())?;
        let class = classify_bundle(2, &entry.bundle)?;
        let mut chis = Vec::new();
        for k in 1..=depth {
            let chi = chromatic_number_exact(&materialize(&system, k, 64)?, 64)?.0;
            let consistent = match entry.outcome {
                K2Outcome::Bipartite => chi == 2,
                K2Outcome::Unbounded => chi > k,
                K2Outcome::Complete => chi == 1 << k,
            };
            if !consistent {
                return Err(Failure::Invariant(format!("{}: chi(G^{k}) = {chi}", entry.name)));
            }
            chis.push(chi.to_string());
        }
        let edges: Vec<String> =
            entry.bundle.pairs().iter().map(|(i, j)| format!("({i},{j}\u{2032})")).collect();
        let edges = if edges.is_empty() { "-".to_string() } else { edges.join(",") };
        let outcome = match entry.outcome {
            K2Outcome::Bipartite => "chi=2",
            K2Outcome::Unbounded => "chi>=k+1",
            K2Outcome::Complete => "chi=2^k",
        };
        println!("{} {edges} {:?} {outcome} {}", entry.name, class.verdict(), chis.join(","));
    }
    Ok(())
}
