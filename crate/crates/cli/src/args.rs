use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use selfsim_core::chromatic::DEFAULT_MAX_EXACT;
use selfsim_core::spectral::DEFAULT_MAX_ENUM;
use selfsim_core::DEFAULT_MAX_VERTICES;

#[derive(Parser, Debug)]
#[command(name = "selfsim", version, about = "Build and analyze self-similar graph systems (G, J)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Materialize G^k and export it.
    Build(BuildArgs),
    /// Color G^k and write a certificate, or verify an existing one.
    Color(ColorArgs),
    /// Decide whether chi(G^k) stays bounded for a bundle over K_n.
    Classify(ClassifyArgs),
    /// Print the adjacency spectrum of G^k.
    Spectrum(SpectrumArgs),
    /// Exact conductance, Cheeger bounds and vertex expansion of G^k.
    Cut(CutArgs),
    /// Print and verify a (k+1)-clique of G^k.
    Clique(CliqueArgs),
    /// The eight bundles over K_2 with their outcomes.
    Catalog(CatalogArgs),
    /// Run every applicable analysis and write a JSON report.
    Report(ReportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Base graph: file path or preset (kn:<n>, cn:<n>, pn:<n>, empty:<n>).
    #[arg(long)]
    pub base: String,
    /// Bundle: file path or preset (matching, full, jstar, empty, mirror, jr:<r>, j1..j8).
    #[arg(long)]
    pub bundle: String,
    /// Depth.
    #[arg(short = 'k', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// Refuse to materialize more vertices than this.
    #[arg(long, env = "SELFSIM_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_vertices: u64,
}

impl SystemArgs {
    pub fn depth(&self) -> usize {
        self.k as usize
    }
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// dot, graph6, edgelist or json.
    #[arg(long, default_value = "edgelist")]
    pub format: String,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMethod {
    /// Branch and bound; exact chi.
    Exact,
    /// First fit in vertex order.
    Greedy,
    /// Prefix-sum coloring for the loop matching.
    T31,
    /// Class coloring for a bundle that mirrors G.
    T32,
    /// Table scheme for (K_n, J_r).
    T35,
    /// Four colors for the special K_3 bundle.
    T41,
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, value_enum, default_value_t = ColorMethod::Exact)]
    pub method: ColorMethod,
    /// Vertex cap for the exact solver.
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT, value_parser = positive)]
    pub max_exact: usize,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Check a certificate file against G^k instead of computing one.
    #[arg(long, conflicts_with_all = ["out"])]
    pub verify: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Size of the complete base graph.
    #[arg(long, value_parser = positive)]
    pub n: usize,
    /// Bundle: file path or preset.
    #[arg(long)]
    pub bundle: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumMethod {
    /// Closed form or block recursion, when one applies.
    Closed,
    /// Jacobi on the materialized adjacency matrix.
    Numeric,
    /// Both, with a match verdict.
    Both,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, value_enum, default_value_t = SpectrumMethod::Both)]
    pub method: SpectrumMethod,
    /// Tolerance when comparing closed and numeric values.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct CutArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Vertex cap for subset enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM, value_parser = positive)]
    pub max_enum: usize,
    /// Also compute exact vertex expansion (regular graphs only).
    #[arg(long)]
    pub vertex_expansion: bool,
    /// Print conductance for every level 1..=k that fits the enumeration cap.
    #[arg(long)]
    pub levels: bool,
}

#[derive(Args, Debug)]
pub struct CliqueArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Vertex i of the witness; defaults to the classifier's choice.
    #[arg(long, requires = "j")]
    pub i: Option<usize>,
    #[arg(long, requires = "i")]
    pub j: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Depth up to which exact chi is shown.
    #[arg(short = 'k', default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=5))]
    pub k: u64,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT, value_parser = positive)]
    pub max_exact: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM, value_parser = positive)]
    pub max_enum: usize,
    /// Tolerance when comparing closed and numeric spectra.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}
