//! Colorings of `G^k` built from the recursive structure rather than search.

use super::coloring::Coloring;
use super::exact::{chromatic_number_exact, find_coloring, lex_least_coloring, DEFAULT_MAX_EXACT};
use crate::error::{Error, Result};
use crate::graph::{materialize, BaseGraph, Bundle, ExplicitGraph, SelfSimilarSystem};

fn check_size(system: &SelfSimilarSystem, k: usize, limit: u64) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroDepth);
    }
    match system.vertex_count(k) {
        Some(size) if size <= limit => Ok(size as usize),
        _ => Err(Error::SizeLimit {
            what: "vertex count n^k",
            size: (system.n() as u128).saturating_pow(k as u32),
            limit: limit as u128,
        }),
    }
}

/// An optimal coloring of the base graph: `chi(G)` from the exact solver,
/// then the lexicographically least coloring with that many colors.
pub fn base_coloring(base: &BaseGraph) -> Result<Coloring> {
    let edges: Vec<_> = base.edges().iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let g = ExplicitGraph::from_edges(base.n(), &edges)?;
    let (chi, _) = chromatic_number_exact(&g, DEFAULT_MAX_EXACT)?;
    Ok(lex_least_coloring(&g, chi).expect("an optimal coloring exists"))
}

/// Extends a per-level rule `color(prefix, last)` from depth 1 to depth `k`.
/// `level_one` colors `G^1`; indices follow the block encoding.
fn extend_levels(
    n: usize,
    k: usize,
    level_one: Vec<usize>,
    rule: impl Fn(usize, usize) -> usize,
) -> Vec<usize> {
    let mut colors = level_one;
    for _ in 1..k {
        colors = colors
            .iter()
            .flat_map(|&prefix| (0..n).map(move |q| (prefix, q)))
            .map(|(prefix, q)| rule(prefix, q))
            .collect();
    }
    colors
}

/// Loop-matching bundle: color `(v_1..v_k)` by the sum of the base colors of
/// its coordinates modulo `p = chi(G)`.
pub fn coloring_matching_mod(system: &SelfSimilarSystem, k: usize, limit: u64) -> Result<Coloring> {
    if !system.bundle().is_loop_matching() {
        return Err(Error::Precondition("bundle is not the loop matching {(i,i')}".into()));
    }
    check_size(system, k, limit)?;
    let base = base_coloring(system.base())?;
    let p = base.palette();
    let colors = extend_levels(system.n(), k, base.colors().to_vec(), |prefix, q| {
        (prefix + base.color(q)) % p
    });
    Coloring::new(p, colors)
}

/// Bundle equal to the base adjacency: color every vertex by the base color
/// class of its last coordinate.
pub fn coloring_mirror_classes(system: &SelfSimilarSystem, k: usize, limit: u64) -> Result<Coloring> {
    if !system.bundle().mirrors(system.base()) {
        return Err(Error::Precondition("bundle does not mirror the base graph".into()));
    }
    let size = check_size(system, k, limit)?;
    let base = base_coloring(system.base())?;
    let n = system.n();
    Coloring::new(base.palette(), (0..size).map(|v| base.color(v % n)).collect())
}

/// The system `(K_n, J_r)`.
pub fn jr_system(n: usize, r: usize) -> Result<SelfSimilarSystem> {
    SelfSimilarSystem::new(BaseGraph::complete(n)?, Bundle::jr(n, r)?)
}

/// Color of a vertex with last coordinate `row` whose prefix has color
/// `column`, all 0-based, in the `n x 2n` table for `J_r`.
///
/// Loop rows `row < r` are the `2n` colors rotated by `2 row`. Each remaining
/// row `r + s` uses the pair `{2s, 2s + 1}`, taking the color of parity
/// opposite to the column's.
pub fn jr_table(n: usize, r: usize, row: usize, column: usize) -> usize {
    if row < r {
        (column + 2 * row) % (2 * n)
    } else {
        let s = row - r;
        if column.is_multiple_of(2) {
            2 * s + 1
        } else {
            2 * s
        }
    }
}

/// At most `2n` colors for `(K_n, J_r)`. `G^1` takes column 0 of the table
/// and each further level reads the table at the prefix's color. For `r = 0`
/// the bundle mirrors `K_n` and the `n`-color class coloring is returned.
pub fn coloring_jr_scheme(n: usize, r: usize, k: usize, limit: u64) -> Result<Coloring> {
    if r > n {
        return Err(Error::Precondition(format!("r = {r} must lie in 0..={n}")));
    }
    let system = jr_system(n, r)?;
    if r == 0 {
        return coloring_mirror_classes(&system, k, limit);
    }
    check_size(&system, k, limit)?;
    let level_one = (0..n).map(|q| jr_table(n, r, q, 0)).collect();
    Coloring::new(2 * n, extend_levels(n, k, level_one, |prefix, q| jr_table(n, r, q, prefix)))
}

/// `(K_3, {(1,1'), (2,3'), (3,2')})`.
pub fn k3_special_system() -> Result<SelfSimilarSystem> {
    SelfSimilarSystem::new(BaseGraph::complete(3)?, Bundle::new(3, &[(1, 1), (2, 3), (3, 2)], false)?)
}

/// The explicit four classes of `G^2` for the special `K_3` system, indexed
/// by `3 (a - 1) + (b - 1)` for vertex `(a, b)`:
/// `{(1,1)}`, `{(2,2),(3,1)}`, `{(1,2),(2,1),(3,2)}`, `{(1,3),(2,3),(3,3)}`.
pub const K3_SPECIAL_LEVEL_TWO: [usize; 9] = [0, 2, 3, 2, 1, 3, 1, 2, 3];

/// A proper 4-coloring of `G^k` (`k >= 2`) for the special `K_3` system.
///
/// Depth 2 is the explicit partition above. Deeper levels come from a
/// 4-color search on the materialized graph in which each vertex first tries
/// the color of its prefix at the previous level.
pub fn coloring_k3_special(k: usize, limit: u64) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::Precondition(format!("depth must be at least 2, got {k}")));
    }
    let system = k3_special_system()?;
    check_size(&system, k, limit)?;
    let mut colors = K3_SPECIAL_LEVEL_TWO.to_vec();
    for depth in 3..=k {
        let graph = materialize(&system, depth, limit)?;
        let seed: Vec<usize> = colors.iter().flat_map(|&c| [c; 3]).collect();
        colors = find_coloring(&graph, 4, Some(&seed))
            .ok_or_else(|| Error::Precondition(format!("no 4-coloring found at depth {depth}")))?
            .colors()
            .to_vec();
    }
    Coloring::new(4, colors)
}
