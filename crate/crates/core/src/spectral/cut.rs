use num_rational::Ratio;

use super::spectrum::SpectrumMultiset;
use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;

/// Default cap on vertices for subset enumeration.
pub const DEFAULT_MAX_ENUM: usize = 24;

/// Enumeration uses 64-bit masks; beyond this it is hopeless anyway.
const HARD_MAX_ENUM: usize = 40;

/// Exact edge conductance with its minimizing set, optionally augmented with
/// Cheeger bounds and vertex expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct CutReport {
    /// `min delta(S) / |S|` over `1 <= |S| <= |V| / 2`.
    pub conductance: Ratio<u64>,
    /// Lexicographically least minimizing set, sorted.
    pub witness: Vec<usize>,
    pub cheeger_lower: Option<f64>,
    pub cheeger_upper: Option<f64>,
    pub vertex_expansion: Option<Ratio<u64>>,
    pub vertex_expansion_witness: Option<Vec<usize>>,
}

impl CutReport {
    /// Recomputes `delta(witness) / |witness|` from the graph.
    pub fn recheck(&self, graph: &ExplicitGraph) -> bool {
        let inside: Vec<bool> = (0..graph.vertex_count()).map(|v| self.witness.contains(&v)).collect();
        let boundary = graph.edges().iter().filter(|&&(a, b)| inside[a] != inside[b]).count();
        !self.witness.is_empty()
            && 2 * self.witness.len() <= graph.vertex_count()
            && Ratio::new(boundary as u64, self.witness.len() as u64) == self.conductance
    }
}

fn enumeration_masks(graph: &ExplicitGraph, limit: usize) -> Result<Vec<u64>> {
    let limit = limit.min(HARD_MAX_ENUM);
    let n = graph.vertex_count();
    if n > limit {
        return Err(Error::SizeLimit {
            what: "subset enumeration vertex count",
            size: n as u128,
            limit: limit as u128,
        });
    }
    if n < 2 {
        return Err(Error::Precondition("cut enumeration needs at least 2 vertices".into()));
    }
    Ok((0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

/// `a < b` comparing the sets as ascending vertex lists.
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let x = (a ^ b).trailing_zeros();
    if a >> x & 1 == 1 {
        b >> x != 0
    } else {
        a >> x == 0
    }
}

fn members(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Walks every nonempty subset of `0..n` in Gray-code order. After each flip
/// `f(v, added, set, candidate)` runs, where `candidate` marks the sets that
/// count for expansion minima: `1 <= |S| <= n/2`, and a set of size exactly
/// `n/2` only when it contains vertex 0 (its complement is equivalent).
fn gray_walk(n: usize, mut f: impl FnMut(usize, bool, u64, bool)) {
    let mut set = 0u64;
    let mut size = 0usize;
    for i in 1u64..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        set ^= 1 << v;
        let added = set >> v & 1 == 1;
        if added {
            size += 1;
        } else {
            size -= 1;
        }
        let candidate = size >= 1 && 2 * size <= n && (2 * size < n || set & 1 == 1);
        f(v, added, set, candidate);
    }
}

struct Best {
    num: u64,
    den: u64,
    set: u64,
}

impl Best {
    fn offer(&mut self, num: u64, den: u64, set: u64) {
        let lhs = num as u128 * self.den as u128;
        let rhs = self.num as u128 * den as u128;
        if self.den == 0 || lhs < rhs || (lhs == rhs && lex_less(set, self.set)) {
            *self = Best { num, den, set };
        }
    }
}

/// Exact conductance by Gray-code enumeration with incremental boundary
/// counts. Default limit [`DEFAULT_MAX_ENUM`] vertices.
pub fn conductance_exact(graph: &ExplicitGraph) -> Result<CutReport> {
    conductance_exact_limited(graph, DEFAULT_MAX_ENUM)
}

pub fn conductance_exact_limited(graph: &ExplicitGraph, max_vertices: usize) -> Result<CutReport> {
    let adj = enumeration_masks(graph, max_vertices)?;
    let n = adj.len();
    let mut boundary: i64 = 0;
    let mut best = Best { num: 0, den: 0, set: 0 };
    gray_walk(n, |v, added, set, candidate| {
        let deg = adj[v].count_ones() as i64;
        let inside = (adj[v] & set).count_ones() as i64;
        boundary += if added { deg - 2 * inside } else { 2 * inside - deg };
        if candidate {
            best.offer(boundary as u64, set.count_ones() as u64, set);
        }
    });
    Ok(CutReport {
        conductance: Ratio::new(best.num, best.den),
        witness: members(best.set),
        cheeger_lower: None,
        cheeger_upper: None,
        vertex_expansion: None,
        vertex_expansion_witness: None,
    })
}

/// Exact vertex expansion `min |N(S) \ S| / |S|` over the same candidate
/// sets as [`conductance_exact`]. Requires a regular graph.
pub fn vertex_expansion_exact(graph: &ExplicitGraph) -> Result<(Ratio<u64>, Vec<usize>)> {
    vertex_expansion_exact_limited(graph, DEFAULT_MAX_ENUM)
}

pub fn vertex_expansion_exact_limited(
    graph: &ExplicitGraph,
    max_vertices: usize,
) -> Result<(Ratio<u64>, Vec<usize>)> {
    let adj = enumeration_masks(graph, max_vertices)?;
    if graph.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    let n = adj.len();
    // hits[w] = |N(w) ∩ S|; outer = #{w ∉ S : hits[w] > 0}.
    let mut hits = vec![0u32; n];
    let mut outer: i64 = 0;
    let mut best = Best { num: 0, den: 0, set: 0 };
    gray_walk(n, |v, added, set, candidate| {
        if added {
            if hits[v] > 0 {
                outer -= 1;
            }
            for w in bits(adj[v]) {
                hits[w] += 1;
                if hits[w] == 1 && set >> w & 1 == 0 {
                    outer += 1;
                }
            }
        } else {
            for w in bits(adj[v]) {
                hits[w] -= 1;
                if hits[w] == 0 && set >> w & 1 == 0 {
                    outer -= 1;
                }
            }
            if hits[v] > 0 {
                outer += 1;
            }
        }
        if candidate {
            best.offer(outer as u64, set.count_ones() as u64, set);
        }
    });
    Ok((Ratio::new(best.num, best.den), members(best.set)))
}

/// `((lambda_1 - lambda_2) / 2, 2 sqrt(d (lambda_1 - lambda_2)))` for a
/// `d`-regular graph with adjacency spectrum `spectrum`.
pub fn cheeger_bounds(spectrum: &SpectrumMultiset, degree: usize) -> Result<(f64, f64)> {
    let gap = spectrum.gap().ok_or(Error::EmptySpectrum)?.max(0.0);
    Ok((gap / 2.0, 2.0 * (degree as f64 * gap).sqrt()))
}
