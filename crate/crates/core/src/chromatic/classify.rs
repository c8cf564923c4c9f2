use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bundle, SelfSimilarSystem, Vertex};

/// Base edge `{i, j}` together with bundle edges `(i,i')`, `(i,j')`, `(j,i')`.
/// Its presence forces `omega(G^k) >= k + 1` for every `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub i: usize,
    pub j: usize,
}

impl TripleWitness {
    /// The three bundle edges `(i,i'), (i,j'), (j,i')` as 1-based pairs.
    pub fn bundle_edges(&self) -> [(usize, usize); 3] {
        [(self.i, self.i), (self.i, self.j), (self.j, self.i)]
    }

    pub fn base_edge(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

/// Which construction supplies the finite bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundReason {
    /// No loops: the bundle sits inside the one mirroring `K_n`.
    NoLoops,
    /// Only loops: the bundle sits inside the loop matching.
    LoopsOnly,
    /// Loops and simple edges on disjoint vertex sets: inside some `J_r`.
    LoopsAndClique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Finite,
    Infinite,
}

/// Whether `chi(K_n^k)` stays bounded as `k` grows for a given bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Classification {
    Finite {
        bound: usize,
        reason: BoundReason,
        /// Informational refinement when a tighter value is known.
        note: Option<String>,
    },
    Infinite { witness: TripleWitness },
}

impl Classification {
    pub fn verdict(&self) -> Verdict {
        match self {
            Classification::Finite { .. } => Verdict::Finite,
            Classification::Infinite { .. } => Verdict::Infinite,
        }
    }

    pub fn bound(&self) -> Option<usize> {
        match self {
            Classification::Finite { bound, .. } => Some(*bound),
            Classification::Infinite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<TripleWitness> {
        match self {
            Classification::Infinite { witness } => Some(*witness),
            Classification::Finite { .. } => None,
        }
    }
}

/// Classifies a bundle over the complete base graph `K_n`.
///
/// Infinite iff some `i != j` has `(i,i')` and `(i,j')` (hence `(j,i')`); the
/// first such pair in lexicographic order is the witness. Otherwise the bound
/// is `n` for loop-free or loop-only bundles and `2n` in the mixed case.
pub fn classify_bundle(n: usize, bundle: &Bundle) -> Result<Classification> {
    if bundle.n() != n {
        return Err(Error::SideMismatch { base: n, bundle: bundle.n() });
    }
    for a in 0..n {
        if !bundle.at(a, a) {
            continue;
        }
        if let Some(b) = (0..n).find(|&b| b != a && bundle.at(a, b)) {
            return Ok(Classification::Infinite { witness: TripleWitness { i: a + 1, j: b + 1 } });
        }
    }
    let view = bundle.view();
    let (bound, reason) = match (view.loops.is_empty(), view.simple_edges.is_empty()) {
        (true, _) => (n, BoundReason::NoLoops),
        (false, true) => (n, BoundReason::LoopsOnly),
        (false, false) => (2 * n, BoundReason::LoopsAndClique),
    };
    let note = (n == 3 && view.loops.len() == 1 && view.simple_edges.len() == 1)
        .then(|| "one loop plus a disjoint edge on K_3: chi(G^k) = 4 for all k >= 2".to_string());
    Ok(Classification::Finite { bound, reason, note })
}

/// `k + 1` pairwise adjacent vertices of `G^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub k: usize,
    pub vertices: Vec<Vertex>,
}

impl CliqueWitness {
    /// Checks every pair with the adjacency oracle.
    pub fn verify(&self, system: &SelfSimilarSystem) -> Result<bool> {
        for (x, u) in self.vertices.iter().enumerate() {
            for w in &self.vertices[x + 1..] {
                if !system.adjacent(u, w)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The all-`i` vertex together with the `k` vertices that are all-`i`
/// except for a single `j`. Requires `v_i ~ v_j` in `G` and `(i,i')`,
/// `(i,j')`, `(j,i')` in `J`.
pub fn clique_witness(system: &SelfSimilarSystem, k: usize, i: usize, j: usize) -> Result<CliqueWitness> {
    if k == 0 {
        return Err(Error::ZeroDepth);
    }
    let hypothesis = i != j
        && system.base().contains_edge(i, j)?
        && system.bundle().contains(i, i)?
        && system.bundle().contains(i, j)?
        && system.bundle().contains(j, i)?;
    if !hypothesis {
        return Err(Error::Precondition(format!(
            "need v{i} ~ v{j} in G and ({i},{i}'), ({i},{j}'), ({j},{i}') in J"
        )));
    }
    let mut vertices = vec![Vertex::new(vec![i; k])];
    for t in 0..k {
        let mut coords = vec![i; k];
        coords[t] = j;
        vertices.push(Vertex::new(coords));
    }
    Ok(CliqueWitness { k, vertices })
}

/// Expected behavior of `chi(G^k)` for a `K_2` bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum K2Outcome {
    /// `chi(G^k) = 2` for every `k`.
    Bipartite,
    /// Unbounded, certified by `omega(G^k) >= k + 1`.
    Unbounded,
    /// `G^k = K_{2^k}`, so `chi(G^k) = 2^k`.
    Complete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub bundle: Bundle,
    pub outcome: K2Outcome,
}

/// The eight labeled symmetric bundles on `K_2` with their outcomes.
pub fn k2_catalog() -> Vec<CatalogEntry> {
    const NAMES: [&str; 8] = ["J1", "J2", "J3", "J4", "J5", "J6", "J7", "J8"];
    NAMES
        .iter()
        .enumerate()
        .map(|(idx, &name)| CatalogEntry {
            name,
            bundle: Bundle::k2_catalog_entry(idx + 1).expect("index in 1..=8"),
            outcome: match idx + 1 {
                1..=5 => K2Outcome::Bipartite,
                6 | 7 => K2Outcome::Unbounded,
                _ => K2Outcome::Complete,
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BaseGraph;

    #[test]
    fn j6_is_infinite() {
        let c = classify_bundle(2, &Bundle::k2_catalog_entry(6).unwrap()).unwrap();
        assert_eq!(c.verdict(), Verdict::Infinite);
        assert_eq!(c.witness().unwrap().bundle_edges(), [(1, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn finite_bounds() {
        let c = classify_bundle(3, &Bundle::matching(3).unwrap()).unwrap();
        assert_eq!(c.bound(), Some(3));
        let c = classify_bundle(3, &Bundle::jr(3, 1).unwrap()).unwrap();
        assert_eq!(c.bound(), Some(6));
        assert!(matches!(c, Classification::Finite { note: Some(_), .. }));
        let c = classify_bundle(3, &Bundle::jstar(3).unwrap()).unwrap();
        assert_eq!(c.bound(), Some(3));
        let c = classify_bundle(3, &Bundle::empty(3).unwrap()).unwrap();
        assert_eq!(c.bound(), Some(3));
        assert!(classify_bundle(2, &Bundle::empty(3).unwrap()).is_err());
    }

    #[test]
    fn witness_checks() {
        let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::k2_catalog_entry(6).unwrap())
            .unwrap();
        let w = clique_witness(&s, 2, 1, 2).unwrap();
        assert_eq!(w.vertices.len(), 3);
        assert!(w.verify(&s).unwrap());
        let w1 = clique_witness(&s, 1, 1, 2).unwrap();
        assert_eq!(w1.vertices, vec![Vertex::new(vec![1]), Vertex::new(vec![2])]);
        // J6 has the loop at 1 only.
        assert!(clique_witness(&s, 2, 2, 1).is_err());
        assert!(clique_witness(&s, 2, 1, 1).is_err());
    }

    #[test]
    fn full_k3_clique() {
        let s = SelfSimilarSystem::new(BaseGraph::complete(3).unwrap(), Bundle::full(3).unwrap()).unwrap();
        let w = clique_witness(&s, 4, 1, 2).unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.verify(&s).unwrap());
    }

    #[test]
    fn catalog_shape() {
        let cat = k2_catalog();
        assert_eq!(cat.len(), 8);
        assert_eq!(cat[0].bundle.edge_count(), 0);
        assert_eq!(cat[3].outcome, K2Outcome::Bipartite);
        assert_eq!(cat[7].outcome, K2Outcome::Complete);
        for e in &cat {
            let c = classify_bundle(2, &e.bundle).unwrap();
            assert_eq!(c.verdict() == Verdict::Infinite, e.outcome != K2Outcome::Bipartite);
        }
    }
}
