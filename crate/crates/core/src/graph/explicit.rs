use super::system::{decode_digits, SelfSimilarSystem, Vertex};
use crate::error::{Error, Result};

/// Default cap on `n^k` for [`materialize`].
pub const DEFAULT_MAX_VERTICES: u64 = 100_000;

/// Hard cap on materialized edges, independent of the vertex limit.
pub const MAX_EDGES: u128 = 20_000_000;

/// A materialized graph with integer vertices `0..vertex_count`.
///
/// Adjacency is held in CSR form with sorted neighbor lists; `edges` lists
/// each edge once as `(a, b)` with `a < b`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    vertex_count: usize,
    /// `(n, k)` when the graph is some `G^k`, used to label vertices.
    shape: Option<(usize, usize)>,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl ExplicitGraph {
    /// Builds a graph from arbitrary 0-based edges. Duplicates collapse.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::IndexOutOfRange { index: x, n: vertex_count });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_canonical(vertex_count, None, canon))
    }

    fn from_canonical(
        vertex_count: usize,
        shape: Option<(usize, usize)>,
        mut edges: Vec<(usize, usize)>,
    ) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut deg = vec![0usize; vertex_count + 1];
        for &(a, b) in &edges {
            deg[a + 1] += 1;
            deg[b + 1] += 1;
        }
        for v in 0..vertex_count {
            deg[v + 1] += deg[v];
        }
        let offsets = deg;
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        for &(a, b) in &edges {
            targets[fill[a]] = b;
            fill[a] += 1;
            targets[fill[b]] = a;
            fill[b] += 1;
        }
        for v in 0..vertex_count {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Self { vertex_count, shape, edges, offsets, targets }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(n, k)` if this graph was materialized from a system.
    pub fn shape(&self) -> Option<(usize, usize)> {
        self.shape
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count && b < self.vertex_count && self.neighbors(a).binary_search(&b).is_ok()
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.vertex_count).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Neighbor sets as `u64` bitmask rows; `None` above 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        (self.vertex_count <= 64).then(|| {
            (0..self.vertex_count)
                .map(|v| self.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
                .collect()
        })
    }

    /// Dot-joined 1-based coordinates for system graphs, the index otherwise.
    pub fn label(&self, v: usize) -> String {
        match self.shape {
            Some((n, k)) => {
                Vertex::new(decode_digits(v as u64, n, k).into_iter().map(|d| d + 1).collect())
                    .to_string()
            }
            None => v.to_string(),
        }
    }
}

/// Builds `G^k` level by level: each vertex of `G^{t-1}` becomes a block of
/// `n` consecutive indices holding a copy of `G`, and each edge of `G^{t-1}`
/// is replaced by a copy of `J` between the two blocks.
pub fn materialize(system: &SelfSimilarSystem, k: usize, limit: u64) -> Result<ExplicitGraph> {
    if k == 0 {
        return Err(Error::ZeroDepth);
    }
    let size = system.vertex_count(k);
    match size {
        Some(s) if s <= limit => {}
        _ => {
            return Err(Error::SizeLimit {
                what: "vertex count n^k",
                size: (system.n() as u128).saturating_pow(k as u32),
                limit: limit as u128,
            })
        }
    }
    let expected = system.edge_count(k)?;
    if expected > MAX_EDGES {
        return Err(Error::SizeLimit { what: "edge count", size: expected, limit: MAX_EDGES });
    }

    let n = system.n();
    let base_edges: Vec<_> = system.base().edges0().collect();
    let bundle_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| system.bundle().partners0(a).map(move |b| (a, b)))
        .collect();

    let mut edges = base_edges.clone();
    let mut blocks = n;
    for _ in 1..k {
        let mut next = Vec::with_capacity(blocks * base_edges.len() + edges.len() * bundle_pairs.len());
        for p in 0..blocks {
            next.extend(base_edges.iter().map(|&(a, b)| (p * n + a, p * n + b)));
        }
        for &(p, q) in &edges {
            for &(a, b) in &bundle_pairs {
                let (x, y) = (p * n + a, q * n + b);
                next.push((x.min(y), x.max(y)));
            }
        }
        edges = next;
        blocks *= n;
    }
    Ok(ExplicitGraph::from_canonical(blocks, Some((n, k)), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BaseGraph, Bundle};

    #[test]
    fn q3_from_loop_matching() {
        let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap())
            .unwrap();
        let g = materialize(&s, 3, DEFAULT_MAX_VERTICES).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        for (a, b) in g.edges() {
            assert_eq!((a ^ b).count_ones(), 1);
        }
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.label(5), "2.1.2");
    }

    #[test]
    fn depth_one_is_base() {
        let base = BaseGraph::cycle(5).unwrap();
        let s = SelfSimilarSystem::new(base.clone(), Bundle::full(5).unwrap()).unwrap();
        let g = materialize(&s, 1, 10).unwrap();
        let expect: Vec<_> = base.edges().iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        assert_eq!(g.edges(), expect.as_slice());
    }

    #[test]
    fn k4_from_full_bundle() {
        let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::full(2).unwrap())
            .unwrap();
        let g = materialize(&s, 2, 100).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
    }

    #[test]
    fn limit_refused() {
        let s = SelfSimilarSystem::new(BaseGraph::complete(3).unwrap(), Bundle::matching(3).unwrap())
            .unwrap();
        assert!(matches!(materialize(&s, 3, 26), Err(Error::SizeLimit { .. })));
        assert!(materialize(&s, 3, 27).is_ok());
        assert!(matches!(materialize(&s, 200, u64::MAX), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn from_edges_validates() {
        assert!(ExplicitGraph::from_edges(2, &[(0, 2)]).is_err());
        assert!(ExplicitGraph::from_edges(2, &[(1, 1)]).is_err());
        let g = ExplicitGraph::from_edges(3, &[(2, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.neighbor_masks().unwrap(), vec![0b100, 0b100, 0b011]);
        assert_eq!(g.regular_degree(), None);
    }
}
