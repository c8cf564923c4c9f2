use crate::error::{Error, Result};

/// A simple undirected graph on vertices `1..=n`.
///
/// Vertex indices are 1-based at the API surface. Storage is a dense
/// row-major boolean matrix since base graphs are small.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    n: usize,
    adj: Vec<bool>,
}

impl BaseGraph {
    /// Builds a base graph from 1-based edge pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![false; n * n];
        for &(i, j) in edges {
            check_index(i, n)?;
            check_index(j, n)?;
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            adj[(i - 1) * n + (j - 1)] = true;
            adj[(j - 1) * n + (i - 1)] = true;
        }
        Ok(Self { n, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Self::new(n, &edges)
    }

    /// The cycle `1-2-...-n-1`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Self::new(n, &edges)
    }

    /// The path `1-2-...-n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based adjacency query.
    pub fn contains_edge(&self, i: usize, j: usize) -> Result<bool> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        Ok(self.adjacent0(i - 1, j - 1))
    }

    /// 1-based degree.
    pub fn degree(&self, i: usize) -> Result<usize> {
        check_index(i, self.n)?;
        Ok(self.degree0(i - 1))
    }

    /// Edges as 1-based pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges0().map(|(a, b)| (a + 1, b + 1)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x).count() / 2
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree0(v) == self.degree0(0))
    }

    /// Spanning subgraph test: every edge of `self` is an edge of `other`.
    pub fn is_spanning_subgraph_of(&self, other: &BaseGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(&a, &b)| !a || b)
    }

    pub(crate) fn adjacent0(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    pub(crate) fn degree0(&self, a: usize) -> usize {
        self.adj[a * self.n..(a + 1) * self.n].iter().filter(|&&x| x).count()
    }

    pub(crate) fn edges0(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            (a + 1..self.n)
                .filter(move |&b| self.adjacent0(a, b))
                .map(move |b| (a, b))
        })
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_from_single_pair() {
        let g = BaseGraph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(g, BaseGraph::complete(2).unwrap());
    }

    #[test]
    fn edgeless_and_triangle() {
        let g = BaseGraph::new(3, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        let k3 = BaseGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(k3, BaseGraph::complete(3).unwrap());
        assert!(k3.is_regular());
    }

    #[test]
    fn duplicates_collapse() {
        let g = BaseGraph::new(3, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            BaseGraph::new(2, &[(1, 3)]),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(
            BaseGraph::new(2, &[(0, 1)]),
            Err(Error::IndexOutOfRange { index: 0, n: 2 })
        );
        assert_eq!(BaseGraph::new(2, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(BaseGraph::new(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn cycle_and_path_degrees() {
        let c5 = BaseGraph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.is_regular());
        let p3 = BaseGraph::path(3).unwrap();
        assert_eq!(p3.degree(2).unwrap(), 2);
        assert_eq!(p3.degree(1).unwrap(), 1);
        assert!(p3.is_spanning_subgraph_of(&BaseGraph::complete(3).unwrap()));
    }
}
