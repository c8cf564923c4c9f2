use std::collections::BTreeSet;

use super::base::{check_index, BaseGraph};
use crate::error::{Error, Result};

/// A symmetric edge bundle: a subgraph of `K_{n,n}` with `i ~ j'` iff `j ~ i'`.
///
/// `contains(i, j)` means the edge `(i, j')` is present. Loops `(i, i')` are
/// ordinary bundle edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bundle {
    n: usize,
    rel: Vec<bool>,
}

impl Bundle {
    /// Builds a bundle from 1-based pairs `(i, j)` meaning `i ~ j'`.
    ///
    /// With `symmetrize` the symmetric closure is taken; otherwise any pair
    /// whose mirror is missing is rejected.
    pub fn new(n: usize, pairs: &[(usize, usize)], symmetrize: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut rel = vec![false; n * n];
        for &(i, j) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            rel[(i - 1) * n + (j - 1)] = true;
            if symmetrize {
                rel[(j - 1) * n + (i - 1)] = true;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                match (rel[a * n + b], rel[b * n + a]) {
                    (true, false) => return Err(Error::AsymmetricBundle { i: a + 1, j: b + 1 }),
                    (false, true) => return Err(Error::AsymmetricBundle { i: b + 1, j: a + 1 }),
                    _ => {}
                }
            }
        }
        Ok(Self { n, rel })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let rel = (0..n * n).map(|x| f(x / n, x % n)).collect();
        Ok(Self { n, rel })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| false)
    }

    /// Loop matching `{(i, i')}`.
    pub fn matching(n: usize) -> Result<Self> {
        Self::from_fn(n, |a, b| a == b)
    }

    /// All of `K_{n,n}`.
    pub fn full(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    /// `K_{n,n}` minus the perfect matching: every `(i, j')` with `i != j`.
    pub fn jstar(n: usize) -> Result<Self> {
        Self::from_fn(n, |a, b| a != b)
    }

    /// The maximal finite bundle with `r` loops: loops on `1..=r` plus every
    /// `(i, j')` with `r < i != j <= n`.
    pub fn jr(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Precondition(format!("r = {r} must lie in 0..={n}")));
        }
        Self::from_fn(n, |a, b| if a == b { a < r } else { a >= r && b >= r })
    }

    /// The bundle whose relation equals the adjacency of `g`.
    pub fn mirror(g: &BaseGraph) -> Self {
        Self::from_fn(g.n(), |a, b| g.adjacent0(a, b)).expect("base graph is nonempty")
    }

    /// One of the eight labeled symmetric bundles on `n = 2`, `index` in `1..=8`.
    pub fn k2_catalog_entry(index: usize) -> Result<Self> {
        let pairs: &[(usize, usize)] = match index {
            1 => &[],
            2 => &[(1, 1)],
            3 => &[(2, 2)],
            4 => &[(1, 1), (2, 2)],
            5 => &[(1, 2), (2, 1)],
            6 => &[(1, 2), (2, 1), (1, 1)],
            7 => &[(1, 2), (2, 1), (2, 2)],
            8 => &[(1, 1), (1, 2), (2, 1), (2, 2)],
            _ => {
                return Err(Error::Unsupported { kind: "K2 bundle", name: format!("j{index}") })
            }
        };
        Self::new(2, pairs, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based query for the edge `(i, j')`.
    pub fn contains(&self, i: usize, j: usize) -> Result<bool> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// Number of `K_{n,n}` edges: loops count once, each off-diagonal pair
    /// `(i, j'), (j, i')` counts twice.
    pub fn edge_count(&self) -> usize {
        self.rel.iter().filter(|&&x| x).count()
    }

    /// Row sum at `i` (1-based): the degree of `i` inside the bundle.
    pub fn degree(&self, i: usize) -> Result<usize> {
        check_index(i, self.n)?;
        Ok(self.degree0(i - 1))
    }

    /// All 1-based pairs `(i, j)` with `i ~ j'`, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|&x| self.rel[x])
            .map(|x| (x / self.n + 1, x % self.n + 1))
            .collect()
    }

    pub fn is_loop_matching(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.at(a, b) == (a == b)))
    }

    /// True when the relation coincides with the adjacency of `g`.
    pub fn mirrors(&self, g: &BaseGraph) -> bool {
        self.n == g.n() && (0..self.n).all(|a| (0..self.n).all(|b| self.at(a, b) == g.adjacent0(a, b)))
    }

    /// Subgraph containment inside `K_{n,n}`.
    pub fn is_subbundle_of(&self, other: &Bundle) -> bool {
        self.n == other.n && self.rel.iter().zip(&other.rel).all(|(&a, &b)| !a || b)
    }

    pub fn view(&self) -> BundleView {
        let loops = (0..self.n).filter(|&a| self.at(a, a)).map(|a| a + 1).collect();
        let simple_edges = (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.at(a, b))
            .map(|(a, b)| (a + 1, b + 1))
            .collect();
        BundleView { n: self.n, loops, simple_edges }
    }

    pub(crate) fn at(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    pub(crate) fn degree0(&self, a: usize) -> usize {
        self.rel[a * self.n..(a + 1) * self.n].iter().filter(|&&x| x).count()
    }

    /// 0-based row of partners of `a`.
    pub(crate) fn partners0(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.at(a, b))
    }
}

/// The bundle drawn as a graph on `1..=n`: a loop at `i` for `(i, i')` and a
/// simple edge `{i, j}` for the pair `(i, j'), (j, i')`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleView {
    pub n: usize,
    pub loops: BTreeSet<usize>,
    /// Pairs `(i, j)` with `i < j`, 1-based.
    pub simple_edges: BTreeSet<(usize, usize)>,
}

impl BundleView {
    pub fn to_bundle(&self) -> Result<Bundle> {
        let pairs: Vec<_> = self
            .loops
            .iter()
            .map(|&i| (i, i))
            .chain(self.simple_edges.iter().copied())
            .collect();
        for &(i, j) in &self.simple_edges {
            if i == j {
                return Err(Error::Precondition(format!("simple edge ({i},{j}) is a loop")));
            }
        }
        Bundle::new(self.n, &pairs, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_matching_j4() {
        let j4 = Bundle::new(2, &[(1, 1), (2, 2)], false).unwrap();
        assert_eq!(j4, Bundle::matching(2).unwrap());
        assert_eq!(j4, Bundle::k2_catalog_entry(4).unwrap());
        assert!(j4.is_loop_matching());
        assert_eq!(j4.edge_count(), 2);
    }

    #[test]
    fn symmetrize_gives_j5() {
        let j5 = Bundle::new(2, &[(1, 2)], true).unwrap();
        assert_eq!(j5.pairs(), vec![(1, 2), (2, 1)]);
        assert_eq!(j5, Bundle::k2_catalog_entry(5).unwrap());
        assert_eq!(j5.edge_count(), 2);
    }

    #[test]
    fn strict_rejects_asymmetric() {
        assert_eq!(
            Bundle::new(2, &[(1, 2)], false),
            Err(Error::AsymmetricBundle { i: 1, j: 2 })
        );
        assert!(matches!(Bundle::new(2, &[(1, 3)], true), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn views() {
        let v = Bundle::matching(2).unwrap().view();
        assert_eq!(v.loops, [1, 2].into_iter().collect());
        assert!(v.simple_edges.is_empty());

        let v = Bundle::jstar(3).unwrap().view();
        assert!(v.loops.is_empty());
        assert_eq!(v.simple_edges, [(1, 2), (1, 3), (2, 3)].into_iter().collect());

        let v = Bundle::empty(3).unwrap().view();
        assert!(v.loops.is_empty() && v.simple_edges.is_empty());
    }

    #[test]
    fn view_round_trips_every_k2_bundle() {
        for idx in 1..=8 {
            let b = Bundle::k2_catalog_entry(idx).unwrap();
            assert_eq!(b.view().to_bundle().unwrap(), b);
        }
    }

    #[test]
    fn jr_shape() {
        let j = Bundle::jr(3, 1).unwrap();
        assert_eq!(j.pairs(), vec![(1, 1), (2, 3), (3, 2)]);
        assert_eq!(Bundle::jr(3, 0).unwrap(), Bundle::jstar(3).unwrap());
        assert_eq!(Bundle::jr(3, 3).unwrap(), Bundle::matching(3).unwrap());
        assert!(Bundle::jr(3, 4).is_err());
    }

    #[test]
    fn mirror_of_complete_is_jstar() {
        let k3 = BaseGraph::complete(3).unwrap();
        assert_eq!(Bundle::mirror(&k3), Bundle::jstar(3).unwrap());
        assert!(Bundle::jstar(3).unwrap().mirrors(&k3));
    }
}
