use std::fmt;

use super::base::BaseGraph;
use super::bundle::Bundle;
use crate::error::{Error, Result};

/// A vertex of `G^k`: `k` 1-based coordinates, the first being the outermost
/// copy index and the last the innermost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(Vec<usize>);

impl Vertex {
    pub fn new(coords: Vec<usize>) -> Self {
        Vertex(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Vertex {
    /// Dot-joined coordinates, e.g. `1.2.3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, c) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(".")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Vec<usize>> for Vertex {
    fn from(v: Vec<usize>) -> Self {
        Vertex(v)
    }
}

/// The pair `(G, J)` from which the sequence `G^1, G^2, ...` is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarSystem {
    base: BaseGraph,
    bundle: Bundle,
}

impl SelfSimilarSystem {
    pub fn new(base: BaseGraph, bundle: Bundle) -> Result<Self> {
        if base.n() != bundle.n() {
            return Err(Error::SideMismatch { base: base.n(), bundle: bundle.n() });
        }
        Ok(Self { base, bundle })
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `n^k`, the order of `G^k`, or `None` if it does not fit in 64 bits.
    pub fn vertex_count(&self, k: usize) -> Option<u64> {
        (self.n() as u64).checked_pow(u32::try_from(k).ok()?)
    }

    fn check_vertex(&self, v: &Vertex) -> Result<()> {
        if v.depth() == 0 {
            return Err(Error::ZeroDepth);
        }
        for &c in v.coords() {
            super::base::check_index(c, self.n())?;
        }
        Ok(())
    }

    /// Adjacency in `G^k` evaluated without materializing the graph.
    ///
    /// With `d` the first coordinate where `u` and `v` differ, the pair is an
    /// edge iff `u_d ~ v_d` in `G` and `u_t ~ v_t'` in `J` for every `t > d`.
    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> Result<bool> {
        if u.depth() != v.depth() {
            return Err(Error::LengthMismatch { left: u.depth(), right: v.depth() });
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.adjacent_unchecked(u.coords(), v.coords(), 1))
    }

    /// Coordinates are offset by `shift` (1 for public vertices, 0 for
    /// internal digit vectors).
    pub(crate) fn adjacent_unchecked(&self, u: &[usize], v: &[usize], shift: usize) -> bool {
        let Some(d) = u.iter().zip(v).position(|(a, b)| a != b) else {
            return false;
        };
        self.base.adjacent0(u[d] - shift, v[d] - shift)
            && u[d + 1..]
                .iter()
                .zip(&v[d + 1..])
                .all(|(&a, &b)| self.bundle.at(a - shift, b - shift))
    }

    /// Degree in `G^k` via `d(u_1..u_k) = d_G(u_k) + d(u_1..u_{k-1}) d_J(u_k)`.
    pub fn degree(&self, u: &Vertex) -> Result<u128> {
        self.check_vertex(u)?;
        let mut deg: u128 = 0;
        for &c in u.coords() {
            let a = c - 1;
            deg = deg
                .checked_mul(self.bundle.degree0(a) as u128)
                .and_then(|x| x.checked_add(self.base.degree0(a) as u128))
                .ok_or(Error::Overflow("degree"))?;
        }
        Ok(deg)
    }

    /// `e(G^k) = e(G) * sum_{i<k} n^{k-1-i} e_J^i`, exact.
    pub fn edge_count(&self, k: usize) -> Result<u128> {
        if k == 0 {
            return Err(Error::ZeroDepth);
        }
        let n = self.n() as u128;
        let ej = self.bundle.edge_count() as u128;
        // Horner: s_1 = 1, s_t = n^{t-1} + ej * s_{t-1}.
        let mut sum: u128 = 1;
        let mut npow: u128 = 1;
        for _ in 1..k {
            npow = npow.checked_mul(n).ok_or(Error::Overflow("edge count"))?;
            sum = sum
                .checked_mul(ej)
                .and_then(|s| s.checked_add(npow))
                .ok_or(Error::Overflow("edge count"))?;
        }
        sum.checked_mul(self.base.edge_count() as u128)
            .ok_or(Error::Overflow("edge count"))
    }

    /// The quotient form `e(G) * ceil((n^k - e_J^k) / (n - e_J))`, or
    /// `e(G) k n^{k-1}` when `e_J = n`. Kept to check it against
    /// [`edge_count`](Self::edge_count).
    pub fn edge_count_quotient_form(&self, k: usize) -> Result<u128> {
        if k == 0 {
            return Err(Error::ZeroDepth);
        }
        let ovf = || Error::Overflow("edge count");
        let eg = self.base.edge_count() as i128;
        let n = self.n() as i128;
        let ej = self.bundle.edge_count() as i128;
        let k32 = u32::try_from(k).map_err(|_| ovf())?;
        let value = if ej == n {
            let npow = n.checked_pow(k32 - 1).ok_or_else(ovf)?;
            eg.checked_mul(k as i128).and_then(|x| x.checked_mul(npow)).ok_or_else(ovf)?
        } else {
            let num = n.checked_pow(k32).ok_or_else(ovf)? - ej.checked_pow(k32).ok_or_else(ovf)?;
            let den = n - ej;
            let q = num / den;
            let q = if num % den != 0 && (num > 0) == (den > 0) { q + 1 } else { q };
            eg.checked_mul(q).ok_or_else(ovf)?
        };
        u128::try_from(value).map_err(|_| ovf())
    }

    /// Integer encoding of a vertex: coordinates as base-`n` digits, first
    /// coordinate most significant.
    pub fn encode(&self, v: &Vertex) -> Result<u64> {
        self.check_vertex(v)?;
        let n = self.n() as u64;
        v.coords().iter().try_fold(0u64, |acc, &c| {
            acc.checked_mul(n)
                .and_then(|x| x.checked_add(c as u64 - 1))
                .ok_or(Error::Overflow("vertex index"))
        })
    }

    pub fn decode(&self, index: u64, k: usize) -> Result<Vertex> {
        if k == 0 {
            return Err(Error::ZeroDepth);
        }
        if let Some(total) = self.vertex_count(k) {
            if index >= total {
                return Err(Error::Precondition(format!("index {index} outside 0..{total}")));
            }
        }
        Ok(Vertex(decode_digits(index, self.n(), k).into_iter().map(|d| d + 1).collect()))
    }
}

/// 0-based base-`n` digits of `index`, most significant first.
pub(crate) fn decode_digits(mut index: u64, n: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    for slot in digits.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(base: BaseGraph, bundle: Bundle) -> SelfSimilarSystem {
        SelfSimilarSystem::new(base, bundle).unwrap()
    }

    fn v(c: &[usize]) -> Vertex {
        Vertex::new(c.to_vec())
    }

    #[test]
    fn hypercube_adjacency() {
        let s = sys(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap());
        assert!(s.adjacent(&v(&[1, 1]), &v(&[1, 2])).unwrap());
        assert!(s.adjacent(&v(&[1, 1]), &v(&[2, 1])).unwrap());
        assert!(!s.adjacent(&v(&[1, 1]), &v(&[2, 2])).unwrap());
        assert!(!s.adjacent(&v(&[1, 1]), &v(&[1, 1])).unwrap());
    }

    #[test]
    fn full_bundle_on_k2_is_complete() {
        let s = sys(BaseGraph::complete(2).unwrap(), Bundle::full(2).unwrap());
        for a in 0..4u64 {
            for b in 0..4u64 {
                let (x, y) = (s.decode(a, 2).unwrap(), s.decode(b, 2).unwrap());
                assert_eq!(s.adjacent(&x, &y).unwrap(), a != b);
            }
        }
    }

    #[test]
    fn adjacency_errors() {
        let s = sys(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap());
        assert_eq!(
            s.adjacent(&v(&[1]), &v(&[1, 2])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
        assert!(matches!(s.adjacent(&v(&[3]), &v(&[1])), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(s.adjacent(&v(&[]), &v(&[])), Err(Error::ZeroDepth));
    }

    #[test]
    fn side_mismatch() {
        assert_eq!(
            SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::matching(3).unwrap()),
            Err(Error::SideMismatch { base: 2, bundle: 3 })
        );
    }

    #[test]
    fn edge_counts() {
        let q = sys(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap());
        assert_eq!(q.edge_count(3).unwrap(), 12);
        let k = sys(BaseGraph::complete(2).unwrap(), Bundle::full(2).unwrap());
        assert_eq!(k.edge_count(2).unwrap(), 6);
        let e = sys(BaseGraph::cycle(5).unwrap(), Bundle::empty(5).unwrap());
        assert_eq!(e.edge_count(3).unwrap(), 5 * 25);
        for s in [&q, &k, &e] {
            for depth in 1..8 {
                assert_eq!(s.edge_count(depth), s.edge_count_quotient_form(depth));
            }
        }
    }

    #[test]
    fn degrees() {
        let s = sys(BaseGraph::complete(3).unwrap(), Bundle::matching(3).unwrap());
        assert_eq!(s.degree(&v(&[2, 3])).unwrap(), 4);
        let s = sys(BaseGraph::complete(2).unwrap(), Bundle::full(2).unwrap());
        assert_eq!(s.degree(&v(&[1, 2])).unwrap(), 3);
        let s = sys(BaseGraph::path(3).unwrap(), Bundle::matching(3).unwrap());
        assert_eq!(s.degree(&v(&[2, 1])).unwrap(), 3);
    }

    #[test]
    fn encode_decode() {
        let s = sys(BaseGraph::complete(3).unwrap(), Bundle::matching(3).unwrap());
        assert_eq!(s.encode(&v(&[2, 3, 1])).unwrap(), 9 + 2 * 3);
        assert_eq!(s.decode(15, 3).unwrap(), v(&[2, 3, 1]));
        assert!(s.decode(27, 3).is_err());
        assert_eq!(v(&[1, 2, 3]).to_string(), "1.2.3");
    }
}
