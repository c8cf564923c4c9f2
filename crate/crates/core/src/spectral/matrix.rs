use super::spectrum::SpectrumMultiset;
use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;

/// Largest order accepted by [`eigenvalues_numeric`].
pub const MAX_EIGEN_ORDER: usize = 2000;

/// Default relative off-diagonal tolerance for the Jacobi iteration.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-10;

/// Eigenvalues closer than this are reported as one value with multiplicity.
pub const CLUSTER_GAP: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

/// A dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::Precondition(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        for i in 0..order {
            for j in i + 1..order {
                let (a, b) = (entries[i * order + j], entries[j * order + i]);
                if (a - b).abs() > 1e-12 * a.abs().max(b.abs()).max(1.0) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    fn frobenius(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// The 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(graph: &ExplicitGraph) -> SymmetricMatrix {
    let n = graph.vertex_count();
    let mut entries = vec![0.0; n * n];
    for &(a, b) in graph.edges() {
        entries[a * n + b] = 1.0;
        entries[b * n + a] = 1.0;
    }
    SymmetricMatrix { order: n, entries }
}

/// Raw eigenvalues by cyclic Jacobi rotations, unsorted.
///
/// Sweeps over all `(p, q)` pairs until the off-diagonal Frobenius norm drops
/// below `tol` times the Frobenius norm of the input.
pub fn jacobi_eigenvalues(m: &SymmetricMatrix, tol: f64) -> Vec<f64> {
    let n = m.order;
    let mut a = m.entries.clone();
    let scale = m.frobenius();
    let threshold = tol * if scale > 0.0 { scale } else { 1.0 };
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// All eigenvalues grouped into a multiset (gap [`CLUSTER_GAP`]).
pub fn eigenvalues_numeric(m: &SymmetricMatrix, tol: f64) -> Result<SpectrumMultiset> {
    if m.order > MAX_EIGEN_ORDER {
        return Err(Error::SizeLimit {
            what: "matrix order",
            size: m.order as u128,
            limit: MAX_EIGEN_ORDER as u128,
        });
    }
    Ok(SpectrumMultiset::cluster(jacobi_eigenvalues(m, tol), CLUSTER_GAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_matrix_and_spectrum() {
        let g = ExplicitGraph::from_edges(2, &[(0, 1)]).unwrap();
        let m = adjacency_matrix(&g);
        assert_eq!(m.get(0, 1), 1.0);
        assert_eq!(m.get(0, 0), 0.0);
        let s = eigenvalues_numeric(&m, DEFAULT_JACOBI_TOL).unwrap();
        assert_eq!(s.multiplicities(), vec![1, 1]);
        assert!((s.pairs()[0].0 - 1.0).abs() < 1e-12);
        assert!((s.pairs()[1].0 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..=7 {
            let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let m = adjacency_matrix(&ExplicitGraph::from_edges(n, &e).unwrap());
            let s = eigenvalues_numeric(&m, DEFAULT_JACOBI_TOL).unwrap();
            assert_eq!(s.pairs().len(), 2);
            assert!((s.pairs()[0].0 - (n as f64 - 1.0)).abs() < 1e-10);
            assert_eq!(s.pairs()[1].1, n - 1);
            assert!((s.pairs()[1].0 + 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            SymmetricMatrix::new(2, vec![0.0, 1.0, 0.0, 0.0]),
            Err(Error::NotSymmetric(0, 1))
        );
        assert!(SymmetricMatrix::new(2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn dense_non_integer_matrix() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let m = SymmetricMatrix::new(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let mut ev = jacobi_eigenvalues(&m, 1e-14);
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }
}
