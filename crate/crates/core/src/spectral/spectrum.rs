use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Eigenvalues with multiplicities, sorted by descending eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumMultiset {
    pairs: Vec<(f64, usize)>,
}

impl SpectrumMultiset {
    /// Merges pairs whose eigenvalues agree within `1e-9` and sorts them.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, usize)>) -> Self {
        let mut raw: Vec<_> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        raw.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut merged: Vec<(f64, usize)> = Vec::with_capacity(raw.len());
        for (v, m) in raw {
            match merged.last_mut() {
                Some(last) if (last.0 - v).abs() < 1e-9 => last.1 += m,
                _ => merged.push((v, m)),
            }
        }
        Self { pairs: merged }
    }

    /// Groups raw eigenvalues: sorted descending, consecutive values closer
    /// than `gap` form one cluster reported at its mean.
    pub fn cluster(mut values: Vec<f64>, gap: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut pairs: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut prev = f64::NAN;
        for v in values {
            match pairs.last_mut() {
                Some(last) if prev - v < gap => {
                    sum += v;
                    last.1 += 1;
                    last.0 = sum / last.1 as f64;
                }
                _ => {
                    sum = v;
                    pairs.push((v, 1));
                }
            }
            prev = v;
        }
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// `sum lambda * m`; zero for adjacency spectra.
    pub fn trace(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * m as f64).sum()
    }

    /// `sum lambda^2 * m`; twice the edge count for adjacency spectra.
    pub fn second_moment(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * v * m as f64).sum()
    }

    /// The two largest eigenvalues counted with multiplicity. When the top
    /// eigenvalue is repeated (or is the only one) both entries coincide.
    pub fn top_two(&self) -> Option<(f64, f64)> {
        let &(l1, m1) = self.pairs.first()?;
        let l2 = if m1 > 1 { l1 } else { self.pairs.get(1).map_or(l1, |p| p.0) };
        Some((l1, l2))
    }

    /// `lambda_1 - lambda_2`.
    pub fn gap(&self) -> Option<f64> {
        self.top_two().map(|(a, b)| a - b)
    }

    /// Same multiplicities pairwise and eigenvalues within `tol`.
    pub fn matches(&self, other: &SpectrumMultiset, tol: f64) -> bool {
        self.pairs.len() == other.pairs.len()
            && self
                .pairs
                .iter()
                .zip(&other.pairs)
                .all(|(a, b)| a.1 == b.1 && (a.0 - b.0).abs() <= tol)
    }

    /// `eigenvalue multiplicity` per line, descending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &(v, m) in &self.pairs {
            let _ = writeln!(out, "{} {m}", format_eigenvalue(v));
        }
        out
    }
}

/// Up to 12 decimals with trailing zeros trimmed; `-0` prints as `0`.
pub fn format_eigenvalue(v: f64) -> String {
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    (0..k).try_fold(1u128, |acc, i| Some(acc.checked_mul((n - i) as u128)? / (i as u128 + 1)))
}

/// Spectrum of `G^k` for `(K_n, loop matching)`: eigenvalue `-k + j n` with
/// multiplicity `C(k, j) (n - 1)^(k - j)` for `j = 0..=k`.
pub fn spectrum_matching_closed(n: usize, k: usize) -> Result<SpectrumMultiset> {
    if n < 2 || k < 1 {
        return Err(Error::Precondition(format!("need n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    let mut pairs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mult = binomial(k as u64, j as u64)
            .and_then(|b| b.checked_mul((n as u128 - 1).checked_pow((k - j) as u32)?))
            .and_then(|m| usize::try_from(m).ok())
            .ok_or(Error::Overflow("multiplicity"))?;
        pairs.push(((j * n) as f64 - k as f64, mult));
    }
    Ok(SpectrumMultiset::from_pairs(pairs))
}

/// How one level's eigenvalues produce the next level's, for bundles whose
/// `n x n` block form has equal diagonal blocks `D` and equal off-diagonal
/// blocks `E`, both polynomials in the previous adjacency matrix `A`:
/// eigenvalues are those of `D - E` (each `n - 1` times) and of `D + (n-1)E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockRule {
    /// `D = A`, `E = I`: `mu -> mu - 1` (x `n-1`) and `mu - 1 + n` (x 1).
    Matching,
    /// `D = 0`, `E = A + I`: `mu -> -(mu + 1)` (x `n-1`) and `(n-1)(mu+1)` (x 1).
    JStarCorrected,
}

impl BlockRule {
    pub fn children(self, n: usize, mu: f64) -> [(f64, usize); 2] {
        let nf = n as f64;
        match self {
            BlockRule::Matching => [(mu - 1.0, n - 1), (mu - 1.0 + nf, 1)],
            BlockRule::JStarCorrected => [(-(mu + 1.0), n - 1), ((nf - 1.0) * (mu + 1.0), 1)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockRule::Matching => "matching",
            BlockRule::JStarCorrected => "jstar-corrected",
        }
    }
}

impl FromStr for BlockRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matching" => Ok(BlockRule::Matching),
            "jstar-corrected" => Ok(BlockRule::JStarCorrected),
            other => Err(Error::Unsupported { kind: "block rule", name: other.to_string() }),
        }
    }
}

/// Applies `rule` `k - 1` times to the level-1 spectrum `base`.
pub fn spectrum_block_recursion(
    base: &SpectrumMultiset,
    n: usize,
    k: usize,
    rule: BlockRule,
) -> Result<SpectrumMultiset> {
    if n < 2 || k < 1 {
        return Err(Error::Precondition(format!("need n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    let mut current = base.clone();
    for _ in 1..k {
        let next: Vec<_> = current
            .pairs
            .iter()
            .flat_map(|&(mu, m)| rule.children(n, mu).map(|(v, f)| (v, f * m)))
            .collect();
        current = SpectrumMultiset::from_pairs(next);
    }
    Ok(current)
}

/// The alternating sequence `(n-1)^k, -(n-1)^(k-1), ..., (-1)^k`, a
/// previously stated spectrum for `(K_n, J*)`. Kept only for comparison
/// reports; it does not match the computed spectrum.
pub fn jstar_alternating_sequence(n: usize, k: usize) -> Vec<f64> {
    (0..=k)
        .map(|j| (-1f64).powi(j as i32) * (n as f64 - 1.0).powi((k - j) as i32))
        .collect()
}

/// `(n-1)^(k-2) (n^2 - 2n) / 2`, the conductance floor derived from the
/// alternating sequence. Reported next to the recomputed value only.
pub fn jstar_alternating_conductance(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    (nf - 1.0).powi(k as i32 - 2) * (nf * nf - 2.0 * nf) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_k1_and_q3() {
        for n in 2..=6 {
            let s = spectrum_matching_closed(n, 1).unwrap();
            assert_eq!(s.pairs(), &[(n as f64 - 1.0, 1), (-1.0, n - 1)]);
        }
        let q3 = spectrum_matching_closed(2, 3).unwrap();
        assert_eq!(q3.pairs(), &[(3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)]);
        assert!(spectrum_matching_closed(1, 3).is_err());
        assert!(spectrum_matching_closed(3, 0).is_err());
    }

    #[test]
    fn closed_form_gap_is_half_n() {
        for n in 2..=6 {
            for k in 1..=8 {
                let s = spectrum_matching_closed(n, k).unwrap();
                assert_eq!(s.gap().unwrap() / 2.0, n as f64 / 2.0);
                assert_eq!(s.order(), n.pow(k as u32));
                assert_eq!(s.trace(), 0.0);
            }
        }
    }

    #[test]
    fn recursion_examples() {
        let k2 = SpectrumMultiset::from_pairs([(1.0, 1), (-1.0, 1)]);
        let q2 = SpectrumMultiset::from_pairs([(2.0, 1), (0.0, 2), (-2.0, 1)]);
        assert_eq!(spectrum_block_recursion(&k2, 2, 2, BlockRule::Matching).unwrap(), q2);
        assert_eq!(spectrum_block_recursion(&k2, 2, 2, BlockRule::JStarCorrected).unwrap(), q2);
        let k3 = SpectrumMultiset::from_pairs([(2.0, 1), (-1.0, 2)]);
        let s = spectrum_block_recursion(&k3, 3, 2, BlockRule::JStarCorrected).unwrap();
        assert_eq!(s.pairs(), &[(6.0, 1), (0.0, 6), (-3.0, 2)]);
        assert!("bogus".parse::<BlockRule>().is_err());
        assert_eq!("jstar-corrected".parse::<BlockRule>().unwrap(), BlockRule::JStarCorrected);
    }

    #[test]
    fn top_two_conventions() {
        let disconnected = SpectrumMultiset::from_pairs([(1.0, 2), (-1.0, 2)]);
        assert_eq!(disconnected.gap(), Some(0.0));
        let single = SpectrumMultiset::from_pairs([(0.0, 1)]);
        assert_eq!(single.gap(), Some(0.0));
        assert_eq!(SpectrumMultiset::from_pairs([]).top_two(), None);
    }

    #[test]
    fn clustering_and_text() {
        let s = SpectrumMultiset::cluster(vec![1.0, -1.0 + 1e-9, -1.0 - 1e-9, 2.0], 1e-6);
        assert_eq!(s.multiplicities(), vec![1, 1, 2]);
        assert_eq!(s.to_text(), "2 1\n1 1\n-1 2\n");
        assert_eq!(format_eigenvalue(-1e-15), "0");
        assert_eq!(format_eigenvalue(0.5), "0.5");
    }

    #[test]
    fn alternating_sequence_values() {
        assert_eq!(jstar_alternating_sequence(2, 2), vec![1.0, -1.0, 1.0]);
        assert_eq!(jstar_alternating_sequence(3, 2), vec![4.0, -2.0, 1.0]);
        assert_eq!(jstar_alternating_conductance(3, 2), 1.5);
    }
}
