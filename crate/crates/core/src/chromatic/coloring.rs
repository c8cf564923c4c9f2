use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::graph::ExplicitGraph;

/// A total color assignment over vertex indices with colors in `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    palette: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(palette: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfPalette { vertex, color, palette });
        }
        Ok(Self { palette, colors })
    }

    /// Palette is one more than the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&m| m + 1);
        Self { palette, colors }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&x| x).count()
    }

    /// Relabels colors in order of first appearance along the vertex order and
    /// shrinks the palette to the colors used.
    pub fn normalized(&self) -> Self {
        let mut map = vec![usize::MAX; self.palette];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Self { palette: next, colors }
    }

    /// Certificate text: `palette p`, then `vertex color` per line.
    pub fn to_certificate(&self) -> String {
        let mut out = format!("palette {}\n", self.palette);
        for (v, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }

    pub fn from_certificate(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, header) = lines.next().ok_or_else(|| parse_err(1, "missing palette line"))?;
        let palette = header
            .strip_prefix("palette")
            .and_then(|rest| rest.trim().parse::<usize>().ok())
            .ok_or_else(|| parse_err(lno, "expected `palette <p>`"))?;
        let mut pairs = Vec::new();
        for (lno, line) in lines {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(v)), Some(Ok(c)), None) => pairs.push((v, c)),
                _ => return Err(parse_err(lno, "expected `<vertex> <color>`")),
            }
        }
        let mut colors = vec![usize::MAX; pairs.len()];
        for &(v, c) in &pairs {
            if v >= colors.len() || colors[v] != usize::MAX {
                return Err(parse_err(0, format!("vertex {v} missing, repeated or out of range")));
            }
            colors[v] = c;
        }
        Coloring::new(palette, colors)
    }
}

/// True iff no edge of `graph` joins two vertices of the same color.
pub fn verify_coloring(graph: &ExplicitGraph, coloring: &Coloring) -> Result<bool> {
    if coloring.len() != graph.vertex_count() {
        return Err(Error::ColoringSize { assigned: coloring.len(), vertices: graph.vertex_count() });
    }
    Ok(graph.edges().iter().all(|&(a, b)| coloring.color(a) != coloring.color(b)))
}

/// First-fit coloring along `order`, always taking the lowest free color.
pub fn greedy_coloring(graph: &ExplicitGraph, order: &[usize]) -> Result<Coloring> {
    let n = graph.vertex_count();
    if order.len() != n {
        return Err(Error::NotPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotPermutation);
        }
    }
    let mut colors = vec![usize::MAX; n];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(graph.degree(v) + 1, false);
        for &w in graph.neighbors(v) {
            if let Some(slot) = taken.get_mut(colors[w]) {
                *slot = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).unwrap();
    }
    Ok(Coloring::from_colors(colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> ExplicitGraph {
        ExplicitGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_verification() {
        let g = k3();
        assert!(verify_coloring(&g, &Coloring::new(3, vec![0, 1, 2]).unwrap()).unwrap());
        assert!(!verify_coloring(&g, &Coloring::new(2, vec![0, 1, 0]).unwrap()).unwrap());
        assert!(matches!(
            verify_coloring(&g, &Coloring::new(3, vec![0, 1]).unwrap()),
            Err(Error::ColoringSize { .. })
        ));
        assert!(matches!(Coloring::new(2, vec![0, 2]), Err(Error::ColorOutOfPalette { .. })));
    }

    #[test]
    fn greedy_basics() {
        let g = k3();
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            assert_eq!(greedy_coloring(&g, &order).unwrap().palette(), 3);
        }
        let empty = ExplicitGraph::from_edges(4, &[]).unwrap();
        assert_eq!(greedy_coloring(&empty, &[3, 2, 1, 0]).unwrap().palette(), 1);
        assert_eq!(greedy_coloring(&g, &[0, 1]), Err(Error::NotPermutation));
        assert_eq!(greedy_coloring(&g, &[0, 1, 1]), Err(Error::NotPermutation));
    }

    #[test]
    fn certificate_round_trip() {
        let c = Coloring::new(4, vec![0, 3, 1, 1]).unwrap();
        let text = c.to_certificate();
        assert_eq!(text, "palette 4\n0 0\n1 3\n2 1\n3 1\n");
        assert_eq!(Coloring::from_certificate(&text).unwrap(), c);
        assert!(Coloring::from_certificate("palette 2\n0 0\n0 1\n").is_err());
        assert!(Coloring::from_certificate("colors 2\n").is_err());
        assert!(Coloring::from_certificate("palette 2\n0 5\n").is_err());
    }

    #[test]
    fn normalization() {
        let c = Coloring::new(6, vec![5, 2, 5, 0]).unwrap().normalized();
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.palette(), 3);
        assert_eq!(c.colors_used(), 3);
    }
}
