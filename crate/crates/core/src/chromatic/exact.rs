use super::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;

/// Default and hard cap on vertices for the bitmask solvers.
pub const DEFAULT_MAX_EXACT: usize = 64;

const UNCOLORED: usize = usize::MAX;

fn masks_for(graph: &ExplicitGraph, max_vertices: usize) -> Result<Vec<u64>> {
    let limit = max_vertices.min(DEFAULT_MAX_EXACT);
    if graph.vertex_count() > limit {
        return Err(Error::SizeLimit {
            what: "exact coloring vertex count",
            size: graph.vertex_count() as u128,
            limit: limit as u128,
        });
    }
    Ok(graph.neighbor_masks().expect("at most 64 vertices"))
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

/// Greedy clique: from every start vertex repeatedly add the candidate with
/// most neighbors among the remaining candidates. Returns the largest found.
pub fn greedy_clique(adj: &[u64]) -> u64 {
    let mut best = 0u64;
    for start in 0..adj.len() {
        let mut clique = 1u64 << start;
        let mut cand = adj[start];
        while cand != 0 {
            let v = bits(cand).max_by_key(|&v| ((adj[v] & cand).count_ones(), usize::MAX - v)).unwrap();
            clique |= 1 << v;
            cand &= adj[v];
        }
        if clique.count_ones() > best.count_ones() {
            best = clique;
        }
    }
    best
}

struct Dsatur<'a> {
    adj: &'a [u64],
    classes: Vec<u64>,
    color: Vec<usize>,
    uncolored: u64,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Dsatur<'_> {
    fn pick(&self, used: usize) -> (usize, usize) {
        let mut pick = (0, 0, 0);
        let mut found = None;
        for v in bits(self.uncolored) {
            let sat = self.classes[..used].iter().filter(|&&c| self.adj[v] & c != 0).count();
            let deg = (self.adj[v] & self.uncolored).count_ones() as usize;
            if found.is_none() || (sat, deg) > (pick.0, pick.1) {
                pick = (sat, deg, v);
                found = Some(v);
            }
        }
        (pick.2, pick.0)
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.classes[c] |= 1 << v;
        self.uncolored &= !(1 << v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = UNCOLORED;
        self.classes[c] &= !(1 << v);
        self.uncolored |= 1 << v;
    }

    /// Returns true once an optimal coloring is certified.
    fn search(&mut self, used: usize) -> bool {
        if used >= self.best {
            return false;
        }
        if self.uncolored == 0 {
            self.best = used;
            self.best_colors = self.color.clone();
            return self.best <= self.lower;
        }
        let (v, sat) = self.pick(used);
        if sat == used && used + 1 >= self.best {
            return false;
        }
        for c in 0..used {
            if self.adj[v] & self.classes[c] == 0 {
                self.assign(v, c);
                let done = self.search(used);
                self.unassign(v, c);
                if done {
                    return true;
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            let done = self.search(used + 1);
            self.unassign(v, used);
            if done {
                return true;
            }
        }
        false
    }
}

/// Exact chromatic number by saturation-ordered branch and bound.
///
/// A greedily found clique is pre-colored with distinct colors and provides
/// the lower bound. The witness is normalized so colors appear in increasing
/// order of first use along vertex indices.
pub fn chromatic_number_exact(graph: &ExplicitGraph, max_vertices: usize) -> Result<(usize, Coloring)> {
    let adj = masks_for(graph, max_vertices)?;
    let n = adj.len();
    if n == 0 {
        return Ok((0, Coloring::from_colors(Vec::new())));
    }
    let clique = greedy_clique(&adj);
    let lower = clique.count_ones() as usize;
    let mut solver = Dsatur {
        adj: &adj,
        classes: vec![0; n + 1],
        color: vec![UNCOLORED; n],
        uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        best: n + 1,
        best_colors: Vec::new(),
        lower,
    };
    for (c, v) in bits(clique).enumerate() {
        solver.assign(v, c);
    }
    solver.search(lower);
    let chi = solver.best;
    Ok((chi, Coloring::from_colors(solver.best_colors).normalized()))
}

/// The lexicographically least proper coloring (as a color vector over
/// vertex indices) using at most `palette` colors, if one exists.
pub fn lex_least_coloring(graph: &ExplicitGraph, palette: usize) -> Option<Coloring> {
    fn go(graph: &ExplicitGraph, palette: usize, v: usize, top: usize, colors: &mut Vec<usize>) -> bool {
        if v == graph.vertex_count() {
            return true;
        }
        for c in 0..palette.min(top + 1) {
            if graph.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if go(graph, palette, v + 1, top.max(c + 1), colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![UNCOLORED; graph.vertex_count()];
    go(graph, palette, 0, 0, &mut colors).then(|| Coloring::new(palette, colors).unwrap())
}

/// Decision search for a proper coloring with `palette` colors on graphs of
/// any size. Vertices are chosen by saturation; at each vertex the color in
/// `preferred` (if any) is tried first, then the rest in increasing order.
pub fn find_coloring(graph: &ExplicitGraph, palette: usize, preferred: Option<&[usize]>) -> Option<Coloring> {
    let n = graph.vertex_count();
    let mut colors = vec![UNCOLORED; n];
    // blocked[v * palette + c]: number of neighbors of v colored c.
    let mut blocked = vec![0u32; n * palette];
    let mut saturation = vec![0usize; n];

    fn go(
        graph: &ExplicitGraph,
        palette: usize,
        preferred: Option<&[usize]>,
        colors: &mut [usize],
        blocked: &mut [u32],
        saturation: &mut [usize],
        remaining: usize,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = (0..colors.len())
            .filter(|&v| colors[v] == UNCOLORED)
            .max_by_key(|&v| (saturation[v], graph.degree(v), usize::MAX - v))
            .unwrap();
        if saturation[v] == palette {
            return false;
        }
        let first = preferred.map(|p| p[v]).filter(|&c| c < palette);
        let order = first.into_iter().chain((0..palette).filter(|&c| Some(c) != first));
        for c in order {
            if blocked[v * palette + c] != 0 {
                continue;
            }
            colors[v] = c;
            for &w in graph.neighbors(v) {
                let slot = &mut blocked[w * palette + c];
                if *slot == 0 {
                    saturation[w] += 1;
                }
                *slot += 1;
            }
            if go(graph, palette, preferred, colors, blocked, saturation, remaining - 1) {
                return true;
            }
            for &w in graph.neighbors(v) {
                let slot = &mut blocked[w * palette + c];
                *slot -= 1;
                if *slot == 0 {
                    saturation[w] -= 1;
                }
            }
            colors[v] = UNCOLORED;
        }
        false
    }

    if palette == 0 {
        return (n == 0).then(|| Coloring::from_colors(Vec::new()));
    }
    go(graph, palette, preferred, &mut colors, &mut blocked, &mut saturation, n)
        .then(|| Coloring::new(palette, colors).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::verify_coloring;

    fn complete(n: usize) -> ExplicitGraph {
        let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        ExplicitGraph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> ExplicitGraph {
        let e: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        ExplicitGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(chromatic_number_exact(&complete(4), 64).unwrap().0, 4);
        assert_eq!(chromatic_number_exact(&cycle(5), 64).unwrap().0, 3);
        assert_eq!(chromatic_number_exact(&cycle(6), 64).unwrap().0, 2);
        assert_eq!(chromatic_number_exact(&complete(64), 64).unwrap().0, 64);
        let edgeless = ExplicitGraph::from_edges(5, &[]).unwrap();
        assert_eq!(chromatic_number_exact(&edgeless, 64).unwrap().0, 1);
    }

    #[test]
    fn petersen_is_three() {
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = ExplicitGraph::from_edges(10, &e).unwrap();
        let (chi, witness) = chromatic_number_exact(&g, 64).unwrap();
        assert_eq!(chi, 3);
        assert!(verify_coloring(&g, &witness).unwrap());
        assert_eq!(witness.palette(), 3);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            chromatic_number_exact(&cycle(10), 9),
            Err(Error::SizeLimit { .. })
        ));
        assert!(chromatic_number_exact(&cycle(65), 1000).is_err());
    }

    #[test]
    fn lex_least() {
        let c = lex_least_coloring(&cycle(5), 3).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0, 1, 2]);
        assert!(lex_least_coloring(&cycle(5), 2).is_none());
        let c = lex_least_coloring(&complete(3), 3).unwrap();
        assert_eq!(c.colors(), &[0, 1, 2]);
    }

    #[test]
    fn decision_search() {
        let g = cycle(7);
        assert!(find_coloring(&g, 2, None).is_none());
        let c = find_coloring(&g, 3, Some(&[2; 7])).unwrap();
        assert!(verify_coloring(&g, &c).unwrap());
    }

    #[test]
    fn greedy_clique_finds_triangle() {
        let g = cycle(5);
        let mut adj = g.neighbor_masks().unwrap();
        adj[0] |= 1 << 2;
        adj[2] |= 1;
        assert_eq!(greedy_clique(&adj).count_ones(), 3);
    }
}
