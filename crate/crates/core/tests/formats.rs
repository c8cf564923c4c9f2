use proptest::prelude::*;

use selfsim_core::io::{export, from_edge_list, from_graph6, to_graph6, Format};
use selfsim_core::{materialize, BaseGraph, Bundle, ExplicitGraph, SelfSimilarSystem};

/// Independent graph6 reader for graphs with at most 62 vertices.
fn decode_small_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = s.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<u8> = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |t| (b - 63) >> t & 1))
        .collect();
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    edges.sort_unstable();
    (n, edges)
}

fn q3() -> ExplicitGraph {
    let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap()).unwrap();
    materialize(&s, 3, 100).unwrap()
}

#[test]
fn q3_and_k4_graph6_are_standard() {
    // Q3 with vertices labeled by their bit strings; K4 is all ones.
    assert_eq!(to_graph6(&q3()), "Gr`HOk");
    let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::full(2).unwrap()).unwrap();
    let k4 = materialize(&s, 2, 100).unwrap();
    assert_eq!(to_graph6(&k4), "C~");

    for g in [q3(), k4] {
        let (n, edges) = decode_small_graph6(&to_graph6(&g));
        assert_eq!(n, g.vertex_count());
        assert_eq!(edges, g.edges());
    }
    let (_, edges) = decode_small_graph6("Gr`HOk");
    assert!(edges.iter().all(|&(a, b)| (a ^ b).count_ones() == 1));
    assert_eq!(edges.len(), 12);
}

#[test]
fn q2_dot_parses_back() {
    let s = SelfSimilarSystem::new(BaseGraph::complete(2).unwrap(), Bundle::matching(2).unwrap()).unwrap();
    let g = materialize(&s, 2, 100).unwrap();
    let dot = export(&g, Format::Dot);
    assert!(dot.starts_with("graph G {"));
    let nodes: Vec<&str> = dot.lines().filter(|l| l.contains("[label=")).collect();
    let edges: Vec<(usize, usize)> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -- "))
        .map(|(a, b)| (a.trim().parse().unwrap(), b.trim().parse().unwrap()))
        .collect();
    assert_eq!(nodes.len(), 4);
    assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    assert!(dot.contains("3 [label=\"2.2\"]"));
}

fn graph_strategy() -> impl Strategy<Value = ExplicitGraph> {
    (1usize..=70).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..120).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            ExplicitGraph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_and_edge_list_round_trip(g in graph_strategy()) {
        let g6 = export(&g, Format::Graph6);
        let back = from_graph6(&g6).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(export(&back, Format::Graph6), g6);

        let el = export(&g, Format::EdgeList);
        let back = from_edge_list(&el, Some(g.vertex_count())).unwrap();
        prop_assert_eq!(export(&back, Format::EdgeList), el);
    }
}
