use proptest::prelude::*;

use selfsim_core::{materialize, BaseGraph, Bundle, SelfSimilarSystem, Vertex};

/// Adjacency straight from the recursive definition, over 1-based coordinates.
fn adjacent_by_definition(system: &SelfSimilarSystem, u: &[usize], v: &[usize]) -> bool {
    let k = u.len();
    let (pu, pv) = (&u[..k - 1], &v[..k - 1]);
    let (a, b) = (u[k - 1], v[k - 1]);
    let rule_one = pu == pv && system.base().contains_edge(a, b).unwrap();
    let rule_two = k > 1 && adjacent_by_definition(system, pu, pv) && system.bundle().contains(a, b).unwrap();
    rule_one || rule_two
}

fn all_vertices(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n.pow(k as u32))
        .map(|mut x| {
            let mut c = vec![0; k];
            for slot in c.iter_mut().rev() {
                *slot = x % n + 1;
                x /= n;
            }
            c
        })
        .collect()
}

fn system_strategy() -> impl Strategy<Value = SelfSimilarSystem> {
    (1usize..=4).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(|(n, g_bits, loops, j_bits)| {
                let upper: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
                let edges: Vec<_> = upper.iter().zip(&g_bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
                let mut bundle: Vec<_> = (1..=n).zip(&loops).filter(|(_, &b)| b).map(|(i, _)| (i, i)).collect();
                bundle.extend(upper.iter().zip(&j_bits).filter(|(_, &b)| b).map(|(&e, _)| e));
                SelfSimilarSystem::new(
                    BaseGraph::new(n, &edges).unwrap(),
                    Bundle::new(n, &bundle, true).unwrap(),
                )
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn oracle_matches_definition_and_materialization(system in system_strategy(), k in 1usize..=3) {
        let n = system.n();
        let g = materialize(&system, k, 1000).unwrap();
        let verts = all_vertices(n, k);
        for (x, u) in verts.iter().enumerate() {
            for (y, v) in verts.iter().enumerate() {
                let (uu, vv) = (Vertex::new(u.clone()), Vertex::new(v.clone()));
                let oracle = system.adjacent(&uu, &vv).unwrap();
                prop_assert_eq!(oracle, adjacent_by_definition(&system, u, v));
                prop_assert_eq!(oracle, g.has_edge(x, y));
                prop_assert_eq!(oracle, system.adjacent(&vv, &uu).unwrap());
                prop_assert_eq!(system.encode(&uu).unwrap(), x as u64);
            }
            prop_assert!(!g.has_edge(x, x));
        }
    }

    #[test]
    fn formulas_match_materialization(system in system_strategy(), k in 1usize..=3) {
        let g = materialize(&system, k, 1000).unwrap();
        prop_assert_eq!(system.edge_count(k).unwrap(), g.edge_count() as u128);
        prop_assert_eq!(system.edge_count_quotient_form(k).unwrap(), g.edge_count() as u128);
        for x in 0..g.vertex_count() {
            let v = system.decode(x as u64, k).unwrap();
            prop_assert_eq!(system.degree(&v).unwrap(), g.degree(x) as u128);
        }
    }

    #[test]
    fn quotient_form_agrees_for_deep_levels(system in system_strategy(), k in 1usize..=12) {
        prop_assert_eq!(system.edge_count(k), system.edge_count_quotient_form(k));
    }
}

#[test]
fn hypercube_fixtures() {
    let k2 = BaseGraph::complete(2).unwrap();
    for bundle in [Bundle::k2_catalog_entry(4).unwrap(), Bundle::k2_catalog_entry(5).unwrap()] {
        let s = SelfSimilarSystem::new(k2.clone(), bundle).unwrap();
        for k in 1..=4 {
            let g = materialize(&s, k, 1000).unwrap();
            assert_eq!(g.vertex_count(), 1 << k);
            assert_eq!(g.edge_count(), k << (k - 1));
            assert_eq!(g.regular_degree(), Some(k));
            // bipartite: BFS 2-coloring never conflicts
            let mut side = vec![usize::MAX; g.vertex_count()];
            side[0] = 0;
            let mut queue = std::collections::VecDeque::from([0]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    }
                    assert_ne!(side[w], side[v]);
                }
            }
        }
    }
}

#[test]
fn empty_bundle_gives_disjoint_copies() {
    let base = BaseGraph::cycle(4).unwrap();
    let s = SelfSimilarSystem::new(base, Bundle::empty(4).unwrap()).unwrap();
    for k in 1..=4 {
        assert_eq!(s.edge_count(k).unwrap(), 4 * 4u128.pow(k as u32 - 1));
    }
}

#[test]
fn oracle_handles_deep_vertices() {
    let s = SelfSimilarSystem::new(BaseGraph::complete(3).unwrap(), Bundle::matching(3).unwrap()).unwrap();
    let u = Vertex::new(vec![1; 5000]);
    let mut c = vec![1; 5000];
    c[10] = 2;
    assert!(s.adjacent(&u, &Vertex::new(c.clone())).unwrap());
    c[4000] = 3;
    assert!(!s.adjacent(&u, &Vertex::new(c)).unwrap());
    assert_eq!(s.degree(&u).unwrap(), 2 * 5000);
}
