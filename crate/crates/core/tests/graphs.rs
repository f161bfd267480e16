mod common;

use std::collections::BTreeSet;

use finring::atlas::atlas_up_to;
use finring::graph::*;
use finring::ring::*;
use finring::structure::{ring_isomorphic, zero_divisors};
use finring::{Error, SimpleGraph};
use proptest::prelude::*;

fn edges_by_label(g: &SimpleGraph) -> BTreeSet<(String, String)> {
    g.edges().map(|(a, b)| (g.label(a), g.label(b))).collect()
}

#[test]
fn zero_divisor_graph_examples() {
    assert_eq!(is_complete(&zero_divisor_graph(&n0(3, 1).unwrap())), Some(2));
    let field = zero_divisor_graph(&gf(2, 2).unwrap());
    assert_eq!((field.vertex_count(), field.edge_count()), (0, 0));

    // oracle: edges are the pairs with xy = 0 or yx = 0
    let n4 = np2(2).unwrap();
    let g = zero_divisor_graph(&n4);
    let zd: Vec<usize> = common::zero_divisors(&n4).into_iter().collect();
    let mut oracle = BTreeSet::new();
    for (i, &x) in zd.iter().enumerate() {
        for &y in &zd[i + 1..] {
            if n4.mul(x, y) == 0 || n4.mul(y, x) == 0 {
                oracle.insert((n4.element_name(x), n4.element_name(y)));
            }
        }
    }
    assert_eq!(edges_by_label(&g), oracle);
    let labels: Vec<String> = (0..g.vertex_count()).map(|v| g.label(v)).collect();
    assert_eq!(labels, ["a", "2a", "3a"]);
    assert_eq!(oracle, BTreeSet::from([("a".into(), "2a".into()), ("2a".into(), "3a".into())]));
    assert!(graph_isomorphic(&g, &SimpleGraph::path(3)).unwrap().is_some());
}

#[test]
fn complete_graph_recognition() {
    assert_eq!(is_complete(&zero_divisor_graph(&zn(9))), Some(2));
    assert_eq!(is_complete(&SimpleGraph::empty(1)), Some(1));
    assert_eq!(is_complete(&zero_divisor_graph(&np2(2).unwrap())), None);
}

#[test]
fn canonical_form_examples() {
    let a = canonical_form(&zero_divisor_graph(&zn(9))).unwrap();
    let b = canonical_form(&zero_divisor_graph(&direct_sum(&zn(2), &zn(2)).unwrap())).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_hex(), "000280");
    assert_eq!(canonical_form(&SimpleGraph::empty(0)).unwrap().to_hex(), "0000");
    assert_ne!(
        canonical_form(&SimpleGraph::path(3)).unwrap(),
        canonical_form(&SimpleGraph::complete(3)).unwrap()
    );
    let cert = canonical_form(&SimpleGraph::path(4)).unwrap();
    assert_eq!(GraphCertificate::from_hex(&cert.to_hex()).unwrap(), cert);
    assert!(common::graph_isomorphic(&cert.to_graph(), &SimpleGraph::path(4)));
}

#[test]
fn isomorphism_examples() {
    let n4 = zero_divisor_graph(&np2(2).unwrap());
    let sum = zero_divisor_graph(&direct_sum(&n0(2, 1).unwrap(), &zn(2)).unwrap());
    let map = graph_isomorphic(&n4, &sum).unwrap().unwrap();
    assert!(n4.edges().all(|(a, b)| sum.has_edge(map[a], map[b])));
    let g = zero_divisor_graph(&npp(3).unwrap());
    let h = zero_divisor_graph(&ap(3).unwrap());
    assert!(graph_isomorphic(&g, &h).unwrap().is_some());
    assert!(graph_isomorphic(&SimpleGraph::complete(2), &SimpleGraph::path(3)).unwrap().is_none());
}

#[test]
fn anti_isomorphic_pairs_share_graphs() {
    for p in [2, 3, 5] {
        let g = zero_divisor_graph(&ap(p).unwrap());
        let h = zero_divisor_graph(&ap0(p).unwrap());
        assert!(graph_isomorphic(&g, &h).unwrap().is_some(), "p = {p}");
    }
}

#[test]
fn dot_output() {
    assert_eq!(
        export_dot(&SimpleGraph::complete(2)),
        "graph {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v0 -- v1;\n}\n"
    );
    assert_eq!(export_dot(&SimpleGraph::empty(0)), "graph {\n}\n");
    let dot = export_dot(&zero_divisor_graph(&np2(2).unwrap()));
    assert_eq!(dot.matches("[label=").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 2);
    for l in ["\"a\"", "\"2a\"", "\"3a\""] {
        assert!(dot.contains(l), "{dot}");
    }
    let back = parse_dot(&dot).unwrap();
    assert_eq!(export_dot(&back), dot);
}

#[test]
fn caps_are_enforced() {
    let big = SimpleGraph::empty(300);
    assert!(matches!(canonical_form(&big), Err(Error::GraphCapExceeded { .. })));
    assert!(matches!(SimpleGraph::new(2, [(0, 0)]), Err(Error::InvalidParameter(_))));
    assert!(SimpleGraph::new(2, [(0, 2)]).is_err());
}

#[test]
fn atlas_graphs_have_the_right_vertices() {
    for e in atlas_up_to(9).unwrap() {
        let r = &e.ring;
        let g = zero_divisor_graph(r);
        assert_eq!(zero_divisor_vertices(r), zero_divisors(r));
        assert_eq!(g.vertex_count(), common::zero_divisors(r).len());
        let zd = zero_divisors(r);
        for (v, &x) in zd.iter().enumerate() {
            assert!(r.elements().any(|y| y != 0 && (r.mul(x, y) == 0 || r.mul(y, x) == 0)));
            for (w, &y) in zd.iter().enumerate() {
                let expected = v != w && (r.mul(x, y) == 0 || r.mul(y, x) == 0);
                assert_eq!(g.has_edge(v, w), expected);
            }
        }
    }
}

#[test]
fn canonical_forms_match_permutation_oracle_on_atlas_graphs() {
    let atlas = atlas_up_to(9).unwrap();
    let graphs: Vec<SimpleGraph> = atlas
        .iter()
        .map(|e| zero_divisor_graph(&e.ring))
        .filter(|g| g.vertex_count() <= 8)
        .collect();
    assert!(graphs.len() > 60);
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i..] {
            let oracle = common::graph_isomorphic(g, h);
            assert_eq!(canonical_form(g).unwrap() == canonical_form(h).unwrap(), oracle);
            assert_eq!(graph_isomorphic(g, h).unwrap().is_some(), oracle);
        }
    }
}

#[test]
fn graphs_respect_ring_isomorphism() {
    let atlas = atlas_up_to(8).unwrap();
    for e in &atlas {
        let perm: Vec<usize> = std::iter::once(0).chain((1..e.order()).rev()).collect();
        let copy = common::relabel(&e.ring, &perm);
        assert!(ring_isomorphic(&e.ring, &copy).unwrap().is_some());
        let (g, h) = (zero_divisor_graph(&e.ring), zero_divisor_graph(&copy));
        assert!(graph_isomorphic(&g, &h).unwrap().is_some());
        assert_eq!(canonical_form(&h).unwrap(), e.graph_certificate);
    }
}

fn random_graph(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            SimpleGraph::new(n, all.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn permuted(g: SimpleGraph) -> impl Strategy<Value = (SimpleGraph, SimpleGraph)> {
    let n = g.vertex_count();
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |p| {
        let h = SimpleGraph::new(n, g.edges().map(|(a, b)| (p[a], p[b]))).unwrap();
        (g.clone(), h)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_a_complete_invariant(g in random_graph(7), h in random_graph(7)) {
        let oracle = common::graph_isomorphic(&g, &h);
        prop_assert_eq!(canonical_form(&g).unwrap() == canonical_form(&h).unwrap(), oracle);
        if let Some(map) = graph_isomorphic(&g, &h).unwrap() {
            prop_assert!(oracle);
            prop_assert!(g.edges().all(|(a, b)| h.has_edge(map[a], map[b])));
        } else {
            prop_assert!(!oracle);
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling((g, h) in random_graph(9).prop_flat_map(permuted)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let (positions, cert) = canonical_labeling(&g).unwrap();
        let relabeled = SimpleGraph::new(g.vertex_count(), g.edges().map(|(a, b)| (positions[a], positions[b]))).unwrap();
        prop_assert_eq!(relabeled.edges().collect::<Vec<_>>(), cert.to_graph().edges().collect::<Vec<_>>());
    }

    #[test]
    fn dot_round_trips(g in random_graph(10)) {
        let text = export_dot(&g);
        let back = parse_dot(&text).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(export_dot(&back), text);
    }
}
