mod common;

use kbe_core::graph::{is_isomorphic, named};
use kbe_core::operators::{burgeon_graph, recognize_burgeon};
use kbe_core::Graph;

#[test]
fn burgeon_graphs_are_recognized_up_to_relabeling() {
    for g in common::connected_up_to(7).filter(|g| g.n() >= 2) {
        let b = burgeon_graph(g).unwrap();
        assert_eq!(b.graph.n(), 2 * g.m());
        for v in b.graph.vertices() {
            let outside = b
                .graph
                .neighbors(v)
                .unwrap()
                .iter()
                .filter(|&&u| b.labels[u].block != b.labels[v].block)
                .count();
            assert_eq!(outside, 1);
        }
        // Reverse the labels so recognition cannot lean on the layout.
        let n = b.graph.n();
        let perm: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
        let shuffled = b.graph.relabel(&perm).unwrap();
        let w = recognize_burgeon(&shuffled).unwrap_or_else(|| panic!("{g:?}"));
        assert!(w.verify(&shuffled));
        assert!(is_isomorphic(&w.host, g).unwrap());
    }
}

#[test]
fn recognition_never_returns_a_bad_witness() {
    for g in common::connected_up_to(7) {
        if let Some(w) = recognize_burgeon(g) {
            assert!(w.verify(g), "{g:?}");
        }
    }
    // C_4 would need two cross edges between the same pair of blocks.
    assert!(recognize_burgeon(&named::cycle(4).unwrap()).is_none());
    assert!(recognize_burgeon(&named::cycle(6).unwrap()).is_some());
    assert!(recognize_burgeon(&named::petersen()).is_none());
}

#[test]
fn disconnected_hosts() {
    let host = named::cycle(3)
        .unwrap()
        .disjoint_union(&named::path(3).unwrap());
    let b = burgeon_graph(&host).unwrap().graph;
    let w = recognize_burgeon(&b).unwrap();
    assert!(is_isomorphic(&w.host, &host).unwrap());
    assert!(!w.host_is_cycle_path_or_claw());
    assert!(burgeon_graph(&Graph::empty(1)).is_err());
}
