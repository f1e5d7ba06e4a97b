use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kbe_core::graph::named;
use kbe_core::operators::edge_biclique_graph;
use kbe_core::structures::{
    find_induced_cycles, find_necklace_certificate, has_good_neighbors, is_induced_necklace,
    lift_cycle, InducedCycle, NecklaceSearch,
};
use kbe_core::Graph;

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every vertex subset of size >= 3 inducing a cycle, as canonical cycles.
fn cycles_by_subsets(g: &Graph) -> Vec<InducedCycle> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let two_each = s
            .iter()
            .all(|&v| s.iter().filter(|&&u| g.has_edge(u, v)).count() == 2);
        if s.len() < 3 || !two_each {
            continue;
        }
        // Walk the cycle from its smallest vertex.
        let mut order = vec![s[0]];
        let mut prev = usize::MAX;
        while order.len() < s.len() {
            let cur = *order.last().unwrap();
            let next = s
                .iter()
                .copied()
                .find(|&x| x != prev && !order.contains(&x) && g.has_edge(cur, x));
            let Some(next) = next else { break };
            prev = cur;
            order.push(next);
        }
        // A disjoint union of cycles gets stuck before covering `s`.
        if order.len() != s.len() || !g.has_edge(order[0], *order.last().unwrap()) {
            continue;
        }
        out.push(InducedCycle::new(g, order).unwrap().canonical());
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[test]
fn cycle_enumeration_matches_subsets() {
    let mut rng = StdRng::seed_from_u64(7);
    for round in 0..60 {
        let n = 4 + round % 7;
        let g = random_graph(&mut rng, n, 0.2 + 0.1 * (round % 5) as f64);
        let found = find_induced_cycles(&g, 3, n, 1_000_000).unwrap();
        assert!(!found.truncated);
        assert_eq!(found.cycles, cycles_by_subsets(&g), "{g:?}");
    }
    let p = named::petersen();
    let found = find_induced_cycles(&p, 3, 10, 1_000_000).unwrap();
    assert_eq!(found.cycles, cycles_by_subsets(&p));
}

/// A cycle `0..len` plus `extra` vertices. Each extra vertex sees a random
/// set of cycle vertices, closed so that seeing `v_{i-1}` and `v_{i+1}`
/// forces `v_i`; the cycle therefore has good neighbours.
fn planted(rng: &mut StdRng, len: usize, extra: usize) -> Graph {
    let n = len + extra;
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for x in len..n {
        let mut sees: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.3)).collect();
        loop {
            let gap =
                (0..len).find(|&i| !sees[i] && sees[(i + len - 1) % len] && sees[(i + 1) % len]);
            match gap {
                Some(i) => sees[i] = true,
                None => break,
            }
        }
        edges.extend((0..len).filter(|&i| sees[i]).map(|i| (i, x)));
        for y in x + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn good_neighbour_cycles_lift_to_kbe() {
    let mut rng = StdRng::seed_from_u64(52);
    for round in 0..200 {
        let len = 5 + round % 4;
        let g = planted(&mut rng, len, 1 + round % 5);
        let cycle = InducedCycle::new(&g, (0..len).collect()).unwrap();
        assert!(has_good_neighbors(&g, &cycle).unwrap());
        let kbe = edge_biclique_graph(&g).unwrap();
        let lifted = lift_cycle(&kbe, &cycle).unwrap_or_else(|e| panic!("{e}: {g:?}"));
        for (i, &b) in lifted.vertices().iter().enumerate() {
            let closed = g.closed_neighborhood(cycle.vertices()[i]).unwrap();
            assert!(kbe.labels[b].vertices().iter().all(|v| closed.contains(v)));
        }
        assert!(has_good_neighbors(&kbe.graph, &lifted).unwrap(), "{g:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn necklace_search_is_sound(seed in any::<u64>(), n in 6usize..14, p in 0.15f64..0.5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let out = find_necklace_certificate(&g, &NecklaceSearch::default()).unwrap();
        if let Some(cert) = out.certificate {
            prop_assert!(is_induced_necklace(&g, &cert));
        }
    }
}
