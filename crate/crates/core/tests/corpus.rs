mod common;

use kbe_core::graph::{canonical_form, canonical_labeling, is_isomorphic};
use kbe_core::Graph;

#[test]
fn connected_counts_match_known_values() {
    for n in 1..=8 {
        assert_eq!(
            common::connected(n).len(),
            common::CONNECTED_COUNTS[n - 1],
            "n={n}"
        );
        assert!(common::connected(n).iter().all(Graph::is_connected));
    }
}

#[test]
fn tree_counts_match_known_values() {
    for n in 1..=10 {
        let t = common::trees(n);
        assert_eq!(t.len(), common::TREE_COUNTS[n - 1], "n={n}");
        assert!(t.iter().all(|g| g.is_connected() && g.m() + 1 == n));
    }
}

#[test]
fn girth_five_corpus_agrees_with_filtering() {
    for n in 1..=8 {
        let filtered = common::connected(n)
            .iter()
            .filter(|g| g.girth().is_none_or(|k| k >= 5))
            .count();
        assert_eq!(common::girth5(n).len(), filtered, "n={n}");
    }
    for n in 9..=10 {
        let gs = common::girth5(n);
        assert!(gs
            .iter()
            .all(|g| g.is_connected() && g.girth().is_none_or(|k| k >= 5)));
        assert_eq!(
            gs.iter().filter(|g| g.girth().is_none()).count(),
            common::TREE_COUNTS[n - 1]
        );
    }
}

/// Canonical forms separate isomorphism classes exactly: on every labeled
/// graph with n <= 6, the form agrees with the brute-force minimum over all
/// relabelings.
#[test]
fn canonical_form_matches_brute_force() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        let mut classes = std::collections::HashMap::new();
        let mut forms = std::collections::HashMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let brute = perms
                .iter()
                .map(|p| {
                    let mut key = 0u32;
                    for &(a, b) in &edges {
                        let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                        key |= 1 << pairs.iter().position(|&e| e == (x, y)).unwrap();
                    }
                    key
                })
                .min()
                .unwrap();
            let g = Graph::from_edges(n, edges).unwrap();
            let cf = canonical_form(&g).unwrap();
            assert_eq!(
                *classes.entry(brute).or_insert_with(|| cf.clone()),
                cf,
                "n={n} mask={mask}"
            );
            assert_eq!(
                *forms.entry(cf).or_insert(brute),
                brute,
                "n={n} mask={mask}"
            );
            let relabeled = g.relabel(&canonical_labeling(&g).unwrap()).unwrap();
            assert!(is_isomorphic(&g, &relabeled).unwrap());
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
