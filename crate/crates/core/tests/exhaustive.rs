//! Invariants checked on every labeled graph up to six vertices against
//! brute-force reimplementations.

use std::collections::{BTreeSet, HashSet};

use heavy_core::families::{labeled_graph, pair_count};
use heavy_core::pattern::{induced_copy_sets, is_free};
use heavy_core::{make_pattern, Graph, PatternKind, VertexSet};

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| (0..1u64 << pair_count(n)).map(move |bits| labeled_graph(n, bits)))
}

/// Adjacency of `g` restricted to `order`, as pair bits.
fn code(g: &Graph, order: &[usize]) -> u64 {
    let mut bits = 0;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Every labeling of `g`.
fn labelings(g: &Graph) -> HashSet<u64> {
    let vs: Vec<usize> = (0..g.order()).collect();
    permutations(&vs).iter().map(|p| code(g, p)).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

fn naive_copies(host: &Graph, codes: &HashSet<u64>, k: usize) -> BTreeSet<Vec<usize>> {
    subsets(host.order(), k).into_iter().filter(|s| codes.contains(&code(host, s))).collect()
}

fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    let codes = labelings(pattern);
    subsets(host.order(), pattern.order()).iter().any(|s| codes.contains(&code(host, s)))
}

const CATALOG: &[&str] =
    &["P3", "P4", "P5", "P6", "C3", "C4", "C5", "K4", "claw", "Z1", "Z2", "Z3", "B", "N", "W", "H", "K112"];

fn catalog() -> Vec<(String, Graph)> {
    CATALOG
        .iter()
        .map(|s| {
            let kind: PatternKind = s.parse().unwrap();
            (s.to_string(), make_pattern(kind).unwrap().graph)
        })
        .collect()
}

#[test]
fn induced_copies_match_subset_filtering() {
    let patterns: Vec<(String, Graph, HashSet<u64>)> = catalog()
        .into_iter()
        .map(|(name, g)| {
            let codes = labelings(&g);
            (name, g, codes)
        })
        .collect();
    for host in all_graphs(6) {
        for (name, p, codes) in &patterns {
            let fast: BTreeSet<Vec<usize>> = induced_copy_sets(&host, p).into_iter().map(VertexSet::to_vec).collect();
            assert_eq!(fast, naive_copies(&host, codes, p.order()), "{name} in {}", host.to_graph6());
        }
    }
}

#[test]
fn two_connectivity_matches_vertex_deletion() {
    for g in all_graphs(6) {
        let n = g.order();
        let brute = n >= 3 && g.is_connected() && (0..n).all(|v| g.is_connected_within(g.vertices().without(v)));
        assert_eq!(g.is_two_connected(), brute, "{}", g.to_graph6());
    }
}

#[test]
fn maximal_cliques_cover_edges_without_nesting() {
    for g in all_graphs(6) {
        let cliques = g.maximal_cliques();
        for c in &cliques {
            assert!(g.is_clique(*c));
        }
        for (i, a) in cliques.iter().enumerate() {
            for b in &cliques[i + 1..] {
                assert!(!a.is_subset(*b) && !b.is_subset(*a));
            }
        }
        for (u, v) in g.edges() {
            assert!(cliques.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }
}

#[test]
fn distance_one_means_adjacent() {
    for g in all_graphs(5) {
        for u in 0..g.order() {
            for v in 0..g.order() {
                let d = g.distance(u, v).unwrap();
                assert_eq!(d == Some(1), g.has_edge(u, v));
            }
        }
    }
}

#[test]
fn connected_p3_free_graphs_are_complete() {
    let p3 = make_pattern(PatternKind::Path(3)).unwrap();
    for g in all_graphs(6) {
        if g.is_connected() && is_free(&g, &p3) {
            assert!(g.is_clique(g.vertices()), "{}", g.to_graph6());
        }
    }
}

/// Pairs (s, t) with s an induced subgraph of t, computed by brute force.
fn containment(catalog: &[(String, Graph)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, (_, s)) in catalog.iter().enumerate() {
        for (j, (_, t)) in catalog.iter().enumerate() {
            if i != j && s.order() <= t.order() && naive_contains(t, s) {
                out.push((i, j));
            }
        }
    }
    out
}

#[test]
fn freeness_follows_induced_containment() {
    let cat = catalog();
    let pairs = containment(&cat);
    let named: HashSet<(&str, &str)> = pairs.iter().map(|&(i, j)| (cat[i].0.as_str(), cat[j].0.as_str())).collect();
    for expected in &[("P4", "P5"), ("P5", "P6"), ("Z1", "Z2"), ("Z2", "Z3"), ("B", "W"), ("B", "N"), ("P3", "claw")] {
        assert!(named.contains(expected), "{expected:?}");
    }
    for absent in [("claw", "N"), ("claw", "K112"), ("P4", "Z1")] {
        assert!(!named.contains(&absent), "{absent:?}");
    }
    let specs: Vec<_> = CATALOG.iter().map(|s| make_pattern(s.parse().unwrap()).unwrap()).collect();
    for g in all_graphs(6) {
        let free: Vec<bool> = specs.iter().map(|p| is_free(&g, p)).collect();
        for &(i, j) in &pairs {
            assert!(!free[i] || free[j], "{}-free but not {}-free: {}", cat[i].0, cat[j].0, g.to_graph6());
        }
    }
}
