//! Exhaustive minimum spanning trees of K5.

use rii_core::hyperbolic_geometry::BridgeGraph;

/// Edges of K5 in lexicographic order.
pub const K5_EDGES: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Lightest spanning tree of K5 by enumerating every 4-edge subset.
pub fn brute_force_mst(g: &BridgeGraph) -> (Vec<usize>, f64, usize) {
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut trees = 0;
    for mask in 0u32..1 << 10 {
        if mask.count_ones() != 4 {
            continue;
        }
        let chosen: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
        let mut label = [0, 1, 2, 3, 4];
        let mut acyclic = true;
        for &i in &chosen {
            let (u, v) = K5_EDGES[i];
            let (a, b) = (label[u], label[v]);
            if a == b {
                acyclic = false;
                break;
            }
            label.iter_mut().filter(|x| **x == b).for_each(|x| *x = a);
        }
        if !acyclic {
            continue;
        }
        trees += 1;
        let total: f64 = chosen
            .iter()
            .map(|&i| g.length(K5_EDGES[i].0, K5_EDGES[i].1))
            .sum();
        if best.as_ref().is_none_or(|(t, _)| total < *t) {
            best = Some((total, chosen));
        }
    }
    let (total, chosen) = best.unwrap();
    (chosen, total, trees)
}
