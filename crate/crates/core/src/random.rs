//! Seeded random graph constructions used by the property and acceptance
//! suites: trees, connected graphs of mixed density, and connected bipartite
//! graphs. All take an explicit RNG, so runs are reproducible.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Random attachment tree on `n` vertices.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::new(n, &edges).expect("attachment tree is simple")
}

/// Connected graph: a random spanning tree plus `extra` additional distinct
/// edges (clamped to the available non-edges).
pub fn random_connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for i in 1..n {
        let u = perm[rng.gen_range(0..i)];
        edges.push((u.min(perm[i]), u.max(perm[i])));
    }
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let max_extra = n * (n - 1) / 2 - edges.len();
    let mut added = 0usize;
    let target = extra.min(max_extra);
    while added < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if present.insert(e) {
            edges.push(e);
            added += 1;
        }
    }
    Graph::new(n, &edges).expect("tree plus distinct non-edges is simple")
}

/// Connected bipartite graph: vertices `0..split` on one side, the rest on
/// the other; spanning tree alternating sides plus extra cross edges.
pub fn random_connected_bipartite<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    assert!(n >= 2);
    let split = rng.gen_range(1..n);
    let side = |v: usize| v < split;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Attach each vertex (in mixed order) to an earlier vertex of the other
    // side; seed with one cross edge.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let first_left = *order.iter().find(|&&v| side(v)).expect("split >= 1");
    let first_right = *order.iter().find(|&&v| !side(v)).expect("split < n");
    edges.push((first_left.min(first_right), first_left.max(first_right)));
    let mut placed = vec![first_left, first_right];
    for &v in &order {
        if v == first_left || v == first_right {
            continue;
        }
        let others: Vec<usize> = placed
            .iter()
            .copied()
            .filter(|&w| side(w) != side(v))
            .collect();
        let w = others[rng.gen_range(0..others.len())];
        edges.push((v.min(w), v.max(w)));
        placed.push(v);
    }
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let max_extra = split * (n - split) - edges.len();
    let target = extra.min(max_extra);
    let mut added = 0usize;
    while added < target {
        let u = rng.gen_range(0..split);
        let v = rng.gen_range(split..n);
        let e = (u.min(v), u.max(v));
        if present.insert(e) {
            edges.push(e);
            added += 1;
        }
    }
    Graph::new(n, &edges).expect("bipartite construction is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constructions_have_the_advertised_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 5, 17, 40] {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.size(), n - 1);
            assert!(t.is_connected());

            let g = random_connected(n, n, &mut rng);
            assert!(g.is_connected());
            assert!(g.size() >= n - 1);

            let b = random_connected_bipartite(n, n, &mut rng);
            assert!(b.is_connected());
            // 2-colorable by construction: check via BFS parity.
            let row = b.distances_from(0).unwrap();
            for (u, v) in b.edges() {
                let du = row.get(u).unwrap();
                let dv = row.get(v).unwrap();
                assert_ne!(du % 2, dv % 2);
            }
        }
    }
}
