//! Independent oracles for the integration suites. Everything here computes
//! from first definitions (Floyd-Warshall distances, permutation search) so
//! it shares no code path with the implementations under test.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use szeged_core::Graph;

pub const INF: usize = usize::MAX / 4;

/// All-pairs distances by Floyd-Warshall; deliberately not BFS.
pub fn fw_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn oracle_is_connected(g: &Graph) -> bool {
    let d = fw_distances(g);
    d[0].iter().all(|&x| x < INF)
}

/// Partition counts straight from the defining sets.
pub fn oracle_partition(d: &[Vec<usize>], u: usize, v: usize) -> (usize, usize, usize) {
    let mut n_u = 0;
    let mut n_v = 0;
    let mut n_0 = 0;
    for w in 0..d.len() {
        match d[u][w].cmp(&d[v][w]) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => n_0 += 1,
        }
    }
    (n_u, n_v, n_0)
}

pub fn oracle_wiener(g: &Graph) -> i64 {
    let d = fw_distances(g);
    let n = g.order();
    let mut total = 0i64;
    for u in 0..n {
        for v in u + 1..n {
            total += d[u][v] as i64;
        }
    }
    total
}

pub fn oracle_szeged(g: &Graph) -> i64 {
    let d = fw_distances(g);
    g.edges()
        .map(|(u, v)| {
            let (nu, nv, _) = oracle_partition(&d, u, v);
            nu as i64 * nv as i64
        })
        .sum()
}

/// Quarter units of the revised Szeged index, straight from the definition.
pub fn oracle_sz4(g: &Graph) -> i64 {
    let d = fw_distances(g);
    g.edges()
        .map(|(u, v)| {
            let (nu, nv, n0) = oracle_partition(&d, u, v);
            (2 * nu as i64 + n0 as i64) * (2 * nv as i64 + n0 as i64)
        })
        .sum()
}

pub fn oracle_delta_sq_sum(g: &Graph) -> i64 {
    let d = fw_distances(g);
    g.edges()
        .map(|(u, v)| {
            let (nu, nv, _) = oracle_partition(&d, u, v);
            let delta = nu as i64 - nv as i64;
            delta * delta
        })
        .sum()
}

/// Exhaustive isomorphism test over all vertex permutations; usable to n=8.
pub fn iso_exhaustive(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let b_edges: std::collections::BTreeSet<(usize, usize)> = b.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |perm| {
        a.edges().all(|(u, v)| {
            let (x, y) = (perm[u], perm[v]);
            b_edges.contains(&(x.min(y), x.max(y)))
        })
    })
}

fn permute(perm: &mut Vec<usize>, k: usize, accept: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return accept(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute(perm, k + 1, accept) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Brute-force 2-connectivity: no vertex whose removal disconnects.
pub fn oracle_two_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    if !oracle_is_connected(g) {
        return false;
    }
    for cut in 0..n {
        // Rebuild without `cut` and check connectivity of the rest.
        let keep: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
        let index: std::collections::HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| u != cut && v != cut)
            .map(|(u, v)| (index[&u], index[&v]))
            .collect();
        let h = Graph::new(n - 1, &edges).expect("induced subgraph is simple");
        if !oracle_is_connected(&h) {
            return false;
        }
    }
    true
}

/// Deterministic pseudo-random permutation of 0..n from a seed.
pub fn seeded_permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    perm
}
