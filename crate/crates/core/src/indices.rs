//! Exact distance-based indices: Wiener, Szeged, and revised Szeged.
//!
//! Every quantity is an integer. The revised Szeged index is carried in
//! quarter units (`sz4 = 4 * Sz*`): each edge contributes
//! `(n_u + n_0/2)(n_v + n_0/2)`, which is a multiple of 1/4, so `sz4` is
//! exact. Two independent arithmetic routes are kept side by side:
//!
//! * direct: `sz4 = sum_e (2 n_u + n_0)(2 n_v + n_0)`
//! * identity: `sz4 = m n^2 - sum_e delta(e)^2` with `delta = |n_u - n_v|`
//!
//! and [`index_report`] refuses to return if they disagree.

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHED};

/// Largest order accepted by the index routines: keeps `n^2 * m` comfortably
/// inside i64 and rejects inputs the exact engine was never sized for.
pub const MAX_ORDER: usize = 10_000;

/// Partition of the vertices relative to an edge `uv`: strictly closer to
/// `u`, strictly closer to `v`, or equidistant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePartition {
    pub edge: (usize, usize),
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

impl EdgePartition {
    pub fn delta(&self) -> i64 {
        (self.n_u as i64 - self.n_v as i64).abs()
    }
}

/// All indices of one graph, plus the per-edge delta profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub wiener: i64,
    pub szeged: i64,
    /// Revised Szeged index in quarter units (`4 * Sz*`).
    pub sz_star_q: i64,
    pub delta_sq_sum: i64,
    /// Sorted multiset of `delta(e)` over the edges.
    pub delta_profile: Vec<i64>,
}

impl IndexReport {
    /// `Sz*` rendered as an exact decimal (quarter units have at most two
    /// fraction digits).
    pub fn sz_star_display(&self) -> String {
        format_quarters(self.sz_star_q)
    }
}

/// Renders a quarter-unit integer as `v/4` with `.0`, `.25`, `.5`, or `.75`.
pub fn format_quarters(q: i64) -> String {
    let whole = q.div_euclid(4);
    let frac = q.rem_euclid(4);
    match frac {
        0 => format!("{whole}.0"),
        1 => format!("{whole}.25"),
        2 => format!("{whole}.5"),
        _ => format!("{whole}.75"),
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.order(),
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Partition counts for edge `(u, v)` from two breadth-first rows.
pub fn edge_partition(g: &Graph, u: usize, v: usize) -> Result<EdgePartition> {
    check_order(g)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotInGraph(u, v));
    }
    let du = g.distances_from(u)?;
    let dv = g.distances_from(v)?;
    if !du.all_reachable() {
        return Err(Error::Disconnected);
    }
    // Counts are relative to the requested (u, v) orientation.
    let mut part = EdgePartition {
        edge: (u, v),
        n_u: 0,
        n_v: 0,
        n_0: 0,
    };
    for w in 0..g.order() {
        let a = du.get(w).expect("connected");
        let b = dv.get(w).expect("connected");
        match a.cmp(&b) {
            std::cmp::Ordering::Less => part.n_u += 1,
            std::cmp::Ordering::Greater => part.n_v += 1,
            std::cmp::Ordering::Equal => part.n_0 += 1,
        }
    }
    Ok(part)
}

/// `delta(e) = |n_u(e) - n_v(e)|`.
pub fn delta(g: &Graph, u: usize, v: usize) -> Result<i64> {
    Ok(edge_partition(g, u, v)?.delta())
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<i64> {
    check_order(g)?;
    let n = g.order();
    let mut dist = vec![UNREACHED; n];
    let mut queue = Vec::with_capacity(n);
    let mut twice = 0i64;
    for s in 0..n {
        if g.bfs_into(s as u32, &mut dist, &mut queue) != n {
            return Err(Error::Disconnected);
        }
        twice += dist.iter().map(|&d| d as i64).sum::<i64>();
    }
    Ok(twice / 2)
}

/// `Sz(G) = sum over edges of n_u * n_v`.
pub fn szeged(g: &Graph) -> Result<i64> {
    check_order(g)?;
    let mut engine = IndexEngine::new();
    let mut total = 0i64;
    engine.for_each_partition(g, |p| total += p.n_u as i64 * p.n_v as i64)?;
    Ok(total)
}

/// Direct route: `4 * Sz*(G) = sum over edges of (2 n_u + n_0)(2 n_v + n_0)`.
pub fn revised_szeged_q(g: &Graph) -> Result<i64> {
    check_order(g)?;
    let mut engine = IndexEngine::new();
    let mut total = 0i64;
    engine.for_each_partition(g, |p| {
        total += (2 * p.n_u as i64 + p.n_0 as i64) * (2 * p.n_v as i64 + p.n_0 as i64);
    })?;
    Ok(total)
}

/// Identity route: `4 * Sz*(G) = m n^2 - sum over edges of delta(e)^2`.
pub fn revised_szeged_q_via_identity(g: &Graph) -> Result<i64> {
    check_order(g)?;
    let mut engine = IndexEngine::new();
    let mut dsq = 0i64;
    engine.for_each_partition(g, |p| {
        let d = p.delta();
        dsq += d * d;
    })?;
    let n = g.order() as i64;
    let m = g.size() as i64;
    Ok(m * n * n - dsq)
}

/// `4 * Sz*(F_n)` from the closed form: `n^3 + 2n^2 - 16` for even `n`,
/// `n^3 + 2n^2 - 18` for odd `n`.
pub fn fn_closed_form_q(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::ClosedFormOrder(n));
    }
    let n = n as i64;
    let base = n * n * n + 2 * n * n;
    Ok(if n % 2 == 0 { base - 16 } else { base - 18 })
}

/// Computes every index, running both revised-Szeged routes and demanding
/// exact agreement.
pub fn index_report(g: &Graph) -> Result<IndexReport> {
    check_order(g)?;
    let direct = revised_szeged_q(g)?;
    let identity = revised_szeged_q_via_identity(g)?;
    if direct != identity {
        return Err(Error::SzStarMismatch { direct, identity });
    }

    let mut engine = IndexEngine::new();
    let mut szeged_total = 0i64;
    let mut delta_profile = Vec::with_capacity(g.size());
    engine.for_each_partition(g, |p| {
        szeged_total += p.n_u as i64 * p.n_v as i64;
        delta_profile.push(p.delta());
    })?;
    delta_profile.sort_unstable();
    let delta_sq_sum = delta_profile.iter().map(|d| d * d).sum();

    Ok(IndexReport {
        wiener: wiener(g)?,
        szeged: szeged_total,
        sz_star_q: direct,
        delta_sq_sum,
        delta_profile,
    })
}

/// Per-edge partitions of a connected graph, in edge order.
pub fn edge_partitions(g: &Graph) -> Result<Vec<EdgePartition>> {
    check_order(g)?;
    let mut engine = IndexEngine::new();
    let mut out = Vec::with_capacity(g.size());
    engine.for_each_partition(g, |p| out.push(p))?;
    Ok(out)
}

/// Edge count above which partitions are computed from an all-pairs distance
/// cache (n breadth-first rows) instead of two rows per edge.
pub const DEFAULT_APSP_EDGE_THRESHOLD: usize = 16;

/// Orders above which the all-pairs cache would not fit a sane memory
/// budget; per-edge rows are used regardless of the threshold.
const APSP_MAX_N: usize = 4096;

/// Reusable scratch for bulk partition computation. One engine per worker:
/// the buffers make repeated evaluation allocation-free, which is what the
/// sweep hot loop needs.
pub struct IndexEngine {
    apsp_edge_threshold: usize,
    dist_all: Vec<u32>,
    dist_u: Vec<u32>,
    dist_v: Vec<u32>,
    queue: Vec<u32>,
}

impl Default for IndexEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl IndexEngine {
    pub fn new() -> Self {
        Self::with_threshold(DEFAULT_APSP_EDGE_THRESHOLD)
    }

    pub fn with_threshold(apsp_edge_threshold: usize) -> Self {
        IndexEngine {
            apsp_edge_threshold,
            dist_all: Vec::new(),
            dist_u: Vec::new(),
            dist_v: Vec::new(),
            queue: Vec::new(),
        }
    }

    /// Streams the partition of every edge of a connected graph into `f`.
    pub fn for_each_partition<F: FnMut(EdgePartition)>(
        &mut self,
        g: &Graph,
        mut f: F,
    ) -> Result<()> {
        let n = g.order();
        if n == 0 || (n > 1 && g.size() == 0) {
            return Err(Error::Disconnected);
        }
        if g.size() > self.apsp_edge_threshold && n <= APSP_MAX_N {
            self.partitions_apsp(g, &mut f)
        } else {
            self.partitions_per_edge(g, &mut f)
        }
    }

    /// Hot-path variant: direct-route `sz4` and `sum delta^2` in one pass.
    /// The caller gets both sides of the identity for free, so persisted
    /// records can be cross-checked later.
    pub fn sz4_and_dsq(&mut self, g: &Graph) -> Result<(i64, i64)> {
        let mut sz4 = 0i64;
        let mut dsq = 0i64;
        self.for_each_partition(g, |p| {
            sz4 += (2 * p.n_u as i64 + p.n_0 as i64) * (2 * p.n_v as i64 + p.n_0 as i64);
            let d = p.delta();
            dsq += d * d;
        })?;
        Ok((sz4, dsq))
    }

    fn partitions_apsp<F: FnMut(EdgePartition)>(&mut self, g: &Graph, f: &mut F) -> Result<()> {
        let n = g.order();
        self.dist_all.resize(n * n, 0);
        for s in 0..n {
            let row = &mut self.dist_all[s * n..(s + 1) * n];
            if g.bfs_into(s as u32, row, &mut self.queue) != n {
                return Err(Error::Disconnected);
            }
        }
        for &(u, v) in g.edges_u32() {
            let row_u = &self.dist_all[u as usize * n..u as usize * n + n];
            let row_v = &self.dist_all[v as usize * n..v as usize * n + n];
            f(count_partition(g, u as usize, v as usize, row_u, row_v));
        }
        Ok(())
    }

    fn partitions_per_edge<F: FnMut(EdgePartition)>(&mut self, g: &Graph, f: &mut F) -> Result<()> {
        let n = g.order();
        self.dist_u.resize(n, 0);
        self.dist_v.resize(n, 0);
        for &(u, v) in g.edges_u32() {
            if g.bfs_into(u, &mut self.dist_u, &mut self.queue) != n {
                return Err(Error::Disconnected);
            }
            g.bfs_into(v, &mut self.dist_v, &mut self.queue);
            f(count_partition(
                g,
                u as usize,
                v as usize,
                &self.dist_u,
                &self.dist_v,
            ));
        }
        Ok(())
    }
}

fn count_partition(g: &Graph, u: usize, v: usize, du: &[u32], dv: &[u32]) -> EdgePartition {
    let mut n_u = 0usize;
    let mut n_v = 0usize;
    let mut n_0 = 0usize;
    for w in 0..g.order() {
        match du[w].cmp(&dv[w]) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => n_0 += 1,
        }
    }
    EdgePartition {
        edge: (u, v),
        n_u,
        n_v,
        n_0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;

    #[test]
    fn partition_examples() {
        let p3 = small::path(3);
        let p = edge_partition(&p3, 0, 1).unwrap();
        assert_eq!((p.n_u, p.n_v, p.n_0), (1, 2, 0));

        let c5 = small::cycle(5);
        let p = edge_partition(&c5, 0, 1).unwrap();
        assert_eq!((p.n_u, p.n_v, p.n_0), (2, 2, 1));

        let k4 = small::complete(4);
        let p = edge_partition(&k4, 0, 1).unwrap();
        assert_eq!((p.n_u, p.n_v, p.n_0), (1, 1, 2));

        assert_eq!(edge_partition(&p3, 0, 2), Err(Error::EdgeNotInGraph(0, 2)));
        let disc = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_partition(&disc, 0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn partition_orientation_follows_arguments() {
        let p3 = small::path(3);
        let p = edge_partition(&p3, 1, 0).unwrap();
        assert_eq!((p.n_u, p.n_v), (2, 1));
    }

    #[test]
    fn delta_examples() {
        let c4 = small::cycle(4);
        assert_eq!(delta(&c4, 0, 1).unwrap(), 0);

        // Pendant edge in a small lollipop: delta = n - 2.
        let lolli = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(delta(&lolli, 3, 4).unwrap(), 5 - 2);
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener(&small::path(3)).unwrap(), 4);
        assert_eq!(wiener(&small::complete(4)).unwrap(), 6);
        assert_eq!(wiener(&small::cycle(4)).unwrap(), 8);
    }

    #[test]
    fn szeged_examples() {
        assert_eq!(szeged(&small::cycle(4)).unwrap(), 16);
        assert_eq!(szeged(&small::complete(4)).unwrap(), 6);
        assert_eq!(szeged(&small::star(3)).unwrap(), 9);
    }

    #[test]
    fn revised_szeged_examples() {
        assert_eq!(revised_szeged_q(&small::complete(4)).unwrap(), 96);
        assert_eq!(revised_szeged_q(&small::cycle(5)).unwrap(), 125);
        assert_eq!(
            revised_szeged_q_via_identity(&small::complete(4)).unwrap(),
            96
        );
        assert_eq!(revised_szeged_q_via_identity(&small::star(3)).unwrap(), 36);
        assert_eq!(
            revised_szeged_q_via_identity(&small::cycle(5)).unwrap(),
            125
        );
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(fn_closed_form_q(30).unwrap(), 28784);
        assert_eq!(fn_closed_form_q(29).unwrap(), 26053);
        assert_eq!(fn_closed_form_q(12).unwrap(), 2000);
        assert_eq!(fn_closed_form_q(2), Err(Error::ClosedFormOrder(2)));
    }

    #[test]
    fn report_examples() {
        let r = index_report(&small::complete(4)).unwrap();
        assert_eq!(
            (r.wiener, r.szeged, r.sz_star_q, r.delta_sq_sum),
            (6, 6, 96, 0)
        );

        let r = index_report(&small::path(3)).unwrap();
        assert_eq!(
            (r.wiener, r.szeged, r.sz_star_q, r.delta_sq_sum),
            (4, 4, 16, 2)
        );

        let r = index_report(&small::cycle(4)).unwrap();
        assert_eq!(
            (r.wiener, r.szeged, r.sz_star_q, r.delta_sq_sum),
            (8, 16, 64, 0)
        );
        assert_eq!(r.sz_star_display(), "16.0");
    }

    #[test]
    fn quarter_formatting() {
        assert_eq!(format_quarters(96), "24.0");
        assert_eq!(format_quarters(125), "31.25");
        assert_eq!(format_quarters(26053), "6513.25");
        assert_eq!(format_quarters(151), "37.75");
        assert_eq!(format_quarters(2), "0.5");
    }

    #[test]
    fn order_guard() {
        let g = Graph::new(MAX_ORDER + 1, &[]).unwrap();
        assert!(matches!(wiener(&g), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn edgeless_graphs_are_disconnected() {
        let g = Graph::new(2, &[]).unwrap();
        assert_eq!(revised_szeged_q(&g), Err(Error::Disconnected));
        assert_eq!(szeged(&g), Err(Error::Disconnected));
        assert_eq!(wiener(&g), Err(Error::Disconnected));

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(wiener(&k1).unwrap(), 0);
        assert_eq!(revised_szeged_q(&k1).unwrap(), 0);
    }
}
