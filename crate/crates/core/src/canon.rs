//! Canonical labeling and isomorphism certificates.
//!
//! A [`Certificate`] is a canonical graph6 string: the minimum graph6
//! encoding over an invariantly-constructed family of vertex orderings,
//! found by individualization-refinement with equitable partitions. Equal
//! certificates hold exactly for isomorphic graphs.
//!
//! The search works on u64 adjacency masks, so it is limited to 64 vertices;
//! the public entry point additionally enforces a configurable order bound
//! because certificates are only meant for dedup-scale work. The engine is
//! called millions of times by the brute-force enumerator, so the inner loop
//! keeps the partition flat (one vertex order plus cell boundaries) and
//! reuses scratch buffers instead of allocating per refinement pass.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order bound for certificate computation.
pub const DEFAULT_CERT_BOUND: usize = 16;

/// Hard limit imposed by the u64 adjacency-mask representation.
pub const CERT_HARD_LIMIT: usize = 64;

/// Canonical graph6 string of a graph. Equal certificates <=> isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Certificate under the default dedup-scale bound.
pub fn certificate(g: &Graph) -> Result<Certificate> {
    certificate_bounded(g, DEFAULT_CERT_BOUND)
}

/// Certificate with an explicit order bound (still capped at 64 vertices).
pub fn certificate_bounded(g: &Graph, bound: usize) -> Result<Certificate> {
    let n = g.order();
    let eff = bound.min(CERT_HARD_LIMIT);
    if n > eff {
        return Err(Error::CertificateBound { n, bound: eff });
    }
    Ok(Certificate(canonical_g6(&adjacency_masks(g), n)))
}

/// Isomorphism test via certificates (same bound rules as `certificate_bounded`).
pub fn are_isomorphic(a: &Graph, b: &Graph, bound: usize) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(certificate_bounded(a, bound)? == certificate_bounded(b, bound)?)
}

/// The canonically relabeled copy of `g` (callers must respect the bound
/// themselves; this is the raw engine).
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    assert!(n <= CERT_HARD_LIMIT);
    if n <= 1 {
        return g.clone();
    }
    let order = canonical_order(&adjacency_masks(g), n);
    let mut perm = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v as usize] = pos;
    }
    g.relabel(&perm).expect("permutation relabel is valid")
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Canonical graph6 string straight from adjacency masks. This is the entry
/// point the enumerator uses, bypassing `Graph` construction entirely.
pub(crate) fn canonical_g6(adj: &[u64], n: usize) -> String {
    assert!(n <= CERT_HARD_LIMIT);
    if n <= 1 {
        // No body bits.
        return String::from_utf8(vec![n as u8 + 63]).expect("ascii");
    }
    let mut search = Search::new(adj, n);
    search.run();
    let pairs = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + 63);
    let bit = |i: usize| (search.best_bits[i / 64] >> (63 - i % 64)) & 1;
    let mut i = 0usize;
    while i < pairs {
        let mut chunk = 0u8;
        for k in 0..6 {
            chunk <<= 1;
            if i + k < pairs && bit(i + k) == 1 {
                chunk |= 1;
            }
        }
        out.push(chunk + 63);
        i += 6;
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Canonical adjacency bits packed into a single word, for orders whose
/// upper triangle fits 64 bits (n <= 11). Same order as certificate strings.
pub(crate) fn canonical_bits_word(adj: &[u64], n: usize) -> u64 {
    debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
    if n <= 1 {
        return 0;
    }
    let mut search = Search::new(adj, n);
    search.run();
    search.best_bits[0]
}

/// Canonical vertex order (position `i` holds the vertex placed at `i`).
fn canonical_order(adj: &[u64], n: usize) -> Vec<u32> {
    if n <= 1 {
        return (0..n as u32).collect();
    }
    let mut search = Search::new(adj, n);
    search.run();
    search.best_order
}

/// Ordered partition: one flat vertex order plus `(start, len)` cells.
type Cells = Vec<(u16, u16)>;

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    have_best: bool,
    best_bits: Vec<u64>,
    best_order: Vec<u32>,
    masks: Vec<u64>,
    counts: [u8; CERT_HARD_LIMIT],
    prefix: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], n: usize) -> Self {
        let words = (n * (n - 1) / 2).div_ceil(64);
        Search {
            n,
            adj,
            have_best: false,
            best_bits: vec![0; words],
            best_order: Vec::new(),
            masks: Vec::new(),
            counts: [0; CERT_HARD_LIMIT],
            prefix: vec![0; words],
        }
    }

    fn run(&mut self) {
        let mut order: Vec<u32> = (0..self.n as u32).collect();
        let mut cells: Cells = vec![(0, self.n as u16)];
        self.refine(&mut order, &mut cells);
        self.descend(order, cells);
    }

    /// Equitable refinement, in place. Cells are split by neighbor counts
    /// against a snapshot of the current cells, sub-cells ordered by count;
    /// repeated until stable. The construction never consults vertex labels,
    /// so isomorphic graphs evolve identically.
    fn refine(&mut self, order: &mut [u32], cells: &mut Cells) {
        loop {
            self.masks.clear();
            for &(s, l) in cells.iter() {
                let mut m = 0u64;
                for &v in &order[s as usize..(s + l) as usize] {
                    m |= 1 << v;
                }
                self.masks.push(m);
            }
            let mut changed = false;
            for wi in 0..self.masks.len() {
                let wmask = self.masks[wi];
                let mut ci = 0usize;
                while ci < cells.len() {
                    let (s, l) = cells[ci];
                    if l < 2 {
                        ci += 1;
                        continue;
                    }
                    let slice = &mut order[s as usize..(s + l) as usize];
                    let first = (self.adj[slice[0] as usize] & wmask).count_ones() as u8;
                    let mut uniform = true;
                    for &v in slice.iter() {
                        let c = (self.adj[v as usize] & wmask).count_ones() as u8;
                        self.counts[v as usize] = c;
                        uniform &= c == first;
                    }
                    if uniform {
                        ci += 1;
                        continue;
                    }
                    slice.sort_unstable_by_key(|&v| self.counts[v as usize]);
                    let mut subs: Vec<(u16, u16)> = Vec::with_capacity(4);
                    let mut run_start = 0u16;
                    for i in 1..l {
                        if self.counts[slice[i as usize] as usize]
                            != self.counts[slice[run_start as usize] as usize]
                        {
                            subs.push((s + run_start, i - run_start));
                            run_start = i;
                        }
                    }
                    subs.push((s + run_start, l - run_start));
                    let added = subs.len();
                    cells.splice(ci..ci + 1, subs);
                    changed = true;
                    ci += added;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn descend(&mut self, order: Vec<u32>, cells: Cells) {
        // Bits among the leading singleton cells are already decided for
        // every leaf below this node; prune against the incumbent.
        let fixed = cells.iter().take_while(|&&(_, l)| l == 1).count();
        if self.have_best {
            let nbits = fixed * fixed.saturating_sub(1) / 2;
            self.pack_prefix(&order[..fixed]);
            if cmp_bits(&self.prefix, &self.best_bits, nbits) == std::cmp::Ordering::Greater {
                return;
            }
        }

        if fixed == self.n {
            self.pack_prefix(&order);
            if !self.have_best || self.prefix < self.best_bits {
                self.best_bits.copy_from_slice(&self.prefix);
                self.best_order = order;
                self.have_best = true;
            }
            return;
        }

        let target = cells
            .iter()
            .position(|&(_, l)| l > 1)
            .expect("non-discrete partition has a splittable cell");
        let (s, l) = cells[target];
        let candidates = self.dedup_twins(&order[s as usize..(s + l) as usize]);
        for v in candidates {
            let mut child_order = order.clone();
            let pos = child_order[s as usize..(s + l) as usize]
                .iter()
                .position(|&w| w == v)
                .expect("candidate is in the cell");
            child_order.swap(s as usize, s as usize + pos);
            let mut child_cells = cells.clone();
            child_cells.splice(target..target + 1, [(s, 1), (s + 1, l - 1)]);
            self.refine(&mut child_order, &mut child_cells);
            self.descend(child_order, child_cells);
        }
    }

    /// Drops candidates whose swap with an earlier candidate is an
    /// automorphism (identical neighborhoods outside the pair), which keeps
    /// symmetric graphs such as complete graphs tractable.
    fn dedup_twins(&self, cell: &[u32]) -> Vec<u32> {
        let mut keep: Vec<u32> = Vec::with_capacity(cell.len());
        'outer: for &v in cell {
            for &u in &keep {
                let mask = !((1u64 << u) | (1u64 << v));
                if self.adj[u as usize] & mask == self.adj[v as usize] & mask {
                    continue 'outer;
                }
            }
            keep.push(v);
        }
        keep
    }

    /// Packs the adjacency bits of the ordered prefix in graph6 column-major
    /// order (most significant bit of each word first) into `self.prefix`.
    fn pack_prefix(&mut self, order: &[u32]) {
        self.prefix.fill(0);
        let mut idx = 0usize;
        for j in 1..order.len() {
            let row = self.adj[order[j] as usize];
            for &vi in &order[..j] {
                if row >> vi & 1 == 1 {
                    self.prefix[idx / 64] |= 1u64 << (63 - idx % 64);
                }
                idx += 1;
            }
        }
    }
}

fn cmp_bits(a: &[u64], b: &[u64], nbits: usize) -> std::cmp::Ordering {
    let words = nbits / 64;
    for i in 0..words {
        match a[i].cmp(&b[i]) {
            std::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    let rem = nbits % 64;
    if rem > 0 {
        let mask = !0u64 << (64 - rem);
        return (a[words] & mask).cmp(&(b[words] & mask));
    }
    std::cmp::Ordering::Equal
}
