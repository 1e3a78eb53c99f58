//! Immutable simple undirected graphs with the distance, connectivity, and
//! cycle primitives everything else is built on.
//!
//! Vertices are dense ids `0..n`. A graph is validated once at construction
//! and never mutated afterwards, so it can be shared freely across sweep
//! workers.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Sentinel used internally for "not reached yet" in BFS scratch buffers.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted; adjacency is kept in
/// compressed sparse-row form with sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj_off: Vec<u32>,
    adj: Vec<u32>,
}

impl Graph {
    /// Builds a validated graph. Rejects self-loops, duplicate edges, and
    /// out-of-range endpoints, naming the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            norm.push((a as u32, b as u32));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
            }
        }
        Ok(Self::from_sorted_edges(n, norm))
    }

    /// Construction fast path for callers that guarantee normalized,
    /// duplicate-free input (generators, decoders).
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        let mut deg = vec![0u32; n];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut adj_off = vec![0u32; n + 1];
        for v in 0..n {
            adj_off[v + 1] = adj_off[v] + deg[v];
        }
        let mut cursor: Vec<u32> = adj_off[..n].to_vec();
        let mut adj = vec![0u32; 2 * edges.len()];
        for &(u, v) in &edges {
            adj[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            adj[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        // Edges are sorted, so each neighbor list comes out sorted except for
        // the interleaving of "smaller" endpoints; one pass fixes it.
        for v in 0..n {
            let s = adj_off[v] as usize;
            let e = adj_off[v + 1] as usize;
            adj[s..e].sort_unstable();
        }
        Graph {
            n,
            edges,
            adj_off,
            adj,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub(crate) fn edges_u32(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        let s = self.adj_off[v] as usize;
        let e = self.adj_off[v + 1] as usize;
        &self.adj[s..e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// BFS from `src` into a caller-provided scratch row; `dist` is reset to
    /// the [`UNREACHED`] sentinel. Returns the number of reached vertices.
    pub(crate) fn bfs_into(&self, src: u32, dist: &mut [u32], queue: &mut Vec<u32>) -> usize {
        dist.fill(UNREACHED);
        queue.clear();
        dist[src as usize] = 0;
        queue.push(src);
        let mut head = 0usize;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            for &w in self.neighbors(u as usize) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = du + 1;
                    queue.push(w);
                }
            }
        }
        queue.len()
    }

    /// Unweighted shortest-path distances from `s`.
    pub fn distances_from(&self, s: usize) -> Result<DistanceRow> {
        if s >= self.n {
            return Err(Error::VertexOutOfRange { v: s, n: self.n });
        }
        let mut dist = vec![UNREACHED; self.n];
        let mut queue = Vec::with_capacity(self.n);
        self.bfs_into(s as u32, &mut dist, &mut queue);
        Ok(DistanceRow { source: s, dist })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut dist = vec![UNREACHED; self.n];
        let mut queue = Vec::with_capacity(self.n);
        self.bfs_into(0, &mut dist, &mut queue) == self.n
    }

    /// Articulation points, by iterative depth-first lowpoint search.
    /// Errors on disconnected input.
    pub fn cut_vertices(&self) -> Result<BTreeSet<usize>> {
        if self.n == 0 {
            return Err(Error::Disconnected);
        }
        let n = self.n;
        let mut num = vec![UNREACHED; n];
        let mut low = vec![0u32; n];
        let mut parent = vec![UNREACHED; n];
        let mut cuts = BTreeSet::new();

        // frame: (vertex, index into its neighbor list)
        let mut stack: Vec<(u32, usize)> = Vec::with_capacity(n);
        let mut counter = 0u32;
        let root = 0u32;
        let mut root_children = 0usize;

        num[0] = counter;
        low[0] = counter;
        counter += 1;
        stack.push((root, 0));

        while let Some(&(u, i)) = stack.last() {
            let nbrs = self.neighbors(u as usize);
            if i < nbrs.len() {
                stack.last_mut().expect("nonempty").1 += 1;
                let w = nbrs[i];
                if num[w as usize] == UNREACHED {
                    parent[w as usize] = u;
                    num[w as usize] = counter;
                    low[w as usize] = counter;
                    counter += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[u as usize] {
                    low[u as usize] = low[u as usize].min(num[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if p != root && low[u as usize] >= num[p as usize] {
                        cuts.insert(p as usize);
                    }
                }
            }
        }

        if counter as usize != n {
            return Err(Error::Disconnected);
        }
        if root_children >= 2 {
            cuts.insert(root as usize);
        }
        Ok(cuts)
    }

    /// Cycle-space dimension class, `m - n + 1` for connected graphs.
    pub fn cyclomatic_class(&self) -> Result<CyclomaticClass> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let k = self.size() + 1 - self.n;
        Ok(match k {
            0 => CyclomaticClass::Tree,
            1 => CyclomaticClass::Unicyclic,
            2 => CyclomaticClass::Bicyclic,
            3 => CyclomaticClass::Tricyclic,
            k => CyclomaticClass::Higher(k),
        })
    }

    /// Length of the shortest cycle containing edge `uv`, or `None` when the
    /// edge is a bridge. Computed as `1 + d_{G-uv}(u, v)`.
    pub fn shortest_cycle_through_edge(&self, u: usize, v: usize) -> Result<Option<usize>> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        // BFS from u with the single edge uv masked out.
        let mut dist = vec![UNREACHED; self.n];
        let mut queue = Vec::with_capacity(self.n);
        dist[u] = 0;
        queue.push(u as u32);
        let mut head = 0usize;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let dx = dist[x as usize];
            for &w in self.neighbors(x as usize) {
                if (x as usize == u && w as usize == v) || (x as usize == v && w as usize == u) {
                    continue;
                }
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = dx + 1;
                    queue.push(w);
                }
            }
        }
        Ok(if dist[v] == UNREACHED {
            None
        } else {
            Some(1 + dist[v] as usize)
        })
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::VertexOutOfRange {
                v: perm.len(),
                n: self.n,
            });
        }
        let mapped: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &mapped)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.size(),
            self.edges
        )
    }
}

/// BFS hop counts from a single source. Unreachable vertices carry an
/// explicit marker rather than a magic large value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    source: usize,
    dist: Vec<u32>,
}

impl DistanceRow {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Distance to `v`, or `None` when `v` is unreachable from the source.
    pub fn get(&self, v: usize) -> Option<usize> {
        match self.dist[v] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.dist.iter().map(|&d| match d {
            UNREACHED => None,
            d => Some(d as usize),
        })
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHED)
    }
}

/// Connected graphs classified by cyclomatic number `m - n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclomaticClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Tricyclic,
    Higher(usize),
}

impl fmt::Display for CyclomaticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclomaticClass::Tree => write!(f, "tree"),
            CyclomaticClass::Unicyclic => write!(f, "unicyclic"),
            CyclomaticClass::Bicyclic => write!(f, "bicyclic"),
            CyclomaticClass::Tricyclic => write!(f, "tricyclic"),
            CyclomaticClass::Higher(k) => write!(f, "higher({k})"),
        }
    }
}

/// Convenience constructors used all over the test suites.
pub mod small {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is simple")
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).expect("star is simple")
    }
}
