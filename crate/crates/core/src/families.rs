//! Generators for pendant-free tricyclic graphs.
//!
//! Every pendant-free tricyclic graph is a subdivision of a connected base
//! multigraph with cyclomatic number 3 and minimum degree 3 (suppress the
//! degree-2 vertices to recover the base). The bases are enumerated
//! programmatically, not hard-coded: all multigraphs on at most four
//! vertices with `m = n + 2`, filtered and deduplicated up to isomorphism.
//! Four of them are loop-free and 2-connected; their parametric subdivisions
//! are the Theta1..Theta4 families.
//!
//! Assignments of path lengths to base edges are emitted in a canonical form
//! (lexicographic minimum over the base's automorphism action, lengths sorted
//! within each parallel class), so each isomorphism class of subdivisions
//! appears exactly once per base.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximal group of parallel base edges (or loops at one vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotClass {
    pub u: usize,
    pub v: usize,
    /// Index of the first slot of this class in the base's slot list.
    pub start: usize,
    pub count: usize,
}

impl SlotClass {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Connected multigraph with cyclomatic number 3 and minimum degree 3.
/// Loops count one edge and contribute two to their vertex's degree.
#[derive(Debug, Clone)]
pub struct BaseMultigraph {
    id: String,
    n: usize,
    slots: Vec<(u8, u8)>,
    classes: Vec<SlotClass>,
    /// Non-identity vertex permutations preserving the edge multiset,
    /// expressed as their induced permutation of slot classes.
    auto_class_perms: Vec<Vec<usize>>,
    theta: Option<ThetaVariant>,
}

impl BaseMultigraph {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.slots.len()
    }

    /// Edge slots as `(u, v)` with `u <= v`; a loop appears as `(v, v)`.
    pub fn slots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.slots.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn classes(&self) -> &[SlotClass] {
        &self.classes
    }

    pub fn has_loops(&self) -> bool {
        self.slots.iter().any(|&(u, v)| u == v)
    }

    /// Which Theta family this base is the skeleton of, if any.
    pub fn theta_variant(&self) -> Option<ThetaVariant> {
        self.theta
    }

    /// Smallest subdivision order this base can realize.
    pub fn min_subdivision_order(&self) -> usize {
        let min_sum: usize = self.static_mins().iter().sum();
        min_sum - 2
    }

    /// Per-slot lower bounds: loops need length 3; within a parallel class
    /// only the first slot may take length 1.
    fn static_mins(&self) -> Vec<usize> {
        let mut mins = vec![0usize; self.slots.len()];
        for class in &self.classes {
            for i in 0..class.count {
                mins[class.start + i] = if class.is_loop() {
                    3
                } else if i == 0 {
                    1
                } else {
                    2
                };
            }
        }
        mins
    }

    /// Subdivides this base with one path length per slot.
    pub fn subdivide(&self, lengths: &[usize]) -> Result<Graph> {
        Ok(self.subdivide_with_layout(lengths)?.0)
    }

    /// Subdivision plus the vertex sequence of each slot path.
    pub fn subdivide_with_layout(&self, lengths: &[usize]) -> Result<(Graph, Vec<Vec<usize>>)> {
        if lengths.len() != self.slots.len() {
            return Err(Error::LengthCount {
                base: self.id.clone(),
                expected: self.slots.len(),
                got: lengths.len(),
            });
        }
        for class in &self.classes {
            let ls = &lengths[class.start..class.start + class.count];
            for &l in ls {
                if l < 1 {
                    return Err(Error::LengthTooSmall(l));
                }
                if class.is_loop() && l < 3 {
                    return Err(Error::LoopTooShort(l));
                }
            }
            if !class.is_loop() && ls.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(Error::ParallelUnitPaths {
                    u: class.u,
                    v: class.v,
                });
            }
        }

        let total: usize = lengths.iter().sum();
        let n = self.n + total - self.slots.len();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(total);
        let mut layout: Vec<Vec<usize>> = Vec::with_capacity(self.slots.len());
        let mut next = self.n;
        for (&(u, v), &len) in self.slots.iter().zip(lengths) {
            let (u, v) = (u as usize, v as usize);
            let mut path = Vec::with_capacity(len + 1);
            path.push(u);
            let mut prev = u;
            for _ in 0..len - 1 {
                edges.push((prev, next));
                path.push(next);
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
            path.push(v);
            layout.push(path);
        }
        debug_assert_eq!(next, n);
        let g = Graph::new(n, &edges)?;
        Ok((g, layout))
    }

    /// All canonical length assignments realizing order `n`: one tuple per
    /// isomorphism class of subdivisions of this base.
    pub fn canonical_assignments(&self, n: usize) -> Vec<Vec<usize>> {
        // Every base has m = n + 2, so the total subdivided length is n + 2.
        let total = n + 2;
        let mins = self.static_mins();
        let min_total: usize = mins.iter().sum();
        let mut out = Vec::new();
        if total < min_total {
            return out;
        }
        let k = self.slots.len();
        let mut suffix_min = vec![0usize; k + 1];
        for i in (0..k).rev() {
            suffix_min[i] = suffix_min[i + 1] + mins[i];
        }
        let mut acc: Vec<usize> = Vec::with_capacity(k);
        self.gen_rec(0, total, &mins, &suffix_min, &mut acc, &mut out);
        out
    }

    fn gen_rec(
        &self,
        si: usize,
        remaining: usize,
        mins: &[usize],
        suffix_min: &[usize],
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if si == self.slots.len() {
            if remaining == 0 && self.is_canonical(acc) {
                out.push(acc.clone());
            }
            return;
        }
        let class = self
            .classes
            .iter()
            .find(|c| si >= c.start && si < c.start + c.count)
            .expect("slot belongs to a class");
        let mut lo = mins[si];
        if si > class.start {
            // Sorted within the class; a 1 may only sit in the first slot.
            lo = lo.max(acc[si - 1]);
        }
        if remaining < lo + suffix_min[si + 1] {
            return;
        }
        let hi = remaining - suffix_min[si + 1];
        for len in lo..=hi {
            acc.push(len);
            self.gen_rec(si + 1, remaining - len, mins, suffix_min, acc, out);
            acc.pop();
        }
    }

    /// True when `lengths` (sorted within classes) is the lexicographic
    /// minimum of its orbit under the base's automorphisms.
    fn is_canonical(&self, lengths: &[usize]) -> bool {
        if self.auto_class_perms.is_empty() {
            return true;
        }
        let mut image = vec![0usize; lengths.len()];
        for class_perm in &self.auto_class_perms {
            for (ci, class) in self.classes.iter().enumerate() {
                let target = &self.classes[class_perm[ci]];
                debug_assert_eq!(class.count, target.count);
                image[target.start..target.start + target.count]
                    .copy_from_slice(&lengths[class.start..class.start + class.count]);
            }
            if image.as_slice() < lengths {
                return false;
            }
        }
        true
    }

    /// Canonical representative of an arbitrary valid length tuple.
    pub fn canonicalize_assignment(&self, lengths: &[usize]) -> Vec<usize> {
        let mut best = lengths.to_vec();
        for class in &self.classes {
            best[class.start..class.start + class.count].sort_unstable();
        }
        let sorted = best.clone();
        let mut image = vec![0usize; lengths.len()];
        for class_perm in &self.auto_class_perms {
            for (ci, class) in self.classes.iter().enumerate() {
                let target = &self.classes[class_perm[ci]];
                image[target.start..target.start + target.count]
                    .copy_from_slice(&sorted[class.start..class.start + class.count]);
            }
            if image < best {
                best.copy_from_slice(&image);
            }
        }
        best
    }
}

impl fmt::Display for BaseMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={}):", self.id, self.n)?;
        for class in &self.classes {
            if class.is_loop() {
                write!(f, " loop@{}", class.u)?;
            } else {
                write!(f, " {}-{}", class.u, class.v)?;
            }
            if class.count > 1 {
                write!(f, "x{}", class.count)?;
            }
        }
        Ok(())
    }
}

/// The complete list of base multigraphs, enumerated once and cached.
/// There are fifteen; the count is re-derived by brute force in the tests
/// rather than assumed.
pub fn base_multigraphs() -> &'static [BaseMultigraph] {
    static BASES: Lazy<Vec<BaseMultigraph>> = Lazy::new(enumerate_bases);
    &BASES
}

pub fn base_by_id(id: &str) -> Result<&'static BaseMultigraph> {
    base_multigraphs()
        .iter()
        .find(|b| b.id == id)
        .ok_or_else(|| Error::UnknownBase(id.to_string()))
}

/// Base skeleton of a Theta family.
pub fn theta_base(variant: ThetaVariant) -> &'static BaseMultigraph {
    base_multigraphs()
        .iter()
        .find(|b| b.theta == Some(variant))
        .expect("all four theta skeletons exist")
}

fn enumerate_bases() -> Vec<BaseMultigraph> {
    let mut canonical: Vec<Vec<(u8, u8)>> = Vec::new();
    for n in 1..=4usize {
        let m = n + 2;
        // Slot universe: unordered pairs plus loops.
        let mut universe: Vec<(u8, u8)> = Vec::new();
        for u in 0..n as u8 {
            for v in u..n as u8 {
                universe.push((u, v));
            }
        }
        let mut mult = vec![0usize; universe.len()];
        enumerate_multiplicities(&mut mult, 0, m, &mut |mult| {
            if !degrees_ok(n, &universe, mult) || !connected_base(n, &universe, mult) {
                return;
            }
            let instances = expand(&universe, mult);
            let canon = canonical_base_key(n, &instances);
            if !canonical.contains(&canon) {
                canonical.push(canon);
            }
        });
    }
    canonical.sort_by_key(|slots| {
        (
            slots.iter().map(|&(_, v)| v).max().unwrap_or(0),
            slots.clone(),
        )
    });

    let mut bases: Vec<BaseMultigraph> = canonical
        .into_iter()
        .enumerate()
        .map(|(i, slots)| build_base(format!("b{:02}", i + 1), slots))
        .collect();
    for base in &mut bases {
        base.theta = detect_theta(base);
    }
    bases
}

fn enumerate_multiplicities(
    mult: &mut Vec<usize>,
    idx: usize,
    remaining: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if idx == mult.len() {
        if remaining == 0 {
            f(mult);
        }
        return;
    }
    for take in 0..=remaining {
        mult[idx] = take;
        enumerate_multiplicities(mult, idx + 1, remaining - take, f);
    }
    mult[idx] = 0;
}

fn degrees_ok(n: usize, universe: &[(u8, u8)], mult: &[usize]) -> bool {
    let mut deg = vec![0usize; n];
    for (&(u, v), &k) in universe.iter().zip(mult) {
        if u == v {
            deg[u as usize] += 2 * k;
        } else {
            deg[u as usize] += k;
            deg[v as usize] += k;
        }
    }
    deg.iter().all(|&d| d >= 3)
}

fn connected_base(n: usize, universe: &[(u8, u8)], mult: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (&(u, v), &k) in universe.iter().zip(mult) {
        if k > 0 && u != v {
            let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            parent[ru] = rv;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

fn expand(universe: &[(u8, u8)], mult: &[usize]) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for (&slot, &k) in universe.iter().zip(mult) {
        for _ in 0..k {
            out.push(slot);
        }
    }
    out
}

/// Lexicographically smallest relabeled instance list over all vertex
/// permutations; doubles as the isomorphism key for bases.
fn canonical_base_key(n: usize, instances: &[(u8, u8)]) -> Vec<(u8, u8)> {
    let mut best: Option<Vec<(u8, u8)>> = None;
    let mut perm: Vec<u8> = (0..n as u8).collect();
    permute_all(&mut perm, 0, &mut |perm| {
        let mut mapped: Vec<(u8, u8)> = instances
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_all(perm: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn build_base(id: String, slots: Vec<(u8, u8)>) -> BaseMultigraph {
    let n = slots
        .iter()
        .map(|&(_, v)| v as usize + 1)
        .max()
        .unwrap_or(1);
    let mut classes: Vec<SlotClass> = Vec::new();
    for (i, &(u, v)) in slots.iter().enumerate() {
        match classes.last_mut() {
            Some(c) if c.u == u as usize && c.v == v as usize => c.count += 1,
            _ => classes.push(SlotClass {
                u: u as usize,
                v: v as usize,
                start: i,
                count: 1,
            }),
        }
    }

    // Vertex automorphisms, recorded as their action on slot classes.
    let mut sorted_ref = slots.clone();
    sorted_ref.sort_unstable();
    let mut auto_class_perms: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    permute_all(&mut perm, 0, &mut |perm| {
        if perm.iter().enumerate().all(|(i, &p)| i as u8 == p) {
            return;
        }
        let mut mapped: Vec<(u8, u8)> = slots
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if mapped != sorted_ref {
            return;
        }
        let class_perm: Vec<usize> = classes
            .iter()
            .map(|c| {
                let (a, b) = (perm[c.u], perm[c.v]);
                let (a, b) = (a.min(b) as usize, a.max(b) as usize);
                classes
                    .iter()
                    .position(|t| t.u == a && t.v == b)
                    .expect("automorphism maps classes to classes")
            })
            .collect();
        if !auto_class_perms.contains(&class_perm) {
            auto_class_perms.push(class_perm);
        }
    });

    BaseMultigraph {
        id,
        n,
        slots,
        classes,
        auto_class_perms,
        theta: None,
    }
}

fn detect_theta(base: &BaseMultigraph) -> Option<ThetaVariant> {
    if base.has_loops() {
        return None;
    }
    let counts: Vec<usize> = base.classes.iter().map(|c| c.count).collect();
    match (base.n, base.classes.len()) {
        (2, 1) if counts == [4] => Some(ThetaVariant::Theta1),
        (3, 3) => Some(ThetaVariant::Theta2),
        (4, 4) => Some(ThetaVariant::Theta3),
        (4, 6) => Some(ThetaVariant::Theta4),
        _ => None,
    }
}

/// A base id plus one path length per base edge slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionAssignment {
    pub base_id: String,
    pub lengths: Vec<usize>,
}

impl SubdivisionAssignment {
    pub fn new(base_id: impl Into<String>, lengths: Vec<usize>) -> Self {
        SubdivisionAssignment {
            base_id: base_id.into(),
            lengths,
        }
    }

    /// Order of the subdivided graph: every base has `m = n + 2`, so the
    /// order is the total length minus two.
    pub fn order(&self) -> usize {
        self.lengths.iter().sum::<usize>() - 2
    }
}

impl fmt::Display for SubdivisionAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.base_id)?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Builds the simple graph a subdivision assignment describes.
pub fn subdivide(assignment: &SubdivisionAssignment) -> Result<Graph> {
    base_by_id(&assignment.base_id)?.subdivide(&assignment.lengths)
}

/// Streams every canonical assignment of order exactly `n`, base by base.
/// Outputs are pendant-free by construction (bases have minimum degree 3)
/// and duplicate-free up to isomorphism.
pub fn enumerate_assignments(n: usize) -> Result<AssignmentStream> {
    if n < 4 {
        return Err(Error::OrderTooSmall {
            n,
            reason: "the smallest tricyclic graph K4 has order 4",
        });
    }
    Ok(AssignmentStream {
        n,
        base_idx: 0,
        current_base: 0,
        current: Vec::new().into_iter(),
    })
}

pub struct AssignmentStream {
    n: usize,
    base_idx: usize,
    current_base: usize,
    current: std::vec::IntoIter<Vec<usize>>,
}

impl Iterator for AssignmentStream {
    type Item = SubdivisionAssignment;

    fn next(&mut self) -> Option<SubdivisionAssignment> {
        loop {
            if let Some(lengths) = self.current.next() {
                let base = &base_multigraphs()[self.current_base];
                return Some(SubdivisionAssignment::new(base.id.clone(), lengths));
            }
            let bases = base_multigraphs();
            if self.base_idx >= bases.len() {
                return None;
            }
            self.current_base = self.base_idx;
            self.current = bases[self.base_idx]
                .canonical_assignments(self.n)
                .into_iter();
            self.base_idx += 1;
        }
    }
}

/// The four 2-connected tricyclic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaVariant {
    Theta1,
    Theta2,
    Theta3,
    Theta4,
}

impl ThetaVariant {
    pub fn arity(self) -> usize {
        match self {
            ThetaVariant::Theta1 => 4,
            ThetaVariant::Theta2 => 5,
            ThetaVariant::Theta3 | ThetaVariant::Theta4 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ThetaVariant::Theta1 => "theta1",
            ThetaVariant::Theta2 => "theta2",
            ThetaVariant::Theta3 => "theta3",
            ThetaVariant::Theta4 => "theta4",
        }
    }

    /// Branch vertex labels and the skeleton slot of each path letter.
    /// Lengths are listed in letter order a, b, c, ...
    fn layout(self) -> ThetaLayout {
        match self {
            // Four internally disjoint x-y paths.
            ThetaVariant::Theta1 => (
                &[('x', 0), ('y', 1)],
                &[('a', 0, 1), ('b', 0, 1), ('c', 0, 1), ('d', 0, 1)],
            ),
            // x joined to y twice (b, d) and to z twice (c, e); y-z once (a).
            ThetaVariant::Theta2 => (
                &[('x', 0), ('y', 1), ('z', 2)],
                &[
                    ('a', 1, 2),
                    ('b', 0, 1),
                    ('c', 0, 2),
                    ('d', 0, 1),
                    ('e', 0, 2),
                ],
            ),
            // w-y doubled (c, e), x-z doubled (d, f), y-z (a), w-x (b).
            ThetaVariant::Theta3 => (
                &[('x', 0), ('y', 1), ('z', 2), ('w', 3)],
                &[
                    ('a', 1, 2),
                    ('b', 3, 0),
                    ('c', 3, 1),
                    ('d', 0, 2),
                    ('e', 3, 1),
                    ('f', 0, 2),
                ],
            ),
            // K4 skeleton; letter placement follows the cycle memberships
            // used in the family's case analysis: a-f-b and a-c-e triangles,
            // a-f-d-c four-cycle.
            ThetaVariant::Theta4 => (
                &[('w', 0), ('x', 1), ('y', 2), ('z', 3)],
                &[
                    ('a', 0, 1),
                    ('b', 0, 2),
                    ('c', 0, 3),
                    ('d', 2, 3),
                    ('e', 1, 3),
                    ('f', 1, 2),
                ],
            ),
        }
    }
}

impl FromStr for ThetaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta1" => Ok(ThetaVariant::Theta1),
            "theta2" => Ok(ThetaVariant::Theta2),
            "theta3" => Ok(ThetaVariant::Theta3),
            "theta4" => Ok(ThetaVariant::Theta4),
            other => Err(Error::UnknownBase(other.to_string())),
        }
    }
}

/// Branch labels plus `(letter, endpoint, endpoint)` rows of a skeleton.
type ThetaLayout = (&'static [(char, usize)], &'static [(char, usize, usize)]);

/// A Theta family member: variant plus path lengths in letter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaParams {
    pub variant: ThetaVariant,
    pub lengths: Vec<usize>,
}

impl ThetaParams {
    pub fn new(variant: ThetaVariant, lengths: Vec<usize>) -> Result<Self> {
        if lengths.len() != variant.arity() {
            return Err(Error::LengthCount {
                base: variant.name().to_string(),
                expected: variant.arity(),
                got: lengths.len(),
            });
        }
        Ok(ThetaParams { variant, lengths })
    }

    pub fn theta1(a: usize, b: usize, c: usize, d: usize) -> Self {
        ThetaParams {
            variant: ThetaVariant::Theta1,
            lengths: vec![a, b, c, d],
        }
    }

    pub fn theta4(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Self {
        ThetaParams {
            variant: ThetaVariant::Theta4,
            lengths: vec![a, b, c, d, e, f],
        }
    }
}

/// One subdivided skeleton path, endpoints first and last.
#[derive(Debug, Clone)]
pub struct ThetaPath {
    pub letter: char,
    pub ends: (usize, usize),
    pub vertices: Vec<usize>,
}

impl ThetaPath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges along the path with their position from the `ends.0` side.
    pub fn edges(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.vertices
            .windows(2)
            .enumerate()
            .map(|(i, w)| (i, (w[0], w[1])))
    }
}

/// A labeled Theta family graph with its branch vertices and paths kept as
/// metadata for lemma-level diagnostics.
#[derive(Debug, Clone)]
pub struct ThetaGraph {
    pub params: ThetaParams,
    pub graph: Graph,
    pub branches: Vec<(char, usize)>,
    pub paths: Vec<ThetaPath>,
}

/// Builds a Theta family graph, validating the simplicity constraints.
pub fn theta(params: &ThetaParams) -> Result<ThetaGraph> {
    let (branches, slot_table) = params.variant.layout();
    if params.lengths.len() != params.variant.arity() {
        return Err(Error::LengthCount {
            base: params.variant.name().to_string(),
            expected: params.variant.arity(),
            got: params.lengths.len(),
        });
    }

    // Group slots into parallel classes to run the shared validation.
    let n_branch = branches.len();
    let slots: Vec<(usize, usize)> = slot_table
        .iter()
        .map(|&(_, u, v)| (u.min(v), u.max(v)))
        .collect();
    for (i, &(u, v)) in slots.iter().enumerate() {
        let l = params.lengths[i];
        if l < 1 {
            return Err(Error::LengthTooSmall(l));
        }
        let ones = slots
            .iter()
            .zip(&params.lengths)
            .filter(|&(&s, &l)| s == (u, v) && l == 1)
            .count();
        if ones > 1 {
            return Err(Error::ParallelUnitPaths { u, v });
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut paths: Vec<ThetaPath> = Vec::new();
    let mut next = n_branch;
    for (&(letter, u, v), &len) in slot_table.iter().zip(&params.lengths) {
        let mut vertices = vec![u];
        let mut prev = u;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            vertices.push(next);
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
        vertices.push(v);
        paths.push(ThetaPath {
            letter,
            ends: (u, v),
            vertices,
        });
    }
    let graph = Graph::new(next, &edges)?;
    Ok(ThetaGraph {
        params: params.clone(),
        graph,
        branches: branches.to_vec(),
        paths,
    })
}

/// Random connected tricyclic graph with at least one pendant vertex:
/// a random pendant-free core with a random tree attached. Deterministic
/// for a fixed seed.
pub fn random_tricyclic_with_pendant(n: usize, seed: u64) -> Result<Graph> {
    if n < 5 {
        return Err(Error::OrderTooSmall {
            n,
            reason: "K4 is the only tricyclic graph of order 4 and has no pendant",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core_order = rng.gen_range(4..n);
    let core = random_core(core_order, &mut rng);

    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    for w in core_order..n {
        edges.push((rng.gen_range(0..w), w));
    }
    Graph::new(n, &edges)
}

/// Random pendant-free tricyclic core of the exact given order (>= 4).
fn random_core(order: usize, rng: &mut ChaCha8Rng) -> Graph {
    let bases = base_multigraphs();
    for _ in 0..64 {
        let base = &bases[rng.gen_range(0..bases.len())];
        let mins = base.static_mins();
        let min_total: usize = mins.iter().sum();
        let total = order + 2;
        if total < min_total {
            continue;
        }
        let mut lengths = mins.clone();
        for _ in 0..total - min_total {
            let i = rng.gen_range(0..lengths.len());
            lengths[i] += 1;
        }
        for class in base.classes() {
            lengths[class.start..class.start + class.count].sort_unstable();
        }
        if let Ok(g) = base.subdivide(&lengths) {
            return g;
        }
    }
    // K4 subdivision always works: distribute freely over six edges.
    let base = theta_base(ThetaVariant::Theta4);
    let mut lengths = vec![1usize; 6];
    for _ in 0..order.saturating_sub(4) {
        let i = rng.gen_range(0..6);
        lengths[i] += 1;
    }
    base.subdivide(&lengths)
        .expect("K4 subdivision is always simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{small, CyclomaticClass};

    #[test]
    fn base_list_shape() {
        let bases = base_multigraphs();
        assert_eq!(bases.len(), 15);
        // The four loop-free members are exactly the theta skeletons.
        let loop_free: Vec<_> = bases.iter().filter(|b| !b.has_loops()).collect();
        assert_eq!(loop_free.len(), 4);
        for b in &loop_free {
            assert!(b.theta.is_some());
        }
        let t1 = theta_base(ThetaVariant::Theta1);
        assert_eq!((t1.order(), t1.size()), (2, 4));
        let t4 = theta_base(ThetaVariant::Theta4);
        assert_eq!((t4.order(), t4.size()), (4, 6));
        assert_eq!(t4.classes().len(), 6);
    }

    #[test]
    fn subdivision_examples() {
        let k4 = theta_base(ThetaVariant::Theta4)
            .subdivide(&[1, 1, 1, 1, 1, 1])
            .unwrap();
        assert_eq!(k4, small::complete(4));

        let t1 = theta_base(ThetaVariant::Theta1);
        let g = t1.subdivide(&[1, 2, 2, 2]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        assert_eq!(g.cyclomatic_class().unwrap(), CyclomaticClass::Tricyclic);

        assert_eq!(
            t1.subdivide(&[1, 1, 2, 2]),
            Err(Error::ParallelUnitPaths { u: 0, v: 1 })
        );
        assert_eq!(t1.subdivide(&[0, 2, 2, 2]), Err(Error::LengthTooSmall(0)));
    }

    #[test]
    fn loop_subdivision_rules() {
        let with_loop = base_multigraphs()
            .iter()
            .find(|b| b.has_loops())
            .expect("loop bases exist");
        let class = with_loop
            .classes()
            .iter()
            .find(|c| c.is_loop())
            .copied()
            .unwrap();
        let mut lengths = with_loop.static_mins();
        lengths[class.start] = 2;
        assert_eq!(with_loop.subdivide(&lengths), Err(Error::LoopTooShort(2)));
    }

    #[test]
    fn theta_examples() {
        let k4 = theta(&ThetaParams::theta4(1, 1, 1, 1, 1, 1)).unwrap();
        assert_eq!(k4.graph, small::complete(4));

        let t = theta(&ThetaParams::theta1(1, 2, 2, 2)).unwrap();
        assert_eq!((t.graph.order(), t.graph.size()), (5, 7));
        assert_eq!(t.branches, vec![('x', 0), ('y', 1)]);
        assert!(t.graph.cut_vertices().unwrap().is_empty());

        assert!(matches!(
            theta(&ThetaParams::theta1(1, 1, 2, 2)),
            Err(Error::ParallelUnitPaths { .. })
        ));
    }

    #[test]
    fn assignment_enumeration_small_orders() {
        // n = 4: only the K4 identity assignment among all bases.
        let all: Vec<_> = enumerate_assignments(4).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].lengths, vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(all[0].order(), 4);

        // n = 5 on the quadruple-edge base: sorted lengths (1,2,2,2) only.
        let t1 = theta_base(ThetaVariant::Theta1);
        assert_eq!(t1.canonical_assignments(5), vec![vec![1, 2, 2, 2]]);

        // Everything streamed subdivides cleanly and lands on the order.
        for a in enumerate_assignments(7).unwrap() {
            let g = subdivide(&a).unwrap();
            assert_eq!(g.order(), 7);
            assert_eq!(g.size(), 9);
            assert!(g.min_degree() >= 2);
        }
        assert!(enumerate_assignments(3).is_err());
    }

    #[test]
    fn random_pendant_generator() {
        let g = random_tricyclic_with_pendant(12, 1).unwrap();
        assert_eq!(g.cyclomatic_class().unwrap(), CyclomaticClass::Tricyclic);
        assert_eq!(g.min_degree(), 1);

        let h = random_tricyclic_with_pendant(12, 1).unwrap();
        assert_eq!(g, h);

        assert!(random_tricyclic_with_pendant(4, 1).is_err());
    }
}
