//! Exhaustive and parametric searches: small-order brute force, pendant-free
//! sweeps with deterministic parallel reduction, bound verification, the
//! crossover scan, and the lemma-level exhaustive checks.

use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{certificate_bounded, DEFAULT_CERT_BOUND};
use crate::error::{Error, Result};
use crate::families::{
    base_multigraphs, random_tricyclic_with_pendant, theta, BaseMultigraph, ThetaParams,
};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{fn_closed_form_q, IndexEngine};
use crate::records::{write_record, RecordFormat, SweepRecord, CSV_HEADER};

/// Hard cap for the brute-force enumeration; beyond 8 vertices the labeled
/// search space explodes.
pub const ENUMERATE_SMALL_MAX: usize = 8;

/// All connected simple graphs with `m = n + 2`, one canonical representative
/// per isomorphism class, sorted by certificate. Empty for `n < 4` (there is
/// no room for `n + 2` edges below K4).
pub fn enumerate_small(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATE_SMALL_MAX {
        return Err(Error::OrderOutOfRange {
            n,
            lo: 1,
            hi: ENUMERATE_SMALL_MAX,
        });
    }
    let m = n + 2;
    let mut pairs: Vec<(u8, u8)> = Vec::new();
    for u in 0..n as u8 {
        for v in u + 1..n as u8 {
            pairs.push((u, v));
        }
    }
    let total = pairs.len();
    if total < m {
        return Ok(Vec::new());
    }

    // Batched combination walk feeding parallel connectivity + canonical
    // labeling. Graphs are deduplicated by their packed canonical bit word
    // (the upper triangle fits one u64 for n <= 8), so only the first member
    // of each class pays for graph construction. Word order agrees with
    // certificate-string order, which keeps the result independent of the
    // batching and worker count.
    const BATCH: usize = 1 << 16;
    let mut global: std::collections::BTreeMap<u64, Graph> = std::collections::BTreeMap::new();
    let mut comb: Vec<usize> = (0..m).collect();
    let mut done = false;
    while !done {
        let mut batch: Vec<[u8; 12]> = Vec::with_capacity(BATCH);
        while !done && batch.len() < BATCH {
            let mut item = [0u8; 12];
            for (i, &ci) in comb.iter().enumerate() {
                item[i] = ci as u8;
            }
            batch.push(item);
            done = true;
            for i in (0..m).rev() {
                if comb[i] < total - m + i {
                    comb[i] += 1;
                    for j in i + 1..m {
                        comb[j] = comb[j - 1] + 1;
                    }
                    done = false;
                    break;
                }
            }
        }
        let found = batch
            .par_iter()
            .fold(
                std::collections::HashMap::<u64, Graph>::new,
                |mut map, item| {
                    let mut adj = [0u64; 8];
                    for &pi in item[..m].iter() {
                        let (u, v) = pairs[pi as usize];
                        adj[u as usize] |= 1 << v;
                        adj[v as usize] |= 1 << u;
                    }
                    if mask_connected(&adj, n) {
                        let key = crate::canon::canonical_bits_word(&adj, n);
                        map.entry(key).or_insert_with(|| {
                            let edges: Vec<(u32, u32)> = item[..m]
                                .iter()
                                .map(|&pi| {
                                    let (u, v) = pairs[pi as usize];
                                    (u as u32, v as u32)
                                })
                                .collect();
                            crate::canon::canonical_form(&Graph::from_sorted_edges(n, edges))
                        });
                    }
                    map
                },
            )
            .reduce(std::collections::HashMap::new, |mut a, b| {
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                a
            });
        for (k, v) in found {
            global.entry(k).or_insert(v);
        }
    }
    Ok(global.into_values().collect())
}

fn mask_connected(adj: &[u64; 8], n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        if next == reach {
            return reach == all;
        }
        reach = next;
    }
}

/// Tuning knobs for the parallel scans.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub workers: usize,
    /// Append-only record sink.
    pub out: Option<PathBuf>,
    /// Sink format (JSONL unless asked otherwise).
    pub format: RecordFormat,
    /// Run id written into persisted records; defaults to a timestamp tag.
    pub run_id: Option<String>,
}

/// A scanned graph that hit the maximum (or exceeded a threshold).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArgmaxEntry {
    pub base_id: String,
    pub lengths: Vec<usize>,
    /// Canonical graph6 of the graph (its certificate string).
    pub g6: String,
}

/// Result of one pendant-free sweep at a fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub max_sz_star_q: i64,
    pub closed_form_q: i64,
    /// Argmax graphs, one entry per isomorphism class, sorted by certificate.
    pub argmax: Vec<ArgmaxEntry>,
    pub count_scanned: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ExtremalReport {
    /// The argmax certificates; entries are stored in canonical graph6 form,
    /// so the `g6` strings double as certificates.
    pub fn argmax_certificates(&self) -> impl Iterator<Item = &str> {
        self.argmax.iter().map(|e| e.g6.as_str())
    }
}

/// Evaluates `4 Sz*` over every pendant-free tricyclic graph of order `n`
/// (all canonical subdivisions of all bases) and reports the maximum with
/// its argmax set. Deterministic for any worker count: ties are all
/// collected, then deduplicated by certificate and sorted.
pub fn sweep_pendant_free(n: usize) -> Result<ExtremalReport> {
    sweep_pendant_free_with(n, &SweepOptions::default())
}

pub fn sweep_pendant_free_with(n: usize, opts: &SweepOptions) -> Result<ExtremalReport> {
    if n < 7 {
        return Err(Error::OrderTooSmall {
            n,
            reason: "the pendant-free restriction is justified only for n >= 7",
        });
    }
    let scan = scan_order(n, None, opts)?;
    Ok(ExtremalReport {
        n,
        max_sz_star_q: scan.max,
        closed_form_q: fn_closed_form_q(n)?,
        argmax: dedup_hits(n, scan.max_hits)?,
        count_scanned: scan.scanned,
        elapsed: scan.elapsed,
    })
}

/// Outcome status of a per-order bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
}

/// One row of a `verify_bound` run.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub n: usize,
    pub sweep_max: i64,
    pub closed_form_q: i64,
    pub argmax: Vec<ArgmaxEntry>,
    pub unique_argmax: bool,
    pub status: CheckStatus,
}

/// Checks, for each order in the range, that the sweep maximum equals the
/// closed form and the argmax is unique up to isomorphism. Orders below 29
/// require the informational flag and are reported without asserting.
pub fn verify_bound(n_lo: usize, n_hi: usize, informational: bool) -> Result<Vec<BoundCheck>> {
    if n_lo > n_hi {
        return Err(Error::EmptyRange { lo: n_lo, hi: n_hi });
    }
    if !informational && n_lo < 29 {
        return Err(Error::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            what: "n >= 29 (Theorem range); rerun with the informational flag for lower orders",
        });
    }
    let mut out = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let report = sweep_pendant_free(n)?;
        let unique = report.argmax.len() == 1;
        let matches = report.max_sz_star_q == report.closed_form_q;
        let status = if n < 29 {
            CheckStatus::Info
        } else if matches && unique {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        out.push(BoundCheck {
            n,
            sweep_max: report.max_sz_star_q,
            closed_form_q: report.closed_form_q,
            argmax: report.argmax,
            unique_argmax: unique,
            status,
        });
    }
    Ok(out)
}

/// A graph whose `4 Sz*` exceeds the closed form at its order.
#[derive(Debug, Clone, Serialize)]
pub struct Exceeder {
    pub base_id: String,
    pub lengths: Vec<usize>,
    pub g6: String,
    pub sz4: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossoverRow {
    pub n: usize,
    pub sweep_max: i64,
    pub closed_form_q: i64,
    pub exceeders: Vec<Exceeder>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossoverReport {
    pub rows: Vec<CrossoverRow>,
    /// Smallest order in the scanned range above which (inclusive) no graph
    /// exceeds the closed form; `None` when the top of the range still has
    /// exceeders.
    pub observed_threshold: Option<usize>,
}

/// Scans a range of orders and lists every pendant-free graph beating the
/// closed form, reporting where the exceeders stop.
pub fn crossover_scan(n_lo: usize, n_hi: usize) -> Result<CrossoverReport> {
    if n_lo > n_hi {
        return Err(Error::EmptyRange { lo: n_lo, hi: n_hi });
    }
    if n_lo < 7 || n_hi > 40 {
        return Err(Error::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            what: "orders between 7 and 40",
        });
    }
    let opts = SweepOptions::default();
    let mut rows = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let closed = fn_closed_form_q(n)?;
        let scan = scan_order(n, Some(closed), &opts)?;
        let mut exceeders = Vec::new();
        for (entry, sz4) in dedup_exceeders(n, scan.exceeders)? {
            exceeders.push(Exceeder {
                base_id: entry.base_id,
                lengths: entry.lengths,
                g6: entry.g6,
                sz4,
            });
        }
        rows.push(CrossoverRow {
            n,
            sweep_max: scan.max,
            closed_form_q: closed,
            exceeders,
        });
    }
    let mut threshold = None;
    for row in rows.iter().rev() {
        if row.exceeders.is_empty() {
            threshold = Some(row.n);
        } else {
            break;
        }
    }
    Ok(CrossoverReport {
        rows,
        observed_threshold: threshold,
    })
}

// ---------------------------------------------------------------------------
// Parallel scan core
// ---------------------------------------------------------------------------

const CHUNK: usize = 2048;

#[derive(Debug, Clone)]
struct Hit {
    base_idx: usize,
    lengths: Vec<usize>,
}

#[derive(Debug, Default)]
struct ScanAcc {
    max: Option<i64>,
    max_hits: Vec<Hit>,
    exceeders: Vec<(Hit, i64)>,
    scanned: u64,
}

impl ScanAcc {
    fn update(&mut self, sz4: i64, hit: impl FnOnce() -> Hit) {
        self.scanned += 1;
        match self.max {
            Some(m) if sz4 < m => {}
            Some(m) if sz4 == m => self.max_hits.push(hit()),
            _ => {
                self.max = Some(sz4);
                self.max_hits.clear();
                self.max_hits.push(hit());
            }
        }
    }

    fn merge(mut self, mut other: ScanAcc) -> ScanAcc {
        self.scanned += other.scanned;
        self.exceeders.append(&mut other.exceeders);
        match (self.max, other.max) {
            (Some(a), Some(b)) if a == b => self.max_hits.append(&mut other.max_hits),
            (Some(a), Some(b)) if b > a => {
                self.max = other.max;
                self.max_hits = other.max_hits;
            }
            (None, Some(_)) => {
                self.max = other.max;
                self.max_hits = other.max_hits;
            }
            _ => {}
        }
        self
    }
}

struct ScanOut {
    max: i64,
    max_hits: Vec<Hit>,
    exceeders: Vec<(Hit, i64)>,
    scanned: u64,
    elapsed: Duration,
}

fn fresh_run_id() -> String {
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos())
        .unwrap_or(0);
    format!("r{nanos:x}")
}

fn scan_order(n: usize, exceed_threshold: Option<i64>, opts: &SweepOptions) -> Result<ScanOut> {
    let start = Instant::now();
    let bases = base_multigraphs();
    let mut items: Vec<(usize, Vec<usize>)> = Vec::new();
    for (bi, base) in bases.iter().enumerate() {
        for lengths in base.canonical_assignments(n) {
            items.push((bi, lengths));
        }
    }

    let writer: Option<Mutex<BufWriter<std::fs::File>>> = match &opts.out {
        Some(path) => {
            let file = OpenOptions::new().create(true).append(true).open(path)?;
            let fresh = file.metadata()?.len() == 0;
            let mut w = BufWriter::new(file);
            if opts.format == RecordFormat::Csv && fresh {
                writeln!(w, "{CSV_HEADER}")?;
            }
            Some(Mutex::new(w))
        }
        None => None,
    };
    let run_id = opts.run_id.clone().unwrap_or_else(fresh_run_id);

    let scan = || -> Result<ScanAcc> {
        items
            .par_chunks(CHUNK)
            .map(|chunk| -> Result<ScanAcc> {
                let mut engine = IndexEngine::new();
                let mut acc = ScanAcc::default();
                let mut rows: Vec<u8> = Vec::new();
                let mut chunk_max = i64::MIN;
                for (bi, lengths) in chunk {
                    let base = &bases[*bi];
                    let g = base.subdivide(lengths)?;
                    let (sz4, dsq) = engine.sz4_and_dsq(&g)?;
                    if writer.is_some() {
                        let rec = SweepRecord {
                            run: run_id.clone(),
                            n,
                            base: base.id().to_string(),
                            lengths: lengths.clone(),
                            g6: graph6::encode(&g),
                            sz4,
                            dsq,
                            is_current_max: sz4 >= chunk_max,
                        };
                        write_record(&mut rows, &rec, opts.format)?;
                    }
                    chunk_max = chunk_max.max(sz4);
                    if let Some(t) = exceed_threshold {
                        if sz4 > t {
                            acc.exceeders.push((
                                Hit {
                                    base_idx: *bi,
                                    lengths: lengths.clone(),
                                },
                                sz4,
                            ));
                        }
                    }
                    acc.update(sz4, || Hit {
                        base_idx: *bi,
                        lengths: lengths.clone(),
                    });
                }
                if let Some(w) = &writer {
                    w.lock().expect("record sink poisoned").write_all(&rows)?;
                }
                Ok(acc)
            })
            .try_reduce(ScanAcc::default, |a, b| Ok(a.merge(b)))
    };

    let acc = if opts.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(scan)?
    } else {
        scan()?
    };

    if let Some(w) = writer {
        w.into_inner().expect("record sink poisoned").flush()?;
    }

    Ok(ScanOut {
        max: acc.max.expect("every order >= 7 has assignments"),
        max_hits: acc.max_hits,
        exceeders: acc.exceeders,
        scanned: acc.scanned,
        elapsed: start.elapsed(),
    })
}

/// Certificate-dedups max hits into sorted argmax entries. The witness kept
/// per class is the smallest (base, lengths) pair, so the outcome does not
/// depend on scan order.
fn dedup_hits(n: usize, hits: Vec<Hit>) -> Result<Vec<ArgmaxEntry>> {
    let bases = base_multigraphs();
    let bound = n.max(DEFAULT_CERT_BOUND);
    let mut classes: std::collections::BTreeMap<String, (String, Vec<usize>)> =
        std::collections::BTreeMap::new();
    for hit in hits {
        let base = &bases[hit.base_idx];
        let g = base.subdivide(&hit.lengths)?;
        let cert = certificate_bounded(&g, bound)?;
        let witness = (base.id().to_string(), hit.lengths);
        classes
            .entry(cert.into_string())
            .and_modify(|w| {
                if witness < *w {
                    *w = witness.clone();
                }
            })
            .or_insert(witness);
    }
    Ok(classes
        .into_iter()
        .map(|(g6, (base_id, lengths))| ArgmaxEntry {
            base_id,
            lengths,
            g6,
        })
        .collect())
}

fn dedup_exceeders(n: usize, hits: Vec<(Hit, i64)>) -> Result<Vec<(ArgmaxEntry, i64)>> {
    let bases = base_multigraphs();
    let bound = n.max(DEFAULT_CERT_BOUND);
    let mut classes: std::collections::BTreeMap<String, ((String, Vec<usize>), i64)> =
        std::collections::BTreeMap::new();
    for (hit, sz4) in hits {
        let base = &bases[hit.base_idx];
        let g = base.subdivide(&hit.lengths)?;
        let cert = certificate_bounded(&g, bound)?;
        let witness = (base.id().to_string(), hit.lengths);
        classes
            .entry(cert.into_string())
            .and_modify(|(w, _)| {
                if witness < *w {
                    *w = witness.clone();
                }
            })
            .or_insert((witness, sz4));
    }
    let mut out: Vec<(ArgmaxEntry, i64)> = classes
        .into_iter()
        .map(|(g6, ((base_id, lengths), sz4))| {
            (
                ArgmaxEntry {
                    base_id,
                    lengths,
                    g6,
                },
                sz4,
            )
        })
        .collect();
    // Largest value first; certificate breaks ties.
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.g6.cmp(&b.0.g6)));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Lemma-level exhaustive checks
// ---------------------------------------------------------------------------

/// A failed per-edge check in the Theta1 delta characterization.
#[derive(Debug, Clone, Serialize)]
pub struct Lemma31Violation {
    pub lengths: Vec<usize>,
    pub edge: (usize, usize),
    pub path_letter: char,
    pub position: usize,
    pub case: u8,
    pub delta: i64,
    pub partition: (usize, usize, usize),
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma31Report {
    pub graphs_checked: u64,
    pub edges_checked: u64,
    pub violations: Vec<Lemma31Violation>,
}

/// Exhaustively verifies, over every Theta1(a<=b<=c<=d) with total length at
/// most `max_total`, the three-case delta characterization:
///
/// * delta <= 1 exactly for middle edges of odd paths;
/// * branch vertices on opposite sides: `delta = 2 |b_i - a_i|`;
/// * branch vertices on the same side: `delta = n - g` with `g` the shortest
///   cycle through the edge;
/// * one branch vertex equidistant: `delta >= 2 (a - 1)`.
pub fn check_lemma31(max_total: usize) -> Result<Lemma31Report> {
    if max_total < 7 {
        return Err(Error::InvalidRange {
            lo: 7,
            hi: max_total,
            what: "max_total >= 7 (the smallest Theta1 graph has total length 7)",
        });
    }
    let mut report = Lemma31Report {
        graphs_checked: 0,
        edges_checked: 0,
        violations: Vec::new(),
    };
    for total in 7..=max_total {
        for a in 1..=total / 4 {
            for b in a.max(2)..=total {
                for c in b..=total {
                    if a + b + c >= total {
                        break;
                    }
                    let d = total - a - b - c;
                    if d < c {
                        continue;
                    }
                    check_one_theta1(&[a, b, c, d], &mut report)?;
                }
            }
        }
    }
    Ok(report)
}

fn check_one_theta1(lengths: &[usize; 4], report: &mut Lemma31Report) -> Result<()> {
    let tg = theta(&ThetaParams::theta1(
        lengths[0], lengths[1], lengths[2], lengths[3],
    ))?;
    let g = &tg.graph;
    let n = g.order() as i64;
    let x = tg.branches[0].1;
    let y = tg.branches[1].1;
    let a_min = *lengths.iter().min().expect("four lengths") as i64;
    let dx = g.distances_from(x)?;
    let dy = g.distances_from(y)?;
    report.graphs_checked += 1;

    // -1: closer to u, +1: closer to v, 0: equidistant.
    let side_of = |du: usize, dv: usize| -> i8 {
        match du.cmp(&dv) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Equal => 0,
        }
    };

    for path in &tg.paths {
        let len = path.len();
        for (pos, (u, v)) in path.edges() {
            report.edges_checked += 1;
            let part = crate::indices::edge_partition(g, u, v)?;
            let delta = part.delta();
            let triple = (part.n_u, part.n_v, part.n_0);
            let fail = |case: u8, detail: String, violations: &mut Vec<Lemma31Violation>| {
                violations.push(Lemma31Violation {
                    lengths: lengths.to_vec(),
                    edge: (u, v),
                    path_letter: path.letter,
                    position: pos,
                    case,
                    delta,
                    partition: triple,
                    detail,
                });
            };

            let sx = side_of(dx.get(u).expect("connected"), dx.get(v).expect("connected"));
            let sy = side_of(dy.get(u).expect("connected"), dy.get(v).expect("connected"));

            let is_middle_of_odd = len % 2 == 1 && pos == (len - 1) / 2;
            if (delta <= 1) != is_middle_of_odd {
                fail(
                    0,
                    format!(
                        "delta<=1 is {} but middle-of-odd-path is {}",
                        delta <= 1,
                        is_middle_of_odd
                    ),
                    &mut report.violations,
                );
            }

            if sx != 0 && sy != 0 && sx != sy {
                // Case 1: branch vertices on opposite sides.
                let a_i = dx.get(u).unwrap().min(dx.get(v).unwrap()) as i64;
                let b_i = dy.get(u).unwrap().min(dy.get(v).unwrap()) as i64;
                let expected = 2 * (b_i - a_i).abs();
                if delta != expected {
                    fail(
                        1,
                        format!("case 1 expected 2|b_i-a_i| = {expected}"),
                        &mut report.violations,
                    );
                }
            } else if sx != 0 && sx == sy {
                // Case 2: both on the same side.
                let girth_through =
                    g.shortest_cycle_through_edge(u, v)?
                        .expect("Theta1 graphs are bridgeless") as i64;
                let expected = n - girth_through;
                if delta != expected {
                    fail(
                        2,
                        format!("case 2 expected n-g = {expected}"),
                        &mut report.violations,
                    );
                }
            } else {
                // Case 3: a branch vertex is equidistant.
                let bound = 2 * (a_min - 1);
                if delta < bound {
                    fail(
                        3,
                        format!("case 3 expected delta >= 2(a-1) = {bound}"),
                        &mut report.violations,
                    );
                }
            }
        }
    }
    Ok(())
}

/// One sampled graph that failed the pendant-edge penalty.
#[derive(Debug, Clone, Serialize)]
pub struct PendantFailure {
    pub sample_seed: u64,
    pub dsq: i64,
    pub sz4: i64,
    pub penalty_bound: i64,
    pub closed_form_q: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PendantCheckReport {
    pub n: usize,
    pub samples: usize,
    pub failures: Vec<PendantFailure>,
}

impl PendantCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples random tricyclic graphs with a pendant edge and asserts the
/// penalty `sum delta^2 >= (n-2)^2`, hence `4 Sz* <` the closed form.
/// Requires `n >= 12`, the hypothesis the penalty argument needs.
pub fn check_pendant_lemma(samples: usize, n: usize, seed: u64) -> Result<PendantCheckReport> {
    if n < 12 {
        return Err(Error::OrderTooSmall {
            n,
            reason: "the pendant-edge penalty argument requires n >= 12",
        });
    }
    if samples < 1 {
        return Err(Error::NoSamples(samples));
    }
    let closed = fn_closed_form_q(n)?;
    let bound = (n as i64 - 2) * (n as i64 - 2);
    let mut engine = IndexEngine::new();
    let mut failures = Vec::new();
    for i in 0..samples {
        let sample_seed = seed.wrapping_add(i as u64);
        let g = random_tricyclic_with_pendant(n, sample_seed)?;
        let (sz4, dsq) = engine.sz4_and_dsq(&g)?;
        if dsq < bound || sz4 >= closed {
            failures.push(PendantFailure {
                sample_seed,
                dsq,
                sz4,
                penalty_bound: bound,
                closed_form_q: closed,
            });
        }
    }
    Ok(PendantCheckReport {
        n,
        samples,
        failures,
    })
}

/// Convenience wrapper used by tests: does this base/lengths pair appear in
/// the canonical enumeration at its order?
pub fn assignment_is_enumerated(base: &BaseMultigraph, lengths: &[usize]) -> bool {
    let canon = base.canonicalize_assignment(lengths);
    let n: usize = lengths.iter().sum::<usize>() - 2;
    base.canonical_assignments(n).contains(&canon)
}
