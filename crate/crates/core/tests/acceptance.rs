//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured evidence (run with `--nocapture` to see them). Tolerances
//! are zero everywhere: every comparison is exact integer equality.

mod common;

use std::time::{Duration, Instant};

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use szeged_core::families::theta_base;
use szeged_core::random::{random_connected, random_connected_bipartite, random_tree};
use szeged_core::*;

/// Brute-force classes per order, shared by criteria 6 and 9.
static SMALL_CLASSES: Lazy<Vec<(usize, Vec<Graph>)>> = Lazy::new(|| {
    (4..=8)
        .map(|n| (n, enumerate_small(n).expect("within the cap")))
        .collect()
});

fn mixed_density_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(3..=40usize);
    let max_extra = n * (n - 1) / 2 - (n - 1);
    let extra = match rng.gen_range(0..3) {
        0 => rng.gen_range(0..=n.min(max_extra)),
        1 => rng.gen_range(0..=(3 * n).min(max_extra)),
        _ => rng.gen_range(0..=max_extra),
    };
    random_connected(n, extra, rng)
}

#[test]
fn criterion_1_exact_identity_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a31);
    let mut checked = 0usize;

    for _ in 0..500 {
        let g = mixed_density_graph(&mut rng);
        let direct = revised_szeged_q(&g).unwrap();
        let identity = revised_szeged_q_via_identity(&g).unwrap();
        assert_eq!(direct, identity, "identity failed on {g:?}");
        checked += 1;
    }

    // Every Theta family graph with total length at most 20, one
    // representative per isomorphism class.
    for variant in [
        ThetaVariant::Theta1,
        ThetaVariant::Theta2,
        ThetaVariant::Theta3,
        ThetaVariant::Theta4,
    ] {
        let base = theta_base(variant);
        for n in 4..=18usize {
            // total length = n + 2 <= 20
            for lengths in base.canonical_assignments(n) {
                let g = base.subdivide(&lengths).unwrap();
                let direct = revised_szeged_q(&g).unwrap();
                let identity = revised_szeged_q_via_identity(&g).unwrap();
                assert_eq!(direct, identity, "{variant:?} {lengths:?}");
                checked += 1;
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "identity suite took {elapsed:?}"
    );
    println!(
        "criterion 1 PASS: exact identity on {checked} graphs (500 random + theta families) in {elapsed:?}"
    );
}

#[test]
fn criterion_2_closed_form_targets() {
    assert_eq!(fn_closed_form_q(12).unwrap(), 2000);
    assert_eq!(fn_closed_form_q(29).unwrap(), 26053);
    assert_eq!(fn_closed_form_q(30).unwrap(), 28784);

    let k4 = graph::small::complete(4);
    let r = index_report(&k4).unwrap();
    assert_eq!(r.wiener, 6);
    assert_eq!(r.szeged, 6);
    assert_eq!(r.sz_star_q, 96);
    println!(
        "criterion 2 PASS: closed form (12,29,30) = (2000, 26053, 28784); K4 = {{W=6, Sz=6, sz4=96}}"
    );
}

#[test]
fn criterion_3_theorem_verification_at_desk_scale() {
    let budget = Duration::from_secs(600);
    for n in 29..=31usize {
        let start = Instant::now();
        let report = sweep_pendant_free(n).unwrap();
        let elapsed = start.elapsed();
        assert!(elapsed <= budget, "n={n} sweep took {elapsed:?}");
        assert_eq!(
            report.max_sz_star_q, report.closed_form_q,
            "n={n}: sweep max != closed form"
        );
        assert_eq!(
            report.argmax.len(),
            1,
            "n={n}: argmax not unique: {:?}",
            report.argmax
        );
        println!(
            "criterion 3 PASS: n={n} max = closed form = {} ({}), unique argmax {:?} over {} graphs in {elapsed:?}",
            report.max_sz_star_q,
            format_quarters(report.max_sz_star_q),
            report.argmax[0].lengths,
            report.count_scanned
        );
    }
}

#[test]
fn criterion_4_lemma31_exhaustive_check() {
    let start = Instant::now();
    let report = check_lemma31(30).unwrap();
    let elapsed = start.elapsed();
    assert!(
        report.violations.is_empty(),
        "violations: {:#?}",
        report.violations
    );
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 4 PASS: Theta1 delta characterization on {} graphs / {} edges, no counterexamples, in {elapsed:?}",
        report.graphs_checked, report.edges_checked
    );
}

#[test]
fn criterion_5_pendant_penalty() {
    for n in [12usize, 20, 29] {
        let report = check_pendant_lemma(200, n, 0xbeef + n as u64).unwrap();
        assert!(report.passed(), "n={n} failures: {:?}", report.failures);
        println!(
            "criterion 5 PASS: n={n}, 200 random pendant tricyclic graphs all satisfy dsq >= {} and sz4 < {}",
            (n - 2) * (n - 2),
            fn_closed_form_q(n).unwrap()
        );
    }
}

#[test]
fn criterion_6_oracle_equivalence() {
    for (n, classes) in SMALL_CLASSES.iter() {
        let brute: Vec<String> = classes
            .iter()
            .filter(|g| g.min_degree() >= 2)
            .map(|g| certificate(g).unwrap().into_string())
            .collect();
        let mut family: Vec<String> = enumerate_assignments(*n)
            .unwrap()
            .map(|a| {
                let g = subdivide(&a).unwrap();
                certificate(&g).unwrap().into_string()
            })
            .collect();
        family.sort();
        let dup_free = family.windows(2).all(|w| w[0] != w[1]);
        assert!(dup_free, "n={n}: family stream emitted duplicates");
        assert_eq!(family, brute, "n={n}: family != brute force");
        if *n == 4 {
            assert_eq!(classes.len(), 1);
            assert_eq!(classes[0], graph::small::complete(4));
        }
        println!(
            "criterion 6 PASS: n={n}, family generator = brute force ({} pendant-free classes of {})",
            family.len(),
            classes.len()
        );
    }
}

#[test]
fn criterion_7_tree_and_bipartite_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ee5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=200usize);
        let t = random_tree(n, &mut rng);
        let w = wiener(&t).unwrap();
        let sz = szeged(&t).unwrap();
        assert_eq!(w, sz, "tree W != Sz at n={n}");
    }
    for _ in 0..100 {
        let n = rng.gen_range(2..=60usize);
        let extra = rng.gen_range(0..=2 * n);
        let g = random_connected_bipartite(n, extra, &mut rng);
        let sz4 = revised_szeged_q(&g).unwrap();
        let sz = szeged(&g).unwrap();
        assert_eq!(sz4, 4 * sz, "bipartite sz4 != 4 Sz at n={n}");
    }
    println!(
        "criterion 7 PASS: W = Sz on 100 random trees (n <= 200); sz4 = 4 Sz on 100 random connected bipartite graphs"
    );
}

#[test]
fn criterion_8_crossover_scan() {
    let report = crossover_scan(7, 32).unwrap();
    for row in &report.rows {
        if row.n >= 29 {
            assert!(
                row.exceeders.is_empty(),
                "n={}: unexpected exceeders {:?}",
                row.n,
                row.exceeders
            );
        }
    }
    // Data emitted, not asserted: where the exceeders actually stop, and
    // what exceeds below that. The n >= 23 improvement claim is thereby
    // checked against the sweep.
    let threshold = report.observed_threshold;
    for row in report.rows.iter().filter(|r| !r.exceeders.is_empty()) {
        let top = &row.exceeders[0];
        println!(
            "criterion 8 data: n={} closed={} max={} exceeders={} (top: {} {:?} sz4={})",
            row.n,
            row.closed_form_q,
            row.sweep_max,
            row.exceeders.len(),
            top.base_id,
            top.lengths,
            top.sz4
        );
    }
    println!(
        "criterion 8 PASS: zero exceeders for all n >= 29; observed threshold in [7,32] = {threshold:?} (remark claims <= 23: {})",
        threshold.is_some_and(|t| t <= 23)
    );
}

#[test]
fn criterion_9_graph6_format_fidelity() {
    let mut corpus: Vec<Graph> = Vec::new();
    for (_, classes) in SMALL_CLASSES.iter() {
        corpus.extend(classes.iter().cloned());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f6f);
    while corpus.len() < 1000 {
        let pick = rng.gen_range(0..4);
        let g = match pick {
            0 => random_tree(rng.gen_range(1..=70), &mut rng),
            1 => mixed_density_graph(&mut rng),
            2 => random_connected_bipartite(rng.gen_range(2..=50), 10, &mut rng),
            _ => random_tricyclic_with_pendant(rng.gen_range(5..=60), rng.gen()).unwrap(),
        };
        corpus.push(g);
    }
    for g in &corpus {
        let enc = graph6::encode(g);
        let dec = graph6::decode(enc.as_bytes()).unwrap();
        assert_eq!(&dec, g, "decode(encode(g)) != g");
        assert_eq!(graph6::encode(&dec).as_bytes(), enc.as_bytes());
    }
    println!(
        "criterion 9 PASS: byte-exact graph6 round-trip on {} graphs (including all {} brute-force classes)",
        corpus.len(),
        SMALL_CLASSES.iter().map(|(_, c)| c.len()).sum::<usize>()
    );
}
