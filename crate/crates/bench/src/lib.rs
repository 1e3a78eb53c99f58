//! Shared fixtures for the benchmark suite.

use szeged_core::families::theta_base;
use szeged_core::{Graph, ThetaVariant};

/// The order-n extremal-shape graph: four length-2 paths plus two long
/// paths on the paired-dumbbell skeleton. This is the shape the sweep
/// evaluates most often at interesting orders.
pub fn extremal_shape(n: usize) -> Graph {
    assert!(n >= 10);
    let spare = n - 8;
    let a = spare / 2;
    let b = spare - a + 2;
    theta_base(ThetaVariant::Theta3)
        .subdivide(&[a, b, 2, 2, 2, 2])
        .expect("valid lengths")
}

/// Sweep-typical workload: every canonical pendant-free assignment at `n`.
pub fn sweep_items(n: usize) -> Vec<Graph> {
    szeged_core::base_multigraphs()
        .iter()
        .flat_map(|base| {
            base.canonical_assignments(n)
                .into_iter()
                .map(move |lengths| base.subdivide(&lengths).expect("canonical"))
        })
        .collect()
}
