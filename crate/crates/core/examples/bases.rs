//! Prints the catalogue of base multigraphs with their stable ids, the
//! ones the `family base:<ID>` CLI syntax refers to.

fn main() {
    for base in szeged_core::base_multigraphs() {
        let theta = base
            .theta_variant()
            .map(|v| format!("  [{}]", v.name()))
            .unwrap_or_default();
        println!("{base}  min_order={}{theta}", base.min_subdivision_order());
    }
}
