//! Equivariant maps under pointwise multiplication are isomorphic to the
//! group of gauge transformations, with `φ_{f₁f₂} = φ_{f₁} ∘ φ_{f₂}`.
//!
//! `cargo run --example gauge_group`

use std::collections::HashSet;

use gauge_quandles::bundle::{enumerate_maps, DiscreteBundle};
use gauge_quandles::group::catalog;

fn main() {
    let bundle = DiscreteBundle::new(catalog("S3").unwrap(), 2).unwrap();
    let maps: Vec<_> = enumerate_maps(&bundle, 1_000).unwrap().collect();
    let gauges: Vec<_> = maps.iter().map(|f| f.to_gauge()).collect();

    let distinct: HashSet<_> = gauges.iter().map(|phi| phi.images().as_slice().to_vec()).collect();
    println!("{} maps, {} distinct gauge transformations", maps.len(), distinct.len());

    let mut multiplicative = true;
    for (f1, phi1) in maps.iter().zip(&gauges) {
        for (f2, phi2) in maps.iter().zip(&gauges) {
            multiplicative &= f1.compose(f2).unwrap().to_gauge() == phi1.after(phi2).unwrap();
        }
    }
    println!("φ(f₁f₂) = φ(f₁) ∘ φ(f₂) for all pairs: {multiplicative}");

    let f = &maps[7];
    let phi = f.to_gauge();
    println!("\nf = {:?}", f.section_values());
    println!("φ_f = {:?}", phi.images().as_slice());
    for m in 0..bundle.base_size() {
        println!("on fiber {m}, φ_f is left multiplication by {:?}", phi.chart_multiplier(m));
    }
}
