//! The rack `p₁ ◁ p₂ = p₁·f(p₂)` of an equivariant map, and how its
//! associated quandle recovers the gauge quandle.
//!
//! `cargo run --example rack_from_map`

use gauge_quandles::bundle::{DiscreteBundle, EquivariantMap};
use gauge_quandles::cli::render_table;
use gauge_quandles::gauge::{build, rack_from_map};
use gauge_quandles::group::catalog;
use gauge_quandles::rack::{associated_quandle, iota, verify_rack};

fn main() {
    let g = catalog("Z3").unwrap();
    let bundle = DiscreteBundle::new(g, 2).unwrap();
    let f = EquivariantMap::new(&bundle, vec![1, 2]).unwrap();

    let rack = rack_from_map(&f);
    let report = verify_rack(&rack);
    println!("rack over Z3 × 2 points, f = {:?}", f.section_values());
    print!("{}", render_table(&rack));
    println!(
        "rack: {}, quandle: {}, idempotency fails at {:?}",
        report.is_rack, report.is_quandle, report.idem_violations
    );

    let iotas: Vec<usize> = (0..rack.size()).map(|x| iota(&rack, x).unwrap()).collect();
    println!("ι = {iotas:?}");
    let assoc = associated_quandle(&rack).unwrap();
    println!("associated quandle equals gauge quandle: {}", assoc.same_operation(build(&f).table()));
}
