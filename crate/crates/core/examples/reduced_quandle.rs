//! Quotients of a gauge quandle by a subgroup, and the homogeneous quandle
//! they match when the subgroup is normal.
//!
//! `cargo run --example reduced_quandle`

use gauge_quandles::bundle::{DiscreteBundle, EquivariantMap};
use gauge_quandles::cli::render_table;
use gauge_quandles::gauge::{build, homogeneous_quandle, reduce};
use gauge_quandles::group::{catalog, Subgroup};
use gauge_quandles::Error;

fn main() {
    let g = catalog("S3").unwrap();
    let bundle = DiscreteBundle::new(g.clone(), 1).unwrap();
    let a3 = Subgroup::generated_by(&g, &[g.parse_element("(1 2 3)").unwrap()]).unwrap();
    println!("H = {:?}, normal: {}", a3.elements().iter().map(|&x| g.label(x)).collect::<Vec<_>>(), a3.is_normal(&g));

    for label in ["(1 2)", "(1 2 3)"] {
        let c = g.parse_element(label).unwrap();
        let q = build(&EquivariantMap::new(&bundle, vec![c]).unwrap());
        let r = reduce(&q, &a3).unwrap();
        println!("\nf(e) = {label}: {} classes", r.classes.len());
        print!("{}", render_table(&r.table));
        match homogeneous_quandle(&g, &a3, c) {
            Ok(h) => println!("homogeneous quandle on H\\G agrees: {}", h.table.same_operation(&r.table)),
            Err(e) => println!("no homogeneous quandle: {e}"),
        }
    }

    // <(1 2)> is not normalized by (1 2 3)
    let h = Subgroup::generated_by(&g, &[g.parse_element("(1 2)").unwrap()]).unwrap();
    let q = build(&EquivariantMap::new(&bundle, vec![g.parse_element("(1 2 3)").unwrap()]).unwrap());
    if let Err(Error::NormalizerViolation { point, element }) = reduce(&q, &h) {
        println!("\nreducing by <(1 2)> fails: f({point}) conjugates {} out of H", g.label(element));
    }
}
