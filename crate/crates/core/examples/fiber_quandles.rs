//! Each fiber of a gauge quandle is a subquandle, and its chart carries it
//! onto the generalized Alexander quandle for the section value over that point.
//!
//! `cargo run --example fiber_quandles`

use gauge_quandles::bundle::{DiscreteBundle, EquivariantMap};
use gauge_quandles::cli::render_table;
use gauge_quandles::gauge::{build, fiber_alexander, fiber_quandle, transport_fiber};
use gauge_quandles::group::catalog;
use gauge_quandles::rack::{is_morphism, verify_quandle};

fn main() {
    let g = catalog("S3").unwrap();
    let bundle = DiscreteBundle::new(g.clone(), 3).unwrap();
    let values = ["e", "(1 2)", "(1 2 3)"].map(|l| g.parse_element(l).unwrap());
    let f = EquivariantMap::new(&bundle, values.to_vec()).unwrap();
    let q = build(&f);
    println!("gauge quandle on {} points: quandle = {}", q.table().size(), verify_quandle(q.table()).is_quandle);

    for (m, value) in values.iter().enumerate() {
        let t = transport_fiber(&q, m).unwrap();
        let fiber = fiber_quandle(&q, m).unwrap();
        let alexander = fiber_alexander(&q, m).unwrap();
        println!(
            "\nfiber {m}, f(s({m})) = {}: equals Alexander {}, chart is a morphism {}",
            g.label(*value),
            t.table.same_operation(&alexander),
            is_morphism(&t.psi, &fiber, &alexander)
        );
        print!("{}", render_table(&t.table));
    }
}
