//! Isomorphism classes of all gauge quandles on a small bundle.
//!
//! `cargo run --release --example census [GROUP] [BASE_SIZE]`

use gauge_quandles::bundle::DiscreteBundle;
use gauge_quandles::gauge::census;
use gauge_quandles::group::catalog;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "S3".into());
    let base: usize = args.next().map(|s| s.parse().expect("base size")).unwrap_or(1);
    let g = catalog(&name).unwrap_or_else(|e| panic!("{e}"));
    let bundle = DiscreteBundle::new(g.clone(), base).unwrap();

    let c = census(&bundle, 10_000).unwrap_or_else(|e| panic!("{e}"));
    println!("{name} over {base} point(s): {} maps, {} classes", c.maps, c.classes.len());
    for class in &c.classes {
        let rep: Vec<String> = class.representative.iter().map(|&x| g.label(x)).collect();
        println!("  {:>4} × f = [{}]", class.size, rep.join(", "));
    }
}
