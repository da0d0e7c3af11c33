//! Over a one-point base the gauge quandle of `f` is the generalized
//! Alexander quandle of `G` for conjugation by `f(e)`.
//!
//! `cargo run --example alexander_over_a_point [GROUP]`

use gauge_quandles::bundle::{enumerate_maps, DiscreteBundle, DEFAULT_ENUMERATION_CAP};
use gauge_quandles::cli::render_table;
use gauge_quandles::gauge::build;
use gauge_quandles::group::catalog;
use gauge_quandles::rack::generalized_alexander;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let g = catalog(&name).unwrap_or_else(|e| panic!("{e}"));
    let bundle = DiscreteBundle::new(g.clone(), 1).unwrap();

    for f in enumerate_maps(&bundle, DEFAULT_ENUMERATION_CAP).unwrap() {
        let c = f.section_values()[0];
        let q = build(&f);
        let alexander = generalized_alexander(&g, &g.inner_automorphism(c)).unwrap();
        println!("f(e) = {:<8} equal to Alexander: {}", g.label(c), q.table().same_operation(&alexander));
    }

    let f = enumerate_maps(&bundle, DEFAULT_ENUMERATION_CAP).unwrap().nth(1).unwrap();
    println!("\nf(e) = {}:", g.label(f.section_values()[0]));
    print!("{}", render_table(build(&f).table()));
}
