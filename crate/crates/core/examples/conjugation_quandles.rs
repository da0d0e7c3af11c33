//! Conjugation quandles of catalog groups, their axiom reports, and an
//! isomorphism search between two of them.
//!
//! `cargo run --example conjugation_quandles`

use gauge_quandles::cli::render_table;
use gauge_quandles::group::catalog;
use gauge_quandles::rack::{conjugation_quandle, find_isomorphism, verify_quandle};

fn main() {
    let s3 = catalog("S3").unwrap();
    let conj = conjugation_quandle(&s3);
    println!("Conj(S3), a ◁ b = b⁻¹ab:");
    print!("{}", render_table(&conj));
    println!("orbits: {:?}\n", conj.orbits());

    for name in ["Z4", "D3", "D4", "Q8", "S4"] {
        let g = catalog(name).unwrap();
        let report = verify_quandle(&conjugation_quandle(&g));
        println!("Conj({name:>2}): {} elements, quandle = {}", g.order(), report.is_quandle);
    }

    // non-isomorphic groups with isomorphic conjugation quandles
    let d4 = conjugation_quandle(&catalog("D4").unwrap());
    let q8 = conjugation_quandle(&catalog("Q8").unwrap());
    match find_isomorphism(&d4, &q8).unwrap() {
        Some(f) => println!("\nConj(D4) ≅ Conj(Q8) via {:?}", f.as_slice()),
        None => println!("\nConj(D4) and Conj(Q8) are not isomorphic"),
    }
}
