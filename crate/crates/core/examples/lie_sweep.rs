//! Numerical checks of parametrized gauge quandles over SO(3) and SU(2).
//!
//! `cargo run --release --example lie_sweep [SEED]`

use gauge_quandles::lie::{run_sweep, ModelKind, SweepConfig};

fn main() {
    let seed = std::env::args().nth(1).map(|s| s.parse().expect("seed")).unwrap_or(2024);
    for model in [ModelKind::SO3, ModelKind::SU2, ModelKind::GL(2)] {
        let cfg = SweepConfig { model, base_points: 3, samples: 100, seed, t_range: [-2.0, 2.0], tolerance: 1e-8 };
        let report = run_sweep(&cfg).unwrap();
        println!("{model} (seed {seed}):");
        for r in &report.axioms {
            println!("  {:<22} {:.2e}  {}", r.check, r.max_residual, if r.passed { "ok" } else { "FAIL" });
        }
        let n = &report.noether;
        println!(
            "  noether                agree {}/{}, matched pairs {}/{}",
            n.random_agreements, n.random_pairs, n.constructed_fixing_both_ways, n.constructed_pairs
        );
    }
}
