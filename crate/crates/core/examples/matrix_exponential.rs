//! `mat_exp` against closed forms: Rodrigues for so(3), `det e^A = e^{tr A}`,
//! and a nilpotent block where the series terminates.
//!
//! `cargo run --example matrix_exponential`

use gauge_quandles::lie::{mat_exp, MatrixGroupModel};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let quarter = std::f64::consts::FRAC_PI_2;
    let lz = DMatrix::from_row_slice(3, 3, &[0.0, -quarter, 0.0, quarter, 0.0, 0.0, 0.0, 0.0, 0.0]);
    println!("exp(π/2 · L_z) = {:.3}", mat_exp(&lz).unwrap());

    let jordan = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
    println!("exp(N) for a 3×3 nilpotent N = {:.3}", mat_exp(&jordan).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let gl = MatrixGroupModel::gl(4);
    let a = gl.random_algebra(&mut rng, 2.0);
    let det = mat_exp(&a).unwrap().determinant();
    println!("random 4×4: det e^A = {det:.6}, e^(tr A) = {:.6}", a.trace().exp());

    let su2 = MatrixGroupModel::su2();
    let x = su2.random_algebra(&mut rng, 3.0);
    let g = mat_exp(&x).unwrap();
    let unitarity = (g.adjoint() * &g - DMatrix::<Complex64>::identity(2, 2)).norm();
    println!("su(2) sample: ‖g*g − I‖ = {unitarity:.1e}, det g = {:.6}", g.determinant());
}
