#![allow(dead_code)]

use num_complex::Complex64;
use paralg::fock::SparseOperator;
use paralg::grading::Degree;
use paralg::scalar::Scalar;
use rand::Rng;

/// A nonzero Gaussian rational with rational modulus: `q·(m² − n² + 2mn·i)`.
pub fn pythagorean<R: Rng>(rng: &mut R) -> Scalar {
    let m: i64 = rng.gen_range(1..6);
    let n: i64 = rng.gen_range(0..6);
    let num: i64 = rng.gen_range(1..7) * if rng.gen_bool(0.5) { -1 } else { 1 };
    let den: i64 = rng.gen_range(1..5);
    let z = Scalar::gauss(m * m - n * n, 2 * m * n);
    let z = if z.is_zero() { Scalar::one() } else { z };
    &z * &Scalar::ratio(num, den)
}

pub fn random_degree<R: Rng>(rng: &mut R) -> Degree {
    Degree::ALL[rng.gen_range(0..4)]
}

/// A random sparse operator with about `density·dim²` complex entries.
pub fn random_op<R: Rng>(rng: &mut R, dim: usize, density: f64, degree: Degree) -> SparseOperator {
    let mut t = Vec::new();
    for r in 0..dim {
        for c in 0..dim {
            if rng.gen_bool(density) {
                t.push((r, c, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))));
            }
        }
    }
    SparseOperator::from_triplets(dim, t, degree, 1)
}

/// `max|x − y|` relative to `max(1, max|x|, max|y|)`.
pub fn rel_diff(x: &SparseOperator, y: &SparseOperator) -> f64 {
    let d = x.sub(y).expect("same dimension").max_abs();
    d / 1f64.max(x.max_abs()).max(y.max_abs())
}
