//! Seeded test inputs shared by the subcommands and the check suite.
//! Identical seeds give identical inputs on every platform.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use szego_lab_core::circle::FourierCoeffs;

fn unit_square(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Trig polynomial with modes in [-max_mode, max_mode].
pub fn trig_poly(rng: &mut ChaCha8Rng, max_mode: i64) -> FourierCoeffs {
    let coeffs: Vec<Complex64> = (0..2 * max_mode + 1).map(|_| unit_square(rng)).collect();
    FourierCoeffs::new(-max_mode, coeffs).expect("mode window is valid")
}

/// Polynomial in z with modes in [0, max_mode].
pub fn polynomial(rng: &mut ChaCha8Rng, max_mode: i64) -> FourierCoeffs {
    let coeffs: Vec<Complex64> = (0..max_mode + 1).map(|_| unit_square(rng)).collect();
    FourierCoeffs::new(0, coeffs).expect("mode window is valid")
}

pub fn interior_point(rng: &mut ChaCha8Rng, max_r: f64) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.0..max_r), rng.gen_range(0.0..2.0 * PI))
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        let a = trig_poly(&mut rng_from(5), 4);
        let b = trig_poly(&mut rng_from(5), 4);
        assert_eq!(a, b);
        let p = interior_point(&mut rng_from(9), 0.6);
        let q = interior_point(&mut rng_from(9), 0.6);
        assert_eq!(p, q);
        assert!(p.norm() < 0.6);
    }
}
