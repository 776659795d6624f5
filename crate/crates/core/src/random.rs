//! Seeded sampling of rationals and polynomials. Every randomized check in the
//! crate goes through here so a report's seed reproduces it exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::PolyHH;
use crate::scalar::{ratio, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator uniform in `-9..=9`, denominator uniform in `1..=9`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rational(rng);
        if r != Rational::default() {
            return r;
        }
    }
}

/// Dense random polynomial with `deg_h <= max_h`, `deg_hbar <= max_hbar`.
pub fn poly<R: Rng>(rng: &mut R, max_h: u32, max_hbar: u32) -> PolyHH {
    let mut p = PolyHH::zero();
    for i in 0..=max_h {
        for j in 0..=max_hbar {
            p.add_term(i, j, rational(rng));
        }
    }
    p
}

pub fn nonzero_poly<R: Rng>(rng: &mut R, max_h: u32, max_hbar: u32) -> PolyHH {
    loop {
        let p = poly(rng, max_h, max_hbar);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Coefficient list of length `deg + 1`.
pub fn coeffs<R: Rng>(rng: &mut R, deg: usize) -> Vec<Rational> {
    (0..=deg).map(|_| rational(rng)).collect()
}
