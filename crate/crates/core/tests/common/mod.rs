#![allow(dead_code)]

use majorana::{find_roots, RiemannPoint, SymmetricState};
use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn roots(s: &SymmetricState) -> Vec<RiemannPoint> {
    find_roots(&s.majorana_polynomial(), 1e-12).expect("roots")
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `|a - b| / max(1, |b|)`.
pub fn rel_err(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Smallest `|m - target| / max(1, |target|)` over the finite orbit members.
pub fn orbit_distance(lambda: &RiemannPoint, target: C64) -> f64 {
    majorana::anharmonic_orbit(lambda)
        .iter()
        .filter_map(|m| m.value())
        .map(|m| rel_err(m, target))
        .fold(f64::INFINITY, f64::min)
}
