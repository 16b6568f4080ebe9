//! Random states, operators and point sets for property checks, batch
//! sweeps, and the CLI's random transforms.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, UnitDisc};

use crate::oracle::Qubit;
use crate::state::{chordal_distance, RiemannPoint, SymmetricState};
use crate::transforms::{IloParameters, MobiusTransform};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn disc<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let [x, y]: [f64; 2] = UnitDisc.sample(rng);
    C64::new(x, y)
}

/// Independent complex Gaussian Dicke amplitudes, normalized.
pub fn random_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SymmetricState {
    let amps: Vec<C64> = (0..=n).map(|_| gaussian(rng)).collect();
    SymmetricState::from_dicke(n, &amps).expect("gaussian vector is nonzero")
}

pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> Qubit {
    Qubit(gaussian(rng), gaussian(rng)).normalized().expect("nonzero")
}

/// Uniform axis, `|h|` uniform in `[0, pi]`.
pub fn random_h<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let axis: [f64; 3] = rand_distr::UnitSphere.sample(rng);
    let len = rng.random_range(0.0..std::f64::consts::PI);
    axis.map(|x| x * len)
}

/// Haar-ish random 2x2 unitary from a normalized Gaussian quaternion.
pub fn random_unitary2<R: Rng + ?Sized>(rng: &mut R) -> [[C64; 2]; 2] {
    let (a, b) = (gaussian(rng), gaussian(rng));
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / n, b / n);
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    [[a, -b.conj() * phase], [b, a.conj() * phase]]
}

/// ILO parameters with `beta1, beta2, h` drawn from the unit disc, rejected
/// when too close to the domain boundary or when `|gamma - 1/gamma| >= 3`.
/// Stronger maps squeeze the constellation into a cluster whose roots are
/// ill-conditioned in the amplitudes.
pub fn random_ilo<R: Rng + ?Sized>(rng: &mut R) -> IloParameters {
    loop {
        if let Some(p) = try_random_ilo(rng, 1000) {
            return p;
        }
    }
}

/// [`random_ilo`] with at most `attempts` draws.
pub fn try_random_ilo<R: Rng + ?Sized>(rng: &mut R, attempts: usize) -> Option<IloParameters> {
    for _ in 0..attempts {
        let (b1, b2, h) = (disc(rng), disc(rng), disc(rng));
        if (b1 - b2).norm() < 0.1 || (b1 + b2).norm() < 0.1 {
            continue;
        }
        let Ok(p) = IloParameters::new(b1, b2, h) else { continue };
        let g = p.gamma();
        if (g - g.inv()).norm() < 3.0 {
            return Some(p);
        }
    }
    None
}

/// Elliptic (unitary) ILO: `beta1 = -1/conj(beta2)`, real `h`.
pub fn random_unitary_ilo<R: Rng + ?Sized>(rng: &mut R) -> IloParameters {
    loop {
        let b2 = disc(rng);
        if b2.norm() < 0.1 {
            continue;
        }
        let b1 = -b2.conj().inv();
        let h = C64::new(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI), 0.0);
        if let Ok(p) = IloParameters::new(b1, b2, h) {
            if (b1 + b2).norm() > 0.1 {
                return p;
            }
        }
    }
}

/// Mobius map with Gaussian entries and `|det| >= 0.1 * max|entry|^2`.
pub fn random_mobius<R: Rng + ?Sized>(rng: &mut R) -> MobiusTransform {
    loop {
        let (a, b, c, d) = (gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng));
        let scale = [a, b, c, d].iter().map(|x| x.norm()).fold(0.0, f64::max);
        if (a * d - b * c).norm() >= 0.1 * scale * scale {
            return MobiusTransform::new(a, b, c, d).expect("well conditioned");
        }
    }
}

/// `n` points uniform on the sphere with pairwise chordal distance at least
/// `min_sep`.
pub fn random_points<R: Rng + ?Sized>(n: usize, min_sep: f64, rng: &mut R) -> Vec<RiemannPoint> {
    let mut pts: Vec<RiemannPoint> = Vec::with_capacity(n);
    while pts.len() < n {
        let v: [f64; 3] = rand_distr::UnitSphere.sample(rng);
        let p = RiemannPoint::from_sphere(&crate::state::SphereVector::new(v[0], v[1], v[2]));
        if pts.iter().all(|q| chordal_distance(q, &p) >= min_sep) {
            pts.push(p);
        }
    }
    pts
}

/// Complex number uniform in the square `[-r, r]^2`.
pub fn random_complex<R: Rng + ?Sized>(r: f64, rng: &mut R) -> C64 {
    C64::new(rng.random_range(-r..r), rng.random_range(-r..r))
}
