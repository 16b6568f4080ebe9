//! Symmetric states, their Majorana polynomials, and the constellation of
//! roots on the Riemann sphere.
//!
//! Amplitudes are stored in the Dicke basis with `m` ascending, so index `k`
//! of the amplitude vector is `m = k - s` and multiplies `alpha^k` in the
//! Majorana polynomial. The root `alpha = 0` is the north pole `(0, 0, 1)`
//! and the point at infinity is the south pole.

use num_complex::Complex64 as C64;
use std::fmt;

use crate::error::{Error, Result};

/// Relative threshold below which a leading coefficient counts as zero.
pub const LEADING_COEFF_TOL: f64 = 1e-12;

/// Threshold on `|b|` (after scaling the pair to unit max-norm) below which a
/// projective point is reported as infinite.
pub const INFINITY_TOL: f64 = 1e-12;

/// Square root of the binomial coefficient `C(n, k)` in floating point.
pub fn sqrt_binomial(n: usize, k: usize) -> f64 {
    binomial(n, k).sqrt()
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A point of the extended complex plane, stored as a projective pair
/// `(num : den)` scaled so that `max(|num|, |den|) = 1`.
#[derive(Clone, Copy, Debug)]
pub struct RiemannPoint {
    num: C64,
    den: C64,
}

impl RiemannPoint {
    pub const INFINITY: RiemannPoint = RiemannPoint {
        num: C64 { re: 1.0, im: 0.0 },
        den: C64 { re: 0.0, im: 0.0 },
    };

    pub fn new(num: C64, den: C64) -> Result<Self> {
        let scale = num.norm().max(den.norm());
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::InvalidPoint);
        }
        Ok(Self {
            num: num / scale,
            den: den / scale,
        })
    }

    /// The finite point `z`. Values of huge modulus are stored by their
    /// reciprocal so no precision is lost near infinity.
    pub fn finite(z: C64) -> Self {
        if z.norm() <= 1.0 {
            Self {
                num: z,
                den: C64::new(1.0, 0.0),
            }
        } else {
            let w = z.inv();
            Self::new(C64::new(1.0, 0.0), w).unwrap_or(Self::INFINITY)
        }
    }

    pub fn zero() -> Self {
        Self::finite(C64::new(0.0, 0.0))
    }

    pub fn pair(&self) -> (C64, C64) {
        (self.num, self.den)
    }

    pub fn is_infinite(&self) -> bool {
        self.den.norm() <= INFINITY_TOL
    }

    /// `None` for the point at infinity.
    pub fn value(&self) -> Option<C64> {
        if self.is_infinite() {
            None
        } else {
            Some(self.num / self.den)
        }
    }

    /// Inverse stereographic image on the unit sphere.
    pub fn to_sphere(&self) -> SphereVector {
        let (a, b) = (self.num, self.den);
        let ab = a * b.conj();
        let na = a.norm_sqr();
        let nb = b.norm_sqr();
        let d = na + nb;
        SphereVector {
            x: 2.0 * ab.re / d,
            y: 2.0 * ab.im / d,
            z: (nb - na) / d,
        }
    }

    /// Stereographic projection of a sphere point back to the plane.
    pub fn from_sphere(v: &SphereVector) -> Self {
        let (x, y, z) = (v.x, v.y, v.z);
        let r = Self::new(C64::new(x, y), C64::new(1.0 + z, 0.0));
        let s = Self::new(C64::new(1.0 - z, 0.0), C64::new(x, -y));
        let chosen = if z >= 0.0 { r } else { s };
        chosen.unwrap_or(if z >= 0.0 { Self::zero() } else { Self::INFINITY })
    }

    /// The diametrically opposite point, `alpha -> -1/conj(alpha)`.
    pub fn antipode(&self) -> Self {
        Self {
            num: -self.den.conj(),
            den: self.num.conj(),
        }
    }
}

impl fmt::Display for RiemannPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            None => write!(f, "inf"),
            Some(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

/// Chordal distance between two points, the Euclidean distance of their
/// sphere images. Lies in `[0, 2]`.
pub fn chordal_distance(p: &RiemannPoint, q: &RiemannPoint) -> f64 {
    let (a, b) = p.pair();
    let (c, d) = q.pair();
    let cross = (a * d - b * c).norm();
    let norms = ((a.norm_sqr() + b.norm_sqr()) * (c.norm_sqr() + d.norm_sqr())).sqrt();
    (2.0 * cross / norms).min(2.0)
}

/// Distance between two multisets of points under greedy nearest matching:
/// the globally closest remaining pair is matched first, and the largest
/// matched distance is returned. Infinite if the sizes differ.
///
/// Not a certified optimal matching; intended for well-separated points.
pub fn multiset_distance(a: &[RiemannPoint], b: &[RiemannPoint]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let n = a.len();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            pairs.push((chordal_distance(p, q), i, j));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut used_a = vec![false; n];
    let mut used_b = vec![false; n];
    let mut worst: f64 = 0.0;
    let mut matched = 0;
    for (d, i, j) in pairs {
        if used_a[i] || used_b[j] {
            continue;
        }
        used_a[i] = true;
        used_b[j] = true;
        worst = worst.max(d);
        matched += 1;
        if matched == n {
            break;
        }
    }
    worst
}

/// A unit vector in R^3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SphereVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, other: &SphereVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn distance(&self, other: &SphereVector) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

pub fn to_sphere(p: &RiemannPoint) -> SphereVector {
    p.to_sphere()
}

/// A normalized state of `n` qubits in the symmetric sector.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricState {
    n: usize,
    amplitudes: Vec<C64>,
}

impl SymmetricState {
    /// Builds a normalized state from Dicke amplitudes ordered `m = -s .. s`.
    pub fn from_dicke(n: usize, amplitudes: &[C64]) -> Result<Self> {
        if amplitudes.len() != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                got: amplitudes.len(),
            });
        }
        if n == 0 {
            return Err(Error::Unsupported("qubit count must be positive".into()));
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            n,
            amplitudes: amplitudes.iter().map(|a| a / norm).collect(),
        })
    }

    /// The Dicke state with `k` excitations (`m = k - n/2`).
    pub fn dicke(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::OutOfRange {
                name: "k",
                value: k as f64,
                lo: 0.0,
                hi: n as f64,
            });
        }
        let mut a = vec![C64::new(0.0, 0.0); n + 1];
        a[k] = C64::new(1.0, 0.0);
        Self::from_dicke(n, &a)
    }

    pub fn ghz(n: usize) -> Result<Self> {
        let mut a = vec![C64::new(0.0, 0.0); n + 1];
        a[0] = C64::new(1.0, 0.0);
        a[n] = C64::new(1.0, 0.0);
        Self::from_dicke(n, &a)
    }

    pub fn w(n: usize) -> Result<Self> {
        Self::dicke(n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// `|<self|other>|`, insensitive to global phase.
    pub fn overlap(&self, other: &SymmetricState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .norm()
    }

    pub fn majorana_polynomial(&self) -> MajoranaPolynomial {
        majorana_polynomial(self)
    }
}

/// Coefficients of the Majorana polynomial, index `k` multiplying `alpha^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct MajoranaPolynomial {
    n: usize,
    coefficients: Vec<C64>,
}

impl MajoranaPolynomial {
    pub fn new(n: usize, coefficients: Vec<C64>) -> Result<Self> {
        if coefficients.len() != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                got: coefficients.len(),
            });
        }
        Ok(Self { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn max_coefficient(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Degree after discarding leading coefficients below the relative
    /// threshold. `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let max = self.max_coefficient();
        if max == 0.0 {
            return None;
        }
        self.coefficients
            .iter()
            .rposition(|c| c.norm() > LEADING_COEFF_TOL * max)
    }

    /// Number of roots at infinity, `n - degree`.
    pub fn infinite_roots(&self) -> usize {
        self.degree().map_or(self.n, |d| self.n - d)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coefficients
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Divides out the binomial factors and normalizes.
    pub fn to_state(&self) -> Result<SymmetricState> {
        let a: Vec<C64> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c / sqrt_binomial(self.n, k))
            .collect();
        SymmetricState::from_dicke(self.n, &a)
    }
}

pub fn majorana_polynomial(state: &SymmetricState) -> MajoranaPolynomial {
    let n = state.n();
    let coefficients = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(k, a)| a * sqrt_binomial(n, k))
        .collect();
    MajoranaPolynomial { n, coefficients }
}

/// Expands `prod_i (den_i * alpha - num_i)` over the projective roots. Each
/// point at infinity contributes a constant factor and lowers the degree.
pub fn polynomial_from_roots(points: &[RiemannPoint]) -> Result<MajoranaPolynomial> {
    if points.is_empty() {
        return Err(Error::EmptyRoots);
    }
    let n = points.len();
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[0] = C64::new(1.0, 0.0);
    for (deg, p) in points.iter().enumerate() {
        let (a, b) = p.pair();
        for k in (0..=deg + 1).rev() {
            let shifted = if k > 0 { coeffs[k - 1] * b } else { C64::new(0.0, 0.0) };
            coeffs[k] = shifted - coeffs[k] * a;
        }
    }
    MajoranaPolynomial::new(n, coeffs)
}

pub fn state_from_roots(points: &[RiemannPoint]) -> Result<SymmetricState> {
    polynomial_from_roots(points)?.to_state()
}
