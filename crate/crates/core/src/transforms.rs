//! Operators on the symmetric sector and their geometric actions on the
//! Majorana constellation.
//!
//! A symmetric local unitary `exp(i h.S)` rotates every Majorana point by the
//! same rotation. A symmetric invertible local operation acts on the roots
//! as a Mobius transformation, and time reversal sends every point to its
//! antipode.
//!
//! With the conventions of [`crate::state`] the point rotation induced by
//! `exp(i h.S)` is the rotation by angle `|h|` about the axis
//! `(h_x, h_y, -h_z)`; see [`rotation_from_h`].

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{exp_i_hermitian, expm, unitarity_defect, CMatrix};
use crate::oracle::{DenseState, Qubit};
use crate::state::{RiemannPoint, SphereVector, SymmetricState};

/// Spin operators `S+`, `S-`, `Sz` in the Dicke basis, index `k = m + s`.
#[derive(Clone, Debug)]
pub struct SpinOperators {
    pub plus: CMatrix,
    pub minus: CMatrix,
    pub z: CMatrix,
}

impl SpinOperators {
    pub fn new(n: usize) -> Self {
        let dim = n + 1;
        let s = n as f64 / 2.0;
        let mut plus = CMatrix::zeros(dim, dim);
        let mut z = CMatrix::zeros(dim, dim);
        for k in 0..dim {
            let m = k as f64 - s;
            z[(k, k)] = C64::new(m, 0.0);
            if k + 1 < dim {
                plus[(k + 1, k)] = C64::new((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
            }
        }
        let minus = plus.adjoint();
        Self { plus, minus, z }
    }

    pub fn x(&self) -> CMatrix {
        (&self.plus + &self.minus) * C64::new(0.5, 0.0)
    }

    pub fn y(&self) -> CMatrix {
        (&self.plus - &self.minus) * C64::new(0.0, -0.5)
    }
}

/// A linear operator on the symmetric sector of `n` qubits.
#[derive(Clone, Debug)]
pub struct SymmetricOperator {
    n: usize,
    matrix: CMatrix,
}

impl SymmetricOperator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Applies the operator and renormalizes.
    pub fn apply(&self, state: &SymmetricState) -> Result<SymmetricState> {
        if state.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n + 1,
                got: state.n() + 1,
            });
        }
        let v = nalgebra::DVector::from_column_slice(state.amplitudes());
        let out = &self.matrix * v;
        SymmetricState::from_dicke(self.n, out.as_slice())
    }

    pub fn compose(&self, other: &SymmetricOperator) -> SymmetricOperator {
        SymmetricOperator {
            n: self.n,
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(&self.matrix)
    }
}

/// `U = exp(i h.S)`, through the eigendecomposition of the Hermitian
/// generator.
pub fn lu_unitary(h: [f64; 3], n: usize) -> Result<SymmetricOperator> {
    if n == 0 {
        return Err(Error::Unsupported("qubit count must be positive".into()));
    }
    let s = SpinOperators::new(n);
    let gen = s.x() * C64::new(h[0], 0.0) + s.y() * C64::new(h[1], 0.0) + &s.z * C64::new(h[2], 0.0);
    Ok(SymmetricOperator {
        n,
        matrix: exp_i_hermitian(&gen),
    })
}

/// Rotation of the Majorana points induced by `lu_unitary(h, n)`: angle
/// `|h|` about the unit axis along `(h_x, h_y, -h_z)`.
pub fn rotation_from_h(h: [f64; 3]) -> Matrix3<f64> {
    let axis = Vector3::new(h[0], h[1], -h[2]);
    let angle = axis.norm();
    if angle == 0.0 {
        return Matrix3::identity();
    }
    let k = axis / angle;
    let cross = Matrix3::new(0.0, -k.z, k.y, k.z, 0.0, -k.x, -k.y, k.x, 0.0);
    Matrix3::identity() + cross * angle.sin() + cross * cross * (1.0 - angle.cos())
}

pub fn rotate(r: &Matrix3<f64>, v: &SphereVector) -> SphereVector {
    let w = r * Vector3::new(v.x, v.y, v.z);
    SphereVector::new(w.x, w.y, w.z)
}

/// Parameters `(beta1, beta2, h)` of a symmetric invertible local operation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IloParameters {
    beta1: C64,
    beta2: C64,
    h: C64,
}

const DOMAIN_TOL: f64 = 1e-12;

impl IloParameters {
    pub fn new(beta1: C64, beta2: C64, h: C64) -> Result<Self> {
        if (beta1 - beta2).norm() <= DOMAIN_TOL {
            return Err(Error::Domain("beta1 = beta2".into()));
        }
        if (beta1 + beta2).norm() <= DOMAIN_TOL {
            return Err(Error::Domain("beta1 + beta2 = 0".into()));
        }
        Ok(Self { beta1, beta2, h })
    }

    pub fn beta1(&self) -> C64 {
        self.beta1
    }

    pub fn beta2(&self) -> C64 {
        self.beta2
    }

    pub fn h(&self) -> C64 {
        self.h
    }

    /// `gamma = exp(i (h/2) (beta1 - beta2)/(beta1 + beta2))`.
    pub fn gamma(&self) -> C64 {
        let i = C64::new(0.0, 1.0);
        (i * self.h * 0.5 * (self.beta1 - self.beta2) / (self.beta1 + self.beta2)).exp()
    }

    /// Same fixed points, opposite exponent.
    pub fn inverse(&self) -> Self {
        Self { h: -self.h, ..*self }
    }

    /// `beta1 = -1/conj(beta2)` and `h` real.
    pub fn is_unitary_subclass(&self, tol: f64) -> bool {
        let target = -self.beta2.conj().inv();
        (self.beta1 - target).norm() <= tol * (1.0 + target.norm()) && self.h.im.abs() <= tol
    }
}

/// `A = exp(i h (S+/(b1+b2) + Sz - b1 b2 S-/(b1+b2)))`, by scaling and
/// squaring.
pub fn ilo_operator(p: &IloParameters, n: usize) -> Result<SymmetricOperator> {
    if n == 0 {
        return Err(Error::Unsupported("qubit count must be positive".into()));
    }
    let s = SpinOperators::new(n);
    let sum = p.beta1 + p.beta2;
    let gen = &s.plus * sum.inv() + &s.z - &s.minus * (p.beta1 * p.beta2 / sum);
    let i = C64::new(0.0, 1.0);
    Ok(SymmetricOperator {
        n,
        matrix: expm(&(gen * (i * p.h))),
    })
}

/// A Mobius transformation `z -> (a z + b)/(c z + d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusTransform {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl MobiusTransform {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let det = a * d - b * c;
        let scale = [a, b, c, d].iter().map(|x| x.norm()).fold(0.0, f64::max);
        if scale == 0.0 || det.norm() <= 1e-14 * scale * scale {
            return Err(Error::SingularMobius);
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        let (o, z) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        Self { a: o, b: z, c: z, d: o }
    }

    pub fn determinant(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, p: &RiemannPoint) -> RiemannPoint {
        let (x, y) = p.pair();
        RiemannPoint::new(self.a * x + self.b * y, self.c * x + self.d * y)
            .expect("invertible map sends a point to a point")
    }

    pub fn compose(&self, o: &MobiusTransform) -> MobiusTransform {
        MobiusTransform {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> MobiusTransform {
        MobiusTransform {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }
}

pub fn apply_mobius(m: &MobiusTransform, p: &RiemannPoint) -> RiemannPoint {
    m.apply(p)
}

/// The root map induced by `ilo_operator(p, n)`.
pub fn mobius_from_ilo(p: &IloParameters) -> MobiusTransform {
    let g = p.gamma();
    let gi = g.inv();
    let (b1, b2) = (p.beta1, p.beta2);
    MobiusTransform {
        a: b2 * g - b1 * gi,
        b: b1 * b2 * (gi - g),
        c: g - gi,
        d: gi * b2 - g * b1,
    }
}

/// Antiunitary time reversal on Dicke amplitudes:
/// `a'_k = (-1)^k conj(a_{n-k})`.
pub fn time_reversal(state: &SymmetricState) -> SymmetricState {
    let n = state.n();
    let a = state.amplitudes();
    let out: Vec<C64> = (0..=n)
        .map(|k| {
            let v = a[n - k].conj();
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    SymmetricState::from_dicke(n, &out).expect("time reversal preserves the norm")
}

/// `(cos t + sin t T)` applied to `u1 (x) u2 (x) u3`, renormalized.
pub fn y_theta(theta: f64, u1: Qubit, u2: Qubit, u3: Qubit) -> Result<DenseState> {
    let input = DenseState::product(&[u1, u2, u3])?;
    let flipped = input.time_reversed();
    let (c, s) = (theta.cos(), theta.sin());
    let amps: Vec<C64> = input
        .amplitudes()
        .iter()
        .zip(flipped.amplitudes())
        .map(|(a, t)| a * c + t * s)
        .collect();
    let norm2: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if norm2 <= 1e-24 {
        return Err(Error::Degenerate("Y(theta) output vanishes".into()));
    }
    DenseState::new(3, amps)
}
