//! Local-unitary invariants of symmetric states from the pairwise inner
//! products `v_ij = v_i . v_j` of their Majorana sphere points.

use crate::error::{Error, Result};
use crate::state::SphereVector;

const UNIT_TOL: f64 = 1e-10;
const RANGE_SLACK: f64 = 1e-12;

/// Symmetric matrix of inner products between sphere points, unit diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerProductMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl InnerProductMatrix {
    /// Builds the matrix from its strictly upper triangle, row-major
    /// (`v12, v13, .., v23, ..`).
    pub fn from_upper(n: usize, upper: &[f64]) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: upper.len(),
            });
        }
        let mut entries = vec![1.0; n * n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = check_inner_product(*it.next().unwrap())?;
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Off-diagonal entries `v_ij`, `i < j`, row-major.
    pub fn upper(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

fn check_inner_product(v: f64) -> Result<f64> {
    if !(-1.0 - RANGE_SLACK..=1.0 + RANGE_SLACK).contains(&v) {
        return Err(Error::OutOfRange {
            name: "v12",
            value: v,
            lo: -1.0,
            hi: 1.0,
        });
    }
    Ok(v.clamp(-1.0, 1.0))
}

pub fn gram(points: &[SphereVector]) -> Result<InnerProductMatrix> {
    if let Some(p) = points.iter().find(|p| (p.norm_sqr() - 1.0).abs() > UNIT_TOL) {
        return Err(Error::NonUnitVector(p.norm_sqr()));
    }
    let n = points.len();
    let mut entries = vec![1.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = points[i].dot(&points[j]).clamp(-1.0, 1.0);
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    Ok(InnerProductMatrix { n, entries })
}

/// Two-qubit concurrence `4/(v12 + 3) - 1`.
pub fn concurrence2(v12: f64) -> Result<f64> {
    let v = check_inner_product(v12)?;
    Ok(4.0 / (v + 3.0) - 1.0)
}

/// Two-qubit reduced-state Bloch quantity `8(v12 + 1)/(v12 + 3)^2`, equal to
/// `2 Tr[rho_i^2] - 1` for either qubit.
pub fn bloch_radius2(v12: f64) -> Result<f64> {
    let v = check_inner_product(v12)?;
    Ok(8.0 * (v + 1.0) / ((v + 3.0) * (v + 3.0)))
}

/// Elementary symmetric combinations of the three inner products of a
/// three-point constellation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetricCoefficients {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

impl SymmetricCoefficients {
    pub fn from_gram(v: &InnerProductMatrix) -> Result<Self> {
        if v.n() != 3 {
            return Err(Error::Unsupported(format!(
                "three-qubit coefficients need n = 3, got {}",
                v.n()
            )));
        }
        let (a, b, c) = (v.get(0, 1), v.get(0, 2), v.get(1, 2));
        Ok(Self {
            c0: -a * b * c,
            c1: a * b + a * c + b * c,
            c2: -(a + b + c),
        })
    }
}

/// The six three-qubit LU invariants `I1..I6`. `I6` is the 3-tangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LuInvariantSet {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub i5: f64,
    pub i6: f64,
}

impl LuInvariantSet {
    pub fn as_array(&self) -> [f64; 6] {
        [self.i1, self.i2, self.i3, self.i4, self.i5, self.i6]
    }

    pub fn max_deviation(&self, other: &LuInvariantSet) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Closed forms of the three-qubit invariants in terms of `c0, c1, c2`.
pub fn lu_invariants3(v: &InnerProductMatrix) -> Result<LuInvariantSet> {
    let SymmetricCoefficients { c0, c1, c2 } = SymmetricCoefficients::from_gram(v)?;
    let t = c2 - 3.0;
    if t.abs() < 1e-12 {
        return Err(Error::Degenerate("c2 = 3: all inner products equal -1".into()));
    }
    let i2 = (-6.0 * c0 + 18.0 * c1 + (c2 - 60.0) * c2 + 75.0) / (9.0 * t * t);
    let i5 = (-9.0 * c0 * (c2 - 9.0) - 459.0
        + 27.0 * c1 * (c2 - 5.0)
        + (c2 - 24.0) * c2 * (4.0 * c2 - 21.0))
        / (18.0 * t * t * t);
    let i6 = 2.0 * (c0 + c1 + c2 + 1.0) / (3.0 * t * t);
    Ok(LuInvariantSet {
        i1: 1.0,
        i2,
        i3: i2,
        i4: i2,
        i5,
        i6,
    })
}

/// Coefficients of the monic polynomial `prod_{i<j} (x - v_ij)`, highest
/// degree first.
pub fn slui_coefficients(v: &InnerProductMatrix) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for r in v.upper() {
        coeffs.push(0.0);
        for k in (1..coeffs.len()).rev() {
            coeffs[k] -= r * coeffs[k - 1];
        }
    }
    coeffs
}
