//! Brute-force reference computations in the full `2^n` Hilbert space.
//!
//! Nothing here uses the Majorana roots: states are expanded into
//! computational-basis amplitudes and the invariants are evaluated from
//! their standard definitions (purities, the Kempe invariant, the Cayley
//! hyperdeterminant, the Wootters spin-flip construction).
//!
//! Qubit 1 is the most significant bit of the basis index. Bit value 1 is an
//! excitation, so `|s, -s>` expands to `|00..0>`.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, sqrt_psd, CMatrix};
use crate::lu::LuInvariantSet;
use crate::state::{binomial, SymmetricState};

/// Largest qubit count the dense route accepts.
pub const MAX_DENSE_QUBITS: usize = 14;

const NORM_TOL: f64 = 1e-10;

/// Density-matrix eigenvalues at or below this are rounding noise.
const SPECTRAL_FLOOR: f64 = 1e-14;

/// A single-qubit state `(|0>, |1>)` amplitudes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Qubit(pub C64, pub C64);

impl Qubit {
    pub fn normalized(self) -> Result<Self> {
        let n = (self.0.norm_sqr() + self.1.norm_sqr()).sqrt();
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Qubit(self.0 / n, self.1 / n))
    }
}

/// Pure state of `n` qubits in the computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseState {
    n: usize,
    amps: Vec<C64>,
}

impl DenseState {
    /// Normalizes the amplitudes.
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        check_size(n)?;
        if amps.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                got: amps.len(),
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            n,
            amps: amps.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn product(qubits: &[Qubit]) -> Result<Self> {
        check_size(qubits.len())?;
        let mut amps = vec![C64::new(1.0, 0.0)];
        for q in qubits {
            let q = q.normalized()?;
            amps = amps.iter().flat_map(|a| [a * q.0, a * q.1]).collect();
        }
        Self::new(qubits.len(), amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies an independent 2x2 matrix to each qubit, `ops[0]` on qubit 1.
    pub fn apply_local(&self, ops: &[[[C64; 2]; 2]]) -> Result<Self> {
        if ops.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: ops.len(),
            });
        }
        let mut amps = self.amps.clone();
        for (q, op) in ops.iter().enumerate() {
            let bit = 1usize << (self.n - 1 - q);
            for idx in 0..amps.len() {
                if idx & bit == 0 {
                    let (a0, a1) = (amps[idx], amps[idx | bit]);
                    amps[idx] = op[0][0] * a0 + op[0][1] * a1;
                    amps[idx | bit] = op[1][0] * a0 + op[1][1] * a1;
                }
            }
        }
        Self::new(self.n, amps)
    }

    /// Time reversal `(i sigma_y)^{(x) n} K`. Each qubit maps `|0> -> -|1>`
    /// and `|1> -> |0>` after complex conjugation.
    pub fn time_reversed(&self) -> Self {
        let full = (1usize << self.n) - 1;
        let mut out = vec![C64::new(0.0, 0.0); self.amps.len()];
        for (idx, a) in self.amps.iter().enumerate() {
            let zeros = self.n as u32 - idx.count_ones();
            let sign = if zeros.is_multiple_of(2) { 1.0 } else { -1.0 };
            out[full ^ idx] = a.conj() * sign;
        }
        Self {
            n: self.n,
            amps: out,
        }
    }

    /// `|<self|other>|`.
    pub fn overlap(&self, other: &DenseState) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .norm()
    }

    /// Whether amplitudes agree on all bitstrings of equal Hamming weight.
    pub fn is_permutation_symmetric(&self, tol: f64) -> bool {
        let mut first: Vec<Option<C64>> = vec![None; self.n + 1];
        self.amps.iter().enumerate().all(|(idx, a)| {
            let w = idx.count_ones() as usize;
            match first[w] {
                None => {
                    first[w] = Some(*a);
                    true
                }
                Some(f) => (f - a).norm() <= tol,
            }
        })
    }

    /// Dicke amplitudes of a permutation-symmetric state. Fails when the
    /// amplitudes differ within a Hamming-weight class by more than `tol`.
    pub fn to_symmetric(&self, tol: f64) -> Result<SymmetricState> {
        if !self.is_permutation_symmetric(tol) {
            return Err(Error::Degenerate("state is not permutation symmetric".into()));
        }
        let n = self.n;
        let amps: Vec<C64> = (0..=n)
            .map(|k| self.amps[(1usize << k) - 1] * binomial(n, k).sqrt())
            .collect();
        SymmetricState::from_dicke(n, &amps)
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        let v = nalgebra::DVector::from_vec(self.amps.clone());
        DensityMatrix {
            qubits: self.n,
            matrix: &v * v.adjoint(),
        }
    }

    fn check_normalized(&self) -> Result<()> {
        let n2 = self.norm_sqr();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::Unnormalized(n2));
        }
        Ok(())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DENSE_QUBITS {
        return Err(Error::Unsupported(format!(
            "dense route supports 1..={MAX_DENSE_QUBITS} qubits, got {n}"
        )));
    }
    Ok(())
}

/// Expands a symmetric state: `|s, m>` becomes the normalized uniform
/// superposition of all bitstrings of weight `s + m`.
pub fn dicke_expand(state: &SymmetricState) -> Result<DenseState> {
    let n = state.n();
    check_size(n)?;
    let weights: Vec<C64> = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(k, a)| a / binomial(n, k).sqrt())
        .collect();
    let amps = (0..1usize << n)
        .map(|idx| weights[idx.count_ones() as usize])
        .collect();
    DenseState::new(n, amps)
}

/// Density matrix over `qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    qubits: usize,
    matrix: CMatrix,
}

impl DensityMatrix {
    pub fn new(qubits: usize, matrix: CMatrix) -> Result<Self> {
        let dim = 1usize << qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: matrix.nrows(),
            });
        }
        Ok(Self { qubits, matrix })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// `Tr[rho^2]`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint())
            .iter()
            .map(|x| x.norm())
            .fold(0.0, f64::max)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigenvalues(&self.matrix)[0]
    }

    /// Keeps the 1-based qubit indices in `keep` (in increasing order) and
    /// traces out the rest.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let n = self.qubits;
        let valid = !keep.is_empty()
            && keep.iter().all(|&q| (1..=n).contains(&q))
            && keep.windows(2).all(|w| w[0] < w[1]);
        if !valid {
            return Err(Error::BadIndexSet(keep.to_vec()));
        }
        let traced: Vec<usize> = (1..=n).filter(|q| !keep.contains(q)).collect();
        let bit = |q: usize| n - q;
        let compose = |kept_bits: usize, traced_bits: usize| -> usize {
            let mut idx = 0usize;
            for (pos, &q) in keep.iter().enumerate() {
                if kept_bits >> (keep.len() - 1 - pos) & 1 == 1 {
                    idx |= 1 << bit(q);
                }
            }
            for (pos, &q) in traced.iter().enumerate() {
                if traced_bits >> (traced.len() - 1 - pos) & 1 == 1 {
                    idx |= 1 << bit(q);
                }
            }
            idx
        };
        let dk = 1usize << keep.len();
        let dt = 1usize << traced.len();
        let out = DMatrix::from_fn(dk, dk, |i, j| {
            (0..dt)
                .map(|t| self.matrix[(compose(i, t), compose(j, t))])
                .sum::<C64>()
        });
        DensityMatrix::new(keep.len(), out)
    }
}

/// Three-qubit LU invariants from their generic definitions.
pub fn oracle_lu_invariants3(dense: &DenseState) -> Result<LuInvariantSet> {
    if dense.n() != 3 {
        return Err(Error::Unsupported(format!("need 3 qubits, got {}", dense.n())));
    }
    dense.check_normalized()?;
    let rho = dense.density_matrix();
    let r1 = rho.partial_trace(&[1])?;
    let r2 = rho.partial_trace(&[2])?;
    let r3 = rho.partial_trace(&[3])?;
    let r12 = rho.partial_trace(&[1, 2])?;
    let cube = |m: &CMatrix| (m * m * m).trace().re;
    let kempe = 3.0 * (kron(r1.matrix(), r2.matrix()) * r12.matrix()).trace().re
        - cube(r1.matrix())
        - cube(r2.matrix());
    Ok(LuInvariantSet {
        i1: rho.trace().re,
        i2: 2.0 * r1.purity() - 1.0,
        i3: 2.0 * r2.purity() - 1.0,
        i4: 2.0 * r3.purity() - 1.0,
        i5: kempe,
        i6: three_tangle(dense)?,
    })
}

/// 3-tangle `4 |d1 - 2 d2 + 4 d3|` from the Cayley hyperdeterminant.
pub fn three_tangle(dense: &DenseState) -> Result<f64> {
    if dense.n() != 3 {
        return Err(Error::Unsupported(format!("need 3 qubits, got {}", dense.n())));
    }
    let a = |i: usize, j: usize, k: usize| dense.amplitudes()[(i << 2) | (j << 1) | k];
    let sq = |x: C64| x * x;
    let d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1))
        + sq(a(0, 0, 1)) * sq(a(1, 1, 0))
        + sq(a(0, 1, 0)) * sq(a(1, 0, 1))
        + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    Ok(4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm())
}

/// Wootters concurrence `max(0, l1 - l2 - l3 - l4)` where `l_i` are the
/// decreasing square roots of the eigenvalues of `sqrt(rho) rho~ sqrt(rho)`,
/// `rho~ = (sy (x) sy) conj(rho) (sy (x) sy)`.
///
/// The `l_i` are taken as the singular values of `sqrt(rho) sqrt(rho~)`,
/// which avoids square roots of rounding-level eigenvalues.
pub fn wootters_concurrence(dense: &DenseState) -> Result<f64> {
    if dense.n() != 2 {
        return Err(Error::Unsupported(format!("need 2 qubits, got {}", dense.n())));
    }
    dense.check_normalized()?;
    let rho = dense.density_matrix();
    let i = C64::new(0.0, 1.0);
    let zero = C64::new(0.0, 0.0);
    let sy = CMatrix::from_row_slice(2, 2, &[zero, -i, i, zero]);
    let flip = kron(&sy, &sy);
    let root = sqrt_psd(rho.matrix(), SPECTRAL_FLOOR);
    let root_tilde = &flip * root.map(|x| x.conj()) * &flip;
    let mut l: Vec<f64> = (&root * root_tilde).singular_values().iter().copied().collect();
    l.sort_by(|a, b| b.total_cmp(a));
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}
