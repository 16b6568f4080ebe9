//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

pub type CMatrix = DMatrix<C64>;

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
pub fn expm(a: &CMatrix) -> CMatrix {
    let dim = a.nrows();
    let norm = one_norm(a);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a / C64::new(2f64.powi(squarings as i32), 0.0);

    let mut result = CMatrix::identity(dim, dim);
    let mut term = CMatrix::identity(dim, dim);
    for k in 1..=40 {
        term = &term * &scaled / C64::new(k as f64, 0.0);
        result += &term;
        if one_norm(&term) <= 1e-18 * one_norm(&result) {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// `exp(i H)` for Hermitian `H`, through its eigendecomposition.
pub fn exp_i_hermitian(h: &CMatrix) -> CMatrix {
    let eig = h.clone().symmetric_eigen();
    let phases = eig.eigenvalues.map(|l| C64::from_polar(1.0, l));
    let v = &eig.eigenvectors;
    v * CMatrix::from_diagonal(&phases) * v.adjoint()
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues at or below `floor` are treated as zero, so rounding noise on
/// a rank-deficient matrix is not amplified by the square root.
pub fn sqrt_psd(h: &CMatrix, floor: f64) -> CMatrix {
    let eig = h.clone().symmetric_eigen();
    let roots = eig
        .eigenvalues
        .map(|l| C64::new(if l > floor { l.sqrt() } else { 0.0 }, 0.0));
    let v = &eig.eigenvectors;
    v * CMatrix::from_diagonal(&roots) * v.adjoint()
}

/// Real eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(h: &CMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = h.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn one_norm(a: &CMatrix) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|x| x.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Largest entrywise deviation of `a^dagger a` from the identity.
pub fn unitarity_defect(a: &CMatrix) -> f64 {
    let dim = a.nrows();
    let prod = a.adjoint() * a;
    (prod - CMatrix::identity(dim, dim)).iter().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|x| x.norm()).fold(0.0, f64::max)
}
