//! Simultaneous root finding for Majorana polynomials (Aberth–Ehrlich) and
//! multiplicity clustering on the sphere.

use num_complex::Complex64 as C64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::state::{chordal_distance, MajoranaPolynomial, RiemannPoint, SphereVector};

const MAX_ITERATIONS: usize = 500;

/// All `n` roots of the polynomial: the finite zeros of its degree-`d` part
/// plus `n - d` copies of infinity.
///
/// Every finite root satisfies `|p(z)| <= tol * sum_k |c_k| |z|^k`; `tol` is
/// raised to a rounding floor of a few ulps times the degree.
pub fn find_roots(poly: &MajoranaPolynomial, tol: f64) -> Result<Vec<RiemannPoint>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let degree = poly.degree().ok_or(Error::ZeroPolynomial)?;
    let coeffs = &poly.coefficients()[..=degree];
    let zeros_at_origin = coeffs.iter().take_while(|c| **c == C64::new(0.0, 0.0)).count();
    let reduced = &coeffs[zeros_at_origin..];

    let mut roots = Vec::with_capacity(poly.n());
    roots.extend(std::iter::repeat_n(RiemannPoint::zero(), zeros_at_origin));
    roots.extend(aberth(reduced, tol)?);
    roots.extend(std::iter::repeat_n(RiemannPoint::INFINITY, poly.n() - degree));
    Ok(roots)
}

/// Newton correction `p/p'` and the relative backward residual at `z`.
/// Large `|z|` is handled through the reversed polynomial at `1/z`.
fn newton_step(coeffs: &[C64], z: C64) -> (C64, f64) {
    let d = coeffs.len() - 1;
    let zero = C64::new(0.0, 0.0);
    if z.norm() <= 1.0 {
        let (mut p, mut dp, mut s) = (zero, zero, 0.0);
        let az = z.norm();
        for c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
            s = s * az + c.norm();
        }
        let rel = if s > 0.0 { p.norm() / s } else { 0.0 };
        if p == zero {
            return (zero, 0.0);
        }
        (p / dp, rel)
    } else {
        let w = z.inv();
        let aw = w.norm();
        let (mut q, mut dq, mut s) = (zero, zero, 0.0);
        for c in coeffs.iter() {
            dq = dq * w + q;
            q = q * w + c;
            s = s * aw + c.norm();
        }
        let rel = if s > 0.0 { q.norm() / s } else { 0.0 };
        if q == zero {
            return (zero, 0.0);
        }
        // p/p' = q / (w (d q - w q'))
        (q / (w * (q * d as f64 - w * dq)), rel)
    }
}

/// Starting points on circles whose radii come from the upper convex hull
/// of `(k, log|c_k|)`.
fn initial_guesses(coeffs: &[C64]) -> Vec<C64> {
    let d = coeffs.len() - 1;
    let logs: Vec<f64> = coeffs
        .iter()
        .map(|c| if c.norm() > 0.0 { c.norm().ln() } else { f64::NEG_INFINITY })
        .collect();
    let mut hull: Vec<usize> = Vec::new();
    for k in 0..=d {
        if logs[k] == f64::NEG_INFINITY {
            continue;
        }
        while hull.len() >= 2 {
            let (i, j) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (j - i) as f64 * (logs[k] - logs[i]) - (k - i) as f64 * (logs[j] - logs[i]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }
    let mut guesses = Vec::with_capacity(d);
    let mut offset = 0.4;
    for seg in hull.windows(2) {
        let (i, j) = (seg[0], seg[1]);
        let m = j - i;
        let radius = ((logs[i] - logs[j]) / m as f64).exp();
        for t in 0..m {
            let angle = TAU * t as f64 / m as f64 + offset;
            guesses.push(C64::from_polar(radius, angle));
        }
        offset += 1.3;
    }
    guesses
}

fn aberth(coeffs: &[C64], tol: f64) -> Result<Vec<RiemannPoint>> {
    let d = coeffs.len() - 1;
    match d {
        0 => return Ok(Vec::new()),
        1 => return RiemannPoint::new(-coeffs[0], coeffs[1]).map(|p| vec![p]),
        _ => {}
    }
    let floor = 8.0 * d as f64 * f64::EPSILON;
    let tol = tol.max(floor);
    let mut z = initial_guesses(coeffs);
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (ratio, rel) = newton_step(coeffs, z[i]);
            if rel <= floor {
                done[i] = true;
                continue;
            }
            let repulsion: C64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .filter(|r| r.is_finite())
                .sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            let step = if step.is_finite() { step } else { ratio };
            z[i] -= step;
            if step.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            break;
        }
    }
    let converged = z.iter().all(|&zi| newton_step(coeffs, zi).1 <= tol);
    if !converged {
        return Err(Error::NoConvergence(MAX_ITERATIONS));
    }
    Ok(z.into_iter().map(RiemannPoint::finite).collect())
}

/// A group of coincident roots.
#[derive(Clone, Copy, Debug)]
pub struct Cluster {
    pub point: RiemannPoint,
    pub multiplicity: usize,
}

/// Single-linkage clustering of roots by chordal distance `<= tol`. The
/// representative of each cluster is the normalized centroid of its sphere
/// images. Clusters are returned by descending multiplicity, ties broken by
/// first appearance.
pub fn cluster(roots: &[RiemannPoint], tol: f64) -> Vec<Cluster> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if chordal_distance(&roots[i], &roots[j]) <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.push(i),
            None => groups.push((r, vec![i])),
        }
    }
    groups.sort_by_key(|g| std::cmp::Reverse(g.1.len()));
    groups
        .into_iter()
        .map(|(_, members)| {
            let sum = members.iter().fold([0.0; 3], |acc, &i| {
                let v = roots[i].to_sphere();
                [acc[0] + v.x, acc[1] + v.y, acc[2] + v.z]
            });
            let norm = (sum[0] * sum[0] + sum[1] * sum[1] + sum[2] * sum[2]).sqrt();
            let point = if norm > 0.0 {
                RiemannPoint::from_sphere(&SphereVector::new(sum[0] / norm, sum[1] / norm, sum[2] / norm))
            } else {
                roots[members[0]]
            };
            Cluster {
                point,
                multiplicity: members.len(),
            }
        })
        .collect()
}
