//! SLOCC invariants of symmetric states: cross-ratios of Majorana roots,
//! their anharmonic orbits, the Klein invariant, and permutation-symmetrized
//! power sums.
//!
//! All cross-ratio arithmetic is projective. With `alpha = a/b`, every
//! difference `alpha_i - alpha_j` is replaced by the determinant
//! `a_i b_j - a_j b_i`, so arguments at infinity are handled exactly.

use num_complex::Complex64 as C64;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::par::{compensated_sum, map_indices, Execution};
use crate::polyroots::cluster;
use crate::state::{chordal_distance, RiemannPoint};

/// Chordal separation below which two roots count as coincident when
/// deciding whether a cross-ratio is defined.
pub const DISTINCT_TOL: f64 = 1e-12;

/// Magnitude beyond which a transformed cross-ratio is treated as divergent.
pub const DIVERGENCE_LIMIT: f64 = 1e12;

/// Largest root count accepted by the permutation sums (`10!` terms).
pub const MAX_PERMUTATION_ROOTS: usize = 10;

/// Permutation ranks per work unit. Partial sums are formed per chunk and
/// combined in chunk order, so the result does not depend on scheduling.
const CHUNK: usize = 4096;

fn det(p: &RiemannPoint, q: &RiemannPoint) -> C64 {
    let (a, b) = p.pair();
    let (c, d) = q.pair();
    a * d - c * b
}

fn distinct(p: &RiemannPoint, q: &RiemannPoint) -> bool {
    chordal_distance(p, q) > DISTINCT_TOL
}

fn distinct_count(points: &[&RiemannPoint]) -> usize {
    let mut reps: Vec<&RiemannPoint> = Vec::new();
    for p in points {
        if reps.iter().all(|r| distinct(r, p)) {
            reps.push(p);
        }
    }
    reps.len()
}

/// Cross-ratio `(a_i - a_k)(a_j - a_l) / ((a_j - a_k)(a_i - a_l))`.
pub fn cross_ratio(
    pi: &RiemannPoint,
    pj: &RiemannPoint,
    pk: &RiemannPoint,
    pl: &RiemannPoint,
) -> Result<RiemannPoint> {
    if distinct_count(&[pi, pj, pk, pl]) < 3 {
        return Err(Error::Degenerate(
            "cross-ratio needs at least three distinct points".into(),
        ));
    }
    RiemannPoint::new(det(pi, pk) * det(pj, pl), det(pj, pk) * det(pi, pl))
        .map_err(|_| Error::Degenerate("cross-ratio is 0/0".into()))
}

/// The six images of `lambda` under the anharmonic group, in the order
/// `lambda, 1/lambda, 1 - lambda, 1/(1 - lambda), lambda/(lambda - 1),
/// (lambda - 1)/lambda`.
pub fn anharmonic_orbit(lambda: &RiemannPoint) -> [RiemannPoint; 6] {
    let (p, q) = lambda.pair();
    let mk = |a: C64, b: C64| RiemannPoint::new(a, b).unwrap_or(RiemannPoint::INFINITY);
    [
        *lambda,
        mk(q, p),
        mk(q - p, q),
        mk(q, q - p),
        mk(p, p - q),
        mk(p - q, p),
    ]
}

/// Whether `target` lies in the anharmonic orbit of `lambda` within a
/// chordal tolerance.
pub fn orbit_contains(lambda: &RiemannPoint, target: &RiemannPoint, tol: f64) -> bool {
    anharmonic_orbit(lambda)
        .iter()
        .any(|m| chordal_distance(m, target) <= tol)
}

fn pole_guard(lambda: &RiemannPoint) -> Result<(C64, C64)> {
    let (p, q) = lambda.pair();
    if (p * q * (p - q)).norm() < 1e-15 {
        return Err(Error::Degenerate(format!("lambda = {lambda} is a pole (0, 1 or inf)")));
    }
    Ok((p, q))
}

/// Klein invariant `4 (l^2 - l + 1)^3 / (27 l^2 (l - 1)^2)`.
pub fn klein_j(lambda: &RiemannPoint) -> Result<C64> {
    let (p, q) = pole_guard(lambda)?;
    let w = p * p - p * q + q * q;
    let den = p * (p - q) * q;
    Ok(w * w * w * 4.0 / (den * den * 27.0))
}

/// The four-root symmetrized square sum as a rational function of lambda:
/// `[2(l^6+1) - 6(l^5+l) + 9(l^4+l^2) - 8 l^3] / ((l-1)^2 l^2)`.
pub fn i2_closed_n4(lambda: &RiemannPoint) -> Result<C64> {
    let (p, q) = pole_guard(lambda)?;
    let pw = |x: C64, k: i32| x.powi(k);
    let num = (pw(p, 6) + pw(q, 6)) * 2.0 - (pw(p, 5) * q + p * pw(q, 5)) * 6.0
        + (pw(p, 4) * q * q + p * p * pw(q, 4)) * 9.0
        - pw(p, 3) * pw(q, 3) * 8.0;
    let den = p * (p - q) * q;
    Ok(num / (den * den))
}

/// `lambda(z) = (z - a1)(a2 - a3) / ((z - a3)(a2 - a1))` for the first three
/// roots under `ordering`, evaluated at each remaining root.
pub fn lambda_vector(roots: &[RiemannPoint], ordering: &[usize]) -> Result<Vec<RiemannPoint>> {
    check_ordering(roots.len(), ordering)?;
    if roots.len() < 3 {
        return Err(Error::Unsupported("lambda vector needs at least three roots".into()));
    }
    let ordered: Vec<&RiemannPoint> = ordering.iter().map(|&i| &roots[i]).collect();
    let (a1, a2, a3) = (ordered[0], ordered[1], ordered[2]);
    if !(distinct(a1, a2) && distinct(a1, a3) && distinct(a2, a3)) {
        return Err(Error::Degenerate("first three ordered roots are not distinct".into()));
    }
    ordered[3..]
        .iter()
        .map(|z| lambda_at(z, a1, a2, a3))
        .collect()
}

fn lambda_at(z: &RiemannPoint, a1: &RiemannPoint, a2: &RiemannPoint, a3: &RiemannPoint) -> Result<RiemannPoint> {
    RiemannPoint::new(det(z, a1) * det(a2, a3), det(z, a3) * det(a2, a1))
        .map_err(|_| Error::Degenerate("lambda is 0/0".into()))
}

fn check_ordering(n: usize, ordering: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    let ok = ordering.len() == n
        && ordering.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true));
    if ok {
        Ok(())
    } else {
        Err(Error::BadIndexSet(ordering.to_vec()))
    }
}

/// An ordering of the roots whose first three entries are pairwise distinct,
/// taken from distinct clusters at chordal tolerance `tol`.
pub fn distinct_leading_ordering(roots: &[RiemannPoint], tol: f64) -> Result<Vec<usize>> {
    let mut leaders: Vec<usize> = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        if leaders.len() == 3 {
            break;
        }
        if leaders.iter().all(|&j| chordal_distance(&roots[j], r) > tol.max(DISTINCT_TOL)) {
            leaders.push(i);
        }
    }
    if leaders.len() < 3 {
        return Err(Error::Degenerate("fewer than three distinct roots".into()));
    }
    let mut ordering = leaders.clone();
    ordering.extend((0..roots.len()).filter(|i| !leaders.contains(i)));
    Ok(ordering)
}

/// Result of a permutation-symmetrized power sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetrizedSum {
    pub value: C64,
    /// Permutations that contributed a term.
    pub terms: usize,
    /// Permutations skipped because their leading triple had a repeated root.
    pub skipped: usize,
}

/// `sum over all n! permutations of lambda'_1^k`, where `lambda'_1` is the
/// first entry of the lambda vector of the permuted roots.
pub fn symmetrized_ik(roots: &[RiemannPoint], k: u32) -> Result<SymmetrizedSum> {
    symmetrized_ik_with(roots, k, Execution::default())
}

pub fn symmetrized_ik_with(roots: &[RiemannPoint], k: u32, exec: Execution) -> Result<SymmetrizedSum> {
    let n = roots.len();
    if n < 4 {
        return Err(Error::Unsupported(format!("symmetrized sums need n >= 4, got {n}")));
    }
    if n > MAX_PERMUTATION_ROOTS {
        return Err(Error::Unsupported(format!(
            "symmetrized sums are capped at n = {MAX_PERMUTATION_ROOTS}, got {n}"
        )));
    }
    if k == 0 {
        return Err(Error::OutOfRange {
            name: "k",
            value: 0.0,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    let total: usize = (1..=n).product();
    let chunks = total.div_ceil(CHUNK);
    let partials = map_indices(chunks, exec, |c| {
        let mut acc = ChunkSum::default();
        for rank in c * CHUNK..((c + 1) * CHUNK).min(total) {
            match permutation_term(roots, rank, k) {
                Term::Value(v) => acc.values.push(v),
                Term::Skipped => acc.skipped += 1,
                Term::Divergent => {
                    acc.divergent = true;
                    break;
                }
            }
        }
        acc
    });
    if partials.iter().any(|p| p.divergent) {
        return Err(Error::Divergent(format!(
            "a transformed cross-ratio exceeds {DIVERGENCE_LIMIT:e}"
        )));
    }
    let terms: usize = partials.iter().map(|p| p.values.len()).sum();
    let skipped: usize = partials.iter().map(|p| p.skipped).sum();
    if terms == 0 {
        return Err(Error::Degenerate("no permutation has three distinct leading roots".into()));
    }
    let value = compensated_sum(partials.iter().map(|p| compensated_sum(p.values.iter().copied())));
    Ok(SymmetrizedSum {
        value,
        terms,
        skipped,
    })
}

#[derive(Default)]
struct ChunkSum {
    values: Vec<C64>,
    skipped: usize,
    divergent: bool,
}

enum Term {
    Value(C64),
    Skipped,
    Divergent,
}

/// Only the first four entries of the permutation matter; the factorial
/// number system yields them directly from the rank.
fn permutation_term(roots: &[RiemannPoint], rank: usize, k: u32) -> Term {
    let n = roots.len();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut rem = rank;
    let mut lead = [0usize; 4];
    let mut radix: usize = (1..n).product();
    for (slot, l) in lead.iter_mut().enumerate() {
        let idx = rem / radix;
        rem %= radix;
        *l = pool.remove(idx);
        radix = radix.checked_div(n - 1 - slot).unwrap_or(radix);
    }
    let (a1, a2, a3, z) = (&roots[lead[0]], &roots[lead[1]], &roots[lead[2]], &roots[lead[3]]);
    if !(distinct(a1, a2) && distinct(a1, a3) && distinct(a2, a3)) {
        return Term::Skipped;
    }
    let num = det(z, a1) * det(a2, a3);
    let den = det(z, a3) * det(a2, a1);
    if den.norm() * DIVERGENCE_LIMIT < num.norm() || den.norm() == 0.0 {
        return Term::Divergent;
    }
    Term::Value((num / den).powu(k))
}

/// Multiset of root multiplicities in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyClass(pub Vec<usize>);

impl DegeneracyClass {
    pub fn signature(&self) -> &[usize] {
        &self.0
    }

    pub fn distinct_roots(&self) -> usize {
        self.0.len()
    }

    /// Name of the class for three qubits.
    pub fn three_qubit_name(&self) -> Option<&'static str> {
        match self.0.as_slice() {
            [3] => Some("separable"),
            [2, 1] => Some("W"),
            [1, 1, 1] => Some("GHZ-class"),
            _ => None,
        }
    }
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn degeneracy_class(roots: &[RiemannPoint], tol: f64) -> Result<DegeneracyClass> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut sig: Vec<usize> = cluster(roots, tol).iter().map(|c| c.multiplicity).collect();
    sig.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DegeneracyClass(sig))
}

fn rounded_key(p: &RiemannPoint) -> (f64, f64) {
    match p.value() {
        None => (f64::INFINITY, f64::INFINITY),
        Some(z) => {
            let r = |x: f64| (x / 1e-12).round() * 1e-12;
            (r(z.re), r(z.im))
        }
    }
}

/// Deterministic orbit representative: the member with the smallest real
/// part (rounded to 1e-12), ties broken by the rounded imaginary part.
/// Infinity sorts last.
pub fn canonical_representative(lambda: &RiemannPoint) -> RiemannPoint {
    let orbit = anharmonic_orbit(lambda);
    *orbit
        .iter()
        .min_by(|a, b| {
            let (ka, kb) = (rounded_key(a), rounded_key(b));
            ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
        })
        .unwrap()
}

/// Outcome of a symmetrized sum in a report: a value, or a marker that the
/// sum diverges for this root configuration.
#[derive(Clone, Debug, PartialEq)]
pub enum SumOutcome {
    Value(SymmetrizedSum),
    Divergent,
}

/// SLOCC data of a root multiset.
#[derive(Clone, Debug)]
pub struct SloccInvariantSet {
    pub lambda_vector: Vec<RiemannPoint>,
    /// Present for four roots when lambda is not a pole.
    pub klein_j: Option<C64>,
    pub symmetrized: BTreeMap<u32, SumOutcome>,
    pub degeneracy: DegeneracyClass,
}

/// Collects the SLOCC invariants. The lambda vector uses the ordering from
/// [`distinct_leading_ordering`]; symmetrized sums are evaluated for each
/// power in `powers` when `n <= max_sum_roots`.
pub fn slocc_invariants(
    roots: &[RiemannPoint],
    tol: f64,
    powers: &[u32],
    max_sum_roots: usize,
) -> Result<SloccInvariantSet> {
    let n = roots.len();
    if n < 4 {
        return Err(Error::Unsupported(format!("cross-ratio invariants need n >= 4, got {n}")));
    }
    let degeneracy = degeneracy_class(roots, tol)?;
    let ordering = distinct_leading_ordering(roots, tol)?;
    let lambda_vector = lambda_vector(roots, &ordering)?;
    let klein_j = if n == 4 { klein_j(&lambda_vector[0]).ok() } else { None };
    let mut symmetrized = BTreeMap::new();
    if n <= max_sum_roots {
        for &k in powers {
            let outcome = match symmetrized_ik(roots, k) {
                Ok(s) => SumOutcome::Value(s),
                Err(Error::Divergent(_)) => SumOutcome::Divergent,
                Err(e) => return Err(e),
            };
            symmetrized.insert(k, outcome);
        }
    }
    Ok(SloccInvariantSet {
        lambda_vector,
        klein_j,
        symmetrized,
        degeneracy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn pt(re: f64, im: f64) -> RiemannPoint {
        RiemannPoint::finite(C64::new(re, im))
    }

    fn val(p: &RiemannPoint) -> C64 {
        p.value().expect("finite")
    }

    fn ghz4_roots() -> Vec<RiemannPoint> {
        [1.0, 3.0, 5.0, 7.0]
            .iter()
            .map(|k| RiemannPoint::finite(C64::from_polar(1.0, k * PI / 4.0)))
            .collect()
    }

    #[test]
    fn cross_ratio_examples() {
        let inf = RiemannPoint::INFINITY;
        let l = pt(0.3, 1.1);
        let got = val(&cross_ratio(&pt(0.0, 0.0), &pt(1.0, 0.0), &inf, &l).unwrap());
        let want = (val(&l) - 1.0) / val(&l);
        assert_abs_diff_eq!((got - want).norm(), 0.0, epsilon = 1e-15);

        let r = ghz4_roots();
        let got = val(&cross_ratio(&r[0], &r[1], &r[2], &r[3]).unwrap());
        assert_abs_diff_eq!((got - 2.0).norm(), 0.0, epsilon = 1e-14);

        let got = val(&cross_ratio(&pt(0.0, 0.0), &pt(1.0, 0.0), &inf, &pt(2.0, 0.0)).unwrap());
        assert_abs_diff_eq!((got - 0.5).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn cross_ratio_rejects_two_coincident_pairs() {
        let a = pt(0.0, 0.0);
        let b = pt(1.0, 0.0);
        assert!(matches!(cross_ratio(&a, &a, &b, &b), Err(Error::Degenerate(_))));
        // three distinct points with one repeat is defined
        assert!(cross_ratio(&a, &b, &a, &pt(2.0, 0.0)).is_ok());
    }

    #[test]
    fn orbit_examples() {
        let o: Vec<C64> = anharmonic_orbit(&pt(2.0, 0.0)).iter().map(val).collect();
        let want = [2.0, 0.5, -1.0, -1.0, 2.0, 0.5];
        for (g, w) in o.iter().zip(want) {
            assert_abs_diff_eq!((g - w).norm(), 0.0, epsilon = 1e-15);
        }
        let o: Vec<C64> = anharmonic_orbit(&pt(3.0, 0.0)).iter().map(val).collect();
        let want = [3.0, 1.0 / 3.0, -2.0, -0.5, 1.5, 2.0 / 3.0];
        for (g, w) in o.iter().zip(want) {
            assert_abs_diff_eq!((g - w).norm(), 0.0, epsilon = 1e-15);
        }
        let w = RiemannPoint::finite(C64::from_polar(1.0, PI / 3.0));
        let o = anharmonic_orbit(&w);
        let mut distinct_vals: Vec<RiemannPoint> = Vec::new();
        for m in &o {
            if distinct_vals.iter().all(|d| chordal_distance(d, m) > 1e-12) {
                distinct_vals.push(*m);
            }
        }
        assert_eq!(distinct_vals.len(), 2);
        for d in &distinct_vals {
            let count = o.iter().filter(|m| chordal_distance(m, d) <= 1e-12).count();
            assert_eq!(count, 3);
        }
    }

    #[test]
    fn klein_and_closed_form_examples() {
        assert_abs_diff_eq!((klein_j(&pt(0.5, 0.0)).unwrap() - 1.0).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((klein_j(&pt(2.0, 0.0)).unwrap() - 1.0).norm(), 0.0, epsilon = 1e-14);
        let w = RiemannPoint::finite(C64::from_polar(1.0, PI / 3.0));
        assert_abs_diff_eq!(klein_j(&w).unwrap().norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((i2_closed_n4(&pt(0.5, 0.0)).unwrap() - 10.5).norm(), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!((i2_closed_n4(&pt(2.0, 0.0)).unwrap() - 10.5).norm(), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!((i2_closed_n4(&w).unwrap() + 3.0).norm(), 0.0, epsilon = 1e-13);
        for pole in [pt(0.0, 0.0), pt(1.0, 0.0), RiemannPoint::INFINITY] {
            assert!(matches!(klein_j(&pole), Err(Error::Degenerate(_))));
            assert!(matches!(i2_closed_n4(&pole), Err(Error::Degenerate(_))));
        }
    }

    #[test]
    fn lambda_vector_examples() {
        let r = ghz4_roots();
        let lv = lambda_vector(&r, &[0, 1, 2, 3]).unwrap();
        assert_eq!(lv.len(), 1);
        // lambda(z) with this ordering lands on -1, a member of the orbit of 2
        assert_abs_diff_eq!((val(&lv[0]) + 1.0).norm(), 0.0, epsilon = 1e-14);
        assert!(orbit_contains(&lv[0], &pt(0.5, 0.0), 1e-12));
        assert!(orbit_contains(&lv[0], &pt(2.0, 0.0), 1e-12));

        let (l1, l2) = (pt(0.2, -0.7), pt(-1.3, 0.4));
        let roots = [pt(0.0, 0.0), pt(1.0, 0.0), RiemannPoint::INFINITY, l1, l2];
        let lv = lambda_vector(&roots, &[0, 1, 2, 3, 4]).unwrap();
        assert_abs_diff_eq!((val(&lv[0]) - val(&l1)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((val(&lv[1]) - val(&l2)).norm(), 0.0, epsilon = 1e-15);

        let dup = [pt(0.0, 0.0), pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)];
        assert!(matches!(lambda_vector(&dup, &[0, 1, 2, 3]), Err(Error::Degenerate(_))));
        assert!(matches!(lambda_vector(&dup, &[0, 1, 2]), Err(Error::BadIndexSet(_))));
        assert!(matches!(lambda_vector(&dup, &[0, 1, 1, 2]), Err(Error::BadIndexSet(_))));
        let ord = distinct_leading_ordering(&dup, 1e-9).unwrap();
        assert_eq!(ord, vec![0, 2, 3, 1]);
        assert!(lambda_vector(&dup, &ord).is_ok());
    }

    #[test]
    fn symmetrized_square_for_ghz4() {
        let s = symmetrized_ik(&ghz4_roots(), 2).unwrap();
        assert_eq!(s.terms, 24);
        assert_eq!(s.skipped, 0);
        assert_abs_diff_eq!((s.value - 42.0).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn symmetrized_reports_skips_and_divergence() {
        // a repeated root: permutations placing both copies in the leading
        // triple are skipped, the rest produce lambda in {0, 1, inf}
        let roots = [pt(0.0, 0.0), pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0), pt(-1.0, 0.5)];
        assert!(matches!(symmetrized_ik(&roots, 2), Err(Error::Divergent(_))));

        let few = [pt(0.0, 0.0), pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 0.0)];
        assert!(matches!(symmetrized_ik(&few, 2), Err(Error::Degenerate(_))));
        assert!(matches!(symmetrized_ik(&few[..3], 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn degeneracy_examples() {
        let ghz3: Vec<_> = [PI / 3.0, PI, -PI / 3.0]
            .iter()
            .map(|t| RiemannPoint::finite(C64::from_polar(1.0, *t)))
            .collect();
        assert_eq!(degeneracy_class(&ghz3, 1e-7).unwrap().signature(), &[1, 1, 1]);
        let w = [RiemannPoint::zero(), RiemannPoint::INFINITY, RiemannPoint::INFINITY];
        let class = degeneracy_class(&w, 1e-7).unwrap();
        assert_eq!(class.signature(), &[2, 1]);
        assert_eq!(class.to_string(), "{2,1}");
        assert_eq!(class.three_qubit_name(), Some("W"));
        let sep = [pt(0.4, 0.1); 3];
        assert_eq!(degeneracy_class(&sep, 1e-7).unwrap().signature(), &[3]);
        assert!(degeneracy_class(&sep, -1.0).is_err());
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_representative(&pt(2.0, 0.0));
        assert_abs_diff_eq!((val(&c) + 1.0).norm(), 0.0, epsilon = 1e-15);
        let c2 = canonical_representative(&pt(0.5, 0.0));
        assert_eq!(rounded_key(&c), rounded_key(&c2));
        let w = RiemannPoint::finite(C64::from_polar(1.0, PI / 3.0));
        let c = val(&canonical_representative(&w));
        // orbit {e^{i pi/3}, e^{-i pi/3}}: equal real parts, smaller imaginary wins
        assert_abs_diff_eq!(c.re, 0.5, epsilon = 1e-12);
        assert!(c.im < 0.0);
    }
}
