//! End-to-end acceptance checks. Prints one line per criterion and exits
//! non-zero if any fails.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, TAU};

use common::{c, orbit_distance, rel_err, rng, roots};
use majorana::sampling::{
    random_complex, random_h, random_ilo, random_mobius, random_points, random_qubit, random_state,
};
use majorana::transforms::rotate;
use majorana::{
    bloch_radius2, concurrence2, constellation, cross_ratio, degeneracy_class, dicke_expand,
    gram, i2_closed_n4, ilo_operator, klein_j, lu_invariants3, lu_unitary, majorana_lu_invariants3,
    mobius_from_ilo, multiset_distance, oracle_lu_invariants3, rotation_from_h, state_from_roots,
    symmetrized_ik, three_tangle, time_reversal, wootters_concurrence, y_theta, InnerProductMatrix,
    LuInvariantSet, RiemannPoint, SymmetricState,
};
use num_complex::Complex64 as C64;

type Criterion = fn(&mut Check) -> majorana::Result<()>;

/// Largest error seen against a bound, plus any hard failures.
struct Check {
    worst: f64,
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Self { worst: 0.0, failures: Vec::new() }
    }

    fn within(&mut self, what: &str, err: f64, bound: f64) {
        if err.is_nan() || err >= bound {
            self.failures.push(format!("{what}: {err:.3e} >= {bound:.0e}"));
        }
        if err > self.worst || err.is_nan() {
            self.worst = err;
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    /// Runs a fallible body, turning errors into failures.
    fn run(&mut self, body: impl FnOnce(&mut Self) -> majorana::Result<()>) {
        if let Err(e) = body(self) {
            self.failures.push(format!("error: {e}"));
        }
    }
}

fn pt(z: C64) -> RiemannPoint {
    RiemannPoint::finite(z)
}

fn triple(i: &LuInvariantSet) -> [f64; 3] {
    [i.i2, i.i5, i.i6]
}

fn max_abs(a: [f64; 3], b: [f64; 3]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn table_rows() -> Vec<(&'static str, Vec<RiemannPoint>, [f64; 3])> {
    let third = |k: f64| pt(C64::from_polar(1.0, k * TAU / 3.0));
    let (zero, inf, one) = (RiemannPoint::zero(), RiemannPoint::INFINITY, pt(c(1.0, 0.0)));
    vec![
        ("O", vec![one; 3], [1.0, 1.0, 0.0]),
        ("A", vec![third(0.0), third(1.0), third(2.0)], [0.0, 0.25, 1.0]),
        ("B", vec![zero, inf, inf], [1.0 / 9.0, 2.0 / 9.0, 0.0]),
        ("C", vec![zero, inf, one], [4.0 / 9.0, 17.0 / 36.0, 1.0 / 3.0]),
    ]
}

fn criterion1(k: &mut Check) -> majorana::Result<()> {
    for (name, points, want) in table_rows() {
        let sphere: Vec<_> = points.iter().map(|p| p.to_sphere()).collect();
        let fast = lu_invariants3(&gram(&sphere)?)?;
        k.within(&format!("{name} via inner products"), max_abs(triple(&fast), want), 1e-10);
        let dense = dicke_expand(&state_from_roots(&points)?)?;
        let slow = oracle_lu_invariants3(&dense)?;
        k.within(&format!("{name} via dense oracle"), max_abs(triple(&slow), want), 1e-10);
    }
    let c_row = InnerProductMatrix::from_upper(3, &[-1.0, 0.0, 0.0])?;
    k.within("C from v = (-1, 0, 0)", max_abs(triple(&lu_invariants3(&c_row)?), [4.0 / 9.0, 17.0 / 36.0, 1.0 / 3.0]), 1e-10);
    Ok(())
}

fn criterion2(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(102);
    for _ in 0..100 {
        let s = random_state(2, &mut r);
        let v12 = gram(&constellation(&s)?)?.get(0, 1);
        let dense = dicke_expand(&s)?;
        k.within("concurrence", (concurrence2(v12)? - wootters_concurrence(&dense)?).abs(), 1e-9);
        let rho1 = dense.density_matrix().partial_trace(&[1])?;
        k.within("bloch radius", (bloch_radius2(v12)? - (2.0 * rho1.purity() - 1.0)).abs(), 1e-9);
    }
    k.holds("C(-1) = 1", concurrence2(-1.0)? == 1.0);
    k.holds("C(1) = 0", concurrence2(1.0)? == 0.0);
    Ok(())
}

fn criterion3(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(103);
    for _ in 0..100 {
        let s = random_state(3, &mut r);
        let h = random_h(&mut r);
        let moved = lu_unitary(h, 3)?.apply(&s)?;
        let before = majorana_lu_invariants3(&s)?;
        let after = majorana_lu_invariants3(&moved)?;
        k.within("I2..I6 (points)", before.max_deviation(&after), 1e-9);
        let dense_before = oracle_lu_invariants3(&dicke_expand(&s)?)?;
        let dense_after = oracle_lu_invariants3(&dicke_expand(&moved)?)?;
        k.within("I2..I6 (dense)", dense_before.max_deviation(&dense_after), 1e-9);
        let rot = rotation_from_h(h);
        let predicted: Vec<_> = roots(&s)
            .iter()
            .map(|p| RiemannPoint::from_sphere(&rotate(&rot, &p.to_sphere())))
            .collect();
        k.within("rotated points", multiset_distance(&roots(&moved), &predicted), 1e-7);
    }
    Ok(())
}

fn criterion4(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(104);
    for t in 0..100 {
        let n = 3 + t % 4;
        let s = random_state(n, &mut r);
        let p = random_ilo(&mut r);
        let moved = ilo_operator(&p, n)?.apply(&s)?;
        let m = mobius_from_ilo(&p);
        let (x, y) = (roots(&s), roots(&moved));
        let predicted: Vec<_> = x.iter().map(|z| m.apply(z)).collect();
        k.within("roots vs Mobius image", multiset_distance(&y, &predicted), 1e-7);
        k.holds("degeneracy class", degeneracy_class(&x, 1e-7)? == degeneracy_class(&y, 1e-7)?);
        if n >= 4 {
            let a = symmetrized_ik(&x, 2)?.value;
            let b = symmetrized_ik(&y, 2)?.value;
            k.within("symmetrized I2", rel_err(b, a), 1e-8);
        }
    }
    Ok(())
}

fn away_from_poles(r: &mut impl rand::Rng) -> C64 {
    loop {
        let z = random_complex(3.0, r);
        if z.norm() > 0.05 && (z - 1.0).norm() > 0.05 {
            return z;
        }
    }
}

fn criterion5(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(105);
    for _ in 0..1000 {
        let l = pt(away_from_poles(&mut r));
        let rhs = klein_j(&l)? * 13.5 - 3.0;
        k.within("closed form vs J", rel_err(i2_closed_n4(&l)?, rhs), 1e-10);
    }
    for _ in 0..100 {
        let p = random_points(4, 0.05, &mut r);
        let l = cross_ratio(&p[0], &p[1], &p[2], &p[3])?;
        let sum = symmetrized_ik(&p, 2)?.value;
        k.within("sum vs 4 x closed form", rel_err(sum, i2_closed_n4(&l)? * 4.0), 1e-8);
    }
    Ok(())
}

fn criterion6(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(106);
    let crit = 1.0 / 3f64.sqrt();
    let mut done = 0;
    while done < 50 {
        let mu = random_complex(1.0, &mut r);
        if (mu - crit).norm() < 0.1 || (mu + crit).norm() < 0.1 {
            continue;
        }
        let z = c(0.0, 0.0);
        let h = c(FRAC_1_SQRT_2, 0.0);
        let p = roots(&SymmetricState::from_dicke(4, &[h, z, mu, z, h])?);
        let l = cross_ratio(&p[0], &p[1], &p[2], &p[3])?;
        k.within("orbit contains (sqrt3 mu + 1)/2", orbit_distance(&l, (mu * 3f64.sqrt() + 1.0) * 0.5), 1e-8);
        done += 1;
    }
    Ok(())
}

fn criterion7(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(107);
    let mut done = 0;
    while done < 20 {
        let l2 = random_complex(2.0, &mut r);
        if l2.norm() < 0.25 || (l2 - 1.0).norm() < 0.25 {
            continue;
        }
        let target = 0.125 - 2.0 / (klein_j(&pt(l2))? * 27.0);
        let mut errors = Vec::new();
        for l1 in [1e-2, 1e-3, 1e-4] {
            let p = [pt(c(0.0, 0.0)), pt(c(1.0, 0.0)), RiemannPoint::INFINITY, pt(c(l1, 0.0)), pt(l2)];
            let i2 = symmetrized_ik(&p, 2)?.value;
            let i4 = symmetrized_ik(&p, 4)?.value;
            errors.push(rel_err(i4 / (i2 * i2), target));
        }
        k.holds(&format!("monotone error at lambda2 = {l2}"), errors[0] > errors[1] && errors[1] > errors[2]);
        k.within("relative error at lambda1 = 1e-4", errors[2], 1e-3);
        done += 1;
    }
    Ok(())
}

fn criterion8(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(108);
    for _ in 0..20 {
        let u = random_qubit(&mut r);
        let y = y_theta(FRAC_PI_4, u, u, u)?;
        let i6 = majorana_lu_invariants3(&y.to_symmetric(1e-10)?)?.i6;
        k.within("I6 of Y|uuu>", (i6 - 1.0).abs(), 1e-9);
    }
    for _ in 0..20 {
        let (a, b, c) = (random_qubit(&mut r), random_qubit(&mut r), random_qubit(&mut r));
        let tau = three_tangle(&y_theta(FRAC_PI_4, a, b, c)?)?;
        k.within("tangle of Y|u1u2u3>", (tau - 1.0).abs(), 1e-9);
    }
    Ok(())
}

fn criterion9(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(109);
    for t in 0..100 {
        let s = random_state(1 + t % 8, &mut r);
        let t_s = time_reversal(&s);
        let anti: Vec<_> = roots(&s).iter().map(|z| z.antipode()).collect();
        k.within("antipodal roots", multiset_distance(&roots(&t_s), &anti), 1e-9);
    }
    for _ in 0..50 {
        let s = random_state(3, &mut r);
        let dense = dicke_expand(&s)?;
        let a = oracle_lu_invariants3(&dense)?;
        let b = oracle_lu_invariants3(&dicke_expand(&time_reversal(&s))?)?;
        k.within("oracle invariants", a.max_deviation(&b), 1e-9);
        k.within("dense and Dicke reversal agree", 1.0 - dense.time_reversed().overlap(&dicke_expand(&time_reversal(&s))?), 1e-12);
    }
    Ok(())
}

fn criterion10(k: &mut Check) -> majorana::Result<()> {
    let mut r = rng(110);
    for t in 0..100 {
        let pts = random_points(1 + t % 10, 1e-3, &mut r);
        let back = roots(&state_from_roots(&pts)?);
        k.within("root round trip", multiset_distance(&back, &pts), 1e-8);
    }
    for _ in 0..100 {
        let s = random_state(3, &mut r);
        let d = majorana_lu_invariants3(&s)?.max_deviation(&oracle_lu_invariants3(&dicke_expand(&s)?)?);
        k.within("points vs dense invariants", d, 1e-8);
    }
    for t in 0..60 {
        let p = random_points(4 + t % 3, 0.05, &mut r);
        let m = random_mobius(&mut r);
        let q: Vec<_> = p.iter().map(|z| m.apply(z)).collect();
        let (a, b) = (symmetrized_ik(&p, 2)?.value, symmetrized_ik(&q, 2)?.value);
        k.within("Mobius invariance of sums", rel_err(b, a), 1e-9);
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("named three-qubit configurations", criterion1),
        ("two-qubit formulas", criterion2),
        ("LU invariance", criterion3),
        ("ILO and Mobius maps", criterion4),
        ("four-root Klein identity", criterion5),
        ("four-root GHZ family", criterion6),
        ("five-root limit", criterion7),
        ("GHZ construction", criterion8),
        ("time reversal", criterion9),
        ("round trips and oracles", criterion10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let mut k = Check::new();
        k.run(f);
        let status = if k.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name} (worst error {:.2e})", i + 1, k.worst);
        for msg in k.failures.iter().take(5) {
            println!("    {msg}");
        }
        failed += usize::from(!k.failures.is_empty());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
