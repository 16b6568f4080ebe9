use majorana::sampling::{random_h, try_random_ilo};
use majorana::slocc::distinct_leading_ordering;
use majorana::transforms::rotate;
use majorana::{
    bloch_radius2, canonical_representative, concurrence2, degeneracy_class, dicke_expand, gram,
    ilo_operator, lu_invariants3, lu_unitary, mobius_from_ilo, oracle_lu_invariants3,
    rotation_from_h, slocc_invariants, slui_coefficients, time_reversal, wootters_concurrence,
    Error, InnerProductMatrix, LuInvariantSet, RiemannPoint, SumOutcome, SymmetricState,
};
use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::format::{cnum, dicke_file, majorana_file, num, point_value, Basis, Input, StateFile};

/// Largest root count for which symmetrized sums are reported.
const MAX_REPORTED_SUM_ROOTS: usize = 8;
const ILO_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, Default)]
pub struct Sections {
    pub lu: bool,
    pub slocc: bool,
    pub oracle: bool,
}

pub fn invariants(input: &Input, requested: Sections, tol: f64) -> Result<Value, CliError> {
    let n = input.n();
    // with neither --lu nor --slocc, report both wherever n allows
    let explicit = requested.lu || requested.slocc;
    let (want_lu, want_slocc) = if explicit {
        (requested.lu, requested.slocc)
    } else {
        (n >= 2, n >= 4)
    };
    if want_lu && n < 2 {
        return Err(CliError::Unsupported(format!("LU invariants need n >= 2, got {n}")));
    }
    if want_slocc && n < 4 {
        return Err(CliError::Unsupported(format!("SLOCC invariants need n >= 4, got {n}")));
    }
    if requested.oracle && !(2..=3).contains(&n) {
        return Err(CliError::Unsupported(format!("oracle check supports n = 2 or 3, got {n}")));
    }

    let points: Vec<_> = input.roots.iter().map(|r| r.to_sphere()).collect();
    let g = gram(&points)?;
    let mut report = Map::new();
    report.insert("n".into(), json!(n));
    report.insert("roots".into(), Value::Array(input.roots.iter().map(point_value).collect()));
    report.insert(
        "points".into(),
        Value::Array(points.iter().map(|v| Value::Array(v.as_array().map(num).to_vec())).collect()),
    );
    report.insert(
        "gram".into(),
        Value::Array(g.rows().iter().map(|r| Value::Array(r.iter().map(|&x| num(x)).collect())).collect()),
    );

    let lu = if want_lu || requested.oracle { Some(lu_section(&g)?) } else { None };
    report.insert(
        "lu".into(),
        match (&lu, want_lu) {
            (Some(l), true) => l.value.clone(),
            _ => Value::Null,
        },
    );
    report.insert(
        "slocc".into(),
        if want_slocc {
            slocc_section(&input.roots, tol, explicit)?
        } else {
            Value::Null
        },
    );
    report.insert(
        "oracle".into(),
        match (requested.oracle, &lu) {
            (true, Some(l)) => oracle_section(&input.state, l)?,
            _ => Value::Null,
        },
    );
    Ok(Value::Object(report))
}

struct LuData {
    value: Value,
    two: Option<(f64, f64)>,
    three: Option<LuInvariantSet>,
}

fn invariant_map(i: &LuInvariantSet) -> Value {
    json!({
        "I1": num(i.i1), "I2": num(i.i2), "I3": num(i.i3),
        "I4": num(i.i4), "I5": num(i.i5), "I6": num(i.i6),
    })
}

fn lu_section(g: &InnerProductMatrix) -> Result<LuData, CliError> {
    let mut m = Map::new();
    let mut data = LuData {
        value: Value::Null,
        two: None,
        three: None,
    };
    match g.n() {
        2 => {
            let v = g.get(0, 1);
            let pair = (concurrence2(v)?, bloch_radius2(v)?);
            m.insert("concurrence".into(), num(pair.0));
            m.insert("bloch_radius2".into(), num(pair.1));
            data.two = Some(pair);
        }
        3 => {
            let inv = lu_invariants3(g)?;
            m.insert("invariants".into(), invariant_map(&inv));
            data.three = Some(inv);
        }
        _ => {}
    }
    m.insert(
        "slui_coefficients".into(),
        Value::Array(slui_coefficients(g).into_iter().map(num).collect()),
    );
    data.value = Value::Object(m);
    Ok(data)
}

fn slocc_section(roots: &[RiemannPoint], tol: f64, strict: bool) -> Result<Value, CliError> {
    let degeneracy = degeneracy_class(roots, tol)?;
    let mut m = Map::new();
    m.insert("degeneracy".into(), json!(degeneracy.to_string()));
    m.insert("distinct_roots".into(), json!(degeneracy.distinct_roots()));
    if let Err(Error::Degenerate(msg)) = distinct_leading_ordering(roots, tol) {
        if strict {
            return Err(CliError::Degenerate(msg));
        }
        for key in ["lambda_vector", "canonical_lambda", "klein_j", "symmetrized"] {
            m.insert(key.into(), Value::Null);
        }
        return Ok(Value::Object(m));
    }
    let set = slocc_invariants(roots, tol, &[2, 4], MAX_REPORTED_SUM_ROOTS)?;
    m.insert(
        "lambda_vector".into(),
        Value::Array(set.lambda_vector.iter().map(point_value).collect()),
    );
    m.insert(
        "canonical_lambda".into(),
        point_value(&canonical_representative(&set.lambda_vector[0])),
    );
    m.insert("klein_j".into(), set.klein_j.map_or(Value::Null, cnum));
    let sums: Map<String, Value> = set
        .symmetrized
        .iter()
        .map(|(k, outcome)| {
            let v = match outcome {
                SumOutcome::Value(s) => json!({ "value": cnum(s.value), "terms": s.terms, "skipped": s.skipped }),
                SumOutcome::Divergent => json!("divergent"),
            };
            (format!("I{k}"), v)
        })
        .collect();
    m.insert(
        "symmetrized".into(),
        if sums.is_empty() { Value::Null } else { Value::Object(sums) },
    );
    Ok(Value::Object(m))
}

fn oracle_section(state: &SymmetricState, lu: &LuData) -> Result<Value, CliError> {
    let dense = dicke_expand(state)?;
    if let Some(fast) = &lu.three {
        let slow = oracle_lu_invariants3(&dense)?;
        return Ok(json!({
            "invariants": invariant_map(&slow),
            "max_deviation": num(fast.max_deviation(&slow)),
        }));
    }
    let (c_fast, r_fast) = lu.two.expect("oracle is only requested for n = 2 or 3");
    let c_slow = wootters_concurrence(&dense)?;
    let r_slow = 2.0 * dense.density_matrix().partial_trace(&[1])?.purity() - 1.0;
    Ok(json!({
        "concurrence": num(c_slow),
        "bloch_radius2": num(r_slow),
        "max_deviation": num((c_fast - c_slow).abs().max((r_fast - r_slow).abs())),
    }))
}

pub fn classify(input: &Input, tol: f64) -> Result<String, CliError> {
    let class = degeneracy_class(&input.roots, tol)?;
    Ok(match (input.n(), class.three_qubit_name()) {
        (3, Some(name)) => format!("{class} {name}"),
        _ => class.to_string(),
    })
}

#[derive(Clone, Copy, Debug)]
pub enum Mode {
    LuRandom,
    IloRandom,
    TimeReversal,
}

/// Applies the transform in the input's own basis. Majorana input is mapped
/// point by point; Dicke input through the operator on the amplitudes.
pub fn transform(input: &Input, mode: Mode, seed: u64) -> Result<StateFile, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = input.n();
    match (mode, input.basis) {
        (Mode::LuRandom, Basis::Dicke) => Ok(dicke_file(&lu_unitary(random_h(&mut rng), n)?.apply(&input.state)?)),
        (Mode::LuRandom, Basis::Majorana) => {
            let r = rotation_from_h(random_h(&mut rng));
            Ok(majorana_file(
                &input
                    .roots
                    .iter()
                    .map(|p| RiemannPoint::from_sphere(&rotate(&r, &p.to_sphere())))
                    .collect::<Vec<_>>(),
            ))
        }
        (Mode::IloRandom, basis) => {
            let p = try_random_ilo(&mut rng, ILO_ATTEMPTS).ok_or_else(|| {
                CliError::Degenerate(format!("no in-domain ILO after {ILO_ATTEMPTS} attempts"))
            })?;
            match basis {
                Basis::Dicke => Ok(dicke_file(&ilo_operator(&p, n)?.apply(&input.state)?)),
                Basis::Majorana => {
                    let m = mobius_from_ilo(&p);
                    Ok(majorana_file(&input.roots.iter().map(|z| m.apply(z)).collect::<Vec<_>>()))
                }
            }
        }
        (Mode::TimeReversal, Basis::Dicke) => Ok(dicke_file(&time_reversal(&input.state))),
        (Mode::TimeReversal, Basis::Majorana) => {
            Ok(majorana_file(&input.roots.iter().map(|z| z.antipode()).collect::<Vec<_>>()))
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Family {
    Ghz,
    W,
    Dicke { k: usize },
    Ghz4 { mu: C64 },
}

pub fn generate(family: Family, n: usize) -> Result<StateFile, CliError> {
    let state = match family {
        Family::Ghz => SymmetricState::ghz(n)?,
        Family::W => SymmetricState::w(n)?,
        Family::Dicke { k } => {
            if k > n {
                return Err(CliError::Parse(format!("k = {k} exceeds n = {n}")));
            }
            SymmetricState::dicke(n, k)?
        }
        Family::Ghz4 { mu } => {
            let crit = 1.0 / 3f64.sqrt();
            if (mu - crit).norm() <= 1e-12 || (mu + crit).norm() <= 1e-12 {
                return Err(CliError::Degenerate(format!("mu = {mu} is excluded (mu = +-1/sqrt(3))")));
            }
            let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            let z = C64::new(0.0, 0.0);
            SymmetricState::from_dicke(4, &[h, z, mu, z, h])?
        }
    };
    Ok(dicke_file(&state))
}

pub fn roots(input: &Input) -> Value {
    let points: Vec<Value> = input
        .roots
        .iter()
        .map(|r| Value::Array(r.to_sphere().as_array().map(num).to_vec()))
        .collect();
    json!({
        "n": input.n(),
        "roots": input.roots.iter().map(point_value).collect::<Vec<_>>(),
        "points": points,
    })
}
