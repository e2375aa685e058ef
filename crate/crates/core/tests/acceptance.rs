//! Acceptance run: one PASS/FAIL line per criterion, with exact (zero
//! tolerance) checks and pinned wall-clock limits.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use wgt_core::exactalg::{Additive, OperatorPolynomial, Rational, SparseVector, UniPoly};
use wgt_core::io;
use wgt_core::patterns::weyl_dimension_product;
use wgt_core::repbuild::{apply_at, OpKey};
use wgt_core::verify::{run_suite, Suite};
use wgt_core::Representation;

/// Every comparison is exact rational equality.
const TOLERANCE: f64 = 0.0;

const LIMIT_DIMENSION: Duration = Duration::from_secs(1);
const LIMIT_INTERPOLATION: Duration = Duration::from_secs(5);
const LIMIT_IDENTITIES: Duration = Duration::from_secs(60);
const LIMIT_DEFINING: Duration = Duration::from_secs(120);
const LIMIT_OTHER: Duration = Duration::from_secs(120);

type Rows = Vec<i64>;
type Grid = Vec<Vec<&'static str>>;

/// The five fixed configurations plus a generic three-row, two-column one.
fn matrix() -> Vec<(&'static str, Rows, Grid, Option<usize>)> {
    let mut all: Vec<_> =
        common::configurations().into_iter().map(|(name, rows, grid, dim)| (name, rows, grid, Some(dim))).collect();
    all.push(("p=(1,2,2)", vec![1, 2, 2], vec![vec!["3"], vec!["1", "7/3"], vec!["0", "1/3"]], None));
    all
}

fn fresh() -> Vec<(&'static str, Representation, Option<usize>)> {
    matrix().into_iter().map(|(name, rows, grid, dim)| (name, common::rep_of(&rows, &grid), dim)).collect()
}

type Outcome = Result<(), String>;

/// (label, check, wall-clock limit).
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suites_pass(rep: &Representation, name: &str, suites: &[Suite], truncation: Option<usize>) -> Outcome {
    for &suite in suites {
        let report = run_suite(rep, suite, truncation).map_err(|e| format!("{name} {suite}: {e}"))?;
        if let Some(f) = report.failures().next() {
            return Err(format!("{name} {suite}: {} {:?} failed", f.id, f.params));
        }
        ensure(report.asserted_count() > 0 || rep.n() == 1, || format!("{name} {suite}: no checks ran"))?;
    }
    Ok(())
}

fn dimension_equality() -> Outcome {
    for (name, rep, expected) in fresh() {
        let counted = rep.dim();
        let weyl = weyl_dimension_product(rep.spec()) as usize;
        ensure(counted == weyl, || format!("{name}: {counted} patterns vs Weyl product {weyl}"))?;
        if let Some(d) = expected {
            ensure(counted == d, || format!("{name}: dimension {counted}, expected {d}"))?;
        }
        ensure(counted <= 100, || format!("{name}: dimension {counted} exceeds 100"))?;
    }
    Ok(())
}

fn interpolation_consistency() -> Outcome {
    for (name, rep, _) in fresh() {
        rep.build_all().map_err(|e| format!("{name}: {e}"))?;
        let py = rep.pyramid().clone();
        for r in 1..=rep.n() {
            let a = rep.a(r).map_err(|e| e.to_string())?;
            ensure(a.degree() == Some(py.partial_sum(r)) && a.is_monic(), || {
                format!("{name}: A_{r} degree or leading term")
            })?;
        }
        for r in 1..rep.n() {
            let bound = py.partial_sum(r) - 1;
            let (b, c) = (rep.b(r).map_err(|e| e.to_string())?, rep.c(r).map_err(|e| e.to_string())?);
            ensure(b.degree().is_none_or(|d| d <= bound), || format!("{name}: deg B_{r} > {bound}"))?;
            ensure(c.degree().is_none_or(|d| d <= bound), || format!("{name}: deg C_{r} > {bound}"))?;
            for idx in 0..rep.dim() {
                let e = SparseVector::unit(rep.dim(), idx, Rational::one());
                for (i, k, x) in rep.evaluation_points(idx, r).map_err(|e| e.to_string())? {
                    ensure(apply_at(&b, &x, &e) == rep.b_node_value(idx, r, i, k), || {
                        format!("{name}: B_{r} at node ({i},{k}) of pattern {idx}")
                    })?;
                    ensure(apply_at(&c, &x, &e) == rep.c_node_value(idx, r, i, k), || {
                        format!("{name}: C_{r} at node ({i},{k}) of pattern {idx}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn polynomial_identities() -> Outcome {
    for (name, rep, _) in fresh() {
        suites_pass(&rep, name, &[Suite::Abc, Suite::Lemma22, Suite::Center], None)?;
    }
    Ok(())
}

fn defining_relations() -> Outcome {
    for (name, rep, _) in fresh() {
        let order = 2 * rep.pyramid().bricks() + 2;
        suites_pass(&rep, name, &[Suite::Defining], Some(order))?;
        let t = rep.generator_series(order).map_err(|e| e.to_string())?;
        if rep.n() >= 2 && t.e_start(1) == 1 {
            let lhs = t.e(1, 1).unwrap().commutator(t.f(1, 1).unwrap());
            let rhs = t.d(1, 1).minus(t.d(2, 1));
            ensure(lhs == rhs, || format!("{name}: [e_1^(1), f_1^(1)] != d_1^(1) - d_2^(1)"))?;
        }
    }
    Ok(())
}

fn highest_vector() -> Outcome {
    for (name, rep, _) in fresh() {
        suites_pass(&rep, name, &[Suite::Highest], None)?;
    }
    Ok(())
}

fn branching() -> Outcome {
    let rep = common::rep(&[1, 1, 1], &[&["2"], &["1"], &["0"]]);
    let data = rep.branching_data().map_err(|e| e.to_string())?;
    let mut dims: Vec<u64> = data.iter().map(|d| d.dim).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    ensure(dims == [3, 2, 2, 1], || format!("branch dimensions {dims:?}"))?;
    ensure(data.iter().all(|d| !d.vector.is_zero()), || "zero branch vector".into())?;
    for (name, rep, _) in fresh() {
        suites_pass(&rep, name, &[Suite::Branching], None)?;
    }
    Ok(())
}

fn gln_specialization() -> Outcome {
    for (rows, grid, dim) in
        [(vec![1, 1], vec![vec!["1"], vec!["0"]], 2), (vec![1, 1, 1], vec![vec!["2"], vec!["1"], vec!["0"]], 8)]
    {
        let rep = common::rep_of(&rows, &grid);
        ensure(rep.dim() == dim, || format!("gl_{} dimension {}", rows.len(), rep.dim()))?;
        suites_pass(&rep, "gl_n", &[Suite::Gln, Suite::Dimension], None)?;
    }
    Ok(())
}

fn flipped(p: &OperatorPolynomial, power: usize, row: usize, col: usize) -> OperatorPolynomial {
    let coeffs = (0..p.coeffs().len().max(power + 1))
        .map(|j| {
            let mut m = p.coeff(j);
            if j == power {
                let old = m.get(row, col);
                m.set(row, col, if old.is_zero() { Rational::one() } else { -old });
            }
            m
        })
        .collect();
    UniPoly::from_coeffs(*p.shape(), coeffs)
}

fn mutation_sensitivity() -> Outcome {
    let rep = common::rep(&[1, 1], &[&["1"], &["0"]]);
    let c1 = rep.c(1).map_err(|e| e.to_string())?;
    let dim = rep.dim();
    for power in 0..c1.coeffs().len() {
        for row in 0..dim {
            for col in 0..dim {
                let mutant =
                    rep.with_operator(OpKey::C(1), flipped(&c1, power, row, col)).map_err(|e| e.to_string())?;
                let located = [Suite::Abc, Suite::Defining]
                    .iter()
                    .any(|&s| run_suite(&mutant, s, None).is_ok_and(|r| r.failures().any(|f| f.witness.is_some())));
                ensure(located, || format!("flip of C_1 at u^{power} ({row},{col}) undetected"))?;
            }
        }
    }
    Ok(())
}

fn export_all() -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for (_, rep, _) in fresh() {
        out.push(io::patterns_json(&rep));
        for key in rep.operator_keys() {
            out.push(io::matrix_json(key, &*rep.operator(key).map_err(|e| e.to_string())?));
        }
        if rep.n() > 1 {
            let data = rep.branching_data().map_err(|e| e.to_string())?;
            out.push(io::branches_json(&rep, &data));
        }
        for suite in [Suite::Abc, Suite::Highest, Suite::Branching] {
            let report = run_suite(&rep, suite, None).map_err(|e| e.to_string())?;
            let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            value.as_object_mut().map(|o| o.remove("elapsed_ms"));
            out.push(io::to_json(&value));
        }
    }
    Ok(out)
}

fn determinism() -> Outcome {
    let (first, second) = (export_all()?, export_all()?);
    ensure(first == second, || "exports differ between runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dimension equality", dimension_equality, LIMIT_DIMENSION),
        ("interpolation consistency and degree bounds", interpolation_consistency, LIMIT_INTERPOLATION),
        ("polynomial identity suites", polynomial_identities, LIMIT_IDENTITIES),
        ("defining relations at R = 2N+2", defining_relations, LIMIT_DEFINING),
        ("highest vector and quotient", highest_vector, LIMIT_OTHER),
        ("branching", branching, LIMIT_OTHER),
        ("gl_n specialization", gln_specialization, LIMIT_OTHER),
        ("mutation sensitivity", mutation_sensitivity, LIMIT_OTHER),
        ("determinism", determinism, LIMIT_OTHER),
    ];
    let mut all_pass = true;
    for (number, (label, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => "FAIL (over time limit)".to_string(),
            Err(msg) => format!("FAIL ({msg})"),
        };
        all_pass &= verdict == "PASS";
        println!(
            "criterion {}: {label}: {verdict} [{:.3} s, limit {} s, tolerance {TOLERANCE}]",
            number + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
