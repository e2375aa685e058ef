//! Highest-vector, dimension, branching and one-column checks.

use std::time::Instant;

use num_traits::Zero;

use super::{construction, run_jobs, CheckResult, Job, Suite, VerificationReport};
use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Additive, Rational, SparseMatrix, SparseVector, UniPoly};
use crate::patterns::{classical_triangles, weyl_dimension};
use crate::repbuild::{apply_at, Direction, Representation};

/// `B_r(u) xi_top = 0`, `u^{p_i} d_i(u) xi_top = lambda_i(u) xi_top`, the
/// vanishing of `d_1^{(r)}` for `r > p_1`, and `e_i^{(r)} xi_top = 0`.
pub fn check_highest_vector(rep: &Representation, order: usize) -> VerificationReport {
    let start = Instant::now();
    let mut results = Vec::new();
    if let Err(failed) = construction(rep) {
        results.push(*failed);
    } else {
        match rep.generator_series(order) {
            Err(e) => results.push(CheckResult::error("generator series", &[("R", order)], &e)),
            Ok(t) => {
                let top = rep.basis().highest_index();
                let n = rep.n();
                for r in 1..n {
                    let column = rep.b(r).expect("built").column(top);
                    results.push(poly_vector_result("B_r(u) xi_top", &[("r", r)], &column));
                }
                for i in 1..=n {
                    let lambda = rep.spec().weight_poly(i).expect("row in range");
                    let p_i = rep.pyramid().row(i);
                    for r in 1..=order {
                        let expected = if r <= p_i { lambda.coeff(p_i - r) } else { Rational::zero() };
                        let got = t.d(i, r).get(top, top);
                        let column = t.d(i, r).column(top);
                        let residual = column.minus(&SparseVector::unit(rep.dim(), top, expected.clone()));
                        let mut res = CheckResult::vector(
                            "u^p_i d_i(u) xi_top = lambda_i(u) xi_top",
                            &[("i", i), ("r", r)],
                            &residual,
                            top,
                        );
                        if !res.passed() {
                            res.detail = Some(format!("eigenvalue {got}, expected {expected}"));
                        }
                        results.push(res);
                    }
                }
                for r in rep.pyramid().row(1) + 1..=order {
                    results.push(CheckResult::matrix("d_1^(r) = 0 for r > p_1", &[("r", r)], t.d(1, r)));
                }
                for i in 1..n {
                    for r in t.e_start(i)..=order {
                        let col = t.e(i, r).expect("admissible").column(top);
                        results.push(CheckResult::vector("e_i^(r) xi_top", &[("i", i), ("r", r)], &col, top));
                    }
                }
            }
        }
    }
    VerificationReport::finish(Suite::Highest, rep, Some(order), results, start)
}

/// Pattern count against the product of column Weyl dimensions, overall and
/// per column.
pub fn check_dimension(rep: &Representation) -> VerificationReport {
    let start = Instant::now();
    let counts = rep.basis().column_counts();
    let weights = rep.spec().column_weights();
    let mut results = Vec::new();
    for (count, cw) in counts.iter().zip(&weights) {
        let weyl = weyl_dimension(&cw.weights);
        results.push(CheckResult::condition("column pattern count", &[("k", cw.k)], *count as u64 == weyl, || {
            format!("{count} patterns, Weyl dimension {weyl}")
        }));
    }
    let product: u64 = weights.iter().map(|cw| weyl_dimension(&cw.weights)).product();
    let dim = rep.dim() as u64;
    results.push(CheckResult::condition("dim = product of Weyl dimensions", &[], dim == product, || {
        format!("{dim} patterns, Weyl product {product}")
    }));
    VerificationReport::finish(Suite::Dimension, rep, None, results, start)
}

/// Branching to the pyramid without its bottom row.
pub fn check_branching(rep: &Representation) -> VerificationReport {
    let start = Instant::now();
    let results = if rep.n() < 2 {
        Vec::new()
    } else {
        match construction(rep)
            .and_then(|()| rep.branching_data().map_err(|e| Box::new(CheckResult::error("branching vectors", &[], &e))))
        {
            Err(failed) => vec![*failed],
            Ok(data) => branching_results(rep, &data),
        }
    };
    VerificationReport::finish(Suite::Branching, rep, None, results, start)
}

fn branching_results(rep: &Representation, data: &[crate::repbuild::BranchingDatum]) -> Vec<CheckResult> {
    let n = rep.n();
    let mut results = Vec::new();
    let total: u64 = data.iter().map(|d| d.dim).sum();
    let dim = rep.dim() as u64;
    results.push(CheckResult::condition("sum of branch dimensions", &[], total == dim, || {
        format!("branch dimensions sum to {total}, module dimension {dim}")
    }));

    let mut jobs: Vec<Job> = Vec::new();
    for (b, datum) in data.iter().enumerate() {
        jobs.push(Box::new(move || {
            // independent count: patterns whose row n-1 is mu
            let count = rep
                .basis()
                .patterns()
                .iter()
                .filter(|p| {
                    (1..n).all(|i| {
                        (1..=rep.pyramid().row(i)).all(|k| p.entry(n - 1, i, k).as_ref() == Some(datum.weight.mu(i, k)))
                    })
                })
                .count() as u64;
            CheckResult::condition("branch dimension", &[("branch", b)], count == datum.dim, || {
                format!("Weyl product {}, pattern count {count}", datum.dim)
            })
        }));
        jobs.push(Box::new(move || {
            CheckResult::condition("zeta_mu nonzero", &[("branch", b)], !datum.vector.is_zero(), || {
                "zero vector".into()
            })
        }));
        for r in 1..n {
            jobs.push(Box::new(move || {
                let a = rep.a(r).expect("built");
                let residual = a.apply(&datum.vector).sub(&datum.weight.a_eigenvalue(r).times_element(&datum.vector));
                poly_vector_result("A_r(u) zeta_mu = mu-eigenvalue", &[("branch", b), ("r", r)], &residual)
            }));
        }
        for r in 1..n.saturating_sub(1) {
            jobs.push(Box::new(move || {
                let residual = rep.b(r).expect("built").apply(&datum.vector);
                poly_vector_result("B_r(u) zeta_mu", &[("branch", b), ("r", r)], &residual)
            }));
        }
        for i in 1..n {
            for k in 1..=rep.pyramid().row(i) {
                for (dir, sign) in [(Direction::Lowering, -1), (Direction::Raising, 1)] {
                    let target = datum.weight.shifted_by(i, k, sign);
                    let Ok(target) = rep.branch_weight(target.grid().to_vec()) else {
                        continue;
                    };
                    jobs.push(Box::new(move || {
                        let id = match dir {
                            Direction::Lowering => "tau_ni(-m_i) zeta_mu in line of zeta_(mu-delta)",
                            Direction::Raising => "tau_in(-m_i) zeta_mu in line of zeta_(mu+delta)",
                        };
                        let params = [("branch", b), ("i", i), ("k", k)];
                        let result = (|| -> Result<bool> {
                            let tau = rep.tau(i, dir)?;
                            let image = apply_at(&tau, &-datum.weight.shifted(i, k), &datum.vector);
                            let goal = rep.branching_vector(&target)?.vector;
                            Ok(!image.is_zero() && goal.proportionality(&image).is_some_and(|c| !c.is_zero()))
                        })();
                        match result {
                            Ok(ok) => {
                                CheckResult::condition(id, &params, ok, || "image is not a nonzero multiple".into())
                            }
                            Err(e) => CheckResult::error(id, &params, &e),
                        }
                    }));
                }
            }
        }
    }
    results.extend(run_jobs(rep, jobs));
    results
}

fn poly_vector_result(id: &str, params: &[(&str, usize)], residual: &UniPoly<SparseVector>) -> CheckResult {
    match residual.coeffs().iter().enumerate().find_map(|(j, v)| v.iter().next().map(|(row, x)| (j, row, x.clone()))) {
        None => CheckResult::condition(id, params, true, String::new),
        Some((j, row, x)) => {
            let mut res = CheckResult::vector(id, params, &SparseVector::unit(*residual.shape(), row, x), 0);
            if let Some(w) = res.witness.as_mut() {
                w.u_power = j;
            }
            res
        }
    }
}

/// Level-one generators of the one-column case against `gl_n`.
///
/// Fails with [`Error::WrongPyramid`] unless the pyramid is `(1, ..., 1)`.
pub fn check_gln_specialization(rep: &Representation) -> Result<VerificationReport> {
    if !rep.pyramid().is_one_column() {
        return Err(Error::WrongPyramid);
    }
    let start = Instant::now();
    let n = rep.n();
    let mut results = Vec::new();
    if n >= 2 {
        match construction(rep).and_then(|()| {
            rep.generator_series(2).map_err(|e| Box::new(CheckResult::error("generator series", &[], &e)))
        }) {
            Err(failed) => results.push(*failed),
            Ok(t) => results.extend(gln_relations(rep, &t)),
        }
    }

    // dimension and weight multiset against classical patterns
    let base = rep.spec().lambda(n, 1).clone();
    let top: Vec<i64> =
        (1..=n).map(|i| crate::exactalg::to_i64(&(rep.spec().lambda(i, 1) - &base)).expect("dominant")).collect();
    let classical = classical_triangles(&top);
    let weyl = weyl_dimension(&rep.spec().column_weight(1).weights);
    results.push(CheckResult::condition(
        "dim = Weyl dimension",
        &[],
        rep.dim() as u64 == weyl && classical.len() as u64 == weyl,
        || format!("{} patterns, {} classical patterns, Weyl dimension {weyl}", rep.dim(), classical.len()),
    ));
    if n >= 2 {
        if let Ok(t) = rep.generator_series(1) {
            let mut expected: Vec<Vec<Rational>> = classical
                .iter()
                .map(|tri| {
                    // tri[0] is row n, the last entry row 1
                    let row_sum = |r: usize| -> Rational {
                        if r == 0 {
                            return Rational::zero();
                        }
                        tri[n - r].iter().map(|&x| rat_int(x) + &base).sum()
                    };
                    (1..=n).map(|r| row_sum(r) - row_sum(r - 1)).collect()
                })
                .collect();
            let mut got: Vec<Vec<Rational>> =
                (0..rep.dim()).map(|idx| (1..=n).map(|i| t.d(i, 1).get(idx, idx)).collect()).collect();
            expected.sort();
            got.sort();
            results.push(CheckResult::condition("D_i weights = classical weights", &[], expected == got, || {
                "weight multisets differ".into()
            }));
        }
    }
    Ok(VerificationReport::finish(Suite::Gln, rep, None, results, start))
}

fn gln_relations(rep: &Representation, t: &crate::repbuild::GeneratorTable) -> Vec<CheckResult> {
    let n = rep.n();
    let e = |i: usize| t.e(i, 1).expect("one-column e starts at order one");
    let f = |i: usize| t.f(i, 1).expect("order one");
    let d = |i: usize| t.d(i, 1);
    let zero = SparseMatrix::zero(rep.dim());
    let mut results = Vec::new();
    for i in 1..=n {
        for j in 1..n {
            let c = rat_int(delta(i, j) - delta(i, j + 1));
            results.push(CheckResult::matrix(
                "[D_i,E_j]",
                &[("i", i), ("j", j)],
                &d(i).commutator(e(j)).minus(&e(j).scaled(&c)),
            ));
            results.push(CheckResult::matrix(
                "[D_i,F_j]",
                &[("i", i), ("j", j)],
                &d(i).commutator(f(j)).plus(&f(j).scaled(&c)),
            ));
        }
    }
    for i in 1..n {
        for j in 1..n {
            let rhs = if i == j { d(i).minus(d(i + 1)) } else { zero.clone() };
            results.push(CheckResult::matrix("[E_i,F_j]", &[("i", i), ("j", j)], &e(i).commutator(f(j)).minus(&rhs)));
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                results.push(CheckResult::matrix(
                    "[E_i,[E_i,E_j]]",
                    &[("i", i), ("j", j)],
                    &e(i).commutator(&e(i).commutator(e(j))),
                ));
                results.push(CheckResult::matrix(
                    "[F_i,[F_i,F_j]]",
                    &[("i", i), ("j", j)],
                    &f(i).commutator(&f(i).commutator(f(j))),
                ));
            } else if i.abs_diff(j) > 1 {
                results.push(CheckResult::matrix("[E_i,E_j]", &[("i", i), ("j", j)], &e(i).commutator(e(j))));
                results.push(CheckResult::matrix("[F_i,F_j]", &[("i", i), ("j", j)], &f(i).commutator(f(j))));
            }
        }
    }
    let two = rat_int(2);
    for i in 1..n {
        let h = d(i).minus(d(i + 1));
        results.push(CheckResult::matrix("sl2 [H,E]", &[("i", i)], &h.commutator(e(i)).minus(&e(i).scaled(&two))));
        results.push(CheckResult::matrix("sl2 [H,F]", &[("i", i)], &h.commutator(f(i)).plus(&f(i).scaled(&two))));
        results.push(CheckResult::matrix("sl2 [E,F]", &[("i", i)], &e(i).commutator(f(i)).minus(&h)));
    }
    results
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}
