//! Two-parameter identities among `A_i(u)`, `B_i(u)`, `C_i(u)`, the bilinear
//! relations involving `A'_{i+1}(u)` and `H_i(u)`, and centrality of `A_n(u)`.

use std::time::Instant;

use super::{construction, run_jobs, CheckResult, Job, Suite, VerificationReport};
use crate::error::Result;
use crate::exactalg::{rat_int, BiPoly, OperatorPolynomial, UniPoly, Var};
use crate::repbuild::Representation;

/// Runs `abc`, `lemma22` or `center`; other suites yield an empty report.
pub fn verify_polynomial_identities(rep: &Representation, suite: Suite, order: usize) -> VerificationReport {
    let start = Instant::now();
    let truncation = (suite == Suite::Lemma22).then_some(order);
    let results = match construction(rep) {
        Err(failed) => vec![*failed],
        Ok(()) => match suite {
            Suite::Abc => abc(rep),
            Suite::Lemma22 => lemma(rep, order),
            Suite::Center => center(rep),
            _ => Vec::new(),
        },
    };
    VerificationReport::finish(suite, rep, truncation, results, start)
}

fn commutator_check(
    id: &'static str,
    params: Vec<(&'static str, usize)>,
    left: impl Fn() -> Result<std::sync::Arc<OperatorPolynomial>>,
    right: impl Fn() -> Result<std::sync::Arc<OperatorPolynomial>>,
) -> CheckResult {
    match (left(), right()) {
        (Ok(x), Ok(y)) => CheckResult::bipoly(id, &params, &BiPoly::commutator(&x, &y)),
        (Err(e), _) | (_, Err(e)) => CheckResult::error(id, &params, &e),
    }
}

fn abc(rep: &Representation) -> Vec<CheckResult> {
    let n = rep.n();
    let mut jobs: Vec<Job> = Vec::new();
    for i in 1..=n {
        for j in 1..n {
            if i != j {
                jobs.push(Box::new(move || {
                    commutator_check("[A_i(u),C_j(v)]", vec![("i", i), ("j", j)], || rep.a(i), || rep.c(j))
                }));
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if i != j {
                jobs.push(Box::new(move || {
                    commutator_check("[B_i(u),C_j(v)]", vec![("i", i), ("j", j)], || rep.b(i), || rep.c(j))
                }));
            }
        }
    }
    for i in 1..n {
        for j in i..n {
            if j - i != 1 {
                jobs.push(Box::new(move || {
                    commutator_check("[C_i(u),C_j(v)]", vec![("i", i), ("j", j)], || rep.c(i), || rep.c(j))
                }));
            }
        }
    }
    for i in 1..n {
        jobs.push(Box::new(move || {
            let params = [("i", i)];
            match (rep.a(i), rep.c(i)) {
                (Ok(a), Ok(c)) => {
                    let lhs = BiPoly::commutator(&a, &c).times_u_minus_v();
                    let rhs = BiPoly::product(&c, Var::U, &a, Var::V).sub(&BiPoly::product(&c, Var::V, &a, Var::U));
                    CheckResult::bipoly("(u-v)[A_i(u),C_i(v)]", &params, &lhs.sub(&rhs))
                }
                (Err(e), _) | (_, Err(e)) => CheckResult::error("(u-v)[A_i(u),C_i(v)]", &params, &e),
            }
        }));
    }
    for i in 1..=n {
        for j in i..=n {
            jobs.push(Box::new(move || {
                commutator_check("[A_i(u),A_j(v)]", vec![("i", i), ("j", j)], || rep.a(i), || rep.a(j))
            }));
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if i != j {
                jobs.push(Box::new(move || {
                    commutator_check("[A_i(u),B_j(v)]", vec![("i", i), ("j", j)], || rep.a(i), || rep.b(j)).observed()
                }));
            }
        }
    }
    run_jobs(rep, jobs)
}

fn lemma(rep: &Representation, order: usize) -> Vec<CheckResult> {
    let n = rep.n();
    if n < 2 {
        return Vec::new();
    }
    let table = match rep.generator_series(order) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::error("generator series", &[("R", order)], &e)],
    };
    let primes: Vec<Result<OperatorPolynomial>> = rep.execution().map_range(n - 1, |j| table.a_prime(rep, j + 1));
    let primes = &primes;
    let table = &table;
    let mut jobs: Vec<Job> = Vec::new();
    for i in 1..n {
        jobs.push(Box::new(move || {
            let id = "(u-v)[B_i(u),C_i(v)] = A'(u)A_i(v) - A'(v)A_i(u)";
            let params = [("i", i)];
            let residual = || -> Result<BiPoly> {
                let ap = primes[i - 1].clone()?;
                let (a, b, c) = (rep.a(i)?, rep.b(i)?, rep.c(i)?);
                let lhs = BiPoly::commutator(&b, &c).times_u_minus_v();
                let rhs = BiPoly::product(&ap, Var::U, &a, Var::V).sub(&BiPoly::product(&ap, Var::V, &a, Var::U));
                Ok(lhs.sub(&rhs))
            };
            match residual() {
                Ok(r) => CheckResult::bipoly(id, &params, &r),
                Err(e) => CheckResult::error(id, &params, &e),
            }
        }));
        jobs.push(Box::new(move || {
            let id = "B_i(u)C_i(u-1) - A'(u)A_i(u-1) + A_{i+1}(u)A_{i-1}(u-1) - H_i(u-i)A_i(u)A_i(u-1)";
            let params = [("i", i)];
            let residual = || -> Result<OperatorPolynomial> {
                let down = |p: &OperatorPolynomial| p.shift(&rat_int(-1));
                let ap = primes[i - 1].clone()?;
                let h = table.h_top(i)?.shift(&rat_int(-(i as i64)));
                let (a, b, c, a_next) = (rep.a(i)?, rep.b(i)?, rep.c(i)?, rep.a(i + 1)?);
                let a_prev = if i == 1 { UniPoly::one(rep.dim()) } else { (*rep.a(i - 1)?).clone() };
                let a_down = down(&a);
                Ok(b.mul(&down(&c)).sub(&ap.mul(&a_down)).add(&a_next.mul(&down(&a_prev))).sub(&h.mul(&a).mul(&a_down)))
            };
            match residual() {
                Ok(r) => CheckResult::poly(id, &params, &r),
                Err(e) => CheckResult::error(id, &params, &e),
            }
        }));
    }
    run_jobs(rep, jobs)
}

fn center(rep: &Representation) -> Vec<CheckResult> {
    let n = rep.n();
    let mut jobs: Vec<Job> = Vec::new();
    for r in 1..n {
        jobs.push(Box::new(move || commutator_check("[A_n(u),B_r(v)]", vec![("r", r)], || rep.a(n), || rep.b(r))));
        jobs.push(Box::new(move || commutator_check("[A_n(u),C_r(v)]", vec![("r", r)], || rep.a(n), || rep.c(r))));
    }
    for r in 1..=n {
        jobs.push(Box::new(move || commutator_check("[A_n(u),A_r(v)]", vec![("r", r)], || rep.a(n), || rep.a(r))));
    }
    run_jobs(rep, jobs)
}
