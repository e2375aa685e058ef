//! Defining relations of the shifted Yangian, checked coefficientwise on the
//! generator matrices extracted to truncation order `R`.
//!
//! An instance is checked only when every coefficient it involves has order
//! at most `R`.

use std::collections::HashMap;
use std::time::Instant;

use super::{construction, run_jobs, CheckResult, Job, Suite, VerificationReport};
use crate::exactalg::{Additive, Ring, SparseMatrix};
use crate::repbuild::{GeneratorTable, Representation};

/// Runs the defining-relation suite at truncation order `order`.
pub fn check_defining_relations(rep: &Representation, order: usize) -> VerificationReport {
    let start = Instant::now();
    let results = match construction(rep).and_then(|()| {
        rep.generator_series(order).map_err(|e| Box::new(CheckResult::error("generator series", &[("R", order)], &e)))
    }) {
        Err(failed) => vec![*failed],
        Ok(table) => relations(rep, &table),
    };
    VerificationReport::finish(Suite::Defining, rep, Some(order), results, start)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Family {
    E,
    F,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::E => "e",
            Family::F => "f",
        }
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn signed(m: &SparseMatrix, sign: i64) -> SparseMatrix {
    match sign {
        0 => SparseMatrix::zero(m.dim()),
        1 => m.clone(),
        _ => m.scaled(&crate::exactalg::rat_int(sign)),
    }
}

fn relations(rep: &Representation, t: &GeneratorTable) -> Vec<CheckResult> {
    let n = t.n();
    let big_r = t.order();
    let gen = |fam: Family, i: usize, r: usize| -> &SparseMatrix {
        match fam {
            Family::E => t.e(i, r).expect("admissible e index"),
            Family::F => t.f(i, r).expect("admissible f index"),
        }
    };
    let low = |fam: Family, i: usize| match fam {
        Family::E => t.e_start(i),
        Family::F => 1,
    };
    let mut jobs: Vec<Job> = Vec::new();

    // vanishing e coefficients below the admissible range
    for i in 1..n {
        for r in 1..t.e_start(i).min(big_r + 1) {
            jobs.push(Box::new(move || {
                CheckResult::matrix("e_i^(r) below range", &[("i", i), ("r", r)], t.e_raw(i, r))
            }));
        }
    }

    // [d_i^(r), d_j^(s)] = 0
    for i in 1..=n {
        for j in i..=n {
            jobs.push(Box::new(move || {
                let bad = (1..=big_r).flat_map(|r| (1..=big_r).map(move |s| (r, s))).find_map(|(r, s)| {
                    let c = t.d(i, r).commutator(t.d(j, s));
                    (!c.is_zero()).then_some((r, s, c))
                });
                match bad {
                    None => CheckResult::matrix(
                        "[d_i^(r),d_j^(s)]",
                        &[("i", i), ("j", j)],
                        &SparseMatrix::zero(t.d(1, 0).dim()),
                    ),
                    Some((r, s, c)) => {
                        CheckResult::matrix("[d_i^(r),d_j^(s)]", &[("i", i), ("j", j), ("r", r), ("s", s)], &c)
                    }
                }
            }));
        }
    }

    // [e_i^(r), f_j^(s)] = -delta_ij sum_t d_i'^(t) d_{i+1}^(r+s-t-1)
    for i in 1..n {
        for j in 1..n {
            for r in t.e_start(i)..=big_r {
                for s in 1..=big_r + 1 - r {
                    jobs.push(Box::new(move || {
                        let mut res = gen(Family::E, i, r).commutator(gen(Family::F, j, s));
                        if i == j {
                            for k in 0..r + s {
                                res.add_assign(&t.d_prime(i, k).times(t.d(i + 1, r + s - k - 1)));
                            }
                        }
                        CheckResult::matrix("[e_i^(r),f_j^(s)]", &[("i", i), ("j", j), ("r", r), ("s", s)], &res)
                    }));
                }
            }
        }
    }

    // [d_i^(r), e_j^(s)] and [d_i^(r), f_j^(s)]
    for fam in [Family::E, Family::F] {
        for i in 1..=n {
            for j in 1..n {
                for s in low(fam, j)..=big_r {
                    for r in 1..=big_r + 1 - s {
                        jobs.push(Box::new(move || {
                            let g = |m: usize| gen(fam, j, m);
                            let mut res = t.d(i, r).commutator(g(s));
                            let sign = delta(i, j) - delta(i, j + 1);
                            if sign != 0 {
                                for k in 0..r {
                                    let term = match fam {
                                        Family::E => t.d(i, k).times(g(r + s - k - 1)),
                                        Family::F => g(r + s - k - 1).times(t.d(i, k)),
                                    };
                                    let sign = if fam == Family::E { sign } else { -sign };
                                    res = res.minus(&signed(&term, sign));
                                }
                            }
                            let id = if fam == Family::E { "[d_i^(r),e_j^(s)]" } else { "[d_i^(r),f_j^(s)]" };
                            CheckResult::matrix(id, &[("i", i), ("j", j), ("r", r), ("s", s)], &res)
                        }));
                    }
                }
            }
        }
    }

    // ladders with equal indices
    for fam in [Family::E, Family::F] {
        for i in 1..n {
            let lo = low(fam, i);
            for r in lo..big_r {
                for s in lo..big_r {
                    jobs.push(Box::new(move || {
                        let g = |m: usize| gen(fam, i, m);
                        let sym = g(r).times(g(s)).plus(&g(s).times(g(r)));
                        let res = match fam {
                            Family::E => g(r).commutator(g(s + 1)).minus(&g(r + 1).commutator(g(s))),
                            Family::F => g(r + 1).commutator(g(s)).minus(&g(r).commutator(g(s + 1))),
                        }
                        .minus(&sym);
                        let id = if fam == Family::E { "e_i ladder" } else { "f_i ladder" };
                        CheckResult::matrix(id, &[("i", i), ("r", r), ("s", s)], &res)
                    }));
                }
            }
        }
    }

    // ladders with adjacent indices
    for fam in [Family::E, Family::F] {
        for i in 1..n.saturating_sub(1) {
            for r in low(fam, i)..big_r {
                for s in low(fam, i + 1)..big_r {
                    jobs.push(Box::new(move || {
                        let (x, y) = (|m: usize| gen(fam, i, m), |m: usize| gen(fam, i + 1, m));
                        let res = match fam {
                            Family::E => {
                                x(r).commutator(y(s + 1)).minus(&x(r + 1).commutator(y(s))).plus(&x(r).times(y(s)))
                            }
                            Family::F => {
                                x(r + 1).commutator(y(s)).minus(&x(r).commutator(y(s + 1))).plus(&y(s).times(x(r)))
                            }
                        };
                        let id = if fam == Family::E { "e_i,e_(i+1) ladder" } else { "f_i,f_(i+1) ladder" };
                        CheckResult::matrix(id, &[("i", i), ("r", r), ("s", s)], &res)
                    }));
                }
            }
        }
    }

    // locality
    for fam in [Family::E, Family::F] {
        for i in 1..n {
            for j in i + 2..n {
                jobs.push(Box::new(move || {
                    let id = if fam == Family::E {
                        "[e_i^(r),e_j^(s)] nonadjacent"
                    } else {
                        "[f_i^(r),f_j^(s)] nonadjacent"
                    };
                    let bad = (low(fam, i)..=big_r).flat_map(|r| (low(fam, j)..=big_r).map(move |s| (r, s))).find_map(
                        |(r, s)| {
                            let c = gen(fam, i, r).commutator(gen(fam, j, s));
                            (!c.is_zero()).then_some((r, s, c))
                        },
                    );
                    match bad {
                        None => CheckResult::matrix(id, &[("i", i), ("j", j)], &SparseMatrix::zero(t.d(1, 0).dim())),
                        Some((r, s, c)) => CheckResult::matrix(id, &[("i", i), ("j", j), ("r", r), ("s", s)], &c),
                    }
                }));
            }
        }
    }

    let mut results = run_jobs(rep, jobs);
    results.extend(serre(rep, t, &gen, &low));
    results
}

/// `[g_i^(r), [g_i^(s), g_j^(t)]] + [g_i^(s), [g_i^(r), g_j^(t)]] = 0` for
/// `|i - j| = 1`, over `r <= s` (the expression is symmetric in `r`, `s`).
fn serre<'a>(
    rep: &Representation,
    t: &'a GeneratorTable,
    gen: &(dyn Fn(Family, usize, usize) -> &'a SparseMatrix + Sync),
    low: &(dyn Fn(Family, usize) -> usize + Sync),
) -> Vec<CheckResult> {
    let n = t.n();
    let big_r = t.order();
    let mut keys: Vec<(Family, usize, usize, usize, usize)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < n {
                pairs.push((i, j));
            }
        }
    }
    for fam in [Family::E, Family::F] {
        for &(i, j) in &pairs {
            for s in low(fam, i)..=big_r {
                for tt in low(fam, j)..=big_r {
                    keys.push((fam, i, j, s, tt));
                }
            }
        }
    }
    let inner: HashMap<_, SparseMatrix> = rep
        .execution()
        .map(&keys, |&(fam, i, j, s, tt)| gen(fam, i, s).commutator(gen(fam, j, tt)))
        .into_iter()
        .zip(keys.iter().copied())
        .map(|(m, k)| (k, m))
        .collect();
    let inner = &inner;

    let mut jobs: Vec<Job> = Vec::new();
    for fam in [Family::E, Family::F] {
        for &(i, j) in &pairs {
            for r in low(fam, i)..=big_r {
                for s in r..=big_r {
                    for tt in low(fam, j)..=big_r {
                        jobs.push(Box::new(move || {
                            let x = |m: usize| gen(fam, i, m);
                            let res = x(r)
                                .commutator(&inner[&(fam, i, j, s, tt)])
                                .plus(&x(s).commutator(&inner[&(fam, i, j, r, tt)]));
                            let id = format!("{} Serre", fam.name());
                            CheckResult::matrix(&id, &[("i", i), ("j", j), ("r", r), ("s", s), ("t", tt)], &res)
                        }));
                    }
                }
            }
        }
    }
    run_jobs(rep, jobs)
}
