mod common;

use num_traits::One;
use wgt_core::exactalg::{OperatorPolynomial, Rational, UniPoly};
use wgt_core::repbuild::OpKey;
use wgt_core::verify::{run_suite, Suite, VerificationReport};
use wgt_core::Representation;

fn altered(p: &OperatorPolynomial, power: usize, row: usize, col: usize, value: Rational) -> OperatorPolynomial {
    let dim = *p.shape();
    let len = p.coeffs().len().max(power + 1);
    let coeffs = (0..len)
        .map(|j| {
            let mut m = p.coeff(j);
            if j == power {
                m.set(row, col, value.clone());
            }
            m
        })
        .collect();
    UniPoly::from_coeffs(dim, coeffs)
}

fn failing_reports(rep: &Representation, suites: &[Suite]) -> Vec<VerificationReport> {
    suites
        .iter()
        .filter(|&&s| s != Suite::Gln || rep.pyramid().is_one_column())
        .map(|&s| run_suite(rep, s, None).unwrap())
        .filter(|r| !r.passed())
        .collect()
}

#[test]
fn every_entry_of_c1_is_load_bearing_on_two_rows() {
    let rep = common::rep(&[1, 1], &[&["1"], &["0"]]);
    rep.build_all().unwrap();
    let c1 = rep.c(1).unwrap();
    let dim = rep.dim();
    let mut mutations = 0;
    for power in 0..=c1.degree().unwrap() + 1 {
        for row in 0..dim {
            for col in 0..dim {
                let old = c1.coeff(power).get(row, col);
                for new in [-old.clone(), old.clone() + Rational::one()] {
                    if new == old {
                        continue;
                    }
                    let mutant = rep.with_operator(OpKey::C(1), altered(&c1, power, row, col, new)).unwrap();
                    let failed = failing_reports(&mutant, &[Suite::Abc, Suite::Defining]);
                    assert!(!failed.is_empty(), "C_1 mutation at u^{power} ({row},{col}) undetected");
                    assert!(failed.iter().flat_map(|r| r.failures()).any(|f| f.witness.is_some()));
                    mutations += 1;
                }
            }
        }
    }
    assert!(mutations >= 2 * dim * dim);
}

#[test]
fn corrupting_a_zero_entry_of_c1_fails_abc() {
    let rep = common::rep(&[1, 1], &[&["1"], &["0"]]);
    let c1 = rep.c(1).unwrap();
    let mutant = rep.with_operator(OpKey::C(1), altered(&c1, 0, 0, 0, Rational::one())).unwrap();
    let report = run_suite(&mutant, Suite::Abc, None).unwrap();
    assert!(!report.passed());
    let w = report.failures().next().unwrap().witness.clone().unwrap();
    assert_eq!((w.row, w.col), (0, 0));
}

#[test]
fn every_nonzero_entry_of_every_operator_is_load_bearing() {
    for (rows, grid) in [
        (vec![1, 1], vec![vec!["1"], vec!["0"]]),
        (vec![1, 2], vec![vec!["1"], vec!["0", "1/2"]]),
        (vec![1, 1, 1], vec![vec!["2"], vec!["1"], vec!["0"]]),
    ] {
        let rep = common::rep_of(&rows, &grid);
        rep.build_all().unwrap();
        let n = rep.n();
        let keys: Vec<OpKey> = (1..=n).map(OpKey::A).chain((1..n).map(OpKey::B)).chain((1..n).map(OpKey::C)).collect();
        for key in keys {
            let op = rep.operator(key).unwrap();
            for (power, m) in op.coeffs().iter().enumerate() {
                for (row, col, value) in m.entries() {
                    let mutant =
                        rep.with_operator(key, altered(&op, power, row, col, value + Rational::one())).unwrap();
                    let failed = failing_reports(&mutant, &Suite::ALL);
                    assert!(!failed.is_empty(), "{rows:?}: {key} at u^{power} ({row},{col}) undetected");
                }
            }
        }
    }
}

#[test]
fn observed_checks_do_not_decide_the_verdict() {
    let rep = common::rep(&[1, 1, 1], &[&["2"], &["1"], &["0"]]);
    let report = run_suite(&rep, Suite::Abc, None).unwrap();
    assert!(report.observations().count() > 0);
    assert!(report.observations().all(|o| !o.asserted));
    assert!(report.passed());
}
