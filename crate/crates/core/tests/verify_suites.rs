mod common;

use wgt_core::verify::{run_suite, Suite};

#[test]
fn every_suite_passes_on_the_test_matrix() {
    let mut configs = common::configurations();
    configs.push(("p=(1,2,2)", vec![1, 2, 2], vec![vec!["3"], vec!["1", "7/3"], vec!["0", "1/3"]], 45));
    for (name, rows, grid, _) in configs {
        let rep = common::rep_of(&rows, &grid);
        for suite in Suite::ALL {
            if suite == Suite::Gln && !rep.pyramid().is_one_column() {
                continue;
            }
            let t = std::time::Instant::now();
            let report = run_suite(&rep, suite, None).unwrap();
            let failures: Vec<_> = report.failures().collect();
            eprintln!(
                "{name} {suite}: {} checks, {} failures, {:?}",
                report.asserted_count(),
                failures.len(),
                t.elapsed()
            );
            for f in failures.iter().take(5) {
                eprintln!("   {}", serde_json::to_string(f).unwrap());
            }
            for o in report.observations().filter(|o| !o.passed()).take(2) {
                eprintln!("   observed: {}", serde_json::to_string(o).unwrap());
            }
        }
    }
}
