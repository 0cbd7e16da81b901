//! Acceptance criteria 1 to 9. Each criterion runs its verification suite
//! under a wall-clock limit and checks a few exact values directly.

use std::process::ExitCode;
use std::time::Duration;

use hindlab::actions::{e_k_g, sphere_action};
use hindlab::cohomology::{smith_decomposition, smith_long_exactness_check};
use hindlab::graphs::{complete, homological_chromatic_number, petersen};
use hindlab::hypergraphs::{afl_bound, kneser_hypergraph};
use hindlab::index::{hind, verify_join_formula, verify_product_formula, verify_model_product, HindBound, ProductModel};
use hindlab::suites::{run_suite, DEFAULT_SEED, SUITES};

const LIMITS: [u64; 9] = [10, 60, 300, 300, 300, 60, 600, 600, 300];

fn spot_checks(criterion: usize) -> Vec<(&'static str, bool)> {
    match criterion {
        1 => vec![
            (
                "hind E_k = k",
                [2, 3].iter().all(|&p| (0..=3).all(|k| hind(&e_k_g(p, k)).unwrap().hind == k)),
            ),
            ("hind S^n = n", (0..=3).all(|n| hind(&sphere_action(n)).unwrap().hind == n)),
        ],
        2 => {
            let r = verify_join_formula(&sphere_action(1), &sphere_action(1)).unwrap();
            vec![("S1*S1 = 3", r.observed == HindBound::Exact(3) && r.holds)]
        }
        3 => {
            let r = verify_product_formula(&sphere_action(2), &sphere_action(1)).unwrap();
            vec![("S2xS1 = 1", r.observed == HindBound::Exact(1) && r.holds)]
        }
        4 => {
            let r = verify_join_formula(&e_k_g(3, 1), &e_k_g(3, 1)).unwrap();
            vec![("E1*E1 Z/3 = 3", r.observed == HindBound::Exact(3))]
        }
        5 => {
            let r = verify_model_product(&e_k_g(2, 2), 5, ProductModel::Staircase).unwrap();
            vec![("E2 x E5 = 2", r.observed == HindBound::Exact(2) && r.holds)]
        }
        6 => {
            let reports = smith_long_exactness_check(&smith_decomposition(&e_k_g(3, 2)));
            vec![("E2 Z/3 exact", reports.len() == 2 && reports.iter().all(|r| r.exact()))]
        }
        7 => vec![
            ("h-chi Petersen = 3", homological_chromatic_number(&petersen()).unwrap() == 3),
            ("h-chi K4 = 4", homological_chromatic_number(&complete(4)).unwrap() == 4),
        ],
        8 => vec![("afl KG3(5,1) = 3", afl_bound(&kneser_hypergraph(5, 1, 3).unwrap(), 3).unwrap() == 3)],
        _ => vec![],
    }
}

fn main() -> ExitCode {
    let mut all = true;
    for (i, suite) in SUITES.iter().enumerate() {
        let criterion = i + 1;
        let report = run_suite(suite, DEFAULT_SEED).expect("known suite");
        let limit = Duration::from_secs(LIMITS[i]);
        let in_time = report.seconds <= limit.as_secs_f64();
        let spots = spot_checks(criterion);
        let ok = report.passed() && in_time && spots.iter().all(|s| s.1);
        all &= ok;
        println!(
            "criterion {criterion} ({suite}): {} rows={} secs={:.1} limit={}",
            if ok { "PASS" } else { "FAIL" },
            report.rows.len(),
            report.seconds,
            LIMITS[i]
        );
        for row in report.failures() {
            println!("    row {}: expected {} got {}", row.name, row.expected, row.got);
        }
        for (name, pass) in spots.iter().filter(|s| !s.1) {
            println!("    check {name}: {pass}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
