//! End-to-end acceptance run: one line per criterion, exact comparisons only.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qspace::bicharacter::{check_bicharacter, check_cocycle, eps_identities_check};
use qspace::calculus::{check_bicovariance, check_calculus};
use qspace::hopf::{check_hopf_a, check_hopf_d, coproduct_d, module_algebra_check};
use qspace::invariants::{
    classical_limit_check, dx_via_omega_check, mc_basis, mc_display_check, omega_relations_check,
    right_invariance_check, vf_coproduct_check, vf_leibniz_check, vf_structure_check,
};
use qspace::operators::{
    check_confluence, check_operator_relations, check_twisted_leibniz, weyl_relation_check,
    DqElement,
};
use qspace::qspace::check_algebra;
use qspace::report::Report;
use qspace::sample::{monomials_in_box, monomials_up_to};

struct Outcome {
    reports: Vec<Report>,
    extra_failures: Vec<String>,
}

impl From<Vec<Report>> for Outcome {
    fn from(reports: Vec<Report>) -> Self {
        Outcome {
            reports,
            extra_failures: Vec::new(),
        }
    }
}

fn bicharacter() -> Outcome {
    let mut reports = Vec::new();
    for n in 1..=4 {
        reports.extend(check_bicharacter(n, 500, 11 + n as u64, 6));
        reports.extend(check_cocycle(n, 500, 21 + n as u64, 6));
        reports.extend(eps_identities_check(n, 500, 31 + n as u64, 6));
    }
    reports.into()
}

fn algebra() -> Outcome {
    // 5 x 200 merge pairs, 300 commutation pairs, 300 associativity triples
    check_algebra(3, 200, 7).into()
}

fn hopf_aqn() -> Outcome {
    check_hopf_a(3, &monomials_in_box(3, -2, 2, 3), 3).into()
}

fn derivations() -> Outcome {
    let mut reports = check_twisted_leibniz(3, 4, 200, 5);
    reports.extend(check_operator_relations(3, 4, 5));
    reports.extend(weyl_relation_check(3, 4));
    reports.extend(check_confluence(3, 200, 6, 5));
    reports.into()
}

fn hopf_dq() -> Outcome {
    let mut outcome: Outcome = check_hopf_d(3, 3).into();
    outcome.reports.extend(module_algebra_check(3, 50, 9));
    let d2 = coproduct_d(&DqElement::partial(3, 2).unwrap());
    if d2.flip() == d2 {
        outcome
            .extra_failures
            .push(format!("tau D(d2) = D(d2) = {d2}"));
    }
    outcome
}

fn calculus() -> Outcome {
    let mut reports = check_calculus(3, 4, 200, 13);
    reports.extend(check_bicovariance(3, 4, 50, 13));
    reports.into()
}

fn maurer_cartan() -> Outcome {
    let mut outcome = Outcome {
        reports: Vec::new(),
        extra_failures: Vec::new(),
    };
    for n in 2..=3 {
        outcome.reports.extend(mc_display_check(n));
        outcome
            .reports
            .extend(omega_relations_check(n, 200, 17 + n as u64));
        outcome.reports.extend(dx_via_omega_check(n));
        outcome.reports.extend(right_invariance_check(
            n,
            &monomials_up_to(n, 2, -2),
            50,
            17,
        ));
    }
    let displays = [
        (1, "dx1 x1^-1"),
        (2, "-q dx1 x1^-2 x2 + dx2 x1^-1"),
        (3, "-q^2 dx1 x1^-2 x3 + dx3 x1^-1"),
    ];
    for (i, text) in displays {
        let shown = mc_basis(3, i).unwrap().to_string();
        if shown != text {
            outcome
                .extra_failures
                .push(format!("w{i} printed as '{shown}', expected '{text}'"));
        }
    }
    outcome
}

fn vector_fields() -> Outcome {
    let mut reports = vf_structure_check(3, 4, -2);
    reports.extend(vf_leibniz_check(3, 4, 200, 19));
    reports.extend(vf_coproduct_check(3, 4, 50, 19));
    reports.into()
}

fn classical_limit() -> Outcome {
    classical_limit_check(3, 200, 23).into()
}

fn end_to_end() -> Outcome {
    let args = [
        "check", "all", "--n", "3", "--deg", "4", "--trials", "200", "--seed", "42",
    ];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qspace"))
            .args(args)
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    let mut extra_failures = Vec::new();
    if !first.status.success() {
        extra_failures.push(format!(
            "exit status {:?}\n{}",
            first.status.code(),
            String::from_utf8_lossy(&first.stdout)
        ));
    }
    if first.stdout != second.stdout {
        extra_failures.push("reruns with the same seed differ".to_string());
    }
    Outcome {
        reports: Vec::new(),
        extra_failures,
    }
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "bicharacter and cocycle identities, n = 1..4",
            5,
            bicharacter,
        ),
        ("merge law, associativity, eta-commutativity", 10, algebra),
        ("Hopf structure of A_q(3)", 60, hopf_aqn),
        (
            "derivations, operator relations, Weyl relations, confluence",
            30,
            derivations,
        ),
        ("Hopf structure of D_q(6), non-cocommutativity", 30, hopf_dq),
        ("differential calculus and bicovariance", 30, calculus),
        ("Maurer-Cartan forms, n = 2, 3", 20, maurer_cartan),
        ("vector fields", 30, vector_fields),
        ("classical limit q = 1", 10, classical_limit),
        ("qspace check all, deterministic", 300, end_to_end),
    ];
    let mut all_passed = true;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let failing: Vec<&Report> = outcome.reports.iter().filter(|r| !r.ok()).collect();
        let in_time = elapsed < Duration::from_secs(*limit);
        let passed = failing.is_empty() && outcome.extra_failures.is_empty() && in_time;
        all_passed &= passed;
        let checks: usize = outcome
            .reports
            .iter()
            .map(|r| r.passes + r.failure_count())
            .sum();
        println!(
            "[{}] criterion {:>2}: {name} ({checks} checks, {:.2}s, limit {limit}s)",
            if passed { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64(),
        );
        for r in failing {
            println!("{r}");
        }
        for f in &outcome.extra_failures {
            println!("    {f}");
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
