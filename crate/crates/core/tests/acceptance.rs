//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use qwhittaker::bijections::{omega, psi_for, psi_inverse, psi_quinv, Stat};
use qwhittaker::fillings::{enumerate_csf, enumerate_fillings};
use qwhittaker::lattice::LatticeDiagram;
use qwhittaker::oracle::lattice_character;
use qwhittaker::polymodels::{basic_character_partial, schur, whittaker, ModelTag};
use qwhittaker::verify::{self, Suite, VerifyConfig};
use qwhittaker::{Exec, Partition, Report};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(s: Suite, max_size: usize, vars: usize) -> Report {
    verify::run(
        s,
        &VerifyConfig {
            max_size,
            vars,
            seed: 7,
            exec: Exec::default(),
        },
    )
}

fn report_outcome(reports: &[(&str, Report)]) -> Outcome {
    let mut summary = Vec::new();
    for (name, r) in reports {
        if !r.passed() {
            return Err(format!(
                "{name}: {} failures, first: {:?}",
                r.failures.len(),
                r.failures[0]
            ));
        }
        summary.push(format!("{name} {} checks", r.checked));
    }
    Ok(summary.join(", "))
}

fn worked_examples() -> Outcome {
    let f = sample_filling();
    ensure(f.quinv().unwrap() == 12, "quinv of sample filling != 12")?;
    ensure(
        f.zcount_table().unwrap()
            == vec![
                vec![0, 0, 0, 0, 1, 0, 2, 1, 1, 2],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 2, 2],
            ],
        "zcount table differs",
    )?;
    ensure(
        f.rsort().unwrap() == sample_pattern(),
        "rsort differs from sample pattern",
    )?;
    ensure(
        psi_quinv(&f).unwrap() == sample_pop(),
        "psi_quinv overlay differs",
    )?;
    ensure(
        psi_inverse(&sample_pop(), Stat::Inv).unwrap() == sample_tableau(),
        "psi_inv inverse differs from the tableau",
    )?;
    ensure(sample_pattern().area() == 17, "area != 17")?;
    ensure(f.inv().unwrap() == 5, "inv != 5")?;
    Ok("quinv 12, inv 5, area 17, overlay and inverse exact".into())
}

fn tri_model() -> Outcome {
    let mut cases = 0;
    for n in 1..=4 {
        for lambda in Partition::up_to(6, n) {
            let w = whittaker(&lambda, n, ModelTag::Fermionic, Exec::default()).unwrap();
            for model in [ModelTag::Inv, ModelTag::Quinv] {
                let other = whittaker(&lambda, n, model, Exec::default()).unwrap();
                ensure(other == w, format!("{model:?} differs at {lambda}, n={n}"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn bijection_suite() -> Outcome {
    let r = suite(Suite::Bijections, 6, 4);
    let mut spot = Report::new();
    for f in enumerate_csf(&p(&[2, 1]), 3) {
        let o = omega(&f).unwrap();
        let ok = omega(&o).unwrap() == f
            && o.inv().unwrap() == f.quinv().unwrap()
            && psi_for(&f, Stat::Inv).unwrap().bcomp() == psi_quinv(&f).unwrap();
        spot.record((!ok).then(|| qwhittaker::Failure::new("omega", &p(&[2, 1]), 3, "spot")));
    }
    report_outcome(&[("bijections", r), ("omega spot check", spot)])
}

fn diagram_suite() -> Outcome {
    report_outcome(&[
        ("diagrams", suite(Suite::Diagrams, 6, 4)),
        ("dsplice", suite(Suite::Dsplice, 6, 4)),
    ])
}

fn fiber_suite() -> Outcome {
    report_outcome(&[("fibers", suite(Suite::Fibers, 6, 4))])
}

fn maj_suite() -> Outcome {
    let r = suite(Suite::Maj, 5, 3);
    let total: usize = (1..=3)
        .flat_map(|n| Partition::up_to(5, n).into_iter().map(move |l| (l, n)))
        .map(|(l, n)| enumerate_fillings(&l, n).len())
        .sum();
    ensure(r.checked == total, "not every filling was checked")?;
    report_outcome(&[("maj", r)])
}

fn branching_identity() -> Outcome {
    report_outcome(&[("branching", suite(Suite::Branching, 6, 4))])
}

fn projection() -> Outcome {
    let mut cases = 0;
    for n in 1..=3 {
        for lambda in Partition::up_to(5, n) {
            let w = whittaker(&lambda, n, ModelTag::Fermionic, Exec::default()).unwrap();
            let at_zero = w.eval_q_zero();
            ensure(
                at_zero == schur(&lambda, n).unwrap(),
                format!("schur mismatch at {lambda}, n={n}"),
            )?;
            ensure(
                bialternant_holds(&lambda, n, &at_zero),
                format!("bialternant mismatch at {lambda}, n={n}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn limit_character() -> Outcome {
    let mut out = Vec::new();
    for (n, k_max, q_cap) in [(2, 6, 3), (3, 4, 2)] {
        let c = basic_character_partial(n, k_max, q_cap, Exec::default()).unwrap();
        ensure(
            c.negative.is_empty(),
            format!("negative q-exponents for n={n}"),
        )?;
        for (d, k) in &c.stable_at {
            ensure(
                *k < k_max,
                format!("n={n}, degree {d} still changing at k={k}"),
            )?;
        }
        ensure(
            c.matches(&lattice_character(n, q_cap)),
            format!("n={n} differs from the lattice series"),
        )?;
        out.push(format!(
            "n={n} stable at {:?}",
            c.stable_at.values().collect::<Vec<_>>()
        ));
    }
    Ok(out.join("; "))
}

fn render() -> Outcome {
    let d = LatticeDiagram::new(&small_filling()).unwrap();
    ensure(d.crossing_count() == 3, "small filling crossings != 3")?;
    let svg = d.to_svg();
    ensure(svg.matches("<circle").count() == 3, "SVG markers != 3")?;
    ensure(svg.matches("<path").count() == 4, "SVG paths != 4")?;
    ensure(svg.contains("inv(F)=3"), "caption missing")?;
    let mut checked = 0;
    for n in 1..=3 {
        for lambda in Partition::up_to(5, n) {
            for f in enumerate_csf(&lambda, n) {
                let d = LatticeDiagram::new(&f).unwrap();
                ensure(
                    d.crossing_count() == f.inv().unwrap()
                        && d.non_crossing_count() == f.quinv().unwrap(),
                    format!("counts differ on {:?}", f.rows()),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} fillings"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "1 worked-example regression",
            Duration::from_secs(1),
            worked_examples,
        ),
        ("2 tri-model equality", Duration::from_secs(60), tri_model),
        ("3 bijection suite", Duration::MAX, bijection_suite),
        ("4 diagram suite", Duration::MAX, diagram_suite),
        ("5 fiber suite", Duration::MAX, fiber_suite),
        ("6 maj suite", Duration::MAX, maj_suite),
        ("7 branching identity", Duration::MAX, branching_identity),
        ("8 projection", Duration::MAX, projection),
        (
            "9 limit character",
            Duration::from_secs(300),
            limit_character,
        ),
        ("10 render", Duration::MAX, render),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed > budget {
                Err(format!("{msg}; exceeded runtime target"))
            } else {
                Ok(msg)
            }
        });
        let budget_note = if budget == Duration::MAX {
            String::new()
        } else {
            format!(" (target {}s)", budget.as_secs())
        };
        match outcome {
            Ok(msg) => println!(
                "PASS  criterion {name}: {msg} [{:.2}s{budget_note}]",
                elapsed.as_secs_f64()
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "FAIL  criterion {name}: {msg} [{:.2}s{budget_note}]",
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
