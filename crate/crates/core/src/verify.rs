//! Exhaustive verification suites over all `lambda` with `|lambda| <= max_size`
//! and at most `n` parts, for every `n` in `1..=vars`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bijections::{
    check_branching, check_complement, check_projection, omega, psi_for, psi_inverse, Stat,
};
use crate::error::{Error, Result};
use crate::fillings::{enumerate_csf, enumerate_fillings, Filling};
use crate::par::Exec;
use crate::partition::Partition;
use crate::patterns::{enumerate_gt, enumerate_pops};
use crate::polymodels::{check_branching_identity, fiber, whittaker, ModelTag};
use crate::report::{Failure, Report};

/// Random splice orders tried per filling in the dsplice suite.
pub const DSPLICE_ORDERS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Equality,
    Bijections,
    Diagrams,
    Fibers,
    Maj,
    Dsplice,
    Branching,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Equality,
        Suite::Bijections,
        Suite::Diagrams,
        Suite::Fibers,
        Suite::Maj,
        Suite::Dsplice,
        Suite::Branching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equality => "equality",
            Suite::Bijections => "bijections",
            Suite::Diagrams => "diagrams",
            Suite::Fibers => "fibers",
            Suite::Maj => "maj",
            Suite::Dsplice => "dsplice",
            Suite::Branching => "branching",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_size: usize,
    pub vars: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_size: 4,
            vars: 3,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

impl VerifyConfig {
    /// Every `(lambda, n)` in range.
    pub fn cases(&self) -> Vec<(Partition, usize)> {
        (1..=self.vars)
            .flat_map(|n| {
                Partition::up_to(self.max_size, n)
                    .into_iter()
                    .map(move |l| (l, n))
            })
            .collect()
    }
}

fn failure_from(
    name: &str,
    lambda: &Partition,
    n: usize,
    r: Result<Option<String>>,
) -> Option<Failure> {
    match r {
        Ok(None) => None,
        Ok(Some(detail)) => Some(Failure::new(name, lambda, n, detail)),
        Err(e) => Some(Failure::new(name, lambda, n, e.to_string())),
    }
}

fn per_filling(
    fillings: &[Filling],
    lambda: &Partition,
    n: usize,
    exec: Exec,
    name: &'static str,
    check: impl Fn(usize, &Filling) -> Result<Option<String>> + Sync + Send,
) -> Report {
    let indexed: Vec<(usize, &Filling)> = fillings.iter().enumerate().collect();
    exec.fold_reduce(
        &indexed,
        Report::new,
        |mut report, &(idx, f)| {
            report.record(
                failure_from(name, lambda, n, check(idx, f)).map(|fail| fail.with_witness(f)),
            );
            report
        },
        Report::merge,
    )
}

/// Tri-model equality, symmetry, and the q = 0 specialization, one check per case.
pub fn equality(lambda: &Partition, n: usize, exec: Exec) -> Report {
    let mut report = Report::new();
    let outcome = (|| -> Result<Option<String>> {
        let fermionic = whittaker(lambda, n, ModelTag::Fermionic, exec)?;
        for model in [ModelTag::Inv, ModelTag::Quinv] {
            if whittaker(lambda, n, model, exec)? != fermionic {
                return Ok(Some(format!("{model:?} model differs from fermionic")));
            }
        }
        if !fermionic.is_symmetric() {
            return Ok(Some("W_lambda is not symmetric".into()));
        }
        if crate::polymodels::schur(lambda, n)? != fermionic.eval_q_zero() {
            return Ok(Some("W_lambda at q = 0 differs from the Schur sum".into()));
        }
        Ok(None)
    })();
    report.record(failure_from("equality", lambda, n, outcome));
    report
}

/// Round trips, weight preservation, complement, and the involution.
pub fn bijections(lambda: &Partition, n: usize, exec: Exec) -> Report {
    let fillings = enumerate_csf(lambda, n);
    let mut report = per_filling(&fillings, lambda, n, exec, "bijections", |_, f| {
        let t = f.rsort()?;
        for stat in Stat::BOTH {
            let p = psi_for(f, stat)?;
            if p.pattern().xweight() != f.xweight() {
                return Ok(Some(format!("psi_{} changes the x-weight", stat.name())));
            }
            if p.size() != stat.eval(f)? {
                return Ok(Some(format!("|overlay| differs from {}", stat.name())));
            }
            if &psi_inverse(&p, stat)? != f {
                return Ok(Some(format!("psi_{} does not round trip", stat.name())));
            }
        }
        if psi_for(f, Stat::Inv)?.bcomp() != psi_for(f, Stat::Quinv)? {
            return Ok(Some("bcomp o psi_inv differs from psi_quinv".into()));
        }
        let o = omega(f)?;
        if &omega(&o)? != f {
            return Ok(Some("omega is not an involution".into()));
        }
        if o.inv()? != f.quinv()? || o.quinv()? != f.inv()? || o.rsort()? != t {
            return Ok(Some(
                "omega does not swap inv and quinv over the same pattern".into(),
            ));
        }
        Ok(None)
    });
    let pops = match enumerate_pops(lambda, n) {
        Ok(p) => p,
        Err(e) => {
            report.record(Some(Failure::new("bijections", lambda, n, e.to_string())));
            return report;
        }
    };
    let pop_report = exec.fold_reduce(
        &pops,
        Report::new,
        |mut report, p| {
            let outcome = (|| -> Result<Option<String>> {
                for stat in Stat::BOTH {
                    if &psi_for(&psi_inverse(p, stat)?, stat)? != p {
                        return Ok(Some(format!(
                            "psi_{0} o psi_{0}^-1 is not the identity",
                            stat.name()
                        )));
                    }
                }
                Ok(None)
            })();
            report
                .record(failure_from("bijections", lambda, n, outcome).map(|f| f.with_witness(p)));
            report
        },
        Report::merge,
    );
    report = report.merge(pop_report);
    let outcome = (fillings.len() != pops.len()).then(|| {
        format!(
            "{} column strict fillings but {} overlaid patterns",
            fillings.len(),
            pops.len()
        )
    });
    report.record(outcome.map(|d| Failure::new("cardinality", lambda, n, d)));
    report
}

/// Projection, branching and complement diagrams over every CSF.
pub fn diagrams(lambda: &Partition, n: usize, exec: Exec) -> Report {
    check_projection(lambda, n, exec)
        .merge(check_branching(lambda, n, exec))
        .merge(check_complement(lambda, n, exec))
}

/// Fiber generating functions equal `wtq(T)` for both statistics, and
/// `inv + quinv = area(T)` on every fiber element.
pub fn fibers(lambda: &Partition, n: usize, exec: Exec) -> Report {
    let patterns = match enumerate_gt(lambda, n) {
        Ok(p) => p,
        Err(e) => {
            let mut r = Report::new();
            r.record(Some(Failure::new("fibers", lambda, n, e.to_string())));
            return r;
        }
    };
    exec.fold_reduce(
        &patterns,
        Report::new,
        |mut report, t| {
            let outcome = (|| -> Result<Option<String>> {
                let fib = fiber(t);
                let area = t.area();
                let mut gens = [crate::qpoly::QPoly::zero(), crate::qpoly::QPoly::zero()];
                for f in &fib {
                    let (i, q) = (f.inv()?, f.quinv()?);
                    if i + q != area {
                        return Ok(Some(format!("inv + quinv = {} but area = {area}", i + q)));
                    }
                    gens[0].add_monomial(i);
                    gens[1].add_monomial(q);
                }
                let w = t.wtq();
                Ok(gens
                    .iter()
                    .zip(Stat::BOTH)
                    .find(|(g, _)| **g != w)
                    .map(|(_, stat)| {
                        format!(
                            "fiber generating function for {} differs from wtq",
                            stat.name()
                        )
                    }))
            })();
            report.record(failure_from("fibers", lambda, n, outcome).map(|f| f.with_witness(t)));
            report
        },
        Report::merge,
    )
}

/// `maj = eta(lambda)` exactly on CSFs and `maj = 0` exactly on WDFs, over
/// all fillings.
pub fn maj(lambda: &Partition, n: usize, exec: Exec) -> Report {
    let eta = lambda.eta();
    let fillings = enumerate_fillings(lambda, n);
    per_filling(&fillings, lambda, n, exec, "maj", |_, f| {
        let m = f.maj();
        Ok(if (m == eta) != f.is_csf() {
            Some(format!("maj = {m}, eta = {eta}, csf = {}", f.is_csf()))
        } else if (m == 0) != f.is_wdf() {
            Some(format!("maj = {m}, wdf = {}", f.is_wdf()))
        } else {
            None
        })
    })
}

/// Choice independence of `dsplice` under seeded random splice orders, the
/// rsort compatibility, and interlacing of the resulting shape.
pub fn dsplice(lambda: &Partition, n: usize, seed: u64, exec: Exec) -> Report {
    if n < 2 {
        return Report::new();
    }
    let fillings = enumerate_csf(lambda, n);
    per_filling(&fillings, lambda, n, exec, "dsplice", |idx, f| {
        let reference = f.dsplice()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(idx as u64);
        for _ in 0..DSPLICE_ORDERS {
            let d = f.dsplice_with(|eligible| eligible[rng.gen_range(0..eligible.len())])?;
            if d != reference {
                return Ok(Some("splice order changes the result".into()));
            }
        }
        if reference.rsort()? != f.rsort()?.truncated()? {
            return Ok(Some(
                "rsort of the splice differs from the truncated pattern".into(),
            ));
        }
        if !reference.shape().interlaces(lambda, n) {
            return Ok(Some("result shape does not interlace lambda".into()));
        }
        Ok(None)
    })
}

/// The branching identity at `x_n = 1`. Vacuous for `n = 1`.
pub fn branching(lambda: &Partition, n: usize, exec: Exec) -> Report {
    if n < 2 {
        return Report::new();
    }
    check_branching_identity(lambda, n, exec)
}

/// Runs `suite` over every case of `config`.
pub fn run(suite: Suite, config: &VerifyConfig) -> Report {
    if suite == Suite::All {
        return Suite::EACH
            .into_iter()
            .fold(Report::new(), |acc, s| acc.merge(run(s, config)));
    }
    let exec = config.exec;
    config
        .cases()
        .iter()
        .map(|(lambda, n)| match suite {
            Suite::Equality => equality(lambda, *n, exec),
            Suite::Bijections => bijections(lambda, *n, exec),
            Suite::Diagrams => diagrams(lambda, *n, exec),
            Suite::Fibers => fibers(lambda, *n, exec),
            Suite::Maj => maj(lambda, *n, exec),
            Suite::Dsplice => dsplice(lambda, *n, config.seed, exec),
            Suite::Branching => branching(lambda, *n, exec),
            Suite::All => unreachable!("handled above"),
        })
        .fold(Report::new(), Report::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(max_size: usize, vars: usize) -> VerifyConfig {
        VerifyConfig {
            max_size,
            vars,
            seed: 7,
            exec: Exec::Sequential,
        }
    }

    #[test]
    fn trivial_equality_case() {
        let r = run(Suite::Equality, &config(0, 1));
        assert_eq!(r.checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn every_suite_passes_small() {
        for suite in Suite::EACH {
            let r = run(suite, &config(3, 3));
            assert!(r.passed(), "{}: {:?}", suite.name(), r.failures);
            assert!(r.checked > 0, "{}", suite.name());
        }
    }

    #[test]
    fn suite_names_parse() {
        for suite in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn maj_suite_on_hook_shape() {
        let lambda = Partition::new(vec![2, 1]).unwrap();
        assert!(maj(&lambda, 2, Exec::Sequential).passed());
    }
}
