//! Weight-preserving bijections between column strict fillings and POPs.
//!
//! `psi_quinv` reads the zcounts of each group `cells(i, j, F)` right to
//! left; `psi_inv` reads the zcb values left to right. Both land on the
//! pattern `rsort(F)`, with box-complementary overlays. The inverse builds
//! the filling row by row from the bottom.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{enumerate_csf, Filling};
use crate::par::Exec;
use crate::partition::{BoxedPartition, Partition};
use crate::patterns::Pop;
use crate::report::{Failure, Report};

/// Which statistic a bijection tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Inv,
    Quinv,
}

impl Stat {
    pub const BOTH: [Stat; 2] = [Stat::Inv, Stat::Quinv];

    /// The statistic's value on a column strict filling.
    pub fn eval(self, f: &Filling) -> Result<usize> {
        match self {
            Stat::Inv => f.inv(),
            Stat::Quinv => f.quinv(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Inv => "inv",
            Stat::Quinv => "quinv",
        }
    }
}

impl std::str::FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Stat> {
        match s {
            "inv" => Ok(Stat::Inv),
            "quinv" => Ok(Stat::Quinv),
            other => Err(Error::InvalidArgument(format!("unknown statistic {other}"))),
        }
    }
}

fn psi(f: &Filling, stat: Stat) -> Result<Pop> {
    let pattern = f.rsort()?;
    let mut overlay = Vec::new();
    for (i, j) in pattern.overlay_pairs() {
        let (k, l) = pattern.box_dims(i, j);
        let cells = f.cells(i, j);
        let parts: Vec<usize> = match stat {
            Stat::Quinv => cells
                .iter()
                .rev()
                .map(|&c| f.zcount(c))
                .collect::<Result<_>>()?,
            Stat::Inv => cells.iter().map(|&c| f.zcb(c)).collect::<Result<_>>()?,
        };
        let boxed = BoxedPartition::new(parts, k, l)
            .map_err(|e| Error::InvalidOverlay(format!("({i}, {j}) from filling: {e}")))?;
        overlay.push(((i, j), boxed));
    }
    Ok(Pop::from_boxed(pattern, overlay))
}

/// `(rsort(F), Lambda)` with `Lambda_ij` the zcounts of `cells(i, j, F)`
/// read right to left.
pub fn psi_quinv(f: &Filling) -> Result<Pop> {
    psi(f, Stat::Quinv)
}

/// `(rsort(F), Lambda)` with `Lambda_ij` the zcb values of `cells(i, j, F)`
/// read left to right.
pub fn psi_inv(f: &Filling) -> Result<Pop> {
    psi(f, Stat::Inv)
}

pub fn psi_for(f: &Filling, stat: Stat) -> Result<Pop> {
    psi(f, stat)
}

/// Inverse of `psi_inv` / `psi_quinv`.
///
/// Rows are filled from the bottom. In row `i`, for `j = n-1` down to `i`,
/// the candidates for the entry `j + 1` are the unfilled cells whose lower
/// neighbour (if any) exceeds `j + 1`. There must be exactly
/// `NE_ij + SE_ij` of them; they are labelled from the right (`inv`) or
/// from the left (`quinv`) and `Lambda_ij + delta` selects the labels that
/// receive `j + 1`. Whatever is left in row `i` gets `i`.
pub fn psi_inverse(pop: &Pop, stat: Stat) -> Result<Filling> {
    let pattern = pop.pattern();
    let n = pattern.n();
    let shape = pattern.shape();
    let mut rows: Vec<Vec<Option<usize>>> =
        shape.parts().iter().map(|&len| vec![None; len]).collect();
    for i in (1..=shape.len()).rev() {
        for j in (i..n).rev() {
            let (k, l) = pattern.box_dims(i, j);
            let (upper, lower) = rows.split_at_mut(i);
            let row = &mut upper[i - 1];
            let below = lower.first();
            let mut candidates: Vec<usize> = (0..row.len())
                .filter(|&c| {
                    row[c].is_none()
                        && below
                            .and_then(|b| b.get(c))
                            .is_none_or(|v| v.expect("lower row complete") > j + 1)
                })
                .collect();
            if candidates.len() != k + l {
                return Err(Error::CandidateCountMismatch {
                    i,
                    j,
                    found: candidates.len(),
                    expected: k + l,
                });
            }
            if stat == Stat::Inv {
                candidates.reverse();
            }
            let lambda = pop
                .overlay(i, j)
                .ok_or_else(|| Error::InvalidOverlay(format!("pair ({i}, {j}) missing")))?;
            for label in lambda.to_strict_tuple() {
                row[candidates[label]] = Some(j + 1);
            }
        }
        for cell in rows[i - 1].iter_mut().filter(|c| c.is_none()) {
            *cell = Some(i);
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| v.expect("every cell filled"))
                .collect()
        })
        .collect();
    Filling::new(n, rows)
}

/// `psi_inverse(., inv) o psi_quinv`: an involution exchanging inv and quinv.
pub fn omega(f: &Filling) -> Result<Filling> {
    psi_inverse(&psi_quinv(f)?, Stat::Inv)
}

fn csf_report(
    lambda: &Partition,
    n: usize,
    exec: Exec,
    check: impl Fn(&Filling) -> Result<Option<String>> + Sync + Send,
    name: &'static str,
) -> Report {
    let fillings = enumerate_csf(lambda, n);
    exec.fold_reduce(
        &fillings,
        Report::new,
        |mut report, f| {
            let failure = match check(f) {
                Ok(None) => None,
                Ok(Some(detail)) => Some(Failure::new(name, lambda, n, detail).with_witness(f)),
                Err(e) => Some(Failure::new(name, lambda, n, e.to_string()).with_witness(f)),
            };
            report.record(failure);
            report
        },
        Report::merge,
    )
}

/// `pr o psi_v = rsort` for both statistics, over every CSF of `lambda`.
pub fn check_projection(lambda: &Partition, n: usize, exec: Exec) -> Report {
    csf_report(
        lambda,
        n,
        exec,
        |f| {
            let t = f.rsort()?;
            for stat in Stat::BOTH {
                if psi_for(f, stat)?.pr() != t {
                    return Ok(Some(format!("pr o psi_{} differs from rsort", stat.name())));
                }
            }
            Ok(None)
        },
        "projection",
    )
}

/// `psi_v o dsplice = br o psi_v` for both statistics, with the spliced
/// filling read over `[1, n-1]`. Vacuous for `n = 1`.
pub fn check_branching(lambda: &Partition, n: usize, exec: Exec) -> Report {
    if n < 2 {
        return Report::new();
    }
    csf_report(
        lambda,
        n,
        exec,
        |f| {
            let d = f.dsplice()?;
            for stat in Stat::BOTH {
                if psi_for(&d, stat)? != psi_for(f, stat)?.br()? {
                    return Ok(Some(format!(
                        "psi_{0} o dsplice differs from br o psi_{0}",
                        stat.name()
                    )));
                }
            }
            Ok(None)
        },
        "branching",
    )
}

/// `bcomp o psi_inv = psi_quinv` over every CSF of `lambda`.
pub fn check_complement(lambda: &Partition, n: usize, exec: Exec) -> Report {
    csf_report(
        lambda,
        n,
        exec,
        |f| {
            Ok((psi_inv(f)?.bcomp() != psi_quinv(f)?)
                .then(|| "bcomp o psi_inv differs from psi_quinv".to_string()))
        },
        "complement",
    )
}
