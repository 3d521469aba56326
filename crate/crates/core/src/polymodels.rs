//! Polynomial models of the q-Whittaker polynomial `W_lambda(x_1..x_n; q)`.
//!
//! * fermionic: sum over GT patterns of `x^T wt_q(T)`;
//! * inv / quinv: sum over column strict fillings of `x^F q^{stat(F)}`.
//!
//! Also: the branching identity at `x_n = 1`, generating functions of the
//! fibers of row sorting, and truncations of the CSF series whose limit is
//! the basic-representation character.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::bijections::Stat;
use crate::error::{Error, Result};
use crate::fillings::{csf_iter, enumerate_csf, Filling};
use crate::par::Exec;
use crate::partition::Partition;
use crate::patterns::{enumerate_gt, GTPattern};
use crate::qpoly::{qbinom, QPoly};
use crate::report::{Failure, Report};
use crate::sympoly::{Exponent, SymPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelTag {
    Fermionic,
    Inv,
    Quinv,
}

impl ModelTag {
    pub const ALL: [ModelTag; 3] = [ModelTag::Fermionic, ModelTag::Inv, ModelTag::Quinv];
}

impl std::str::FromStr for ModelTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<ModelTag> {
        match s {
            "fermionic" => Ok(ModelTag::Fermionic),
            "inv" => Ok(ModelTag::Inv),
            "quinv" => Ok(ModelTag::Quinv),
            other => Err(Error::InvalidArgument(format!("unknown model {other}"))),
        }
    }
}

fn check_shape(lambda: &Partition, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            parts: lambda.parts().to_vec(),
            max: n,
        });
    }
    Ok(())
}

fn merge(mut a: SymPoly, b: SymPoly) -> SymPoly {
    a.add_assign(&b).expect("same variable count");
    a
}

/// `W_lambda(x_1..x_n; q)` computed in the requested model.
pub fn whittaker(lambda: &Partition, n: usize, model: ModelTag, exec: Exec) -> Result<SymPoly> {
    check_shape(lambda, n)?;
    match model {
        ModelTag::Fermionic => {
            let patterns = enumerate_gt(lambda, n)?;
            Ok(exec.fold_reduce(
                &patterns,
                || SymPoly::zero(n),
                |mut acc, t| {
                    acc.add_term(t.xweight(), &t.wtq()).expect("n variables");
                    acc
                },
                merge,
            ))
        }
        ModelTag::Inv | ModelTag::Quinv => {
            let stat = if model == ModelTag::Inv {
                Stat::Inv
            } else {
                Stat::Quinv
            };
            let parts = csf_iter(lambda, n).split();
            let counts = exec.fold_reduce(
                &parts,
                BTreeMap::new,
                |mut acc: BTreeMap<(Exponent, usize), u64>, part| {
                    for f in part.clone() {
                        let d = stat
                            .eval(&f)
                            .expect("enumerated fillings are column strict");
                        *acc.entry((f.xweight(), d)).or_insert(0) += 1;
                    }
                    acc
                },
                |mut a, b| {
                    for (k, v) in b {
                        *a.entry(k).or_insert(0) += v;
                    }
                    a
                },
            );
            let mut out = SymPoly::zero(n);
            for ((e, d), count) in counts {
                let mut coeff = vec![0u64; d + 1];
                coeff[d] = count;
                out.add_term(e, &QPoly::from_coeffs(coeff))?;
            }
            Ok(out)
        }
    }
}

/// `s_lambda(x_1..x_n)` as the sum of `x^T` over GT patterns.
pub fn schur(lambda: &Partition, n: usize) -> Result<SymPoly> {
    check_shape(lambda, n)?;
    let mut out = SymPoly::zero(n);
    for t in enumerate_gt(lambda, n)? {
        out.add_monomial(t.xweight(), 0)?;
    }
    Ok(out)
}

/// Right-hand side of the branching rule: the sum over `mu` interlacing
/// `lambda` of `prod_i qbinom(lambda_i - mu_i, mu_i - lambda_{i+1}) W_mu`.
pub fn branching_rhs(lambda: &Partition, n: usize, exec: Exec) -> Result<SymPoly> {
    check_shape(lambda, n)?;
    if n < 2 {
        return Err(Error::BranchingNeedsTwoRows);
    }
    let mut rhs = SymPoly::zero(n - 1);
    for mu in lambda.interlacing_below(n) {
        let coeff = (0..n - 1).fold(QPoly::one(), |acc, i| {
            let k = lambda.part(i) - mu.part(i);
            let l = mu.part(i) - lambda.part(i + 1);
            &acc * &qbinom(k, l)
        });
        let w_mu = whittaker(&mu, n - 1, ModelTag::Fermionic, exec)?;
        rhs.add_assign(&w_mu.scale(&coeff))?;
    }
    Ok(rhs)
}

/// Compares `W_lambda(x_1..x_{n-1}, 1; q)` with [`branching_rhs`].
pub fn check_branching_identity(lambda: &Partition, n: usize, exec: Exec) -> Report {
    let mut report = Report::new();
    let outcome = (|| -> Result<Option<String>> {
        let lhs = whittaker(lambda, n, ModelTag::Fermionic, exec)?.specialize_last_var_to_one()?;
        let rhs = branching_rhs(lambda, n, exec)?;
        Ok((lhs != rhs).then(|| "W_lambda at x_n = 1 differs from the branching sum".into()))
    })();
    report.record(match outcome {
        Ok(None) => None,
        Ok(Some(detail)) => Some(Failure::new("branching-identity", lambda, n, detail)),
        Err(e) => Some(Failure::new("branching-identity", lambda, n, e.to_string())),
    });
    report
}

/// Every column strict filling whose row sort is the tableau of `t`,
/// in lexicographic order of rows (bottom row varying slowest).
pub fn fiber(t: &GTPattern) -> Vec<Filling> {
    let tab = t.to_ssyt();
    let rows = tab.rows();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
    fn perms(
        multiset: &mut BTreeMap<usize, usize>,
        below: Option<&[usize]>,
        prefix: &mut Vec<usize>,
        len: usize,
        sink: &mut dyn FnMut(&[usize]),
    ) {
        if prefix.len() == len {
            sink(prefix);
            return;
        }
        let pos = prefix.len();
        let bound = below.and_then(|b| b.get(pos)).copied();
        let keys: Vec<usize> = multiset
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .collect();
        for v in keys {
            if bound.is_some_and(|b| v >= b) {
                continue;
            }
            *multiset.get_mut(&v).expect("key present") -= 1;
            prefix.push(v);
            perms(multiset, below, prefix, len, sink);
            prefix.pop();
            *multiset.get_mut(&v).expect("key present") += 1;
        }
    }
    fn rec(
        r: usize,
        n: usize,
        rows: &[Vec<usize>],
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<Filling>,
    ) {
        if r == 0 {
            out.push(Filling::new(n, chosen.clone()).expect("fiber rows valid"));
            return;
        }
        let idx = r - 1;
        let mut multiset = BTreeMap::new();
        for &v in &rows[idx] {
            *multiset.entry(v).or_insert(0) += 1;
        }
        let below = chosen.get(idx + 1).cloned();
        let mut candidates = Vec::new();
        perms(
            &mut multiset,
            below.as_deref(),
            &mut Vec::new(),
            rows[idx].len(),
            &mut |p| candidates.push(p.to_vec()),
        );
        for c in candidates {
            chosen[idx] = c;
            rec(r - 1, n, rows, chosen, out);
        }
    }
    rec(rows.len(), t.n(), rows, &mut chosen, &mut out);
    out
}

/// `sum q^{stat(F)}` over the fiber of row sorting above `t`.
pub fn fiber_qgen(t: &GTPattern, stat: Stat) -> QPoly {
    let mut out = QPoly::zero();
    for f in fiber(t) {
        out.add_monomial(stat.eval(&f).expect("fiber fillings are column strict"));
    }
    out
}

/// Reduced weight: the exponent vector shifted by a multiple of
/// `(1, ..., 1)` so that its last coordinate is zero.
pub fn reduce_weight(exponent: &[usize]) -> Vec<i64> {
    let last = exponent.last().copied().unwrap_or(0) as i64;
    exponent.iter().map(|&e| e as i64 - last).collect()
}

/// Multiplicities of reduced weights, per q-degree.
pub type WeightTable = BTreeMap<usize, BTreeMap<Vec<i64>, BigInt>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightMult {
    pub w: Vec<i64>,
    pub mult: serde_json::Number,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCoefficient {
    pub d: usize,
    pub stable_at_k: usize,
    pub weights: Vec<WeightMult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeExponent {
    pub k: usize,
    pub filling: Filling,
    pub exponent: i64,
}

/// Truncation of `sum_k sum_{F in C_k} x^F q^{k^2 - inv(F)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPartial {
    pub n: usize,
    pub k_max: usize,
    pub q_cap: usize,
    /// Cumulative table after all `k <= k_max`.
    pub table: WeightTable,
    /// Per degree, the smallest `k` from which the partial sums no longer
    /// change up to `k_max`.
    pub stable_at: BTreeMap<usize, usize>,
    pub negative: Vec<NegativeExponent>,
}

impl CharacterPartial {
    /// True when every degree settled strictly before `k_max`.
    pub fn all_stable(&self) -> bool {
        self.stable_at.values().all(|&k| k < self.k_max)
    }

    pub fn coefficients(&self) -> Vec<DegreeCoefficient> {
        (0..=self.q_cap)
            .map(|d| DegreeCoefficient {
                d,
                stable_at_k: self.stable_at.get(&d).copied().unwrap_or(0),
                weights: self
                    .table
                    .get(&d)
                    .into_iter()
                    .flatten()
                    .map(|(w, m)| WeightMult {
                        w: w.clone(),
                        mult: m.to_string().parse().expect("integer"),
                    })
                    .collect(),
            })
            .collect()
    }

    /// Exact agreement with `other` for every degree `<= q_cap`.
    pub fn matches(&self, other: &WeightTable) -> bool {
        (0..=self.q_cap).all(|d| {
            let empty = BTreeMap::new();
            self.table.get(&d).unwrap_or(&empty) == other.get(&d).unwrap_or(&empty)
        })
    }
}

/// The shape `k * (2, 1, ..., 1)` with `n - 1` nonzero parts.
pub fn theta_multiple(n: usize, k: usize) -> Partition {
    let mut parts = vec![k; n - 1];
    parts[0] = 2 * k;
    Partition::new(parts).expect("weakly decreasing")
}

/// Membership in `C_k`: 1 occurs in the first column, or 1 does not occur
/// in the last column.
pub fn in_c_k(f: &Filling) -> bool {
    let width = f.rows().first().map_or(0, Vec::len);
    if width == 0 {
        return true;
    }
    let column_has_one = |c: usize| f.rows().iter().any(|r| r.get(c) == Some(&1));
    column_has_one(0) || !column_has_one(width - 1)
}

/// Contributions of `C_k` at degrees `<= q_cap`, plus fillings with a
/// negative q-exponent.
fn character_level(n: usize, k: usize, q_cap: usize) -> (WeightTable, Vec<NegativeExponent>) {
    let shape = theta_multiple(n, k);
    let mut table = WeightTable::new();
    let mut negative = Vec::new();
    for f in enumerate_csf(&shape, n) {
        if !in_c_k(&f) {
            continue;
        }
        let inv = f.inv().expect("column strict") as i64;
        let exponent = (k * k) as i64 - inv;
        if exponent < 0 {
            negative.push(NegativeExponent {
                k,
                filling: f,
                exponent,
            });
            continue;
        }
        let d = exponent as usize;
        if d <= q_cap {
            *table
                .entry(d)
                .or_default()
                .entry(reduce_weight(&f.xweight()))
                .or_insert_with(BigInt::zero) += 1;
        }
    }
    (table, negative)
}

pub fn basic_character_partial(
    n: usize,
    k_max: usize,
    q_cap: usize,
    exec: Exec,
) -> Result<CharacterPartial> {
    if n < 2 {
        return Err(Error::InvalidArgument("need at least 2 variables".into()));
    }
    let ks: Vec<usize> = (0..=k_max).collect();
    let levels = exec.map_collect(&ks, |&k| character_level(n, k, q_cap));
    let mut table = WeightTable::new();
    let mut stable_at = BTreeMap::new();
    let mut negative = Vec::new();
    for (k, (level, neg)) in levels.into_iter().enumerate() {
        negative.extend(neg);
        for (d, weights) in level {
            if weights.is_empty() {
                continue;
            }
            stable_at.insert(d, k);
            let slot = table.entry(d).or_default();
            for (w, m) in weights {
                *slot.entry(w).or_insert_with(BigInt::zero) += m;
            }
        }
    }
    for d in 0..=q_cap {
        stable_at.entry(d).or_insert(0);
    }
    Ok(CharacterPartial {
        n,
        k_max,
        q_cap,
        table,
        stable_at,
        negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::tests::sample_pattern;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w2() -> SymPoly {
        let mut e = SymPoly::zero(2);
        e.add_monomial(vec![2, 0], 0).unwrap();
        e.add_term(vec![1, 1], &QPoly::from_coeffs([1, 1])).unwrap();
        e.add_monomial(vec![0, 2], 0).unwrap();
        e
    }

    #[test]
    fn whittaker_examples() {
        for model in ModelTag::ALL {
            for n in 1..=3 {
                let w = whittaker(&p(&[]), n, model, Exec::Sequential).unwrap();
                assert_eq!(w, SymPoly::one(n));
            }
            assert_eq!(whittaker(&p(&[2]), 2, model, Exec::Parallel).unwrap(), w2());
            let w = whittaker(&p(&[1, 1]), 3, model, Exec::Sequential).unwrap();
            let mut m11 = SymPoly::zero(3);
            for e in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
                m11.add_monomial(e.to_vec(), 0).unwrap();
            }
            assert_eq!(w, m11);
        }
        assert!(whittaker(&p(&[1, 1, 1]), 2, ModelTag::Inv, Exec::Sequential).is_err());
    }

    #[test]
    fn schur_examples() {
        let mut e = SymPoly::zero(2);
        e.add_monomial(vec![1, 0], 0).unwrap();
        e.add_monomial(vec![0, 1], 0).unwrap();
        assert_eq!(schur(&p(&[1]), 2).unwrap(), e);
        assert_eq!(schur(&p(&[2]), 2).unwrap(), w2().eval_q_zero());
    }

    #[test]
    fn branching_small_cases() {
        let lhs = whittaker(&p(&[1]), 2, ModelTag::Fermionic, Exec::Sequential)
            .unwrap()
            .specialize_last_var_to_one()
            .unwrap();
        let mut expected = SymPoly::zero(1);
        expected.add_monomial(vec![1], 0).unwrap();
        expected.add_monomial(vec![0], 0).unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(
            branching_rhs(&p(&[1]), 2, Exec::Sequential).unwrap(),
            expected
        );

        let lhs = w2().specialize_last_var_to_one().unwrap();
        assert_eq!(lhs.coefficient(&[1]), QPoly::from_coeffs([1, 1]));
        for lambda in [p(&[2]), p(&[2, 1])] {
            let n = lambda.len() + 1;
            assert!(check_branching_identity(&lambda, n, Exec::Sequential).passed());
        }
    }

    #[test]
    fn fiber_examples() {
        let column = GTPattern::new(2, vec![vec![1], vec![1, 1]]).unwrap();
        assert_eq!(fiber(&column).len(), 1);
        assert_eq!(fiber_qgen(&column, Stat::Inv), QPoly::one());
        let t = GTPattern::new(2, vec![vec![1], vec![2, 0]]).unwrap();
        let fib = fiber(&t);
        assert_eq!(fib.len(), 2);
        for stat in Stat::BOTH {
            assert_eq!(fiber_qgen(&t, stat), QPoly::from_coeffs([1, 1]));
        }
    }

    #[test]
    fn sample_pattern_fiber() {
        let t = sample_pattern();
        let fib = fiber(&t);
        assert_eq!(fib.len(), 2160);
        assert_eq!(BigInt::from(fib.len()), t.wtq().eval_one());
        assert_eq!(t.area(), 17);
        for f in &fib {
            assert_eq!(f.rsort().unwrap(), t);
            assert_eq!(f.inv().unwrap() + f.quinv().unwrap(), 17);
        }
        assert_eq!(fiber_qgen(&t, Stat::Quinv), t.wtq());
        assert_eq!(fiber_qgen(&t, Stat::Inv), t.wtq());
    }

    #[test]
    fn theta_shapes() {
        assert_eq!(theta_multiple(2, 3), p(&[6]));
        assert_eq!(theta_multiple(4, 2), p(&[4, 2, 2]));
        assert_eq!(theta_multiple(3, 0), p(&[]));
    }

    #[test]
    fn c_k_membership() {
        let f = |rows: &[usize]| Filling::new(2, vec![rows.to_vec()]).unwrap();
        assert!(in_c_k(&f(&[1, 1])));
        assert!(in_c_k(&f(&[1, 2])));
        assert!(in_c_k(&f(&[2, 2])));
        assert!(!in_c_k(&f(&[2, 1])));
        assert!(in_c_k(&Filling::new(2, vec![]).unwrap()));
    }

    #[test]
    fn character_low_degrees_n2() {
        let c = basic_character_partial(2, 1, 1, Exec::Sequential).unwrap();
        let d0: Vec<_> = c.table[&0].iter().collect();
        assert_eq!(d0, vec![(&vec![0, 0], &BigInt::from(1))]);
        let d1: BTreeMap<Vec<i64>, BigInt> = c.table[&1].clone();
        let expected: BTreeMap<Vec<i64>, BigInt> = [
            (vec![-2, 0], BigInt::from(1)),
            (vec![0, 0], BigInt::from(1)),
            (vec![2, 0], BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d1, expected);
        assert_eq!(c.stable_at[&0], 0);
        assert_eq!(c.stable_at[&1], 1);
        assert!(c.negative.is_empty());
    }
}
