//! Reference series for the character of the basic representation of
//! affine `sl_n`, built from the root lattice:
//!
//! `sum_{beta in Z^n, sum beta = 0} e^beta q^{|beta|^2 / 2} / prod_{i>=1} (1 - q^i)^{n-1}`.
//!
//! Kept apart from the CSF computation so the two can be compared.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Multiplicities of weights (last coordinate shifted to 0), per q-degree.
pub type LatticeTable = BTreeMap<usize, BTreeMap<Vec<i64>, BigInt>>;

/// Coefficients of `prod_{i>=1} (1 - q^i)^{-r}` up to `q^cap`.
pub fn colored_partition_counts(r: usize, cap: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); cap + 1];
    series[0] = BigInt::from(1);
    for _ in 0..r {
        for i in 1..=cap {
            for m in i..=cap {
                let prev = series[m - i].clone();
                series[m] += prev;
            }
        }
    }
    series
}

/// Root lattice vectors `beta` with `|beta|^2 / 2 <= cap`, paired with that norm.
pub fn root_lattice_points(n: usize, cap: usize) -> Vec<(Vec<i64>, usize)> {
    let bound = ((2 * cap) as f64).sqrt().floor() as i64;
    let mut out = Vec::new();
    let mut beta = Vec::with_capacity(n);
    fn rec(
        n: usize,
        bound: i64,
        cap: usize,
        beta: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, usize)>,
    ) {
        let sq: i64 = beta.iter().map(|b| b * b).sum();
        if sq > 2 * cap as i64 {
            return;
        }
        if beta.len() + 1 == n {
            let last = -beta.iter().sum::<i64>();
            let total = sq + last * last;
            if total <= 2 * cap as i64 {
                let mut full = beta.clone();
                full.push(last);
                out.push((full, (total / 2) as usize));
            }
            return;
        }
        for b in -bound..=bound {
            beta.push(b);
            rec(n, bound, cap, beta, out);
            beta.pop();
        }
    }
    if n > 0 {
        rec(n, bound, cap, &mut beta, &mut out);
    }
    out
}

/// The character truncated at `q^cap`, for `n >= 2` variables.
pub fn lattice_character(n: usize, cap: usize) -> LatticeTable {
    let eta = colored_partition_counts(n.saturating_sub(1), cap);
    let mut table = LatticeTable::new();
    for (beta, norm) in root_lattice_points(n, cap) {
        let shift = *beta.last().expect("n >= 1");
        let w: Vec<i64> = beta.iter().map(|b| b - shift).collect();
        for d in norm..=cap {
            let c = &eta[d - norm];
            if c.is_zero() {
                continue;
            }
            *table
                .entry(d)
                .or_default()
                .entry(w.clone())
                .or_insert_with(BigInt::zero) += c;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(
            colored_partition_counts(1, 7),
            big(&[1, 1, 2, 3, 5, 7, 11, 15])
        );
        assert_eq!(colored_partition_counts(2, 4), big(&[1, 2, 5, 10, 20]));
        assert_eq!(colored_partition_counts(0, 3), big(&[1, 0, 0, 0]));
    }

    #[test]
    fn lattice_points_rank_one() {
        let mut pts = root_lattice_points(2, 4);
        pts.sort();
        assert_eq!(
            pts,
            vec![
                (vec![-2, 2], 4),
                (vec![-1, 1], 1),
                (vec![0, 0], 0),
                (vec![1, -1], 1),
                (vec![2, -2], 4),
            ]
        );
    }

    #[test]
    fn rank_two_norms() {
        let pts = root_lattice_points(3, 1);
        assert_eq!(pts.iter().filter(|(_, d)| *d == 0).count(), 1);
        assert_eq!(pts.iter().filter(|(_, d)| *d == 1).count(), 6);
    }

    #[test]
    fn sl2_low_degrees() {
        let t = lattice_character(2, 2);
        let d2: Vec<(Vec<i64>, BigInt)> = t[&2].clone().into_iter().collect();
        assert_eq!(
            d2,
            vec![
                (vec![-2, 0], BigInt::from(1)),
                (vec![0, 0], BigInt::from(2)),
                (vec![2, 0], BigInt::from(1)),
            ]
        );
        assert_eq!(t[&0].len(), 1);
    }
}
