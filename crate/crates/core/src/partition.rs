//! Integer partitions and partitions confined to a rectangular box.
//!
//! A [`Partition`] is always stored in canonical form with trailing zeros
//! removed, so `(10,6,4)` and `(10,6,4,0)` compare and hash equal. Code that
//! needs a padded view (pattern rows, interlacing) asks for it explicitly
//! through [`Partition::padded`] or [`Partition::part`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, accepting trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Result<Vec<usize>> {
        if self.parts.len() > len {
            return Err(Error::TooManyParts {
                parts: self.parts.clone(),
                max: len,
            });
        }
        let mut out = self.parts.clone();
        out.resize(len, 0);
        Ok(out)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Sum over columns of `C(column height, 2)`.
    pub fn eta(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .map(|&h| h * h.saturating_sub(1) / 2)
            .sum()
    }

    /// True iff `self` interlaces `lambda` in `n` variables:
    /// `lambda_i >= self_i >= lambda_{i+1}` for `1 <= i < n`.
    pub fn interlaces(&self, lambda: &Partition, n: usize) -> bool {
        if lambda.len() > n || self.len() > n.saturating_sub(1) {
            return false;
        }
        (0..n.saturating_sub(1))
            .all(|i| lambda.part(i) >= self.part(i) && self.part(i) >= lambda.part(i + 1))
    }

    /// All partitions `mu` with `mu` interlacing `self` in `n` variables.
    pub fn interlacing_below(&self, n: usize) -> Vec<Partition> {
        if n == 0 || self.len() > n {
            return Vec::new();
        }
        let ranges: Vec<(usize, usize)> = (0..n - 1)
            .map(|i| (self.part(i + 1), self.part(i)))
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n - 1);
        fn rec(ranges: &[(usize, usize)], current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if current.len() == ranges.len() {
                out.push(Partition::new(current.clone()).expect("interlacing rows are partitions"));
                return;
            }
            let (lo, hi) = ranges[current.len()];
            for v in lo..=hi {
                current.push(v);
                rec(ranges, current, out);
                current.pop();
            }
        }
        rec(&ranges, &mut current, &mut out);
        out
    }

    /// Partitions of `size` in reverse lexicographic order, at most `max_parts` parts.
    pub fn of_size(size: usize, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            remaining: usize,
            max_part: usize,
            max_parts: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            if current.len() == max_parts {
                return;
            }
            for p in (1..=max_part.min(remaining)).rev() {
                current.push(p);
                rec(remaining - p, p, max_parts, current, out);
                current.pop();
            }
        }
        rec(size, size, max_parts, &mut current, &mut out);
        out
    }

    /// All partitions with `|lambda| <= max_size` and at most `max_parts` parts.
    pub fn up_to(max_size: usize, max_parts: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Self::of_size(s, max_parts))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A partition fitting in a `rows x cols` rectangle, stored padded to exactly
/// `rows` parts (zeros included).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxedPartition {
    parts: Vec<usize>,
    cols: usize,
}

impl BoxedPartition {
    /// Accepts up to `rows` parts (shorter input is zero padded).
    pub fn new(parts: impl Into<Vec<usize>>, rows: usize, cols: usize) -> Result<Self> {
        let raw: Vec<usize> = parts.into();
        let partition = Partition::new(raw.clone())?;
        if partition.len() > rows || partition.part(0) > cols || raw.len() > rows {
            return Err(Error::DoesNotFitBox {
                parts: raw,
                rows,
                cols,
            });
        }
        Ok(Self {
            parts: partition.padded(rows)?,
            cols,
        })
    }

    /// The empty partition in a `rows x cols` box.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            parts: vec![0; rows],
            cols,
        }
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Padded parts, length `rows()`.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("boxed parts are weakly decreasing")
    }

    /// `(l - p_k, ..., l - p_1)` in the same box.
    pub fn complement(&self) -> BoxedPartition {
        let parts = self.parts.iter().rev().map(|&p| self.cols - p).collect();
        BoxedPartition {
            parts,
            cols: self.cols,
        }
    }

    /// `gamma + delta` with `delta = (k-1, ..., 1, 0)`: a strictly decreasing
    /// `k`-tuple with entries in `[0, k + l - 1]`.
    pub fn to_strict_tuple(&self) -> Vec<usize> {
        let k = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (k - 1 - i))
            .collect()
    }

    pub fn from_strict_tuple(tuple: &[usize], rows: usize, cols: usize) -> Result<Self> {
        let bad = || Error::InvalidStrictTuple {
            tuple: tuple.to_vec(),
            rows,
            cols,
        };
        if tuple.len() != rows
            || tuple.windows(2).any(|w| w[0] <= w[1])
            || tuple.first().is_some_and(|&t| t > rows + cols - 1)
        {
            return Err(bad());
        }
        let parts = tuple
            .iter()
            .enumerate()
            .map(|(i, &t)| t.checked_sub(rows - 1 - i).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        BoxedPartition::new(parts, rows, cols)
    }

    /// Every partition in the `rows x cols` box, lexicographically increasing.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<BoxedPartition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fn rec(rows: usize, cols: usize, current: &mut Vec<usize>, out: &mut Vec<BoxedPartition>) {
            if current.len() == rows {
                out.push(BoxedPartition {
                    parts: current.clone(),
                    cols,
                });
                return;
            }
            let max = current.last().copied().unwrap_or(cols);
            for v in 0..=max {
                current.push(v);
                rec(rows, cols, current, out);
                current.pop();
            }
        }
        rec(rows, cols, &mut current, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(p(&[10, 6, 4, 0]), p(&[10, 6, 4]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(
            p(&[10, 6, 4]).conjugate(),
            p(&[3, 3, 3, 3, 2, 2, 1, 1, 1, 1])
        );
    }

    #[test]
    fn conjugate_is_involutive() {
        for lambda in Partition::up_to(10, 10) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(p(&[1]).eta(), 0);
        assert_eq!(p(&[1, 1, 1]).eta(), 3);
        assert_eq!(p(&[10, 6, 4]).eta(), 14);
    }

    #[test]
    fn interlacing_examples() {
        assert!(p(&[]).interlaces(&p(&[5]), 2));
        assert!(p(&[8, 5, 2]).interlaces(&p(&[10, 6, 4, 0]), 4));
        assert!(!p(&[7]).interlaces(&p(&[5, 1]), 2));
        let below = p(&[2]).interlacing_below(2);
        assert_eq!(below, vec![p(&[]), p(&[1]), p(&[2])]);
        for mu in p(&[3, 1]).interlacing_below(3) {
            assert!(mu.interlaces(&p(&[3, 1]), 3));
        }
    }

    #[test]
    fn partition_counts() {
        // p(0..=7)
        let counts: Vec<usize> = (0..=7).map(|s| Partition::of_size(s, s).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::of_size(6, 2).len(), 4);
    }

    #[test]
    fn box_complement_examples() {
        let full = BoxedPartition::new(vec![2, 2], 2, 2).unwrap();
        assert_eq!(full.complement().parts(), &[0, 0]);
        let stair = BoxedPartition::new(vec![2, 1, 0], 3, 2).unwrap();
        assert_eq!(stair.complement(), stair);
        let single = BoxedPartition::new(vec![2], 1, 2).unwrap();
        assert_eq!(single.complement().parts(), &[0]);
    }

    #[test]
    fn box_complement_involution_and_size() {
        for k in 0..=5 {
            for l in 0..=5 {
                for g in BoxedPartition::all_in_box(k, l) {
                    let c = g.complement();
                    assert_eq!(c.complement(), g);
                    assert_eq!(g.size() + c.size(), k * l);
                }
            }
        }
    }

    #[test]
    fn strict_tuple_examples() {
        let empty = BoxedPartition::new(Vec::new(), 0, 4).unwrap();
        assert!(empty.to_strict_tuple().is_empty());
        let g = BoxedPartition::new(vec![2, 1, 0], 3, 2).unwrap();
        assert_eq!(g.to_strict_tuple(), vec![4, 2, 0]);
        let g = BoxedPartition::new(vec![1, 1], 2, 3).unwrap();
        assert_eq!(g.to_strict_tuple(), vec![2, 1]);
    }

    #[test]
    fn strict_tuple_rejects_bad_input() {
        assert!(BoxedPartition::from_strict_tuple(&[1, 1], 2, 2).is_err());
        assert!(BoxedPartition::from_strict_tuple(&[4, 0], 2, 2).is_err());
        assert!(BoxedPartition::from_strict_tuple(&[0, 1], 2, 2).is_err());
        assert!(BoxedPartition::from_strict_tuple(&[2], 2, 2).is_err());
    }

    #[test]
    fn strict_tuple_round_trip() {
        for k in 0..=5 {
            for l in 0..=5 {
                for g in BoxedPartition::all_in_box(k, l) {
                    let t = g.to_strict_tuple();
                    assert_eq!(BoxedPartition::from_strict_tuple(&t, k, l).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn boxed_rejects_overflow() {
        assert!(BoxedPartition::new(vec![3], 1, 2).is_err());
        assert!(BoxedPartition::new(vec![1, 1], 1, 2).is_err());
    }
}
