//! Gelfand-Tsetlin patterns and partition overlaid patterns (POPs).
//!
//! Rows and entries are 1-indexed in the accessors (`entry(j, i)` is
//! `T^j_i`), with the convention `T^j_{j+1} = 0`. Row `j` of a pattern is
//! the shape of the cells holding entries `<= j` in the associated
//! semistandard tableau.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::partition::{BoxedPartition, Partition};
use crate::qpoly::{qbinom, QPoly};
use crate::sympoly::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GTPattern {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GTPatternRepr {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for GTPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GTPatternRepr::deserialize(d)?;
        GTPattern::new(repr.n, repr.rows).map_err(serde::de::Error::custom)
    }
}

impl GTPattern {
    /// Validates row lengths and the interlacing inequalities.
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPattern("n must be at least 1".into()));
        }
        if rows.len() != n {
            return Err(Error::InvalidPattern(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::InvalidPattern(format!(
                    "row {} has length {}, expected {}",
                    idx + 1,
                    row.len(),
                    idx + 1
                )));
            }
        }
        let t = GTPattern { n, rows };
        for j in 1..n {
            for i in 1..=j {
                let upper = t.entry(j, i);
                if t.entry(j + 1, i) < upper || upper < t.entry(j + 1, i + 1) {
                    return Err(Error::InvalidPattern(format!(
                        "interlacing fails at T^{j}_{i}"
                    )));
                }
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `T^j_i`, 1-indexed; zero for `i > j`.
    pub fn entry(&self, j: usize, i: usize) -> usize {
        if i == 0 || j == 0 || i > j {
            return 0;
        }
        self.rows[j - 1][i - 1]
    }

    /// The bounding row as a partition.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows[self.n - 1].clone()).expect("bounding row is a partition")
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || j + 1 > self.n || i > j + 1 {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(())
    }

    /// `NE_ij = T^{j+1}_i - T^j_i`, for `1 <= i <= j + 1 <= n`.
    pub fn ne(&self, i: usize, j: usize) -> Result<usize> {
        self.check_pair(i, j)?;
        Ok(self.entry(j + 1, i) - self.entry(j, i))
    }

    /// `SE_ij = T^j_i - T^{j+1}_{i+1}`, for `1 <= i <= j + 1 <= n`.
    pub fn se(&self, i: usize, j: usize) -> Result<usize> {
        self.check_pair(i, j)?;
        Ok(self.entry(j, i) - self.entry(j + 1, i + 1))
    }

    /// The overlay index pairs `(i, j)` with `1 <= i <= j < n`, in `(j, i)` order.
    pub fn overlay_pairs(&self) -> Vec<(usize, usize)> {
        (1..self.n)
            .flat_map(|j| (1..=j).map(move |i| (i, j)))
            .collect()
    }

    /// `(NE_ij, SE_ij)` for pair `(i, j)` known to be in range.
    pub(crate) fn box_dims(&self, i: usize, j: usize) -> (usize, usize) {
        (
            self.entry(j + 1, i) - self.entry(j, i),
            self.entry(j, i) - self.entry(j + 1, i + 1),
        )
    }

    /// Product of `qbinom(NE_ij, SE_ij)` over `1 <= i <= j < n`.
    pub fn wtq(&self) -> QPoly {
        self.overlay_pairs()
            .into_iter()
            .fold(QPoly::one(), |acc, (i, j)| {
                let (k, l) = self.box_dims(i, j);
                &acc * &qbinom(k, l)
            })
    }

    /// Sum of `NE_ij * SE_ij` over `1 <= i <= j < n`.
    pub fn area(&self) -> usize {
        self.overlay_pairs()
            .into_iter()
            .map(|(i, j)| {
                let (k, l) = self.box_dims(i, j);
                k * l
            })
            .sum()
    }

    /// Exponent of `x_j` is `|row j| - |row j-1|`.
    pub fn xweight(&self) -> Exponent {
        let sums: Vec<usize> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..self.n)
            .map(|j| sums[j] - if j == 0 { 0 } else { sums[j - 1] })
            .collect()
    }

    /// The pattern with its bottom row removed (`n - 1` rows).
    pub fn truncated(&self) -> Result<GTPattern> {
        if self.n < 2 {
            return Err(Error::BranchingNeedsTwoRows);
        }
        Ok(GTPattern {
            n: self.n - 1,
            rows: self.rows[..self.n - 1].to_vec(),
        })
    }

    /// Converts a semistandard tableau to its pattern.
    pub fn from_ssyt(tab: &Filling) -> Result<GTPattern> {
        if !tab.is_ssyt() {
            return Err(Error::NotSemistandard);
        }
        let n = tab.n();
        if tab.shape().len() > n {
            return Err(Error::TooManyParts {
                parts: tab.shape().parts().to_vec(),
                max: n,
            });
        }
        let rows = (1..=n)
            .map(|j| {
                (1..=j)
                    .map(|i| {
                        tab.row(i)
                            .map_or(0, |r| r.iter().filter(|&&v| v <= j).count())
                    })
                    .collect()
            })
            .collect();
        GTPattern::new(n, rows)
    }

    /// The semistandard tableau with this pattern.
    pub fn to_ssyt(&self) -> Filling {
        let shape = self.shape();
        let rows = (1..=shape.len())
            .map(|i| {
                let mut row = Vec::with_capacity(shape.part(i - 1));
                for j in i..=self.n {
                    let count = self.entry(j, i) - self.entry(j - 1, i);
                    row.extend(std::iter::repeat_n(j, count));
                }
                row
            })
            .collect();
        Filling::new(self.n, rows).expect("pattern rows give a valid filling")
    }
}

/// Every pattern with bounding row `lambda`, sorted lexicographically row
/// by row (top row first).
pub fn enumerate_gt(lambda: &Partition, n: usize) -> Result<Vec<GTPattern>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let bottom = lambda.padded(n)?;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![bottom];
    fn rec(n: usize, stack: &mut Vec<Vec<usize>>, out: &mut Vec<GTPattern>) {
        let below = stack.last().expect("nonempty").clone();
        if below.len() == 1 {
            let rows: Vec<Vec<usize>> = stack.iter().rev().cloned().collect();
            out.push(GTPattern { n, rows });
            return;
        }
        let mu = Partition::new(below.clone()).expect("rows are partitions");
        for row in mu.interlacing_below(below.len()) {
            stack.push(row.padded(below.len() - 1).expect("interlacing length"));
            rec(n, stack, out);
            stack.pop();
        }
    }
    rec(n, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

/// A GT pattern together with one boxed partition per `(i, j)`,
/// `1 <= i <= j < n`, each in the `NE_ij x SE_ij` box. Overlays are keyed
/// by `(j, i)` so iteration follows the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pop {
    pattern: GTPattern,
    overlay: BTreeMap<(usize, usize), BoxedPartition>,
}

#[derive(Serialize, Deserialize)]
struct OverlayEntry {
    i: usize,
    j: usize,
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PopRepr {
    n: usize,
    rows: Vec<Vec<usize>>,
    overlays: Vec<OverlayEntry>,
}

impl Pop {
    /// Builds a POP from `(i, j) -> parts`; every pair must be present and
    /// fit its box. Parts may omit trailing zeros.
    pub fn new(
        pattern: GTPattern,
        entries: impl IntoIterator<Item = ((usize, usize), Vec<usize>)>,
    ) -> Result<Pop> {
        let mut overlay = BTreeMap::new();
        for ((i, j), parts) in entries {
            if i == 0 || i > j || j >= pattern.n() {
                return Err(Error::InvalidOverlay(format!(
                    "pair ({i}, {j}) is not an overlay position"
                )));
            }
            let (k, l) = pattern.box_dims(i, j);
            let boxed = BoxedPartition::new(parts, k, l)
                .map_err(|e| Error::InvalidOverlay(format!("({i}, {j}): {e}")))?;
            if overlay.insert((j, i), boxed).is_some() {
                return Err(Error::InvalidOverlay(format!("pair ({i}, {j}) repeated")));
            }
        }
        for (i, j) in pattern.overlay_pairs() {
            if !overlay.contains_key(&(j, i)) {
                return Err(Error::InvalidOverlay(format!("pair ({i}, {j}) missing")));
            }
        }
        Ok(Pop { pattern, overlay })
    }

    /// Builds from already boxed partitions keyed by `(i, j)`.
    pub(crate) fn from_boxed(
        pattern: GTPattern,
        overlay: impl IntoIterator<Item = ((usize, usize), BoxedPartition)>,
    ) -> Pop {
        let overlay = overlay.into_iter().map(|((i, j), b)| ((j, i), b)).collect();
        Pop { pattern, overlay }
    }

    /// The all-empty overlay on `pattern`.
    pub fn empty_overlay(pattern: GTPattern) -> Pop {
        let overlay = pattern
            .overlay_pairs()
            .into_iter()
            .map(|(i, j)| {
                let (k, l) = pattern.box_dims(i, j);
                ((j, i), BoxedPartition::zero(k, l))
            })
            .collect();
        Pop { pattern, overlay }
    }

    pub fn pattern(&self) -> &GTPattern {
        &self.pattern
    }

    /// `Lambda_ij`.
    pub fn overlay(&self, i: usize, j: usize) -> Option<&BoxedPartition> {
        self.overlay.get(&(j, i))
    }

    /// `((i, j), Lambda_ij)` in `(j, i)` order.
    pub fn overlays(&self) -> impl Iterator<Item = ((usize, usize), &BoxedPartition)> {
        self.overlay.iter().map(|(&(j, i), b)| ((i, j), b))
    }

    /// `|Lambda|`.
    pub fn size(&self) -> usize {
        self.overlay.values().map(BoxedPartition::size).sum()
    }

    /// Complements every overlay entry in its box.
    pub fn bcomp(&self) -> Pop {
        Pop {
            pattern: self.pattern.clone(),
            overlay: self
                .overlay
                .iter()
                .map(|(&key, b)| (key, b.complement()))
                .collect(),
        }
    }

    /// Projection onto the pattern.
    pub fn pr(&self) -> GTPattern {
        self.pattern.clone()
    }

    /// Deletes the bottom pattern row and the overlays with `j = n - 1`.
    pub fn br(&self) -> Result<Pop> {
        let n = self.pattern.n();
        let pattern = self.pattern.truncated()?;
        let overlay = self
            .overlay
            .iter()
            .filter(|(&(j, _), _)| j < n - 1)
            .map(|(&key, b)| (key, b.clone()))
            .collect();
        Ok(Pop { pattern, overlay })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("pop serializes")
    }
}

impl Serialize for Pop {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PopRepr {
            n: self.pattern.n,
            rows: self.pattern.rows.clone(),
            overlays: self
                .overlays()
                .map(|((i, j), b)| OverlayEntry {
                    i,
                    j,
                    parts: b.parts().to_vec(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pop {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PopRepr::deserialize(d)?;
        let pattern = GTPattern::new(repr.n, repr.rows).map_err(serde::de::Error::custom)?;
        Pop::new(
            pattern,
            repr.overlays.into_iter().map(|e| ((e.i, e.j), e.parts)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Every POP on `pattern`: overlays vary lexicographically per pair, pairs
/// taken in `(j, i)` order with the first pair varying slowest.
pub fn enumerate_overlays(pattern: &GTPattern) -> Vec<Pop> {
    let pairs = pattern.overlay_pairs();
    let choices: Vec<Vec<BoxedPartition>> = pairs
        .iter()
        .map(|&(i, j)| {
            let (k, l) = pattern.box_dims(i, j);
            BoxedPartition::all_in_box(k, l)
        })
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<usize> = vec![0; pairs.len()];
    loop {
        out.push(Pop::from_boxed(
            pattern.clone(),
            pairs
                .iter()
                .zip(&current)
                .zip(&choices)
                .map(|((&pair, &idx), opts)| (pair, opts[idx].clone())),
        ));
        // odometer, last position fastest
        let mut pos = pairs.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] < choices[pos].len() {
                break;
            }
            current[pos] = 0;
        }
    }
}

/// Every POP of shape `lambda` in `n` variables.
pub fn enumerate_pops(lambda: &Partition, n: usize) -> Result<Vec<Pop>> {
    Ok(enumerate_gt(lambda, n)?
        .iter()
        .flat_map(enumerate_overlays)
        .collect())
}
