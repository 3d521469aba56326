//! Fillings of Young diagrams and the statistics defined on them.
//!
//! Cells are `(row, col)`, 1-based, English convention. The triple-based
//! statistics (`quinv`, `inv`, `zcount`, `zcb`) are only defined for column
//! strict fillings and reject anything else.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::patterns::GTPattern;
use crate::sympoly::Exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRef {
    pub row: usize,
    pub col: usize,
}

impl CellRef {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn below(self) -> CellRef {
        CellRef::new(self.row + 1, self.col)
    }
}

/// A triple `(x, y, z)`: `y` is the cell under `x` (possibly in the
/// augmented row below the diagram) and `z` shares `x`'s row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub x: CellRef,
    pub y: CellRef,
    pub z: CellRef,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Filling {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct FillingRepr {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FillingRepr::deserialize(d)?;
        Filling::new(repr.n, repr.rows).map_err(serde::de::Error::custom)
    }
}

impl Filling {
    /// Row lengths must form a partition; entries must lie in `[1, n]`.
    /// Trailing empty rows are dropped.
    pub fn new(n: usize, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidFilling(
                "row lengths are not weakly decreasing".into(),
            ));
        }
        if let Some(v) = rows.iter().flatten().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidFilling(format!("entry {v} outside [1, {n}]")));
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> Option<&[usize]> {
        i.checked_sub(1)
            .and_then(|idx| self.rows.get(idx))
            .map(Vec::as_slice)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect::<Vec<_>>())
            .expect("row lengths form a partition")
    }

    /// `F(c)`, or `None` outside the diagram.
    pub fn get(&self, c: CellRef) -> Option<usize> {
        self.row(c.row)
            .and_then(|r| c.col.checked_sub(1).and_then(|k| r.get(k)))
            .copied()
    }

    pub fn contains(&self, c: CellRef) -> bool {
        self.get(c).is_some()
    }

    /// Cells in row-major order.
    pub fn cell_refs(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (0..row.len()).map(move |c| CellRef::new(r + 1, c + 1)))
    }

    /// Same cells reinterpreted over a different alphabet `[1, n]`.
    pub fn with_alphabet(&self, n: usize) -> Result<Filling> {
        Filling::new(n, self.rows.clone())
    }

    /// Exponent of `x_v` is the number of cells holding `v`.
    pub fn xweight(&self) -> Exponent {
        let mut e = vec![0; self.n];
        for &v in self.rows.iter().flatten() {
            e[v - 1] += 1;
        }
        e
    }

    fn vertical_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.windows(2).flat_map(|w| {
            w[1].iter()
                .enumerate()
                .map(move |(c, &lower)| (w[0][c], lower))
        })
    }

    /// Entries strictly increase down every column.
    pub fn is_csf(&self) -> bool {
        self.vertical_pairs().all(|(up, down)| up < down)
    }

    /// Entries weakly decrease down every column.
    pub fn is_wdf(&self) -> bool {
        self.vertical_pairs().all(|(up, down)| up >= down)
    }

    /// Column strict with weakly increasing rows.
    pub fn is_ssyt(&self) -> bool {
        self.is_csf() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    fn require_csf(&self) -> Result<()> {
        if self.is_csf() {
            Ok(())
        } else {
            Err(Error::NotColumnStrict)
        }
    }

    /// Sum of `leg(u)` over cells `u` whose lower neighbour holds a larger
    /// entry. Equals `eta(shape)` exactly on CSFs and 0 exactly on WDFs.
    pub fn maj(&self) -> usize {
        let heights = self.shape().conjugate();
        self.cell_refs()
            .filter(|&u| {
                self.get(u.below())
                    .is_some_and(|down| self.get(u).expect("cell in shape") < down)
            })
            .map(|u| heights.part(u.col - 1) - u.row)
            .sum()
    }

    /// `F(y)` where `y` may sit just below the diagram (read as infinity).
    fn below_value(&self, x: CellRef) -> usize {
        self.get(x.below()).unwrap_or(usize::MAX)
    }

    fn triples(&self, right: bool) -> Result<Vec<Triple>> {
        self.require_csf()?;
        let mut out = Vec::new();
        for x in self.cell_refs() {
            let fx = self.get(x).expect("cell in shape");
            let fy = self.below_value(x);
            let row = self.row(x.row).expect("row in shape");
            let cols: Box<dyn Iterator<Item = usize>> = if right {
                Box::new(x.col + 1..=row.len())
            } else {
                Box::new(1..x.col)
            };
            for col in cols {
                let fz = row[col - 1];
                if fx < fz && fz < fy {
                    out.push(Triple {
                        x,
                        y: x.below(),
                        z: CellRef::new(x.row, col),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Triples with `z` right of `x` and `F(x) < F(z) < F(y)`.
    pub fn quinv_triples(&self) -> Result<Vec<Triple>> {
        self.triples(true)
    }

    pub fn quinv(&self) -> Result<usize> {
        self.triple_count(true)
    }

    /// Triples with `z` left of `x` and `F(x) < F(z) < F(y)`; their number is
    /// `inv` on column strict fillings.
    pub fn refinv_triples(&self) -> Result<Vec<Triple>> {
        self.triples(false)
    }

    pub fn inv(&self) -> Result<usize> {
        self.triple_count(false)
    }

    fn triple_count(&self, right: bool) -> Result<usize> {
        self.require_csf()?;
        let mut count = 0;
        for (r, row) in self.rows.iter().enumerate() {
            let below = self.rows.get(r + 1);
            for (c, &fx) in row.iter().enumerate() {
                let fy = below.and_then(|b| b.get(c)).copied().unwrap_or(usize::MAX);
                let others = if right { &row[c + 1..] } else { &row[..c] };
                count += others.iter().filter(|&&fz| fx < fz && fz < fy).count();
            }
        }
        Ok(count)
    }

    fn z_count(&self, c: CellRef, right: bool) -> Result<usize> {
        self.require_csf()?;
        let fz = self.get(c).ok_or(Error::CellOutsideShape {
            row: c.row,
            col: c.col,
        })?;
        let row = self.row(c.row).expect("row in shape");
        let xs: Box<dyn Iterator<Item = usize>> = if right {
            Box::new(1..c.col)
        } else {
            Box::new(c.col + 1..=row.len())
        };
        Ok(xs
            .filter(|&col| {
                let x = CellRef::new(c.row, col);
                row[col - 1] < fz && fz < self.below_value(x)
            })
            .count())
    }

    /// Number of quinv triples whose `z` is `c`.
    pub fn zcount(&self, c: CellRef) -> Result<usize> {
        self.z_count(c, true)
    }

    /// Number of refinv triples whose `z` is `c`.
    pub fn zcb(&self, c: CellRef) -> Result<usize> {
        self.z_count(c, false)
    }

    /// `zcount` for every cell, shaped like the filling.
    pub fn zcount_table(&self) -> Result<Vec<Vec<usize>>> {
        self.table(Self::zcount)
    }

    pub fn zcb_table(&self) -> Result<Vec<Vec<usize>>> {
        self.table(Self::zcb)
    }

    fn table(&self, f: fn(&Self, CellRef) -> Result<usize>) -> Result<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                (0..row.len())
                    .map(|c| f(self, CellRef::new(r + 1, c + 1)))
                    .collect()
            })
            .collect()
    }

    /// Cells of row `i` holding `j + 1`, left to right.
    pub fn cells(&self, i: usize, j: usize) -> Vec<CellRef> {
        self.row(i).map_or_else(Vec::new, |row| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v == j + 1)
                .map(|(c, _)| CellRef::new(i, c + 1))
                .collect()
        })
    }

    /// Each row sorted ascending.
    pub fn row_sorted(&self) -> Filling {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable();
                r
            })
            .collect();
        Filling { n: self.n, rows }
    }

    /// Row sort, read as a GT pattern.
    pub fn rsort(&self) -> Result<GTPattern> {
        self.require_csf()?;
        GTPattern::from_ssyt(&self.row_sorted())
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect()
    }

    fn from_columns(n: usize, mut columns: Vec<Vec<usize>>) -> Result<Filling> {
        while columns.last().is_some_and(Vec::is_empty) {
            columns.pop();
        }
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| {
                columns
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c[r])
                    .collect()
            })
            .collect();
        Filling::new(n, rows)
    }

    /// Delete-and-splice, always splicing at the leftmost eligible column.
    pub fn dsplice(&self) -> Result<Filling> {
        self.dsplice_with(|eligible| eligible[0])
    }

    /// Delete-and-splice with the splice position picked by `choose` from the
    /// non-empty list of eligible 0-based column indices `j` (columns `j` and
    /// `j + 1` are spliced). The result lives over the alphabet `[1, n-1]`.
    pub fn dsplice_with(&self, mut choose: impl FnMut(&[usize]) -> usize) -> Result<Filling> {
        self.require_csf()?;
        if self.n == 0 {
            return Err(Error::InvalidArgument("empty alphabet".into()));
        }
        let n = self.n;
        let mut columns = self.columns();
        for col in &mut columns {
            if col.last() == Some(&n) {
                col.pop();
            }
        }
        loop {
            let eligible: Vec<usize> = columns
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[1].len() == w[0].len() + 1)
                .map(|(j, _)| j)
                .collect();
            if eligible.is_empty() {
                break;
            }
            let j = choose(&eligible);
            if !eligible.contains(&j) {
                return Err(Error::InvalidArgument(format!(
                    "splice position {j} is not eligible"
                )));
            }
            let (sigma, tau) = splice(&columns[j], &columns[j + 1])?;
            columns[j] = sigma;
            columns[j + 1] = tau;
        }
        Filling::from_columns(n - 1, columns)
    }
}

/// Swaps suffixes of a column tuple `sigma` of length `l - 1` and `tau` of
/// length `l`, cutting at the largest `k` with `sigma_{k-1} < tau_k`
/// (`sigma_0 = 0`). Returns tuples of lengths `l` and `l - 1`.
pub fn splice(sigma: &[usize], tau: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if tau.len() != sigma.len() + 1 {
        return Err(Error::InvalidColumnTuple(format!(
            "lengths {} and {} do not differ by one",
            sigma.len(),
            tau.len()
        )));
    }
    let strictly_increasing = |a: &[usize]| a.windows(2).all(|w| w[0] < w[1]);
    if !strictly_increasing(sigma) || !strictly_increasing(tau) {
        return Err(Error::InvalidColumnTuple(
            "tuples must be strictly increasing".into(),
        ));
    }
    let l = tau.len();
    let sig = |i: usize| if i == 0 { 0 } else { sigma[i - 1] };
    let k = (1..=l)
        .rev()
        .find(|&i| sig(i - 1) < tau[i - 1])
        .ok_or_else(|| Error::InvalidColumnTuple("no cut position".into()))?;
    let mut new_sigma = sigma[..k - 1].to_vec();
    new_sigma.extend_from_slice(&tau[k - 1..]);
    let mut new_tau = tau[..k - 1].to_vec();
    new_tau.extend_from_slice(&sigma[k - 1..]);
    Ok((new_sigma, new_tau))
}

/// All strictly increasing tuples of length `len` from `[1, n]`, lexicographic.
fn strict_tuples(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let start = current.last().map_or(1, |&v| v + 1);
        let room = len - current.len() - 1;
        for v in start..=n.saturating_sub(room) {
            current.push(v);
            rec(len, n, current, out);
            current.pop();
        }
    }
    rec(len, n, &mut current, &mut out);
    out
}

/// Lazy enumeration of fillings as a product of per-column choices, the
/// last column varying fastest.
#[derive(Debug, Clone)]
pub struct FillingIter {
    n: usize,
    choices: Vec<Vec<Vec<usize>>>,
    idx: Vec<usize>,
    done: bool,
}

impl FillingIter {
    fn new(lambda: &Partition, n: usize, options: impl Fn(usize) -> Vec<Vec<usize>>) -> Self {
        let choices: Vec<Vec<Vec<usize>>> = lambda
            .conjugate()
            .parts()
            .iter()
            .map(|&h| options(h))
            .collect();
        let done = choices.iter().any(Vec::is_empty);
        FillingIter {
            n,
            idx: vec![0; choices.len()],
            choices,
            done,
        }
    }

    /// Splits by the choice in the first column, preserving order.
    pub fn split(self) -> Vec<FillingIter> {
        if self.done || self.choices.is_empty() {
            return vec![self];
        }
        (0..self.choices[0].len())
            .map(|k| {
                let mut choices = self.choices.clone();
                choices[0] = vec![self.choices[0][k].clone()];
                FillingIter {
                    n: self.n,
                    idx: vec![0; choices.len()],
                    choices,
                    done: false,
                }
            })
            .collect()
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let columns = self
            .idx
            .iter()
            .zip(&self.choices)
            .map(|(&i, opts)| opts[i].clone())
            .collect();
        let item = Filling::from_columns(self.n, columns).expect("columns fit the shape");
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.choices[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(item)
    }
}

/// Lazy form of [`enumerate_csf`].
pub fn csf_iter(lambda: &Partition, n: usize) -> FillingIter {
    FillingIter::new(lambda, n, |h| strict_tuples(h, n))
}

/// Every column strict filling of `lambda` with entries in `[1, n]`.
pub fn enumerate_csf(lambda: &Partition, n: usize) -> Vec<Filling> {
    csf_iter(lambda, n).collect()
}

/// Every filling of `lambda` with entries in `[1, n]`.
pub fn enumerate_fillings(lambda: &Partition, n: usize) -> Vec<Filling> {
    FillingIter::new(lambda, n, |h| {
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..h {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (1..=n).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out
    })
    .collect()
}
