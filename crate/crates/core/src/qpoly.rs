//! Univariate polynomials in `q` with unbounded integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `coeffs[d]` is the coefficient of `q^d`; no trailing zeros are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        Self { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Coefficient sequence reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Adds `q^degree` in place.
    pub fn add_monomial(&mut self, degree: usize) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += 1;
        self.normalize();
    }

    /// Multiplies by `q^shift`.
    pub fn shifted(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut out = QPoly { coeffs };
        out.normalize();
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let numbers = self
            .coeffs
            .iter()
            .map(|c| c.to_string().parse::<serde_json::Number>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        numbers.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        let coeffs = numbers
            .iter()
            .map(|n| n.to_string().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// Gaussian binomial `[k + l choose k]_q`: the generating function of
/// partitions fitting in a `k x l` box.
pub fn qbinom(k: usize, l: usize) -> QPoly {
    // table[b] holds the box polynomial for the current row count and b columns.
    let mut table: Vec<QPoly> = vec![QPoly::one(); l + 1];
    for rows in 1..=k {
        let mut next = Vec::with_capacity(l + 1);
        next.push(QPoly::one());
        for cols in 1..=l {
            // Either the last row is empty, or every row is nonempty.
            let v = &table[cols] + &next[cols - 1].shifted(rows);
            next.push(v);
        }
        table = next;
    }
    table.swap_remove(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::BoxedPartition;

    fn box_oracle(k: usize, l: usize) -> QPoly {
        let mut out = QPoly::zero();
        for g in BoxedPartition::all_in_box(k, l) {
            out.add_monomial(g.size());
        }
        out
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(0, 5), QPoly::one());
        assert_eq!(qbinom(3, 0), QPoly::one());
        assert_eq!(qbinom(2, 2), QPoly::from_coeffs([1, 1, 2, 1, 1]));
    }

    #[test]
    fn qbinom_matches_box_enumeration() {
        for k in 0..=6 {
            for l in 0..=6 {
                assert_eq!(qbinom(k, l), box_oracle(k, l), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn qbinom_symmetries() {
        for k in 0..=8 {
            for l in 0..=8 {
                let g = qbinom(k, l);
                assert_eq!(g, qbinom(l, k));
                assert!(g.is_palindromic());
                assert_eq!(g.degree(), Some(k * l));
                assert_eq!(g.eval_one(), binomial((k + l) as u64, k as u64));
            }
        }
    }

    #[test]
    fn display_and_json() {
        let p = QPoly::from_coeffs([1, 1, 0, -2]);
        assert_eq!(p.to_string(), "1 + q - 2q^3");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,1,0,-2]");
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = QPoly::from_coeffs([big.clone()]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[123456789012345678901234567890]");
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back.coeff(0), big);
    }

    #[test]
    fn normalization() {
        let p = QPoly::from_coeffs([1, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert!(QPoly::from_coeffs([0, 0]).is_zero());
        let sum = &QPoly::from_coeffs([0, 1]) + &QPoly::from_coeffs([0, -1]);
        assert!(sum.is_zero());
    }
}
