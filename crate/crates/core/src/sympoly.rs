//! Sparse polynomials in `x_1..x_n` whose coefficients are [`QPoly`]s.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// Exponent vector of a monomial in `x_1..x_n`.
pub type Exponent = Vec<usize>;

/// Terms are keyed by exponent vector in lexicographic order; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, QPoly>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: Exponent,
    q: QPoly,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], QPoly::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &QPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `x^exponent`; zero when absent.
    pub fn coefficient(&self, exponent: &[usize]) -> QPoly {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Adds `coeff * x^exponent`.
    pub fn add_term(&mut self, exponent: Exponent, coeff: &QPoly) -> Result<()> {
        if exponent.len() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: exponent.len(),
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// Adds `q^degree * x^exponent`.
    pub fn add_monomial(&mut self, exponent: Exponent, degree: usize) -> Result<()> {
        self.add_term(exponent, &QPoly::monomial(degree))
    }

    fn check_same(&self, other: &SymPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &SymPoly) -> Result<()> {
        self.check_same(other)?;
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c)?;
        }
        Ok(())
    }

    pub fn scale(&self, factor: &QPoly) -> SymPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c * factor))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SymPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_same(other)?;
        let mut out = SymPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb))?;
            }
        }
        Ok(out)
    }

    /// Sets `x_n = 1`, giving a polynomial in `n - 1` variables.
    pub fn specialize_last_var_to_one(&self) -> Result<SymPoly> {
        if self.nvars == 0 {
            return Err(Error::InvalidArgument(
                "no variable to specialize".to_string(),
            ));
        }
        let mut out = SymPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            out.add_term(e[..self.nvars - 1].to_vec(), c)?;
        }
        Ok(out)
    }

    /// Sets `q = 0` in every coefficient.
    pub fn eval_q_zero(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &QPoly::from_coeffs([c.eval_zero()]))
                .expect("same variable count");
        }
        out
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("sympoly serializes")
    }

    /// Aligned one-term-per-line text rendering.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let keys: Vec<String> = self
            .terms
            .keys()
            .map(|e| {
                let inner: Vec<String> = e.iter().map(ToString::to_string).collect();
                format!("x^({})", inner.join(","))
            })
            .collect();
        let width = keys.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (key, c) in keys.iter().zip(self.terms.values()) {
            out.push_str(&format!("{key:<width$}  {c}\n"));
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermRepr {
                x: e.clone(),
                q: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl SymPoly {
    /// Parses the term-list JSON form; `nvars` is taken from the terms, or
    /// from `default_nvars` when the list is empty.
    pub fn from_json(value: &serde_json::Value, default_nvars: usize) -> Result<SymPoly> {
        let terms: Vec<TermRepr> = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let nvars = terms.first().map_or(default_nvars, |t| t.x.len());
        let mut out = SymPoly::zero(nvars);
        for t in terms {
            out.add_term(t.x, &t.q)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w2() -> SymPoly {
        let mut p = SymPoly::zero(2);
        p.add_monomial(vec![2, 0], 0).unwrap();
        p.add_term(vec![1, 1], &QPoly::from_coeffs([1, 1])).unwrap();
        p.add_monomial(vec![0, 2], 0).unwrap();
        p
    }

    #[test]
    fn add_zero_is_identity() {
        let p = w2();
        assert_eq!(p.add(&SymPoly::zero(2)).unwrap(), p);
    }

    #[test]
    fn mixed_variable_counts_are_rejected() {
        assert!(w2().add(&SymPoly::zero(3)).is_err());
        assert!(SymPoly::zero(2).add_monomial(vec![1], 0).is_err());
    }

    #[test]
    fn q_zero_extracts_constant_terms() {
        let mut p = SymPoly::zero(2);
        p.add_term(vec![1, 1], &QPoly::from_coeffs([1, 1])).unwrap();
        let mut expected = SymPoly::zero(2);
        expected.add_monomial(vec![1, 1], 0).unwrap();
        assert_eq!(p.eval_q_zero(), expected);
    }

    #[test]
    fn symmetry_check() {
        assert!(w2().is_symmetric());
        let mut p = SymPoly::zero(2);
        p.add_monomial(vec![1, 0], 0).unwrap();
        assert!(!p.is_symmetric());
    }

    #[test]
    fn specialize_and_cancel() {
        let s = w2().specialize_last_var_to_one().unwrap();
        assert_eq!(s.coefficient(&[2]), QPoly::one());
        assert_eq!(s.coefficient(&[1]), QPoly::from_coeffs([1, 1]));
        assert_eq!(s.coefficient(&[0]), QPoly::one());
        let neg = w2().scale(&QPoly::from_coeffs([-1]));
        assert!(w2().add(&neg).unwrap().is_zero());
    }

    #[test]
    fn serialization_is_sorted() {
        let json = serde_json::to_string(&w2()).unwrap();
        assert_eq!(
            json,
            r#"[{"x":[0,2],"q":[1]},{"x":[1,1],"q":[1,1]},{"x":[2,0],"q":[1]}]"#
        );
        let back = SymPoly::from_json(&serde_json::from_str(&json).unwrap(), 2).unwrap();
        assert_eq!(back, w2());
    }
}
