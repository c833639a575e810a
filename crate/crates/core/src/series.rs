//! Dense truncated power series with exact `i128` coefficients.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Every arithmetic step is checked; a coefficient that would leave the
//! `i128` range is reported as [`Error::Overflow`] instead of wrapping.
//! Binary operations require both operands to have the same order. Use
//! [`TruncSeries::resized`] to change order explicitly.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Coeff = i128;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Coeff>,
}

/// First exponent at which two series disagree, with both coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![0; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `coeff * q^exponent`, or zero if the exponent is past `order`.
    pub fn monomial(exponent: usize, coeff: Coeff, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// Builds a series from an explicit coefficient vector; the order is `len - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    /// Sums `coeff * q^exponent` terms, dropping exponents past `order`.
    /// Repeated exponents accumulate.
    pub fn from_monomials(terms: &[(usize, Coeff)], order: usize) -> Result<Self> {
        let mut s = Self::zero(order);
        for &(e, c) in terms {
            s.add_monomial(e, c)?;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    /// Coefficient of `q^k`, or `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<Coeff> {
        self.coeffs.get(k).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Adds `coeff * q^exponent` in place; exponents past the order are ignored.
    pub fn add_monomial(&mut self, exponent: usize, coeff: Coeff) -> Result<()> {
        if let Some(slot) = self.coeffs.get_mut(exponent) {
            *slot = slot.checked_add(coeff).ok_or(Error::overflow("add_monomial"))?;
        }
        Ok(())
    }

    /// Truncates or zero-extends to `order`.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, 0);
        Self { coeffs }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::overflow("add")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::overflow("sub")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_add(*b).ok_or(Error::overflow("add"))?;
        }
        Ok(())
    }

    pub fn scale(&self, c: Coeff) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::overflow("scale")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    /// Multiplies by `q^k`; coefficients pushed past the order are discarded.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![0; n];
        if k < n {
            coeffs[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        Self { coeffs }
    }

    /// Plain truncated convolution.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![0 as Coeff; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in out[i..].iter_mut().zip(&other.coeffs) {
                if b == 0 {
                    continue;
                }
                let prod = a.checked_mul(b).ok_or(Error::overflow("mul"))?;
                *slot = slot.checked_add(prod).ok_or(Error::overflow("mul"))?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse by the recursive coefficient solve.
    /// The constant term must be a unit of the integers.
    pub fn invert(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 != 1 && a0 != -1 {
            return Err(Error::NonUnitConstant(a0));
        }
        let n = self.coeffs.len();
        let support: Vec<(usize, Coeff)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let mut inv = vec![0 as Coeff; n];
        inv[0] = a0;
        for k in 1..n {
            let mut acc: Coeff = 0;
            for &(i, a) in support.iter().take_while(|(i, _)| *i <= k) {
                let prod = a.checked_mul(inv[k - i]).ok_or(Error::overflow("invert"))?;
                acc = acc.checked_add(prod).ok_or(Error::overflow("invert"))?;
            }
            // a0 is its own inverse
            inv[k] = acc.checked_mul(-a0).ok_or(Error::overflow("invert"))?;
        }
        Ok(Self { coeffs: inv })
    }

    /// In place `self *= (1 - q^k)`, `k >= 1`.
    pub fn mul_binomial(&mut self, k: usize) -> Result<()> {
        assert!(k >= 1, "binomial factor 1 - q^0 is not allowed");
        let n = self.coeffs.len();
        for i in (k..n).rev() {
            let lower = self.coeffs[i - k];
            if lower != 0 {
                self.coeffs[i] = self.coeffs[i]
                    .checked_sub(lower)
                    .ok_or(Error::overflow("mul_binomial"))?;
            }
        }
        Ok(())
    }

    /// In place `self /= (1 - q^k)`, `k >= 1`.
    pub fn div_binomial(&mut self, k: usize) -> Result<()> {
        assert!(k >= 1, "binomial factor 1 - q^0 is not invertible here");
        let n = self.coeffs.len();
        let start = match self.valuation() {
            Some(v) => v + k,
            None => return Ok(()),
        };
        for i in start..n {
            let lower = self.coeffs[i - k];
            if lower != 0 {
                self.coeffs[i] = self.coeffs[i]
                    .checked_add(lower)
                    .ok_or(Error::overflow("div_binomial"))?;
            }
        }
        Ok(())
    }

    /// True iff the coefficients agree for every exponent `<= m`.
    ///
    /// Panics if `m` exceeds either order.
    pub fn eq_upto(&self, other: &Self, m: usize) -> bool {
        assert!(m <= self.order().min(other.order()), "comparison order exceeds a truncation order");
        self.coeffs[..=m] == other.coeffs[..=m]
    }

    /// Least exponent at which the series differ, over the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }

    pub fn mismatch(&self, other: &Self) -> Option<Mismatch> {
        self.first_mismatch(other).map(|k| Mismatch {
            exponent: k,
            lhs: self.coeffs[k],
            rhs: other.coeffs[k],
        })
    }

    /// Tab-separated dump: one `n\tc_n` line per exponent.
    pub fn to_dump(&self) -> String {
        let mut out = String::with_capacity(self.coeffs.len() * 8);
        for (k, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{k}\t{c}");
        }
        out
    }

    /// Parses the dump format back into a series.
    pub fn from_dump(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Precondition(format!("malformed dump line {}: `{line}`", lineno + 1));
            let (k, c) = line.split_once('\t').ok_or_else(bad)?;
            let k: usize = k.trim().parse().map_err(|_| bad())?;
            let c: Coeff = c.trim().parse().map_err(|_| bad())?;
            if k != coeffs.len() {
                return Err(bad());
            }
            coeffs.push(c);
        }
        if coeffs.is_empty() {
            return Err(Error::Precondition("empty dump".into()));
        }
        Ok(Self { coeffs })
    }
}
