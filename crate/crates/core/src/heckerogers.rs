//! Hecke-Rogers double sums for chi0, chi1 and the seventh order functions.
//!
//! Each identity is a table of [`DoubleSumSpec`]s evaluated by one kernel,
//! [`double_sum_terms`]. A summand is
//!
//! ```text
//! sgn(m) (-1)^{m + j + parity} q^{exponent(j, m)} * tail(j, m)
//! ```
//!
//! over `j >= j_start` and `-j + lower_offset <= 3m <= j + upper_offset`,
//! with `sgn(0) = +1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{Coeff, TruncSeries};

/// `(jj j^2 + jl j + mm m^2 + ml m + c) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentForm {
    pub jj: i64,
    pub jl: i64,
    pub mm: i64,
    pub ml: i64,
    pub c: i64,
}

impl ExponentForm {
    pub fn eval(&self, j: i64, m: i64) -> i64 {
        let twice = self.jj * j * j + self.jl * j + self.mm * m * m + self.ml * m + self.c;
        debug_assert!(twice % 2 == 0, "odd numerator in exponent form {self:?} at ({j}, {m})");
        twice / 2
    }
}

/// Extra factor multiplying each summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailFactor {
    /// `1 + q^j`
    OnePlusQj,
    /// `1 - q^{2j+1}`
    OneMinusQ2j1,
    /// `(1 + q^j)(1 - q^{6m+1})`
    OnePlusQjOneMinusQ6m1,
}

impl TailFactor {
    /// Monomials `(exponent offset, coefficient)` of the tail at `(j, m)`.
    fn monomials(self, j: i64, m: i64) -> Vec<(i64, i64)> {
        match self {
            Self::OnePlusQj => vec![(0, 1), (j, 1)],
            Self::OneMinusQ2j1 => vec![(0, 1), (2 * j + 1, -1)],
            Self::OnePlusQjOneMinusQ6m1 => {
                vec![(0, 1), (j, 1), (6 * m + 1, -1), (j + 6 * m + 1, -1)]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSumSpec {
    pub label: &'static str,
    pub exponent: ExponentForm,
    pub parity: i64,
    pub j_start: i64,
    pub lower_offset: i64,
    pub upper_offset: i64,
    pub tail: TailFactor,
}

fn sgn(m: i64) -> i64 {
    if m >= 0 {
        1
    } else {
        -1
    }
}

impl DoubleSumSpec {
    /// Admissible `m` for a given `j`: `ceil(lower/3) ..= floor(upper/3)`.
    pub fn m_range(&self, j: i64) -> std::ops::RangeInclusive<i64> {
        let lower = -j + self.lower_offset;
        let upper = j + self.upper_offset;
        lower.div_euclid(3) + i64::from(lower.rem_euclid(3) != 0)..=upper.div_euclid(3)
    }

    fn sign(&self, j: i64, m: i64) -> i64 {
        let parity = (m + j + self.parity).rem_euclid(2);
        sgn(m) * if parity == 0 { 1 } else { -1 }
    }

    /// All monomials `(exponent, coefficient)` contributed at `(j, m)`.
    fn monomials(&self, j: i64, m: i64) -> Result<Vec<(i64, i64)>> {
        let base = self.exponent.eval(j, m);
        let sign = self.sign(j, m);
        self.tail
            .monomials(j, m)
            .into_iter()
            .map(|(off, c)| {
                let e = base + off;
                if e < 0 {
                    Err(Error::NegativeExponent {
                        context: format!("{} at j={j}, m={m}", self.label),
                        exponent: e,
                    })
                } else {
                    Ok((e, sign * c))
                }
            })
            .collect()
    }

    fn min_exponent(&self, j: i64) -> Result<Option<i64>> {
        let mut min = None;
        for m in self.m_range(j) {
            for (e, _) in self.monomials(j, m)? {
                min = Some(min.map_or(e, |x: i64| x.min(e)));
            }
        }
        Ok(min)
    }
}

/// Outer cutoff `ceil(sqrt(3N)) + 4`.
pub fn j_bound(order: usize) -> i64 {
    let target = 3 * order as u64;
    let mut r = (target as f64).sqrt() as u64;
    while r * r < target {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= target {
        r -= 1;
    }
    r as i64 + 4
}

/// Every monomial with exponent `<= order`, unsummed, in enumeration order.
pub fn double_sum_terms(spec: &DoubleSumSpec, order: usize) -> Result<Vec<(usize, Coeff)>> {
    let n = order as i64;
    let j_max = j_bound(order);
    let mut terms = Vec::new();
    for j in spec.j_start..j_max {
        for m in spec.m_range(j) {
            for (e, c) in spec.monomials(j, m)? {
                if e <= n {
                    terms.push((e as usize, c as Coeff));
                }
            }
        }
    }
    for j in [j_max, j_max + 1] {
        if let Some(min) = spec.min_exponent(j)? {
            if min <= n {
                return Err(Error::Truncation(format!(
                    "{}: j={j} still reaches q^{min} at order {order}",
                    spec.label
                )));
            }
        }
    }
    Ok(terms)
}

pub fn eval_double_sum(spec: &DoubleSumSpec, order: usize) -> Result<TruncSeries> {
    TruncSeries::from_monomials(&double_sum_terms(spec, order)?, order)
}

/// The five double-sum identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeckeIdentity {
    /// `(q)_inf (chi0 - 2)`
    Chi01a,
    /// `(q)_inf chi1`
    Chi01b,
    F0id,
    F1id,
    F2id,
}

impl HeckeIdentity {
    pub const ALL: [HeckeIdentity; 5] =
        [Self::Chi01a, Self::Chi01b, Self::F0id, Self::F1id, Self::F2id];

    pub fn id(self) -> &'static str {
        match self {
            Self::Chi01a => "chi01a",
            Self::Chi01b => "chi01b",
            Self::F0id => "F0id",
            Self::F1id => "F1id",
            Self::F2id => "F2id",
        }
    }

    pub fn specs(self) -> Vec<DoubleSumSpec> {
        use TailFactor::*;
        let mm = match self {
            Self::Chi01a | Self::Chi01b => -15,
            _ => -21,
        };
        let form = |jl, ml, c| ExponentForm { jj: 3, jl, mm, ml, c };
        let spec = |label, exponent, j_start, lower_offset, upper_offset, tail| DoubleSumSpec {
            label,
            exponent,
            parity: 1,
            j_start,
            lower_offset,
            upper_offset,
            tail,
        };
        match self {
            Self::Chi01a => vec![
                spec("chi01a/1", form(1, -1, 0), 0, 0, 0, OneMinusQ2j1),
                spec("chi01a/2", form(1, -11, -2), 1, -1, -1, OneMinusQ2j1),
            ],
            Self::Chi01b => vec![
                spec("chi01b/1", form(-1, -7, -2), 1, 0, -1, OnePlusQj),
                spec("chi01b/2", form(-1, -13, -4), 1, -1, -2, OnePlusQj),
            ],
            Self::F0id => vec![spec("F0id", form(-1, -13, -2), 1, 0, -1, OnePlusQjOneMinusQ6m1)],
            Self::F1id => vec![
                spec("F1id/1", form(-1, -5, 0), 1, 0, -1, OnePlusQj),
                spec("F1id/2", form(-1, -19, -4), 2, -1, -2, OnePlusQj),
            ],
            Self::F2id => vec![
                spec("F2id/1", form(-1, -11, -2), 1, 0, -1, OnePlusQj),
                spec("F2id/2", form(-1, -17, -4), 2, -1, -2, OnePlusQj),
            ],
        }
    }
}

impl fmt::Display for HeckeIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for HeckeIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Sum of an identity's double sums at the given order.
pub fn eval_identity(id: HeckeIdentity, order: usize) -> Result<TruncSeries> {
    eval_specs(&id.specs(), order)
}

pub fn eval_specs(specs: &[DoubleSumSpec], order: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    for spec in specs {
        total.add_assign(&eval_double_sum(spec, order)?)?;
    }
    Ok(total)
}

pub fn chi0_hecke(order: usize) -> Result<TruncSeries> {
    eval_identity(HeckeIdentity::Chi01a, order)
}

pub fn chi1_hecke(order: usize) -> Result<TruncSeries> {
    eval_identity(HeckeIdentity::Chi01b, order)
}

pub fn f0_hecke(order: usize) -> Result<TruncSeries> {
    eval_identity(HeckeIdentity::F0id, order)
}

pub fn f1_hecke(order: usize) -> Result<TruncSeries> {
    eval_identity(HeckeIdentity::F1id, order)
}

pub fn f2_hecke(order: usize) -> Result<TruncSeries> {
    eval_identity(HeckeIdentity::F2id, order)
}
