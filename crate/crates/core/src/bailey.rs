//! Bailey pairs relative to `(q, q)`, the conjugate pair
//! `delta_n = q^n (q)_n (q)_inf / (1 - q)`, and the Bailey transform.
//!
//! All pairs use `u_n = 1/(q)_n`, `v_n = 1/(q^2;q)_n`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::qkernel::{self, divide_by_pochhammer, eta, normalized, pochhammer, Normalized, PochSpec};
use crate::report::VerificationReport;
use crate::series::{Coeff, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlaterPair {
    A2,
    A4,
    A6,
    A7Star,
    A8,
}

impl SlaterPair {
    pub const ALL: [SlaterPair; 5] = [Self::A2, Self::A4, Self::A6, Self::A7Star, Self::A8];

    pub fn name(self) -> &'static str {
        match self {
            Self::A2 => "A2",
            Self::A4 => "A4",
            Self::A6 => "A6",
            Self::A7Star => "A7star",
            Self::A8 => "A8",
        }
    }
}

impl fmt::Display for SlaterPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SlaterPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// `sign * q^{a m^2 + b m + c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaTerm {
    pub sign: Coeff,
    pub quad: [i64; 3],
}

const fn term(sign: Coeff, a: i64, b: i64, c: i64) -> AlphaTerm {
    AlphaTerm { sign, quad: [a, b, c] }
}

/// `beta_n = (1 - q)^{[one_minus_q]} q^{a n^2 + b n} / (q^{denom_start}; q)_{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaForm {
    pub quad: [i64; 2],
    pub one_minus_q: bool,
    pub denom_start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaileyPair {
    pub name: SlaterPair,
    /// Alpha monomials for `n = 3m`, `n = 3m + 1`, `n = 3m - 1`, in that order.
    pub alpha_classes: [Vec<AlphaTerm>; 3],
    pub beta: BetaForm,
    /// Indices whose alpha is negated; only used to build negative controls.
    pub negated: Vec<usize>,
}

pub fn slater_pair(name: SlaterPair) -> BaileyPair {
    let (alpha_classes, beta) = match name {
        SlaterPair::A4 => (
            [
                vec![term(1, 6, 4, 0)],
                vec![term(-1, 6, 8, 2), term(-1, 6, 4, 0)],
                vec![term(1, 6, -4, 0)],
            ],
            BetaForm { quad: [0, 1], one_minus_q: false, denom_start: 2 },
        ),
        SlaterPair::A2 => (
            [
                vec![term(1, 6, 1, 0)],
                vec![term(-1, 6, 5, 1), term(-1, 6, 7, 2)],
                vec![term(1, 6, -1, 0)],
            ],
            BetaForm { quad: [0, 0], one_minus_q: false, denom_start: 2 },
        ),
        SlaterPair::A7Star => (
            [
                vec![term(1, 3, -2, 0), term(-1, 3, 4, 1)],
                vec![],
                vec![term(1, 3, 2, 0), term(-1, 3, -4, 1)],
            ],
            BetaForm { quad: [1, -1], one_minus_q: true, denom_start: 1 },
        ),
        SlaterPair::A8 => (
            [
                vec![term(1, 3, 2, 0)],
                vec![term(-1, 3, 4, 1), term(-1, 3, 2, 0)],
                vec![term(1, 3, -2, 0)],
            ],
            BetaForm { quad: [1, 1], one_minus_q: false, denom_start: 2 },
        ),
        SlaterPair::A6 => (
            [
                vec![term(1, 3, -1, 0)],
                vec![term(-1, 3, 1, 0), term(-1, 3, 5, 2)],
                vec![term(1, 3, 1, 0)],
            ],
            BetaForm { quad: [1, 0], one_minus_q: false, denom_start: 2 },
        ),
    };
    BaileyPair { name, alpha_classes, beta, negated: Vec::new() }
}

impl BaileyPair {
    /// Negates `alpha_n`; the result is no longer a Bailey pair.
    pub fn with_negated_alpha(mut self, n: usize) -> Self {
        self.negated.push(n);
        self
    }

    /// `alpha_n` as `(exponent, coefficient)` monomials.
    pub fn alpha(&self, n: usize) -> Vec<(usize, Coeff)> {
        let n = n as i64;
        let (class, m) = match n.rem_euclid(3) {
            0 => (0, n / 3),
            1 => (1, (n - 1) / 3),
            _ => (2, (n + 1) / 3),
        };
        let flip = if self.negated.contains(&(n as usize)) { -1 } else { 1 };
        self.alpha_classes[class]
            .iter()
            .map(|t| {
                let [a, b, c] = t.quad;
                let e = a * m * m + b * m + c;
                assert!(e >= 0, "{}: negative alpha exponent at n={n}", self.name);
                (e as usize, flip * t.sign)
            })
            .collect()
    }

    pub fn alpha_series(&self, n: usize, order: usize) -> Result<TruncSeries> {
        TruncSeries::from_monomials(&self.alpha(n), order)
    }

    pub fn beta_shift(&self, n: usize) -> usize {
        let n = n as i64;
        let [a, b] = self.beta.quad;
        (a * n * n + b * n) as usize
    }

    /// `beta_n / q^{beta_shift(n)}` at the given order.
    pub fn beta_body(&self, n: usize, order: usize) -> Result<TruncSeries> {
        let mut s = TruncSeries::one(order);
        if self.beta.one_minus_q {
            s.mul_binomial(1)?;
        }
        divide_by_pochhammer(&mut s, PochSpec::finite(self.beta.denom_start, 2 * n))?;
        Ok(s)
    }

    pub fn beta(&self, n: usize, order: usize) -> Result<TruncSeries> {
        let shift = self.beta_shift(n);
        if shift > order {
            return Ok(TruncSeries::zero(order));
        }
        Ok(self.beta_body(n, order - shift)?.resized(order).shift(shift))
    }
}

/// `sum_{r <= n} alpha_r / ((q)_{n-r} (q^2;q)_{n+r})`.
pub fn beta_from_alpha(pair: &BaileyPair, n: usize, order: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    for r in 0..=n {
        let mut t = pair.alpha_series(r, order)?;
        if t.is_zero() {
            continue;
        }
        divide_by_pochhammer(&mut t, PochSpec::finite(1, n - r))?;
        divide_by_pochhammer(&mut t, PochSpec::finite(2, n + r))?;
        total.add_assign(&t)?;
    }
    Ok(total)
}

/// `beta_n (q)_n (q^2;q)_{2n}`, a polynomial for every pair in the table.
pub fn beta_cleared(pair: &BaileyPair, n: usize, order: usize) -> Result<TruncSeries> {
    let shift = pair.beta_shift(n);
    let mut s = TruncSeries::monomial(shift, 1, order);
    if shift > order {
        return Ok(s);
    }
    for k in 1..=n {
        s.mul_binomial(k)?;
    }
    if pair.beta.one_minus_q {
        s.mul_binomial(1)?;
    }
    match pair.beta.denom_start {
        2 => {}
        // (q^2;q)_{2n} / (q;q)_{2n}
        1 => {
            s.mul_binomial(2 * n + 1)?;
            s.div_binomial(1)?;
        }
        d => return Err(Error::Precondition(format!("unsupported beta denominator start {d}"))),
    }
    Ok(s)
}

/// `beta_from_alpha(n) * (q)_n (q^2;q)_{2n}`, built from polynomial factors only:
/// `sum_r alpha_r (q^{n-r+1};q)_r (q^{n+r+2};q)_{n-r}`.
pub fn beta_from_alpha_cleared(pair: &BaileyPair, n: usize, order: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    for r in 0..=n {
        let mut t = pair.alpha_series(r, order)?;
        if t.is_zero() {
            continue;
        }
        for k in (n - r + 1)..=n {
            t.mul_binomial(k)?;
        }
        for k in (n + r + 2)..=(2 * n + 1) {
            t.mul_binomial(k)?;
        }
        total.add_assign(&t)?;
    }
    Ok(total)
}

/// Checks `beta_n = beta_from_alpha(n)` for `n <= n_max`.
///
/// Both sides are multiplied by the unit `(q)_n (q^2;q)_{2n}` first, which
/// keeps every intermediate coefficient small; mismatch exponents refer to
/// the cleared series.
pub fn verify_bailey_pair(pair: &BaileyPair, n_max: usize, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("bailey:{}", pair.name), order, started);
    for n in 0..=n_max {
        let lhs = beta_cleared(pair, n, order)?;
        let rhs = beta_from_alpha_cleared(pair, n, order)?;
        if let Some(m) = lhs.mismatch(&rhs) {
            report.record(Some(m));
            report.note(format!("first mismatch at n={n}, exponent {} of beta_n (q)_n (q^2;q)_2n", m.exponent));
            break;
        }
    }
    report.note(format!("checked n <= {n_max}"));
    Ok(report.finish(started))
}

/// `delta_n = q^n (q)_n (q)_inf / (1 - q)`.
pub fn delta(n: usize, order: usize) -> Result<TruncSeries> {
    if n > order {
        return Ok(TruncSeries::zero(order));
    }
    Ok(delta_body(n, order - n)?.resized(order).shift(n))
}

/// `delta_n / q^n`.
fn delta_body(n: usize, order: usize) -> Result<TruncSeries> {
    let mut s = pochhammer(PochSpec::finite(1, n), order)?.mul(&eta(order)?)?;
    s.div_binomial(1)?;
    Ok(s)
}

/// `gamma_n = sum_{j > n} (-1)^{j+n+1} q^{j(3j-1)/2 - 3n(n+1)/2 - 1} (1 + q^j)`.
pub fn gamma_closed(n: usize, order: usize) -> Result<TruncSeries> {
    let mut s = TruncSeries::zero(order);
    let base = 3 * n * (n + 1) / 2 + 1;
    for j in n + 1.. {
        let e = j * (3 * j - 1) / 2 - base;
        if e > order {
            break;
        }
        let sign = if (j + n + 1) % 2 == 0 { 1 } else { -1 };
        s.add_monomial(e, sign)?;
        s.add_monomial(e + j, sign)?;
    }
    Ok(s)
}

/// `gamma_n` straight from the conjugate-pair definition
/// `sum_{r >= n} delta_r / ((q)_{r-n} (q^2;q)_{r+n})`.
///
/// `(q)_inf` is factored out of every `delta_r`; the remaining summands are
/// advanced by their ratio `q (1 - q^{r+1}) / ((1 - q^{r+1-n})(1 - q^{r+n+2}))`.
/// Terms with `r > order` vanish since `delta_r` has valuation `r`.
pub fn gamma_defsum(n: usize, order: usize) -> Result<TruncSeries> {
    // r = n: q^n (q)_n / ((1 - q) (q^2;q)_{2n})
    let mut term = pochhammer(PochSpec::finite(1, n), order)?.shift(n);
    term.div_binomial(1)?;
    divide_by_pochhammer(&mut term, PochSpec::finite(2, 2 * n))?;
    let mut sum = TruncSeries::zero(order);
    for r in n..=order {
        sum.add_assign(&term)?;
        term = term.shift(1);
        term.mul_binomial(r + 1)?;
        term.div_binomial(r + 1 - n)?;
        term.div_binomial(r + n + 2)?;
    }
    sum.mul(&eta(order)?)
}

/// `gamma_n = q^n sum_{j >= 0} (q^{n+1};q)_j q^{(n+1) j}`.
pub fn gamma_heine(n: usize, order: usize) -> Result<TruncSeries> {
    let mut sum = TruncSeries::zero(order);
    let mut poch = TruncSeries::one(order);
    for j in 0.. {
        let e = (n + 1) * j + n;
        if e > order {
            break;
        }
        sum.add_assign(&poch.shift(e))?;
        poch.mul_binomial(n + 1 + j)?;
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaEvaluator {
    Closed,
    DefinitionSum,
    Heine,
}

/// The conjugate Bailey pair relative to `(q, q)` with its three gamma routes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConjugateBaileyPair;

impl ConjugateBaileyPair {
    pub fn delta(&self, n: usize, order: usize) -> Result<TruncSeries> {
        delta(n, order)
    }

    pub fn gamma(&self, via: GammaEvaluator, n: usize, order: usize) -> Result<TruncSeries> {
        match via {
            GammaEvaluator::Closed => gamma_closed(n, order),
            GammaEvaluator::DefinitionSum => gamma_defsum(n, order),
            GammaEvaluator::Heine => gamma_heine(n, order),
        }
    }
}

/// Checks that the three gamma evaluators agree for every `n <= n_max`.
pub fn verify_conjugate_pair(n_max: usize, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("conjpair", order, started);
    for n in 0..=n_max {
        let closed = gamma_closed(n, order)?;
        for (label, other) in [("definition sum", gamma_defsum(n, order)?), ("heine form", gamma_heine(n, order)?)] {
            if let Some(m) = closed.mismatch(&other) {
                report.record(Some(m));
                report.note(format!("closed form vs {label} differ at n={n}"));
            }
        }
        if !report.passed() {
            break;
        }
    }
    report.note(format!("closed = definition sum = heine form for n <= {n_max}"));
    Ok(report.finish(started))
}

/// `sum_n alpha_n gamma_n`, with `n` up to `order` (gamma_n has valuation n).
pub fn alpha_gamma_sum(pair: &BaileyPair, order: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    for n in 0..=order {
        let alpha = pair.alpha(n);
        let Some(min_alpha) = alpha.iter().map(|&(e, _)| e).min() else {
            continue;
        };
        if min_alpha + n > order {
            continue;
        }
        let gamma = gamma_closed(n, order)?;
        for (e, c) in alpha {
            if e <= order {
                total.add_assign(&gamma.shift(e).scale(c)?)?;
            }
        }
    }
    Ok(total)
}

/// `sum_n beta_n delta_n`, with `n` up to `order` (delta_n has valuation n).
pub fn beta_delta_sum(pair: &BaileyPair, order: usize) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    for n in 0..=order {
        let shift = pair.beta_shift(n) + n;
        if shift > order {
            continue;
        }
        let rest = order - shift;
        let body = pair.beta_body(n, rest)?.mul(&delta_body(n, rest)?)?;
        total.add_assign(&body.resized(order).shift(shift))?;
    }
    Ok(total)
}

/// Normalized mock theta series each pair's transform lands on.
pub fn chain_target(pair: SlaterPair, order: usize) -> Result<TruncSeries> {
    match pair {
        SlaterPair::A4 => qkernel::eta_chi0_minus_one(order),
        SlaterPair::A2 => normalized(Normalized::C1, order),
        SlaterPair::A7Star => normalized(Normalized::F0, order),
        SlaterPair::A8 => normalized(Normalized::F1, order),
        SlaterPair::A6 => normalized(Normalized::F2, order),
    }
}

/// Checks `sum alpha_n gamma_n = sum beta_n delta_n`, then matches the common
/// value against the normalized target, trying both `target = S` and
/// `target = q S` and recording which one balances.
pub fn bailey_transform_check(pair: &BaileyPair, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new(format!("transform:{}", pair.name), order, started);
    let ag = alpha_gamma_sum(pair, order)?;
    let bd = beta_delta_sum(pair, order)?;
    if let Some(m) = ag.mismatch(&bd) {
        report.record(Some(m));
        report.note("sum alpha_n gamma_n != sum beta_n delta_n");
        return Ok(report.finish(started));
    }
    report.note("sum alpha_n gamma_n = sum beta_n delta_n");

    let target = chain_target(pair.name, order)?;
    let direct = bd.mismatch(&target);
    let shifted = bd.shift(1).mismatch(&target);
    let target_name = match pair.name {
        SlaterPair::A4 => "(q)_inf (chi0 - 1)",
        SlaterPair::A2 => "(q)_inf chi1",
        SlaterPair::A7Star => "(q)_inf F0",
        SlaterPair::A8 => "(q)_inf F1",
        SlaterPair::A6 => "(q)_inf F2",
    };
    match (direct, shifted) {
        (None, _) => report.note(format!("{target_name} = sum beta_n delta_n")),
        (_, None) => report.note(format!("{target_name} = q * sum beta_n delta_n")),
        (Some(a), Some(b)) => {
            report.record(Some(if a.exponent >= b.exponent { a } else { b }));
            report.note(format!("neither {target_name} = S nor = q S balances"));
        }
    }
    Ok(report.finish(started))
}

/// Andrews' identity
/// `sum_j (xq)_j x^{j+1} q^{j+1} = sum_{m >= 1} (-1)^{m-1} q^{m(3m-1)/2} x^{3m-2} (1 + x q^m)`
/// specialized at `x = q^k`.
pub fn andrews_ex10_sides(k: usize, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    let mut left = TruncSeries::zero(order);
    let mut poch = TruncSeries::one(order);
    for j in 0.. {
        let e = (k + 1) * (j + 1);
        if e > order {
            break;
        }
        left.add_assign(&poch.shift(e))?;
        poch.mul_binomial(k + 1 + j)?;
    }
    let mut right = TruncSeries::zero(order);
    for m in 1.. {
        let e = m * (3 * m - 1) / 2 + k * (3 * m - 2);
        if e > order {
            break;
        }
        let sign = if m % 2 == 1 { 1 } else { -1 };
        right.add_monomial(e, sign)?;
        right.add_monomial(e + k + m, sign)?;
    }
    Ok((left, right))
}

pub fn andrews_ex10_check(k_max: usize, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("andrews-ex10", order, started);
    for k in 0..=k_max {
        let (l, r) = andrews_ex10_sides(k, order)?;
        if let Some(m) = l.mismatch(&r) {
            report.record(Some(m));
            report.note(format!("x = q^{k} fails"));
            break;
        }
    }
    report.note(format!("x = q^k for k <= {k_max}"));
    Ok(report.finish(started))
}
