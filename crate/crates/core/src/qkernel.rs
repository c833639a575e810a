//! q-Pochhammer products, the pentagonal-number expansion of `(q;q)_inf`,
//! and Eulerian-series generators for the five mock theta functions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochCount {
    Finite(usize),
    Infinite,
}

/// `(q^start; q)_count = prod_{i < count} (1 - q^{start + i})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub start: usize,
    pub count: PochCount,
}

impl PochSpec {
    pub fn finite(start: usize, count: usize) -> Self {
        Self { start, count: PochCount::Finite(count) }
    }

    pub fn infinite(start: usize) -> Self {
        Self { start, count: PochCount::Infinite }
    }

    /// Exponents of the factors that can affect a series of the given order.
    fn factor_exponents(&self, order: usize) -> std::ops::RangeInclusive<usize> {
        let last = match self.count {
            PochCount::Finite(0) => return 1..=0,
            PochCount::Finite(n) => (self.start + n - 1).min(order),
            PochCount::Infinite => order,
        };
        self.start..=last
    }
}

pub fn pochhammer(spec: PochSpec, order: usize) -> Result<TruncSeries> {
    if spec.start == 0 {
        return Err(Error::Precondition("pochhammer start must be at least 1".into()));
    }
    let mut s = TruncSeries::one(order);
    for k in spec.factor_exponents(order) {
        s.mul_binomial(k)?;
    }
    Ok(s)
}

/// `s / (q^start; q)_count`, computed by successive binomial divisions.
pub fn divide_by_pochhammer(s: &mut TruncSeries, spec: PochSpec) -> Result<()> {
    if spec.start == 0 {
        return Err(Error::Precondition("pochhammer start must be at least 1".into()));
    }
    for k in spec.factor_exponents(s.order()) {
        s.div_binomial(k)?;
    }
    Ok(())
}

/// `(q;q)_inf` as a product.
pub fn eta(order: usize) -> Result<TruncSeries> {
    pochhammer(PochSpec::infinite(1), order)
}

/// `sum_{n in Z} (-1)^n q^{n(3n-1)/2}`, the pentagonal-number side of Euler's identity.
pub fn euler_product_pentagonal(order: usize) -> Result<TruncSeries> {
    let mut s = TruncSeries::zero(order);
    s.add_monomial(0, 1)?;
    let mut n: usize = 1;
    loop {
        let minus = n * (3 * n - 1) / 2;
        let plus = n * (3 * n + 1) / 2;
        if minus > order {
            break;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        s.add_monomial(minus, sign)?;
        s.add_monomial(plus, sign)?;
        n += 1;
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MockTheta {
    Chi0,
    Chi1,
    F0,
    F1,
    F2,
}

impl MockTheta {
    pub const ALL: [MockTheta; 5] = [Self::Chi0, Self::Chi1, Self::F0, Self::F1, Self::F2];

    pub fn name(self) -> &'static str {
        match self {
            Self::Chi0 => "chi0",
            Self::Chi1 => "chi1",
            Self::F0 => "F0",
            Self::F1 => "F1",
            Self::F2 => "F2",
        }
    }

    fn first_index(self) -> usize {
        match self {
            Self::F1 => 1,
            _ => 0,
        }
    }

    /// Lowest exponent appearing in the n-th Eulerian summand.
    fn leading_exponent(self, n: usize) -> usize {
        match self {
            Self::Chi0 | Self::Chi1 => n,
            Self::F0 | Self::F1 => n * n,
            Self::F2 => n * n + n,
        }
    }

    /// First summand: 1 for chi0/F0, 1/(1-q) for chi1/F2, q/(1-q) for F1.
    fn first_term(self, order: usize) -> Result<TruncSeries> {
        let mut t = TruncSeries::monomial(self.leading_exponent(self.first_index()), 1, order);
        if matches!(self, Self::Chi1 | Self::F1 | Self::F2) {
            t.div_binomial(1)?;
        }
        Ok(t)
    }

    /// Ratio of consecutive summands, `T_{n+1} = q^shift (1-q^mul) / ((1-q^d0)(1-q^d1)) T_n`.
    fn step(self, n: usize) -> (usize, usize, [usize; 2]) {
        match self {
            Self::Chi0 => (1, n + 1, [2 * n + 1, 2 * n + 2]),
            Self::Chi1 => (1, n + 1, [2 * n + 2, 2 * n + 3]),
            Self::F0 => (2 * n + 1, n + 1, [2 * n + 1, 2 * n + 2]),
            Self::F1 => (2 * n + 1, n, [2 * n, 2 * n + 1]),
            Self::F2 => (2 * n + 2, n + 1, [2 * n + 2, 2 * n + 3]),
        }
    }
}

impl fmt::Display for MockTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MockTheta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "chi0" => Self::Chi0,
            "chi1" => Self::Chi1,
            "F0" => Self::F0,
            "F1" => Self::F1,
            "F2" => Self::F2,
            _ => return Err(Error::UnknownId(s.to_string())),
        })
    }
}

/// Runs the Eulerian recurrence starting from `seed * T_first`.
///
/// With `seed = 1` this is the function itself; with `seed = (q;q)_inf` every
/// summand is a finite product of binomials and stays small.
fn eulerian_sum(f: MockTheta, seed: &TruncSeries) -> Result<TruncSeries> {
    let order = seed.order();
    let mut term = seed.mul(&f.first_term(order)?)?;
    let mut sum = TruncSeries::zero(order);
    let mut n = f.first_index();
    while f.leading_exponent(n) <= order {
        sum.add_assign(&term)?;
        let (shift, up, [d0, d1]) = f.step(n);
        term = term.shift(shift);
        term.mul_binomial(up)?;
        term.div_binomial(d0)?;
        term.div_binomial(d1)?;
        n += 1;
    }
    // the first summand past the cutoff must vanish at this order
    if !term.is_zero() {
        return Err(Error::Truncation(format!(
            "{f}: summand {n} contributes below q^{}",
            order + 1
        )));
    }
    Ok(sum)
}

/// The mock theta function from its first Eulerian form.
pub fn mock_theta(f: MockTheta, order: usize) -> Result<TruncSeries> {
    eulerian_sum(f, &TruncSeries::one(order))
}

pub fn chi0(order: usize) -> Result<TruncSeries> {
    mock_theta(MockTheta::Chi0, order)
}

pub fn chi1(order: usize) -> Result<TruncSeries> {
    mock_theta(MockTheta::Chi1, order)
}

#[allow(non_snake_case)]
pub fn F0(order: usize) -> Result<TruncSeries> {
    mock_theta(MockTheta::F0, order)
}

#[allow(non_snake_case)]
pub fn F1(order: usize) -> Result<TruncSeries> {
    mock_theta(MockTheta::F1, order)
}

#[allow(non_snake_case)]
pub fn F2(order: usize) -> Result<TruncSeries> {
    mock_theta(MockTheta::F2, order)
}

/// The alternative Eulerian form of each function, evaluated literally with
/// Pochhammer products and generic series inversion:
///
/// * chi0 = sum q^n (q)_n / (q)_{2n}
/// * chi1 = sum q^n (q)_n / (q)_{2n+1}
/// * F0 = sum q^{n^2} (q)_n / (q)_{2n}
/// * F1 = q sum q^{n^2+2n} / (q^{n+1};q)_{n+1}
/// * F2 = sum q^{n^2+n} (q)_n / (q)_{2n+1}
///
/// Inverting `(q)_{2n}` builds partition-sized coefficients, so this route
/// overflows `i128` well before the first form does (around order 1200).
pub fn mock_theta_second_form(f: MockTheta, order: usize) -> Result<TruncSeries> {
    let mut sum = TruncSeries::zero(order);
    for n in 0.. {
        let lead = match f {
            MockTheta::Chi0 | MockTheta::Chi1 => n,
            MockTheta::F0 => n * n,
            MockTheta::F1 => n * n + 2 * n + 1,
            MockTheta::F2 => n * n + n,
        };
        if lead > order {
            break;
        }
        let rest = order - lead;
        let (numer, denom) = match f {
            MockTheta::Chi0 | MockTheta::F0 => (PochSpec::finite(1, n), PochSpec::finite(1, 2 * n)),
            MockTheta::Chi1 | MockTheta::F2 => {
                (PochSpec::finite(1, n), PochSpec::finite(1, 2 * n + 1))
            }
            MockTheta::F1 => (PochSpec::finite(1, 0), PochSpec::finite(n + 1, n + 1)),
        };
        let body = pochhammer(numer, rest)?.mul(&pochhammer(denom, rest)?.invert()?)?;
        sum.add_assign(&body.resized(order).shift(lead))?;
    }
    Ok(sum)
}

/// Normalized series whose coefficients carry the coefficient relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Normalized {
    /// `(q)_inf (2 - chi0)`
    C0,
    /// `(q)_inf chi1`
    C1,
    /// `(q)_inf F0`
    F0,
    /// `(q)_inf F1`
    F1,
    /// `(q)_inf F2`
    F2,
}

impl Normalized {
    pub const ALL: [Normalized; 5] = [Self::C0, Self::C1, Self::F0, Self::F1, Self::F2];

    pub fn name(self) -> &'static str {
        match self {
            Self::C0 => "C0",
            Self::C1 => "C1",
            Self::F0 => "f0",
            Self::F1 => "f1",
            Self::F2 => "f2",
        }
    }

    pub fn mock_theta(self) -> MockTheta {
        match self {
            Self::C0 => MockTheta::Chi0,
            Self::C1 => MockTheta::Chi1,
            Self::F0 => MockTheta::F0,
            Self::F1 => MockTheta::F1,
            Self::F2 => MockTheta::F2,
        }
    }
}

impl fmt::Display for Normalized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Normalized {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "C0" => Self::C0,
            "C1" => Self::C1,
            "f0" => Self::F0,
            "f1" => Self::F1,
            "f2" => Self::F2,
            _ => return Err(Error::UnknownId(s.to_string())),
        })
    }
}

/// `(q)_inf` times the named function (or `2 - chi0` for C0).
///
/// The product is taken inside the Eulerian recurrence, so coefficients stay
/// near 1e18 even where chi0 itself no longer fits in `i128` (past q^6632).
pub fn normalized(id: Normalized, order: usize) -> Result<TruncSeries> {
    let e = eta(order)?;
    let body = eulerian_sum(id.mock_theta(), &e)?;
    match id {
        Normalized::C0 => e.scale(2)?.sub(&body),
        _ => Ok(body),
    }
}

/// `(q)_inf (chi0 - 1)`, the target of the A(4) Bailey chain.
pub fn eta_chi0_minus_one(order: usize) -> Result<TruncSeries> {
    eta(order)?.sub(&normalized(Normalized::C0, order)?)
}
