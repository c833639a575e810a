//! Coefficient relations between the normalized fifth and seventh order series.
//!
//! Coefficients at negative indices are taken to be zero. That convention
//! lives here only; the series themselves never see negative exponents.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qkernel::{normalized, Normalized};
use crate::report::Status;
use crate::series::{Coeff, TruncSeries};

/// Coefficient accessor over one normalized series.
#[derive(Clone, Debug)]
pub struct CoeffStream {
    pub id: Normalized,
    series: TruncSeries,
}

impl CoeffStream {
    pub fn new(id: Normalized, order: usize) -> Result<Self> {
        Ok(Self { id, series: normalized(id, order)? })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `c(n)`, zero for `n < 0`; an index past the computed order is an error.
    pub fn get(&self, n: i64) -> Result<Coeff> {
        if n < 0 {
            return Ok(0);
        }
        self.series.coeff(n as usize).ok_or(Error::InsufficientOrder {
            needed: n as usize,
            available: self.order(),
        })
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of the prime `p` in `n`.
pub fn nu_p(p: u64, n: i64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Precondition("nu_p(0) is undefined".into()));
    }
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let mut n = n.unsigned_abs();
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// `-1` for `p = 3 mod 10`, `+1` for `p = 7 mod 10`.
pub fn epsilon_p(p: u64) -> Result<i64> {
    match p % 10 {
        3 => Ok(-1),
        7 => Ok(1),
        _ => Err(Error::Precondition(format!("epsilon_p needs p = 3, 7 mod 10, got {p}"))),
    }
}

/// One failed equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub label: String,
    pub n: i64,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

/// One evaluated equation `lhs_series(lhs_index) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedValue {
    pub label: String,
    pub lhs_series: Normalized,
    pub lhs_index: i64,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation_id: String,
    pub prime: Option<u64>,
    pub n_range: (i64, i64),
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub required_order: usize,
    pub checks: usize,
    pub notes: String,
    #[serde(skip)]
    pub values: Vec<CheckedValue>,
}

impl RelationReport {
    fn new(relation_id: impl Into<String>, prime: Option<u64>, n_max: i64, required_order: usize) -> Self {
        Self {
            relation_id: relation_id.into(),
            prime,
            n_range: (0, n_max),
            status: Status::Pass,
            counterexamples: Vec::new(),
            required_order,
            checks: 0,
            notes: String::new(),
            values: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, lhs_series: Normalized, lhs_index: i64, n: i64, lhs: Coeff, rhs: Coeff) {
        self.checks += 1;
        self.values.push(CheckedValue { label: label.to_string(), lhs_series, lhs_index, lhs, rhs });
        if lhs != rhs {
            self.status = Status::Fail;
            self.counterexamples.push(Counterexample { label: label.to_string(), n, lhs, rhs });
        }
    }

    fn note(&mut self, text: impl AsRef<str>) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text.as_ref());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Generates each needed series once, in parallel.
fn streams(ids: &[Normalized], order: usize) -> Result<BTreeMap<Normalized, CoeffStream>> {
    ids.par_iter()
        .map(|&id| CoeffStream::new(id, order).map(|s| (id, s)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// `p^2 n + num / den`, asserting integrality of the offset.
fn offset(p: u64, num_coef: i64, num_const: i64, den: i64) -> Result<i64> {
    let p2 = (p * p) as i64;
    let num = num_coef * p2 + num_const;
    if num.rem_euclid(den) != 0 {
        return Err(Error::Precondition(format!(
            "offset ({num_coef} p^2 + {num_const})/{den} is not an integer for p = {p}"
        )));
    }
    Ok(num / den)
}

/// One progression identity `lhs(p^2 n + offset) = sign * rhs(n + rhs_shift)`.
struct Progression {
    label: &'static str,
    lhs: Normalized,
    offset: i64,
    sign: i64,
    rhs: Normalized,
    rhs_shift: i64,
}

/// One vanishing statement: `series(n) = 0` whenever `nu_p(lin n + constant) = 1`.
struct Vanishing {
    label: &'static str,
    series: Normalized,
    lin: i64,
    constant: i64,
}

fn run(
    report: &mut RelationReport,
    s: &BTreeMap<Normalized, CoeffStream>,
    p: u64,
    n_max: i64,
    sweep_max: i64,
    vanishing: &[Vanishing],
    progressions: &[Progression],
) -> Result<()> {
    for v in vanishing {
        for n in 0..=sweep_max {
            let arg = v.lin * n + v.constant;
            if nu_p(p, arg)? == 1 {
                let c = s[&v.series].get(n)?;
                report.check(v.label, v.series, n, n, c, 0);
            }
        }
    }
    let p2 = (p * p) as i64;
    for pr in progressions {
        for n in 0..=n_max {
            let idx = p2 * n + pr.offset;
            let lhs = s[&pr.lhs].get(idx)?;
            let rhs = pr.sign as Coeff * s[&pr.rhs].get(n + pr.rhs_shift)?;
            report.check(pr.label, pr.lhs, idx, n, lhs, rhs);
        }
    }
    Ok(())
}

/// Series order needed by [`check_chirels`].
pub fn chirels_order(p: u64, n_max: i64) -> Result<usize> {
    let p2 = (p * p) as i64;
    Ok((p2 * n_max + offset(p, 19, -1, 30)?.max(offset(p, 1, -19, 30)?)) as usize)
}

pub fn check_chirels(p: u64, n_max: i64) -> Result<RelationReport> {
    check_chirels_with_sweep(p, n_max, None)
}

/// As [`check_chirels`], with the vanishing statements swept up to
/// `sweep_max` (default: the required series order).
pub fn check_chirels_with_sweep(p: u64, n_max: i64, sweep_max: Option<i64>) -> Result<RelationReport> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if p <= 5 || !matches!(p % 10, 3 | 7) {
        return Err(Error::Precondition(format!("chirels needs a prime p > 5 with p = 3, 7 mod 10, got {p}")));
    }
    if n_max < 0 {
        return Err(Error::Precondition("n_max must be nonnegative".into()));
    }
    let eps = epsilon_p(p)?;
    let needed = chirels_order(p, n_max)?;
    let sweep = sweep_max.unwrap_or(needed as i64);
    let order = needed.max(sweep.max(0) as usize);
    let s = streams(&[Normalized::C0, Normalized::C1], order)?;
    let mut report = RelationReport::new("chirels", Some(p), n_max, order);
    let vanishing = [
        Vanishing { label: "C0(n) = 0 if nu_p(30n+1) = 1", series: Normalized::C0, lin: 30, constant: 1 },
        Vanishing { label: "C1(n) = 0 if nu_p(30n+19) = 1", series: Normalized::C1, lin: 30, constant: 19 },
    ];
    let progressions = [
        Progression {
            label: "C0(p^2 n + (19p^2-1)/30) = -eps_p C1(n)",
            lhs: Normalized::C0,
            offset: offset(p, 19, -1, 30)?,
            sign: -eps,
            rhs: Normalized::C1,
            rhs_shift: 0,
        },
        Progression {
            label: "C1(p^2 n + (p^2-19)/30) = eps_p C0(n)",
            lhs: Normalized::C1,
            offset: offset(p, 1, -19, 30)?,
            sign: eps,
            rhs: Normalized::C0,
            rhs_shift: 0,
        },
    ];
    run(&mut report, &s, p, n_max, sweep, &vanishing, &progressions)?;
    report.note(format!("eps_p = {eps}; vanishing swept over n <= {sweep}"));
    Ok(report)
}

/// Whether 7 is a quadratic nonresidue mod `p`, with the sign choice:
/// `Some((class, upper))` where `class` is 5, 11 or 13.
fn mock7_class(p: u64) -> Option<(u64, bool)> {
    match p % 28 {
        5 => Some((5, true)),
        23 => Some((5, false)),
        11 => Some((11, true)),
        17 => Some((11, false)),
        13 => Some((13, true)),
        15 => Some((13, false)),
        _ => None,
    }
}

fn mock7_progressions(p: u64) -> Result<Vec<Progression>> {
    use Normalized::{F0, F1, F2};
    let (class, upper) = mock7_class(p)
        .ok_or_else(|| Error::Precondition(format!("7 is a quadratic residue mod {p}")))?;
    // pm = the upper/lower sign, mp = its negative
    let pm = if upper { 1 } else { -1 };
    let mp = -pm;
    let pr = |label, lhs, (a, b), sign, rhs, rhs_shift| -> Result<Progression> {
        Ok(Progression { label, lhs, offset: offset(p, a, b, 28)?, sign, rhs, rhs_shift })
    };
    Ok(match class {
        5 => vec![
            pr("f0(p^2 n + (9p^2-1)/28) = +-f2(n)", F0, (9, -1), pm, F2, 0)?,
            pr("f1(p^2 n + (p^2+3)/28) = +-f0(n)", F1, (1, 3), pm, F0, 0)?,
            pr("f2(p^2 n + (25p^2-9)/28) = -+f1(n+1)", F2, (25, -9), mp, F1, 1)?,
        ],
        11 => vec![
            pr("f0(p^2 n + (25p^2-1)/28) = -+f1(n+1)", F0, (25, -1), mp, F1, 1)?,
            pr("f1(p^2 n + (9p^2+3)/28) = +-f2(n)", F1, (9, 3), pm, F2, 0)?,
            pr("f2(p^2 n + (p^2-9)/28) = -+f0(n)", F2, (1, -9), mp, F0, 0)?,
        ],
        _ => vec![
            pr("f0(p^2 n + (p^2-1)/28) = -+f0(n)", F0, (1, -1), mp, F0, 0)?,
            pr("f1(p^2 n + (25p^2+3)/28) = -+f1(n+1)", F1, (25, 3), mp, F1, 1)?,
            pr("f2(p^2 n + (9p^2-9)/28) = -+f2(n)", F2, (9, -9), mp, F2, 0)?,
        ],
    })
}

/// Series order needed by [`check_mock7rels`].
pub fn mock7rels_order(p: u64, n_max: i64) -> Result<usize> {
    let progs = mock7_progressions(p)?;
    let max_offset = progs.iter().map(|pr| pr.offset).max().unwrap_or(0);
    Ok(((p * p) as i64 * n_max + max_offset + 1) as usize)
}

pub fn check_mock7rels(p: u64, n_max: i64) -> Result<RelationReport> {
    check_mock7rels_with_sweep(p, n_max, None)
}

/// Seventh order relations for an odd prime `p` with `(7/p) = -1`.
///
/// The upper sign applies for `p = 5, 11, 13 mod 28`, the lower one for
/// `p = 23, 17, 15 mod 28`.
pub fn check_mock7rels_with_sweep(p: u64, n_max: i64, sweep_max: Option<i64>) -> Result<RelationReport> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if p == 2 {
        return Err(Error::Precondition("p must be odd".into()));
    }
    if n_max < 0 {
        return Err(Error::Precondition("n_max must be nonnegative".into()));
    }
    let progressions = mock7_progressions(p)?;
    let needed = mock7rels_order(p, n_max)?;
    let sweep = sweep_max.unwrap_or(needed as i64);
    let order = needed.max(sweep.max(0) as usize);
    let s = streams(&[Normalized::F0, Normalized::F1, Normalized::F2], order)?;
    let mut report = RelationReport::new("mock7", Some(p), n_max, order);
    let vanishing = [
        Vanishing { label: "f0(n) = 0 if nu_p(28n+1) = 1", series: Normalized::F0, lin: 28, constant: 1 },
        Vanishing { label: "f1(n) = 0 if nu_p(28n-3) = 1", series: Normalized::F1, lin: 28, constant: -3 },
        Vanishing { label: "f2(n) = 0 if nu_p(28n+9) = 1", series: Normalized::F2, lin: 28, constant: 9 },
    ];
    run(&mut report, &s, p, n_max, sweep, &vanishing, &progressions)?;
    let (_, upper) = mock7_class(p).expect("checked above");
    report.note(format!(
        "{} signs (p = {} mod 28); p read as an odd prime; vanishing swept over n <= {sweep}",
        if upper { "upper" } else { "lower" },
        p % 28
    ));
    Ok(report)
}

/// Series order needed by [`check_f25`].
pub fn f25_order(n_max: i64) -> usize {
    (25 * n_max.max(0) + 22) as usize
}

/// `f0(25n+8) = f2(n)`, `f1(25n+1) = f0(n)`, `f2(25n-3) = -f1(n)` for `0 <= n <= n_max`.
pub fn check_f25(n_max: i64) -> Result<RelationReport> {
    if n_max < 0 {
        return Err(Error::Precondition("n_max must be nonnegative".into()));
    }
    let order = f25_order(n_max);
    let s = streams(&[Normalized::F0, Normalized::F1, Normalized::F2], order)?;
    let mut report = RelationReport::new("f25", Some(5), n_max, order);
    let f = |id: Normalized, n: i64| s[&id].get(n);
    for n in 0..=n_max {
        report.check("f0(25n+8) = f2(n)", Normalized::F0, 25 * n + 8, n, f(Normalized::F0, 25 * n + 8)?, f(Normalized::F2, n)?);
        report.check("f1(25n+1) = f0(n)", Normalized::F1, 25 * n + 1, n, f(Normalized::F1, 25 * n + 1)?, f(Normalized::F0, n)?);
        report.check("f2(25n-3) = -f1(n)", Normalized::F2, 25 * n - 3, n, f(Normalized::F2, 25 * n - 3)?, -f(Normalized::F1, n)?);
    }
    let f1_zero = f(Normalized::F1, 0)?;
    report.check("f1(0) = 0", Normalized::F1, 0, 0, f1_zero, 0);
    report.note("f2(-3) taken as 0");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_p_examples() {
        assert_eq!(nu_p(7, 49).unwrap(), 2);
        assert_eq!(nu_p(7, 361).unwrap(), 0);
        assert_eq!(nu_p(5, 250).unwrap(), 3);
        assert_eq!(nu_p(5, -250).unwrap(), 3);
        assert!(nu_p(5, 0).is_err());
        assert!(nu_p(9, 81).is_err());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_p(13).unwrap(), -1);
        assert_eq!(epsilon_p(7).unwrap(), 1);
        assert_eq!(epsilon_p(17).unwrap(), 1);
        assert!(epsilon_p(11).is_err());
    }

    #[test]
    fn offsets() {
        assert_eq!(offset(7, 19, -1, 30).unwrap(), 31);
        assert_eq!(offset(13, 19, -1, 30).unwrap(), 107);
        assert_eq!(offset(5, 9, -1, 28).unwrap(), 8);
        assert_eq!(offset(5, 25, -9, 28).unwrap(), 22);
        assert_eq!(offset(11, 1, -9, 28).unwrap(), 4);
        for p in [7, 13, 17, 23, 37, 43, 47, 53] {
            assert!(offset(p, 19, -1, 30).is_ok() && offset(p, 1, -19, 30).is_ok(), "{p}");
        }
        assert!(offset(11, 19, -1, 30).is_err());
    }

    #[test]
    fn stream_conventions() {
        let s = CoeffStream::new(Normalized::F1, 10).unwrap();
        assert_eq!(s.get(-3).unwrap(), 0);
        assert_eq!(s.get(0).unwrap(), 0);
        assert!(matches!(s.get(11), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn preconditions() {
        assert!(check_chirels(9, 1).is_err());
        assert!(check_chirels(11, 1).is_err());
        assert!(check_chirels(3, 1).is_err());
        assert!(check_mock7rels(3, 1).is_err());
        assert!(check_mock7rels(7, 1).is_err());
        assert!(check_mock7rels(25, 1).is_err());
    }

    #[test]
    fn f25_small() {
        let r = check_f25(10).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(r.required_order, 272);
    }

    #[test]
    fn chirels_p7_small() {
        let r = check_chirels(7, 3).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(r.required_order, 49 * 3 + 31);
    }

    #[test]
    fn mock7_p5_small() {
        let r = check_mock7rels(5, 8).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
    }
}
