//! Kronecker symbols, the quartic character mod 60, and character-weighted
//! indefinite binary theta sums
//!
//! ```text
//! prefactor * sum  weight(a, b) q^{(A a^2 - B b^2)/D + shift}
//! ```
//!
//! over `(a, b)` in a cone `r|b| < p|a|` subject to congruence conditions.
//! Weights live in the unit group `{1, i, -1, -i}`, tracked exactly as a phase.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{Coeff, TruncSeries};

/// Kronecker symbol `(a / n)`, for every pair except `(0, 0)`.
pub fn kronecker(a: i64, n: i64) -> Result<i8> {
    if a == 0 && n == 0 {
        return Err(Error::Precondition("kronecker symbol (0/0) is undefined".into()));
    }
    if n == 0 {
        return Ok(if a.abs() == 1 { 1 } else { 0 });
    }
    let mut result: i8 = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        n >>= twos;
        // (a/2) = 1 for a = +-1 mod 8, -1 for a = +-3 mod 8
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    Ok(result * jacobi(a.rem_euclid(n), n))
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i64, mut n: i64) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Element of `{1, i, -1, -i}` stored as the exponent of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_sign(s: i64) -> Phase {
        if s >= 0 {
            Self::ONE
        } else {
            Self::MINUS_ONE
        }
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// `Some(+-1)` when real.
    pub fn as_real(self) -> Option<i64> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

/// The character mod 60 of order 4; zero off the units.
pub fn chi60(m: i64) -> Option<Phase> {
    match m.rem_euclid(60) {
        1 | 11 | 19 | 29 => Some(Phase::ONE),
        7 | 13 | 17 | 23 => Some(Phase::I),
        31 | 41 | 49 | 59 => Some(Phase::MINUS_ONE),
        37 | 43 | 47 | 53 => Some(Phase::MINUS_I),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightFactor {
    SgnA,
    SgnB,
    /// `(-1)^a`
    NegOnePowA,
    /// `(12/a)`
    Kronecker12A,
    /// `(12/b)`
    Kronecker12B,
    /// `(b/7)`
    KroneckerB7,
    /// `(-3/(a^2 - b^2))`
    KroneckerNeg3Diff,
    Chi60B,
}

impl WeightFactor {
    fn eval(self, a: i64, b: i64) -> Result<Option<Phase>> {
        let sgn = |x: i64| Phase::from_sign(x);
        let symbol = |v: i8| if v == 0 { None } else { Some(Phase::from_sign(v.into())) };
        Ok(match self {
            Self::SgnA => Some(sgn(a)),
            Self::SgnB => Some(sgn(b)),
            Self::NegOnePowA => Some(if a.rem_euclid(2) == 0 { Phase::ONE } else { Phase::MINUS_ONE }),
            Self::Kronecker12A => symbol(kronecker(12, a)?),
            Self::Kronecker12B => symbol(kronecker(12, b)?),
            Self::KroneckerB7 => symbol(kronecker(b, 7)?),
            Self::KroneckerNeg3Diff => symbol(kronecker(-3, a * a - b * b)?),
            Self::Chi60B => chi60(b),
        })
    }
}

/// `(coef_a a + coef_b b) mod modulus` lies in `residues`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub coef_a: i64,
    pub coef_b: i64,
    pub modulus: i64,
    pub residues: Vec<i64>,
}

impl Congruence {
    pub fn on_a(modulus: i64, residues: &[i64]) -> Self {
        Self { coef_a: 1, coef_b: 0, modulus, residues: residues.to_vec() }
    }

    pub fn on_b(modulus: i64, residues: &[i64]) -> Self {
        Self { coef_a: 0, coef_b: 1, modulus, residues: residues.to_vec() }
    }

    pub fn holds(&self, a: i64, b: i64) -> bool {
        let v = (self.coef_a * a + self.coef_b * b).rem_euclid(self.modulus);
        self.residues.contains(&v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub label: &'static str,
    pub form_a: i64,
    pub form_b: i64,
    pub denom: i64,
    pub shift_num: i64,
    pub shift_den: i64,
    pub conditions: Vec<Congruence>,
    /// `(p, r)`: only `r |b| < p |a|` is summed.
    pub cone: (i64, i64),
    pub weight: Vec<WeightFactor>,
    pub prefactor: Phase,
}

/// One enumerated lattice point with a nonzero weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaTerm {
    pub a: i64,
    pub b: i64,
    pub exponent: usize,
    pub sign: i8,
}

impl ThetaSpec {
    fn in_cone(&self, a: i64, b: i64) -> bool {
        let (p, r) = self.cone;
        r * b.abs() < p * a.abs()
    }

    fn admissible(&self, a: i64, b: i64) -> bool {
        self.in_cone(a, b) && self.conditions.iter().all(|c| c.holds(a, b))
    }

    /// Exponent as an exact fraction `num / den`.
    fn exponent_fraction(&self, a: i64, b: i64) -> (i64, i64) {
        let num = (self.form_a * a * a - self.form_b * b * b) * self.shift_den + self.shift_num * self.denom;
        (num, self.denom * self.shift_den)
    }

    /// Smallest possible exponent over the cone slice at `|a|`, as a fraction;
    /// attained on the cone boundary since `B > 0`.
    fn min_exponent_bound(&self, a: i64) -> f64 {
        let (p, r) = self.cone;
        let b_max = (p * a.abs() - 1).max(0) / r;
        let (num, den) = self.exponent_fraction(a, b_max);
        num as f64 / den as f64
    }

    /// Largest `|a|` that can reach `order`, padded by two.
    fn a_bound(&self, order: usize) -> Result<i64> {
        let (p, r) = self.cone;
        let kappa = (self.form_a * r * r - self.form_b * p * p) as f64 / (r * r) as f64;
        if kappa <= 0.0 {
            return Err(Error::Precondition(format!("{}: form is not positive on the cone", self.label)));
        }
        let shift = self.shift_num as f64 / self.shift_den as f64;
        let a = ((self.denom as f64 * (order as f64 - shift + 1.0)) / kappa).sqrt().ceil() as i64 + 2;
        Ok(a)
    }

    fn weight_at(&self, a: i64, b: i64) -> Result<Option<Phase>> {
        let mut w = self.prefactor;
        for f in &self.weight {
            match f.eval(a, b)? {
                Some(p) => w = w.mul(p),
                None => return Ok(None),
            }
        }
        Ok(Some(w))
    }
}

/// All nonzero terms with exponent `<= order`.
///
/// Every admissible lattice point with nonzero weight is checked for an
/// integral, nonnegative exponent and a real weight.
pub fn theta_terms(spec: &ThetaSpec, order: usize) -> Result<Vec<ThetaTerm>> {
    let a_max = spec.a_bound(order)?;
    for edge in [a_max + 1, a_max + 2] {
        if spec.min_exponent_bound(edge) <= order as f64 {
            return Err(Error::Truncation(format!("{}: |a| = {edge} still reaches order {order}", spec.label)));
        }
    }
    let (p, r) = spec.cone;
    let mut terms = Vec::new();
    for a in -a_max..=a_max {
        let b_lim = (p * a.abs() - 1).max(-1) / r;
        for b in -b_lim..=b_lim {
            if !spec.admissible(a, b) {
                continue;
            }
            let Some(w) = spec.weight_at(a, b)? else {
                continue;
            };
            let context = || format!("{} at a={a}, b={b}", spec.label);
            let (num, den) = spec.exponent_fraction(a, b);
            if num.rem_euclid(den) != 0 {
                return Err(Error::NonIntegralExponent { context: context() });
            }
            let e = num / den;
            if e < 0 {
                return Err(Error::NegativeExponent { context: context(), exponent: e });
            }
            let sign = w.as_real().ok_or_else(|| Error::NonRealTerm { context: context() })?;
            if e as usize <= order {
                terms.push(ThetaTerm { a, b, exponent: e as usize, sign: sign as i8 });
            }
        }
    }
    Ok(terms)
}

pub fn eval_theta(spec: &ThetaSpec, order: usize) -> Result<TruncSeries> {
    let monomials: Vec<(usize, Coeff)> = theta_terms(spec, order)?
        .into_iter()
        .map(|t| (t.exponent, t.sign as Coeff))
        .collect();
    TruncSeries::from_monomials(&monomials, order)
}

/// Named character-form identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterForm {
    ZagierChi0,
    ZagierChi1,
    CharChi0,
    CharChi1,
    CharF0,
    CharF1,
    CharF2,
}

impl CharacterForm {
    pub const ALL: [CharacterForm; 7] = [
        Self::ZagierChi0,
        Self::ZagierChi1,
        Self::CharChi0,
        Self::CharChi1,
        Self::CharF0,
        Self::CharF1,
        Self::CharF2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::ZagierChi0 => "zagier:chi0",
            Self::ZagierChi1 => "zagier:chi1",
            Self::CharChi0 => "char:chi0",
            Self::CharChi1 => "char:chi1",
            Self::CharF0 => "char:F0",
            Self::CharF1 => "char:F1",
            Self::CharF2 => "char:F2",
        }
    }

    pub fn spec(self) -> ThetaSpec {
        match self {
            Self::ZagierChi0 => zagier_chi0(),
            Self::ZagierChi1 => zagier_chi1(),
            Self::CharChi0 => char_chi0(),
            Self::CharChi1 => char_chi1(),
            Self::CharF0 => char_f0(),
            Self::CharF1 => char_f1(),
            Self::CharF2 => char_f2(),
        }
    }
}

impl fmt::Display for CharacterForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CharacterForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn zagier(label: &'static str, a_residue: i64, shift_num: i64) -> ThetaSpec {
    use WeightFactor::*;
    ThetaSpec {
        label,
        form_a: 1,
        form_b: 5,
        denom: 120,
        shift_num,
        shift_den: 30,
        conditions: vec![
            Congruence { coef_a: 1, coef_b: 1, modulus: 4, residues: vec![2] },
            Congruence::on_a(5, &[a_residue]),
        ],
        cone: (1, 5),
        weight: vec![NegOnePowA, SgnA, KroneckerNeg3Diff],
        prefactor: Phase::ONE,
    }
}

/// `(q)_inf (2 - chi0)` in Zagier's form.
pub fn zagier_chi0() -> ThetaSpec {
    zagier("zagier:chi0", 2, -1)
}

/// `(q)_inf chi1` in Zagier's form.
pub fn zagier_chi1() -> ThetaSpec {
    zagier("zagier:chi1", 4, -19)
}

fn fifth(label: &'static str, b_residues: &[i64], shift_num: i64, prefactor: Phase) -> ThetaSpec {
    use WeightFactor::*;
    ThetaSpec {
        label,
        form_a: 5,
        form_b: 1,
        denom: 120,
        shift_num,
        shift_den: 30,
        conditions: vec![Congruence::on_a(6, &[1]), Congruence::on_b(30, b_residues)],
        cone: (5, 3),
        weight: vec![SgnB, Kronecker12A, Chi60B],
        prefactor,
    }
}

/// `(q)_inf (2 - chi0)` weighted by the character mod 60.
pub fn char_chi0() -> ThetaSpec {
    fifth("char:chi0", &[1, 11], -1, Phase::ONE)
}

/// `(q)_inf chi1`; `b = 1 mod 6, b = +-2 mod 5` written as `b = 7, 13 mod 30`.
pub fn char_chi1() -> ThetaSpec {
    fifth("char:chi1", &[7, 13], -19, Phase::I)
}

fn seventh(label: &'static str, b_residues: &[i64], shift_num: i64, prefactor: Phase) -> ThetaSpec {
    use WeightFactor::*;
    ThetaSpec {
        label,
        form_a: 7,
        form_b: 1,
        denom: 168,
        shift_num,
        shift_den: 28,
        conditions: vec![Congruence::on_a(6, &[1]), Congruence::on_b(42, b_residues)],
        cone: (7, 3),
        weight: vec![SgnB, Kronecker12A, Kronecker12B, KroneckerB7],
        prefactor,
    }
}

pub fn char_f0() -> ThetaSpec {
    seventh("char:F0", &[1, 13], -1, Phase::ONE)
}

pub fn char_f1() -> ThetaSpec {
    seventh("char:F1", &[5, 19], 3, Phase::MINUS_ONE)
}

pub fn char_f2() -> ThetaSpec {
    seventh("char:F2", &[11, 17], -9, Phase::MINUS_ONE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::{normalized, Normalized};

    /// Euler's criterion for odd primes, brute force.
    fn legendre_oracle(a: i64, p: i64) -> i8 {
        let a = a.rem_euclid(p);
        if a == 0 {
            return 0;
        }
        let mut r = 1i64;
        for _ in 0..(p - 1) / 2 {
            r = r * a % p;
        }
        if r == 1 {
            1
        } else {
            -1
        }
    }

    /// Kronecker symbol by trial factorization of `n`.
    fn kronecker_oracle(a: i64, n: i64) -> i8 {
        if n == 0 {
            return if a.abs() == 1 { 1 } else { 0 };
        }
        let mut out: i8 = if n < 0 && a < 0 { -1 } else { 1 };
        let mut m = n.abs();
        let mut p = 2;
        while m > 1 {
            while m % p == 0 {
                m /= p;
                out *= if p == 2 {
                    match a.rem_euclid(8) {
                        1 | 7 => 1,
                        3 | 5 => -1,
                        _ => 0,
                    }
                } else {
                    legendre_oracle(a, p)
                };
            }
            p += 1;
        }
        out
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(12, 1).unwrap(), 1);
        assert_eq!(kronecker(12, 7).unwrap(), -1);
        assert_eq!(kronecker(12, -5).unwrap(), -1);
        assert!(kronecker(0, 0).is_err());
        assert_eq!(kronecker(5, 0).unwrap(), 0);
        assert_eq!(kronecker(-1, 0).unwrap(), 1);
    }

    #[test]
    fn kronecker_matches_factorization_oracle() {
        for a in -40..=40 {
            for n in -60..=60 {
                if a == 0 && n == 0 {
                    continue;
                }
                assert_eq!(kronecker(a, n).unwrap(), kronecker_oracle(a, n), "({a}/{n})");
            }
        }
    }

    #[test]
    fn twelve_over_a_is_minus_one_to_j() {
        for j in 1..60 {
            let expected = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(kronecker(12, 6 * j + 1).unwrap(), expected);
            assert_eq!(kronecker(12, -6 * j + 1).unwrap(), expected);
        }
    }

    #[test]
    fn chi60_table() {
        assert_eq!(chi60(11), Some(Phase::ONE));
        assert_eq!(chi60(37), Some(Phase::MINUS_I));
        assert_eq!(chi60(-49), Some(Phase::ONE));
        assert_eq!(chi60(15), None);
        let units = (0..60).filter(|m| chi60(*m).is_some()).count();
        assert_eq!(units, 16);
        // multiplicative on units
        for x in 0..60 {
            for y in 0..60 {
                if let (Some(p), Some(q)) = (chi60(x), chi60(y)) {
                    assert_eq!(chi60(x * y), Some(p.mul(q)));
                }
            }
        }
    }

    #[test]
    fn chi1_residue_forms_agree() {
        // b = 1 mod 6 and b = +-2 mod 5  <=>  b = 7, 13 mod 30
        for b in -600..=600i64 {
            let printed = b.rem_euclid(6) == 1 && matches!(b.rem_euclid(5), 2 | 3);
            let sketch = matches!(b.rem_euclid(30), 7 | 13);
            assert_eq!(printed, sketch, "b={b}");
        }
    }

    #[test]
    fn smallest_chi0_term() {
        let terms = theta_terms(&char_chi0(), 0).unwrap();
        assert_eq!(terms, vec![ThetaTerm { a: 1, b: 1, exponent: 0, sign: 1 }]);
    }

    #[test]
    fn small_orders_match_targets() {
        let n = 40;
        let c0 = normalized(Normalized::C0, n).unwrap();
        let c1 = normalized(Normalized::C1, n).unwrap();
        assert_eq!(eval_theta(&char_chi0(), n).unwrap(), c0);
        assert_eq!(eval_theta(&char_chi1(), n).unwrap(), c1);
        assert_eq!(eval_theta(&zagier_chi0(), n).unwrap(), c0);
        assert_eq!(eval_theta(&zagier_chi1(), n).unwrap(), c1);
        assert_eq!(eval_theta(&char_f0(), n).unwrap(), normalized(Normalized::F0, n).unwrap());
        assert_eq!(eval_theta(&char_f1(), n).unwrap(), normalized(Normalized::F1, n).unwrap());
        assert_eq!(eval_theta(&char_f2(), n).unwrap(), normalized(Normalized::F2, n).unwrap());
    }

    #[test]
    fn non_real_weight_is_rejected() {
        let mut spec = char_chi1();
        spec.prefactor = Phase::ONE;
        assert!(matches!(theta_terms(&spec, 10), Err(Error::NonRealTerm { .. })));
    }

    #[test]
    fn non_integral_exponent_is_rejected() {
        let mut spec = char_f0();
        spec.shift_num = 0;
        assert!(matches!(theta_terms(&spec, 10), Err(Error::NonIntegralExponent { .. })));
    }

    #[test]
    fn char_f1_prefactor() {
        assert_eq!(char_f1().prefactor, Phase::MINUS_ONE);
        assert_eq!(char_f2().prefactor, Phase::MINUS_ONE);
        assert_eq!(char_f0().prefactor, Phase::ONE);
    }
}
