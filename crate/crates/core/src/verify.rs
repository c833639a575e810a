//! Named identity checks and the expansion catalogue shared by the CLI and
//! the Python bindings.

use std::time::Instant;

use rayon::prelude::*;

use crate::bailey::{self, slater_pair, SlaterPair};
use crate::characters::{eval_theta, CharacterForm};
use crate::error::{Error, Result};
use crate::heckerogers::{eval_identity, HeckeIdentity};
use crate::qkernel::{self, mock_theta, mock_theta_second_form, normalized, MockTheta, Normalized, PochSpec};
use crate::report::{Status, VerificationReport};
use crate::series::TruncSeries;

/// `n_max` used by `bailey:<pair>` checks.
pub const BAILEY_N_MAX: usize = 40;
/// `n_max` used by the `conjpair` check.
pub const CONJPAIR_N_MAX: usize = 30;
/// Largest `k` in `x = q^k` for `andrews-ex10`.
pub const ANDREWS_K_MAX: usize = 10;

/// Every identity id accepted by [`verify_identity`], sorted.
pub fn identity_ids() -> Vec<String> {
    let mut ids: Vec<String> = HeckeIdentity::ALL.iter().map(|h| h.id().to_string()).collect();
    ids.extend(CharacterForm::ALL.iter().map(|c| c.id().to_string()));
    ids.extend(SlaterPair::ALL.iter().map(|p| format!("bailey:{p}")));
    ids.extend(SlaterPair::ALL.iter().map(|p| format!("transform:{p}")));
    ids.extend(["conjpair", "andrews-ex10", "pentagonal", "eulerian-forms"].map(String::from));
    ids.sort();
    ids
}

/// Series ids accepted by [`expand`].
pub const EXPAND_IDS: [&str; 11] = ["chi0", "chi1", "F0", "F1", "F2", "C0", "C1", "f0", "f1", "f2", "eta"];

pub fn expand(id: &str, order: usize) -> Result<TruncSeries> {
    if id == "eta" {
        return qkernel::eta(order);
    }
    if let Ok(f) = id.parse::<MockTheta>() {
        return mock_theta(f, order);
    }
    if let Ok(n) = id.parse::<Normalized>() {
        return normalized(n, order);
    }
    Err(Error::UnknownId(id.to_string()))
}

fn hecke_target(id: HeckeIdentity) -> Normalized {
    match id {
        HeckeIdentity::Chi01a => Normalized::C0,
        HeckeIdentity::Chi01b => Normalized::C1,
        HeckeIdentity::F0id => Normalized::F0,
        HeckeIdentity::F1id => Normalized::F1,
        HeckeIdentity::F2id => Normalized::F2,
    }
}

fn character_target(c: CharacterForm) -> Normalized {
    match c {
        CharacterForm::ZagierChi0 | CharacterForm::CharChi0 => Normalized::C0,
        CharacterForm::ZagierChi1 | CharacterForm::CharChi1 => Normalized::C1,
        CharacterForm::CharF0 => Normalized::F0,
        CharacterForm::CharF1 => Normalized::F1,
        CharacterForm::CharF2 => Normalized::F2,
    }
}

/// Double sums against the normalized series.
///
/// `chi01a` is compared with `C0 = (q)_inf (2 - chi0)`; its double sums carry
/// the opposite sign, which is reported as `sign-flipped-pass`.
pub fn verify_hecke(id: HeckeIdentity, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let lhs = eval_identity(id, order)?;
    let target = normalized(hecke_target(id), order)?;
    let mut report = VerificationReport::compare(id.id(), &lhs, &target, started);
    if id == HeckeIdentity::Chi01a {
        let flipped = lhs.mismatch(&target.neg()?);
        match (report.first_mismatch, flipped) {
            (None, _) => report.note("double sums = (q)_inf (2 - chi0) = C0"),
            (Some(_), None) => {
                report.status = Status::SignFlippedPass;
                report.first_mismatch = None;
                report.note("double sums = (q)_inf (chi0 - 2) = -C0, the orientation as printed");
            }
            (Some(direct), Some(flip)) => {
                if flip.exponent > direct.exponent {
                    report.first_mismatch = Some(flip);
                }
                report.note("neither orientation of C0 matches");
            }
        }
    } else {
        report.note(format!("double sums = {}", hecke_target(id)));
    }
    Ok(report.finish(started))
}

pub fn verify_character_form(c: CharacterForm, order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let lhs = eval_theta(&c.spec(), order)?;
    let target = normalized(character_target(c), order)?;
    let mut report = VerificationReport::compare(c.id(), &lhs, &target, started);
    report.note(format!("theta sum = {}; integrality and realness asserted per term", character_target(c)));
    Ok(report.finish(started))
}

pub fn verify_pentagonal(order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let sum = qkernel::euler_product_pentagonal(order)?;
    let product = qkernel::pochhammer(PochSpec::infinite(1), order)?;
    let mut report = VerificationReport::compare("pentagonal", &sum, &product, started);
    report.note("pentagonal sum = (q;q)_inf product");
    Ok(report.finish(started))
}

pub fn verify_eulerian_forms(order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("eulerian-forms", order, started);
    let results: Vec<_> = MockTheta::ALL
        .par_iter()
        .map(|&f| Ok((f, mock_theta(f, order)?, mock_theta_second_form(f, order)?)))
        .collect::<Result<_>>()?;
    for (f, first, second) in results {
        if let Some(m) = first.mismatch(&second) {
            report.record(Some(m));
            report.note(format!("{f}: the two Eulerian forms differ"));
        }
    }
    if report.passed() {
        report.note("both Eulerian forms agree for chi0, chi1, F0, F1, F2");
    }
    Ok(report.finish(started))
}

pub fn verify_identity(id: &str, order: usize) -> Result<VerificationReport> {
    if let Ok(h) = id.parse::<HeckeIdentity>() {
        return verify_hecke(h, order);
    }
    if let Ok(c) = id.parse::<CharacterForm>() {
        return verify_character_form(c, order);
    }
    if let Some(name) = id.strip_prefix("bailey:") {
        let pair = slater_pair(name.parse()?);
        return bailey::verify_bailey_pair(&pair, BAILEY_N_MAX, order);
    }
    if let Some(name) = id.strip_prefix("transform:") {
        let pair = slater_pair(name.parse()?);
        return bailey::bailey_transform_check(&pair, order);
    }
    match id {
        "conjpair" => bailey::verify_conjugate_pair(CONJPAIR_N_MAX, order),
        "andrews-ex10" => bailey::andrews_ex10_check(ANDREWS_K_MAX, order),
        "pentagonal" => verify_pentagonal(order),
        "eulerian-forms" => verify_eulerian_forms(order),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// Runs every identity concurrently; the output is sorted by id.
pub fn verify_all(order: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = identity_ids()
        .par_iter()
        .map(|id| verify_identity(id, order))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids = identity_ids();
        assert_eq!(ids.len(), 26);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(verify_identity("nope", 10), Err(Error::UnknownId(_))));
        assert!(matches!(verify_identity("bailey:A5", 10), Err(Error::UnknownId(_))));
        assert!(matches!(expand("chi2", 10), Err(Error::UnknownId(_))));
    }

    #[test]
    fn all_pass_at_small_order() {
        for r in verify_all(80).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn chi01a_reports_orientation() {
        let r = verify_identity("chi01a", 50).unwrap();
        assert_eq!(r.status, Status::SignFlippedPass);
        assert!(r.notes.contains("-C0"));
    }
}
