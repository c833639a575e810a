use mocktheta_core::characters::{self, eval_theta, kronecker, theta_terms, CharacterForm};
use mocktheta_core::heckerogers::{double_sum_terms, eval_identity, HeckeIdentity};
use mocktheta_core::qkernel::{divide_by_pochhammer, mock_theta, normalized, pochhammer, MockTheta, Normalized, PochSpec};
use mocktheta_core::TruncSeries;
use proptest::prelude::*;

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

#[test]
fn chi1_character_form_matches_double_sum_term_for_term() {
    let n = 200;
    let lattice: Vec<(usize, i128)> = theta_terms(&characters::char_chi1(), n)
        .unwrap()
        .into_iter()
        .map(|t| (t.exponent, t.sign as i128))
        .collect();
    let double: Vec<(usize, i128)> = HeckeIdentity::Chi01b
        .specs()
        .iter()
        .flat_map(|s| double_sum_terms(s, n).unwrap())
        .collect();
    assert!(!lattice.is_empty());
    assert_eq!(sorted(lattice), sorted(double));
}

#[test]
fn five_way_agreement() {
    let n = 600;
    let rows = [
        (Normalized::C1, HeckeIdentity::Chi01b, CharacterForm::CharChi1),
        (Normalized::F0, HeckeIdentity::F0id, CharacterForm::CharF0),
        (Normalized::F1, HeckeIdentity::F1id, CharacterForm::CharF1),
        (Normalized::F2, HeckeIdentity::F2id, CharacterForm::CharF2),
    ];
    for (target, hecke, character) in rows {
        let t = normalized(target, n).unwrap();
        assert_eq!(eval_identity(hecke, n).unwrap(), t, "{hecke:?}");
        assert_eq!(eval_theta(&character.spec(), n).unwrap(), t, "{character}");
    }
    let c0 = normalized(Normalized::C0, n).unwrap();
    assert_eq!(eval_identity(HeckeIdentity::Chi01a, n).unwrap(), c0.neg().unwrap());
    assert_eq!(eval_theta(&CharacterForm::CharChi0.spec(), n).unwrap(), c0);
    assert_eq!(eval_theta(&CharacterForm::ZagierChi0.spec(), n).unwrap(), c0);
    assert_eq!(
        eval_theta(&CharacterForm::ZagierChi1.spec(), n).unwrap(),
        normalized(Normalized::C1, n).unwrap()
    );
}

#[test]
fn mock_theta_coefficients_are_nonnegative() {
    for f in MockTheta::ALL {
        let s = mock_theta(f, 2000).unwrap();
        assert!(s.coeffs().iter().all(|&c| c >= 0), "{f}");
    }
}

#[test]
fn normalized_series_reach_past_plain_chi0() {
    let c0 = normalized(Normalized::C0, 8300).unwrap();
    assert_eq!(c0.order(), 8300);
}

proptest! {
    #[test]
    fn pochhammer_division_round_trips(start in 1usize..20, count in 0usize..30, order in 0usize..150) {
        let mut s = pochhammer(PochSpec::finite(start, count), order).unwrap();
        divide_by_pochhammer(&mut s, PochSpec::finite(start, count)).unwrap();
        prop_assert_eq!(s, TruncSeries::one(order));
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_top(a in -60i64..60, b in -60i64..60, n in 1i64..80) {
        let lhs = kronecker(a * b, n).unwrap();
        let rhs = kronecker(a, n).unwrap() * kronecker(b, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_bottom(a in -60i64..60, m in 1i64..40, n in 1i64..40) {
        let lhs = kronecker(a, m * n).unwrap();
        let rhs = kronecker(a, m).unwrap() * kronecker(a, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
