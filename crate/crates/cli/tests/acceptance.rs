//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mocktheta_core::bailey::{
    andrews_ex10_check, bailey_transform_check, slater_pair, verify_bailey_pair, verify_conjugate_pair, SlaterPair,
};
use mocktheta_core::characters::{theta_terms, CharacterForm};
use mocktheta_core::heckerogers::{eval_specs, HeckeIdentity};
use mocktheta_core::qkernel::{mock_theta, normalized, MockTheta, Normalized};
use mocktheta_core::relations::{self, RelationReport};
use mocktheta_core::verify::{verify_character_form, verify_eulerian_forms, verify_hecke, verify_pentagonal};
use mocktheta_core::{Status, TruncSeries, VerificationReport};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || format!("{what} took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64()))
}

fn success(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || format!("{} failed: {:?} {}", r.identity_id, r.first_mismatch, r.notes))
}

fn s(c: &[i128]) -> TruncSeries {
    TruncSeries::from_coeffs(c.to_vec())
}

fn golden() -> Outcome {
    let started = Instant::now();
    let expected = [
        (MockTheta::Chi0, s(&[1, 1, 1, 2, 1, 3, 2, 3])),
        (MockTheta::Chi1, s(&[1, 2, 2, 3, 3, 4, 4, 6])),
        (MockTheta::F0, s(&[1, 1, 0, 1, 1, 1, 0, 2, 1, 2])),
        (MockTheta::F1, s(&[0, 1, 1, 1, 2, 1, 2, 2, 2])),
        (MockTheta::F2, s(&[1, 1, 2, 1, 2, 2, 3, 2])),
    ];
    for (f, want) in &expected {
        let got = mock_theta(*f, want.order()).map_err(|e| e.to_string())?;
        ensure(&got == want, || format!("{f}: got {:?}", got.coeffs()))?;
    }
    within(started.elapsed(), 1.0, "golden expansions")?;
    Ok(format!("5 functions, {:.1} ms", started.elapsed().as_secs_f64() * 1e3))
}

fn pentagonal() -> Outcome {
    let started = Instant::now();
    let r = verify_pentagonal(2000).map_err(|e| e.to_string())?;
    success(&r)?;
    within(started.elapsed(), 1.0, "pentagonal")?;
    Ok(format!("N=2000, {:.1} ms", r.elapsed_ms))
}

fn dual_forms() -> Outcome {
    let r = verify_eulerian_forms(1000).map_err(|e| e.to_string())?;
    success(&r)?;
    Ok(format!("N=1000, {:.0} ms", r.elapsed_ms))
}

fn chi01() -> Outcome {
    let mut detail = Vec::new();
    for id in [HeckeIdentity::Chi01a, HeckeIdentity::Chi01b] {
        let started = Instant::now();
        let r = verify_hecke(id, 2000).map_err(|e| e.to_string())?;
        success(&r)?;
        within(started.elapsed(), 10.0, id.id())?;
        let status = serde_json::to_value(r.status).unwrap();
        detail.push(format!("{} {} ({})", id.id(), status.as_str().unwrap(), r.notes));
    }
    Ok(format!("N=2000; {}", detail.join("; ")))
}

fn mock7_hecke() -> Outcome {
    for id in [HeckeIdentity::F0id, HeckeIdentity::F1id, HeckeIdentity::F2id] {
        let r = verify_hecke(id, 2000).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("{}: {:?}", id.id(), r.first_mismatch))?;
    }
    Ok("F0id, F1id, F2id at N=2000".into())
}

fn bailey_pairs() -> Outcome {
    for name in SlaterPair::ALL {
        let r = verify_bailey_pair(&slater_pair(name), 40, 400).map_err(|e| e.to_string())?;
        success(&r)?;
    }
    let a7 = slater_pair(SlaterPair::A7Star);
    for n in (1..=400).step_by(3) {
        ensure(a7.alpha(n).is_empty(), || format!("A7star alpha_{n} is not zero"))?;
    }
    Ok("A2 A4 A6 A7star A8 at n_max=40, N=400; A7star alpha_{3m+1} = 0".into())
}

fn conjugate_pair() -> Outcome {
    let r = verify_conjugate_pair(30, 600).map_err(|e| e.to_string())?;
    success(&r)?;
    Ok(format!("closed = defsum = heine, n <= 30, N=600, {:.0} ms", r.elapsed_ms))
}

fn transforms() -> Outcome {
    let mut notes = Vec::new();
    for name in SlaterPair::ALL {
        let r = bailey_transform_check(&slater_pair(name), 800).map_err(|e| e.to_string())?;
        success(&r)?;
        notes.push(format!("{name}: {}", r.notes));
    }
    Ok(format!("N=800; {}", notes.join("; ")))
}

fn andrews() -> Outcome {
    let r = andrews_ex10_check(10, 500).map_err(|e| e.to_string())?;
    success(&r)?;
    Ok("x = q^k, k = 0..10, N=500".into())
}

fn character_forms() -> Outcome {
    let mut terms = 0;
    for c in CharacterForm::ALL {
        let r = verify_character_form(c, 2000).map_err(|e| e.to_string())?;
        success(&r)?;
        terms += theta_terms(&c.spec(), 2000).map_err(|e| format!("{c}: {e}"))?.len();
    }
    Ok(format!("7 forms at N=2000, {terms} terms asserted integral and real"))
}

fn relation_ok(r: &RelationReport) -> Result<(), String> {
    ensure(r.passed(), || {
        format!("{} p={:?}: {:?}", r.relation_id, r.prime, r.counterexamples.iter().take(3).collect::<Vec<_>>())
    })
}

fn mock7_n_max(p: u64) -> Result<i64, String> {
    let mut n = 0;
    while relations::mock7rels_order(p, n + 1).map_err(|e| e.to_string())? <= 4001 {
        n += 1;
    }
    Ok(n)
}

fn relations_check() -> Outcome {
    let f25 = relations::check_f25(60).map_err(|e| e.to_string())?;
    relation_ok(&f25)?;
    for p in [7, 13, 17, 23] {
        let r = relations::check_chirels_with_sweep(p, 15, Some(1500)).map_err(|e| e.to_string())?;
        relation_ok(&r)?;
    }
    let mut n_maxes = Vec::new();
    for p in [5, 11, 13, 17, 23] {
        let n_max = mock7_n_max(p)?;
        let r = relations::check_mock7rels(p, n_max).map_err(|e| e.to_string())?;
        relation_ok(&r)?;
        n_maxes.push(format!("{p}:{n_max}"));
    }
    let mock5 = relations::check_mock7rels(5, 60).map_err(|e| e.to_string())?;
    ensure(mock5.status == f25.status, || "mock7(5) and f25 disagree on status".into())?;
    let by_index: BTreeMap<(Normalized, i64), (i128, i128)> = mock5
        .values
        .iter()
        .filter(|v| !v.label.contains("= 0 if"))
        .map(|v| ((v.lhs_series, v.lhs_index), (v.lhs, v.rhs)))
        .collect();
    let mut shared = 0;
    for v in &f25.values {
        if let Some(&(lhs, rhs)) = by_index.get(&(v.lhs_series, v.lhs_index)) {
            ensure(lhs == v.lhs && rhs == v.rhs, || format!("{} differs at index {}", v.label, v.lhs_index))?;
            shared += 1;
        }
    }
    ensure(shared >= 3 * 60, || format!("only {shared} shared values"))?;
    Ok(format!(
        "f25(60) N={}; chirels p=7,13,17,23 n_max=15 sweep 1500; mock7 n_max {}; mock7(5) = f25 on {shared} values",
        f25.required_order,
        n_maxes.join(" ")
    ))
}

fn negative_controls() -> Outcome {
    let corrupted = slater_pair(SlaterPair::A4).with_negated_alpha(5);
    let r = verify_bailey_pair(&corrupted, 40, 400).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Fail && r.first_mismatch.is_some(), || "corrupted alpha was not caught".into())?;
    let alpha_at = r.first_mismatch.unwrap().exponent;

    let mut specs = HeckeIdentity::F1id.specs();
    specs[0].exponent.c += 2;
    let started = Instant::now();
    let lhs = eval_specs(&specs, 400).map_err(|e| e.to_string())?;
    let rhs = normalized(Normalized::F1, 400).map_err(|e| e.to_string())?;
    let r2 = VerificationReport::compare("F1id-perturbed", &lhs, &rhs, started);
    ensure(r2.status == Status::Fail && r2.first_mismatch.is_some(), || "perturbed spec was not caught".into())?;
    Ok(format!(
        "corrupted A4 fails at q^{alpha_at}; perturbed F1id fails at q^{}",
        r2.first_mismatch.unwrap().exponent
    ))
}

fn end_to_end() -> Outcome {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_mocktheta"))
        .args(["verify", "all", "--terms", "1000"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    within(elapsed, 60.0, "verify all")?;
    Ok(format!("exit 0 in {:.1} s", elapsed.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("golden expansions", golden),
        ("pentagonal oracle", pentagonal),
        ("dual Eulerian forms", dual_forms),
        ("chi01 double sums", chi01),
        ("seventh order double sums", mock7_hecke),
        ("Bailey pairs", bailey_pairs),
        ("conjugate pair", conjugate_pair),
        ("Bailey transform chains", transforms),
        ("Andrews Ex. 10", andrews),
        ("character forms", character_forms),
        ("coefficient relations", relations_check),
        ("negative controls", negative_controls),
        ("verify all end to end", end_to_end),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name} [{secs:.2} s]: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2}. {name} [{secs:.2} s]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
