//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any failed.

use std::process::Command;
use std::time::{Duration, Instant};

use harmonic_cv::derivation::{dual_identity_check, pairing, term_rewrite_check};
use harmonic_cv::dual::{derivative_of_binomial, derivative_of_binomial_closed};
use harmonic_cv::kernels::{cv_verify, kernel_verify, WeightKind};
use harmonic_cv::sampling::{Bounds, ParamSampler, DEFAULT_SEED};
use harmonic_cv::theorems::{family_lhs, relation_check, theorem_rhs, Relation};
use harmonic_cv::{theorem_verify, Rational, Status, TheoremId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ac1_theorem_sweep() -> Outcome {
    const N_MAX: u64 = 500;
    const BUDGET: Duration = Duration::from_secs(60);
    let started = Instant::now();
    let mut checks = 0;
    for id in TheoremId::all() {
        for n in 0..=N_MAX {
            let r = theorem_verify(id, n);
            if !r.passed() {
                return Err(format!("{} ({}) fails at n={n}: lhs={} rhs={}", id, id.label(), r.lhs, r.rhs));
            }
            checks += 1;
        }
    }
    let elapsed = started.elapsed();
    if elapsed > BUDGET {
        return Err(format!("{checks} checks exact but took {elapsed:?} > {BUDGET:?}"));
    }
    Ok(format!("{checks} exact equalities, 0 <= n <= {N_MAX}, {:.1}s single worker", elapsed.as_secs_f64()))
}

fn ac2_spot_values() -> Outcome {
    // each value is recomputed below by the brute-force summer
    let table: [(&str, u64, Rational); 12] = [
        ("thm-a", 1, Rational::frac(-3, 1)),
        ("thm-b", 1, Rational::frac(-3, 1)),
        ("thm-c", 1, Rational::frac(-3, 1)),
        ("thm-d", 0, Rational::frac(1, 1)),
        ("thm-e", 1, Rational::frac(-22, 9)),
        ("thm-f", 1, Rational::frac(-22, 9)),
        ("thm-g", 2, Rational::frac(-23, 32)),
        ("thm-h", 1, Rational::frac(-3, 4)),
        ("thm-i", 1, Rational::frac(-3, 4)),
        ("thm-j", 1, Rational::frac(-3, 8)),
        ("thm-k", 1, Rational::frac(-11, 8)),
        ("thm-l", 1, Rational::frac(-11, 8)),
    ];
    for (label, n, expected) in &table {
        let id: TheoremId = label.parse().map_err(|e| format!("{e}"))?;
        let brute = family_lhs(id.family(), id.t(), *n).map_err(|e| e.to_string())?;
        let closed = theorem_rhs(id, *n);
        if &brute != expected || &closed != expected {
            return Err(format!("{label} n={n}: expected {expected}, brute {brute}, closed {closed}"));
        }
    }
    Ok(format!("{} fixtures match brute force and closed form", table.len()))
}

fn ac3_kernel_properties() -> Outcome {
    const REQUIRED: usize = 500;
    const N_MAX: u64 = 30;
    let mut sampler = ParamSampler::new(DEFAULT_SEED, Bounds { numerator: 10, denominator: 10 });
    let mut lines = Vec::new();
    for kind in WeightKind::ALL {
        let (mut ok, mut skipped) = (0usize, 0usize);
        while ok < REQUIRED {
            let p = sampler.kernel_params(N_MAX);
            let r = kernel_verify(kind, &p);
            match r.status {
                Status::Ok if r.equal => ok += 1,
                Status::PoleSkipped => skipped += 1,
                _ => return Err(format!("{kind} fails at {}: lhs={} rhs={}", p.summary(), r.lhs, r.rhs)),
            }
            if skipped > REQUIRED {
                return Err(format!("{kind}: too many pole parameters ({skipped})"));
            }
        }
        lines.push(format!("{kind}:{ok}/{skipped}"));
    }
    Ok(format!("ok/pole-skipped per kind: {}", lines.join(" ")))
}

fn ac4_chu_vandermonde() -> Outcome {
    let mut sampler = ParamSampler::new(DEFAULT_SEED, Bounds::default());
    for _ in 0..500 {
        let (x, y) = (sampler.rational(), sampler.rational());
        let n = sampler.size(30);
        let r = cv_verify(&x, &y, n);
        if !r.passed() {
            return Err(format!("x={x} y={y} n={n}: lhs={} rhs={}", r.lhs, r.rhs));
        }
    }
    Ok("500 random (x, y), n <= 30".into())
}

fn ac5_derivative_relation() -> Outcome {
    let mut checks = 0;
    for r in 0..=100u64 {
        for s in 0..=r {
            let dual = derivative_of_binomial(r, s).map_err(|e| e.to_string())?;
            let closed = derivative_of_binomial_closed(r, s).map_err(|e| e.to_string())?;
            if dual != closed {
                return Err(format!("r={r} s={s}: slope {dual} vs {closed}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} pairs 0 <= s <= r <= 100"))
}

fn ac6_bridge_relations() -> Outcome {
    let mut checks = 0;
    for n in 0..=200u64 {
        for k in 0..=n {
            for rel in Relation::ALL {
                // k-only relations are covered once, at n = k
                if !rel.uses_n() && k != n {
                    continue;
                }
                let r = relation_check(rel, k, n).map_err(|e| e.to_string())?;
                if !r.passed() {
                    return Err(format!("{} k={k} n={n}: {} vs {}", rel.name(), r.lhs, r.rhs));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} checks over 0 <= k <= n <= 200"))
}

fn ac7_derivation_replay() -> Outcome {
    let mut dual_checks = 0;
    let mut term_checks = 0;
    for id in TheoremId::all() {
        let (kind, spec) = pairing(id);
        for n in 0..=100u64 {
            let r = dual_identity_check(kind, spec, n);
            if !r.passed() {
                return Err(format!("{spec}/{kind} n={n}: {} vs {} ({:?})", r.lhs, r.rhs, r.status));
            }
            dual_checks += 1;
        }
        for n in 0..=60u64 {
            for k in 0..=n {
                let r = term_rewrite_check(spec, kind, n, k).map_err(|e| e.to_string())?;
                if !r.passed() {
                    return Err(format!("{spec}/{kind} n={n} k={k}: {} vs {}", r.lhs, r.rhs));
                }
                term_checks += 1;
            }
        }
    }
    Ok(format!("{dual_checks} dual identities (n <= 100), {term_checks} term rewrites (k <= n <= 60)"))
}

fn ac8_determinism() -> Outcome {
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_harmonic-cv"))
            .args(["verify-kernels", "--samples", "500", "--seed", "42", "--format", "json"])
            .args(extra)
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    let first = run(&[])?;
    let second = run(&[])?;
    let parallel = run(&["--parallel", "8"])?;
    if first.is_empty() {
        return Err("empty report".into());
    }
    if first != second {
        return Err("two sequential runs differ".into());
    }
    if first != parallel {
        return Err("--parallel 8 output differs from sequential".into());
    }
    let lines = first.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count();
    Ok(format!("3 runs byte-identical ({lines} records, {} bytes)", first.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 theorem sweep n<=500", ac1_theorem_sweep),
        ("AC2 spot values", ac2_spot_values),
        ("AC3 kernel property suite", ac3_kernel_properties),
        ("AC4 Chu-Vandermonde base", ac4_chu_vandermonde),
        ("AC5 derivative of binomial", ac5_derivative_relation),
        ("AC6 bridge relations", ac6_bridge_relations),
        ("AC7 derivation replay", ac7_derivation_replay),
        ("AC8 report determinism", ac8_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
