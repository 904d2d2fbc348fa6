//! One PASS/FAIL line per acceptance criterion.
//!
//! Every comparison is exact equality in Q(q, t, α, u); there is no floating
//! point anywhere, so the numeric tolerance is zero.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qhurwitz::scalar::ratio;
use qhurwitz::verify::{determinism_commands, run, Criterion, VerifyOptions};

/// Exact arithmetic: results must agree to the last bit.
const TOLERANCE: u32 = 0;
const N_MAX: usize = 5;
const D_MAX: usize = 3;
/// `n` up to this bound is checked with symbolic `q, t`; above it at points.
const SYMBOLIC_N_MAX: usize = 4;
const TRIALS: usize = 5;
const SEED: u64 = 20_240_917;

fn options() -> VerifyOptions {
    VerifyOptions {
        n_max: N_MAX,
        d_max: D_MAX,
        c_lists: vec![vec![ratio(1, 1)], vec![ratio(1, 1), ratio(1, 2)], vec![ratio(-2, 3)]],
        trials: TRIALS,
        seed: SEED,
        symbolic_n_max: SYMBOLIC_N_MAX,
    }
}

/// Run the installed binary twice per command line and compare stdout.
fn binary_determinism() -> Result<usize, String> {
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut runs = 0;
    for args in determinism_commands() {
        let once = || {
            Command::new(env!("CARGO_BIN_EXE_qhurwitz"))
                .args(&args)
                .env("QHURWITZ_CACHE", cache.path())
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (once()?, once()?);
        if !a.status.success() || a.stdout != b.stdout || a.status.code() != b.status.code() {
            return Err(format!("`qhurwitz {}` differs between runs", args.join(" ")));
        }
        runs += 1;
    }
    Ok(runs)
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let opts = options();
    let mut all = true;
    println!("acceptance: n <= {N_MAX}, d <= {D_MAX}, symbolic n <= {SYMBOLIC_N_MAX}, {TRIALS} points, seed {SEED}");
    for criterion in Criterion::ALL {
        let start = Instant::now();
        let (passed, detail) = match run(criterion, &opts) {
            Ok(report) => {
                let mut passed = report.passed();
                let checks = report.checks.len();
                let mut detail = format!("{checks} checks");
                if let Some(cx) = &report.counterexample {
                    detail.push_str(&format!("; counterexample: {cx}"));
                }
                if criterion == Criterion::Determinism {
                    match binary_determinism() {
                        Ok(k) => detail.push_str(&format!(", {k} binary runs twice")),
                        Err(e) => {
                            passed = false;
                            detail.push_str(&format!("; {e}"));
                        }
                    }
                }
                (passed, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        all &= passed;
        println!(
            "criterion {} {:<22} {}  ({}, {:.2}s)",
            criterion.number(),
            criterion.name(),
            if passed { "PASS" } else { "FAIL" },
            detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
