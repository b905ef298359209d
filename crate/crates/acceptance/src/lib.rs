// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Runner for the acceptance suite in `tests/acceptance.rs`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Duration;

/// Prints one `criterion N [PASS|FAIL]` line and returns whether every check
/// held.
pub fn report(
    id: u32,
    name: &str,
    checks: &[(&str, bool)],
    detail: &str,
    elapsed: Duration,
) -> bool {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
    let suffix = if failed.is_empty() {
        String::new()
    } else {
        format!("; failed: {}", failed.join(", "))
    };
    println!(
        "criterion {id} [{verdict}] {name}: {detail}; {:.2} s{suffix}",
        elapsed.as_secs_f64()
    );
    failed.is_empty()
}

/// Criterion number and its check.
pub type Criterion = (u32, fn() -> bool);

/// Runs the criteria one after another, so that wall-clock budgets are not
/// shared, and summarises. A panicking criterion counts as failed.
pub fn run_all(criteria: &[Criterion]) -> ExitCode {
    let mut failed = Vec::new();
    for &(id, criterion) in criteria {
        match catch_unwind(AssertUnwindSafe(criterion)) {
            Ok(true) => {}
            Ok(false) => failed.push(id),
            Err(_) => {
                println!("criterion {id} [FAIL] panicked");
                failed.push(id);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed{}",
        criteria.len() - failed.len(),
        criteria.len(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("; failing: {failed:?}")
        }
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
