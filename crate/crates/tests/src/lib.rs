//! Reporting for the acceptance run: one PASS/FAIL line per criterion and a
//! non-zero exit status if any criterion failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

#[derive(Default)]
pub struct Report {
    failed: Vec<String>,
    passed: usize,
}

/// Outcome of one criterion: a verdict plus a one-line summary.
pub struct Verdict {
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs `check`, treating a panic as a failure.
    pub fn criterion(&mut self, id: &str, title: &str, check: impl FnOnce() -> Verdict) {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Verdict::new(false, format!("panicked: {}", panic_message(&e))));
        let tag = if verdict.pass { "PASS" } else { "FAIL" };
        println!("{tag} {id} {title} ({}) :: {}", secs(start.elapsed()), verdict.detail);
        if verdict.pass {
            self.passed += 1;
        } else {
            self.failed.push(id.to_string());
        }
    }

    /// Prints a summary and exits with status 1 if anything failed.
    pub fn finish(self) {
        println!("acceptance: {} passed, {} failed {:?}", self.passed, self.failed.len(), self.failed);
        if !self.failed.is_empty() {
            std::process::exit(1);
        }
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn panic_message(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "unknown".into())
}
