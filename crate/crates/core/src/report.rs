//! Pass/fail bookkeeping shared by every identity checker.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of witnesses kept per identity; further failures are only counted.
const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over a set of inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub passes: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub unrecorded_failures: usize,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

impl Report {
    pub fn new(identity: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            passes: 0,
            failures: Vec::new(),
            unrecorded_failures: 0,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.unrecorded_failures == 0
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len() + self.unrecorded_failures
    }

    pub fn record_failure(&mut self, inputs: String, lhs: String, rhs: String) {
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(Failure { inputs, lhs, rhs });
        } else {
            self.unrecorded_failures += 1;
        }
    }

    /// Records `lhs == rhs`; `inputs` is only rendered on failure.
    pub fn check_eq<T, F>(&mut self, lhs: &T, rhs: &T, inputs: F) -> bool
    where
        T: PartialEq + fmt::Display,
        F: FnOnce() -> String,
    {
        if lhs == rhs {
            self.passes += 1;
            true
        } else {
            self.record_failure(inputs(), lhs.to_string(), rhs.to_string());
            false
        }
    }

    /// Records `lhs != rhs`, for identities that must fail (non-cocommutativity).
    pub fn check_ne<T, F>(&mut self, lhs: &T, rhs: &T, inputs: F) -> bool
    where
        T: PartialEq + fmt::Display,
        F: FnOnce() -> String,
    {
        if lhs != rhs {
            self.passes += 1;
            true
        } else {
            self.record_failure(
                inputs(),
                lhs.to_string(),
                format!("(expected different) {rhs}"),
            );
            false
        }
    }

    pub fn check(&mut self, condition: bool, inputs: impl FnOnce() -> String) -> bool {
        if condition {
            self.passes += 1;
        } else {
            self.record_failure(inputs(), "false".into(), "true".into());
        }
        condition
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {} ({} passed", self.identity, self.passes)?;
        if !self.ok() {
            write!(f, ", {} failed", self.failure_count())?;
        }
        write!(f, ")")?;
        for w in &self.failures {
            write!(
                f,
                "\n    inputs: {}\n    lhs:    {}\n    rhs:    {}",
                w.inputs, w.lhs, w.rhs
            )?;
        }
        Ok(())
    }
}

pub fn all_ok(reports: &[Report]) -> bool {
    reports.iter().all(Report::ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_capped() {
        let mut r = Report::new("x");
        for i in 0..8 {
            r.check_eq(&i, &(i + 1), || format!("{i}"));
        }
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert_eq!(r.failure_count(), 8);
        assert!(!r.ok());
    }

    #[test]
    fn check_ne_counts_inequality_as_pass() {
        let mut r = Report::new("ne");
        assert!(r.check_ne(&1, &2, String::new));
        assert!(!r.check_ne(&3, &3, String::new));
        assert_eq!(r.passes, 1);
    }
}
