//! Structured pass/fail reports for identity checks.

use std::fmt;

/// One failing input with the two sides that were supposed to agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(input: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Witness {
            input: input.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// The result of checking one identity over a truncated basis: what was
/// checked, up to which degree, how many inputs, and every failure found.
#[derive(Clone, Debug)]
pub struct CheckReport {
    identity: String,
    degree_cap: usize,
    checked: usize,
    failures: Vec<Witness>,
}

impl CheckReport {
    pub fn new(identity: impl Into<String>, degree_cap: usize) -> Self {
        CheckReport {
            identity: identity.into(),
            degree_cap,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Record one checked input; the witness is only materialized on failure.
    pub fn tally(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn failures(&self) -> &[Witness] {
        &self.failures
    }

    /// Replace the identity label, keeping tallies and witnesses.
    pub fn relabel(report: CheckReport, identity: impl Into<String>) -> CheckReport {
        CheckReport {
            identity: identity.into(),
            ..report
        }
    }

    /// Mark this report as an expected failure turned into a pass: used for
    /// negative controls, where detecting the failure is the success.
    pub fn into_expected_failure(self) -> CheckReport {
        let detected = !self.passed();
        let mut out = CheckReport::new(
            format!("negative control rejected: {}", self.identity),
            self.degree_cap,
        );
        out.tally(detected, || {
            Witness::new(
                "negative control",
                "no violation detected",
                "a violation was expected",
            )
        });
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} (degree <= {}, {} inputs)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.identity,
            self.degree_cap,
            self.checked
        )?;
        const SHOWN: usize = 5;
        for w in self.failures.iter().take(SHOWN) {
            writeln!(f, "  at {}: LHS = {} ; RHS = {}", w.input, w.lhs, w.rhs)?;
        }
        if self.failures.len() > SHOWN {
            writeln!(f, "  ... and {} more failures", self.failures.len() - SHOWN)?;
        }
        Ok(())
    }
}
