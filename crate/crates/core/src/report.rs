//! Structured pass/fail evidence shared by the finder's lemma checker and
//! the verification harness.

use std::fmt;

/// One checked relation: `pass` records whether `observed` satisfied it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

/// A self-contained verification result.
///
/// `replay` names the generator and parameters (including any seed) that
/// reproduce the subject.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub subject: String,
    pub replay: String,
    pub checks: Vec<Check>,
    pub witnesses: Vec<String>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, replay: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            replay: replay.into(),
            ..Self::default()
        }
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
        pass: bool,
    ) -> bool {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
        pass
    }

    /// Records an equality check.
    pub fn check_eq<T: fmt::Display + PartialEq>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        observed: T,
    ) -> bool {
        let pass = expected == observed;
        self.check(name, expected, observed, pass)
    }

    pub fn witness(&mut self, line: impl Into<String>) {
        self.witnesses.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.witnesses.extend(other.witnesses);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        writeln!(f, "replay: {}", self.replay)?;
        for c in &self.checks {
            writeln!(
                f,
                "check {}: expected {} observed {} {}",
                c.name,
                c.expected,
                c.observed,
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_formatting() {
        let mut r = VerificationReport::new("star(3,8,1)", "gen star r=3 n=8 k=1");
        assert!(r.check_eq("min_degree", 6, 6));
        assert!(!r.check_eq("edges", 21, 20));
        r.witness("path: 1 2 3");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let text = r.to_string();
        assert!(text.contains("check edges: expected 21 observed 20 FAIL"));
        assert!(text.ends_with("result: FAIL"));
    }
}
