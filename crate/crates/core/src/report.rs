//! Structured outcome of an identity check over a parameter range.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::BivariatePolynomial;

/// One checked instance of an identity, keyed by its named parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub passed: bool,
}

impl CaseOutcome {
    pub fn key(&self) -> (&str, Vec<i64>) {
        (&self.identity, self.params.iter().map(|(_, v)| *v).collect())
    }
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "ok  " } else { "FAIL" }, self.identity)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub lhs: BivariatePolynomial,
    pub rhs: BivariatePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    /// Human-readable description of the parameter range covered.
    pub range: String,
    pub cases: Vec<CaseOutcome>,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            range: range.into(),
            cases: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn cases_checked(&self) -> usize {
        self.cases.len()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Compares `lhs` and `rhs` exactly and records the outcome.
    pub fn check(
        &mut self,
        identity: &str,
        params: &[(&str, i64)],
        lhs: &BivariatePolynomial,
        rhs: &BivariatePolynomial,
    ) -> &CaseOutcome {
        let params: Vec<(String, i64)> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let passed = lhs == rhs;
        if !passed {
            self.failures.push(Failure {
                identity: identity.to_string(),
                params: params.clone(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
        self.cases.push(CaseOutcome {
            identity: identity.to_string(),
            params,
            passed,
        });
        self.cases.last().unwrap()
    }

    /// Appends the cases and failures of `other`, keeping this report's name and range.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.cases.extend(other.cases);
        self.failures.extend(other.failures);
    }

    /// Orders cases and failures by identity name, then parameter values.
    pub fn sort_cases(&mut self) {
        self.cases.sort_by(|a, b| a.key().cmp(&b.key()));
        self.failures.sort_by(|a, b| {
            let ka: Vec<i64> = a.params.iter().map(|p| p.1).collect();
            let kb: Vec<i64> = b.params.iter().map(|p| p.1).collect();
            (&a.identity, ka).cmp(&(&b.identity, kb))
        });
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} [{}]: {} cases, {} failures: {}",
            self.name,
            self.range,
            self.cases_checked(),
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
