//! Pass/fail records for exhaustive law checks.

use std::fmt;

/// One law checked over a finite family of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    pub instances: u64,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for LawCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass  {} ({} instances)", self.law, self.instances),
            Some(w) => write!(f, "FAIL  {} ({} instances) witness: {}", self.law, self.instances, w),
        }
    }
}

/// Accumulates a law over instances, keeping the first failure.
#[derive(Debug)]
pub struct LawTally {
    law: String,
    instances: u64,
    witness: Option<String>,
}

impl LawTally {
    pub fn new(law: impl Into<String>) -> Self {
        LawTally {
            law: law.into(),
            instances: 0,
            witness: None,
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn finish(self) -> LawCheck {
        LawCheck {
            law: self.law,
            instances: self.instances,
            witness: self.witness,
        }
    }
}

/// A list of law checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub checks: Vec<LawCheck>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn push(&mut self, check: LawCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Verdict) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
