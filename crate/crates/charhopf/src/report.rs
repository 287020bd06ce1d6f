//! Outcome of an exhaustive identity check.

/// Failures carry printable counterexamples; an identity that fails here
/// falsifies a theorem and indicates a bug, so it is reported rather than
/// thrown.
#[derive(Debug)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(counterexample());
        }
    }
}
