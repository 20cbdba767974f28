//! Verification reports.
//!
//! Every verifier in this crate enumerates basis tuples and returns *all*
//! violations, each with the exact residual (left side minus right side of
//! the identity). There are no norms anywhere: arithmetic is exact, so a
//! violation either is or is not, and the residual is diagnostic data for
//! hand-entered algebras.

use crate::scalar::Scalar;

/// A single failed identity instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<S> {
    /// Which identity failed, e.g. `"lts-1"`, `"rep-7"`, `"relative-rb"`.
    pub identity: &'static str,
    /// The basis tuple (0-based indices) at which it failed.
    pub args: Vec<usize>,
    /// Exact residual, flattened when the identity is operator-valued.
    pub residual: Vec<S>,
}

/// Outcome of a verifier run: ok iff no violations.
#[derive(Debug, Clone, PartialEq)]
pub struct Report<S> {
    pub violations: Vec<Violation<S>>,
}

impl<S: Scalar> Report<S> {
    pub fn new() -> Self {
        Report {
            violations: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, identity: &'static str, args: &[usize], residual: Vec<S>) {
        self.violations.push(Violation {
            identity,
            args: args.to_vec(),
            residual,
        });
    }

    /// Record `residual` only when it is nonzero.
    pub fn check(&mut self, identity: &'static str, args: &[usize], residual: Vec<S>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.record(identity, args, residual);
        }
    }

    pub fn merge(&mut self, other: Report<S>) {
        self.violations.extend(other.violations);
    }
}

impl<S: Scalar> Default for Report<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> std::fmt::Display for Report<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            let args: Vec<String> = v.args.iter().map(|i| format!("e{}", i + 1)).collect();
            let res: Vec<String> = v.residual.iter().map(|x| x.to_string()).collect();
            writeln!(
                f,
                "  {} at ({}): residual ({})",
                v.identity,
                args.join(","),
                res.join(",")
            )?;
        }
        Ok(())
    }
}
