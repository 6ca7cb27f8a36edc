//! Axiom check reports with re-checkable witnesses.

use crate::multilinear::MultiLinearMap;
use crate::rational::Rat;

/// Default number of witnesses kept per failing axiom.
pub const DEFAULT_WITNESS_LIMIT: usize = 5;

/// One failing basis tuple with both sides of the identity evaluated there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the tuple the identity was evaluated on.
    pub tuple: Vec<usize>,
    /// Left-hand side value in output coordinates.
    pub lhs: Vec<Rat>,
    /// Right-hand side value in output coordinates.
    pub rhs: Vec<Rat>,
}

/// Result of checking one axiom on all basis tuples.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    /// Stable identifier, e.g. `"fundamental-identity"`.
    pub axiom: String,
    /// Number of basis tuples where the identity fails (all tuples are
    /// checked; witnesses below are capped).
    pub failure_count: usize,
    /// Up to the configured limit of failing tuples, lexicographic order.
    pub witnesses: Vec<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Compare `lhs` and `rhs` tensors; failures are the tuples where they
    /// differ, with both sides recorded.
    pub fn compare(
        axiom: &str,
        lhs: &MultiLinearMap,
        rhs: &MultiLinearMap,
        limit: usize,
    ) -> AxiomCheck {
        let diff = lhs.sub(rhs);
        let (failure_count, bad) = diff.nonzero_tuples(limit);
        let witnesses = bad
            .into_iter()
            .map(|(tuple, _)| Witness {
                lhs: lhs.value_at(&tuple).to_vec(),
                rhs: rhs.value_at(&tuple).to_vec(),
                tuple,
            })
            .collect();
        AxiomCheck {
            axiom: axiom.to_string(),
            failure_count,
            witnesses,
        }
    }

    /// Check that `expr` vanishes identically; witnesses carry the nonzero
    /// value as the left side and zero as the right side.
    pub fn vanishes(axiom: &str, expr: &MultiLinearMap, limit: usize) -> AxiomCheck {
        let (failure_count, bad) = expr.nonzero_tuples(limit);
        let witnesses = bad
            .into_iter()
            .map(|(tuple, vals)| Witness {
                rhs: vec![num_traits::Zero::zero(); vals.len()],
                lhs: vals,
                tuple,
            })
            .collect();
        AxiomCheck {
            axiom: axiom.to_string(),
            failure_count,
            witnesses,
        }
    }
}

/// Outcome of running a family of axiom checks. A failing structure is a
/// report, not an error.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    /// Prefix every axiom id, e.g. to tag which of two brackets was checked.
    pub fn prefixed(mut self, prefix: &str) -> AxiomReport {
        for c in &mut self.checks {
            c.axiom = format!("{prefix}{}", c.axiom);
        }
        self
    }

    pub fn failing_axioms(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom.as_str())
            .collect()
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}
