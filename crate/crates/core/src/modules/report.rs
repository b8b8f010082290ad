use serde::Serialize;

use crate::cyclo::CycNumber;
use crate::matrix::Matrix;

/// First nonzero entry of a residual matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: CycNumber,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub relation: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a batch of exact checks, in the order they were run.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `residual == 0`.
    pub fn residual(&mut self, relation: impl Into<String>, residual: &Matrix) {
        let witness = residual
            .first_nonzero()
            .map(|(row, col, value)| Witness { row, col, value });
        self.checks.push(Check {
            relation: relation.into(),
            pass: witness.is_none(),
            witness,
            detail: None,
        });
    }

    /// Records `lhs == rhs`, with `lhs - rhs` as the residual.
    pub fn equal(&mut self, relation: impl Into<String>, lhs: &Matrix, rhs: &Matrix) {
        self.residual(relation, &(lhs - rhs));
    }

    pub fn flag(&mut self, relation: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(Check {
            relation: relation.into(),
            pass,
            witness: None,
            detail,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
