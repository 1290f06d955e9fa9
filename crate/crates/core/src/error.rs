//! Shared error type and enumeration budgets.

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and enumeration layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {lhs} vs {rhs}")]
    ConductorMismatch { lhs: u64, rhs: u64 },
    #[error("conductor {from} does not divide {into}")]
    NonDivisibleConductor { from: u64, into: u64 },
    #[error("inexact polynomial division (remainder has {remainder_terms} terms)")]
    InexactDivision { remainder_terms: usize },
    #[error("series constant term is not invertible")]
    NonInvertibleConstant,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("tableau shape mismatch")]
    ShapeMismatch,
    #[error("root of unity has order {actual}, expected {expected}")]
    OrderMismatch { expected: u64, actual: u64 },
    #[error("coefficients are not rational integers: {0}")]
    NonIntegral(String),
    #[error("operation requires d = {required}, got d = {got}")]
    UnsupportedD { required: u32, got: u32 },
    #[error("invalid window word: {0}")]
    InvalidWord(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration limits.  Exceeding a budget is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Cap on `|G(d,1,n)| = d^n n!` for group enumerations, and on
    /// `|W| * k * l` for orbit scans.
    pub max_group_order: u128,
    /// Cap on the total cell count of a multipartition for tableau
    /// enumerations.
    pub max_cells: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_group_order: 1_000_000,
            max_cells: 12,
        }
    }
}

impl Budget {
    pub fn check_group_order(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_group_order {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                limit: self.max_group_order,
            });
        }
        Ok(())
    }

    pub fn check_cells(&self, what: &'static str, needed: usize) -> Result<()> {
        if needed > self.max_cells {
            return Err(Error::BudgetExceeded {
                what,
                needed: needed as u128,
                limit: self.max_cells as u128,
            });
        }
        Ok(())
    }
}
