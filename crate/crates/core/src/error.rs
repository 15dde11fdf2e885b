use std::fmt;

use thiserror::Error;

/// `value = c₁·g₁ + … + cₖ·gₖ`, a certificate that `value` lies in a submonoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    pub value: u32,
    /// `(coefficient, generator)` pairs with non-zero coefficients, generators ascending.
    pub terms: Vec<(u32, u32)>,
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.value)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, g)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{c}·{g}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("closure violated: {x} and {y} are members but {} is not", x + y)]
    ClosureViolation { x: u32, y: u32 },
    #[error("the Frobenius number {0} cannot be a member")]
    FrobeniusPresent(u32),
    #[error("0 must be a member")]
    MissingZero,
    #[error("{value} lies outside the table range [0, {bound}]")]
    OutOfRange { value: u32, bound: u32 },
    #[error("generators have gcd {0}; the generated monoid has infinite complement")]
    NotNumerical(u32),
    #[error("{0} is not a non-zero member of the semigroup")]
    NotAMember(u32),
    #[error("vector is not the Apéry vector of any semigroup containing {modulus}")]
    NotInImage { modulus: u32 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("operation undefined on the full semigroup ℕ")]
    FullSemigroup,
    #[error("infeasible: {0} ∈ ⟨A⟩")]
    Infeasible(Combination),
    #[error("the root C(A,F) has no parent")]
    AtRoot,
    #[error("{0} is not in the removable set D(S)")]
    NotInD(u32),
    #[error("capacity exceeded: {what} = {got} exceeds limit {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: u64,
        limit: u64,
    },
    #[error("the set is not a solution")]
    NotASolution,
    #[error("the forbidden set B must be non-empty")]
    EmptyForbidden,
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_display() {
        let c = Combination {
            value: 8,
            terms: vec![(2, 4)],
        };
        assert_eq!(c.to_string(), "8 = 2·4");
        let c = Combination {
            value: 13,
            terms: vec![(1, 4), (1, 9)],
        };
        assert_eq!(Error::Infeasible(c).to_string(), "infeasible: 13 = 4 + 9 ∈ ⟨A⟩");
    }
}
