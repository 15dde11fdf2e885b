//! Numerical semigroups with required and forbidden elements.
//!
//! Given a set `A` of required elements and either a Frobenius number `F` or
//! a finite forbidden set `B`, this crate enumerates
//!
//! * ℐ(A, F), the irreducible semigroups with Frobenius number `F` containing `A`
//!   ([`irreducible`]),
//! * 𝒮(A, F), all semigroups with Frobenius number `F` containing `A`
//!   ([`class`]),
//! * ℳ(A, B), the maximal semigroups containing `A` and disjoint from `B`
//!   ([`maximal`]),
//!
//! and solves the partition hitting-set problem: find the minimal sets `K`
//! that avoid ⟨A⟩ and contain a summand of every partition of every `b ∈ B`
//! ([`partition`]). The [`oracle`] module holds brute-force references for
//! cross-checking all of the above.
//!
//! ```
//! use numsemigroup::{enumerate_irreducibles, GenSet};
//!
//! let found = enumerate_irreducibles(&GenSet::from([4]), 11).unwrap();
//! let msgs: Vec<_> = found.iter().map(|s| s.to_string()).collect();
//! assert_eq!(msgs, ["⟨4,6,9⟩", "⟨4,5⟩", "⟨2,13⟩"]);
//! ```

pub mod apery;
pub mod class;
pub mod error;
pub mod genset;
pub mod irreducible;
pub mod maximal;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod record;
pub mod semigroup;

pub use apery::{apery, semigroup_from_theta, theta, AperyVector};
pub use class::{class_of, enumerate_with_frobenius, enumerate_with_frobenius_with, gamma, t_of, FrobeniusClass};
pub use error::{Combination, Error, Result};
pub use genset::{GenSet, Submonoid};
pub use irreducible::{
    c_of, delta, enumerate_irreducibles, enumerate_irreducibles_with, is_irreducible, AlphaValue,
    IrreducibleContext,
};
pub use maximal::{check_feasible, maximal_avoiding, maximal_avoiding_with, minimal_tuples, theta_family, AvoidanceProblem};
pub use par::Workers;
pub use partition::{check_solution, is_minimal_solution, solve, solve_with, unhit_partition, SolutionSet};
pub use record::{OutputRecord, RecordKind};
pub use semigroup::NumericalSemigroup;
