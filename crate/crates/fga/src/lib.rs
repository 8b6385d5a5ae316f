//! Finitely generated abelian groups in invariant-factor form and described
//! subgroups of them.
//!
//! Groups are compared by isomorphism type only. Subgroups are described
//! symbolically ([`SubgroupSpec`]) and resolved against an [`Ambient`] group
//! with a fixed choice of cyclic summands, which gives exact index,
//! containment and isomorphism-type computations.

mod expr;
mod group;
mod lattice;
mod subgroup;

pub use expr::{AtomName, Dims, ExprError, GeneratorExpr};
pub use group::{
    direct_sum, gcd, is_prime, lcm_pair, multiple_subgroup, order, prime_powers, primary_part, FgAbGroup, Order,
};
pub use subgroup::{index, multiple_index, Ambient, Resolved, SubGen, SubgroupSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgaError {
    #[error("invariant factor {0} is below 2")]
    BadFactor(u64),
    #[error("invariant factor {0} does not divide {1}")]
    NotDivisible(u64, u64),
    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("multiplier 0 is not allowed, use the zero subgroup")]
    ZeroMultiplier,
    #[error("subgroup cannot be resolved: {0}")]
    Unresolvable(String),
    #[error("integer overflow")]
    Overflow,
}
