//! π_k(FP^n) for F = R, C, H and the Whitehead center groups P_k(FP^n).
//!
//! π_k(FP^n) is split as γ_n∗π_k(S^{d(n+1)−1}) ⊕ i_F∗Eπ_{k−1}(S^{d−1}); the
//! two parts are tagged `gamma` and `i` in every [`fga::Ambient`] built here.

mod assemble;
mod decompose;
mod field;
mod subgroups;
pub mod rules;

pub use assemble::{p_double_prime, p_group, p_prime, p_prime_hp};
pub use decompose::{decompose_pi, ProjDecomposition};
pub use field::Field;
pub use subgroups::{l_subgroups, m_subgroup, q_subgroup, LSubgroups};
pub use whitehead::{GroupResult, Status};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error(transparent)]
    NotCovered(#[from] tables::NotCovered),
    #[error("KP^2 is not a projective space of this family")]
    Cayley,
    #[error("{0}")]
    Domain(String),
}

pub const GAMMA: &str = "gamma";
pub const FIBER: &str = "i";
