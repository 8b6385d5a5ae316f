//! Gottlieb groups G_k(FP^n) and G′_k(FP^n) = G_k ∩ γ_n∗π_k(S^{d(n+1)−1}).
//!
//! Every answer sits in the lattice G_lower ⊆ G ⊆ G_upper. Upper bounds come
//! from G ⊆ P and, on the sphere part, from G′ ⊆ γ_n∗G_k(S^{d(n+1)−1}); lower
//! bounds from the stated ⊇ results and from Ker Δ.

mod engine;
mod flag;
pub mod rules;

pub use engine::{g_group, g_prime};
pub use flag::g_equals_p_flag;
pub use projspace::Field;
pub use rules::{Bound, GBoundRule, Scope, Upper};
pub use whitehead::{GroupResult, Status};
