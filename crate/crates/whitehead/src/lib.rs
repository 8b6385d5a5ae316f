//! Orders of Whitehead products [ι_n, α], orders of the connecting maps of the
//! classical sphere fibrations, and the Whitehead center groups P_k(S^n).
//!
//! Order formulas are [`PiecewiseRule`]s so that their arms can be scanned for
//! overlaps and gaps.

mod bracket;
mod center;
pub mod elem;
pub mod orders;
mod result;
pub mod rules;

pub use bracket::{lemma_y_bracket, Bracket};
pub use center::p_group_sphere;
pub use orders::{
    delta_fact, delta_order, delta_vs_whitehead_gap, whitehead_fact, whitehead_order_iota, Family, WhiteheadOrderFact,
};
pub use result::{GroupResult, Status};
pub use rules::{Condition, PiecewiseRule, Val};
