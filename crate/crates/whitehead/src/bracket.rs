//! [γ_nα, i_F] for α ∈ π_k(S^{d(n+1)−1}).

use std::fmt;

use fga::{AtomName, GeneratorExpr, Order};
use tables::{NotCovered, SpaceId};

use crate::orders::{whitehead_order_iota, Family};

/// Value of the bracket: zero, or
/// `γ_n(coefficient·principal + h0_factor∘h₀α)` with the second term present
/// only when the caller says the Hopf-Hilton term survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bracket {
    Zero,
    Value { coefficient: i64, principal: GeneratorExpr, h0_factor: Option<GeneratorExpr> },
}

impl Bracket {
    pub fn is_zero(&self) -> bool {
        matches!(self, Bracket::Zero)
    }

    /// The bracket as a class of π_k(FP^n), when it has no h₀ term.
    pub fn element(&self) -> Option<GeneratorExpr> {
        match self {
            Bracket::Zero => None,
            Bracket::Value { coefficient, principal, h0_factor: None } => {
                Some(principal.clone().scaled(*coefficient).gamma())
            }
            Bracket::Value { .. } => None,
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Zero => write!(f, "0"),
            Bracket::Value { coefficient, principal, h0_factor } => {
                write!(f, "γ({}·{}", coefficient, principal.pretty())?;
                if let Some(h) = h0_factor {
                    write!(f, " + {}∘h₀α", h.pretty())?;
                }
                write!(f, ")")
            }
        }
    }
}

fn dim_of(field: Family) -> u32 {
    match field {
        Family::R => 1,
        Family::C => 2,
        Family::H => 4,
    }
}

/// Lemma Y. Signs are only kept where the formula fixes them (the real case).
pub fn lemma_y_bracket(field: Family, n: u32, alpha: &GeneratorExpr, h0_vanishes: bool) -> Result<Bracket, NotCovered> {
    let top = dim_of(field) * (n + 1) - 1;
    let dims = alpha.dims().ok().filter(|d| d.target == Some(top)).ok_or(NotCovered::new(SpaceId::Sphere(top), n))?;
    let k = dims.source;
    if field != Family::H && n % 2 == 1 {
        return Ok(Bracket::Zero);
    }
    // h₀α lies in π_k(S^{2·top−1}), which is zero below that dimension
    let h0_dead = h0_vanishes || k < 2 * top - 1;
    let iota = GeneratorExpr::iota(top);
    let is_iota = *alpha == iota;
    let (coefficient, principal, left) = match field {
        Family::R => {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            (2 * sign, alpha.clone(), iota.clone())
        }
        Family::C => {
            let eta = GeneratorExpr::atom(AtomName::Eta, top);
            (1, eta.clone().compose(alpha.clone().suspend()), eta)
        }
        Family::H => {
            let nu = GeneratorExpr::atom(AtomName::Nu, top);
            let e3 = alpha.clone().suspend().suspend().suspend();
            let principal = if is_iota { nu.clone() } else { nu.clone().compose(e3) };
            (n as i64 + 1, principal, nu)
        }
    };
    let h0_factor = if h0_dead {
        None
    } else {
        match whitehead_order_iota(top, &left) {
            Ok(Order::Finite(1)) => None,
            _ => Some(GeneratorExpr::Whitehead(Box::new(iota), Box::new(left))),
        }
    };
    if field == Family::H && is_iota && (n + 1) % 24 == 0 && h0_factor.is_none() {
        return Ok(Bracket::Zero);
    }
    Ok(Bracket::Value { coefficient, principal, h0_factor })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_odd_is_zero() {
        for n in [1, 3, 5, 9] {
            let a = GeneratorExpr::iota(n);
            assert!(lemma_y_bracket(Family::R, n, &a, false).unwrap().is_zero());
        }
    }

    #[test]
    fn real_two() {
        let b = lemma_y_bracket(Family::R, 2, &GeneratorExpr::iota(2), true).unwrap();
        assert_eq!(b.element().unwrap().to_string(), "gamma(sc(-2,iota(2)))");
    }

    #[test]
    fn quaternionic_iota() {
        let b = lemma_y_bracket(Family::H, 23, &GeneratorExpr::iota(95), true).unwrap();
        assert!(b.is_zero());
        let b = lemma_y_bracket(Family::H, 2, &GeneratorExpr::iota(11), true).unwrap();
        assert_eq!(b.element().unwrap().to_string(), "gamma(sc(3,nu(11)))");
    }

    #[test]
    fn complex_even_carries_eta() {
        let a = GeneratorExpr::parse("nu(5)").unwrap();
        let b = lemma_y_bracket(Family::C, 2, &a, false).unwrap();
        assert_eq!(b.element().unwrap().to_string(), "gamma(cmp(eta(5),E(nu(5))))");
        assert!(lemma_y_bracket(Family::C, 3, &GeneratorExpr::parse("nu(7)").unwrap(), false).unwrap().is_zero());
    }

    #[test]
    fn surviving_h0_term() {
        let a = GeneratorExpr::parse("cmp(sigma(9),sigma(16))").unwrap();
        let b = lemma_y_bracket(Family::C, 4, &a, false).unwrap();
        assert!(b.element().is_none());
        assert!(b.to_string().contains("h₀α"));
    }
}
