//! Piecewise multipliers m, meaning m·π (0 is the zero subgroup), for the
//! closed-form cells of P_k(CP^n) and P′_k(HP^n).

use fga::{gcd, lcm_pair, SubgroupSpec};
use whitehead::{Condition as C, PiecewiseRule, Val};

pub type Rule = PiecewiseRule<Val>;

fn odd() -> C {
    C::congruent(2, &[1])
}

fn even() -> C {
    C::congruent(2, &[0])
}

/// P_{2n+1+s}(CP^n) for 0 ≤ s ≤ 7, n ≥ 2.
pub fn ex2(s: u32) -> Option<Rule> {
    let dom = C::AtLeast(2);
    Some(match s {
        0 => PiecewiseRule::new("ex2(1)", "Thm. ex2(1)", dom).arm(C::Eq(3), Val::Const(1)).otherwise(Val::Const(2)),
        1 | 2 => PiecewiseRule::new("ex2(2)", "Thm. ex2(2)", dom)
            .arm(even(), Val::Const(0))
            .arm(odd(), Val::Const(1)),
        3 => PiecewiseRule::new("ex2(3)", "Thm. ex2(3)", dom)
            .arm(C::congruent(4, &[3]).or(C::PowTwoMinus { c: 2, i0: 2 }), Val::Const(1))
            .otherwise(Val::Const(2)),
        4 | 5 => PiecewiseRule::new("ex2(4)", "Thm. ex2(4)", dom)
            .arm(C::AtLeast(3), Val::Const(0))
            .arm(C::Eq(2), Val::Const(1)),
        6 => PiecewiseRule::new("ex2(5)", "Thm. ex2(5)", dom)
            .arm(C::congruent(4, &[2, 3]).or(C::PowTwoMinus { c: 3, i0: 3 }), Val::Const(1))
            .otherwise(Val::Const(0)),
        7 => PiecewiseRule::new("ex2(6)", "Thm. ex2(6)", dom)
            .arm(C::one_of(&[2, 3, 5]).or(C::congruent(8, &[7])), Val::Const(1))
            .otherwise(Val::Const(2)),
        _ => return None,
    })
}

fn php1_zero(n: u64) -> Option<u64> {
    Some(lcm_pair(24 / gcd(24, n + 1), 2))
}

/// P′_{4n+3+k}(HP^n) as a multiple of γ_n∗π_{4n+3+k}(S^{4n+3}).
pub fn php1(k: u32) -> Option<Rule> {
    Some(match k {
        0 => PiecewiseRule::new("PHP1(1)", "Thm. PHP1(1)", C::AtLeast(2))
            .otherwise(Val::Formula("[[24/(24,n+1), 2]]", php1_zero)),
        1 | 2 | 4 | 5 | 8 | 9 | 10 => {
            PiecewiseRule::new("PHP1(2)", "Thm. PHP1(2)", C::AtLeast(1)).otherwise(Val::Const(1))
        }
        3 => PiecewiseRule::new("PHP1(3)", "Thm. PHP1(3)", C::AtLeast(1))
            .arm(even(), Val::Const(2))
            .arm(odd(), Val::Const(1)),
        6 => PiecewiseRule::new("PHP1(4)", "Thm. PHP1(4)", C::AtLeast(1))
            .arm(odd(), Val::Const(1))
            .arm(even(), Val::Const(0)),
        7 => PiecewiseRule::new("PHP1(5)", "Thm. PHP1(5)", C::AtLeast(1))
            .arm(C::congruent(4, &[3]).or(C::Eq(2)), Val::Const(1))
            .otherwise(Val::Const(2)),
        11 => PiecewiseRule::new("PHP1 Remark", "Thm. PHP1, Remark", C::AtLeast(1).and(C::congruent(128, &[115]).not()))
            .otherwise(Val::Const(1)),
        _ => return None,
    })
}

/// Evaluate a multiplier rule into a subgroup description.
pub fn spec_at(rule: &Rule, n: u32) -> Option<SubgroupSpec> {
    let m = rule.order_at(n as u64)?.finite()?;
    Some(SubgroupSpec::multiple(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_arm_set_is_exhaustive() {
        for s in 0..=7 {
            assert!(ex2(s).unwrap().exhaustiveness_failures(1000).is_empty(), "ex2 stem {}", s);
        }
        for k in 0..=11 {
            if let Some(r) = php1(k) {
                assert!(r.exhaustiveness_failures(1000).is_empty(), "PHP1 k={}", k);
            }
        }
        assert!(php1(12).is_none() && ex2(8).is_none());
    }

    #[test]
    fn sample_cells() {
        assert_eq!(spec_at(&ex2(2).unwrap(), 2), Some(SubgroupSpec::Zero));
        assert_eq!(spec_at(&ex2(3).unwrap(), 6), Some(SubgroupSpec::Whole));
        assert_eq!(spec_at(&ex2(6).unwrap(), 13), Some(SubgroupSpec::Whole));
        assert_eq!(spec_at(&ex2(6).unwrap(), 4), Some(SubgroupSpec::Zero));
        assert_eq!(spec_at(&php1(0).unwrap(), 2), Some(SubgroupSpec::Multiple(8)));
        assert_eq!(spec_at(&php1(0).unwrap(), 23), Some(SubgroupSpec::Multiple(2)));
        assert_eq!(spec_at(&php1(7).unwrap(), 2), Some(SubgroupSpec::Whole));
        assert_eq!(spec_at(&php1(7).unwrap(), 6), Some(SubgroupSpec::Multiple(2)));
        assert_eq!(spec_at(&php1(11).unwrap(), 115), None);
        assert_eq!(spec_at(&php1(0).unwrap(), 1), None);
    }
}
