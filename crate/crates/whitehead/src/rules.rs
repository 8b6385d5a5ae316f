//! Guarded arithmetic rules in one integer parameter `n` (optionally a
//! second parameter `k`), evaluated arm by arm.

use std::fmt;

use fga::Order;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Always,
    Eq(u64),
    /// n ≡ r (mod m) for some listed residue r.
    Mod { m: u64, residues: Vec<u64> },
    AtLeast(u64),
    /// n = 2^i − c for some i ≥ i0.
    PowTwoMinus { c: u64, i0: u32 },
    /// Inclusive range.
    Range(u64, u64),
    All(Vec<Condition>),
    Any(Vec<Condition>),
    Not(Box<Condition>),
    /// Evaluate the inner condition on the second parameter.
    OnK(Box<Condition>),
}

impl Condition {
    pub fn congruent(m: u64, residues: &[u64]) -> Self {
        Condition::Mod { m, residues: residues.to_vec() }
    }

    pub fn one_of(values: &[u64]) -> Self {
        Condition::Any(values.iter().map(|&v| Condition::Eq(v)).collect())
    }

    pub fn and(self, other: Condition) -> Self {
        match self {
            Condition::All(mut v) => {
                v.push(other);
                Condition::All(v)
            }
            c => Condition::All(vec![c, other]),
        }
    }

    pub fn or(self, other: Condition) -> Self {
        match self {
            Condition::Any(mut v) => {
                v.push(other);
                Condition::Any(v)
            }
            c => Condition::Any(vec![c, other]),
        }
    }

    pub fn not(self) -> Self {
        Condition::Not(Box::new(self))
    }

    pub fn on_k(self) -> Self {
        Condition::OnK(Box::new(self))
    }

    pub fn holds(&self, n: u64, k: u64) -> bool {
        match self {
            Condition::Always => true,
            Condition::Eq(v) => n == *v,
            Condition::Mod { m, residues } => residues.contains(&(n % m)),
            Condition::AtLeast(b) => n >= *b,
            Condition::PowTwoMinus { c, i0 } => {
                let t = n + c;
                t.is_power_of_two() && t.trailing_zeros() >= *i0
            }
            Condition::Range(a, b) => (*a..=*b).contains(&n),
            Condition::All(cs) => cs.iter().all(|c| c.holds(n, k)),
            Condition::Any(cs) => cs.iter().any(|c| c.holds(n, k)),
            Condition::Not(c) => !c.holds(n, k),
            Condition::OnK(c) => c.holds(k, k),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, cs: &[Condition], sep: &str| {
            let s: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", s.join(sep))
        };
        match self {
            Condition::Always => write!(f, "always"),
            Condition::Eq(v) => write!(f, "n = {}", v),
            Condition::Mod { m, residues } => {
                let r: Vec<String> = residues.iter().map(|x| x.to_string()).collect();
                write!(f, "n ≡ {} (mod {})", r.join(","), m)
            }
            Condition::AtLeast(b) => write!(f, "n ≥ {}", b),
            Condition::PowTwoMinus { c, i0 } => write!(f, "n = 2^i − {} (i ≥ {})", c, i0),
            Condition::Range(a, b) => write!(f, "{} ≤ n ≤ {}", a, b),
            Condition::All(cs) => join(f, cs, " and "),
            Condition::Any(cs) => join(f, cs, " or "),
            Condition::Not(c) => write!(f, "not {}", c),
            Condition::OnK(c) => write!(f, "[k] {}", c),
        }
    }
}

/// An order-valued right-hand side.
#[derive(Clone, Copy)]
pub enum Val {
    Const(u64),
    Infinite,
    /// Formula in the rule parameter; `None` on overflow.
    Formula(&'static str, fn(u64) -> Option<u64>),
}

impl Val {
    pub fn at(&self, n: u64) -> Option<Order> {
        match self {
            Val::Const(c) => Some(Order::Finite(*c)),
            Val::Infinite => Some(Order::Infinite),
            Val::Formula(_, f) => f(n).map(Order::Finite),
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Const(c) => write!(f, "{}", c),
            Val::Infinite => write!(f, "∞"),
            Val::Formula(s, _) => write!(f, "{}", s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PiecewiseRule<V> {
    pub name: &'static str,
    pub citation: &'static str,
    pub domain: Condition,
    pub arms: Vec<(Condition, V)>,
    /// Fires exactly when no arm does.
    pub otherwise: Option<V>,
}

impl<V: Clone> PiecewiseRule<V> {
    pub fn new(name: &'static str, citation: &'static str, domain: Condition) -> Self {
        PiecewiseRule { name, citation, domain, arms: Vec::new(), otherwise: None }
    }

    pub fn arm(mut self, when: Condition, value: V) -> Self {
        self.arms.push((when, value));
        self
    }

    pub fn otherwise(mut self, value: V) -> Self {
        self.otherwise = Some(value);
        self
    }

    /// Indices of the arms that fire; `arms.len()` stands for `otherwise`.
    pub fn firing(&self, n: u64, k: u64) -> Vec<usize> {
        let mut hits: Vec<usize> = (0..self.arms.len()).filter(|&i| self.arms[i].0.holds(n, k)).collect();
        if hits.is_empty() && self.otherwise.is_some() {
            hits.push(self.arms.len());
        }
        hits
    }

    pub fn in_domain(&self, n: u64, k: u64) -> bool {
        self.domain.holds(n, k)
    }

    /// The value of the single firing arm, or `None` outside the domain.
    pub fn eval2(&self, n: u64, k: u64) -> Option<V> {
        if !self.in_domain(n, k) {
            return None;
        }
        let i = *self.firing(n, k).first()?;
        Some(if i == self.arms.len() { self.otherwise.clone()? } else { self.arms[i].1.clone() })
    }

    pub fn eval(&self, n: u64) -> Option<V> {
        self.eval2(n, 0)
    }

    /// Points of the domain in `1..=upto` where the number of firing arms is
    /// not exactly one.
    pub fn exhaustiveness_failures(&self, upto: u64) -> Vec<(u64, usize)> {
        (1..=upto)
            .filter(|&n| self.in_domain(n, 0))
            .map(|n| (n, self.firing(n, 0).len()))
            .filter(|&(_, c)| c != 1)
            .collect()
    }

    /// Same check over a grid of (n, k).
    pub fn exhaustiveness_failures2(&self, upto: u64, ks: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64, usize)> {
        let mut out = Vec::new();
        for n in 1..=upto {
            for k in ks.clone() {
                if self.in_domain(n, k) {
                    let c = self.firing(n, k).len();
                    if c != 1 {
                        out.push((n, k, c));
                    }
                }
            }
        }
        out
    }
}

impl PiecewiseRule<Val> {
    pub fn order_at(&self, n: u64) -> Option<Order> {
        self.eval(n)?.at(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_two_minus_is_first_class() {
        let c = Condition::PowTwoMinus { c: 3, i0: 4 };
        assert!(c.holds(13, 0));
        assert!(c.holds(29, 0));
        assert!(c.holds(1021, 0));
        assert!(!c.holds(5, 0));
        assert!(!c.holds(14, 0));
    }

    #[test]
    fn otherwise_only_when_nothing_fires() {
        let r = PiecewiseRule::new("t", "t", Condition::AtLeast(1))
            .arm(Condition::congruent(2, &[0]), Val::Const(1))
            .otherwise(Val::Const(2));
        assert_eq!(r.firing(4, 0), vec![0]);
        assert_eq!(r.firing(5, 0), vec![1]);
        assert_eq!(r.order_at(5), Some(Order::Finite(2)));
        assert!(r.exhaustiveness_failures(100).is_empty());
    }

    #[test]
    fn overlapping_arms_are_reported() {
        let r = PiecewiseRule::new("t", "t", Condition::AtLeast(1))
            .arm(Condition::congruent(2, &[0]), Val::Const(1))
            .arm(Condition::congruent(3, &[0]), Val::Const(2));
        let bad = r.exhaustiveness_failures(7);
        assert_eq!(bad, vec![(1, 0), (5, 0), (6, 2), (7, 0)]);
    }

    #[test]
    fn second_parameter() {
        let c = Condition::Eq(2).and(Condition::Range(5, 6).on_k());
        assert!(c.holds(2, 5));
        assert!(!c.holds(2, 7));
        assert!(!c.holds(5, 2));
    }
}
