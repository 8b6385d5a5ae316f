use std::fmt;

use num_integer::Integer;

use crate::expr::GeneratorExpr;
use crate::FgaError;

/// Cardinality of a group or an index. Infinity is its own value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    /// Product with ∞ absorbing. Overflow is reported rather than wrapped.
    pub fn checked_mul(self, other: Order) -> Option<Order> {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a.checked_mul(b).map(Order::Finite),
            _ => Some(Order::Infinite),
        }
    }

    /// `self` divides `other`; every finite order divides ∞ and ∞ divides only ∞.
    pub fn divides(self, other: Order) -> bool {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a != 0 && b % a == 0,
            (_, Order::Infinite) => true,
            (Order::Infinite, Order::Finite(_)) => false,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{}", n),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_pair(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Isomorphism type Z^r ⊕ Z_{d_1} ⊕ … ⊕ Z_{d_t} with d_i ≥ 2 and d_i | d_{i+1}.
///
/// Generator names are carried along for display only; equality ignores them.
#[derive(Debug, Clone, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<u64>,
    generators: Option<Vec<GeneratorExpr>>,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }
}

impl Eq for FgAbGroup {}

impl std::hash::Hash for FgAbGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.free_rank.hash(state);
        self.torsion.hash(state);
    }
}

impl FgAbGroup {
    /// Checked constructor for an already canonical invariant-factor chain.
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, FgaError> {
        if let Some(&d) = torsion.iter().find(|&&d| d < 2) {
            return Err(FgaError::BadFactor(d));
        }
        if let Some(w) = torsion.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(FgaError::NotDivisible(w[0], w[1]));
        }
        Ok(FgAbGroup { free_rank, torsion, generators: None })
    }

    pub fn zero() -> Self {
        FgAbGroup::default()
    }

    pub fn integers() -> Self {
        FgAbGroup { free_rank: 1, ..Default::default() }
    }

    /// Z_d, with Z_1 = 0 and Z_0 = Z.
    pub fn cyclic(d: u64) -> Self {
        match d {
            0 => Self::integers(),
            1 => Self::zero(),
            d => FgAbGroup { free_rank: 0, torsion: vec![d], generators: None },
        }
    }

    /// Attach one generator name per cyclic summand (free summands first).
    pub fn with_generators(mut self, gens: Vec<GeneratorExpr>) -> Result<Self, FgaError> {
        let want = self.free_rank + self.torsion.len();
        if gens.len() != want {
            return Err(FgaError::GeneratorCount { expected: want, found: gens.len() });
        }
        self.generators = Some(gens);
        Ok(self)
    }

    pub fn without_generators(mut self) -> Self {
        self.generators = None;
        self
    }

    /// Canonical form of an arbitrary list of cyclic summands, `0` meaning Z.
    /// Generators, when every summand has one, are recombined: a merged
    /// invariant factor is generated by the sum of its primary pieces.
    pub fn from_summands(summands: Vec<(u64, Option<GeneratorExpr>)>) -> Self {
        let named = summands.iter().all(|s| s.1.is_some());
        let mut free_gens = Vec::new();
        // (prime, exponent-power, source summand, cofactor)
        let mut pieces: Vec<(u64, u64, usize, u64)> = Vec::new();
        for (idx, (d, g)) in summands.iter().enumerate() {
            if *d == 0 {
                free_gens.push(g.clone());
                continue;
            }
            for (p, q) in prime_powers(*d) {
                pieces.push((p, q, idx, d / q));
            }
        }
        let free_rank = free_gens.len();

        let mut primes: Vec<u64> = pieces.iter().map(|x| x.0).collect();
        primes.sort_unstable();
        primes.dedup();
        // per prime, powers sorted descending; the j-th largest of every prime
        // goes into the j-th largest invariant factor
        let mut slots: Vec<Vec<(u64, u64, usize, u64)>> = Vec::new();
        for p in primes {
            let mut ps: Vec<_> = pieces.iter().copied().filter(|x| x.0 == p).collect();
            ps.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)));
            for (j, piece) in ps.into_iter().enumerate() {
                if slots.len() <= j {
                    slots.push(Vec::new());
                }
                slots[j].push(piece);
            }
        }
        slots.reverse();
        let torsion: Vec<u64> = slots.iter().map(|s| s.iter().map(|x| x.1).product()).collect();

        let generators = named.then(|| {
            let mut gens: Vec<GeneratorExpr> = free_gens.into_iter().map(|g| g.unwrap()).collect();
            for (slot, &d) in slots.iter().zip(&torsion) {
                let src = slot[0].2;
                let intact = slot.iter().all(|x| x.2 == src) && summands[src].0 == d;
                let g = if intact {
                    summands[src].1.clone().unwrap()
                } else {
                    let terms: Vec<GeneratorExpr> = slot
                        .iter()
                        .map(|&(_, _, i, cof)| summands[i].1.clone().unwrap().scaled(cof as i64))
                        .collect();
                    if terms.len() == 1 {
                        terms.into_iter().next().unwrap()
                    } else {
                        GeneratorExpr::Sum(terms)
                    }
                };
                gens.push(g);
            }
            gens
        });
        FgAbGroup { free_rank, torsion, generators }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn generators(&self) -> Option<&[GeneratorExpr]> {
        self.generators.as_deref()
    }

    /// Orders of the cyclic summands in canonical order, `0` for each Z.
    pub fn summand_orders(&self) -> Vec<u64> {
        let mut v = vec![0; self.free_rank];
        v.extend_from_slice(&self.torsion);
        v
    }

    pub fn summands(&self) -> Vec<(u64, Option<GeneratorExpr>)> {
        let orders = self.summand_orders();
        match &self.generators {
            Some(g) => orders.into_iter().zip(g.iter().cloned().map(Some)).collect(),
            None => orders.into_iter().map(|d| (d, None)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            return Order::Infinite;
        }
        self.torsion
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .map(Order::Finite)
            .expect("catalog groups have orders far below 2^64")
    }

    /// Largest invariant factor; `None` for infinite groups, 1 for the trivial group.
    pub fn exponent(&self) -> Option<u64> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.last().copied().unwrap_or(1))
        }
    }

    /// ASCII form used by machine output, e.g. `Z+Z84+Z2^2`.
    pub fn ascii(&self) -> String {
        self.render("Z", "+", |d| format!("Z{}", d), |base, k| format!("{}^{}", base, k))
    }

    fn render(
        &self,
        z: &str,
        sep: &str,
        cyc: impl Fn(u64) -> String,
        pow: impl Fn(&str, usize) -> String,
    ) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(z.to_string()),
            r => parts.push(pow(z, r)),
        }
        let mut t: Vec<u64> = self.torsion.clone();
        t.reverse();
        for (d, run) in run_lengths(&t) {
            let base = cyc(d);
            parts.push(if run == 1 { base } else { pow(&base, run) });
        }
        parts.join(sep)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            "Z",
            " ⊕ ",
            |d| format!("Z_{}", d),
            |base, k| if base == "Z" { format!("Z^{}", k) } else { format!("({})^{}", base, k) },
        );
        f.write_str(&s)
    }
}

fn run_lengths(v: &[u64]) -> Vec<(u64, usize)> {
    let mut out: Vec<(u64, usize)> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Prime-power factorization of `n ≥ 1` as (p, p^a) pairs.
pub fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_powers(n) == vec![(n, n)]
}

/// a ⊕ b in canonical form. Generator lists concatenate before recombination.
pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let named = (a.generators.is_some() || a.is_trivial()) && (b.generators.is_some() || b.is_trivial());
    let mut s = a.summands();
    s.extend(b.summands());
    if !named {
        s.iter_mut().for_each(|x| x.1 = None);
    }
    FgAbGroup::from_summands(s)
}

/// Isomorphism type of m·g: Z stays Z, Z_d becomes Z_{d/(d,m)}.
pub fn multiple_subgroup(g: &FgAbGroup, m: u64) -> Result<FgAbGroup, FgaError> {
    if m == 0 {
        return Err(FgaError::ZeroMultiplier);
    }
    let summands = g
        .summands()
        .into_iter()
        .map(|(d, e)| {
            if d == 0 {
                (0, e.map(|x| x.scaled(m as i64)))
            } else {
                let k = gcd(d, m);
                (d / k, e.map(|x| x.scaled(k as i64)))
            }
        })
        .filter(|(d, _)| *d != 1)
        .collect();
    Ok(FgAbGroup::from_summands(summands))
}

pub fn order(g: &FgAbGroup) -> Order {
    g.order()
}

/// The p-primary part of the torsion subgroup. The free part is dropped.
///
/// When a summand generator is a sum, the terms that are tagged with `p`
/// (or, for p = 2, untagged) are kept; otherwise the generator is scaled by
/// the complementary cofactor.
pub fn primary_part(g: &FgAbGroup, p: u64) -> FgAbGroup {
    let summands = g
        .summands()
        .into_iter()
        .filter(|(d, _)| *d != 0)
        .filter_map(|(d, e)| {
            let q = prime_powers(d).into_iter().find(|x| x.0 == p)?.1;
            let e = e.map(|e| primary_generator(e, d, q, p));
            Some((q, e))
        })
        .collect();
    FgAbGroup::from_summands(summands)
}

fn primary_generator(e: GeneratorExpr, d: u64, q: u64, p: u64) -> GeneratorExpr {
    let tagged = |x: &GeneratorExpr| match x.odd_prime() {
        Some(r) => u64::from(r) == p,
        None => p == 2,
    };
    if let GeneratorExpr::Sum(terms) = &e {
        let keep: Vec<GeneratorExpr> = terms.iter().filter(|t| tagged(t)).cloned().collect();
        match keep.len() {
            0 => {}
            1 => return keep.into_iter().next().unwrap(),
            _ => return GeneratorExpr::Sum(keep),
        }
    }
    if d == q || (e.odd_prime().is_some() && tagged(&e)) {
        e
    } else {
        e.scaled((d / q) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: usize, t: &[u64]) -> FgAbGroup {
        FgAbGroup::new(r, t.to_vec()).unwrap()
    }

    #[test]
    fn canonical_chain_is_enforced() {
        assert!(FgAbGroup::new(0, vec![2, 3]).is_err());
        assert!(FgAbGroup::new(0, vec![1]).is_err());
        assert!(FgAbGroup::new(0, vec![2, 6, 24]).is_ok());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&g(0, &[2]), &g(0, &[3])), g(0, &[6]));
        assert_eq!(direct_sum(&g(1, &[12]), &FgAbGroup::zero()), g(1, &[12]));
        let s = direct_sum(&g(0, &[2, 24]), &g(0, &[3]));
        assert_eq!(s.torsion(), &[6, 24]);
        assert_eq!(s.order(), Order::Finite(144));
    }

    #[test]
    fn multiples() {
        assert_eq!(multiple_subgroup(&g(0, &[24]), 12).unwrap(), g(0, &[2]));
        assert_eq!(multiple_subgroup(&g(1, &[12]), 12).unwrap(), g(1, &[]));
        assert_eq!(multiple_subgroup(&g(0, &[3, 24]), 8).unwrap(), g(0, &[3, 3]));
        assert!(matches!(multiple_subgroup(&g(0, &[4]), 0), Err(FgaError::ZeroMultiplier)));
    }

    #[test]
    fn orders() {
        assert_eq!(g(0, &[2, 24]).order(), Order::Finite(48));
        assert_eq!(FgAbGroup::integers().order(), Order::Infinite);
        assert_eq!(g(0, &[2, 2, 84]).order(), Order::Finite(336));
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(24, 4), 4);
        assert_eq!(gcd(24, 24), 24);
        assert_eq!(lcm_pair(12, 8), 24);
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(1, &[2, 2, 84]).to_string(), "Z ⊕ Z_84 ⊕ (Z_2)^2");
        assert_eq!(g(1, &[2, 2, 84]).ascii(), "Z+Z84+Z2^2");
        assert_eq!(FgAbGroup::zero().ascii(), "0");
    }

    #[test]
    fn primary_parts_follow_tags() {
        let z30 = g(0, &[30])
            .with_generators(vec![GeneratorExpr::parse(
                "add(cmp(eps(3),nu(11),nu(14)),cmp(alpha(1,3),alpha'(3,6)),cmp(alpha(1,5,3),alpha(1,5,10)))",
            )
            .unwrap()])
            .unwrap();
        let p3 = primary_part(&z30, 3);
        assert_eq!(p3, g(0, &[3]));
        assert_eq!(p3.generators().unwrap()[0].to_string(), "cmp(alpha(1,3),alpha'(3,6))");
        assert!(primary_part(&g(0, &[24]), 7).is_trivial());
        let z24 = g(0, &[24]).with_generators(vec![GeneratorExpr::parse("nu(5)").unwrap()]).unwrap();
        assert_eq!(primary_part(&z24, 3).generators().unwrap()[0].to_string(), "sc(8,nu(5))");
    }
}
