use std::fmt;

use crate::expr::GeneratorExpr;
use crate::group::{direct_sum, gcd, FgAbGroup, Order};
use crate::lattice::{self, Int};
use crate::FgaError;

/// One generator of a described subgroup: integer coordinates over the
/// ambient's cyclic summands, plus an optional printed name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubGen {
    pub coords: Vec<i64>,
    pub label: Option<GeneratorExpr>,
}

impl SubGen {
    pub fn new(coords: Vec<i64>, label: GeneratorExpr) -> Self {
        SubGen { coords, label: Some(label) }
    }

    pub fn unlabeled(coords: Vec<i64>) -> Self {
        SubGen { coords, label: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubgroupSpec {
    Zero,
    Whole,
    Multiple(u64),
    GeneratedBy(Vec<SubGen>),
    /// Summand-wise description; tags name parts of the ambient decomposition
    /// and parts that are not mentioned contribute 0.
    DirectSum(Vec<(String, SubgroupSpec)>),
}

impl SubgroupSpec {
    /// `Multiple(m)` with the trivial cases folded: m = 0 → Zero, m = 1 → Whole.
    pub fn multiple(m: u64) -> Self {
        match m {
            0 => SubgroupSpec::Zero,
            1 => SubgroupSpec::Whole,
            m => SubgroupSpec::Multiple(m),
        }
    }

    /// Normalize against a concrete group: Multiple(1) is Whole and a multiple
    /// of the exponent of a finite group is Zero.
    pub fn normalize(self, g: &FgAbGroup) -> Self {
        match self {
            SubgroupSpec::Multiple(1) => SubgroupSpec::Whole,
            SubgroupSpec::Multiple(m) if g.exponent().is_some_and(|e| m % e == 0) => SubgroupSpec::Zero,
            other => other,
        }
    }

    /// Machine form: `0`, `all`, `mult(m)`, `gen(...)` or `sum(tag=...;...)`.
    pub fn ascii(&self) -> String {
        match self {
            SubgroupSpec::Zero => "0".into(),
            SubgroupSpec::Whole => "all".into(),
            SubgroupSpec::Multiple(m) => format!("mult({})", m),
            SubgroupSpec::GeneratedBy(gens) => {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|g| {
                        let c: Vec<String> = g.coords.iter().map(|x| x.to_string()).collect();
                        format!("[{}]", c.join(","))
                    })
                    .collect();
                format!("gen({})", parts.join(","))
            }
            SubgroupSpec::DirectSum(parts) => {
                let p: Vec<String> = parts.iter().map(|(t, s)| format!("{}={}", t, s.ascii())).collect();
                format!("sum({})", p.join(";"))
            }
        }
    }

    /// Printed names of the generators, where they have them.
    pub fn labels(&self) -> Vec<GeneratorExpr> {
        match self {
            SubgroupSpec::GeneratedBy(gens) => gens.iter().filter_map(|g| g.label.clone()).collect(),
            SubgroupSpec::DirectSum(parts) => parts.iter().flat_map(|(_, s)| s.labels()).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Zero => write!(f, "0"),
            SubgroupSpec::Whole => write!(f, "π"),
            SubgroupSpec::Multiple(m) => write!(f, "{}π", m),
            SubgroupSpec::GeneratedBy(gens) => {
                let names: Vec<String> = gens
                    .iter()
                    .map(|g| match &g.label {
                        Some(l) => l.pretty(),
                        None => format!("{:?}", g.coords),
                    })
                    .collect();
                write!(f, "{{{}}}", names.join(", "))
            }
            SubgroupSpec::DirectSum(parts) => {
                let p: Vec<String> = parts.iter().map(|(t, s)| format!("{}:{}", t, s)).collect();
                write!(f, "{}", p.join(" ⊕ "))
            }
        }
    }
}

/// A group together with a chosen splitting into tagged parts. Coordinates of
/// `GeneratedBy` run over the canonical summands of each part in turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    parts: Vec<(String, FgAbGroup)>,
}

/// A resolved subgroup: an echelon basis of its preimage lattice in Z^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolved {
    basis: Vec<Vec<Int>>,
}

impl Ambient {
    pub fn single(g: FgAbGroup) -> Self {
        Ambient { parts: vec![(String::new(), g)] }
    }

    pub fn split(parts: Vec<(String, FgAbGroup)>) -> Self {
        Ambient { parts }
    }

    pub fn parts(&self) -> &[(String, FgAbGroup)] {
        &self.parts
    }

    pub fn group(&self) -> FgAbGroup {
        self.parts.iter().fold(FgAbGroup::zero().with_generators(vec![]).unwrap(), |acc, (_, g)| direct_sum(&acc, g))
    }

    pub fn order(&self) -> Order {
        self.group().order()
    }

    /// Orders of all summands in coordinate order, `0` for Z.
    pub fn orders(&self) -> Vec<u64> {
        self.parts.iter().flat_map(|(_, g)| g.summand_orders()).collect()
    }

    pub fn rank(&self) -> usize {
        self.orders().len()
    }

    fn offset_of(&self, tag: &str) -> Option<(usize, &FgAbGroup)> {
        let mut off = 0;
        for (t, g) in &self.parts {
            if t == tag {
                return Some((off, g));
            }
            off += g.summand_orders().len();
        }
        None
    }

    fn relations(&self) -> Vec<Vec<Int>> {
        let orders = self.orders();
        let n = orders.len();
        orders
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let mut r = vec![0; n];
                r[i] = d as Int;
                r
            })
            .collect()
    }

    fn raw_rows(&self, spec: &SubgroupSpec, orders: &[u64], offset: usize) -> Result<Vec<Vec<Int>>, FgaError> {
        let n = self.rank();
        let unit = |i: usize, m: Int| {
            let mut r = vec![0; n];
            r[offset + i] = m;
            r
        };
        Ok(match spec {
            SubgroupSpec::Zero => Vec::new(),
            SubgroupSpec::Whole => (0..orders.len()).map(|i| unit(i, 1)).collect(),
            SubgroupSpec::Multiple(m) => {
                if *m == 0 {
                    return Err(FgaError::ZeroMultiplier);
                }
                (0..orders.len()).map(|i| unit(i, *m as Int)).collect()
            }
            SubgroupSpec::GeneratedBy(gens) => {
                let mut rows = Vec::new();
                for g in gens {
                    if g.coords.len() != orders.len() {
                        return Err(FgaError::Unresolvable(format!(
                            "generator has {} coordinates, ambient has {} summands",
                            g.coords.len(),
                            orders.len()
                        )));
                    }
                    let mut r = vec![0; n];
                    for (i, c) in g.coords.iter().enumerate() {
                        r[offset + i] = *c as Int;
                    }
                    rows.push(r);
                }
                rows
            }
            SubgroupSpec::DirectSum(parts) => {
                if offset != 0 || orders.len() != n {
                    return Err(FgaError::Unresolvable("nested direct sum".into()));
                }
                let mut seen: Vec<&str> = Vec::new();
                let mut rows = Vec::new();
                for (tag, sub) in parts {
                    if seen.contains(&tag.as_str()) {
                        return Err(FgaError::Unresolvable(format!("duplicate summand tag {}", tag)));
                    }
                    seen.push(tag);
                    let (off, g) = self
                        .offset_of(tag)
                        .ok_or_else(|| FgaError::Unresolvable(format!("unknown summand tag {}", tag)))?;
                    rows.extend(self.raw_rows(sub, &g.summand_orders(), off)?);
                }
                rows
            }
        })
    }

    pub fn resolve(&self, spec: &SubgroupSpec) -> Result<Resolved, FgaError> {
        let orders = self.orders();
        let mut rows = self.raw_rows(spec, &orders, 0)?;
        rows.extend(self.relations());
        Ok(Resolved { basis: lattice::echelon(&rows, orders.len()) })
    }

    fn from_resolved(&self, r: &Resolved) -> SubgroupSpec {
        let orders = self.orders();
        let gens: Vec<SubGen> = r
            .basis
            .iter()
            .filter(|row| {
                // drop rows that are pure relations
                !self.relations().iter().any(|rel| rel == *row)
            })
            .map(|row| {
                SubGen::unlabeled(
                    row.iter()
                        .zip(&orders)
                        .map(|(&c, &d)| if d == 0 { c as i64 } else { c.rem_euclid(d as Int) as i64 })
                        .collect(),
                )
            })
            .filter(|g| g.coords.iter().any(|&c| c != 0))
            .collect();
        if gens.is_empty() {
            SubgroupSpec::Zero
        } else {
            SubgroupSpec::GeneratedBy(gens)
        }
    }

    /// [A : S], infinite when S has smaller free rank.
    pub fn index(&self, spec: &SubgroupSpec) -> Result<Order, FgaError> {
        let r = self.resolve(spec)?;
        let n = self.rank();
        if r.basis.len() < n {
            return Ok(Order::Infinite);
        }
        let det = r
            .basis
            .iter()
            .map(|row| row[row.iter().position(|&x| x != 0).unwrap()])
            .try_fold(1 as Int, |acc, p| acc.checked_mul(p))
            .ok_or(FgaError::Overflow)?;
        u64::try_from(det).map(Order::Finite).map_err(|_| FgaError::Overflow)
    }

    /// Isomorphism type of the described subgroup.
    pub fn subgroup_type(&self, spec: &SubgroupSpec) -> Result<FgAbGroup, FgaError> {
        let r = self.resolve(spec)?;
        let coords: Vec<Vec<Int>> = self
            .relations()
            .iter()
            .map(|rel| lattice::solve(&r.basis, rel).expect("relations lie in every resolved lattice"))
            .collect();
        let diag = lattice::smith_diagonal(&coords, r.basis.len());
        let free = r.basis.len() - diag.len();
        let mut summands: Vec<(u64, Option<GeneratorExpr>)> = vec![(0, None); free];
        for d in diag {
            let d = u64::try_from(d).map_err(|_| FgaError::Overflow)?;
            summands.push((d, None));
        }
        Ok(FgAbGroup::from_summands(summands))
    }

    /// `inner ⊆ outer`.
    pub fn contains(&self, outer: &SubgroupSpec, inner: &SubgroupSpec) -> Result<bool, FgaError> {
        let o = self.resolve(outer)?;
        let i = self.resolve(inner)?;
        Ok(i.basis.iter().all(|row| lattice::contains(&o.basis, row)))
    }

    pub fn contains_element(&self, spec: &SubgroupSpec, coords: &[i64]) -> Result<bool, FgaError> {
        if coords.len() != self.rank() {
            return Err(FgaError::Unresolvable("element has wrong number of coordinates".into()));
        }
        let o = self.resolve(spec)?;
        let v: Vec<Int> = coords.iter().map(|&c| c as Int).collect();
        Ok(lattice::contains(&o.basis, &v))
    }

    pub fn same_subgroup(&self, a: &SubgroupSpec, b: &SubgroupSpec) -> Result<bool, FgaError> {
        Ok(self.resolve(a)? == self.resolve(b)?)
    }

    pub fn intersect(&self, a: &SubgroupSpec, b: &SubgroupSpec) -> Result<SubgroupSpec, FgaError> {
        let (ra, rb) = (self.resolve(a)?, self.resolve(b)?);
        let basis = lattice::intersect(&ra.basis, &rb.basis, self.rank());
        Ok(self.simplify(&self.from_resolved(&Resolved { basis })))
    }

    /// Sum (join) of two subgroups.
    pub fn join(&self, a: &SubgroupSpec, b: &SubgroupSpec) -> Result<SubgroupSpec, FgaError> {
        let (ra, rb) = (self.resolve(a)?, self.resolve(b)?);
        let mut rows = ra.basis;
        rows.extend(rb.basis);
        let basis = lattice::echelon(&rows, self.rank());
        Ok(self.simplify(&self.from_resolved(&Resolved { basis })))
    }

    /// Replace a generated description by Zero, Whole or Multiple(m) when it
    /// is literally that subgroup. Labelled descriptions are left alone.
    pub fn simplify(&self, spec: &SubgroupSpec) -> SubgroupSpec {
        let Ok(r) = self.resolve(spec) else { return spec.clone() };
        if let SubgroupSpec::GeneratedBy(gens) = spec {
            if gens.iter().any(|g| g.label.is_some()) {
                return spec.clone();
            }
        }
        for cand in [SubgroupSpec::Zero, SubgroupSpec::Whole] {
            if self.resolve(&cand).ok().as_ref() == Some(&r) {
                return cand;
            }
        }
        if let Ok(Order::Finite(idx)) = self.index(spec) {
            let bound = self.group().exponent().unwrap_or(idx);
            for m in 2..=bound.min(1 << 16) {
                if self.resolve(&SubgroupSpec::Multiple(m)).ok().as_ref() == Some(&r) {
                    return SubgroupSpec::Multiple(m);
                }
            }
        }
        spec.clone()
    }
}

/// [g : sub] for a subgroup described inside `g` itself.
pub fn index(g: &FgAbGroup, sub: &SubgroupSpec) -> Result<Order, FgaError> {
    Ambient::single(g.clone()).index(sub)
}

/// m·g as a subgroup has index Π gcd(d_i, m) over torsion summands times m^r.
pub fn multiple_index(g: &FgAbGroup, m: u64) -> Order {
    if g.free_rank() > 0 {
        return Order::Infinite;
    }
    Order::Finite(g.torsion().iter().map(|&d| gcd(d, m)).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: usize, t: &[u64]) -> FgAbGroup {
        FgAbGroup::new(r, t.to_vec()).unwrap()
    }

    #[test]
    fn index_examples() {
        assert_eq!(index(&g(0, &[12]), &SubgroupSpec::Multiple(2)).unwrap(), Order::Finite(2));
        assert_eq!(index(&g(1, &[12]), &SubgroupSpec::Multiple(12)).unwrap(), Order::Finite(144));
        assert_eq!(index(&g(1, &[2, 2, 84]), &SubgroupSpec::Whole).unwrap(), Order::Finite(1));
        assert_eq!(index(&g(1, &[12]), &SubgroupSpec::Zero).unwrap(), Order::Infinite);
    }

    #[test]
    fn normalization() {
        assert_eq!(SubgroupSpec::Multiple(1).normalize(&g(0, &[12])), SubgroupSpec::Whole);
        assert_eq!(SubgroupSpec::Multiple(24).normalize(&g(0, &[2, 12])), SubgroupSpec::Zero);
        assert_eq!(SubgroupSpec::Multiple(24).normalize(&g(1, &[12])), SubgroupSpec::Multiple(24));
    }

    // π_7(S^4) = Z{ν_4} ⊕ Z_12{Eω}, with [ι_4,ι_4] = 2ν_4 − Eω.
    fn p7_s4() -> (Ambient, SubgroupSpec) {
        let amb = Ambient::single(g(1, &[12]));
        let spec = SubgroupSpec::GeneratedBy(vec![
            SubGen::unlabeled(vec![12, 0]),
            SubGen::unlabeled(vec![2, -1]),
            SubGen::unlabeled(vec![0, 6]),
        ]);
        (amb, spec)
    }

    #[test]
    fn generated_subgroup_type_and_index() {
        let (amb, spec) = p7_s4();
        assert_eq!(amb.index(&spec).unwrap(), Order::Finite(12));
        assert_eq!(amb.subgroup_type(&spec).unwrap(), g(1, &[2]));
    }

    #[test]
    fn containment_and_exclusion() {
        let (amb, p) = p7_s4();
        // {3[ι,ι], 2Eν′} with Eν′ = 9Eω
        let upper = SubgroupSpec::GeneratedBy(vec![SubGen::unlabeled(vec![6, -3]), SubGen::unlabeled(vec![0, 18])]);
        assert!(amb.contains(&p, &upper).unwrap());
        assert!(amb.contains(&upper, &SubgroupSpec::Multiple(12)).unwrap());
        assert!(!amb.contains_element(&upper, &[6, 0]).unwrap());
        assert!(!amb.contains_element(&upper, &[0, 9]).unwrap());
    }

    #[test]
    fn split_ambient() {
        // Z ⊕ Z_15 with 8Z on the first part and everything on the second
        let amb = Ambient::split(vec![("gamma".into(), g(1, &[])), ("i".into(), g(0, &[15]))]);
        let spec = SubgroupSpec::DirectSum(vec![
            ("gamma".into(), SubgroupSpec::Multiple(8)),
            ("i".into(), SubgroupSpec::Multiple(3)),
        ]);
        assert_eq!(amb.subgroup_type(&spec).unwrap(), g(1, &[5]));
        assert_eq!(amb.index(&spec).unwrap(), Order::Finite(24));
    }

    #[test]
    fn meet_and_join() {
        let amb = Ambient::single(g(0, &[24]));
        let m = amb.intersect(&SubgroupSpec::Multiple(4), &SubgroupSpec::Multiple(6)).unwrap();
        assert_eq!(m, SubgroupSpec::Multiple(12));
        let j = amb.join(&SubgroupSpec::Multiple(4), &SubgroupSpec::Multiple(6)).unwrap();
        assert_eq!(j, SubgroupSpec::Multiple(2));
        let z = amb.intersect(&SubgroupSpec::Multiple(8), &SubgroupSpec::Multiple(3)).unwrap();
        assert_eq!(z, SubgroupSpec::Zero);
    }
}
