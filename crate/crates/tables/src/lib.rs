//! Curated homotopy-group tables.
//!
//! The catalog is a line-oriented text file (see `data/catalog.txt`) holding
//! integral groups, p-components, stable stems and a few Whitehead-center
//! facts for spheres. Lookups never extrapolate: anything outside the file is
//! [`NotCovered`].

mod catalog;
mod space;

pub use catalog::{load_catalog, Catalog, CatalogError, SphereCenter, SCHEMA_VERSION};
pub use space::SpaceId;

use std::fmt;

use fga::{primary_part, FgAbGroup, GeneratorExpr};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub space: SpaceId,
    pub k: u32,
    pub group: FgAbGroup,
    pub stable: bool,
    pub citation: String,
    /// Value taken from a table the source only cites.
    pub secondary: bool,
    /// `Some(p)` when the record is only the p-component.
    pub prime: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not covered: pi_{k}({space})")]
pub struct NotCovered {
    pub space: SpaceId,
    pub k: u32,
}

impl NotCovered {
    pub fn new(space: SpaceId, k: u32) -> Self {
        NotCovered { space, k }
    }
}

/// Freudenthal range: π_k(S^n) is stable when k ≤ 2n − 2.
pub fn stable_range_check(n: u32, k: u32) -> bool {
    k + 2 <= 2 * n
}

/// π_k(S^n) from the catalog.
pub fn pi_sphere(cat: &Catalog, n: u32, k: u32) -> Result<TableEntry, NotCovered> {
    let space = SpaceId::Sphere(n);
    let entry = |group: FgAbGroup, citation: &str, secondary: bool| TableEntry {
        space,
        k,
        group,
        stable: stable_range_check(n, k),
        citation: citation.to_string(),
        secondary,
        prime: None,
    };
    if n == 0 {
        return Err(NotCovered::new(space, k));
    }
    if k < n {
        return Ok(entry(FgAbGroup::zero().with_generators(vec![]).unwrap(), "cellular approximation", false));
    }
    if n == 1 {
        let g = if k == 1 {
            FgAbGroup::integers().with_generators(vec![GeneratorExpr::iota(1)]).unwrap()
        } else {
            FgAbGroup::zero().with_generators(vec![]).unwrap()
        };
        return Ok(entry(g, "universal cover of S^1", false));
    }
    if let Some(e) = cat.get(space, k) {
        return Ok(e.clone());
    }
    if n == 2 && k >= 3 {
        // Hopf fibration: π_k(S^2) = η_2∘π_k(S^3)
        let e3 = pi_sphere(cat, 3, k)?;
        let summands = e3
            .group
            .summands()
            .into_iter()
            .map(|(d, g)| (d, g.map(|g| GeneratorExpr::atom(fga::AtomName::Eta, 2).compose(g))))
            .collect();
        let mut out = entry(FgAbGroup::from_summands(summands), "pi_k(S^2) = eta_2 pi_k(S^3), k >= 3", e3.secondary);
        out.citation = format!("{}; {}", out.citation, e3.citation);
        return Ok(out);
    }
    cat.stable_entry(n, k).ok_or(NotCovered::new(space, k))
}

/// The p-component of π_k(S^n): derived from the integral group when the
/// catalog has it, otherwise read from a p-component record.
pub fn pi_sphere_primary(cat: &Catalog, n: u32, k: u32, p: u64) -> Result<PComponent, NotCovered> {
    match pi_sphere(cat, n, k) {
        Ok(e) => Ok(p_component(&e, p)),
        Err(nc) => cat
            .get_primary(SpaceId::Sphere(n), k, p)
            .map(|e| PComponent { group: e.group.clone(), has_free_part: false })
            .ok_or(nc),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PComponent {
    pub group: FgAbGroup,
    /// The integral group also has Z summands; they are not part of the result.
    pub has_free_part: bool,
}

/// (G; p): the p-primary torsion of an entry.
pub fn p_component(entry: &TableEntry, p: u64) -> PComponent {
    let group = match entry.prime {
        Some(q) if q == p => entry.group.clone(),
        Some(_) => FgAbGroup::zero(),
        None => primary_part(&entry.group, p),
    };
    PComponent { group, has_free_part: entry.group.free_rank() > 0 }
}

/// Structured text dump of the whole catalog, one record per line:
/// `space|k|group|generators|citation`.
pub fn export(cat: &Catalog) -> String {
    let mut out = String::from("space|k|group|generators|citation\n");
    let gens = |g: &FgAbGroup| match g.generators() {
        Some(gs) => gs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"),
        None => String::new(),
    };
    for e in cat.entries() {
        let space = match e.prime {
            Some(p) => format!("{};{}", e.space, p),
            None => e.space.to_string(),
        };
        out.push_str(&format!("{}|{}|{}|{}|{}\n", space, e.k, e.group.ascii(), gens(&e.group), e.citation));
    }
    for (stem, e) in cat.stable_stems() {
        out.push_str(&format!("S*|n+{}|{}|{}|{}\n", stem, e.group.ascii(), gens(&e.group), e.citation));
    }
    for c in cat.centers() {
        out.push_str(&format!("P(S{})|{}|{}|{}|{}\n", c.n, c.k, c.spec.ascii(), c.spec.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(";"), c.citation));
    }
    out
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi_{}({}) = {}", self.k, self.space, self.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_range_examples() {
        assert!(stable_range_check(5, 8));
        assert!(!stable_range_check(4, 7));
        assert!(stable_range_check(9, 12));
    }

    #[test]
    fn low_degrees() {
        let cat = Catalog::bundled();
        assert!(pi_sphere(&cat, 5, 3).unwrap().group.is_trivial());
        assert_eq!(pi_sphere(&cat, 1, 1).unwrap().group, FgAbGroup::integers());
        assert!(pi_sphere(&cat, 1, 4).unwrap().group.is_trivial());
        for n in 2..30 {
            let e = pi_sphere(&cat, n, n).unwrap();
            assert_eq!(e.group, FgAbGroup::integers());
            assert_eq!(e.group.generators().unwrap()[0], GeneratorExpr::iota(n));
        }
    }

    #[test]
    fn two_sphere_follows_three_sphere() {
        let cat = Catalog::bundled();
        let e = pi_sphere(&cat, 2, 14).unwrap();
        assert_eq!(e.group, FgAbGroup::new(0, vec![2, 2, 84]).unwrap());
        assert!(e.group.generators().unwrap()[0].to_string().starts_with("cmp(eta(2),"));
        assert!(pi_sphere(&cat, 2, 19).is_err());
    }

    #[test]
    fn outside_range_is_not_covered() {
        let cat = Catalog::bundled();
        assert!(pi_sphere(&cat, 9, 19).is_err());
        assert!(pi_sphere(&cat, 7, 23).is_err());
        assert!(pi_sphere(&cat, 40, 54).is_err());
    }
}
