use fga::{Ambient, FgAbGroup, GeneratorExpr, SubGen, SubgroupSpec};
use tables::{pi_sphere, Catalog, NotCovered, SpaceId, TableEntry};

use crate::{Field, ProjError, FIBER, GAMMA};

/// π_k(FP^n) = γ_n∗π_k(S^{d(n+1)−1}) ⊕ i_F∗Eπ_{k−1}(S^{d−1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjDecomposition {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    /// π_k(S^{d(n+1)−1}), generators as on the sphere.
    pub sphere_part: TableEntry,
    /// π_{k−1}(S^{d−1}), generators as on the sphere.
    pub fiber_part: TableEntry,
    /// Both parts with pushed generator names, tagged `gamma` and `i`.
    pub ambient: Ambient,
}

impl ProjDecomposition {
    pub fn group(&self) -> FgAbGroup {
        self.ambient.group()
    }

    pub fn fiber_trivial(&self) -> bool {
        self.fiber_part.group.is_trivial()
    }

    pub fn sphere_trivial(&self) -> bool {
        self.sphere_part.group.is_trivial()
    }

    /// A subgroup of the sphere part, moved into the ambient.
    pub fn on_gamma(&self, spec: SubgroupSpec) -> SubgroupSpec {
        let s = relabel(spec, &|g| g.gamma());
        if self.fiber_trivial() {
            s
        } else {
            SubgroupSpec::DirectSum(vec![(GAMMA.into(), s)])
        }
    }

    /// A subgroup of π_{k−1}(S^{d−1}), pushed forward by i_F∗E.
    pub fn on_fiber(&self, spec: SubgroupSpec) -> SubgroupSpec {
        let s = relabel(spec, &|g| g.suspend().i_push());
        if self.sphere_trivial() {
            s
        } else {
            SubgroupSpec::DirectSum(vec![(FIBER.into(), s)])
        }
    }

    pub fn on_both(&self, gamma: SubgroupSpec, fiber: SubgroupSpec) -> SubgroupSpec {
        match (self.sphere_trivial(), self.fiber_trivial()) {
            (_, true) => self.on_gamma(gamma),
            (true, false) => self.on_fiber(fiber),
            (false, false) => SubgroupSpec::DirectSum(vec![
                (GAMMA.into(), relabel(gamma, &|g| g.gamma())),
                (FIBER.into(), relabel(fiber, &|g| g.suspend().i_push())),
            ]),
        }
    }
}

pub(crate) fn relabel(spec: SubgroupSpec, f: &dyn Fn(GeneratorExpr) -> GeneratorExpr) -> SubgroupSpec {
    match spec {
        SubgroupSpec::GeneratedBy(gens) => SubgroupSpec::GeneratedBy(
            gens.into_iter().map(|g| SubGen { coords: g.coords, label: g.label.map(f) }).collect(),
        ),
        SubgroupSpec::DirectSum(parts) => {
            SubgroupSpec::DirectSum(parts.into_iter().map(|(t, s)| (t, relabel(s, f))).collect())
        }
        other => other,
    }
}

fn relabel_group(g: &FgAbGroup, f: &dyn Fn(GeneratorExpr) -> GeneratorExpr) -> FgAbGroup {
    let summands = g.summands();
    if summands.is_empty() {
        return FgAbGroup::zero().with_generators(vec![]).unwrap();
    }
    FgAbGroup::from_summands(summands.into_iter().map(|(d, x)| (d, x.map(f))).collect())
}

fn trivial_entry(space: SpaceId, k: u32, citation: &str) -> TableEntry {
    TableEntry {
        space,
        k,
        group: FgAbGroup::zero().with_generators(vec![]).unwrap(),
        stable: false,
        citation: citation.into(),
        secondary: false,
        prime: None,
    }
}

/// Split π_k(FP^n). RP^n needs n ≥ 2 (the covering S^1 → RP^1 does not split).
pub fn decompose_pi(field: Field, n: u32, k: u32, cat: &Catalog) -> Result<ProjDecomposition, ProjError> {
    if field == Field::K {
        return Err(ProjError::Cayley);
    }
    let min_n = if field == Field::R { 2 } else { 1 };
    if n < min_n {
        return Err(ProjError::Domain(format!("{}P^{}: n must be at least {}", field, n, min_n)));
    }
    if k == 0 {
        return Err(ProjError::Domain("k must be positive".into()));
    }
    let sphere_part = pi_sphere(cat, field.sphere_dim(n), k)?;
    let fiber_part = match field {
        // π_1(RP^n) ≅ π_0(S^0), generated by i_R
        Field::R if k == 1 => TableEntry {
            group: FgAbGroup::cyclic(2).with_generators(vec![GeneratorExpr::iota(0)]).unwrap(),
            ..trivial_entry(SpaceId::Sphere(0), 0, "pi_1(RP^n) = Z_2")
        },
        Field::R => trivial_entry(SpaceId::Sphere(0), k - 1, "S^0 is discrete"),
        _ => pi_sphere(cat, field.d() - 1, k - 1).map_err(|_| NotCovered::new(SpaceId::Sphere(field.d() - 1), k - 1))?,
    };
    let ambient = Ambient::split(vec![
        (GAMMA.into(), relabel_group(&sphere_part.group, &|g| g.gamma())),
        (FIBER.into(), relabel_group(&fiber_part.group, &|g| g.suspend().i_push())),
    ]);
    Ok(ProjDecomposition { field, n, k, sphere_part, fiber_part, ambient })
}
