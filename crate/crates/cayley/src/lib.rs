//! The Cayley projective plane KP² = S⁸ ∪_{σ₈} e¹⁶.
//!
//! In degrees up to 21 (and 25, 27, 28) π_k(KP²) = i_K∗Eπ_{k−1}(S⁷); the
//! remaining degrees up to 28 come from catalog records.

use std::fmt;

use fga::{Ambient, FgAbGroup, GeneratorExpr, SubGen, SubgroupSpec};
use tables::{pi_sphere, Catalog, NotCovered, SpaceId};
use whitehead::{GroupResult, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KP2Entry {
    pub k: u32,
    pub group: FgAbGroup,
    pub generators: Vec<GeneratorExpr>,
    /// Identities among the generators, each tagged with its source.
    pub relations: Vec<String>,
    pub citation: String,
    /// `Some(p)` when `group` is only the p-primary part.
    pub prime: Option<u64>,
}

impl KP2Entry {
    pub fn ambient(&self) -> Ambient {
        Ambient::single(self.group.clone())
    }
}

impl fmt::Display for KP2Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prime {
            Some(p) => write!(f, "pi_{}(KP2; {}) = {}", self.k, p, self.group),
            None => write!(f, "pi_{}(KP2) = {}", self.k, self.group),
        }
    }
}

fn pushed(g: &FgAbGroup) -> FgAbGroup {
    if g.is_trivial() {
        return FgAbGroup::zero().with_generators(vec![]).unwrap();
    }
    FgAbGroup::from_summands(g.summands().into_iter().map(|(d, x)| (d, x.map(|x| x.suspend().i_push()))).collect())
}

fn from_group(k: u32, group: FgAbGroup, citation: String, relations: Vec<String>, prime: Option<u64>) -> KP2Entry {
    let generators = group.generators().map(|g| g.to_vec()).unwrap_or_default();
    KP2Entry { k, group, generators, relations, citation, prime }
}

/// π_k(KP²) for 1 ≤ k ≤ 28.
pub fn pi_kp2(k: u32, cat: &Catalog) -> Result<KP2Entry, NotCovered> {
    let nc = NotCovered::new(SpaceId::Kp2, k);
    if k == 0 || k > 28 {
        return Err(nc);
    }
    if k < 8 {
        let g = FgAbGroup::zero().with_generators(vec![]).unwrap();
        return Ok(from_group(k, g, "KP^2 is 7-connected".into(), vec![], None));
    }
    if k <= 21 || [25, 27, 28].contains(&k) {
        let e = pi_sphere(cat, 7, k - 1).map_err(|_| nc.clone())?;
        let cite = format!("Lemma JT, pi_k(KP^2) = i_K E pi_(k-1)(S^7); {}", e.citation);
        return Ok(from_group(k, pushed(&e.group), cite, vec![], None));
    }
    let relations: Vec<String> = match k {
        22 => vec!["i_K (E sigma') sigma_15 = 0 [Lemma JT]".into()],
        23 => vec!["i_K((E sigma') eps_15) = i_K((E sigma') nubar_15) [Lemma JT]".into()],
        26 => vec![
            "0 -> Z24+Z2 -> pi_26(KP2) -> Z24 -> 0 [Lemma JT]".into(),
            "8 nu~_21 = x i_K zeta_8 sigma_19, x odd [Lemma JT, proof]".into(),
        ],
        _ => vec![],
    };
    if let Some(e) = cat.get(SpaceId::Kp2, k) {
        return Ok(from_group(k, e.group.clone(), e.citation.clone(), relations, None));
    }
    if let Some(e) = cat.get_primary(SpaceId::Kp2, k, 2) {
        return Ok(from_group(k, e.group.clone(), e.citation.clone(), relations, Some(2)));
    }
    Err(nc)
}

fn gen(g: &FgAbGroup, coords: &[i64], label: &str) -> SubGen {
    debug_assert_eq!(coords.len(), g.summand_orders().len());
    SubGen::new(coords.to_vec(), GeneratorExpr::parse(label).expect("label"))
}

fn ambient_for(k: u32, cat: &Catalog) -> Result<KP2Entry, GroupResult> {
    if !(1..=21).contains(&k) {
        return Err(GroupResult::not_covered(format!("P_{}(KP^2) and G_{}(KP^2) are only tabulated for k <= 21", k, k)));
    }
    pi_kp2(k, cat).map_err(|e| GroupResult::not_covered(e.to_string()))
}

/// P_k(KP²).
pub fn p_group_kp2(k: u32, cat: &Catalog) -> GroupResult {
    let e = match ambient_for(k, cat) {
        Ok(e) => e,
        Err(r) => return r,
    };
    let amb = e.ambient();
    let g = &e.group;
    if g.is_trivial() {
        return GroupResult::exact(amb, SubgroupSpec::Zero, e.citation);
    }
    let by = |gens: Vec<SubGen>| SubgroupSpec::GeneratedBy(gens);
    match k {
        9 | 10 | 12 | 13 | 14 | 20 => GroupResult::exact(amb, SubgroupSpec::Zero, "Thm. o2(1)"),
        11 => GroupResult::exact(amb, SubgroupSpec::Multiple(8), "Thm. o2(2)"),
        // π_15(S^7) = {σ′η_14, ν̄_7, ε_7}, η_7σ_8 = σ′η_14 + ν̄_7 + ε_7
        16 => GroupResult::bounds(
            amb,
            by(vec![gen(g, &[1, 0, 0], "i(E(cmp(sigma'(7),eta(14))))")]),
            by(vec![gen(g, &[1, 0, 0], "i(E(cmp(sigma'(7),eta(14))))"), gen(g, &[1, 1, 1], "i(E(cmp(eta(7),sigma(8))))")]),
            "Thm. o2(4)",
        ),
        // π_16(S^7) = {σ′η_14², ν_7³, μ_7, η_7ε_8}
        17 => GroupResult::bounds(
            amb,
            by(vec![gen(g, &[1, 0, 0, 0], "i(E(cmp(sigma'(7),eta(14),eta(15))))")]),
            by(vec![
                gen(g, &[1, 0, 0, 0], "i(E(cmp(sigma'(7),eta(14),eta(15))))"),
                gen(g, &[0, 1, 0, 1], "i(E(add(cmp(nu(7),nu(10),nu(13)),cmp(eta(7),eps(8)))))"),
            ]),
            "Thm. o2(5)",
        ),
        // π_17(S^7) = Z_2{η_7μ_8} ⊕ Z_24{ν_7σ_10 + β_1(7)}
        18 => GroupResult::exact(amb, by(vec![gen(g, &[0, 1], "i(E(add(cmp(nu(7),sigma(10)),beta1(7))))")]), "Thm. o2(6)"),
        // π_18(S^7) = Z_2{ν̄_7ν_15} ⊕ Z_504{ζ_7}
        19 => GroupResult::exact(
            amb,
            by(vec![gen(g, &[1, 0], "i(E(cmp(nubar(7),nu(15))))"), gen(g, &[0, 8], "sc(8,i(E(zeta(7))))")]),
            "Thm. o2(7)",
        ),
        21 => GroupResult::exact(amb, SubgroupSpec::Whole, "Thm. o2(8)"),
        _ => GroupResult::not_covered(format!("P_{}(KP^2) is not determined", k)),
    }
}

/// G_k(KP²).
pub fn g_group_kp2(k: u32, cat: &Catalog) -> GroupResult {
    let e = match ambient_for(k, cat) {
        Ok(e) => e,
        Err(r) => return r,
    };
    let amb = e.ambient();
    if e.group.is_trivial() {
        return GroupResult::exact(amb, SubgroupSpec::Zero, e.citation);
    }
    if k == 8 {
        return GroupResult::exact(amb, SubgroupSpec::Zero, "Sect. 6, G_8(KP^2) = 0");
    }
    let p = p_group_kp2(k, cat);
    if p.status == Status::Exact && p.value == SubgroupSpec::Zero {
        return GroupResult::exact(amb, SubgroupSpec::Zero, format!("G <= P; {}", p.citation));
    }
    let (lower, cite) = match k {
        11 => return GroupResult { citation: "Thm. o2(2)".into(), ..p },
        15 => (SubgroupSpec::Multiple(8), "Thm. o2(3)"),
        18 => (SubgroupSpec::Multiple(8), "Thm. o2(6)"),
        21 => (SubgroupSpec::Multiple(2), "Thm. o2(8)"),
        _ => (SubgroupSpec::Zero, ""),
    };
    let cite = if cite.is_empty() { format!("G <= P; {}", p.citation) } else { format!("{}; G <= P", cite) };
    if p.is_covered() {
        GroupResult::bounds(amb, lower, p.upper_spec(), cite)
    } else if lower != SubgroupSpec::Zero {
        GroupResult::lower_bound(amb, lower, cite)
    } else {
        GroupResult::not_covered(format!("G_{}(KP^2) is not determined", k))
    }
}

/// G_k(KP²) = P_k(KP²) is forced by a stated result.
pub fn g_equals_p_kp2(k: u32) -> bool {
    k < 8 || matches!(k, 9 | 10 | 11 | 12 | 13 | 14 | 20)
}
