use fga::{Ambient, FgAbGroup, SubGen, SubgroupSpec};
use projspace::{decompose_pi, p_group, p_prime, Field, ProjDecomposition};
use tables::Catalog;
use whitehead::{delta_fact, p_group_sphere, GroupResult, Status};

use crate::rules::{applicable, Bound, GBoundRule, Scope, Upper};

fn push(cites: &mut Vec<String>, c: &str) {
    for part in c.split("; ") {
        if !part.is_empty() && !cites.iter().any(|x| x == part) {
            cites.push(part.to_string());
        }
    }
}

fn meet(amb: &Ambient, a: &SubgroupSpec, b: &SubgroupSpec) -> Option<SubgroupSpec> {
    if amb.contains(a, b).ok()? {
        Some(b.clone())
    } else if amb.contains(b, a).ok()? {
        Some(a.clone())
    } else {
        amb.intersect(a, b).ok()
    }
}

fn join(amb: &Ambient, a: &SubgroupSpec, b: &SubgroupSpec) -> Option<SubgroupSpec> {
    if amb.contains(a, b).ok()? {
        Some(a.clone())
    } else if amb.contains(b, a).ok()? {
        Some(b.clone())
    } else {
        amb.join(a, b).ok()
    }
}

/// Place a rule bound in π_k(FP^n); `None` when the data it needs is missing.
fn place(b: Bound, dec: &ProjDecomposition, cat: &Catalog) -> Option<SubgroupSpec> {
    let (n, k) = (dec.n, dec.k);
    match b {
        Bound::Zero => Some(SubgroupSpec::Zero),
        Bound::Whole => Some(SubgroupSpec::Whole),
        Bound::Multiple(f) => Some(SubgroupSpec::multiple(f(n, k)?)),
        Bound::GammaMultiple(f) => Some(dec.on_gamma(SubgroupSpec::multiple(f(n, k)?))),
        Bound::GammaSpec(f) => Some(dec.on_gamma(f(&dec.sphere_part.group)?)),
        Bound::SphereLift => {
            let r = p_group_sphere(cat, dec.field.sphere_dim(n), k);
            (r.status == Status::Exact).then(|| dec.on_gamma(r.value))
        }
    }
}

/// γ_n∗ of ⟨♯Δ(e_i)·e_i⟩ ⊆ γ_n∗Ker Δ, over the labelled summands e_i of
/// π_k(S^{d(n+1)−1}); summands without a known Δ-order contribute nothing.
fn kernel_lower(dec: &ProjDecomposition) -> Option<(SubgroupSpec, String)> {
    let family = dec.field.family()?;
    let sum = dec.sphere_part.group.summands();
    if sum.is_empty() {
        return None;
    }
    let dim = dec.field.sphere_dim(dec.n);
    let mut gens = Vec::new();
    let mut cites = Vec::new();
    for (i, (d, g)) in sum.iter().enumerate() {
        let Some(g) = g else { continue };
        let Ok((o, c)) = delta_fact(family, dim, g) else { continue };
        let Some(m) = o.finite() else { continue };
        if *d != 0 && m % d == 0 {
            continue;
        }
        let mut coords = vec![0i64; sum.len()];
        coords[i] = i64::try_from(m).ok()?;
        gens.push(SubGen::new(coords, g.clone().scaled(m as i64)));
        push(&mut cites, &c);
    }
    if gens.is_empty() {
        return None;
    }
    push(&mut cites, "Lemma fund1(1)");
    Some((dec.on_gamma(SubgroupSpec::GeneratedBy(gens)), cites.join("; ")))
}

/// γ_n∗G_k(S^{d(n+1)−1}) when it is known.
fn gotc_upper(dec: &ProjDecomposition, cat: &Catalog) -> Option<(SubgroupSpec, String)> {
    let r = p_group_sphere(cat, dec.field.sphere_dim(dec.n), dec.k);
    match r.status {
        Status::Exact | Status::Bounds | Status::UpperBound => {
            Some((dec.on_gamma(r.upper_spec()), format!("Prop. Gotc; {}", r.citation)))
        }
        _ => None,
    }
}

struct Acc<'a> {
    amb: &'a Ambient,
    lower: Option<SubgroupSpec>,
    upper: Option<SubgroupSpec>,
    cites: Vec<String>,
}

impl<'a> Acc<'a> {
    fn new(amb: &'a Ambient) -> Self {
        Acc { amb, lower: None, upper: None, cites: vec![] }
    }

    fn lower(&mut self, s: SubgroupSpec, cite: &str) {
        let j = match &self.lower {
            None => Some(s),
            Some(l) => join(self.amb, l, &s),
        };
        if j.is_some() {
            self.lower = j;
            push(&mut self.cites, cite);
        }
    }

    fn upper(&mut self, s: SubgroupSpec, cite: &str) {
        let m = match &self.upper {
            None => Some(s),
            Some(u) => meet(self.amb, u, &s),
        };
        if m.is_some() {
            self.upper = m;
            push(&mut self.cites, cite);
        }
    }

    fn finish(self, what: &str) -> GroupResult {
        let amb = self.amb.clone();
        let cite = self.cites.join("; ");
        match (self.lower, self.upper) {
            (Some(l), Some(u)) if amb.same_subgroup(&l, &u).unwrap_or(false) => GroupResult::exact(amb, l, cite),
            (Some(l), Some(u)) => GroupResult::bounds(amb, l, u, cite),
            (Some(l), None) => GroupResult::lower_bound(amb, l, cite),
            (None, Some(u)) => GroupResult::upper_bound(amb, u, cite),
            (None, None) => GroupResult::not_covered(format!("{} is not determined", what)),
        }
    }
}

fn first_exact(rules: &[GBoundRule], scope: Scope, dec: &ProjDecomposition, cat: &Catalog) -> Option<(SubgroupSpec, &'static str)> {
    rules
        .iter()
        .filter(|r| r.is_exact() && r.scope == scope)
        .find_map(|r| place(r.lower, dec, cat).map(|s| (s, r.citation)))
}

/// G_k(FP^n).
pub fn g_group(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    if field == Field::K {
        if n != 2 {
            return GroupResult::not_covered("KP^n is only defined for n = 2");
        }
        return cayley::g_group_kp2(k, cat);
    }
    if n == 0 || k == 0 {
        return GroupResult::not_covered("n and k must be positive");
    }
    if n == 1 {
        // FP^1 is a sphere, and G_k(S^m) = P_k(S^m)
        return p_group(field, n, k, cat);
    }
    let dec = match decompose_pi(field, n, k, cat) {
        Ok(d) => d,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    let amb = &dec.ambient;
    let what = format!("G_{}({}P^{})", k, field, n);
    if dec.group().is_trivial() {
        return GroupResult::exact(amb.clone(), SubgroupSpec::Zero, format!("pi_{}({}P^{}) = 0", k, field, n));
    }
    let p = p_group(field, n, k, cat);
    if p.status == Status::Exact && amb.same_subgroup(&p.value, &SubgroupSpec::Zero).unwrap_or(false) {
        return GroupResult::exact(amb.clone(), SubgroupSpec::Zero, format!("G_k ⊆ P_k; {}", p.citation));
    }
    let rules = applicable(field, n, k);
    if let Some((s, c)) = first_exact(&rules, Scope::G, &dec, cat) {
        return GroupResult::exact(amb.clone(), s, c);
    }

    let mut acc = Acc::new(amb);
    for r in &rules {
        // a lower bound for G′ is one for G
        if let Some(s) = place(r.lower, &dec, cat) {
            acc.lower(s, r.citation);
        }
    }
    // stated lower bounds already account for Ker Δ
    if acc.lower.is_none() {
        if let Some((s, c)) = kernel_lower(&dec) {
            acc.lower(s, &c);
        }
    }
    if p.is_covered() && p.status != Status::LowerBound {
        acc.upper(p.upper_spec(), &format!("G_k ⊆ P_k; {}", p.citation));
    }
    // below d+1 the fiber part vanishes for R and C, so G = G′
    if field != Field::H && dec.fiber_trivial() {
        if let Some((s, c)) = gotc_upper(&dec, cat) {
            acc.upper(s, &c);
        }
    }
    for r in rules.iter().filter(|r| r.scope == Scope::G) {
        if let Upper::Within(b) = r.upper {
            if let Some(s) = place(b, &dec, cat) {
                acc.upper(s, r.citation);
            }
        }
    }
    acc.finish(&what)
}

/// G′_k(FP^n) = G_k(FP^n) ∩ γ_n∗π_k(S^{d(n+1)−1}), for n ≥ 2.
pub fn g_prime(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    if field == Field::K || n < 2 || k == 0 {
        return GroupResult::not_covered("G' is only defined for RP^n, CP^n, HP^n with n >= 2");
    }
    let dec = match decompose_pi(field, n, k, cat) {
        Ok(d) => d,
        Err(e) if field == Field::H => match sphere_only(n, k, cat) {
            Some(d) => d,
            None => return GroupResult::not_covered(e.to_string()),
        },
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    let amb = &dec.ambient;
    let partial = !amb.parts().iter().any(|(t, _)| t == projspace::FIBER);
    let note = |r: GroupResult| {
        if partial && r.is_covered() {
            r.with_note(format!("ambient is the sphere part only; pi_{}(S^3) is not tabulated", k - 1))
        } else {
            r
        }
    };
    if dec.sphere_trivial() {
        return note(GroupResult::exact(amb.clone(), SubgroupSpec::Zero, format!("pi_{}(S^{}) = 0", k, field.sphere_dim(n))));
    }
    if field != Field::H && dec.fiber_trivial() {
        let g = g_group(field, n, k, cat);
        return if g.is_covered() { GroupResult { citation: format!("G' = G, fiber part is 0; {}", g.citation), ..g } } else { g };
    }
    let gamma_whole = dec.on_gamma(SubgroupSpec::Whole);
    let rules = applicable(field, n, k);
    let exact = first_exact(&rules, Scope::GPrime, &dec, cat)
        .or_else(|| first_exact(&rules, Scope::G, &dec, cat).and_then(|(s, c)| Some((meet(amb, &s, &gamma_whole)?, c))));
    if let Some((s, c)) = exact {
        return note(GroupResult::exact(amb.clone(), s, c));
    }

    let mut acc = Acc::new(amb);
    for r in &rules {
        if let Some(s) = place(r.lower, &dec, cat) {
            if amb.contains(&gamma_whole, &s).unwrap_or(false) {
                acc.lower(s, r.citation);
            }
        }
    }
    if acc.lower.is_none() {
        if let Some((s, c)) = kernel_lower(&dec) {
            acc.lower(s, &c);
        }
    }
    acc.upper(gamma_whole, "");
    if let Some((s, c)) = gotc_upper(&dec, cat) {
        acc.upper(s, &c);
    }
    let pp = if partial { projspace::p_prime_hp(n, k.saturating_sub(4 * n + 3), cat) } else { p_prime(field, n, k, cat) };
    let pp_applies = !partial || k >= 4 * n + 3;
    if pp_applies && pp.is_covered() && pp.status != Status::LowerBound {
        acc.upper(pp.upper_spec(), &format!("G' ⊆ P'; {}", pp.citation));
    }
    note(acc.finish(&format!("G'_{}({}P^{})", k, field, n)))
}

/// π_k(HP^n) restricted to its γ_n part when π_{k−1}(S^3) is missing.
fn sphere_only(n: u32, k: u32, cat: &Catalog) -> Option<ProjDecomposition> {
    let sphere_part = tables::pi_sphere(cat, 4 * n + 3, k).ok()?;
    let g = &sphere_part.group;
    let pushed = if g.is_trivial() {
        g.clone()
    } else {
        FgAbGroup::from_summands(g.summands().into_iter().map(|(d, x)| (d, x.map(|x| x.gamma()))).collect())
    };
    let fiber_part = tables::TableEntry { group: FgAbGroup::zero(), ..sphere_part.clone() };
    Some(ProjDecomposition { field: Field::H, n, k, sphere_part, fiber_part, ambient: Ambient::single(pushed) })
}
