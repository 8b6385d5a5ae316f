//! P_k(FP^n), P′_k(FP^n) and P″_k(FP^n).

use fga::{gcd, lcm_pair, Ambient, FgAbGroup, SubgroupSpec};
use tables::{pi_sphere, Catalog};
use whitehead::{p_group_sphere, GroupResult, Status};

use crate::decompose::{decompose_pi, relabel, ProjDecomposition};
use crate::rules::{ex2, php1, spec_at};
use crate::subgroups::{gen_at, l_subgroups, m_subgroup, p10_rp4, q_subgroup};
use crate::Field;

fn cite2(a: &str, b: &str) -> String {
    if b.is_empty() {
        a.to_string()
    } else {
        format!("{}; {}", a, b)
    }
}

/// A result about π_k(S^{d(n+1)−1}) moved into π_k(FP^n) along γ_n.
fn lift(dec: &ProjDecomposition, r: GroupResult, cite: &str) -> GroupResult {
    if !r.is_covered() {
        return r;
    }
    GroupResult {
        status: r.status,
        value: dec.on_gamma(r.value),
        upper: r.upper.map(|u| dec.on_gamma(u)),
        ambient: Some(dec.ambient.clone()),
        citation: cite2(cite, &r.citation),
        notes: r.notes,
    }
}

/// Only P_k ⊆ γ_n∗P_k(S^{d(n+1)−1}) is known.
fn upper_only(dec: &ProjDecomposition, sph: GroupResult, cite: &str) -> GroupResult {
    let amb = dec.ambient.clone();
    match sph.status {
        Status::Exact if sph.value == SubgroupSpec::Zero => GroupResult::exact(amb, SubgroupSpec::Zero, cite2(cite, &sph.citation)),
        Status::Exact | Status::Bounds | Status::UpperBound => {
            GroupResult::upper_bound(amb, dec.on_gamma(sph.upper_spec()), cite2(cite, &sph.citation))
        }
        _ => GroupResult::not_covered(format!("P_{}({}P^{}) is not determined", dec.k, dec.field, dec.n)),
    }
}

fn trivial(dec: &ProjDecomposition) -> Option<GroupResult> {
    dec.group()
        .is_trivial()
        .then(|| GroupResult::exact(dec.ambient.clone(), SubgroupSpec::Zero, format!("pi_{}({}P^{}) = 0", dec.k, dec.field, dec.n)))
}

/// P_k(FP^n) for F = R, C, H. KP^2 lives in the `cayley` crate.
pub fn p_group(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    if field == Field::K {
        return GroupResult::not_covered("KP^2 is handled by the Cayley plane tables");
    }
    if n == 0 || k == 0 {
        return GroupResult::not_covered("n and k must be positive");
    }
    if n == 1 {
        return p_line(field, k, cat);
    }
    let dec = match decompose_pi(field, n, k, cat) {
        Ok(d) => d,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    match field {
        Field::R => p_real(&dec, cat),
        Field::C => p_complex(&dec, cat),
        Field::H => p_quaternionic(&dec, cat),
        Field::K => unreachable!(),
    }
}

/// FP^1 is a sphere.
fn p_line(field: Field, k: u32, cat: &Catalog) -> GroupResult {
    let dim = field.d();
    if field == Field::R {
        return match pi_sphere(cat, 1, k) {
            Ok(e) => GroupResult::exact(Ambient::single(e.group), SubgroupSpec::Whole, "RP^1 = S^1 is a group"),
            Err(e) => GroupResult::not_covered(e.to_string()),
        };
    }
    let r = p_group_sphere(cat, dim, k);
    if r.is_covered() {
        GroupResult { citation: cite2(&format!("{}P^1 = S^{}", field, dim), &r.citation), ..r }
    } else {
        r
    }
}

fn p_real(dec: &ProjDecomposition, cat: &Catalog) -> GroupResult {
    let (n, k) = (dec.n, dec.k);
    let amb = dec.ambient.clone();
    if k == 1 {
        let spec = if n % 2 == 1 { SubgroupSpec::Whole } else { SubgroupSpec::Zero };
        return GroupResult::exact(amb, spec, "Sect. 2, P_1(RP^n)");
    }
    if let Some(r) = trivial(dec) {
        return r;
    }
    let s = k - n;
    if n == 2 {
        let spec = if k == 2 { SubgroupSpec::Zero } else { SubgroupSpec::Whole };
        return GroupResult::exact(amb, spec, "Prop. rc1(2)");
    }
    if n == 4 && (4..=6).contains(&s) {
        let g = &dec.sphere_part.group;
        let spec = match k {
            8 => gen_at(g, "cmp(E(nu'(3)),eta(7))", 1, "gamma(cmp(E(nu'(3)),eta(7)))").map(|x| SubgroupSpec::GeneratedBy(vec![x])),
            9 => gen_at(g, "cmp(E(nu'(3)),eta(7),eta(8))", 1, "gamma(cmp(E(nu'(3)),eta(7),eta(8)))")
                .map(|x| SubgroupSpec::GeneratedBy(vec![x])),
            _ => p10_rp4(g, true),
        };
        return match spec {
            Some(s) => GroupResult::exact(amb, s, "Thm. main0"),
            None => GroupResult::not_covered("pi_k(S^4) generators missing from catalog"),
        };
    }
    let sph = p_group_sphere(cat, n, k);
    if n % 2 == 1 {
        lift(dec, sph, "Prop. rc1(1)")
    } else if s <= 7 {
        lift(dec, sph, "Thm. main0")
    } else if s + 2 <= n {
        lift(dec, sph, "Prop. rc1(2)")
    } else {
        upper_only(dec, sph, "Prop. rc1(1)")
    }
}

fn p_complex(dec: &ProjDecomposition, cat: &Catalog) -> GroupResult {
    let (n, k) = (dec.n, dec.k);
    let amb = dec.ambient.clone();
    if k == 2 {
        let spec = if n % 2 == 0 { SubgroupSpec::Multiple(2) } else { SubgroupSpec::Whole };
        return GroupResult::exact(amb, spec, "Sect. 2, P_2(CP^n)");
    }
    if let Some(r) = trivial(dec) {
        return r;
    }
    if n == 3 {
        return GroupResult::exact(amb, SubgroupSpec::Whole, "Prop. rc1(1), P_k(CP^3) = pi_k(CP^3) [L]");
    }
    let big_n = 2 * n + 1;
    let s = k - big_n;
    if let Some(rule) = ex2(s) {
        if let Some(spec) = spec_at(&rule, n) {
            let spec = spec.normalize(&dec.sphere_part.group);
            return GroupResult::exact(amb, dec.on_gamma(spec), rule.citation);
        }
    }
    let sph = p_group_sphere(cat, big_n, k);
    if n % 2 == 1 {
        lift(dec, sph, "Prop. rc1(1)")
    } else if s < 2 * n {
        upper_only(dec, sph, "Prop. rc1(3)")
    } else {
        upper_only(dec, sph, "Prop. rc1(1)")
    }
}

fn exh1_cite(n: u32, k: u32) -> Option<&'static str> {
    Some(match (n, k) {
        (2.., 5..=10) => "Prop. exh1(1)",
        (2, 11) => "Prop. exh1(2)",
        (2, 12 | 13) => "Prop. exh1(3)",
        (3.., 11..=14) => "Prop. exh1(4)",
        (3, 15) => "Prop. exh1(5)",
        (3, 16..=18) => "Prop. exh1(6)",
        _ => return None,
    })
}

fn p_quaternionic(dec: &ProjDecomposition, cat: &Catalog) -> GroupResult {
    let (n, k) = (dec.n, dec.k);
    let amb = dec.ambient.clone();
    if let Some(r) = trivial(dec) {
        return r;
    }
    if k == 4 {
        let m = lcm_pair(12, 24 / gcd(24, n as u64 + 1));
        return GroupResult::exact(amb, SubgroupSpec::multiple(m), "Sect. 3, P_4(HP^n)");
    }
    if k <= 4 * n + 2 {
        let q = q_subgroup(k - 1, cat);
        if !q.is_covered() {
            return q;
        }
        let head = exh1_cite(n, k).map(|c| format!("{}; Prop. rc12(3)", c)).unwrap_or_else(|| "Prop. rc12(3)".into());
        return GroupResult::exact(amb, dec.on_fiber(q.value), cite2(&head, &q.citation));
    }
    let off = k - (4 * n + 3);
    let l = l_subgroups(n, k, cat).l;
    if let Some(pp) = php1(off).and_then(|r| spec_at(&r, n).map(|s| (s, r.citation))) {
        let (spec, php_cite) = pp;
        let gamma = spec.normalize(&dec.sphere_part.group);
        let head = match exh1_cite(n, k) {
            Some(c) => format!("{}; {}", c, php_cite),
            None => php_cite.to_string(),
        };
        if l.is_covered() {
            return GroupResult::exact(amb, dec.on_both(gamma, l.value), cite2(&head, &l.citation));
        }
        return GroupResult::bounds(
            amb,
            dec.on_both(gamma.clone(), SubgroupSpec::Zero),
            dec.on_both(gamma, SubgroupSpec::Whole),
            head,
        );
    }
    quaternionic_general(dec, cat, l)
}

/// Outside the ranges with a closed form: P′ ⊕ P″ ⊆ P ⊆ Ker[−, i_H].
fn quaternionic_general(dec: &ProjDecomposition, cat: &Catalog, l: GroupResult) -> GroupResult {
    let (n, k) = (dec.n, dec.k);
    let big_n = 4 * n + 3;
    let sph_amb = Ambient::single(dec.sphere_part.group.clone());
    let sph = p_group_sphere(cat, big_n, k);
    let m = m_subgroup(Field::H, n, k, cat);
    let q = q_subgroup(k - 1, cat);
    let exact_pm = (sph.status == Status::Exact && m.status == Status::Exact)
        .then(|| sph_amb.intersect(&sph.value, &m.value).ok())
        .flatten();
    if n % 2 == 1 && q.status == Status::Exact {
        if let Some(pm) = &exact_pm {
            return GroupResult::exact(dec.ambient.clone(), dec.on_both(pm.clone(), q.value), "Prop. rc12(1)");
        }
    }
    let lower_gamma = exact_pm.unwrap_or(SubgroupSpec::Zero);
    let lower_fiber = if l.status == Status::Exact { l.value } else { SubgroupSpec::Zero };
    let upper_gamma = m.upper_spec();
    let upper_fiber = if q.status == Status::Exact { q.value } else { SubgroupSpec::Whole };
    let mut r = GroupResult::bounds(
        dec.ambient.clone(),
        dec.on_both(lower_gamma, lower_fiber),
        dec.on_both(upper_gamma, upper_fiber),
        "Lemma ker(1); Prop. newP",
    );
    if k > 22 {
        r = r.with_note("L''_{k-1,n}(S^3) unknown past k = 22 (open problem on nu_4 smash beta)");
    }
    r
}

/// P′_{4n+3+k}(HP^n) for 0 ≤ k ≤ 10, and k = 11 when n ≢ 115 (mod 128).
pub fn p_prime_hp(n: u32, k_offset: u32, cat: &Catalog) -> GroupResult {
    let Some(rule) = php1(k_offset) else {
        return GroupResult::not_covered(format!("P'_(4n+3+{}) (HP^n) is not determined", k_offset));
    };
    let Some(spec) = spec_at(&rule, n) else {
        return GroupResult::not_covered(format!("{} does not cover n = {}", rule.citation, n));
    };
    let k = 4 * n + 3 + k_offset;
    match decompose_pi(Field::H, n, k, cat) {
        Ok(dec) => {
            let spec = spec.normalize(&dec.sphere_part.group);
            GroupResult::exact(dec.ambient.clone(), dec.on_gamma(spec), rule.citation)
        }
        // π_{k−1}(S^3) unknown: answer inside γ_n∗π_k(S^{4n+3}) alone
        Err(_) => match pi_sphere(cat, 4 * n + 3, k) {
            Ok(e) => {
                let spec = spec.normalize(&e.group);
                GroupResult::exact(Ambient::single(gamma_group(&e.group)), relabel(spec, &|g| g.gamma()), rule.citation)
                    .with_note(format!("ambient is the sphere part only; pi_{}(S^3) is not tabulated", k - 1))
            }
            Err(e) => GroupResult::not_covered(e.to_string()),
        },
    }
}

fn gamma_group(g: &FgAbGroup) -> FgAbGroup {
    if g.is_trivial() {
        return g.clone();
    }
    FgAbGroup::from_summands(g.summands().into_iter().map(|(d, x)| (d, x.map(|x| x.gamma()))).collect())
}

/// P′_k(FP^n) = P_k(FP^n) ∩ γ_n∗π_k(S^{d(n+1)−1}).
pub fn p_prime(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    let dec = match decompose_pi(field, n, k, cat) {
        Ok(d) => d,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    if dec.sphere_trivial() {
        return GroupResult::exact(dec.ambient.clone(), SubgroupSpec::Zero, format!("pi_{}(S^{}) = 0", k, field.sphere_dim(n)));
    }
    if dec.fiber_trivial() {
        let p = p_group(field, n, k, cat);
        return if p.is_covered() { GroupResult { citation: cite2("P' = P, fiber part is 0", &p.citation), ..p } } else { p };
    }
    if field == Field::H && k >= 4 * n + 3 {
        let r = p_prime_hp(n, k - 4 * n - 3, cat);
        if r.is_covered() {
            return r;
        }
    }
    GroupResult::not_covered(format!("P'_{}({}P^{}) is not determined", k, field, n))
}

/// P″_k(FP^n) = i_F∗EL_{k−1}(S^{d−1}).
pub fn p_double_prime(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    let dec = match decompose_pi(field, n, k, cat) {
        Ok(d) => d,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    if dec.fiber_trivial() {
        return GroupResult::exact(dec.ambient.clone(), SubgroupSpec::Zero, "P''_k = 0 for d = 1, 2 and k >= d+1");
    }
    if dec.sphere_trivial() && field != Field::H {
        let p = p_group(field, n, k, cat);
        return if p.is_covered() { GroupResult { citation: cite2("P'' = P, sphere part is 0", &p.citation), ..p } } else { p };
    }
    let l = l_subgroups(n, k, cat).l;
    if l.status != Status::Exact {
        return GroupResult::not_covered(format!("L_{{{},{}}}(S^3) is not determined", k - 1, n));
    }
    GroupResult::exact(dec.ambient.clone(), dec.on_fiber(l.value), cite2("Prop. newP", &l.citation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fga::Order;

    fn typ(r: &GroupResult) -> FgAbGroup {
        r.ambient.as_ref().unwrap().subgroup_type(&r.value).unwrap()
    }

    #[test]
    fn spec_examples() {
        let cat = Catalog::bundled();
        assert_eq!(p_group(Field::R, 2, 2, &cat).value, SubgroupSpec::Zero);
        let r = p_group(Field::R, 4, 10, &cat);
        assert_eq!(r.status, Status::Exact);
        assert_eq!(typ(&r), FgAbGroup::cyclic(24));
        let labels: Vec<String> = r.value.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["sc(3,gamma(cmp(nu(4),nu(7))))", "gamma(cmp(add(nu(4),sc(-1,alpha(1,4))),alpha(1,7)))"]);
        assert_eq!(p_group(Field::C, 2, 7, &cat).value, SubgroupSpec::Zero);
        for n in 3..6 {
            assert_eq!(typ(&p_group(Field::H, n, 11, &cat)), FgAbGroup::cyclic(5));
        }
        assert_eq!(typ(&p_group(Field::H, 2, 11, &cat)), FgAbGroup::new(1, vec![5]).unwrap());
        let r = p_group(Field::H, 2, 11, &cat);
        assert_eq!(r.indices().unwrap().0, Order::Finite(24));
        for n in 2..8 {
            assert_eq!(p_group(Field::H, n, 5, &cat).value, SubgroupSpec::Zero);
        }
    }

    #[test]
    fn php1_examples() {
        let cat = Catalog::bundled();
        assert_eq!(p_prime_hp(5, 0, &cat).value, SubgroupSpec::Multiple(4));
        assert_eq!(p_prime_hp(2, 0, &cat).indices().unwrap().0, Order::Finite(120));
        assert_eq!(p_prime_hp(3, 6, &cat).value, SubgroupSpec::Whole);
        assert_eq!(p_prime_hp(7, 7, &cat).value, SubgroupSpec::Whole);
        assert!(!p_prime_hp(1, 0, &cat).is_covered());
        assert!(!p_prime_hp(2, 12, &cat).is_covered());
    }

    #[test]
    fn lines_are_spheres() {
        let cat = Catalog::bundled();
        assert_eq!(p_group(Field::R, 1, 1, &cat).value, SubgroupSpec::Whole);
        assert_eq!(p_group(Field::C, 1, 2, &cat).value, SubgroupSpec::Zero);
        assert_eq!(p_group(Field::C, 1, 5, &cat).value, SubgroupSpec::Whole);
        assert_eq!(p_group(Field::H, 1, 7, &cat).indices().unwrap().0, Order::Finite(12));
    }
}
