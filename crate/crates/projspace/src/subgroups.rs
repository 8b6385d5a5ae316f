//! The auxiliary subgroups M_k(S^{d(n+1)−1}), Q_k(S^3) and L′, L″, L.

use fga::{gcd, Ambient, FgAbGroup, GeneratorExpr, SubGen, SubgroupSpec};
use tables::{pi_sphere, Catalog};
use whitehead::GroupResult;

use crate::Field;

/// Index of the cyclic summand named `gen`.
pub(crate) fn coord_of(g: &FgAbGroup, gen: &str) -> Option<usize> {
    g.generators()?.iter().position(|x| x.to_string() == gen)
}

/// One generator: `mult` times the summand named `gen`, printed as `label`.
pub(crate) fn gen_at(g: &FgAbGroup, gen: &str, mult: i64, label: &str) -> Option<SubGen> {
    let i = coord_of(g, gen)?;
    let mut coords = vec![0; g.summand_orders().len()];
    coords[i] = mult;
    Some(SubGen::new(coords, GeneratorExpr::parse(label).ok()?))
}

/// {x | 2x = 0}.
pub(crate) fn two_torsion(g: &FgAbGroup) -> SubgroupSpec {
    let orders = g.summand_orders();
    if orders.iter().all(|&d| d == 2) {
        return SubgroupSpec::Whole;
    }
    let gens: Vec<SubGen> = orders
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0 && d % 2 == 0)
        .map(|(i, &d)| {
            let mut c = vec![0; orders.len()];
            c[i] = (d / 2) as i64;
            SubGen::unlabeled(c)
        })
        .collect();
    if gens.is_empty() {
        SubgroupSpec::Zero
    } else {
        SubgroupSpec::GeneratedBy(gens)
    }
}

fn exact(g: &FgAbGroup, spec: SubgroupSpec, cite: &str) -> GroupResult {
    let spec = spec.normalize(g);
    GroupResult::exact(Ambient::single(g.clone()), spec, cite)
}

/// Q_k(S^3) = {β | ⟨ι_3, β⟩ = 0}, known for k ≤ 18.
pub fn q_subgroup(k: u32, cat: &Catalog) -> GroupResult {
    let e = match pi_sphere(cat, 3, k) {
        Ok(e) => e,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    let g = &e.group;
    if g.is_trivial() {
        return exact(g, SubgroupSpec::Zero, "pi_k(S^3) = 0");
    }
    let gens = |v: Vec<Option<SubGen>>| v.into_iter().collect::<Option<Vec<_>>>().map(SubgroupSpec::GeneratedBy);
    let (spec, cite) = match k {
        3 => (Some(SubgroupSpec::Multiple(12)), "Example e2; Lemma Q(1)"),
        4 | 5 | 11 | 12 => (Some(SubgroupSpec::Zero), "Lemma Q(1)"),
        6 => (gens(vec![gen_at(g, "omega(3)", 3, "nu'(3)")]), "Lemma Q(2)"),
        7..=9 => (Some(SubgroupSpec::Whole), "Lemma Q(2)"),
        10 => (gens(vec![gen_at(g, "add(alpha(2,3),alpha(1,5,3))", 3, "alpha(1,5,3)")]), "Lemma Q(3)"),
        13 => {
            let z12 = "add(eps'(3),cmp(alpha(1,3),alpha(2,6)))";
            (gens(vec![gen_at(g, z12, 3, "eps'(3)"), gen_at(g, z12, 4, "cmp(alpha(1,3),alpha(2,6))")]), "Lemma Q(3)")
        }
        14 => (Some(SubgroupSpec::Whole), "Lemma Q(4)"),
        15 | 17 => (Some(SubgroupSpec::Whole), "Lemma Q(5)"),
        16 => {
            let z6 = "add(cmp(nu'(3),eta(6),mu(7)),cmp(alpha(1,3),beta1(6)))";
            (gens(vec![gen_at(g, z6, 3, "cmp(nu'(3),eta(6),mu(7))")]), "Lemma Q(5)")
        }
        18 => (gens(vec![gen_at(g, "add(epsbar(3),alpha(4,3),alpha(2,5,3))", 6, "alpha(2,5,3)")]), "Lemma Q(5)"),
        _ => (None, ""),
    };
    match spec {
        Some(s) => exact(g, s, cite),
        None => GroupResult::not_covered(format!("Q_{}(S^3) is not determined", k)),
    }
}

/// L′_{k−1,n}, L″_{k−1,n} and L_{k−1,n} = L′ ∩ L″, subgroups of π_{k−1}(S^3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSubgroups {
    pub l_prime: GroupResult,
    pub l_double_prime: GroupResult,
    pub l: GroupResult,
}

pub fn l_subgroups(n: u32, k: u32, cat: &Catalog) -> LSubgroups {
    let nc = |why: String| LSubgroups {
        l_prime: GroupResult::not_covered(why.clone()),
        l_double_prime: GroupResult::not_covered(why.clone()),
        l: GroupResult::not_covered(why),
    };
    if n == 0 || k == 0 {
        return nc("n and k must be positive".into());
    }
    let e = match pi_sphere(cat, 3, k - 1) {
        Ok(e) => e,
        Err(e) => return nc(e.to_string()),
    };
    let g = &e.group;
    if g.is_trivial() {
        let z = exact(g, SubgroupSpec::Zero, "pi_{k-1}(S^3) = 0");
        return LSubgroups { l_prime: z.clone(), l_double_prime: z.clone(), l: z };
    }
    let l_prime = if n >= 2 {
        let q = q_subgroup(k - 1, cat);
        if q.is_covered() {
            GroupResult { citation: format!("Lemma LQ(3); {}", q.citation), ..q }
        } else {
            q
        }
    } else {
        GroupResult::not_covered("L'_{k-1,1} is not determined")
    };
    let l_double_prime = if k == 4 {
        exact(g, SubgroupSpec::multiple(24 / gcd(24, n as u64 + 1)), "Example e2")
    } else if (5..=22).contains(&k) && n >= 2 {
        exact(g, SubgroupSpec::Whole, "Cor. L''")
    } else if k >= 5 && k <= 4 * n + 2 {
        exact(g, SubgroupSpec::Whole, "Lemma LQ(6)")
    } else {
        GroupResult::not_covered(format!("L''_{{{},{}}}(S^3) is not determined", k - 1, n))
    };
    let l = match (l_prime.is_covered(), l_double_prime.is_covered()) {
        (true, true) => {
            let amb = Ambient::single(g.clone());
            match amb.intersect(&l_prime.value, &l_double_prime.value) {
                Ok(s) => {
                    // keep the printed generators when L″ is everything
                    let s = if l_double_prime.value == SubgroupSpec::Whole { l_prime.value.clone() } else { s };
                    exact(g, s, &format!("{}; {}", l_prime.citation, l_double_prime.citation))
                }
                Err(e) => GroupResult::not_covered(e.to_string()),
            }
        }
        // L′ ⊆ L″ for n odd
        (true, false) if n % 2 == 1 => GroupResult { citation: format!("Lemma LQ(2); {}", l_prime.citation), ..l_prime.clone() },
        _ => GroupResult::not_covered("L_{k-1,n}(S^3) is not determined"),
    };
    LSubgroups { l_prime, l_double_prime, l }
}

/// M_k(S^{d(n+1)−1}) = {α | [γ_n α, i_F] = 0}, inside π_k(S^{d(n+1)−1}).
pub fn m_subgroup(field: Field, n: u32, k: u32, cat: &Catalog) -> GroupResult {
    if field == Field::K || n == 0 {
        return GroupResult::not_covered("M is defined for R, C, H and n >= 1");
    }
    let big_n = field.sphere_dim(n);
    let e = match pi_sphere(cat, big_n, k) {
        Ok(e) => e,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    let g = &e.group;
    if g.is_trivial() {
        return exact(g, SubgroupSpec::Zero, &e.citation);
    }
    let s = k - big_n;
    match field {
        Field::R | Field::C if n % 2 == 1 => exact(g, SubgroupSpec::Whole, "Lemma PM(1)"),
        Field::R => m_real(cat, n, k, g),
        Field::C => {
            // N = 4m+1; E^{-1}Ker η∗ in stems 0..7
            const TABLE: [u64; 8] = [2, 0, 0, 1, 1, 1, 1, 2];
            if s > 7 || (s + 2 > big_n && big_n != 5) {
                return GroupResult::not_covered(format!("M_{{{},C}}(S^{}) is not determined", k, big_n));
            }
            let (m, cite) = if big_n == 5 && s >= 3 {
                (1, "Thm. ex2, proof")
            } else {
                (TABLE[s as usize], "Lemma PM(2)-(ii); Thm. ex2, proof")
            };
            exact(g, SubgroupSpec::multiple(m), cite)
        }
        Field::H => m_quaternionic(n, s, g),
        Field::K => unreachable!(),
    }
}

fn m_real(cat: &Catalog, n: u32, k: u32, g: &FgAbGroup) -> GroupResult {
    if n == 2 {
        let spec = if k == 2 { SubgroupSpec::Zero } else { SubgroupSpec::Whole };
        return exact(g, spec, "Lemma PM(4)");
    }
    if k + 2 <= 2 * n {
        return exact(g, two_torsion(g), "Lemma PM(2)-(i)");
    }
    match (n, k) {
        (4, 7) => match cat.center(4, 7) {
            Some(c) => exact(g, c.spec.clone(), "Thm. main0, proof"),
            None => GroupResult::not_covered("P_7(S^4) missing from catalog"),
        },
        (4, 8) | (4, 9) => {
            let (name, label) = if k == 8 {
                ("cmp(E(nu'(3)),eta(7))", "cmp(E(nu'(3)),eta(7))")
            } else {
                ("cmp(E(nu'(3)),eta(7),eta(8))", "cmp(E(nu'(3)),eta(7),eta(8))")
            };
            match gen_at(g, name, 1, label) {
                Some(x) => exact(g, SubgroupSpec::GeneratedBy(vec![x]), "Thm. main0, proof"),
                None => GroupResult::not_covered("pi_k(S^4) generators missing"),
            }
        }
        (4, 10) => match p10_rp4(g, false) {
            Some(s) => exact(g, s, "Thm. main0, proof"),
            None => GroupResult::not_covered("pi_10(S^4) generators missing"),
        },
        (6, 11) => exact(g, SubgroupSpec::Whole, "Lemma PM(3); Thm. main0, proof"),
        (6, 12) => exact(g, SubgroupSpec::Whole, "Lemma PM(2)-(i); Thm. main0, proof"),
        _ => GroupResult::not_covered(format!("M_{{{},R}}(S^{}) is not determined", k, n)),
    }
}

/// Ker[−, i_R] on π_10(S^4): {3ν_4², (ν_4 − α_1(4))α_1(7)}, with ν_4α_1(7) = 8ν_4².
pub(crate) fn p10_rp4(g: &FgAbGroup, pushed: bool) -> Option<SubgroupSpec> {
    let (a, b) = ("cmp(alpha(1,4),alpha(1,7))", "cmp(nu(4),nu(7))");
    let (ia, ib) = (coord_of(g, a)?, coord_of(g, b)?);
    let mut first = vec![0; 2];
    first[ib] = 3;
    let mut second = vec![0; 2];
    second[ia] = 2;
    second[ib] = 8;
    let push = |s: &str| {
        let e = GeneratorExpr::parse(s).unwrap();
        if pushed {
            e.gamma()
        } else {
            e
        }
    };
    Some(SubgroupSpec::GeneratedBy(vec![
        SubGen::new(first, push(b).scaled(3)),
        SubGen::new(second, push("cmp(add(nu(4),sc(-1,alpha(1,4))),alpha(1,7))")),
    ]))
}

fn m_quaternionic(n: u32, s: u32, g: &FgAbGroup) -> GroupResult {
    let n64 = n as u64;
    if s == 0 {
        return exact(g, SubgroupSpec::multiple(24 / gcd(24, n64 + 1)), "Example e2");
    }
    if s == 3 {
        return exact(g, SubgroupSpec::multiple(2 / gcd(2, n64 + 1)), "Example ex1");
    }
    if (n64 + 1) % 24 == 0 && s <= 4 * n + 1 {
        return exact(g, SubgroupSpec::Whole, "Lemma PM(2)-(iii)");
    }
    if (8..=10).contains(&s) {
        return exact(g, SubgroupSpec::Whole, "Thm. PHP1, proof");
    }
    if n % 2 == 0 {
        match s {
            1 | 2 | 4 | 5 => return exact(g, SubgroupSpec::Whole, "Lemma PM(7)"),
            6 => return exact(g, SubgroupSpec::Multiple(2), "Lemma PM(7)"),
            7 if n % 6 == 2 => return exact(g, SubgroupSpec::Whole, "Lemma PM(6)-(ii), (7)"),
            7 => {
                // 2- and 5-components are everything; the 3-component is open
                let amb = Ambient::single(g.clone());
                return GroupResult::bounds(amb, SubgroupSpec::Multiple(3), SubgroupSpec::Whole, "Lemma PM(6)-(i), (7)");
            }
            _ => {}
        }
    }
    GroupResult::not_covered(format!("M_{{{},H}}(S^{}) is not determined", 4 * n + 3 + s, 4 * n + 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fga::Order;

    fn idx(r: &GroupResult) -> Order {
        r.indices().unwrap().0
    }

    #[test]
    fn q_values() {
        let cat = Catalog::bundled();
        assert_eq!(q_subgroup(3, &cat).value, SubgroupSpec::Multiple(12));
        assert_eq!(q_subgroup(12, &cat).value, SubgroupSpec::Zero);
        assert_eq!(q_subgroup(14, &cat).value, SubgroupSpec::Whole);
        let amb = Ambient::single(pi_sphere(&cat, 3, 6).unwrap().group);
        assert_eq!(amb.subgroup_type(&q_subgroup(6, &cat).value).unwrap(), FgAbGroup::cyclic(4));
        for (k, order) in [(10, 5), (13, 12), (16, 2), (18, 5)] {
            let q = q_subgroup(k, &cat);
            let t = q.ambient.as_ref().unwrap().subgroup_type(&q.value).unwrap();
            assert_eq!(t, FgAbGroup::cyclic(order), "Q_{}", k);
        }
        assert!(!q_subgroup(19, &cat).is_covered());
    }

    #[test]
    fn m_values() {
        let cat = Catalog::bundled();
        for n in 1..8 {
            assert_eq!(m_subgroup(Field::H, n, 4 * n + 3, &cat).value, SubgroupSpec::multiple(24 / gcd(24, n as u64 + 1)));
        }
        assert_eq!(m_subgroup(Field::C, 2, 7, &cat).value, SubgroupSpec::Zero);
        assert_eq!(m_subgroup(Field::C, 4, 12, &cat).value, SubgroupSpec::Whole);
        assert_eq!(m_subgroup(Field::C, 2, 12, &cat).value, SubgroupSpec::Whole);
        assert_eq!(m_subgroup(Field::R, 5, 9, &cat).value, SubgroupSpec::Whole);
        assert_eq!(m_subgroup(Field::C, 3, 14, &cat).value, SubgroupSpec::Whole);
        assert_eq!(m_subgroup(Field::R, 2, 2, &cat).value, SubgroupSpec::Zero);
        assert_eq!(m_subgroup(Field::R, 2, 5, &cat).value, SubgroupSpec::Whole);
        // stem 3 of HP^{2m}: 2π
        assert_eq!(m_subgroup(Field::H, 2, 14, &cat).value, SubgroupSpec::Multiple(2));
        assert_eq!(m_subgroup(Field::H, 3, 18, &cat).value, SubgroupSpec::Whole);
        // Ker 2ι on π_7(S^4)... outside the stable range, comes from the catalog
        assert_eq!(idx(&m_subgroup(Field::R, 4, 7, &cat)), Order::Finite(12));
        // stable range of RP^6: π_8(S^6) = Z_2 is all 2-torsion
        assert_eq!(m_subgroup(Field::R, 6, 8, &cat).value, SubgroupSpec::Whole);
        assert_eq!(m_subgroup(Field::R, 6, 6, &cat).value, SubgroupSpec::Zero);
        assert_eq!(idx(&m_subgroup(Field::R, 6, 9, &cat)), Order::Finite(12));
        let r = m_subgroup(Field::H, 4, 26, &cat);
        assert_eq!(r.status, whitehead::Status::Bounds);
    }

    #[test]
    fn l_triples() {
        let cat = Catalog::bundled();
        let l = l_subgroups(3, 4, &cat);
        assert_eq!(l.l_double_prime.value, SubgroupSpec::Multiple(6));
        assert_eq!(l.l_prime.value, SubgroupSpec::Multiple(12));
        assert_eq!(idx(&l.l), Order::Finite(12));
        let amb = l.l.ambient.clone().unwrap();
        assert!(amb.same_subgroup(&l.l.value, &SubgroupSpec::Multiple(12)).unwrap());
        let l = l_subgroups(2, 14, &cat);
        assert_eq!(l.l_double_prime.value, SubgroupSpec::Whole);
        assert_eq!(l.l.value, q_subgroup(13, &cat).value);
        let l = l_subgroups(2, 21, &cat);
        assert!(!l.l.is_covered());
    }
}
