use fga::{FgAbGroup, Order, SubgroupSpec};
use gottlieb::{g_equals_p_flag, g_group, g_prime, Field, GroupResult, Status};
use projspace::p_group;
use tables::Catalog;

fn cat() -> Catalog {
    Catalog::bundled()
}

fn same(r: &GroupResult, s: &SubgroupSpec) -> bool {
    r.ambient.as_ref().unwrap().same_subgroup(&r.value, s).unwrap()
}

fn idx(r: &GroupResult) -> (Order, Order) {
    r.indices().unwrap()
}

#[test]
fn odd_real_at_n() {
    let c = cat();
    for n in [5, 9, 11, 13, 15] {
        let r = g_group(Field::R, n, n, &c);
        assert_eq!(r.status, Status::Exact, "{}", n);
        assert!(same(&r, &SubgroupSpec::Multiple(2)));
        assert!(r.citation.contains("Thm. PW"));
    }
    for n in [3, 7] {
        assert!(same(&g_group(Field::R, n, n, &c), &SubgroupSpec::Whole));
    }
    for n in (2..=14).step_by(2) {
        assert!(same(&g_group(Field::R, n, n, &c), &SubgroupSpec::Zero));
    }
}

#[test]
fn fundamental_group() {
    let c = cat();
    for n in 2..=15 {
        let r = g_group(Field::R, n, 1, &c);
        let want = if n % 2 == 1 { SubgroupSpec::Whole } else { SubgroupSpec::Zero };
        assert!(same(&r, &want), "{}", n);
        assert!(g_equals_p_flag(Field::R, n, 1));
    }
}

#[test]
fn rp4_degree_7() {
    let c = cat();
    let r = g_group(Field::R, 4, 7, &c);
    assert_eq!(r.status, Status::Bounds);
    let amb = r.ambient.clone().unwrap();
    assert_eq!(amb.group(), FgAbGroup::new(1, vec![12]).unwrap());
    assert!(amb.contains(&r.value, &SubgroupSpec::Multiple(12)).unwrap());
    assert!(amb.contains(&SubgroupSpec::Multiple(12), &r.value).unwrap());
    let up = r.upper.clone().unwrap();
    // 6γ_4ν_4 and 9γ_4Eω are not in G_7(RP^4)
    assert!(!amb.contains_element(&up, &[6, 0]).unwrap());
    assert!(!amb.contains_element(&up, &[0, 9]).unwrap());
    assert!(amb.contains_element(&up, &[6, -3]).unwrap());
    assert!(amb.contains_element(&up, &[0, 6]).unwrap());
    assert!(r.citation.contains("Thm. main(1)") && r.citation.contains("Remark upb"));
    assert!(up.labels().iter().any(|l| l.pretty().contains('[')));
}

#[test]
fn complex_examples() {
    let c = cat();
    let r = g_group(Field::C, 2, 5, &c);
    assert_eq!(r.status, Status::Exact);
    assert!(same(&r, &SubgroupSpec::Multiple(2)));
    assert_eq!(r.citation, "Thm. ex2(1); Thm. c4");
    assert!(same(&r, &p_group(Field::C, 2, 5, &c).value));
    for n in 1..=10 {
        let r = g_group(Field::C, n, 2, &c);
        assert!(same(&r, &SubgroupSpec::Zero), "{}", n);
    }
    for k in 10..=12 {
        let r = g_group(Field::C, 2, k, &c);
        assert_eq!(r.status, Status::Exact);
        assert!(same(&r, &SubgroupSpec::Whole), "{}", k);
    }
}

#[test]
fn quaternionic_examples() {
    let c = cat();
    for n in 1..=6 {
        assert!(same(&g_group(Field::H, n, 4, &c), &SubgroupSpec::Zero), "{}", n);
    }
    let r = g_group(Field::H, 3, 12, &c);
    assert!(same(&r, &SubgroupSpec::Zero));
    assert!(g_equals_p_flag(Field::H, 3, 12));
}

#[test]
fn hp2_degree_18() {
    let c = cat();
    let r = g_group(Field::H, 2, 18, &c);
    assert!(r.is_covered());
    let amb = r.ambient.clone().unwrap();
    let d = projspace::decompose_pi(Field::H, 2, 18, &c).unwrap();
    let forty = d.on_gamma(SubgroupSpec::Multiple(40));
    assert!(amb.contains(&r.lower(), &forty).unwrap());
    assert!(r.citation.contains("Prop. CHP2ex2(1)"));
}

#[test]
fn hp2_example_cells() {
    let c = cat();
    assert!(g_group(Field::H, 2, 19, &c).is_covered());
    // π_19(S^3) is not tabulated, so only G′ is available in degree 20
    assert!(!g_group(Field::H, 2, 20, &c).is_covered());
    for k in [19, 20] {
        let r = g_prime(Field::H, 2, k, &c);
        assert!(r.is_covered(), "{}", k);
        assert_ne!(r.lower(), SubgroupSpec::Zero);
        assert!(r.citation.contains("Example exa"));
    }
}

#[test]
fn cayley_plane() {
    let c = cat();
    assert!(g_equals_p_flag(Field::K, 2, 11));
    let g = g_group(Field::K, 2, 11, &c);
    assert_eq!(g.status, Status::Exact);
    assert!(!g_group(Field::K, 3, 11, &c).is_covered());
}

#[test]
fn hthm_lower() {
    let c = cat();
    for n in 2..=4u32 {
        let k = 4 * n + 3;
        let r = g_group(Field::H, n, k, &c);
        assert!(r.citation.contains("Thm. hthm(1)"), "{}: {}", n, r.citation);
        let f: u64 = (1..=2 * n as u64 + 1).product();
        let m = if n % 2 == 0 { f } else { 2 * f };
        let d = projspace::decompose_pi(Field::H, n, k, &c).unwrap();
        let amb = r.ambient.clone().unwrap();
        assert!(amb.contains(&r.lower(), &d.on_gamma(SubgroupSpec::Multiple(m))).unwrap());
    }
}

#[test]
fn prime_part_quaternionic() {
    let c = cat();
    // G′_{8n+9}(HP^{2n}) = 0
    for n in [2, 4] {
        let r = g_prime(Field::H, n, 4 * n + 9, &c);
        if r.is_covered() {
            assert!(same(&r, &SubgroupSpec::Zero), "{}", n);
        }
    }
    let r = g_prime(Field::H, 3, 21, &c);
    assert!(r.is_covered());
    let d = r.ambient.clone().unwrap();
    let _ = idx(&r);
    assert!(d.order() != Order::Finite(1));
}
