use fga::{GeneratorExpr, Order};
use proptest::prelude::*;
use tables::{Catalog, SpaceId};
use whitehead::orders::{self, all_rules};
use whitehead::{delta_order, delta_vs_whitehead_gap, p_group_sphere, whitehead_order_iota, Family, Status};

fn g(s: &str) -> GeneratorExpr {
    GeneratorExpr::parse(s).unwrap()
}

fn named(n: u32) -> Vec<GeneratorExpr> {
    let mut v = vec![GeneratorExpr::iota(n)];
    if n >= 2 {
        v.push(g(&format!("eta({})", n)));
        v.push(g(&format!("cmp(eta({}),eta({}))", n, n + 1)));
    }
    if n >= 4 {
        v.push(g(&format!("nu({})", n)));
        v.push(g(&format!("cmp(nu({}),nu({}))", n, n + 3)));
    }
    if n >= 8 {
        v.push(g(&format!("sigma({})", n)));
    }
    match n {
        4 => {
            for s in ["E(nu'(3))", "E(omega(3))", "cmp(nu(4),eta(7))", "cmp(E(nu'(3)),eta(7))", "cmp(nu(4),eta(7),eta(8))", "cmp(E(nu'(3)),eta(7),eta(8))"] {
                v.push(g(s));
            }
        }
        5 => v.push(g("sigma'''(5)")),
        6 => v.push(g("wh(iota(6),iota(6))")),
        7 => v.push(g("sigma'(7)")),
        8 => v.push(g("E(sigma'(7))")),
        _ => {}
    }
    v
}

#[test]
fn every_rule_fires_exactly_one_arm_up_to_1000() {
    for rule in all_rules() {
        let bad = rule.exhaustiveness_failures(1000);
        println!("{:<10} {} arms, failures: {}", rule.name, rule.arms.len() + rule.otherwise.is_some() as usize, bad.len());
        assert!(bad.is_empty(), "{}: {:?}", rule.name, &bad[..bad.len().min(10)]);
    }
}

#[test]
fn w1_trivial_exactly_at_hopf_dimensions() {
    let w1 = orders::w1();
    let ones: Vec<u64> = (1..=1000).step_by(2).filter(|&n| w1.order_at(n) == Some(Order::Finite(1))).collect();
    assert_eq!(ones, vec![1, 3, 7]);
}

#[test]
fn whitehead_divides_delta() {
    let mut pairs = 0;
    for n in 1..=1000 {
        for e in named(n) {
            if let (Ok(w), Ok(d)) = (whitehead_order_iota(n, &e), delta_order(Family::R, n, &e)) {
                assert!(w.divides(d), "n={} {}: W={} Δ={}", n, e, w, d);
                pairs += 1;
            }
        }
    }
    assert!(pairs > 5000);
}

#[test]
fn gap_is_strict_inequality() {
    let mut listed = Vec::new();
    for n in 1..=1000 {
        for e in named(n) {
            let gap = delta_vs_whitehead_gap(n, &e).unwrap();
            if let (Ok(w), Ok(d)) = (whitehead_order_iota(n, &e), delta_order(Family::R, n, &e)) {
                assert_eq!(gap, w != d, "n={} {}", n, e);
            }
            if gap {
                listed.push(format!("{}", e));
            }
        }
    }
    let mut expected: Vec<String> = vec![
        "cmp(nu(4),nu(7))",
        "E(nu'(3))",
        "cmp(nu(4),eta(7))",
        "cmp(E(nu'(3)),eta(7))",
        "cmp(nu(4),eta(7),eta(8))",
        "cmp(E(nu'(3)),eta(7),eta(8))",
        "wh(iota(6),iota(6))",
        "sigma(8)",
        "E(sigma'(7))",
        "sigma(11)",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    for i in 4..=9 {
        let a = (1u32 << i) - 3;
        let b = (1u32 << i) - 5;
        expected.push(format!("nu({})", a));
        expected.push(format!("cmp(nu({}),nu({}))", b, b + 3));
    }
    listed.sort();
    expected.sort();
    assert_eq!(listed, expected);
}

#[test]
fn lie_group_catalog_agrees_with_delta_rules() {
    let cat = Catalog::bundled();
    // π_{2n}(SU(n)) is generated by Δ_C ι_{2n+1}
    for n in 2..=5 {
        let e = cat.get(SpaceId::Su(n), 2 * n).unwrap();
        let d = delta_order(Family::C, 2 * n + 1, &GeneratorExpr::iota(2 * n + 1)).unwrap();
        assert_eq!(fga::order(&e.group), d, "SU({})", n);
    }
    // π_{4n+2}(Sp(n)) is generated by Δ_H ι_{4n+3}
    for n in 1..=3 {
        let e = cat.get(SpaceId::Sp(n), 4 * n + 2).unwrap();
        let d = delta_order(Family::H, 4 * n + 3, &GeneratorExpr::iota(4 * n + 3)).unwrap();
        assert_eq!(fga::order(&e.group), d, "Sp({})", n);
    }
}

#[test]
fn sphere_centers() {
    let cat = Catalog::bundled();
    let r = p_group_sphere(&cat, 4, 7);
    assert_eq!(r.status, Status::Exact);
    let amb = r.ambient.clone().unwrap();
    assert_eq!(amb.index(&r.value).unwrap(), Order::Finite(12));
    let labels: Vec<String> = r.value.labels().iter().map(|l| l.to_string()).collect();
    assert_eq!(labels, vec!["sc(12,nu(4))", "wh(iota(4),iota(4))", "sc(6,E(omega(3)))"]);

    let r = p_group_sphere(&cat, 3, 3);
    assert_eq!((r.status, r.value), (Status::Exact, fga::SubgroupSpec::Whole));
    let r = p_group_sphere(&cat, 6, 13);
    assert_eq!((r.status, r.value), (Status::Exact, fga::SubgroupSpec::Zero));

    let r = p_group_sphere(&cat, 9, 9);
    assert_eq!(r.value, fga::SubgroupSpec::Multiple(2));
    let r = p_group_sphere(&cat, 10, 10);
    assert_eq!(r.value, fga::SubgroupSpec::Zero);
    let r = p_group_sphere(&cat, 6, 9);
    assert_eq!(r.value, fga::SubgroupSpec::Multiple(12));
    let r = p_group_sphere(&cat, 8, 15);
    assert_eq!(r.ambient.unwrap().index(&r.value).unwrap(), Order::Finite(120));
    let r = p_group_sphere(&cat, 16, 24);
    assert_eq!((r.status, r.value), (Status::Exact, fga::SubgroupSpec::Zero));
    let r = p_group_sphere(&cat, 11, 20);
    assert_eq!(r.value, fga::SubgroupSpec::Whole);
    assert!(!p_group_sphere(&cat, 9, 17).is_covered());
    assert!(!p_group_sphere(&cat, 40, 70).is_covered());
}

#[test]
fn sphere_centers_are_consistent() {
    let cat = Catalog::bundled();
    for n in 1..40 {
        for k in n..n + 14 {
            let r = p_group_sphere(&cat, n, k);
            assert!(r.is_consistent(), "P_{}(S^{})", k, n);
            assert!(!r.citation.is_empty());
        }
    }
}

proptest! {
    #[test]
    fn scalar_multiples_divide(n in 4u32..200, m in 1i64..50) {
        let e = g(&format!("nu({})", n));
        let w = whitehead_order_iota(n, &e).unwrap().finite().unwrap();
        let wm = whitehead_order_iota(n, &e.clone().scaled(m)).unwrap().finite().unwrap();
        prop_assert_eq!(wm * fga::gcd(w, m as u64), w);
    }
}
