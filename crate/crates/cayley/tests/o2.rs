use cayley::{g_group_kp2, p_group_kp2, pi_kp2};
use fga::{FgAbGroup, Order};
use tables::{pi_sphere, Catalog};
use whitehead::Status;

#[test]
fn isomorphic_to_seven_sphere_below_22() {
    let cat = Catalog::bundled();
    for k in (8..=21).chain([25]) {
        let e = pi_kp2(k, &cat).unwrap();
        assert_eq!(e.group.order(), pi_sphere(&cat, 7, k - 1).unwrap().group.order(), "k={}", k);
        assert!(e.citation.starts_with("Lemma JT"));
    }
}

#[test]
fn twenty_three() {
    let cat = Catalog::bundled();
    let e = pi_kp2(23, &cat).unwrap();
    assert_eq!(e.group, FgAbGroup::new(1, vec![2, 2, 120]).unwrap());
}

#[test]
fn zero_cells() {
    let cat = Catalog::bundled();
    for k in [9, 10, 12, 13, 14, 20] {
        let p = p_group_kp2(k, &cat);
        assert_eq!(p.status, Status::Exact);
        assert_eq!(p.indices().unwrap().0, p.ambient.as_ref().unwrap().order(), "k={}", k);
        let trivial = pi_kp2(k, &cat).unwrap().group.is_trivial();
        assert_eq!(trivial, [12, 13, 20].contains(&k));
    }
}

#[test]
fn g_inside_p() {
    let cat = Catalog::bundled();
    for k in 8..=21 {
        let g = g_group_kp2(k, &cat);
        let p = p_group_kp2(k, &cat);
        assert!(g.is_consistent(), "k={}", k);
        assert!(p.is_consistent(), "k={}", k);
        if g.is_covered() && p.is_covered() {
            let amb = g.ambient.as_ref().unwrap();
            assert!(amb.contains(&p.upper_spec(), &g.upper_spec()).unwrap(), "k={}", k);
            assert!(amb.contains(&p.upper_spec(), &g.lower()).unwrap(), "k={}", k);
        }
    }
    let g = g_group_kp2(21, &cat);
    assert_eq!(g.indices().unwrap(), (Order::Finite(2), Order::Finite(1)));
}
