use fga::{FgAbGroup, GeneratorExpr};
use proptest::prelude::*;
use tables::{load_catalog, p_component, pi_sphere, pi_sphere_primary, Catalog, CatalogError, SpaceId};

fn g(r: usize, t: &[u64]) -> FgAbGroup {
    FgAbGroup::new(r, t.to_vec()).unwrap()
}

fn gens(e: &tables::TableEntry) -> Vec<String> {
    e.group.generators().unwrap().iter().map(|x| x.to_string()).collect()
}

#[test]
fn minimal_file() {
    let cat = Catalog::parse("schema|1\npi|S3|4|0|2|eta(3)|Hopf|\n").unwrap();
    assert_eq!(cat.len(), 1);
    assert_eq!(cat.get(SpaceId::Sphere(3), 4).unwrap().group, g(0, &[2]));
}

#[test]
fn three_sphere_list_from_seven_to_eighteen() {
    let text: String = Catalog::bundled_text()
        .lines()
        .filter(|l| {
            let f: Vec<&str> = l.split('|').collect();
            f.len() > 2 && f[0] == "pi" && f[1] == "S3" && (7..=18).contains(&f[2].parse::<u32>().unwrap_or(0))
        })
        .map(|l| format!("{}\n", l))
        .collect();
    let cat = Catalog::parse(&format!("schema|1\n{}", text)).unwrap();
    assert_eq!(cat.len(), 12);
    let e11 = cat.get(SpaceId::Sphere(3), 11).unwrap();
    assert_eq!(e11.group, g(0, &[2]));
    assert_eq!(gens(e11), vec!["eps(3)"]);
}

#[test]
fn broken_chain_is_a_parse_error() {
    let err = Catalog::parse("schema|1\n# note\npi|S3|14|0|2;3;84||x|\n").unwrap_err();
    assert!(matches!(err, CatalogError::ParseError { line: 3, .. }), "{:?}", err);
}

#[test]
fn other_load_errors() {
    assert!(matches!(
        Catalog::parse("schema|1\npi|S3|4|0|2|eta(3)|a|\npi|S3|4|0|2|eta(3)|b|\n"),
        Err(CatalogError::DuplicateKey(_, 4))
    ));
    assert!(matches!(Catalog::parse("schema|2\n"), Err(CatalogError::SchemaMismatch(_))));
    assert!(matches!(Catalog::parse(""), Err(CatalogError::SchemaMismatch(_))));
    // empty citation, wrong dimension, unknown symbol
    for bad in ["pi|S3|4|0|2|eta(3)||", "pi|S3|4|0|2|eta(4)|x|", "pi|S3|4|0|2|foo(3)|x|", "pi|S3|4|0|2|eta(3)|x|bogus"] {
        assert!(matches!(Catalog::parse(&format!("schema|1\n{}\n", bad)), Err(CatalogError::ParseError { line: 2, .. })), "{}", bad);
    }
    assert!(matches!(load_catalog("/nonexistent/catalog.txt"), Err(CatalogError::Io(_))));
}

#[test]
fn sphere_lookups() {
    let cat = Catalog::bundled();
    let e = pi_sphere(&cat, 3, 14).unwrap();
    assert_eq!(e.group, g(0, &[2, 2, 84]));
    assert_eq!(gens(&e), vec!["cmp(eps(3),nu(11))", "cmp(nu'(3),eps(6))", "add(mu'(3),alpha(3,3),alpha(1,7,3))"]);
    assert_eq!(fga::order(&e.group), fga::Order::Finite(336));

    let e = pi_sphere(&cat, 5, 8).unwrap();
    assert_eq!(e.group, g(0, &[24]));
    assert_eq!(gens(&e), vec!["nu(5)"]);
    assert!(e.stable);

    let e = pi_sphere(&cat, 4, 7).unwrap();
    assert_eq!(e.group, g(1, &[12]));
    assert!(!e.stable);
}

#[test]
fn p_components() {
    let cat = Catalog::bundled();
    let c = p_component(&pi_sphere(&cat, 3, 17).unwrap(), 3);
    assert_eq!(c.group, g(0, &[3]));
    assert_eq!(c.group.generators().unwrap()[0].to_string(), "cmp(alpha(1,3),alpha'(3,6))");

    let c = p_component(&pi_sphere(&cat, 3, 17).unwrap(), 5);
    assert_eq!(c.group.generators().unwrap()[0].to_string(), "cmp(alpha(1,5,3),alpha(1,5,10))");

    assert!(p_component(&pi_sphere(&cat, 5, 8).unwrap(), 7).group.is_trivial());

    let c = p_component(&pi_sphere(&cat, 3, 10).unwrap(), 5);
    assert_eq!(c.group, g(0, &[5]));
    assert_eq!(c.group.generators().unwrap()[0], GeneratorExpr::parse("alpha(1,5,3)").unwrap());

    let c = p_component(&pi_sphere(&cat, 4, 7).unwrap(), 2);
    assert!(c.has_free_part);
    assert_eq!(c.group, g(0, &[4]));

    // only the primary record exists here
    let c = pi_sphere_primary(&cat, 3, 21, 3).unwrap();
    assert_eq!(c.group, g(0, &[3]));
    assert!(pi_sphere_primary(&cat, 3, 21, 5).is_err());
}

#[test]
fn catalog_hygiene() {
    let cat = Catalog::bundled();
    for e in cat.entries() {
        assert!(!e.citation.is_empty());
        if let SpaceId::Sphere(n) = e.space {
            assert_eq!(e.stable, e.k + 2 <= 2 * n, "{}", e);
        }
    }
    for c in cat.centers() {
        assert!(!c.citation.is_empty());
    }
    let again = Catalog::parse(Catalog::bundled_text()).unwrap();
    assert_eq!(again.checksum(), cat.checksum());
    assert_eq!(tables::export(&again), tables::export(&cat));
}

#[test]
fn export_has_one_line_per_record() {
    let cat = Catalog::bundled();
    let out = tables::export(&cat);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "space|k|group|generators|citation");
    assert_eq!(lines.len(), cat.len() + 1);
    assert!(lines.iter().all(|l| l.split('|').count() == 5));
    assert!(out.contains("\nS3|14|Z84+Z2^2|"), "{}", out);
}

proptest! {
    #[test]
    fn suspension_is_stable(n in 2u32..40, stem in 0u32..14) {
        let cat = Catalog::bundled();
        let k = n + stem;
        if tables::stable_range_check(n, k) {
            if let (Ok(a), Ok(b)) = (pi_sphere(&cat, n, k), pi_sphere(&cat, n + 1, k + 1)) {
                prop_assert_eq!(a.group, b.group);
            }
        }
    }
}
