//! Invariant suites run by `selfcheck`. Each check either passes or records
//! a one-line failure; a suite with no checks at all counts as failed.

use fga::{multiple_subgroup, Ambient, FgAbGroup, GeneratorExpr, Order, SubgroupSpec};
use projspace::{decompose_pi, p_double_prime, p_group, p_prime, p_prime_hp, Field};
use tables::{pi_sphere, Catalog, SpaceId, SCHEMA_VERSION};
use whitehead::{delta_order, delta_vs_whitehead_gap, whitehead_order_iota, Family, GroupResult, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, passed: 0, failures: vec![] }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn result(&mut self, r: Result<(), String>) {
        match r {
            Ok(()) => self.passed += 1,
            Err(e) => self.failures.push(e),
        }
    }
}

pub fn run_all(cat: &Catalog) -> Vec<SuiteReport> {
    vec![
        catalog(cat),
        splitting(cat),
        golden(cat),
        lattice(cat),
        rules(),
        fga_oracle(),
        decomposition(cat),
        cayley_plane(cat),
    ]
}

pub fn render(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mark = if r.ok() { "ok" } else { "FAIL" };
        out.push_str(&format!("{:<14} {:<4} passed {:>5}  failed {:>4}\n", r.name, mark, r.passed, r.failures.len()));
        if r.passed == 0 && r.failures.is_empty() {
            out.push_str("    nothing to check\n");
        }
        for f in r.failures.iter().take(5) {
            out.push_str(&format!("    {}\n", f));
        }
        if r.failures.len() > 5 {
            out.push_str(&format!("    ... {} more\n", r.failures.len() - 5));
        }
    }
    let bad = reports.iter().filter(|r| !r.ok()).count();
    if bad == 0 {
        out.push_str("selfcheck: ok\n");
    } else {
        out.push_str(&format!("selfcheck: FAILED ({} of {} suites)\n", bad, reports.len()));
    }
    out
}

fn catalog(cat: &Catalog) -> SuiteReport {
    let mut s = SuiteReport::new("catalog");
    s.check(!cat.is_empty(), || "catalog has no records".into());
    s.check(cat.schema_version() == SCHEMA_VERSION, || format!("schema version {}", cat.schema_version()));
    s.check(cat.max_stable_stem().is_some(), || "no stable stems".into());
    s.check(cat.centers().next().is_some(), || "no P_k(S^n) records".into());
    s
}

/// π_k(S^4) ≅ π_k(S^7) ⊕ π_{k−1}(S^3), π_k(S^8) ≅ π_k(S^15) ⊕ π_{k−1}(S^7)
/// and π_k(S^2) ≅ π_k(S^3), for every record the catalog holds.
fn splitting(cat: &Catalog) -> SuiteReport {
    let mut s = SuiteReport::new("splitting");
    for e in cat.entries().filter(|e| e.prime.is_none()) {
        let SpaceId::Sphere(n) = e.space else { continue };
        let expected = match n {
            2 if e.k >= 3 => pi_sphere(cat, 3, e.k).map(|x| x.group),
            4 | 8 => pi_sphere(cat, 2 * n - 1, e.k)
                .and_then(|a| pi_sphere(cat, n - 1, e.k - 1).map(|b| fga::direct_sum(&a.group, &b.group))),
            _ => continue,
        };
        match expected {
            Ok(g) => s.check(g == e.group, || format!("pi_{}(S^{}) = {} but the splitting gives {}", e.k, n, e.group, g)),
            Err(nc) => s.failures.push(format!("pi_{}(S^{}): summand missing ({})", e.k, n, nc)),
        }
    }
    s
}

fn ty(r: &GroupResult) -> Result<FgAbGroup, String> {
    let amb = r.ambient.as_ref().ok_or_else(|| format!("not covered: {}", r.citation))?;
    amb.subgroup_type(&r.value).map_err(|e| e.to_string())
}

fn expect_exact(r: &GroupResult, spec: &SubgroupSpec, what: &str) -> Result<(), String> {
    let amb = r.ambient.as_ref().ok_or_else(|| format!("{}: not covered ({})", what, r.citation))?;
    if r.status != Status::Exact {
        return Err(format!("{}: status {}", what, r.status));
    }
    if amb.same_subgroup(&r.value, spec).map_err(|e| format!("{}: {}", what, e))? {
        Ok(())
    } else {
        Err(format!("{}: got {}, expected {}", what, r.value, spec))
    }
}

fn expect_type(r: &GroupResult, ascii: &str, what: &str) -> Result<(), String> {
    if r.status != Status::Exact {
        return Err(format!("{}: status {}", what, r.status));
    }
    let t = ty(r).map_err(|e| format!("{}: {}", what, e))?;
    if t.ascii() == ascii {
        Ok(())
    } else {
        Err(format!("{}: got {}, expected {}", what, t.ascii(), ascii))
    }
}

fn pow2_minus(n: u32, c: u32) -> bool {
    (n + c).is_power_of_two()
}

/// P_{2n+1+s}(CP^n) as printed, 0 ≤ s ≤ 7.
pub fn ex2_printed(n: u32, s: u32) -> SubgroupSpec {
    use SubgroupSpec::{Multiple, Whole, Zero};
    match s {
        0 if n == 3 => Whole,
        0 => Multiple(2),
        1 | 2 if n % 2 == 0 => Zero,
        1 | 2 => Whole,
        3 if n % 4 == 3 || pow2_minus(n, 2) => Whole,
        3 => Multiple(2),
        4 | 5 if n >= 3 => Zero,
        4 | 5 => Whole,
        6 if n % 4 >= 2 || (pow2_minus(n, 3) && n >= 5) => Whole,
        6 => Zero,
        7 if [2, 3, 5].contains(&n) || n % 8 == 7 => Whole,
        7 => Multiple(2),
        _ => unreachable!(),
    }
}

fn golden(cat: &Catalog) -> SuiteReport {
    use SubgroupSpec::{Multiple, Whole, Zero};
    let mut s = SuiteReport::new("golden");
    let p = |f, n, k| p_group(f, n, k, cat);
    let g = |f, n, k| gottlieb::g_group(f, n, k, cat);

    s.result(expect_exact(&p(Field::R, 2, 2), &Zero, "P_2(RP^2)"));
    for k in 3..=18 {
        s.result(expect_exact(&p(Field::R, 2, k), &Whole, &format!("P_{}(RP^2)", k)));
    }
    let p10 = p(Field::R, 4, 10);
    s.result(expect_type(&p10, "Z24", "P_10(RP^4)"));
    s.check(p10.value.labels().len() == 2, || "P_10(RP^4): generators missing".into());
    s.result(expect_type(&p(Field::R, 4, 8), "Z2", "P_8(RP^4)"));
    s.result(expect_type(&p(Field::R, 4, 9), "Z2", "P_9(RP^4)"));

    s.result(expect_exact(&p(Field::C, 2, 7), &Zero, "P_7(CP^2)"));
    for n in 2..=8 {
        for t in 0..=7 {
            let k = 2 * n + 1 + t;
            s.result(expect_exact(&p(Field::C, n, k), &ex2_printed(n, t), &format!("P_{}(CP^{})", k, n)));
        }
    }

    for n in 2..=9 {
        for k in [5, 6] {
            s.result(expect_exact(&p(Field::H, n, k), &Zero, &format!("P_{}(HP^{})", k, n)));
        }
    }
    let p11 = p(Field::H, 2, 11);
    s.result(expect_type(&p11, "Z+Z5", "P_11(HP^2)"));
    s.check(p11.indices().ok().map(|i| i.0) == Some(Order::Finite(24)), || "P_11(HP^2): index is not 24".into());
    for n in 3..=9 {
        s.result(expect_type(&p(Field::H, n, 14), "Z12", &format!("P_14(HP^{})", n)));
    }
    let p15 = p(Field::H, 3, 15);
    s.result(expect_type(&p15, "Z+Z84+Z2^2", "P_15(HP^3)"));
    for n in 2..=9 {
        for off in 0..=10 {
            s.result(php1_split(n, off, cat));
        }
    }

    for n in 2..=15u32 {
        let one = if n % 2 == 1 { Whole } else { Zero };
        s.result(expect_exact(&g(Field::R, n, 1), &one, &format!("G_1(RP^{})", n)));
        let at_n = match n {
            _ if n % 2 == 0 => Zero,
            3 | 7 => Whole,
            _ => Multiple(2),
        };
        s.result(expect_exact(&g(Field::R, n, n), &at_n, &format!("G_{}(RP^{})", n, n)));
    }
    for n in 1..=12 {
        s.result(expect_exact(&g(Field::C, n, 2), &Zero, &format!("G_2(CP^{})", n)));
    }
    for n in 1..=8 {
        s.result(expect_exact(&g(Field::H, n, 4), &Zero, &format!("G_4(HP^{})", n)));
    }
    s.result(expect_exact(&g(Field::C, 2, 5), &Multiple(2), "G_5(CP^2)"));
    for k in 10..=12 {
        s.result(expect_exact(&g(Field::C, 2, k), &Whole, &format!("G_{}(CP^2)", k)));
    }

    for (k, want) in [(22, "Z4"), (23, "Z+Z120+Z2^2"), (24, "Z2^3")] {
        s.result(match cayley::pi_kp2(k, cat) {
            Ok(e) if e.group.ascii() == want => Ok(()),
            Ok(e) => Err(format!("pi_{}(KP^2): got {}, expected {}", k, e.group.ascii(), want)),
            Err(e) => Err(e.to_string()),
        });
    }
    for k in [9, 10, 12, 13, 14, 20] {
        s.result(expect_exact(&cayley::p_group_kp2(k, cat), &Zero, &format!("P_{}(KP^2)", k)));
    }
    let p11 = cayley::p_group_kp2(11, cat);
    s.result(expect_type(&p11, "Z3", "P_11(KP^2)"));
    s.result(expect_exact(&cayley::g_group_kp2(11, cat), &p11.value, "G_11(KP^2)"));
    s.result(expect_type(&cayley::p_group_kp2(18, cat), "Z24", "P_18(KP^2)"));
    s.result(expect_exact(&cayley::g_group_kp2(8, cat), &Zero, "G_8(KP^2)"));
    s
}

/// ♯P = ♯P′·♯P″ at k = 4n+3+off.
fn php1_split(n: u32, off: u32, cat: &Catalog) -> Result<(), String> {
    let k = 4 * n + 3 + off;
    let what = format!("P_{}(HP^{})", k, n);
    let order = |r: &GroupResult| -> Result<Order, String> {
        if r.status != Status::Exact {
            return Err(format!("{}: {} is {}", what, r.citation, r.status));
        }
        ty(r).map(|t| t.order())
    };
    let pp = p_prime_hp(n, off, cat);
    if decompose_pi(Field::H, n, k, cat).is_err() {
        // π_{k−1}(S^3) is not tabulated: only P′ can be checked
        return order(&pp).map(|_| ());
    }
    let whole = order(&p_group(Field::H, n, k, cat))?;
    let prime = order(&pp)?;
    let double = order(&p_double_prime(Field::H, n, k, cat))?;
    let prod = prime.checked_mul(double).ok_or("overflow")?;
    if whole == prod {
        Ok(())
    } else {
        Err(format!("{}: order {} but P' and P'' give {}", what, whole, prod))
    }
}

/// lower ⊆ upper ⊆ P_upper for G, and P′ ⊆ P.
fn lattice(cat: &Catalog) -> SuiteReport {
    let mut s = SuiteReport::new("lattice");
    let mut cells: Vec<(Field, u32, u32)> = Vec::new();
    for n in 1..=12 {
        cells.extend((1..=n + 20).map(|k| (Field::R, n, k)));
    }
    for n in 1..=8 {
        cells.extend((1..=2 * n + 20).map(|k| (Field::C, n, k)));
    }
    for n in 1..=5 {
        cells.extend((1..=4 * n + 20).map(|k| (Field::H, n, k)));
    }
    cells.extend((1..=28).map(|k| (Field::K, 2, k)));
    for (f, n, k) in cells {
        let (p, g) = if f == Field::K {
            (cayley::p_group_kp2(k, cat), cayley::g_group_kp2(k, cat))
        } else {
            (p_group(f, n, k, cat), gottlieb::g_group(f, n, k, cat))
        };
        let at = || format!("{}P^{} k={}", f, n, k);
        s.check(p.is_consistent(), || format!("P inconsistent at {}", at()));
        if !g.is_covered() {
            continue;
        }
        s.check(g.is_consistent(), || format!("G lower not inside upper at {}", at()));
        if let (Some(amb), true) = (&g.ambient, p.is_covered()) {
            let inside = amb.contains(&p.upper_spec(), &g.upper_spec()).unwrap_or(false);
            let divides = match (amb.index(&p.upper_spec()), amb.index(&g.upper_spec())) {
                (Ok(a), Ok(b)) => a.divides(b),
                _ => false,
            };
            s.check(inside && divides, || format!("G upper not inside P at {}", at()));
        }
        if f != Field::K && n >= 2 {
            let pp = p_prime(f, n, k, cat);
            if let (Some(amb), true, true) = (&pp.ambient, pp.is_covered(), p.is_covered()) {
                if Some(amb) == p.ambient.as_ref() {
                    s.check(amb.contains(&p.upper_spec(), &pp.lower()).unwrap_or(false), || format!("P' not inside P at {}", at()));
                }
            }
        }
    }
    let r = gottlieb::g_group(Field::R, 4, 7, cat);
    s.result(rp4_upb(&r));
    s
}

fn rp4_upb(r: &GroupResult) -> Result<(), String> {
    let amb = r.ambient.as_ref().ok_or("G_7(RP^4) not covered")?;
    let up = r.upper.as_ref().ok_or("G_7(RP^4) has no upper bound")?;
    let same_lower = amb.same_subgroup(&r.value, &SubgroupSpec::Multiple(12)).unwrap_or(false);
    let has = |c: &[i64]| amb.contains_element(up, c).unwrap_or(false);
    if r.status == Status::Bounds && same_lower && has(&[6, -3]) && has(&[0, 6]) && !has(&[6, 0]) && !has(&[0, 9]) {
        Ok(())
    } else {
        Err(format!("G_7(RP^4): got {} .. {:?}", r.value, up))
    }
}

fn elements(n: u32) -> Vec<GeneratorExpr> {
    let g = |s: String| GeneratorExpr::parse(&s).expect("element");
    let mut v = vec![GeneratorExpr::iota(n)];
    if n >= 2 {
        v.push(g(format!("eta({})", n)));
        v.push(g(format!("cmp(eta({}),eta({}))", n, n + 1)));
    }
    if n >= 4 {
        v.push(g(format!("nu({})", n)));
        v.push(g(format!("cmp(nu({}),nu({}))", n, n + 3)));
    }
    if n >= 8 {
        v.push(g(format!("sigma({})", n)));
    }
    v
}

/// Every piecewise rule fires one arm; ♯[ι,α] divides ♯Δα.
fn rules() -> SuiteReport {
    let mut s = SuiteReport::new("rules");
    for rule in whitehead::orders::all_rules() {
        let bad = rule.exhaustiveness_failures(1000);
        s.check(bad.is_empty(), || format!("{}: {} values of n fire no arm or several", rule.name, bad.len()));
    }
    for n in 1..=1000 {
        for e in elements(n) {
            if let (Ok(w), Ok(d)) = (whitehead_order_iota(n, &e), delta_order(Family::R, n, &e)) {
                s.check(w.divides(d), || format!("n={} {}: W={} does not divide D={}", n, e, w, d));
                if let Ok(gap) = delta_vs_whitehead_gap(n, &e) {
                    s.check(gap == (w != d), || format!("n={} {}: gap flag disagrees", n, e));
                }
            }
        }
    }
    s
}

fn chains(max: u64) -> Vec<Vec<u64>> {
    fn go(prefix: &mut Vec<u64>, prod: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(2);
        let mut d = start;
        while prod * d <= max {
            if d % start == 0 {
                prefix.push(d);
                go(prefix, prod * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 1, max, &mut out);
    out
}

/// mG, [G : mG] and ♯G against enumeration of small groups.
fn fga_oracle() -> SuiteReport {
    let mut s = SuiteReport::new("fga");
    for t in chains(64) {
        let g = FgAbGroup::new(0, t.clone()).expect("chain");
        let size: u64 = t.iter().product();
        s.check(g.order() == Order::Finite(size), || format!("order of {:?}", t));
        for m in 1..=12u64 {
            // ♯mG = ∏ d/gcd(d, m)
            let image: u64 = t.iter().map(|&d| d / fga::gcd(d, m)).product();
            let ok = multiple_subgroup(&g, m).map(|h| h.order() == Order::Finite(image)).unwrap_or(false)
                && Ambient::single(g.clone()).index(&SubgroupSpec::multiple(m)) == Ok(Order::Finite(size / image));
            s.check(ok, || format!("{}·{:?}", m, t));
        }
    }
    s
}

/// ♯π_k(FP^n) = ♯sphere·♯fiber, and the fiber vanishes for d ≤ 2, k ≥ d+1.
fn decomposition(cat: &Catalog) -> SuiteReport {
    let mut s = SuiteReport::new("decomposition");
    for f in [Field::R, Field::C, Field::H] {
        for n in 1..=10 {
            for k in 1..=f.sphere_dim(n) + 24 {
                let Ok(d) = decompose_pi(f, n, k, cat) else { continue };
                if d.sphere_trivial() && d.fiber_trivial() && k < f.d() {
                    continue;
                }
                let prod = d.sphere_part.group.order().checked_mul(d.fiber_part.group.order());
                s.check(prod == Some(d.group().order()), || format!("{}P^{} k={}: orders do not multiply", f, n, k));
                if f.d() <= 2 && k > f.d() {
                    s.check(d.fiber_trivial(), || format!("{}P^{} k={}: fiber part nonzero", f, n, k));
                }
            }
        }
    }
    s
}

fn cayley_plane(cat: &Catalog) -> SuiteReport {
    let mut s = SuiteReport::new("cayley");
    for k in 8..=21 {
        match (cayley::pi_kp2(k, cat), pi_sphere(cat, 7, k - 1)) {
            (Ok(e), Ok(sph)) => s.check(e.group == sph.group, || format!("pi_{}(KP^2) differs from pi_{}(S^7)", k, k - 1)),
            (a, b) => s.failures.push(format!("pi_{}(KP^2): {:?} / {:?}", k, a.err(), b.err())),
        }
    }
    for k in [12, 13, 20] {
        s.check(cayley::pi_kp2(k, cat).map(|e| e.group.is_trivial()).unwrap_or(false), || format!("pi_{}(KP^2) should be 0", k));
    }
    for k in [9, 10, 14] {
        s.check(cayley::pi_kp2(k, cat).map(|e| !e.group.is_trivial()).unwrap_or(false), || format!("pi_{}(KP^2) should be nonzero", k));
    }
    s
}
