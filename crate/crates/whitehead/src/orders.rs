//! ♯[ι_n, α] and ♯Δα tables.

use fga::{gcd, GeneratorExpr, Order};
use tables::{NotCovered, SpaceId};

use crate::elem::{classify, leading_factor, stem, Elem};
use crate::rules::{Condition as C, PiecewiseRule, Val};

type Rule = PiecewiseRule<Val>;

fn odd() -> C {
    C::congruent(2, &[1])
}

fn even() -> C {
    C::congruent(2, &[0])
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

pub fn w1() -> Rule {
    PiecewiseRule::new("W1", "(W1)", C::AtLeast(1))
        .arm(C::one_of(&[1, 3, 7]), Val::Const(1))
        .arm(odd().and(C::one_of(&[1, 3, 7]).not()), Val::Const(2))
        .arm(even(), Val::Infinite)
}

pub fn w2() -> Rule {
    PiecewiseRule::new("W2", "(W2)", C::AtLeast(2))
        .arm(C::congruent(4, &[3]).or(C::Eq(2)).or(C::Eq(6)), Val::Const(1))
        .otherwise(Val::Const(2))
}

pub fn w3() -> Rule {
    PiecewiseRule::new("W3", "(W3)", C::AtLeast(2))
        .arm(C::congruent(4, &[2, 3]), Val::Const(1))
        .otherwise(Val::Const(2))
}

pub fn w4() -> Rule {
    let special = C::PowTwoMinus { c: 3, i0: 3 };
    PiecewiseRule::new("W4", "(W4)", C::AtLeast(4))
        .arm(C::congruent(8, &[7]).or(special.clone()), Val::Const(1))
        .arm(C::congruent(8, &[1, 3, 5]).and(C::AtLeast(9)).and(special.not()), Val::Const(2))
        .arm(C::congruent(4, &[2]).and(C::AtLeast(6)).or(C::Eq(4)).or(C::Eq(12)), Val::Const(12))
        .arm(C::congruent(4, &[0]).and(C::AtLeast(8)).and(C::Eq(12).not()), Val::Const(24))
}

/// (W5) only names the arm with value 1; the other value is the order of ν_n².
pub fn w5() -> Rule {
    PiecewiseRule::new("W5", "(W5)", C::AtLeast(4))
        .arm(C::congruent(8, &[4, 5, 7]).or(C::PowTwoMinus { c: 5, i0: 4 }), Val::Const(1))
        .otherwise(Val::Const(2))
}

pub fn w6() -> Rule {
    let top = C::Eq(11).or(C::congruent(16, &[15]));
    PiecewiseRule::new("W6", "(W6)", C::AtLeast(8))
        .arm(top.clone(), Val::Const(1))
        .arm(odd().and(C::AtLeast(9)).and(top.not()), Val::Const(2))
        .arm(C::Eq(8), Val::Const(120))
        .arm(even().and(C::AtLeast(10)), Val::Const(240))
}

pub fn delta_iota() -> Rule {
    PiecewiseRule { name: "nlem-iota", citation: "Lemma nlem, proof", ..w1() }
}

pub fn delta_eta() -> Rule {
    PiecewiseRule { name: "nlem-eta", citation: "Lemma nlem, proof", ..w2() }
}

pub fn delta_eta2() -> Rule {
    PiecewiseRule { name: "nlem-eta2", citation: "Lemma nlem, proof", ..w3() }
}

pub fn delta_nu() -> Rule {
    PiecewiseRule::new("nlem-nu", "Lemma nlem, proof", C::AtLeast(4))
        .arm(C::Eq(5).or(C::congruent(8, &[7])), Val::Const(1))
        .arm(odd().and(C::AtLeast(9)).and(C::congruent(8, &[7]).not()), Val::Const(2))
        .arm(C::Eq(4).or(C::congruent(4, &[2]).and(C::AtLeast(6))).or(C::Eq(12)), Val::Const(12))
        .arm(C::congruent(4, &[0]).and(C::AtLeast(8)).and(C::Eq(12).not()), Val::Const(24))
}

/// ♯Δν_4² = 3 is taken from the proof of Theorem main.
pub fn delta_nu2() -> Rule {
    PiecewiseRule::new("nlem-nu2", "Lemma nlem, proof; Thm. main, proof", C::AtLeast(4))
        .arm(C::Eq(4), Val::Const(3))
        .arm(C::congruent(8, &[4, 5, 7]).and(C::Eq(4).not()), Val::Const(1))
        .otherwise(Val::Const(2))
}

pub fn delta_sigma() -> Rule {
    let top = C::Eq(11).or(C::congruent(16, &[15]));
    PiecewiseRule::new("nlem-sigma", "Lemma nlem, proof; (DeEsig)", C::AtLeast(8))
        .arm(C::Eq(8), Val::Const(2520))
        .arm(C::Eq(11), Val::Const(2))
        .arm(C::congruent(16, &[15]), Val::Const(1))
        .arm(odd().and(C::AtLeast(9)).and(top.not()), Val::Const(2))
        .arm(even().and(C::AtLeast(10)), Val::Const(240))
}

/// Lemma cc, indexed by m for the sphere S^{2m+1}.
pub fn cc_iota() -> Rule {
    PiecewiseRule::new("cc1", "Lemma cc(1)", C::AtLeast(1)).arm(C::Always, Val::Formula("m!", factorial))
}

pub fn cc_eta() -> Rule {
    PiecewiseRule::new("cc2", "Lemma cc(2)", C::AtLeast(1))
        .arm(even(), Val::Const(2))
        .arm(odd(), Val::Const(1))
}

pub fn cc_eta2() -> Rule {
    PiecewiseRule { name: "cc3", citation: "Lemma cc(3)", ..cc_eta() }
}

pub fn cc_nu() -> Rule {
    PiecewiseRule::new("cc4", "Lemma cc(4)", C::AtLeast(2))
        .arm(even(), Val::Formula("(24,m)", |m| Some(gcd(24, m))))
        .arm(odd().and(C::AtLeast(3)), Val::Formula("(24,m+3)/2", |m| Some(gcd(24, m + 3) / 2)))
}

pub fn cc_nu2() -> Rule {
    PiecewiseRule::new("cc5", "Lemma cc(5)", C::AtLeast(2))
        .arm(C::congruent(4, &[2, 3]).and(C::AtLeast(2)), Val::Const(1))
        .arm(C::congruent(4, &[0, 1]).and(C::AtLeast(4)), Val::Const(2))
}

/// Lemma hh, indexed by m for the sphere S^{4m+3}.
pub fn hh_iota() -> Rule {
    PiecewiseRule::new("hh1", "Lemma hh(1)", C::AtLeast(1))
        .arm(even(), Val::Formula("(2m+1)!", |m| factorial(2 * m + 1)))
        .arm(odd(), Val::Formula("2(2m+1)!", |m| factorial(2 * m + 1)?.checked_mul(2)))
}

pub fn hh_eta() -> Rule {
    PiecewiseRule::new("hh2", "Lemma hh(2)", C::AtLeast(1)).arm(C::Always, Val::Const(2))
}

pub fn hh_eta2() -> Rule {
    hh_eta()
}

pub fn hh_nu() -> Rule {
    PiecewiseRule::new("hh3", "Lemma hh(3)", C::AtLeast(1))
        .arm(C::Always, Val::Formula("(24,m+2)", |m| Some(gcd(24, m + 2))))
}

/// Every rule whose arms must partition its domain.
pub fn all_rules() -> Vec<Rule> {
    vec![
        w1(),
        w2(),
        w3(),
        w4(),
        w5(),
        w6(),
        delta_iota(),
        delta_eta(),
        delta_eta2(),
        delta_nu(),
        delta_nu2(),
        delta_sigma(),
        cc_iota(),
        cc_eta(),
        cc_eta2(),
        cc_nu(),
        cc_nu2(),
        hh_iota(),
        hh_eta(),
        hh_eta2(),
        hh_nu(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadOrderFact {
    pub n: u32,
    pub element: GeneratorExpr,
    pub order: Order,
    pub citation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    R,
    C,
    H,
}

fn not_covered(e: &GeneratorExpr, n: u32) -> NotCovered {
    let k = e.dims().map(|d| d.source).unwrap_or(n);
    NotCovered::new(SpaceId::Sphere(n), k)
}

fn from_rule(rule: Rule, param: u64) -> Option<(Order, String)> {
    Some((rule.order_at(param)?, rule.citation.to_string()))
}

fn fixed(o: u64, cite: &str) -> Option<(Order, String)> {
    Some((Order::Finite(o), cite.to_string()))
}

fn scale(o: Order, m: i64) -> Order {
    match (o, m.unsigned_abs()) {
        (_, 0) => Order::Finite(1),
        (Order::Infinite, _) => Order::Infinite,
        (Order::Finite(d), m) => Order::Finite(d / gcd(d, m)),
    }
}

/// Order of a sum of classes whose own orders are pairwise coprime.
fn coprime_sum(parts: &[Order]) -> Option<Order> {
    let mut acc = 1u64;
    for p in parts {
        let d = p.finite()?;
        if gcd(acc, d) != 1 {
            return None;
        }
        acc = acc.checked_mul(d)?;
    }
    Some(Order::Finite(acc))
}

fn stem_8_to_10(el: Elem) -> Option<u64> {
    use Elem::*;
    match el {
        Eps | EtaSigma | NuBar | Mu | EtaEps | Eta2Sigma | Nu3 | EtaMu => Some(2),
        Beta1 => Some(3),
        _ => None,
    }
}

fn whitehead_table(n: u32, el: Elem) -> Option<(Order, String)> {
    use Elem::*;
    let m = n as u64;
    match el {
        Iota => from_rule(w1(), m),
        Eta => from_rule(w2(), m),
        Eta2 => from_rule(w3(), m),
        Nu => from_rule(w4(), m),
        Nu2 => from_rule(w5(), m),
        Sigma => from_rule(w6(), m),
        EOmega if n == 4 => fixed(6, "(W40)"),
        ENuPrime if n == 4 => fixed(2, "(W40)"),
        ESigmaPrime if n == 8 => fixed(60, "(W60)"),
        SigmaPrime if n == 7 => fixed(1, "[GM], cited in Thm. ex2, proof"),
        SigmaTriplePrime if n == 5 => fixed(1, "[GM], cited in Thm. ex2, proof"),
        WhIota if n == 6 => fixed(3, "Lemma nlem, proof"),
        Nu4Eta | ENuPrimeEta | Nu4Eta2 | ENuPrimeEta2 if n == 4 => fixed(1, "Lemma nlem, proof; (hw)"),
        OddPrimary if n % 2 == 1 => fixed(1, "[ι_n,ι_n] has order 2 for n odd (W1)"),
        _ if n >= 8 && n % 8 == 0 => {
            let cite = if el == Beta1 || el == EtaMu { "(j5)" } else if matches!(el, Eps | EtaSigma | NuBar | Mu) { "(j2)" } else { "(j3)" };
            stem_8_to_10(el).and_then(|o| fixed(o, cite))
        }
        _ if n >= 11 && n % 4 == 3 => stem_8_to_10(el).and_then(|_| fixed(1, "Prop. 8910(1), Prop. Gotc")),
        _ => None,
    }
}

/// ♯[ι_n, α] with its source.
pub fn whitehead_fact(n: u32, element: &GeneratorExpr) -> Result<WhiteheadOrderFact, NotCovered> {
    let (order, citation) = whitehead_inner(n, element).ok_or_else(|| not_covered(element, n))?;
    Ok(WhiteheadOrderFact { n, element: element.clone(), order, citation })
}

fn target_is(e: &GeneratorExpr, n: u32) -> bool {
    matches!(e.dims(), Ok(d) if d.target == Some(n))
}

fn whitehead_inner(n: u32, e: &GeneratorExpr) -> Option<(Order, String)> {
    if !target_is(e, n) {
        return None;
    }
    if [1, 3, 7].contains(&n) {
        return fixed(1, "(W1)");
    }
    match e {
        GeneratorExpr::Scalar(m, x) => {
            let (o, c) = whitehead_inner(n, x)?;
            return Some((scale(o, *m), c));
        }
        GeneratorExpr::Sum(xs) => {
            let parts: Vec<(Order, String)> = xs.iter().map(|x| whitehead_inner(n, x)).collect::<Option<_>>()?;
            let orders: Vec<Order> = parts.iter().map(|p| p.0).collect();
            let mut cites: Vec<String> = parts.into_iter().map(|p| p.1).collect();
            cites.dedup();
            return Some((coprime_sum(&orders)?, cites.join("; ")));
        }
        _ => {}
    }
    if let Some((_, el)) = classify(e) {
        if let Some(hit) = whitehead_table(n, el) {
            return Some(hit);
        }
    }
    // [ι_n, α∘β] = 0 whenever [ι_n, α] = 0
    let (d, lead) = leading_factor(e)?;
    match whitehead_table(d, lead)? {
        (Order::Finite(1), c) => Some((Order::Finite(1), format!("{}; (hw)", c))),
        _ => None,
    }
}

/// ♯[ι_n, α].
pub fn whitehead_order_iota(n: u32, element: &GeneratorExpr) -> Result<Order, NotCovered> {
    whitehead_fact(n, element).map(|f| f.order)
}

fn delta_r(n: u32, el: Elem) -> Option<(Order, String)> {
    use Elem::*;
    let m = n as u64;
    match el {
        Iota => from_rule(delta_iota(), m),
        Eta => from_rule(delta_eta(), m),
        Eta2 => from_rule(delta_eta2(), m),
        _ if [1, 3, 7].contains(&n) => fixed(1, "SO(n+1) → S^n has a section for n = 1, 3, 7"),
        Nu => from_rule(delta_nu(), m),
        Nu2 => from_rule(delta_nu2(), m),
        Sigma => from_rule(delta_sigma(), m),
        ENuPrime if n == 4 => fixed(4, "Lemma nlem, proof"),
        EOmega if n == 4 => fixed(6, "Lemma nlem(1)"),
        Nu4Eta | ENuPrimeEta | Nu4Eta2 | ENuPrimeEta2 if n == 4 => fixed(2, "Lemma nlem, proof"),
        WhIota if n == 6 => fixed(30, "Lemma nlem, proof"),
        ESigmaPrime if n == 8 => fixed(120, "(DeEsig)"),
        SigmaTriplePrime if n == 5 => fixed(1, "Lemma nlem, proof"),
        Eps | Mu if n % 4 == 3 => fixed(1, "(j1)"),
        _ => None,
    }
}

fn delta_c(n: u32, el: Elem) -> Option<(Order, String)> {
    if n % 2 == 0 {
        return None;
    }
    let m = (n as u64 - 1) / 2;
    match el {
        Elem::Iota => from_rule(cc_iota(), m),
        Elem::Eta => from_rule(cc_eta(), m),
        Elem::Eta2 => from_rule(cc_eta2(), m),
        Elem::Nu => from_rule(cc_nu(), m),
        Elem::Nu2 => from_rule(cc_nu2(), m),
        _ => None,
    }
}

fn delta_h(n: u32, el: Elem) -> Option<(Order, String)> {
    if n % 4 != 3 || n < 7 {
        return None;
    }
    let m = (n as u64 - 3) / 4;
    match el {
        Elem::Iota => from_rule(hh_iota(), m),
        Elem::Eta => from_rule(hh_eta(), m),
        Elem::Eta2 => from_rule(hh_eta2(), m),
        Elem::Nu => from_rule(hh_nu(), m),
        _ => None,
    }
}

/// ♯Δα for the connecting map of SO(n+1) → S^n (R), SU → S^{2m+1} (C) or
/// Sp → S^{4m+3} (H); `n` is the sphere dimension.
pub fn delta_fact(family: Family, n: u32, element: &GeneratorExpr) -> Result<(Order, String), NotCovered> {
    let nc = || not_covered(element, n);
    if !target_is(element, n) {
        return Err(nc());
    }
    if let GeneratorExpr::Scalar(m, x) = element {
        let (o, c) = delta_fact(family, n, x)?;
        return Ok((scale(o, *m), c));
    }
    let (_, el) = classify(element).ok_or_else(nc)?;
    let hit = match family {
        Family::R => delta_r(n, el),
        Family::C => delta_c(n, el),
        Family::H => delta_h(n, el),
    };
    hit.ok_or_else(nc)
}

pub fn delta_order(family: Family, n: u32, element: &GeneratorExpr) -> Result<Order, NotCovered> {
    delta_fact(family, n, element).map(|f| f.0)
}

/// Whether ♯Δα > ♯[ι_n, α] for α ∈ π_{n+k}(S^n), k ≤ 7. The pair (4, ν_4²)
/// is included: its Δ-order 3 is stated separately from the printed list.
pub fn delta_vs_whitehead_gap(n: u32, element: &GeneratorExpr) -> Result<bool, NotCovered> {
    let k = stem(element).filter(|_| target_is(element, n)).ok_or_else(|| not_covered(element, n))?;
    if k > 7 {
        return Err(not_covered(element, n));
    }
    let Some((_, el)) = classify(element) else { return Ok(false) };
    let m = n as u64;
    Ok(match el {
        Elem::ENuPrime | Elem::ENuPrimeEta | Elem::Nu4Eta | Elem::ENuPrimeEta2 | Elem::Nu4Eta2 => n == 4,
        Elem::WhIota => n == 6,
        Elem::ESigmaPrime => n == 8,
        Elem::Sigma => n == 8 || n == 11,
        Elem::Nu => C::PowTwoMinus { c: 3, i0: 4 }.holds(m, 0),
        Elem::Nu2 => n == 4 || C::PowTwoMinus { c: 5, i0: 4 }.holds(m, 0),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GeneratorExpr {
        GeneratorExpr::parse(s).unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(whitehead_order_iota(8, &g("sigma(8)")), Ok(Order::Finite(120)));
        assert_eq!(whitehead_order_iota(7, &g("iota(7)")), Ok(Order::Finite(1)));
        assert_eq!(whitehead_order_iota(6, &g("nu(6)")), Ok(Order::Finite(12)));
        assert_eq!(whitehead_order_iota(9, &g("nu(9)")), Ok(Order::Finite(2)));
        assert_eq!(whitehead_order_iota(4, &g("E(omega(3))")), Ok(Order::Finite(6)));
        assert_eq!(whitehead_order_iota(8, &g("E(sigma'(7))")), Ok(Order::Finite(60)));
        assert_eq!(whitehead_order_iota(16, &g("eps(16)")), Ok(Order::Finite(2)));
        assert_eq!(whitehead_order_iota(16, &g("beta1(16)")), Ok(Order::Finite(3)));
        assert_eq!(whitehead_order_iota(10, &g("iota(10)")), Ok(Order::Infinite));
        assert!(whitehead_order_iota(9, &g("eps(9)")).is_err());
        assert!(whitehead_order_iota(9, &g("nu(10)")).is_err());
    }

    #[test]
    fn scalars_and_composites() {
        assert_eq!(whitehead_order_iota(6, &g("sc(4,nu(6))")), Ok(Order::Finite(3)));
        assert_eq!(whitehead_order_iota(5, &g("cmp(nu(5),eta(8))")), Ok(Order::Finite(1)));
        assert_eq!(whitehead_order_iota(16, &g("add(cmp(eta(16),mu(17)),beta1(16))")), Ok(Order::Finite(6)));
        assert_eq!(whitehead_order_iota(9, &g("add(alpha(2,9),alpha(1,5,9))")), Ok(Order::Finite(1)));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_order(Family::C, 9, &g("nu(9)")), Ok(Order::Finite(4)));
        assert_eq!(delta_order(Family::H, 11, &g("nu(11)")), Ok(Order::Finite(4)));
        assert_eq!(delta_order(Family::R, 8, &g("sigma(8)")), Ok(Order::Finite(2520)));
        assert_eq!(delta_order(Family::R, 5, &g("nu(5)")), Ok(Order::Finite(1)));
        assert_eq!(delta_order(Family::R, 4, &g("E(nu'(3))")), Ok(Order::Finite(4)));
        assert_eq!(delta_order(Family::C, 5, &g("iota(5)")), Ok(Order::Finite(2)));
        assert_eq!(delta_order(Family::H, 7, &g("iota(7)")), Ok(Order::Finite(12)));
        assert_eq!(delta_order(Family::H, 11, &g("iota(11)")), Ok(Order::Finite(120)));
        assert!(delta_order(Family::C, 8, &g("nu(8)")).is_err());
        assert!(delta_order(Family::C, 101, &g("iota(101)")).is_err());
    }

    #[test]
    fn gap_examples() {
        assert_eq!(delta_vs_whitehead_gap(4, &g("E(nu'(3))")), Ok(true));
        assert_eq!(delta_vs_whitehead_gap(9, &g("nu(9)")), Ok(false));
        assert_eq!(delta_vs_whitehead_gap(13, &g("nu(13)")), Ok(true));
        assert_eq!(delta_vs_whitehead_gap(11, &g("cmp(nu(11),nu(14))")), Ok(true));
        assert!(delta_vs_whitehead_gap(16, &g("eps(16)")).is_err());
    }
}
