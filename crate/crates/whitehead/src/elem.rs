//! Recognising the named classes the order rules are stated for.

use fga::{AtomName, GeneratorExpr};

/// Classes α ∈ π_{n+k}(S^n) with a tabulated ♯[ι_n, α] or ♯Δα.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Elem {
    Iota,
    Eta,
    Eta2,
    Nu,
    Nu2,
    Nu3,
    Sigma,
    Eps,
    NuBar,
    Mu,
    EtaSigma,
    EtaEps,
    Eta2Sigma,
    EtaMu,
    Beta1,
    /// Eω on S^4.
    EOmega,
    /// Eν′ on S^4.
    ENuPrime,
    /// Eσ′ on S^8.
    ESigmaPrime,
    SigmaPrime,
    SigmaTriplePrime,
    /// [ι_n, ι_n].
    WhIota,
    Nu4Eta,
    ENuPrimeEta,
    Nu4Eta2,
    ENuPrimeEta2,
    /// A composite involving an α or β class (odd primary).
    OddPrimary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Atom(AtomName),
    EOmega,
    ENuPrime,
    ESigmaPrime,
    Beta1,
    Odd,
    Wh,
}

fn suspend(fs: Vec<(Tok, u32)>) -> Option<Vec<(Tok, u32)>> {
    fs.into_iter()
        .map(|(t, d)| match t {
            Tok::Atom(AtomName::Omega) if d == 3 => Some((Tok::EOmega, 4)),
            Tok::Atom(AtomName::NuPrime) if d == 3 => Some((Tok::ENuPrime, 4)),
            Tok::Atom(AtomName::SigmaPrime) if d == 7 => Some((Tok::ESigmaPrime, 8)),
            Tok::Atom(a) if !a.token().ends_with('\'') && a != AtomName::Omega => Some((t, d + 1)),
            Tok::Beta1 | Tok::Odd => Some((t, d + 1)),
            _ => None,
        })
        .collect()
}

fn factors(e: &GeneratorExpr) -> Option<Vec<(Tok, u32)>> {
    use GeneratorExpr::*;
    match e {
        Atom { name, dim } => Some(vec![(Tok::Atom(*name), *dim)]),
        Alpha { dim, .. } => Some(vec![(Tok::Odd, *dim)]),
        Beta1 { dim } => Some(vec![(Tok::Beta1, *dim)]),
        Compose(l, r) => {
            let mut v = factors(l)?;
            v.extend(factors(r)?);
            Some(v)
        }
        Suspension(x) => suspend(factors(x)?),
        Whitehead(a, b) => match (a.as_ref(), b.as_ref()) {
            (Atom { name: AtomName::Iota, dim: x }, Atom { name: AtomName::Iota, dim: y }) if x == y => {
                Some(vec![(Tok::Wh, *x)])
            }
            _ => None,
        },
        _ => None,
    }
}

fn from_tokens(ts: &[Tok], n: u32) -> Option<Elem> {
    use AtomName as A;
    use Tok::Atom as T;
    if ts.iter().any(|t| matches!(t, Tok::Odd)) || (ts.len() > 1 && ts.contains(&Tok::Beta1)) {
        return Some(Elem::OddPrimary);
    }
    Some(match ts {
        [T(A::Iota)] => Elem::Iota,
        [T(A::Eta)] => Elem::Eta,
        [T(A::Eta), T(A::Eta)] => Elem::Eta2,
        [T(A::Nu)] => Elem::Nu,
        [T(A::Nu), T(A::Nu)] => Elem::Nu2,
        [T(A::Nu), T(A::Nu), T(A::Nu)] => Elem::Nu3,
        [T(A::Sigma)] => Elem::Sigma,
        [T(A::Epsilon)] => Elem::Eps,
        [T(A::NuBar)] => Elem::NuBar,
        [T(A::Mu)] => Elem::Mu,
        [T(A::Eta), T(A::Sigma)] => Elem::EtaSigma,
        [T(A::Eta), T(A::Epsilon)] => Elem::EtaEps,
        [T(A::Eta), T(A::Eta), T(A::Sigma)] => Elem::Eta2Sigma,
        [T(A::Eta), T(A::Mu)] => Elem::EtaMu,
        [Tok::Beta1] => Elem::Beta1,
        [Tok::EOmega] => Elem::EOmega,
        [Tok::ENuPrime] => Elem::ENuPrime,
        [Tok::ESigmaPrime] => Elem::ESigmaPrime,
        [T(A::SigmaPrime)] => Elem::SigmaPrime,
        [T(A::SigmaTriplePrime)] => Elem::SigmaTriplePrime,
        [Tok::Wh] => Elem::WhIota,
        [T(A::Nu), T(A::Eta)] if n == 4 => Elem::Nu4Eta,
        [T(A::Nu), T(A::Eta), T(A::Eta)] if n == 4 => Elem::Nu4Eta2,
        [Tok::ENuPrime, T(A::Eta)] => Elem::ENuPrimeEta,
        [Tok::ENuPrime, T(A::Eta), T(A::Eta)] => Elem::ENuPrimeEta2,
        _ => return None,
    })
}

/// (n, class) for an element of π_*(S^n), when it is one of the named ones.
pub fn classify(e: &GeneratorExpr) -> Option<(u32, Elem)> {
    let fs = factors(e)?;
    let n = fs.first()?.1;
    let mut ts: Vec<Tok> = fs.iter().map(|f| f.0).collect();
    if ts.len() > 1 {
        ts.retain(|t| *t != Tok::Atom(AtomName::Iota));
    }
    from_tokens(&ts, n).map(|el| (n, el))
}

/// The leftmost factor of a composite, as an element in its own right.
pub fn leading_factor(e: &GeneratorExpr) -> Option<(u32, Elem)> {
    let fs = factors(e)?;
    let (t, d) = *fs.iter().find(|f| f.0 != Tok::Atom(AtomName::Iota)).or(fs.first())?;
    from_tokens(&[t], d).map(|el| (d, el))
}

/// k for a class in π_{n+k}(S^n).
pub fn stem(e: &GeneratorExpr) -> Option<u32> {
    let d = e.dims().ok()?;
    d.source.checked_sub(d.target?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Option<(u32, Elem)> {
        classify(&GeneratorExpr::parse(s).unwrap())
    }

    #[test]
    fn named_classes() {
        assert_eq!(c("nu(9)"), Some((9, Elem::Nu)));
        assert_eq!(c("cmp(nu(9),nu(12))"), Some((9, Elem::Nu2)));
        assert_eq!(c("E(omega(3))"), Some((4, Elem::EOmega)));
        assert_eq!(c("E(sigma'(7))"), Some((8, Elem::ESigmaPrime)));
        assert_eq!(c("cmp(E(nu'(3)),eta(7),eta(8))"), Some((4, Elem::ENuPrimeEta2)));
        assert_eq!(c("cmp(nu(4),eta(7))"), Some((4, Elem::Nu4Eta)));
        assert_eq!(c("cmp(nu(5),eta(8))"), None);
        assert_eq!(c("wh(iota(6),iota(6))"), Some((6, Elem::WhIota)));
        assert_eq!(c("E(eta(5))"), Some((6, Elem::Eta)));
        assert_eq!(c("E(cmp(eta(5),eps(6)))"), Some((6, Elem::EtaEps)));
        assert_eq!(c("cmp(iota(7),sigma'(7))"), Some((7, Elem::SigmaPrime)));
        assert_eq!(c("cmp(alpha(1,5),alpha(1,8))"), Some((5, Elem::OddPrimary)));
        assert_eq!(c("beta1(11)"), Some((11, Elem::Beta1)));
        assert_eq!(c("E(E(omega(3)))"), None);
    }

    #[test]
    fn leading() {
        let e = GeneratorExpr::parse("cmp(nu(5),eta(8),eta(9))").unwrap();
        assert_eq!(leading_factor(&e), Some((5, Elem::Nu)));
        assert_eq!(stem(&e), Some(5));
    }
}
