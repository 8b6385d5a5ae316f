//! Symbolic names for homotopy classes.
//!
//! Text form is a small prefix grammar, for example `cmp(nu'(3),E(eps(5)))`:
//!
//! ```text
//! expr  := atom "(" dim ")"
//!        | "alpha(" i "," dim ")" | "alpha(" i "," p "," dim ")" | "alpha'(" i "," dim ")"
//!        | "beta1(" dim ")"
//!        | "E(" expr ")" | "cmp(" expr "," expr {"," expr} ")" | "wh(" expr "," expr ")"
//!        | "sc(" int "," expr ")" | "add(" expr "," expr {"," expr} ")"
//!        | "gamma(" expr ")" | "i(" expr ")" | "p(" expr ")"
//! atom  := iota | eta | nu | nu' | nubar | sigma | sigma' | sigma'' | sigma'''
//!        | eps | eps' | epsbar | epsbar' | mu | mu' | mubar | mubar'
//!        | kappa | kappabar | zeta | rho | rho'' | xi | omega
//! ```
//!
//! `dim` is the dimension of the target sphere. `cmp(a,b)` is `a∘b`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomName {
    Iota,
    Eta,
    Nu,
    NuPrime,
    NuBar,
    Sigma,
    SigmaPrime,
    SigmaDoublePrime,
    SigmaTriplePrime,
    Epsilon,
    EpsilonPrime,
    EpsilonBar,
    EpsilonBarPrime,
    Mu,
    MuPrime,
    MuBar,
    MuBarPrime,
    Kappa,
    KappaBar,
    Zeta,
    Rho,
    RhoDoublePrime,
    Xi,
    Omega,
}

const ATOMS: &[(AtomName, &str, &str, u32)] = &[
    (AtomName::Iota, "iota", "ι", 0),
    (AtomName::Eta, "eta", "η", 1),
    (AtomName::Nu, "nu", "ν", 3),
    (AtomName::NuPrime, "nu'", "ν′", 3),
    (AtomName::NuBar, "nubar", "ν̄", 8),
    (AtomName::Sigma, "sigma", "σ", 7),
    (AtomName::SigmaPrime, "sigma'", "σ′", 7),
    (AtomName::SigmaDoublePrime, "sigma''", "σ″", 7),
    (AtomName::SigmaTriplePrime, "sigma'''", "σ‴", 7),
    (AtomName::Epsilon, "eps", "ε", 8),
    (AtomName::EpsilonPrime, "eps'", "ε′", 10),
    (AtomName::EpsilonBar, "epsbar", "ε̄", 15),
    (AtomName::EpsilonBarPrime, "epsbar'", "ε̄′", 17),
    (AtomName::Mu, "mu", "μ", 9),
    (AtomName::MuPrime, "mu'", "μ′", 11),
    (AtomName::MuBar, "mubar", "μ̄", 17),
    (AtomName::MuBarPrime, "mubar'", "μ̄′", 19),
    (AtomName::Kappa, "kappa", "κ", 14),
    (AtomName::KappaBar, "kappabar", "κ̄", 20),
    (AtomName::Zeta, "zeta", "ζ", 11),
    (AtomName::Rho, "rho", "ρ", 15),
    (AtomName::RhoDoublePrime, "rho''", "ρ″", 15),
    (AtomName::Xi, "xi", "ξ", 18),
    (AtomName::Omega, "omega", "ω", 3),
];

impl AtomName {
    fn entry(self) -> &'static (AtomName, &'static str, &'static str, u32) {
        ATOMS.iter().find(|e| e.0 == self).expect("every atom is tabulated")
    }

    pub fn token(self) -> &'static str {
        self.entry().1
    }

    pub fn symbol(self) -> &'static str {
        self.entry().2
    }

    /// k such that the class lives in π_{n+k}(S^n).
    pub fn stem(self) -> u32 {
        self.entry().3
    }

    pub fn from_token(s: &str) -> Option<AtomName> {
        ATOMS.iter().find(|e| e.1 == s).map(|e| e.0)
    }

    /// Primed classes are written without a dimension subscript.
    fn has_fixed_dim(self) -> bool {
        self.token().ends_with('\'') || self == AtomName::Omega
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorExpr {
    Atom { name: AtomName, dim: u32 },
    /// α_i(n) for p = 3 and α_{i,p}(n) otherwise; `primed` gives α′_i(n).
    Alpha { i: u32, p: u32, dim: u32, primed: bool },
    Beta1 { dim: u32 },
    Suspension(Box<GeneratorExpr>),
    Compose(Box<GeneratorExpr>, Box<GeneratorExpr>),
    Whitehead(Box<GeneratorExpr>, Box<GeneratorExpr>),
    Scalar(i64, Box<GeneratorExpr>),
    Sum(Vec<GeneratorExpr>),
    GammaPush(Box<GeneratorExpr>),
    IPush(Box<GeneratorExpr>),
    PPush(Box<GeneratorExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected end of generator expression")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("wrong arguments for {0}")]
    Arity(String),
    #[error("dimension mismatch in {0}")]
    Dimension(String),
}

/// Source and target dimension of a class S^source → S^target. The target is
/// `None` once the class has been pushed into a projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub target: Option<u32>,
    pub source: u32,
}

impl GeneratorExpr {
    pub fn atom(name: AtomName, dim: u32) -> Self {
        GeneratorExpr::Atom { name, dim }
    }

    pub fn iota(dim: u32) -> Self {
        Self::atom(AtomName::Iota, dim)
    }

    pub fn suspend(self) -> Self {
        GeneratorExpr::Suspension(Box::new(self))
    }

    pub fn compose(self, right: GeneratorExpr) -> Self {
        GeneratorExpr::Compose(Box::new(self), Box::new(right))
    }

    pub fn scaled(self, m: i64) -> Self {
        if m == 1 {
            self
        } else {
            GeneratorExpr::Scalar(m, Box::new(self))
        }
    }

    pub fn gamma(self) -> Self {
        GeneratorExpr::GammaPush(Box::new(self))
    }

    pub fn i_push(self) -> Self {
        GeneratorExpr::IPush(Box::new(self))
    }

    pub fn parse(s: &str) -> Result<Self, ExprError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(ExprError::Unexpected(p.src[p.pos] as char, p.pos));
        }
        e.dims()?;
        Ok(e)
    }

    pub fn dims(&self) -> Result<Dims, ExprError> {
        use GeneratorExpr::*;
        Ok(match self {
            Atom { name, dim } => Dims { target: Some(*dim), source: dim + name.stem() },
            Alpha { i, p, dim, primed } => {
                let stem = if *primed { 4 * i - 1 } else { 2 * i * (p - 1) - 1 };
                Dims { target: Some(*dim), source: dim + stem }
            }
            Beta1 { dim } => Dims { target: Some(*dim), source: dim + 10 },
            Suspension(x) => {
                let d = x.dims()?;
                let t = d.target.ok_or_else(|| ExprError::Dimension(self.to_string()))?;
                Dims { target: Some(t + 1), source: d.source + 1 }
            }
            Compose(l, r) => {
                let (dl, dr) = (l.dims()?, r.dims()?);
                if dr.target != Some(dl.source) {
                    return Err(ExprError::Dimension(self.to_string()));
                }
                Dims { target: dl.target, source: dr.source }
            }
            Whitehead(a, b) => {
                let (da, db) = (a.dims()?, b.dims()?);
                if da.target != db.target {
                    return Err(ExprError::Dimension(self.to_string()));
                }
                Dims { target: da.target, source: da.source + db.source - 1 }
            }
            Scalar(_, x) => x.dims()?,
            Sum(xs) => {
                let first = xs.first().ok_or_else(|| ExprError::Arity("add".into()))?.dims()?;
                for x in &xs[1..] {
                    if x.dims()? != first {
                        return Err(ExprError::Dimension(self.to_string()));
                    }
                }
                first
            }
            GammaPush(x) | IPush(x) | PPush(x) => Dims { target: None, source: x.dims()?.source },
        })
    }

    /// The odd prime this class is primary for, when the notation says so
    /// (α and β families and composites involving them).
    pub fn odd_prime(&self) -> Option<u32> {
        use GeneratorExpr::*;
        match self {
            Atom { .. } => None,
            Alpha { p, primed, .. } => Some(if *primed { 3 } else { *p }),
            Beta1 { .. } => Some(3),
            Suspension(x) | Scalar(_, x) | GammaPush(x) | IPush(x) | PPush(x) => x.odd_prime(),
            Compose(l, r) | Whitehead(l, r) => l.odd_prime().or_else(|| r.odd_prime()),
            Sum(xs) => {
                let first = xs.first()?.odd_prime()?;
                xs.iter().all(|x| x.odd_prime() == Some(first)).then_some(first)
            }
        }
    }

    /// Unicode rendering close to the usual printed notation.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        self.write_pretty(&mut s);
        s
    }

    fn write_pretty(&self, out: &mut String) {
        use GeneratorExpr::*;
        match self {
            Atom { name, dim } => {
                out.push_str(name.symbol());
                if !name.has_fixed_dim() {
                    out.push_str(&subscript(*dim));
                }
            }
            Alpha { i, p, dim, primed } => {
                out.push_str(if *primed { "α′" } else { "α" });
                if *p == 3 || *primed {
                    out.push_str(&subscript(*i));
                } else {
                    out.push_str(&format!("_{{{},{}}}", i, p));
                }
                out.push_str(&format!("({})", dim));
            }
            Beta1 { dim } => out.push_str(&format!("β_1({})", dim)),
            Suspension(x) => {
                out.push('E');
                x.write_factor(out);
            }
            Compose(..) => {
                let factors = self.compose_factors();
                let mut i = 0;
                while i < factors.len() {
                    let f = factors[i];
                    let mut run = 1;
                    if let Atom { name, dim } = f {
                        let mut d = dim + name.stem();
                        while i + run < factors.len() && factors[i + run] == &(Atom { name: *name, dim: d }) {
                            d += name.stem();
                            run += 1;
                        }
                    }
                    if run > 1 {
                        if let Atom { name, dim } = f {
                            out.push_str(name.symbol());
                            out.push_str(&superscript(run as u32));
                            if !name.has_fixed_dim() {
                                out.push_str(&subscript(*dim));
                            }
                        }
                    } else {
                        f.write_factor(out);
                    }
                    i += run;
                }
            }
            Whitehead(a, b) => {
                out.push('[');
                a.write_pretty(out);
                out.push(',');
                b.write_pretty(out);
                out.push(']');
            }
            Scalar(m, x) => {
                match *m {
                    -1 => out.push('−'),
                    m if m < 0 => out.push_str(&format!("−{}", -m)),
                    m => out.push_str(&m.to_string()),
                }
                x.write_factor(out);
            }
            Sum(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    match x {
                        Scalar(m, inner) if k > 0 && *m < 0 => {
                            out.push('−');
                            if *m != -1 {
                                out.push_str(&(-m).to_string());
                            }
                            inner.write_factor(out);
                        }
                        _ => {
                            if k > 0 {
                                out.push('+');
                            }
                            x.write_pretty(out);
                        }
                    }
                }
            }
            GammaPush(x) => {
                out.push('γ');
                x.write_factor(out);
            }
            IPush(x) => {
                out.push('i');
                x.write_factor(out);
            }
            PPush(x) => {
                out.push('p');
                x.write_factor(out);
            }
        }
    }

    fn write_factor(&self, out: &mut String) {
        match self {
            GeneratorExpr::Sum(_) | GeneratorExpr::Suspension(_) | GeneratorExpr::Scalar(..) => {
                out.push('(');
                self.write_pretty(out);
                out.push(')');
            }
            _ => self.write_pretty(out),
        }
    }

    fn compose_factors(&self) -> Vec<&GeneratorExpr> {
        match self {
            GeneratorExpr::Compose(l, r) => {
                let mut v = l.compose_factors();
                v.extend(r.compose_factors());
                v
            }
            other => vec![other],
        }
    }
}

fn subscript(n: u32) -> String {
    if n < 10 {
        format!("_{}", n)
    } else {
        format!("_{{{}}}", n)
    }
}

fn superscript(n: u32) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| SUP[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for GeneratorExpr {
    /// The prefix grammar, which round-trips through [`GeneratorExpr::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorExpr::*;
        match self {
            Atom { name, dim } => write!(f, "{}({})", name.token(), dim),
            Alpha { i, p, dim, primed: true } => {
                debug_assert_eq!(*p, 3);
                write!(f, "alpha'({},{})", i, dim)
            }
            Alpha { i, p: 3, dim, .. } => write!(f, "alpha({},{})", i, dim),
            Alpha { i, p, dim, .. } => write!(f, "alpha({},{},{})", i, p, dim),
            Beta1 { dim } => write!(f, "beta1({})", dim),
            Suspension(x) => write!(f, "E({})", x),
            Compose(..) => {
                write!(f, "cmp(")?;
                for (k, x) in self.compose_factors().iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, ")")
            }
            Whitehead(a, b) => write!(f, "wh({},{})", a, b),
            Scalar(m, x) => write!(f, "sc({},{})", m, x),
            Sum(xs) => {
                write!(f, "add(")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, ")")
            }
            GammaPush(x) => write!(f, "gamma({})", x),
            IPush(x) => write!(f, "i({})", x),
            PPush(x) => write!(f, "p({})", x),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Int(i64),
    Expr(GeneratorExpr),
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(ExprError::Unexpected(x as char, self.pos)),
            None => Err(ExprError::UnexpectedEnd),
        }
    }

    fn ident(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'\'' || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&c) => Err(ExprError::Unexpected(c as char, self.pos)),
                None => Err(ExprError::UnexpectedEnd),
            };
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn arg(&mut self) -> Result<Arg, ExprError> {
        match self.peek() {
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                text.parse().map(Arg::Int).map_err(|_| ExprError::UnknownSymbol(text.to_string()))
            }
            Some(_) => self.expr().map(Arg::Expr),
            None => Err(ExprError::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<GeneratorExpr, ExprError> {
        let name = self.ident()?;
        self.expect(b'(')?;
        let mut args = vec![self.arg()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            args.push(self.arg()?);
        }
        self.expect(b')')?;
        build(&name, args)
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<GeneratorExpr, ExprError> {
    use GeneratorExpr as G;
    let arity = || ExprError::Arity(name.to_string());
    let uint = |a: &Arg| match a {
        Arg::Int(v) if *v >= 0 => Ok(*v as u32),
        _ => Err(arity()),
    };
    let exprs = || -> Result<Vec<GeneratorExpr>, ExprError> {
        Ok(args
            .iter()
            .map(|a| match a {
                Arg::Expr(e) => Some(e.clone()),
                Arg::Int(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(arity)?)
    };
    let one = |v: Vec<GeneratorExpr>| -> Result<Box<GeneratorExpr>, ExprError> {
        let [x]: [GeneratorExpr; 1] = v.try_into().map_err(|_| arity())?;
        Ok(Box::new(x))
    };
    Ok(match name {
        "alpha" => match args.as_slice() {
            [i, d] => G::Alpha { i: uint(i)?, p: 3, dim: uint(d)?, primed: false },
            [i, p, d] => G::Alpha { i: uint(i)?, p: uint(p)?, dim: uint(d)?, primed: false },
            _ => return Err(arity()),
        },
        "alpha'" => match args.as_slice() {
            [i, d] => G::Alpha { i: uint(i)?, p: 3, dim: uint(d)?, primed: true },
            _ => return Err(arity()),
        },
        "beta1" => match args.as_slice() {
            [d] => G::Beta1 { dim: uint(d)? },
            _ => return Err(arity()),
        },
        "E" => G::Suspension(one(exprs()?)?),
        "gamma" => G::GammaPush(one(exprs()?)?),
        "i" => G::IPush(one(exprs()?)?),
        "p" => G::PPush(one(exprs()?)?),
        "cmp" => {
            let xs = exprs()?;
            if xs.len() < 2 {
                return Err(arity());
            }
            xs.into_iter().rev().reduce(|r, l| G::Compose(Box::new(l), Box::new(r))).ok_or_else(arity)?
        }
        "wh" => {
            let [a, b]: [GeneratorExpr; 2] = exprs()?.try_into().map_err(|_| arity())?;
            G::Whitehead(Box::new(a), Box::new(b))
        }
        "add" => {
            let xs = exprs()?;
            if xs.len() < 2 {
                return Err(arity());
            }
            G::Sum(xs)
        }
        "sc" => match args.as_slice() {
            [Arg::Int(m), Arg::Expr(x)] => G::Scalar(*m, Box::new(x.clone())),
            _ => return Err(arity()),
        },
        other => {
            let atom = AtomName::from_token(other).ok_or_else(|| ExprError::UnknownSymbol(other.to_string()))?;
            match args.as_slice() {
                [d] => G::Atom { name: atom, dim: uint(d)? },
                _ => return Err(arity()),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [
            "cmp(nu'(3),E(eps(5)))",
            "cmp(eps(3),nu(11),nu(14))",
            "add(mu'(3),alpha(3,3),alpha(1,7,3))",
            "wh(iota(4),iota(4))",
            "gamma(cmp(add(nu(4),sc(-1,alpha(1,4))),alpha(1,7)))",
            "i(E(cmp(alpha(1,3),alpha'(3,6))))",
        ] {
            let e = GeneratorExpr::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn dimensions() {
        let e = GeneratorExpr::parse("cmp(nu'(3),eta(6),mu(7))").unwrap();
        assert_eq!(e.dims().unwrap(), Dims { target: Some(3), source: 16 });
        assert!(GeneratorExpr::parse("cmp(nu(4),eta(6))").is_err());
        let w = GeneratorExpr::parse("wh(iota(6),iota(6))").unwrap();
        assert_eq!(w.dims().unwrap().source, 11);
    }

    #[test]
    fn pretty_forms() {
        let e = GeneratorExpr::parse("cmp(E(nu'(3)),eta(7),eta(8))").unwrap();
        assert_eq!(e.pretty(), "(Eν′)η²_7");
        let e = GeneratorExpr::parse("sc(3,gamma(cmp(nu(4),nu(7))))").unwrap();
        assert_eq!(e.pretty(), "3γν²_4");
        let e = GeneratorExpr::parse("alpha(1,5,3)").unwrap();
        assert_eq!(e.pretty(), "α_{1,5}(3)");
    }

    #[test]
    fn odd_primes() {
        let e = GeneratorExpr::parse("cmp(alpha(1,3),alpha'(3,6))").unwrap();
        assert_eq!(e.odd_prime(), Some(3));
        assert_eq!(GeneratorExpr::parse("alpha(1,5,3)").unwrap().odd_prime(), Some(5));
        assert_eq!(GeneratorExpr::parse("cmp(eps(3),nu(11))").unwrap().odd_prime(), None);
    }
}
