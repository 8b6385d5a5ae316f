use clap::ValueEnum;
use fga::{Ambient, SubgroupSpec};
use projspace::{decompose_pi, Field};
use tables::{pi_sphere, Catalog};
use whitehead::GroupResult;

use crate::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    #[value(name = "pi")]
    Pi,
    #[value(name = "P")]
    P,
    #[value(name = "Pprime")]
    Pprime,
    #[value(name = "Pdoubleprime")]
    Pdoubleprime,
    #[value(name = "G")]
    G,
    #[value(name = "Gprime")]
    Gprime,
}

impl What {
    fn symbol(self) -> &'static str {
        match self {
            What::Pi => "pi",
            What::P => "P",
            What::Pprime => "P'",
            What::Pdoubleprime => "P''",
            What::G => "G",
            What::Gprime => "G'",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Query {
    pub what: What,
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub p: Option<u64>,
}

impl Query {
    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 || self.k == 0 {
            return Err("n and k must be positive".into());
        }
        if !self.field.admits(self.n) {
            return Err(format!("{}P^{} is not defined (K needs n = 2)", self.field, self.n));
        }
        Ok(())
    }

    pub fn title(&self) -> String {
        let space = if self.field == Field::K { "KP^2".to_string() } else { format!("{}P^{}", self.field, self.n) };
        match self.p {
            Some(p) => format!("{}_{}({}; {})", self.what.symbol(), self.k, space, p),
            None => format!("{}_{}({})", self.what.symbol(), self.k, space),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub query: Query,
    pub result: GroupResult,
}

/// π_k(FP^n) as the whole of itself.
fn pi(q: &Query, cat: &Catalog) -> GroupResult {
    if q.field == Field::K {
        return match cayley::pi_kp2(q.k, cat) {
            Ok(e) => {
                let r = match e.prime {
                    // only a p-component is recorded, the extension is left open
                    Some(p) => GroupResult::bounds(e.ambient(), SubgroupSpec::Whole, SubgroupSpec::Whole, e.citation.clone())
                        .with_note(format!("ambient is the {}-primary part only", p)),
                    None => GroupResult::exact(e.ambient(), SubgroupSpec::Whole, e.citation.clone()),
                };
                e.relations.iter().fold(r, |r, rel| r.with_note(rel.clone()))
            }
            Err(e) => GroupResult::not_covered(e.to_string()),
        };
    }
    match decompose_pi(q.field, q.n, q.k, cat) {
        Ok(d) => {
            let cite = if d.fiber_trivial() {
                format!("gamma_n iso; {}", d.sphere_part.citation)
            } else if d.sphere_trivial() {
                format!("i_F E iso; {}", d.fiber_part.citation)
            } else {
                format!("split fibration; {}; {}", d.sphere_part.citation, d.fiber_part.citation)
            };
            GroupResult::exact(d.ambient.clone(), SubgroupSpec::Whole, cite)
        }
        // RP^1 = S^1
        Err(_) if q.n == 1 => match pi_sphere(cat, q.field.d(), q.k) {
            Ok(e) => GroupResult::exact(Ambient::single(e.group), SubgroupSpec::Whole, format!("{}P^1 = S^{}; {}", q.field, q.field.d(), e.citation)),
            Err(e) => GroupResult::not_covered(e.to_string()),
        },
        Err(e) => GroupResult::not_covered(e.to_string()),
    }
}

/// Answer a validated query.
pub fn answer(q: &Query, cat: &Catalog) -> Answer {
    let (f, n, k) = (q.field, q.n, q.k);
    let k_only = |what: &str| GroupResult::not_covered(format!("{} is defined for RP^n, CP^n and HP^n only", what));
    let result = match (q.what, f) {
        (What::Pi, _) => pi(q, cat),
        (What::P, Field::K) => cayley::p_group_kp2(k, cat),
        (What::P, _) => projspace::p_group(f, n, k, cat),
        (What::Pprime, Field::K) => k_only("P'"),
        (What::Pprime, _) => projspace::p_prime(f, n, k, cat),
        (What::Pdoubleprime, Field::K) => k_only("P''"),
        (What::Pdoubleprime, _) => projspace::p_double_prime(f, n, k, cat),
        (What::G, _) => gottlieb::g_group(f, n, k, cat),
        (What::Gprime, Field::K) => k_only("G'"),
        (What::Gprime, _) => gottlieb::g_prime(f, n, k, cat),
    };
    Answer { query: *q, result }
}

fn default_n(f: Field) -> Range {
    match f {
        Field::R => Range { lo: 1, hi: 16 },
        Field::C => Range { lo: 1, hi: 12 },
        Field::H => Range { lo: 1, hi: 8 },
        Field::K => Range { lo: 2, hi: 2 },
    }
}

fn default_k(f: Field, n: u32) -> Range {
    let hi = match f {
        Field::K => 28,
        _ => (f.sphere_dim(n) + 24).min(64),
    };
    Range { lo: 1, hi }
}

/// Covered answers for every cell of the filter, ordered by (field, n, k).
pub fn covered_cells(what: What, fields: &[Field], n: Option<Range>, k: Option<Range>, p: Option<u64>, cat: &Catalog) -> Vec<Answer> {
    let mut fields = fields.to_vec();
    fields.sort();
    fields.dedup();
    let mut out = Vec::new();
    for f in fields {
        for n in n.unwrap_or_else(|| default_n(f)).iter() {
            if !f.admits(n) {
                continue;
            }
            for k in k.unwrap_or_else(|| default_k(f, n)).iter() {
                let q = Query { what, field: f, n, k, p };
                if q.validate().is_err() {
                    continue;
                }
                let a = answer(&q, cat);
                if a.result.is_covered() {
                    out.push(a);
                }
            }
        }
    }
    out
}
