use fga::{primary_part, Ambient, FgAbGroup, GeneratorExpr, Order, SubgroupSpec};
use whitehead::Status;

use crate::query::Answer;
use crate::Format;

fn clean(s: &str) -> String {
    s.replace(['|', '\n'], "/")
}

fn names(g: &FgAbGroup) -> Vec<Option<GeneratorExpr>> {
    g.summands().into_iter().map(|(_, x)| x).collect()
}

/// Generators of `spec`, in the prefix grammar.
fn spec_generators(amb: &Ambient, spec: &SubgroupSpec) -> Vec<String> {
    let g = amb.group();
    let show = |i: usize, x: &Option<GeneratorExpr>| x.as_ref().map(|e| e.to_string()).unwrap_or_else(|| format!("g{}", i + 1));
    match spec {
        SubgroupSpec::Zero => vec![],
        SubgroupSpec::Whole => names(&g).iter().enumerate().map(|(i, x)| show(i, x)).collect(),
        SubgroupSpec::Multiple(m) => g
            .summands()
            .iter()
            .enumerate()
            .filter(|(_, (d, _))| *d == 0 || m % d != 0)
            .map(|(i, (_, x))| match x {
                Some(e) => e.clone().scaled(*m as i64).to_string(),
                None => format!("{}*g{}", m, i + 1),
            })
            .collect(),
        SubgroupSpec::GeneratedBy(gens) => gens
            .iter()
            .map(|s| match &s.label {
                Some(l) => l.to_string(),
                None => format!("{:?}", s.coords),
            })
            .collect(),
        SubgroupSpec::DirectSum(parts) => parts
            .iter()
            .flat_map(|(tag, s)| match amb.parts().iter().find(|(t, _)| t == tag) {
                Some((_, pg)) => spec_generators(&Ambient::single(pg.clone()), s),
                None => vec![],
            })
            .collect(),
    }
}

fn group_of(a: &Answer, g: FgAbGroup) -> FgAbGroup {
    match a.query.p {
        Some(p) => primary_part(&g, p),
        None => g,
    }
}

fn typ(a: &Answer, amb: &Ambient, spec: &SubgroupSpec) -> Option<FgAbGroup> {
    amb.subgroup_type(spec).ok().map(|g| group_of(a, g))
}

/// `status|ambient|value|upper|generators|citation` on one line.
pub fn machine(a: &Answer) -> String {
    let r = &a.result;
    let Some(amb) = &r.ambient else {
        return format!("{}|-|-|-||{}", r.status, clean(&r.citation));
    };
    let sub = |s: &SubgroupSpec| match typ(a, amb, s) {
        Some(t) => format!("{}:{}", s.ascii(), t.ascii()),
        None => s.ascii(),
    };
    let value = if r.status == Status::UpperBound { "-".to_string() } else { sub(&r.value) };
    let upper = match &r.upper {
        Some(u) => sub(u),
        None => "-".into(),
    };
    let gens_of = if r.status == Status::UpperBound { r.upper.clone().unwrap_or(SubgroupSpec::Zero) } else { r.value.clone() };
    format!(
        "{}|{}|{}|{}|{}|{}",
        r.status,
        group_of(a, amb.group()).ascii(),
        value,
        upper,
        clean(&spec_generators(amb, &gens_of).join(";")),
        clean(&r.citation)
    )
}

fn pretty_gens(amb: &Ambient, spec: &SubgroupSpec) -> String {
    let g: Vec<String> = spec_generators(amb, spec)
        .iter()
        .map(|s| GeneratorExpr::parse(s).map(|e| e.pretty()).unwrap_or_else(|_| s.clone()))
        .collect();
    format!("{{{}}}", g.join(", "))
}

fn p_part(mut i: u64, p: u64) -> u64 {
    let mut out = 1;
    while i % p == 0 {
        i /= p;
        out *= p;
    }
    out
}

fn sub_line(a: &Answer, amb: &Ambient, label: &str, s: &SubgroupSpec) -> String {
    let t = typ(a, amb, s).map(|t| t.to_string()).unwrap_or_else(|| "?".into());
    let idx = match (amb.index(s), a.query.p) {
        (Ok(Order::Finite(i)), Some(p)) => format!(", index {}", p_part(i, p)),
        (Ok(i), _) => format!(", index {}", i),
        _ => String::new(),
    };
    let mut out = format!("  {:<10}{} ≅ {}{}\n", label, s, t, idx);
    if matches!(s, SubgroupSpec::Whole | SubgroupSpec::Multiple(_)) {
        out.push_str(&format!("  {:<10}{}\n", "", pretty_gens(amb, s)));
    }
    out
}

/// Human-readable answer, several lines.
pub fn text(a: &Answer) -> String {
    let r = &a.result;
    let mut out = format!("{}: {}\n", a.query.title(), r.status);
    if let Some(amb) = &r.ambient {
        let g = group_of(a, amb.group());
        out.push_str(&format!("  {:<10}{}\n", "ambient", g));
        match r.status {
            Status::Exact => out.push_str(&sub_line(a, amb, "value", &r.value)),
            Status::UpperBound => {}
            _ => out.push_str(&sub_line(a, amb, "lower", &r.value)),
        }
        if let Some(u) = &r.upper {
            out.push_str(&sub_line(a, amb, "upper", u));
        }
    }
    let label = if r.is_covered() { "citation" } else { "reason" };
    out.push_str(&format!("  {:<10}{}\n", label, r.citation));
    for n in &r.notes {
        out.push_str(&format!("  {:<10}{}\n", "note", n));
    }
    out
}

fn short(a: &Answer) -> String {
    let r = &a.result;
    let amb = r.ambient.as_ref().expect("covered");
    let t = |s: &SubgroupSpec| typ(a, amb, s).map(|t| t.to_string()).unwrap_or_else(|| "?".into());
    match r.status {
        Status::Exact => format!("{} ≅ {}", r.value, t(&r.value)),
        Status::LowerBound => format!("⊇ {} ≅ {}", r.value, t(&r.value)),
        Status::UpperBound => format!("⊆ {}", r.upper.as_ref().map(|u| format!("{} ≅ {}", u, t(u))).unwrap_or_default()),
        _ => {
            let u = r.upper.clone().unwrap_or(SubgroupSpec::Whole);
            format!("{} ≅ {} .. {} ≅ {}", r.value, t(&r.value), u, t(&u))
        }
    }
}

/// One row per answer, header first in text form.
pub fn dump(rows: &[Answer], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("{:<5} {:>3} {:>3}  {:<12} {:<16} {:<40} citation\n", "field", "n", "k", "status", "pi_k", "value"));
            for a in rows {
                let q = a.query;
                let amb = a.result.ambient.as_ref().expect("covered");
                out.push_str(&format!(
                    "{:<5} {:>3} {:>3}  {:<12} {:<16} {:<40} {}\n",
                    q.field.to_string(),
                    q.n,
                    q.k,
                    a.result.status.to_string(),
                    group_of(a, amb.group()).to_string(),
                    short(a),
                    a.result.citation
                ));
            }
        }
        Format::Machine => {
            for a in rows {
                out.push_str(&format!("{}|{}|{}|{}\n", a.query.field, a.query.n, a.query.k, machine(a)));
            }
        }
    }
    out
}
