//! P_k(S^n) = G_k(S^n).

use fga::{Ambient, FgAbGroup, GeneratorExpr, Order, SubGen, SubgroupSpec};
use tables::{pi_sphere, Catalog};

use crate::orders::whitehead_fact;
use crate::result::GroupResult;

fn push_cite(cites: &mut Vec<String>, c: &str) {
    if !cites.iter().any(|x| x == c) {
        cites.push(c.to_string());
    }
}

/// P_k(S^n), which equals G_k(S^n).
pub fn p_group_sphere(cat: &Catalog, n: u32, k: u32) -> GroupResult {
    let entry = match pi_sphere(cat, n, k) {
        Ok(e) => e,
        Err(e) => return GroupResult::not_covered(e.to_string()),
    };
    let group = entry.group.clone();
    let amb = Ambient::single(group.clone());
    if let Some(c) = cat.center(n, k) {
        return GroupResult::exact(amb, c.spec.clone(), c.citation.clone());
    }
    if group.is_trivial() {
        return GroupResult::exact(amb, SubgroupSpec::Zero, entry.citation);
    }
    if [1, 3, 7].contains(&n) {
        return GroupResult::exact(amb, SubgroupSpec::Whole, "(W1): S^n is an H-space for n = 1, 3, 7");
    }
    if n == 2 && k >= 3 {
        // π_k(S^2) = η_2∘π_k(S^3) and [ι_2, η_2] = 0
        return GroupResult::exact(amb, SubgroupSpec::Whole, "(W2), (hw)");
    }
    let s = k - n;
    if (8..=10).contains(&s) && n >= 16 && n % 8 == 0 {
        return GroupResult::exact(amb, SubgroupSpec::Zero, "(j2)-(j5), Prop. 8910(2)");
    }
    if (8..=10).contains(&s) && n >= 11 && n % 4 == 3 {
        return GroupResult::exact(amb, SubgroupSpec::Whole, "(j1), Prop. 8910(1), Prop. Gotc");
    }
    match from_generators(n, &group) {
        Some((spec, cites)) => GroupResult::exact(amb, spec, cites.join("; ")),
        None => GroupResult::not_covered(format!("P_{}(S^{}) not covered", k, n)),
    }
}

/// P = Ker [ι_n, −] when at most one cyclic generator has a nonzero bracket.
fn from_generators(n: u32, group: &FgAbGroup) -> Option<(SubgroupSpec, Vec<String>)> {
    let summands = group.summands();
    let mut cites = Vec::new();
    let mut orders = Vec::new();
    for (_, g) in &summands {
        let f = whitehead_fact(n, g.as_ref()?).ok()?;
        push_cite(&mut cites, &f.citation);
        orders.push(f.order);
    }
    let hot: Vec<usize> = (0..orders.len()).filter(|&i| orders[i] != Order::Finite(1)).collect();
    match hot.as_slice() {
        [] => Some((SubgroupSpec::Whole, cites)),
        [j] if summands.len() == 1 => {
            let spec = match orders[*j] {
                Order::Infinite => SubgroupSpec::Zero,
                Order::Finite(w) => SubgroupSpec::multiple(w).normalize(group),
            };
            Some((spec, cites))
        }
        [j] => {
            let len = summands.len();
            let mut gens = Vec::new();
            for (i, (_, g)) in summands.iter().enumerate() {
                let mut coords = vec![0i64; len];
                let label: GeneratorExpr = g.clone()?;
                if i == *j {
                    let Order::Finite(w) = orders[i] else { continue };
                    coords[i] = w as i64;
                    gens.push(SubGen::new(coords, label.scaled(w as i64)));
                } else {
                    coords[i] = 1;
                    gens.push(SubGen::new(coords, label));
                }
            }
            let spec = if gens.is_empty() { SubgroupSpec::Zero } else { SubgroupSpec::GeneratedBy(gens) };
            Some((spec, cites))
        }
        _ => None,
    }
}
