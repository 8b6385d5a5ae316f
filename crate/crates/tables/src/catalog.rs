use std::collections::BTreeMap;
use std::path::Path;

use fga::{FgAbGroup, GeneratorExpr, SubGen, SubgroupSpec};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::{stable_range_check, SpaceId, TableEntry};

pub const SCHEMA_VERSION: u32 = 1;

static BUNDLED: &str = include_str!("../../../data/catalog.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("cannot read catalog: {0}")]
    Io(String),
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("duplicate record for {0} in degree {1}")]
    DuplicateKey(String, u32),
    #[error("unsupported schema version {0:?}")]
    SchemaMismatch(String),
}

/// A stored value of P_k(S^n), described inside the catalog's π_k(S^n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereCenter {
    pub n: u32,
    pub k: u32,
    pub spec: SubgroupSpec,
    pub citation: String,
    pub secondary: bool,
    pub derived: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct StableStem {
    rank: usize,
    torsion: Vec<u64>,
    templates: Vec<String>,
    citation: String,
    secondary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<(SpaceId, u32, u64), TableEntry>,
    stable: BTreeMap<u32, StableStem>,
    centers: BTreeMap<(u32, u32), SphereCenter>,
    schema_version: u32,
    checksum: String,
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let text = std::fs::read_to_string(path.as_ref()).map_err(|e| CatalogError::Io(e.to_string()))?;
    Catalog::parse(&text)
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn bundled() -> Catalog {
        Catalog::parse(BUNDLED).expect("bundled catalog is valid")
    }

    pub fn bundled_text() -> &'static str {
        BUNDLED
    }

    pub fn empty() -> Catalog {
        Catalog::parse("schema|1\n").unwrap()
    }

    pub fn schema_version(&self) -> u32 {
        self.schema_version
    }

    /// Hex SHA-256 of the source text.
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn len(&self) -> usize {
        self.entries.len() + self.stable.len() + self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, space: SpaceId, k: u32) -> Option<&TableEntry> {
        self.entries.get(&(space, k, 0))
    }

    pub fn get_primary(&self, space: SpaceId, k: u32, p: u64) -> Option<&TableEntry> {
        self.entries.get(&(space, k, p))
    }

    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.entries.values()
    }

    pub fn centers(&self) -> impl Iterator<Item = &SphereCenter> {
        self.centers.values()
    }

    pub fn center(&self, n: u32, k: u32) -> Option<&SphereCenter> {
        self.centers.get(&(n, k))
    }

    pub(crate) fn stable_stems(&self) -> Vec<(u32, TableEntry)> {
        self.stable.keys().filter_map(|&s| Some((s, self.stable_entry(s + 2, 2 * s + 2)?))).collect()
    }

    /// Highest stem with a stable record.
    pub fn max_stable_stem(&self) -> Option<u32> {
        self.stable.keys().next_back().copied()
    }

    /// π_k(S^n) from a stable-stem record, when n ≥ stem + 2.
    pub(crate) fn stable_entry(&self, n: u32, k: u32) -> Option<TableEntry> {
        let stem = k.checked_sub(n)?;
        if n < stem + 2 {
            return None;
        }
        let rec = self.stable.get(&stem)?;
        let group = build_group(rec.rank, &rec.torsion, &rec.templates, n).ok()?;
        Some(TableEntry {
            space: SpaceId::Sphere(n),
            k,
            group,
            stable: stable_range_check(n, k),
            citation: rec.citation.clone(),
            secondary: rec.secondary,
            prime: None,
        })
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let checksum = format!("{:x}", Sha256::digest(text.as_bytes()));
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        let (_, header) = lines.next().ok_or_else(|| CatalogError::SchemaMismatch(String::new()))?;
        let version = match header.trim().split_once('|') {
            Some(("schema", v)) => v.trim().to_string(),
            _ => return Err(CatalogError::SchemaMismatch(header.trim().to_string())),
        };
        if version != SCHEMA_VERSION.to_string() {
            return Err(CatalogError::SchemaMismatch(version));
        }

        let mut cat = Catalog {
            entries: BTreeMap::new(),
            stable: BTreeMap::new(),
            centers: BTreeMap::new(),
            schema_version: SCHEMA_VERSION,
            checksum,
        };
        let mut pending_centers = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            let err = |msg: String| CatalogError::ParseError { line: lineno, msg };
            let f: Vec<&str> = line.split('|').map(str::trim).collect();
            if f.len() != 7 && f.len() != 8 {
                return Err(err(format!("expected 7 or 8 fields, found {}", f.len())));
            }
            let (kind, space, k, rank, torsion, gens, citation) = (f[0], f[1], f[2], f[3], f[4], f[5], f[6]);
            let flags: Vec<&str> = f.get(7).map(|s| s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect()).unwrap_or_default();
            for fl in &flags {
                if !matches!(*fl, "secondary-source" | "derived") {
                    return Err(err(format!("unknown flag {:?}", fl)));
                }
            }
            if citation.is_empty() {
                return Err(err("empty citation".into()));
            }
            let k: u32 = k.parse().map_err(|_| err(format!("bad degree {:?}", k)))?;
            let secondary = flags.contains(&"secondary-source");
            let templates: Vec<String> = split_list(gens).into_iter().map(String::from).collect();

            match kind {
                "stable" => {
                    if space != "S" {
                        return Err(err("stable records use space S".into()));
                    }
                    let rank = parse_rank(rank).map_err(err)?;
                    let torsion = parse_torsion(torsion).map_err(err)?;
                    // validate at the smallest admissible n
                    build_group(rank, &torsion, &templates, k + 2).map_err(err)?;
                    let rec = StableStem { rank, torsion, templates, citation: citation.to_string(), secondary };
                    if cat.stable.insert(k, rec).is_some() {
                        return Err(CatalogError::DuplicateKey("S".into(), k));
                    }
                }
                "P" => {
                    let sp: SpaceId = space.parse().map_err(err)?;
                    let SpaceId::Sphere(n) = sp else {
                        return Err(err("P records are for spheres".into()));
                    };
                    let spec = parse_spec(gens, n, k).map_err(err)?;
                    let c = SphereCenter {
                        n,
                        k,
                        spec,
                        citation: citation.to_string(),
                        secondary,
                        derived: flags.contains(&"derived"),
                    };
                    if cat.centers.insert((n, k), c).is_some() {
                        return Err(CatalogError::DuplicateKey(format!("P({})", space), k));
                    }
                    pending_centers.push(((n, k), lineno));
                }
                _ => {
                    let prime = match kind.strip_prefix("pi") {
                        Some("") => 0,
                        Some(p) => match p.parse::<u64>() {
                            Ok(p) if fga::is_prime(p) => p,
                            _ => return Err(err(format!("unknown record kind {:?}", kind))),
                        },
                        None => return Err(err(format!("unknown record kind {:?}", kind))),
                    };
                    let sp: SpaceId = space.parse().map_err(err)?;
                    let rank = parse_rank(rank).map_err(err)?;
                    let torsion = parse_torsion(torsion).map_err(err)?;
                    let group = build_group(rank, &torsion, &templates, 0).map_err(err)?;
                    if prime != 0 && (rank != 0 || torsion.iter().any(|&d| !is_power_of(d, prime))) {
                        return Err(err(format!("{}-component record has other torsion", prime)));
                    }
                    check_dims(&group, sp, k).map_err(err)?;
                    let stable = match sp {
                        SpaceId::Sphere(n) => stable_range_check(n, k),
                        _ => false,
                    };
                    let entry = TableEntry {
                        space: sp,
                        k,
                        group,
                        stable,
                        citation: citation.to_string(),
                        secondary,
                        prime: (prime != 0).then_some(prime),
                    };
                    if cat.entries.insert((sp, k, prime), entry).is_some() {
                        return Err(CatalogError::DuplicateKey(sp.to_string(), k));
                    }
                }
            }
        }

        // center records are checked against the groups they live in
        for (key, lineno) in pending_centers {
            let c = &cat.centers[&key];
            let err = |msg: String| CatalogError::ParseError { line: lineno, msg };
            let g = crate::pi_sphere(&cat, c.n, c.k).map_err(|e| err(e.to_string()))?;
            fga::Ambient::single(g.group).resolve(&c.spec).map_err(|e| err(e.to_string()))?;
        }
        Ok(cat)
    }
}

fn split_list(s: &str) -> Vec<&str> {
    // `;` at bracket depth 0 only
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ';' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

fn parse_rank(s: &str) -> Result<usize, String> {
    s.parse().map_err(|_| format!("bad rank {:?}", s))
}

fn parse_torsion(s: &str) -> Result<Vec<u64>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(|x| x.trim().parse::<u64>().map_err(|_| format!("bad torsion entry {:?}", x))).collect()
}

fn is_power_of(mut d: u64, p: u64) -> bool {
    while d % p == 0 {
        d /= p;
    }
    d == 1
}

/// Replace `@` by n and `@+c` by n + c.
fn instantiate(template: &str, n: u32) -> String {
    let mut out = String::new();
    let mut chars = template.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '@' {
            out.push(c);
            continue;
        }
        let mut off = 0u32;
        if chars.peek() == Some(&'+') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            off = digits.parse().unwrap_or(0);
        }
        out.push_str(&(n + off).to_string());
    }
    out
}

fn build_group(rank: usize, torsion: &[u64], templates: &[String], n: u32) -> Result<FgAbGroup, String> {
    let g = FgAbGroup::new(rank, torsion.to_vec()).map_err(|e| e.to_string())?;
    if templates.is_empty() {
        return Ok(g);
    }
    let gens = templates
        .iter()
        .map(|t| GeneratorExpr::parse(&instantiate(t, n)).map_err(|e| format!("{}: {}", t, e)))
        .collect::<Result<Vec<_>, _>>()?;
    g.with_generators(gens).map_err(|e| e.to_string())
}

fn check_dims(g: &FgAbGroup, space: SpaceId, k: u32) -> Result<(), String> {
    let Some(gens) = g.generators() else { return Ok(()) };
    for x in gens {
        let d = x.dims().map_err(|e| e.to_string())?;
        let target_ok = match space {
            SpaceId::Sphere(n) => d.target == Some(n),
            SpaceId::Kp2 => d.target.is_none(),
            _ => true,
        };
        if d.source != k || !target_ok {
            return Err(format!("generator {} does not live in pi_{}({})", x, k, space));
        }
    }
    Ok(())
}

fn parse_spec(s: &str, n: u32, k: u32) -> Result<SubgroupSpec, String> {
    match s {
        "0" => return Ok(SubgroupSpec::Zero),
        "all" => return Ok(SubgroupSpec::Whole),
        _ => {}
    }
    if let Some(m) = s.strip_prefix("mult(").and_then(|r| r.strip_suffix(')')) {
        let m: u64 = m.parse().map_err(|_| format!("bad multiplier {:?}", m))?;
        if m == 0 {
            return Err("multiplier 0".into());
        }
        return Ok(SubgroupSpec::multiple(m));
    }
    let mut gens = Vec::new();
    for item in split_list(s) {
        let rest = item.strip_prefix('[').ok_or_else(|| format!("bad subgroup generator {:?}", item))?;
        let (coords, label) = rest.split_once(']').ok_or_else(|| format!("bad subgroup generator {:?}", item))?;
        let coords = coords
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|_| format!("bad coordinate {:?}", c)))
            .collect::<Result<Vec<_>, _>>()?;
        let label = GeneratorExpr::parse(label).map_err(|e| format!("{}: {}", label, e))?;
        let d = label.dims().map_err(|e| e.to_string())?;
        if d.source != k || d.target != Some(n) {
            return Err(format!("generator {} does not live in pi_{}(S{})", label, k, n));
        }
        gens.push(SubGen::new(coords, label));
    }
    Ok(SubgroupSpec::GeneratedBy(gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates() {
        assert_eq!(instantiate("cmp(eta(@),eps(@+1))", 9), "cmp(eta(9),eps(10))");
        assert_eq!(instantiate("nu(@)", 12), "nu(12)");
    }

    #[test]
    fn list_splitting_respects_brackets() {
        assert_eq!(split_list("[1,0]sc(2,nu(4));[0,6]E(omega(3))"), vec!["[1,0]sc(2,nu(4))", "[0,6]E(omega(3))"]);
        assert!(split_list("").is_empty());
    }

    #[test]
    fn bundled_is_deterministic() {
        let a = Catalog::bundled();
        let b = Catalog::parse(BUNDLED).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.checksum().len(), 64);
    }

    #[test]
    fn center_records_resolve() {
        let cat = Catalog::bundled();
        let c = cat.center(4, 7).unwrap();
        let amb = fga::Ambient::single(crate::pi_sphere(&cat, 4, 7).unwrap().group);
        assert_eq!(amb.index(&c.spec).unwrap(), fga::Order::Finite(12));
    }
}
