//! Polynomial classes and 𝒫-uniqueness over catalogs whose lines are
//! pairwise non-isomorphic. Since `p(G;n) = 1`, the degree is the order, so
//! collisions only happen within one order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::CatalogEntry;
use crate::counting::{pd_polynomial, Method};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Family, Graph};
use crate::polynomial::IntPolynomial;

pub fn group_by_polynomial(entries: &[CatalogEntry]) -> BTreeMap<IntPolynomial, Vec<String>> {
    let mut groups: BTreeMap<IntPolynomial, Vec<String>> = BTreeMap::new();
    for e in entries {
        groups
            .entry(e.poly.clone())
            .or_default()
            .push(e.key.clone());
    }
    groups
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyClass {
    pub n: usize,
    pub poly: IntPolynomial,
    pub keys: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub complete: bool,
    /// `"unique"` when the catalog is asserted complete, otherwise
    /// `"unique-within-file"`.
    pub scope: &'static str,
    pub orders: Vec<usize>,
    pub unique: Vec<String>,
    /// Classes with more than one member.
    pub collisions: Vec<PolyClass>,
}

/// A key is reported unique iff no other entry shares its polynomial.
pub fn uniqueness_report(entries: &[CatalogEntry], complete: bool) -> UniquenessReport {
    let groups = group_by_polynomial(entries);
    let mut unique = Vec::new();
    let mut collisions = Vec::new();
    for (poly, keys) in groups {
        if keys.len() == 1 {
            unique.extend(keys);
        } else {
            let n = poly.degree().unwrap_or(0);
            collisions.push(PolyClass { n, poly, keys });
        }
    }
    let orders: BTreeSet<usize> = entries.iter().map(|e| e.n).collect();
    UniquenessReport {
        complete,
        scope: if complete {
            "unique"
        } else {
            "unique-within-file"
        },
        orders: orders.into_iter().collect(),
        unique,
        collisions,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NonuniqueFamily {
    pub name: String,
    /// `(label, graph6)` for each member.
    pub members: Vec<(String, String)>,
    pub polynomial: IntPolynomial,
    /// Every member's polynomial, computed by enumeration, equals
    /// `polynomial`.
    pub verified: bool,
}

fn family_of(name: &str, graphs: Vec<(String, Graph)>) -> Result<NonuniqueFamily> {
    let polys = graphs
        .iter()
        .map(|(_, g)| pd_polynomial(g, Method::Auto))
        .collect::<Result<Vec<_>>>()?;
    let verified = polys.windows(2).all(|w| w[0] == w[1]);
    Ok(NonuniqueFamily {
        name: name.into(),
        members: graphs
            .iter()
            .map(|(label, g)| (label.clone(), to_graph6(g)))
            .collect(),
        polynomial: polys[0].clone(),
        verified,
    })
}

/// Sets of pairwise non-isomorphic graphs of order `n` sharing one
/// polynomial: `C_n` with each of its `⌊n/2⌋-1` chord types, two cycles with
/// and without a bridging edge (`n ≥ 6`), and `{P_n, C_n, K_n}`.
pub fn nonuniqueness_families(n: usize) -> Result<Vec<NonuniqueFamily>> {
    if n < 4 {
        return Err(Error::Domain(format!("families need n >= 4, got {n}")));
    }
    let cycle = Family::Cycle(n).build()?;
    let mut out = Vec::new();

    let mut chords = vec![(format!("C{n}"), cycle.clone())];
    for k in 2..=n / 2 {
        chords.push((format!("C{n}+0-{k}"), cycle.with_edge(0, k)?));
    }
    out.push(family_of("cycle_chords", chords)?);

    if n >= 6 {
        let a = n / 2;
        let pair = Family::Cycle(a)
            .build()?
            .disjoint_union(&Family::Cycle(n - a).build()?)?;
        let bridged = pair.with_edge(0, a)?;
        out.push(family_of(
            "bridged_cycles",
            vec![("G".into(), bridged), ("G-e".into(), pair)],
        )?);
    }

    out.push(family_of(
        "path_cycle_complete",
        vec![
            (format!("P{n}"), Family::Path(n).build()?),
            (format!("C{n}"), cycle),
            (format!("K{n}"), Family::Complete(n).build()?),
        ],
    )?);
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExtensionReport {
    /// Unique graphs whose `G ∪ K₁` order is present.
    pub k1_checked: usize,
    pub k1_failures: Vec<String>,
    pub k2_checked: usize,
    pub k2_failures: Vec<String>,
    /// Graphs whose `G ∪ K₃` order is present.
    pub k3_checked: usize,
    /// Graphs for which `G ∪ K₃` has no partner (it should share its class
    /// with `G ∪ P₃`).
    pub k3_failures: Vec<String>,
}

impl ExtensionReport {
    pub fn holds(&self) -> bool {
        self.k1_failures.is_empty() && self.k2_failures.is_empty() && self.k3_failures.is_empty()
    }
}

/// For each 𝒫-unique `G`: `G ∪ K₁` and `G ∪ K₂` must be unique as well,
/// read off from the class sizes of `x·P` and `(x²+2x)·P`. For every `G`,
/// the class of `(x³+3x²+3x)·P` must contain at least two graphs. Checks
/// whose target order is beyond the catalog are skipped; a gap between the
/// smallest and largest order is an error.
pub fn k1_k2_uniqueness_check(entries: &[CatalogEntry]) -> Result<ExtensionReport> {
    let orders: BTreeSet<usize> = entries.iter().map(|e| e.n).collect();
    if let (Some(&lo), Some(&hi)) = (orders.first(), orders.last()) {
        if let Some(missing) = (lo..=hi).find(|n| !orders.contains(n)) {
            return Err(Error::IncompleteCatalog(missing));
        }
    }
    let mut sizes: HashMap<&IntPolynomial, usize> = HashMap::new();
    for e in entries {
        *sizes.entry(&e.poly).or_default() += 1;
    }
    let size_of = |p: &IntPolynomial| sizes.get(p).copied().unwrap_or(0);
    let k1 = IntPolynomial::from_i64s(&[0, 1]);
    let k2 = IntPolynomial::from_i64s(&[0, 2, 1]);
    let k3 = IntPolynomial::from_i64s(&[0, 3, 3, 1]);
    let mut report = ExtensionReport::default();
    for e in entries {
        let unique = size_of(&e.poly) == 1;
        if unique && orders.contains(&(e.n + 1)) {
            report.k1_checked += 1;
            if size_of(&e.poly.mul(&k1)) != 1 {
                report.k1_failures.push(e.key.clone());
            }
        }
        if unique && orders.contains(&(e.n + 2)) {
            report.k2_checked += 1;
            if size_of(&e.poly.mul(&k2)) != 1 {
                report.k2_failures.push(e.key.clone());
            }
        }
        if orders.contains(&(e.n + 3)) {
            report.k3_checked += 1;
            if size_of(&e.poly.mul(&k3)) < 2 {
                report.k3_failures.push(e.key.clone());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ingest_text, IngestOptions};

    // All graphs on 2 and 3 vertices, one per isomorphism class.
    const SMALL: &str = "A?\nA_\nB?\nBO\nBW\nBw\n";

    #[test]
    fn order_three_star_collides_with_triangle() {
        let out = ingest_text(SMALL, &IngestOptions::default()).unwrap();
        let report = uniqueness_report(&out.entries, true);
        assert_eq!(report.scope, "unique");
        let k3 = IntPolynomial::from_i64s(&[0, 3, 3, 1]);
        let class = report.collisions.iter().find(|c| c.poly == k3).unwrap();
        assert_eq!(class.keys, vec!["BW".to_string(), "Bw".to_string()]);
        assert!(report.unique.contains(&"A?".to_string()));
        assert_eq!(
            uniqueness_report(&out.entries, false).scope,
            "unique-within-file"
        );
    }

    #[test]
    fn families() {
        let fams = nonuniqueness_families(6).unwrap();
        assert_eq!(fams.len(), 3);
        assert!(fams.iter().all(|f| f.verified));
        assert_eq!(fams[0].members.len(), 3);
        assert_eq!(fams[1].members.len(), 2);
        assert_eq!(fams[2].polynomial, IntPolynomial::binomial_minus_one(6));
        let four = nonuniqueness_families(4).unwrap();
        assert_eq!(four.len(), 2);
        assert_eq!(
            four[1].polynomial,
            IntPolynomial::from_i64s(&[0, 4, 6, 4, 1])
        );
        assert!(nonuniqueness_families(3).is_err());
    }

    #[test]
    fn extensions_small() {
        let out = ingest_text(&format!("@\n{SMALL}"), &IngestOptions::default()).unwrap();
        let r = k1_k2_uniqueness_check(&out.entries).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.k1_checked > 0 && r.k2_checked > 0);
        let gap: Vec<_> = out.entries.iter().filter(|e| e.n != 2).cloned().collect();
        assert!(matches!(
            k1_k2_uniqueness_check(&gap),
            Err(Error::IncompleteCatalog(2))
        ));
    }
}
