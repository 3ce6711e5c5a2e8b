//! Forts: nonempty sets `F` such that no vertex outside `F` has exactly one
//! neighbour in `F`. A set power dominates iff it meets `N[F]` for every
//! fort `F`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::closed_neighborhood_bits;
use crate::counting;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on the order for exhaustive fort enumeration.
pub const FORT_CAP: usize = 20;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::TooLarge {
            n: g.order(),
            cap,
            what: "fort enumeration",
        })
    } else {
        Ok(())
    }
}

#[inline]
fn is_fort_bits(adj: &[u64], f: u64) -> bool {
    if f == 0 {
        return false;
    }
    let mut outside = !f & VertexSet::full(adj.len()).bits();
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if (adj[v] & f).count_ones() == 1 {
            return false;
        }
    }
    true
}

pub fn is_fort(g: &Graph, f: VertexSet) -> bool {
    is_fort_bits(g.rows(), f.bits())
}

pub fn enumerate_forts(g: &Graph, minimal_only: bool) -> Result<Vec<VertexSet>> {
    enumerate_forts_capped(g, minimal_only, FORT_CAP)
}

/// All forts (or the inclusion-minimal ones) by scanning every nonempty
/// subset, ordered by the subset's bit pattern.
pub fn enumerate_forts_capped(g: &Graph, minimal_only: bool, cap: usize) -> Result<Vec<VertexSet>> {
    check_cap(g, cap)?;
    let n = g.order();
    let top = VertexSet::full(n).bits();
    let mut forts: Vec<u64> = (1..=top).filter(|&f| is_fort_bits(g.rows(), f)).collect();
    if minimal_only {
        let mut by_size = forts.clone();
        by_size.sort_by_key(|f| f.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for f in by_size {
            if !minimal.iter().any(|&m| m & !f == 0) {
                minimal.push(f);
            }
        }
        minimal.sort_unstable();
        forts = minimal;
    }
    Ok(forts
        .into_iter()
        .map(|f| VertexSet::from_bits(n, f))
        .collect())
}

pub fn fort_neighborhood_family(g: &Graph) -> Result<BTreeSet<VertexSet>> {
    fort_neighborhood_family_capped(g, FORT_CAP)
}

/// 𝒩(G) = { N[F] : F a fort }, built from all forts and deduplicated.
/// Minimal forts would give the same covering constraints, since
/// `F' ⊆ F` implies `N[F'] ⊆ N[F]`, but the full family is what the bound
/// in [`check_ip_bound`] counts.
pub fn fort_neighborhood_family_capped(g: &Graph, cap: usize) -> Result<BTreeSet<VertexSet>> {
    Ok(enumerate_forts_capped(g, false, cap)?
        .into_iter()
        .map(|f| VertexSet::from_bits(g.order(), closed_neighborhood_bits(g.rows(), f.bits())))
        .collect())
}

pub fn is_pds_via_forts(g: &Graph, s: VertexSet) -> Result<bool> {
    is_pds_via_forts_capped(g, s, FORT_CAP)
}

/// `s` power dominates iff it meets every member of 𝒩(G).
pub fn is_pds_via_forts_capped(g: &Graph, s: VertexSet, cap: usize) -> Result<bool> {
    Ok(fort_neighborhood_family_capped(g, cap)?
        .iter()
        .all(|nf| nf.intersects(&s)))
}

/// Both sides of `|𝒩(G)| ≤ 2^n − 𝒫(G;1)`, computed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IpBound {
    pub lhs: usize,
    #[serde(serialize_with = "crate::polynomial::serialize_bigint")]
    pub rhs: BigInt,
    pub holds: bool,
}

pub fn check_ip_bound(g: &Graph) -> Result<IpBound> {
    check_ip_bound_capped(g, FORT_CAP)
}

pub fn check_ip_bound_capped(g: &Graph, cap: usize) -> Result<IpBound> {
    let lhs = fort_neighborhood_family_capped(g, cap)?.len();
    let total = BigInt::from(1u8) << g.order();
    let rhs = total - counting::pd_set_count(g)?;
    let holds = BigInt::from(lhs) <= rhs;
    Ok(IpBound { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::propagation::is_power_dominating;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    // S4 labelling: leaves 0, 1, 2 and hub 3.
    #[test]
    fn star_forts() {
        let s4 = Family::Star(4).build().unwrap();
        assert!(is_fort(&s4, set(4, &[0, 1])));
        assert!(!is_fort(&s4, set(4, &[3, 0])));
        assert!(is_fort(&s4, VertexSet::full(4)));
        assert!(!is_fort(&s4, VertexSet::empty(4)));

        let forts = enumerate_forts(&s4, false).unwrap();
        let expected = vec![
            set(4, &[0, 1]),
            set(4, &[0, 2]),
            set(4, &[1, 2]),
            set(4, &[0, 1, 2]),
            VertexSet::full(4),
        ];
        let mut sorted = forts.clone();
        sorted.sort();
        let mut exp_sorted = expected.clone();
        exp_sorted.sort();
        assert_eq!(sorted, exp_sorted);

        let minimal = enumerate_forts(&s4, true).unwrap();
        assert_eq!(minimal.len(), 3);

        let family = fort_neighborhood_family(&s4).unwrap();
        assert_eq!(family.len(), 4);
        assert!(family.contains(&set(4, &[0, 1, 3])));
        assert!(family.contains(&VertexSet::full(4)));
    }

    #[test]
    fn fort_cover_agrees_on_star() {
        let s4 = Family::Star(4).build().unwrap();
        assert!(is_pds_via_forts(&s4, set(4, &[3])).unwrap());
        assert!(!is_pds_via_forts(&s4, set(4, &[0])).unwrap());
        assert!(!is_power_dominating(&s4, set(4, &[0])));
        let k3 = Family::Complete(3).build().unwrap();
        assert!(is_pds_via_forts(&k3, set(3, &[0])).unwrap());
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::empty(1);
        assert_eq!(
            enumerate_forts(&k1, false).unwrap(),
            vec![VertexSet::full(1)]
        );
        assert_eq!(fort_neighborhood_family(&k1).unwrap().len(), 1);
    }

    #[test]
    fn ip_bound_examples() {
        let s4 = Family::Star(4).build().unwrap();
        let b = check_ip_bound(&s4).unwrap();
        assert_eq!((b.lhs, b.rhs.clone(), b.holds), (4, BigInt::from(4), true));
        let b = check_ip_bound(&Graph::empty(1)).unwrap();
        assert_eq!((b.lhs, b.rhs.clone(), b.holds), (1, BigInt::from(1), true));
        let b = check_ip_bound(&Family::Complete(2).build().unwrap()).unwrap();
        // P(K2;1) = 3, so the bound is tight here too.
        assert_eq!((b.lhs, b.rhs.clone(), b.holds), (1, BigInt::from(1), true));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(21);
        assert!(matches!(
            enumerate_forts(&big, false),
            Err(Error::TooLarge { .. })
        ));
        assert!(enumerate_forts_capped(&Graph::empty(3), false, 2).is_err());
    }
}
