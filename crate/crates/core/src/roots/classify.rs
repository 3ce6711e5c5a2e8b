use serde::Serialize;

use super::family_f::{recognize_f, FDecomposition};
use super::rouche::rouche_verdicts;
use super::{find_roots_partial, RootReport};
use crate::counting::{pd_polynomial, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph classes with exactly one, two and three distinct roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootClass {
    #[serde(rename = "empty_graph")]
    EmptyGraph,
    #[serde(rename = "p2_union")]
    P2Union,
    #[serde(rename = "F_union")]
    FUnion,
    #[serde(rename = "other")]
    Other,
}

impl RootClass {
    /// Distinct-root count the class forces, if any.
    pub fn expected_distinct(self) -> Option<usize> {
        match self {
            RootClass::EmptyGraph => Some(1),
            RootClass::P2Union => Some(2),
            RootClass::FUnion => Some(3),
            RootClass::Other => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RootClass::EmptyGraph => "empty_graph",
            RootClass::P2Union => "p2_union",
            RootClass::FUnion => "F_union",
            RootClass::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: RootClass,
    /// One decomposition per 𝓕 component, in the graph's own labels.
    pub witness: Vec<FDecomposition>,
}

/// Structural class: no edges; only K₂ and K₁ components (at least one
/// K₂); only K₁ and 𝓕 components (at least one in 𝓕); or other.
pub fn classify_by_distinct_roots(g: &Graph) -> Classification {
    let none = |class| Classification {
        class,
        witness: Vec::new(),
    };
    if g.edge_count() == 0 {
        return none(RootClass::EmptyGraph);
    }
    let components: Vec<_> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    if components.iter().all(|c| c.len() == 2) {
        return none(RootClass::P2Union);
    }
    let mut witness = Vec::new();
    for c in &components {
        let labels = c.to_vec();
        match recognize_f(&g.induced(*c)) {
            Some(d) => witness.push(d.relabel(g.order(), &labels)),
            None => return none(RootClass::Other),
        }
    }
    Classification {
        class: RootClass::FUnion,
        witness,
    }
}

/// Polynomial, roots, structural class and Rouché checks for one graph.
pub fn analyze_graph(g: &Graph, tol: f64) -> Result<RootReport> {
    let p = pd_polynomial(g, Method::Auto)?;
    let mut report = find_roots_partial(&p, tol)?;
    report.classification = Some(classify_by_distinct_roots(g).class);
    report.rouche_verdicts = rouche_verdicts(g, &p, &report)?;
    if !report.converged {
        return Err(Error::NumericFailure {
            iterations: report.iterations,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::roots::DEFAULT_TOL;

    fn union(parts: &[Graph]) -> Graph {
        parts[1..]
            .iter()
            .fold(parts[0].clone(), |acc, g| acc.disjoint_union(g).unwrap())
    }

    #[test]
    fn classes() {
        let k2 = Family::Complete(2).build().unwrap();
        let cases = [
            (Graph::empty(4), RootClass::EmptyGraph, 1),
            (
                union(&[k2.clone(), k2.clone(), Graph::empty(1)]),
                RootClass::P2Union,
                2,
            ),
            (
                union(&[
                    Family::Path(3).build().unwrap(),
                    Family::Complete(3).build().unwrap(),
                ]),
                RootClass::FUnion,
                3,
            ),
            (Family::Complete(4).build().unwrap(), RootClass::Other, 4),
        ];
        for (g, class, distinct) in cases {
            assert_eq!(classify_by_distinct_roots(&g).class, class);
            let r = analyze_graph(&g, DEFAULT_TOL).unwrap();
            assert_eq!(r.distinct_count, distinct);
            assert_eq!(r.classification, Some(class));
        }
    }

    #[test]
    fn witness_uses_graph_labels() {
        let g = Graph::empty(1)
            .disjoint_union(&Family::Path(3).build().unwrap())
            .unwrap();
        let c = classify_by_distinct_roots(&g);
        assert_eq!(c.class, RootClass::FUnion);
        assert_eq!(c.witness[0].core.to_vec(), vec![2]);
    }
}
