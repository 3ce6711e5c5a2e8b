//! Property suites: exhaustive over all labeled graphs of small order, and
//! per-graph checks over a catalog.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{generate_all_labeled, CatalogEntry};
use crate::closed_forms::{dom_equals_pd_condition, zf_equals_pd_condition};
use crate::counting::{count_polynomial, pd_tail_coefficients, CountConfig, Method, Property};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::polynomial::{binomial, IntPolynomial};
use crate::propagation::{
    check_ip_bound, closed_neighborhood, domination_number, fort_neighborhood_family, gamma_p,
    zero_forcing_number, Propagator,
};
use crate::roots::{
    classify_by_distinct_roots, find_roots, recognize_f, rouche_bound_graph,
    rouche_bound_universal, DEFAULT_TOL, POSITIVE_REAL_EPS,
};

const EXAMPLES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub violations: usize,
    /// A few offending graphs (graph6), for inspection.
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub graphs: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Per-graph outcome: for each check, `None` if it did not apply, else
/// whether it held.
type Outcome = Vec<Option<bool>>;

fn merge(names: &[&'static str], results: Vec<(String, Outcome)>) -> SuiteReport {
    let mut checks: Vec<CheckResult> = names
        .iter()
        .map(|&name| CheckResult {
            name,
            cases: 0,
            violations: 0,
            examples: Vec::new(),
        })
        .collect();
    for (key, outcome) in &results {
        for (check, verdict) in checks.iter_mut().zip(outcome) {
            match verdict {
                Some(true) => check.cases += 1,
                Some(false) => {
                    check.cases += 1;
                    check.violations += 1;
                    if check.examples.len() < EXAMPLES {
                        check.examples.push(key.clone());
                    }
                }
                None => {}
            }
        }
    }
    SuiteReport {
        graphs: results.len(),
        checks,
    }
}

const LABELED_CHECKS: [&str; 17] = [
    "superset_closure",
    "closure_equivalence",
    "fort_cover_equivalence",
    "tail_equals_direct",
    "lattice_equals_plain",
    "zf_le_pd",
    "dom_le_pd",
    "top_coefficients",
    "zf_condition",
    "dom_condition",
    "ip_bound",
    "zero_multiplicity_is_gamma_p",
    "no_positive_real_root",
    "low_half_nondecreasing",
    "full_binomial_tail",
    "gamma_p_le_gamma_and_z",
    "connected_dichotomy",
];

/// `P(t) > 0` for `t ∈ {1/4, 1/2, 1, 2}`, exactly.
fn positive_at_test_points(p: &IntPolynomial) -> bool {
    [(1, 4), (1, 2), (1, 1), (2, 1)].iter().all(|&(a, b)| {
        let t = BigRational::new(BigInt::from(a), BigInt::from(b));
        let v = p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * &t + BigRational::from_integer(c.clone())
        });
        v > BigRational::zero()
    })
}

/// Every check of the exhaustive suite on one graph.
pub fn labeled_checks(g: &Graph) -> Result<Outcome> {
    let n = g.order();
    let adj = g.rows();
    let cfg = CountConfig::default();
    let subsets = 1u64 << n;
    let mut prop = Propagator::new();
    let pds: Vec<bool> = (0..subsets)
        .map(|s| prop.is_power_dominating_bits(adj, s))
        .collect();

    let superset =
        (0..subsets).all(|s| !pds[s as usize] || (0..n).all(|v| pds[(s | 1 << v) as usize]));
    let closure_equiv = (0..subsets).all(|s| {
        let ns = closed_neighborhood(g, VertexSet::from_bits(n, s)).bits();
        pds[s as usize] == (s != 0 && prop.is_zero_forcing_bits(adj, ns))
    });
    let family = fort_neighborhood_family(g)?;
    let forts = (0..subsets).all(|s| {
        let set = VertexSet::from_bits(n, s);
        pds[s as usize] == family.iter().all(|nf| nf.intersects(&set))
    });

    let p = count_polynomial(g, Property::PowerDominating, Method::Lattice, &cfg)?;
    let plain = count_polynomial(g, Property::PowerDominating, Method::Plain, &cfg)?;
    let z = count_polynomial(g, Property::ZeroForcing, Method::Lattice, &cfg)?;
    let d = count_polynomial(g, Property::Dominating, Method::Lattice, &cfg)?;

    let tail = pd_tail_coefficients(g, n - 1)?
        .into_iter()
        .all(|(i, c)| p.coeff(i) == c);
    let z_le = (0..=n).all(|i| z.coeff(i) <= p.coeff(i));
    let d_le = (0..=n).all(|i| d.coeff(i) <= p.coeff(i));

    let report = g.structure_report();
    let iso = report.isolate_count;
    let k2 = report.k2_component_count;
    let mut top = p.coeff(n) == BigInt::one() && p.coeff(n - 1) == BigInt::from(n - iso);
    if n >= 2 {
        let expected =
            binomial(n, 2) - BigInt::from(iso * (n - iso)) - binomial(iso, 2) - BigInt::from(k2);
        top &= p.coeff(n - 2) == expected;
    }

    let zf_cond = zf_equals_pd_condition(g) == (z == p);
    let dom_cond = dom_equals_pd_condition(g) == (d == p);
    let ip = check_ip_bound(g)?.holds;
    let gp = gamma_p(g);
    let zero_mult = p.lowest_power() == Some(gp);
    let positive = positive_at_test_points(&p);
    let low_half = (1..n)
        .filter(|&i| 2 * i < n)
        .all(|i| p.coeff(i) <= p.coeff(i + 1));
    let full_tail = (1..=n)
        .all(|i| p.coeff(i) != binomial(n, i) || (i..=n).all(|j| p.coeff(j) == binomial(n, j)));
    let chain = gp <= domination_number(g) && gp <= zero_forcing_number(g);
    let dichotomy = g.is_connected().then(|| {
        (0..=n).all(|i| {
            z.coeff(i) != p.coeff(i) || p.coeff(i).is_zero() || p.coeff(i) == binomial(n, i)
        })
    });

    Ok(vec![
        Some(superset),
        Some(closure_equiv),
        Some(forts),
        Some(tail),
        Some(p == plain),
        Some(z_le),
        Some(d_le),
        Some(top),
        Some(zf_cond),
        Some(dom_cond),
        Some(ip),
        Some(zero_mult),
        Some(positive),
        Some(low_half),
        Some(full_tail),
        Some(chain),
        dichotomy,
    ])
}

/// Runs [`labeled_checks`] on every labeled graph of order `1..=n_max`.
pub fn labeled_suite(n_max: usize) -> Result<SuiteReport> {
    let mut results = Vec::new();
    for n in 1..=n_max {
        let graphs: Vec<Graph> = generate_all_labeled(n)?.collect();
        let part = graphs
            .par_iter()
            .map(|g| Ok((crate::graph::to_graph6(g), labeled_checks(g)?)))
            .collect::<Result<Vec<_>>>()?;
        results.extend(part);
    }
    Ok(merge(&LABELED_CHECKS, results))
}

const CATALOG_CHECKS: [&str; 8] = [
    "connected_dichotomy",
    "third_bound",
    "third_bound_equality",
    "classification_matches_roots",
    "rouche_bound",
    "universal_le_graph",
    "zero_multiplicity_is_gamma_p",
    "no_positive_real_root",
];

fn is_k33(g: &Graph) -> bool {
    if g.order() != 6 || g.edge_count() != 9 {
        return false;
    }
    let side = g.neighbors(0);
    side.len() == 3
        && (0..6).all(|v| {
            g.neighbors(v).len() == 3 && g.neighbors(v).intersects(&side) != side.contains(v)
        })
}

/// Per-graph checks over a catalog of (not necessarily connected) graphs.
pub fn catalog_checks(entry: &CatalogEntry) -> Result<Outcome> {
    let g = entry.graph();
    let n = g.order();
    let p = &entry.poly;
    let connected = g.is_connected();

    let dichotomy = (connected && n <= 7).then(|| {
        let z = crate::counting::zf_polynomial(&g);
        z.map(|z| {
            (0..=n).all(|i| {
                z.coeff(i) != p.coeff(i) || p.coeff(i).is_zero() || p.coeff(i) == binomial(n, i)
            })
        })
        .unwrap_or(false)
    });
    let gp = entry.flags.gamma_p;
    let third_bound = (connected && n >= 3).then_some(3 * gp <= n);
    let third_bound_equality = (connected && n >= 3 && n.is_multiple_of(3))
        .then(|| (3 * gp == n) == (recognize_f(&g).is_some() || is_k33(&g)));

    let report = find_roots(p, DEFAULT_TOL)?;
    let class = classify_by_distinct_roots(&g).class;
    let classification = match class.expected_distinct() {
        Some(k) => report.distinct_count == k,
        None => report.distinct_count >= 4,
    };
    let rouche = (n <= 7).then(|| {
        report
            .roots
            .iter()
            .filter(|r| r.value.re > POSITIVE_REAL_EPS)
            .all(|r| {
                let a = r.value.re;
                rouche_bound_graph(&g, a)
                    .map(|f| r.value.im.abs() >= f.min(f.powf(1.0 / n as f64)) - 1e-6)
                    .unwrap_or(false)
            })
    });
    let universal = (connected && n >= 3).then(|| {
        [0.5, 1.0, 2.0].iter().all(|&a| {
            match (rouche_bound_universal(n, a), rouche_bound_graph(&g, a)) {
                (Ok(fu), Ok(fg)) => fu <= fg * (1.0 + 1e-12),
                _ => false,
            }
        })
    });
    let zero_mult = report.zero_multiplicity == gamma_p(&g);
    let positive = positive_at_test_points(p)
        && report
            .roots
            .iter()
            .all(|r| !(r.value.re > POSITIVE_REAL_EPS && r.value.im == 0.0));
    Ok(vec![
        dichotomy,
        third_bound,
        third_bound_equality,
        Some(classification),
        rouche,
        universal,
        Some(zero_mult),
        Some(positive),
    ])
}

pub fn catalog_suite(entries: &[CatalogEntry]) -> Result<SuiteReport> {
    let results = entries
        .par_iter()
        .map(|e| Ok((e.key.clone(), catalog_checks(e)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(&CATALOG_CHECKS, results))
}
