//! Power domination polynomials from formulas: named families, the
//! decomposition rules, and the structural tests for `𝒫 = 𝒵` and `𝒫 = 𝒟`.

use num_bigint::BigInt;

use crate::counting::{self, Method};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph, VertexSet};
use crate::polynomial::IntPolynomial;
use crate::propagation::Propagator;

/// `(x+1)^n - 1`.
fn all_nonempty(n: usize) -> IntPolynomial {
    IntPolynomial::binomial_minus_one(n)
}

/// Closed form for a named family. Recognised names are those of
/// [`Family::parse`] plus `corona` with parameters `[n(H), k]`, which needs
/// `k > 1` (use [`corona_poly`] to fall back to enumeration for `k = 1`).
pub fn formula_family(name: &str, params: &[usize]) -> Result<IntPolynomial> {
    if name == "corona" {
        return match params {
            [h, k] if *h >= 1 && *k > 1 => Ok(all_nonempty(k + 1).pow(*h)),
            _ => Err(Error::FamilyDomain {
                family: "corona".into(),
                params: format!("{params:?} (need n(H) >= 1, k > 1)"),
            }),
        };
    }
    family_poly(&Family::parse(name, params)?)
}

pub fn family_poly(family: &Family) -> Result<IntPolynomial> {
    family.validate()?;
    let n = family.order();
    Ok(match *family {
        Family::Path(_) | Family::Cycle(_) | Family::Complete(_) | Family::Wheel(_) => {
            all_nonempty(n)
        }
        Family::Empty(_) => IntPolynomial::x_pow(n),
        Family::Star(_) => {
            let x = IntPolynomial::x_pow(1);
            let a = x.mul(&IntPolynomial::binomial_power(n - 1));
            let b = IntPolynomial::x_pow(n - 1);
            let c = IntPolynomial::monomial(BigInt::from(n - 1), n - 2);
            a.add(&b).add(&c)
        }
        Family::CompleteBipartite(a, b) => join_formula(
            &JoinPart {
                poly: IntPolynomial::x_pow(a),
                order: a,
                isolates: if a > 1 { a } else { 0 },
            },
            &JoinPart {
                poly: IntPolynomial::x_pow(b),
                order: b,
                isolates: if b > 1 { b } else { 0 },
            },
        )?,
    })
}

/// `𝒫(H ∘ K_k)`: the closed form when `k > 1`, enumeration when `k = 1`.
pub fn corona_poly(h: &Graph, k: usize) -> Result<IntPolynomial> {
    if k > 1 {
        formula_family("corona", &[h.order(), k])
    } else {
        let g = h.corona(&Family::Complete(k).build()?)?;
        counting::pd_polynomial(&g, Method::Auto)
    }
}

/// Product rule. Both factors must look like power domination polynomials
/// (nonzero, zero constant term).
pub fn disjoint_union_poly(p1: &IntPolynomial, p2: &IntPolynomial) -> Result<IntPolynomial> {
    for p in [p1, p2] {
        if p.is_zero() || !p.coeff(0).eq(&BigInt::from(0)) {
            return Err(Error::Domain(format!(
                "{p} is not a power domination polynomial"
            )));
        }
    }
    Ok(p1.mul(p2))
}

/// One side of a join: its polynomial, order, and the isolate count used by
/// the join formula (0 when the order is 1).
#[derive(Clone, Debug)]
pub struct JoinPart {
    pub poly: IntPolynomial,
    pub order: usize,
    pub isolates: usize,
}

impl JoinPart {
    pub fn of(g: &Graph) -> Result<Self> {
        Ok(JoinPart {
            poly: counting::pd_polynomial(g, Method::Auto)?,
            order: g.order(),
            isolates: if g.order() > 1 { g.isolates().len() } else { 0 },
        })
    }

    /// `(1 + I/x) P`, dividing by `x` as an index shift.
    fn lifted(&self) -> Result<IntPolynomial> {
        let shifted = self.poly.unshift(1)?;
        Ok(self.poly.add(&shifted.scale(&BigInt::from(self.isolates))))
    }
}

/// `(1+I₁/x)P₁ + (1+I₂/x)P₂ + ((x+1)^{n₁}-1)((x+1)^{n₂}-1)`.
pub fn join_formula(a: &JoinPart, b: &JoinPart) -> Result<IntPolynomial> {
    let cross = all_nonempty(a.order).mul(&all_nonempty(b.order));
    Ok(a.lifted()?.add(&b.lifted()?).add(&cross))
}

pub fn join_poly(g1: &Graph, g2: &Graph) -> Result<IntPolynomial> {
    join_formula(&JoinPart::of(g1)?, &JoinPart::of(g2)?)
}

/// `(1+I/x)P + x(x+1)^n`: `g` plus one vertex adjacent to everything.
pub fn dominating_vertex_poly(g: &Graph) -> Result<IntPolynomial> {
    let part = JoinPart::of(g)?;
    let x = IntPolynomial::x_pow(1);
    Ok(part
        .lifted()?
        .add(&x.mul(&IntPolynomial::binomial_power(g.order()))))
}

fn is_path(g: &Graph) -> bool {
    g.is_connected()
        && g.edge_count() + 1 == g.order()
        && g.vertices().iter().all(|v| g.degree(v) <= 2)
}

/// Checks the identification hypotheses for one gadget: every single vertex
/// power dominates it, and a path gadget is not attached at an endpoint.
pub fn check_gadget(gadget: &Graph, u: usize) -> std::result::Result<(), String> {
    if u >= gadget.order() {
        return Err(format!(
            "attachment vertex {u} is not in a graph of order {}",
            gadget.order()
        ));
    }
    if is_path(gadget) && gadget.degree(u) <= 1 {
        return Err(format!(
            "gadget is a path of order {} attached at an endpoint",
            gadget.order()
        ));
    }
    let mut prop = Propagator::new();
    if let Some(v) = gadget
        .vertices()
        .iter()
        .find(|&v| !prop.is_power_dominating_bits(gadget.rows(), 1 << v))
    {
        return Err(format!(
            "vertex {v} alone does not power dominate the gadget"
        ));
    }
    Ok(())
}

/// `∏ ((x+1)^{n_i} - 1)` for the graph obtained by identifying vertex `i` of
/// `h` with `u_i` of gadget `i`. Hypotheses are checked, not assumed.
pub fn identification_poly(h: &Graph, gadgets: &[(Graph, usize)]) -> Result<IntPolynomial> {
    if gadgets.len() != h.order() {
        return Err(Error::Arity {
            expected: h.order(),
            actual: gadgets.len(),
        });
    }
    let mut out = IntPolynomial::one();
    for (index, (gadget, u)) in gadgets.iter().enumerate() {
        check_gadget(gadget, *u).map_err(|reason| Error::HypothesisNotMet { index, reason })?;
        out = out.mul(&all_nonempty(gadget.order()));
    }
    Ok(out)
}

/// Result of [`formula_polynomial`]: the polynomial and how many prime
/// pieces had to be enumerated.
#[derive(Clone, Debug)]
pub struct FormulaRun {
    pub polynomial: IntPolynomial,
    pub enumerated_pieces: usize,
}

/// `𝒫(G;x)` by splitting into components (product rule) and co-components
/// (join rule) recursively. Pieces that split neither way are paths or
/// cycles, handled in closed form, or enumerated.
pub fn formula_polynomial(g: &Graph) -> Result<FormulaRun> {
    let mut enumerated_pieces = 0;
    let polynomial = decompose(g, &mut enumerated_pieces)?;
    Ok(FormulaRun {
        polynomial,
        enumerated_pieces,
    })
}

fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let full = g.vertices().bits();
    let rows = (0..n).map(|v| !g.row(v) & full & !(1u64 << v)).collect();
    Graph::from_adjacency(rows).expect("complement of a valid graph")
}

fn decompose(g: &Graph, enumerated: &mut usize) -> Result<IntPolynomial> {
    let n = g.order();
    if n <= 1 {
        return Ok(IntPolynomial::x_pow(n));
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut out = IntPolynomial::one();
        for c in comps {
            out = out.mul(&decompose(&g.induced(c), enumerated)?);
        }
        return Ok(out);
    }
    let co = complement(g).components();
    if co.len() > 1 {
        let first = co[0];
        let rest = first.complement();
        let part = |s: VertexSet, enumerated: &mut usize| -> Result<JoinPart> {
            let h = g.induced(s);
            Ok(JoinPart {
                poly: decompose(&h, enumerated)?,
                order: h.order(),
                isolates: if h.order() > 1 { h.isolates().len() } else { 0 },
            })
        };
        let a = part(first, enumerated)?;
        let b = part(rest, enumerated)?;
        return join_formula(&a, &b);
    }
    if is_path(g) || g.vertices().iter().all(|v| g.degree(v) == 2) {
        return Ok(all_nonempty(n));
    }
    *enumerated += 1;
    counting::pd_polynomial(g, Method::Auto)
}

/// `𝒵(G) = 𝒫(G)` exactly when every component has at most two vertices.
pub fn zf_equals_pd_condition(g: &Graph) -> bool {
    g.components().iter().all(|c| c.len() <= 2)
}

/// `𝒟(G) = 𝒫(G)` exactly when every non-isolated `u` has a neighbour `v`
/// with `N[v] ⊆ N[u]`.
pub fn dom_equals_pd_condition(g: &Graph) -> bool {
    g.vertices().iter().filter(|&u| g.degree(u) > 0).all(|u| {
        let nu = g.closed_neighbors(u);
        g.neighbors(u)
            .iter()
            .any(|v| g.closed_neighbors(v).is_subset(&nu))
    })
}
