//! Lower bounds on `|b|` for roots `a + bi` with `a > 0`.
//!
//! With `c_k` the Taylor coefficients of `P` at `a`, the graph bound is
//! `f(G;a) = c_0 / Σ_{k≥1} c_k`; the universal bound `f(a)` replaces the
//! coefficients by the extremes allowed for a connected graph of order `n`.
//! Both are computed exactly over the rationals (with `a` taken as the exact
//! value of its `f64`), followed by one division.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::RootReport;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// Roots whose real part is at most this are not treated as having
/// positive real part.
pub const POSITIVE_REAL_EPS: f64 = 1e-9;

const SLACK: f64 = 1e-6;

fn exact(a: f64) -> Result<BigRational> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::Domain(format!("the bound needs a > 0, got {a}")));
    }
    Ok(BigRational::from_float(a).expect("finite"))
}

fn rational_eval(p: &IntPolynomial, a: &BigRational) -> BigRational {
    p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * a + BigRational::from_integer(c.clone())
    })
}

/// Coefficients of `p(a + y)` in `y`, low power first.
fn taylor_shift(p: &IntPolynomial, a: &BigRational) -> Vec<BigRational> {
    let mut t: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let d = t.len().saturating_sub(1);
    for i in 0..d {
        for j in (i..d).rev() {
            let add = &t[j + 1] * a;
            t[j] += add;
        }
    }
    t
}

/// `num(a) / Σ_{k≥1} c_k`, where `c_k` are the Taylor coefficients of `den`
/// at `a`.
pub fn rouche_bound_poly(num: &IntPolynomial, den: &IntPolynomial, a: f64) -> Result<f64> {
    let a = exact(a)?;
    let c = taylor_shift(den, &a);
    let tail: BigRational = c
        .iter()
        .skip(1)
        .cloned()
        .fold(BigRational::zero(), |s, x| s + x);
    if tail.is_zero() {
        return Err(Error::Domain("denominator vanishes".into()));
    }
    (rational_eval(num, &a) / tail)
        .to_f64()
        .ok_or_else(|| Error::Domain("bound not representable".into()))
}

/// `f(G;a)` from the power domination polynomial of `g`.
pub fn rouche_bound_graph(g: &Graph, a: f64) -> Result<f64> {
    let p = crate::counting::pd_polynomial(g, crate::counting::Method::Auto)?;
    rouche_bound_poly(&p, &p, a)
}

/// `f(a)` for connected graphs of order `n ≥ 3`: numerator
/// `Σ C(n-⌈n/3⌉, i-⌈n/3⌉) aⁱ`, denominator built from `C(n,k)`.
pub fn rouche_bound_universal(n: usize, a: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "the universal bound needs n >= 3, got {n}"
        )));
    }
    let t = n.div_ceil(3);
    let num = IntPolynomial::binomial_power(n - t).shift(t);
    let den = IntPolynomial::binomial_minus_one(n);
    rouche_bound_poly(&num, &den, a)
}

/// Bound checks for one root with positive real part. The per-graph form uses
/// exponent `1/n`, the universal form exponent `n`; each is reported as
/// written.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoucheVerdict {
    pub re: f64,
    pub im: f64,
    pub f_graph: f64,
    /// `min{f(G;a), f(G;a)^{1/n}}`.
    pub root_bound: f64,
    pub root_bound_holds: bool,
    /// `f(a)`, present for connected graphs with `n ≥ 3`.
    pub f_universal: Option<f64>,
    /// `min{f(a), f(a)^n}`.
    pub universal_bound: Option<f64>,
    pub universal_bound_holds: Option<bool>,
    pub universal_le_graph: Option<bool>,
}

pub fn rouche_verdicts(
    g: &Graph,
    p: &IntPolynomial,
    report: &RootReport,
) -> Result<Vec<RoucheVerdict>> {
    let n = g.order();
    let universal_applies = n >= 3 && g.is_connected();
    let mut out = Vec::new();
    for root in &report.roots {
        let (a, b) = (root.value.re, root.value.im.abs());
        if a <= POSITIVE_REAL_EPS {
            continue;
        }
        let f = rouche_bound_poly(p, p, a)?;
        let root_bound = f.min(f.powf(1.0 / n as f64));
        let (f_universal, universal_bound, universal_bound_holds, universal_le_graph) =
            if universal_applies {
                let fu = rouche_bound_universal(n, a)?;
                let bound = fu.min(fu.powi(n as i32));
                (
                    Some(fu),
                    Some(bound),
                    Some(b > bound - SLACK),
                    Some(fu <= f * (1.0 + 1e-12)),
                )
            } else {
                (None, None, None, None)
            };
        out.push(RoucheVerdict {
            re: root.value.re,
            im: root.value.im,
            f_graph: f,
            root_bound,
            root_bound_holds: b >= root_bound - SLACK,
            f_universal,
            universal_bound,
            universal_bound_holds,
            universal_le_graph,
        });
    }
    Ok(out)
}
