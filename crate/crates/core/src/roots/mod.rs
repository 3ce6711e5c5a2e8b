//! Roots of power domination polynomials: numeric approximation, exact
//! integer roots, structural classification by the number of distinct
//! roots, and the Rouché-type region bounds.

mod classify;
mod family_f;
mod numeric;
mod rouche;

pub use classify::{analyze_graph, classify_by_distinct_roots, Classification, RootClass};
pub use family_f::{recognize_f, FDecomposition, Gadget};
pub use rouche::{
    rouche_bound_graph, rouche_bound_poly, rouche_bound_universal, rouche_verdicts, RoucheVerdict,
    POSITIVE_REAL_EPS,
};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

pub const DEFAULT_TOL: f64 = 1e-10;

/// A root and its multiplicity. Serialized as `{"value": [re, im], ...}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Root {
    #[serde(serialize_with = "complex_pair")]
    pub value: Complex64,
    pub multiplicity: usize,
}

fn complex_pair<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&z.re)?;
    seq.serialize_element(&z.im)?;
    seq.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub roots: Vec<Root>,
    pub zero_multiplicity: usize,
    pub distinct_count: usize,
    /// `|P(r)|` for each entry of `roots`.
    pub residuals: Vec<f64>,
    /// Whether every residual is within the tolerance rule.
    pub residuals_ok: bool,
    pub converged: bool,
    pub iterations: usize,
    pub classification: Option<RootClass>,
    pub rouche_verdicts: Vec<RoucheVerdict>,
}

impl RootReport {
    /// Every root, repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }
}

/// Like [`find_roots`], but returns whatever was reached even if the
/// iteration cap was hit.
pub fn find_roots_partial(p: &IntPolynomial, tol: f64) -> Result<RootReport> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::Domain(
                "root finding needs a polynomial of degree at least 1".into(),
            ))
        }
    };
    let m = p.lowest_power().unwrap_or(0);
    let rest = p.unshift(m)?;
    let mut roots = Vec::new();
    if m > 0 {
        roots.push(Root {
            value: Complex64::new(0.0, 0.0),
            multiplicity: m,
        });
    }
    let mut converged = true;
    let mut iterations = 0;
    if rest.degree().unwrap_or(0) > 0 {
        // Exact square-free split first, so repeated roots are found as
        // simple roots of their factor and keep full precision.
        for (factor, mult) in rest.square_free_decomposition() {
            if factor.degree().unwrap_or(0) == 0 {
                continue;
            }
            let approx = numeric::square_free_roots(&factor);
            converged &= approx.converged;
            iterations = iterations.max(approx.iterations);
            for z in approx.roots {
                roots.push(Root {
                    value: snap_real(z),
                    multiplicity: mult,
                });
            }
        }
    }
    debug_assert_eq!(roots.iter().map(|r| r.multiplicity).sum::<usize>(), degree);

    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let max_coeff = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let residuals: Vec<f64> = roots
        .iter()
        .map(|r| numeric::eval(&coeffs, r.value).norm())
        .collect();
    let residuals_ok = roots
        .iter()
        .zip(&residuals)
        .all(|(r, &res)| res <= tol * max_coeff * r.value.norm().max(1.0).powi(degree as i32));
    let distinct_count = count_clusters(&roots, 1e3 * tol);
    Ok(RootReport {
        roots,
        zero_multiplicity: m,
        distinct_count,
        residuals,
        residuals_ok,
        converged,
        iterations,
        classification: None,
        rouche_verdicts: Vec::new(),
    })
}

/// Zeros of `p`: the power of `x` is factored out exactly, the rest is
/// split into square-free factors and each is solved numerically.
pub fn find_roots(p: &IntPolynomial, tol: f64) -> Result<RootReport> {
    let report = find_roots_partial(p, tol)?;
    if !report.converged {
        return Err(Error::NumericFailure {
            iterations: report.iterations,
        });
    }
    Ok(report)
}

fn snap_real(z: Complex64) -> Complex64 {
    if z.im.abs() <= 1e-14 * z.norm().max(1.0) {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// Number of groups after merging roots closer than `eps` (transitively).
fn count_clusters(roots: &[Root], eps: f64) -> usize {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i].value - roots[j].value).norm() < eps {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Exact integer roots with multiplicity, most negative last. After
/// removing `x^m`, any integer root divides the lowest coefficient and lies
/// within the Fujiwara radius, so only those candidates are tested.
pub fn integer_roots(p: &IntPolynomial) -> Vec<(BigInt, usize)> {
    let mut out = Vec::new();
    let Some(degree) = p.degree() else { return out };
    let m = p.lowest_power().unwrap_or(0);
    if m > 0 {
        out.push((BigInt::zero(), m));
    }
    if degree == m {
        return out;
    }
    let mut rest = p.unshift(m).expect("lowest power divides");
    let c0 = rest.coeff(0).abs();
    let coeffs: Vec<f64> = rest
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let bound = numeric::root_radius(&coeffs);
    let limit = if bound.is_finite() {
        (bound.ceil() as u64).saturating_add(1)
    } else {
        u64::MAX
    };
    let mut d = 1u64;
    while d <= limit && BigInt::from(d) <= c0 {
        let big = BigInt::from(d);
        if c0.is_multiple_of(&big) {
            let root = -big.clone();
            let linear = IntPolynomial::from_coeffs(vec![big.clone(), BigInt::from(1)]);
            let mut mult = 0;
            while rest.eval_int(&root).is_zero() {
                rest = rest.div_exact(&linear).expect("root gives an exact factor");
                mult += 1;
            }
            if mult > 0 {
                out.push((root, mult));
            }
        }
        d += 1;
    }
    out
}
