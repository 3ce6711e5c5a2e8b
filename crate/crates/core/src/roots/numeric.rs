//! Aberth–Ehrlich simultaneous iteration for a square-free integer
//! polynomial, followed by Newton polishing.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::polynomial::IntPolynomial;

pub(crate) const MAX_ITERATIONS: usize = 1000;

/// Roots of `p` and whether the iteration met its stopping rule.
pub(crate) struct Approximation {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Coefficients scaled to unit max-norm, low power first.
fn scaled(p: &IntPolynomial) -> Vec<f64> {
    let raw: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let max = raw.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    raw.iter().map(|c| c / max).collect()
}

/// `(p(z), p'(z))` by Horner's rule.
#[inline]
pub(crate) fn eval_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `Σ |c_i| r^i`, the scale of the rounding error in evaluating at `|z| = r`.
fn eval_abs(abs: &[f64], r: f64) -> f64 {
    abs.iter().rev().fold(0.0, |acc, &a| acc * r + a)
}

pub(crate) fn eval(c: &[f64], z: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Fujiwara's bound on the modulus of every root.
pub(crate) fn root_radius(c: &[f64]) -> f64 {
    let d = c.len() - 1;
    let lead = c[d].abs();
    (1..=d)
        .map(|i| {
            let ratio = c[d - i].abs() / lead;
            if i == d {
                (ratio / 2.0).powf(1.0 / i as f64)
            } else {
                ratio.powf(1.0 / i as f64)
            }
        })
        .fold(0.0f64, f64::max)
        * 2.0
}

fn quadratic(c: &[f64]) -> [Complex64; 2] {
    let (a, b, cc) = (c[2], c[1], c[0]);
    let disc = Complex64::new(b * b - 4.0 * a * cc, 0.0).sqrt();
    // Pick the sign that avoids cancellation.
    let sign = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -(Complex64::new(b, 0.0) + disc * sign) / 2.0;
    if q.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 2];
    }
    [q / a, Complex64::new(cc, 0.0) / q]
}

/// All roots of a square-free polynomial of degree ≥ 1.
pub(crate) fn square_free_roots(p: &IntPolynomial) -> Approximation {
    let c = scaled(p);
    let d = c.len() - 1;
    match d {
        1 => {
            return Approximation {
                roots: vec![Complex64::new(-c[0] / c[1], 0.0)],
                iterations: 0,
                converged: true,
            }
        }
        2 => {
            return Approximation {
                roots: quadratic(&c).to_vec(),
                iterations: 0,
                converged: true,
            }
        }
        _ => {}
    }
    let radius = root_radius(&c).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect();
    // A root is frozen once its residual is within the rounding error of
    // evaluating p there; steps below that level are noise.
    let abs: Vec<f64> = c.iter().map(|a| a.abs()).collect();
    let noise = 4.0 * d as f64 * f64::EPSILON;
    let mut frozen = vec![false; d];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut max_step = 0.0f64;
        for k in 0..d {
            if frozen[k] {
                continue;
            }
            let (pz, dpz) = eval_with_derivative(&c, z[k]);
            if pz.norm() <= noise * eval_abs(&abs, z[k].norm()) {
                frozen[k] = true;
                continue;
            }
            let ratio = pz / dpz;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-14 || frozen.iter().all(|&f| f) {
            converged = true;
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (pz, dpz) = eval_with_derivative(&c, *r);
            if dpz.norm() == 0.0 || pz.norm() == 0.0 {
                break;
            }
            let next = *r - pz / dpz;
            if next.is_finite() {
                *r = next;
            }
        }
    }
    Approximation {
        roots: z,
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn low_degree() {
        let r = square_free_roots(&IntPolynomial::from_i64s(&[2, 1])).roots;
        assert!(close(r[0], Complex64::new(-2.0, 0.0)));
        let r = square_free_roots(&IntPolynomial::from_i64s(&[3, 3, 1])).roots;
        let expected = Complex64::new(-1.5, 3f64.sqrt() / 2.0);
        assert!(
            r.iter().any(|&z| close(z, expected)) && r.iter().any(|&z| close(z, expected.conj()))
        );
    }

    #[test]
    fn cubic_and_beyond() {
        // (x+2)(x^2+2x+2)
        let p = IntPolynomial::from_i64s(&[4, 6, 4, 1]);
        let a = square_free_roots(&p);
        assert!(a.converged);
        for want in [
            Complex64::new(-2.0, 0.0),
            Complex64::new(-1.0, 1.0),
            Complex64::new(-1.0, -1.0),
        ] {
            assert!(a.roots.iter().any(|&z| close(z, want)), "{:?}", a.roots);
        }
        // x^12 - 1 style: roots of unity shifted, square-free.
        let mut coeffs = vec![0i64; 13];
        coeffs[0] = -1;
        coeffs[12] = 1;
        let a = square_free_roots(&IntPolynomial::from_i64s(&coeffs));
        assert!(a.converged);
        for z in a.roots {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }
}
