//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient
/// is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of a unimodality check. `peak` is the lowest index attaining the
/// maximum coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Unimodality {
    pub unimodal: bool,
    pub peak: Option<usize>,
}

/// `C(n, k)` as an unbounded integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Row `n` of Pascal's triangle, `C(n, 0..=n)`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        pascal_step(&mut row);
    }
    row
}

/// Advances a Pascal row from `C(m, ·)` to `C(m+1, ·)` in place.
pub(crate) fn pascal_step(row: &mut Vec<BigInt>) {
    row.push(BigInt::one());
    for j in (1..row.len() - 1).rev() {
        let prev = row[j - 1].clone();
        row[j] += prev;
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c · x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(x+1)^n − 1`, whose `x^i` coefficient is `C(n, i)` for `i ≥ 1`.
    pub fn binomial_minus_one(n: usize) -> Self {
        let mut row = binomial_row(n);
        row[0] = BigInt::zero();
        Self::from_coeffs(row)
    }

    /// `(x+1)^n`.
    pub fn binomial_power(n: usize) -> Self {
        Self::from_coeffs(binomial_row(n))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Divides by `x^k`; fails unless the `k` lowest coefficients are zero.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    /// Quotient and remainder of division by `divisor`, requiring every
    /// quotient coefficient to be an integer.
    fn long_division(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::NotDivisible)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.long_division(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Horner evaluation at an integer point; exact.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Horner evaluation in double precision. The result carries the usual
    /// relative error of roughly `deg · ε · Σ|c_i||z|^i`.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_f64().unwrap_or(f64::INFINITY)
            })
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::INFINITY))
    }

    /// Whether the coefficients between the lowest and highest nonzero terms
    /// rise weakly to a peak and then fall weakly.
    pub fn unimodality(&self) -> Unimodality {
        let Some(lo) = self.lowest_power() else {
            return Unimodality {
                unimodal: true,
                peak: None,
            };
        };
        let window = &self.coeffs[lo..];
        let mut peak = 0;
        for (i, c) in window.iter().enumerate() {
            if c > &window[peak] {
                peak = i;
            }
        }
        let rising = window[..=peak].windows(2).all(|w| w[0] <= w[1]);
        let falling = window[peak..].windows(2).all(|w| w[0] >= w[1]);
        Unimodality {
            unimodal: rising && falling,
            peak: Some(lo + peak),
        }
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodality().unimodal
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^(deg self − deg divisor + 1) · self`.
    fn pseudo_remainder(&self, divisor: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), divisor.degree()) else {
            return self.clone();
        };
        if da < db {
            return self.clone();
        }
        let lead = divisor.coeffs[db].clone();
        let mut rem = self.coeffs.clone();
        for k in (0..=da - db).rev() {
            let top = rem[k + db].clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &top * d;
            }
        }
        Self::from_coeffs(rem)
    }

    /// Primitive greatest common divisor (positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Yun's square-free decomposition of a primitive polynomial: pairs
    /// `(factor, multiplicity)` with pairwise coprime square-free factors of
    /// positive degree whose product (with multiplicities) is `self` up to a
    /// constant.
    pub fn square_free_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides f").primitive_part();
        let mut c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut mult = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), mult));
            }
            b = b.div_exact(&a).expect("gcd divides b");
            c = d.div_exact(&a).expect("gcd divides d");
            d = c.sub(&b.derivative());
            mult += 1;
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::add(self, rhs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::sub(self, rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = c.sign() == num_bigint::Sign::Minus;
            if first {
                if sign {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if sign { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serde helper writing a big integer as a decimal string.
pub fn serialize_bigint<S: Serializer>(
    v: &BigInt,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&v.to_string())
}

/// Serialized as an array of decimal strings indexed by power.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of decimal coefficient strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<IntPolynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<BigInt>()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
                    coeffs.push(c);
                }
                Ok(IntPolynomial::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

/// Coefficientwise comparison: `Some(Less)` if every coefficient of `a` is
/// at most the matching one of `b` and at least one is smaller.
pub fn coefficientwise_cmp(a: &IntPolynomial, b: &IntPolynomial) -> Option<Ordering> {
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut le = true;
    let mut ge = true;
    for i in 0..len {
        match a.coeff(i).cmp(&b.coeff(i)) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}
