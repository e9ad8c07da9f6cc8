//! Dense univariate polynomials with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Polynomial with integer coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new([c.into()])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new([0, 1])
    }

    /// `c · x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new([-root.into(), BigInt::one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
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

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c))
    }

    /// Long division. The divisor's leading coefficient must divide every
    /// intermediate leading term; otherwise the division is reported inexact.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let d = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, other: &IntPolynomial) -> bool {
        other.div_exact(self).is_ok()
    }

    /// The integer polynomial `Q` with positive leading coefficient and
    /// `Q² = self`, if one exists.
    ///
    /// Coefficients are solved top-down from the leading term and the
    /// candidate is confirmed by exact multiplication.
    pub fn sqrt(&self) -> Result<IntPolynomial> {
        let Some(deg) = self.degree() else {
            return Ok(IntPolynomial::zero());
        };
        if deg % 2 == 1 {
            return Err(Error::NoPolynomialSquareRoot);
        }
        let half = deg / 2;
        let lead = self.leading().expect("nonzero");
        if lead.is_negative() {
            return Err(Error::NoPolynomialSquareRoot);
        }
        let top = lead.sqrt();
        if &(&top * &top) != lead {
            return Err(Error::NoPolynomialSquareRoot);
        }
        let mut q = vec![BigInt::zero(); half + 1];
        q[half] = top.clone();
        let two_top = &top * 2;
        for k in 1..=half {
            // coefficient of x^(deg - k) in Q² = 2·q[half]·q[half-k] + Σ q[i]q[j]
            // over i + j = deg - k with both indices strictly between.
            let target = deg - k;
            let mut acc = self.coeff(target);
            for i in (half - k + 1)..=half {
                let j = target - i;
                if j > half - k && j <= half {
                    acc -= &q[i] * &q[j];
                }
            }
            let (c, r) = acc.div_rem(&two_top);
            if !r.is_zero() {
                return Err(Error::NoPolynomialSquareRoot);
            }
            q[half - k] = c;
        }
        let root = IntPolynomial::new(q);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(Error::NoPolynomialSquareRoot)
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let x = x.as_big();
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            });
        Rational::from_big(v)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Human-readable form in the given variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serialized as the ascending coefficient array.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c))
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}
