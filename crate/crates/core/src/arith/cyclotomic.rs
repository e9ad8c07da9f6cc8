//! Exact arithmetic in the cyclotomic fields `Q(ξ_K)`, `ξ_K = exp(2πi/K)`.
//!
//! Elements are coordinate vectors in the power basis `1, x, …, x^{φ(K)-1}`
//! modulo the cyclotomic polynomial `Φ_K`. The Galois group is `(Z/KZ)*`,
//! with `a` acting by `x ↦ x^a`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::number::{divisors, euler_phi, mobius, units_mod};
use crate::arith::{IntPolynomial, Rational};
use crate::error::{Error, Result};

/// `Φ_K`, computed as `∏_{d | K} (x^d − 1)^{μ(K/d)}`.
pub fn cyclotomic_poly(k: u64) -> IntPolynomial {
    assert!(k >= 1, "cyclotomic_poly requires K ≥ 1");
    let mut numer = IntPolynomial::one();
    let mut denom = IntPolynomial::one();
    for d in divisors(k) {
        let factor = &IntPolynomial::monomial(1, d as usize) - &IntPolynomial::one();
        match mobius(k / d) {
            1 => numer = &numer * &factor,
            -1 => denom = &denom * &factor,
            _ => {}
        }
    }
    numer
        .div_exact(&denom)
        .expect("Möbius product is an exact quotient")
}

/// The field `Q(ξ_K)` together with reductions of `x^j` for `0 ≤ j < K`.
pub struct CyclotomicField {
    order: u64,
    degree: usize,
    modulus: IntPolynomial,
    /// `reductions[j - degree]` is `x^j mod Φ_K` for `degree ≤ j < K`.
    reductions: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_poly(order);
        let degree = euler_phi(order) as usize;
        debug_assert_eq!(modulus.degree(), Some(degree));
        let mut reductions = Vec::with_capacity(order as usize - degree);
        // x^degree = -(Φ_K - x^degree)
        let mut cur: Vec<BigInt> = (0..degree).map(|i| -modulus.coeff(i)).collect();
        for _ in degree..order as usize {
            reductions.push(cur.clone());
            let top = cur[degree - 1].clone();
            cur.rotate_right(1);
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * modulus.coeff(i);
                }
            }
        }
        Arc::new(CyclotomicField {
            order,
            degree,
            modulus,
            reductions,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(K)`, the degree over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    /// Adds `c · x^exp` (exponent taken mod K) into an integer coordinate vector.
    fn accumulate_power(&self, acc: &mut [BigInt], c: &BigInt, exp: u64) {
        let j = (exp % self.order) as usize;
        if j < self.degree {
            acc[j] += c;
        } else {
            for (slot, r) in acc.iter_mut().zip(&self.reductions[j - self.degree]) {
                if !r.is_zero() {
                    *slot += c * r;
                }
            }
        }
    }

    fn accumulate_power_rational(&self, acc: &mut [Rational], c: &Rational, exp: u64) {
        let j = (exp % self.order) as usize;
        if j < self.degree {
            acc[j] = &acc[j] + c;
        } else {
            for (slot, r) in acc.iter_mut().zip(&self.reductions[j - self.degree]) {
                if !r.is_zero() {
                    *slot = &*slot + &(c * &Rational::from_integer(r.clone()));
                }
            }
        }
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ξ_{})", self.order)
    }
}

/// An element of `Q(ξ_K)`.
#[derive(Clone)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    coords: Vec<Rational>,
}

impl CyclotomicElement {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CyclotomicElement {
            field: Arc::clone(field),
            coords: vec![Rational::zero(); field.degree],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut e = Self::zero(field);
        e.coords[0] = q;
        e
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// `ξ_K^exp`; negative exponents are inverses.
    pub fn root_power(field: &Arc<CyclotomicField>, exp: i64) -> Self {
        RootSum::new(field.order, [(1, exp)]).reduce(field)
    }

    /// `ξ_K^k + ξ_K^{-k}`.
    pub fn two_cos(field: &Arc<CyclotomicField>, k: i64) -> Self {
        RootSum::new(field.order, [(1, k), (1, -k)]).reduce(field)
    }

    /// Reduces an arbitrary polynomial in `x = ξ_K` to the power basis.
    pub fn from_polynomial(field: &Arc<CyclotomicField>, coeffs: &[Rational]) -> Self {
        let mut acc = vec![Rational::zero(); field.degree];
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                field.accumulate_power_rational(&mut acc, c, i as u64);
            }
        }
        CyclotomicElement {
            field: Arc::clone(field),
            coords: acc,
        }
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(Rational::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let d = self.field.degree;
        let mut full = vec![Rational::zero(); 2 * d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] = &full[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::from_polynomial(&self.field, &full))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        CyclotomicElement {
            field: Arc::clone(&self.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Applies the automorphism `ξ ↦ ξ^a`; `a` must be a unit mod K.
    pub fn galois(&self, a: i64) -> Result<Self> {
        let k = self.order();
        let a = check_unit(a, k)?;
        let mut acc = vec![Rational::zero(); self.field.degree];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let exp = (a as u128 * i as u128 % k as u128) as u64;
                self.field.accumulate_power_rational(&mut acc, c, exp);
            }
        }
        Ok(CyclotomicElement {
            field: Arc::clone(&self.field),
            coords: acc,
        })
    }
}

fn check_unit(a: i64, k: u64) -> Result<u64> {
    let reduced = a.rem_euclid(k as i64) as u64;
    if reduced.gcd(&k) != 1 {
        return Err(Error::NotAUnit { a, order: k });
    }
    Ok(reduced)
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coords == other.coords
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ξ_{})[", self.order())?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Panics on mismatched orders; use `try_add` to handle that case.
impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: Self) -> CyclotomicElement {
        self.try_add(rhs).expect("cyclotomic orders must agree")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: Self) -> CyclotomicElement {
        self.try_sub(rhs).expect("cyclotomic orders must agree")
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: Self) -> CyclotomicElement {
        self.try_mul(rhs).expect("cyclotomic orders must agree")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// True iff `x ↦ x^a` fixes `e`.
pub fn galois_orbit_fixes(e: &CyclotomicElement, a: i64) -> Result<bool> {
    Ok(&e.galois(a)? == e)
}

/// A formal integer combination `Σ c_i ξ_K^{e_i}` of K-th roots of unity.
///
/// The Galois action permutes exponents, so acting and then reducing costs
/// one pass over the terms instead of a dense change of basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    order: u64,
    terms: Vec<(i64, u64)>,
}

impl RootSum {
    pub fn new(order: u64, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let k = order as i64;
        RootSum {
            order,
            terms: terms
                .into_iter()
                .map(|(c, e)| (c, e.rem_euclid(k) as u64))
                .collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &[(i64, u64)] {
        &self.terms
    }

    pub fn galois(&self, a: i64) -> Result<RootSum> {
        let a = check_unit(a, self.order)?;
        let k = self.order as u128;
        Ok(RootSum {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|&(c, e)| (c, (a as u128 * e as u128 % k) as u64))
                .collect(),
        })
    }

    /// Reduces into the power basis of `field`.
    pub fn reduce(&self, field: &Arc<CyclotomicField>) -> CyclotomicElement {
        assert_eq!(field.order, self.order, "root sum and field orders differ");
        CyclotomicElement {
            field: Arc::clone(field),
            coords: self
                .reduce_integral(field)
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    fn reduce_integral(&self, field: &CyclotomicField) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); field.degree];
        for &(c, e) in &self.terms {
            field.accumulate_power(&mut acc, &BigInt::from(c), e);
        }
        acc
    }
}

/// Degree over `Q` of the subfield of `Q(ξ_K)` generated by `gens`.
///
/// Counts the units `a` fixing every generator (the stabilizer `s`) and
/// returns `(φ(K) / s, s)`.
pub fn generated_subfield_degree(field: &Arc<CyclotomicField>, gens: &[RootSum]) -> (u64, u64) {
    let base: Vec<Vec<BigInt>> = gens.iter().map(|g| g.reduce_integral(field)).collect();
    let stabilizer = units_mod(field.order)
        .into_iter()
        .filter(|&a| {
            gens.iter().zip(&base).all(|(g, b)| {
                let image = g.galois(a as i64).expect("a is a unit");
                &image.reduce_integral(field) == b
            })
        })
        .count() as u64;
    let phi = field.degree as u64;
    debug_assert_eq!(phi % stabilizer, 0);
    (phi / stabilizer, stabilizer)
}
