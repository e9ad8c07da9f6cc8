//! Algebraic curves and one-forms generating `T(n,m)`.
//!
//! Products of `u − 2cos(·)` factors are stored through the polynomials
//! `C_k(u)` with `C_k(p + 1/p) = p^k + p^{-k}`:
//!
//! * m odd: `y^{2n} = C_m − 2 = (u−2)·Q²`, `D = (u−2)·Q`
//! * m even, n odd: `y^{2n} = (u−2)^n·(C_m + 2) = (u−2)^n·C_{m/2}²`, `D = (u−2)·C_{m/2}`
//! * both even: `y^n = (u−2)^{n/2}·C_{m/2}`, `D = (u−2)·C_{m/2}`
//!
//! The one-form is `y du / D(u)`.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::arith::{chebyshev_t, IntPolynomial, Rational};
use crate::error::{Error, Result};
use crate::params::CurveParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorCase {
    MOdd,
    MEvenNOdd,
    BothEven,
}

/// `(u − 2)^two_power · factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factored {
    pub two_power: u32,
    pub factor: IntPolynomial,
    pub multiplicity: u32,
}

impl Factored {
    pub fn expand(&self) -> IntPolynomial {
        &IntPolynomial::linear(2).pow(self.two_power) * &self.factor.pow(self.multiplicity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorEquation {
    pub params: CurveParams,
    pub case: GeneratorCase,
    pub y_exponent: u64,
    pub rhs: IntPolynomial,
    pub rhs_factored: Factored,
    pub differential_denominator: IntPolynomial,
}

pub fn generator_equation(params: &CurveParams) -> GeneratorEquation {
    let (n, m) = (params.n(), params.m());
    let u_minus_2 = IntPolynomial::linear(2);
    let (case, y_exponent, rhs, rhs_factored) = if m % 2 == 1 {
        let rhs = &chebyshev_t(m as usize) - &IntPolynomial::constant(2);
        let q = rhs
            .div_exact(&u_minus_2)
            .and_then(|r| r.sqrt())
            .expect("C_m − 2 = (u − 2)·Q² for odd m");
        let f = Factored {
            two_power: 1,
            factor: q,
            multiplicity: 2,
        };
        (GeneratorCase::MOdd, 2 * n, rhs, f)
    } else {
        let half = chebyshev_t((m / 2) as usize);
        if n % 2 == 1 {
            let rhs = &u_minus_2.pow(n as u32)
                * &(&chebyshev_t(m as usize) + &IntPolynomial::constant(2));
            let f = Factored {
                two_power: n as u32,
                factor: half,
                multiplicity: 2,
            };
            (GeneratorCase::MEvenNOdd, 2 * n, rhs, f)
        } else {
            let rhs = &u_minus_2.pow((n / 2) as u32) * &half;
            let f = Factored {
                two_power: (n / 2) as u32,
                factor: half,
                multiplicity: 1,
            };
            (GeneratorCase::BothEven, n, rhs, f)
        }
    };
    debug_assert_eq!(rhs_factored.expand(), rhs);
    let differential_denominator = &u_minus_2 * &rhs_factored.factor;
    GeneratorEquation {
        params: *params,
        case,
        y_exponent,
        rhs,
        rhs_factored,
        differential_denominator,
    }
}

impl GeneratorEquation {
    /// `(a, b)` with `D² | (u−2)^a · rhs^b`.
    pub fn divisibility_exponents(&self) -> (u32, u32) {
        match self.case {
            GeneratorCase::MOdd | GeneratorCase::MEvenNOdd => (1, 1),
            GeneratorCase::BothEven => (0, 2),
        }
    }

    /// Exact check that `D²` divides `(u−2)^a · rhs^b`.
    pub fn denominator_divides(&self) -> bool {
        let (a, b) = self.divisibility_exponents();
        let target = &IntPolynomial::linear(2).pow(a) * &self.rhs.pow(b);
        self.differential_denominator.pow(2).divides(&target)
    }

    /// `rhs` with `(u − 2)` and its cofactor written as powers.
    pub fn factored_text(&self) -> String {
        let f = &self.rhs_factored;
        let mut s = match f.two_power {
            0 => String::new(),
            1 => "(u - 2)".to_string(),
            k => format!("(u - 2)^{k}"),
        };
        s.push_str(&format!("({})", f.factor.display_in("u")));
        if f.multiplicity > 1 {
            s.push_str(&format!("^{}", f.multiplicity));
        }
        s
    }
}

impl fmt::Display for GeneratorEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^{} = {}", self.y_exponent, self.rhs.display_in("u"))
    }
}

/// The angles `θ_j` of the factors `u − 2cos θ_j` in the product.
pub fn cosine_angles(params: &CurveParams) -> Vec<f64> {
    let m = params.m();
    if m % 2 == 1 {
        (1..=(m - 1) / 2).map(|j| 2.0 * PI * j as f64 / m as f64).collect()
    } else {
        (1..=m / 2).map(|j| PI * (2 * j - 1) as f64 / m as f64).collect()
    }
}

fn cosine_product(params: &CurveParams, u: f64) -> f64 {
    cosine_angles(params).iter().map(|t| u - 2.0 * t.cos()).product()
}

/// The literal product form of the right-hand side, in floating point.
pub fn product_rhs(params: &CurveParams, u: f64) -> f64 {
    let (n, m) = (params.n() as i32, params.m());
    let prod = cosine_product(params, u);
    if m % 2 == 1 {
        (u - 2.0) * prod * prod
    } else if n % 2 == 1 {
        (u - 2.0).powi(n) * prod * prod
    } else {
        (u - 2.0).powi(n / 2) * prod
    }
}

/// The literal product form of `D(u)`, in floating point.
pub fn product_denominator(params: &CurveParams, u: f64) -> f64 {
    (u - 2.0) * cosine_product(params, u)
}

/// `count` rational sample points in `(−5/2, 5/2)` avoiding `0, ±1, ±2`,
/// the only rational values of `2cos(qπ)`.
pub fn sample_points(count: usize) -> Vec<Rational> {
    let count = count.max(1) as i64;
    let mut out = Vec::new();
    let mut k = 0;
    while out.len() < count as usize {
        let u = &Rational::frac(-5, 2) + &Rational::frac(5 * (100 * k + 37), 100 * count);
        k += 1;
        if !u.is_integer() {
            out.push(u);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericCheck {
    pub points: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub holds: bool,
}

fn relative_deviation(exact: &Rational, approx: f64) -> f64 {
    let e = exact.to_f64();
    (e - approx).abs() / e.abs().max(1.0)
}

/// Compares `rhs` and `D` with the product forms at `2·deg + 1` points.
pub fn numeric_check(eq: &GeneratorEquation, tolerance: &Rational) -> Result<NumericCheck> {
    if !tolerance.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let deg = eq.rhs.degree().unwrap_or(0);
    let points = sample_points(2 * deg + 1);
    let max_deviation = points
        .iter()
        .flat_map(|u| {
            let x = u.to_f64();
            [
                relative_deviation(&eq.rhs.eval_rational(u), product_rhs(&eq.params, x)),
                relative_deviation(
                    &eq.differential_denominator.eval_rational(u),
                    product_denominator(&eq.params, x),
                ),
            ]
        })
        .fold(0.0, f64::max);
    let tol = tolerance.to_f64();
    Ok(NumericCheck {
        points: points.len(),
        max_deviation,
        tolerance: tol,
        holds: max_deviation < tol,
    })
}

/// True when the exact equation matches the product forms within `tolerance`.
pub fn verify_equation_numeric(
    eq: &GeneratorEquation,
    params: &CurveParams,
    tolerance: &Rational,
) -> Result<bool> {
    let eq = GeneratorEquation {
        params: *params,
        ..eq.clone()
    };
    Ok(numeric_check(&eq, tolerance)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialDescription {
    pub form: String,
    pub denominator: IntPolynomial,
    pub denominator_factored: String,
    pub divides: String,
    pub exact: bool,
}

/// The one-form `y du / D(u)` with its exact divisibility check.
pub fn differential_description(eq: &GeneratorEquation) -> DifferentialDescription {
    let (a, b) = eq.divisibility_exponents();
    let factored = format!("(u - 2)({})", eq.rhs_factored.factor.display_in("u"));
    let target = match (a, b) {
        (1, 1) => "(u - 2)·rhs".to_string(),
        (0, 2) => "rhs^2".to_string(),
        _ => format!("(u - 2)^{a}·rhs^{b}"),
    };
    DifferentialDescription {
        form: format!("y du / ({})", eq.differential_denominator.display_in("u")),
        denominator: eq.differential_denominator.clone(),
        denominator_factored: factored,
        divides: format!("D(u)^2 | {target}"),
        exact: eq.denominator_divides(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, m: u64) -> CurveParams {
        CurveParams::new(n, m).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().copied())
    }

    fn tol() -> Rational {
        Rational::frac(1, 1_000_000_000)
    }

    #[test]
    fn m_five() {
        let eq = generator_equation(&p(3, 5));
        assert_eq!(eq.case, GeneratorCase::MOdd);
        assert_eq!(eq.y_exponent, 6);
        assert_eq!(eq.rhs, poly(&[-2, 5, 0, -5, 0, 1]));
        assert_eq!(eq.rhs_factored.factor, poly(&[-1, 1, 1]));
        assert_eq!(eq.factored_text(), "(u - 2)(u^2 + u - 1)^2");
        assert_eq!(eq.differential_denominator, &poly(&[-2, 1]) * &poly(&[-1, 1, 1]));
        assert!(numeric_check(&eq, &tol()).unwrap().holds);
    }

    #[test]
    fn three_four() {
        let eq = generator_equation(&p(3, 4));
        assert_eq!(eq.case, GeneratorCase::MEvenNOdd);
        assert_eq!(eq.y_exponent, 6);
        assert_eq!(eq.rhs, &poly(&[-2, 1]).pow(3) * &poly(&[-2, 0, 1]).pow(2));
        assert_eq!(eq.differential_denominator, &poly(&[-2, 1]) * &poly(&[-2, 0, 1]));
        assert!(numeric_check(&eq, &tol()).unwrap().holds);
    }

    #[test]
    fn four_four() {
        let eq = generator_equation(&p(4, 4));
        assert_eq!(eq.case, GeneratorCase::BothEven);
        assert_eq!(eq.y_exponent, 4);
        assert_eq!(eq.rhs, &poly(&[-2, 1]).pow(2) * &poly(&[-2, 0, 1]));
        assert!(numeric_check(&eq, &tol()).unwrap().holds);
    }

    #[test]
    fn m_two_uses_even_case() {
        let eq = generator_equation(&p(3, 2));
        assert_eq!(eq.case, GeneratorCase::MEvenNOdd);
        // C_2 + 2 = u², C_1 = u
        assert_eq!(eq.rhs, &poly(&[-2, 1]).pow(3) * &poly(&[0, 0, 1]));
        assert!(numeric_check(&eq, &tol()).unwrap().holds);
    }

    #[test]
    fn rhs_degrees() {
        for c in CurveParams::grid(16, 16) {
            let eq = generator_equation(&c);
            let (n, m) = (c.n() as usize, c.m() as usize);
            let expected = match eq.case {
                GeneratorCase::MOdd => m,
                GeneratorCase::MEvenNOdd => n + m,
                GeneratorCase::BothEven => n / 2 + m / 2,
            };
            assert_eq!(eq.rhs.degree(), Some(expected), "{c}");
            assert!(eq.rhs.is_monic());
            assert!(eq.denominator_divides(), "{c}");
        }
    }

    #[test]
    fn corrupted_rhs_fails() {
        let mut eq = generator_equation(&p(2, 7));
        let mut coeffs: Vec<i64> = eq.rhs.to_i64_coeffs().unwrap();
        coeffs[1] += 1;
        eq.rhs = IntPolynomial::new(coeffs);
        assert!(!verify_equation_numeric(&eq, &p(2, 7), &tol()).unwrap());
    }

    #[test]
    fn tolerance_must_be_positive() {
        let eq = generator_equation(&p(2, 7));
        assert_eq!(
            numeric_check(&eq, &Rational::zero()),
            Err(Error::NonPositiveTolerance)
        );
    }

    #[test]
    fn differential_text() {
        let d = differential_description(&generator_equation(&p(2, 5)));
        assert_eq!(d.denominator_factored, "(u - 2)(u^2 + u - 1)");
        assert!(d.exact);
        assert_eq!(d.divides, "D(u)^2 | (u - 2)·rhs");
    }

    #[test]
    fn sample_points_avoid_rational_cosines() {
        let pts = sample_points(65);
        assert_eq!(pts.len(), 65);
        assert!(pts.iter().all(|u| !u.is_integer()));
        let mut sorted = pts.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 65);
    }

    #[test]
    fn serializes_coefficients() {
        let eq = generator_equation(&p(4, 4));
        let v = serde_json::to_value(&eq).unwrap();
        assert_eq!(v["rhs"], serde_json::json!([-8, 8, 2, -4, 1]));
        assert_eq!(v["case"], "both_even");
    }
}
