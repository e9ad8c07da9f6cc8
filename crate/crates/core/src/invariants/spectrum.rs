use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::Rational;
use crate::params::CurveParams;
use crate::rowspan::summands;

/// Lyapunov exponents of `T(n,m)` in ascending order, one per summand.
pub fn lyapunov_spectrum(params: &CurveParams) -> Vec<Rational> {
    let mut out: Vec<Rational> = summands(params).into_iter().map(|s| s.lyapunov).collect();
    out.sort();
    out
}

/// Closed-form genus of `T(n,m)`.
pub fn genus(params: &CurveParams) -> u64 {
    let (n, m, g) = (params.n() as i64, params.m() as i64, params.gamma() as i64);
    let base = (n - 1) * (m - 1);
    let (num, den) = if n % 2 == 1 || m % 2 == 1 {
        (base + 1 - g, 2)
    } else if (n / g) % 2 == 1 && (m / g) % 2 == 1 {
        (base + 3 - 2 * g, 4)
    } else {
        (base + 3 - g, 4)
    };
    debug_assert_eq!(num % den, 0, "genus is an integer for ({n},{m})");
    (num / den) as u64
}

/// The spacing `γ/(nm − n − m)` of which every exponent is a multiple.
pub fn spectrum_unit(params: &CurveParams) -> Rational {
    let (n, m) = (params.n() as i64, params.m() as i64);
    Rational::frac(params.gamma() as i64, n * m - n - m)
}

const ARITHMETIC: [(u64, u64); 6] = [(2, 3), (2, 4), (2, 6), (3, 3), (4, 4), (6, 6)];

pub fn is_arithmetic(params: &CurveParams) -> bool {
    let (n, m) = (params.n(), params.m());
    ARITHMETIC.contains(&(n, m)) || ARITHMETIC.contains(&(m, n))
}

/// Uniformizing group of `T(n,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Uniformizer {
    /// `Δ⁺(a, b, ∞)`.
    Triangle(u64, u64),
    /// An index-two subgroup of `Δ⁺(a, b, ∞)`.
    IndexTwoSubgroup(u64, u64),
    /// `Δ⁺(a, ∞, ∞)`.
    TwoCusped(u64),
}

impl fmt::Display for Uniformizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Uniformizer::Triangle(a, b) => write!(f, "Delta({a},{b},∞)"),
            Uniformizer::IndexTwoSubgroup(a, b) => write!(f, "IndexTwoSubgroup(Delta({a},{b},∞))"),
            Uniformizer::TwoCusped(a) => write!(f, "Delta({a},∞,∞)"),
        }
    }
}

impl Serialize for Uniformizer {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Zeros of the generating differential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Zeros {
    pub count: u64,
    /// `None` where equality of orders is not asserted.
    pub equal_order: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub arithmetic: bool,
    pub uniformizer: Uniformizer,
    pub zeros: Zeros,
}

pub fn classify(params: &CurveParams) -> Classification {
    let (n, m, g) = (params.n(), params.m(), params.gamma());
    let uniformizer = match (n == m, params.both_even()) {
        (false, false) => Uniformizer::Triangle(n, m),
        (false, true) => Uniformizer::IndexTwoSubgroup(n, m),
        (true, false) => Uniformizer::Triangle(2, n),
        (true, true) => Uniformizer::TwoCusped(n / 2),
    };
    let zeros = if n == m && n % 2 == 0 {
        Zeros {
            count: g / 2,
            equal_order: None,
        }
    } else {
        Zeros {
            count: g,
            equal_order: Some(true),
        }
    };
    Classification {
        arithmetic: is_arithmetic(params),
        uniformizer,
        zeros,
    }
}
