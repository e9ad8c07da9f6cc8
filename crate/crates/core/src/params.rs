use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted modulus `N = 2nm`.
const MAX_MODULUS: u64 = 1 << 31;

/// A validated pair `(n, m)` with `n, m > 1` and `nm ≥ 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveParams {
    n: u64,
    m: u64,
}

impl CurveParams {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n <= 1 || m <= 1 || n.saturating_mul(m) < 6 {
            return Err(Error::InvalidParams { n, m });
        }
        match n.checked_mul(m).and_then(|p| p.checked_mul(2)) {
            Some(big) if big <= MAX_MODULUS => Ok(CurveParams { n, m }),
            _ => Err(Error::ParamsOverflow { n, m }),
        }
    }

    /// Parses signed input, mapping anything below 2 to `InvalidParams`.
    pub fn from_signed(n: i64, m: i64) -> Result<Self> {
        let clamp = |v: i64| if v < 0 { 0 } else { v as u64 };
        CurveParams::new(clamp(n), clamp(m))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `N = 2nm`.
    pub fn modulus(&self) -> u64 {
        2 * self.n * self.m
    }

    /// `γ = gcd(n, m)`.
    pub fn gamma(&self) -> u64 {
        self.n.gcd(&self.m)
    }

    /// `l = lcm(n, m)`.
    pub fn lcm(&self) -> u64 {
        self.n.lcm(&self.m)
    }

    pub fn swapped(&self) -> CurveParams {
        CurveParams {
            n: self.m,
            m: self.n,
        }
    }

    pub fn both_even(&self) -> bool {
        self.n % 2 == 0 && self.m % 2 == 0
    }

    /// All valid pairs with `2 ≤ n ≤ nmax`, `2 ≤ m ≤ mmax`, row-major.
    pub fn grid(nmax: u64, mmax: u64) -> Vec<CurveParams> {
        (2..=nmax)
            .flat_map(|n| (2..=mmax).filter_map(move |m| CurveParams::new(n, m).ok()))
            .collect()
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

impl Serialize for CurveParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CurveParams", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("N", &self.modulus())?;
        st.serialize_field("gamma", &self.gamma())?;
        st.serialize_field("l", &self.lcm())?;
        st.end()
    }
}
