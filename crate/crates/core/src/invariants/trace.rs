use serde::Serialize;

use crate::arith::number::euler_phi;
use crate::arith::{
    generated_subfield_degree, is_prime, CyclotomicElement, CyclotomicField, RootSum,
};
use crate::invariants::spectrum::{genus, is_arithmetic};
use crate::params::CurveParams;

/// Degrees over `Q` of the trace field `F` and invariant trace field `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceDegrees {
    #[serde(rename = "deg_F")]
    pub deg_f: u64,
    #[serde(rename = "deg_E")]
    pub deg_e: u64,
}

/// Closed forms: `deg F = φ(2l)/4` if `γ = 1`, else `φ(2l)/2`; `E = F` when
/// n or m is odd; otherwise `deg E = φ(2l)/2` if `γ > 2` and one of
/// `n/γ, m/γ` is even, else `φ(2l)/4`.
pub fn trace_degrees(params: &CurveParams) -> TraceDegrees {
    let phi = euler_phi(2 * params.lcm());
    let g = params.gamma();
    let deg_f = if g == 1 { phi / 4 } else { phi / 2 };
    let deg_e = if !params.both_even() {
        deg_f
    } else if g > 2 && ((params.n() / g) % 2 == 0 || (params.m() / g) % 2 == 0) {
        phi / 2
    } else {
        phi / 4
    };
    TraceDegrees { deg_f, deg_e }
}

/// Galois-stabilizer computation inside `Q(ξ_{2l})`.
pub fn trace_degrees_oracle(params: &CurveParams) -> TraceDegrees {
    let l = params.lcm() as i64;
    let k = 2 * params.lcm();
    let field = CyclotomicField::new(k);
    let (a, b) = (l / params.n() as i64, l / params.m() as i64);
    let two_cos = |e: i64| RootSum::new(k, [(1, e), (1, -e)]);
    // ξ_{2n} = ξ_{2l}^{l/n}
    let f_gens = [two_cos(a), two_cos(b)];
    let product = RootSum::new(k, [(1, a + b), (1, a - b), (1, b - a), (1, -a - b)]);
    let e_gens = [two_cos(2 * a), two_cos(2 * b), product];
    TraceDegrees {
        deg_f: generated_subfield_degree(&field, &f_gens).0,
        deg_e: generated_subfield_degree(&field, &e_gens).0,
    }
}

/// False exactly when `F` is a quadratic extension of `E`.
pub fn admissible_triangle_group(params: &CurveParams) -> bool {
    let d = trace_degrees(params);
    d.deg_f != 2 * d.deg_e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimitivityVerdict {
    Primitive,
    NotPrimitive,
    /// Arithmetic curves are outside the scope of the criterion.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Primitivity {
    pub verdict: PrimitivityVerdict,
    /// One of n, m is 2 and the other is prime, twice a prime, or a power of two.
    pub criterion: bool,
    pub degree_equals_genus: bool,
}

impl Primitivity {
    /// The two characterizations agree (vacuous for arithmetic curves).
    pub fn consistent(&self) -> bool {
        self.verdict == PrimitivityVerdict::NotApplicable
            || self.criterion == self.degree_equals_genus
    }
}

pub fn primitivity_criterion(params: &CurveParams) -> bool {
    let qualifies = |k: u64| is_prime(k) || (k % 2 == 0 && is_prime(k / 2)) || k.is_power_of_two();
    (params.n() == 2 && qualifies(params.m())) || (params.m() == 2 && qualifies(params.n()))
}

pub fn algebraically_primitive(params: &CurveParams) -> Primitivity {
    let criterion = primitivity_criterion(params);
    let degree_equals_genus = trace_degrees(params).deg_e == genus(params);
    let verdict = if is_arithmetic(params) {
        PrimitivityVerdict::NotApplicable
    } else if criterion && degree_equals_genus {
        PrimitivityVerdict::Primitive
    } else {
        PrimitivityVerdict::NotPrimitive
    };
    Primitivity {
        verdict,
        criterion,
        degree_equals_genus,
    }
}

/// The three scalars `ξ^{a} + ξ^{−a} + ξ^{b} + ξ^{−b}` with
/// `a = p·r₁ + q·r₂`, `b = p·r₂ + q·r₁`, `ξ = ξ_{2nm}`, for
/// `(p, q) ∈ {(1,1), (1,−1), (1,0)}`, and the degree of the field they generate.
#[derive(Clone, Debug)]
pub struct HeckeScalars {
    pub sums: [RootSum; 3],
    pub scalars: [CyclotomicElement; 3],
    pub field_degree: u64,
}

pub const HECKE_PAIRS: [(i64, i64); 3] = [(1, 1), (1, -1), (1, 0)];

pub fn hecke_scalars(params: &CurveParams) -> HeckeScalars {
    let (n, m) = (params.n() as i64, params.m() as i64);
    let k = params.modulus();
    let (r1, r2) = (n * m - n - m, n * m + n - m);
    let sums = HECKE_PAIRS.map(|(p, q)| {
        let (a, b) = (p * r1 + q * r2, p * r2 + q * r1);
        RootSum::new(k, [(1, a), (1, -a), (1, b), (1, -b)])
    });
    let field = CyclotomicField::new(k);
    let (field_degree, _) = generated_subfield_degree(&field, &sums);
    HeckeScalars {
        scalars: [0, 1, 2].map(|i| sums[i].reduce(&field)),
        sums,
        field_degree,
    }
}
