use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::number::divisors;
use crate::error::{Error, Result};
use crate::params::CurveParams;
use crate::rowspan::{defining_rows, row_span, summands, RowVector};

/// Pairs `(n', m') ≠ (n, m)` with `n' | n`, `m' | m`, `n', m' > 1`,
/// `n'm' ≥ 6`, and `n/n' + m/m'` even when n and m are both even.
pub fn covers(params: &CurveParams) -> Vec<CurveParams> {
    let (n, m) = (params.n(), params.m());
    let mut out = Vec::new();
    for a in divisors(n) {
        for b in divisors(m) {
            if (a, b) == (n, m) {
                continue;
            }
            let Ok(small) = CurveParams::new(a, b) else {
                continue;
            };
            if params.both_even() && (n / a + m / b) % 2 == 1 {
                continue;
            }
            out.push(small);
        }
    }
    out
}

/// Evidence that `k` times the row span of `small` lies in that of `big`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub big: CurveParams,
    pub small: CurveParams,
    pub k: u64,
    pub holds: bool,
    /// `k` times each defining row of `small`, read mod `2nm`.
    pub generator_images: [RowVector; 2],
    /// Which images lie in the row span of `big`.
    pub contained: [bool; 2],
}

/// Checks row-span containment after scaling by `k = nm / (n'm')`.
pub fn verify_cover(big: &CurveParams, small: &CurveParams) -> Result<CoverCertificate> {
    let (nm, small_nm) = (big.n() * big.m(), small.n() * small.m());
    if nm % small_nm != 0 {
        return Err(Error::NonDividingCover {
            big: big.to_string(),
            small: small.to_string(),
        });
    }
    let k = nm / small_nm;
    let span = row_span(big);
    let generator_images = defining_rows(small).map(|r| r.lift_scaled(k));
    let contained = generator_images.map(|g| span.binary_search(&g).is_ok());
    Ok(CoverCertificate {
        big: *big,
        small: *small,
        k,
        holds: contained.iter().all(|&c| c),
        generator_images,
        contained,
    })
}

/// Containment oracle: every valid `(n', m') ≠ (n, m)` with `n'm' | nm`
/// whose scaled row span sits inside the row span of `S(n,m)`.
pub fn covers_by_containment(params: &CurveParams) -> Vec<CurveParams> {
    let nm = params.n() * params.m();
    let span = row_span(params);
    let mut out = Vec::new();
    for d in divisors(nm) {
        for a in divisors(d) {
            let b = d / a;
            if (a, b) == (params.n(), params.m()) {
                continue;
            }
            let Ok(small) = CurveParams::new(a, b) else {
                continue;
            };
            let k = nm / d;
            let inside = defining_rows(&small)
                .iter()
                .all(|r| span.binary_search(&r.lift_scaled(k)).is_ok());
            if inside {
                out.push(small);
            }
        }
    }
    out.sort();
    out
}

/// Tiling flag of each summand, in canonical summand order.
pub fn tiling_flags(params: &CurveParams) -> Vec<bool> {
    summands(params).into_iter().map(|s| s.tiling).collect()
}

/// The unit-fraction pairs `(m', n')` with `(μ, ν) = (1/m', 1/n')`.
pub fn tiling_pairs(params: &CurveParams) -> BTreeSet<(u64, u64)> {
    summands(params)
        .into_iter()
        .filter(|s| s.tiling)
        .map(|s| {
            let inv = |q: &crate::arith::Rational| u64::try_from(q.denom().clone()).expect("small");
            (inv(&s.angles.mu), inv(&s.angles.nu))
        })
        .collect()
}
