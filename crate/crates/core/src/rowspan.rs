//! The defining matrix of `S(n,m)`, its row span in `(Z/2nmZ)^4`, t-values,
//! and the summands of the H¹ decomposition with their triangle angles.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::arith::{Rational, Residue};
use crate::error::{Error, Result};
pub use crate::params::CurveParams;

/// An element `(r₁, r₂, r₃, r₄)` of `(Z/NZ)^4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowVector {
    entries: [u64; 4],
    modulus: u64,
}

impl RowVector {
    pub fn new(entries: [i64; 4], modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let k = modulus as i64;
        Ok(RowVector {
            entries: entries.map(|e| e.rem_euclid(k) as u64),
            modulus,
        })
    }

    pub fn zero(modulus: u64) -> Self {
        RowVector {
            entries: [0; 4],
            modulus,
        }
    }

    pub fn entries(&self) -> [u64; 4] {
        self.entries
    }

    pub fn entry(&self, j: usize) -> Residue {
        Residue::from_reduced(self.entries[j], self.modulus)
    }

    pub fn residues(&self) -> [Residue; 4] {
        [0, 1, 2, 3].map(|j| self.entry(j))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.entries == [0; 4]
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.contains(&0)
    }

    pub fn add(&self, other: &RowVector) -> Result<RowVector> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &RowVector) -> RowVector {
        let mut entries = self.entries;
        for (e, o) in entries.iter_mut().zip(other.entries) {
            *e = (*e + o) % self.modulus;
        }
        RowVector {
            entries,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> RowVector {
        RowVector {
            entries: self.entries.map(|e| (self.modulus - e) % self.modulus),
            modulus: self.modulus,
        }
    }

    /// Multiplies every entry by `k`, reducing into `(Z/(k·N)Z)^4`.
    pub fn lift_scaled(&self, k: u64) -> RowVector {
        RowVector {
            entries: self.entries.map(|e| e * k),
            modulus: self.modulus * k,
        }
    }
}

impl fmt::Debug for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "({a}, {b}, {c}, {d}) mod {}", self.modulus)
    }
}

impl fmt::Display for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for RowVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// The two rows of the defining matrix, reduced mod `N = 2nm`.
pub fn defining_matrix(params: &CurveParams) -> [[Residue; 4]; 2] {
    defining_rows(params).map(|r| r.residues())
}

/// The rows of [`defining_matrix`] as row vectors.
pub fn defining_rows(params: &CurveParams) -> [RowVector; 2] {
    let (n, m) = (params.n() as i64, params.m() as i64);
    let nm = n * m;
    let big = params.modulus();
    let row = |e| RowVector::new(e, big).expect("positive modulus");
    [
        row([nm - n - m, nm + n - m, nm + n + m, nm - n + m]),
        row([nm + n - m, nm - n - m, nm - n + m, nm + n + m]),
    ]
}

/// The subgroup generated by `gens`, sorted lexicographically.
pub(crate) fn span_of(gens: &[RowVector], modulus: u64) -> Vec<RowVector> {
    let cap = (modulus as u128 * modulus as u128) as usize;
    let zero = RowVector::zero(modulus);
    let mut seen: HashSet<RowVector> = HashSet::from([zero]);
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = v.add_unchecked(g);
            if seen.insert(w) {
                assert!(seen.len() <= cap, "row span exceeded N² elements");
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<RowVector> = seen.into_iter().collect();
    out.sort();
    out
}

/// The row span of `S(n,m)`, without duplicates, sorted lexicographically.
pub fn row_span(params: &CurveParams) -> Vec<RowVector> {
    span_of(&defining_rows(params), params.modulus())
}

/// `t_j(r) = {r_j / N}` and their sum `t(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TValues {
    pub t: [Rational; 4],
    pub total: Rational,
}

pub fn t_values(r: &RowVector) -> TValues {
    let big = r.modulus() as i64;
    let t = r.entries.map(|e| Rational::frac(e as i64, big));
    let total = t.iter().cloned().sum();
    TValues { t, total }
}

/// A triangle angle triple in units of π.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Angles {
    pub kappa: Rational,
    pub mu: Rational,
    pub nu: Rational,
}

impl Angles {
    pub fn new(kappa: Rational, mu: Rational, nu: Rational) -> Self {
        Angles { kappa, mu, nu }
    }

    pub fn sum(&self) -> Rational {
        &(&self.kappa + &self.mu) + &self.nu
    }

    /// True when `μ = 1/m'` and `ν = 1/n'`.
    pub fn is_tiling(&self) -> bool {
        self.mu.is_unit_fraction() && self.nu.is_unit_fraction()
    }
}

impl fmt::Display for Angles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.kappa, self.mu, self.nu)
    }
}

/// A selected representative `r` with its angle data and Lyapunov exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub r: RowVector,
    pub angles: Angles,
    pub lyapunov: Rational,
    pub tiling: bool,
}

/// `κ = |1−t₁−t₃|`, `μ = |1−t₂−t₃|`, `ν = |1−t₁−t₂|` with `t_i = t_i(−r)`.
pub fn angles_of(r: &RowVector) -> Angles {
    let [t1, t2, t3, _] = t_values(&r.neg()).t;
    let one = Rational::one();
    let defect = |a: &Rational, b: &Rational| (&(&one - a) - b).abs();
    Angles::new(defect(&t1, &t3), defect(&t2, &t3), defect(&t1, &t2))
}

/// `2·min_j min(t_j(−r), 1 − t_j(−r)) / (1 − 1/n − 1/m)`.
pub fn lyapunov_exponent(params: &CurveParams, r: &RowVector) -> Rational {
    let one = Rational::one();
    let closest = t_values(&r.neg())
        .t
        .into_iter()
        .map(|t| {
            let other = &one - &t;
            t.min(other)
        })
        .min()
        .expect("four entries");
    let area = &(&one - &Rational::frac(1, params.n() as i64)) - &Rational::frac(1, params.m() as i64);
    &(&Rational::from(2) * &closest) / &area
}

/// True when `r` indexes a nonzero summand, i.e. `t(r) = 2 = t(−r)`.
pub fn is_nonzero_summand(r: &RowVector) -> bool {
    let two = Rational::from(2);
    t_values(r).total == two && t_values(&r.neg()).total == two
}

/// True when `t₁(r)` strictly exceeds `t₂(r)`, `t₃(r)`, `t₄(r)`.
pub fn is_selected(r: &RowVector) -> bool {
    let [a, b, c, d] = r.entries;
    a > b && a > c && a > d
}

/// Orders summands by descending exponent, then ascending `(μ, ν)`.
pub fn canonical_order(a: &Summand, b: &Summand) -> std::cmp::Ordering {
    b.lyapunov
        .cmp(&a.lyapunov)
        .then_with(|| (&a.angles.mu, &a.angles.nu).cmp(&(&b.angles.mu, &b.angles.nu)))
        .then_with(|| a.r.cmp(&b.r))
}

/// One summand per selected row-span vector without zero entries.
pub fn summands(params: &CurveParams) -> Vec<Summand> {
    let mut out: Vec<Summand> = row_span(params)
        .into_iter()
        .filter(|r| !r.has_zero_entry() && is_selected(r))
        .map(|r| {
            debug_assert!(is_nonzero_summand(&r));
            let angles = angles_of(&r);
            Summand {
                lyapunov: lyapunov_exponent(params, &r),
                tiling: angles.is_tiling(),
                angles,
                r,
            }
        })
        .collect();
    out.sort_by(canonical_order);
    out
}

/// The Klein four group acting on the pillowcase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KleinElement {
    Id,
    Sigma2,
    Sigma3,
    Sigma4,
}

impl KleinElement {
    pub const ALL: [KleinElement; 4] = [
        KleinElement::Id,
        KleinElement::Sigma2,
        KleinElement::Sigma3,
        KleinElement::Sigma4,
    ];

    /// Image index of each coordinate.
    fn permutation(self) -> [usize; 4] {
        match self {
            KleinElement::Id => [0, 1, 2, 3],
            KleinElement::Sigma2 => [1, 0, 3, 2],
            KleinElement::Sigma4 => [3, 2, 1, 0],
            KleinElement::Sigma3 => [2, 3, 0, 1],
        }
    }

    pub fn compose(self, other: KleinElement) -> KleinElement {
        let (p, q) = (self.permutation(), other.permutation());
        let composite = [0, 1, 2, 3].map(|i| p[q[i]]);
        KleinElement::ALL
            .into_iter()
            .find(|k| k.permutation() == composite)
            .expect("Klein group is closed")
    }
}

pub fn klein_action(r: &RowVector, element: KleinElement) -> RowVector {
    let p = element.permutation();
    RowVector {
        entries: p.map(|i| r.entries[i]),
        modulus: r.modulus,
    }
}

/// The distinct images of `r` under the Klein group, sorted.
pub fn klein_orbit(r: &RowVector) -> Vec<RowVector> {
    let mut orbit: Vec<RowVector> = KleinElement::ALL.iter().map(|&k| klein_action(r, k)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// `t(r) + t(−r) − 2` when no entry vanishes, otherwise 0.
pub fn summand_dimension(r: &RowVector) -> Result<u64> {
    if r.is_zero() {
        return Err(Error::ZeroRowVector);
    }
    if r.has_zero_entry() {
        return Ok(0);
    }
    let d = &(&t_values(r).total + &t_values(&r.neg()).total) - &Rational::from(2);
    debug_assert!(d.is_integer() && !d.numer().sign().eq(&num_bigint::Sign::Minus));
    Ok(u64::try_from(d.floor()).expect("dimension is a small nonnegative integer"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u64, m: u64) -> CurveParams {
        CurveParams::new(n, m).unwrap()
    }

    fn rv(e: [i64; 4], k: u64) -> RowVector {
        RowVector::new(e, k).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn defining_matrix_examples() {
        let vals = |p| defining_matrix(&p).map(|row| row.map(|r| r.value()));
        assert_eq!(vals(params(2, 7)), [[5, 9, 23, 19], [9, 5, 19, 23]]);
        assert_eq!(vals(params(2, 3)), [[1, 5, 11, 7], [5, 1, 7, 11]]);
        assert_eq!(vals(params(3, 2)), [[1, 7, 11, 5], [7, 1, 5, 11]]);
        assert_eq!(vals(params(4, 5)), [[11, 19, 29, 21], [19, 11, 21, 29]]);
    }

    #[test]
    fn span_of_2_7() {
        let span = row_span(&params(2, 7));
        assert!(span.contains(&RowVector::zero(28)));
        assert!(span.contains(&rv([7, 7, 21, 21], 28)));
        assert!(span.contains(&rv([2, 26, 26, 2], 28)));
        assert!(span.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn span_size_matches_lattice_index() {
        // The span is Z² / kernel; count (a, b) ∈ (Z/N)² modulo the relation lattice.
        for (n, m) in [(2, 7), (2, 3), (4, 4), (3, 6), (6, 10)] {
            let p = params(n, m);
            let [g1, g2] = defining_rows(&p);
            let big = p.modulus();
            let mut images = HashSet::new();
            for a in 0..big {
                for b in 0..big {
                    let v = g1.lift_scaled(1);
                    let w = RowVector {
                        entries: [0, 1, 2, 3].map(|j| (a * v.entries[j] + b * g2.entries[j]) % big),
                        modulus: big,
                    };
                    images.insert(w);
                }
            }
            assert_eq!(row_span(&p).len(), images.len(), "({n},{m})");
        }
    }

    #[test]
    fn t_value_examples() {
        let r = rv([5, 9, 23, 19], 28).neg();
        let tv = t_values(&r);
        assert_eq!(tv.t, [q(23, 28), q(19, 28), q(5, 28), q(9, 28)]);
        assert_eq!(tv.total, Rational::from(2));
        let z = t_values(&RowVector::zero(28));
        assert_eq!(z.total, Rational::zero());
        let half = t_values(&rv([14; 4], 28));
        assert!(half.t.iter().all(|t| *t == q(1, 2)));
        assert_eq!(half.total, Rational::from(2));
    }

    fn triples(p: &CurveParams) -> Vec<(Rational, Rational, Rational)> {
        let mut v: Vec<_> = summands(p)
            .into_iter()
            .map(|s| (s.angles.kappa, s.angles.mu, s.angles.nu))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn summands_2_7() {
        let z = Rational::zero();
        let expected = vec![
            (z.clone(), q(1, 7), q(1, 2)),
            (z.clone(), q(2, 7), q(1, 2)),
            (z, q(3, 7), q(1, 2)),
        ];
        assert_eq!(triples(&params(2, 7)), expected);
        let lyap: Vec<_> = summands(&params(2, 7)).into_iter().map(|s| s.lyapunov).collect();
        assert_eq!(lyap, vec![q(1, 1), q(3, 5), q(1, 5)]);
    }

    #[test]
    fn summands_4_5() {
        let z = Rational::zero();
        let mut expected = vec![
            (z.clone(), q(1, 5), q(3, 4)),
            (z.clone(), q(2, 5), q(1, 2)),
            (z.clone(), q(3, 5), q(1, 4)),
            (z.clone(), q(1, 5), q(1, 2)),
            (z.clone(), q(2, 5), q(1, 4)),
            (z, q(1, 5), q(1, 4)),
        ];
        expected.sort();
        assert_eq!(triples(&params(4, 5)), expected);
    }

    #[test]
    fn summands_8_8_has_nine() {
        assert_eq!(summands(&params(8, 8)).len(), 9);
    }

    #[test]
    fn first_row_summand_is_top() {
        let s = &summands(&params(2, 7))[0];
        assert_eq!(s.lyapunov, Rational::one());
        assert_eq!(s.angles, Angles::new(Rational::zero(), q(1, 7), q(1, 2)));
        assert_eq!(s.r, defining_rows(&params(2, 7))[0].neg());
    }

    #[test]
    fn klein_examples() {
        let r = rv([5, 9, 23, 19], 28);
        assert_eq!(klein_action(&r, KleinElement::Sigma2), rv([9, 5, 19, 23], 28));
        assert_eq!(klein_action(&r, KleinElement::Sigma4), rv([19, 23, 9, 5], 28));
        let s3 = klein_action(&r, KleinElement::Sigma3);
        assert_eq!(
            s3,
            klein_action(&klein_action(&r, KleinElement::Sigma4), KleinElement::Sigma2)
        );
        assert_eq!(klein_action(&s3, KleinElement::Sigma3), r);
        assert_eq!(
            KleinElement::Sigma2.compose(KleinElement::Sigma4),
            KleinElement::Sigma3
        );
        for k in KleinElement::ALL {
            assert_eq!(k.compose(k), KleinElement::Id);
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(summand_dimension(&defining_rows(&params(2, 7))[0]), Ok(2));
        assert_eq!(summand_dimension(&rv([7, 7, 21, 21], 28)), Ok(2));
        assert_eq!(summand_dimension(&rv([0, 14, 0, 14], 28)), Ok(0));
        assert_eq!(summand_dimension(&RowVector::zero(28)), Err(Error::ZeroRowVector));
    }

    #[test]
    fn mixed_modulus_rejected() {
        assert!(rv([1, 2, 3, 4], 12).add(&rv([1, 2, 3, 4], 28)).is_err());
    }

    #[test]
    fn t_identities_on_span() {
        for p in CurveParams::grid(12, 12) {
            for r in row_span(&p) {
                if r.has_zero_entry() {
                    continue;
                }
                let [t1, t2, t3, t4] = t_values(&r).t;
                assert_eq!(&t1 + &t3, Rational::one(), "{p} {r}");
                assert_eq!(&t2 + &t4, Rational::one(), "{p} {r}");
                assert!(is_nonzero_summand(&r), "{p} {r}");
            }
        }
    }

    #[test]
    fn zero_entry_vectors_are_not_summands() {
        // t(r) = 2 = t(−r) holds exactly when no entry vanishes.
        for p in CurveParams::grid(12, 12) {
            for r in row_span(&p).into_iter().filter(|r| !r.is_zero()) {
                assert_eq!(is_nonzero_summand(&r), !r.has_zero_entry(), "{p} {r}");
            }
        }
    }

    #[test]
    fn selection_picks_one_per_klein_orbit() {
        for p in CurveParams::grid(12, 12) {
            let span = row_span(&p);
            let mut orbits: HashSet<Vec<RowVector>> = HashSet::new();
            for r in span.iter().filter(|r| !r.has_zero_entry()) {
                let orbit = klein_orbit(r);
                assert!(orbit.iter().all(|o| span.binary_search(o).is_ok()));
                let chosen = orbit.iter().filter(|o| is_selected(o)).count();
                match orbit.len() {
                    4 => assert_eq!(chosen, 1, "{p} {r}"),
                    _ => assert_eq!(chosen, 0, "{p} {r}"),
                }
                orbits.insert(orbit);
            }
            let big_orbits = orbits.iter().filter(|o| o.len() == 4).count();
            assert_eq!(big_orbits, summands(&p).len(), "{p}");
        }
    }

    #[test]
    fn klein_fixed_vector_is_excluded() {
        for p in CurveParams::grid(12, 12) {
            let nm = (p.n() * p.m()) as i64;
            let fixed = rv([nm; 4], p.modulus());
            if row_span(&p).contains(&fixed) {
                assert!(!is_selected(&fixed));
                assert_eq!(klein_orbit(&fixed).len(), 1);
                assert!(summands(&p).iter().all(|s| s.r != fixed));
            }
        }
    }

    #[test]
    fn angle_sanity() {
        for p in CurveParams::grid(12, 12) {
            for s in summands(&p) {
                let a = &s.angles;
                assert!(a.kappa.is_zero(), "{p}");
                assert!(a.mu.is_positive() && a.mu < Rational::one());
                assert!(a.nu.is_positive() && a.nu < Rational::one());
                assert!((&a.mu * &Rational::from(p.m() as i64)).is_integer());
                assert!((&a.nu * &Rational::from(p.n() as i64)).is_integer());
            }
        }
    }
}
