//! Cross-module verification sweeps over `(n, m)` grids.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{chebyshev_t, IntPolynomial, Rational};
use crate::generators::{generator_equation, numeric_check, GeneratorCase};
use crate::invariants::{
    covers, covers_by_containment, genus, lyapunov_spectrum, spectrum_unit, tiling_pairs,
    trace_degrees, trace_degrees_oracle, algebraically_primitive, hecke_scalars,
    admissible_triangle_group,
};
use crate::params::CurveParams;
use crate::rowspan::{
    angles_of, defining_rows, is_nonzero_summand, is_selected, klein_orbit, row_span, summands,
    t_values, Angles,
};
use crate::square_tiled::{
    build_surface, check_lift, genus_from_dimensions, lift_class_count, lift_sigma2,
    sigma4_lifts, surface_genus, LiftKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rowspan,
    Genus,
    Spectrum,
    Trace,
    Covers,
    Lifts,
    Generators,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Rowspan,
        Suite::Genus,
        Suite::Spectrum,
        Suite::Trace,
        Suite::Covers,
        Suite::Lifts,
        Suite::Generators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rowspan => "rowspan",
            Suite::Genus => "genus",
            Suite::Spectrum => "spectrum",
            Suite::Trace => "trace",
            Suite::Covers => "covers",
            Suite::Lifts => "lifts",
            Suite::Generators => "generators",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `full`, or a single suite as `<suite>-only`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Full,
    Only(Suite),
}

impl Level {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Level::Full => Suite::ALL.to_vec(),
            Level::Only(s) => vec![s],
        }
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "full" {
            return Ok(Level::Full);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| s.strip_suffix("-only") == Some(suite.name()))
            .map(Level::Only)
            .ok_or_else(|| {
                let names: Vec<String> = Suite::ALL.iter().map(|s| format!("{s}-only")).collect();
                format!("unknown level {s:?}; expected full or one of {}", names.join(", "))
            })
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Full => f.write_str("full"),
            Level::Only(s) => write!(f, "{s}-only"),
        }
    }
}

/// A deliberate defect, for exercising the failure path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Composes every σ̃₄ with `T₁`.
    Sigma4Shift,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sigma4-shift" => Ok(Fault::Sigma4Shift),
            _ => Err(format!("unknown fault {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub checked: usize,
    pub passed: bool,
    /// Named counterexamples, sorted by parameters.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub nmax: u64,
    pub level: String,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

/// Builds a rayon pool honoring `VWBM_THREADS`.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("VWBM_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
    {
        builder = builder.num_threads(k);
    }
    builder.build().expect("thread pool")
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_rowspan(p: &CurveParams) -> Check {
    let span = row_span(p);
    let one = Rational::one();
    let mut orbits: HashSet<Vec<_>> = HashSet::new();
    for r in &span {
        if r.is_zero() {
            continue;
        }
        ensure(is_nonzero_summand(r) == !r.has_zero_entry(), || {
            format!("{p}: t(r) = 2 = t(−r) disagrees with the no-zero-entry test at {r}")
        })?;
        if r.has_zero_entry() {
            continue;
        }
        let [t1, t2, t3, t4] = t_values(r).t;
        ensure(&t1 + &t3 == one && &t2 + &t4 == one, || {
            format!("{p}: t₁ + t₃ or t₂ + t₄ ≠ 1 at {r}")
        })?;
        let orbit = klein_orbit(r);
        let chosen = orbit.iter().filter(|o| is_selected(o)).count();
        let expected = if orbit.len() == 4 { 1 } else { 0 };
        ensure(chosen == expected, || {
            format!("{p}: Klein orbit of {r} (size {}) has {chosen} selected members", orbit.len())
        })?;
        orbits.insert(orbit);
    }
    for s in summands(p) {
        let a = &s.angles;
        let ok = a.kappa.is_zero()
            && a.mu.is_positive()
            && a.mu < one
            && a.nu.is_positive()
            && a.nu < one
            && (&a.mu * &Rational::from(p.m() as i64)).is_integer()
            && (&a.nu * &Rational::from(p.n() as i64)).is_integer();
        ensure(ok, || format!("{p}: angle triple {a} out of range at {}", s.r))?;
    }
    Ok(())
}

/// `½ Σ dim H¹(r)` over a transversal of the size-four Klein orbits.
pub fn genus_from_klein_transversal(p: &CurveParams) -> u64 {
    let mut seen: HashSet<Vec<_>> = HashSet::new();
    let mut total = 0;
    for r in row_span(p).into_iter().filter(|r| !r.is_zero()) {
        let orbit = klein_orbit(&r);
        if orbit.len() == 4 && seen.insert(orbit) {
            total += crate::rowspan::summand_dimension(&r).expect("nonzero");
        }
    }
    total / 2
}

pub fn check_genus(p: &CurveParams) -> Check {
    let closed = genus(p);
    let count = summands(p).len() as u64;
    let transversal = genus_from_klein_transversal(p);
    ensure(closed == count && count == transversal, || {
        format!("{p}: closed form {closed}, summand count {count}, transversal {transversal}")
    })?;
    let s = build_surface(p);
    let (rh, dims) = (surface_genus(&s), genus_from_dimensions(p));
    ensure(rh == dims, || format!("{p}: Riemann–Hurwitz g(S) = {rh}, dimension sum gives {dims}"))
}

pub fn check_spectrum(p: &CurveParams) -> Check {
    let unit = spectrum_unit(p);
    let one = Rational::one();
    for l in lyapunov_spectrum(p) {
        let k = &l / &unit;
        ensure(k.is_integer() && k.is_positive(), || {
            format!("{p}: exponent {l} is not a positive multiple of {unit}")
        })?;
    }
    let area = &(&one - &Rational::frac(1, p.n() as i64)) - &Rational::frac(1, p.m() as i64);
    let all = summands(p);
    for s in &all {
        let defect = &(&one - &s.angles.sum()) / &area;
        ensure(defect == s.lyapunov, || {
            format!("{p}: area ratio {defect} ≠ exponent {} at {}", s.lyapunov, s.r)
        })?;
    }
    let top = all.first().map(|s| (&s.lyapunov, &s.angles, s.r));
    let first_row = defining_rows(p)[0].neg();
    let expected = Angles::new(
        Rational::zero(),
        Rational::frac(1, p.m() as i64),
        Rational::frac(1, p.n() as i64),
    );
    ensure(
        top == Some((&one, &expected, first_row)) && angles_of(&first_row) == expected,
        || format!("{p}: top summand is not the first-row triple with exponent 1"),
    )
}

pub fn check_trace(p: &CurveParams) -> Check {
    let closed = trace_degrees(p);
    let oracle = trace_degrees_oracle(p);
    ensure(closed == oracle, || {
        format!("{p}: closed form {closed:?} ≠ stabilizer oracle {oracle:?}")
    })?;
    let g = p.gamma();
    let stated = p.both_even() && (g == 2 || ((p.n() / g) % 2 == 1 && (p.m() / g) % 2 == 1));
    ensure(stated == !admissible_triangle_group(p), || {
        format!("{p}: inadmissibility set disagrees with deg F = 2 deg E")
    })?;
    let prim = algebraically_primitive(p);
    ensure(prim.consistent(), || {
        format!(
            "{p}: primitivity criterion {} but deg E = genus is {}",
            prim.criterion, prim.degree_equals_genus
        )
    })?;
    let hecke = hecke_scalars(p).field_degree;
    ensure(hecke == closed.deg_e, || {
        format!("{p}: Hecke scalars generate degree {hecke}, deg E = {}", closed.deg_e)
    })
}

pub fn check_covers(p: &CurveParams) -> Check {
    let mut crit = covers(p);
    crit.sort();
    let oracle = covers_by_containment(p);
    ensure(crit == oracle, || {
        format!("{p}: criterion {crit:?} ≠ containment {oracle:?}")
    })?;
    let mut expected: std::collections::BTreeSet<(u64, u64)> =
        crit.iter().map(|s| (s.m(), s.n())).collect();
    expected.insert((p.m(), p.n()));
    let found = tiling_pairs(p);
    ensure(found == expected, || {
        format!("{p}: tiling (m', n') pairs {found:?} ≠ covers {expected:?}")
    })
}

pub fn check_lifts(p: &CurveParams, fault: Option<Fault>) -> Check {
    let s = build_surface(p);
    let s2 = lift_sigma2(&s);
    let mut fours = sigma4_lifts(&s);
    if fault == Some(Fault::Sigma4Shift) {
        let c = s.column_span().column(1);
        fours = fours.iter().map(|l| l.then_translate(&s, c)).collect();
    }
    let mut lifts = vec![check_lift(&s, &s2, &s2)];
    lifts.extend(fours.iter().map(|l| check_lift(&s, l, &s2)));
    for c in &lifts {
        let name = match c.lift {
            LiftKind::Sigma2 => "σ̃₂".to_string(),
            LiftKind::Sigma4 { variant } => format!("σ̃₄ (variant {variant})"),
        };
        let named = [
            ("involution", &c.involution),
            ("commutation with σ̃₂", &c.commutes_with_sigma2),
            ("column relations", &c.column_relations),
            ("general relations", &c.general_relations),
            ("cylinder preservation", &c.cylinders),
        ];
        let failed: Vec<String> = named
            .iter()
            .filter(|(_, cert)| !cert.holds)
            .map(|(what, cert)| {
                let at = cert.witness.map(|w| w.to_string()).unwrap_or_default();
                format!("{what} at square {at}")
            })
            .collect();
        ensure(failed.is_empty(), || format!("{p}: {name} fails {}", failed.join(", ")))?;
        ensure(c.fixed_edge.is_some(), || format!("{p}: {name} fixes no edge"))?;
    }
    let classes = lift_class_count(&s);
    let expected = if p.both_even() { 2 } else { 1 };
    ensure(classes == expected, || {
        format!("{p}: {classes} lift classes, expected {expected}")
    })
}

pub fn check_generators(p: &CurveParams) -> Check {
    let eq = generator_equation(p);
    let m = p.m() as usize;
    let two = IntPolynomial::constant(2);
    let u_minus_2 = IntPolynomial::linear(2);
    match eq.case {
        GeneratorCase::MOdd => {
            let q = &eq.rhs_factored.factor;
            let lhs = &chebyshev_t(m) - &two;
            ensure(lhs == &u_minus_2 * &q.pow(2) && q.degree() == Some((m - 1) / 2), || {
                format!("{p}: C_m − 2 ≠ (u − 2)·Q²")
            })?;
        }
        _ => {
            let half = chebyshev_t(m / 2);
            ensure(&chebyshev_t(m) + &two == half.pow(2), || {
                format!("{p}: C_m + 2 ≠ C_(m/2)²")
            })?;
            if eq.case == GeneratorCase::BothEven {
                let squared = eq.rhs.pow(2);
                let odd_form = &u_minus_2.pow(p.n() as u32) * &(&chebyshev_t(m) + &two);
                ensure(squared == odd_form, || {
                    format!("{p}: squared both-even rhs ≠ (u − 2)^n (C_m + 2)")
                })?;
            }
        }
    }
    ensure(eq.denominator_divides(), || format!("{p}: D(u)² does not divide the target"))?;
    let check = numeric_check(&eq, &Rational::frac(1, 1_000_000_000)).expect("positive tolerance");
    ensure(check.holds, || {
        format!("{p}: product form deviates by {:.3e}", check.max_deviation)
    })
}

fn run_check(suite: Suite, p: &CurveParams, fault: Option<Fault>) -> Check {
    match suite {
        Suite::Rowspan => check_rowspan(p),
        Suite::Genus => check_genus(p),
        Suite::Spectrum => check_spectrum(p),
        Suite::Trace => check_trace(p),
        Suite::Covers => check_covers(p),
        Suite::Lifts => check_lifts(p, fault),
        Suite::Generators => check_generators(p),
    }
}

/// Runs one suite over every valid pair with `n, m ≤ nmax`.
pub fn run_suite(suite: Suite, nmax: u64, fault: Option<Fault>) -> SuiteResult {
    let grid = CurveParams::grid(nmax, nmax);
    let mut failures: Vec<String> = grid
        .par_iter()
        .filter_map(|p| run_check(suite, p, fault).err())
        .collect();
    failures.sort();
    SuiteResult {
        suite,
        checked: grid.len(),
        passed: failures.is_empty(),
        failures,
    }
}

pub fn verify(nmax: u64, level: Level, fault: Option<Fault>) -> VerifyReport {
    let pool = thread_pool();
    let suites: Vec<SuiteResult> = pool.install(|| {
        level
            .suites()
            .into_iter()
            .map(|s| run_suite(s, nmax, fault))
            .collect()
    });
    VerifyReport {
        nmax,
        level: level.to_string(),
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
