//! Curve-level invariants of `T(n,m)` and the aggregate [`CurveReport`].

pub mod covers;
pub mod spectrum;
pub mod trace;

use serde::Serialize;

pub use covers::{
    covers, covers_by_containment, tiling_flags, tiling_pairs, verify_cover, CoverCertificate,
};
pub use spectrum::{
    classify, genus, is_arithmetic, lyapunov_spectrum, spectrum_unit, Classification, Uniformizer,
    Zeros,
};
pub use trace::{
    admissible_triangle_group, algebraically_primitive, hecke_scalars, primitivity_criterion,
    trace_degrees, trace_degrees_oracle, HeckeScalars, Primitivity, PrimitivityVerdict,
    TraceDegrees,
};

use crate::arith::Rational;
use crate::generators::{
    differential_description, generator_equation, DifferentialDescription, GeneratorEquation,
};
use crate::params::CurveParams;
use crate::rowspan::{summands, Summand};

pub const SCHEMA: &str = "vwbm-report/1";

/// One summand as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandRow {
    pub kappa: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub lyapunov: Rational,
    pub tiling: bool,
}

impl From<&Summand> for SummandRow {
    fn from(s: &Summand) -> Self {
        SummandRow {
            kappa: s.angles.kappa.clone(),
            mu: s.angles.mu.clone(),
            nu: s.angles.nu.clone(),
            lyapunov: s.lyapunov.clone(),
            tiling: s.tiling,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceSection {
    #[serde(rename = "deg_F")]
    pub deg_f: u64,
    #[serde(rename = "deg_E")]
    pub deg_e: u64,
    pub admissible_triangle_group: bool,
    pub hecke_field_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSection {
    pub equation: String,
    pub factored: String,
    #[serde(flatten)]
    pub data: GeneratorEquation,
    pub differential: DifferentialDescription,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub schema: &'static str,
    pub params: CurveParams,
    pub genus: u64,
    pub spectrum: Vec<Rational>,
    pub summands: Vec<SummandRow>,
    pub arithmetic: bool,
    pub uniformizer: Uniformizer,
    pub zeros: Zeros,
    pub covers: Vec<CurveParams>,
    pub trace: TraceSection,
    pub primitivity: Primitivity,
    pub algebraically_primitive: bool,
    pub generator: GeneratorSection,
    pub notes: Vec<String>,
}

fn notes(params: &CurveParams) -> Vec<String> {
    let (n, m) = (params.n(), params.m());
    let mut out = vec![
        format!("T({n},{m}) = T({m},{n}); all invariants agree under the swap"),
        "covers lists (n',m') whose row span, scaled by nm/(n'm'), lies in the row span of \
         S(n,m); S(n,m) is the covering surface"
            .to_string(),
    ];
    for (a, b) in [(n, m), (m, n)] {
        if a == 2 {
            out.push(format!(
                "T(2,{b}) is the Veech Teichmüller curve of the regular {b}-gon"
            ));
        }
        if a == 3 {
            out.push(format!(
                "T(3,{b}) is the Ward Teichmüller curve of billiards in the triangle with \
                 angles π/{}, π/{b}, {}π/{}",
                2 * b,
                2 * b - 3,
                2 * b
            ));
        }
        if a == b {
            break;
        }
    }
    if n == m && n % 2 == 0 {
        out.push(format!(
            "the generating differential has γ/2 = {} zeros; equality of their orders is not asserted",
            params.gamma() / 2
        ));
    }
    out
}

/// Computes every invariant of `T(n,m)`.
pub fn curve_report(params: &CurveParams) -> CurveReport {
    let rows: Vec<SummandRow> = summands(params).iter().map(SummandRow::from).collect();
    let class = classify(params);
    let degrees = trace_degrees(params);
    let primitivity = algebraically_primitive(params);
    let eq = generator_equation(params);
    let mut cov = covers(params);
    cov.sort();
    CurveReport {
        schema: SCHEMA,
        params: *params,
        genus: genus(params),
        spectrum: lyapunov_spectrum(params),
        summands: rows,
        arithmetic: class.arithmetic,
        uniformizer: class.uniformizer,
        zeros: class.zeros,
        covers: cov,
        trace: TraceSection {
            deg_f: degrees.deg_f,
            deg_e: degrees.deg_e,
            admissible_triangle_group: admissible_triangle_group(params),
            hecke_field_degree: hecke_scalars(params).field_degree,
        },
        algebraically_primitive: primitivity.verdict == PrimitivityVerdict::Primitive,
        primitivity,
        generator: GeneratorSection {
            equation: eq.to_string(),
            factored: eq.factored_text(),
            differential: differential_description(&eq),
            data: eq,
        },
        notes: notes(params),
    }
}

impl CurveReport {
    /// Internal consistency of the report.
    pub fn consistent(&self) -> bool {
        self.genus as usize == self.spectrum.len()
            && self.genus as usize == self.summands.len()
            && self.primitivity.consistent()
            && self.trace.hecke_field_degree == self.trace.deg_e
            && (self.algebraically_primitive
                == (!self.arithmetic && self.trace.deg_e == self.genus))
    }
}

impl Uniformizer {
    /// The same group with its finite indices sorted.
    pub fn normalized(self) -> Uniformizer {
        match self {
            Uniformizer::Triangle(a, b) => Uniformizer::Triangle(a.min(b), a.max(b)),
            Uniformizer::IndexTwoSubgroup(a, b) => Uniformizer::IndexTwoSubgroup(a.min(b), a.max(b)),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_2_7() {
        let r = curve_report(&CurveParams::new(2, 7).unwrap());
        assert_eq!(r.genus, 3);
        let spectrum: Vec<String> = r.spectrum.iter().map(|q| q.to_string()).collect();
        assert_eq!(spectrum, vec!["1/5", "3/5", "1"]);
        assert!(r.consistent());
        assert!(r.algebraically_primitive);
        assert!(r.notes.iter().any(|n| n.contains("regular 7-gon")));
    }

    #[test]
    fn report_json_shape() {
        let r = curve_report(&CurveParams::new(3, 3).unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["arithmetic"], true);
        assert_eq!(v["uniformizer"], "Delta(2,3,∞)");
        assert_eq!(v["primitivity"]["verdict"], "not_applicable");
        for key in ["params", "genus", "spectrum", "summands", "covers", "trace", "primitivity", "generator"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let row = &v["summands"][0];
        for key in ["kappa", "mu", "nu", "lyapunov", "tiling"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn swap_invariance() {
        for p in CurveParams::grid(12, 12) {
            let (a, b) = (curve_report(&p), curve_report(&p.swapped()));
            assert_eq!(a.genus, b.genus, "{p}");
            assert_eq!(a.spectrum, b.spectrum, "{p}");
            assert_eq!(a.arithmetic, b.arithmetic);
            assert_eq!(a.uniformizer.normalized(), b.uniformizer.normalized(), "{p}");
            assert_eq!(a.zeros, b.zeros);
            let mut swapped: Vec<CurveParams> = b.covers.iter().map(|c| c.swapped()).collect();
            swapped.sort();
            assert_eq!(a.covers, swapped, "{p}");
            assert_eq!(a.trace, b.trace, "{p}");
            assert_eq!(a.primitivity.verdict, b.primitivity.verdict);
            let mut ta: Vec<_> = a.summands.iter().map(|s| (&s.lyapunov, &s.mu, &s.nu)).collect();
            let mut tb: Vec<_> = b.summands.iter().map(|s| (&s.lyapunov, &s.nu, &s.mu)).collect();
            ta.sort();
            tb.sort();
            assert_eq!(ta, tb, "{p}");
            assert!(a.consistent() && b.consistent(), "{p}");
        }
    }
}
