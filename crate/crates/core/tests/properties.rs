use proptest::prelude::*;
use vwbm::arith::Rational;
use vwbm::invariants::{
    covers, covers_by_containment, curve_report, genus, lyapunov_spectrum, spectrum_unit,
    tiling_pairs, trace_degrees, trace_degrees_oracle,
};
use vwbm::rowspan::{klein_orbit, row_span, summands, t_values};
use vwbm::verify::{check_genus, check_lifts, check_rowspan};
use vwbm::CurveParams;

fn params(max: u64) -> impl Strategy<Value = CurveParams> {
    (2..=max, 2..=max)
        .prop_filter("nm ≥ 6", |(n, m)| n * m >= 6)
        .prop_map(|(n, m)| CurveParams::new(n, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_is_positive_multiples_up_to_one(p in params(40)) {
        let unit = spectrum_unit(&p);
        let s = lyapunov_spectrum(&p);
        prop_assert_eq!(s.len() as u64, genus(&p));
        prop_assert_eq!(s.last(), Some(&Rational::one()));
        for l in &s {
            let k = l / &unit;
            prop_assert!(k.is_integer() && k.is_positive(), "{} / {}", l, unit);
        }
    }

    #[test]
    fn genus_three_ways(p in params(30)) {
        prop_assert_eq!(check_genus(&p), Ok(()));
    }

    #[test]
    fn row_span_identities(p in params(24)) {
        prop_assert_eq!(check_rowspan(&p), Ok(()));
        for r in row_span(&p).iter().filter(|r| !r.has_zero_entry()) {
            prop_assert_eq!(t_values(r).total.clone() + t_values(&r.neg()).total, Rational::from(4));
            prop_assert!(klein_orbit(r).contains(r));
        }
    }

    #[test]
    fn covers_match_containment(p in params(28)) {
        let mut c = covers(&p);
        c.sort();
        prop_assert_eq!(&c, &covers_by_containment(&p));
        let mut flagged: std::collections::BTreeSet<(u64, u64)> = c.iter().map(|s| (s.m(), s.n())).collect();
        flagged.insert((p.m(), p.n()));
        prop_assert_eq!(tiling_pairs(&p), flagged);
    }

    #[test]
    fn covering_is_transitive(p in params(36)) {
        for mid in covers(&p) {
            for small in covers(&mid) {
                prop_assert!(covers(&p).contains(&small), "{} > {} > {}", p, mid, small);
            }
        }
    }

    #[test]
    fn trace_closed_form_matches_oracle(p in params(30)) {
        prop_assert_eq!(trace_degrees(&p), trace_degrees_oracle(&p));
    }

    #[test]
    fn swap_symmetry(p in params(24)) {
        let (a, b) = (curve_report(&p), curve_report(&p.swapped()));
        prop_assert_eq!(a.genus, b.genus);
        prop_assert_eq!(&a.spectrum, &b.spectrum);
        prop_assert_eq!(&a.trace, &b.trace);
        prop_assert!(a.consistent() && b.consistent());
        let mut x: Vec<_> = summands(&p).into_iter().map(|s| (s.lyapunov, s.angles.mu, s.angles.nu)).collect();
        let mut y: Vec<_> = summands(&p.swapped()).into_iter().map(|s| (s.lyapunov, s.angles.nu, s.angles.mu)).collect();
        x.sort();
        y.sort();
        prop_assert_eq!(x, y);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn lifts_beyond_twelve(p in params(18)) {
        prop_assert_eq!(check_lifts(&p, None), Ok(()));
    }
}
