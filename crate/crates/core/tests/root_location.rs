//! The square-free factor of each generator right-hand side splits over
//! the reals with roots in [−2, 2].

use num_complex::Complex64;
use proptest::prelude::*;
use vwbm::generators::generator_equation;
use vwbm::CurveParams;

/// Durand–Kerner on a monic integer polynomial, coefficients lowest first.
fn roots(coeffs: &[i64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let p = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32) * 1.5).collect();
    for _ in 0..500 {
        let prev = z.clone();
        for i in 0..deg {
            let zi = z[i];
            let denom: Complex64 = (0..deg).filter(|&j| j != i).map(|j| zi - z[j]).product();
            z[i] = zi - p(zi) / denom;
        }
        if z.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-14) {
            break;
        }
    }
    z
}

fn check(n: u64, m: u64) -> Result<(), TestCaseError> {
    let eq = generator_equation(&CurveParams::new(n, m).unwrap());
    let coeffs = eq.rhs_factored.factor.to_i64_coeffs().expect("small coefficients");
    let mut found = roots(&coeffs);
    prop_assert_eq!(found.len(), coeffs.len() - 1);
    found.sort_by(|a, b| a.re.total_cmp(&b.re));
    for (i, z) in found.iter().enumerate() {
        prop_assert!(z.im.abs() < 1e-8, "T({},{}): root {} not real", n, m, z);
        prop_assert!(z.re.abs() < 2.0 + 1e-9, "T({},{}): root {} outside [−2, 2]", n, m, z);
        if i > 0 {
            prop_assert!(z.re - found[i - 1].re > 1e-6, "T({},{}): repeated root", n, m);
        }
    }
    Ok(())
}

#[test]
fn small_cases() {
    for p in CurveParams::grid(12, 16) {
        check(p.n(), p.m()).unwrap();
    }
}

proptest! {
    #[test]
    fn factor_roots_are_real_and_bounded(n in 2u64..30, m in 3u64..30) {
        prop_assume!(n * m >= 6);
        check(n, m)?;
    }
}
