// Algebraic curves and one-forms generating T(n,m), checked numerically.

use vwbm::arith::Rational;
use vwbm::generators::{differential_description, generator_equation, numeric_check};
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    let tol = Rational::frac(1, 1_000_000_000);
    for (n, m) in [(2, 7), (3, 6), (4, 4), (5, 8)] {
        let p = CurveParams::new(n, m)?;
        let eq = generator_equation(&p);
        let form = differential_description(&eq);
        let check = numeric_check(&eq, &tol)?;
        println!("T{p} [{:?}]", eq.case);
        println!("  {eq}");
        println!("  = y^{} = {}", eq.y_exponent, eq.factored_text());
        println!("  ω = {}, {}: {}", form.form, form.divides, form.exact);
        println!(
            "  product-of-cosines check at {} points: max deviation {:.3e}",
            check.points, check.max_deviation
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
