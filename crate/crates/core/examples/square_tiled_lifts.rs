// The square-tiled surface S(n,m) and lifts of its Klein symmetries.

use vwbm::square_tiled::{
    build_surface, fixed_edge, lift_class_count, lift_sigma2, sigma4_lifts, surface_genus,
    surface_report,
};
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    for (n, m) in [(3, 4), (4, 6)] {
        let p = CurveParams::new(n, m)?;
        let s = build_surface(&p);
        println!(
            "S{p}: {} squares, column span of order {}, genus {}",
            s.square_count(),
            s.column_span().len(),
            surface_genus(&s)
        );
        println!("  columns {:?}", s.column_span().columns());

        let s2 = lift_sigma2(&s);
        let first = s.square(0);
        println!("  σ̃₂ sends {first} to {}", s2.apply(&s, first));
        for lift in sigma4_lifts(&s) {
            let edge = fixed_edge(&s, &lift).map(|(q, e)| format!("{q} edge {e:?}"));
            println!("  {:?} sends {first} to {}, fixes {}", lift.kind, lift.apply(&s, first), edge.unwrap_or_default());
        }
        println!("  {} lift class(es) of σ₄", lift_class_count(&s));

        let report = surface_report(&p);
        println!("  all lemma checks hold: {}", report.all_hold());
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
