// Trace-field degrees, Hecke scalars and algebraic primitivity.

use vwbm::invariants::{
    admissible_triangle_group, algebraically_primitive, genus, hecke_scalars, trace_degrees,
    trace_degrees_oracle, PrimitivityVerdict,
};
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    println!("{:>8} {:>5} {:>5} {:>5} {:>6} {:>10}  verdict", "curve", "deg F", "deg E", "genus", "Hecke", "admissible");
    for (n, m) in [(2, 7), (2, 16), (3, 5), (4, 6), (6, 10), (8, 12), (5, 9)] {
        let p = CurveParams::new(n, m)?;
        let d = trace_degrees(&p);
        assert_eq!(d, trace_degrees_oracle(&p));
        let hecke = hecke_scalars(&p);
        let prim = algebraically_primitive(&p);
        println!(
            "{:>8} {:>5} {:>5} {:>5} {:>6} {:>10}  {:?}",
            format!("T({n},{m})"),
            d.deg_f,
            d.deg_e,
            genus(&p),
            hecke.field_degree,
            admissible_triangle_group(&p),
            prim.verdict
        );
    }

    let primitive: Vec<String> = CurveParams::grid(20, 20)
        .iter()
        .filter(|p| p.n() <= p.m())
        .filter(|p| algebraically_primitive(p).verdict == PrimitivityVerdict::Primitive)
        .map(|p| p.to_string())
        .collect();
    println!("\nalgebraically primitive with n ≤ m ≤ 20: {}", primitive.join(" "));

    let h = hecke_scalars(&CurveParams::new(3, 4)?);
    for s in &h.sums {
        println!("Hecke scalar for T(3,4): {:?}", s.terms());
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
