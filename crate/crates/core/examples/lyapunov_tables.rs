// Lyapunov tables: summand angle triples and exponents, plus a CSV round trip.

use vwbm::arith::Rational;
use vwbm::render::{lyapunov_table, parse_tables_csv, tables_csv, tables_md};
use vwbm::rowspan::{defining_rows, summands, t_values};
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    let p = CurveParams::new(3, 8)?;

    let [r1, r2] = defining_rows(&p);
    println!("S{p}: rows {r1} and {r2}");

    // Each summand is picked out by a row-span vector r.
    for s in summands(&p) {
        let t = t_values(&s.r);
        println!(
            "r = {}  t = {}  angles {}  λ = {}{}",
            s.r,
            t.total,
            s.angles,
            s.lyapunov,
            if s.tiling { "  (tiles)" } else { "" }
        );
    }
    println!();

    let mut tables = Vec::new();
    for (n, m) in [(2, 7), (3, 8), (8, 8)] {
        tables.push(lyapunov_table(&CurveParams::new(n, m)?));
    }
    print!("{}", tables_md(&tables));

    let csv = tables_csv(&tables);
    let back = parse_tables_csv(&csv).expect("CSV written above parses");
    assert_eq!(back.len(), tables.iter().map(|t| t.rows.len()).sum::<usize>());
    let total: Rational = back.iter().map(|r| r.lyapunov.clone()).sum();
    println!("\n{} CSV rows round-trip exactly; exponents sum to {total}", back.len());
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
