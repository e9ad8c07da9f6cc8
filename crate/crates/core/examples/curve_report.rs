// Every invariant of one curve, as a report.
//
// ```text
// cargo run --example curve_report -- 4 6
// ```

use vwbm::invariants::curve_report;
use vwbm::render::report_md;
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    report_for(4, 6)
}

pub fn report_for(n: i64, m: i64) -> vwbm::Result<()> {
    let params = CurveParams::from_signed(n, m)?;
    let report = curve_report(&params);
    assert!(report.consistent());
    print!("{}", report_md(&report));

    // The same data is available field by field.
    println!();
    println!("genus {} with spectrum {:?}", report.genus, report.spectrum);
    println!("uniformized by {}", report.uniformizer);
    Ok(())
}

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let result = match args[..] {
        [n, m] => report_for(n, m),
        _ => run_example(),
    };
    if let Err(e) = result {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
