// Covering relations between curves, with row-span certificates.

use vwbm::invariants::{covers, covers_by_containment, verify_cover};
use vwbm::CurveParams;

pub fn run_example() -> vwbm::Result<()> {
    let big = CurveParams::new(2, 24)?;
    let mut list = covers(&big);
    list.sort();
    println!("T{big} covers:");
    for small in &list {
        let cert = verify_cover(&big, small)?;
        println!(
            "  T{small}  k = {:<2} images {} {}  contained {:?}",
            cert.k, cert.generator_images[0], cert.generator_images[1], cert.contained
        );
        assert!(cert.holds);
    }

    for small in [(2, 12), (2, 6)] {
        let small = CurveParams::new(small.0, small.1)?;
        let cert = verify_cover(&big, &small)?;
        println!("T{small}: contained {:?}, not covered", cert.contained);
    }

    // Divisibility-and-parity agrees with brute-force containment.
    let grid = CurveParams::grid(12, 12);
    let agree = grid
        .iter()
        .filter(|p| {
            let mut c = covers(p);
            c.sort();
            c == covers_by_containment(p)
        })
        .count();
    println!("criterion = containment on {agree}/{} pairs with n, m ≤ 12", grid.len());
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
