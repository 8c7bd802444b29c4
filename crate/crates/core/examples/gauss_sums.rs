//! Exact Gauss sums against direct summation.

use gauss_factor::gauss::{gauss_closed, gauss_direct};

fn main() -> gauss_factor::Result<()> {
    println!(
        "{:>4} {:>5}  {:<14} {:>22}  {:>9}",
        "a", "b", "closed", "direct", "|error|"
    );
    for (a, b) in [(1, 5), (1, 7), (2, 7), (3, 21), (5, 15), (-1, 11), (0, 9), (4, 1001)] {
        let exact = gauss_closed(a, b)?;
        let sum = gauss_direct(a, b)?;
        let err = (sum - exact.to_complex()).norm();
        println!(
            "{a:>4} {b:>5}  {:<14} {:>10.6} {:+.6}i  {err:>9.1e}",
            exact.to_string(),
            sum.re,
            sum.im
        );
    }
    // Even moduli have no closed form here.
    let g = gauss_direct(1, 8)?;
    println!("G(1, 8) = {:.6} {:+.6}i (direct only)", g.re, g.im);
    Ok(())
}
