//! Rotor autocorrelation at integer times for N = 21 and N = 15.
//!
//! For 21 = 3 * 7 the rows sharing a factor are purely imaginary, for
//! 15 = 3 * 5 the rows with gcd 3 are real.

use gauss_factor::rotor::scan;

fn main() -> gauss_factor::Result<()> {
    for modulus in [21u64, 15] {
        println!("N = {modulus}");
        for row in scan(modulus)? {
            let bar = "#".repeat((row.mod2 * modulus as f64).round() as usize);
            let class = row.classification.map_or("-", |c| c.label());
            println!(
                "  n = {:>2}  re = {:+.4}  im = {:+.4}  gcd = {:>2}  {:<5} {bar}",
                row.n, row.re, row.im, row.d, class
            );
        }
    }
    Ok(())
}
