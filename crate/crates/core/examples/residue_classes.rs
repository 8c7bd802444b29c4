//! Jacobi symbols and the `4s + 1` / `4s + 3` split of odd integers.

use gauss_factor::numtheory::{brute_factor, jacobi, residue_class};

fn main() -> gauss_factor::Result<()> {
    for b in [5u64, 7, 15, 21] {
        let symbols: Vec<String> = (1..b as i64)
            .map(|a| jacobi(a, b).map(|j| format!("{j:+}")))
            .collect::<gauss_factor::Result<_>>()?;
        println!(
            "{:<12} {:>2} = {:<8} jacobi(a, {b}) for a = 1..{}: {}",
            residue_class(b)?.to_string(),
            b,
            brute_factor(b)?,
            b - 1,
            symbols.join(" ")
        );
    }
    Ok(())
}
