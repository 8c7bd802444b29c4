//! Factor integers from the rotor scan. Pass numbers on the command line
//! or run with no arguments for a default list.

use gauss_factor::rotor::extract_factors;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let inputs = if args.is_empty() {
        vec![21, 15, 17, 40, 65, 1001, 9797]
    } else {
        args
    };
    for n in inputs {
        let report = extract_factors(n)?;
        let factors: Vec<String> = report
            .factors()
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        let tag = if report.is_prime() { " (prime)" } else { "" };
        println!("{n} = {}{tag}", factors.join(" * "));
        for ev in &report.evidence {
            println!("    row n = {:<4} gcd = {:<4} seen in the {} part", ev.n, ev.d, ev.part);
        }
    }
    Ok(())
}
