//! Build an output record by hand and print it in every format.

use gauss_factor::output::{float, Format, OutputRecord};
use gauss_factor::rotor::scan;
use serde_json::Value;

fn main() -> gauss_factor::Result<()> {
    let mut rec = OutputRecord::new("scan", &["n", "mod2", "gcd"]);
    rec.param("n", 9u64);
    for row in scan(9)? {
        rec.push_row([
            ("n", Value::from(row.n)),
            ("mod2", float(row.mod2)),
            ("gcd", Value::from(row.d)),
        ]);
    }
    for format in [Format::Table, Format::Csv, Format::Json] {
        println!("--- {format:?}");
        print!("{}", rec.render(format));
    }
    Ok(())
}
