//! Classify a handful of quintics and septics, printing the full report for
//! the first and a one-line summary for the rest.
//!
//! ```text
//! cargo run --example classify_quintic -- "x^7 - 7x + 3"
//! ```

use galprime::{classify, parse_polynomial, ClassifyOptions};

fn main() -> galprime::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["x^5 - 4x + 2", "x^5 - 5x + 12", "x^5 + 20x + 16", "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1", "x^7 - 7x + 3"]
            .map(String::from)
            .to_vec();
    }
    for (i, text) in inputs.iter().enumerate() {
        let expr = parse_polynomial(text)?;
        let report = classify(&expr.polynomial, &ClassifyOptions::default())?;
        if i == 0 {
            print!("{}", report.to_text());
            println!();
        } else {
            println!("{text:<36} r={} k={}  {:?}  {}", report.r, report.k, report.branch, report.verdict);
        }
    }
    Ok(())
}
