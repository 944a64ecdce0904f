// Sample Frobenius cycle types for a septic and watch the candidate groups
// shrink as evidence accumulates.

use std::collections::BTreeMap;

use galprime::reduction::{factor_degrees_mod_p, identify_group, FactorPattern, IdentifyOptions, PrimeSource};
use galprime::numtheory::primes_from;
use galprime::{discriminant, is_perfect_square, parse_polynomial};

fn main() -> galprime::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x^7 - 7x + 3".into());
    let f = parse_polynomial(&text)?.polynomial;
    let square = is_perfect_square(&discriminant(&f)?);
    println!("{text}: discriminant is {}a square", if square { "" } else { "not " });

    let mut seen = BTreeMap::new();
    for ell in primes_from(2).take(60) {
        match factor_degrees_mod_p(&f, ell) {
            Ok(FactorPattern::CycleType(t)) => *seen.entry(t).or_insert(0) += 1,
            Ok(FactorPattern::SquarefreeFailure) | Err(_) => println!("  skip {ell}"),
        }
    }
    for (t, n) in &seen {
        println!("  {n:>3} x {t}");
    }

    for budget in [1, 3, 10, 100] {
        let opts = IdentifyOptions { prime_budget: budget, primes: PrimeSource::Ascending };
        let id = identify_group(&f, square, &opts)?;
        println!("budget {budget:>3}: {}", id.verdict);
    }
    Ok(())
}
