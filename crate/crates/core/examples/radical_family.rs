//! `x^p - a` has exactly one real root and, for `a` not a `p`-th power, the
//! full Frobenius group of order `p(p-1)`.

use galprime::{classify, ClassifyOptions, IntPoly};

fn main() -> galprime::Result<()> {
    let opts = ClassifyOptions::default();
    for p in [5usize, 7, 11, 13] {
        for a in [2i64, 3, 6] {
            let f = IntPoly::binomial(p, &(-a).into());
            let r = classify(&f, &opts)?;
            println!(
                "x^{p} - {a:<2} real roots {}  group {:<8} {:?}  ({} primes sampled)",
                r.r,
                r.verdict.to_string(),
                r.solvability,
                r.evidence.len()
            );
        }
    }
    Ok(())
}
