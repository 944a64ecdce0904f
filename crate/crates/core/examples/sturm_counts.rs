//! Exact real-root counts from Sturm chains, globally and on intervals.

use galprime::sturm::{complex_pair_count, SturmSequence};
use galprime::{parse_polynomial, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> galprime::Result<()> {
    let f: IntPoly = parse_polynomial("x^5 - 4x + 2")?.polynomial;
    let s = SturmSequence::new(&f)?;
    for g in s.chain() {
        println!("  {g}");
    }
    println!("real roots {}, complex pairs {}", s.count_real(), complex_pair_count(&f)?);
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    for (a, b) in [(-3, -1), (-1, 0), (0, 1), (1, 2)] {
        println!("roots in ({a}, {b}]: {}", s.count_in(&q(a), &q(b)));
    }
    Ok(())
}
