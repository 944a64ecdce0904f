//! Gaussian periods of prime conductor and their minimal polynomials. When
//! `(q - 1) / n` is odd the period is not real, so the degree-`n` cyclic
//! field it generates is not totally real.

use galprime::cyclotomic::{gaussian_period, minimal_polynomial};
use galprime::numtheory::{is_prime_u64, primitive_root};
use galprime::sturm::count_real_roots;

fn main() -> galprime::Result<()> {
    for q in (3..=31u64).filter(|&q| is_prime_u64(q)) {
        let m = primitive_root(q)?;
        for n in (2..q).filter(|n| (q - 1) % n == 0) {
            let period = gaussian_period(q, n, m)?;
            let poly = minimal_polynomial(&period, n, m)?;
            let real = count_real_roots(&poly)?;
            let odd = ((q - 1) / n) % 2 == 1;
            println!(
                "q={q:<2} n={n:<2} index {}  real period {:<5} real roots {real:>2}/{n:<2}  {poly}",
                if odd { "odd " } else { "even" },
                period.is_real(),
            );
        }
    }
    Ok(())
}
