//! Polynomials with prescribed Galois groups, each followed by its
//! consistency check.

use galprime::realize::{realization_consistency_check, realize_cyclic_nonreal, realize_frobenius, realize_full_frobenius};

fn main() -> galprime::Result<()> {
    let mut results = Vec::new();
    for n in [2, 4, 6, 8, 10] {
        results.push(realize_cyclic_nonreal(n)?);
    }
    for p in [5, 7, 11, 13] {
        results.push(realize_full_frobenius(p)?);
    }
    // a proper subgroup: only the cyclic base is available
    results.push(realize_frobenius(13, 4)?);

    for res in &results {
        print!("{}", res.to_text());
        println!("{}\n", realization_consistency_check(res));
    }
    Ok(())
}
