//! The input grammar accepts rational coefficients, products and powers; the
//! polynomial is cleared to a primitive integer one and the scale recorded.

use galprime::parse_polynomial;

fn main() {
    for text in ["x^5 - 4x + 2", "(1/2)x^5 - x/3 + 1", "2(x - 1)^3(x + 1)^2 + 6", "x^5 + y", "x^ + 1"] {
        match parse_polynomial(text) {
            Ok(e) => println!("{text:<28} -> {}   (scale {})", e.polynomial, e.scale),
            Err(e) => println!("{text:<28} -> error: {e}"),
        }
    }
}
