//! Canonical forms of side-length expressions.

use equidist::theta::parse_theta;

fn main() {
    for expr in [
        "sqrt(12)",
        "sqrt(2/3)",
        "2*sqrt(25+12*sqrt(3))",
        "sqrt(7/2 + 1/2*sqrt(13))",
        "qroot(16)",
        "1 + qroot(2)",
        "sqrt(sqrt(5))",
        "sqrt(2 - 3)",
        "sqrt(7",
    ] {
        match parse_theta(expr) {
            Ok(t) => println!("{expr:<26} -> {t:<26} degree {}", t.degree()),
            Err(e) => println!("{expr:<26} -> error: {e}"),
        }
    }
}
