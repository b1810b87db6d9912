//! Classify a handful of side lengths and print verdicts with their reasons.
//!
//! ```text
//! cargo run --example classify -- 'sqrt(21)' '2*sqrt(13)'
//! ```

use equidist::engine::{classify, DEFAULT_BOUND};
use equidist::theta::parse_theta;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["3/2", "sqrt(3)", "sqrt(10)", "sqrt(25+12*sqrt(3))", "sqrt(1+sqrt(2))", "1+qroot(2)", "sqrt(4+sqrt(2))"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for expr in &inputs {
        let theta = match parse_theta(expr) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{expr}: {e}");
                continue;
            }
        };
        match classify(&theta, DEFAULT_BOUND) {
            Ok(cert) => {
                let dist =
                    cert.distances().map(|d| format!("  distances ({}, {}, {})", d[0], d[1], d[2])).unwrap_or_default();
                println!("{:<28} {:<9} {}{dist}", cert.theta.to_string(), cert.verdict().as_str(), cert.reason_code());
            }
            Err(e) => eprintln!("{expr}: {e}"),
        }
    }
}
