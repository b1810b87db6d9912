//! List good biquadratic side lengths generated by small primitive triangles.
//!
//! ```text
//! cargo run --example atlas -- 12
//! ```

use equidist::cli::atlas_records;
use equidist::engine::{classify, Verdict};
use equidist::theta::Sign;

fn main() {
    let max_side: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let mut count = 0;
    for rec in atlas_records(max_side) {
        let theta = rec.theta(Sign::Plus);
        let cert = classify(&theta, max_side).unwrap();
        assert_eq!(cert.verdict(), Verdict::Good);
        println!("({:>2}, {:>2}, {:>2})  kappa = {:<14} theta = {theta}", rec.a, rec.b, rec.c, rec.kappa.to_string());
        count += 1;
    }
    println!("{count} triangles with longest side <= {max_side}");
}
