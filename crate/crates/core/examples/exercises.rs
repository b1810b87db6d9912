//! Run the six closing exercises and print a pass/fail table.

use equidist::cli::run_exercises;
use equidist::engine::DEFAULT_BOUND;

fn main() {
    for o in run_exercises(DEFAULT_BOUND) {
        println!("{} {}  {}", if o.passed { "PASS" } else { "FAIL" }, o.number, o.title);
        for d in o.details {
            println!("       {d}");
        }
    }
}
