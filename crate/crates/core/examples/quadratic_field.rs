//! Exact arithmetic and sign determination in `Q(sqrt d)`.

use std::cmp::Ordering;

use equidist::engine::{certified_sqrt, fundamental_relation_holds};
use equidist::exactnum::{QuadExt, Rat};

fn main() {
    let theta_sq: QuadExt = "25 + 12*sqrt(3)".parse().unwrap();
    println!("theta^2 = {theta_sq}, norm = {}", theta_sq.norm());
    println!("theta^4 = {}", theta_sq.square());
    println!("theta   ~ {}", certified_sqrt(&theta_sq, 30));

    // 3(a^4 + b^4 + c^4 + θ^4) and (a^2 + b^2 + c^2 + θ^2)^2 for (3, 4, 5)
    let lhs = theta_sq.square().add_rat(&Rat::from(81 + 256 + 625)).scale(&Rat::from(3));
    let rhs = theta_sq.add_rat(&Rat::from(9 + 16 + 25)).square();
    println!("both sides: {lhs} / {rhs}");
    let (a, b, c) = (Rat::from(3), Rat::from(4), Rat::from(5));
    assert!(fundamental_relation_holds(&a, &b, &c, &theta_sq));

    // Exact sign of a number very close to zero: 3363 - 2378*sqrt(2) ~ 1.5e-4
    let tiny = QuadExt::new(Rat::from(3363), Rat::from(-2378), 2).unwrap();
    assert_eq!(tiny.sign(), Ordering::Greater);
    println!("{tiny} is positive (~ {})", tiny.approx(12));
}
