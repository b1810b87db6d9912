//! Construct rational-distance points: exactly for `λ sqrt(q)`, numerically
//! with a certified error bound for biquadratic sides.

use equidist::engine::{classify, lemma2_witness, lemma4_point, DEFAULT_BOUND};
use equidist::exactnum::{QuadExt, Rat};
use equidist::numtheory::represent_q;
use equidist::theta::parse_theta;
use num_bigint::BigUint;

fn main() {
    // θ = sqrt(7): 7 = 2^2 + 3*1^2 gives the point directly.
    let rep = represent_q(&BigUint::from(7u32)).unwrap();
    let w = lemma2_witness(&Rat::one(), &rep).unwrap();
    println!("sqrt(7): 7 = {}^2 + 3*{}^2, e = {}, r = {}, s = {}", rep.x(), rep.y(), w.e, w.r, w.s);
    println!("  distances {:?}, point {:?}", w.distances, w.point);

    // θ^2 = 25 + 12 sqrt(3): the point at distances (3, 4, 5).
    let theta_sq = QuadExt::new(Rat::from(25), Rat::from(12), 3).unwrap();
    let d = [Rat::from(3), Rat::from(4), Rat::from(5)];
    let p = lemma4_point(&d[0], &d[1], &d[2], &theta_sq).unwrap();
    let shown = p.render(40);
    println!("sqrt(25 + 12 sqrt 3): M ~ ({}, {})", shown.x, shown.y);
    let worst = p.residuals(&d, &theta_sq, 50).into_iter().map(|r| r.to_f64()).fold(0.0, f64::max);
    println!("  largest |distance - target| at 50 digits: {worst:e}");

    // The same through a certificate.
    let cert = classify(&parse_theta("2*sqrt(13)").unwrap(), DEFAULT_BOUND).unwrap();
    println!("2*sqrt(13): {:?}", cert.witness_point().unwrap().unwrap());
}
