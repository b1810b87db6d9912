//! Hand-derived reference values for every public operation.

use std::cmp::Ordering;

use equidist::engine::{
    classify, fundamental_relation_holds, lemma2_witness, lemma4_point, triangle_inequality_filter, verify_certificate,
    Evidence, Filter, Verdict, WitnessPoint,
};
use equidist::exactnum::{is_rational_square, squarefree_decompose, QuadExt, Rat};
use equidist::numtheory::{
    compose_reps, factorize, good_squarefree, legendre, represent_prime, represent_q, sqrt_mod,
    three_square_admissible, FormRep,
};
use equidist::theta::{parse_theta, rescale, Sign, ThetaClass};
use equidist::triangles::{enumerate_primitive, make_triangle, search_by_kappa, TriangleError};
use num_bigint::{BigInt, BigUint};

fn u(n: u64) -> BigUint {
    BigUint::from(n)
}

fn r(n: i64) -> Rat {
    Rat::from(n)
}

fn q(a: i64, b: i64, d: i64) -> QuadExt {
    QuadExt::new(r(a), r(b), d).unwrap()
}

fn rep(x: i64, y: i64, n: i64) -> FormRep {
    FormRep::new(x, y, n).unwrap()
}

#[test]
fn squarefree_decomposition() {
    assert_eq!(squarefree_decompose(&u(1)).unwrap(), (u(1), u(1)));
    assert_eq!(squarefree_decompose(&u(12)).unwrap(), (u(2), u(3)));
    assert_eq!(squarefree_decompose(&u(147)).unwrap(), (u(7), u(3)));
}

#[test]
fn rational_squares() {
    assert_eq!(is_rational_square(&r(0)), Some(r(0)));
    assert_eq!(is_rational_square(&Rat::new(50, 2)), Some(r(5)));
    assert_eq!(is_rational_square(&Rat::new(1, 2)), None);
}

#[test]
fn quadratic_field_arithmetic() {
    assert_eq!(q(25, 12, 3).square(), q(1057, 600, 3));
    let x = q(4, -7, 5);
    assert!(x.sub(&x).unwrap().is_zero());
    assert_eq!(q(1, 1, 2).mul(&q(1, -1, 2)).unwrap(), QuadExt::rational(r(-1)));
}

#[test]
fn quadratic_field_signs() {
    assert_eq!(q(43, -24, 3).sign(), Ordering::Greater);
    assert_eq!(QuadExt::zero().sign(), Ordering::Equal);
    assert_eq!(q(1, -1, 2).sign(), Ordering::Less);
}

#[test]
fn theta_parsing() {
    assert_eq!(parse_theta("2*sqrt(7)").unwrap(), ThetaClass::QuadSurd { lambda: r(2), q: BigInt::from(7) });
    assert_eq!(
        parse_theta("sqrt(25+12*sqrt(3))").unwrap(),
        ThetaClass::Biquadratic { alpha: r(25), sign: Sign::Plus, beta: r(432) }
    );
    assert_eq!(parse_theta("sqrt(12)").unwrap(), ThetaClass::QuadSurd { lambda: r(2), q: BigInt::from(3) });
    match parse_theta("1 + qroot(2)").unwrap() {
        ThetaClass::NonBiquadratic(f) => assert!(!f.has_zero_alpha()),
        other => panic!("{other:?}"),
    }
    match parse_theta("sqrt(sqrt(5))").unwrap() {
        ThetaClass::NonBiquadratic(f) => assert!(f.has_zero_alpha()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn theta_rescaling() {
    let s3 = ThetaClass::QuadSurd { lambda: r(1), q: BigInt::from(3) };
    assert_eq!(rescale(&s3, &r(2)), ThetaClass::QuadSurd { lambda: r(2), q: BigInt::from(3) });
    let b = ThetaClass::Biquadratic { alpha: r(25), sign: Sign::Plus, beta: r(432) };
    assert_eq!(
        rescale(&b, &Rat::new(1, 5)),
        ThetaClass::Biquadratic { alpha: r(1), sign: Sign::Plus, beta: Rat::new(432, 625) }
    );
    assert_eq!(
        rescale(&ThetaClass::RationalSide { lambda: r(3) }, &Rat::new(1, 3)),
        ThetaClass::RationalSide { lambda: r(1) }
    );
}

#[test]
fn factorizations() {
    let f = |n: u64| factorize(&u(n)).unwrap().as_slice().iter().map(|(p, e)| (p.clone(), *e)).collect::<Vec<_>>();
    assert_eq!(f(12), vec![(u(2), 2), (u(3), 1)]);
    assert_eq!(f(1001), vec![(u(7), 1), (u(11), 1), (u(13), 1)]);
    assert_eq!(f(10403), vec![(u(101), 1), (u(103), 1)]);
}

#[test]
fn legendre_symbols() {
    assert_eq!(legendre(&BigInt::from(-3), &u(7)).unwrap(), 1);
    assert_eq!(legendre(&BigInt::from(-3), &u(5)).unwrap(), -1);
    assert_eq!(legendre(&BigInt::from(0), &u(7)).unwrap(), 0);
}

#[test]
fn modular_square_roots() {
    let check = |a: i64, p: u64, roots: [u64; 2]| {
        let s = sqrt_mod(&BigInt::from(a), &u(p)).unwrap();
        assert!(roots.contains(&u64::try_from(&s).unwrap()), "sqrt_mod({a}, {p}) = {s}");
    };
    check(-3, 7, [2, 5]);
    check(1, 13, [1, 12]);
    check(-3, 13, [6, 7]);
}

#[test]
fn prime_representations() {
    assert_eq!(represent_prime(&u(3)).unwrap(), rep(0, 1, 3));
    assert_eq!(represent_prime(&u(7)).unwrap(), rep(2, 1, 7));
    assert_eq!(represent_prime(&u(13)).unwrap(), rep(1, 2, 13));
}

#[test]
fn composition() {
    assert_eq!(compose_reps(&rep(0, 1, 3), &rep(2, 1, 7)), rep(3, 2, 21));
    assert_eq!(compose_reps(&FormRep::identity(), &rep(2, 1, 7)), rep(2, 1, 7));
    let sq = compose_reps(&rep(2, 1, 7), &rep(2, 1, 7));
    assert!(sq == rep(7, 0, 49) || sq == rep(1, 4, 49), "{sq:?}");
}

#[test]
fn good_radicands() {
    for (n, good) in [(3, true), (7, true), (2, false), (5, false), (10, false), (21, true)] {
        assert_eq!(good_squarefree(&u(n)).unwrap(), good, "{n}");
    }
    assert_eq!(represent_q(&u(7)).unwrap(), rep(2, 1, 7));
    assert_eq!(represent_q(&u(21)).unwrap(), rep(3, 2, 21));
    assert_eq!(represent_q(&u(3)).unwrap(), rep(0, 1, 3));
}

#[test]
fn three_squares() {
    assert!(!three_square_admissible(&r(7)));
    assert!(three_square_admissible(&r(50)));
    assert!(!three_square_admissible(&Rat::new(7, 9)));
}

#[test]
fn triangles() {
    let t = make_triangle(3, 4, 5).unwrap();
    assert_eq!((t.s1(), t.sixteen_delta_sq()), (50, 576));
    let t = make_triangle(5, 5, 6).unwrap();
    assert_eq!((t.s1(), t.sixteen_delta_sq()), (86, 2304));
    assert!(matches!(make_triangle(2, 1, 1), Err(TriangleError::Degenerate { .. })));
    assert!(matches!(make_triangle(6, 8, 10), Err(TriangleError::NonPrimitive { .. })));

    assert_eq!(make_triangle(3, 4, 5).unwrap().kappa(), Rat::new(625, 9));
    assert_eq!(make_triangle(5, 5, 6).unwrap().kappa(), Rat::new(1849, 36));
    assert_eq!(make_triangle(1, 1, 1).unwrap().kappa(), r(48));

    let sides = |n| enumerate_primitive(n).map(|t| t.sides()).collect::<Vec<_>>();
    assert_eq!(sides(1), vec![[1, 1, 1]]);
    assert_eq!(sides(2), vec![[1, 1, 1], [1, 2, 2]]);

    assert!(search_by_kappa(&Rat::new(625, 9), 60).iter().any(|t| t.sides() == [3, 4, 5]));
    assert!(search_by_kappa(&Rat::new(1849, 36), 60).iter().any(|t| t.sides() == [5, 5, 6]));
    assert!(search_by_kappa(&r(47), 60).is_empty());
}

#[test]
fn enumeration_matches_naive_loop() {
    let mut naive = Vec::new();
    for c in 1..=10u64 {
        for b in 1..=c {
            for a in 1..=b {
                if a + b > c && num_integer::gcd(num_integer::gcd(a, b), c) == 1 {
                    naive.push([a, b, c]);
                }
            }
        }
    }
    let mut got: Vec<_> = enumerate_primitive(10).map(|t| t.sides()).collect();
    got.sort_by_key(|s| (s[2], s[1], s[0]));
    naive.sort_by_key(|s| (s[2], s[1], s[0]));
    assert_eq!(got, naive);
}

#[test]
fn classification() {
    let verdict = |s: &str| classify(&parse_theta(s).unwrap(), 500).unwrap().verdict();
    assert_eq!(verdict("sqrt(3)"), Verdict::Good);
    assert_eq!(verdict("sqrt(7)"), Verdict::Good);
    for s in ["sqrt(2)", "sqrt(5)", "sqrt(6)", "sqrt(10)"] {
        assert_eq!(verdict(s), Verdict::NotGood, "{s}");
    }

    let c = classify(&parse_theta("sqrt(25+12*sqrt(3))").unwrap(), 500).unwrap();
    let Evidence::Triangle(t) = &c.evidence else { panic!("{c:?}") };
    assert_eq!((t.sides, t.lambda.clone()), ([3, 4, 5], r(1)));

    let biq = |a: Rat, b: Rat| ThetaClass::biquadratic(a, Sign::Plus, b).unwrap();
    assert_eq!(classify(&biq(r(1), r(2)), 500).unwrap().reason(), Some(Filter::AlphaSquareAtMostBeta));
    let ex6 = classify(&biq(Rat::new(7, 2), Rat::new(13, 4)), 500).unwrap();
    assert_eq!(ex6.verdict(), Verdict::NotGood);
    assert!(ex6.failed_filters().contains(&Filter::ThreeSquares));

    let c = classify(&biq(r(43), r(1728)), 500).unwrap();
    let Evidence::Triangle(t) = &c.evidence else { panic!("{c:?}") };
    assert_eq!((t.sides, t.lambda.clone()), ([5, 5, 6], r(1)));

    assert_eq!(classify(&parse_theta("1+qroot(2)").unwrap(), 500).unwrap().reason(), Some(Filter::NonBiquadraticForm));
}

#[test]
fn lemma2_witnesses() {
    let w = lemma2_witness(&r(1), &rep(0, 1, 3)).unwrap();
    assert_eq!((w.e.clone(), w.r.clone(), w.s.clone()), (Rat::new(-3, 4), Rat::new(-1, 2), Rat::new(1, 2)));
    assert_eq!(w.distances, [r(2), r(1), r(1)]);
    let w = lemma2_witness(&r(1), &rep(2, 1, 7)).unwrap();
    assert_eq!((w.e.clone(), w.r.clone(), w.s.clone()), (Rat::new(-7, 4), Rat::new(1, 2), Rat::new(3, 2)));
    assert_eq!(w.distances, [r(2), r(1), r(3)]);
    assert_eq!(lemma2_witness(&r(2), &rep(2, 1, 7)).unwrap().distances, [r(4), r(2), r(6)]);
}

#[test]
fn fundamental_relation() {
    assert!(fundamental_relation_holds(&r(2), &r(1), &r(1), &QuadExt::rational(r(3))));
    assert!(fundamental_relation_holds(&r(2), &r(1), &r(3), &QuadExt::rational(r(7))));
    assert!(fundamental_relation_holds(&r(3), &r(4), &r(5), &q(25, 12, 3)));
    assert!(!fundamental_relation_holds(&r(1), &r(1), &r(1), &QuadExt::rational(r(5))));
}

#[test]
fn lemma4_points() {
    let p = lemma4_point(&r(2), &r(1), &r(1), &QuadExt::rational(r(3))).unwrap();
    // y = rho_y sqrt(3q) = -1/6 * 3 = -1/2
    assert_eq!(p, WitnessPoint::Surd { rho_x: r(0), rho_y: Rat::new(-1, 6), q: BigInt::from(3) });

    for theta in [r(2), Rat::new(5, 3)] {
        let p = lemma4_point(&r(0), &theta, &theta, &QuadExt::rational(theta.square())).unwrap();
        let shown = p.render(30);
        let apex = QuadExt::rational(theta.square() * Rat::new(3, 4));
        assert!(shown.x.abs().abs_at_most_pow10_neg(30));
        assert!(shown.y.sub(&equidist::engine::certified_sqrt(&apex, 30)).abs().abs_at_most_pow10_neg(29));
    }

    let t2 = q(25, 12, 3);
    let d = [r(3), r(4), r(5)];
    let p = lemma4_point(&d[0], &d[1], &d[2], &t2).unwrap();
    for res in p.residuals(&d, &t2, 50) {
        assert!(res.abs_at_most_pow10_neg(30), "{res}");
    }
}

#[test]
fn triangle_inequalities() {
    assert!(triangle_inequality_filter(&r(2), &r(1), &r(1), &QuadExt::rational(r(3))));
    assert!(triangle_inequality_filter(&r(2), &r(1), &r(3), &QuadExt::rational(r(7))));
    assert!(triangle_inequality_filter(&r(3), &r(4), &r(5), &q(25, 12, 3)));
}

#[test]
fn certificate_verification() {
    let mut c = classify(&parse_theta("sqrt(25+12*sqrt(3))").unwrap(), 500).unwrap();
    assert!(verify_certificate(&c).is_ok());
    if let Evidence::Triangle(t) = &mut c.evidence {
        t.distances = [r(3), r(4), r(6)];
    }
    assert_eq!(verify_certificate(&c).unwrap_err().to_string(), "fundamental relation failed");

    let c = classify(&parse_theta("sqrt(10)").unwrap(), 500).unwrap();
    assert!(matches!(&c.evidence, Evidence::Rejected { prime: Some(p), .. } if *p == BigInt::from(5)));
    assert!(verify_certificate(&c).is_ok());
}
