//! Witness points in the frame `B(-θ/2, 0)`, `C(θ/2, 0)`, `A(0, θ sqrt(3)/2)`.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::EngineError;
use crate::exactnum::{is_rational_square, sqrt_form, Fixed, QuadExt, Rat};
use crate::numtheory::FormRep;

/// `±sqrt(square)` with `square` exact in a quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedRoot {
    pub negative: bool,
    pub square: QuadExt,
}

impl SignedRoot {
    pub fn approx(&self, digits: u32) -> Fixed {
        let r = certified_sqrt(&self.square, digits);
        if self.negative {
            r.neg()
        } else {
            r
        }
    }
}

/// Coordinates of a rational-distance point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessPoint {
    /// `x = rho_x sqrt(q)`, `y = rho_y sqrt(3q)`; `q = 1` for rational sides.
    Surd { rho_x: Rat, rho_y: Rat, q: BigInt },
    /// Exact squared coordinates with their signs; rendered numerically.
    Radical { x: SignedRoot, y: SignedRoot },
}

/// Numeric rendering whose coordinates are within `10^-certified_digits` of the truth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericPoint {
    pub x: Fixed,
    pub y: Fixed,
    pub certified_digits: u32,
}

impl WitnessPoint {
    pub fn is_exact(&self) -> bool {
        matches!(self, WitnessPoint::Surd { .. })
    }

    /// Exact squared coordinates `(x^2, y^2)` and the signs of `x`, `y`.
    pub fn squared_coordinates(&self) -> (SignedRoot, SignedRoot) {
        match self {
            WitnessPoint::Surd { rho_x, rho_y, q } => {
                let q = Rat::from_integer(q.clone());
                let x2 = QuadExt::rational(rho_x.square() * &q);
                let y2 = QuadExt::rational(rho_y.square() * &q * Rat::from(3));
                (
                    SignedRoot { negative: rho_x.is_negative(), square: x2 },
                    SignedRoot { negative: rho_y.is_negative(), square: y2 },
                )
            }
            WitnessPoint::Radical { x, y } => (x.clone(), y.clone()),
        }
    }

    pub fn render(&self, digits: u32) -> NumericPoint {
        let (x, y) = self.squared_coordinates();
        NumericPoint { x: x.approx(digits), y: y.approx(digits), certified_digits: digits }
    }

    /// `|MA - dA|, |MB - dB|, |MC - dC|` evaluated numerically at `digits` digits.
    pub fn residuals(&self, distances: &[Rat; 3], theta_sq: &QuadExt, digits: u32) -> [Fixed; 3] {
        let w = digits + 10;
        let p = self.render(w);
        let theta = certified_sqrt(theta_sq, w);
        let half = theta.mul_rat(&Rat::new(1, 2));
        let apex = theta.mul(&Fixed::sqrt_rat(&Rat::from(3), w)).mul_rat(&Rat::new(1, 2));
        let zero = Fixed::zero(w);
        let vertices = [(zero.clone(), apex), (half.neg(), zero.clone()), (half, zero)];
        std::array::from_fn(|i| {
            let (vx, vy) = &vertices[i];
            let dx = p.x.sub(vx);
            let dy = p.y.sub(vy);
            let dist = dx.mul(&dx).add(&dy.mul(&dy)).sqrt();
            dist.sub(&Fixed::from_rat(&distances[i], w)).abs()
        })
    }
}

/// `sqrt(x)` for `x >= 0`, accurate to `10^-digits`.
///
/// Uses `|sqrt(u) - sqrt(v)| <= sqrt(|u - v|)`: evaluating `x` to twice the
/// target precision (plus the size of its irrational coefficient) keeps the
/// error of the working value below `10^-(digits+2)`; final rounding adds at most
/// half a unit.
pub fn certified_sqrt(x: &QuadExt, digits: u32) -> Fixed {
    assert!(x.sign() != Ordering::Less, "square root of a negative quantity");
    let coef_digits = x.b().numer().abs_magnitude_digits() + x.d().abs_magnitude_digits();
    let w = 2 * digits + 6 + coef_digits;
    x.approx(w).sqrt().round(digits)
}

trait MagnitudeDigits {
    fn abs_magnitude_digits(&self) -> u32;
}

impl MagnitudeDigits for BigInt {
    fn abs_magnitude_digits(&self) -> u32 {
        self.magnitude().to_string().len() as u32
    }
}

/// `3(a^4 + b^4 + c^4 + θ^4) = (a^2 + b^2 + c^2 + θ^2)^2`, decided exactly.
pub fn fundamental_relation_holds(da: &Rat, db: &Rat, dc: &Rat, theta_sq: &QuadExt) -> bool {
    let sq = [da.square(), db.square(), dc.square()];
    let quartic: Rat = sq.iter().map(Rat::square).fold(Rat::zero(), |acc, x| acc + x);
    let quad: Rat = sq.iter().fold(Rat::zero(), |acc, x| acc + x);
    let lhs = theta_sq.square().add_rat(&quartic).scale(&Rat::from(3));
    let rhs = theta_sq.add_rat(&quad).square();
    lhs == rhs
}

/// Non-strict triangle inequality on every 3-subset of `{dA, dB, dC, θ}`.
pub fn triangle_inequality_filter(da: &Rat, db: &Rat, dc: &Rat, theta_sq: &QuadExt) -> bool {
    let rational_ok = |x: &Rat, y: &Rat, z: &Rat| (x - y).abs() <= *z && *z <= x + y;
    // |x - y| <= θ <= x + y, compared through squares
    let with_theta = |x: &Rat, y: &Rat| {
        let lo = QuadExt::rational((x - y).square()).sub(theta_sq).expect("rational operand");
        let hi = QuadExt::rational((x + y).square()).sub(theta_sq).expect("rational operand");
        lo.sign() != Ordering::Greater && hi.sign() != Ordering::Less
    };
    rational_ok(da, db, dc) && with_theta(da, db) && with_theta(db, dc) && with_theta(da, dc)
}

/// Output of the explicit construction for `θ = λ sqrt(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Witness {
    pub e: Rat,
    pub r: Rat,
    pub s: Rat,
    pub point: WitnessPoint,
    pub distances: [Rat; 3],
}

/// `e = -q/(4b)`, `r = (a-b)/(2b)`, `s = (a+b)/(2b)` for `a^2 + 3b^2 = q`.
pub fn lemma2_parameters(a: &Rat, b: &Rat, q: &Rat) -> Result<(Rat, Rat, Rat), EngineError> {
    if b.is_zero() {
        return Err(EngineError::ZeroFormCoefficient);
    }
    let e = -(q / &(Rat::from(4) * b));
    let r = (a - b) / (Rat::from(2) * b);
    let s = (a + b) / (Rat::from(2) * b);
    Ok((e, r, s))
}

/// Rational-distance point for `θ = λ sqrt(q)` built from `a^2 + 3b^2 = q`.
///
/// On the reference side `2 sqrt(q)` the point is `x = (a/e) sqrt(q)`,
/// `y = (b/e + 1) sqrt(3q)` at distances `q/|e|, q|r|/|e|, q|s|/|e|`; everything
/// is then scaled by `λ/2`.
pub fn lemma2_witness(lambda: &Rat, rep: &FormRep) -> Result<Lemma2Witness, EngineError> {
    let a = Rat::from_integer(rep.x().clone());
    let b = Rat::from_integer(rep.y().clone());
    let q = Rat::from_integer(rep.q().clone());
    let (e, r, s) = lemma2_parameters(&a, &b, &q)?;
    let half = lambda * &Rat::new(1, 2);
    let e_abs = e.abs();
    let distances = [&half * &(&q / &e_abs), &half * &(&q * &r.abs() / &e_abs), &half * &(&q * &s.abs() / &e_abs)];
    let point =
        WitnessPoint::Surd { rho_x: &half * &(&a / &e), rho_y: &half * &(&b / &e + Rat::one()), q: rep.q().clone() };
    Ok(Lemma2Witness { e, r, s, point, distances })
}

/// Places the point at distances `(dA, dB, dC)` from the vertices of the side-θ triangle.
///
/// `x^2 = (dB^2 - dC^2)^2 / (4θ^2)` and `y^2 = dB^2 - (x + θ/2)^2` are exact in
/// `Q(sqrt d)`; the sign of `y` is fixed by the distance to `A`, i.e. which of the
/// two circle intersections the triple describes.
pub fn lemma4_point(da: &Rat, db: &Rat, dc: &Rat, theta_sq: &QuadExt) -> Result<WitnessPoint, EngineError> {
    if da.is_negative() || db.is_negative() || dc.is_negative() {
        return Err(EngineError::NegativeDistance);
    }
    if !fundamental_relation_holds(da, db, dc, theta_sq) {
        return Err(EngineError::RelationFails);
    }
    let four_theta_sq = theta_sq.scale(&Rat::from(4));
    let diff = db.square() - dc.square();
    let x_sq = QuadExt::rational(diff.square()).div(&four_theta_sq)?;
    let shifted = theta_sq.add_rat(&diff);
    let y_sq = shifted.square().div(&four_theta_sq)?.neg().add_rat(&db.square());
    if y_sq.sign() == Ordering::Less {
        return Err(EngineError::Inconsistent("negative squared ordinate"));
    }
    // y θ sqrt(3) = x^2 + y^2 + 3θ^2/4 - dA^2
    let rhs = x_sq.add(&y_sq)?.add(&theta_sq.scale(&Rat::new(3, 4)))?.add_rat(&-da.square());
    if rhs.square() != y_sq.mul(theta_sq)?.scale(&Rat::from(3)) {
        return Err(EngineError::Inconsistent("distance to A matches neither intersection"));
    }
    let x_neg = diff.is_negative();
    let y_neg = rhs.sign() == Ordering::Less;

    if let Some(t2) = theta_sq.as_rational() {
        let (_, q) = sqrt_form(t2)?;
        let qr = Rat::from_integer(q.clone());
        let rho_x = x_sq.as_rational().and_then(|v| is_rational_square(&(v / &qr)));
        let rho_y = y_sq.as_rational().and_then(|v| is_rational_square(&(v / &(&qr * &Rat::from(3)))));
        if let (Some(rx), Some(ry)) = (rho_x, rho_y) {
            let rho_x = if x_neg { -rx } else { rx };
            let rho_y = if y_neg { -ry } else { ry };
            return Ok(WitnessPoint::Surd { rho_x, rho_y, q });
        }
    }
    Ok(WitnessPoint::Radical {
        x: SignedRoot { negative: x_neg, square: x_sq },
        y: SignedRoot { negative: y_neg, square: y_sq },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    fn qx(a: i64, b: i64, d: i64) -> QuadExt {
        QuadExt::new(r(a), r(b), d).unwrap()
    }

    #[test]
    fn relation_examples() {
        assert!(fundamental_relation_holds(&r(2), &r(1), &r(1), &qx(3, 0, 1)));
        assert!(fundamental_relation_holds(&r(2), &r(1), &r(3), &qx(7, 0, 1)));
        assert!(fundamental_relation_holds(&r(3), &r(4), &r(5), &qx(25, 12, 3)));
        assert!(!fundamental_relation_holds(&r(1), &r(1), &r(1), &qx(5, 0, 1)));
        assert!(!fundamental_relation_holds(&r(3), &r(4), &r(6), &qx(25, 12, 3)));
    }

    #[test]
    fn relation_sides_for_345() {
        let t2 = qx(25, 12, 3);
        let lhs = t2.square().add_rat(&r(81 + 256 + 625)).scale(&r(3));
        assert_eq!(lhs, qx(6057, 1800, 3));
        assert_eq!(t2.add_rat(&r(50)).square(), qx(6057, 1800, 3));
    }

    #[test]
    fn lemma2_examples() {
        let w = lemma2_witness(&r(1), &FormRep::new(0, 1, 3).unwrap()).unwrap();
        assert_eq!((w.e.clone(), w.r.clone(), w.s.clone()), (Rat::new(-3, 4), Rat::new(-1, 2), Rat::new(1, 2)));
        assert_eq!(w.distances, [r(2), r(1), r(1)]);
        assert_eq!(w.point, WitnessPoint::Surd { rho_x: r(0), rho_y: Rat::new(-1, 6), q: BigInt::from(3) });

        let w = lemma2_witness(&r(1), &FormRep::new(2, 1, 7).unwrap()).unwrap();
        assert_eq!((w.e.clone(), w.r.clone(), w.s.clone()), (Rat::new(-7, 4), Rat::new(1, 2), Rat::new(3, 2)));
        assert_eq!(w.distances, [r(2), r(1), r(3)]);

        let w = lemma2_witness(&r(2), &FormRep::new(2, 1, 7).unwrap()).unwrap();
        assert_eq!(w.distances, [r(4), r(2), r(6)]);
    }

    #[test]
    fn lemma2_rejects_zero_b() {
        assert!(matches!(
            lemma2_witness(&r(1), &FormRep::new(2, 0, 4).unwrap()),
            Err(EngineError::ZeroFormCoefficient)
        ));
    }

    #[test]
    fn lemma4_exact_case() {
        let p = lemma4_point(&r(2), &r(1), &r(1), &qx(3, 0, 1)).unwrap();
        // y = rho_y sqrt(9) = -1/2
        assert_eq!(p, WitnessPoint::Surd { rho_x: r(0), rho_y: Rat::new(-1, 6), q: BigInt::from(3) });
    }

    #[test]
    fn lemma4_vertex_case() {
        let p = lemma4_point(&r(0), &r(2), &r(2), &qx(4, 0, 1)).unwrap();
        assert_eq!(p, WitnessPoint::Surd { rho_x: r(0), rho_y: r(1), q: BigInt::from(1) });
    }

    #[test]
    fn lemma4_quartic_case_residuals() {
        let t2 = qx(25, 12, 3);
        let d = [r(3), r(4), r(5)];
        let p = lemma4_point(&d[0], &d[1], &d[2], &t2).unwrap();
        assert!(!p.is_exact());
        for res in p.residuals(&d, &t2, 50) {
            assert!(res.abs_at_most_pow10_neg(30), "{res}");
        }
    }

    #[test]
    fn lemma4_rejects_non_solutions() {
        assert!(matches!(lemma4_point(&r(3), &r(4), &r(6), &qx(25, 12, 3)), Err(EngineError::RelationFails)));
    }

    #[test]
    fn triangle_inequality_examples() {
        assert!(triangle_inequality_filter(&r(2), &r(1), &r(1), &qx(3, 0, 1)));
        assert!(triangle_inequality_filter(&r(2), &r(1), &r(3), &qx(7, 0, 1)));
        assert!(triangle_inequality_filter(&r(3), &r(4), &r(5), &qx(25, 12, 3)));
        assert!(!triangle_inequality_filter(&r(1), &r(1), &r(5), &qx(3, 0, 1)));
    }

    #[test]
    fn certified_sqrt_precision() {
        let s = certified_sqrt(&qx(2, 0, 1), 40);
        assert_eq!(s.to_string(), "1.4142135623730950488016887242096980785697");
        // sqrt(25 + 12 sqrt 3) = 6.77...
        let t = certified_sqrt(&qx(25, 12, 3), 10);
        assert_eq!(t.to_string_digits(4), "6.7664");
    }
}
