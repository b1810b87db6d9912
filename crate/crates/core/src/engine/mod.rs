//! Decision procedures, witness constructions, and certificates.
//!
//! * rational sides get a vertex witness;
//! * `θ = λ sqrt(q)` is decided by the prime factors of `q` and, when good,
//!   witnessed through a representation `q = a^2 + 3b^2`;
//! * `θ^2 = α ± sqrt(β)` passes necessary-condition filters and then a search
//!   for a primitive triangle with matching similarity invariant.

mod json;
mod verify;
mod witness;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use thiserror::Error;

use crate::exactnum::{is_rational_square, ExactError, Rat};
use crate::numtheory::{bad_prime_witness, represent_q, three_square_admissible, NumError};
use crate::theta::{Sign, ThetaClass};
use crate::triangles::{kappa_matches, make_triangle, PrimTriangle, TriangleError};

pub use json::{CertificateParseError, SCHEMA_VERSION};
pub use verify::{verify_certificate, VerifyError};
pub use witness::{
    certified_sqrt, fundamental_relation_holds, lemma2_parameters, lemma2_witness, lemma4_point,
    triangle_inequality_filter, Lemma2Witness, NumericPoint, SignedRoot, WitnessPoint,
};

/// Default longest-side bound for the triangle search.
pub const DEFAULT_BOUND: u64 = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("fundamental relation failed")]
    RelationFails,
    #[error("distances must be nonnegative")]
    NegativeDistance,
    #[error("representation has b = 0")]
    ZeroFormCoefficient,
    #[error("internal inconsistency: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Number(#[from] NumError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Good,
    NotGood,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Good => "good",
            Verdict::NotGood => "not_good",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Grounds for a negative verdict, in the order they are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Filter {
    /// Not of the form `θ^2 = α ± sqrt(β)` with `α > 0`.
    NonBiquadraticForm,
    /// `θ = λ sqrt(q)` with a prime factor 2 or `≡ 5 (mod 6)` in `q`.
    BadPrime,
    /// `α^2 <= β`.
    AlphaSquareAtMostBeta,
    /// `2α` is not a sum of three rational squares.
    ThreeSquares,
}

impl Filter {
    pub fn code(self) -> &'static str {
        match self {
            Filter::NonBiquadraticForm => "theorem0-form",
            Filter::BadPrime => "theorem1-prime",
            Filter::AlphaSquareAtMostBeta => "ex3-filter",
            Filter::ThreeSquares => "ex6-filter",
        }
    }

    pub fn from_code(s: &str) -> Option<Filter> {
        [Filter::NonBiquadraticForm, Filter::BadPrime, Filter::AlphaSquareAtMostBeta, Filter::ThreeSquares]
            .into_iter()
            .find(|f| f.code() == s)
    }
}

/// Evidence for `θ = λ sqrt(q)`: `a^2 + 3b^2 = q` and the derived `e, r, s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdEvidence {
    pub a: BigInt,
    pub b: BigInt,
    pub e: Rat,
    pub r: Rat,
    pub s: Rat,
    pub distances: [Rat; 3],
}

/// Evidence for a biquadratic `θ`: `λθ` has integer distances `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEvidence {
    pub sides: [u64; 3],
    pub lambda: Rat,
    pub sign: Sign,
    pub distances: [Rat; 3],
}

impl TriangleEvidence {
    pub fn triangle(&self) -> Result<PrimTriangle, TriangleError> {
        make_triangle(self.sides[0], self.sides[1], self.sides[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Distances `(0, θ, θ)` from vertex `A`.
    Vertex {
        distances: [Rat; 3],
    },
    Surd(SurdEvidence),
    Triangle(TriangleEvidence),
    /// `reason` is the first entry of `failed`.
    Rejected {
        reason: Filter,
        prime: Option<BigInt>,
        failed: Vec<Filter>,
    },
    /// Filters passed but no triangle was found with longest side `<= bound`.
    Exhausted {
        bound: u64,
    },
}

/// Self-contained evidence for a verdict about one side length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub theta: ThetaClass,
    pub evidence: Evidence,
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        match self.evidence {
            Evidence::Vertex { .. } | Evidence::Surd(_) | Evidence::Triangle(_) => Verdict::Good,
            Evidence::Rejected { .. } => Verdict::NotGood,
            Evidence::Exhausted { .. } => Verdict::Unknown,
        }
    }

    pub fn distances(&self) -> Option<&[Rat; 3]> {
        match &self.evidence {
            Evidence::Vertex { distances } => Some(distances),
            Evidence::Surd(s) => Some(&s.distances),
            Evidence::Triangle(t) => Some(&t.distances),
            _ => None,
        }
    }

    pub fn reason(&self) -> Option<Filter> {
        match &self.evidence {
            Evidence::Rejected { reason, .. } => Some(*reason),
            _ => None,
        }
    }

    pub fn failed_filters(&self) -> &[Filter] {
        match &self.evidence {
            Evidence::Rejected { failed, .. } => failed,
            _ => &[],
        }
    }

    /// The witness point for a Good certificate.
    pub fn witness_point(&self) -> Result<Option<WitnessPoint>, EngineError> {
        let Some(d) = self.distances() else { return Ok(None) };
        let theta_sq = self.theta.theta_squared().ok_or(EngineError::Inconsistent("no quadratic square"))?;
        lemma4_point(&d[0], &d[1], &d[2], &theta_sq).map(Some)
    }
}

fn to_biguint(n: &BigInt) -> BigUint {
    n.to_biguint().expect("positive radicand")
}

/// Failed filters for a biquadratic `θ^2 = α ± sqrt(β)`, in order.
pub fn biquadratic_filters(alpha: &Rat, beta: &Rat) -> Vec<Filter> {
    let mut failed = Vec::new();
    if !alpha.is_positive() {
        failed.push(Filter::NonBiquadraticForm);
    }
    if alpha.square() <= *beta {
        failed.push(Filter::AlphaSquareAtMostBeta);
    }
    if alpha.is_positive() && !three_square_admissible(&(alpha * &Rat::from(2))) {
        failed.push(Filter::ThreeSquares);
    }
    failed
}

/// `48 α^2 / β`, the value `kappa` must take on a matching triangle.
pub fn kappa_target(alpha: &Rat, beta: &Rat) -> Rat {
    Rat::from(48) * alpha.square() / beta
}

fn rejected(failed: Vec<Filter>, prime: Option<BigInt>) -> Evidence {
    Evidence::Rejected { reason: failed[0], prime, failed }
}

/// Decides whether the side length admits a rational-distance point, searching
/// triangles up to longest side `max_c` in the biquadratic case.
pub fn classify(theta: &ThetaClass, max_c: u64) -> Result<Certificate, EngineError> {
    let evidence = match theta {
        ThetaClass::RationalSide { lambda } => {
            Evidence::Vertex { distances: [Rat::zero(), lambda.clone(), lambda.clone()] }
        }
        ThetaClass::QuadSurd { lambda, q } => {
            let qu = to_biguint(q);
            match bad_prime_witness(&qu)? {
                Some(p) => rejected(vec![Filter::BadPrime], Some(BigInt::from_biguint(BigSign::Plus, p))),
                None => {
                    let rep = represent_q(&qu)?;
                    let w = lemma2_witness(lambda, &rep)?;
                    Evidence::Surd(SurdEvidence {
                        a: rep.x().clone(),
                        b: rep.y().clone(),
                        e: w.e,
                        r: w.r,
                        s: w.s,
                        distances: w.distances,
                    })
                }
            }
        }
        ThetaClass::NonBiquadratic(_) => rejected(vec![Filter::NonBiquadraticForm], None),
        ThetaClass::Biquadratic { alpha, sign, beta } => {
            let failed = biquadratic_filters(alpha, beta);
            if !failed.is_empty() {
                rejected(failed, None)
            } else {
                search_triangle(alpha, *sign, beta, max_c)
            }
        }
    };
    Ok(Certificate { theta: theta.clone(), evidence })
}

fn search_triangle(alpha: &Rat, sign: Sign, beta: &Rat, max_c: u64) -> Evidence {
    let two_alpha = alpha * &Rat::from(2);
    // first match in (c, b, a) order is the smallest-c, lexicographically first one
    let hit = kappa_matches(&kappa_target(alpha, beta), max_c).find_map(|t| {
        let lambda_sq = Rat::from_integer(BigInt::from(t.s1())) / &two_alpha;
        is_rational_square(&lambda_sq).map(|l| (t, l))
    });
    match hit {
        Some((t, lambda)) => {
            let distances = t.sides().map(|s| Rat::from_integer(BigInt::from(s)) / &lambda);
            Evidence::Triangle(TriangleEvidence { sides: t.sides(), lambda, sign, distances })
        }
        None => Evidence::Exhausted { bound: max_c },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::parse_theta;

    fn run(s: &str) -> Certificate {
        classify(&parse_theta(s).unwrap(), DEFAULT_BOUND).unwrap()
    }

    fn biq(alpha: Rat, beta: Rat) -> ThetaClass {
        ThetaClass::biquadratic(alpha, Sign::Plus, beta).unwrap()
    }

    #[test]
    fn small_radicals() {
        let verdicts: Vec<_> = ["sqrt(2)", "sqrt(3)", "sqrt(5)", "sqrt(6)", "sqrt(7)", "sqrt(10)"]
            .iter()
            .map(|s| run(s).verdict())
            .collect();
        use Verdict::*;
        assert_eq!(verdicts, vec![NotGood, Good, NotGood, NotGood, Good, NotGood]);
        assert_eq!(run("sqrt(10)").evidence, rejected(vec![Filter::BadPrime], Some(BigInt::from(5))));
        assert_eq!(run("sqrt(2)").evidence, rejected(vec![Filter::BadPrime], Some(BigInt::from(2))));
        assert_eq!(run("sqrt(35)").evidence, rejected(vec![Filter::BadPrime], Some(BigInt::from(5))));
    }

    #[test]
    fn biquadratic_with_345_triangle() {
        let c = run("sqrt(25+12*sqrt(3))");
        match &c.evidence {
            Evidence::Triangle(t) => {
                assert_eq!(t.sides, [3, 4, 5]);
                assert_eq!(t.lambda, Rat::one());
                assert_eq!(t.distances, [Rat::from(3), Rat::from(4), Rat::from(5)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isosceles_example() {
        let c = classify(&biq(Rat::from(43), Rat::from(1728)), 60).unwrap();
        match &c.evidence {
            Evidence::Triangle(t) => assert_eq!((t.sides, t.lambda.clone()), ([5, 5, 6], Rat::one())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn filters_fire_in_order() {
        let c = classify(&biq(Rat::one(), Rat::from(2)), 10).unwrap();
        assert_eq!(c.reason(), Some(Filter::AlphaSquareAtMostBeta));
        let c = classify(&biq(Rat::new(7, 2), Rat::new(13, 4)), 10).unwrap();
        assert_eq!(c.reason(), Some(Filter::ThreeSquares));
        let c = classify(&biq(Rat::from(-1), Rat::from(5)), 10).unwrap();
        assert_eq!(c.failed_filters(), &[Filter::NonBiquadraticForm, Filter::AlphaSquareAtMostBeta]);
        let c = classify(&biq(Rat::new(7, 2), Rat::from(13)), 10).unwrap();
        assert_eq!(c.failed_filters(), &[Filter::AlphaSquareAtMostBeta, Filter::ThreeSquares]);
    }

    #[test]
    fn quartic_forms_are_rejected() {
        assert_eq!(run("1+qroot(2)").reason(), Some(Filter::NonBiquadraticForm));
        assert_eq!(run("sqrt(sqrt(5))").reason(), Some(Filter::NonBiquadraticForm));
    }

    #[test]
    fn rational_side_vertex() {
        let c = run("2");
        assert_eq!(c.evidence, Evidence::Vertex { distances: [Rat::zero(), Rat::from(2), Rat::from(2)] });
    }

    #[test]
    fn unknown_when_bound_exhausted() {
        let c = run("sqrt(4+sqrt(2))");
        assert_eq!(c.evidence, Evidence::Exhausted { bound: DEFAULT_BOUND });
        // (3,4,5) needs c >= 5
        let c = classify(&parse_theta("sqrt(25+12*sqrt(3))").unwrap(), 4).unwrap();
        assert_eq!(c.verdict(), Verdict::Unknown);
    }

    #[test]
    fn non_heronian_triangle_is_found() {
        // (2,2,3): 16Δ^2 = 63, θ^2 = (17 ± sqrt(189))/2
        for sign in [Sign::Plus, Sign::Minus] {
            let t = ThetaClass::biquadratic(Rat::new(17, 2), sign, Rat::new(189, 4)).unwrap();
            let c = classify(&t, 3).unwrap();
            match &c.evidence {
                Evidence::Triangle(e) => assert_eq!(e.sides, [2, 2, 3]),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn rescaled_biquadratic_gets_lambda() {
        // θ = sqrt(25+12 sqrt 3)/5 has distances (3,4,5)/5
        let c = classify(&biq(Rat::one(), Rat::new(432, 625)), 10).unwrap();
        match &c.evidence {
            Evidence::Triangle(t) => {
                assert_eq!(t.lambda, Rat::from(5));
                assert_eq!(t.distances[0], Rat::new(3, 5));
            }
            other => panic!("{other:?}"),
        }
    }
}
