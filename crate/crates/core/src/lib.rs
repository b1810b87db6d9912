//! Exact decision procedures for rational-distance points of equilateral triangles.
//!
//! A positive real `θ` is *good* when the plane contains a point at rational
//! distance from all three vertices of the equilateral triangle of side `θ`.
//! This crate decides goodness for side lengths of degree at most four and
//! emits [`engine::Certificate`]s that [`engine::verify_certificate`] re-checks
//! without consulting the classifier.
//!
//! * [`exactnum`] — rationals, the quadratic fields `Q(sqrt d)` with exact sign
//!   tests, and certified fixed-point evaluation;
//! * [`numtheory`] — factoring, modular square roots, and representations by
//!   `x^2 + 3y^2`;
//! * [`theta`] — parsing side lengths such as `sqrt(25+12*sqrt(3))` into
//!   canonical algebraic classes;
//! * [`triangles`] — primitive integer triangles and their similarity invariant
//!   `kappa = 16 s1^2 / (16Δ^2)`;
//! * [`engine`] — classification, witness points, certificates and verification;
//! * [`cli`] — the `equidist` command-line front end.
//!
//! ```
//! use equidist::engine::{classify, verify_certificate, Verdict};
//! use equidist::theta::parse_theta;
//!
//! let cert = classify(&parse_theta("sqrt(7)").unwrap(), 500).unwrap();
//! assert_eq!(cert.verdict(), Verdict::Good);
//! assert_eq!(cert.distances().unwrap()[2].to_string(), "3");
//! assert!(verify_certificate(&cert).is_ok());
//! ```

pub mod cli;
pub mod engine;
pub mod exactnum;
pub mod numtheory;
pub mod theta;
pub mod triangles;
