//! Serialize a certificate, tamper with it, and watch verification fail.

use equidist::engine::{classify, verify_certificate, Certificate, DEFAULT_BOUND};
use equidist::theta::parse_theta;

fn main() {
    let cert = classify(&parse_theta("sqrt(25+12*sqrt(3))").unwrap(), DEFAULT_BOUND).unwrap();
    let text = cert.to_json();
    println!("{text}");

    let parsed = Certificate::from_json(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
    println!("original: {:?}", verify_certificate(&parsed));

    let forged = text.replace("\"5\"\n  ]", "\"6\"\n  ]");
    let forged = Certificate::from_json(&forged).unwrap();
    match verify_certificate(&forged) {
        Ok(()) => println!("forged: unexpectedly accepted"),
        Err(e) => println!("forged: rejected: {e}"),
    }

    let wrong_schema = text.replace("\"schema_version\": 1", "\"schema_version\": 2");
    println!("schema 2: {}", Certificate::from_json(&wrong_schema).unwrap_err());
}
