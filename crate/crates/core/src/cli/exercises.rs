//! The six closing exercises, each checked end to end.

use crate::engine::{classify, verify_certificate, Certificate, Evidence, Filter, Verdict};
use crate::exactnum::Rat;
use crate::theta::{parse_theta, Sign, ThetaClass};

#[derive(Debug, Clone)]
pub struct ExerciseOutcome {
    pub number: u32,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

fn run(expr: &str, bound: u64) -> Result<Certificate, String> {
    let theta = parse_theta(expr).map_err(|e| format!("{expr}: {e}"))?;
    classify(&theta, bound).map_err(|e| format!("{expr}: {e}"))
}

fn run_class(theta: &ThetaClass, bound: u64) -> Result<Certificate, String> {
    classify(theta, bound).map_err(|e| format!("{theta}: {e}"))
}

fn line(c: &Certificate) -> String {
    let mut s = format!("{} -> {} ({})", c.theta, c.verdict().as_str(), c.reason_code());
    if let Evidence::Rejected { prime: Some(p), .. } = &c.evidence {
        s.push_str(&format!(", prime {p}"));
    }
    if let Some(d) = c.distances() {
        s.push_str(&format!(", distances {}, {}, {}", d[0], d[1], d[2]));
    }
    s
}

fn verified(c: &Certificate, details: &mut Vec<String>) -> bool {
    match verify_certificate(c) {
        Ok(()) => true,
        Err(e) => {
            details.push(format!("verification failed for {}: {e}", c.theta));
            false
        }
    }
}

fn exercise_1(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    let mut good = Vec::new();
    let mut ok = true;
    for n in [2, 3, 5, 6, 7, 10] {
        let c = run(&format!("sqrt({n})"), bound)?;
        details.push(line(&c));
        ok &= verified(&c, details);
        if c.verdict() == Verdict::Good {
            good.push(n);
        }
    }
    details.push(format!("good radicals: {good:?}"));
    Ok(ok && good == [3, 7])
}

fn exercise_2(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    let c = run("sqrt(25+12*sqrt(3))", bound)?;
    details.push(line(&c));
    let found = match &c.evidence {
        Evidence::Triangle(t) => {
            details.push(format!("triangle ({}, {}, {}), lambda {}", t.sides[0], t.sides[1], t.sides[2], t.lambda));
            t.sides == [3, 4, 5] && t.lambda.is_one()
        }
        _ => false,
    };
    Ok(found && verified(&c, details))
}

fn exercise_3(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    // 2θ^2 = 2 + sqrt(8): α^2 = 4 < 8 = β
    let theta = ThetaClass::biquadratic(Rat::one(), Sign::Plus, Rat::from(2)).map_err(|e| e.to_string())?;
    let c = run_class(&theta, bound)?;
    details.push(line(&c));
    Ok(c.reason() == Some(Filter::AlphaSquareAtMostBeta) && verified(&c, details))
}

fn exercise_4(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    let c = run("sqrt(3)", bound)?;
    details.push(line(&c));
    let report = super::witness_report(&c, 10).map_err(|e| e.to_string())?;
    if let Some((x, y)) = &report.exact {
        details.push(format!("point M = ({x}, {y})"));
    }
    let expected = [Rat::from(2), Rat::one(), Rat::one()];
    Ok(c.distances() == Some(&expected) && verified(&c, details))
}

fn exercise_5(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    let mut ok = true;
    for expr in ["1+qroot(2)", "qroot(3)", "5-2*qroot(7)", "1/3+2/5*qroot(6)"] {
        let c = run(expr, bound)?;
        details.push(line(&c));
        ok &= c.reason() == Some(Filter::NonBiquadraticForm) && verified(&c, details);
    }
    Ok(ok)
}

fn exercise_6(bound: u64, details: &mut Vec<String>) -> Result<bool, String> {
    // 2θ^2 = 7 ± sqrt(13): α = m/n = 7, mn = 7 = 8·0 + 7
    let mut ok = true;
    for sign in [Sign::Plus, Sign::Minus] {
        let theta = ThetaClass::biquadratic(Rat::new(7, 2), sign, Rat::new(13, 4)).map_err(|e| e.to_string())?;
        let c = run_class(&theta, bound)?;
        details.push(line(&c));
        ok &= c.verdict() == Verdict::NotGood
            && c.failed_filters().contains(&Filter::ThreeSquares)
            && verified(&c, details);
    }
    Ok(ok)
}

/// Runs all six exercises with the given triangle-search bound.
pub fn run_exercises(bound: u64) -> Vec<ExerciseOutcome> {
    type Check = fn(u64, &mut Vec<String>) -> Result<bool, String>;
    let table: [(&'static str, Check); 6] = [
        ("which of sqrt 2, 3, 5, 6, 7, 10 are good", exercise_1),
        ("sqrt(25 + 12 sqrt 3) is good", exercise_2),
        ("2θ^2 = α + sqrt(β) with α^2 < β is not good", exercise_3),
        ("solution points for the triangle of side sqrt 3", exercise_4),
        ("α + β q^(1/4) is not good", exercise_5),
        ("2θ^2 = 7 ± sqrt(13) is not good (three squares)", exercise_6),
    ];
    table
        .iter()
        .zip(1..)
        .map(|((title, check), number)| {
            let mut details = Vec::new();
            let passed = check(bound, &mut details).unwrap_or_else(|e| {
                details.push(format!("error: {e}"));
                false
            });
            ExerciseOutcome { number, title, passed, details }
        })
        .collect()
}
