use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{Cyclo, CycloError};

/// Parses the `E(n)^i` notation produced by `Display`.
///
/// The result lives at the lcm of every `n` mentioned (1 when none is).
pub fn parse_cyclo(text: &str) -> Result<Cyclo, CycloError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err(text, "empty"));
    }
    let (body, den) = match s.rfind(")/") {
        Some(pos) if s.starts_with('(') && pos > 0 => {
            let den: BigInt = s[pos + 2..]
                .parse()
                .map_err(|_| err(text, "bad denominator"))?;
            (&s[1..pos], den)
        }
        _ => (s.as_str(), BigInt::one()),
    };
    if den == BigInt::from(0) {
        return Err(err(text, "zero denominator"));
    }

    // (coefficient, conductor, exponent); conductor 1 for plain integers
    let mut terms: Vec<(BigInt, u32, i64)> = Vec::new();
    let bytes = body.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigInt::one();
        match bytes[pos] {
            b'+' if !terms.is_empty() => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1;
            }
            _ if terms.is_empty() => {}
            _ => return Err(err(text, "expected '+' or '-' between terms")),
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = sign;
        if pos > start {
            let k: BigInt = body[start..pos]
                .parse()
                .map_err(|_| err(text, "bad integer"))?;
            coeff *= k;
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            } else {
                terms.push((coeff, 1, 0));
                continue;
            }
        }
        let rest = &body[pos..];
        if !rest.starts_with("E(") {
            return Err(err(text, "expected E(n)"));
        }
        let close = rest.find(')').ok_or_else(|| err(text, "unclosed E("))?;
        let n: u32 = rest[2..close]
            .parse()
            .map_err(|_| err(text, "bad conductor"))?;
        if n == 0 {
            return Err(err(text, "conductor must be positive"));
        }
        pos += close + 1;
        let mut exp = 1i64;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let estart = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = body[estart..pos]
                .parse()
                .map_err(|_| err(text, "bad exponent"))?;
        }
        terms.push((coeff, n, exp));
    }

    let m = terms.iter().fold(1u32, |acc, t| acc.lcm(&t.1));
    let mut value = Cyclo::zero(m);
    for (coeff, n, exp) in terms {
        let root = Cyclo::root_of_unity(m, exp * (m / n) as i64);
        value = &value + &root.scale(&BigRational::from_integer(coeff));
    }
    Ok(value.scale(&BigRational::new(BigInt::one(), den)))
}

fn err(text: &str, why: &str) -> CycloError {
    CycloError::Parse(format!("{why} in {text:?}"))
}
