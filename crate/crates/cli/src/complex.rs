//! Complex literals of the form `a+bi`.

use mu_lab::C64;

/// Parse `a`, `bi`, `a+bi`, `a-bi` (exponents allowed, `i` alone means 1i).
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("cannot parse complex literal {s:?}; expected a+bi");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not the leading sign or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { 0.0 } else { re.parse::<f64>().map_err(|_| bad())? };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(C64::new(re, im))
}

/// `a+bi` with 15 significant digits.
pub fn format_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.14e}{}{:.14e}i", z.re, sign, z.im.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        assert_eq!(parse_complex("0+1i").unwrap(), C64::new(0.0, 1.0));
        assert_eq!(parse_complex("0.2-0.05i").unwrap(), C64::new(0.2, -0.05));
        assert_eq!(parse_complex("-3").unwrap(), C64::new(-3.0, 0.0));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), C64::new(0.0, 2.5));
        assert_eq!(parse_complex("1e-3-2E+2i").unwrap(), C64::new(1e-3, -200.0));
        assert_eq!(parse_complex(" 1 + 2i ").unwrap(), C64::new(1.0, 2.0));
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn display_round_trips() {
        for z in [C64::new(0.1, -0.3), C64::new(-1.0 / 3.0, 2.0f64.sqrt()), C64::new(6.02e23, -1e-300)] {
            let s = format!("{}{:+}i", z.re, z.im);
            assert_eq!(parse_complex(&s).unwrap(), z);
        }
    }

    #[test]
    fn formats_fifteen_digits() {
        assert_eq!(format_complex(C64::new(1.0, -0.5)), "1.00000000000000e0-5.00000000000000e-1i");
    }
}
