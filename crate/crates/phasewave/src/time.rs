//! Time arguments: absolute values (`0.25`) or multiples of the standing-wave
//! period written with `T` (`T`, `T/4`, `3T/4`, `0.5T`, `2*T/3`).

use crate::{Error, Result};

pub fn parse_time(text: &str, period: f64) -> Result<f64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Usage(format!("cannot parse time `{text}`"));
    let value = match s.find('T') {
        None => s.parse::<f64>().map_err(|_| bad())?,
        Some(pos) => {
            let head = s[..pos].trim_end_matches('*');
            let tail = &s[pos + 1..];
            let factor = match head {
                "" => 1.0,
                "-" => -1.0,
                h => h.parse::<f64>().map_err(|_| bad())?,
            };
            let divisor = match tail {
                "" => 1.0,
                t => t
                    .strip_prefix('/')
                    .ok_or_else(bad)?
                    .parse::<f64>()
                    .map_err(|_| bad())?,
            };
            if divisor == 0.0 {
                return Err(bad());
            }
            factor * period / divisor
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Comma-separated list of times.
pub fn parse_times(text: &str, period: f64) -> Result<Vec<f64>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_time(s, period))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_of_the_period() {
        let period = std::f64::consts::PI / 3.0;
        assert_eq!(parse_time("T", period).unwrap(), period);
        assert_eq!(parse_time("T/4", period).unwrap(), period / 4.0);
        assert_eq!(parse_time("3T/4", period).unwrap(), 3.0 * period / 4.0);
        assert_eq!(parse_time("0.5T", period).unwrap(), 0.5 * period);
        assert_eq!(parse_time("2*T/3", period).unwrap(), 2.0 * period / 3.0);
        assert_eq!(parse_time(" 1.25 ", period).unwrap(), 1.25);
        assert_eq!(parse_time("-T/2", period).unwrap(), -period / 2.0);
    }

    #[test]
    fn lists_and_rejections() {
        let ts = parse_times("0,T/4, T/2", 4.0).unwrap();
        assert_eq!(ts, vec![0.0, 1.0, 2.0]);
        for bad in ["T/0", "x", "T4", "T/", "nan", "3TT"] {
            assert!(parse_time(bad, 1.0).is_err(), "{bad}");
        }
    }
}
