//! Flag value parsers: exact rationals for `l` and half-integers for `u`.

use num_integer::Integer;
use sqc_core::HalfInt;

/// Parses `p/q` (reduced first, then divided once) or a plain decimal.
pub fn rational(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
            if q == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            let g = p.gcd(&q);
            let (p, q) = (p / g, q / g);
            let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
            p as f64 / q as f64
        }
        None => s
            .parse::<f64>()
            .map_err(|e| format!("bad number {s:?}: {e}"))?,
    };
    if !value.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    Ok(value)
}

pub fn half_int(s: &str) -> Result<HalfInt, String> {
    let x = rational(s)?;
    HalfInt::try_from_f64(x).map_err(|e| e.to_string())
}
