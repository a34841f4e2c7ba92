//! Decimal display rounding.
//!
//! Values are rounded on the shortest decimal representation of the f64
//! (the form `{}` prints), not on its binary expansion, so a mean of
//! 2-decimal inputs that lands on an exact decimal such as 0.585 is
//! treated as that decimal. Ties — an exact trailing `5` — round to the
//! odd neighbor. Internal values keep full precision; rounding is applied
//! only when a table cell is displayed or compared at printed precision.

/// Render `x` rounded to `dp` decimal places, e.g. `format_display(0.585, 2)`
/// is `"0.59"` and `format_display(676.333, 0)` is `"676"`.
pub fn format_display(x: f64, dp: u32) -> String {
    debug_assert!(x.is_finite(), "display rounding expects finite values");
    let neg = x.is_sign_negative() && x != 0.0;
    let s = format!("{}", x.abs());
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i.to_string(), f.to_string()),
        None => (s, String::new()),
    };
    let dp = dp as usize;

    let mut kept: Vec<u8> = int_part.bytes().collect();
    kept.extend(frac_part.bytes().take(dp));
    // Pad when the representation is shorter than the requested precision.
    while kept.len() < int_part.len() + dp {
        kept.push(b'0');
    }

    let rest = frac_part.as_bytes().get(dp..).unwrap_or(&[]);
    let round_up = match rest.first() {
        None => false,
        Some(&d) if d > b'5' => true,
        Some(&d) if d < b'5' => false,
        _ => {
            if rest[1..].iter().any(|&d| d != b'0') {
                true
            } else {
                // Exact midpoint: round to the odd neighbor.
                let last = *kept.last().expect("kept digits non-empty");
                (last - b'0') % 2 == 0
            }
        }
    };
    if round_up {
        increment_digits(&mut kept);
    }

    let digits = String::from_utf8(kept).expect("ascii digits");
    let mut out = if dp == 0 {
        digits
    } else {
        let split = digits.len() - dp;
        format!("{}.{}", &digits[..split], &digits[split..])
    };
    if neg && out.bytes().any(|b| (b'1'..=b'9').contains(&b)) {
        out.insert(0, '-');
    }
    out
}

/// Rounded numeric value of [`format_display`].
pub fn round_display(x: f64, dp: u32) -> f64 {
    format_display(x, dp).parse().expect("valid decimal string")
}

fn increment_digits(digits: &mut Vec<u8>) {
    for d in digits.iter_mut().rev() {
        if *d == b'9' {
            *d = b'0';
        } else {
            *d += 1;
            return;
        }
    }
    digits.insert(0, b'1');
}
