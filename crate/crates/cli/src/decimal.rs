use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Plain decimal rendering of `r` rounded (half up) to `digits` significant
/// digits, e.g. `0.200000000000` for 1/5 at 12 digits.
pub fn significant_digits(r: &BigRational, digits: u32) -> String {
    assert!(digits > 0, "need at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().magnitude().clone();
    let den = r.denom().magnitude().clone();

    // e with 10^e <= |r| < 10^(e+1)
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    if scaled(&num, &den, -e) < BigUint::from(1u32) {
        e -= 1;
    }
    let shift = i64::from(digits) - 1 - e;
    let mut mantissa = rounded(&num, &den, shift);
    if mantissa == BigUint::from(10u32).pow(digits) {
        mantissa /= 10u32;
        e += 1;
    }

    let text = mantissa.to_string();
    let body = if e >= 0 {
        let split = (e + 1) as usize;
        if split >= text.len() {
            format!("{text}{}", "0".repeat(split - text.len()))
        } else {
            format!("{}.{}", &text[..split], &text[split..])
        }
    } else {
        format!("0.{}{text}", "0".repeat((-e - 1) as usize))
    };
    format!("{sign}{body}")
}

/// `floor(num * 10^shift / den)`.
fn scaled(num: &BigUint, den: &BigUint, shift: i64) -> BigUint {
    let (n, d) = apply_shift(num, den, shift);
    n / d
}

/// `round_half_up(num * 10^shift / den)`.
fn rounded(num: &BigUint, den: &BigUint, shift: i64) -> BigUint {
    let (n, d) = apply_shift(num, den, shift);
    let (q, r) = n.div_rem(&d);
    if r * 2u32 >= d {
        q + 1u32
    } else {
        q
    }
}

fn apply_shift(num: &BigUint, den: &BigUint, shift: i64) -> (BigUint, BigUint) {
    let p = BigUint::from(10u32).pow(shift.unsigned_abs() as u32);
    if shift >= 0 {
        (num * p, den.clone())
    } else {
        (num.clone(), den * p)
    }
}
