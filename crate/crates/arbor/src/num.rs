//! Exact numeric foundations: arbitrary-precision naturals and reduced
//! rationals, plus the decimal renderer used for table output.
//!
//! `Natural` and `ExactRatio` are the `num` crate's big integer and big
//! rational; both are exact by construction and `ExactRatio` is always kept
//! in lowest terms with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Natural = BigUint;
pub type ExactRatio = BigRational;

pub fn nat(v: u64) -> Natural {
    BigUint::from(v)
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn ratio_u(num: u64, den: u64) -> ExactRatio {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn nat_to_ratio(n: &Natural) -> ExactRatio {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        acc *= nat(n - i);
        acc /= nat(i + 1);
    }
    acc
}

/// base^exp for naturals; 0^0 = 1.
pub fn nat_pow(base: u64, exp: u64) -> Natural {
    nat(base).pow(exp as u32)
}

/// Render a rational to `sig` significant decimal digits, rounding
/// half-to-even, with trailing zeros stripped. Matches the register the
/// reference tables print in (e.g. 0.679090 renders as "0.67909").
pub fn dec_sig(r: &ExactRatio, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let v = r.abs();
    let ten = BigInt::from(10u32);

    // exponent e with 10^e <= v < 10^(e+1)
    let num_digits = v.numer().to_string().len() as i64;
    let den_digits = v.denom().to_string().len() as i64;
    let mut e = num_digits - den_digits;
    let pow_e = |e: i64| -> ExactRatio {
        if e >= 0 {
            BigRational::from_integer(ten.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), ten.pow((-e) as u32))
        }
    };
    if v < pow_e(e) {
        e -= 1;
    } else if v >= pow_e(e + 1) {
        e += 1;
    }
    debug_assert!(v >= pow_e(e) && v < pow_e(e + 1));

    // scale so that sig digits sit left of the decimal point, then round
    let shift = sig as i64 - 1 - e;
    let scaled = &v * pow_e(shift);
    let mut m = round_half_even(&scaled);
    let mut e = e;
    if m == ten.pow(sig as u32) {
        m /= &ten;
        e += 1;
    }

    let digits = m.to_string();
    debug_assert_eq!(digits.len(), sig);
    let mut s = if e >= 0 {
        let e = e as usize;
        if e + 1 >= sig {
            // integral value; pad with zeros
            let mut t = digits;
            t.push_str(&"0".repeat(e + 1 - sig));
            t
        } else {
            format!("{}.{}", &digits[..e + 1], &digits[e + 1..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    };
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if neg {
        format!("-{}", s)
    } else {
        s
    }
}

/// Nearest integer, ties to even.
fn round_half_even(r: &ExactRatio) -> BigInt {
    let num = r.numer();
    let den = r.denom();
    let q = num / den;
    let rem = num - &q * den;
    let twice = &rem * BigInt::from(2u32);
    match twice.cmp(den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if (&q % BigInt::from(2u32)).is_zero() {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Convert a rational to f64 for display-only gap columns.
pub fn ratio_to_f64(r: &ExactRatio) -> f64 {
    // scale through a fixed power of ten to stay within f64 range
    let sig = dec_sig(r, 17);
    sig.parse().unwrap_or_else(|_| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// JSON object {"num": "...", "den": "...", "dec": "..."} for a rational.
pub fn ratio_json(r: &ExactRatio) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "dec": dec_sig(r, 6),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), nat(6));
        assert_eq!(binomial(10, 0), nat(1));
        assert_eq!(binomial(5, 6), nat(0));
        assert_eq!(binomial(50, 25).to_string(), "126410606437752");
    }

    #[test]
    fn dec_sig_basic() {
        assert_eq!(dec_sig(&ratio_u(16, 34), 6), "0.470588");
        assert_eq!(dec_sig(&ratio_u(1, 1), 6), "1");
        assert_eq!(dec_sig(&ratio_u(48, 78), 6), "0.615385");
        assert_eq!(dec_sig(&ratio_u(1, 3), 3), "0.333");
        assert_eq!(dec_sig(&ratio_u(2, 3), 3), "0.667");
        assert_eq!(dec_sig(&ratio_u(1234567, 1), 4), "1235000");
        assert_eq!(dec_sig(&ratio_u(0, 1), 6), "0");
    }

    #[test]
    fn dec_sig_half_even() {
        // 0.125 at 2 sig digits: tie, rounds to even 0.12
        assert_eq!(dec_sig(&ratio_u(125, 1000), 2), "0.12");
        // 0.135 at 2 sig digits: tie, 13 is odd -> 0.14
        assert_eq!(dec_sig(&ratio_u(135, 1000), 2), "0.14");
    }

    #[test]
    fn dec_sig_strips_trailing_zeros() {
        assert_eq!(dec_sig(&ratio_u(9921, 10000), 6), "0.9921");
    }

    #[test]
    fn dec_sig_carry() {
        // 0.99999999 rounds up to 1 at 6 sig digits
        assert_eq!(dec_sig(&ratio_u(99999999, 100000000), 6), "1");
    }
}
