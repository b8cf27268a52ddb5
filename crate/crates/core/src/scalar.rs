//! Numeric backends.
//!
//! Every solver in the crate is generic over [`Scalar`]. Two backends ship:
//! `f64` with an absolute comparison tolerance of `1e-9`, and [`Rational`]
//! (arbitrary-precision fractions) where every comparison is exact.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used by `--exact` runs.
pub type Rational = BigRational;

/// Absolute tolerance applied to every floating-point comparison.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub trait Scalar:
    Clone + Debug + PartialOrd + num_traits::Num + Signed + Send + Sync + 'static
{
    /// Comparison slack: `1e-9` for floats, zero for exact arithmetic.
    fn tolerance() -> Self;

    /// Converts a float through its shortest round-trip decimal form, so
    /// `0.05` becomes exactly `1/20` in rational mode.
    fn from_f64(x: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Parses a plain decimal literal (`"60"`, `"0.05"`, `"-1.5e2"`).
    fn parse_decimal(s: &str) -> Option<Self>;

    fn is_finite(&self) -> bool;

    /// Full-precision rendering: shortest round-trip form for floats, exact
    /// decimal or `n/d` for rationals.
    fn display_full(&self) -> String;

    /// Value rounded half away from zero to `decimals` places.
    fn round_display(&self, decimals: u32) -> String;

    fn from_i64(n: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= Self::tolerance()
    }

    /// `self < other` by more than the tolerance.
    fn definitely_lt(&self, other: &Self) -> bool {
        self.clone() + Self::tolerance() < *other
    }

    /// `self <= other` up to the tolerance.
    fn approx_le(&self, other: &Self) -> bool {
        *self <= other.clone() + Self::tolerance()
    }

    fn is_approx_zero(&self) -> bool {
        self.abs() <= Self::tolerance()
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        FLOAT_TOLERANCE
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        let v = f64::from_str(s.trim()).ok()?;
        v.is_finite().then_some(v)
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn display_full(&self) -> String {
        if *self == 0.0 {
            "0".to_string()
        } else {
            format!("{}", self)
        }
    }

    fn round_display(&self, decimals: u32) -> String {
        // Snap away representation noise (1.05 is stored just above or below
        // the tie) before rounding half away from zero.
        let scale = 10f64.powi(decimals as i32);
        let scaled = self * scale;
        let snapped = (scaled * 1e6).round() / 1e6;
        let units = snapped.round() as i128;
        format_units(units, decimals)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for BigRational {
    fn tolerance() -> Self {
        BigRational::zero()
    }

    fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        parse_rational(&format!("{:e}", x))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        parse_rational(s.trim())
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn display_full(&self) -> String {
        if self.is_integer() {
            return self.numer().to_string();
        }
        match terminating_decimal(self) {
            Some(s) => s,
            None => format!("{}/{}", self.numer(), self.denom()),
        }
    }

    fn round_display(&self, decimals: u32) -> String {
        let scale = BigInt::from(10).pow(decimals);
        let scaled = self * BigRational::from_integer(scale);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let magnitude = (scaled.abs() + half).floor().to_integer();
        let units = if scaled.is_negative() { -magnitude } else { magnitude };
        format_big_units(&units, decimals)
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

fn format_units(units: i128, decimals: u32) -> String {
    format_big_units(&BigInt::from(units), decimals)
}

fn format_big_units(units: &BigInt, decimals: u32) -> String {
    let negative = units.is_negative();
    let digits = units.abs().to_string();
    let body = if decimals == 0 {
        digits
    } else {
        let d = decimals as usize;
        let padded = format!("{:0>width$}", digits, width = d + 1);
        let (int, frac) = padded.split_at(padded.len() - d);
        format!("{}.{}", int, frac)
    };
    if negative && units.abs() > BigInt::zero() {
        format!("-{}", body)
    } else {
        body
    }
}

/// Exact decimal expansion when the denominator only has factors 2 and 5.
fn terminating_decimal(r: &BigRational) -> Option<String> {
    let mut den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut twos = 0u32;
    let mut fives = 0u32;
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let places = twos.max(fives);
    let scaled = r * BigRational::from_integer(BigInt::from(10).pow(places));
    let mut s = format_big_units(&scaled.to_integer(), places);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    Some(s)
}

/// Parses `[-]digits[.digits][e[-]digits]` or `n/d` into an exact rational.
fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], i32::from_str(&s[pos + 1..]).ok()?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}", int, frac);
    let mut numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u32))
    })
}
