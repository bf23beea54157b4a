//! The number field every computation is carried out over.
//!
//! Two implementations exist: [`Rational`] (arbitrary precision, exact equality)
//! and [`Approx`] (an `f64` compared against a process-wide tolerance). A single
//! computation is monomorphised over one of them, so the two never mix.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Default comparison tolerance for [`Approx`].
pub const DEFAULT_EPS: f64 = 1e-9;

static EPS_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Sets the global tolerance used by [`Approx`] comparisons.
pub fn set_eps(eps: f64) {
    EPS_BITS.store(eps.to_bits(), Ordering::Relaxed);
}

/// Current global tolerance used by [`Approx`] comparisons.
pub fn eps() -> f64 {
    f64::from_bits(EPS_BITS.load(Ordering::Relaxed))
}

/// Which field a session runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rational,
    Float,
}

impl Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Rational => f.write_str("rational"),
            Mode::Float => f.write_str("float"),
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(Mode::Rational),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode `{other}` (expected rational|float)")),
        }
    }
}

/// Field operations needed by the toolkit.
///
/// Equality (`PartialEq`) is exact for rationals and tolerance-based for floats,
/// and [`Scalar::is_zero`] follows the same rule.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Strictly positive (beyond tolerance in float mode).
    fn is_positive(&self) -> bool;
    /// Square root, when it exists in the field. Rationals only have roots of
    /// perfect squares.
    fn sqrt(&self) -> Option<Self>;
    fn to_f64(&self) -> f64;
    /// Nearest field element to a float: the exact binary value for
    /// rationals.
    fn from_f64(x: f64) -> Self;
    /// Size used to choose pivots; any monotone measure works.
    fn magnitude(&self) -> f64;
    /// Serialized form used by reports: `p/q` for rationals, shortest
    /// round-trip decimal for floats.
    fn to_report(&self) -> String;
    /// The exact value, when the field is the rationals.
    fn to_rational(&self) -> Option<Rational>;

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }

    fn is_negative(&self) -> bool {
        (-self.clone()).is_positive()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Rational;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn sqrt(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).unwrap_or_else(<BigRational as Zero>::zero)
    }

    fn magnitude(&self) -> f64 {
        Scalar::to_f64(&Signed::abs(self))
    }

    fn to_report(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Floating scalar compared against the global tolerance [`eps`].
#[derive(Clone, Copy, Default)]
pub struct Approx(pub f64);

impl Debug for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Debug::fmt(&self.0, f)
    }
}

impl Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        (self.0 - other.0).abs() <= eps()
    }
}

macro_rules! approx_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $m(self, rhs: Approx) -> Approx {
                Approx(self.0 $op rhs.0)
            }
        }
    };
}

approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);
approx_binop!(Div, div, /);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx(-self.0)
    }
}

impl Scalar for Approx {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Approx(0.0)
    }

    fn one() -> Self {
        Approx(1.0)
    }

    fn from_i64(n: i64) -> Self {
        Approx(n as f64)
    }

    fn from_rational(q: &Rational) -> Self {
        Approx(Scalar::to_f64(q))
    }

    fn is_zero(&self) -> bool {
        self.0.abs() <= eps()
    }

    fn is_positive(&self) -> bool {
        self.0 > eps()
    }

    fn sqrt(&self) -> Option<Self> {
        if self.0 < -eps() {
            None
        } else {
            Some(Approx(self.0.max(0.0).sqrt()))
        }
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn from_f64(x: f64) -> Self {
        Approx(x)
    }

    fn magnitude(&self) -> f64 {
        self.0.abs()
    }

    fn to_report(&self) -> String {
        format!("{}", self.0)
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

/// Parses a rational literal: integer, `p/q`, or a finite decimal such as
/// `-0.25` or `1.5e-3` (converted exactly).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(all);
    if scale >= 0 {
        q *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        q /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -q } else { q })
}

/// Human-readable form of a rational: `3`, `-1/2`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions).
pub fn rationalize(x: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let neg = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let a_i = a as i128;
        let p2 = a_i * p1 + p0;
        let q2 = a_i * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-13 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let q = BigRational::new(BigInt::from(p1), BigInt::from(q1));
    Some(if neg { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("3"), Some(q(3, 1)));
        assert_eq!(parse_rational("-1/2"), Some(q(-1, 2)));
        assert_eq!(parse_rational("0.25"), Some(q(1, 4)));
        assert_eq!(parse_rational("-1.5e-1"), Some(q(-3, 20)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn rational_sqrt_only_for_squares() {
        assert_eq!(Scalar::sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(Scalar::sqrt(&q(2, 1)), None);
        assert_eq!(Scalar::sqrt(&q(-1, 1)), None);
    }

    #[test]
    fn default_tolerance() {
        assert_eq!(DEFAULT_EPS, 1e-9);
        assert_eq!(eps(), DEFAULT_EPS);
    }

    #[test]
    fn approx_compares_with_tolerance() {
        assert_eq!(Approx(1.0), Approx(1.0 + 1e-12));
        assert_ne!(Approx(1.0), Approx(1.0 + 1e-6));
        assert!(Approx(1e-12).is_zero());
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        assert_eq!(rationalize(0.75, 1000), Some(q(3, 4)));
        assert_eq!(rationalize(-2.0 / 3.0, 1000), Some(q(-2, 3)));
    }

    #[test]
    fn report_format() {
        assert_eq!(q(3, 1).to_report(), "3/1");
        assert_eq!(Approx(0.1).to_report(), "0.1");
        assert_eq!(format_rational(&q(-1, 2)), "-1/2");
    }
}
