//! Exact rational scalars.
//!
//! All coordinates and coordinate-derived quantities that feed geometric
//! decisions are kept as arbitrary-precision rationals. Square roots are
//! taken exactly when the radicand is a perfect square and otherwise stay
//! symbolic: the comparison helpers below decide signs of expressions such
//! as `sqrt(a) + sqrt(b) - sqrt(d)` by repeated squaring, so no tolerance
//! ever enters a yes/no decision.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational number, always stored in reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

/// Errors produced when parsing or operating on scalars.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("empty numeric string")]
    Empty,
    #[error("malformed numeric string {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar(r)
    }

    /// Exact conversion of a finite double; every finite `f64` is a dyadic
    /// rational, so nothing is lost.
    pub fn from_f64_exact(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(Scalar)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Scalar(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Ceiling as `usize`; panics on negative values or overflow.
    pub fn ceil_usize(&self) -> usize {
        let c = self.ceil_int();
        c.to_usize().expect("ceiling does not fit in usize")
    }

    /// Largest multiple of `10^-digits` that is `<= self`.
    pub fn round_down_decimals(&self, digits: u32) -> Self {
        let scale = pow10(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let floored = scaled.floor().to_integer();
        Scalar(BigRational::new(floored, scale))
    }

    /// Smallest multiple of `10^-digits` that is `>= self`.
    pub fn round_up_decimals(&self, digits: u32) -> Self {
        let scale = pow10(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let ceiled = scaled.ceil().to_integer();
        Scalar(BigRational::new(ceiled, scale))
    }

    /// Exact square root if the reduced numerator and denominator are both
    /// perfect squares; `None` otherwise (including negative inputs).
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let num = perfect_sqrt(self.0.numer().magnitude())?;
        let den = perfect_sqrt(self.0.denom().magnitude())?;
        Some(Scalar(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    /// `sqrt` of a nonnegative scalar as a double.
    pub fn sqrt_f64(&self) -> f64 {
        let v = self.to_f64();
        debug_assert!(v >= 0.0);
        v.sqrt()
    }

    /// Largest multiple of `10^-digits` whose square is `<= self`.
    /// Requires `self >= 0`.
    pub fn sqrt_round_down_decimals(&self, digits: u32) -> Self {
        assert!(!self.is_negative(), "sqrt of negative scalar");
        let scale = pow10(digits);
        // floor(sqrt(self) * 10^d) = isqrt(floor(self * 10^(2d)))
        let scaled = &self.0 * BigRational::from_integer(&scale * &scale);
        let inner = scaled.floor().to_integer();
        let root = inner.magnitude().sqrt();
        Scalar(BigRational::new(BigInt::from(root), scale))
    }

    /// Smallest multiple of `10^-digits` whose square is `>= self`.
    /// Requires `self >= 0`.
    pub fn sqrt_round_up_decimals(&self, digits: u32) -> Self {
        let down = self.sqrt_round_down_decimals(digits);
        if &down.square() == self {
            down
        } else {
            down + Scalar(BigRational::new(BigInt::one(), pow10(digits)))
        }
    }

    /// Renders as a finite decimal when the reduced denominator is of the
    /// form `2^a * 5^b`; `None` otherwise.
    pub fn to_decimal_string_exact(&self) -> Option<String> {
        let den = self.0.denom().magnitude().clone();
        let (twos, rest) = strip_factor(den, 2u32);
        let (fives, rest) = strip_factor(rest, 5u32);
        if !rest.is_one() {
            return None;
        }
        let digits = twos.max(fives);
        let scale = pow10(digits);
        let scaled = (&self.0 * BigRational::from_integer(scale)).to_integer();
        let neg = scaled.is_negative();
        let mag = scaled.magnitude().to_string();
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        if digits == 0 {
            s.push_str(&mag);
            return Some(s);
        }
        let d = digits as usize;
        if mag.len() <= d {
            s.push_str("0.");
            s.push_str(&"0".repeat(d - mag.len()));
            s.push_str(&mag);
        } else {
            let (int_part, frac_part) = mag.split_at(mag.len() - d);
            s.push_str(int_part);
            s.push('.');
            s.push_str(frac_part);
        }
        Some(s)
    }
}

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

fn strip_factor(mut n: BigUint, f: u32) -> (u32, BigUint) {
    let f = BigUint::from(f);
    let mut count = 0;
    while !n.is_one() && (&n % &f).is_zero() {
        n /= &f;
        count += 1;
    }
    (count, n)
}

fn perfect_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact sign of `sqrt(a) + sqrt(b) - sqrt(d)` for nonnegative rationals.
///
/// Decided by squaring twice: `sqrt(a) + sqrt(b) <=> sqrt(d)` reduces to
/// comparing `2 sqrt(ab)` with `d - a - b`, whose sign is decidable after
/// one more squaring. Used for shortcut legality and collinearity.
pub fn cmp_sqrt_sum(a: &Scalar, b: &Scalar, d: &Scalar) -> Ordering {
    assert!(
        !a.is_negative() && !b.is_negative() && !d.is_negative(),
        "radicands must be nonnegative"
    );
    // Squaring once reduces the question to 2 sqrt(ab) <=> d - a - b.
    let m = d - &(a + b);
    if m.is_negative() {
        return Ordering::Greater;
    }
    // Both sides nonnegative; squaring again is monotone.
    let lhs = Scalar::from_int(4) * a * b;
    lhs.cmp(&m.square())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts integers (`"-3"`), fractions (`"308/3"`), and exact decimals
    /// (`"2.125"`).
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Empty);
        }
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| ScalarError::Malformed(s.to_string()))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| ScalarError::Malformed(s.to_string()))?;
            if den.is_zero() {
                return Err(ScalarError::ZeroDenominator(s.to_string()));
            }
            return Ok(Scalar(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let sign = if int_part.trim_start().starts_with('-') {
                -1
            } else {
                1
            };
            let int_part = int_part.trim();
            let int_digits = int_part.trim_start_matches(['-', '+']);
            if !int_digits.chars().all(|c| c.is_ascii_digit())
                || !frac_part.chars().all(|c| c.is_ascii_digit())
                || frac_part.is_empty()
            {
                return Err(ScalarError::Malformed(s.to_string()));
            }
            let int_val: BigInt = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                int_digits
                    .parse()
                    .map_err(|_| ScalarError::Malformed(s.to_string()))?
            };
            let frac_val: BigInt = frac_part
                .parse()
                .map_err(|_| ScalarError::Malformed(s.to_string()))?;
            let scale = pow10(frac_part.len() as u32);
            let magnitude = int_val * &scale + frac_val;
            return Ok(Scalar(BigRational::new(magnitude * BigInt::from(sign), scale)));
        }
        let v: BigInt = s
            .parse()
            .map_err(|_| ScalarError::Malformed(s.to_string()))?;
        Ok(Scalar(BigRational::from_integer(v)))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0 $op rhs.0)
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0 $op &rhs.0)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(&self.0 $op rhs.0)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(s("42"), Scalar::from_int(42));
        assert_eq!(s("-7"), Scalar::from_int(-7));
        assert_eq!(s("308/3"), Scalar::from_ratio(308, 3));
        assert_eq!(s("-11/5"), Scalar::from_ratio(-11, 5));
        assert_eq!(s("2.125"), Scalar::from_ratio(17, 8));
        assert_eq!(s("-0.5"), Scalar::from_ratio(-1, 2));
        assert_eq!(s("0.25"), Scalar::from_ratio(1, 4));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Scalar::from_str("").is_err());
        assert!(Scalar::from_str("1/0").is_err());
        assert!(Scalar::from_str("a.b").is_err());
        assert!(Scalar::from_str("1.2.3").is_err());
        assert!(Scalar::from_str("1e5").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(s("4/2").to_string(), "2");
        assert_eq!(s("6/4").to_string(), "3/2");
        assert_eq!(s("-6/4").to_string(), "-3/2");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(s("17/8").to_decimal_string_exact().unwrap(), "2.125");
        assert_eq!(s("-1/4").to_decimal_string_exact().unwrap(), "-0.25");
        assert_eq!(s("5").to_decimal_string_exact().unwrap(), "5");
        assert_eq!(s("1/3").to_decimal_string_exact(), None);
        assert_eq!(s("3/1000").to_decimal_string_exact().unwrap(), "0.003");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(s("4/9").sqrt_exact().unwrap(), s("2/3"));
        assert_eq!(s("25").sqrt_exact().unwrap(), s("5"));
        assert_eq!(s("0").sqrt_exact().unwrap(), s("0"));
        assert!(s("2").sqrt_exact().is_none());
        assert!(s("-4").sqrt_exact().is_none());
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(s("1/3").round_down_decimals(2), s("33/100"));
        assert_eq!(s("1/3").round_up_decimals(2), s("34/100"));
        assert_eq!(s("-1/3").round_down_decimals(2), s("-34/100"));
        assert_eq!(s("-1/3").round_up_decimals(2), s("-33/100"));
        assert_eq!(s("1/4").round_down_decimals(2), s("1/4"));
        assert_eq!(s("1/4").round_up_decimals(2), s("1/4"));
    }

    #[test]
    fn sqrt_decimal_rounding() {
        // sqrt(2) = 1.41421356...
        assert_eq!(s("2").sqrt_round_down_decimals(4), s("14142/10000"));
        assert_eq!(s("2").sqrt_round_up_decimals(4), s("14143/10000"));
        // Perfect square: both directions agree.
        assert_eq!(s("9/4").sqrt_round_down_decimals(3), s("3/2"));
        assert_eq!(s("9/4").sqrt_round_up_decimals(3), s("3/2"));
    }

    #[test]
    fn ceil_helpers() {
        assert_eq!(s("17/3").ceil_usize(), 6);
        assert_eq!(s("6").ceil_usize(), 6);
        assert_eq!(s("-5/2").ceil_int(), BigInt::from(-2));
    }

    #[test]
    fn sqrt_sum_comparison() {
        // 3 + 4 = 7 exactly (radicands 9, 16, 49).
        assert_eq!(
            cmp_sqrt_sum(&s("9"), &s("16"), &s("49")),
            Ordering::Equal
        );
        // sqrt(2) + sqrt(2) > 2 = sqrt(4)? 2*sqrt(2) ~ 2.83 > 2.
        assert_eq!(
            cmp_sqrt_sum(&s("2"), &s("2"), &s("4")),
            Ordering::Greater
        );
        // sqrt(1) + sqrt(1) < sqrt(9).
        assert_eq!(cmp_sqrt_sum(&s("1"), &s("1"), &s("9")), Ordering::Less);
        // Degenerate: 0 + 0 = 0.
        assert_eq!(cmp_sqrt_sum(&s("0"), &s("0"), &s("0")), Ordering::Equal);
        // Boundary of a removal gate: (5/6)^2 + ... with tight equality.
        // sqrt(25/36 x^2) + sqrt(x^2) vs sqrt((11/6 x)^2) for x = 3.
        assert_eq!(
            cmp_sqrt_sum(&s("25/4"), &s("9"), &s("121/4")),
            Ordering::Equal
        );
    }

    #[test]
    fn dyadic_from_f64_is_exact() {
        let v = Scalar::from_f64_exact(0.1).unwrap();
        // 0.1 is not exactly 1/10 in binary; conversion must preserve bits.
        assert_eq!(v.to_f64(), 0.1);
        assert_ne!(v, s("1/10"));
        assert_eq!(Scalar::from_f64_exact(0.5).unwrap(), s("1/2"));
    }
}
