//! Exact arithmetic in the golden-ratio ring.
//!
//! A [`QNum`] is a number of the form `(a + b·τ)/den` with integer `a`, `b`,
//! positive integer `den`, and `τ = (1+√5)/2`. Since `τ² = τ + 1` the set is
//! closed under ring operations, and since the field norm `a² + ab − b²`
//! vanishes only at zero it is closed under division as well. Every
//! comparison in this crate bottoms out in [`QNum::sign`], which decides the
//! sign of `a + b·τ` by integer arithmetic alone — no floating point is ever
//! consulted on a decision path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::audit;
use crate::error::CoreError;

/// Exact element `(a + b·τ)/den` of Z[τ] extended by rational scalars.
///
/// The representation is normalized on construction: `den ≥ 1` and
/// `gcd(a, b, den) = 1`, so derived `PartialEq`/`Hash` agree with numeric
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QNum {
    a: BigInt,
    b: BigInt,
    den: BigInt,
}

impl QNum {
    /// Builds `(a + b·τ)/den`, normalizing the representation.
    pub fn new<A, B, D>(a: A, b: B, den: D) -> Self
    where
        A: Into<BigInt>,
        B: Into<BigInt>,
        D: Into<BigInt>,
    {
        Self::from_parts(a.into(), b.into(), den.into())
    }

    fn from_parts(mut a: BigInt, mut b: BigInt, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "QNum denominator must be nonzero");
        if den.is_negative() {
            a = -a;
            b = -b;
            den = -den;
        }
        let g = a.gcd(&b).gcd(&den);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            den /= &g;
        }
        if a.is_zero() && b.is_zero() {
            den = BigInt::one();
        }
        QNum { a, b, den }
    }

    pub fn zero() -> Self {
        QNum::new(0, 0, 1)
    }

    pub fn one() -> Self {
        QNum::new(1, 0, 1)
    }

    /// The golden ratio τ itself.
    pub fn tau() -> Self {
        QNum::new(0, 1, 1)
    }

    pub fn from_integer<I: Into<BigInt>>(n: I) -> Self {
        QNum::new(n.into(), 0, 1)
    }

    /// Exact rational `num/den`.
    pub fn from_ratio<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Self {
        QNum::new(num.into(), 0, den.into())
    }

    pub fn numer_a(&self) -> &BigInt {
        &self.a
    }

    pub fn numer_b(&self) -> &BigInt {
        &self.b
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the τ-coefficient vanishes, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True for an integer value (rational with denominator 1).
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.den.is_one()
    }

    /// Exact sign of the value, decided by integer arithmetic.
    ///
    /// With `s = 2a + b` and `t = b` the value has the sign of `s + t√5`.
    /// When `s` and `t` agree in sign the answer is immediate; otherwise the
    /// comparison of `s²` against `5t²` settles it (`s² = 5t²` forces
    /// `s = t = 0` because √5 is irrational).
    pub fn sign(&self) -> i8 {
        audit::record_exact_cmp();
        let s: BigInt = (&self.a << 1) + &self.b;
        let t = &self.b;
        let ss = s.sign();
        let ts = t.sign();
        use num_bigint::Sign::*;
        match (ss, ts) {
            (NoSign, NoSign) => 0,
            (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => 1,
            (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => -1,
            (Plus, Minus) | (Minus, Plus) => {
                let lhs = &s * &s;
                let rhs = 5 * t * t;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => ss as i8,
                    Ordering::Less => ts as i8,
                    // s² = 5t² has no nonzero integer solutions.
                    Ordering::Equal => unreachable!("√5 is irrational"),
                }
            }
        }
    }

    /// Total order consistent with the real values.
    pub fn cmp_exact(&self, other: &QNum) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> QNum {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min_of(self, other: QNum) -> QNum {
        if self.cmp_exact(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn max_of(self, other: QNum) -> QNum {
        if self.cmp_exact(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn square(&self) -> QNum {
        self * self
    }

    /// Exact floor of the value.
    ///
    /// Writing the value as `(2a + b + b√5)/(2den)`, the integer part of
    /// `b√5` is `isqrt(5b²)` for `b ≥ 0` and `−isqrt(5b²)−1` for `b < 0`
    /// (5b² is never a perfect square for `b ≠ 0`), after which a Euclidean
    /// floor division finishes the job.
    pub fn floor(&self) -> BigInt {
        use num_integer::Roots;
        let num: BigInt = (&self.a << 1) + &self.b;
        let floor_b_sqrt5 = if self.b.is_zero() {
            BigInt::zero()
        } else {
            let r = (5 * &self.b * &self.b).sqrt();
            if self.b.is_positive() {
                r
            } else {
                -r - 1
            }
        };
        (num + floor_b_sqrt5).div_floor(&(&self.den << 1))
    }

    pub fn ceil(&self) -> BigInt {
        -((-self).floor())
    }

    /// Exact multiplicative inverse; `None` for zero.
    ///
    /// Uses the conjugate `(a+b) − b·τ` and the rational norm `a² + ab − b²`.
    pub fn checked_inv(&self) -> Option<QNum> {
        if self.is_zero() {
            return None;
        }
        let norm: BigInt = &self.a * &self.a + &self.a * &self.b - &self.b * &self.b;
        let ca: BigInt = (&self.a + &self.b) * &self.den;
        let cb: BigInt = -&self.b * &self.den;
        Some(QNum::from_parts(ca, cb, norm))
    }

    pub fn checked_div(&self, rhs: &QNum) -> Option<QNum> {
        rhs.checked_inv().map(|inv| self * &inv)
    }

    /// Serializes as the canonical `"a b den"` triple.
    pub fn to_triple_string(&self) -> String {
        format!("{} {} {}", self.a, self.b, self.den)
    }

    /// Parses the `"a b den"` triple form.
    pub fn from_triple_str(s: &str) -> Result<QNum, CoreError> {
        let mut it = s.split_ascii_whitespace();
        let mut next = |what: &str| {
            it.next()
                .ok_or_else(|| CoreError::Parse(format!("missing {what} in QNum triple {s:?}")))
        };
        let a = BigInt::from_str(next("a")?)
            .map_err(|e| CoreError::Parse(format!("bad QNum component in {s:?}: {e}")))?;
        let b = BigInt::from_str(next("b")?)
            .map_err(|e| CoreError::Parse(format!("bad QNum component in {s:?}: {e}")))?;
        let den = BigInt::from_str(next("den")?)
            .map_err(|e| CoreError::Parse(format!("bad QNum component in {s:?}: {e}")))?;
        if it.next().is_some() {
            return Err(CoreError::Parse(format!("trailing data in QNum triple {s:?}")));
        }
        if den.is_zero() {
            return Err(CoreError::Parse(format!("zero denominator in {s:?}")));
        }
        // Non-canonical triples are accepted and renormalized.
        Ok(QNum::from_parts(a, b, den))
    }

    /// Parses a plain exact rational: `"7"`, `"-3/4"`, or a finite decimal
    /// like `"2.5"`. τ-components cannot be written in this form.
    pub fn parse_rational(s: &str) -> Result<QNum, CoreError> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim())
                .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))?;
            if d.is_zero() {
                return Err(CoreError::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(QNum::from_parts(n, BigInt::zero(), d));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let neg = int.trim_start().starts_with('-');
            let i = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                BigInt::from_str(int).map_err(|e| CoreError::Parse(format!("bad decimal {s:?}: {e}")))?
            };
            if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
                return Err(CoreError::Parse(format!("bad decimal {s:?}")));
            }
            let f = BigInt::from_str(frac).expect("digits");
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let mag = i.abs() * &scale + f;
            let num = if neg { -mag } else { mag };
            return Ok(QNum::from_parts(num, BigInt::zero(), scale));
        }
        let n = BigInt::from_str(s).map_err(|e| CoreError::Parse(format!("bad integer {s:?}: {e}")))?;
        Ok(QNum::from_integer(n))
    }
}

impl fmt::Debug for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.den.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.den)
            }
        } else if self.den.is_one() {
            write!(f, "({}+{}τ)", self.a, self.b)
        } else {
            write!(f, "({}+{}τ)/{}", self.a, self.b, self.den)
        }
    }
}

impl fmt::Display for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl PartialOrd for QNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for QNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QNum {
            type Output = QNum;
            fn $method(self, rhs: QNum) -> QNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QNum> for QNum {
            type Output = QNum;
            fn $method(self, rhs: &QNum) -> QNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<QNum> for &QNum {
            type Output = QNum;
            fn $method(self, rhs: QNum) -> QNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Add<&QNum> for &QNum {
    type Output = QNum;
    fn add(self, rhs: &QNum) -> QNum {
        QNum::from_parts(
            &self.a * &rhs.den + &rhs.a * &self.den,
            &self.b * &rhs.den + &rhs.b * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&QNum> for &QNum {
    type Output = QNum;
    fn sub(self, rhs: &QNum) -> QNum {
        QNum::from_parts(
            &self.a * &rhs.den - &rhs.a * &self.den,
            &self.b * &rhs.den - &rhs.b * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&QNum> for &QNum {
    type Output = QNum;
    fn mul(self, rhs: &QNum) -> QNum {
        // (a1 + b1τ)(a2 + b2τ) with τ² = τ + 1.
        let bb = &self.b * &rhs.b;
        QNum::from_parts(
            &self.a * &rhs.a + &bb,
            &self.a * &rhs.b + &self.b * &rhs.a + bb,
            &self.den * &rhs.den,
        )
    }
}

impl Div<&QNum> for &QNum {
    type Output = QNum;
    fn div(self, rhs: &QNum) -> QNum {
        self.checked_div(rhs).expect("division by zero QNum")
    }
}

impl Neg for &QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum {
            a: -&self.a,
            b: -&self.b,
            den: self.den.clone(),
        }
    }
}

impl Neg for QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum {
            a: -self.a,
            b: -self.b,
            den: self.den,
        }
    }
}

impl From<i64> for QNum {
    fn from(n: i64) -> Self {
        QNum::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, den: i64) -> QNum {
        QNum::new(a, b, den)
    }

    #[test]
    fn sign_of_zero() {
        assert_eq!(q(0, 0, 1).sign(), 0);
    }

    #[test]
    fn sign_of_tau_minus_one() {
        // τ − 1 ≈ 0.618
        assert_eq!(q(-1, 1, 1).sign(), 1);
    }

    #[test]
    fn sign_tight_case() {
        // 13 − 8τ ≈ 0.0557: 8τ = 4 + 4√5 ≈ 12.944.
        assert_eq!(q(13, -8, 1).sign(), 1);
        // And the mirror, −13 + 8τ.
        assert_eq!(q(-13, 8, 1).sign(), -1);
    }

    #[test]
    fn tau_squared_is_tau_plus_one() {
        let tau = QNum::tau();
        assert_eq!(&tau * &tau, &tau + &QNum::one());
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(q(2, 0, 1).cmp_exact(&q(2, 0, 1)), Ordering::Equal);
        assert_eq!(QNum::tau().cmp_exact(&q(2, 0, 1)), Ordering::Less);
        // 2 + 3τ ≈ 6.854 < 7
        assert_eq!(q(2, 3, 1).cmp_exact(&q(7, 0, 1)), Ordering::Less);
    }

    #[test]
    fn normalization_shares_gcd() {
        let x = QNum::new(2, 4, 6);
        assert_eq!(x.to_triple_string(), "1 2 3");
        let y = QNum::new(-2, 0, -4);
        assert_eq!(y.to_triple_string(), "1 0 2");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(QNum::tau().floor(), BigInt::from(1));
        assert_eq!(QNum::tau().ceil(), BigInt::from(2));
        assert_eq!(q(-1, 1, 1).floor(), BigInt::from(0)); // τ−1 ≈ 0.618
        assert_eq!((-QNum::tau()).floor(), BigInt::from(-2));
        assert_eq!(q(7, 0, 2).floor(), BigInt::from(3));
        assert_eq!(q(-7, 0, 2).floor(), BigInt::from(-4));
        assert_eq!(q(6, 0, 2).floor(), BigInt::from(3));
    }

    #[test]
    fn inverse_round_trips() {
        let x = q(3, -2, 5);
        let inv = x.checked_inv().unwrap();
        assert_eq!(&x * &inv, QNum::one());
        assert!(QNum::zero().checked_inv().is_none());
        // 1/τ = τ − 1.
        assert_eq!(QNum::tau().checked_inv().unwrap(), q(-1, 1, 1));
    }

    #[test]
    fn triple_round_trip() {
        let x = q(-13, 8, 3);
        let s = x.to_triple_string();
        assert_eq!(QNum::from_triple_str(&s).unwrap(), x);
        assert!(QNum::from_triple_str("1 2").is_err());
        assert!(QNum::from_triple_str("1 2 0").is_err());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(QNum::parse_rational("7").unwrap(), q(7, 0, 1));
        assert_eq!(QNum::parse_rational("-3/4").unwrap(), q(-3, 0, 4));
        assert_eq!(QNum::parse_rational("2.5").unwrap(), q(5, 0, 2));
        assert_eq!(QNum::parse_rational("-0.25").unwrap(), q(-1, 0, 4));
        assert!(QNum::parse_rational("1/0").is_err());
        assert!(QNum::parse_rational("x").is_err());
    }
}
