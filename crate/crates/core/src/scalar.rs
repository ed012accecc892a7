//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {den} is not invertible modulo {modulus}")]
    NotInvertible { den: String, modulus: u64 },
    #[error("cannot parse field descriptor `{0}` (expected `q` or `zp:<prime>`)")]
    BadField(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
}

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`; rejects composite moduli.
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if is_prime(p) && p < (1 << 32) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Prime {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps an exact rational into this field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den.inv().ok_or_else(|| ScalarError::NotInvertible {
                    den: q.denom().to_string(),
                    modulus: p,
                })?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses `a`, `-a` or `a/b` into this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, ScalarError> {
        let s = s.trim();
        let bad = || ScalarError::BadScalar(s.to_string());
        let q = match s.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }

    /// Converts a scalar from another field into this one.
    pub fn convert(self, s: &Scalar) -> Result<Scalar, ScalarError> {
        match (s, self) {
            (Scalar::Rational(q), _) => self.from_rational(q),
            (Scalar::Prime { modulus, .. }, Field::Prime(p)) if *modulus == p => Ok(s.clone()),
            (Scalar::Prime { value, .. }, Field::Rational) => Ok(self.from_i64(*value as i64)),
            (Scalar::Prime { value, .. }, Field::Prime(_)) => Ok(self.from_i64(*value as i64)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "zp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "qq" {
            return Ok(Field::Rational);
        }
        if let Some(p) = t.strip_prefix("zp:") {
            let p: u64 = p.parse().map_err(|_| ScalarError::BadField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(ScalarError::BadField(s.to_string()))
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = ScalarError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field values live in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime { .. } => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_display(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Prime { value, modulus } => *value > modulus / 2,
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "coefficient fields differ: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, modulus } => {
                if *value > modulus / 2 {
                    write!(f, "-{}", modulus - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = q.parse_scalar("6/-4").unwrap();
        let r = a.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn prime_field_inverse_and_representative() {
        let f = Field::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Prime { value: 100, modulus: 101 });
        let seven = f.from_i64(7);
        assert!((&seven * &seven.inv().unwrap()).is_one());
        assert_eq!(a.to_string(), "-1");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Field::prime(100), Err(ScalarError::NotPrime(100)));
        assert!("zp:91".parse::<Field>().is_err());
        assert_eq!("zp:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::Prime(101);
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(Field::Prime(5).parse_scalar("1/5").is_err());
    }

    #[test]
    #[should_panic(expected = "coefficient fields differ")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(7).one();
    }
}
