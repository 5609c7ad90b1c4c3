//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Rationals keep an `i64` fast path and promote to `BigRational` only when
//! an operation would overflow, so coefficients stay exact at any size while
//! the common small values cost nothing. Prime-field elements are residues
//! in `[0, p)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("field spec mismatch: {0} vs {1}")]
    SpecMismatch(FieldSpec, FieldSpec),
    #[error("characteristic {0} is not 0 or a prime")]
    BadCharacteristic(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// Ground field selector: characteristic 0 means the rationals, a prime `p`
/// means `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub characteristic: u64,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn rational() -> Self {
        Self::RATIONAL
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(ScalarError::BadCharacteristic(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Q(Rat::from_integer(n)),
            p => Scalar::Fp {
                p,
                value: n.rem_euclid(p as i64) as u64,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced rational with positive denominator. `Small` covers everything the
/// engine produces in practice; `Big` is the overflow escape hatch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn from_integer(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    /// Reduced fraction; panics on zero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = gcd_i64(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Rat::Small(s * num / g, s * den / g)
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    /// Canonical form: demote to `Small` whenever the value fits.
    fn from_big(b: BigRational) -> Rat {
        use num::ToPrimitive;
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            Rat::Small(n, d)
        } else {
            Rat::Big(Box::new(b))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n == 0,
            Rat::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    fn add(&self, other: &Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (self, other) {
            // a/b + c/d over a common denominator, reduced first to keep
            // intermediates small.
            let g = gcd_i64(*b, *d).max(1);
            let (b1, d1) = (b / g, d / g);
            let num = a
                .checked_mul(d1)
                .and_then(|x| c.checked_mul(b1).and_then(|y| x.checked_add(y)));
            let den = b1.checked_mul(*d);
            if let (Some(n), Some(dd)) = (num, den) {
                return Rat::new(n, dd);
            }
        }
        Rat::from_big(self.to_big() + other.to_big())
    }

    fn mul(&self, other: &Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (self, other) {
            let g1 = gcd_i64(*a, *d).max(1);
            let g2 = gcd_i64(*c, *b).max(1);
            let num = (a / g1).checked_mul(c / g2);
            let den = (b / g2).checked_mul(d / g1);
            if let (Some(n), Some(dd)) = (num, den) {
                return Rat::Small(if dd < 0 { -n } else { n }, dd.abs());
            }
        }
        Rat::from_big(self.to_big() * other.to_big())
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(-n, *d),
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Result<Rat, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Rat::Small(n, d) => Rat::new(*d, *n),
            Rat::Big(b) => Rat::from_big(b.recip()),
        })
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(b) => write!(f, "{b}"),
        }
    }
}

/// A value of the selected ground field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    Fp { p: u64, value: u64 },
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::RATIONAL,
            Scalar::Fp { p, .. } => FieldSpec { characteristic: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Ok(Scalar::Q(a.add(b))),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) if p == q => {
                Ok(Scalar::Fp {
                    p: *p,
                    value: (a + b) % p,
                })
            }
            _ => Err(ScalarError::SpecMismatch(self.spec(), other.spec())),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Ok(Scalar::Q(a.mul(b))),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) if p == q => {
                Ok(Scalar::Fp {
                    p: *p,
                    value: a.checked_mul(*b).map(|v| v % p).unwrap_or_else(|| {
                        (((*a as u128) * (*b as u128)) % (*p as u128)) as u64
                    }),
                })
            }
            _ => Err(ScalarError::SpecMismatch(self.spec(), other.spec())),
        }
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Q(r) => Ok(Scalar::Q(r.inv()?)),
            Scalar::Fp { p, value } => {
                if *value == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                // Fermat: value^(p-2) mod p.
                let mut acc: u128 = 1;
                let mut base = *value as u128;
                let mut e = p - 2;
                let m = *p as u128;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Ok(Scalar::Fp {
                    p: *p,
                    value: acc as u64,
                })
            }
        }
    }

    /// JSON form: rationals as "num/den" strings, residues as integers.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Q(Rat::Small(n, d)) => serde_json::Value::String(format!("{n}/{d}")),
            Scalar::Q(Rat::Big(b)) => {
                serde_json::Value::String(format!("{}/{}", b.numer(), b.denom()))
            }
            Scalar::Fp { value, .. } => serde_json::Value::Number((*value).into()),
        }
    }

    pub fn from_json(v: &serde_json::Value, spec: FieldSpec) -> Result<Scalar, ScalarError> {
        match (spec.characteristic, v) {
            (0, serde_json::Value::String(s)) => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let big = |t: &str| t.parse::<BigInt>().map_err(|_| ScalarError::Parse(s.clone()));
                let (n, d) = (big(num)?, big(den)?);
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::Q(Rat::from_big(BigRational::new(n, d))))
            }
            (0, serde_json::Value::Number(n)) => {
                let i = n.as_i64().ok_or_else(|| ScalarError::Parse(n.to_string()))?;
                Ok(Scalar::Q(Rat::from_integer(i)))
            }
            (p, serde_json::Value::Number(n)) => {
                let i = n.as_i64().ok_or_else(|| ScalarError::Parse(n.to_string()))?;
                Ok(FieldSpec { characteristic: p }.from_integer(i))
            }
            (p, serde_json::Value::String(s)) => {
                let i: i64 = s.trim().parse().map_err(|_| ScalarError::Parse(s.clone()))?;
                Ok(FieldSpec { characteristic: p }.from_integer(i))
            }
            _ => Err(ScalarError::Parse(v.to_string())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator impls panic on spec mismatch; that is a programming error inside
// the engine, while data crossing the JSON boundary goes through the checked
// constructors above.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        self.checked_add(other).expect("scalar spec mismatch")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, other: &Scalar) {
        *self = self.checked_add(other).expect("scalar spec mismatch");
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("scalar spec mismatch")
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, other: &Scalar) {
        *self = self.checked_mul(other).expect("scalar spec mismatch");
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(r.neg()),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }
}
