//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//!
//! Rationals stay on an `i64` fast path and spill to `BigRational` only when
//! an intermediate result does not fit. The representation is canonical: a
//! value that fits in the small form is never stored as `Big`, so derived
//! equality and hashing are exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Prime field of characteristic `p`; `p` must be a prime below 2³¹.
    pub fn prime(p: u32) -> Result<Self, LinalgError> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, k: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Rational::from_integer(k)),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: k.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Over a prime field the value is
    /// reduced modulo `p`; a denominator divisible by `p` is rejected.
    pub fn parse(self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::BadScalar(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(Rational::from_big(BigRational::new(
                num, den,
            )))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u32().unwrap();
                let d = den.mod_floor(&pb).to_u32().unwrap();
                if d == 0 {
                    return Err(bad());
                }
                let n = self.from_i64(n as i64);
                let d = self.from_i64(d as i64);
                Ok(&n / &d)
            }
        }
    }

    /// Every element of a prime field of order at most `limit`, otherwise a
    /// fixed small sample `{0, 1, 2, 3, -1}` (deduplicated).
    pub fn sample_scalars(self, limit: u32) -> Vec<Scalar> {
        match self {
            FieldSpec::Prime(p) if p <= limit => (0..p as i64).map(|k| self.from_i64(k)).collect(),
            _ => {
                let mut out: Vec<Scalar> = Vec::new();
                for k in [0, 1, 2, 3, -1] {
                    let s = self.from_i64(k);
                    if !out.contains(&s) {
                        out.push(s);
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "Q" | "q" | "rationals" | "QQ" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = t
                    .strip_prefix("F")
                    .or_else(|| t.strip_prefix("GF"))
                    .or_else(|| t.strip_prefix("prime:"))
                    .unwrap_or(t);
                let p: u32 = digits
                    .parse()
                    .map_err(|_| LinalgError::BadField(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rational {
    pub fn from_integer(k: i64) -> Self {
        if k == i64::MIN {
            return Rational::Big(Box::new(BigRational::from_integer(BigInt::from(k))));
        }
        Rational::Small { num: k, den: 1 }
    }

    fn from_big(r: BigRational) -> Self {
        let n = r.numer().to_i64().filter(|&v| v != i64::MIN);
        let d = r.denom().to_i64();
        match (n, d) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let lim = i64::MAX as i128;
        if n.abs() <= lim && d <= lim {
            Rational::Small {
                num: n as i64,
                den: d as i64,
            }
        } else {
            Rational::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                if *b == 1 && *d == 1 {
                    return Rational::from_i128(*a as i128 + *c as i128, 1);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small { num, den } => Rational::Small {
                num: -num,
                den: *den,
            },
            Rational::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                if *b == 1 && *d == 1 {
                    return Rational::from_i128(*a as i128 * *c as i128, 1);
                }
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small { num, den } => Rational::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact field element. Mixing elements of different fields is a logic
/// error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.inv().map(Scalar::Rational),
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    return None;
                }
                Some(Scalar::Mod {
                    value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(Rational::Small { num, .. }) => *num < 0,
            Scalar::Rational(Rational::Big(b)) => b.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (
                Scalar::Mod { value: a, modulus },
                Scalar::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
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
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (
                Scalar::Mod { value: a, modulus },
                Scalar::Mod {
                    value: b,
                    modulus: m2,
                },
            ) if modulus == m2 => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("2/4").unwrap(), q.parse("1/2").unwrap());
        assert_eq!(q.parse("3/-6").unwrap(), q.parse("-1/2").unwrap());
        assert_eq!(q.parse("4/2").unwrap(), q.from_i64(2));
        assert_eq!(q.parse("0/7").unwrap(), q.zero());
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let q = FieldSpec::Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Rational(Rational::Big(_))));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Rational(Rational::Small { .. })));
        assert_eq!((&sq - &sq), q.zero());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse("1/7").is_err());
        assert_eq!(-&f.zero(), f.zero());
    }

    #[test]
    fn rejects_non_primes() {
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(2).is_ok());
        assert!("F4".parse::<FieldSpec>().is_err());
        assert_eq!("F2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn sample_scalars_cover_small_fields() {
        assert_eq!(FieldSpec::Prime(5).sample_scalars(7).len(), 5);
        assert_eq!(FieldSpec::Prime(11).sample_scalars(7).len(), 5);
        assert_eq!(FieldSpec::Prime(2).sample_scalars(7).len(), 2);
    }
}
