//! Exact scalars: rationals in lowest terms, or residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field. Every scalar, matrix and algebra carries one; mixing fields panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Validates `p` as a prime below 2^62.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 62 {
            return Err(Error::InvalidField(format!("modulus {p} too large")));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q` or `Fp:<p>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix("Fp:") {
            let p: u64 = rest.parse().map_err(|_| Error::InvalidField(format!("bad modulus in {t:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!("expected \"Q\" or \"Fp:<p>\", got {t:?}")))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, x: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::from_i128(x as i128, 1)),
            Field::Prime(p) => Scalar::P { v: reduce_i128(x as i128, p), p },
        }
    }

    /// `n/d`; panics if `d` is zero in this field.
    pub fn ratio(self, n: i64, d: i64) -> Scalar {
        let d = self.from_i64(d);
        self.from_i64(n) * d.inv().expect("zero denominator")
    }

    pub fn from_bigint(self, x: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::from_big(BigRational::from_integer(x.clone()))),
            Field::Prime(p) => {
                let r = x.mod_floor(&BigInt::from(p));
                Scalar::P { v: r.to_u64().unwrap(), p }
            }
        }
    }

    /// Parses `p/q` or `p` (optional sign on the numerator only).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::Scalar { text: text.to_string(), reason: reason.to_string() };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let int = |s: &str, signed: bool| -> Result<BigInt> {
            let digits = if signed { s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s) } else { s };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected decimal digits"));
            }
            BigInt::from_str(s).map_err(|_| bad("not an integer"))
        };
        let n = int(num, true)?;
        let d = match den {
            Some(d) => int(d, false)?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        let dn = self.from_bigint(&d);
        let inv = dn.inv().ok_or_else(|| bad("denominator vanishes in this field"))?;
        Ok(self.from_bigint(&n) * inv)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn reduce_i128(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A rational in lowest terms with positive denominator. Values that fit
/// in machine words stay unboxed; the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(x: i128) -> bool {
    x > i64::MIN as i128 && x <= i64::MAX as i128
}

impl Rat {
    fn from_i128(n: i128, d: i128) -> Rat {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Rat::Small(n as i64, d as i64)
        } else {
            Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rat::Small(n, d),
            _ => Rat::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(b) => b.denom().clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    Rat::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    Rat::from_i128(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128)
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::Small(-a, *b),
            Rat::Big(r) => Rat::Big(Box::new(-(**r).clone())),
        }
    }

    fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rat::Small(a, b) => {
                if *a < 0 {
                    Rat::Small(-b, -a)
                } else {
                    Rat::Small(*b, *a)
                }
            }
            Rat::Big(r) => Rat::from_big(r.recip()),
        })
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    P { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rat::Small(1, 1)),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::P { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::P { v: pow_mod(*v, p - 2, *p), p: *p })
                }
            }
        }
    }

    /// Rational value, when over Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Q(r) => Some(r.to_big()),
            Scalar::P { .. } => None,
        }
    }

    /// Small integer value if this scalar is one (over Fp: the residue).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(Rat::Small(n, 1)) => Some(*n),
            Scalar::Q(_) => None,
            Scalar::P { v, .. } => i64::try_from(*v).ok(),
        }
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => {
                let s = a + b;
                Scalar::P { v: if s >= *p { s - p } else { s }, p: *p }
            }
            _ => mismatch(self, o),
        }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => Scalar::P { v: mul_mod(*a, *b, *p), p: *p },
            _ => mismatch(self, o),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P { v, p } => Scalar::P { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    /// `self += a * b`, the inner loop of every product.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (Scalar::P { v, p }, Scalar::P { v: x, .. }, Scalar::P { v: y, .. }) => {
                *v = ((*v as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            _ => *self = self.add_ref(&a.mul_ref(b)),
        }
    }
}

#[cold]
fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(Rat::Small(n, 1)) => write!(f, "{n}"),
            Scalar::Q(Rat::Small(n, d)) => write!(f, "{n}/{d}"),
            Scalar::Q(Rat::Big(r)) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident, $atr:ident, $am:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$imp(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$imp(&o)
            }
        }
        impl $atr<&Scalar> for Scalar {
            fn $am(&mut self, o: &Scalar) {
                *self = (&*self).$imp(o);
            }
        }
        impl $atr<Scalar> for Scalar {
            fn $am(&mut self, o: Scalar) {
                *self = (&*self).$imp(&o);
            }
        }
    };
}

impl Scalar {
    fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }
}

binop!(Add, add, add_ref, AddAssign, add_assign);
binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
binop!(Mul, mul, mul_ref, MulAssign, mul_assign);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn lowest_terms() {
        let a = Q.ratio(2, 4);
        let b = Q.ratio(1, 6);
        assert_eq!((a + b).to_string(), "2/3");
        assert_eq!(Q.ratio(3, -6).to_string(), "-1/2");
        assert_eq!(Q.ratio(4, 2).to_string(), "2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rat::Big(_))));
        let back = sq * big.inv().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rat::Small(..))));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(Q.parse_scalar("-6/4").unwrap().to_string(), "-3/2");
        assert!(Q.parse_scalar("1/0").is_err());
        assert!(Q.parse_scalar("1/-2").is_err());
        assert!(Q.parse_scalar("").is_err());
        assert!(Q.parse_scalar("1.5").is_err());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse_scalar("1/2").unwrap().to_string(), "3");
        assert!(f5.parse_scalar("1/5").is_err());
    }

    #[test]
    fn prime_field() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!((&three * three.inv().unwrap()), f.one());
        assert_eq!((-f.one()).to_string(), "6");
        assert!(Field::prime(9).is_err());
        assert_eq!(Field::parse("Fp:13").unwrap(), Field::Prime(13));
        assert_eq!(Field::parse("Q").unwrap().to_string(), "Q");
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Q.one() + Field::Prime(3).one();
    }
}
