//! Exact rationals with an inline `i64` fast path, promoted to `BigRational`
//! when a checked operation overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone)]
pub enum Rat {
    /// numerator, denominator; denominator > 0 and gcd = 1
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn zero() -> Rat {
        Rat::Small(0, 1)
    }

    pub fn one() -> Rat {
        Rat::Small(1, 1)
    }

    pub fn int(v: i64) -> Rat {
        Rat::Small(v, 1)
    }

    /// `num/den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        let g = gcd_i128(num, den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        if num == 0 {
            return Rat::zero();
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    pub fn from_bigint(v: BigInt) -> Rat {
        Rat::from_big(BigRational::from_integer(v))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    /// Integer value, if this is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rat::Small(n, 1) => Some(*n),
            Rat::Small(..) => None,
            Rat::Big(r) if r.is_integer() => r.numer().to_i64(),
            Rat::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(n, d) => *n as f64 / *d as f64,
            Rat::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rat::Small(n, d) => Rat::from_i128(*d as i128, *n as i128),
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    pub fn pow(&self, e: i32) -> Rat {
        if e < 0 {
            return self.recip().pow(-e);
        }
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat::int(v)
    }
}

impl From<BigRational> for Rat {
    fn from(v: BigRational) -> Rat {
        Rat::from_big(v)
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            // Big values are never representable as Small, so mixed pairs differ
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (self, other) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    if *b == 1 {
                        if let Some(s) = a.checked_add(*c) {
                            return Rat::Small(s, 1);
                        }
                    }
                    return Rat::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Rat::from_i128(s, z),
                        None => Rat::from_big(self.to_big() + o.to_big()),
                    },
                    _ => Rat::from_big(self.to_big() + o.to_big()),
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rat::Small(p, 1);
                    }
                }
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat::Small(m, *d),
                None => Rat::from_big(-self.to_big()),
            },
            Rat::Big(r) => Rat::from_big(-r.clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, o: &Rat) -> Rat {
        self + &(-o)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, o: &Rat) -> Rat {
        self * &o.recip()
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $f(self, o: Rat) -> Rat {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $f(self, o: &Rat) -> Rat {
                (&self).$f(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        *self = &*self + o;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        *self = &*self - o;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        *self = &*self * o;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{}", n),
            Rat::Small(n, d) => write!(f, "{}/{}", n, d),
            Rat::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = String;
    fn from_str(s: &str) -> Result<Rat, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num).map_err(|_| format!("bad rational '{}'", s))?;
        let d = BigInt::from_str(den).map_err(|_| format!("bad rational '{}'", s))?;
        if d.is_zero() {
            return Err(format!("zero denominator in '{}'", s));
        }
        Ok(Rat::from_big(BigRational::new(n, d)))
    }
}

/// Least common multiple of denominators as a big integer.
pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::int(i64::MAX);
        let s = &big + &Rat::one();
        assert!(matches!(s, Rat::Big(_)));
        let back = &s - &Rat::one();
        assert!(matches!(back, Rat::Small(..)));
        assert_eq!(back, big);
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
        assert_eq!(-Rat::int(i64::MIN), Rat::from_bigint(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Rat>().unwrap(), Rat::new(1, 2));
        assert_eq!(Rat::new(-7, 3).to_string(), "-7/3");
        assert!("1/0".parse::<Rat>().is_err());
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
    }
}
