//! Elements of the cyclotomic fields `Q(ζ_m)`.
//!
//! An element is stored as rational coordinates in the power basis
//! `1, ζ, …, ζ^{φ(m)-1}`. Operands with different conductors are embedded into
//! `Q(ζ_lcm)` before combining. Reduction tables (`ζ^k` for `0 ≤ k < m`) are
//! computed once per conductor and shared between threads.

use super::rat::Rat;
use super::upoly::UPoly;
use crate::error::{Error, Result};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

struct Table {
    phi: usize,
    /// `pow[k]` = coordinates of `ζ^k`, integer entries.
    pow: Vec<Vec<i64>>,
    cyclo: UPoly,
}

fn table(m: u32) -> Arc<Table> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&m) {
        return t.clone();
    }
    let cyclo = UPoly::cyclotomic(m);
    let phi = cyclo.deg();
    let mut pow = Vec::with_capacity(m as usize);
    for k in 0..m as usize {
        let r = UPoly::monomial(Rat::one(), k).rem(&cyclo);
        pow.push(
            (0..phi)
                .map(|i| r.coeff(i).to_i64().expect("integral cyclotomic reduction"))
                .collect(),
        );
    }
    let t = Arc::new(Table { phi, pow, cyclo });
    cache.write().unwrap().insert(m, t.clone());
    t
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

#[derive(Clone)]
pub struct CycNum {
    m: u32,
    c: Vec<Rat>,
}

impl CycNum {
    pub fn zero() -> CycNum {
        CycNum { m: 1, c: vec![Rat::zero()] }
    }

    pub fn one() -> CycNum {
        CycNum::rational(Rat::one())
    }

    pub fn int(v: i64) -> CycNum {
        CycNum::rational(Rat::int(v))
    }

    pub fn rational(r: Rat) -> CycNum {
        CycNum { m: 1, c: vec![r] }
    }

    /// `ζ_m^k` with `ζ_m = e^{2πi/m}`.
    pub fn zeta_pow(m: u32, k: i64) -> CycNum {
        assert!(m >= 1);
        let k = k.rem_euclid(m as i64) as usize;
        let t = table(m);
        CycNum::canon(m, t.pow[k].iter().map(|&v| Rat::int(v)).collect())
    }

    pub fn zeta(m: u32) -> CycNum {
        CycNum::zeta_pow(m, 1)
    }

    /// Builds an element from power-basis coordinates modulo `Φ_m`
    /// (any length; reduced on entry).
    pub fn from_coeffs(m: u32, coeffs: Vec<Rat>) -> Result<CycNum> {
        if m == 0 {
            return Err(Error::Input("conductor must be positive".into()));
        }
        let t = table(m);
        let mut acc = vec![Rat::zero(); t.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, v) in t.pow[k % m as usize].iter().enumerate() {
                if *v != 0 {
                    acc[i] += &(a * &Rat::int(*v));
                }
            }
        }
        Ok(CycNum::canon(m, acc))
    }

    fn canon(m: u32, c: Vec<Rat>) -> CycNum {
        let mut x = CycNum { m, c };
        if x.m == 2 {
            // Q(ζ_2) = Q
            x.m = 1;
        }
        if x.m != 1 && x.c.iter().skip(1).all(|r| r.is_zero()) {
            x = CycNum::rational(x.c[0].clone());
        }
        x
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.m == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().skip(1).all(|r| r.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// Integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<i64> {
        self.to_rat().and_then(|r| r.to_i64())
    }

    /// Re-expresses `self` in `Q(ζ_big)`, where `m | big`.
    pub fn embed(&self, big: u32) -> Vec<Rat> {
        if self.m == big {
            return self.c.clone();
        }
        debug_assert!(big % self.m == 0);
        let t = table(big);
        let step = (big / self.m) as usize;
        let mut acc = vec![Rat::zero(); t.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &t.pow[(i * step) % big as usize];
            for (j, v) in row.iter().enumerate() {
                if *v != 0 {
                    acc[j] += &(a * &Rat::int(*v));
                }
            }
        }
        acc
    }

    fn common(&self, o: &CycNum) -> (u32, Vec<Rat>, Vec<Rat>) {
        if self.m == o.m {
            return (self.m, self.c.clone(), o.c.clone());
        }
        let l = self.m.lcm(&o.m);
        (l, self.embed(l), o.embed(l))
    }

    pub fn add(&self, o: &CycNum) -> CycNum {
        if self.m == 1 && o.m == 1 {
            return CycNum::rational(&self.c[0] + &o.c[0]);
        }
        let (m, a, b) = self.common(o);
        CycNum::canon(m, a.iter().zip(b.iter()).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self) -> CycNum {
        CycNum { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &CycNum) -> CycNum {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        CycNum::canon(self.m, self.c.iter().map(|x| x * r).collect())
    }

    pub fn mul(&self, o: &CycNum) -> CycNum {
        if self.m == 1 {
            return o.scale(&self.c[0]);
        }
        if o.m == 1 {
            return self.scale(&o.c[0]);
        }
        let (m, a, b) = self.common(o);
        let t = table(m);
        // cyclic convolution in Q[x]/(x^m - 1), then reduce each ζ^k
        let mut conv = vec![Rat::zero(); m as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[(i + j) % m as usize] += &(x * y);
                }
            }
        }
        let mut acc = vec![Rat::zero(); t.phi];
        for (k, x) in conv.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, v) in t.pow[k].iter().enumerate() {
                if *v != 0 {
                    acc[i] += &(x * &Rat::int(*v));
                }
            }
        }
        CycNum::canon(m, acc)
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(CycNum::rational(self.c[0].recip()));
        }
        let t = table(self.m);
        let a = UPoly::new(self.c.clone());
        let inv = a.inv_mod(&t.cyclo).ok_or(Error::DivisionByZero)?;
        Ok(CycNum::canon(self.m, (0..t.phi).map(|i| inv.coeff(i)).collect()))
    }

    pub fn div(&self, o: &CycNum) -> Result<CycNum> {
        Ok(self.mul(&o.inv()?))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycNum {
        if self.m == 1 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut coeffs = vec![Rat::zero(); m];
        for (i, a) in self.c.iter().enumerate() {
            coeffs[(m - i) % m] = a.clone();
        }
        CycNum::from_coeffs(self.m, coeffs).unwrap()
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut acc = CycNum::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Floating-point image under `ζ_m ↦ e^{2πi/m}`, as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, a) in self.c.iter().enumerate() {
            let th = 2.0 * std::f64::consts::PI * k as f64 / self.m as f64;
            let v = a.to_f64();
            re += v * th.cos();
            im += v * th.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, o: &CycNum) -> bool {
        if self.m == o.m {
            return self.c == o.c;
        }
        let (_, a, b) = self.common(o);
        a == b
    }
}

impl Eq for CycNum {}

impl From<Rat> for CycNum {
    fn from(r: Rat) -> CycNum {
        CycNum::rational(r)
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> CycNum {
        CycNum::int(v)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.c[0]);
        }
        write!(f, "[")?;
        for (i, a) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, "]@{}", self.m)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let i = CycNum::zeta(4);
        assert_eq!(i.mul(&i), CycNum::int(-1));
        let w = CycNum::zeta(3);
        assert_eq!(w.add(&w.mul(&w)), CycNum::int(-1));
        assert_eq!(CycNum::zeta(2), CycNum::int(-1));
        assert_eq!(CycNum::zeta_pow(6, 3), CycNum::int(-1));
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let a = CycNum::one().add(&CycNum::zeta(5));
        assert_eq!(a.mul(&a.inv().unwrap()), CycNum::one());
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn mixed_conductors() {
        // ζ_12^4 = ζ_3, ζ_12^3 = ζ_4
        assert_eq!(CycNum::zeta_pow(12, 4), CycNum::zeta(3));
        let p = CycNum::zeta(3).mul(&CycNum::zeta(4));
        assert_eq!(p, CycNum::zeta_pow(12, 7));
        assert_eq!(p.conj(), CycNum::zeta_pow(12, 5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(CycNum::rational(Rat::new(-1, 2)).to_string(), "-1/2");
        assert_eq!(CycNum::zeta(3).to_string(), "[0,1]@3");
    }
}
