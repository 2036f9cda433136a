//! Dense univariate polynomials over the rationals.
//!
//! Used for cyclotomic reductions, inverses in `Q(ζ_m)`, and the univariate
//! residue computations (squarefree tests, gcds, factoring over `Q`).

use super::rat::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> UPoly {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&v| Rat::int(v)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { c: vec![] }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Rat::one())
    }

    pub fn constant(v: Rat) -> UPoly {
        UPoly::new(vec![v])
    }

    pub fn x() -> UPoly {
        UPoly::from_ints(&[0, 1])
    }

    /// `c·x^k`
    pub fn monomial(c: Rat, k: usize) -> UPoly {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, s: &Rat) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.c.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut r = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] += &(a * b);
            }
        }
        UPoly::new(r)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[k + j] -= &(&t * dc);
            }
            q[k] = t;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s·self + t·o` and `g` monic.
    pub fn ext_gcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if coprime.
    pub fn inv_mod(&self, m: &UPoly) -> Option<UPoly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Rat::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Primitive integer polynomial proportional to `self`, leading coefficient positive.
    pub fn primitive_part(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = super::rat::lcm_denominators(self.c.iter());
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|r| r.numer() * (&l / r.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|v| v / &g * &sign).collect()
    }

    fn from_bigints(v: &[BigInt]) -> UPoly {
        UPoly::new(v.iter().map(|b| Rat::from_bigint(b.clone())).collect())
    }

    /// Factorization over `Q` into monic irreducibles with multiplicities,
    /// sorted by (degree, coefficients). The leading coefficient is returned
    /// separately. Factors of degree above `max_factor_degree` are searched by
    /// Kronecker's method only up to that bound; larger irreducible pieces
    /// raise an error rather than being reported as irreducible.
    pub fn factor(&self) -> Result<(Rat, Vec<(UPoly, u32)>)> {
        if self.is_zero() {
            return Err(Error::Input("cannot factor the zero polynomial".into()));
        }
        let lead = self.lead();
        let mut out: Vec<(UPoly, u32)> = Vec::new();
        // squarefree decomposition (Yun)
        let f = self.monic();
        if f.deg() == 0 {
            return Ok((lead, out));
        }
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_exact(&a).unwrap();
        let c = fp.div_exact(&a).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        loop {
            let a_i = b.gcd(&d);
            b = b.div_exact(&a_i).unwrap();
            let c = d.div_exact(&a_i).unwrap();
            d = c.sub(&b.derivative());
            if a_i.deg() > 0 {
                for p in factor_squarefree(&a_i)? {
                    out.push((p, i));
                }
            }
            i += 1;
            if b.deg() == 0 {
                break;
            }
        }
        out.sort_by(|x, y| {
            x.0.deg()
                .cmp(&y.0.deg())
                .then_with(|| x.0.c.cmp(&y.0.c))
        });
        Ok((lead, out))
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        if self.deg() == 0 {
            return Ok(false);
        }
        let (_, fs) = self.factor()?;
        Ok(fs.len() == 1 && fs[0].1 == 1)
    }

    /// The `m`-th cyclotomic polynomial.
    pub fn cyclotomic(m: u32) -> UPoly {
        let mut num = UPoly::monomial(Rat::one(), m as usize).sub(&UPoly::one());
        for d in 1..m {
            if m % d == 0 {
                num = num.div_exact(&UPoly::cyclotomic(d)).expect("cyclotomic divisibility");
            }
        }
        num
    }
}

pub const MAX_FACTOR_DEGREE: usize = 6;

fn factor_squarefree(f: &UPoly) -> Result<Vec<UPoly>> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    // rational roots
    loop {
        if rest.deg() == 0 {
            break;
        }
        match rational_root(&rest) {
            Some(r) => {
                let lin = UPoly::new(vec![-r, Rat::one()]);
                out.push(lin.clone());
                rest = rest.div_exact(&lin).unwrap();
            }
            None => break,
        }
    }
    let mut k = 2;
    while rest.deg() >= 2 * k {
        if k > MAX_FACTOR_DEGREE {
            return Err(Error::Bound(format!(
                "factorization of degree-{} polynomial exceeds the Kronecker search bound",
                rest.deg()
            )));
        }
        match kronecker_factor(&rest, k)? {
            Some(g) => {
                let g = g.monic();
                rest = rest.div_exact(&g).unwrap();
                out.push(g);
            }
            None => k += 1,
        }
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    Ok(out)
}

fn small_divisors(v: &BigInt) -> Result<Vec<i64>> {
    let a = v
        .abs()
        .to_i64()
        .filter(|&a| a <= 1_000_000_000_000)
        .ok_or_else(|| Error::Bound("coefficient too large for divisor search".into()))?;
    let mut ds = Vec::new();
    let mut d = 1i64;
    while d * d <= a {
        if a % d == 0 {
            ds.push(d);
            if d * d != a {
                ds.push(a / d);
            }
        }
        d += 1;
    }
    ds.sort();
    Ok(ds)
}

fn rational_root(f: &UPoly) -> Option<Rat> {
    let p = f.primitive_part();
    if p[0].is_zero() {
        return Some(Rat::zero());
    }
    let ps = small_divisors(&p[0]).ok()?;
    let qs = small_divisors(p.last().unwrap()).ok()?;
    for &a in &ps {
        for &b in &qs {
            for s in [1, -1] {
                let r = Rat::new(s * a, b);
                if f.eval(&r).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// Search for an integer factor of exact degree `k` through value divisors.
fn kronecker_factor(f: &UPoly, k: usize) -> Result<Option<UPoly>> {
    let p = UPoly::from_bigints(&f.primitive_part());
    // pick k+1 evaluation points with the fewest divisors
    let mut cands: Vec<(usize, i64, BigInt)> = Vec::new();
    for a in -12i64..=12 {
        let v = p.eval(&Rat::int(a));
        if v.is_zero() {
            continue;
        }
        let vi = v.numer();
        if let Ok(ds) = small_divisors(&vi) {
            cands.push((ds.len(), a, vi));
        }
    }
    cands.sort();
    if cands.len() < k + 1 {
        return Err(Error::Bound("no admissible evaluation points".into()));
    }
    let pts: Vec<(i64, Vec<i64>)> = cands[..=k]
        .iter()
        .map(|(_, a, v)| (*a, small_divisors(v).unwrap()))
        .collect();
    let combos: f64 = pts.iter().map(|(_, d)| 2.0 * d.len() as f64).product();
    if combos > 5.0e6 {
        return Err(Error::Bound("Kronecker search space too large".into()));
    }
    let mut idx = vec![0usize; k + 1];
    let sizes: Vec<usize> = pts
        .iter()
        .enumerate()
        .map(|(i, (_, d))| if i == 0 { d.len() } else { 2 * d.len() })
        .collect();
    loop {
        let vals: Vec<Rat> = pts
            .iter()
            .enumerate()
            .map(|(i, (_, d))| {
                let j = idx[i];
                if j < d.len() {
                    Rat::int(d[j])
                } else {
                    Rat::int(-d[j - d.len()])
                }
            })
            .collect();
        let xs: Vec<Rat> = pts.iter().map(|(a, _)| Rat::int(*a)).collect();
        let g = lagrange(&xs, &vals);
        if g.degree() == Some(k) && g.coeffs().iter().all(|c| c.is_integer()) {
            if p.div_exact(&g).is_some() {
                return Ok(Some(g));
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < sizes[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn lagrange(xs: &[Rat], ys: &[Rat]) -> UPoly {
    let mut acc = UPoly::zero();
    for i in 0..xs.len() {
        let mut term = UPoly::constant(ys[i].clone());
        for j in 0..xs.len() {
            if i != j {
                let den = &xs[i] - &xs[j];
                term = term
                    .mul(&UPoly::new(vec![-xs[j].clone(), Rat::one()]))
                    .scale(&den.recip());
            }
        }
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = super::poly::Poly::from_upoly(self, 1, 0);
        write!(f, "{}", p.to_string_with(&["x".to_string()]))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(UPoly::cyclotomic(1), UPoly::from_ints(&[-1, 1]));
        assert_eq!(UPoly::cyclotomic(4), UPoly::from_ints(&[1, 0, 1]));
        assert_eq!(UPoly::cyclotomic(6), UPoly::from_ints(&[1, -1, 1]));
        assert_eq!(UPoly::cyclotomic(12), UPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(UPoly::cyclotomic(5).deg(), 4);
    }

    #[test]
    fn ext_gcd_identity() {
        let a = UPoly::from_ints(&[1, 1, 0, 1]);
        let b = UPoly::from_ints(&[-1, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, UPoly::one());
    }

    #[test]
    fn factors_products() {
        // (x-1)^2 (x+2) (x^2+1) (x^3-2)
        let f = UPoly::from_ints(&[-1, 1])
            .pow(2)
            .mul(&UPoly::from_ints(&[2, 1]))
            .mul(&UPoly::from_ints(&[1, 0, 1]))
            .mul(&UPoly::from_ints(&[-2, 0, 0, 1]));
        let (lead, fs) = f.scale(&Rat::int(3)).factor().unwrap();
        assert_eq!(lead, Rat::int(3));
        let mut back = UPoly::constant(lead);
        for (p, e) in &fs {
            back = back.mul(&p.pow(*e));
        }
        assert_eq!(back, f.scale(&Rat::int(3)));
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().any(|(p, e)| *p == UPoly::from_ints(&[-1, 1]) && *e == 2));
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        let f = UPoly::from_ints(&[4, 0, 0, 0, 1]);
        let (_, fs) = f.factor().unwrap();
        assert_eq!(fs.len(), 2);
        assert!(UPoly::from_ints(&[1, 0, 0, 0, 1]).is_irreducible().unwrap());
        assert!(f.is_squarefree());
        assert!(!UPoly::from_ints(&[1, 2, 1]).is_squarefree());
    }
}
