//! Exact linear algebra: dense matrices over cyclotomic fields, reduced
//! echelon bases of polynomial spans, and a little arithmetic over `F_p`.

use crate::error::{Error, Result};
use crate::exactalg::{CycNum, Monomial, Poly};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![CycNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CycNum::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &CycNum) {
        let k = i * self.cols + j;
        self.data[k] = self.data[k].add(v);
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix shapes");
        let mut r = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        r.add_at(i, j, &a.mul(b));
                    }
                }
            }
        }
        r
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix shapes");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix shapes");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &CycNum) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn trace(&self) -> CycNum {
        (0..self.rows.min(self.cols)).fold(CycNum::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(CycNum::zero(), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect()
    }

    /// Row-reduces a copy; returns the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fully reduced echelon basis of a space of polynomials.
///
/// Each basis vector has a pivot (its leading monomial) with coefficient 1,
/// and no basis vector contains another vector's pivot. Coordinates of a
/// vector in the span are its coefficients at the pivots.
#[derive(Clone, Debug)]
pub struct PolyBasis {
    n: usize,
    basis: BTreeMap<Monomial, Poly>,
}

impl PolyBasis {
    pub fn new(n: usize) -> PolyBasis {
        PolyBasis { n, basis: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Basis vectors in increasing pivot order.
    pub fn vectors(&self) -> Vec<&Poly> {
        self.basis.values().collect()
    }

    pub fn pivots(&self) -> Vec<&Monomial> {
        self.basis.keys().collect()
    }

    /// Remainder of `p` after eliminating every pivot.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut r = p.clone();
        for (m, b) in &self.basis {
            let c = r.coeff(m);
            if !c.is_zero() {
                r.add_scaled(b, &c.neg());
            }
        }
        r
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let r = self.reduce(p);
        let Some((lm, lc)) = r.leading() else { return false };
        let lm = lm.clone();
        let r = r.scale(&lc.inv().expect("nonzero leading coefficient"));
        for b in self.basis.values_mut() {
            let c = b.coeff(&lm);
            if !c.is_zero() {
                b.add_scaled(&r, &c.neg());
            }
        }
        self.basis.insert(lm, r);
        true
    }

    /// Coordinates of `p`, which must lie in the span.
    pub fn coords(&self, p: &Poly) -> Result<Vec<CycNum>> {
        if !self.contains(p) {
            return Err(Error::Input("vector is not in the span".into()));
        }
        Ok(self.basis.keys().map(|m| p.coeff(m)).collect())
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, p: &Poly) -> Vec<CycNum> {
        self.basis.keys().map(|m| p.coeff(m)).collect()
    }
}

/// Arithmetic in `F_p` for small primes.
pub mod modp {
    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        assert!(a % p != 0, "inverse of zero mod p");
        pow(a, p - 2, p)
    }

    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    /// Smallest prime `p ≡ 1 (mod k)` with `p > lower`.
    pub fn prime_1_mod(k: u64, lower: u64) -> u64 {
        let mut p = (lower / k + 1) * k + 1;
        while !is_prime(p) {
            p += k;
        }
        p
    }

    /// A generator of `F_p^*`.
    pub fn primitive_root(p: u64) -> u64 {
        let mut fs = Vec::new();
        let mut m = p - 1;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                fs.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            fs.push(m);
        }
        (2..p).find(|&g| fs.iter().all(|&q| pow(g, (p - 1) / q, p) != 1)).unwrap_or(1)
    }

    /// Row-reduced form of a matrix over `F_p` (rows of equal length); returns pivots.
    pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut piv = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(k) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(k, r);
            let iv = inv(m[r][c], p);
            for j in 0..cols {
                m[r][j] = m[r][j] * iv % p;
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                    }
                }
            }
            piv.push(c);
            r += 1;
        }
        piv
    }

    /// Basis of the null space `{v : A v = 0}`, as column vectors.
    pub fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
        let cols = if a.is_empty() { 0 } else { a[0].len() };
        let mut m = a.to_vec();
        let piv = rref(&mut m, p);
        let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = (p - m[r][f]) % p;
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly_n;

    #[test]
    fn rank_and_inverse() {
        let m = Mat::from_rows(vec![
            vec![CycNum::int(1), CycNum::int(2)],
            vec![CycNum::int(2), CycNum::int(4)],
        ]);
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
        let a = Mat::from_rows(vec![
            vec![CycNum::int(1), CycNum::zeta(3)],
            vec![CycNum::int(0), CycNum::int(2)],
        ]);
        assert_eq!(a.mul(&a.inverse().unwrap()), Mat::identity(2));
    }

    #[test]
    fn poly_basis_coordinates() {
        let mut b = PolyBasis::new(2);
        assert!(b.insert(&parse_poly_n("x1 + x2", 2).unwrap()));
        assert!(b.insert(&parse_poly_n("x1 - x2", 2).unwrap()));
        assert!(!b.insert(&parse_poly_n("3*x1", 2).unwrap()));
        assert_eq!(b.dim(), 2);
        let c = b.coords(&parse_poly_n("2*x1 + 5*x2", 2).unwrap()).unwrap();
        assert_eq!(c.len(), 2);
        assert!(b.coords(&parse_poly_n("x1^2", 2).unwrap()).is_err());
    }

    #[test]
    fn modp_helpers() {
        assert_eq!(modp::prime_1_mod(6, 20), 31);
        let g = modp::primitive_root(31);
        assert_eq!(modp::pow(g, 15, 31), 30);
        let ns = modp::nullspace(&[vec![1, 1, 0], vec![0, 0, 1]], 7);
        assert_eq!(ns, vec![vec![6, 1, 0]]);
    }
}
