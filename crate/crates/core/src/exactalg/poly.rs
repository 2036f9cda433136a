//! Sparse multivariate polynomials with cyclotomic coefficients.

use super::cyclotomic::CycNum;
use super::rat::Rat;
use super::upoly::UPoly;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector ordered by graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, CycNum>,
}

impl Poly {
    pub fn zero(n: usize) -> Poly {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Poly {
        Poly::constant(n, CycNum::one())
    }

    pub fn constant(n: usize, c: CycNum) -> Poly {
        Poly::term(n, Monomial::one(n), c)
    }

    pub fn term(n: usize, mono: Monomial, c: CycNum) -> Poly {
        assert_eq!(mono.0.len(), n, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly { n, terms }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Poly {
        Poly::term(n, Monomial::var(n, i), CycNum::one())
    }

    pub fn monomial(n: usize, exps: &[u32]) -> Poly {
        Poly::term(n, Monomial(exps.to_vec()), CycNum::one())
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Monomial, CycNum)>) -> Poly {
        let mut p = Poly::zero(n);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var` of `n`.
    pub fn from_upoly(u: &UPoly, n: usize, var: usize) -> Poly {
        Poly::from_terms(
            n,
            u.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; n];
                e[var] = k as u32;
                (Monomial(e), CycNum::rational(c.clone()))
            }),
        )
    }

    /// Univariate view, if only variable `var` occurs and coefficients are rational.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly> {
        let mut c = vec![];
        for (m, v) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            let k = m.0[var] as usize;
            if c.len() <= k {
                c.resize(k + 1, Rat::zero());
            }
            c[k] = v.to_rat()?;
        }
        Some(UPoly::new(c))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(CycNum::zero)
    }

    /// Largest monomial in graded-lex order with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &CycNum)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Degree of the polynomial in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Poly) {
        self.check(o);
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    /// `self += s·o`
    pub fn add_scaled(&mut self, o: &Poly, s: &CycNum) {
        self.check(o);
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), &c.mul(s));
        }
    }

    fn check(&self, o: &Poly) {
        assert_eq!(self.n, o.n, "polynomials over different variable sets");
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(o, &CycNum::int(-1));
        r
    }

    pub fn neg(&self) -> Poly {
        self.scale(&CycNum::int(-1))
    }

    pub fn scale(&self, s: &CycNum) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        self.check(o);
        let mut r = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative in variable `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.n,
            self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] -= 1;
                (Monomial(e), c.scale(&Rat::int(k as i64)))
            }),
        )
    }

    /// Substitutes `x_j ↦ x_j^k` for every variable.
    pub fn inflate(&self, k: u32) -> Poly {
        Poly::from_terms(
            self.n,
            self.terms.iter().map(|(m, c)| (Monomial(m.0.iter().map(|e| e * k).collect()), c.clone())),
        )
    }

    /// Applies a map on monomials `x^a ↦ coef(a)·x^{img(a)}`; used for group actions.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> (Monomial, CycNum)) -> Poly {
        let mut r = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let (m2, s) = f(m);
            r.add_term(m2, &c.mul(&s));
        }
        r
    }

    /// Rescales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Result<Poly> {
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(&c.inv()?)),
        }
    }

    /// Exact division; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        self.check(d);
        let (lm, lc) = d.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut q = Poly::zero(self.n);
        while let Some((m, c)) = rem.leading() {
            if m.0.iter().zip(lm.0.iter()).any(|(a, b)| a < b) {
                return Err(Error::Input("polynomial division is not exact".into()));
            }
            let qm = Monomial(m.0.iter().zip(lm.0.iter()).map(|(a, b)| a - b).collect());
            let qc = c.mul(&lc_inv);
            let t = Poly::term(self.n, qm, qc);
            rem = rem.sub(&t.mul(d));
            q.add_assign(&t);
        }
        Ok(q)
    }

    /// Evaluation at a point with cyclotomic coordinates.
    pub fn eval(&self, x: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&x[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Text form using `x1..xn`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.n).map(|i| format!("x{}", i)).collect();
        self.to_string_with(&names)
    }

    /// Text form with given variable names, highest term first.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            let mono = mono.join("*");
            let (neg, body) = match c.to_rat() {
                Some(r) => {
                    let neg = r.is_negative();
                    let a = r.abs();
                    let body = if mono.is_empty() {
                        a.to_string()
                    } else if a.is_one() {
                        mono.clone()
                    } else {
                        format!("{}*{}", a, mono)
                    };
                    (neg, body)
                }
                None => {
                    let body = if mono.is_empty() { c.to_string() } else { format!("{}*{}", c, mono) };
                    (false, body)
                }
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.n, self.to_text())
    }
}
