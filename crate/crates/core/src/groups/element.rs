use crate::error::{Error, Result};
use crate::exactalg::{CycNum, Monomial, Poly};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `(w, σ)` with `w ∈ Z_m^n` and `σ` in 0-based one-line notation (`p[j] = σ(j)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    m: u32,
    w: Vec<u32>,
    p: Vec<u32>,
}

impl GroupElement {
    pub fn new(m: u32, w: Vec<u32>, p: Vec<u32>) -> Result<GroupElement> {
        let n = p.len();
        if w.len() != n {
            return Err(Error::SizeMismatch("weights and permutation differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &x in &p {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::Input(format!("{:?} is not a permutation", p)));
            }
            seen[x as usize] = true;
        }
        Ok(GroupElement { m, w: w.into_iter().map(|x| x % m).collect(), p })
    }

    pub fn identity(m: u32, n: usize) -> GroupElement {
        GroupElement { m, w: vec![0; n], p: (0..n as u32).collect() }
    }

    /// A permutation with zero weights.
    pub fn perm(m: u32, p: Vec<u32>) -> Result<GroupElement> {
        GroupElement::new(m, vec![0; p.len()], p)
    }

    pub fn transposition(m: u32, n: usize, i: usize, j: usize) -> GroupElement {
        let mut p: Vec<u32> = (0..n as u32).collect();
        p.swap(i, j);
        GroupElement { m, w: vec![0; n], p }
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn weights(&self) -> &[u32] {
        &self.w
    }

    pub fn permutation(&self) -> &[u32] {
        &self.p
    }

    pub fn is_identity(&self) -> bool {
        self.w.iter().all(|&x| x == 0) && self.p.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    pub fn is_diagonal(&self) -> bool {
        self.p.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    fn check(&self, o: &GroupElement) {
        assert!(self.m == o.m && self.p.len() == o.p.len(), "elements of different groups");
    }

    /// `(w,σ)(v,τ) = (w + v∘σ^{-1}, στ)`
    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        self.check(o);
        let n = self.p.len();
        let mut w = self.w.clone();
        let mut p = vec![0; n];
        for j in 0..n {
            let sj = self.p[j] as usize;
            w[sj] = (w[sj] + o.w[j]) % self.m;
            p[j] = self.p[o.p[j] as usize];
        }
        GroupElement { m: self.m, w, p }
    }

    /// `(w,σ)^{-1} = (−w∘σ, σ^{-1})`
    pub fn inv(&self) -> GroupElement {
        let n = self.p.len();
        let mut p = vec![0; n];
        for (j, &s) in self.p.iter().enumerate() {
            p[s as usize] = j as u32;
        }
        let w = (0..n).map(|k| (self.m - self.w[self.p[k] as usize]) % self.m).collect();
        GroupElement { m: self.m, w, p }
    }

    pub fn pow(&self, k: u32) -> GroupElement {
        let mut acc = GroupElement::identity(self.m, self.p.len());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `g h g^{-1}`
    pub fn conjugate(&self, h: &GroupElement) -> GroupElement {
        self.mul(h).mul(&self.inv())
    }

    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }

    /// Sign of the permutation part.
    pub fn sign(&self) -> i64 {
        let n = self.p.len();
        let mut seen = vec![false; n];
        let mut s = 1;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.p[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// Image of a monomial: `x^a ↦ ζ_m^{-Σ a_i w_{σ(i)}} x^b`, `b_{σ(i)} = a_i`.
    pub fn act_monomial(&self, a: &Monomial) -> (Monomial, CycNum) {
        let mut b = vec![0; a.0.len()];
        let mut ex: u64 = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            let si = self.p[i] as usize;
            b[si] = ai;
            ex += ai as u64 * self.w[si] as u64;
        }
        let k = (ex % self.m as u64) as i64;
        let c = if k == 0 { CycNum::one() } else { CycNum::zeta_pow(self.m, -k) };
        (Monomial(b), c)
    }

    /// The substitution action `(g·p)(x) = p(g^{-1}x)`.
    pub fn act(&self, poly: &Poly) -> Poly {
        assert_eq!(poly.nvars(), self.p.len(), "dimension mismatch");
        poly.map_monomials(|a| self.act_monomial(a))
    }

    /// Checked form of [`act`](Self::act).
    pub fn try_act(&self, poly: &Poly) -> Result<Poly> {
        if poly.nvars() != self.p.len() {
            return Err(Error::SizeMismatch(format!(
                "element on {} coordinates applied to a polynomial in {} variables",
                self.p.len(),
                poly.nvars()
            )));
        }
        Ok(self.act(poly))
    }

    /// `{"w":[...],"p":[...]}` with a 1-based permutation.
    pub fn to_json(&self) -> String {
        let w: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
        let p: Vec<String> = self.p.iter().map(|x| (x + 1).to_string()).collect();
        format!("{{\"w\":[{}],\"p\":[{}]}}", w.join(","), p.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    w: Vec<u32>,
    p: Vec<u32>,
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { w: self.w.clone(), p: self.p.iter().map(|x| x + 1).collect() }.serialize(s)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    #[test]
    fn semidirect_law() {
        let g = GroupSpec::new(3, 1, 3).unwrap();
        let els = g.enumerate().unwrap();
        let a = &els[17];
        let b = &els[40];
        let c = &els[77];
        assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
        assert!(a.mul(&a.inv()).is_identity());
        let t1 = GroupElement::transposition(1, 4, 0, 1);
        let t2 = GroupElement::transposition(1, 4, 2, 3);
        assert_eq!(t1.mul(&t2), t2.mul(&t1));
        let d = GroupElement::new(2, vec![1], vec![0]).unwrap();
        assert!(d.mul(&d).is_identity());
    }

    #[test]
    fn action_conventions() {
        let x = Poly::var(2, 0).sub(&Poly::var(2, 1));
        let t = GroupElement::transposition(1, 2, 0, 1);
        assert_eq!(t.act(&x), x.neg());
        let d = GroupElement::new(2, vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(d.act(&Poly::var(2, 0)), Poly::var(2, 0).neg());
        let id = GroupElement::identity(5, 2);
        assert_eq!(id.act(&x), x);
    }

    #[test]
    fn action_is_homomorphism() {
        let g = GroupSpec::new(2, 2, 3).unwrap();
        let els = g.enumerate().unwrap();
        let p = crate::exactalg::parse_poly_n("x1^2*x2 + 3*x3 - x1*x2*x3^3 + 1", 3).unwrap();
        for a in els.iter().step_by(7) {
            for b in els.iter().step_by(11) {
                assert_eq!(a.act(&b.act(&p)), a.mul(b).act(&p));
            }
        }
    }
}
