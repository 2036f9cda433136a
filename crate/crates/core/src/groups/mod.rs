//! The imprimitive reflection groups `G(de,e,n) = A(de,e,n) ⋊ S_n`.
//!
//! An element is a pair `(w, σ)` with `w ∈ Z_m^n`, `Σ w ≡ 0 (mod e)`, standing
//! for the monomial matrix `diag(ζ_m^{w_1}, …, ζ_m^{w_n})·P_σ` where
//! `P_σ e_j = e_{σ(j)}`.

mod element;
mod subgroup;
mod weights;

pub use element::GroupElement;
pub use subgroup::{double_cosets, young_subgroup, DoubleCoset, Subgroup};
pub use weights::{
    alpha_classes, alpha_representatives, inertia_group, orbit_length, shift_period, t_alpha, WeightFunction,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default cap on group orders enumerated element by element.
pub const DEFAULT_BOUND: u128 = 1_000_000;

/// The active size bound: `REFLECT_BOUND` if set and valid, else the default.
pub fn size_bound() -> u128 {
    std::env::var("REFLECT_BOUND")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BOUND)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub d: u32,
    pub e: u32,
    pub n: u32,
}

impl GroupSpec {
    pub fn new(d: u32, e: u32, n: u32) -> Result<GroupSpec> {
        if d == 0 || e == 0 || n == 0 {
            return Err(Error::Input("d, e, n must be positive".into()));
        }
        if n > 20 || (d as u64) * (e as u64) > 1000 {
            return Err(Error::Bound(format!("G({},{},{}) is out of range", d * e, e, n)));
        }
        Ok(GroupSpec { d, e, n })
    }

    /// The symmetric group `S_n = G(1,1,n)`.
    pub fn symmetric(n: u32) -> GroupSpec {
        GroupSpec { d: 1, e: 1, n }
    }

    pub fn m(&self) -> u32 {
        self.d * self.e
    }

    /// `(de)^n · n! / e`
    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for _ in 0..self.n {
            o = o.saturating_mul(self.m() as u128);
        }
        for k in 2..=self.n as u128 {
            o = o.saturating_mul(k);
        }
        o / self.e as u128
    }

    pub fn check_bound(&self) -> Result<()> {
        let b = size_bound();
        if self.order() > b {
            return Err(Error::Bound(format!("|{}| = {} exceeds the bound {}", self, self.order(), b)));
        }
        Ok(())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.m(), self.n as usize)
    }

    pub fn is_member(&self, g: &GroupElement) -> bool {
        g.modulus() == self.m()
            && g.len() == self.n as usize
            && g.weights().iter().map(|&w| w as u64).sum::<u64>() % self.e as u64 == 0
    }

    /// Adjacent transpositions, `diag(ζ^e, 1, …)` when `d > 1`, and
    /// `diag(ζ, ζ^{-1}, 1, …)` when `m > 1`.
    pub fn generators(&self) -> Vec<GroupElement> {
        let (m, n) = (self.m(), self.n as usize);
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            gens.push(GroupElement::transposition(m, n, i, i + 1));
        }
        if self.d > 1 {
            let mut w = vec![0; n];
            w[0] = self.e % m;
            gens.push(GroupElement::new(m, w, (0..n as u32).collect()).unwrap());
        }
        if m > 1 && n > 1 {
            let mut w = vec![0; n];
            w[0] = 1;
            w[1] = m - 1;
            gens.push(GroupElement::new(m, w, (0..n as u32).collect()).unwrap());
        }
        if gens.is_empty() {
            gens.push(self.identity());
        }
        gens
    }

    /// Every element exactly once: permutations in lexicographic order, and for
    /// each permutation the admissible weight vectors in lexicographic order.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        self.check_bound()?;
        let (m, n) = (self.m(), self.n as usize);
        let total = (m as u64).pow(n as u32);
        let mut weights = Vec::new();
        for idx in 0..total {
            let mut w = vec![0u32; n];
            let mut r = idx;
            for k in (0..n).rev() {
                w[k] = (r % m as u64) as u32;
                r /= m as u64;
            }
            if w.iter().map(|&x| x as u64).sum::<u64>() % self.e as u64 == 0 {
                weights.push(w);
            }
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        for p in permutations(n) {
            for w in &weights {
                out.push(GroupElement::new(m, w.clone(), p.clone()).unwrap());
            }
        }
        Ok(out)
    }

    /// The whole group as a subgroup object.
    pub fn whole(&self) -> Result<Subgroup> {
        Subgroup::from_elements(*self, self.generators(), self.enumerate()?)
    }

    /// Number of conjugacy classes, by orbit decomposition.
    pub fn conjugacy_class_count(&self) -> Result<usize> {
        Ok(self.whole()?.classes().len())
    }

    /// The diagonal subgroup `A(de,e,n)`.
    pub fn diagonal_subgroup(&self) -> Result<Subgroup> {
        self.check_bound()?;
        let all = self.enumerate()?;
        let diag: Vec<GroupElement> = all.into_iter().filter(|g| g.is_diagonal()).collect();
        let gens = diag.clone();
        Subgroup::from_elements(*self, gens, diag)
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G({},{},{})", self.m(), self.e, self.n)
    }
}

/// All permutations of `0..n` in lexicographic order (one-line notation).
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_enumeration() {
        for (d, e, n) in [(1, 1, 3), (1, 2, 2), (3, 1, 2), (2, 1, 3), (1, 3, 3), (2, 2, 2), (2, 3, 2)] {
            let g = GroupSpec::new(d, e, n).unwrap();
            let els = g.enumerate().unwrap();
            assert_eq!(els.len() as u128, g.order(), "{}", g);
            let set: std::collections::HashSet<_> = els.iter().cloned().collect();
            assert_eq!(set.len(), els.len());
            assert!(els.iter().all(|x| g.is_member(x)));
            // generators produce the whole group
            let h = Subgroup::generate(g, g.generators()).unwrap();
            assert_eq!(h.order(), els.len());
        }
        assert_eq!(GroupSpec::new(1, 1, 3).unwrap().enumerate().unwrap().len(), 6);
        assert_eq!(GroupSpec::new(1, 2, 2).unwrap().order(), 4);
        assert_eq!(GroupSpec::new(3, 1, 2).unwrap().order(), 18);
    }

    #[test]
    fn class_counts() {
        assert_eq!(GroupSpec::symmetric(3).conjugacy_class_count().unwrap(), 3);
        assert_eq!(GroupSpec::symmetric(4).conjugacy_class_count().unwrap(), 5);
        // B_2 = dihedral of order 8
        assert_eq!(GroupSpec::new(2, 1, 2).unwrap().conjugacy_class_count().unwrap(), 5);
    }

    #[test]
    fn bound_is_enforced() {
        let g = GroupSpec::new(10, 1, 10).unwrap();
        assert!(matches!(g.enumerate(), Err(Error::Bound(_))));
    }
}
