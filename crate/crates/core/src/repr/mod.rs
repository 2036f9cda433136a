//! Representations realized as spans of polynomial orbits, their characters,
//! projectors, induction and restriction, and the irreducible census of
//! `G(de,e,n)`.

mod census;
mod character;
mod clifford;
mod dixon;
mod module;

pub use census::{all_irreps, census_candidates, symmetric_irreps, Census, Irrep, IrrepLabel};
pub use character::{
    induced_character, inner_product, invariant_dim, mackey_check, Character, MackeyReport,
};
pub use clifford::{clifford_check, prime_split_check, CliffordReport, PrimeSplitReport};
pub use dixon::character_table;
pub use module::{cyclic_span_dim, projector_chi, projector_unit, Module};

use crate::error::{Error, Result};
use crate::exactalg::Poly;
use crate::groups::{GroupElement, Subgroup};
use crate::linalg::{Mat, PolyBasis};
use rayon::prelude::*;
use std::collections::VecDeque;
use std::sync::Arc;

/// A finite-dimensional representation spanned by polynomials.
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<Subgroup>,
    basis: PolyBasis,
}

impl Representation {
    pub fn group(&self) -> &Arc<Subgroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> Vec<&Poly> {
        self.basis.vectors()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.basis.contains(p)
    }

    /// Matrix of `g` in the echelon basis (column `j` = coordinates of `g·b_j`).
    pub fn matrix_of(&self, g: &GroupElement) -> Mat {
        let vs = self.basis.vectors();
        let mut m = Mat::zeros(vs.len(), vs.len());
        for (j, b) in vs.iter().enumerate() {
            for (i, c) in self.basis.coords_unchecked(&g.act(b)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    pub fn trace(&self, g: &GroupElement) -> crate::exactalg::CycNum {
        let piv = self.basis.pivots();
        self.basis
            .vectors()
            .iter()
            .zip(piv)
            .fold(crate::exactalg::CycNum::zero(), |acc, (b, m)| acc.add(&g.act(b).coeff(m)))
    }

    pub fn character(&self) -> Character {
        let values = self
            .group
            .class_reps()
            .par_iter()
            .map(|g| self.trace(g))
            .collect();
        Character::new(self.group.clone(), values).expect("class function")
    }
}

/// Span of `{g·p : g ∈ G}`, closed under the generators of `G`.
pub fn orbit_span(group: &Arc<Subgroup>, p: &Poly) -> Result<Representation> {
    if p.is_zero() {
        return Err(Error::Input("orbit span of the zero polynomial".into()));
    }
    if p.nvars() != group.spec().n as usize {
        return Err(Error::SizeMismatch("polynomial arity differs from the group rank".into()));
    }
    let mut basis = PolyBasis::new(p.nvars());
    basis.insert(p);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(v) = queue.pop_front() {
        for s in group.generators() {
            let w = s.act(&v);
            if basis.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Ok(Representation { group: group.clone(), basis })
}

/// `Σ_{h∈H} h·p`.
pub fn reynolds(h: &Subgroup, p: &Poly) -> Poly {
    let els = h.elements();
    if els.len() <= 64 {
        let mut acc = Poly::zero(p.nvars());
        for g in els {
            acc.add_assign(&g.act(p));
        }
        return acc;
    }
    els.par_chunks(32)
        .map(|chunk| {
            let mut acc = Poly::zero(p.nvars());
            for g in chunk {
                acc.add_assign(&g.act(p));
            }
            acc
        })
        .reduce(|| Poly::zero(p.nvars()), |a, b| a.add(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{delta_n, specht, CycNum};
    use crate::groups::GroupSpec;
    use crate::partitions::SetPartition;

    fn sym(n: u32) -> Arc<Subgroup> {
        Arc::new(GroupSpec::symmetric(n).whole().unwrap())
    }

    #[test]
    fn basic_spans() {
        let g = sym(4);
        assert_eq!(orbit_span(&g, &Poly::one(4)).unwrap().dim(), 1);
        let v = specht(&SetPartition::new(4, vec![vec![1, 2, 3, 4]]).unwrap());
        let sign = orbit_span(&g, &v).unwrap();
        assert_eq!(sign.dim(), 1);
        let d = orbit_span(&g, &delta_n(4).unwrap()).unwrap();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.character().degree(), CycNum::int(3));
        assert!(orbit_span(&g, &Poly::zero(4)).is_err());
    }

    #[test]
    fn reynolds_examples() {
        let g = sym(2);
        let x = Poly::var(2, 0).sub(&Poly::var(2, 1));
        assert!(reynolds(&g, &x).is_zero());
        let t = Subgroup::trivial(GroupSpec::symmetric(2));
        assert_eq!(reynolds(&t, &x), x);
        for n in 2..=6 {
            assert!(reynolds(&sym(n), &delta_n(n as usize).unwrap()).is_zero());
        }
    }

    #[test]
    fn matrices_are_a_homomorphism() {
        let g = sym(3);
        let r = orbit_span(&g, &delta_n(3).unwrap()).unwrap();
        let els = g.elements();
        for a in els {
            for b in els {
                assert_eq!(r.matrix_of(&a.mul(b)), r.matrix_of(a).mul(&r.matrix_of(b)));
            }
        }
        assert_eq!(r.matrix_of(&els[0]), Mat::identity(2));
    }
}
