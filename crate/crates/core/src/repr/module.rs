//! Modules given by explicit matrices for every group element, the projectors
//! `p^χ = (n_χ/|G|) Σ_t conj(χ(t)) t` and
//! `p^χ_{αβ} = (n_χ/|G|) Σ_t r_{βα}(t^{-1}) t`, and cyclic spans.

use super::{Character, Representation, Subgroup};
use crate::error::{Error, Result};
use crate::exactalg::{CycNum, Rat};
use crate::linalg::Mat;
use std::sync::Arc;

/// A representation as one matrix per element (in the group's element order).
#[derive(Clone, Debug)]
pub struct Module {
    group: Arc<Subgroup>,
    mats: Vec<Mat>,
}

impl Module {
    /// The left regular module `k[G]` on the basis of group elements.
    pub fn regular(group: Arc<Subgroup>) -> Module {
        let els = group.elements();
        let k = els.len();
        let mats = els
            .iter()
            .map(|t| {
                let mut m = Mat::zeros(k, k);
                for (x, g) in els.iter().enumerate() {
                    m.set(group.index_of(&t.mul(g)).unwrap(), x, CycNum::one());
                }
                m
            })
            .collect();
        Module { group, mats }
    }

    pub fn from_representation(rep: &Representation) -> Module {
        let group = rep.group().clone();
        let mats = group.elements().iter().map(|g| rep.matrix_of(g)).collect();
        Module { group, mats }
    }

    pub fn group(&self) -> &Arc<Subgroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, |m| m.rows())
    }

    pub fn matrix(&self, idx: usize) -> &Mat {
        &self.mats[idx]
    }

    /// `Σ_t c_t ρ(t)` for coefficients indexed like the group elements.
    pub fn operator(&self, coeffs: &[CycNum]) -> Mat {
        let mut acc = Mat::zeros(self.dim(), self.dim());
        for (c, m) in coeffs.iter().zip(&self.mats) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }
}

/// The isotypic projector of an irreducible `χ` acting on `module`.
pub fn projector_chi(chi: &Character, module: &Module) -> Result<Mat> {
    if !chi.is_irreducible() {
        return Err(Error::Character("projector requested for a reducible character".into()));
    }
    let g = module.group();
    let f = chi.degree().scale(&Rat::new(1, g.order() as i64));
    let coeffs: Vec<CycNum> = g
        .elements()
        .iter()
        .map(|t| chi.value_of(t).map(|v| v.conj().mul(&f)))
        .collect::<Result<_>>()?;
    Ok(module.operator(&coeffs))
}

/// The unit projector `p^χ_{αβ}` built from an explicit irreducible model `irrep`.
pub fn projector_unit(irrep: &Module, module: &Module, alpha: usize, beta: usize) -> Result<Mat> {
    let n = irrep.dim();
    if alpha >= n || beta >= n {
        return Err(Error::Input(format!("index out of range 0..{}", n)));
    }
    let g = module.group();
    let f = Rat::new(n as i64, g.order() as i64);
    let coeffs: Vec<CycNum> = g
        .elements()
        .iter()
        .map(|t| {
            let ti = irrep.group().index_of(&t.inv()).expect("same group");
            irrep.matrix(ti).get(beta, alpha).scale(&f)
        })
        .collect();
    Ok(module.operator(&coeffs))
}

/// `dim span{g·v}` for `v` in the regular module (coefficients on the group basis).
pub fn cyclic_span_dim(group: &Arc<Subgroup>, v: &[CycNum]) -> Result<usize> {
    let els = group.elements();
    if v.len() != els.len() {
        return Err(Error::SizeMismatch("vector length differs from the group order".into()));
    }
    if v.iter().all(|c| c.is_zero()) {
        return Err(Error::Input("cyclic span of the zero vector".into()));
    }
    let k = els.len();
    let mut m = Mat::zeros(k, k);
    for (col, g) in els.iter().enumerate() {
        for (x, h) in els.iter().enumerate() {
            if !v[x].is_zero() {
                m.set(group.index_of(&g.mul(h)).unwrap(), col, v[x].clone());
            }
        }
    }
    Ok(m.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use crate::repr::symmetric_irreps;

    #[test]
    fn s3_regular_projectors() {
        let g = Arc::new(GroupSpec::symmetric(3).whole().unwrap());
        let reg = Module::regular(g.clone());
        let irreps = symmetric_irreps(&g).unwrap();
        let mut total = Mat::zeros(6, 6);
        for (_, ir) in &irreps {
            let chi = ir.rep.character();
            let p = projector_chi(&chi, &reg).unwrap();
            assert_eq!(p.mul(&p), p);
            let d = chi.degree().to_integer().unwrap() as usize;
            assert_eq!(p.rank(), d * d);
            total = total.add(&p);
        }
        assert_eq!(total, Mat::identity(6));
        let triv = Character::trivial(g.clone());
        assert_eq!(projector_chi(&triv, &reg).unwrap().rank(), 1);
    }

    #[test]
    fn cyclic_spans() {
        let g = Arc::new(GroupSpec::symmetric(3).whole().unwrap());
        let mut e = vec![CycNum::zero(); 6];
        e[0] = CycNum::one();
        assert_eq!(cyclic_span_dim(&g, &e).unwrap(), 6);
        assert_eq!(cyclic_span_dim(&g, &vec![CycNum::one(); 6]).unwrap(), 1);
        let primes: Vec<CycNum> = [2, 3, 5, 7, 11, 13].iter().map(|&p| CycNum::int(p)).collect();
        assert_eq!(cyclic_span_dim(&g, &primes).unwrap(), 6);
        assert!(cyclic_span_dim(&g, &vec![CycNum::zero(); 6]).is_err());
    }
}
