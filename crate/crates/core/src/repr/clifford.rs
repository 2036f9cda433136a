//! Clifford decomposition of restrictions to normal subgroups.

use super::{character_table, inner_product, Character, Subgroup};
use crate::error::{Error, Result};
use crate::groups::GroupElement;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct CliffordReport {
    pub ok: bool,
    /// Indices into `Irr(H)` of the constituents of `res_H χ`.
    pub constituents: Vec<usize>,
    /// The common multiplicity `e`.
    pub multiplicity: u64,
    pub orbit_size: usize,
    pub inertia_order: usize,
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeSplitReport {
    pub ok: bool,
    pub prime: usize,
    /// Multiplicities of the constituents of `res_H χ`.
    pub multiplicities: Vec<u64>,
}

/// `ψ^g(x) = ψ(g^{-1} x g)`.
fn conjugate_char(psi: &Character, g: &GroupElement) -> Result<Character> {
    psi.conjugated(g, psi.group())
}

fn multiplicities(chi: &Character, h: &Arc<Subgroup>, irr: &[Character]) -> Result<Vec<u64>> {
    let res = chi.restrict(h)?;
    irr.iter()
        .map(|psi| {
            let ip = inner_product(&res, psi)?;
            match ip.to_integer() {
                Some(v) if v >= 0 => Ok(v as u64),
                _ => Err(Error::Character(format!("multiplicity {} is not a nonnegative integer", ip))),
            }
        })
        .collect()
}

fn check_normal(ambient: &Subgroup, h: &Subgroup) -> Result<()> {
    if !h.is_subgroup_of(ambient) || !h.is_normal_in(ambient) {
        return Err(Error::Input("not a normal subgroup".into()));
    }
    Ok(())
}

/// Checks `res_H χ = e Σ_i ψ^{g_i}` over one `G`-orbit, with `e | |I_ψ|` and `e | [G:H]`.
pub fn clifford_check(ambient: &Arc<Subgroup>, h: &Arc<Subgroup>, chi: &Character) -> Result<CliffordReport> {
    check_normal(ambient, h)?;
    let irr = character_table(h)?;
    let mult = multiplicities(chi, h, &irr)?;
    let constituents: Vec<usize> = (0..irr.len()).filter(|&i| mult[i] > 0).collect();
    let e = mult[constituents[0]];
    let psi = &irr[constituents[0]];
    let mut orbit = Vec::new();
    let mut inertia = 0;
    for g in ambient.elements() {
        let c = conjugate_char(psi, g)?;
        let idx = irr
            .iter()
            .position(|x| *x == c)
            .ok_or_else(|| Error::Character("conjugate character is not irreducible".into()))?;
        if idx == constituents[0] {
            inertia += 1;
        }
        if !orbit.contains(&idx) {
            orbit.push(idx);
        }
    }
    orbit.sort_unstable();
    let index = ambient.order() / h.order();
    let ok = constituents.iter().all(|&i| mult[i] == e)
        && orbit == constituents
        && inertia % e as usize == 0
        && index % e as usize == 0
        && ambient.order() == inertia * orbit.len();
    Ok(CliffordReport {
        ok,
        constituents,
        multiplicity: e,
        orbit_size: orbit.len(),
        inertia_order: inertia,
        index,
    })
}

/// For `H ◁ G` of prime index `p`: `res_H χ` is irreducible or a sum of `p` distinct irreducibles.
pub fn prime_split_check(ambient: &Arc<Subgroup>, h: &Arc<Subgroup>, chi: &Character) -> Result<PrimeSplitReport> {
    check_normal(ambient, h)?;
    let p = ambient.order() / h.order();
    if p < 2 || !(2..p).all(|q| p % q != 0) {
        return Err(Error::Input(format!("index {} is not prime", p)));
    }
    let irr = character_table(h)?;
    let mults: Vec<u64> = multiplicities(chi, h, &irr)?.into_iter().filter(|&v| v > 0).collect();
    let ok = mults == [1] || (mults.len() == p && mults.iter().all(|&v| v == 1));
    Ok(PrimeSplitReport { ok, prime: p, multiplicities: mults })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    #[test]
    fn s4_over_a4_and_v4() {
        let s4 = Arc::new(GroupSpec::symmetric(4).whole().unwrap());
        let a4 = Arc::new(s4.filter(|g| g.sign() == 1).unwrap());
        let v4 = Arc::new(s4.filter(|g| g.order() <= 2 && g.sign() == 1).unwrap());
        assert_eq!(v4.order(), 4);
        for chi in character_table(&s4).unwrap() {
            let r = clifford_check(&s4, &a4, &chi).unwrap();
            assert!(r.ok, "{:?}", r);
            assert!(prime_split_check(&s4, &a4, &chi).unwrap().ok);
            let r = clifford_check(&s4, &v4, &chi).unwrap();
            assert!(r.ok, "{:?}", r);
        }
        // the degree-2 character splits over A4 into two conjugate linear characters
        let t = character_table(&s4).unwrap();
        let two = t.iter().find(|c| c.degree().to_integer() == Some(2)).unwrap();
        assert_eq!(prime_split_check(&s4, &a4, two).unwrap().multiplicities, vec![1, 1]);
        let s3 = Arc::new(s4.filter(|g| g.permutation()[3] == 3).unwrap());
        assert!(clifford_check(&s4, &s3, two).is_err());
    }
}
