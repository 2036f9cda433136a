use super::Subgroup;
use crate::error::{Error, Result};
use crate::exactalg::{CycNum, Rat};
use crate::groups::{double_cosets, GroupElement};
use std::fmt;
use std::sync::Arc;

/// A class function, stored by value on each conjugacy class of its group.
#[derive(Clone)]
pub struct Character {
    group: Arc<Subgroup>,
    values: Vec<CycNum>,
}

impl Character {
    pub fn new(group: Arc<Subgroup>, values: Vec<CycNum>) -> Result<Character> {
        if values.len() != group.classes().len() {
            return Err(Error::Character(format!(
                "{} values for {} conjugacy classes",
                values.len(),
                group.classes().len()
            )));
        }
        Ok(Character { group, values })
    }

    /// Builds a class function from its value at every element (checked constant on classes).
    pub fn from_fn(group: Arc<Subgroup>, f: impl Fn(&GroupElement) -> CycNum) -> Result<Character> {
        let mut values = Vec::with_capacity(group.classes().len());
        for c in group.classes() {
            let v = f(&group.elements()[c.rep]);
            if c.members.iter().any(|&i| f(&group.elements()[i]) != v) {
                return Err(Error::Character("function is not constant on a conjugacy class".into()));
            }
            values.push(v);
        }
        Character::new(group, values)
    }

    pub fn trivial(group: Arc<Subgroup>) -> Character {
        let k = group.classes().len();
        Character { group, values: vec![CycNum::one(); k] }
    }

    /// Character of the left regular representation.
    pub fn regular(group: Arc<Subgroup>) -> Character {
        let k = group.classes().len();
        let mut values = vec![CycNum::zero(); k];
        values[0] = CycNum::int(group.order() as i64);
        Character { group, values }
    }

    pub fn group(&self) -> &Arc<Subgroup> {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn degree(&self) -> CycNum {
        self.values[0].clone()
    }

    pub fn value_of(&self, g: &GroupElement) -> Result<CycNum> {
        let k = self
            .group
            .class_index(g)
            .ok_or_else(|| Error::Input(format!("{} is not in the group", g)))?;
        Ok(self.values[k].clone())
    }

    pub fn conj(&self) -> Character {
        Character { group: self.group.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }

    pub fn add(&self, o: &Character) -> Character {
        Character {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: &CycNum) -> Character {
        Character { group: self.group.clone(), values: self.values.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn zero(group: Arc<Subgroup>) -> Character {
        let k = group.classes().len();
        Character { group, values: vec![CycNum::zero(); k] }
    }

    pub fn norm(&self) -> CycNum {
        inner_product(self, self).expect("same group")
    }

    pub fn is_irreducible(&self) -> bool {
        self.norm().is_one()
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &Arc<Subgroup>) -> Result<Character> {
        let mut values = Vec::with_capacity(h.classes().len());
        for g in h.class_reps() {
            values.push(self.value_of(g)?);
        }
        Character::new(h.clone(), values)
    }

    /// `x ↦ χ(s^{-1} x s)` on the subgroup `target` (which must lie in `s H s^{-1}`).
    pub fn conjugated(&self, s: &GroupElement, target: &Arc<Subgroup>) -> Result<Character> {
        let si = s.inv();
        let mut values = Vec::with_capacity(target.classes().len());
        for x in target.class_reps() {
            values.push(self.value_of(&si.mul(x).mul(s))?);
        }
        Character::new(target.clone(), values)
    }
}

impl PartialEq for Character {
    fn eq(&self, o: &Character) -> bool {
        same_group(&self.group, &o.group) && self.values == o.values
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{:?}", self.values)
    }
}

fn same_group(a: &Arc<Subgroup>, b: &Arc<Subgroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.order() == b.order() && a.elements().iter().all(|g| b.contains(g)))
}

/// `(1/|G|) Σ_g χ_1(g) conj(χ_2(g))`.
pub fn inner_product(a: &Character, b: &Character) -> Result<CycNum> {
    if !same_group(&a.group, &b.group) {
        return Err(Error::Input("characters of different groups".into()));
    }
    if !Arc::ptr_eq(&a.group, &b.group) && a.group.class_reps() != b.group.class_reps() {
        // same group, different bookkeeping: realign through values at elements
        let bb = Character::from_fn(a.group.clone(), |g| b.value_of(g).unwrap())?;
        return inner_product(a, &bb);
    }
    let mut acc = CycNum::zero();
    for (k, c) in a.group.classes().iter().enumerate() {
        let t = a.values[k].mul(&b.values[k].conj());
        acc = acc.add(&t.scale(&Rat::int(c.members.len() as i64)));
    }
    Ok(acc.scale(&Rat::new(1, a.group.order() as i64)))
}

/// `dim V^H = (1/|H|) Σ_{h∈H} χ(h)`; fails if the average is not a nonnegative integer.
pub fn invariant_dim(chi: &Character, h: &Subgroup) -> Result<u64> {
    let mut acc = CycNum::zero();
    for g in h.elements() {
        acc = acc.add(&chi.value_of(g)?);
    }
    let avg = acc.scale(&Rat::new(1, h.order() as i64));
    match avg.to_integer() {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(Error::Character(format!("invariant average {} is not a nonnegative integer", avg))),
    }
}

/// `Ind_H^G ψ`, with `G = ambient`.
pub fn induced_character(ambient: &Arc<Subgroup>, psi: &Character) -> Result<Character> {
    let h = psi.group();
    if !h.is_subgroup_of(ambient) {
        return Err(Error::Input("inducing from a subgroup outside the ambient group".into()));
    }
    let k = ambient.classes().len();
    let mut sums = vec![CycNum::zero(); k];
    for (ci, c) in h.classes().iter().enumerate() {
        for &i in &c.members {
            let gk = ambient.class_index(&h.elements()[i]).unwrap();
            sums[gk] = sums[gk].add(&psi.values[ci]);
        }
    }
    let values = ambient
        .classes()
        .iter()
        .zip(sums)
        .map(|(c, s)| s.scale(&Rat::new(ambient.order() as i64, (c.members.len() * h.order()) as i64)))
        .collect();
    Character::new(ambient.clone(), values)
}

#[derive(Clone, Debug)]
pub struct MackeyReport {
    pub ok: bool,
    pub double_cosets: usize,
    pub lhs: Character,
    pub rhs: Character,
}

/// Compares `Res_{H_1} Ind_{H_2}^G ψ` with `Σ_s Ind_{H(s)}^{H_1} ψ_s`, `ψ_s(x) = ψ(s^{-1} x s)`.
pub fn mackey_check(ambient: &Arc<Subgroup>, h1: &Arc<Subgroup>, psi: &Character) -> Result<MackeyReport> {
    let h2 = psi.group();
    let lhs = induced_character(ambient, psi)?.restrict(h1)?;
    let cosets = double_cosets(ambient, h1, h2)?;
    let mut rhs = Character::zero(h1.clone());
    for dc in &cosets {
        let hs = Arc::new(dc.h_s.clone());
        let psi_s = psi.conjugated(&dc.rep, &hs)?;
        rhs = rhs.add(&induced_character(h1, &psi_s)?);
    }
    Ok(MackeyReport { ok: lhs == rhs, double_cosets: cosets.len(), lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{delta_n, specht};
    use crate::groups::{young_subgroup, GroupSpec};
    use crate::repr::orbit_span;

    fn sym(n: u32) -> Arc<Subgroup> {
        Arc::new(GroupSpec::symmetric(n).whole().unwrap())
    }

    #[test]
    fn inner_products() {
        let g = sym(3);
        let triv = Character::trivial(g.clone());
        let sign = orbit_span(&g, &specht(&"1,2,3".parse().unwrap())).unwrap().character();
        assert_eq!(inner_product(&triv, &triv).unwrap(), CycNum::one());
        assert_eq!(inner_product(&triv, &sign).unwrap(), CycNum::zero());
        let reg = Character::regular(g.clone());
        assert_eq!(inner_product(&reg, &reg).unwrap(), CycNum::int(6));
        let t = g.elements().iter().find(|x| x.sign() == -1).unwrap();
        assert_eq!(sign.value_of(t).unwrap(), CycNum::int(-1));
    }

    #[test]
    fn invariant_dims() {
        let g = sym(4);
        let s3 = young_subgroup(GroupSpec::symmetric(4), &"1,2,3|4".parse().unwrap()).unwrap();
        let sign = orbit_span(&g, &specht(&"1,2,3,4".parse().unwrap())).unwrap().character();
        assert_eq!(invariant_dim(&sign, &s3).unwrap(), 0);
        let std = orbit_span(&g, &delta_n(4).unwrap()).unwrap().character();
        assert_eq!(invariant_dim(&std, &s3).unwrap(), 1);
        assert_eq!(invariant_dim(&std, &Subgroup::trivial(GroupSpec::symmetric(4))).unwrap(), 3);
        let broken = Character::new(g.clone(), vec![CycNum::rational(Rat::new(1, 2)); 5]).unwrap();
        assert!(invariant_dim(&broken, &g).is_err());
    }

    #[test]
    fn induction() {
        let g = sym(4);
        let s3 = Arc::new(young_subgroup(GroupSpec::symmetric(4), &"1,2,3|4".parse().unwrap()).unwrap());
        let ind = induced_character(&g, &Character::trivial(s3)).unwrap();
        assert_eq!(ind.degree(), CycNum::int(4));
        let triv = Character::trivial(g.clone());
        let std = orbit_span(&g, &delta_n(4).unwrap()).unwrap().character();
        assert_eq!(ind, triv.add(&std));
        let t = Arc::new(Subgroup::trivial(GroupSpec::symmetric(4)));
        assert_eq!(induced_character(&g, &Character::trivial(t)).unwrap(), Character::regular(g.clone()));
        assert_eq!(induced_character(&g, &std).unwrap(), std);
    }

    #[test]
    fn mackey_small() {
        let g = sym(4);
        let s3 = Arc::new(young_subgroup(GroupSpec::symmetric(4), &"1,2,3|4".parse().unwrap()).unwrap());
        let std3 = orbit_span(&s3, &crate::exactalg::parse_poly_n("x1 - x2", 4).unwrap()).unwrap().character();
        assert_eq!(std3.degree(), CycNum::int(2));
        let r = mackey_check(&g, &s3, &std3).unwrap();
        assert!(r.ok);
        assert_eq!(r.double_cosets, 2);
        let t = Arc::new(Subgroup::trivial(GroupSpec::symmetric(4)));
        let r = mackey_check(&g, &t, &Character::trivial(t.clone())).unwrap();
        assert!(r.ok);
        assert_eq!(r.lhs.degree(), CycNum::int(24));
    }
}
