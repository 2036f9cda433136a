//! The irreducible census of `G(de,e,n)`: one orbit span
//! `k[G] f_{α,i} s_{P_α}` per weight class, shape tuple and eigen-index.

use super::{inner_product, orbit_span, Character, Representation};
use crate::error::{Error, Result};
use crate::exactalg::{specht, specht_power, CycNum, Poly};
use crate::groups::{alpha_classes, alpha_representatives, shift_period, t_alpha, GroupSpec, Subgroup};
use crate::partitions::{enumerate_partitions, Partition, SetPartition};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// `(α, shapes, i)`; `shapes[v]` is the block-size shape on `α^{-1}(v)` (empty if the class is).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IrrepLabel {
    pub alpha: Vec<u32>,
    pub shapes: Vec<Partition>,
    pub i: u32,
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(|v| v.to_string()).collect();
        let s: Vec<String> = self
            .shapes
            .iter()
            .map(|p| if p.is_empty() { "-".to_string() } else { p.to_string() })
            .collect();
        write!(f, "a=({}) [{}] i={}", a.join(","), s.join(" "), self.i)
    }
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: IrrepLabel,
    pub rep: Representation,
    pub character: Character,
}

impl Irrep {
    pub fn degree(&self) -> usize {
        self.rep.dim()
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    pub spec: GroupSpec,
    pub group: Arc<Subgroup>,
    pub irreps: Vec<Irrep>,
    /// Candidates whose span failed `⟨χ,χ⟩ = 1`.
    pub reducible: Vec<IrrepLabel>,
    pub class_count: usize,
}

impl Census {
    pub fn degree_square_sum(&self) -> u128 {
        self.irreps.iter().map(|r| (r.degree() as u128).pow(2)).sum()
    }

    /// Pairwise `⟨χ_i, χ_j⟩ = δ_ij`.
    pub fn orthonormal(&self) -> bool {
        let chars: Vec<&Character> = self.irreps.iter().map(|r| &r.character).collect();
        (0..chars.len()).into_par_iter().all(|a| {
            (a..chars.len()).all(|b| {
                let ip = inner_product(chars[a], chars[b]).expect("same group");
                if a == b {
                    ip.is_one()
                } else {
                    ip.is_zero()
                }
            })
        })
    }

    pub fn is_complete(&self) -> bool {
        self.reducible.is_empty()
            && self.irreps.len() == self.class_count
            && self.degree_square_sum() == self.group.order() as u128
            && self.orthonormal()
    }
}

/// Shape tuples over the value classes (sizes `sizes[v]`).
fn shape_tuples(sizes: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &k in sizes {
        let opts = if k == 0 { vec![Partition::from_unsorted(vec![])] } else { enumerate_partitions(k as u32) };
        out = out
            .into_iter()
            .flat_map(|t| {
                opts.iter().map(move |p| {
                    let mut t2 = t.clone();
                    t2.push(p.clone());
                    t2
                })
            })
            .collect();
    }
    out
}

fn shifted(t: &[Partition], s: usize) -> Vec<Partition> {
    let m = t.len();
    (0..m).map(|v| t[(v + s) % m].clone()).collect()
}

/// The census candidates with their generating polynomials.
pub fn census_candidates(spec: &GroupSpec) -> Result<Vec<(IrrepLabel, Poly)>> {
    let n = spec.n as usize;
    let m = spec.m() as usize;
    let mut out = Vec::new();
    for alpha in alpha_representatives(spec) {
        let classes = alpha_classes(spec, &alpha)?;
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        let b = shift_period(spec, &alpha)?;
        let step = (b * spec.d) as usize % m;
        let t = t_alpha(spec, &alpha)?;
        for tuple in shape_tuples(&sizes) {
            // one tuple per orbit under the shift by b·d
            let shifts = (spec.e / b) as usize;
            let orbit: Vec<Vec<Partition>> = (0..shifts).map(|j| shifted(&tuple, j * step)).collect();
            if orbit.iter().any(|o| *o < tuple) {
                continue;
            }
            let stab = (1..=shifts).find(|&j| orbit[j % shifts] == tuple).unwrap();
            let o = (shifts / stab) as u32;
            let tt = t.pow(stab as u32);
            let mut parts = Vec::new();
            let mut cls = Vec::new();
            for (p, c) in tuple.iter().zip(&classes) {
                if !c.is_empty() {
                    parts.push(SetPartition::min_filled(p));
                    cls.push(c.clone());
                }
            }
            let s = specht_power(n, spec.m(), &parts, &cls)?;
            for i in 0..o {
                let mut term = Poly::monomial(n, &alpha);
                let mut f = Poly::zero(n);
                for j in 0..o {
                    f.add_scaled(&term, &CycNum::zeta_pow(o, -((i * j) as i64)));
                    term = tt.act(&term);
                }
                let label = IrrepLabel { alpha: alpha.clone(), shapes: tuple.clone(), i };
                out.push((label, f.mul(&s)));
            }
        }
    }
    Ok(out)
}

/// Builds and certifies the census of `G(de,e,n)`.
pub fn all_irreps(spec: &GroupSpec) -> Result<Census> {
    spec.check_bound()?;
    let group = Arc::new(spec.whole()?);
    let cands = census_candidates(spec)?;
    let built: Vec<(IrrepLabel, Representation, Character)> = cands
        .into_par_iter()
        .map(|(label, p)| {
            let rep = orbit_span(&group, &p)?;
            let ch = rep.character();
            Ok((label, rep, ch))
        })
        .collect::<Result<_>>()?;
    let mut irreps = Vec::new();
    let mut reducible = Vec::new();
    for (label, rep, character) in built {
        if character.is_irreducible() {
            irreps.push(Irrep { label, rep, character });
        } else {
            reducible.push(label);
        }
    }
    let class_count = group.classes().len();
    Ok(Census { spec: *spec, group, irreps, reducible, class_count })
}

/// The Specht modules of `S_n`, keyed by the block-size shape `L` (module of shape `L'`).
pub fn symmetric_irreps(group: &Arc<Subgroup>) -> Result<Vec<(Partition, Irrep)>> {
    let spec = group.spec();
    if spec.m() != 1 {
        return Err(Error::Input(format!("{} is not a symmetric group", spec)));
    }
    enumerate_partitions(spec.n)
        .into_iter()
        .map(|l| {
            let rep = orbit_span(group, &specht(&SetPartition::min_filled(&l)))?;
            let character = rep.character();
            let label = IrrepLabel { alpha: vec![0; spec.n as usize], shapes: vec![l.clone()], i: 0 };
            Ok((l, Irrep { label, rep, character }))
        })
        .collect()
}
