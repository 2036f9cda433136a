//! Weight functions `α : [n] → Z_m`, their value classes, the shift element
//! `t_α`, and the inertia groups `G_α = Y_α ⋊ ⟨t_α⟩ ⊂ S_n`.

use super::{GroupElement, GroupSpec, Subgroup};
use crate::error::{Error, Result};

/// Values in `Z_m`, one per coordinate.
pub type WeightFunction = Vec<u32>;

fn validate(spec: &GroupSpec, alpha: &[u32]) -> Result<()> {
    if alpha.len() != spec.n as usize {
        return Err(Error::SizeMismatch(format!("weight function of length {} for n = {}", alpha.len(), spec.n)));
    }
    if alpha.iter().any(|&a| a >= spec.m()) {
        return Err(Error::Input(format!("weight values must lie in 0..{}", spec.m())));
    }
    Ok(())
}

/// `α^{-1}(i)` for `i = 0..m`, as sorted 0-based positions.
pub fn alpha_classes(spec: &GroupSpec, alpha: &[u32]) -> Result<Vec<Vec<usize>>> {
    validate(spec, alpha)?;
    let mut cls = vec![Vec::new(); spec.m() as usize];
    for (j, &a) in alpha.iter().enumerate() {
        cls[a as usize].push(j);
    }
    Ok(cls)
}

/// The least `b ≥ 1` with `|α^{-1}(i + b d)| = |α^{-1}(i)|` for every `i`; it divides `e`.
pub fn shift_period(spec: &GroupSpec, alpha: &[u32]) -> Result<u32> {
    let cls = alpha_classes(spec, alpha)?;
    let m = spec.m() as usize;
    for b in 1..=spec.e {
        let s = (b * spec.d) as usize;
        if (0..m).all(|i| cls[i].len() == cls[(i + s) % m].len()) {
            return Ok(b);
        }
    }
    unreachable!("b = e always stabilizes")
}

/// Orbit length `o_α = e / b_α` of `x^α` under `⟨t_α⟩`.
pub fn orbit_length(spec: &GroupSpec, alpha: &[u32]) -> Result<u32> {
    Ok(spec.e / shift_period(spec, alpha)?)
}

/// The order-preserving permutation sending `α^{-1}(i)` onto `α^{-1}(i + b_α d)`.
pub fn t_alpha(spec: &GroupSpec, alpha: &[u32]) -> Result<GroupElement> {
    let cls = alpha_classes(spec, alpha)?;
    let b = shift_period(spec, alpha)?;
    let m = spec.m() as usize;
    let s = (b * spec.d) as usize % m;
    let mut p = vec![0u32; spec.n as usize];
    for i in 0..m {
        let target = &cls[(i + s) % m];
        for (k, &j) in cls[i].iter().enumerate() {
            p[j] = target[k] as u32;
        }
    }
    GroupElement::perm(spec.m(), p)
}

/// `G_α`, generated by the Young subgroup of the value classes and `t_α`.
pub fn inertia_group(spec: &GroupSpec, alpha: &[u32]) -> Result<Subgroup> {
    let cls = alpha_classes(spec, alpha)?;
    let n = spec.n as usize;
    let mut gens = Vec::new();
    for c in &cls {
        for w in c.windows(2) {
            gens.push(GroupElement::transposition(spec.m(), n, w[0], w[1]));
        }
    }
    gens.push(t_alpha(spec, alpha)?);
    Subgroup::generate(*spec, gens)
}

/// One weight function per orbit of `α ~ α + jd·(1,…,1)` and coordinate
/// permutations: classes filled in increasing value order, and among the
/// shifts the one with the lexicographically largest class-size vector.
pub fn alpha_representatives(spec: &GroupSpec) -> Vec<WeightFunction> {
    let m = spec.m() as usize;
    let n = spec.n as usize;
    let mut out: Vec<Vec<usize>> = Vec::new();
    // compositions of n into m parts
    fn comps(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            comps(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    comps(n, m, &mut Vec::new(), &mut all);
    for sizes in all {
        let canon = (0..spec.e as usize)
            .map(|j| {
                let s = j * spec.d as usize;
                (0..m).map(|i| sizes[(i + s) % m]).collect::<Vec<_>>()
            })
            .max()
            .unwrap();
        if canon == sizes {
            out.push(sizes);
        }
    }
    out.into_iter()
        .map(|sizes| {
            let mut a = Vec::with_capacity(n);
            for (v, &k) in sizes.iter().enumerate() {
                a.extend(std::iter::repeat(v as u32).take(k));
            }
            a
        })
        .collect()
}
