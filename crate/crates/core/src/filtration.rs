//! The canonical filtration of the direct image for `S_n` as isotypic label
//! sets, with the symbolic trace oracle it is checked against.
//!
//! Labels are conjugates of `P_n^μ` members, i.e. block-size shapes of the
//! Specht indexers `Q` whose modules lie in `N_μ`.

use crate::error::{Error, Result};
use crate::exactalg::specht;
use crate::groups::{young_subgroup, GroupSpec};
use crate::partitions::{
    enumerate_partitions, in_pnmu, phi_mu, set_partitions_of_shape, Partition, SetPartition,
};
use crate::repr::reynolds;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

pub const DEFAULT_SYMBOLIC_BOUND: u32 = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationLayer {
    pub mu: Partition,
    pub content: BTreeSet<Partition>,
}

/// `N_μ = ⊕_{λ ∈ P_n^μ} M_λ`, reported as `{λ'}`.
pub fn canonical_content(mu: &Partition) -> FiltrationLayer {
    let content = enumerate_partitions(mu.n())
        .into_iter()
        .filter(|l| in_pnmu(l, mu).unwrap())
        .map(|l| l.conjugate())
        .collect();
    FiltrationLayer { mu: mu.clone(), content }
}

/// `{λ' : λ ∈ Φ_μ}`.
pub fn quotient_content(mu: &Partition) -> BTreeSet<Partition> {
    phi_mu(mu).into_iter().map(|l| l.conjugate()).collect()
}

/// All layers for `n`, in partition enumeration order.
pub fn filtration(n: u32) -> Vec<FiltrationLayer> {
    enumerate_partitions(n).iter().map(canonical_content).collect()
}

fn check_bound(n: u32, bound: u32) -> Result<()> {
    if n > bound {
        return Err(Error::Bound(format!("n = {} exceeds the symbolic bound {}", n, bound)));
    }
    Ok(())
}

/// `Tr_{G_P}(s_Q) = 0`, by the symbolic Reynolds sum.
pub fn trace_vanishing_oracle(p: &SetPartition, q: &SetPartition, bound: u32) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(format!("set partitions of {} and {}", p.n(), q.n())));
    }
    check_bound(p.n(), bound)?;
    let h = young_subgroup(GroupSpec::symmetric(p.n()), p)?;
    Ok(reynolds(&h, &specht(q)).is_zero())
}

/// Some block of `P` meets some block of `Q` in at least two points.
pub fn intersection_criterion(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(format!("set partitions of {} and {}", p.n(), q.n())));
    }
    let bp = p.block_of();
    Ok(q.blocks().iter().any(|b| {
        let mut seen = BTreeSet::new();
        b.iter().any(|&x| !seen.insert(bp[x as usize - 1]))
    }))
}

/// Labels `L` with `Tr_{G_P}(s_Q) = 0` for every `P` of shape `μ`, where `Q` is the
/// standard filling of `L`.
pub fn canonical_content_oracle(mu: &Partition, bound: u32) -> Result<BTreeSet<Partition>> {
    let n = mu.n();
    check_bound(n, bound)?;
    let ps = set_partitions_of_shape(mu);
    let labels = enumerate_partitions(n);
    let keep: Vec<Option<Partition>> = labels
        .into_par_iter()
        .map(|l| {
            let q = SetPartition::min_filled(&l);
            for p in &ps {
                if !trace_vanishing_oracle(p, &q, bound)? {
                    return Ok(None);
                }
            }
            Ok(Some(l))
        })
        .collect::<Result<_>>()?;
    Ok(keep.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(v: &[&str]) -> BTreeSet<Partition> {
        v.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn n4_contents() {
        assert_eq!(canonical_content(&p("3,1")).content, set(&["2,2", "3,1", "4"]));
        assert!(canonical_content(&p("1,1,1,1")).content.is_empty());
        assert_eq!(canonical_content(&p("4")).content.len(), 4);
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient_content(&p("2,2,2")), set(&["4,2", "4,1,1"]));
        assert_eq!(quotient_content(&p("2,1,1")), set(&["4"]));
    }

    #[test]
    fn trace_examples() {
        let s = |x: &str| -> SetPartition { x.parse().unwrap() };
        let b = DEFAULT_SYMBOLIC_BOUND;
        assert!(!trace_vanishing_oracle(&SetPartition::singletons(3), &s("1,2|3"), b).unwrap());
        assert!(trace_vanishing_oracle(&s("1,2"), &s("1,2"), b).unwrap());
        assert!(intersection_criterion(&s("1,2"), &s("1,2")).unwrap());
        assert!(!trace_vanishing_oracle(&s("1,2|3,4"), &s("1,3|2,4"), b).unwrap());
        assert!(!intersection_criterion(&s("1,2|3,4"), &s("1,3|2,4")).unwrap());
        assert!(trace_vanishing_oracle(&SetPartition::singletons(8), &SetPartition::singletons(8), b).is_err());
    }

    #[test]
    fn oracle_matches_rule_n4() {
        for mu in enumerate_partitions(4) {
            assert_eq!(
                canonical_content_oracle(&mu, DEFAULT_SYMBOLIC_BOUND).unwrap(),
                canonical_content(&mu).content,
                "{}",
                mu
            );
        }
    }
}
