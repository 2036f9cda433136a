//! Irreducible characters of a permutation-style group by the Dixon method:
//! common eigenvectors of the class matrices over `F_p`, lifted to cyclotomic
//! values through the power maps.

use super::{Character, Subgroup};
use crate::error::{Error, Result};
use crate::exactalg::CycNum;
use crate::linalg::modp;
use num_integer::Integer;
use std::sync::Arc;

/// `Irr(H)`, the trivial character first; certified by the orthogonality relations.
pub fn character_table(group: &Arc<Subgroup>) -> Result<Vec<Character>> {
    let classes = group.classes();
    let r = classes.len();
    let order = group.order() as u64;
    let reps: Vec<_> = group.class_reps().into_iter().cloned().collect();
    let exponent = reps.iter().fold(1u64, |acc, g| acc.lcm(&(g.order() as u64)));
    let p = modp::prime_1_mod(exponent, 2 * order + 1);

    // (M_j)[l][k] = #{x ∈ C_j : x^{-1} g_k ∈ C_l}
    let mats: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|j| {
            let mut m = vec![vec![0u64; r]; r];
            for &xi in &classes[j].members {
                let xinv = group.elements()[xi].inv();
                for (k, gk) in reps.iter().enumerate() {
                    let l = group.class_index(&xinv.mul(gk)).unwrap();
                    m[l][k] += 1;
                }
            }
            m
        })
        .collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| unit(r, i)).collect()];
    for m in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(&s, m, p));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Character("class matrices did not split into lines".into()));
    }

    let inv_class: Vec<usize> = reps.iter().map(|g| group.class_index(&g.inv()).unwrap()).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.members.len() as u64).collect();
    let z = modp::pow(modp::primitive_root(p), (p - 1) / exponent, p);
    let powers: Vec<Vec<usize>> = reps
        .iter()
        .map(|g| {
            let mut acc = group.elements()[0].clone();
            (0..exponent)
                .map(|_| {
                    let c = group.class_index(&acc).unwrap();
                    acc = acc.mul(g);
                    c
                })
                .collect()
        })
        .collect();

    let mut out = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(Error::Character("eigenvector vanishes at the identity".into()));
        }
        let iv0 = modp::inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * iv0 % p).collect();
        let mut denom = 0u64;
        for j in 0..r {
            denom = (denom + omega[j] * omega[inv_class[j]] % p * modp::inv(sizes[j] % p, p)) % p;
        }
        let sq = order % p * modp::inv(denom, p) % p;
        let deg = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|d| d * d % p == sq && d * d <= order)
            .ok_or_else(|| Error::Character("no integral degree".into()))?;
        let vals: Vec<u64> = (0..r).map(|j| omega[j] * deg % p * modp::inv(sizes[j] % p, p) % p).collect();
        let einv = modp::inv(exponent % p, p);
        let mut values = Vec::with_capacity(r);
        for pw in &powers {
            let mut acc = CycNum::zero();
            for k in 0..exponent {
                let mut mk = 0u64;
                for (l, &c) in pw.iter().enumerate() {
                    let zk = modp::pow(z, (p - 1) - (k * l as u64) % (p - 1), p);
                    mk = (mk + vals[c] * zk) % p;
                }
                mk = mk * einv % p;
                if mk > deg {
                    return Err(Error::Character(format!("eigenvalue multiplicity {} exceeds the degree", mk)));
                }
                if mk > 0 {
                    acc = acc.add(&CycNum::zeta_pow(exponent as u32, k as i64).scale(&crate::exactalg::Rat::int(mk as i64)));
                }
            }
            values.push(acc);
        }
        out.push(Character::new(group.clone(), values)?);
    }
    out.sort_by_key(|c| (!c.values().iter().all(|v| v.is_one()), c.degree().to_integer()));
    let total: u64 = out.iter().map(|c| c.degree().to_integer().unwrap_or(0).pow(2) as u64).sum();
    if total != order || !out.iter().all(|c| c.is_irreducible()) {
        return Err(Error::Character("lifted table fails the orthogonality relations".into()));
    }
    Ok(out)
}

fn unit(r: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

/// Splits the invariant subspace spanned by the rows of `basis` into eigenspaces of `m`.
fn split(basis: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let mut b = basis.to_vec();
    let piv = modp::rref(&mut b, p);
    let k = b.len();
    let r = m.len();
    // restricted[c][a]: coordinate c of m·b_a
    let mut restricted = vec![vec![0u64; k]; k];
    for a in 0..k {
        for (c, &pc) in piv.iter().enumerate() {
            let mut w = 0;
            for x in 0..r {
                w = (w + m[pc][x] * b[a][x]) % p;
            }
            restricted[c][a] = w;
        }
    }
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        if found == k {
            break;
        }
        let mut n = restricted.clone();
        for (i, row) in n.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        let ns = modp::nullspace(&n, p);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|cf| (0..r).map(|x| (0..k).fold(0, |acc, a| (acc + cf[a] * b[a][x]) % p)).collect())
            .collect();
        out.push(vecs);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    fn degrees(t: &[Character]) -> Vec<i64> {
        let mut d: Vec<i64> = t.iter().map(|c| c.degree().to_integer().unwrap()).collect();
        d.sort();
        d
    }

    #[test]
    fn symmetric_tables() {
        let s4 = Arc::new(GroupSpec::symmetric(4).whole().unwrap());
        let t = character_table(&s4).unwrap();
        assert_eq!(degrees(&t), vec![1, 1, 2, 3, 3]);
        assert_eq!(t[0], Character::trivial(s4));
    }

    #[test]
    fn alternating_and_cyclic() {
        let s4 = GroupSpec::symmetric(4).whole().unwrap();
        let a4 = Arc::new(s4.filter(|g| g.sign() == 1).unwrap());
        let t = character_table(&a4).unwrap();
        assert_eq!(degrees(&t), vec![1, 1, 1, 3]);
        // the two nontrivial linear characters take primitive cube roots of unity
        let w = CycNum::zeta(3);
        assert!(t.iter().any(|c| c.values().iter().any(|v| *v == w)));
        let c3 = Arc::new(GroupSpec::new(1, 3, 3).unwrap().whole().unwrap().filter(|g| g.is_diagonal()).unwrap());
        assert_eq!(character_table(&c3).unwrap().len(), 9);
    }

    #[test]
    fn reflection_group_table() {
        let g = Arc::new(GroupSpec::new(2, 1, 2).unwrap().whole().unwrap());
        assert_eq!(degrees(&character_table(&g).unwrap()), vec![1, 1, 1, 1, 2]);
    }
}
