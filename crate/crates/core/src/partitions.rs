//! Partitions, set partitions, and the orders used to label strata.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Input(format!("partition {:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("partition {:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `(1,…,1)` of size `n`.
    pub fn ones(n: u32) -> Partition {
        Partition { parts: vec![1; n as usize] }
    }

    /// `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition {
            parts: (1..=cols).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect(),
        }
    }

    fn prefix_sums(&self, len: usize) -> Vec<u32> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.parts.get(i).copied().unwrap_or(0);
                acc
            })
            .collect()
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn hook_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.n() as u128).product();
        let mut den: u128 = 1;
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 0..r as usize {
                let arm = r as usize - j - 1;
                let leg = conj.parts[j] as usize - i - 1;
                den *= (arm + leg + 1) as u128;
            }
        }
        num /= den;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition part '{}'", t))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(format!("{} and {} have different sizes", a, b)));
    }
    Ok(())
}

/// `λ ⊴ μ`: every prefix sum of `μ` is at least that of `λ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_size(lambda, mu)?;
    let len = lambda.len().max(mu.len());
    let (a, b) = (lambda.prefix_sums(len), mu.prefix_sums(len));
    Ok(a.iter().zip(b.iter()).all(|(x, y)| y >= x))
}

/// `μ ≻ λ`: `μ` is obtained by merging parts of `λ` (reflexive).
pub fn specialization_succ(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_size(lambda, mu)?;
    // place each part of λ (largest first) into a bin of μ, filling bins exactly
    fn place(parts: &[u32], bins: &mut Vec<u32>) -> bool {
        let Some((&p, rest)) = parts.split_first() else {
            return bins.iter().all(|&b| b == 0);
        };
        let mut tried = BTreeSet::new();
        for i in 0..bins.len() {
            if bins[i] >= p && tried.insert(bins[i]) {
                bins[i] -= p;
                let ok = place(rest, bins);
                bins[i] += p;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    if lambda.len() < mu.len() {
        return Ok(false);
    }
    let mut bins = mu.parts.clone();
    Ok(place(&lambda.parts, &mut bins))
}

/// `λ(k)`: replace `λ_1` by `λ_1 − k`, move it behind every part exceeding it,
/// and drop it if it becomes zero.
pub fn reduce(lambda: &Partition, k: u32) -> Result<Partition> {
    let l1 = lambda.first();
    if k > l1 {
        return Err(Error::Input(format!("k = {} exceeds the first part of {}", k, lambda)));
    }
    let v = l1 - k;
    let rest = &lambda.parts[lambda.parts.len().min(1)..];
    // greatest index i with λ_i > λ_1 − k
    let pos = rest.iter().take_while(|&&p| p > v).count();
    let mut parts: Vec<u32> = rest[..pos].to_vec();
    if v > 0 {
        parts.push(v);
    }
    parts.extend_from_slice(&rest[pos..]);
    Ok(Partition { parts })
}

/// Membership `λ ∈ P_n^μ`.
///
/// Runs through `μ_1, μ_2, …`, subtracting `μ_i` from the current first part
/// and carrying the remainder into the next part of `λ`. The answer is true as
/// soon as some `μ_i` exceeds the current first part, i.e. iff some prefix sum
/// of `μ` exceeds the corresponding prefix sum of `λ`.
pub fn in_pnmu(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_size(lambda, mu)?;
    let mut cur: std::collections::VecDeque<u32> = lambda.parts.iter().copied().collect();
    for &m in &mu.parts {
        let first = cur.pop_front().unwrap_or(0);
        if m > first {
            return Ok(true);
        }
        let left = first - m;
        match cur.front_mut() {
            Some(f) => *f += left,
            None if left > 0 => cur.push_back(left),
            None => {}
        }
    }
    Ok(false)
}

/// The iterated `λ(k)` test with re-sorting after every step; kept for
/// comparison with [`in_pnmu`], which it does not always agree with.
pub fn in_pnmu_greedy(lambda: &Partition, mu: &Partition) -> Result<bool> {
    same_size(lambda, mu)?;
    let mut cur = lambda.clone();
    for &m in &mu.parts {
        if m > cur.first() {
            return Ok(true);
        }
        cur = reduce(&cur, m)?;
    }
    Ok(false)
}

/// The raw set `P_n^μ`, in enumeration order.
pub fn pnmu(mu: &Partition) -> Vec<Partition> {
    enumerate_partitions(mu.n())
        .into_iter()
        .filter(|l| in_pnmu(l, mu).unwrap())
        .collect()
}

/// `Φ_μ`: members of `P_n^μ` not already in `P_n^{μ'}` for a strictly finer `μ'`.
pub fn phi_mu(mu: &Partition) -> BTreeSet<Partition> {
    let mut out: BTreeSet<Partition> = pnmu(mu).into_iter().collect();
    for finer in enumerate_partitions(mu.n()) {
        if finer != *mu && specialization_succ(&finer, mu).unwrap() {
            for l in pnmu(&finer) {
                out.remove(&l);
            }
        }
    }
    out
}

/// Ordered blocks partitioning `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Validates and normalizes: blocks sorted internally, then by decreasing
    /// size with ties broken by the smallest element.
    pub fn new(n: u32, blocks: Vec<Vec<u32>>) -> Result<SetPartition> {
        let mut seen = vec![false; n as usize + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Input("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n || seen[x as usize] {
                    return Err(Error::Input(format!("element {} is out of range or repeated", x)));
                }
                seen[x as usize] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::Input(format!("blocks do not cover 1..{}", n)));
        }
        Ok(SetPartition::normalized(blocks))
    }

    fn normalized(mut blocks: Vec<Vec<u32>>) -> SetPartition {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        SetPartition { blocks }
    }

    /// The standard filling of a shape: `{1..λ_1}, {λ_1+1..λ_1+λ_2}, …`.
    pub fn min_filled(shape: &Partition) -> SetPartition {
        let mut next = 1;
        let blocks = shape
            .parts()
            .iter()
            .map(|&p| {
                let b: Vec<u32> = (next..next + p).collect();
                next += p;
                b
            })
            .collect();
        SetPartition { blocks }
    }

    pub fn singletons(n: u32) -> SetPartition {
        SetPartition { blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// Block index of every element (0-based elements).
    pub fn block_of(&self) -> Vec<usize> {
        let mut v = vec![0; self.n() as usize];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                v[x as usize - 1] = i;
            }
        }
        v
    }

    /// Image under a permutation given in 0-based one-line notation.
    pub fn permuted(&self, perm: &[u32]) -> SetPartition {
        SetPartition::normalized(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| perm[x as usize - 1] + 1).collect())
                .collect(),
        )
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

impl std::str::FromStr for SetPartition {
    type Err = Error;
    /// `1,2|3,4`
    fn from_str(s: &str) -> Result<SetPartition> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad element '{}'", t))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(|b| b.len() as u32).sum();
        SetPartition::new(n, blocks)
    }
}

/// All set partitions of `{1..n}` (restricted growth strings), normalized.
pub fn enumerate_set_partitions(n: u32) -> Vec<SetPartition> {
    fn go(i: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<SetPartition>) {
        if i > n {
            out.push(SetPartition::normalized(blocks.clone()));
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Set partitions of `{1..n}` whose block sizes form `shape`.
pub fn set_partitions_of_shape(shape: &Partition) -> Vec<SetPartition> {
    enumerate_set_partitions(shape.n())
        .into_iter()
        .filter(|p| p.shape() == *shape)
        .collect()
}

/// Hasse diagram of the specialization order; edges point from finer to coarser.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataGraph {
    pub nodes: Vec<Partition>,
    pub edges: Vec<(Partition, Partition)>,
}

pub fn strata_graph(n: u32) -> StrataGraph {
    let nodes = enumerate_partitions(n);
    let k = nodes.len();
    let mut le = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            le[i][j] = specialization_succ(&nodes[i], &nodes[j]).unwrap();
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || !le[i][j] {
                continue;
            }
            let covered = (0..k).any(|z| z != i && z != j && le[i][z] && le[z][j]);
            if !covered {
                edges.push((nodes[i].clone(), nodes[j].clone()));
            }
        }
    }
    edges.sort();
    StrataGraph { nodes, edges }
}

impl StrataGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph strata {\n  rankdir=TB;\n");
        for v in &self.nodes {
            s.push_str(&format!("  \"{}\";\n", v));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", a, b));
        }
        s.push_str("}\n");
        s
    }

    /// All maximal chains from the source `(1^n)` to the sink `(n)`.
    pub fn maximal_chains(&self) -> Vec<Vec<Partition>> {
        let Some(src) = self.nodes.last().cloned() else { return vec![] };
        let mut out = Vec::new();
        let mut path = vec![src];
        self.walk(&mut path, &mut out);
        out
    }

    fn walk(&self, path: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        let last = path.last().unwrap().clone();
        let next: Vec<&Partition> = self.edges.iter().filter(|(a, _)| *a == last).map(|(_, b)| b).collect();
        if next.is_empty() {
            out.push(path.clone());
            return;
        }
        for b in next {
            path.push(b.clone());
            self.walk(path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(0), vec![p(&[])]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5]).conjugate(), Partition::ones(5));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn orders() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2]), &p(&[1])).is_err());
        assert!(specialization_succ(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap());
        assert!(!specialization_succ(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(specialization_succ(&p(&[3, 1]), &p(&[3, 1])).unwrap());
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce(&p(&[3, 1, 1, 1]), 2).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(reduce(&p(&[4]), 0).unwrap(), p(&[4]));
        assert_eq!(reduce(&p(&[2, 2]), 2).unwrap(), p(&[2]));
        assert_eq!(reduce(&p(&[3, 2, 2]), 2).unwrap(), p(&[2, 2, 1]));
        assert!(reduce(&p(&[2]), 3).is_err());
    }

    #[test]
    fn pnmu_membership() {
        assert!(in_pnmu(&Partition::ones(4), &p(&[3, 1])).unwrap());
        assert!(!in_pnmu(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert!(in_pnmu(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert_eq!(
            pnmu(&p(&[3, 2])),
            vec![p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[2, 1, 1, 1]), Partition::ones(5)]
        );
    }

    #[test]
    fn greedy_variant_differs_from_prefix_rule() {
        // re-sorting turns (4,1) into (1,1) after removing 3, so 2 > 1 fires
        assert!(in_pnmu_greedy(&p(&[4, 1]), &p(&[3, 2])).unwrap());
        assert!(!in_pnmu(&p(&[4, 1]), &p(&[3, 2])).unwrap());
        let mut differ = 0;
        for n in 1..=6 {
            for l in enumerate_partitions(n) {
                for m in enumerate_partitions(n) {
                    if in_pnmu(&l, &m).unwrap() != in_pnmu_greedy(&l, &m).unwrap() {
                        differ += 1;
                    }
                }
            }
        }
        assert!(differ > 0);
    }

    #[test]
    fn phi_sets() {
        let expect: BTreeSet<Partition> = [p(&[2, 2, 1, 1]), p(&[3, 1, 1, 1])].into_iter().collect();
        assert_eq!(phi_mu(&p(&[2, 2, 2])), expect);
        assert!(phi_mu(&Partition::ones(5)).is_empty());
        let expect4: BTreeSet<Partition> = [p(&[3, 1])].into_iter().collect();
        assert_eq!(phi_mu(&p(&[4])), expect4);
    }

    #[test]
    fn set_partitions() {
        assert_eq!(enumerate_set_partitions(4).len(), 15);
        assert_eq!(set_partitions_of_shape(&p(&[2, 2])).len(), 3);
        let q: SetPartition = "3,4|1,2".parse().unwrap();
        assert_eq!(q.to_string(), "1,2|3,4");
        assert_eq!(SetPartition::min_filled(&p(&[2, 1])).to_string(), "1,2|3");
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn strata_graphs() {
        let g1 = strata_graph(1);
        assert_eq!(g1.nodes.len(), 1);
        assert!(g1.edges.is_empty());
        let g4 = strata_graph(4);
        assert_eq!(g4.nodes.len(), 5);
        assert_eq!(g4.edges.len(), 5);
        assert_eq!(strata_graph(6).nodes.len(), 11);
        assert!(g4.to_dot().contains("\"(2,1,1)\" -> \"(3,1)\""));
        assert_eq!(g4.maximal_chains().len(), 2);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[3, 2]).hook_count(), 5);
        assert_eq!(p(&[2, 2, 1]).hook_count(), 5);
        assert_eq!(p(&[3, 1, 1]).hook_count(), 6);
    }
}
