use super::{size_bound, GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::partitions::SetPartition;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// A conjugacy class inside a subgroup, as indices into its element list.
#[derive(Clone, Debug)]
pub struct Class {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// A subgroup of `G(de,e,n)` with its elements listed (identity first).
#[derive(Clone, Debug)]
pub struct Subgroup {
    spec: GroupSpec,
    gens: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    classes: OnceLock<(Vec<Class>, Vec<usize>)>,
}

impl Subgroup {
    /// Closure of `gens` by breadth-first products.
    pub fn generate(spec: GroupSpec, gens: Vec<GroupElement>) -> Result<Subgroup> {
        let bound = size_bound() as usize;
        for g in &gens {
            if !spec.is_member(g) {
                return Err(Error::Input(format!("{} is not an element of {}", g, spec)));
            }
        }
        let id = spec.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let x = elements[i].mul(g);
                if !index.contains_key(&x) {
                    if elements.len() >= bound {
                        return Err(Error::Bound(format!("subgroup exceeds {} elements", bound)));
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Subgroup { spec, gens, elements, index, classes: OnceLock::new() })
    }

    /// Wraps a list already known to be a subgroup; `gens` must generate it
    /// (pass an empty list to have a generating set chosen).
    pub fn from_elements(spec: GroupSpec, gens: Vec<GroupElement>, mut elements: Vec<GroupElement>) -> Result<Subgroup> {
        let Some(pos) = elements.iter().position(|g| g.is_identity()) else {
            return Err(Error::Input("element list lacks the identity".into()));
        };
        let id = elements.remove(pos);
        elements.insert(0, id);
        let index: HashMap<GroupElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Input("repeated elements".into()));
        }
        let mut h = Subgroup { spec, gens: vec![], elements, index, classes: OnceLock::new() };
        h.gens = if gens.is_empty() { h.small_generating_set() } else { gens };
        h.gens.retain(|g| !g.is_identity());
        Ok(h)
    }

    /// The trivial subgroup.
    pub fn trivial(spec: GroupSpec) -> Subgroup {
        Subgroup::generate(spec, vec![]).unwrap()
    }

    /// The subgroup `{g ∈ self : pred(g)}`, assumed closed.
    pub fn filter(&self, pred: impl Fn(&GroupElement) -> bool) -> Result<Subgroup> {
        let els = self.elements.iter().filter(|g| pred(g)).cloned().collect();
        Subgroup::from_elements(self.spec, vec![], els)
    }

    fn small_generating_set(&self) -> Vec<GroupElement> {
        let mut gens: Vec<GroupElement> = Vec::new();
        let mut reached: HashSet<GroupElement> = HashSet::from([self.spec.identity()]);
        for g in &self.elements {
            if reached.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let closure = Subgroup::generate(self.spec, gens.clone()).expect("closure within parent");
            reached = closure.elements.into_iter().collect();
            if reached.len() == self.elements.len() {
                break;
            }
        }
        gens
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn is_subgroup_of(&self, o: &Subgroup) -> bool {
        self.elements.iter().all(|g| o.contains(g))
    }

    /// Normality in `ambient` (checked on generators of the ambient group).
    pub fn is_normal_in(&self, ambient: &Subgroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient
                .generators()
                .iter()
                .all(|s| self.gens.iter().all(|h| self.contains(&s.conjugate(h))))
    }

    /// `s H s^{-1}`
    pub fn conjugate_by(&self, s: &GroupElement) -> Subgroup {
        let els = self.elements.iter().map(|h| s.conjugate(h)).collect();
        let gens = self.gens.iter().map(|h| s.conjugate(h)).collect();
        Subgroup::from_elements(self.spec, gens, els).expect("conjugate subgroup")
    }

    pub fn intersect(&self, o: &Subgroup) -> Subgroup {
        self.filter(|g| o.contains(g)).expect("intersection")
    }

    fn class_data(&self) -> &(Vec<Class>, Vec<usize>) {
        self.classes.get_or_init(|| {
            let k = self.elements.len();
            let mut class_of = vec![usize::MAX; k];
            let mut classes = Vec::new();
            for start in 0..k {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let ci = classes.len();
                let mut members = vec![start];
                class_of[start] = ci;
                let mut q = VecDeque::from([start]);
                while let Some(i) = q.pop_front() {
                    for s in &self.gens {
                        let y = s.conjugate(&self.elements[i]);
                        let j = self.index[&y];
                        if class_of[j] == usize::MAX {
                            class_of[j] = ci;
                            members.push(j);
                            q.push_back(j);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(Class { rep: start, members });
            }
            (classes, class_of)
        })
    }

    /// Conjugacy classes, ordered by their smallest element index (identity first).
    pub fn classes(&self) -> &[Class] {
        &self.class_data().0
    }

    /// Class index of each element.
    pub fn class_of(&self) -> &[usize] {
        &self.class_data().1
    }

    pub fn class_index(&self, g: &GroupElement) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of()[i])
    }

    pub fn class_reps(&self) -> Vec<&GroupElement> {
        self.classes().iter().map(|c| &self.elements[c.rep]).collect()
    }
}

/// Young subgroup `S(P_1) × … × S(P_r)` of a set partition, with zero weights.
pub fn young_subgroup(spec: GroupSpec, p: &SetPartition) -> Result<Subgroup> {
    if p.n() != spec.n {
        return Err(Error::SizeMismatch(format!("set partition of {} in {}", p.n(), spec)));
    }
    let n = spec.n as usize;
    let mut gens = Vec::new();
    for b in p.blocks() {
        for w in b.windows(2) {
            gens.push(GroupElement::transposition(spec.m(), n, w[0] as usize - 1, w[1] as usize - 1));
        }
    }
    Subgroup::generate(spec, gens)
}

#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub rep: GroupElement,
    pub size: usize,
    /// `H(s) = s H_2 s^{-1} ∩ H_1`
    pub h_s: Subgroup,
}

/// Representatives of `H_1 \ G / H_2` with the intersections `H(s)`.
pub fn double_cosets(ambient: &Subgroup, h1: &Subgroup, h2: &Subgroup) -> Result<Vec<DoubleCoset>> {
    if !h1.is_subgroup_of(ambient) || !h2.is_subgroup_of(ambient) {
        return Err(Error::Input("subgroups are not contained in the ambient group".into()));
    }
    let mut seen = vec![false; ambient.order()];
    let mut out = Vec::new();
    for (i, s) in ambient.elements().iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut size = 0;
        let mut local = HashSet::new();
        for a in h1.elements() {
            let as_ = a.mul(s);
            for b in h2.elements() {
                let x = as_.mul(b);
                if local.insert(x.clone()) {
                    seen[ambient.index_of(&x).unwrap()] = true;
                    size += 1;
                }
            }
        }
        let h_s = h2.conjugate_by(s).intersect(h1);
        out.push(DoubleCoset { rep: s.clone(), size, h_s });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> GroupSpec {
        GroupSpec::symmetric(n)
    }

    #[test]
    fn young_subgroups() {
        let g = s(4);
        assert_eq!(young_subgroup(g, &SetPartition::singletons(4)).unwrap().order(), 1);
        assert_eq!(young_subgroup(g, &"1,2,3,4".parse().unwrap()).unwrap().order(), 24);
        assert_eq!(young_subgroup(g, &"1,2|3,4".parse().unwrap()).unwrap().order(), 4);
    }

    #[test]
    fn double_coset_counts() {
        let g = s(4).whole().unwrap();
        let s3 = young_subgroup(s(4), &"1,2,3|4".parse().unwrap()).unwrap();
        let dc = double_cosets(&g, &s3, &s3).unwrap();
        assert_eq!(dc.len(), 2);
        assert_eq!(dc.iter().map(|d| d.size).sum::<usize>(), 24);
        let whole = double_cosets(&g, &g, &g).unwrap();
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].h_s.order(), 24);
        let t = Subgroup::trivial(s(4));
        assert_eq!(double_cosets(&g, &t, &t).unwrap().len(), 24);
    }

    #[test]
    fn normality() {
        let g = s(4).whole().unwrap();
        let a4 = g.filter(|x| x.sign() == 1).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.is_normal_in(&g));
        let s3 = young_subgroup(s(4), &"1,2,3|4".parse().unwrap()).unwrap();
        assert!(!s3.is_normal_in(&g));
        assert_eq!(a4.classes().len(), 4);
    }
}
