//! Fully enumerated finite groups with cached conjugacy classes.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::classes::{sort_and_label, ClassStructure};
use super::element::{GroupElement, Permutation};
use crate::{Error, Result};

/// Default enumeration cap.
pub const ORDER_CAP: usize = 1_000_000;

/// A conjugacy class of an enumerated group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: String,
    pub representative: GroupElement,
    /// Index of the representative in [`FiniteGroup::elements`].
    pub rep_index: usize,
    pub size: u64,
    pub order: u64,
}

/// A finite group with its full element list. Elements are sorted with the
/// identity first; conjugacy classes are computed once at construction.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    description: String,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
    structure: Arc<ClassStructure>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators`.
    pub fn generate(description: impl Into<String>, generators: Vec<GroupElement>, cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidSpec("a group needs at least one generator".into()))?;
        let id = first.identity_like();
        let mut elements = vec![id.clone()];
        let mut seen: HashMap<GroupElement, u32> = HashMap::new();
        seen.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &generators {
                let y = x.mul(g);
                if !seen.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone(), elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        elements[1..].sort();
        let index: HashMap<GroupElement, u32> =
            elements.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        let mut group = Self {
            description: description.into(),
            generators,
            elements,
            index,
            class_of: Vec::new(),
            classes: Vec::new(),
            structure: Arc::new(ClassStructure { name: String::new(), group_order: 0, classes: Vec::new() }),
        };
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g] as usize).collect();
        let gen_inv: Vec<usize> = gens.iter().map(|&g| self.inv(g)).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start);
            class_of[start] = c;
            let mut queue = VecDeque::from([start]);
            let mut size = 1u64;
            while let Some(x) = queue.pop_front() {
                for (&g, &gi) in gens.iter().zip(&gen_inv) {
                    let y = self.mul(self.mul(gi, x), g);
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        size += 1;
                        queue.push_back(y);
                    }
                }
            }
            sizes.push(size);
        }
        let raw: Vec<(u64, u64, Vec<u32>, usize)> = reps
            .iter()
            .zip(&sizes)
            .map(|(&r, &size)| {
                let mut pm = vec![class_of[0]];
                let mut x = r;
                while x != 0 {
                    pm.push(class_of[x]);
                    x = self.mul(x, r);
                }
                (pm.len() as u64, size, pm, r)
            })
            .collect();
        let (infos, new_of) = sort_and_label(&raw);
        let mut classes: Vec<Option<ConjugacyClass>> = vec![None; reps.len()];
        for (old, &r) in reps.iter().enumerate() {
            let info = &infos[new_of[old]];
            classes[new_of[old]] = Some(ConjugacyClass {
                label: info.label.clone(),
                representative: self.elements[r].clone(),
                rep_index: r,
                size: info.size,
                order: info.order,
            });
        }
        self.classes = classes.into_iter().map(|c| c.expect("every slot filled")).collect();
        self.class_of = class_of.into_iter().map(|c| new_of[c as usize] as u32).collect();
        self.structure = Arc::new(ClassStructure {
            name: self.description.clone(),
            group_order: n as u64,
            classes: infos,
        });
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g] as usize).collect()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()] as usize
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        self.index[&self.elements[a].pow(e)] as usize
    }

    /// `x⁻¹ a x`.
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_of_element(&self, g: &GroupElement) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of(i))
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn class_index(&self, label: &str) -> Result<usize> {
        self.structure.find(label)
    }

    /// All element indices in class `c`.
    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.class_of(i) == c).collect()
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.classes[self.class_of(i)].order
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    pub fn cyclic_subgroup(&self, i: usize) -> Vec<usize> {
        self.closure(&[i])
    }

    /// Checks that `h` is a nonempty subset closed under products and inverses.
    pub fn check_subgroup(&self, h: &[usize]) -> Result<()> {
        if h.is_empty() || h.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotASubgroup("empty or out-of-range element list".into()));
        }
        let mut inside = vec![false; self.order()];
        for &x in h {
            inside[x] = true;
        }
        for &a in h {
            if !inside[self.inv(a)] {
                return Err(Error::NotASubgroup("not closed under inverses".into()));
            }
            for &b in h {
                if !inside[self.mul(a, b)] {
                    return Err(Error::NotASubgroup("not closed under products".into()));
                }
            }
        }
        Ok(())
    }

    /// `x⁻¹ H x`, sorted.
    pub fn conjugate_subgroup(&self, h: &[usize], x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&a| self.conj(a, x)).collect();
        out.sort_unstable();
        out
    }

    /// Whether `a` commutes with every element of the group.
    pub fn is_central(&self, a: usize) -> bool {
        self.generator_indices().iter().all(|&g| self.mul(a, g) == self.mul(g, a))
    }

    /// Permutation generators of a faithful action: the group's own
    /// generators if it is a permutation group, else the right regular action
    /// on its element list.
    pub fn permutation_generators(&self) -> Vec<Permutation> {
        if self.generators.iter().all(|g| g.as_perm().is_some()) {
            return self.generators.iter().map(|g| g.as_perm().expect("checked").clone()).collect();
        }
        self.generator_indices()
            .into_iter()
            .map(|g| self.regular_image(g))
            .collect()
    }

    /// Permutation of element indices `x ↦ g·x`.
    pub fn regular_image(&self, g: usize) -> Permutation {
        let images = (0..self.order()).map(|x| self.mul(g, x) as u32).collect();
        Permutation::from_images(images).expect("left multiplication is a bijection")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(d: usize, s: &str) -> GroupElement {
        GroupElement::Perm(Permutation::parse_cycles(d, s).unwrap())
    }

    #[test]
    fn s3_classes() {
        let g = FiniteGroup::generate("S3", vec![perm(3, "(0 1)"), perm(3, "(0 1 2)")], ORDER_CAP).unwrap();
        assert_eq!(g.order(), 6);
        let data: Vec<(u64, u64)> = g.classes().iter().map(|c| (c.size, c.order)).collect();
        assert_eq!(data, vec![(1, 1), (3, 2), (2, 3)]);
        assert_eq!(g.structure().labels(), vec!["1a", "2a", "3a"]);
        g.structure().validate().unwrap();
        assert!(g.check_subgroup(&g.cyclic_subgroup(1)).is_ok());
        assert!(g.check_subgroup(&[0, 1, 2]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteGroup::generate("S5", vec![perm(5, "(0 1)"), perm(5, "(0 1 2 3 4)")], 100);
        assert!(matches!(r, Err(Error::OrderCapExceeded { cap: 100 })));
    }
}
