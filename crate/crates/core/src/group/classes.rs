//! Realization-independent conjugacy-class data.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One conjugacy class as seen by character computations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: String,
    pub order: u64,
    pub size: u64,
    /// `power_map[k]` is the class of `g^k` for `0 ≤ k < order`.
    pub power_map: Vec<u32>,
}

/// The class list of a group together with power maps. Index 0 is always the
/// identity class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassStructure {
    pub name: String,
    pub group_order: u64,
    pub classes: Vec<ClassInfo>,
}

impl ClassStructure {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, c: usize) -> &ClassInfo {
        &self.classes[c]
    }

    pub fn size(&self, c: usize) -> u64 {
        self.classes[c].size
    }

    pub fn order(&self, c: usize) -> u64 {
        self.classes[c].order
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.classes[c].size
    }

    /// Class of `g^k` for `g` in class `c`; `k` may be negative.
    pub fn power(&self, c: usize, k: i64) -> usize {
        let info = &self.classes[c];
        info.power_map[k.rem_euclid(info.order as i64) as usize] as usize
    }

    pub fn inverse(&self, c: usize) -> usize {
        self.power(c, -1)
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1, |acc, c| crate::arith::nt::lcm(acc, c.order))
    }

    pub fn find(&self, label: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::UnknownClass(label.into()))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.classes.iter().map(|c| c.label.as_str()).collect()
    }

    /// Checks sizes sum to the group order, divide it, and power maps are
    /// consistent with element orders.
    pub fn validate(&self) -> Result<()> {
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            return Err(Error::TableInconsistent(alloc::format!(
                "class sizes sum to {total}, expected {}",
                self.group_order
            )));
        }
        if self.classes.first().map(|c| (c.order, c.size)) != Some((1, 1)) {
            return Err(Error::TableInconsistent("class 0 is not the identity".into()));
        }
        for (i, c) in self.classes.iter().enumerate() {
            if self.group_order % c.size != 0 {
                return Err(Error::TableInconsistent(alloc::format!("class {} size does not divide |G|", c.label)));
            }
            if c.power_map.len() as u64 != c.order || c.power_map.first() != Some(&0) {
                return Err(Error::TableInconsistent(alloc::format!("bad power map for {}", c.label)));
            }
            if c.order > 1 && c.power_map[1] as usize != i {
                return Err(Error::TableInconsistent(alloc::format!("power map of {} misses itself", c.label)));
            }
            for (k, &d) in c.power_map.iter().enumerate() {
                let expect = c.order / crate::arith::nt::gcd(k as u64, c.order);
                if self.classes[d as usize].order != expect {
                    return Err(Error::TableInconsistent(alloc::format!(
                        "power {k} of {} has wrong order",
                        c.label
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Letters for the `i`-th class of a given order: `a, b, …, z, aa, ab, …`.
pub(crate) fn class_suffix(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// Sorts classes by `(order, size, power-map profile, tie)` and assigns
/// labels. `raw[i] = (order, size, power_map, tie)` with power maps indexing
/// into `raw`. Returns the sorted classes and the permutation `old -> new`.
pub(crate) fn sort_and_label<T: Ord + Clone>(raw: &[(u64, u64, Vec<u32>, T)]) -> (Vec<ClassInfo>, Vec<usize>) {
    let profile = |i: usize| -> Vec<(u64, u64)> {
        raw[i].2.iter().map(|&d| (raw[d as usize].0, raw[d as usize].1)).collect()
    };
    let mut idx: Vec<usize> = (0..raw.len()).collect();
    idx.sort_by(|&a, &b| {
        (raw[a].0, raw[a].1, profile(a), raw[a].3.clone()).cmp(&(raw[b].0, raw[b].1, profile(b), raw[b].3.clone()))
    });
    let mut new_of = alloc::vec![0usize; raw.len()];
    for (new, &old) in idx.iter().enumerate() {
        new_of[old] = new;
    }
    let mut out = Vec::with_capacity(raw.len());
    let mut run = 0usize;
    for (pos, &old) in idx.iter().enumerate() {
        let order = raw[old].0;
        if pos > 0 && raw[idx[pos - 1]].0 == order {
            run += 1;
        } else {
            run = 0;
        }
        out.push(ClassInfo {
            label: alloc::format!("{order}{}", class_suffix(run)),
            order,
            size: raw[old].1,
            power_map: raw[old].2.iter().map(|&d| new_of[d as usize] as u32).collect(),
        });
    }
    (out, new_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffixes() {
        assert_eq!(class_suffix(0), "a");
        assert_eq!(class_suffix(25), "z");
        assert_eq!(class_suffix(26), "aa");
        assert_eq!(class_suffix(27), "ab");
    }
}
