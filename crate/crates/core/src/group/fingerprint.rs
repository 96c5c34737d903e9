//! Isomorphism-invariant summaries used to validate constructions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use crate::arith::nt::factor;

/// Order, element-order histogram, center, abelianization and derived
/// subgroup of a group. Equal for isomorphic groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub element_orders: BTreeMap<u64, u64>,
    pub center_order: u64,
    /// Prime-power invariants of `G/G'`, ascending.
    pub abelian_invariants: Vec<u64>,
    pub derived_order: u64,
}

impl FiniteGroup {
    pub fn fingerprint(&self) -> Fingerprint {
        let mut element_orders = BTreeMap::new();
        for c in self.classes() {
            *element_orders.entry(c.order).or_insert(0) += c.size;
        }
        let derived = self.derived_subgroup();
        Fingerprint {
            order: self.order() as u64,
            element_orders,
            center_order: self.center().len() as u64,
            abelian_invariants: self.abelian_invariants_of(&derived),
            derived_order: derived.len() as u64,
        }
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.is_central(x)).collect()
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let group_gens = self.generator_indices();
        let mut current: Vec<usize> = gens.to_vec();
        loop {
            let h = self.closure(&current);
            let mut inside = vec![false; self.order()];
            for &x in &h {
                inside[x] = true;
            }
            let extra = current
                .iter()
                .flat_map(|&x| group_gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .find(|&y| !inside[y]);
            match extra {
                Some(y) => current.push(y),
                None => return h,
            }
        }
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let gens = self.generator_indices();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    fn abelian_invariants_of(&self, derived: &[usize]) -> Vec<u64> {
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] == usize::MAX {
                for &h in derived {
                    coset[self.mul(x, h)] = reps.len();
                }
                reps.push(x);
            }
        }
        let m = reps.len() as u64;
        let mut out = Vec::new();
        for (p, e) in factor(m) {
            // s_k = log_p #{c : c^{p^k} = 1} = Σ_i min(k, λ_i)
            let mut s = vec![0u32];
            let mut pk = 1u64;
            while *s.last().expect("nonempty") < e {
                pk *= p;
                let count = reps.iter().filter(|&&r| derived.binary_search(&self.pow(r, pk)).is_ok()).count() as u64;
                let mut l = 0;
                let mut c = count;
                while c > 1 {
                    c /= p;
                    l += 1;
                }
                s.push(l);
            }
            // number of λ_i ≥ k is s_k − s_{k−1}
            let ge: Vec<u32> = s.windows(2).map(|w| w[1] - w[0]).collect();
            for k in 0..ge.len() {
                let next = ge.get(k + 1).copied().unwrap_or(0);
                for _ in 0..ge[k] - next {
                    out.push(p.pow(k as u32 + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether some subgroup generated by at most two elements has order
    /// `|G|/|Z(G)|` and meets the center trivially. When `G/Z(G)` is
    /// 2-generated this decides whether `G` splits over its center.
    pub fn center_has_two_generated_complement(&self) -> bool {
        let z = self.center();
        let target = self.order() / z.len();
        let mut central = vec![false; self.order()];
        for &x in &z {
            central[x] = true;
        }
        let candidates: Vec<usize> = (1..self.order()).filter(|&x| !central[x]).collect();
        for (i, &a) in candidates.iter().enumerate() {
            for &b in &candidates[i..] {
                let h = self.closure(&[a, b]);
                if h.len() == target && h.iter().all(|&x| x == 0 || !central[x]) {
                    return true;
                }
            }
        }
        target == 1
    }
}
