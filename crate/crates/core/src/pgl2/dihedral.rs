//! The normalizers `S'` and `T'` of the two tori, as abstract dihedral
//! groups, and the transfer `π ↦ π^{S'}, π^{T'}`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::table::{GenericKind, GenericRepLabel};
use crate::character::ClassFunction;
use crate::group::sort_and_label;
use crate::group::ClassStructure;
use crate::Cyclotomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DihedralClass {
    Identity,
    /// `{r^k, r^{-k}}`, `1 ≤ k ≤ m/2`.
    Rotation(u64),
    /// Reflections `r^k w` with `k` of the given parity (`0` when `m` is odd).
    Reflection(u64),
}

/// The dihedral group `⟨r, w | r^m, w^2, w r w = r^{-1}⟩` of order `2m`.
#[derive(Debug, Clone)]
pub struct DihedralGroup {
    m: u64,
    kinds: Vec<DihedralClass>,
    structure: Arc<ClassStructure>,
}

impl DihedralGroup {
    pub fn new(m: u64, name: &str) -> Self {
        assert!(m >= 1);
        let mut kinds = alloc::vec![DihedralClass::Identity];
        kinds.extend((1..=m / 2).map(DihedralClass::Rotation));
        kinds.push(DihedralClass::Reflection(0));
        if m % 2 == 0 {
            kinds.push(DihedralClass::Reflection(1));
        }
        let pos = |k: DihedralClass| kinds.iter().position(|&x| x == k).expect("listed") as u32;
        let raw: Vec<(u64, u64, Vec<u32>, DihedralClass)> = kinds
            .iter()
            .map(|&k| match k {
                DihedralClass::Identity => (1, 1, alloc::vec![pos(k)], k),
                DihedralClass::Rotation(e) => {
                    let order = m / crate::arith::nt::gcd(e, m);
                    let size = if 2 * e == m { 1 } else { 2 };
                    let pm = (0..order)
                        .map(|j| {
                            let r = (e * j) % m;
                            let r = r.min(m - r);
                            pos(if r == 0 { DihedralClass::Identity } else { DihedralClass::Rotation(r) })
                        })
                        .collect();
                    (order, size, pm, k)
                }
                DihedralClass::Reflection(_) => {
                    let size = if m % 2 == 0 { m / 2 } else { m };
                    (2, size, alloc::vec![pos(DihedralClass::Identity), pos(k)], k)
                }
            })
            .collect();
        let (infos, new_of) = sort_and_label(&raw);
        let mut sorted = alloc::vec![DihedralClass::Identity; kinds.len()];
        for (old, &k) in kinds.iter().enumerate() {
            sorted[new_of[old]] = k;
        }
        let structure = Arc::new(ClassStructure { name: name.into(), group_order: 2 * m, classes: infos });
        Self { m, kinds: sorted, structure }
    }

    pub fn rotation_order(&self) -> u64 {
        self.m
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn kinds(&self) -> &[DihedralClass] {
        &self.kinds
    }

    /// The class of `r^k`.
    pub fn rotation_class(&self, k: u64) -> usize {
        let r = k % self.m;
        let r = r.min(self.m - r);
        let kind = if r == 0 { DihedralClass::Identity } else { DihedralClass::Rotation(r) };
        self.kinds.iter().position(|&x| x == kind).expect("rotation class exists")
    }

    fn function(&self, f: impl Fn(DihedralClass) -> Cyclotomic) -> ClassFunction {
        let values = self.kinds.iter().map(|&k| f(k)).collect();
        ClassFunction::new(self.structure.clone(), values).expect("one value per class")
    }

    /// `Ind_{⟨r⟩}(r ↦ ζ_m^a)`.
    pub fn induced_rotation_character(&self, a: u64) -> ClassFunction {
        let m = self.m;
        self.function(|k| match k {
            DihedralClass::Identity => Cyclotomic::from_integer(2),
            DihedralClass::Rotation(e) => {
                &Cyclotomic::zeta(m, (a * e) as i64) + &Cyclotomic::zeta(m, -((a * e) as i64))
            }
            DihedralClass::Reflection(_) => Cyclotomic::zero(),
        })
    }

    /// `η_b∘det`, where `det(r^k w^e) = (-1)^e γ^k` and `η_b` is trivial or
    /// quadratic; `eta_minus_one = η_b(-1)`.
    pub fn det_character(&self, b: u64, eta_minus_one: i64) -> ClassFunction {
        let sign = |k: u64| if b != 0 && k % 2 == 1 { -1 } else { 1 };
        self.function(|k| {
            Cyclotomic::from_integer(match k {
                DihedralClass::Identity => 1,
                DihedralClass::Rotation(e) => sign(e),
                DihedralClass::Reflection(par) => eta_minus_one * sign(par),
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusNormalizer {
    /// `S'`, of order `2(q-1)`.
    Split,
    /// `T'`, of order `2(q+1)`.
    Nonsplit,
}

/// `π^{S'}` or `π^{T'}`, possibly the zero function.
#[derive(Debug, Clone)]
pub struct TransferredRep {
    pub target: TorusNormalizer,
    pub function: ClassFunction,
}

/// The two dihedral normalizers for a given `q`.
#[derive(Debug, Clone)]
pub struct Normalizers {
    q: u64,
    split: DihedralGroup,
    nonsplit: DihedralGroup,
}

impl Normalizers {
    pub fn new(q: u64) -> Self {
        Self {
            q,
            split: DihedralGroup::new(q - 1, "S'"),
            nonsplit: DihedralGroup::new(q + 1, "T'"),
        }
    }

    pub fn group(&self, target: TorusNormalizer) -> &DihedralGroup {
        match target {
            TorusNormalizer::Split => &self.split,
            TorusNormalizer::Nonsplit => &self.nonsplit,
        }
    }

    pub fn transfer(&self, label: GenericRepLabel, target: TorusNormalizer) -> TransferredRep {
        let d = self.group(target);
        let a = label.exponent;
        let function = match (label.kind, target) {
            (GenericKind::PrincipalSeries, TorusNormalizer::Split) => d.induced_rotation_character(a),
            (GenericKind::Cuspidal, TorusNormalizer::Nonsplit) => d.induced_rotation_character(a),
            (GenericKind::SteinbergTwist, _) => {
                // -1 = γ^{(q-1)/2} for odd q
                let eta_minus_one = if a != 0 && ((self.q - 1) / 2) % 2 == 1 { -1 } else { 1 };
                d.det_character(a, eta_minus_one)
            }
            _ => ClassFunction::zero(d.structure().clone()),
        };
        TransferredRep { target, function }
    }
}

/// Shorthand for [`Normalizers::transfer`].
pub fn transfer(q: u64, label: GenericRepLabel, target: TorusNormalizer) -> TransferredRep {
    Normalizers::new(q).transfer(label, target)
}
