//! Conjugacy classes of `PGL_2(F_q)` and `PSL_2(F_q)` from the torus
//! description, without enumerating the group, plus the matrix models used
//! to check them.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::classes::{sort_and_label, ClassStructure};
use super::element::{GroupElement, Matrix2, Ring};
use super::finite::FiniteGroup;
use crate::arith::modp::pow_mod;
use crate::arith::nt::{gcd, prime_power};
use crate::field::{GaloisField, QuadraticExtension};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinearFamily {
    Pgl2,
    Psl2,
}

/// Which torus a class meets, with its normalized exponent.
///
/// `Split(k)`: image of `diag(γ^k, 1)` in `PGL_2`, or of `diag(γ^k, γ^{-k})`
/// in `PSL_2`. `Nonsplit(j)`: image of multiplication by `Γ^j` (resp.
/// `Γ^{j(q-1)}`) on `F_{q^2}`. Exponents are taken up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TorusClass {
    Identity,
    Unipotent(u8),
    Split(u64),
    Nonsplit(u64),
}

/// Class data of `PGL_2(F_q)` or `PSL_2(F_q)` computed from the tori.
#[derive(Debug, Clone)]
pub struct LinearClasses {
    family: LinearFamily,
    q: u64,
    p: u64,
    m: u32,
    group_order: u64,
    split_order: u64,
    nonsplit_order: u64,
    kinds: Vec<TorusClass>,
    lookup: BTreeMap<TorusClass, usize>,
    structure: Arc<ClassStructure>,
}

impl LinearClasses {
    pub fn new(family: LinearFamily, q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
        let pgl_like = family == LinearFamily::Pgl2 || p == 2;
        let full = q * (q * q - 1);
        let (group_order, split_order, nonsplit_order) =
            if pgl_like { (full, q - 1, q + 1) } else { (full / 2, (q - 1) / 2, (q + 1) / 2) };
        let mut kinds = alloc::vec![TorusClass::Identity, TorusClass::Unipotent(0)];
        if !pgl_like {
            kinds.push(TorusClass::Unipotent(1));
        }
        kinds.extend((1..=split_order / 2).map(TorusClass::Split));
        kinds.extend((1..=nonsplit_order / 2).map(TorusClass::Nonsplit));
        let mut this = Self {
            family,
            q,
            p,
            m,
            group_order,
            split_order,
            nonsplit_order,
            kinds: Vec::new(),
            lookup: BTreeMap::new(),
            structure: Arc::new(ClassStructure { name: alloc::string::String::new(), group_order, classes: Vec::new() }),
        };
        let pos: BTreeMap<TorusClass, usize> = kinds.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let raw: Vec<(u64, u64, Vec<u32>, TorusClass)> = kinds
            .iter()
            .map(|&k| {
                let order = this.kind_order(k);
                let pm = (0..order).map(|j| pos[&this.power_kind(k, j)] as u32).collect();
                (order, this.kind_size(k), pm, k)
            })
            .collect();
        let (infos, new_of) = sort_and_label(&raw);
        let mut sorted = alloc::vec![TorusClass::Identity; kinds.len()];
        for (old, &k) in kinds.iter().enumerate() {
            sorted[new_of[old]] = k;
        }
        let name = match family {
            LinearFamily::Pgl2 => alloc::format!("PGL2({q})"),
            LinearFamily::Psl2 => alloc::format!("PSL2({q})"),
        };
        this.lookup = sorted.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        this.kinds = sorted;
        this.structure = Arc::new(ClassStructure { name, group_order, classes: infos });
        Ok(this)
    }

    fn pgl_like(&self) -> bool {
        self.family == LinearFamily::Pgl2 || self.p == 2
    }

    pub fn family(&self) -> LinearFamily {
        self.family
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Order of the split torus `S` in this group.
    pub fn split_order(&self) -> u64 {
        self.split_order
    }

    /// Order of the nonsplit torus `T` in this group.
    pub fn nonsplit_order(&self) -> u64 {
        self.nonsplit_order
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn kinds(&self) -> &[TorusClass] {
        &self.kinds
    }

    pub fn kind(&self, c: usize) -> TorusClass {
        self.kinds[c]
    }

    pub fn index(&self, kind: TorusClass) -> Option<usize> {
        self.lookup.get(&kind).copied()
    }

    fn kind_order(&self, k: TorusClass) -> u64 {
        match k {
            TorusClass::Identity => 1,
            TorusClass::Unipotent(_) => self.p,
            TorusClass::Split(e) => self.split_order / gcd(e, self.split_order),
            TorusClass::Nonsplit(e) => self.nonsplit_order / gcd(e, self.nonsplit_order),
        }
    }

    fn kind_size(&self, k: TorusClass) -> u64 {
        let g = self.group_order;
        match k {
            TorusClass::Identity => 1,
            TorusClass::Unipotent(_) if self.pgl_like() => self.q * self.q - 1,
            TorusClass::Unipotent(_) => (self.q * self.q - 1) / 2,
            TorusClass::Split(e) if 2 * e == self.split_order => g / (2 * self.split_order),
            TorusClass::Split(_) => g / self.split_order,
            TorusClass::Nonsplit(e) if 2 * e == self.nonsplit_order => g / (2 * self.nonsplit_order),
            TorusClass::Nonsplit(_) => g / self.nonsplit_order,
        }
    }

    /// The torus class of `g^j` for `g` of kind `k`.
    pub fn power_kind(&self, k: TorusClass, j: u64) -> TorusClass {
        let fold = |e: u64, n: u64| {
            let r = (e * j) % n;
            r.min(n - r)
        };
        match k {
            TorusClass::Identity => k,
            TorusClass::Unipotent(c) => {
                let jp = j % self.p;
                if jp == 0 {
                    TorusClass::Identity
                } else if self.pgl_like() || self.m % 2 == 0 {
                    k
                } else {
                    let square = pow_mod(jp, (self.p - 1) / 2, self.p) == 1;
                    TorusClass::Unipotent(if square { c } else { 1 - c })
                }
            }
            TorusClass::Split(e) => match fold(e, self.split_order) {
                0 => TorusClass::Identity,
                r => TorusClass::Split(r),
            },
            TorusClass::Nonsplit(e) => match fold(e, self.nonsplit_order) {
                0 => TorusClass::Identity,
                r => TorusClass::Nonsplit(r),
            },
        }
    }
}

/// Concrete matrix model of `PGL_2(F_q)`, `PSL_2(F_q)` or `SL_2(F_q)`.
#[derive(Debug, Clone)]
pub struct LinearModel {
    family: LinearFamily,
    ring: Arc<Ring>,
    ext: QuadraticExtension,
    projective: bool,
}

impl LinearModel {
    pub fn new(family: LinearFamily, q: u64) -> Result<Self> {
        Self::with_projectivity(family, q, true)
    }

    /// `SL_2(F_q)` as a linear (non-projective) group.
    pub fn special_linear(q: u64) -> Result<Self> {
        Self::with_projectivity(LinearFamily::Psl2, q, false)
    }

    fn with_projectivity(family: LinearFamily, q: u64, projective: bool) -> Result<Self> {
        let field = GaloisField::new(q)?;
        let ext = QuadraticExtension::new(field.clone());
        Ok(Self { family, ring: Arc::new(Ring::Field(field)), ext, projective })
    }

    fn field(&self) -> &GaloisField {
        self.ext.base()
    }

    fn pgl_like(&self) -> bool {
        self.family == LinearFamily::Pgl2 || self.field().characteristic() == 2
    }

    fn matrix(&self, entries: [u32; 4]) -> GroupElement {
        GroupElement::Matrix(Matrix2::new(self.ring.clone(), entries, self.projective).expect("invertible by construction"))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Upper unitriangular matrices for an additive basis of `F_q`, the Weyl
    /// element, and for `PGL_2` also `diag(γ, 1)`.
    pub fn generators(&self) -> Vec<GroupElement> {
        let f = self.field();
        let mut gens: Vec<GroupElement> = f.additive_basis().into_iter().map(|b| self.matrix([1, b, 0, 1])).collect();
        gens.push(self.matrix([0, f.neg(1), 1, 0]));
        if self.family == LinearFamily::Pgl2 && f.characteristic() != 2 {
            gens.push(self.matrix([f.primitive(), 0, 0, 1]));
        }
        gens
    }

    /// A matrix in the given torus class.
    pub fn representative(&self, kind: TorusClass) -> GroupElement {
        let f = self.field();
        let q = f.order() as u64;
        match kind {
            TorusClass::Identity => self.matrix([1, 0, 0, 1]),
            TorusClass::Unipotent(0) => self.matrix([1, 1, 0, 1]),
            TorusClass::Unipotent(_) => self.matrix([1, f.primitive(), 0, 1]),
            TorusClass::Split(k) if self.pgl_like() => self.matrix([f.gen_pow(k as i64), 0, 0, 1]),
            TorusClass::Split(k) => self.matrix([f.gen_pow(k as i64), 0, 0, f.gen_pow(-(k as i64))]),
            TorusClass::Nonsplit(j) => {
                let e = if self.pgl_like() { j } else { j * (q - 1) };
                self.matrix(self.ext.multiplication_matrix(self.ext.pow(self.ext.generator(), e)))
            }
        }
    }

    /// The torus class of a matrix of this model. Uses searches in
    /// `F_{q^2}`, so it is meant for small `q`.
    pub fn classify(&self, g: &GroupElement) -> Result<TorusClass> {
        let m = g
            .as_matrix()
            .ok_or_else(|| Error::InvalidInput("classification needs a matrix".into()))?;
        let f = self.field();
        let q = f.order() as u64;
        let [a, b, c, d] = m.entries();
        if b == 0 && c == 0 && a == d {
            return Ok(TorusClass::Identity);
        }
        let roots = self.ext.quadratic_roots(m.trace(), m.det());
        let pgl_like = self.pgl_like();
        let fold = |e: u64, n: u64| e.min(n - e);
        match roots.len() {
            1 => {
                if pgl_like {
                    return Ok(TorusClass::Unipotent(0));
                }
                let det_log = f.log(m.det()).expect("unit") as i64;
                if det_log % 2 != 0 {
                    return Err(Error::InvalidInput("matrix is not in PSL_2".into()));
                }
                let s = f.inv(f.gen_pow(det_log / 2));
                let mut n = m.scaled(s);
                if f.add(n[0], n[3]) != f.from_int(2) {
                    n = n.map(|e| f.neg(e));
                }
                let x = if n[1] != 0 { n[1] } else { f.neg(n[2]) };
                Ok(TorusClass::Unipotent(if f.is_square(x) { 0 } else { 1 }))
            }
            2 if roots.iter().all(|r| r.1 == 0) => {
                let ratio = f.div(roots[0].0, roots[1].0);
                let k = f.log(ratio).expect("unit") as u64;
                if pgl_like {
                    Ok(TorusClass::Split(fold(k, q - 1)))
                } else {
                    let s = (q - 1) / 2;
                    Ok(TorusClass::Split(fold((k / 2) % s, s)))
                }
            }
            2 => {
                let (x, y) = (roots[0], roots[1]);
                let lx = self.ext.log(x).expect("unit");
                let ly = self.ext.log(y).expect("unit");
                let n2 = q * q - 1;
                let diff = (ly + n2 - lx) % n2;
                let j = diff / (q - 1);
                if pgl_like {
                    Ok(TorusClass::Nonsplit(fold(j, q + 1)))
                } else {
                    let t = (q + 1) / 2;
                    Ok(TorusClass::Nonsplit(fold((j / 2) % t, t)))
                }
            }
            _ => Err(Error::InvalidInput("characteristic polynomial has no roots".into())),
        }
    }
}

impl LinearModel {
    /// For each class of an enumerated model of this group, the index of
    /// the matching structural class; checks sizes and orders agree and the
    /// map is a bijection.
    pub fn class_correspondence(&self, group: &FiniteGroup, classes: &LinearClasses) -> Result<Vec<usize>> {
        let s = classes.structure();
        if group.classes().len() != s.len() || group.order() as u64 != s.group_order {
            return Err(Error::TableInconsistent("class counts or orders differ".into()));
        }
        let mut seen = alloc::vec![false; s.len()];
        let mut out = Vec::with_capacity(s.len());
        for c in group.classes() {
            let kind = self.classify(&c.representative)?;
            let i = classes
                .index(kind)
                .ok_or_else(|| Error::TableInconsistent(alloc::format!("no structural class {kind:?}")))?;
            if core::mem::replace(&mut seen[i], true) || s.size(i) != c.size || s.order(i) != c.order {
                return Err(Error::TableInconsistent(alloc::format!("class {} does not match {kind:?}", c.label)));
            }
            out.push(i);
        }
        Ok(out)
    }
}
