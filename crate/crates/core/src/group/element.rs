//! Concrete group elements: permutations and 2×2 matrices over `F_q` or
//! `Z/nZ`, optionally taken up to scalars.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::arith::nt::gcd;
use crate::field::GaloisField;
use crate::{Error, Result};

/// A permutation of `{0, …, d-1}` stored as its image array.
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::InvalidSpec(alloc::format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::InvalidSpec(alloc::format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Self(images))
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::InvalidSpec(alloc::format!(
                        "point {} exceeds degree {degree}",
                        a.max(b)
                    )));
                }
                if core::mem::replace(&mut touched[a as usize], true) {
                    return Err(Error::InvalidSpec(alloc::format!("point {a} in two cycles")));
                }
                img[a as usize] = b;
            }
        }
        Ok(Self(img))
    }

    /// Parses cycle notation such as `"(0 1 2)(3 4)"`; `"()"` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::InvalidSpec(alloc::format!("bad cycle notation {text:?}")))?;
            let cyc = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::InvalidSpec(alloc::format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body.1.trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Relabels the domain: returns `σ ∘ self ∘ σ⁻¹`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        sigma.compose(self).compose(&sigma.inverse())
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..degree as u32);
        Self(v)
    }

    /// The disjoint union action: `self` on `0..d`, `other` on `d..d+e`.
    pub fn disjoint_sum(&self, other: &Self) -> Self {
        let d = self.0.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + d));
        Self(v)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{x}")?;
                x = self.0[x] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Coefficient ring of a matrix group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ring {
    Field(GaloisField),
    Modular(u32),
}

impl Ring {
    pub fn size(&self) -> u32 {
        match self {
            Ring::Field(f) => f.order(),
            Ring::Modular(n) => *n,
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Ring::Field(f) => f.add(a, b),
            Ring::Modular(n) => (a + b) % n,
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        match self {
            Ring::Field(f) => f.sub(a, b),
            Ring::Modular(n) => (a + n - b % n) % n,
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Ring::Field(f) => f.mul(a, b),
            Ring::Modular(n) => ((a as u64 * b as u64) % *n as u64) as u32,
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn is_unit(&self, a: u32) -> bool {
        match self {
            Ring::Field(_) => a != 0,
            Ring::Modular(n) => gcd(a as u64, *n as u64) == 1,
        }
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if !self.is_unit(a) {
            return None;
        }
        match self {
            Ring::Field(f) => Some(f.inv(a)),
            Ring::Modular(n) => (1..*n).find(|&b| self.mul(a, b) == 1 % n),
        }
    }

    pub fn units(&self) -> Vec<u32> {
        (0..self.size()).filter(|&a| self.is_unit(a)).collect()
    }

    pub fn from_int(&self, k: i64) -> u32 {
        match self {
            Ring::Field(f) => f.from_int(k),
            Ring::Modular(n) => k.rem_euclid(*n as i64) as u32,
        }
    }
}

/// A 2×2 matrix `[a b; c d]` (row-major), possibly taken up to unit scalars.
#[derive(Clone)]
pub struct Matrix2 {
    ring: Arc<Ring>,
    entries: [u32; 4],
    projective: bool,
}

impl Matrix2 {
    /// Builds a matrix; projective matrices are normalized immediately.
    pub fn new(ring: Arc<Ring>, entries: [u32; 4], projective: bool) -> Result<Self> {
        let m = Self { ring, entries, projective };
        if !m.ring.is_unit(m.det()) {
            return Err(Error::InvalidSpec(alloc::format!("matrix {:?} is not invertible", m.entries)));
        }
        Ok(m.normalized())
    }

    pub fn identity(ring: Arc<Ring>, projective: bool) -> Self {
        Self { ring, entries: [1, 0, 0, 1], projective }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn entries(&self) -> [u32; 4] {
        self.entries
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn det(&self) -> u32 {
        let r = &self.ring;
        let [a, b, c, d] = self.entries;
        r.sub(r.mul(a, d), r.mul(b, c))
    }

    pub fn trace(&self) -> u32 {
        self.ring.add(self.entries[0], self.entries[3])
    }

    pub fn scaled(&self, s: u32) -> [u32; 4] {
        self.entries.map(|e| self.ring.mul(e, s))
    }

    fn normalized(mut self) -> Self {
        if !self.projective {
            return self;
        }
        match &*self.ring {
            Ring::Field(f) => {
                let lead = *self.entries.iter().find(|&&e| e != 0).expect("invertible");
                let s = f.inv(lead);
                self.entries = self.scaled(s);
            }
            Ring::Modular(_) => {
                let best = self
                    .ring
                    .units()
                    .into_iter()
                    .map(|u| self.scaled(u))
                    .min()
                    .expect("1 is a unit");
                self.entries = best;
            }
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = &self.ring;
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        let entries = [
            r.add(r.mul(a, e), r.mul(b, g)),
            r.add(r.mul(a, f), r.mul(b, h)),
            r.add(r.mul(c, e), r.mul(d, g)),
            r.add(r.mul(c, f), r.mul(d, h)),
        ];
        Self { ring: self.ring.clone(), entries, projective: self.projective }.normalized()
    }

    pub fn inverse(&self) -> Self {
        let r = &self.ring;
        let dinv = r.inv(self.det()).expect("invertible");
        let [a, b, c, d] = self.entries;
        let entries = [r.mul(d, dinv), r.mul(r.neg(b), dinv), r.mul(r.neg(c), dinv), r.mul(a, dinv)];
        Self { ring: self.ring.clone(), entries, projective: self.projective }.normalized()
    }

    pub fn is_identity(&self) -> bool {
        self.entries == [1, 0, 0, 1]
    }
}

impl PartialEq for Matrix2 {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && self.projective == other.projective
    }
}

impl Eq for Matrix2 {}

impl Hash for Matrix2 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
        self.projective.hash(state);
    }
}

impl PartialOrd for Matrix2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matrix2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.projective, self.entries).cmp(&(other.projective, other.entries))
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")?;
        if self.projective {
            f.write_str("~")?;
        }
        Ok(())
    }
}

/// A group element in one of the supported realizations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Matrix(Matrix2),
}

impl GroupElement {
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Perm(a), Self::Perm(b)) => Self::Perm(a.compose(b)),
            (Self::Matrix(a), Self::Matrix(b)) => Self::Matrix(a.mul(b)),
            _ => panic!("multiplying elements of different realizations"),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Self::Perm(a) => Self::Perm(a.inverse()),
            Self::Matrix(a) => Self::Matrix(a.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Self::Perm(a) => a.is_identity(),
            Self::Matrix(a) => a.is_identity(),
        }
    }

    /// The identity of the same realization.
    pub fn identity_like(&self) -> Self {
        match self {
            Self::Perm(a) => Self::Perm(Permutation::identity(a.degree())),
            Self::Matrix(a) => Self::Matrix(Matrix2::identity(a.ring.clone(), a.projective)),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Minimal `k ≥ 1` with `g^k = 1`.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut x = self.clone();
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// `g, g^2, …, g^{n} = 1`, listed from the identity.
    pub fn cyclic_subgroup(&self) -> Vec<GroupElement> {
        let mut out = alloc::vec![self.identity_like()];
        let mut x = self.clone();
        while !x.is_identity() {
            out.push(x.clone());
            x = x.mul(self);
        }
        out
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            Self::Perm(p) => Some(p),
            Self::Matrix(_) => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix2> {
        match self {
            Self::Matrix(m) => Some(m),
            Self::Perm(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        alloc::format!("{self:?}")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Perm(p) => fmt::Display::fmt(p, f),
            Self::Matrix(m) => fmt::Debug::fmt(m, f),
        }
    }
}

/// Element order of `g`; free-function form of [`GroupElement::order`].
pub fn element_order(g: &GroupElement) -> u64 {
    g.order()
}

/// The cyclic subgroup generated by `g`.
pub fn cyclic_subgroup(g: &GroupElement) -> Vec<GroupElement> {
    g.cyclic_subgroup()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let a = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").unwrap();
        let g = GroupElement::Perm(a.clone());
        assert_eq!(g.order(), 7);
        assert_eq!(g.cyclic_subgroup().len(), 7);
        assert!(a.compose(&a.inverse()).is_identity());
        let id = g.identity_like();
        assert_eq!(id.order(), 1);
        assert_eq!(id.cyclic_subgroup(), alloc::vec![id.clone()]);
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 5)").is_err());
        assert_eq!(alloc::format!("{}", Permutation::parse_cycles(5, "(3 4)(0 2 1)").unwrap()), "(0 2 1)(3 4)");
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // (a*b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn unipotent_over_f8_is_an_involution() {
        let ring = Arc::new(Ring::Field(GaloisField::new(8).unwrap()));
        let u = Matrix2::new(ring, [1, 1, 0, 1], true).unwrap();
        assert_eq!(GroupElement::Matrix(u).order(), 2);
    }

    #[test]
    fn projective_normalization() {
        let ring = Arc::new(Ring::Field(GaloisField::new(5).unwrap()));
        let a = Matrix2::new(ring.clone(), [2, 4, 0, 2], true).unwrap();
        assert_eq!(a.entries(), [1, 2, 0, 1]);
        let b = Matrix2::new(ring, [0, 3, 3, 0], true).unwrap();
        assert_eq!(b.entries(), [0, 1, 1, 0]);
        let z4 = Arc::new(Ring::Modular(4));
        let m = Matrix2::new(z4.clone(), [3, 2, 0, 3], true).unwrap();
        assert_eq!(m.entries(), [1, 2, 0, 1]);
        assert!(Matrix2::new(z4, [2, 0, 0, 1], false).is_err());
    }
}
