//! Construction recipes for the concrete groups.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::element::{GroupElement, Matrix2, Permutation, Ring};
use super::finite::{FiniteGroup, ORDER_CAP};
use super::linear::{LinearFamily, LinearModel};
use crate::{Error, Result};

/// A recipe for building a [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Symmetric {
        n: u32,
    },
    Cyclic {
        n: u32,
    },
    /// Permutations of `0..degree` given in cycle notation.
    Permutations {
        degree: u32,
        generators: Vec<String>,
    },
    Pgl2 {
        q: u64,
    },
    Psl2 {
        q: u64,
    },
    Sl2 {
        q: u64,
    },
    Gl2Mod {
        n: u32,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    /// `N ⋊ A`. `action[j][i]` is the image of the `i`-th generator of `N`
    /// under the `j`-th generator of `A`, written as a word in the
    /// generators of `N` (left to right).
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<Vec<Vec<usize>>>,
    },
    /// `base ≀ Z/2`.
    Wreath2 {
        base: Box<GroupSpec>,
    },
    /// `(left × right) / ⟨(z, z')⟩` for the unique central involutions `z`,
    /// `z'` of the two factors.
    CentralProduct {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let gens = self.generators(cap)?;
        FiniteGroup::generate(self.describe(), gens, cap)
    }

    /// A short human-readable name.
    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Symmetric { n } => alloc::format!("S{n}"),
            GroupSpec::Cyclic { n } => alloc::format!("C{n}"),
            GroupSpec::Permutations { degree, generators } => {
                alloc::format!("<{}> on {degree} points", generators.join(", "))
            }
            GroupSpec::Pgl2 { q } => alloc::format!("PGL2({q})"),
            GroupSpec::Psl2 { q } => alloc::format!("PSL2({q})"),
            GroupSpec::Sl2 { q } => alloc::format!("SL2({q})"),
            GroupSpec::Gl2Mod { n } => alloc::format!("GL2(Z/{n})"),
            GroupSpec::DirectProduct { factors } => {
                let parts: Vec<String> = factors.iter().map(|f| f.wrapped()).collect();
                parts.join(" x ")
            }
            GroupSpec::Semidirect { normal, acting, .. } => {
                alloc::format!("{} : {}", normal.wrapped(), acting.wrapped())
            }
            GroupSpec::Wreath2 { base } => alloc::format!("{} wr C2", base.wrapped()),
            GroupSpec::CentralProduct { left, right } => {
                alloc::format!("{} o {}", left.wrapped(), right.wrapped())
            }
        }
    }

    fn wrapped(&self) -> String {
        match self {
            GroupSpec::DirectProduct { .. }
            | GroupSpec::Semidirect { .. }
            | GroupSpec::Wreath2 { .. }
            | GroupSpec::CentralProduct { .. } => alloc::format!("({})", self.describe()),
            _ => self.describe(),
        }
    }

    fn generators(&self, cap: usize) -> Result<Vec<GroupElement>> {
        let perms = |v: Vec<Permutation>| v.into_iter().map(GroupElement::Perm).collect();
        Ok(match self {
            GroupSpec::Symmetric { n } => {
                let n = *n as usize;
                if n == 0 {
                    return Err(Error::InvalidSpec("symmetric group of degree 0".into()));
                }
                let cycle: Vec<u32> = (0..n as u32).collect();
                if n == 1 {
                    return Ok(perms(vec![Permutation::identity(1)]));
                }
                perms(vec![Permutation::from_cycles(n, &[vec![0, 1]])?, Permutation::from_cycles(n, &[cycle])?])
            }
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("cyclic group of order 0".into()));
                }
                let cycle: Vec<u32> = (0..*n).collect();
                perms(vec![Permutation::from_cycles(*n as usize, &[cycle])?])
            }
            GroupSpec::Permutations { degree, generators } => {
                if generators.is_empty() {
                    return Ok(vec![GroupElement::Perm(Permutation::identity(*degree as usize))]);
                }
                generators
                    .iter()
                    .map(|s| Permutation::parse_cycles(*degree as usize, s).map(GroupElement::Perm))
                    .collect::<Result<_>>()?
            }
            GroupSpec::Pgl2 { q } => LinearModel::new(LinearFamily::Pgl2, *q)?.generators(),
            GroupSpec::Psl2 { q } => LinearModel::new(LinearFamily::Psl2, *q)?.generators(),
            GroupSpec::Sl2 { q } => LinearModel::special_linear(*q)?.generators(),
            GroupSpec::Gl2Mod { n } => {
                if *n < 2 {
                    return Err(Error::InvalidSpec("GL2(Z/n) needs n >= 2".into()));
                }
                let ring = Arc::new(Ring::Modular(*n));
                let mut gens = vec![[1, 1, 0, 1], [1, 0, 1, 1]];
                gens.extend(ring.units().into_iter().filter(|&u| u != 1).map(|u| [u, 0, 0, 1]));
                gens.into_iter()
                    .map(|e| Matrix2::new(ring.clone(), e, false).map(GroupElement::Matrix))
                    .collect::<Result<_>>()?
            }
            GroupSpec::DirectProduct { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("direct product of no factors".into()));
                }
                let blocks = factors
                    .iter()
                    .map(|f| Ok(f.build_with_cap(cap)?.permutation_generators()))
                    .collect::<Result<Vec<_>>>()?;
                perms(block_sum(&blocks))
            }
            GroupSpec::Wreath2 { base } => {
                let gens = base.build_with_cap(cap)?.permutation_generators();
                let d = gens[0].degree();
                let id = Permutation::identity(d);
                let mut out: Vec<Permutation> = gens.iter().map(|g| g.disjoint_sum(&id)).collect();
                let swap: Vec<u32> = (0..2 * d as u32).map(|x| (x + d as u32) % (2 * d as u32)).collect();
                out.push(Permutation::from_images(swap)?);
                perms(out)
            }
            GroupSpec::Semidirect { normal, acting, action } => {
                let n = normal.build_with_cap(cap)?;
                let a = acting.build_with_cap(cap)?;
                perms(semidirect_generators(&n, &a, action, cap)?)
            }
            GroupSpec::CentralProduct { left, right } => {
                let l = left.build_with_cap(cap)?;
                let r = right.build_with_cap(cap)?;
                perms(central_product_generators(&l, &r, cap)?)
            }
        })
    }
}

// Each block's generators acting on its own slice of a disjoint union.
fn block_sum(blocks: &[Vec<Permutation>]) -> Vec<Permutation> {
    let degrees: Vec<usize> = blocks.iter().map(|b| b[0].degree()).collect();
    let mut out = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for g in block {
            let mut acc = Permutation::identity(0);
            for (j, &d) in degrees.iter().enumerate() {
                let piece = if i == j { g.clone() } else { Permutation::identity(d) };
                acc = acc.disjoint_sum(&piece);
            }
            out.push(acc);
        }
    }
    out
}

fn word_value(n: &FiniteGroup, gens: &[usize], word: &[usize]) -> Result<usize> {
    word.iter().try_fold(0, |acc, &w| {
        let g = *gens
            .get(w)
            .ok_or_else(|| Error::InvalidSpec(alloc::format!("word letter {w} is not a generator index")))?;
        Ok(n.mul(acc, g))
    })
}

// Extends generator images to a map on all of `group` along the Cayley graph,
// failing if two paths disagree or the result is not a bijection.
fn extend_to_automorphism(group: &FiniteGroup, gens: &[usize], images: &[usize], what: &str) -> Result<Vec<usize>> {
    let order = group.order();
    let mut map = vec![usize::MAX; order];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return Err(Error::NonFaithfulAction(alloc::format!("{what} does not define a homomorphism")));
            }
        }
    }
    let mut hit = vec![false; order];
    for &v in &map {
        if core::mem::replace(&mut hit[v], true) {
            return Err(Error::NonFaithfulAction(alloc::format!("{what} is not bijective")));
        }
    }
    Ok(map)
}

fn semidirect_generators(
    n: &FiniteGroup,
    a: &FiniteGroup,
    action: &[Vec<Vec<usize>>],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let ngens = n.generator_indices();
    let agens = a.generator_indices();
    if action.len() != agens.len() || action.iter().any(|row| row.len() != ngens.len()) {
        return Err(Error::InvalidSpec(alloc::format!(
            "action table must be {} rows of {} words",
            agens.len(),
            ngens.len()
        )));
    }
    let total = n.order() * a.order();
    if total > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    let phi_gen = action
        .iter()
        .enumerate()
        .map(|(j, row)| {
            let images = row.iter().map(|w| word_value(n, &ngens, w)).collect::<Result<Vec<_>>>()?;
            extend_to_automorphism(n, &ngens, &images, &alloc::format!("action of acting generator {j}"))
        })
        .collect::<Result<Vec<_>>>()?;
    // φ_{a h_j} = φ_a ∘ φ_{h_j}, checked for consistency over all of A
    let mut phi: Vec<Option<Vec<usize>>> = vec![None; a.order()];
    phi[0] = Some((0..n.order()).collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (j, &h) in agens.iter().enumerate() {
            let y = a.mul(x, h);
            let px = phi[x].as_ref().expect("visited");
            let composed: Vec<usize> = phi_gen[j].iter().map(|&v| px[v]).collect();
            match &phi[y] {
                None => {
                    phi[y] = Some(composed);
                    queue.push(y);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::NonFaithfulAction("action table is not a homomorphism of the acting group".into()));
                }
                Some(_) => {}
            }
        }
    }
    let na = a.order();
    let mut out = Vec::new();
    for &g in &ngens {
        let images = (0..total)
            .map(|pt| {
                let (x, y) = (pt / na, pt % na);
                (n.mul(g, x) * na + y) as u32
            })
            .collect();
        out.push(Permutation::from_images(images)?);
    }
    for (j, &h) in agens.iter().enumerate() {
        let images = (0..total)
            .map(|pt| {
                let (x, y) = (pt / na, pt % na);
                (phi_gen[j][x] * na + a.mul(h, y)) as u32
            })
            .collect();
        out.push(Permutation::from_images(images)?);
    }
    Ok(out)
}

fn unique_central_involution(g: &FiniteGroup) -> Result<usize> {
    let found: Vec<usize> = (1..g.order()).filter(|&x| g.element_order(x) == 2 && g.is_central(x)).collect();
    match found.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::InvalidSpec(alloc::format!(
            "{} has {} central involutions, need exactly one",
            g.description(),
            found.len()
        ))),
    }
}

fn central_product_generators(l: &FiniteGroup, r: &FiniteGroup, cap: usize) -> Result<Vec<Permutation>> {
    let z1 = unique_central_involution(l)?;
    let z2 = unique_central_involution(r)?;
    let (nl, nr) = (l.order(), r.order());
    if nl * nr / 2 > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    let mut coset = vec![u32::MAX; nl * nr];
    let mut count = 0u32;
    for x in 0..nl {
        for y in 0..nr {
            if coset[x * nr + y] == u32::MAX {
                coset[x * nr + y] = count;
                coset[l.mul(z1, x) * nr + r.mul(z2, y)] = count;
                count += 1;
            }
        }
    }
    let mut reps = vec![(0usize, 0usize); count as usize];
    for x in (0..nl).rev() {
        for y in (0..nr).rev() {
            reps[coset[x * nr + y] as usize] = (x, y);
        }
    }
    let mut out = Vec::new();
    for g in l.generator_indices() {
        let images = reps.iter().map(|&(x, y)| coset[l.mul(g, x) * nr + y]).collect();
        out.push(Permutation::from_images(images)?);
    }
    for g in r.generator_indices() {
        let images = reps.iter().map(|&(x, y)| coset[x * nr + r.mul(g, y)]).collect();
        out.push(Permutation::from_images(images)?);
    }
    Ok(out)
}

impl core::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.describe())
    }
}
