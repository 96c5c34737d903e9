//! Whether a `G`-cover with a given ramification type exists: the class
//! algebra count of product-one tuples and a search for a generating tuple.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::character::{integer_value, CharacterTable};
use crate::group::{FiniteGroup, GroupElement};
use crate::{Cyclotomic, Error, Result};

/// Default cap on backtracking node visits.
pub const SEARCH_NODE_CAP: u64 = 10_000_000;

/// Outcome of the generating-tuple search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generation {
    Yes,
    No,
    Undetermined,
}

impl core::fmt::Display for Generation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Generation::Yes => "yes",
            Generation::No => "no",
            Generation::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    /// Number of `(γ_i) ∈ C_1 × … × C_r` with `γ_1 ⋯ γ_r = 1`, when a table
    /// was available.
    pub count: Option<BigInt>,
    pub product_one: bool,
    pub generating: Generation,
    pub witness: Option<Vec<GroupElement>>,
    pub nodes_visited: u64,
}

/// `(Π|C_i| / |G|) Σ_χ Π χ(C_i) / χ(1)^{r-2}`.
pub fn frobenius_count(table: &CharacterTable, classes: &[usize]) -> Result<BigInt> {
    let s = table.structure();
    let r = classes.len() as i64;
    let mut terms = Vec::with_capacity(table.len());
    for chi in table.characters() {
        let mut v = Cyclotomic::one();
        for &c in classes {
            v = &v * chi.value(c);
        }
        let d = integer_value(chi.degree())?;
        let scale = if r >= 2 {
            BigRational::new(1.into(), num_traits::pow(d, (r - 2) as usize))
        } else {
            BigRational::from_integer(num_traits::pow(d, (2 - r) as usize))
        };
        terms.push(v.scale(&scale));
    }
    let mut factor = BigRational::new(1.into(), BigInt::from(s.group_order));
    for &c in classes {
        factor *= BigRational::from_integer(BigInt::from(s.size(c)));
    }
    let total = Cyclotomic::sum(terms).scale(&factor);
    let n = integer_value(&total)?;
    if n < BigInt::from(0) {
        return Err(Error::NonIntegralResult(alloc::format!("negative tuple count {n}")));
    }
    Ok(n)
}

const TABLE_LIMIT: usize = 2048;

// Multiplication through a precomputed table for small groups.
struct Mul<'a> {
    group: &'a FiniteGroup,
    table: Option<Vec<u32>>,
}

impl<'a> Mul<'a> {
    fn new(group: &'a FiniteGroup) -> Self {
        let n = group.order();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = group.mul(a, b) as u32;
                }
            }
            t
        });
        Self { group, table }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.group.order() + b] as usize,
            None => self.group.mul(a, b),
        }
    }

    fn generates(&self, elems: &[usize]) -> bool {
        let n = self.group.order();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in elems {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
        }
        list.len() == n
    }
}

struct Search<'a> {
    mul: Mul<'a>,
    members: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    class_of_last: usize,
    cap: u64,
    nodes: u64,
    found_product_one: bool,
    witness: Option<Vec<usize>>,
    stopped: bool,
}

impl Search<'_> {
    // tuple[0..depth] chosen, `prod` is their product
    fn extend(&mut self, tuple: &mut Vec<usize>, prod: usize, first_choices: &[usize]) {
        if self.witness.is_some() || self.stopped {
            return;
        }
        let depth = tuple.len();
        let r = self.members.len();
        if depth == r - 1 {
            let last = self.inverse[prod];
            if self.mul.group.class_of(last) != self.class_of_last {
                return;
            }
            self.found_product_one = true;
            tuple.push(last);
            if self.mul.generates(tuple) {
                self.witness = Some(tuple.clone());
            }
            tuple.pop();
            return;
        }
        let candidates = if depth == 1 { first_choices.to_vec() } else { self.members[depth].clone() };
        for x in candidates {
            self.nodes += 1;
            if self.nodes > self.cap {
                self.stopped = true;
                return;
            }
            tuple.push(x);
            let p = self.mul.mul(prod, x);
            self.extend(tuple, p, first_choices);
            tuple.pop();
            if self.witness.is_some() || self.stopped {
                return;
            }
        }
    }
}

/// Searches for a generating tuple with product one, with `γ_1` fixed to the
/// representative of `C_1` and `γ_2` taken up to conjugation by its
/// centralizer.
pub fn search_generating_tuple(group: &FiniteGroup, classes: &[usize], cap: u64) -> Result<ExistenceReport> {
    let r = classes.len();
    if classes.iter().any(|&c| c >= group.classes().len()) {
        return Err(Error::UnknownClass(alloc::format!("{classes:?}")));
    }
    let members: Vec<Vec<usize>> = classes.iter().map(|&c| group.class_members(c)).collect();
    let inverse: Vec<usize> = (0..group.order()).map(|x| group.inv(x)).collect();
    let g1 = group.classes()[classes[0]].rep_index;
    if r == 1 {
        // a single element has product one only if it is trivial
        let ok = g1 == 0;
        return Ok(ExistenceReport {
            count: None,
            product_one: ok,
            generating: if ok && group.order() == 1 { Generation::Yes } else { Generation::No },
            witness: None,
            nodes_visited: 1,
        });
    }
    let mul = Mul::new(group);
    let centralizer: Vec<usize> = (0..group.order()).filter(|&c| mul.mul(c, g1) == mul.mul(g1, c)).collect();
    let first_choices: Vec<usize> = if r > 2 {
        members[1]
            .iter()
            .copied()
            .filter(|&x| centralizer.iter().all(|&c| mul.mul(mul.mul(inverse[c], x), c) >= x))
            .collect()
    } else {
        Vec::new()
    };
    let mut search = Search {
        mul,
        members,
        inverse,
        class_of_last: classes[r - 1],
        cap,
        nodes: 1,
        found_product_one: false,
        witness: None,
        stopped: false,
    };
    let mut tuple = vec![g1];
    search.extend(&mut tuple, g1, &first_choices);
    let generating = match (&search.witness, search.stopped) {
        (Some(_), _) => Generation::Yes,
        (None, true) => Generation::Undetermined,
        (None, false) => Generation::No,
    };
    let witness = search
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&i| group.element(i).clone()).collect());
    Ok(ExistenceReport {
        count: None,
        product_one: search.found_product_one,
        generating,
        witness,
        nodes_visited: search.nodes,
    })
}

/// Frobenius count from the table (when given) plus the generating search;
/// a zero count settles the question without searching.
pub fn existence_check(group: &FiniteGroup, table: Option<&CharacterTable>, classes: &[usize]) -> Result<ExistenceReport> {
    let count = table.map(|t| frobenius_count(t, classes)).transpose()?;
    if count.as_ref().is_some_and(|n| *n == BigInt::from(0)) {
        return Ok(ExistenceReport { count, product_one: false, generating: Generation::No, witness: None, nodes_visited: 0 });
    }
    let mut report = search_generating_tuple(group, classes, SEARCH_NODE_CAP)?;
    if let Some(n) = count {
        report.product_one = true;
        report.count = Some(n);
    }
    Ok(report)
}
