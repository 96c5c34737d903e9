//! The irreducible characters of `PGL_2(F_q)`, written down from the torus
//! parametrization of the classes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::nt::prime_power;
use crate::character::{CharacterTable, ClassFunction};
use crate::group::{LinearClasses, LinearFamily, TorusClass};
use crate::{Cyclotomic, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericKind {
    PrincipalSeries,
    SteinbergTwist,
    Cuspidal,
}

/// A generic irreducible representation of `PGL_2(F_q)`.
///
/// `PrincipalSeries`: exponent `a` of `η = ζ_{q-1}^{a·log_γ}` up to sign.
/// `SteinbergTwist`: exponent `b ∈ {0, (q-1)/2}` of a quadratic `η`.
/// `Cuspidal`: exponent `a` of a character of `T ≅ Z/(q+1)` up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenericRepLabel {
    pub kind: GenericKind,
    pub exponent: u64,
}

impl GenericRepLabel {
    /// Validates and normalizes to `min(k, m - k)`.
    pub fn new(q: u64, kind: GenericKind, exponent: u64) -> Result<Self> {
        prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
        let bad = || Error::InvalidInput(alloc::format!("no {kind:?} with exponent {exponent} for q = {q}"));
        let exponent = match kind {
            GenericKind::PrincipalSeries | GenericKind::Cuspidal => {
                let m = if kind == GenericKind::PrincipalSeries { q - 1 } else { q + 1 };
                let k = exponent % m;
                if (2 * k) % m == 0 {
                    return Err(bad());
                }
                k.min(m - k)
            }
            GenericKind::SteinbergTwist => {
                let k = exponent % (q - 1);
                if k == 0 || (q % 2 == 1 && 2 * k == q - 1) {
                    k
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(Self { kind, exponent })
    }

    /// Every generic label for `q`, in a fixed order.
    pub fn all(q: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for a in 1..=(q - 1) / 2 {
            if 2 * a != q - 1 {
                out.push(Self { kind: GenericKind::PrincipalSeries, exponent: a });
            }
        }
        out.push(Self { kind: GenericKind::SteinbergTwist, exponent: 0 });
        if q % 2 == 1 {
            out.push(Self { kind: GenericKind::SteinbergTwist, exponent: (q - 1) / 2 });
        }
        for a in 1..=(q + 1) / 2 {
            if 2 * a != q + 1 {
                out.push(Self { kind: GenericKind::Cuspidal, exponent: a });
            }
        }
        out
    }

    /// Parses `ps:2`, `st:0`, `cusp:3` and the long kind names.
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        let (kind, exp) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(alloc::format!("expected kind:exponent, got {text:?}")))?;
        let kind = match kind.trim() {
            "ps" | "principal_series" => GenericKind::PrincipalSeries,
            "st" | "steinberg" | "steinberg_twist" => GenericKind::SteinbergTwist,
            "cusp" | "cuspidal" => GenericKind::Cuspidal,
            other => return Err(Error::InvalidInput(alloc::format!("unknown representation kind {other:?}"))),
        };
        let exponent = exp
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(alloc::format!("bad exponent in {text:?}")))?;
        Self::new(q, kind, exponent)
    }
}

impl fmt::Display for GenericRepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenericKind::PrincipalSeries => write!(f, "PS({})", self.exponent),
            GenericKind::SteinbergTwist if self.exponent == 0 => f.write_str("St"),
            GenericKind::SteinbergTwist => f.write_str("St.eta"),
            GenericKind::Cuspidal => write!(f, "Cusp({})", self.exponent),
        }
    }
}

/// An irreducible representation of `PGL_2(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pgl2Irrep {
    /// `η∘det` for a quadratic exponent `b`.
    OneDim(u64),
    Generic(GenericRepLabel),
}

impl fmt::Display for Pgl2Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pgl2Irrep::OneDim(0) => f.write_str("1"),
            Pgl2Irrep::OneDim(_) => f.write_str("eta"),
            Pgl2Irrep::Generic(l) => fmt::Display::fmt(l, f),
        }
    }
}

/// `η_b(γ^k)` for a quadratic (or trivial) exponent `b`.
fn quadratic(b: u64, k: u64) -> i64 {
    if b != 0 && k % 2 == 1 {
        -1
    } else {
        1
    }
}

fn zeta_pair(n: u64, e: u64) -> Cyclotomic {
    let e = e as i64;
    &Cyclotomic::zeta(n, e) + &Cyclotomic::zeta(n, -e)
}

/// Value of an irreducible character of `PGL_2(F_q)` on a torus class.
pub fn pgl2_character_value(q: u64, rep: Pgl2Irrep, class: TorusClass) -> Cyclotomic {
    let int = Cyclotomic::from_integer;
    match rep {
        Pgl2Irrep::OneDim(b) => match class {
            TorusClass::Identity | TorusClass::Unipotent(_) => int(1),
            TorusClass::Split(k) | TorusClass::Nonsplit(k) => int(quadratic(b, k)),
        },
        Pgl2Irrep::Generic(GenericRepLabel { kind, exponent: a }) => match (kind, class) {
            (GenericKind::PrincipalSeries, TorusClass::Identity) => int(q as i64 + 1),
            (GenericKind::PrincipalSeries, TorusClass::Unipotent(_)) => int(1),
            (GenericKind::PrincipalSeries, TorusClass::Split(k)) => zeta_pair(q - 1, a * k),
            (GenericKind::PrincipalSeries, TorusClass::Nonsplit(_)) => int(0),
            (GenericKind::SteinbergTwist, TorusClass::Identity) => int(q as i64),
            (GenericKind::SteinbergTwist, TorusClass::Unipotent(_)) => int(0),
            (GenericKind::SteinbergTwist, TorusClass::Split(k)) => int(quadratic(a, k)),
            (GenericKind::SteinbergTwist, TorusClass::Nonsplit(j)) => int(-quadratic(a, j)),
            (GenericKind::Cuspidal, TorusClass::Identity) => int(q as i64 - 1),
            (GenericKind::Cuspidal, TorusClass::Unipotent(_)) => int(-1),
            (GenericKind::Cuspidal, TorusClass::Split(_)) => int(0),
            (GenericKind::Cuspidal, TorusClass::Nonsplit(j)) => -&zeta_pair(q + 1, a * j),
        },
    }
}

/// The full character table of `PGL_2(F_q)` with its labels.
#[derive(Debug, Clone)]
pub struct Pgl2Table {
    q: u64,
    classes: LinearClasses,
    irreps: Vec<Pgl2Irrep>,
    table: CharacterTable,
}

impl Pgl2Table {
    pub fn new(q: u64) -> Result<Self> {
        let classes = LinearClasses::new(LinearFamily::Pgl2, q)?;
        if q < 2 {
            return Err(Error::InvalidPrimePower(q));
        }
        let mut irreps = alloc::vec![Pgl2Irrep::OneDim(0)];
        if q % 2 == 1 {
            irreps.push(Pgl2Irrep::OneDim((q - 1) / 2));
        }
        irreps.extend(GenericRepLabel::all(q).into_iter().map(Pgl2Irrep::Generic));
        let s = classes.structure().clone();
        let characters = irreps
            .iter()
            .map(|&rep| {
                let values = classes.kinds().iter().map(|&k| pgl2_character_value(q, rep, k)).collect();
                ClassFunction::new(s.clone(), values)
            })
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<String> = irreps.iter().map(|r| alloc::format!("{r}")).collect();
        let table = CharacterTable::new(s, characters, Some(names))?;
        Ok(Self { q, classes, irreps, table })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn classes(&self) -> &LinearClasses {
        &self.classes
    }

    pub fn irreps(&self) -> &[Pgl2Irrep] {
        &self.irreps
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn character(&self, rep: Pgl2Irrep) -> Result<&ClassFunction> {
        let rep = match rep {
            Pgl2Irrep::Generic(l) => Pgl2Irrep::Generic(GenericRepLabel::new(self.q, l.kind, l.exponent)?),
            r => r,
        };
        let i = self
            .irreps
            .iter()
            .position(|&r| r == rep)
            .ok_or_else(|| Error::InvalidInput(alloc::format!("{rep} is not an irreducible of PGL2({})", self.q)))?;
        Ok(self.table.character(i))
    }

    pub fn generic(&self, label: GenericRepLabel) -> Result<&ClassFunction> {
        self.character(Pgl2Irrep::Generic(label))
    }
}

/// Shorthand for [`Pgl2Table::new`].
pub fn pgl2_table(q: u64) -> Result<Pgl2Table> {
    Pgl2Table::new(q)
}
