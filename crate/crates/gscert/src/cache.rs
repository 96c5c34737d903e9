//! On-disk memo of Dixon tables, keyed by a hash of the group spec.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use gscert_core::character::{dixon_character_table, CharacterTable, ClassFunction};
use gscert_core::group::{FiniteGroup, GroupSpec};
use gscert_core::{BigRational, Cyclotomic};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "GSCERT_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct StoredValue {
    conductor: u64,
    coefficients: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StoredTable {
    spec_hash: String,
    order: u64,
    class_labels: Vec<String>,
    names: Vec<String>,
    characters: Vec<Vec<StoredValue>>,
}

pub fn spec_hash(spec: &GroupSpec) -> String {
    let canonical = serde_json::to_string(spec).expect("group specs always serialize");
    let digest = Sha256::digest(canonical.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Default)]
pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: Some(dir.into()) }
    }

    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Self::new(d),
            _ => Self::disabled(),
        }
    }

    fn path(&self, spec: &GroupSpec) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", spec_hash(spec))))
    }

    /// The Dixon table of `group`, from the cache when a valid entry exists.
    /// Cached tables are re-validated; a stale or corrupt entry is rebuilt.
    pub fn character_table(&self, spec: &GroupSpec, group: &FiniteGroup) -> Result<CharacterTable> {
        if let Some(path) = self.path(spec) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(t) = load(&text, spec, group) {
                    return Ok(t);
                }
            }
            let table = dixon_character_table(group)?;
            fs::create_dir_all(path.parent().unwrap())
                .with_context(|| format!("creating cache directory {}", path.parent().unwrap().display()))?;
            fs::write(&path, store(&table, spec, group)).with_context(|| format!("writing {}", path.display()))?;
            return Ok(table);
        }
        Ok(dixon_character_table(group)?)
    }
}

fn store(table: &CharacterTable, spec: &GroupSpec, group: &FiniteGroup) -> String {
    let characters = table
        .characters()
        .iter()
        .map(|chi| {
            chi.values()
                .iter()
                .map(|v| StoredValue {
                    conductor: v.conductor(),
                    coefficients: v.coefficients().iter().map(|c| c.to_string()).collect(),
                })
                .collect()
        })
        .collect();
    let stored = StoredTable {
        spec_hash: spec_hash(spec),
        order: group.order() as u64,
        class_labels: group.structure().labels().into_iter().map(String::from).collect(),
        names: table.names().to_vec(),
        characters,
    };
    serde_json::to_string_pretty(&stored).expect("tables always serialize")
}

fn load(text: &str, spec: &GroupSpec, group: &FiniteGroup) -> Result<CharacterTable> {
    let stored: StoredTable = serde_json::from_str(text)?;
    if stored.spec_hash != spec_hash(spec)
        || stored.order != group.order() as u64
        || stored.class_labels != group.structure().labels()
    {
        bail!("cache entry does not match the group");
    }
    let s = group.structure().clone();
    let mut chars = Vec::with_capacity(stored.characters.len());
    for row in stored.characters {
        let mut values = Vec::with_capacity(row.len());
        for v in row {
            let coeffs = v
                .coefficients
                .iter()
                .map(|c| BigRational::from_str(c).map_err(|e| anyhow!("bad coefficient `{c}`: {e}")))
                .collect::<Result<Vec<_>>>()?;
            let Some(x) = Cyclotomic::from_coefficients(v.conductor, coeffs) else {
                bail!("bad cyclotomic value in cache");
            };
            values.push(x);
        }
        chars.push(ClassFunction::new(s.clone(), values)?);
    }
    Ok(CharacterTable::new(s, chars, Some(stored.names))?)
}
