//! Group spec files (TOML) and builtin group names.

use std::fs;
use std::path::{Path, PathBuf};

use gscert_core::group::GroupSpec;
use thiserror::Error;
use toml_edit::{ImDocument, Item, TableLike};

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("unknown group `{0}`: expected a spec file, a catalog name, or one of sym:N, cyclic:N, pgl2:Q, psl2:Q, sl2:Q, gl2mod:N")]
    UnknownGroup(String),
}

/// A spec file problem with its position and the dotted path of the field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {field}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub field: String,
    pub message: String,
}

#[derive(Clone, Copy)]
enum Shape {
    Int,
    Strings,
    Spec,
    Specs,
    Words,
}

fn schema(kind: &str) -> Option<&'static [(&'static str, Shape)]> {
    use Shape::*;
    Some(match kind {
        "symmetric" | "cyclic" | "gl2_mod" => &[("n", Int)],
        "pgl2" | "psl2" | "sl2" => &[("q", Int)],
        "permutations" => &[("degree", Int), ("generators", Strings)],
        "direct_product" => &[("factors", Specs)],
        "semidirect" => &[("normal", Spec), ("acting", Spec), ("action", Words)],
        "wreath2" => &[("base", Spec)],
        "central_product" => &[("left", Spec), ("right", Spec)],
        _ => return None,
    })
}

const KINDS: &str = "symmetric, cyclic, permutations, pgl2, psl2, sl2, gl2_mod, direct_product, semidirect, wreath2, central_product";

struct Walker<'a> {
    text: &'a str,
}

impl Walker<'_> {
    fn error(&self, span: Option<std::ops::Range<usize>>, field: &str, message: impl Into<String>) -> SpecError {
        let at = span.map_or(0, |r| r.start).min(self.text.len());
        let before = &self.text[..at];
        let line = before.matches('\n').count() + 1;
        let column = at - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        SpecError { line, column, field: if field.is_empty() { "<root>".into() } else { field.into() }, message: message.into() }
    }

    fn spec(&self, table: &dyn TableLike, span: Option<std::ops::Range<usize>>, path: &str) -> Result<(), SpecError> {
        let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
        let kind_item = table.get("kind").ok_or_else(|| self.error(span.clone(), path, "missing field `kind`"))?;
        let kind = kind_item
            .as_str()
            .ok_or_else(|| self.error(kind_item.span(), &join("kind"), "expected a string"))?;
        let fields = schema(kind)
            .ok_or_else(|| self.error(kind_item.span(), &join("kind"), format!("unknown kind `{kind}`, expected one of {KINDS}")))?;
        for (key, item) in table.iter() {
            if key != "kind" && !fields.iter().any(|(f, _)| *f == key) {
                let known: Vec<&str> = fields.iter().map(|(f, _)| *f).collect();
                let key_span = table.key(key).and_then(|k| k.span()).or_else(|| item.span());
                return Err(self.error(key_span, &join(key), format!("unknown field for kind `{kind}`, expected {}", known.join(", "))));
            }
        }
        for &(name, shape) in fields {
            let item = table
                .get(name)
                .ok_or_else(|| self.error(span.clone(), &join(name), format!("missing field for kind `{kind}`")))?;
            self.shape(item, shape, &join(name))?;
        }
        Ok(())
    }

    fn shape(&self, item: &Item, shape: Shape, path: &str) -> Result<(), SpecError> {
        match shape {
            Shape::Int => match item.as_integer() {
                Some(n) if n >= 0 => Ok(()),
                Some(_) => Err(self.error(item.span(), path, "expected a nonnegative integer")),
                None => Err(self.error(item.span(), path, "expected an integer")),
            },
            Shape::Strings => {
                let arr = item.as_array().ok_or_else(|| self.error(item.span(), path, "expected an array of strings"))?;
                for (i, v) in arr.iter().enumerate() {
                    if v.as_str().is_none() {
                        return Err(self.error(v.span(), &format!("{path}[{i}]"), "expected a string"));
                    }
                }
                Ok(())
            }
            Shape::Spec => match item.as_table_like() {
                Some(t) => self.spec(t, item.span(), path),
                None => Err(self.error(item.span(), path, "expected a table")),
            },
            Shape::Specs => {
                if let Some(aot) = item.as_array_of_tables() {
                    for (i, t) in aot.iter().enumerate() {
                        self.spec(t, t.span(), &format!("{path}[{i}]"))?;
                    }
                    return Ok(());
                }
                let arr = item.as_array().ok_or_else(|| self.error(item.span(), path, "expected an array of tables"))?;
                for (i, v) in arr.iter().enumerate() {
                    let p = format!("{path}[{i}]");
                    let t = v.as_inline_table().ok_or_else(|| self.error(v.span(), &p, "expected a table"))?;
                    self.spec(t, v.span(), &p)?;
                }
                Ok(())
            }
            Shape::Words => {
                let outer = item.as_array().ok_or_else(|| self.error(item.span(), path, "expected a nested array of integers"))?;
                for (j, images) in outer.iter().enumerate() {
                    let images = images
                        .as_array()
                        .ok_or_else(|| self.error(images.span(), &format!("{path}[{j}]"), "expected an array of words"))?;
                    for (i, word) in images.iter().enumerate() {
                        let p = format!("{path}[{j}][{i}]");
                        let word = word.as_array().ok_or_else(|| self.error(word.span(), &p, "expected an array of integers"))?;
                        if let Some(bad) = word.iter().find(|x| x.as_integer().is_none_or(|n| n < 0)) {
                            return Err(self.error(bad.span(), &p, "expected a nonnegative integer"));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses a spec from TOML text; errors name the line, column and field.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let doc = ImDocument::parse(text).map_err(|e| {
        let w = Walker { text };
        w.error(e.span(), "", e.message().trim_end().to_string())
    })?;
    let w = Walker { text };
    w.spec(doc.as_table(), Some(0..0), "")?;
    toml::from_str(text).map_err(|e: toml::de::Error| w.error(e.span(), "", e.message().to_string()))
}

pub fn to_toml(spec: &GroupSpec) -> String {
    toml::to_string(spec).expect("group specs always serialize")
}

pub fn load_spec(path: &Path) -> Result<GroupSpec, SpecFileError> {
    let text = fs::read_to_string(path).map_err(|source| SpecFileError::Io { path: path.into(), source })?;
    parse_spec(&text).map_err(|e| SpecFileError::Parse { path: path.into(), message: e.to_string() })
}

/// `sym:4`, `psl2:8` and friends.
pub fn parse_shorthand(text: &str) -> Option<GroupSpec> {
    let (kind, arg) = text.split_once(':')?;
    match kind {
        "sym" => Some(GroupSpec::Symmetric { n: arg.parse().ok()? }),
        "cyclic" => Some(GroupSpec::Cyclic { n: arg.parse().ok()? }),
        "pgl2" => Some(GroupSpec::Pgl2 { q: arg.parse().ok()? }),
        "psl2" => Some(GroupSpec::Psl2 { q: arg.parse().ok()? }),
        "sl2" => Some(GroupSpec::Sl2 { q: arg.parse().ok()? }),
        "gl2mod" => Some(GroupSpec::Gl2Mod { n: arg.parse().ok()? }),
        _ => None,
    }
}

/// A file path if one exists, else a catalog key, else a shorthand.
pub fn resolve_group(text: &str) -> Result<GroupSpec, SpecFileError> {
    let path = Path::new(text);
    if path.is_file() {
        return load_spec(path);
    }
    if let Some(entry) = crate::catalog::find(text) {
        return Ok(entry.spec);
    }
    parse_shorthand(text).ok_or_else(|| SpecFileError::UnknownGroup(text.into()))
}
