//! The `gscert` command line. JSON goes to stdout, markdown to stderr.

use std::ffi::OsString;
use std::io::Write;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gscert_core::group::{FiniteGroup, GroupSpec};
use gscert_core::hurwitz::{certify, certify_signature, genus_from_signature, Generation, RamificationType, VanishingCertificate};
use gscert_core::pgl2::{trilinear_report, GenericRepLabel, TrilinearContext};
use gscert_core::psl2_scan::{scan_row, scan_values, verify_scan, ScanRow};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::TableCache;
use crate::catalog::{self, ExpectedVerdict};
use crate::render;
use crate::spec_file::resolve_group;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gscert", version, about = "Exact checks of (H^1(X)^{⊗3})^G = 0 for G-curves")]
pub struct Cli {
    /// Do not print the markdown summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify a group with a signature or explicit classes.
    Certify(CertifyArgs),
    /// Check m_G - m_S' + m_T' = 1 for PGL2(F_q).
    Trilinear {
        #[arg(long)]
        q: u64,
        /// One triple, e.g. `ps:1,st:0,cusp:2`.
        #[arg(long)]
        triple: Option<String>,
    },
    /// Scan Hurwitz curves with group PSL2(F_q).
    #[command(name = "scan-psl2")]
    ScanPsl2 {
        #[arg(long, default_value_t = 199)]
        qmax: u64,
    },
    /// Certify every catalog entry.
    Reproduce,
    /// Print the character table of a group.
    Table {
        #[arg(long)]
        group: String,
    },
    /// Try every ramification type up to a length bound.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long)]
        max_genus: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Expect {
    Vanishing,
    Nonvanishing,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// A catalog entry (see `reproduce`).
    #[arg(long, conflicts_with = "group")]
    pub builtin: Option<String>,
    /// A TOML spec file, a catalog name, or a shorthand such as `psl2:8`.
    #[arg(long)]
    pub group: Option<String>,
    /// Ramification indices, e.g. `2,3,7`.
    #[arg(long, value_delimiter = ',')]
    pub signature: Option<Vec<u64>>,
    /// Class labels, e.g. `2a,3a,7a`.
    #[arg(long, value_delimiter = ',', conflicts_with = "signature")]
    pub classes: Option<Vec<String>>,
    /// Keep class assignments that have no generating tuple.
    #[arg(long)]
    pub all: bool,
    /// Exit with status 1 unless every certificate has this outcome.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    quiet: bool,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer_pretty(&mut *self.out, value)?;
        writeln!(self.out)?;
        Ok(())
    }

    fn markdown(&mut self, text: &str) -> Result<()> {
        if !self.quiet {
            write!(self.err, "{text}")?;
        }
        Ok(())
    }
}

/// Runs the CLI and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err, quiet: cli.quiet };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32> {
    let cache = TableCache::from_env();
    match command {
        Command::Certify(args) => cmd_certify(args, &cache, io),
        Command::Trilinear { q, triple } => cmd_trilinear(q, triple.as_deref(), io),
        Command::ScanPsl2 { qmax } => cmd_scan(qmax, io),
        Command::Reproduce => {
            let report = catalog::reproduce_all(&cache);
            io.json(&report)?;
            io.markdown(&render::catalog(&report))?;
            Ok(if report.failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Table { group } => cmd_table(&group, &cache, io),
        Command::Search { group, max_length, max_genus } => cmd_search(&group, max_length, max_genus, &cache, io),
    }
}

fn build_group(name: &str) -> Result<(GroupSpec, FiniteGroup)> {
    let spec = resolve_group(name).map_err(|e| usage(format!("--group: {e}")))?;
    let group = spec.build().with_context(|| format!("building {}", spec.describe()))?;
    Ok((spec, group))
}

fn cmd_certify(args: CertifyArgs, cache: &TableCache, io: &mut Io<'_>) -> Result<i32> {
    let (spec, mut signature, mut classes, mut expect) = match (&args.builtin, &args.group) {
        (Some(key), _) => {
            let entry = catalog::find(key).ok_or_else(|| {
                let keys: Vec<&str> = catalog::catalog().iter().map(|e| e.key).collect();
                usage(format!("--builtin: unknown entry `{key}`; known entries: {}", keys.join(", ")))
            })?;
            let expect = match entry.expected {
                ExpectedVerdict::Vanishes => Expect::Vanishing,
                ExpectedVerdict::NonVanishing => Expect::Nonvanishing,
            };
            let labels = entry.class_labels.map(|l| l.into_iter().map(String::from).collect());
            (entry.spec, Some(entry.signature), labels, Some(expect))
        }
        (None, Some(g)) => (resolve_group(g).map_err(|e| usage(format!("--group: {e}")))?, None, None, None),
        (None, None) => return Err(usage("certify needs --builtin <name> or --group <spec>")),
    };
    if args.signature.is_some() || args.classes.is_some() {
        signature = args.signature;
        classes = args.classes;
    }
    expect = args.expect.or(expect);
    let group = spec.build().with_context(|| format!("building {}", spec.describe()))?;
    let table = cache.character_table(&spec, &group)?;
    let certs: Vec<VanishingCertificate> = match (classes, signature) {
        (Some(labels), _) => {
            let ram = RamificationType::from_labels(group.structure().clone(), &labels)
                .map_err(|e| usage(format!("--classes: {e}; classes are {}", group.structure().labels().join(","))))?;
            vec![certify(&group, Some(&table), &ram)?]
        }
        (None, Some(sig)) => {
            genus_from_signature(group.order() as u64, &sig).map_err(|e| usage(format!("--signature: {e}")))?;
            certify_signature(&group, Some(&table), &sig, args.all)?
        }
        (None, None) => return Err(usage("certify needs --signature or --classes")),
    };
    io.json(&certs)?;
    io.markdown(&render::certificates(&certs))?;
    let ok = match expect {
        None => true,
        Some(Expect::Vanishing) => !certs.is_empty() && certs.iter().all(|c| c.d3 == 0),
        Some(Expect::Nonvanishing) => !certs.is_empty() && certs.iter().all(|c| c.d3 > 0),
    };
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct TripleOutput {
    q: u64,
    triple: [GenericRepLabel; 3],
    m_g: u64,
    m_s: u64,
    m_t: u64,
    alternating_sum: i64,
}

fn cmd_trilinear(q: u64, triple: Option<&str>, io: &mut Io<'_>) -> Result<i32> {
    match triple {
        Some(text) => {
            let labels: Vec<GenericRepLabel> = text
                .split(',')
                .map(|t| GenericRepLabel::parse(q, t.trim()))
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| usage(format!("--triple: {e}")))?;
            let labels: [GenericRepLabel; 3] =
                labels.try_into().map_err(|_| usage("--triple: expected three comma-separated labels"))?;
            let ctx = TrilinearContext::new(q).map_err(|e| usage(format!("--q: {e}")))?;
            let r = ctx.evaluate(labels)?;
            io.json(&TripleOutput { q, triple: r.labels, m_g: r.m_g, m_s: r.m_s, m_t: r.m_t, alternating_sum: r.alternating_sum() })?;
            io.markdown(&render::triple(&r))?;
            Ok(if r.alternating_sum() == 1 { EXIT_OK } else { EXIT_MISMATCH })
        }
        None => {
            let report = trilinear_report(q).map_err(|e| usage(format!("--q: {e}")))?;
            io.json(&report)?;
            io.markdown(&render::trilinear(&report))?;
            Ok(if report.violations.is_empty() && report.case_violations.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

#[derive(Serialize)]
struct ScanOutput {
    q_max: u64,
    rows: Vec<ScanRow>,
    verified: bool,
    problem: Option<String>,
}

/// The PSL2 scan with rows computed in parallel.
pub fn parallel_scan(qmax: u64) -> Result<Vec<ScanRow>> {
    let qs = scan_values(qmax)?;
    Ok(qs.par_iter().map(|&q| scan_row(q)).collect::<std::result::Result<Vec<_>, _>>()?)
}

fn cmd_scan(qmax: u64, io: &mut Io<'_>) -> Result<i32> {
    let rows = parallel_scan(qmax).map_err(|e| usage(format!("--qmax: {e:#}")))?;
    let problem = verify_scan(&rows).err().map(|e| e.to_string());
    io.json(&ScanOutput { q_max: qmax, verified: problem.is_none(), problem: problem.clone(), rows: rows.clone() })?;
    io.markdown(&render::scan(&rows))?;
    if let Some(p) = problem {
        io.markdown(&format!("\n{p}\n"))?;
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ClassRow {
    label: String,
    order: u64,
    size: u64,
}

#[derive(Serialize)]
struct CharacterRow {
    name: String,
    degree: u64,
    values: Vec<String>,
}

#[derive(Serialize)]
struct TableOutput {
    group: String,
    order: u64,
    classes: Vec<ClassRow>,
    characters: Vec<CharacterRow>,
}

fn cmd_table(name: &str, cache: &TableCache, io: &mut Io<'_>) -> Result<i32> {
    let (spec, group) = build_group(name)?;
    let table = cache.character_table(&spec, &group)?;
    let s = table.structure();
    let out = TableOutput {
        group: spec.describe(),
        order: s.group_order,
        classes: s.classes.iter().map(|c| ClassRow { label: c.label.clone(), order: c.order, size: c.size }).collect(),
        characters: table
            .characters()
            .iter()
            .zip(table.names())
            .zip(table.degrees())
            .map(|((chi, name), degree)| CharacterRow {
                name: name.clone(),
                degree,
                values: chi.values().iter().map(ToString::to_string).collect(),
            })
            .collect(),
    };
    io.json(&out)?;
    io.markdown(&render::table(&table))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SearchOutput {
    group: String,
    max_length: usize,
    types_checked: usize,
    realizable: usize,
    hits: Vec<VanishingCertificate>,
    undetermined: Vec<VanishingCertificate>,
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 1, &mut Vec::new(), &mut out);
    out
}

fn cmd_search(name: &str, max_length: usize, max_genus: Option<u64>, cache: &TableCache, io: &mut Io<'_>) -> Result<i32> {
    if !(3..=6).contains(&max_length) {
        return Err(usage("--max-length must be between 3 and 6"));
    }
    let (spec, group) = build_group(name)?;
    let table = cache.character_table(&spec, &group)?;
    let s = group.structure();
    let candidates: Vec<Vec<usize>> = (3..=max_length)
        .flat_map(|r| multisets(s.len(), r))
        .filter(|classes| {
            let sig: Vec<u64> = classes.iter().map(|&c| s.order(c)).collect();
            matches!(genus_from_signature(s.group_order, &sig), Ok(g) if max_genus.is_none_or(|m| g <= m))
        })
        .collect();
    let certs: Vec<VanishingCertificate> = candidates
        .par_iter()
        .map(|classes| {
            let ram = RamificationType::new(s.clone(), classes.clone())?;
            Ok(certify(&group, Some(&table), &ram)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let realizable = certs.iter().filter(|c| c.generating == Generation::Yes).count();
    let (hits, undetermined): (Vec<_>, Vec<_>) = certs
        .into_iter()
        .filter(|c| c.d3 == 0 && c.generating != Generation::No)
        .partition(|c| c.generating == Generation::Yes);
    let out = SearchOutput { group: spec.describe(), max_length, types_checked: candidates.len(), realizable, hits, undetermined };
    io.json(&out)?;
    io.markdown(&format!(
        "{} ramification types with integral genus, {} realizable, {} with the criterion satisfied\n\n",
        out.types_checked,
        out.realizable,
        out.hits.len()
    ))?;
    io.markdown(&render::certificates(&out.hits))?;
    Ok(EXIT_OK)
}
