//! The five subcommands as functions from validated arguments to documents.

use affchar_core::char_engine::{ch_h_with, decompose_fusion, verify_decomposition_with};
use affchar_core::kostka::{invert, kostka_matrix_with, kostka_poly};
use affchar_core::oracles::freudenthal_affine;
use affchar_core::{verify, DynkinLabel, Execution};
use serde_json::Value;
use thiserror::Error;

use crate::cache::{Cache, QueryKey};
use crate::json::{self, object, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl From<affchar_core::Error> for CliError {
    fn from(e: affchar_core::Error) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A result document and whether every check it reports passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub passed: bool,
}

impl From<Value> for Outcome {
    fn from(document: Value) -> Self {
        Outcome { document, passed: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Fermionic,
    Freudenthal,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Fermionic => "fermionic",
            Method::Freudenthal => "freudenthal",
        }
    }
}

fn weight(rank: usize, entries: &[i64], what: &str) -> CliResult<DynkinLabel> {
    if rank == 0 {
        return Err(affchar_core::Error::ZeroRank.into());
    }
    if entries.len() != rank {
        return Err(CliError::Usage(format!("{what} has {} entries but the rank is {rank}", entries.len())));
    }
    Ok(DynkinLabel::dominant(entries.to_vec())?)
}

fn header<const N: usize>(command: &str, fields: [(&str, Value); N]) -> Value {
    let mut doc = object(fields);
    let map = doc.as_object_mut().expect("object");
    map.insert("command".into(), command.into());
    map.insert("schema_version".into(), SCHEMA_VERSION.into());
    doc
}

fn cached(cache: Option<&Cache>, key: &QueryKey) -> Option<Value> {
    cache.and_then(|c| c.load(key))
}

fn remember(cache: Option<&Cache>, key: &QueryKey, doc: &Value) {
    if let Some(c) = cache {
        if let Err(e) = c.store(key, doc) {
            eprintln!("warning: could not write cache entry in {}: {e}", c.dir().display());
        }
    }
}

/// Restricts a stored character document to degrees `<= max_degree`.
fn truncate_character(mut doc: Value, max_degree: i64) -> Option<Value> {
    let stored = doc.get("max_degree")?.as_i64()?;
    if stored < max_degree {
        return None;
    }
    let map = doc.as_object_mut()?;
    map.insert("max_degree".into(), max_degree.into());
    let entries = map.get_mut("entries")?.as_array_mut()?;
    entries.retain(|e| e.get("degree").and_then(Value::as_i64).is_some_and(|d| d <= max_degree));
    Some(doc)
}

pub fn character(
    rank: usize,
    level: u64,
    weight_entries: &[i64],
    max_degree: i64,
    method: Method,
    cache: Option<&Cache>,
    exec: Execution,
) -> CliResult<Outcome> {
    let l = weight(rank, weight_entries, "weight")?;
    if max_degree < 0 {
        return Err(CliError::Usage(format!("max degree {max_degree} is negative")));
    }
    let key = QueryKey::new("character", rank)
        .level(level)
        .weight(weight_entries)
        .degree(max_degree)
        .option("method", method.name());
    if let Some(doc) = cached(cache, &key).and_then(|d| truncate_character(d, max_degree)) {
        return Ok(doc.into());
    }
    let series = match method {
        Method::Fermionic => ch_h_with(&l, level, max_degree, exec)?,
        Method::Freudenthal => freudenthal_affine(&l, level, max_degree)?.to_char_series(),
    };
    let doc = header(
        "character",
        [
            ("rank", rank.into()),
            ("level", level.into()),
            ("weight", json::label(&l)),
            ("max_degree", max_degree.into()),
            ("method", method.name().into()),
            ("entries", json::entries(&series)),
        ],
    );
    remember(cache, &key, &doc);
    Ok(doc.into())
}

pub fn kostka(rank: usize, l: &[i64], n: &[i64]) -> CliResult<Outcome> {
    let l = weight(rank, l, "l")?;
    let n = weight(rank, n, "n")?;
    let p = kostka_poly(&l, &n, rank)?;
    Ok(header(
        "kostka",
        [("rank", rank.into()), ("l", json::label(&l)), ("n", json::label(&n)), ("polynomial", json::poly(&p))],
    )
    .into())
}

pub fn kostka_matrix(
    rank: usize,
    max_threshold: u64,
    class: u64,
    inverse: bool,
    cache: Option<&Cache>,
    exec: Execution,
) -> CliResult<Outcome> {
    if rank == 0 {
        return Err(affchar_core::Error::ZeroRank.into());
    }
    if class > rank as u64 {
        return Err(CliError::Usage(format!("class {class} is not a residue mod {}", rank + 1)));
    }
    let key = QueryKey::new("kostka-matrix", rank)
        .option("max_threshold", max_threshold)
        .option("class", class)
        .option("invert", inverse);
    if let Some(doc) = cached(cache, &key) {
        return Ok(doc.into());
    }
    let mut k = kostka_matrix_with(rank, max_threshold, class, exec)?;
    if inverse {
        k = invert(&k)?;
    }
    let entries = k
        .nonzero_entries()
        .map(|(row, col, p)| object([("row", row.into()), ("col", col.into()), ("polynomial", json::poly(p))]))
        .collect();
    let doc = header(
        "kostka-matrix",
        [
            ("rank", rank.into()),
            ("max_threshold", max_threshold.into()),
            ("class", class.into()),
            ("inverted", inverse.into()),
            ("basis", Value::Array(k.basis().iter().map(json::label).collect())),
            ("entries", Value::Array(entries)),
        ],
    );
    remember(cache, &key, &doc);
    Ok(doc.into())
}

/// Decomposition of a fusion-product character; with a level and degree,
/// also checks it against the Freudenthal oracle.
pub fn decompose(rank: usize, n: &[i64], check: Option<(u64, i64)>, exec: Execution) -> CliResult<Outcome> {
    let n = weight(rank, n, "n")?;
    let d = decompose_fusion(&n, rank)?;
    let terms: Vec<Value> =
        d.terms.iter().map(|(l, p)| object([("weight", json::label(l)), ("coefficient", json::poly(p))])).collect();
    let mut doc = header("decompose", [("rank", rank.into()), ("n", json::label(&n)), ("terms", Value::Array(terms))]);
    let mut passed = true;
    if let Some((level, max_degree)) = check {
        let rep = verify_decomposition_with(&n, level, max_degree, exec)?;
        passed = rep.is_equal();
        let mismatch = match &rep.mismatch {
            None => Value::Null,
            Some(m) => object([
                ("degree", m.exp.into()),
                ("weight", json::label(&m.weight)),
                ("fermionic", json::int(&m.left)),
                ("oracle", json::int(&m.right)),
            ]),
        };
        let report = object([
            ("level", level.into()),
            ("max_degree", max_degree.into()),
            ("equal", passed.into()),
            ("compared_terms", rep.compared_terms.into()),
            ("mismatch", mismatch),
        ]);
        doc.as_object_mut().expect("object").insert("verification".into(), report);
    }
    Ok(Outcome { document: doc, passed })
}

pub fn verify_suite(suite: &str, exec: Execution) -> CliResult<Outcome> {
    let checks = verify::run(suite, exec)?;
    let passed = checks.iter().all(|c| c.passed);
    let rows = checks
        .iter()
        .map(|c| {
            object([
                ("suite", c.suite.clone().into()),
                ("name", c.name.clone().into()),
                ("passed", c.passed.into()),
                ("detail", c.detail.clone().into()),
            ])
        })
        .collect();
    let doc = header("verify", [("suite", suite.into()), ("passed", passed.into()), ("checks", Value::Array(rows))]);
    Ok(Outcome { document: doc, passed })
}
