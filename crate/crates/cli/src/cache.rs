//! Content-addressed on-disk cache of result documents.
//!
//! Each file holds `{"key": <query key>, "document": <CLI output>}` and is
//! named by the SHA-256 of the canonical storage key. Writes go to a temporary
//! file in the same directory and are renamed into place, so readers never
//! see a torn file.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::json::{self, SCHEMA_VERSION};

pub const CACHE_ENV: &str = "AFFCHAR_CACHE";
pub const NO_CACHE_ENV: &str = "AFFCHAR_NO_CACHE";

/// Identity of a query. `degree` is the truncation degree requested;
/// windowed commands store one table per key with the degree dropped and
/// serve smaller degrees by truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryKey {
    pub command: String,
    pub rank: usize,
    pub level: Option<u64>,
    pub weights: Vec<Vec<i64>>,
    pub degree: Option<i64>,
    pub options: Vec<(String, Value)>,
}

impl QueryKey {
    pub fn new(command: &str, rank: usize) -> Self {
        QueryKey { command: command.into(), rank, level: None, weights: Vec::new(), degree: None, options: Vec::new() }
    }

    pub fn level(mut self, level: u64) -> Self {
        self.level = Some(level);
        self
    }

    pub fn weight(mut self, w: &[i64]) -> Self {
        self.weights.push(w.to_vec());
        self
    }

    pub fn degree(mut self, d: i64) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn option(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.options.push((name.into(), value.into()));
        self
    }

    fn to_value(&self, with_degree: bool) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), self.command.clone().into());
        map.insert("rank".into(), self.rank.into());
        map.insert("schema_version".into(), SCHEMA_VERSION.into());
        if let Some(level) = self.level {
            map.insert("level".into(), level.into());
        }
        map.insert("weights".into(), Value::from(self.weights.clone()));
        if let (true, Some(d)) = (with_degree, self.degree) {
            map.insert("degree".into(), d.into());
        }
        let options: Map<String, Value> = self.options.iter().cloned().collect();
        map.insert("options".into(), Value::Object(options));
        Value::Object(map)
    }

    /// Canonical serialization of the full query.
    pub fn canonical(&self) -> String {
        json::canonical(&self.to_value(true))
    }

    /// Canonical serialization of the storage address (degree dropped).
    pub fn storage_key(&self) -> Value {
        self.to_value(false)
    }

    pub fn digest(&self) -> String {
        let hash = Sha256::digest(json::canonical(&self.storage_key()).as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Cache selected by the environment; `None` when disabled.
    pub fn from_env() -> Option<Self> {
        if std::env::var(NO_CACHE_ENV).is_ok_and(|v| v == "1") {
            return None;
        }
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Some(Cache::at(dir)),
            _ => dirs::cache_dir().map(|d| Cache::at(d.join("affchar"))),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &QueryKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// Stored document for `key`, if present, readable and written by this
    /// schema version. Anything else counts as a miss.
    pub fn load(&self, key: &QueryKey) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let mut entry: Value = serde_json::from_str(&text).ok()?;
        if entry.get("key")? != &key.storage_key() {
            return None;
        }
        let document = entry.get_mut("document")?.take();
        (document.get("schema_version")? == &Value::from(SCHEMA_VERSION)).then_some(document)
    }

    pub fn store(&self, key: &QueryKey, document: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = json::object([("key", key.storage_key()), ("document", document.clone())]);
        let target = self.path(key);
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            key.digest(),
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, json::canonical(&entry))?;
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_degree_only() {
        let a = QueryKey::new("character", 1).level(2).weight(&[0]).degree(3);
        let b = QueryKey::new("character", 1).level(2).weight(&[0]).degree(5);
        let c = QueryKey::new("character", 1).level(3).weight(&[0]).degree(3);
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), c.digest());
        assert_ne!(a.canonical(), b.canonical());
    }

    #[test]
    fn round_trip_and_version_gate() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let key = QueryKey::new("kostka", 3).weight(&[0, 0, 0]).weight(&[1, 0, 1]);
        assert!(cache.load(&key).is_none());
        let doc = json::object([("schema_version", SCHEMA_VERSION.into()), ("x", 1.into())]);
        cache.store(&key, &doc).unwrap();
        assert_eq!(cache.load(&key), Some(doc));

        let stale = json::object([("schema_version", (SCHEMA_VERSION + 1).into()), ("x", 1.into())]);
        cache.store(&key, &stale).unwrap();
        assert_eq!(cache.load(&key), None);

        std::fs::write(cache.path(&key), "{not json").unwrap();
        assert_eq!(cache.load(&key), None);
        let leftovers = std::fs::read_dir(dir.path()).unwrap().filter(|e| {
            e.as_ref().unwrap().file_name().to_string_lossy().ends_with(".tmp")
        });
        assert_eq!(leftovers.count(), 0);
    }
}
