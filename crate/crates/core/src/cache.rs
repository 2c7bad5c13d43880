//! A persistent store for count records, keyed by (n, target, method).
//! Saved as a single JSON document; writes go through a temp file in the
//! same directory followed by a rename, so a crash never leaves a
//! half-written cache.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::enumeration::{CountMethod, CountRecord, CountTarget};
use crate::error::{Error, Result};

const SCHEMA: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    records: Vec<CountRecord>,
}

/// An in-memory count cache with JSON persistence.
#[derive(Default)]
pub struct CountCache {
    records: BTreeMap<(usize, CountTarget, CountMethod), CountRecord>,
}

impl CountCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses a cache document from JSON text.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CacheFile =
            serde_json::from_str(text).map_err(|e| Error::Cache(e.to_string()))?;
        if file.schema != SCHEMA {
            return Err(Error::Cache(format!(
                "unsupported schema {} (expected {SCHEMA})",
                file.schema
            )));
        }
        let mut cache = Self::new();
        for rec in file.records {
            cache.insert(rec);
        }
        Ok(cache)
    }

    /// Loads a cache file; a missing file yields an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        match std::fs::read_to_string(path) {
            Ok(text) => Self::from_json(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes the cache atomically: temp file in the target directory, then
    /// rename over the destination.
    pub fn save(&self, path: &Path) -> Result<()> {
        let file = CacheFile {
            schema: SCHEMA,
            records: self.records.values().cloned().collect(),
        };
        let text = serde_json::to_string_pretty(&file).map_err(|e| Error::Cache(e.to_string()))?;
        let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
        let mut tmp = match dir {
            Some(d) => tempfile::NamedTempFile::new_in(d)?,
            None => tempfile::NamedTempFile::new_in(".")?,
        };
        tmp.write_all(text.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn get(
        &self,
        n: usize,
        target: &CountTarget,
        method: CountMethod,
    ) -> Option<&CountRecord> {
        self.records.get(&(n, target.clone(), method))
    }

    /// Inserts a record, replacing any previous record with the same key.
    pub fn insert(&mut self, rec: CountRecord) {
        self.records
            .insert((rec.n, rec.target.clone(), rec.method), rec);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// All records for one target and method, sorted by n.
    pub fn series(&self, target: &CountTarget, method: CountMethod) -> Vec<CountRecord> {
        self.records
            .values()
            .filter(|r| &r.target == target && r.method == method)
            .cloned()
            .collect()
    }
}
