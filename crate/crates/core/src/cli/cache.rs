//! On-disk cache of finished computations.
//!
//! Each entry is one JSON file named by its key. Keys are SHA-256 digests of
//! the tool version, the input, the operation, the field and its parameters.
//! Graph inputs are keyed by their edge list as given, so relabeled copies of
//! the same graph do not share entries.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::homology::FieldSpec;
use crate::Result;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    version: String,
    value: serde_json::Value,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(subject: &str, operation: &str, field: Option<FieldSpec>, params: &str) -> String {
        let mut h = Sha256::new();
        for part in [
            TOOL_VERSION,
            subject,
            operation,
            &field.map_or("-".to_string(), |f| f.characteristic().to_string()),
            params,
        ] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Unreadable, stale or foreign entries count as misses.
    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.key != key || entry.version != TOOL_VERSION {
            return None;
        }
        serde_json::from_value(entry.value).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames it.
    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry {
            key: key.to_string(),
            version: TOOL_VERSION.to_string(),
            value: serde_json::to_value(value)?,
        };
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_nanos());
        let tmp = self.dir.join(format!(
            ".{key}.{}.{nanos}.{:?}.tmp",
            std::process::id(),
            std::thread::current().id()
        ));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        if let Err(e) = fs::rename(&tmp, self.path(key)) {
            let _ = fs::remove_file(&tmp);
            return Err(e.into());
        }
        Ok(())
    }

    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.load(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.store(key, &v)?;
        Ok(v)
    }
}
