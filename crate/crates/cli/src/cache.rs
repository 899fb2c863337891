//! Content-addressed on-disk store for symbolic results.
//!
//! Each entry lives in `<sha256(key)>.json` as `{key, value, checksum}`,
//! where the checksum is the sha256 of the compact value. Anything that
//! fails to read or verify is a miss; write failures are warnings.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const DEFAULT_DIR: &str = ".superjack-cache";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    value: Value,
    checksum: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// A cache that never hits and never writes.
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", sha256_hex(key.as_bytes()))))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key)?;
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                warn(&path, &format!("unreadable ({e})"));
                return None;
            }
        };
        let entry: Entry = match serde_json::from_slice(&bytes) {
            Ok(entry) => entry,
            Err(e) => {
                warn(&path, &format!("malformed ({e})"));
                return None;
            }
        };
        if entry.key != key {
            warn(&path, "key mismatch");
            return None;
        }
        if sha256_hex(entry.value.to_string().as_bytes()) != entry.checksum {
            warn(&path, "checksum mismatch");
            return None;
        }
        match serde_json::from_value(entry.value) {
            Ok(v) => Some(v),
            Err(e) => {
                warn(&path, &format!("unexpected shape ({e})"));
                None
            }
        }
    }

    /// Writes through a temporary file in the same directory and renames
    /// it into place, so readers see either nothing or a whole entry.
    pub fn store<T: Serialize>(&self, key: &str, value: &T) {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path_for(key)) else {
            return;
        };
        if let Err(e) = write_entry(dir, &path, key, value) {
            warn(&path, &format!("not written ({e})"));
        }
    }

    /// Cached value for `key`, or `compute()` stored under it.
    pub fn get_or_compute<T, E>(&self, key: &str, compute: impl FnOnce() -> Result<T, E>) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.load(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.store(key, &v);
        Ok(v)
    }
}

fn write_entry<T: Serialize>(dir: &Path, path: &Path, key: &str, value: &T) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let value = serde_json::to_value(value)?;
    let entry = Entry {
        key: key.to_string(),
        checksum: sha256_hex(value.to_string().as_bytes()),
        value,
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &entry)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn warn(path: &Path, what: &str) {
    eprintln!("warning: cache entry {} {what}; treating as a miss", path.display());
}
