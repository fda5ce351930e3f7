//! Content-addressed result cache.
//!
//! Entries live in `$CODIMLAB_CACHE/<sha256>.tsv`. Any I/O problem turns the
//! cache into a no-op; results are always recomputed rather than lost.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "CODIMLAB_CACHE";

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache {
            dir: Some(dir.into()),
        }
    }

    pub fn from_env() -> Self {
        match std::env::var_os(ENV_VAR) {
            Some(d) if !d.is_empty() => Cache::at(d),
            _ => Cache::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Hex SHA-256 over the parts, each length-prefixed.
    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.dir.as_ref()?.join(format!("{key}.tsv"))).ok()
    }

    pub fn put(&self, key: &str, value: &str) {
        let Some(dir) = &self.dir else { return };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let tmp = dir.join(format!("{key}.{}.tmp", std::process::id()));
        if fs::write(&tmp, value).is_ok()
            && fs::rename(&tmp, dir.join(format!("{key}.tsv"))).is_err()
        {
            let _ = fs::remove_file(&tmp);
        }
    }

    pub fn get_or_compute<E>(
        &self,
        parts: &[&str],
        f: impl FnOnce() -> Result<String, E>,
    ) -> Result<String, E> {
        let key = Cache::key(parts);
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let v = f()?;
        self.put(&key, &v);
        Ok(v)
    }
}
