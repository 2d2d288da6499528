//! Cuspidal tables on disk, keyed by a hash of the Cartan pairing and the
//! reduced word.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};

pub fn key(pairing: &[Vec<i64>], word: &[usize]) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(&(pairing, word)).expect("plain data"));
    hex::encode(h.finalize())
}

fn path(dir: &Path, kind: &str, key: &str) -> PathBuf {
    dir.join(format!("{kind}-{key}.json"))
}

pub fn load(dir: &Path, kind: &str, key: &str) -> Option<String> {
    std::fs::read_to_string(path(dir, kind, key)).ok()
}

/// Writes through a temporary file so concurrent runs never see a partial entry.
pub fn store(dir: &Path, kind: &str, key: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let target = path(dir, kind, key);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, &target)?;
    Ok(())
}
