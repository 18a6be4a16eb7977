//! Discrete-log table cache. One file per (p, r, defining polynomial,
//! generator), keyed by a canonical string; the directory comes from an
//! explicit path or the CYCLOLAB_CACHE environment variable. A cache hit
//! changes runtime only, never results: loaded tables are spot-validated
//! and rejected (rebuilt) on any inconsistency.

use crate::error::{Error, Result};
use crate::field::{build_dlog_table, DLogTable, FieldDescriptor, FieldElement};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "CYCLOLAB_CACHE";

/// Canonical cache key: "p^r/poly=c0,c1,.../g=g0,g1,...".
pub fn cache_key(field: &FieldDescriptor, generator: &FieldElement) -> String {
    format!(
        "{}^{}/poly={}/g={}",
        field.p,
        field.r,
        field
            .defining_poly
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(","),
        generator.display()
    )
}

fn file_name(key: &str) -> String {
    format!("dlog-{}.json", key.replace(['/', '^'], "_"))
}

/// Cache directory resolution: explicit flag wins, then the environment
/// variable; None disables caching.
pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    key: String,
    q: u64,
    generator: Vec<u64>,
    indices: Vec<u32>,
}

/// Build the dlog table, consulting and populating the cache when a
/// directory is configured.
pub fn dlog_table_cached(
    field: &FieldDescriptor,
    generator: &FieldElement,
    dir: Option<&Path>,
) -> Result<DLogTable> {
    let Some(dir) = dir else {
        return build_dlog_table(field, generator);
    };
    let key = cache_key(field, generator);
    let path = dir.join(file_name(&key));
    if let Some(table) = try_load(&path, &key, field, generator) {
        return Ok(table);
    }
    let table = build_dlog_table(field, generator)?;
    std::fs::create_dir_all(dir)?;
    let payload = CacheFile {
        key,
        q: field.q,
        generator: generator.0.clone(),
        indices: table.raw().to_vec(),
    };
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_vec(&payload)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(table)
}

fn try_load(
    path: &Path,
    key: &str,
    field: &FieldDescriptor,
    generator: &FieldElement,
) -> Option<DLogTable> {
    let bytes = std::fs::read(path).ok()?;
    let file: CacheFile = serde_json::from_slice(&bytes).ok()?;
    if file.key != key || file.q != field.q || file.indices.len() != field.q as usize {
        return None;
    }
    let table = DLogTable::from_raw(generator.clone(), field.q, file.indices);
    validate(&table, field, generator).ok()?;
    Some(table)
}

/// Cheap consistency probes on a loaded table.
fn validate(table: &DLogTable, field: &FieldDescriptor, generator: &FieldElement) -> Result<()> {
    let bad = || Error::Cache("cached dlog table failed validation".into());
    if table.index_of(field, &field.one()) != Some(0) {
        return Err(bad());
    }
    if table.index_of(field, generator) != Some(1 % (field.q as u32 - 1)) {
        return Err(bad());
    }
    if table.index_of(field, &field.minus_one()) != Some(((field.q - 1) / 2) as u32) {
        return Err(bad());
    }
    if table.index_of(field, &field.zero()).is_some() {
        return Err(bad());
    }
    // a few powers
    let mut v = field.one();
    for i in 0..20u32.min(field.q as u32 - 2) {
        if table.index_of(field, &v) != Some(i) {
            return Err(bad());
        }
        v = field.mul(&v, generator);
    }
    Ok(())
}
