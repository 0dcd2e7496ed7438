//! On-disk cache of (q,t)-Kostka tables.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::Context;
use qtsieve::combinatorics::{partitions_of, Partition};
use qtsieve::macdonald::{memoized_tables, preload, QtKostkaTable, ORIENTATION};
use qtsieve::polyring::MultiPoly;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    orientation: String,
    entries: BTreeMap<String, BTreeMap<String, MultiPoly>>,
}

fn orientation_tag() -> String {
    format!("{ORIENTATION:?}")
}

/// Loads whatever is usable; a missing, unreadable or stale file is ignored.
pub fn load(path: &Path) {
    let Ok(text) = fs::read_to_string(path) else {
        return;
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("warning: ignoring unreadable cache {}: {e}", path.display());
            return;
        }
    };
    if file.format_version != FORMAT_VERSION || file.orientation != orientation_tag() {
        return;
    }
    for (key, entries) in file.entries {
        if let Some(table) = decode(&key, entries) {
            preload(table);
        }
    }
}

fn decode(key: &str, mut entries: BTreeMap<String, MultiPoly>) -> Option<QtKostkaTable> {
    let mu: Partition = key.parse().ok()?;
    let rows = partitions_of(mu.size())
        .into_iter()
        .map(|l| {
            let p = entries.remove(&l.to_string())?;
            Some((l, p))
        })
        .collect::<Option<Vec<_>>>()?;
    if !entries.is_empty() {
        return None;
    }
    QtKostkaTable::from_entries(mu, rows).ok()
}

pub fn save(path: &Path) -> anyhow::Result<()> {
    let entries = memoized_tables()
        .iter()
        .map(|t| {
            let rows = t
                .entries()
                .iter()
                .map(|(l, p)| (l.to_string(), p.clone()))
                .collect();
            (t.mu().to_string(), rows)
        })
        .collect();
    let file = CacheFile {
        format_version: FORMAT_VERSION,
        orientation: orientation_tag(),
        entries,
    };
    let text = serde_json::to_string(&file)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}
