//! On-disk cache of annihilators and Bernstein polynomials.
//!
//! One JSON file per `(f, L, order)`, named by the SHA-256 of the canonical
//! rendering. Entries record their own key, so a hash collision or an entry
//! written under another order reads as a miss. Unreadable entries are
//! recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use weyl_lc::bfunction::BernsteinData;
use weyl_lc::localize::BernsteinCache;
use weyl_lc::{Operator, Rat, Ring};

use crate::parse::parse_operator;

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct Entry {
    order: String,
    n: usize,
    f: String,
    l: Vec<String>,
    ann: Vec<String>,
    b: Vec<String>,
}

pub struct DiskCache {
    dir: PathBuf,
    order_id: String,
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>, order_id: impl Into<String>) -> std::io::Result<DiskCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir, order_id: order_id.into() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn key(&self, f: &Operator, l: &[Operator]) -> (String, Vec<String>) {
        let ls: Vec<String> = l.iter().map(|p| p.to_string()).collect();
        let mut h = Sha256::new();
        h.update(self.order_id.as_bytes());
        h.update([0]);
        h.update(f.ring().n().to_le_bytes());
        h.update(f.to_string().as_bytes());
        for p in &ls {
            h.update([0]);
            h.update(p.as_bytes());
        }
        let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        (hex, ls)
    }

    fn path(&self, hex: &str) -> PathBuf {
        self.dir.join(format!("{hex}.json"))
    }

    fn decode(&self, e: &Entry) -> Option<(Vec<Operator>, BernsteinData)> {
        let rs = Ring::with_s(e.n);
        let nm = names(e.n);
        let ann = e
            .ann
            .iter()
            .map(|a| parse_operator(a, rs, &nm).ok())
            .collect::<Option<Vec<_>>>()?;
        let b = e.b.iter().map(|c| c.parse::<Rat>().ok()).collect::<Option<Vec<_>>>()?;
        if b.is_empty() || b.last() != Some(&Rat::from_integer(1.into())) {
            return None;
        }
        Some((ann, BernsteinData::new(b)))
    }
}

impl BernsteinCache for DiskCache {
    fn load(&self, f: &Operator, l: &[Operator]) -> Option<(Vec<Operator>, BernsteinData)> {
        let (hex, ls) = self.key(f, l);
        let path = self.path(&hex);
        let text = fs::read_to_string(&path).ok()?;
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                log::warn!("corrupt cache entry {}: {e}; recomputing", path.display());
                return None;
            }
        };
        if entry.order != self.order_id || entry.n != f.ring().n() || entry.f != f.to_string() || entry.l != ls {
            return None;
        }
        let out = self.decode(&entry);
        if out.is_none() {
            log::warn!("corrupt cache entry {}; recomputing", path.display());
        }
        out
    }

    fn store(&self, f: &Operator, l: &[Operator], ann: &[Operator], b: &BernsteinData) {
        let (hex, ls) = self.key(f, l);
        let entry = Entry {
            order: self.order_id.clone(),
            n: f.ring().n(),
            f: f.to_string(),
            l: ls,
            ann: ann.iter().map(|a| a.to_string()).collect(),
            b: b.b.iter().map(|c| c.to_string()).collect(),
        };
        let path = self.path(&hex);
        let tmp = path.with_extension("tmp");
        let body = serde_json::to_string_pretty(&entry).expect("entry serializes");
        if let Err(e) = fs::write(&tmp, body).and_then(|_| fs::rename(&tmp, &path)) {
            log::warn!("could not write cache entry {}: {e}", path.display());
        }
    }
}
