//! Circuit polynomials keyed by the canonical form of their circuit, kept in
//! memory and optionally mirrored to a directory of binary files.

use std::collections::HashMap;
use std::fs;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use crate::graph::{canonical_form, LabeledGraph};
use crate::poly::io::{read_binary, write_binary};
use crate::poly::MultiPoly;

/// Environment variable that overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "CRTOOL_CACHE_DIR";

#[derive(Debug, Default)]
pub struct PolyCache {
    dir: Option<PathBuf>,
    mem: RwLock<HashMap<Vec<u8>, Arc<MultiPoly>>>,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl PolyCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(PolyCache { dir: Some(dir), mem: RwLock::default() })
    }

    /// The directory from the environment if set, else `fallback`, else memory only.
    pub fn from_env_or(fallback: Option<&Path>) -> std::io::Result<Self> {
        match std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from).or_else(|| fallback.map(Path::to_path_buf)) {
            Some(d) => Self::with_dir(d),
            None => Ok(Self::in_memory()),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn len(&self) -> usize {
        self.mem.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every polynomial held in memory, in canonical labels, with its key.
    pub fn entries(&self) -> Vec<(Vec<u8>, Arc<MultiPoly>)> {
        self.mem.read().expect("cache lock").iter().map(|(k, p)| (k.clone(), p.clone())).collect()
    }

    fn file(&self, key: &[u8]) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.crpoly", hex(key))))
    }

    /// The polynomial of `g` in the labels of `g`, if known.
    pub fn get(&self, g: &LabeledGraph) -> Option<MultiPoly> {
        let cf = canonical_form(g);
        let hit = self.mem.read().expect("cache lock").get(&cf.bytes).cloned();
        let p = match hit {
            Some(p) => p,
            None => {
                let path = self.file(&cf.bytes)?;
                let f = fs::File::open(path).ok()?;
                let p = Arc::new(read_binary(BufReader::new(f)).ok()?);
                self.mem.write().expect("cache lock").insert(cf.bytes.clone(), p.clone());
                p
            }
        };
        Some(p.relabel(&cf.inverse()))
    }

    /// Stores the polynomial `p` of `g`, given in the labels of `g`.
    pub fn insert(&self, g: &LabeledGraph, p: &MultiPoly) -> std::io::Result<()> {
        let cf = canonical_form(g);
        let canon = Arc::new(p.relabel(&cf.relabel));
        if let Some(path) = self.file(&cf.bytes) {
            if !path.exists() {
                let tmp = path.with_extension(format!("tmp{}", std::process::id()));
                {
                    let mut w = BufWriter::new(fs::File::create(&tmp)?);
                    write_binary(&canon, &mut w)?;
                    std::io::Write::flush(&mut w)?;
                }
                fs::rename(&tmp, &path)?;
            }
        }
        self.mem.write().expect("cache lock").insert(cf.bytes, canon);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::cm::k4_circuit_polynomial;
    use crate::graph::vid;

    #[test]
    fn relabels_on_lookup() {
        let cache = PolyCache::in_memory();
        let g = LabeledGraph::complete(&[1, 2, 3, 4]);
        cache.insert(&g, &k4_circuit_polynomial([vid(1), vid(2), vid(3), vid(4)]).unwrap()).unwrap();
        let h = LabeledGraph::complete(&[5, 6, 8, 9]);
        let p = cache.get(&h).unwrap();
        let direct = k4_circuit_polynomial([vid(5), vid(6), vid(8), vid(9)]).unwrap();
        assert!(p == direct || p == direct.neg());
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn survives_on_disk() {
        let dir = std::env::temp_dir().join(format!("crpoly-cache-test-{}", std::process::id()));
        let g = LabeledGraph::complete(&[1, 2, 3, 4]);
        let p = k4_circuit_polynomial([vid(1), vid(2), vid(3), vid(4)]).unwrap();
        PolyCache::with_dir(&dir).unwrap().insert(&g, &p).unwrap();
        let fresh = PolyCache::with_dir(&dir).unwrap();
        assert_eq!(fresh.get(&g).unwrap().term_count(), 22);
        fs::remove_dir_all(dir).unwrap();
    }
}
