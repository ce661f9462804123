use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CanonicalElem;
use crate::error::{Error, Result};
use crate::periodic::PeriodicMatrix;
use crate::schur::GenWord;

/// 64-bit FNV-1a.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3))
}

/// File name for `(n, A)`, addressed by the canonical text of `A`.
pub fn cache_key(a: &PeriodicMatrix) -> String {
    format!("canon-{}-{:016x}.json", a.n(), fnv1a(format!("{}|{a}", a.n()).as_bytes()))
}

#[derive(Serialize, Deserialize)]
pub(crate) struct CanonFile {
    pub matrix: PeriodicMatrix,
    pub level: i64,
    pub weight: Vec<i64>,
    pub expansion: Vec<(PeriodicMatrix, String)>,
    pub presentation: Vec<(String, String)>,
}

impl CanonFile {
    pub fn from_elem(c: &CanonicalElem) -> Self {
        Self {
            matrix: c.target.clone(),
            level: c.level,
            weight: c.weight.values().to_vec(),
            expansion: c.expansion.iter().map(|(m, p)| (m.clone(), p.to_string())).collect(),
            presentation: c.presentation.iter().map(|(w, p)| (w.to_string(), p.to_string())).collect(),
        }
    }

    pub fn to_elem(&self) -> Result<CanonicalElem> {
        let expansion = self.expansion.iter().map(|(m, p)| Ok((m.clone(), p.parse()?))).collect::<Result<_>>()?;
        let presentation =
            self.presentation.iter().map(|(w, p)| Ok((w.parse::<GenWord>()?, p.parse()?))).collect::<Result<_>>()?;
        Ok(CanonicalElem {
            n: self.matrix.n(),
            level: self.level,
            target: self.matrix.clone(),
            weight: crate::periodic::PeriodicVec(self.weight.clone()),
            expansion,
            presentation,
        })
    }
}

pub(crate) struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        Ok(Self { dir: dir.to_path_buf() })
    }

    /// A stored element, or `None` when absent or failing the unitriangularity re-check.
    pub fn load(&self, a: &PeriodicMatrix) -> Option<CanonicalElem> {
        let text = fs::read_to_string(self.dir.join(cache_key(a))).ok()?;
        let file: CanonFile = serde_json::from_str(&text).ok()?;
        let c = file.to_elem().ok()?;
        (c.target == *a && c.check_unitriangular().is_ok()).then_some(c)
    }

    pub fn store(&self, c: &CanonicalElem) -> Result<()> {
        let text = serde_json::to_string_pretty(&CanonFile::from_elem(c)).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.dir.join(cache_key(&c.target));
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text).and_then(|_| fs::rename(&tmp, &path)).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
    }
}
