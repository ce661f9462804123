use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

/// A single level or an inclusive range of levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Levels {
    One(i64),
    Range([i64; 2]),
}

impl Levels {
    pub fn bounds(self) -> (i64, i64) {
        match self {
            Levels::One(d) => (d, d),
            Levels::Range([lo, hi]) => (lo, hi),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub n: usize,
    #[serde(rename = "D")]
    pub levels: Levels,
    /// Oracle window radius; `None` picks the smallest admissible one.
    pub window: Option<usize>,
    pub primes: Vec<u64>,
    pub budget: u64,
    pub order: usize,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            n: 2,
            levels: Levels::Range([1, 6]),
            window: None,
            primes: vec![2, 3],
            budget: qschur::fqoracle::DEFAULT_BUDGET,
            order: 20,
            cache_dir: None,
            seed: 0x5eed_2024,
        }
    }
}

impl Config {
    /// Reads TOML or JSON, chosen by extension (anything but `.json` is TOML).
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = crate::io::read(path)?;
        let cfg: Config = if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        } else {
            toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> CliResult<()> {
        let (lo, hi) = self.levels.bounds();
        if self.n < 2 {
            return Err(CliError::Usage(format!("n = {} (need n ≥ 2)", self.n)));
        }
        if lo < 0 || hi < lo {
            return Err(CliError::Usage(format!("bad level range {lo}..{hi}")));
        }
        if self.budget == 0 {
            return Err(CliError::Usage("budget must be positive".into()));
        }
        if let Some(q) = self.primes.iter().find(|q| ![2, 3, 4, 5, 7].contains(*q)) {
            return Err(CliError::Usage(format!("field size {q} is not one of 2, 3, 4, 5, 7")));
        }
        Ok(())
    }

    /// Applies `$QSCHUR_CACHE` when no cache directory was configured.
    pub fn with_env(mut self) -> Self {
        if self.cache_dir.is_none() {
            self.cache_dir = std::env::var_os("QSCHUR_CACHE").filter(|d| !d.is_empty()).map(PathBuf::from);
        }
        self
    }
}
