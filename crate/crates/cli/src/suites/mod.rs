//! The verification suites `A1`–`A10`. Every suite returns a [`SuiteReport`] listing how many exact
//! comparisons were made and, for each failed one, the two sides that differed.

mod canonical;
mod limits;
mod oracle;
mod relations;

use std::fmt::Display;
use std::sync::OnceLock;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qschur::canon::{CanonicalElem, Canonicalizer};
use qschur::{PeriodicMatrix, PeriodicVec};

use crate::{CliError, CliResult, Config};

pub const SUITES: [(&str, &str); 10] = [
    ("A1", "quantum relations on random basis elements"),
    ("A2", "counted structure constants against the multiplication formulas"),
    ("A3", "F-norms by adjunction against point counts"),
    ("A4", "stable inner products specialize to each level"),
    ("A5", "limit form equals the form on f"),
    ("A6", "canonical expansions are unitriangular and positive"),
    ("A7", "monomial presentations agree at D and D+n"),
    ("A8", "almost orthonormality"),
    ("A9", "positivity of the limit form on canonical pairs"),
    ("A10", "transpose anti-automorphism and the transposed form"),
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{} {verdict} {} ({} checks, {:.1}s)", self.id, self.title, self.checked, self.seconds);
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" first failure: {f}"));
        }
        s
    }
}

/// Running count of exact comparisons.
#[derive(Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn eq<T: PartialEq + Display>(&mut self, lhs: &T, rhs: &T, what: impl FnOnce() -> String) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {lhs} vs {rhs}", what()));
        }
    }

    /// A computation that should have succeeded.
    pub fn ok<T>(&mut self, r: qschur::Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.merge(t);
            acc
        })
    }
}

/// Shared state across suites: configuration, the canonical-basis memo and the `A6` family.
pub struct Context {
    pub cfg: Config,
    pub canon: Canonicalizer,
    a6: OnceLock<Vec<(PeriodicMatrix, Result<CanonicalElem, String>)>>,
}

impl Context {
    pub fn new(cfg: Config) -> CliResult<Self> {
        cfg.validate()?;
        let canon = match &cfg.cache_dir {
            Some(dir) => Canonicalizer::with_cache_dir(dir)?,
            None => Canonicalizer::new(),
        };
        Ok(Self { cfg, canon, a6: OnceLock::new() })
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Every aperiodic `A` with `n = 2`, off-diagonal mass at most 3 and `D` in the configured
    /// range, with its canonical element or the error met while computing it.
    pub fn a6_family(&self) -> &[(PeriodicMatrix, Result<CanonicalElem, String>)] {
        self.a6.get_or_init(|| {
            use rayon::prelude::*;
            let (lo, hi) = self.cfg.levels.bounds();
            let mats: Vec<PeriodicMatrix> =
                (lo.max(1)..=hi).flat_map(|d| matrices_with_mass(2, d, 3)).filter(PeriodicMatrix::is_aperiodic).collect();
            mats.into_par_iter().map(|a| {
                let c = self.canon.canonical(&a).map_err(|e| e.to_string());
                (a, c)
            }).collect()
        })
    }
}

pub fn run_suite(id: &str, ctx: &Context) -> CliResult<SuiteReport> {
    let (id, title) = SUITES
        .iter()
        .find(|(k, _)| k.eq_ignore_ascii_case(id))
        .copied()
        .ok_or_else(|| CliError::Usage(format!("unknown suite `{id}` (expected A1..A10)")))?;
    let start = Instant::now();
    let t = match id {
        "A1" => relations::a1(ctx),
        "A2" => oracle::a2(ctx),
        "A3" => oracle::a3(ctx),
        "A4" => limits::a4(ctx),
        "A5" => limits::a5(ctx),
        "A6" => canonical::a6(ctx),
        "A7" => canonical::a7(ctx),
        "A8" => canonical::a8(ctx),
        "A9" => canonical::a9(ctx),
        _ => oracle::a10(ctx),
    };
    Ok(SuiteReport {
        id: id.into(),
        title: title.into(),
        passed: t.failures.is_empty() && t.checked > 0,
        checked: t.checked,
        failures: t.failures,
        notes: t.notes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Nonnegative vectors of length `n` summing to `d`.
pub fn level_weights(n: usize, d: i64) -> Vec<PeriodicVec> {
    fn rec(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<PeriodicVec>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(PeriodicVec(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[k] = x;
            rec(k + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(0, d, &mut vec![0; n], &mut out);
    }
    out
}

/// All nonnegative `A` of level `d` with `Σ a_{i,j}|j - i| ≤ max_mass` (rows `1..=n`).
pub fn matrices_with_mass(n: usize, d: i64, max_mass: i64) -> Vec<PeriodicMatrix> {
    let positions: Vec<(i64, i64)> =
        (1..=n as i64).flat_map(|i| (1..=max_mass).flat_map(move |t| [(i, t), (i, -t)])).collect();
    let mut offs: Vec<Vec<(i64, i64, i64)>> = Vec::new();
    fn rec(pos: &[(i64, i64)], k: usize, mass: i64, count: i64, cur: &mut Vec<(i64, i64, i64)>, out: &mut Vec<Vec<(i64, i64, i64)>>, d: i64) {
        if k == pos.len() {
            out.push(cur.clone());
            return;
        }
        let (i, t) = pos[k];
        let mut x = 0;
        while x * t.abs() <= mass && count + x <= d {
            if x > 0 {
                cur.push((i, i + t, x));
            }
            rec(pos, k + 1, mass - x * t.abs(), count + x, cur, out, d);
            if x > 0 {
                cur.pop();
            }
            x += 1;
        }
    }
    rec(&positions, 0, max_mass, 0, &mut Vec::new(), &mut offs, d);
    let mut out = Vec::new();
    for e in offs {
        let used: i64 = e.iter().map(|&(_, _, x)| x).sum();
        for diag in level_weights(n, d - used) {
            out.push(PeriodicMatrix::from_entries(n, diag.values(), &e));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators() {
        assert_eq!(level_weights(3, 2).len(), 6);
        let ms = matrices_with_mass(2, 2, 1);
        assert!(ms.iter().all(|m| m.in_level(2) && m.weighted_mass() <= 1));
        // diagonals (3) + one unit at offset ±1 in a row (4 choices) with the other unit on the diagonal (2)
        assert_eq!(ms.len(), 3 + 4 * 2);
    }

    #[test]
    fn unknown_suite_is_usage() {
        let ctx = Context::new(Config::default()).unwrap();
        assert_eq!(run_suite("A11", &ctx).unwrap_err().exit_code(), 2);
    }
}
