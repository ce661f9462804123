use serde::Serialize;

use qschur::canon::{Canonicalizer, CanonicalElem};
use qschur::fqoracle::{CountReport, Oracle, Window};
use qschur::schur::{inner_fixed, AlgebraJson};
use qschur::stab::inner_limit;
use qschur::{AlgebraElem, GenWord, PeriodicMatrix, PeriodicVec, UdotElem, Weight};

use crate::{CliError, CliResult, Config};

pub fn cmd_mult(word: &GenWord, a: &PeriodicVec) -> CliResult<AlgebraJson> {
    let x = AlgebraElem::idempotent(a, a.sum())?.apply_word(word)?;
    Ok(x.to_json())
}

#[derive(Debug, Serialize)]
pub struct InnerOut {
    #[serde(rename = "D")]
    pub d: i64,
    pub value: String,
}

/// `(x[𝐢_𝐚], y[𝐢_𝐛])_D`.
pub fn cmd_inner(xw: &GenWord, a: &PeriodicVec, yw: &GenWord, b: &PeriodicVec) -> CliResult<InnerOut> {
    if a.sum() != b.sum() {
        return Err(qschur::Error::LevelMismatch { expected: a.sum(), found: b.sum() }.into());
    }
    let y = AlgebraElem::idempotent(b, b.sum())?.apply_word(yw)?;
    Ok(InnerOut { d: a.sum(), value: inner_fixed(xw, a, &y)?.to_string() })
}

#[derive(Debug, Serialize)]
pub struct LimitOut {
    pub value: String,
    /// Coefficients of `v^0, v^{-1}, …`.
    pub series: Vec<String>,
    /// Terms of positive degree, if any, as `(exponent, coefficient)`.
    pub positive_terms: Vec<(i64, String)>,
}

pub fn cmd_inner_limit(x: (&GenWord, &Weight), y: (&GenWord, &Weight), order: usize) -> CliResult<LimitOut> {
    let xe = UdotElem::monomial(x.0.clone(), x.1.clone());
    let ye = UdotElem::monomial(y.0.clone(), y.1.clone());
    let value = inner_limit(&xe, &ye)?;
    let s = value.series_expand(order);
    Ok(LimitOut {
        value: value.to_string(),
        series: s.coeffs.iter().map(ToString::to_string).collect(),
        positive_terms: s.positive.iter().map(|(k, c)| (*k, c.to_string())).collect(),
    })
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub matrix: PeriodicMatrix,
    pub text: String,
    pub coeff: String,
}

#[derive(Debug, Serialize)]
pub struct Checklist {
    pub unitriangular: bool,
    pub positive_expansion: bool,
    pub bar_invariant_presentation: bool,
    pub presentation_reevaluates: bool,
    pub aperiodic: bool,
}

impl Checklist {
    fn all(&self) -> bool {
        self.unitriangular && self.positive_expansion && self.bar_invariant_presentation && self.presentation_reevaluates && self.aperiodic
    }
}

#[derive(Debug, Serialize)]
pub struct StableOut {
    pub base: String,
    #[serde(rename = "D")]
    pub d: i64,
    pub presentation: Vec<(String, String)>,
}

#[derive(Debug, Serialize)]
pub struct CanonOut {
    pub n: usize,
    #[serde(rename = "D")]
    pub d: i64,
    pub matrix: String,
    pub weight: Vec<i64>,
    pub expansion: Vec<Term>,
    pub presentation: Vec<(String, String)>,
    pub checks: Checklist,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable: Option<StableOut>,
}

fn checklist(c: &CanonicalElem) -> Checklist {
    Checklist {
        unitriangular: c.check_unitriangular().is_ok(),
        positive_expansion: c.has_positive_expansion(),
        bar_invariant_presentation: c.presentation_is_bar_invariant(),
        presentation_reevaluates: c.reevaluate().is_ok_and(|x| x == c.elem()),
        aperiodic: c.target.is_aperiodic(),
    }
}

pub fn check_shape(a: &PeriodicMatrix, n: usize, d: i64) -> CliResult<()> {
    if a.n() != n {
        return Err(CliError::Usage(format!("matrix has n = {}, expected {n}", a.n())));
    }
    if !a.in_level(d) {
        return Err(CliError::Usage(format!("matrix has D = {}, expected {d}", a.level())));
    }
    Ok(())
}

pub fn cmd_canon(a: &PeriodicMatrix, cfg: &Config, stable: bool) -> CliResult<CanonOut> {
    let canon = match &cfg.cache_dir {
        Some(dir) => Canonicalizer::with_cache_dir(dir)?,
        None => Canonicalizer::new(),
    };
    if !a.is_aperiodic() {
        return Err(CliError::Usage(format!("{a} is not aperiodic")));
    }
    let c = canon.canonical(a)?;
    let checks = checklist(&c);
    let stable = if stable {
        let s = canon.stable(a, 4)?;
        Some(StableOut {
            base: s.base.to_string(),
            d: s.level,
            presentation: s.presentation.iter().map(|(w, k)| (w.to_string(), k.to_string())).collect(),
        })
    } else {
        None
    };
    let out = CanonOut {
        n: c.n,
        d: c.level,
        matrix: a.to_string(),
        weight: c.weight.values().to_vec(),
        expansion: c.expansion.iter().map(|(m, k)| Term { matrix: m.clone(), text: m.to_string(), coeff: k.to_string() }).collect(),
        presentation: c.presentation.iter().map(|(w, k)| (w.to_string(), k.to_string())).collect(),
        checks,
        stable,
    };
    if !out.checks.all() {
        return Err(CliError::Verification(format!("{a}: {:?}", out.checks)));
    }
    Ok(out)
}

pub fn cmd_oracle_count(a: &PeriodicMatrix, q: u64, window: Option<usize>, budget: u64) -> CliResult<CountReport> {
    let need = Window::radius_for(a.n(), a.band());
    let extra = match window {
        Some(m) if m < need => return Err(qschur::Error::WindowTooSmall { have: m, need }.into()),
        Some(m) => m - need,
        None => 0,
    };
    let o = Oracle { budget, window_extra: extra, ..Oracle::new(q) };
    Ok(o.count(a)?)
}
