//! Canonical basis elements `{A}` of `𝔄_D` for aperiodic `A`: verified monomials, standard elements
//! `b_A`, Gram–Schmidt correction against smaller `{B}`, stabilization in `D` and positivity reports.

mod cache;
mod monomial;

pub use cache::{cache_key, fnv1a};
pub use monomial::{monomial_for, Monomial, Side, DEFAULT_MONOMIAL_BUDGET};

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::RwLock;

use num_traits::Zero;
use serde::Serialize;

use crate::coeffring::{LaurentPoly, RationalFunc, Series, Q};
use crate::error::{Error, Result};
use crate::periodic::{enumerate_interval, PeriodicMatrix, PeriodicVec};
use crate::schur::{inner_fixed, AlgebraElem, GenWord};
use crate::stab::inner_limit;
use crate::udot::{UdotElem, Weight};
use cache::DiskCache;
use monomial::is_unitriangular;

/// `{A} = Σ Π_{A₁,A}[A₁]` together with a presentation `Σ d_w · w[𝐢_𝐜]`, `𝐜 = c(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElem {
    pub n: usize,
    pub level: i64,
    pub target: PeriodicMatrix,
    pub weight: PeriodicVec,
    pub expansion: BTreeMap<PeriodicMatrix, LaurentPoly>,
    pub presentation: BTreeMap<GenWord, LaurentPoly>,
}

impl CanonicalElem {
    pub fn elem(&self) -> AlgebraElem {
        AlgebraElem::from_terms(self.n, self.level, self.expansion.iter().map(|(m, c)| (m.clone(), c.clone())))
            .expect("expansion lies in its level")
    }

    /// The presentation evaluated at this level.
    pub fn reevaluate(&self) -> Result<AlgebraElem> {
        let one = AlgebraElem::idempotent(&self.weight, self.level)?;
        self.presentation.iter().try_fold(AlgebraElem::zero(self.n, self.level), |acc, (w, c)| acc.add(&one.apply_word(w)?.scale(c)))
    }

    /// `Π_{A,A} = 1`, and `Π_{B,A} ∈ v^{-1}ℤ[v^{-1}]` only for `B ≺ A`.
    pub fn check_unitriangular(&self) -> Result<()> {
        if !self.expansion.get(&self.target).is_some_and(LaurentPoly::is_one) {
            return Err(Error::NonUnitriangular(format!("coefficient of [{}] is not 1", self.target)));
        }
        for (m, c) in &self.expansion {
            if m != &self.target && !(m.strictly_below(&self.target) && c.in_strict_negative_integral()) {
                return Err(Error::NonUnitriangular(format!("[{m}] with coefficient {c}")));
            }
        }
        Ok(())
    }

    /// All `Π` have coefficients in `ℕ`.
    pub fn has_positive_expansion(&self) -> bool {
        self.expansion.values().all(LaurentPoly::is_natural)
    }

    pub fn presentation_is_bar_invariant(&self) -> bool {
        self.presentation.values().all(LaurentPoly::is_bar_invariant)
    }

    /// The presentation read as an element of `U̇`.
    pub fn udot(&self) -> Result<UdotElem> {
        let lam = Weight::new(self.weight.values().to_vec())?;
        let mut x = UdotElem::zero();
        for (w, c) in &self.presentation {
            x.add_term(w.clone(), lam.clone(), c.clone().into());
        }
        Ok(x)
    }
}

/// `b_A`: an `E`-word for the upper factor followed by an `F`-word for the lower factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardElem {
    pub word: GenWord,
    pub weight: PeriodicVec,
    pub elem: AlgebraElem,
}

/// Memoizing front end with an optional on-disk cache.
pub struct Canonicalizer {
    budget: u64,
    disk: Option<DiskCache>,
    memo: RwLock<HashMap<PeriodicMatrix, CanonicalElem>>,
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Self { budget: DEFAULT_MONOMIAL_BUDGET, disk: None, memo: RwLock::new(HashMap::new()) }
    }
}

impl Canonicalizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(dir: &Path) -> Result<Self> {
        Ok(Self { disk: Some(DiskCache::new(dir)?), ..Self::default() })
    }

    /// Uses `$QSCHUR_CACHE` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os("QSCHUR_CACHE") {
            Some(d) if !d.is_empty() => Self::with_cache_dir(Path::new(&d)),
            _ => Ok(Self::default()),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn standard_element(&self, a: &PeriodicMatrix) -> Result<StandardElem> {
        let (upper, lower) = a.split_pm();
        let mu = monomial_for(&upper, Side::Upper, self.budget)?;
        let ml = monomial_for(&lower, Side::Lower, self.budget)?;
        debug_assert_eq!(mu.weight, lower.row_sums());
        let word = mu.word.concat(&ml.word);
        let weight = a.col_sums();
        let elem = AlgebraElem::idempotent(&weight, a.level())?.apply_word(&word)?;
        if !is_unitriangular(&elem, a) {
            return Err(Error::NonUnitriangular(format!("standard element for {a}")));
        }
        Ok(StandardElem { word, weight, elem })
    }

    pub fn canonical(&self, a: &PeriodicMatrix) -> Result<CanonicalElem> {
        if let Some(c) = self.memo.read().expect("memo lock").get(a) {
            return Ok(c.clone());
        }
        let c = match self.disk.as_ref().and_then(|d| d.load(a)) {
            Some(c) => c,
            None => {
                let c = self.compute(a)?;
                if let Some(d) = &self.disk {
                    d.store(&c)?;
                }
                c
            }
        };
        self.memo.write().expect("memo lock").insert(a.clone(), c.clone());
        Ok(c)
    }

    fn compute(&self, a: &PeriodicMatrix) -> Result<CanonicalElem> {
        if !in_ud(a) {
            return Err(Error::Invalid(format!("{a} is not aperiodic")));
        }
        let std = self.standard_element(a)?;
        let d = a.level();
        let preds: Vec<(PeriodicMatrix, AlgebraElem)> = enumerate_interval(a)
            .into_iter()
            .filter(|b| b != a && b.is_aperiodic())
            .map(|b| Ok((b.clone(), self.canonical(&b)?.elem())))
            .collect::<Result<_>>()?;
        let mut x = std.elem;
        let mut pres: BTreeMap<GenWord, LaurentPoly> = BTreeMap::from([(std.word, LaurentPoly::one())]);
        loop {
            let pairings: Vec<LaurentPoly> = preds
                .iter()
                .map(|(_, y)| {
                    pres.iter().try_fold(LaurentPoly::zero(), |acc, (w, c)| Ok(&acc + &(c * &inner_fixed(w, &std.weight, y)?)))
                })
                .collect::<Result<_>>()?;
            let Some(top) = pairings.iter().filter_map(LaurentPoly::max_deg).max() else { break };
            if top < 0 {
                break;
            }
            for ((b, _), f) in preds.iter().zip(&pairings) {
                if f.max_deg() != Some(top) {
                    continue;
                }
                let lead = f.coeff(top);
                if !lead.is_integer() {
                    return Err(Error::NonIntegerLeading(lead.to_string()));
                }
                let e = if top == 0 {
                    LaurentPoly::monomial(0, lead)
                } else {
                    LaurentPoly::from_terms([(top, lead.clone()), (-top, lead)])
                };
                let cb = self.canonical(b)?;
                x = x.sub(&cb.elem().scale(&e))?;
                for (w, c) in &cb.presentation {
                    let slot = pres.entry(w.clone()).or_default();
                    *slot -= &(c * &e);
                }
                pres.retain(|_, c| !c.is_zero());
            }
        }
        let c = CanonicalElem {
            n: a.n(),
            level: d,
            target: a.clone(),
            weight: std.weight,
            expansion: x.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
            presentation: pres,
        };
        c.check_unitriangular()?;
        Ok(c)
    }

    /// Runs at `D` and `D + n` (and further, up to `max_steps` shifts) until the presentations agree.
    pub fn stable(&self, a: &PeriodicMatrix, max_steps: usize) -> Result<StableCanonical> {
        let mut cur = a.clone();
        let mut prev = self.canonical(&cur)?;
        for _ in 0..max_steps {
            let next_m = cur.shift_p(1);
            let next = self.canonical(&next_m)?;
            if next.presentation == prev.presentation {
                return Ok(StableCanonical { base: cur, level: prev.level, presentation: prev.presentation, weight: prev.weight });
            }
            cur = next_m;
            prev = next;
        }
        Err(Error::StabilityNotReached(prev.level))
    }
}

/// A presentation `Σ d_w · w1_λ` that agrees at level `level` and `level + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCanonical {
    pub base: PeriodicMatrix,
    pub level: i64,
    pub weight: PeriodicVec,
    pub presentation: BTreeMap<GenWord, LaurentPoly>,
}

impl StableCanonical {
    pub fn udot(&self) -> Result<UdotElem> {
        let lam = Weight::new(self.weight.values().to_vec())?;
        let mut x = UdotElem::zero();
        for (w, c) in &self.presentation {
            x.add_term(w.clone(), lam.clone(), c.clone().into());
        }
        Ok(x)
    }
}

/// Membership of `[A]`'s canonical element in the image of `U̇`: aperiodicity.
pub fn in_ud(a: &PeriodicMatrix) -> bool {
    a.is_aperiodic()
}

pub fn standard_element(a: &PeriodicMatrix, d: i64) -> Result<StandardElem> {
    check_level(a, d)?;
    Canonicalizer::new().standard_element(a)
}

pub fn gs_canonical(a: &PeriodicMatrix, d: i64) -> Result<CanonicalElem> {
    check_level(a, d)?;
    Canonicalizer::from_env()?.canonical(a)
}

pub fn gs_stable(a: &PeriodicMatrix) -> Result<StableCanonical> {
    Canonicalizer::from_env()?.stable(a, 4)
}

fn check_level(a: &PeriodicMatrix, d: i64) -> Result<()> {
    if !a.in_level(d) {
        return Err(Error::LevelMismatch { expected: d, found: a.level() });
    }
    Ok(())
}

/// `⟨b₁, b₂⟩` with its `v^{-1}`-expansion and whether every coefficient lies in `ℕ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub value: String,
    pub coeffs: Vec<String>,
    pub positive: bool,
}

pub fn positivity_report(b1: &UdotElem, b2: &UdotElem, order: usize) -> Result<PositivityReport> {
    let value: RationalFunc = inner_limit(b1, b2)?;
    let s: Series = value.series_expand(order);
    let positive = s.is_natural() && s.coeffs.iter().all(|c| *c >= Q::zero());
    Ok(PositivityReport { value: value.to_string(), coeffs: s.coeffs.iter().map(ToString::to_string).collect(), positive })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, diag: &[i64], e: &[(i64, i64, i64)]) -> PeriodicMatrix {
        PeriodicMatrix::from_entries(n, diag, e)
    }

    #[test]
    fn b_prime_needs_no_correction() {
        let b = m(2, &[0, 1], &[(1, 3, 1)]);
        let c = gs_canonical(&b, 2).unwrap();
        let a_per = m(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert_eq!(c.expansion.len(), 2);
        assert_eq!(c.expansion[&a_per], LaurentPoly::v_pow(-1));
        assert_eq!(c.presentation.len(), 1);
        assert_eq!(c.presentation.keys().next().unwrap().to_string(), "E1 E2");
    }

    #[test]
    fn diagonal_is_its_idempotent() {
        let d = PeriodicMatrix::diagonal(&PeriodicVec(vec![1, 2]));
        let c = gs_canonical(&d, 3).unwrap();
        assert_eq!(c.expansion.len(), 1);
        assert_eq!(c.presentation, BTreeMap::from([(GenWord::empty(), LaurentPoly::one())]));
        let s = gs_stable(&d).unwrap();
        assert_eq!(s.presentation, c.presentation);
    }

    #[test]
    fn periodic_target_is_refused() {
        let a_per = m(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert!(!in_ud(&a_per));
        assert!(gs_canonical(&a_per, 2).is_err());
    }
}
