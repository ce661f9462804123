//! The modified quantum group layer: weights modulo `ℤ𝐛₀`, word-presented elements `x1_λ`, the maps
//! `φ_D` onto each level, and the standard form on `𝐟` computed through the derivations `_ir`, `r_i`.

mod finner;

pub use finner::{f_inner, f_inner_comb, ir_derivation, ri_derivation, FComb, FWord};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeffring::RationalFunc;
use crate::error::{Error, Result};
use crate::periodic::PeriodicVec;
use crate::schur::{AlgebraElem, GenSym, GenWord};

/// A class in `𝔖ⁿ/ℤ𝐛₀`, stored by its representative with minimal entry 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    rep: Vec<i64>,
    k: i64,
}

impl Weight {
    pub fn new(v: Vec<i64>) -> Result<Self> {
        if v.len() < 2 {
            return Err(Error::Invalid("period must be at least 2".into()));
        }
        let m = *v.iter().min().expect("nonempty");
        let rep: Vec<i64> = v.iter().map(|x| x - m).collect();
        let k = rep.iter().sum::<i64>().rem_euclid(rep.len() as i64);
        Ok(Self { rep, k })
    }

    pub fn n(&self) -> usize {
        self.rep.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.rep
    }

    /// `Σλ_i mod n`.
    pub fn residue(&self) -> i64 {
        self.k
    }

    /// The representative with entry sum equal to the residue; entries may be negative.
    pub fn base_rep(&self) -> PeriodicVec {
        let n = self.n() as i64;
        let t = (self.k - self.rep.iter().sum::<i64>()) / n;
        PeriodicVec(self.rep.iter().map(|x| x + t).collect())
    }

    /// Shift by a root-lattice vector.
    pub fn shifted(&self, nu: &PeriodicVec) -> Self {
        Self::new(PeriodicVec(self.rep.clone()).add(nu).0).expect("same period")
    }

    /// `𝐢·λ` for the simple root `i`.
    pub fn pairing(&self, i: usize) -> i64 {
        PeriodicVec::simple(self.n(), i).dot(&PeriodicVec(self.rep.clone()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rep.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The unique `𝐚 ∈ 𝔖_{D,n}` in the class of `λ`, if any.
pub fn weight_rep(lam: &Weight, d: i64) -> Option<PeriodicVec> {
    let n = lam.n() as i64;
    let s: i64 = lam.values().iter().sum();
    if d < 0 || (d - s).rem_euclid(n) != 0 {
        return None;
    }
    let a = PeriodicVec(lam.values().to_vec()).plus_const((d - s) / n);
    a.is_nonneg().then_some(a)
}

/// Weight change of a word: `w1_λ = 1_{λ+shift}w`.
pub fn word_shift(w: &GenWord, n: usize) -> PeriodicVec {
    w.symbols().iter().fold(PeriodicVec::zeros(n), |acc, s| match s {
        GenSym::E { i, m } => acc.add(&PeriodicVec::simple(n, *i).scaled(i64::from(*m))),
        GenSym::F { i, m } => acc.sub(&PeriodicVec::simple(n, *i).scaled(i64::from(*m))),
        GenSym::K(_) => acc,
    })
}

/// A finite combination `Σ c·w1_λ` with coefficients in `ℚ(v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UdotElem {
    terms: BTreeMap<(GenWord, Weight), RationalFunc>,
}

impl UdotElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn idempotent(lam: &Weight) -> Self {
        Self::monomial(GenWord::empty(), lam.clone())
    }

    pub fn monomial(w: GenWord, lam: Weight) -> Self {
        let mut x = Self::zero();
        x.add_term(w, lam, RationalFunc::one());
        x
    }

    pub fn add_term(&mut self, w: GenWord, lam: Weight, c: RationalFunc) {
        if c.is_zero() {
            return;
        }
        let key = (w, lam);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(GenWord, Weight), &RationalFunc)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for ((w, l), c) in &other.terms {
            x.add_term(w.clone(), l.clone(), c.clone());
        }
        x
    }

    pub fn scale(&self, c: &RationalFunc) -> Self {
        let mut x = Self::zero();
        for ((w, l), v) in &self.terms {
            x.add_term(w.clone(), l.clone(), v * c);
        }
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RationalFunc::from_int(-1)))
    }

    /// `w·x`.
    pub fn left_mul(&self, w: &GenWord) -> Self {
        let mut x = Self::zero();
        for ((u, l), c) in &self.terms {
            x.add_term(w.concat(u), l.clone(), c.clone());
        }
        x
    }
}

/// `φ_D(x)`: each `w1_λ` goes to `w·[𝐢_𝐚]` for the representative `𝐚` of `λ` at level `D`, or to 0.
pub fn phi_d(x: &UdotElem, d: i64) -> Result<AlgebraElem> {
    let mut out: Option<AlgebraElem> = None;
    let mut n0 = None;
    for ((w, lam), c) in x.terms() {
        n0 = Some(lam.n());
        let Some(a) = weight_rep(lam, d) else { continue };
        let c = c.as_laurent().ok_or_else(|| Error::NonLaurent(c.to_string()))?;
        let y = AlgebraElem::idempotent(&a, d)?.apply_word(w)?.scale(c);
        out = Some(match out {
            Some(acc) => acc.add(&y)?,
            None => y,
        });
    }
    Ok(out.unwrap_or_else(|| AlgebraElem::zero(n0.unwrap_or(2), d)))
}

/// `φ_D(x) = φ_D(y)` for every `D ≤ dmax`. Agreement up to a finite horizon only.
pub fn equal_to_horizon(x: &UdotElem, y: &UdotElem, dmax: i64) -> Result<bool> {
    for d in 0..=dmax {
        let (a, b) = (phi_d(x, d)?, phi_d(y, d)?);
        if a.terms().ne(b.terms()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{"word":[["E",1,2],["F",2,1]],"weight":[2,0]}`; `K` symbols are written `["K",[…]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub word: Vec<SymJson>,
    pub weight: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SymJson {
    Letter(String, usize, u32),
    K(String, Vec<i64>),
}

impl MonomialJson {
    pub fn from_parts(w: &GenWord, lam: &Weight) -> Self {
        let word = w
            .symbols()
            .iter()
            .map(|s| match s {
                GenSym::E { i, m } => SymJson::Letter("E".into(), *i, *m),
                GenSym::F { i, m } => SymJson::Letter("F".into(), *i, *m),
                GenSym::K(a) => SymJson::K("K".into(), a.clone()),
            })
            .collect();
        Self { word, weight: lam.values().to_vec() }
    }

    pub fn to_parts(&self) -> Result<(GenWord, Weight)> {
        let syms = self
            .word
            .iter()
            .map(|s| match s {
                SymJson::Letter(t, i, m) if t == "E" => Ok(GenSym::E { i: *i, m: *m }),
                SymJson::Letter(t, i, m) if t == "F" => Ok(GenSym::F { i: *i, m: *m }),
                SymJson::K(t, a) if t == "K" => Ok(GenSym::K(a.clone())),
                other => Err(Error::Parse(format!("bad symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let lam = Weight::new(self.weight.clone())?;
        Ok((GenWord::new(syms).reduced(lam.n())?, lam))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v = t
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{x}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }
}
