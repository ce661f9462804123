//! The algebra `𝔄_D` on the basis `[A]`: left multiplication by `E_i(D)`, `F_i(D)`, `K_𝐚(D)` and
//! divided powers, the transpose anti-automorphism, and the fixed-level form on word-presented
//! elements.

mod inner;
mod word;

pub use inner::{inner_fixed, rho_word};
pub use word::{GenSym, GenWord};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeffring::{quantum_factorial, unbalanced_integer, LaurentPoly};
use crate::error::{Error, Result};
use crate::periodic::{residue, PeriodicMatrix, PeriodicVec};

/// Terms of `E_i(D)·[A]` (with `i` any integer row index): `(coefficient, matrix)`.
pub fn e_terms(a: &PeriodicMatrix, i: i64) -> Vec<(LaurentPoly, PeriodicMatrix)> {
    a.row_entries(i + 1)
        .into_iter()
        .filter(|&(_, x)| x >= 1)
        .map(|(s, _)| {
            let exp = a.row_partial(i, |j| j >= s) - a.row_partial(i + 1, |j| j > s);
            let c = unbalanced_integer(a.get(i, s) + 1).shift(exp);
            (c, a.with_added(i, s, 1).with_added(i + 1, s, -1))
        })
        .collect()
}

/// Terms of `F_i(D)·[A]`.
pub fn f_terms(a: &PeriodicMatrix, i: i64) -> Vec<(LaurentPoly, PeriodicMatrix)> {
    a.row_entries(i)
        .into_iter()
        .filter(|&(_, x)| x >= 1)
        .map(|(s, _)| {
            let exp = a.row_partial(i + 1, |j| j <= s) - a.row_partial(i, |j| j < s);
            let c = unbalanced_integer(a.get(i + 1, s) + 1).shift(exp);
            (c, a.with_added(i, s, -1).with_added(i + 1, s, 1))
        })
        .collect()
}

/// A finite combination `Σ c_A [A]` at level `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElem {
    n: usize,
    d: i64,
    terms: BTreeMap<PeriodicMatrix, LaurentPoly>,
}

impl AlgebraElem {
    pub fn zero(n: usize, d: i64) -> Self {
        Self { n, d, terms: BTreeMap::new() }
    }

    /// `[𝐢_𝐚]`.
    pub fn idempotent(a: &PeriodicVec, d: i64) -> Result<Self> {
        if a.n() < 2 {
            return Err(Error::Invalid("period must be at least 2".into()));
        }
        if !a.in_level(d) {
            return Err(Error::Invalid(format!("weight {:?} is not in level {d}", a.values())));
        }
        Ok(Self::basis(PeriodicMatrix::diagonal(a), d))
    }

    /// `[A]`, assuming `A ∈ 𝔖_{D,n,n}`.
    pub fn basis(a: PeriodicMatrix, d: i64) -> Self {
        let mut x = Self::zero(a.n(), d);
        x.add_term(a, LaurentPoly::one());
        x
    }

    pub fn from_terms(n: usize, d: i64, terms: impl IntoIterator<Item = (PeriodicMatrix, LaurentPoly)>) -> Result<Self> {
        let mut x = Self::zero(n, d);
        for (m, c) in terms {
            if m.n() != n || !m.in_level(d) {
                return Err(Error::Invalid(format!("{m} is not in level {d}")));
            }
            x.add_term(m, c);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> i64 {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PeriodicMatrix, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &PeriodicMatrix) -> LaurentPoly {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: PeriodicMatrix, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::LevelMismatch { expected: self.d, found: other.d });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut x = self.clone();
        for (m, c) in &other.terms {
            x.add_term(m.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut x = Self::zero(self.n, self.d);
        for (m, v) in &self.terms {
            x.add_term(m.clone(), v * c);
        }
        x
    }

    fn map_terms(&self, f: impl Fn(&PeriodicMatrix) -> Vec<(LaurentPoly, PeriodicMatrix)>) -> Self {
        let mut x = Self::zero(self.n, self.d);
        for (m, c) in &self.terms {
            for (k, b) in f(m) {
                x.add_term(b, c * &k);
            }
        }
        x
    }

    pub fn mult_e(&self, i: usize) -> Self {
        let i = residue(i as i64, self.n) as i64;
        self.map_terms(|a| e_terms(a, i))
    }

    pub fn mult_f(&self, i: usize) -> Self {
        let i = residue(i as i64, self.n) as i64;
        self.map_terms(|a| f_terms(a, i))
    }

    /// `K_𝐚(D)·x`: each `[A]` scaled by `v^{𝐚·r(A)}`.
    pub fn mult_k(&self, a: &PeriodicVec) -> Self {
        self.map_terms(|m| vec![(LaurentPoly::v_pow(a.dot(&m.row_sums())), m.clone())])
    }

    fn divide(&self, m: u32) -> Result<Self> {
        let fact = quantum_factorial(i64::from(m))?;
        let mut x = Self::zero(self.n, self.d);
        for (k, c) in &self.terms {
            x.add_term(k.clone(), c.div_exact(&fact).ok_or(Error::NonIntegralDivision)?);
        }
        Ok(x)
    }

    pub fn mult_e_div(&self, i: usize, m: u32) -> Result<Self> {
        (0..m).fold(self.clone(), |x, _| x.mult_e(i)).divide(m)
    }

    pub fn mult_f_div(&self, i: usize, m: u32) -> Result<Self> {
        (0..m).fold(self.clone(), |x, _| x.mult_f(i)).divide(m)
    }

    pub fn apply_sym(&self, s: &GenSym) -> Result<Self> {
        match s {
            GenSym::E { i, m } => self.mult_e_div(*i, *m),
            GenSym::F { i, m } => self.mult_f_div(*i, *m),
            GenSym::K(a) => {
                if a.len() != self.n {
                    return Err(Error::Invalid(format!("K vector of length {} for period {}", a.len(), self.n)));
                }
                Ok(self.mult_k(&PeriodicVec(a.clone())))
            }
        }
    }

    /// `w·x`, applying the rightmost symbol first.
    pub fn apply_word(&self, w: &GenWord) -> Result<Self> {
        w.symbols().iter().rev().try_fold(self.clone(), |x, s| x.apply_sym(s))
    }

    /// `[𝐢_𝐚]·x`: keep the terms with `r(A) = 𝐚`.
    pub fn project_rows(&self, a: &PeriodicVec) -> Self {
        Self { n: self.n, d: self.d, terms: self.terms.iter().filter(|(m, _)| m.row_sums() == *a).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// `Ψ`: `[A] ↦ [A^t]`.
    pub fn psi_transpose(&self) -> Self {
        Self { n: self.n, d: self.d, terms: self.terms.iter().map(|(m, c)| (m.transpose(), c.clone())).collect() }
    }

    /// Coefficients in the basis `e_A = v^{d_A}[A]`.
    pub fn e_basis_coeffs(&self) -> BTreeMap<PeriodicMatrix, LaurentPoly> {
        self.terms.iter().map(|(m, c)| (m.clone(), c.shift(-m.d_stat()))).collect()
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| TermJson { matrix: m.clone(), coeff: c.to_string() }).collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let terms = j.terms.iter().map(|t| Ok((t.matrix.clone(), t.coeff.parse::<LaurentPoly>()?))).collect::<Result<Vec<_>>>()?;
        Self::from_terms(j.n, j.d, terms)
    }
}

/// Wire form `{"n":…,"D":…,"terms":[{"matrix":…,"coeff":"…"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub n: usize,
    #[serde(rename = "D")]
    pub d: i64,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub matrix: PeriodicMatrix,
    pub coeff: String,
}

impl std::fmt::Display for AlgebraElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*[{m}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idem(a: &[i64]) -> AlgebraElem {
        AlgebraElem::idempotent(&PeriodicVec(a.to_vec()), a.iter().sum()).unwrap()
    }

    #[test]
    fn e_on_idempotent() {
        let x = idem(&[0, 1]).mult_e(1);
        let expected = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1)]);
        assert_eq!(x, AlgebraElem::basis(expected, 1));
        assert!(idem(&[1, 0]).mult_e(1).is_empty());
    }

    #[test]
    fn f_on_idempotent() {
        let x = idem(&[1, 1]).mult_f(1);
        let expected = PeriodicMatrix::from_entries(2, &[0, 1], &[(2, 1, 1)]);
        assert_eq!(x, AlgebraElem::basis(expected, 2));
        assert!(idem(&[0, 2]).mult_f(1).is_empty());
    }

    #[test]
    fn e_after_f() {
        // E_1 F_1 [𝐢_{(1,1)}] = [2]-type diagonal coefficient plus one off-diagonal term
        let x = idem(&[1, 1]).mult_f(1).mult_e(1);
        let diag = PeriodicMatrix::diagonal(&PeriodicVec(vec![1, 1]));
        assert_eq!(x.coeff(&diag), LaurentPoly::from_ints([(-1, 1)]));
        assert_eq!(x.len(), 2);
        let other = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 1, 1)]);
        assert_eq!(x.coeff(&other), LaurentPoly::one());
    }

    #[test]
    fn word_example() {
        let w: GenWord = "E1 E2".parse().unwrap();
        let x = idem(&[1, 1]).apply_word(&w).unwrap();
        let b = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]);
        let a = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert_eq!(x.coeff(&b), LaurentPoly::one());
        assert_eq!(x.coeff(&a), LaurentPoly::v_pow(-1));
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn k_action() {
        let x = idem(&[3, 1]);
        let i = PeriodicVec::simple(2, 1);
        assert_eq!(x.mult_k(&i), x.scale(&LaurentPoly::v_pow(2)));
        assert_eq!(x.mult_k(&PeriodicVec::zeros(2)), x);
    }

    #[test]
    fn divided_square_is_binomial() {
        let x = idem(&[0, 2, 1]);
        let y = x.mult_e_div(1, 2).unwrap();
        assert_eq!(y.len(), 1);
        let (m, c) = y.terms().next().unwrap();
        assert_eq!(m, &PeriodicMatrix::from_entries(3, &[0, 0, 1], &[(1, 2, 2)]));
        assert_eq!(c, &LaurentPoly::one());
        // two raisings into a row already holding one box: Gaussian binomial coefficient
        let z = idem(&[1, 2, 0]).mult_e_div(1, 2).unwrap();
        let target = PeriodicMatrix::from_entries(3, &[1, 0, 0], &[(1, 2, 2)]);
        assert_eq!(z.coeff(&target), LaurentPoly::one());
    }

    #[test]
    fn json_round_trip() {
        let x = idem(&[1, 1]).apply_word(&"E1 E2".parse().unwrap()).unwrap();
        let s = serde_json::to_string(&x.to_json()).unwrap();
        let back: AlgebraJson = serde_json::from_str(&s).unwrap();
        assert_eq!(AlgebraElem::from_json(&back).unwrap(), x);
    }
}
