//! The stabilized algebra: families `{[_pB] : p ≥ p₀}` with coefficients in `ℚ(v)[u]`, `u = v^{-p}`,
//! the stable form `⟨x,y⟩` as a polynomial in `u`, and its `p → ∞` limit.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::coeffring::{quantum_factorial, unbalanced_integer, LaurentPoly, RationalFunc, UPoly};
use crate::error::{Error, Result};
use crate::periodic::{residue, PeriodicMatrix, PeriodicVec};
use crate::schur::{rho_word, AlgebraElem, GenSym, GenWord};
use crate::udot::{UdotElem, Weight};

/// `(1 - u²v^{-2(b+1)})/(1 - v^{-2})`: the binomial factor on a diagonal entry `b + p`.
fn diag_factor(b: i64) -> UPoly {
    let den = LaurentPoly::from_ints([(0, 1), (-2, -1)]);
    let inv = RationalFunc::new(LaurentPoly::one(), den).expect("nonzero denominator");
    let mut g = UPoly::constant(inv.clone());
    g.add_term(2, -(&inv.scale_laurent(&LaurentPoly::v_pow(-2 * (b + 1)))));
    g
}

fn stable_e_terms(b: &PeriodicMatrix, i: i64) -> Vec<(UPoly, PeriodicMatrix)> {
    let mut cols: Vec<i64> = b.row_entries(i + 1).into_iter().filter(|&(s, x)| s != i + 1 && x >= 1).map(|(s, _)| s).collect();
    cols.push(i + 1);
    cols.into_iter()
        .map(|s| {
            // the diagonal contributions to both partial sums appear together and cancel
            let exp = b.row_partial(i, |j| j >= s) - b.row_partial(i + 1, |j| j > s);
            let c = if s == i {
                diag_factor(b.get(i, i))
            } else {
                UPoly::constant(unbalanced_integer(b.get(i, s) + 1).into())
            };
            (c.scale_laurent(&LaurentPoly::v_pow(exp)), b.with_added(i, s, 1).with_added(i + 1, s, -1))
        })
        .collect()
}

fn stable_f_terms(b: &PeriodicMatrix, i: i64) -> Vec<(UPoly, PeriodicMatrix)> {
    let mut cols: Vec<i64> = b.row_entries(i).into_iter().filter(|&(s, x)| s != i && x >= 1).map(|(s, _)| s).collect();
    cols.push(i);
    cols.into_iter()
        .map(|s| {
            let exp = b.row_partial(i + 1, |j| j <= s) - b.row_partial(i, |j| j < s);
            let c = if s == i + 1 {
                diag_factor(b.get(i + 1, i + 1))
            } else {
                UPoly::constant(unbalanced_integer(b.get(i + 1, s) + 1).into())
            };
            (c.scale_laurent(&LaurentPoly::v_pow(exp)), b.with_added(i, s, -1).with_added(i + 1, s, 1))
        })
        .collect()
}

/// Smallest `p` with every diagonal entry of `_pB` at least 1.
fn threshold(b: &PeriodicMatrix) -> i64 {
    (1 - b.min_diag()).max(0)
}

/// `Σ G_B(v, u)·[_pB]`, meaningful for `p ≥ p₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableElem {
    n: usize,
    /// Common level of the base matrices; the family lives at `D = base_level + pn`.
    base_level: i64,
    terms: BTreeMap<PeriodicMatrix, UPoly>,
    p0: i64,
}

impl StableElem {
    pub fn zero(n: usize, base_level: i64) -> Self {
        Self { n, base_level, terms: BTreeMap::new(), p0: 0 }
    }

    /// The family `[𝐢_{b+p}]`.
    pub fn idempotent(b: &PeriodicVec) -> Result<Self> {
        if b.n() < 2 {
            return Err(Error::Invalid("period must be at least 2".into()));
        }
        let m = PeriodicMatrix::diagonal(b);
        let mut x = Self::zero(b.n(), b.sum());
        x.p0 = threshold(&m);
        x.terms.insert(m, UPoly::one());
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base_level(&self) -> i64 {
        self.base_level
    }

    pub fn p0(&self) -> i64 {
        self.p0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PeriodicMatrix, &UPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &PeriodicMatrix) -> UPoly {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, b: PeriodicMatrix, c: UPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn map_terms(&self, f: impl Fn(&PeriodicMatrix) -> Vec<(UPoly, PeriodicMatrix)>) -> Self {
        let mut x = Self::zero(self.n, self.base_level);
        for (m, c) in &self.terms {
            for (k, b) in f(m) {
                x.add_term(b, c * &k);
            }
        }
        x.p0 = x.terms.keys().map(threshold).fold(self.p0, i64::max);
        x
    }

    pub fn smult_e(&self, i: usize) -> Self {
        let i = residue(i as i64, self.n) as i64;
        self.map_terms(|b| stable_e_terms(b, i))
    }

    pub fn smult_f(&self, i: usize) -> Self {
        let i = residue(i as i64, self.n) as i64;
        self.map_terms(|b| stable_f_terms(b, i))
    }

    /// `K_𝐚` scales `[_pB]` by `v^{𝐚·r(B)}u^{-Σa}`; `Σa > 0` would need a negative power of `u`.
    pub fn smult_k(&self, a: &PeriodicVec) -> Result<Self> {
        if a.n() != self.n {
            return Err(Error::Invalid(format!("K vector of length {} for period {}", a.n(), self.n)));
        }
        let s = a.sum();
        if s > 0 {
            return Err(Error::Invalid(format!("K_{:?} grows like v^(p·{s}) and has no stable form", a.values())));
        }
        Ok(self.map_terms(|m| vec![(UPoly::term((-s) as u32, RationalFunc::v_pow(a.dot(&m.row_sums()))), m.clone())]))
    }

    fn divide(&self, m: u32) -> Result<Self> {
        let inv = RationalFunc::from(quantum_factorial(i64::from(m))?).inv()?;
        let mut x = self.clone();
        for c in x.terms.values_mut() {
            *c = c.scale(&inv);
        }
        Ok(x)
    }

    pub fn smult_e_div(&self, i: usize, m: u32) -> Result<Self> {
        (0..m).fold(self.clone(), |x, _| x.smult_e(i)).divide(m)
    }

    pub fn smult_f_div(&self, i: usize, m: u32) -> Result<Self> {
        (0..m).fold(self.clone(), |x, _| x.smult_f(i)).divide(m)
    }

    pub fn apply_sym(&self, s: &GenSym) -> Result<Self> {
        match s {
            GenSym::E { i, m } => self.smult_e_div(*i, *m),
            GenSym::F { i, m } => self.smult_f_div(*i, *m),
            GenSym::K(a) => self.smult_k(&PeriodicVec(a.clone())),
        }
    }

    pub fn apply_word(&self, w: &GenWord) -> Result<Self> {
        w.symbols().iter().rev().try_fold(self.clone(), |x, s| x.apply_sym(s))
    }

    /// The member of the family at `p`, which must be at least `p₀`.
    pub fn specialize(&self, p: i64) -> Result<AlgebraElem> {
        if p < self.p0 {
            return Err(Error::OutOfRange(format!("p={p} is below the threshold {}", self.p0)));
        }
        let d = self.base_level + p * self.n as i64;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (b, g) in &self.terms {
            let c = g.u_specialize(p);
            let c = c.as_laurent().cloned().ok_or_else(|| Error::NonLaurent(c.to_string()))?;
            terms.push((b.shift_p(p), c));
        }
        AlgebraElem::from_terms(self.n, d, terms)
    }
}

/// A stable form value together with the threshold from which it is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableInner {
    pub value: UPoly,
    pub p0: i64,
    /// Residue `k` with `D = k + pn`.
    pub k: i64,
}

/// `⟨x1_λ, y1_μ⟩` as `G(v,u)` with `G(v,v^{-p}) = ⟨x1_λ,y1_μ⟩_{k+pn}` for `p ≥ p₀`.
pub fn stable_inner(xw: &GenWord, lx: &Weight, yw: &GenWord, ly: &Weight) -> Result<StableInner> {
    let n = lx.n();
    if ly.n() != n {
        return Err(Error::Invalid(format!("period {} against {}", n, ly.n())));
    }
    if lx.residue() != ly.residue() {
        return Ok(StableInner { value: UPoly::zero(), p0: 0, k: lx.residue() });
    }
    let bx = lx.base_rep();
    let y = StableElem::idempotent(&ly.base_rep())?.apply_word(&yw.reduced(n)?)?;
    let (exp, rw) = rho_word(&xw.reduced(n)?, n);
    let z = y.apply_word(&rw)?;
    let diag = PeriodicMatrix::diagonal(&bx);
    let value = z.coeff(&diag).scale_laurent(&LaurentPoly::v_pow(exp));
    let p0 = z.p0.max(threshold(&diag));
    Ok(StableInner { value, p0, k: lx.residue() })
}

/// `⟨x, y⟩ = Σ_k lim_p ⟨x,y⟩_{k+pn}`, extended bilinearly over the monomials of `x` and `y`.
pub fn inner_limit(x: &UdotElem, y: &UdotElem) -> Result<RationalFunc> {
    let mut total = RationalFunc::zero();
    for ((wx, lx), cx) in x.terms() {
        for ((wy, ly), cy) in y.terms() {
            if lx != ly {
                continue;
            }
            let g = stable_inner(wx, lx, wy, ly)?.value.u_limit();
            if !g.is_zero() {
                total = &total + &(&g * &(cx * cy));
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn idempotent_norm_is_one() {
        let r = stable_inner(&w(""), &wt(&[2, 0]), &w(""), &wt(&[2, 0])).unwrap();
        assert_eq!(r.value, UPoly::one());
    }

    #[test]
    fn f_norm_carries_u_squared() {
        // base representative of (3,0) has sum 1: (2,-1)
        let lam = wt(&[3, 0]);
        assert_eq!(lam.base_rep(), PeriodicVec(vec![2, -1]));
        let r = stable_inner(&w("F1"), &lam, &w("F1"), &lam).unwrap();
        assert_eq!(r.value, diag_factor(1));
        let limit = RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_ints([(0, 1), (-2, -1)])).unwrap();
        assert_eq!(r.value.u_limit(), limit);
    }

    #[test]
    fn different_residues_vanish() {
        let r = stable_inner(&w("F1"), &wt(&[1, 0]), &w("F1"), &wt(&[2, 0])).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn positive_k_is_rejected() {
        let x = StableElem::idempotent(&PeriodicVec(vec![0, 0])).unwrap();
        assert!(x.smult_k(&PeriodicVec(vec![1, 0])).is_err());
        assert!(x.smult_k(&PeriodicVec(vec![1, -1])).is_ok());
    }
}
