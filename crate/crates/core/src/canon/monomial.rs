use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::periodic::{PeriodicMatrix, PeriodicVec};
use crate::schur::{AlgebraElem, GenSym, GenWord};

/// Which generators a monomial uses: `E`'s build strictly upper entries, `F`'s strictly lower ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
}

/// A word `w` and the weight `𝐚` with `w·[𝐢_𝐚] = [A] + Σ_{B ≺ A} c_B[B]`, checked by evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub word: GenWord,
    pub weight: PeriodicVec,
    pub elem: AlgebraElem,
}

/// `[A]` has coefficient 1 and everything else is strictly below `A`.
pub(crate) fn is_unitriangular(x: &AlgebraElem, a: &PeriodicMatrix) -> bool {
    x.coeff(a).is_one() && x.terms().all(|(m, _)| m == a || m.strictly_below(a))
}

pub const DEFAULT_MONOMIAL_BUDGET: u64 = 20_000;

struct Peeler {
    budget: u64,
    used: u64,
    memo: HashMap<PeriodicMatrix, Option<(GenWord, AlgebraElem)>>,
}

impl Peeler {
    /// Reverse peeling: the leftmost letter `E_i^{(c)}` lifted `c` units from `(i+1, s)` to `(i, s)`.
    fn upper(&mut self, u: &PeriodicMatrix) -> Result<Option<(GenWord, AlgebraElem)>> {
        if let Some(hit) = self.memo.get(u) {
            return Ok(hit.clone());
        }
        let found = if u.is_diagonal() {
            let d = u.level();
            Some((GenWord::empty(), AlgebraElem::idempotent(&u.row_sums(), d)?))
        } else {
            self.search(u)?
        };
        self.memo.insert(u.clone(), found.clone());
        Ok(found)
    }

    /// Candidate leftmost letters: for a row `i`, lift amounts `k_s ≤ u_{i,s}` of the strictly upper
    /// entries from row `i+1`; outer offsets and whole-row lifts come first.
    fn candidates(u: &PeriodicMatrix) -> Vec<(i64, Vec<(i64, i64)>)> {
        let n = u.n() as i64;
        let mut out = Vec::new();
        for i in 1..=n {
            let row: Vec<(i64, i64)> = u.row_entries(i).into_iter().filter(|&(s, _)| s > i).collect();
            let mut picks: Vec<Vec<(i64, i64)>> = vec![Vec::new()];
            for &(s, x) in &row {
                picks = picks.into_iter().flat_map(|p| (0..=x).map(move |k| {
                    let mut q = p.clone();
                    if k > 0 {
                        q.push((s, k));
                    }
                    q
                })).collect();
            }
            out.extend(picks.into_iter().filter(|p| !p.is_empty()).map(|p| (i, p)));
        }
        let key = |(i, p): &(i64, Vec<(i64, i64)>)| {
            let outer = p.iter().map(|&(s, _)| s - i).max().unwrap_or(0);
            let mass: i64 = p.iter().map(|&(_, k)| k).sum();
            let prev_empty = u.get(i - 1, i - 1 + outer) == 0;
            (-outer, !prev_empty, -mass, *i)
        };
        out.sort_by_key(key);
        out
    }

    fn search(&mut self, u: &PeriodicMatrix) -> Result<Option<(GenWord, AlgebraElem)>> {
        for (i, pick) in Self::candidates(u) {
            self.used += 1;
            if self.used > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mut b = u.clone();
            for &(s, k) in &pick {
                b.add_at(i, s, -k);
                b.add_at(i + 1, s, k);
            }
            if !b.is_nonneg() {
                continue;
            }
            let Some((w, y)) = self.upper(&b)? else { continue };
            let c: i64 = pick.iter().map(|&(_, k)| k).sum();
            let ii = crate::periodic::residue(i, u.n());
            let z = y.mult_e_div(ii, c as u32)?;
            if is_unitriangular(&z, u) {
                let word = GenWord::new(vec![GenSym::E { i: ii, m: c as u32 }]).concat(&w);
                return Ok(Some((word, z)));
            }
        }
        Ok(None)
    }
}

fn is_triangular(a: &PeriodicMatrix, side: Side) -> bool {
    a.offdiag().all(|(_, t, _)| match side {
        Side::Upper => t > 0,
        Side::Lower => t < 0,
    })
}

/// `E_i^{(c)} ↔ F_i^{(c)}` and reversed order: the image of a word under `Ψ`.
fn psi_word(w: &GenWord) -> GenWord {
    GenWord::new(
        w.symbols()
            .iter()
            .rev()
            .map(|s| match s {
                GenSym::E { i, m } => GenSym::F { i: *i, m: *m },
                GenSym::F { i, m } => GenSym::E { i: *i, m: *m },
                GenSym::K(a) => GenSym::K(a.clone()),
            })
            .collect(),
    )
}

/// A verified monomial for a triangular aperiodic matrix.
pub fn monomial_for(a: &PeriodicMatrix, side: Side, budget: u64) -> Result<Monomial> {
    if !is_triangular(a, side) || !a.is_nonneg() {
        return Err(Error::Invalid(format!("{a} is not {side:?}-triangular")));
    }
    if !a.is_aperiodic() {
        return Err(Error::MonomialNotFound(format!("{a} (not aperiodic)")));
    }
    let mut p = Peeler { budget, used: 0, memo: HashMap::new() };
    match side {
        Side::Upper => {
            let (word, elem) = p.upper(a)?.ok_or_else(|| Error::MonomialNotFound(a.to_string()))?;
            Ok(Monomial { word, weight: a.col_sums(), elem })
        }
        Side::Lower => {
            let (w, _) = p.upper(&a.transpose())?.ok_or_else(|| Error::MonomialNotFound(a.to_string()))?;
            let word = psi_word(&w);
            let weight = a.col_sums();
            let elem = AlgebraElem::idempotent(&weight, a.level())?.apply_word(&word)?;
            if !is_unitriangular(&elem, a) {
                return Err(Error::MonomialNotFound(format!("{a} (transposed word fails)")));
            }
            Ok(Monomial { word, weight, elem })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry() {
        let a = PeriodicMatrix::from_entries(3, &[1, 0, 2], &[(1, 2, 2)]);
        let m = monomial_for(&a, Side::Upper, 1000).unwrap();
        assert_eq!(m.word.to_string(), "E1^(2)");
        assert_eq!(m.elem.len(), 1);
    }

    #[test]
    fn two_step_upper() {
        let b = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]);
        let m = monomial_for(&b, Side::Upper, 1000).unwrap();
        assert_eq!(m.word.to_string(), "E1 E2");
        assert_eq!(m.weight, PeriodicVec(vec![1, 1]));
        let a_per = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert!(m.elem.coeff(&b).is_one());
        assert_eq!(m.elem.coeff(&a_per), crate::coeffring::LaurentPoly::v_pow(-1));
        assert_eq!(m.elem.len(), 2);
    }

    #[test]
    fn lower_is_transposed() {
        let b = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]).transpose();
        let m = monomial_for(&b, Side::Lower, 1000).unwrap();
        assert_eq!(m.word.to_string(), "F2 F1");
    }

    #[test]
    fn periodic_is_refused() {
        let a_per = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert!(matches!(monomial_for(&a_per, Side::Upper, 1000), Err(Error::MonomialNotFound(_))));
    }
}
