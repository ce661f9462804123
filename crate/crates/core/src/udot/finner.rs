use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::coeffring::{quantum_factorial, LaurentPoly, RationalFunc};
use crate::periodic::PeriodicVec;
use crate::schur::{GenSym, GenWord};

/// A monomial `θ_{i_1}^{(m_1)}⋯θ_{i_k}^{(m_k)}` in `𝐟`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FWord(pub Vec<(usize, u32)>);

impl FWord {
    pub fn plain(letters: &[usize]) -> Self {
        Self(letters.iter().map(|&i| (i, 1)).collect())
    }

    /// `ν = |x| ∈ ℕ[I]` as counts per residue.
    pub fn grading(&self, n: usize) -> Vec<u64> {
        let mut nu = vec![0u64; n];
        for &(i, m) in &self.0 {
            nu[(i + n - 1) % n] += u64::from(m);
        }
        nu
    }

    /// `tr ν`.
    pub fn tr(&self) -> u64 {
        self.0.iter().map(|&(_, m)| u64::from(m)).sum()
    }

    /// `x⁻`: each `θ_i` becomes `F_i`.
    pub fn minus(&self) -> GenWord {
        GenWord::new(self.0.iter().map(|&(i, m)| GenSym::F { i, m }).collect())
    }

    /// Expansion into plain letters, `θ^{(m)} = θ^m/[m]!`.
    pub fn expand(&self) -> FComb {
        let mut letters = Vec::new();
        let mut den = LaurentPoly::one();
        for &(i, m) in &self.0 {
            letters.extend(std::iter::repeat_n(i, m as usize));
            den = &den * &quantum_factorial(i64::from(m)).expect("nonnegative");
        }
        let mut c = FComb::default();
        c.add_term(letters, RationalFunc::from(den).inv().expect("nonzero"));
        c
    }
}

/// A combination of plain words `θ_{i_1}⋯θ_{i_k}` with coefficients in `ℚ(v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FComb(BTreeMap<Vec<usize>, RationalFunc>);

impl FComb {
    pub fn word(letters: Vec<usize>) -> Self {
        let mut c = Self::default();
        c.add_term(letters, RationalFunc::one());
        c
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: RationalFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.0.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.0.insert(w, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RationalFunc)> + '_ {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &other.0 {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn scale(&self, c: &RationalFunc) -> Self {
        let mut x = Self::default();
        for (w, v) in &self.0 {
            x.add_term(w.clone(), v * c);
        }
        x
    }
}

fn pairing(n: usize, i: usize, j: usize) -> i64 {
    PeriodicVec::simple(n, i).dot(&PeriodicVec::simple(n, j))
}

fn derive(n: usize, i: usize, x: &FComb, left: bool) -> FComb {
    let i = (i + n - 1) % n + 1;
    let mut out = FComb::default();
    for (w, c) in x.terms() {
        for (t, &j) in w.iter().enumerate() {
            if (j + n - 1) % n + 1 != i {
                continue;
            }
            // `_ir` picks up `v^{𝐢·|prefix|}`, `r_i` picks up `v^{𝐢·|suffix|}`
            let rest: &[usize] = if left { &w[..t] } else { &w[t + 1..] };
            let e: i64 = rest.iter().map(|&k| pairing(n, i, k)).sum();
            let mut u = w.clone();
            u.remove(t);
            out.add_term(u, c.scale_laurent(&LaurentPoly::v_pow(e)));
        }
    }
    out
}

/// `_ir` with `_ir(θ_j) = δ_{ij}` and `_ir(xy) = _ir(x)y + v^{𝐢·|x|}x·_ir(y)`.
pub fn ir_derivation(n: usize, i: usize, x: &FComb) -> FComb {
    derive(n, i, x, true)
}

/// `r_i` with `r_i(xy) = v^{𝐢·|y|}r_i(x)y + x·r_i(y)`.
pub fn ri_derivation(n: usize, i: usize, x: &FComb) -> FComb {
    derive(n, i, x, false)
}

type Key = (usize, Vec<usize>, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<Key, RationalFunc>> {
    static C: OnceLock<RwLock<HashMap<Key, RationalFunc>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn sorted_residues(n: usize, w: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = w.iter().map(|&i| (i + n - 1) % n).collect();
    v.sort_unstable();
    v
}

fn plain_inner(n: usize, x: &[usize], y: &[usize]) -> RationalFunc {
    if sorted_residues(n, x) != sorted_residues(n, y) {
        return RationalFunc::zero();
    }
    if y.is_empty() {
        return RationalFunc::one();
    }
    let key = (n, x.to_vec(), y.to_vec());
    if let Some(v) = cache().read().expect("cache lock").get(&key) {
        return v.clone();
    }
    // (x, θ_i z) = (_ir(x), z)/(1 - v^{-2})
    let d = ir_derivation(n, y[0], &FComb::word(x.to_vec()));
    let mut acc = RationalFunc::zero();
    for (w, c) in d.terms() {
        let v = plain_inner(n, w, &y[1..]);
        if !v.is_zero() {
            acc = &acc + &(c * &v);
        }
    }
    let scale = RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_ints([(0, 1), (-2, -1)])).expect("nonzero");
    let v = &acc * &scale;
    cache().write().expect("cache lock").insert(key, v.clone());
    v
}

/// The form `(x, y)` on combinations.
pub fn f_inner_comb(n: usize, x: &FComb, y: &FComb) -> RationalFunc {
    let mut acc = RationalFunc::zero();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let v = plain_inner(n, wx, wy);
            if !v.is_zero() {
                acc = &acc + &(&v * &(cx * cy));
            }
        }
    }
    acc
}

/// The standard form `(x, y)` on `𝐟` for period `n`.
pub fn f_inner(n: usize, x: &FWord, y: &FWord) -> RationalFunc {
    if x.grading(n) != y.grading(n) {
        return RationalFunc::zero();
    }
    f_inner_comb(n, &x.expand(), &y.expand())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geo() -> RationalFunc {
        RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_ints([(0, 1), (-2, -1)])).unwrap()
    }

    #[test]
    fn one_letter() {
        assert_eq!(f_inner(3, &FWord::plain(&[1]), &FWord::plain(&[1])), geo());
        assert!(f_inner(3, &FWord::plain(&[1]), &FWord::plain(&[2])).is_zero());
    }

    #[test]
    fn two_letters_adjacent() {
        let v = f_inner(3, &FWord::plain(&[1, 2]), &FWord::plain(&[2, 1]));
        assert_eq!(v, (&geo() * &geo()).scale_laurent(&LaurentPoly::v_pow(-1)));
    }

    #[test]
    fn derivation_rules() {
        let x = FComb::word(vec![2, 1]);
        let d = ir_derivation(3, 1, &x);
        assert_eq!(d, FComb::word(vec![2]).scale(&RationalFunc::v_pow(-1)));
        assert_eq!(ir_derivation(3, 1, &FComb::word(vec![1])), FComb::word(vec![]));
        assert_eq!(ri_derivation(3, 2, &FComb::word(vec![2])), ir_derivation(3, 2, &FComb::word(vec![2])));
    }

    #[test]
    fn divided_square() {
        // (θ^{(2)}, θ^{(2)}) = (θθ,θθ)/[2]² and is symmetric in the two arguments
        let a = f_inner(2, &FWord(vec![(1, 2)]), &FWord(vec![(1, 2)]));
        let b = f_inner(2, &FWord::plain(&[1, 1]), &FWord::plain(&[1, 1]));
        let q2 = RationalFunc::from(crate::coeffring::qint(2));
        assert_eq!(&a * &(&q2 * &q2), b);
    }
}
