//! Periodic vectors and matrices: row/column sums, the statistic `d_A`, corner sums and the
//! order `≼`, aperiodicity, triangular parts and tableaux.

mod order;
mod serial;
mod tableau;

pub use order::enumerate_interval;
pub use serial::MatrixJson;
pub use tableau::{matrix_from_triple, tableau_of_upper, Tableau};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residue of an integer index in `1..=n`.
pub fn residue(i: i64, n: usize) -> usize {
    ((i - 1).rem_euclid(n as i64) + 1) as usize
}

/// A vector `(a_i)_{i∈ℤ}` with `a_{i+n} = a_i`, stored as `a_1..a_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PeriodicVec(pub Vec<i64>);

impl PeriodicVec {
    pub fn new(values: Vec<i64>) -> Self {
        Self(values)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Entry at any integer index.
    pub fn at(&self, i: i64) -> i64 {
        self.0[residue(i, self.n()) - 1]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// The vector `𝐢`: `+1` at `i`, `-1` at `i+1` (mod n).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[residue(i as i64, n) - 1] += 1;
        v[residue(i as i64 + 1, n) - 1] -= 1;
        Self(v)
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn sum_squares(&self) -> i64 {
        self.0.iter().map(|a| a * a).sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Membership in `𝔖_{D,n}`.
    pub fn in_level(&self, d: i64) -> bool {
        self.is_nonneg() && self.sum() == d
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn plus_const(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a + k).collect())
    }
}

/// An `n`-periodic integer matrix `a_{i,j} = a_{i+n,j+n}`, stored by row residue and offset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicMatrix {
    n: usize,
    diag: Vec<i64>,
    /// `(i, t) ↦ a_{i,i+t}` for `i ∈ 1..=n`, `t ≠ 0`; zero entries omitted.
    off: BTreeMap<(usize, i64), i64>,
}

impl PeriodicMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "period must be positive");
        Self { n, diag: vec![0; n], off: BTreeMap::new() }
    }

    /// The diagonal matrix `𝐢_𝐚`.
    pub fn diagonal(a: &PeriodicVec) -> Self {
        Self { n: a.n(), diag: a.0.clone(), off: BTreeMap::new() }
    }

    /// Build from absolute entries `(i, j, value)`; repeated positions add up.
    pub fn from_entries(n: usize, diag: &[i64], entries: &[(i64, i64, i64)]) -> Self {
        let mut m = Self::diagonal(&PeriodicVec(diag.to_vec()));
        assert_eq!(diag.len(), n, "diagonal length must equal the period");
        for &(i, j, x) in entries {
            m.add_at(i, j, x);
        }
        m
    }

    /// `E^{i,j}` with unit entries at `(i+sn, j+sn)`.
    pub fn elementary(n: usize, i: i64, j: i64) -> Self {
        let mut m = Self::zero(n);
        m.add_at(i, j, 1);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diag(&self) -> &[i64] {
        &self.diag
    }

    /// Off-diagonal entries as `(row residue, offset, value)`.
    pub fn offdiag(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.off.iter().map(|(&(i, t), &x)| (i, t, x))
    }

    pub fn is_diagonal(&self) -> bool {
        self.off.is_empty()
    }

    pub fn get(&self, i: i64, j: i64) -> i64 {
        let r = residue(i, self.n);
        let t = j - i;
        if t == 0 {
            self.diag[r - 1]
        } else {
            self.off.get(&(r, t)).copied().unwrap_or(0)
        }
    }

    pub fn add_at(&mut self, i: i64, j: i64, delta: i64) {
        let r = residue(i, self.n);
        let t = j - i;
        if t == 0 {
            self.diag[r - 1] += delta;
            return;
        }
        let e = self.off.entry((r, t)).or_insert(0);
        *e += delta;
        if *e == 0 {
            self.off.remove(&(r, t));
        }
    }

    pub fn with_added(&self, i: i64, j: i64, delta: i64) -> Self {
        let mut m = self.clone();
        m.add_at(i, j, delta);
        m
    }

    /// Largest `|j - i|` over nonzero off-diagonal entries.
    pub fn band(&self) -> i64 {
        self.off.keys().map(|&(_, t)| t.abs()).max().unwrap_or(0)
    }

    pub fn upper_band(&self) -> i64 {
        self.off.keys().map(|&(_, t)| t).filter(|&t| t > 0).max().unwrap_or(0)
    }

    pub fn lower_band(&self) -> i64 {
        self.off.keys().map(|&(_, t)| -t).filter(|&t| t > 0).max().unwrap_or(0)
    }

    /// `a_{i,*}` for any integer row index.
    pub fn row_sum(&self, i: i64) -> i64 {
        let r = residue(i, self.n);
        self.diag[r - 1] + self.off.range((r, i64::MIN)..=(r, i64::MAX)).map(|(_, x)| x).sum::<i64>()
    }

    /// `a_{*,j}` for any integer column index.
    pub fn col_sum(&self, j: i64) -> i64 {
        let c = residue(j, self.n);
        self.diag[c - 1]
            + self.off.iter().filter(|(&(i, t), _)| residue(i as i64 + t, self.n) == c).map(|(_, x)| x).sum::<i64>()
    }

    pub fn row_sums(&self) -> PeriodicVec {
        PeriodicVec((1..=self.n as i64).map(|i| self.row_sum(i)).collect())
    }

    pub fn col_sums(&self) -> PeriodicVec {
        PeriodicVec((1..=self.n as i64).map(|j| self.col_sum(j)).collect())
    }

    /// Sum of row `i` over columns `j` satisfying `pred(j)`.
    pub fn row_partial(&self, i: i64, pred: impl Fn(i64) -> bool) -> i64 {
        let r = residue(i, self.n);
        let mut s = if pred(i) { self.diag[r - 1] } else { 0 };
        for (&(_, t), x) in self.off.range((r, i64::MIN)..=(r, i64::MAX)) {
            if pred(i + t) {
                s += x;
            }
        }
        s
    }

    /// Nonzero entries of row `i` as `(absolute column, value)`, including the diagonal.
    pub fn row_entries(&self, i: i64) -> Vec<(i64, i64)> {
        let r = residue(i, self.n);
        let mut v: Vec<(i64, i64)> =
            self.off.range((r, i64::MIN)..=(r, i64::MAX)).map(|(&(_, t), &x)| (i + t, x)).collect();
        if self.diag[r - 1] != 0 {
            v.push((i, self.diag[r - 1]));
        }
        v.sort_unstable();
        v
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self { n: self.n, diag: self.diag.clone(), off: BTreeMap::new() };
        for (&(i, t), &x) in &self.off {
            let i = i as i64;
            m.add_at(i + t, i, x);
        }
        m
    }

    /// `_pA = A + pI`.
    pub fn shift_p(&self, p: i64) -> Self {
        let mut m = self.clone();
        for d in &mut m.diag {
            *d += p;
        }
        m
    }

    /// Off-diagonal entries nonnegative (membership in `𝔖^{n,n}`).
    pub fn is_affine_valid(&self) -> bool {
        self.off.values().all(|&x| x > 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.is_affine_valid() && self.diag.iter().all(|&d| d >= 0)
    }

    /// Membership in `𝔖_{D,n,n}`.
    pub fn in_level(&self, d: i64) -> bool {
        self.is_nonneg() && self.level() == d
    }

    /// `Σ_{i=1}^n a_{i,*}`.
    pub fn level(&self) -> i64 {
        self.row_sums().sum()
    }

    pub fn min_diag(&self) -> i64 {
        self.diag.iter().copied().min().unwrap_or(0)
    }

    /// `Σ_{i=1}^n Σ_{j≠i} a_{ij}·|j-i|`.
    pub fn weighted_mass(&self) -> i64 {
        self.off.iter().map(|(&(_, t), &x)| x * t.abs()).sum()
    }

    /// `d_A = Σ_{1≤i≤n, k≤i, j<l} a_{ij} a_{kl}`.
    pub fn d_stat(&self) -> i64 {
        let band = self.band();
        let mut total = 0;
        for i in 1..=self.n as i64 {
            for (j, aij) in self.row_entries(i) {
                let mut inner = 0;
                for k in (j + 1 - band)..=i {
                    inner += self.row_partial(k, |l| l > j);
                }
                total += aij * inner;
            }
        }
        total
    }

    pub fn corner_upper(&self, i: i64, j: i64) -> i64 {
        debug_assert!(i < j);
        let band = self.upper_band();
        ((j - band)..=i).map(|r| self.row_partial(r, |s| s >= j)).sum()
    }

    pub fn corner_lower(&self, i: i64, j: i64) -> i64 {
        debug_assert!(i > j);
        let band = self.lower_band();
        (i..=(j + band)).map(|r| self.row_partial(r, |s| s <= j)).sum()
    }

    /// `self ≼ other`.
    pub fn preceq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let up = self.upper_band().max(other.upper_band());
        let low = self.lower_band().max(other.lower_band());
        for i in 1..=self.n as i64 {
            for j in (i + 1)..=(i + up) {
                if self.corner_upper(i, j) > other.corner_upper(i, j) {
                    return false;
                }
            }
            for j in (i - low)..i {
                if self.corner_lower(i, j) > other.corner_lower(i, j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn strictly_below(&self, other: &Self) -> bool {
        self != other && self.preceq(other)
    }

    /// Every nonzero offset has some row with a zero entry there.
    pub fn is_aperiodic(&self) -> bool {
        let offsets: std::collections::BTreeSet<i64> = self.off.keys().map(|&(_, t)| t).collect();
        offsets.into_iter().all(|t| (1..=self.n).any(|i| !self.off.contains_key(&(i, t))))
    }

    /// `(A^-, A^+)`: strictly upper part with the rest of each row collapsed to the diagonal,
    /// and strictly lower part with the rest of each column collapsed to the diagonal.
    pub fn split_pm(&self) -> (Self, Self) {
        let mut upper = Self::zero(self.n);
        let mut lower = Self::zero(self.n);
        for i in 1..=self.n {
            upper.diag[i - 1] = self.diag[i - 1];
            lower.diag[i - 1] = self.diag[i - 1];
        }
        for (&(i, t), &x) in &self.off {
            let ii = i as i64;
            if t > 0 {
                upper.add_at(ii, ii + t, x);
                lower.add_at(ii + t, ii + t, x);
            } else {
                lower.add_at(ii, ii + t, x);
                upper.add_at(ii, ii, x);
            }
        }
        (upper, lower)
    }

    /// `_𝐚𝐞_{𝐚'} = 𝐢_𝐚 - E^{i,i} + E^{i,i+1}`.
    pub fn e_matrix(a: &PeriodicVec, i: usize) -> Self {
        let i = i as i64;
        let mut m = Self::diagonal(a);
        m.add_at(i, i, -1);
        m.add_at(i, i + 1, 1);
        m
    }

    /// `_{𝐚'}𝐟_𝐚 = 𝐢_{𝐚'} - E^{i+1,i+1} + E^{i+1,i}`.
    pub fn f_matrix(a_prime: &PeriodicVec, i: usize) -> Self {
        let i = i as i64;
        let mut m = Self::diagonal(a_prime);
        m.add_at(i + 1, i + 1, -1);
        m.add_at(i + 1, i, 1);
        m
    }

    pub(crate) fn from_parts(n: usize, diag: Vec<i64>, entries: impl IntoIterator<Item = (usize, i64, i64)>) -> Result<Self> {
        if diag.len() != n || n == 0 {
            return Err(Error::Invalid(format!("diagonal has {} entries for period {n}", diag.len())));
        }
        let mut m = Self { n, diag, off: BTreeMap::new() };
        for (i, t, x) in entries {
            if i == 0 || i > n || t == 0 {
                return Err(Error::Invalid(format!("bad off-diagonal key ({i},{t})")));
            }
            m.add_at(i as i64, i as i64 + t, x);
        }
        Ok(m)
    }
}
