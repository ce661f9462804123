use std::collections::BTreeMap;

use super::field::Field;
use super::linalg::Subspace;
use crate::error::{Error, Result};
use crate::periodic::{PeriodicMatrix, PeriodicVec};

/// `W = ε^{-M}L⁰/ε^{M}L⁰` over `GF(q)` with basis `e_{k,d}` (`-M ≤ k < M`, `0 ≤ d < D`) where
/// `e_{k,d}` stands for `ε^k e_d`.
#[derive(Clone, Debug)]
pub struct Window {
    field: Field,
    d: usize,
    m: usize,
}

impl Window {
    pub fn new(q: u64, d: usize, m: usize) -> Result<Self> {
        if d == 0 || m < 2 {
            return Err(Error::OutOfRange(format!("window with D={d}, radius {m}")));
        }
        Ok(Self { field: Field::new(q)?, d, m })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn radius(&self) -> usize {
        self.m
    }

    pub fn ambient(&self) -> usize {
        2 * self.m * self.d
    }

    fn idx(&self, k: i64, d: usize) -> usize {
        (k + self.m as i64) as usize * self.d + d
    }

    pub fn unit(&self, k: i64, d: usize) -> Vec<u8> {
        let mut v = vec![0; self.ambient()];
        v[self.idx(k, d)] = 1;
        v
    }

    /// `ε^k L⁰`.
    pub fn standard_power(&self, k: i64) -> Subspace {
        let m = self.m as i64;
        let vecs = (k.max(-m)..m).flat_map(|l| (0..self.d).map(move |d| (l, d)));
        Subspace::span(&self.field, self.ambient(), vecs.map(|(l, d)| self.unit(l, d)))
    }

    fn shift(&self, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0; v.len()];
        out[self.d..].copy_from_slice(&v[..v.len() - self.d]);
        out
    }

    /// `εL`; requires `ε^{M-1}L⁰ ⊆ L`.
    pub fn eps_image(&self, s: &Subspace) -> Result<Subspace> {
        let top = self.m as i64 - 1;
        if !(0..self.d).all(|d| s.contains(&self.field, &self.unit(top, d))) {
            return Err(Error::WindowTooSmall { have: self.m, need: self.m + 1 });
        }
        Ok(Subspace::span(&self.field, self.ambient(), s.rows().iter().map(|r| self.shift(r))))
    }

    /// `ε^{-1}L`; requires `L ⊆ ε^{1-M}L⁰`.
    pub fn eps_preimage(&self, s: &Subspace) -> Result<Subspace> {
        if s.pivots().iter().any(|&p| p < self.d) {
            return Err(Error::WindowTooSmall { have: self.m, need: self.m + 1 });
        }
        let down = s.rows().iter().map(|r| {
            let mut out = vec![0; r.len()];
            out[..r.len() - self.d].copy_from_slice(&r[self.d..]);
            out
        });
        let top = self.m as i64 - 1;
        let kernel = (0..self.d).map(|d| self.unit(top, d));
        Ok(Subspace::span(&self.field, self.ambient(), down.chain(kernel)))
    }

    pub fn eps_vec(&self, v: &[u8]) -> Vec<u8> {
        self.shift(v)
    }

    /// Radius needed to hold every lattice touched when working with band `band` at period `n`.
    pub fn radius_for(n: usize, band: i64) -> usize {
        let n = n as i64;
        (3 + (band + n - 1) / n) as usize
    }
}

/// An `n`-step periodic chain `(L_i)` stored by `L_0, …, L_{n-1}`; `L_{i+kn} = ε^{-k}L_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeChain {
    base: Vec<Subspace>,
}

impl LatticeChain {
    pub fn new(base: Vec<Subspace>) -> Self {
        Self { base }
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Subspace] {
        &self.base
    }

    /// The chain with `L_i = L⁰ + span{ε^{-1}e_d : d < a_1+…+a_i}` for `0 ≤ i < n`.
    pub fn standard(win: &Window, a: &PeriodicVec) -> Result<Self> {
        if !a.in_level(win.rank() as i64) {
            return Err(Error::Invalid(format!("weight {:?} is not in level {}", a.values(), win.rank())));
        }
        let l0 = win.standard_power(0);
        let mut base = Vec::with_capacity(a.n());
        let mut acc = 0usize;
        for i in 0..a.n() {
            if i > 0 {
                acc += a.values()[i - 1] as usize;
            }
            let extra = (0..acc).map(|d| win.unit(-1, d));
            base.push(l0.sum(win.field(), &Subspace::span(win.field(), win.ambient(), extra)));
        }
        Ok(Self { base })
    }

    pub fn get(&self, win: &Window, i: i64) -> Result<Subspace> {
        let n = self.n() as i64;
        let r = i.rem_euclid(n);
        let k = i.div_euclid(n);
        let mut s = self.base[r as usize].clone();
        for _ in 0..k.max(0) {
            s = win.eps_preimage(&s)?;
        }
        for _ in 0..(-k).max(0) {
            s = win.eps_image(&s)?;
        }
        Ok(s)
    }

    pub fn range(&self, win: &Window, lo: i64, hi: i64) -> Result<BTreeMap<i64, Subspace>> {
        (lo..=hi).map(|i| Ok((i, self.get(win, i)?))).collect()
    }

    /// `|L|_i = dim(L_i/L_{i-1})`.
    pub fn weight(&self, win: &Window) -> Result<PeriodicVec> {
        let n = self.n() as i64;
        let l = self.range(win, 0, n)?;
        Ok(PeriodicVec((1..=n).map(|i| (l[&i].dim() - l[&(i - 1)].dim()) as i64).collect()))
    }

    /// Chain condition, `ε`-stability and `L_{n-1} ⊆ ε^{-1}L_0`.
    pub fn is_valid(&self, win: &Window) -> bool {
        let f = win.field();
        let Ok(top) = self.get(win, self.n() as i64) else {
            return false;
        };
        let stable = self.base.iter().all(|s| s.rows().iter().all(|r| s.contains(f, &win.eps_vec(r))));
        let nested = self.base.windows(2).all(|w| w[1].contains_space(f, &w[0]));
        stable && nested && top.contains_space(f, &self.base[self.n() - 1])
    }
}

/// The matrix `A` with `(L, L') ∈ 𝒪_A`.
pub fn relative_position(win: &Window, l: &LatticeChain, lp: &LatticeChain) -> Result<PeriodicMatrix> {
    let n = l.n();
    if lp.n() != n {
        return Err(Error::Invalid("chains of different period".into()));
    }
    let f = win.field();
    let reach = (n * win.radius()) as i64;
    let mut lcache: BTreeMap<i64, Option<Subspace>> = BTreeMap::new();
    let mut lpcache: BTreeMap<i64, Option<Subspace>> = BTreeMap::new();
    let mut dim_cap = |i: i64, j: i64| -> Option<i64> {
        let a = lcache.entry(i).or_insert_with(|| l.get(win, i).ok()).clone()?;
        let b = lpcache.entry(j).or_insert_with(|| lp.get(win, j).ok()).clone()?;
        Some(a.intersection_dim(f, &b) as i64)
    };
    let mut a = PeriodicMatrix::zero(n);
    let mut entries = Vec::new();
    for i in 1..=n as i64 {
        for j in (i - reach)..=(i + reach) {
            let vals = (dim_cap(i, j), dim_cap(i - 1, j), dim_cap(i, j - 1), dim_cap(i - 1, j - 1));
            if let (Some(x), Some(y), Some(z), Some(w)) = vals {
                let e = x - y - z + w;
                if e != 0 {
                    entries.push((i, j, e));
                }
            }
        }
    }
    for (i, j, e) in entries {
        a.add_at(i, j, e);
    }
    if a.row_sums() != l.weight(win)? || a.col_sums() != lp.weight(win)? {
        return Err(Error::WindowTooSmall { have: win.radius(), need: win.radius() + 1 });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_chain_weights() {
        let win = Window::new(2, 3, 3).unwrap();
        let a = PeriodicVec(vec![2, 0, 1]);
        let l = LatticeChain::standard(&win, &a).unwrap();
        assert!(l.is_valid(&win));
        assert_eq!(l.weight(&win).unwrap(), a);
        assert_eq!(l.get(&win, 3).unwrap(), win.standard_power(-1));
        assert_eq!(l.get(&win, -3).unwrap(), win.standard_power(1));
    }

    #[test]
    fn self_position_is_diagonal() {
        let win = Window::new(3, 2, 3).unwrap();
        let a = PeriodicVec(vec![1, 1]);
        let l = LatticeChain::standard(&win, &a).unwrap();
        assert_eq!(relative_position(&win, &l, &l).unwrap(), PeriodicMatrix::diagonal(&a));
    }

    #[test]
    fn one_step_down_chain() {
        // D=1, n=2: L = (L⁰, L⁰, ε^{-1}L⁰ …) against L' with L'_1 = ε^{-1}L⁰
        let win = Window::new(2, 1, 3).unwrap();
        let l = LatticeChain::standard(&win, &PeriodicVec(vec![0, 1])).unwrap();
        let lp = LatticeChain::standard(&win, &PeriodicVec(vec![1, 0])).unwrap();
        let a = relative_position(&win, &l, &lp).unwrap();
        assert_eq!(a, PeriodicMatrix::f_matrix(&PeriodicVec(vec![0, 1]), 1));
    }

    #[test]
    fn window_edges_are_detected() {
        let win = Window::new(2, 1, 2).unwrap();
        let l = LatticeChain::standard(&win, &PeriodicVec(vec![1, 0])).unwrap();
        assert!(l.get(&win, 10).is_err());
        assert!(l.get(&win, -10).is_err());
    }
}
