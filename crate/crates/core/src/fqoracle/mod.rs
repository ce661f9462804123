//! Brute-force point counts over `GF(q)`: periodic lattice chains in a finite window, relative
//! positions, fibers `X_A^L`, structure constants `η^C_{A,B;q}` and polynomial interpolation in `q`.

mod chain;
mod fiber;
mod field;
mod interp;
mod linalg;

pub use chain::{relative_position, LatticeChain, Window};
pub use fiber::{count_fiber, enumerate_fiber, Fiber, DEFAULT_BUDGET};
pub use field::Field;
pub use interp::{interp_q_poly, QPoly};
pub use linalg::{grassmannian, Subspace};

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeffring::{QSqrt, Q};
use crate::error::{Error, Result};
use crate::periodic::PeriodicMatrix;

/// Output of a single fiber count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub count: u64,
    pub q: u64,
    pub window: usize,
    pub budget_used: u64,
}

/// Counting front end: field size, budget, window policy.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub q: u64,
    pub budget: u64,
    /// Extra window radius on top of the minimum.
    pub window_extra: usize,
    /// Recount with the window enlarged by one and insist on the same answer.
    pub check_window: bool,
}

impl Oracle {
    pub fn new(q: u64) -> Self {
        Self { q, budget: DEFAULT_BUDGET, window_extra: 0, check_window: true }
    }

    fn window(&self, d: i64, n: usize, band: i64, extra: usize) -> Result<Window> {
        if d <= 0 {
            return Err(Error::OutOfRange(format!("level {d}")));
        }
        Window::new(self.q, d as usize, Window::radius_for(n, band) + self.window_extra + extra)
    }

    fn count_at(&self, a: &PeriodicMatrix, extra: usize) -> Result<CountReport> {
        let win = self.window(a.level(), a.n(), a.band(), extra)?;
        let l = LatticeChain::standard(&win, &a.row_sums())?;
        let (count, budget_used) = count_fiber(&win, a, &l, self.budget)?;
        Ok(CountReport { count, q: self.q, window: win.radius(), budget_used })
    }

    /// `|X_A^L|` for the standard chain `L` of weight `r(A)`.
    pub fn count(&self, a: &PeriodicMatrix) -> Result<CountReport> {
        let r = self.count_at(a, 0)?;
        if self.check_window {
            let r2 = self.count_at(a, 1)?;
            if r2.count != r.count {
                return Err(Error::WindowTooSmall { have: r.window, need: r2.window });
            }
        }
        Ok(r)
    }

    /// `η^C_{A,B;q}`, checked over two representatives `(L, L'') ∈ 𝒪_C` when the fiber allows.
    pub fn structure_const(&self, a: &PeriodicMatrix, b: &PeriodicMatrix, c: &PeriodicMatrix) -> Result<u64> {
        if a.col_sums() != b.row_sums() || a.row_sums() != c.row_sums() || b.col_sums() != c.col_sums() {
            return Ok(0);
        }
        let band = a.band().max(c.band()) + b.band();
        let win = self.window(c.level(), c.n(), band, 0)?;
        let l = LatticeChain::standard(&win, &c.row_sums())?;
        let reps = enumerate_fiber(&win, c, &l, self.budget)?.chains;
        let mut picks = Vec::new();
        if let Some(first) = reps.first() {
            picks.push(first.clone());
        }
        if reps.len() > 1 {
            picks.push(reps[reps.len() - 1].clone());
        }
        let xs = enumerate_fiber(&win, a, &l, self.budget)?.chains;
        let mut values = Vec::new();
        for lpp in &picks {
            let mut k = 0u64;
            for lp in &xs {
                if relative_position(&win, lp, lpp)? == *b {
                    k += 1;
                }
            }
            values.push(k);
        }
        match values.as_slice() {
            [] => Err(Error::Invalid(format!("empty orbit for {c}"))),
            [v, rest @ ..] if rest.iter().all(|w| w == v) => Ok(*v),
            _ => Err(Error::Invalid(format!("structure constant depends on the representative: {values:?}"))),
        }
    }

    /// `([A],[A'])_D` at `v = √q`, as `δ_{A,A'} q^{-d_{A^t}} |X_{A^t}^{L'}|`.
    pub fn inner_direct(&self, a: &PeriodicMatrix, a2: &PeriodicMatrix) -> Result<QSqrt> {
        if a != a2 {
            return Ok(QSqrt::rational(self.q, Q::from_integer(BigInt::from(0))));
        }
        let at = a.transpose();
        let count = self.count(&at)?.count;
        let den = BigInt::from(self.q).pow(at.d_stat() as u32);
        Ok(QSqrt::rational(self.q, Q::new(BigInt::from(count), den)))
    }
}
