use std::collections::BTreeMap;

use super::chain::{LatticeChain, Window};
use super::linalg::{grassmannian, Subspace};
use crate::error::{Error, Result};
use crate::periodic::PeriodicMatrix;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Result of a fiber enumeration.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub chains: Vec<LatticeChain>,
    pub budget_used: u64,
}

struct Search<'a> {
    win: &'a Window,
    a: &'a PeriodicMatrix,
    lat: BTreeMap<i64, Subspace>,
    up: i64,
    low: i64,
    budget: u64,
    used: u64,
    keep: bool,
    count: u64,
    out: Vec<LatticeChain>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// `L'_{j} ∩ L_i` for the previously built `L'_{j}` given its build list starting at `i0`.
    fn meet(&self, built: &[Subspace], i0: i64, i: i64) -> Subspace {
        if i < i0 {
            self.lat[&i].clone()
        } else {
            let k = ((i - i0) as usize).min(built.len() - 1);
            built[k].clone()
        }
    }

    /// Builds `S_i = L'_j ∩ L_i` for `i = i0_j+1, …` on top of `s`.
    fn level(&mut self, j: i64, s: &mut Vec<Subspace>, prev: &[Vec<Subspace>], done: &mut Vec<Subspace>) -> Result<()> {
        let i0 = j - self.up;
        let i = i0 + s.len() as i64;
        if i > j + self.low {
            let lj = s.last().cloned().expect("nonempty build");
            return self.next_level(j, lj, s.clone(), prev, done);
        }
        let f = self.win.field();
        let c = self.a.row_partial(i, |t| t <= j) as usize;
        let li = self.lat[&i].clone();
        let lprev = self.lat[&(i - 1)].clone();
        let sprev = s.last().cloned().expect("nonempty build");
        let w = li.complement_of(f, &lprev);
        let y = lprev.complement_of(f, &sprev);
        let n = self.a.n() as i64;
        let eps_target = (i - n >= i0).then(|| s[(i - n - i0) as usize].clone());
        let must_contain = if j > 0 { Some(self.meet(&prev[prev.len() - 1], i0 - 1, i)) } else { None };
        for ubar in grassmannian(f, w.len(), c) {
            self.tick()?;
            let lifted: Vec<Vec<u8>> = ubar
                .iter()
                .map(|u| {
                    let mut x = vec![0u8; self.win.ambient()];
                    for (t, &coef) in u.iter().enumerate() {
                        f.axpy(&mut x, coef, &w[t]);
                    }
                    x
                })
                .collect();
            let mut chosen = Vec::with_capacity(c);
            self.lifts(j, &lifted, &y, &eps_target, &must_contain, &sprev, &mut chosen, s, prev, done)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn lifts(
        &mut self,
        j: i64,
        lifted: &[Vec<u8>],
        y: &[Vec<u8>],
        eps_target: &Option<Subspace>,
        must_contain: &Option<Subspace>,
        sprev: &Subspace,
        chosen: &mut Vec<Vec<u8>>,
        s: &mut Vec<Subspace>,
        prev: &[Vec<Subspace>],
        done: &mut Vec<Subspace>,
    ) -> Result<()> {
        let f = self.win.field();
        let k = chosen.len();
        if k == lifted.len() {
            let mut si = sprev.clone();
            for x in chosen.iter() {
                si.insert(f, x.clone());
            }
            if let Some(mc) = must_contain {
                if !si.contains_space(f, mc) {
                    return Ok(());
                }
            }
            s.push(si);
            let r = self.level(j, s, prev, done);
            s.pop();
            return r;
        }
        let q = f.size();
        let total = q.pow(y.len() as u32);
        for mut code in 0..total {
            self.tick()?;
            let mut x = lifted[k].clone();
            for yl in y {
                f.axpy(&mut x, (code % q) as u8, yl);
                code /= q;
            }
            if let Some(t) = eps_target {
                if !t.contains(f, &self.win.eps_vec(&x)) {
                    continue;
                }
            }
            chosen.push(x);
            let r = self.lifts(j, lifted, y, eps_target, must_contain, sprev, chosen, s, prev, done);
            chosen.pop();
            r?;
        }
        Ok(())
    }

    fn next_level(&mut self, j: i64, lj: Subspace, build: Vec<Subspace>, prev: &[Vec<Subspace>], done: &mut Vec<Subspace>) -> Result<()> {
        let n = self.a.n() as i64;
        done.push(lj);
        let mut prev2 = prev.to_vec();
        prev2.push(build);
        let r = if j + 1 == n {
            let top = self.win.eps_preimage(&done[0])?;
            if top.contains_space(self.win.field(), &done[done.len() - 1]) {
                self.count += 1;
                if self.keep {
                    self.out.push(LatticeChain::new(done.clone()));
                }
            }
            Ok(())
        } else {
            self.start(j + 1, &prev2, done)
        };
        done.pop();
        r
    }

    fn start(&mut self, j: i64, prev: &[Vec<Subspace>], done: &mut Vec<Subspace>) -> Result<()> {
        let mut s = vec![self.lat[&(j - self.up)].clone()];
        self.level(j, &mut s, prev, done)
    }
}

fn search(win: &Window, a: &PeriodicMatrix, l: &LatticeChain, budget: u64, keep: bool) -> Result<(u64, Vec<LatticeChain>, u64)> {
    let n = a.n();
    if l.n() != n {
        return Err(Error::Invalid("chain and matrix have different periods".into()));
    }
    if !a.in_level(win.rank() as i64) {
        return Err(Error::Invalid(format!("{a} is not in level {}", win.rank())));
    }
    if a.row_sums() != l.weight(win)? {
        return Err(Error::Invalid(format!("row sums of {a} differ from the chain's weight")));
    }
    let need = Window::radius_for(n, a.band());
    if win.radius() < need {
        return Err(Error::WindowTooSmall { have: win.radius(), need });
    }
    let up = a.upper_band();
    let low = a.lower_band();
    let lat = l.range(win, -up - n as i64 - 1, n as i64 + low + 1)?;
    let mut st = Search { win, a, lat, up, low, budget, used: 0, keep, count: 0, out: Vec::new() };
    let mut done = Vec::new();
    st.start(0, &[], &mut done)?;
    Ok((st.count, st.out, st.used))
}

/// All `L'` with `(L, L') ∈ 𝒪_A`.
pub fn enumerate_fiber(win: &Window, a: &PeriodicMatrix, l: &LatticeChain, budget: u64) -> Result<Fiber> {
    let (_, chains, used) = search(win, a, l, budget, true)?;
    Ok(Fiber { chains, budget_used: used })
}

/// `|X_A^L|` with the budget actually used.
pub fn count_fiber(win: &Window, a: &PeriodicMatrix, l: &LatticeChain, budget: u64) -> Result<(u64, u64)> {
    let (count, _, used) = search(win, a, l, budget, false)?;
    Ok((count, used))
}
