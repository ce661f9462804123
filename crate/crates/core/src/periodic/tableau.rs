use std::collections::BTreeMap;

use super::{residue, PeriodicMatrix, PeriodicVec};

/// Multiplicities `μ_{t,p}` of the indecomposables `V_{t,p}` (top residue `t`, length `p`).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    n: usize,
    mult: BTreeMap<(usize, u64), u64>,
}

impl Tableau {
    pub fn new(n: usize) -> Self {
        Self { n, mult: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, t: i64, p: u64, m: u64) {
        assert!(p >= 1, "lengths are positive");
        let key = (residue(t, self.n), p);
        if m == 0 {
            self.mult.remove(&key);
        } else {
            self.mult.insert(key, m);
        }
    }

    pub fn get(&self, t: i64, p: u64) -> u64 {
        self.mult.get(&(residue(t, self.n), p)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.mult.iter().map(|(&(t, p), &m)| (t, p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `ν_k = Σ_{t ≤ k < t+p} μ_{t,p}`, taken mod `n`.
    pub fn dimension_vector(&self) -> PeriodicVec {
        let mut nu = vec![0i64; self.n];
        for (&(t, p), &m) in &self.mult {
            for k in 0..p as i64 {
                nu[residue(t as i64 + k, self.n) - 1] += m as i64;
            }
        }
        PeriodicVec(nu)
    }

    /// `Σ_p μ_{t,p}`.
    pub fn row_total(&self, t: usize) -> i64 {
        self.mult.range((t, 0)..=(t, u64::MAX)).map(|(_, &m)| m as i64).sum()
    }
}

/// `A(μ, ρ, λ)`: `a_{i,i+p} = μ_{i,p}`, `a_{j+p,j} = ρ_{j,p}`,
/// `a_{ii} = λ_i - Σ_p μ_{i,p} - Σ_p ρ_{i,p}`.
pub fn matrix_from_triple(mu: &Tableau, rho: &Tableau, lam: &PeriodicVec) -> PeriodicMatrix {
    let n = lam.n();
    let diag: Vec<i64> = (1..=n).map(|i| lam.values()[i - 1] - mu.row_total(i) - rho.row_total(i)).collect();
    let mut m = PeriodicMatrix::diagonal(&PeriodicVec(diag));
    for (t, p, x) in mu.entries() {
        m.add_at(t as i64, t as i64 + p as i64, x as i64);
    }
    for (t, p, x) in rho.entries() {
        m.add_at(t as i64 + p as i64, t as i64, x as i64);
    }
    m
}

/// Strictly upper entries of `A` read as a tableau: `μ_{i,p} = a_{i,i+p}`.
pub fn tableau_of_upper(a: &PeriodicMatrix) -> Tableau {
    let mut tab = Tableau::new(a.n());
    for (i, t, x) in a.offdiag() {
        if t > 0 && x > 0 {
            tab.set(i as i64, t as u64, x as u64);
        }
    }
    tab
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tableaux() {
        let lam = PeriodicVec(vec![2, 0]);
        let m = matrix_from_triple(&Tableau::new(2), &Tableau::new(2), &lam);
        assert_eq!(m, PeriodicMatrix::diagonal(&lam));
    }

    #[test]
    fn single_box() {
        let mut mu = Tableau::new(2);
        mu.set(1, 1, 1);
        let m = matrix_from_triple(&mu, &Tableau::new(2), &PeriodicVec(vec![1, 1]));
        assert_eq!(m, PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 2, 1)]));
        assert_eq!(tableau_of_upper(&m.split_pm().0), mu);
    }

    #[test]
    fn dimension_vector() {
        let mut mu = Tableau::new(3);
        mu.set(2, 4, 1);
        mu.set(1, 1, 2);
        assert_eq!(mu.dimension_vector(), PeriodicVec(vec![3, 2, 1]));
    }
}
