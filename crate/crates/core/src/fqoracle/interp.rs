use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffring::Q;
use crate::error::{Error, Result};

/// A polynomial in `q` with rational coefficients, `coeffs[k]` for `q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<Q>,
}

impl QPoly {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Q> {
        self.degree().map(|d| &self.coeffs[d])
    }

    pub fn eval(&self, q: i64) -> Q {
        let q = Q::from_integer(BigInt::from(q));
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * &q + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The polynomial of degree `≤ bound` through the given `(q, value)` points; surplus points are
/// checked against it.
pub fn interp_q_poly(points: &[(u64, u64)], bound: usize) -> Result<QPoly> {
    let mut qs: Vec<u64> = points.iter().map(|p| p.0).collect();
    qs.sort_unstable();
    qs.dedup();
    if qs.len() != points.len() {
        return Err(Error::Invalid("repeated q in interpolation data".into()));
    }
    if points.len() < bound + 1 {
        return Err(Error::Invalid(format!("{} points cannot fix a polynomial of degree {bound}", points.len())));
    }
    let (fit, extra) = points.split_at(bound + 1);
    let mut coeffs = vec![Q::zero(); bound + 1];
    for (k, &(qk, yk)) in fit.iter().enumerate() {
        // basis polynomial ∏_{m≠k} (q - q_m)/(q_k - q_m), expanded
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for (m, &(qm, _)) in fit.iter().enumerate() {
            if m == k {
                continue;
            }
            let root = Q::from_integer(BigInt::from(qm));
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &root;
            }
            basis = next;
            denom *= Q::from_integer(BigInt::from(qk as i64 - qm as i64));
        }
        let scale = Q::from_integer(BigInt::from(yk)) / denom;
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += b * &scale;
        }
    }
    let p = QPoly { coeffs };
    for &(q, y) in extra {
        if p.eval(q as i64) != Q::from_integer(BigInt::from(y)) {
            return Err(Error::Invalid(format!("value {y} at q={q} is off the degree-{bound} interpolant")));
        }
    }
    Ok(p)
}
