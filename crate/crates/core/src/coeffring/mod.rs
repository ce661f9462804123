//! Exact coefficient rings: `ℤ[v,v^{-1}]` (with rational coefficients), `ℚ(v)` and `ℚ(v)[u]`.

mod laurent;
mod qsqrt;
mod ratfunc;
mod upoly;

pub use laurent::{gauss_binomial, qint, quantum_factorial, quantum_integer, unbalanced_integer, LaurentPoly};
pub use qsqrt::QSqrt;
pub use ratfunc::{RationalFunc, Series};
pub use upoly::UPoly;

use num_bigint::BigInt;

pub type Q = num_rational::BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub(crate) fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            (b != BigInt::from(0)).then(|| Q::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn series_expand(f: &RationalFunc, order: usize) -> Series {
    f.series_expand(order)
}

pub fn bar(f: &LaurentPoly) -> LaurentPoly {
    f.bar()
}

pub fn u_specialize(g: &UPoly, p: i64) -> RationalFunc {
    g.u_specialize(p)
}

pub fn u_limit(g: &UPoly) -> RationalFunc {
    g.u_limit()
}
