use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::{LaurentPoly, RationalFunc, Q};

/// A number `a + b·√q` with rational `a`, `b`; the value of a Laurent polynomial at `v = √q`.
/// When `q` is a perfect square the `b` part is folded into `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSqrt {
    q: u64,
    a: Q,
    b: Q,
}

impl QSqrt {
    pub fn new(q: u64, a: Q, b: Q) -> Self {
        let r = q.sqrt();
        if r * r == q {
            return Self { q, a: a + b * Q::from_integer(BigInt::from(r)), b: Q::zero() };
        }
        Self { q, a, b }
    }

    pub fn rational(q: u64, a: Q) -> Self {
        Self::new(q, a, Q::zero())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rational_part(&self) -> &Q {
        &self.a
    }

    pub fn sqrt_part(&self) -> &Q {
        &self.b
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `v^k` at `v = √q`.
    pub fn v_pow(q: u64, k: i64) -> Self {
        let qq = Q::from_integer(BigInt::from(q));
        let half = k.div_euclid(2);
        let base = if half >= 0 {
            num_traits::pow(qq.clone(), half as usize)
        } else {
            Q::one() / num_traits::pow(qq.clone(), (-half) as usize)
        };
        if k.rem_euclid(2) == 0 {
            Self::new(q, base, Q::zero())
        } else {
            Self::new(q, Q::zero(), base)
        }
    }

    pub fn eval(p: &LaurentPoly, q: u64) -> Self {
        p.terms().fold(Self::rational(q, Q::zero()), |acc, (k, c)| {
            let t = Self::v_pow(q, k);
            &acc + &Self::new(q, &t.a * c, &t.b * c)
        })
    }

    /// Value of a rational function; `None` if the denominator vanishes at `√q`.
    pub fn eval_ratfunc(f: &RationalFunc, q: u64) -> Option<Self> {
        let n = Self::eval(f.num(), q);
        let d = Self::eval(f.den(), q);
        n.div(&d)
    }

    pub fn div(&self, d: &Self) -> Option<Self> {
        // (a + b s)/(c + e s) = (a + b s)(c - e s)/(c² - e² q)
        let qq = Q::from_integer(BigInt::from(self.q));
        let norm = &d.a * &d.a - &d.b * &d.b * &qq;
        if norm.is_zero() {
            return None;
        }
        let conj = Self::new(self.q, d.a.clone(), -d.b.clone());
        let top = self * &conj;
        Some(Self::new(self.q, top.a / &norm, top.b / &norm))
    }
}

impl Add for &QSqrt {
    type Output = QSqrt;
    fn add(self, rhs: &QSqrt) -> QSqrt {
        QSqrt::new(self.q, &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QSqrt {
    type Output = QSqrt;
    fn sub(self, rhs: &QSqrt) -> QSqrt {
        QSqrt::new(self.q, &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QSqrt {
    type Output = QSqrt;
    fn mul(self, rhs: &QSqrt) -> QSqrt {
        let qq = Q::from_integer(BigInt::from(self.q));
        QSqrt::new(self.q, &self.a * &rhs.a + &self.b * &rhs.b * qq, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

impl fmt::Display for QSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::q_int;

    #[test]
    fn powers_and_eval() {
        assert_eq!(QSqrt::v_pow(2, 2), QSqrt::rational(2, q_int(2)));
        assert_eq!(QSqrt::v_pow(2, -2), QSqrt::rational(2, Q::new(1.into(), 2.into())));
        assert_eq!(QSqrt::v_pow(4, 1), QSqrt::rational(4, q_int(2)));
        // 1 + v^{-2} at v = 2
        let p = LaurentPoly::from_ints([(0, 1), (-2, 1)]);
        assert_eq!(QSqrt::eval(&p, 4), QSqrt::rational(4, Q::new(5.into(), 4.into())));
        let odd = QSqrt::eval(&LaurentPoly::v_pow(3), 2);
        assert_eq!(odd.sqrt_part(), &q_int(2));
    }

    #[test]
    fn division() {
        let x = QSqrt::new(3, q_int(1), q_int(1));
        let y = QSqrt::new(3, q_int(2), q_int(-1));
        let z = &x * &y;
        assert_eq!(z.div(&y).unwrap(), x);
    }
}
