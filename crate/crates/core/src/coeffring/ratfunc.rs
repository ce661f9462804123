use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{LaurentPoly, Q};
use crate::error::{Error, Result};

/// Element of `ℚ(v)`, stored as `num / den` with `den` an ordinary polynomial (lowest exponent 0)
/// whose highest coefficient is 1 and which is coprime to `num`. Structural equality is equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn trim(v: &mut Vec<Q>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn is_zero_poly(v: &[Q]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Remainder of dense polynomial division (index = degree).
fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        let c = &r[dr] / lb;
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &c * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return vec![Q::zero()];
    }
    let mut q = vec![Q::zero(); r.len() - db];
    let lb = &b[db];
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        let c = &r[dr] / lb;
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &c * bc;
        }
        q[off] = c;
        r.pop();
        trim(&mut r);
    }
    q
}

fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

impl RationalFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (n, nshift) = num.to_dense();
        let (d, dshift) = den.to_dense();
        let g = poly_gcd(&n, &d);
        let (mut n, mut d) = if g.len() > 1 { (poly_div(&n, &g), poly_div(&d, &g)) } else { (n, d) };
        trim(&mut n);
        trim(&mut d);
        let lc = d.last().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c /= &lc;
            }
        }
        Self { num: LaurentPoly::from_dense(&n, nshift - dshift), den: LaurentPoly::from_dense(&d, 0) }
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from(LaurentPoly::v_pow(k))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(LaurentPoly::from_int(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn bar(&self) -> Self {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    /// Expansion in `ℚ((v^{-1}))`: coefficients of `v^0, v^{-1}, …, v^{-order}` together with
    /// any terms of positive degree.
    pub fn series_expand(&self, order: usize) -> Series {
        let mut positive = BTreeMap::new();
        let mut coeffs = vec![Q::zero(); order + 1];
        if self.is_zero() {
            return Series { positive, coeffs };
        }
        let (dtop, dlc) = self.den.leading().map(|(k, c)| (k, c.clone())).expect("denominator");
        let mut rem = self.num.clone();
        let stop = -(order as i64);
        while let Some((top, c)) = rem.leading() {
            let k = top - dtop;
            if k < stop {
                break;
            }
            let coef = c / &dlc;
            rem -= &self.den.shift(k).scale(&coef);
            if k > 0 {
                positive.insert(k, coef);
            } else {
                coeffs[(-k) as usize] = coef;
            }
        }
        Series { positive, coeffs }
    }
}

/// Truncated `v^{-1}`-adic expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    /// Terms with positive exponent, keyed by exponent.
    pub positive: BTreeMap<i64, Q>,
    /// `coeffs[k]` is the coefficient of `v^{-k}`.
    pub coeffs: Vec<Q>,
}

impl Series {
    pub fn is_natural(&self) -> bool {
        self.positive.is_empty() && self.coeffs.iter().all(|c| c.is_integer() && *c >= Q::zero())
    }
}

impl From<LaurentPoly> for RationalFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::normalized(p, LaurentPoly::one())
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: RationalFunc) -> RationalFunc {
        &self + &rhs
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &(-rhs)
    }
}

impl Sub for RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: RationalFunc) -> RationalFunc {
        &self - &rhs
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        RationalFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: RationalFunc) -> RationalFunc {
        &self * &rhs
    }
}

impl Div for &RationalFunc {
    type Output = Result<RationalFunc>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunc) -> Result<RationalFunc> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        -&self
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

impl FromStr for RationalFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        // rational coefficients use a bare `/`; the fraction bar is ` / `
        match s.split_once(" / ") {
            Some((n, d)) => RationalFunc::new(n.parse()?, d.parse()?),
            None => Ok(RationalFunc::from(s.parse::<LaurentPoly>()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn geometric() -> RationalFunc {
        RationalFunc::new(LaurentPoly::one(), LaurentPoly::from_ints([(0, 1), (-2, -1)])).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        let a = RationalFunc::new(LaurentPoly::from_ints([(0, 1), (-4, -1)]), LaurentPoly::from_ints([(0, 1), (-2, -1)]))
            .unwrap();
        assert_eq!(a, RationalFunc::from(LaurentPoly::from_ints([(0, 1), (-2, 1)])));
        let b = RationalFunc::new(LaurentPoly::from_ints([(2, 3)]), LaurentPoly::from_ints([(5, 6)])).unwrap();
        assert_eq!(b.num(), &LaurentPoly::monomial(-3, Q::new(BigInt::from(1), BigInt::from(2))));
        assert!(b.den().is_one());
    }

    #[test]
    fn series_examples() {
        let s = geometric().series_expand(4);
        assert_eq!(s.coeffs, vec![q(1), q(0), q(1), q(0), q(1)]);
        assert!(s.positive.is_empty());
        let t = RationalFunc::new(LaurentPoly::from_ints([(0, 1), (-4, -1)]), LaurentPoly::from_ints([(0, 1), (-2, -1)]))
            .unwrap()
            .series_expand(4);
        assert_eq!(t.coeffs, vec![q(1), q(0), q(1), q(0), q(0)]);
        assert_eq!(RationalFunc::zero().series_expand(3).coeffs, vec![q(0); 4]);
        let p = RationalFunc::from(LaurentPoly::from_ints([(2, 5), (0, 1)])).series_expand(1);
        assert_eq!(p.positive.get(&2), Some(&q(5)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(RationalFunc::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn field_ops() {
        let g = geometric();
        let one_minus = RationalFunc::from(LaurentPoly::from_ints([(0, 1), (-2, -1)]));
        assert_eq!(&g * &one_minus, RationalFunc::one());
        assert_eq!((&g / &g).unwrap(), RationalFunc::one());
        assert_eq!(&g - &g, RationalFunc::zero());
    }

    #[test]
    fn text_round_trip() {
        let g = geometric();
        assert_eq!(g.to_string().parse::<RationalFunc>().unwrap(), g);
        let h = RationalFunc::new(LaurentPoly::from_ints([(1, 3)]), LaurentPoly::from_ints([(0, 2), (1, 1)])).unwrap();
        assert_eq!(h.to_string().parse::<RationalFunc>().unwrap(), h);
    }
}
