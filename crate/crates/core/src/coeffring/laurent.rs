use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{parse_rational, Q};
use crate::error::{Error, Result};

/// Laurent polynomial in `v` with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn monomial(exp: i64, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^k`
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(k, Q::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, Q::from_integer(BigInt::from(c)))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    /// Build from integer coefficients `(exponent, coefficient)`.
    pub fn from_ints<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        Self::from_terms(it.into_iter().map(|(k, c)| (k, Q::from_integer(BigInt::from(c)))))
    }

    pub fn add_term(&mut self, exp: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Q)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading(&self) -> Option<(i64, &Q)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// `v ↦ v^{-1}`
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_natural(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// True when the polynomial lies in `v^{-1}ℤ[v^{-1}]`.
    pub fn in_strict_negative_integral(&self) -> bool {
        self.is_integral() && self.max_deg().is_none_or(|d| d < 0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` when `d` does not divide `self` in `ℚ[v,v^{-1}]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dtop, dlc) = d.leading()?;
        let dlow = d.min_deg()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let low = match self.min_deg() {
            None => return Some(quot),
            Some(l) => l,
        };
        while let Some((top, c)) = rem.leading() {
            let k = top - dtop;
            if k + dlow < low {
                return None;
            }
            let coef = c / dlc;
            let step = d.shift(k).scale(&coef);
            rem -= &step;
            quot.add_term(k, coef);
        }
        Some(quot)
    }

    /// Shift so the lowest exponent is zero, returning the dense coefficient vector
    /// (index = degree) and the shift applied.
    pub(crate) fn to_dense(&self) -> (Vec<Q>, i64) {
        let lo = self.min_deg().unwrap_or(0);
        let hi = self.max_deg().unwrap_or(0);
        let mut v = vec![Q::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            v[(k - lo) as usize] = c.clone();
        }
        (v, lo)
    }

    pub(crate) fn from_dense(v: &[Q], shift: i64) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*v^{k}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".to_string()));
        }
        let mut p = LaurentPoly::zero();
        for raw in s.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (coef, exp) = parse_term(term)?;
            p.add_term(exp, coef);
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(Q, i64)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    let (cpart, vpart) = match term.find('v') {
        None => (term, None),
        Some(pos) => {
            let c = term[..pos].trim().trim_end_matches('*').trim();
            (c, Some(term[pos + 1..].trim()))
        }
    };
    let coef = match cpart {
        "" => Q::one(),
        "-" => -Q::one(),
        c => parse_rational(c).ok_or_else(bad)?,
    };
    let exp = match vpart {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(bad)?.trim();
            let e = e.trim_start_matches('(').trim_end_matches(')');
            e.parse::<i64>().map_err(|_| bad())?
        }
    };
    Ok((coef, exp))
}

/// Balanced quantum integer `[m] = (v^m - v^{-m})/(v - v^{-1})`, for any integer `m`.
pub fn qint(m: i64) -> LaurentPoly {
    let sign: i64 = if m < 0 { -1 } else { 1 };
    let m = m.abs();
    LaurentPoly::from_ints((0..m).map(|j| (m - 1 - 2 * j, sign)))
}

pub fn quantum_integer(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::NegativeInput(m));
    }
    Ok(qint(m))
}

pub fn quantum_factorial(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::NegativeInput(m));
    }
    Ok((1..=m).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j)))
}

pub fn gauss_binomial(m: i64, k: i64) -> Result<LaurentPoly> {
    if m < 0 || k < 0 {
        return Err(Error::NegativeInput(m.min(k)));
    }
    if k > m {
        return Err(Error::OutOfRange(format!("binomial [{m} choose {k}]")));
    }
    let num = quantum_factorial(m)?;
    let den = &quantum_factorial(k)? * &quantum_factorial(m - k)?;
    num.div_exact(&den).ok_or(Error::NonIntegralDivision)
}

/// `(1 - v^{-2m})/(1 - v^{-2}) = 1 + v^{-2} + … + v^{-2(m-1)}`, the unbalanced form, equal to
/// `v^{-(m-1)}[m]`.
pub fn unbalanced_integer(m: i64) -> LaurentPoly {
    if m == 0 {
        return LaurentPoly::zero();
    }
    if m < 0 {
        return -unbalanced_integer(-m).shift(2 * m);
    }
    LaurentPoly::from_ints((0..m).map(|j| (-2 * j, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_examples() {
        let f = LaurentPoly::from_ints([(2, 1), (0, 3)]);
        assert_eq!(f.bar(), LaurentPoly::from_ints([(-2, 1), (0, 3)]));
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(quantum_integer(2).unwrap(), LaurentPoly::from_ints([(1, 1), (-1, 1)]));
        assert!(quantum_integer(0).unwrap().is_zero());
        assert!(quantum_factorial(0).unwrap().is_one());
        assert!(quantum_integer(-1).is_err());
        assert_eq!(
            gauss_binomial(4, 2).unwrap(),
            LaurentPoly::from_ints([(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn unbalanced_matches_balanced() {
        for m in 1..6 {
            assert_eq!(unbalanced_integer(m), qint(m).shift(-(m - 1)));
        }
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_ints([(1, 1), (-1, 1)]);
        let b = LaurentPoly::from_ints([(3, 2), (0, -1)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(LaurentPoly::from_ints([(1, 1)]).div_exact(&a).is_none());
    }

    #[test]
    fn text_round_trip() {
        let p = LaurentPoly::from_ints([(3, -2), (0, 5), (-4, 1)]);
        let s = p.to_string();
        assert_eq!(s, "-2*v^3 + 5*v^0 + 1*v^-4");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("v^2 + 3".parse::<LaurentPoly>().unwrap(), LaurentPoly::from_ints([(2, 1), (0, 3)]));
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
    }
}
