use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{LaurentPoly, RationalFunc};
use crate::error::{Error, Result};

/// Polynomial in `u` with coefficients in `ℚ(v)`; `u` stands for `v^{-p}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UPoly {
    coeffs: BTreeMap<u32, RationalFunc>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RationalFunc::one())
    }

    pub fn constant(c: RationalFunc) -> Self {
        Self::term(0, c)
    }

    pub fn term(deg: u32, c: RationalFunc) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c);
        p
    }

    pub fn add_term(&mut self, deg: u32, c: RationalFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&deg) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(deg, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: u32) -> RationalFunc {
        self.coeffs.get(&deg).cloned().unwrap_or_else(RationalFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &RationalFunc)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &RationalFunc) -> Self {
        let mut out = Self::zero();
        for (k, g) in &self.coeffs {
            out.add_term(*k, g * c);
        }
        out
    }

    pub fn scale_laurent(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, g) in &self.coeffs {
            out.add_term(*k, g.scale_laurent(c));
        }
        out
    }

    /// Multiply by `u^k`.
    pub fn shift_u(&self, k: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect() }
    }

    /// Substitute `u = v^{-p}`.
    pub fn u_specialize(&self, p: i64) -> RationalFunc {
        self.coeffs
            .iter()
            .fold(RationalFunc::zero(), |acc, (k, g)| &acc + &g.scale_laurent(&LaurentPoly::v_pow(-p * i64::from(*k))))
    }

    /// The constant term, which is the `p → ∞` limit in `ℚ((v^{-1}))`.
    pub fn u_limit(&self) -> RationalFunc {
        self.coeff(0)
    }
}

impl From<RationalFunc> for UPoly {
    fn from(c: RationalFunc) -> Self {
        Self::constant(c)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, g) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({g})")?,
                1 => write!(f, "({g})*u")?,
                _ => write!(f, "({g})*u^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for UPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(UPoly::zero());
        }
        let mut out = UPoly::zero();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
            let close = body.find(')').ok_or_else(|| Error::Parse(format!("unbalanced `(` in `{s}`")))?;
            let g: RationalFunc = body[..close].parse()?;
            let mut tail = body[close + 1..].trim_start();
            let mut deg = 0u32;
            if let Some(t) = tail.strip_prefix("*u") {
                deg = 1;
                tail = t;
                if let Some(t) = tail.strip_prefix('^') {
                    let end = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
                    deg = t[..end].parse().map_err(|_| Error::Parse(format!("bad u exponent in `{s}`")))?;
                    tail = &t[end..];
                }
            }
            out.add_term(deg, g);
            rest = tail.trim_start();
            if let Some(t) = rest.strip_prefix('+') {
                rest = t.trim_start();
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("unexpected `{rest}`")));
            }
        }
        Ok(out)
    }
}
