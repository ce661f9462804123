use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::periodic::residue;

/// One generator `E_i^{(m)}`, `F_i^{(m)}` or `K_𝐚`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSym {
    E { i: usize, m: u32 },
    F { i: usize, m: u32 },
    K(Vec<i64>),
}

impl GenSym {
    pub fn e(i: usize) -> Self {
        GenSym::E { i, m: 1 }
    }

    pub fn f(i: usize) -> Self {
        GenSym::F { i, m: 1 }
    }

    fn reduced(&self, n: usize) -> Self {
        match self {
            GenSym::E { i, m } => GenSym::E { i: residue(*i as i64, n), m: *m },
            GenSym::F { i, m } => GenSym::F { i: residue(*i as i64, n), m: *m },
            GenSym::K(a) => GenSym::K(a.clone()),
        }
    }
}

/// A monomial in the generators, in product order: the last symbol acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenWord(pub Vec<GenSym>);

impl GenWord {
    pub fn new(syms: Vec<GenSym>) -> Self {
        Self(syms)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[GenSym] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices reduced into `1..=n`; fails on a `K` of the wrong length.
    pub fn reduced(&self, n: usize) -> Result<Self> {
        for s in &self.0 {
            if let GenSym::K(a) = s {
                if a.len() != n {
                    return Err(Error::Invalid(format!("K vector of length {} for period {n}", a.len())));
                }
            }
        }
        Ok(Self(self.0.iter().map(|s| s.reduced(n)).collect()))
    }

    /// Product `self · other`.
    pub fn concat(&self, other: &GenWord) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Total number of `E`/`F` letters counted with multiplicity.
    pub fn letter_count(&self) -> u64 {
        self.0
            .iter()
            .map(|s| match s {
                GenSym::E { m, .. } | GenSym::F { m, .. } => u64::from(*m),
                GenSym::K(_) => 0,
            })
            .sum()
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSym::E { i, m: 1 } => write!(f, "E{i}"),
            GenSym::E { i, m } => write!(f, "E{i}^({m})"),
            GenSym::F { i, m: 1 } => write!(f, "F{i}"),
            GenSym::F { i, m } => write!(f, "F{i}^({m})"),
            GenSym::K(a) => {
                let parts: Vec<String> = a.iter().map(i64::to_string).collect();
                write!(f, "K({})", parts.join(","))
            }
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GenSym {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("generator `{s}`"));
        if let Some(rest) = s.strip_prefix("K(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let a = inner.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
            return Ok(GenSym::K(a));
        }
        let (kind, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let (idx, m) = match rest.split_once("^(") {
            Some((idx, pw)) => (idx, pw.strip_suffix(')').ok_or_else(bad)?.parse::<u32>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let i: usize = idx.parse().map_err(|_| bad())?;
        if m == 0 || i == 0 {
            return Err(bad());
        }
        match kind {
            "E" => Ok(GenSym::E { i, m }),
            "F" => Ok(GenSym::F { i, m }),
            _ => Err(bad()),
        }
    }
}

impl FromStr for GenWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(GenWord::empty());
        }
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(GenWord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trip() {
        let w: GenWord = "E1^(2) F2 K(1,0,-1)".parse().unwrap();
        assert_eq!(w.symbols(), &[GenSym::E { i: 1, m: 2 }, GenSym::f(2), GenSym::K(vec![1, 0, -1])]);
        assert_eq!(w.to_string().parse::<GenWord>().unwrap(), w);
        assert_eq!(w.letter_count(), 3);
        assert_eq!("1".parse::<GenWord>().unwrap(), GenWord::empty());
    }

    #[test]
    fn grammar_rejects() {
        for s in ["E0", "G1", "E1^(0)", "K(1,x)", "E", "F2^(3"] {
            assert!(s.parse::<GenWord>().is_err(), "{s}");
        }
    }

    #[test]
    fn reduction() {
        let w: GenWord = "E4 F3".parse().unwrap();
        assert_eq!(w.reduced(3).unwrap(), "E1 F3".parse().unwrap());
        assert!("K(1,0)".parse::<GenWord>().unwrap().reduced(3).is_err());
    }
}
