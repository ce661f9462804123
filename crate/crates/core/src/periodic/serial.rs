use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PeriodicMatrix;
use crate::error::{Error, Result};

/// Wire form `{"n":…, "diag":[…], "offdiag":[[i,t,value],…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub diag: Vec<i64>,
    #[serde(default)]
    pub offdiag: Vec<(usize, i64, i64)>,
}

impl From<&PeriodicMatrix> for MatrixJson {
    fn from(m: &PeriodicMatrix) -> Self {
        Self { n: m.n(), diag: m.diag().to_vec(), offdiag: m.offdiag().collect() }
    }
}

impl TryFrom<MatrixJson> for PeriodicMatrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Self> {
        PeriodicMatrix::from_parts(j.n, j.diag, j.offdiag)
    }
}

impl Serialize for PeriodicMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodicMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        PeriodicMatrix::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag().iter().map(i64::to_string).collect();
        write!(f, "diag({})", d.join(","))?;
        for (i, t, x) in self.offdiag() {
            write!(f, " + {x}*E^{{{i},{}}}", i as i64 + t)?;
        }
        Ok(())
    }
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("matrix term `{s}`"))
}

impl FromStr for PeriodicMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(" + ");
        let head = parts.next().ok_or_else(|| bad(s))?.trim();
        let inner = head.strip_prefix("diag(").and_then(|h| h.strip_suffix(')')).ok_or_else(|| bad(head))?;
        let diag = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| bad(head)))
            .collect::<Result<Vec<_>>>()?;
        let n = diag.len();
        if n == 0 {
            return Err(bad(head));
        }
        let mut m = PeriodicMatrix::diagonal(&super::PeriodicVec(diag));
        for term in parts {
            let term = term.trim();
            let (x, e) = term.split_once("*E^{").ok_or_else(|| bad(term))?;
            let (ij, rest) = e.split_once('}').ok_or_else(|| bad(term))?;
            if !rest.is_empty() {
                return Err(bad(term));
            }
            let (i, j) = ij.split_once(',').ok_or_else(|| bad(term))?;
            let x: i64 = x.trim().parse().map_err(|_| bad(term))?;
            let i: i64 = i.trim().parse().map_err(|_| bad(term))?;
            let j: i64 = j.trim().parse().map_err(|_| bad(term))?;
            m.add_at(i, j, x);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_round_trip() {
        let a = PeriodicMatrix::from_entries(3, &[1, 0, 2], &[(1, 3, 2), (2, 1, 1), (3, 7, 1)]);
        let s = a.to_string();
        assert_eq!(s.parse::<PeriodicMatrix>().unwrap(), a);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<PeriodicMatrix>(&j).unwrap(), a);
        let raw = r#"{"n":2,"diag":[0,1],"offdiag":[[1,1,1]]}"#;
        let b: PeriodicMatrix = serde_json::from_str(raw).unwrap();
        assert_eq!(b, PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 2, 1)]));
    }

    #[test]
    fn rejects_garbage() {
        assert!("diag()".parse::<PeriodicMatrix>().is_err());
        assert!("diag(1,2) + E^{1,2}".parse::<PeriodicMatrix>().is_err());
        assert!(serde_json::from_str::<PeriodicMatrix>(r#"{"n":2,"diag":[0],"offdiag":[]}"#).is_err());
    }
}
