use std::path::Path;

use qschur::udot::MonomialJson;
use qschur::{GenWord, PeriodicMatrix};

use crate::{CliError, CliResult};

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// `path` names a file when one exists; otherwise the argument itself is the content.
pub fn read_arg(arg: &str) -> CliResult<String> {
    let p = Path::new(arg);
    if p.is_file() {
        read(p)
    } else {
        Ok(arg.to_string())
    }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// JSON `{"n":…,"diag":…,"offdiag":…}` or the text form `diag(…) + x*E^{i,j} + …`.
pub fn parse_matrix(text: &str) -> CliResult<PeriodicMatrix> {
    if is_json(text) {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("matrix JSON: {e}")))
    } else {
        text.trim().parse().map_err(|e| CliError::Usage(format!("matrix: {e}")))
    }
}

/// A word with an optional weight: JSON `{"word":[…],"weight":[…]}` or a whitespace-separated
/// text word such as `E1^(2) F2 K(1,-1)`.
pub fn parse_word(text: &str) -> CliResult<(GenWord, Option<Vec<i64>>)> {
    if is_json(text) {
        let j: MonomialJson = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("word JSON: {e}")))?;
        let (w, _) = j.to_parts()?;
        return Ok((w, Some(j.weight)));
    }
    let mut syms = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut col = 0;
        for tok in line.split_whitespace() {
            col += line[col..].find(tok).expect("token comes from this line");
            let w: GenWord = tok
                .parse()
                .map_err(|_| CliError::Usage(format!("line {}, column {}: bad symbol `{tok}`", line_no + 1, col + 1)))?;
            syms.extend(w.symbols().iter().cloned());
            col += tok.len();
        }
    }
    Ok((GenWord::new(syms), None))
}

pub fn parse_vec(s: &str) -> CliResult<Vec<i64>> {
    s.trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad integer `{x}` in `{s}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_word_errors_carry_position() {
        let err = parse_word("E1 F2\nF1 X3 E2").unwrap_err().to_string();
        assert!(err.contains("line 2, column 4"), "{err}");
        let (w, lam) = parse_word("E1^(2)  F2 # comment\nK(1,-1)").unwrap();
        assert_eq!(w.to_string(), "E1^(2) F2 K(1,-1)");
        assert!(lam.is_none());
    }

    #[test]
    fn json_word_and_matrix() {
        let (w, lam) = parse_word(r#"{"word":[["E",1,2],["F",2,1]],"weight":[2,0]}"#).unwrap();
        assert_eq!(w.to_string(), "E1^(2) F2");
        assert_eq!(lam, Some(vec![2, 0]));
        let m = parse_matrix(r#"{"n":2,"diag":[0,1],"offdiag":[[1,2,1]]}"#).unwrap();
        assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
        let err = parse_matrix("{\"n\":2,\n\"diag\":[0,}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vec("(2, 0,-1)").unwrap(), vec![2, 0, -1]);
        assert!(parse_vec("2,a").is_err());
    }
}
