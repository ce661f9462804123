use super::{AlgebraElem, GenSym, GenWord};
use crate::coeffring::LaurentPoly;
use crate::error::{Error, Result};
use crate::periodic::{PeriodicMatrix, PeriodicVec};

/// `ρ` on one symbol as `(v-exponent, symbols in product order)`:
/// `ρ(E_i^{(m)}) = v^{m²}K_{m𝐢}F_i^{(m)}`, `ρ(F_i^{(m)}) = v^{m²}K_{-m𝐢}E_i^{(m)}`, `ρ(K_𝐚) = K_𝐚`.
fn rho_sym(s: &GenSym, n: usize) -> (i64, Vec<GenSym>) {
    match s {
        GenSym::E { i, m } => {
            let k = PeriodicVec::simple(n, *i).scaled(i64::from(*m));
            (i64::from(m * m), vec![GenSym::K(k.0), GenSym::F { i: *i, m: *m }])
        }
        GenSym::F { i, m } => {
            let k = PeriodicVec::simple(n, *i).scaled(-i64::from(*m));
            (i64::from(m * m), vec![GenSym::K(k.0), GenSym::E { i: *i, m: *m }])
        }
        GenSym::K(a) => (0, vec![GenSym::K(a.clone())]),
    }
}

/// `ρ(w)` as a scalar exponent and a word; `ρ` reverses products.
pub fn rho_word(w: &GenWord, n: usize) -> (i64, GenWord) {
    let mut exp = 0;
    let mut out = Vec::new();
    for s in w.symbols().iter().rev() {
        let (e, syms) = rho_sym(s, n);
        exp += e;
        out.extend(syms);
    }
    (exp, GenWord::new(out))
}

/// `(w·[𝐢_𝐚], y)_D = ([𝐢_𝐚], ρ(w)·y)_D`, read off as the coefficient of `[𝐢_𝐚]`.
pub fn inner_fixed(w: &GenWord, a: &PeriodicVec, y: &AlgebraElem) -> Result<LaurentPoly> {
    if a.sum() != y.level() {
        return Err(Error::LevelMismatch { expected: y.level(), found: a.sum() });
    }
    if a.n() != y.n() {
        return Err(Error::Invalid(format!("period {} against {}", a.n(), y.n())));
    }
    let (exp, rw) = rho_word(&w.reduced(y.n())?, y.n());
    let z = y.apply_word(&rw)?;
    Ok(z.coeff(&PeriodicMatrix::diagonal(a)).shift(exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idem(a: &[i64]) -> AlgebraElem {
        AlgebraElem::idempotent(&PeriodicVec(a.to_vec()), a.iter().sum()).unwrap()
    }

    fn inner_words(x: (&str, &[i64]), y: (&str, &[i64])) -> LaurentPoly {
        let wy: GenWord = y.0.parse().unwrap();
        let yy = idem(y.1).apply_word(&wy).unwrap();
        inner_fixed(&x.0.parse().unwrap(), &PeriodicVec(x.1.to_vec()), &yy).unwrap()
    }

    #[test]
    fn idempotent_norm() {
        assert_eq!(inner_words(("", &[2, 1]), ("", &[2, 1])), LaurentPoly::one());
        assert!(inner_words(("", &[2, 1]), ("", &[1, 2])).is_zero());
    }

    #[test]
    fn single_f_norms() {
        // a single point for 𝐚 = (1,1), a projective line for 𝐚 = (2,0)
        assert_eq!(inner_words(("F1", &[1, 1]), ("F1", &[1, 1])), LaurentPoly::one());
        assert_eq!(inner_words(("F1", &[2, 0]), ("F1", &[2, 0])), LaurentPoly::from_ints([(0, 1), (-2, 1)]));
    }

    #[test]
    fn symmetric_on_words() {
        let cases: [(&str, &[i64], &str, &[i64]); 4] = [
            ("E1 F1", &[1, 1], "F1 E1", &[1, 1]),
            ("E1 E2", &[1, 1], "E2 E1", &[1, 1]),
            ("F2 F1", &[2, 1, 0], "F1 F2", &[2, 1, 0]),
            ("E1^(2) F2", &[1, 2, 1], "F2 E1^(2)", &[1, 2, 1]),
        ];
        for (w1, a1, w2, a2) in cases {
            assert_eq!(inner_words((w1, a1), (w2, a2)), inner_words((w2, a2), (w1, a1)), "{w1} vs {w2}");
        }
    }

    #[test]
    fn divided_rho_matches_plain_peeling() {
        // ρ(E^{(2)}) against ρ(E)ρ(E)/[2]!
        let y = idem(&[0, 3, 1]).apply_word(&"E1 E1 F2".parse().unwrap()).unwrap();
        let a = PeriodicVec(vec![0, 3, 1]);
        let div = inner_fixed(&"E1^(2) F2".parse().unwrap(), &a, &y).unwrap();
        let plain = inner_fixed(&"E1 E1 F2".parse().unwrap(), &a, &y).unwrap();
        assert_eq!(plain, &div * &crate::coeffring::qint(2));
    }
}
