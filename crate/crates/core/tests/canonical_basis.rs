use std::collections::BTreeSet;

use qschur::canon::{monomial_for, positivity_report, Canonicalizer, Side};
use qschur::coeffring::{LaurentPoly, QSqrt};
use qschur::fqoracle::Oracle;
use qschur::schur::inner_fixed;
use qschur::{AlgebraElem, GenWord, PeriodicMatrix, PeriodicVec, UdotElem, Weight};

fn weights(n: usize, d: i64) -> Vec<PeriodicVec> {
    fn rec(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<PeriodicVec>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(PeriodicVec(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[k] = x;
            rec(k + 1, left - x, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// Every matrix in the support of short words applied to idempotents.
fn reachable(n: usize, d: i64, len: usize) -> BTreeSet<PeriodicMatrix> {
    let mut words: Vec<String> = vec![String::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &words {
            for i in 1..=n {
                next.push(format!("{w} E{i}"));
                next.push(format!("{w} F{i}"));
            }
        }
        words.extend(next);
    }
    words.sort();
    words.dedup();
    let mut set = BTreeSet::new();
    for a in weights(n, d) {
        let x = AlgebraElem::idempotent(&a, d).unwrap();
        for w in &words {
            let y = x.apply_word(&w.parse::<GenWord>().unwrap()).unwrap();
            set.extend(y.terms().map(|(m, _)| m.clone()));
        }
    }
    set
}

fn check_family(n: usize, d: i64, len: usize) -> usize {
    let canon = Canonicalizer::new();
    let mats: Vec<PeriodicMatrix> = reachable(n, d, len).into_iter().filter(|m| m.is_aperiodic()).collect();
    let mut done = Vec::new();
    for a in &mats {
        let c = canon.canonical(a).unwrap_or_else(|e| panic!("{a}: {e}"));
        c.check_unitriangular().unwrap();
        assert!(c.has_positive_expansion(), "{a}: {:?}", c.expansion);
        assert!(c.presentation_is_bar_invariant());
        assert_eq!(c.reevaluate().unwrap(), c.elem());
        done.push(c);
    }
    // almost orthonormality among elements with the same row and column sums
    for x in &done {
        for y in &done {
            if x.target.row_sums() != y.target.row_sums() || x.weight != y.weight {
                continue;
            }
            let v = x.presentation.iter().fold(LaurentPoly::zero(), |acc, (w, c)| {
                &acc + &(c * &inner_fixed(w, &x.weight, &y.elem()).unwrap())
            });
            let rest = if x.target == y.target { &v - &LaurentPoly::one() } else { v };
            assert!(rest.in_strict_negative_integral() || rest.is_zero(), "({}, {}) = {rest}", x.target, y.target);
        }
    }
    done.len()
}

#[test]
fn canonical_elements_n2() {
    assert!(check_family(2, 2, 3) >= 8);
    assert!(check_family(2, 3, 3) >= 10);
}

#[test]
fn canonical_elements_n3() {
    assert!(check_family(3, 2, 2) >= 10);
}

#[test]
fn norms_match_the_point_count() {
    // ({A},{A}) at v=√q through the counting oracle, against the peeled value
    let o = Oracle::new(2);
    let canon = Canonicalizer::new();
    for a in reachable(2, 2, 2).into_iter().filter(|m| m.is_aperiodic()) {
        let c = canon.canonical(&a).unwrap();
        let mut direct = QSqrt::eval(&LaurentPoly::zero(), 2);
        for (b, p) in &c.expansion {
            let pv = QSqrt::eval(p, 2);
            direct = &direct + &(&(&pv * &pv) * &o.inner_direct(b, b).unwrap());
        }
        let peeled = c.presentation.iter().fold(LaurentPoly::zero(), |acc, (w, k)| {
            &acc + &(k * &inner_fixed(w, &c.weight, &c.elem()).unwrap())
        });
        assert_eq!(QSqrt::eval(&peeled, 2), direct, "{a}");
    }
}

#[test]
fn presentations_stabilize() {
    let canon = Canonicalizer::new();
    let cases = [
        PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]),
        PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1)]),
        PeriodicMatrix::from_entries(2, &[1, 0], &[(2, 1, 1), (1, 2, 1)]),
        PeriodicMatrix::from_entries(3, &[0, 1, 0], &[(1, 3, 1), (3, 2, 1)]),
    ];
    for a in cases {
        let s = canon.stable(&a, 4).unwrap_or_else(|e| panic!("{a}: {e}"));
        let next = canon.canonical(&s.base.shift_p(1)).unwrap();
        assert_eq!(next.presentation, s.presentation);
    }
}

#[test]
fn b_prime_family_is_stable_from_the_start() {
    let b = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]);
    let s = Canonicalizer::new().stable(&b, 4).unwrap();
    assert_eq!(s.level, 2);
    assert_eq!(s.presentation.keys().map(ToString::to_string).collect::<Vec<_>>(), vec!["E1 E2"]);
}

#[test]
fn lower_words_mirror_upper_words() {
    let u = PeriodicMatrix::from_entries(3, &[1, 0, 1], &[(1, 3, 1), (2, 3, 1)]);
    let up = monomial_for(&u, Side::Upper, 10_000).unwrap();
    let low = monomial_for(&u.transpose(), Side::Lower, 10_000).unwrap();
    assert_eq!(low.elem.psi_transpose().terms().count(), up.elem.terms().count());
    for (m, c) in low.elem.terms() {
        assert_eq!(up.elem.coeff(&m.transpose()), *c);
    }
}

#[test]
fn positivity_examples() {
    let lam = Weight::new(vec![2, 0]).unwrap();
    let one = UdotElem::idempotent(&lam);
    let r = positivity_report(&one, &one, 5).unwrap();
    assert!(r.positive);
    assert_eq!(r.coeffs, ["1", "0", "0", "0", "0", "0"]);
    let f = UdotElem::monomial("F1".parse().unwrap(), lam);
    let r = positivity_report(&f, &f, 5).unwrap();
    assert!(r.positive);
    assert_eq!(r.coeffs, ["1", "0", "1", "0", "1", "0"]);
    let neg = f.scale(&qschur::RationalFunc::from_int(-1));
    assert!(!positivity_report(&neg, &f, 3).unwrap().positive);
}

#[test]
fn stable_canonical_pairs_are_positive() {
    let canon = Canonicalizer::new();
    let mats: Vec<PeriodicMatrix> = reachable(2, 2, 2).into_iter().filter(|m| m.is_aperiodic()).collect();
    let fams: Vec<_> = mats.iter().filter_map(|a| canon.stable(a, 4).ok()).collect();
    assert!(fams.len() >= 6);
    for x in &fams {
        for y in &fams {
            let r = positivity_report(&x.udot().unwrap(), &y.udot().unwrap(), 8).unwrap();
            assert!(r.positive, "{} / {}: {}", x.base, y.base, r.value);
        }
    }
}
