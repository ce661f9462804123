use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use qschur::schur::inner_fixed;
use qschur::stab::{inner_limit, stable_inner};
use qschur::udot::f_inner;
use qschur::{AlgebraElem, FWord, GenSym, GenWord, RationalFunc, UdotElem, Weight};

use super::{Context, Tally};

fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<GenSym> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            let m = if rng.gen_bool(0.2) { 2 } else { 1 };
            if rng.gen_bool(0.5) {
                GenSym::E { i, m }
            } else {
                GenSym::F { i, m }
            }
        })
        .collect()
}

fn specializes(xw: &GenWord, yw: &GenWord, lam: &Weight) -> Tally {
    let mut t = Tally::default();
    let Some(r) = t.ok(stable_inner(xw, lam, yw, lam), || format!("stable ⟨{xw}, {yw}⟩ at λ={lam}")) else { return t };
    let b = lam.base_rep();
    for p in r.p0..r.p0 + 3 {
        let a = b.plus_const(p);
        let fixed = AlgebraElem::idempotent(&a, a.sum()).and_then(|y| y.apply_word(yw)).and_then(|y| inner_fixed(xw, &a, &y));
        if let Some(f) = t.ok(fixed, || format!("({xw}, {yw}) at {a:?}")) {
            t.eq(&r.value.u_specialize(p), &RationalFunc::from(f), || format!("⟨{xw}, {yw}⟩ λ={lam} p={p}"));
        }
    }
    t
}

pub fn a4(ctx: &Context) -> Tally {
    let mut rng = ctx.rng(4);
    let mut cases = Vec::new();
    for k in 0..50 {
        let n = 2 + k % 2;
        let lam = Weight::new((0..n).map(|_| rng.gen_range(0..=3)).collect()).expect("length n");
        let x = random_word(&mut rng, n, 4);
        let y = if rng.gen_bool(0.6) {
            let mut y = x.clone();
            y.shuffle(&mut rng);
            y
        } else {
            random_word(&mut rng, n, 4)
        };
        cases.push((GenWord::new(x), GenWord::new(y), lam));
    }
    let mut t = Tally::merge_all(cases.par_iter().map(|(x, y, l)| specializes(x, y, l)).collect::<Vec<_>>());
    t.note("50 pairs, n alternating 2 and 3, words of length ≤ 4, three consecutive p ≥ p₀ each");
    t
}

/// Every `F`-word `F_{i_1}^{(m_1)}⋯` with `Σ m_k ≤ max_tr`.
pub fn f_words(n: usize, max_tr: u32) -> Vec<FWord> {
    let mut out = vec![FWord::default()];
    let mut frontier: Vec<(Vec<(usize, u32)>, u32)> = vec![(Vec::new(), 0)];
    while let Some((w, tr)) = frontier.pop() {
        for i in 1..=n {
            for m in 1..=max_tr - tr {
                let mut u = w.clone();
                u.push((i, m));
                out.push(FWord(u.clone()));
                frontier.push((u, tr + m));
            }
        }
    }
    out.sort();
    out
}

pub fn a5(_ctx: &Context) -> Tally {
    let mut t = Tally::default();
    for (n, lams) in [(2, vec![vec![0, 0], vec![3, 0], vec![0, 5]]), (3, vec![vec![0, 0, 0], vec![2, 0, 1], vec![0, 4, 1]])] {
        let lams: Vec<Weight> = lams.into_iter().map(|l| Weight::new(l).expect("weight")).collect();
        let ws = f_words(n, 3);
        let pairs: Vec<(&FWord, &FWord)> = ws.iter().flat_map(|x| ws.iter().map(move |y| (x, y))).collect();
        let parts: Vec<Tally> = pairs
            .par_iter()
            .map(|&(x, y)| {
                let mut t = Tally::default();
                let f = f_inner(n, x, y);
                for l in &lams {
                    let xe = UdotElem::monomial(x.minus(), l.clone());
                    let ye = UdotElem::monomial(y.minus(), l.clone());
                    if let Some(v) = t.ok(inner_limit(&xe, &ye), || format!("⟨{x:?}, {y:?}⟩ at λ={l}")) {
                        t.eq(&v, &f, || format!("n={n} x={:?} y={:?} λ={l}", x.0, y.0));
                    }
                }
                t
            })
            .collect();
        t.merge(Tally::merge_all(parts));
        t.note(format!("n={n}: {} F-words with tr ≤ 3, all ordered pairs, 3 weights", ws.len()));
    }
    t
}
