use rand::Rng;
use rayon::prelude::*;

use qschur::coeffring::{q_int, qint};
use qschur::{AlgebraElem, PeriodicMatrix, PeriodicVec};

use super::{Context, Tally};

/// A random `[A]` of level `d`: each unit lands on the diagonal or at offset `±1, ±2`.
fn random_basis(rng: &mut impl Rng, n: usize, d: i64) -> AlgebraElem {
    let mut m = PeriodicMatrix::zero(n);
    for _ in 0..d {
        let i = rng.gen_range(1..=n as i64);
        let t = if rng.gen_bool(0.5) { 0 } else { *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).expect("index in range") };
        m.add_at(i, i + t, 1);
    }
    AlgebraElem::basis(m, d)
}

/// `(K_𝐢 - K_{-𝐢})/(v - v^{-1})`, which scales `[A]` by `[𝐢·r(A)]`.
fn cartan(x: &AlgebraElem, i: usize) -> AlgebraElem {
    let simple = PeriodicVec::simple(x.n(), i);
    let mut out = AlgebraElem::zero(x.n(), x.level());
    for (m, c) in x.terms() {
        out.add_term(m.clone(), c * &qint(simple.dot(&m.row_sums())));
    }
    out
}

/// `X_i X_i X_j - (v + v^{-1}) X_i X_j X_i + X_j X_i X_i` applied to `x`.
fn serre(x: &AlgebraElem, i: usize, j: usize, raise: bool) -> qschur::Result<AlgebraElem> {
    let g = |y: &AlgebraElem, k: usize| if raise { y.mult_e(k) } else { y.mult_f(k) };
    let a = g(&g(&g(x, j), i), i);
    let b = g(&g(&g(x, i), j), i).scale(&qint(2).scale(&q_int(-1)));
    let c = g(&g(&g(x, i), i), j);
    a.add(&b)?.add(&c)
}

fn relations(x: &AlgebraElem) -> Tally {
    let mut t = Tally::default();
    let n = x.n();
    for i in 1..=n {
        for j in 1..=n {
            let Some(lhs) = t.ok(x.mult_f(j).mult_e(i).sub(&x.mult_e(i).mult_f(j)), || format!("[E{i},F{j}]")) else { continue };
            let rhs = if i == j { cartan(x, i) } else { AlgebraElem::zero(n, x.level()) };
            t.eq(&lhs, &rhs, || format!("[E{i},F{j}] on {x}"));
            let dot = PeriodicVec::simple(n, i).dot(&PeriodicVec::simple(n, j));
            if dot == 0 {
                t.eq(&x.mult_e(j).mult_e(i), &x.mult_e(i).mult_e(j), || format!("E{i}E{j} = E{j}E{i} on {x}"));
                t.eq(&x.mult_f(j).mult_f(i), &x.mult_f(i).mult_f(j), || format!("F{i}F{j} = F{j}F{i} on {x}"));
            }
            if n >= 3 && dot == -1 {
                for raise in [true, false] {
                    if let Some(s) = t.ok(serre(x, i, j, raise), || format!("Serre ({i},{j})")) {
                        t.check(s.is_empty(), || format!("Serre ({i},{j}) raise={raise} on {x}: {s}"));
                    }
                }
            }
        }
    }
    t
}

pub fn a1(ctx: &Context) -> Tally {
    let mut rng = ctx.rng(1);
    let mut xs = Vec::new();
    for k in 0..200 {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let d = rng.gen_range(1..=6);
        xs.push(random_basis(&mut rng, n, d));
    }
    // far-apart generators only exist from n = 4 on
    let far: Vec<AlgebraElem> = (0..20)
        .map(|_| {
            let d = rng.gen_range(1..=6);
            random_basis(&mut rng, 4, d)
        }).collect();
    let mut t = Tally::merge_all(xs.par_iter().map(relations).collect::<Vec<_>>());
    t.merge(Tally::merge_all(far.par_iter().map(relations).collect::<Vec<_>>()));
    t.note("200 basis elements at n = 2, 3 (D ≤ 6); pairs with i·j = 0 exist only for n ≥ 4, checked on 20 extra elements at n = 4");
    t.note("Serre relations use the sign -(v + v^{-1})");
    t
}
