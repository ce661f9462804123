use rayon::prelude::*;

use qschur::coeffring::unbalanced_integer;
use qschur::fqoracle::{interp_q_poly, Oracle};
use qschur::schur::{e_terms, f_terms, inner_fixed};
use qschur::{AlgebraElem, GenWord, LaurentPoly, PeriodicMatrix, PeriodicVec, QSqrt};

use super::{level_weights, matrices_with_mass, Context, Tally};

fn int(q: u64, k: u64) -> QSqrt {
    QSqrt::eval(&LaurentPoly::from_int(k as i64), q)
}

fn oracle(ctx: &Context, q: u64) -> Oracle {
    Oracle { budget: ctx.cfg.budget, ..Oracle::new(q) }
}

/// `η^C_{gen,A}` for every `C` in the support of `E_i[A]` (or `F_i[A]`), against the formula
/// coefficient rescaled to the `e`-basis; plus `Σ_C η^C |X_C| = |X_gen| |X_A|` so no term is missing.
fn generator_constants(o: &Oracle, a: &PeriodicMatrix, i: i64, raise: bool) -> Tally {
    let mut t = Tally::default();
    let q = o.q;
    let simple = PeriodicVec::simple(a.n(), i as usize);
    let target = if raise { a.row_sums().add(&simple) } else { a.row_sums().sub(&simple) };
    if !target.is_nonneg() {
        return t;
    }
    let gen = if raise { PeriodicMatrix::e_matrix(&target, i as usize) } else { PeriodicMatrix::f_matrix(&target, i as usize) };
    let terms = if raise { e_terms(a, i) } else { f_terms(a, i) };
    let mut weighted = 0u64;
    for (c, m) in &terms {
        let Some(eta) = t.ok(o.structure_const(&gen, a, m), || format!("η for {gen} · {a} → {m}")) else { continue };
        let scaled = c.shift(gen.d_stat() + a.d_stat() - m.d_stat());
        t.eq(&QSqrt::eval(&scaled, q), &int(q, eta), || format!("q={q} {gen} · {a} at {m}"));
        if let Some(r) = t.ok(o.count(m), || format!("|X| for {m}")) {
            weighted += eta * r.count;
        }
    }
    if let (Some(g), Some(x)) = (t.ok(o.count(&gen), || format!("|X| for {gen}")), t.ok(o.count(a), || format!("|X| for {a}"))) {
        t.eq(&weighted, &(g.count * x.count), || format!("q={q} missing terms in {gen} · {a}"));
    }
    t
}

pub fn a2(ctx: &Context) -> Tally {
    let qs: Vec<u64> = ctx.cfg.primes.iter().copied().filter(|q| [2, 3].contains(q)).collect();
    let mats: Vec<PeriodicMatrix> = (1..=3).flat_map(|d| matrices_with_mass(2, d, 3)).collect();
    let jobs: Vec<(u64, &PeriodicMatrix, i64, bool)> = qs
        .iter()
        .flat_map(|&q| mats.iter().flat_map(move |a| (1..=2).flat_map(move |i| [true, false].map(|r| (q, a, i, r)))))
        .collect();
    let mut t = Tally::merge_all(
        jobs.par_iter().map(|&(q, a, i, raise)| generator_constants(&oracle(ctx, q), a, i, raise)).collect::<Vec<_>>(),
    );
    t.note(format!("{} matrices with n = 2, D ≤ 3, off-diagonal mass ≤ 3; q ∈ {qs:?}", mats.len()));
    t
}

fn f_norms(ctx: &Context, n: usize, d: i64, qs: &[u64]) -> Tally {
    let mut t = Tally::default();
    for a in level_weights(n, d) {
        for i in 1..=n {
            let w: GenWord = format!("F{i}").parse().expect("letter");
            let Some(y) = t.ok(AlgebraElem::idempotent(&a, d).and_then(|x| x.apply_word(&w)), || format!("F{i} on {a:?}")) else {
                continue;
            };
            let Some(norm) = t.ok(inner_fixed(&w, &a, &y), || format!("(F{i}, F{i}) at {a:?}")) else { continue };
            let ai = a.values()[i - 1];
            t.eq(&norm, &unbalanced_integer(ai), || format!("(F{i}[𝐢_{a:?}], F{i}[𝐢_{a:?}])"));
            for (m, c) in y.terms() {
                for &q in qs {
                    let Some(direct) = t.ok(oracle(ctx, q).inner_direct(m, m), || format!("inner_direct {m}")) else { continue };
                    let cq = QSqrt::eval(c, q);
                    t.eq(&QSqrt::eval(&norm, q), &(&(&cq * &cq) * &direct), || format!("q={q} F{i} at {a:?}"));
                }
            }
        }
    }
    t
}

/// `|X_{Aᵗ}|` over `q = 2, 3, 4, 5, 7` is a polynomial of degree `d_{Aᵗ}` with leading coefficient 1.
fn fiber_polynomial(ctx: &Context, a: &PeriodicMatrix) -> Tally {
    let mut t = Tally::default();
    let at = a.transpose();
    let deg = at.d_stat() as usize;
    let mut pts = Vec::new();
    for q in [2u64, 3, 4, 5, 7] {
        if let Some(r) = t.ok(oracle(ctx, q).count(&at), || format!("q={q} |X| for {at}")) {
            pts.push((q, r.count));
        }
    }
    if pts.len() < deg + 2 {
        return t;
    }
    if let Some(p) = t.ok(interp_q_poly(&pts, deg.max(1)), || format!("interpolating {at}")) {
        t.check(p.degree() == Some(deg) && p.is_integral(), || format!("{at}: {p} should have degree {deg}"));
        t.check(p.leading().is_some_and(|c| *c == qschur::Q::from_integer(1.into())), || format!("{at}: leading coefficient of {p}"));
    }
    t
}

pub fn a3(ctx: &Context) -> Tally {
    let qs = [2u64, 3, 4];
    let mut jobs: Vec<(usize, i64)> = (1..=4).map(|d| (2, d)).collect();
    jobs.extend((1..=2).map(|d| (3, d)));
    let mut t = Tally::merge_all(jobs.par_iter().map(|&(n, d)| f_norms(ctx, n, d, &qs)).collect::<Vec<_>>());
    let mats: Vec<PeriodicMatrix> = (1..=2).flat_map(|d| matrices_with_mass(2, d, 2)).filter(|m| m.transpose().d_stat() <= 3).collect();
    t.merge(Tally::merge_all(mats.par_iter().map(|a| fiber_polynomial(ctx, a)).collect::<Vec<_>>()));
    t.note(format!("F-norms for n = 2 (D ≤ 4) and n = 3 (D ≤ 2) at q ∈ {qs:?}; fiber polynomials for {} matrices", mats.len()));
    t
}

/// `∏_i ∏_{j=1}^{a_i} (1 - v^{-2j})`.
fn bracket_factorial(a: &PeriodicVec) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for &x in a.values() {
        for j in 1..=x {
            p = &p * &LaurentPoly::from_ints([(0, 1), (-2 * j, -1)]);
        }
    }
    p
}

fn transpose_reverses(o: &Oracle, a: &PeriodicMatrix, b: &PeriodicMatrix, c: &PeriodicMatrix, t: &mut Tally) -> Option<bool> {
    let q = o.q;
    let eta = t.ok(o.structure_const(a, b, c), || format!("η for {a} · {b} → {c}"))?;
    let (at, bt, ct) = (a.transpose(), b.transpose(), c.transpose());
    let eta_t = t.ok(o.structure_const(&bt, &at, &ct), || format!("η for {bt} · {at} → {ct}"))?;
    let lhs = &int(q, eta) * &QSqrt::v_pow(q, c.d_stat() - a.d_stat() - b.d_stat());
    let rhs = &int(q, eta_t) * &QSqrt::v_pow(q, ct.d_stat() - at.d_stat() - bt.d_stat());
    t.eq(&lhs, &rhs, || format!("[{a}][{b}] at [{c}] vs its transpose"));
    Some(eta != 0)
}

pub fn a10(ctx: &Context) -> Tally {
    let q = 2;
    let o = oracle(ctx, q);
    let mut t = Tally::default();
    let mats = matrices_with_mass(2, 2, 2);
    let mut nonzero = 0;
    'outer: for a in &mats {
        for b in mats.iter().filter(|b| b.row_sums() == a.col_sums()) {
            for c in mats.iter().filter(|c| c.row_sums() == a.row_sums() && c.col_sums() == b.col_sums()) {
                if transpose_reverses(&o, a, b, c, &mut t) == Some(true) {
                    nonzero += 1;
                    if nonzero == 20 {
                        break 'outer;
                    }
                }
            }
        }
    }
    t.check(nonzero == 20, || format!("only {nonzero} triples with a nonzero product"));
    // v^{Σb²}([[𝐛]]!)^{-1}(f,f)_D = v^{Σa²}([[𝐚]]!)^{-1}(f,f)^t_D for f = [A] ∈ [𝐢_𝐚]𝔄_D[𝐢_𝐛]
    // when 𝐛 is a permutation of 𝐚 both sides carry the same factors, so those instances are skipped
    let sorted = |v: PeriodicVec| {
        let mut x = v.values().to_vec();
        x.sort_unstable();
        x
    };
    let tiny: Vec<&PeriodicMatrix> = mats.iter().filter(|m| sorted(m.row_sums()) != sorted(m.col_sums())).take(5).collect();
    let mut plain_form = 0;
    let shown: Vec<String> = tiny.iter().map(|m| format!("{m} (𝐚={:?}, 𝐛={:?})", m.row_sums().values(), m.col_sums().values())).collect();
    t.note(format!("transposed-form instances at q = {q}: {}", shown.join("; ")));
    for a in tiny {
        let (ra, cb) = (a.row_sums(), a.col_sums());
        let (Some(f), Some(ft)) = (t.ok(o.inner_direct(a, a), || format!("(,) at {a}")), t.ok(o.inner_direct(&a.transpose(), &a.transpose()), || format!("(,)^t at {a}")))
        else {
            continue;
        };
        let fa = QSqrt::eval(&bracket_factorial(&ra), q);
        let fb = QSqrt::eval(&bracket_factorial(&cb), q);
        let lhs = (&QSqrt::v_pow(q, cb.sum_squares()) * &f).div(&fb).expect("nonzero factorial");
        let rhs = (&QSqrt::v_pow(q, ra.sum_squares()) * &ft).div(&fa).expect("nonzero factorial");
        t.eq(&lhs, &rhs, || format!("transposed-form relation at {a} (𝐚={:?}, 𝐛={:?})", ra.values(), cb.values()));
        if f.div(&fb) == ft.div(&fa) {
            plain_form += 1;
        }
    }
    t.note(format!("without the factors v^{{Σa²}}, v^{{Σb²}} the relation ([[𝐛]]!)^{{-1}}(f,f) = ([[𝐚]]!)^{{-1}}(f,f)^t holds on {plain_form} of 5 instances"));
    t
}
