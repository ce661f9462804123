use std::collections::BTreeMap;

use rayon::prelude::*;

use qschur::canon::{positivity_report, CanonicalElem};
use qschur::schur::inner_fixed;
use qschur::{GenWord, LaurentPoly, PeriodicMatrix, UdotElem, Weight};

use super::{Context, Tally};

fn computed(ctx: &Context, t: &mut Tally) -> Vec<CanonicalElem> {
    let mut out = Vec::new();
    for (a, c) in ctx.a6_family() {
        match c {
            Ok(c) => out.push(c.clone()),
            Err(e) => {
                t.checked += 1;
                t.failures.push(format!("{{{a}}}: {e}"));
            }
        }
    }
    out
}

pub fn a6(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    let family = computed(ctx, &mut t);
    for c in &family {
        let a = &c.target;
        t.check(c.check_unitriangular().is_ok(), || format!("{{{a}}} is not unitriangular: {:?}", c.expansion));
        t.check(c.has_positive_expansion(), || format!("{{{a}}} has a negative coefficient: {:?}", c.expansion));
        t.check(c.presentation_is_bar_invariant(), || format!("{{{a}}} presentation is not bar invariant"));
        t.check(c.reevaluate().is_ok_and(|x| x == c.elem()), || format!("{{{a}}} presentation does not reproduce the expansion"));
    }
    let b_prime = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]);
    let a_per = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
    let want = BTreeMap::from([(b_prime.clone(), LaurentPoly::one()), (a_per, LaurentPoly::v_pow(-1))]);
    match family.iter().find(|c| c.target == b_prime) {
        Some(c) => t.check(c.expansion == want, || format!("{{B′}} = {:?}", c.expansion)),
        None => t.check(false, || "{B′} missing from the family".into()),
    }
    t.note(format!("{} aperiodic matrices, n = 2, off-diagonal mass ≤ 3, D in {:?}", ctx.a6_family().len(), ctx.cfg.levels.bounds()));
    t
}

pub fn a7(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    let family = computed(ctx, &mut t);
    let parts: Vec<Tally> = family
        .par_iter()
        .map(|c| {
            let mut t = Tally::default();
            let up = c.target.shift_p(1);
            if let Some(next) = t.ok(ctx.canon.canonical(&up), || format!("{{{up}}}")) {
                t.check(next.presentation == c.presentation, || {
                    format!("{}: D={} gives {} but D={} gives {}", c.target, c.level, show(&c.presentation), next.level, show(&next.presentation))
                });
            }
            t
        })
        .collect();
    t.merge(Tally::merge_all(parts));
    t
}

fn show(p: &BTreeMap<GenWord, LaurentPoly>) -> String {
    let parts: Vec<String> = p.iter().map(|(w, c)| format!("({c})·{w}")).collect();
    parts.join(" + ")
}

/// `({A}, y)_D` read off the presentation of `{A}`.
fn pairing(x: &CanonicalElem, y: &CanonicalElem) -> qschur::Result<LaurentPoly> {
    let ye = y.elem();
    x.presentation.iter().try_fold(LaurentPoly::zero(), |acc, (w, c)| Ok(&acc + &(c * &inner_fixed(w, &x.weight, &ye)?)))
}

/// (level, row sums, weight)
type BlockKey = (i64, Vec<i64>, Vec<i64>);

pub fn a8(ctx: &Context) -> Tally {
    let mut t = Tally::default();
    let family = computed(ctx, &mut t);
    let mut blocks: BTreeMap<BlockKey, Vec<&CanonicalElem>> = BTreeMap::new();
    for c in &family {
        blocks.entry((c.level, c.target.row_sums().values().to_vec(), c.weight.values().to_vec())).or_default().push(c);
    }
    let pairs: Vec<(&CanonicalElem, &CanonicalElem)> =
        blocks.values().flat_map(|b| b.iter().flat_map(move |x| b.iter().map(move |y| (*x, *y)))).collect();
    let parts: Vec<Tally> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut t = Tally::default();
            if let Some(v) = t.ok(pairing(x, y), || format!("({{{}}}, {{{}}})", x.target, y.target)) {
                let rest = if x.target == y.target { &v - &LaurentPoly::one() } else { v };
                t.check(rest.is_zero() || rest.in_strict_negative_integral(), || {
                    format!("({{{}}}, {{{}}}) - δ = {rest}", x.target, y.target)
                });
            }
            t
        })
        .collect();
    t.merge(Tally::merge_all(parts));
    t.note(format!("{} pairs sharing level, row sums and column sums; other pairs vanish by weight", pairs.len()));
    t
}

pub fn a9(ctx: &Context) -> Tally {
    let order = ctx.cfg.order;
    let mut t = Tally::default();
    let family = computed(ctx, &mut t);
    // the stable elements: presentations that agree at D and D + n, one per family
    let mut by_weight: BTreeMap<Weight, BTreeMap<String, UdotElem>> = BTreeMap::new();
    for c in &family {
        let Ok(next) = ctx.canon.canonical(&c.target.shift_p(1)) else { continue };
        if next.presentation != c.presentation {
            continue;
        }
        if let Some(x) = t.ok(c.udot(), || format!("{{{}}} in U̇", c.target)) {
            let Some(lam) = t.ok(Weight::new(c.weight.values().to_vec()), || "weight".into()) else { continue };
            by_weight.entry(lam).or_default().insert(show(&c.presentation), x);
        }
    }
    let pairs: Vec<(&UdotElem, &UdotElem)> = by_weight
        .values()
        .flat_map(|g| g.values().flat_map(move |x| g.values().map(move |y| (x, y))))
        .collect();
    let parts: Vec<Tally> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut t = Tally::default();
            if let Some(r) = t.ok(positivity_report(x, y, order), || "⟨b₁, b₂⟩".into()) {
                t.check(r.positive, || format!("⟨b₁, b₂⟩ = {} expands as {:?}", r.value, r.coeffs));
            }
            t
        })
        .collect();
    t.merge(Tally::merge_all(parts));
    let alternating: Vec<String> = (0..=order).map(|k| if k % 2 == 0 { "1" } else { "0" }.to_string()).collect();
    for lam in [vec![2, 0], vec![0, 3], vec![1, 0]] {
        let lam = Weight::new(lam).expect("weight");
        for i in 1..=2 {
            let f = UdotElem::monomial(format!("F{i}").parse().expect("letter"), lam.clone());
            if let Some(r) = t.ok(positivity_report(&f, &f, order), || format!("⟨F{i}1_λ, F{i}1_λ⟩")) {
                t.check(r.coeffs == alternating && r.positive, || format!("⟨F{i}1_{lam}, F{i}1_{lam}⟩ = {:?}", r.coeffs));
            }
        }
    }
    let fams: usize = by_weight.values().map(BTreeMap::len).sum();
    t.note(format!("{fams} stable elements over {} weights, {} pairs, series to v^-{order}", by_weight.len(), pairs.len()));
    t
}
