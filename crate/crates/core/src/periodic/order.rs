use super::PeriodicMatrix;

/// All `B ∈ 𝔖_{D,n,n}` with `r(B) = r(A)`, `c(B) = c(A)` and `B ≼ A`, sorted.
pub fn enumerate_interval(a: &PeriodicMatrix) -> Vec<PeriodicMatrix> {
    let n = a.n();
    let rows = a.row_sums();
    let cols = a.col_sums();
    let up = a.upper_band();
    let low = a.lower_band();
    // positions (row residue, offset) with their corner-sum caps
    let mut slots: Vec<(usize, i64, i64)> = Vec::new();
    for i in 1..=n {
        let ii = i as i64;
        for t in 1..=up {
            let cap = a.corner_upper(ii, ii + t);
            if cap > 0 {
                slots.push((i, t, cap));
            }
        }
        for t in 1..=low {
            let cap = a.corner_lower(ii, ii - t);
            if cap > 0 {
                slots.push((i, -t, cap));
            }
        }
    }
    let mut out = Vec::new();
    let mut budget: Vec<i64> = rows.values().to_vec();
    let mut chosen = vec![0i64; slots.len()];
    dfs(a, &slots, 0, &mut chosen, &mut budget, &cols, &mut out);
    out.sort();
    out
}

fn dfs(
    a: &PeriodicMatrix,
    slots: &[(usize, i64, i64)],
    k: usize,
    chosen: &mut [i64],
    budget: &mut [i64],
    cols: &super::PeriodicVec,
    out: &mut Vec<PeriodicMatrix>,
) {
    if k == slots.len() {
        let entries = slots.iter().zip(chosen.iter()).filter(|(_, &x)| x > 0).map(|(&(i, t, _), &x)| (i, t, x));
        let b = PeriodicMatrix::from_parts(a.n(), budget.to_vec(), entries).expect("valid slots");
        if b.col_sums() == *cols && b.preceq(a) {
            out.push(b);
        }
        return;
    }
    let (i, _, cap) = slots[k];
    let max = cap.min(budget[i - 1]);
    for x in 0..=max {
        chosen[k] = x;
        budget[i - 1] -= x;
        dfs(a, slots, k + 1, chosen, budget, cols, out);
        budget[i - 1] += x;
    }
    chosen[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::PeriodicVec;

    #[test]
    fn interval_of_diagonal_is_itself() {
        let d = PeriodicMatrix::diagonal(&PeriodicVec(vec![2, 1, 0]));
        assert_eq!(enumerate_interval(&d), vec![d]);
    }

    #[test]
    fn interval_small() {
        let b = PeriodicMatrix::from_entries(2, &[0, 1], &[(1, 3, 1)]);
        let iv = enumerate_interval(&b);
        let a_per = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
        assert!(iv.contains(&b));
        assert!(iv.contains(&a_per));
        for m in &iv {
            assert!(m.preceq(&b));
            assert_eq!(m.row_sums(), b.row_sums());
            assert_eq!(m.col_sums(), b.col_sums());
        }
    }
}
