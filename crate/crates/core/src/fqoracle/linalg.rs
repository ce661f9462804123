use super::field::Field;

/// A subspace of `GF(q)^N` held as a reduced row echelon basis, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(f: &Field, ambient: usize, vecs: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vecs {
            s.insert(f, v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` reduced against the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, f: &Field, mut v: Vec<u8>) -> Vec<u8> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                f.axpy(&mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, f: &Field, v: &[u8]) -> bool {
        self.reduce(f, v.to_vec()).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, f: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(f, r))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Field, v: Vec<u8>) -> bool {
        let mut v = self.reduce(f, v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[p];
            if c != 0 {
                f.axpy(row, f.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r.clone());
        }
        s
    }

    pub fn intersection_dim(&self, f: &Field, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(f, other).dim()
    }

    /// Vectors of `self` completing a basis of `sub ⊆ self` to one of `self`.
    pub fn complement_of(&self, f: &Field, sub: &Subspace) -> Vec<Vec<u8>> {
        let mut acc = sub.clone();
        self.rows.iter().filter(|r| acc.insert(f, (*r).clone())).cloned().collect()
    }
}

/// Bases (as coefficient rows) of all `c`-dimensional subspaces of `GF(q)^a`, in RREF.
pub fn grassmannian(f: &Field, a: usize, c: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    if c > a {
        return out;
    }
    let mut piv = Vec::with_capacity(c);
    choose_pivots(f, a, c, 0, &mut piv, &mut out);
    out
}

fn choose_pivots(f: &Field, a: usize, c: usize, start: usize, piv: &mut Vec<usize>, out: &mut Vec<Vec<Vec<u8>>>) {
    if piv.len() == c {
        // free positions: (row k, column t) with t > piv[k] and t not a pivot
        let free: Vec<(usize, usize)> = (0..c)
            .flat_map(|k| ((piv[k] + 1)..a).filter(|t| !piv.contains(t)).map(move |t| (k, t)))
            .collect();
        let q = f.size();
        let total = q.pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u8; a]; c];
            for (k, &p) in piv.iter().enumerate() {
                rows[k][p] = 1;
            }
            for &(k, t) in &free {
                rows[k][t] = (code % q) as u8;
                code /= q;
            }
            out.push(rows);
        }
        return;
    }
    for p in start..a {
        piv.push(p);
        choose_pivots(f, a, c, p + 1, piv, out);
        piv.pop();
    }
}
