use crate::error::{Error, Result};

/// `GF(q)` for `q ∈ {2,3,4,5,7}` via lookup tables; elements are `0..q`.
#[derive(Clone, Debug)]
pub struct Field {
    q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// `GF(4) = GF(2)[x]/(x²+x+1)`, elements as bit pairs.
fn gf4_mul(a: u8, b: u8) -> u8 {
    let mut r = 0u8;
    for bit in 0..2 {
        if b >> bit & 1 == 1 {
            r ^= a << bit;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        let qq = match q {
            2 | 3 | 4 | 5 | 7 => q as u8,
            _ => return Err(Error::OutOfRange(format!("field size {q} (supported: 2, 3, 4, 5, 7)"))),
        };
        let n = qq as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..qq {
            for b in 0..qq {
                let k = a as usize * n + b as usize;
                if qq == 4 {
                    add[k] = a ^ b;
                    mul[k] = gf4_mul(a, b);
                } else {
                    add[k] = (a + b) % qq;
                    mul[k] = ((a as u16 * b as u16) % qq as u16) as u8;
                }
            }
        }
        let neg = (0..qq).map(|a| (0..qq).find(|&b| add[a as usize * n + b as usize] == 0).unwrap_or(0)).collect();
        let inv = (0..qq).map(|a| (1..qq).find(|&b| mul[a as usize * n + b as usize] == 1).unwrap_or(0)).collect();
        Ok(Self { q: qq, add, mul, neg, inv })
    }

    pub fn q(&self) -> u64 {
        u64::from(self.q)
    }

    pub fn size(&self) -> usize {
        self.q as usize
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// `v += c·w` in place.
    pub fn axpy(&self, v: &mut [u8], c: u8, w: &[u8]) {
        if c == 0 {
            return;
        }
        for (x, &y) in v.iter_mut().zip(w) {
            if y != 0 {
                *x = self.add(*x, self.mul(c, y));
            }
        }
    }
}
