//! Raw index arithmetic behind [`StarRing`](super::StarRing).
//!
//! Everything here works on canonical indices (`u32`). Scalar carriers are
//! `Z_n` (index = residue) and `Z_n[i]` (index = `re * n + im`). Matrix
//! carriers store entries row-major as a little-endian mixed-radix number:
//! entry `(0,0)` is the least significant digit.

use super::Base;

/// Tables are built when the scalar carrier has at most this many elements.
const TABLE_LIMIT: u32 = 256;

/// Largest row-times-matrix table, in entries.
const ROW_TABLE_LIMIT: usize = 1 << 23;

#[derive(Debug)]
pub(crate) struct ScalarArith {
    base: Base,
    size: u32,
    add_tab: Vec<u32>,
    mul_tab: Vec<u32>,
}

impl ScalarArith {
    pub(crate) fn new(base: Base) -> Self {
        let size = base.size();
        let mut arith = ScalarArith {
            base,
            size,
            add_tab: Vec::new(),
            mul_tab: Vec::new(),
        };
        if size <= TABLE_LIMIT {
            let mut add_tab = Vec::with_capacity((size * size) as usize);
            let mut mul_tab = Vec::with_capacity((size * size) as usize);
            for a in 0..size {
                for b in 0..size {
                    add_tab.push(arith.add_direct(a, b));
                    mul_tab.push(arith.mul_direct(a, b));
                }
            }
            arith.add_tab = add_tab;
            arith.mul_tab = mul_tab;
        }
        arith
    }

    pub(crate) fn size(&self) -> u32 {
        self.size
    }

    pub(crate) fn one(&self) -> u32 {
        match self.base {
            Base::Zn(_) => 1,
            // (1, 0) -> 1 * n + 0
            Base::Gauss(n) => n,
        }
    }

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        if self.add_tab.is_empty() {
            self.add_direct(a, b)
        } else {
            self.add_tab[(a * self.size + b) as usize]
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        if self.mul_tab.is_empty() {
            self.mul_direct(a, b)
        } else {
            self.mul_tab[(a * self.size + b) as usize]
        }
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        match self.base {
            Base::Zn(n) => (n - a) % n,
            Base::Gauss(n) => {
                let (re, im) = (a / n, a % n);
                ((n - re) % n) * n + (n - im) % n
            }
        }
    }

    /// The scalar involution: identity on `Z_n`, conjugation on `Z_n[i]`.
    pub(crate) fn conj(&self, a: u32) -> u32 {
        match self.base {
            Base::Zn(_) => a,
            Base::Gauss(n) => {
                let (re, im) = (a / n, a % n);
                re * n + (n - im) % n
            }
        }
    }

    fn add_direct(&self, a: u32, b: u32) -> u32 {
        match self.base {
            Base::Zn(n) => ((a as u64 + b as u64) % n as u64) as u32,
            Base::Gauss(n) => {
                let (ar, ai) = (a / n, a % n);
                let (br, bi) = (b / n, b % n);
                ((ar + br) % n) * n + (ai + bi) % n
            }
        }
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        match self.base {
            Base::Zn(n) => ((a as u64 * b as u64) % n as u64) as u32,
            Base::Gauss(n) => {
                let n64 = n as u64;
                let (ar, ai) = ((a / n) as u64, (a % n) as u64);
                let (br, bi) = ((b / n) as u64, (b % n) as u64);
                // (ar + ai i)(br + bi i) = (ar br - ai bi) + (ar bi + ai br) i
                let re = ((ar * br) % n64 + n64 - (ai * bi) % n64) % n64;
                let im = (ar * bi + ai * br) % n64;
                (re * n64 + im) as u32
            }
        }
    }
}

#[derive(Debug)]
pub(crate) struct MatrixArith {
    pub(crate) scalar: ScalarArith,
    pub(crate) k: usize,
    conj: bool,
    /// `digits[a * k² + i]` is entry `i` (row-major) of element `a`; empty when k = 1.
    digits: Vec<u16>,
    place: Vec<u32>,
    one: u32,
    /// `rows[r * size + b]` is the row vector `r * b`, both rows encoded in
    /// base `s` with `k` digits. Empty when too large.
    rows: Vec<u32>,
    /// `s^k`: the radix of a whole row.
    row_radix: u32,
    size: u32,
}

impl MatrixArith {
    pub(crate) fn new(base: Base, k: usize, conj: bool, size: u32) -> Self {
        let scalar = ScalarArith::new(base);
        let s = scalar.size();
        let kk = k * k;
        let mut place = Vec::with_capacity(kk);
        let mut p = 1u32;
        for i in 0..kk {
            place.push(p);
            if i + 1 < kk {
                p *= s;
            }
        }
        let digits = if k > 1 {
            let mut digits = Vec::with_capacity(size as usize * kk);
            for idx in 0..size {
                let mut rest = idx;
                for _ in 0..kk {
                    digits.push((rest % s) as u16);
                    rest /= s;
                }
            }
            digits
        } else {
            Vec::new()
        };
        let one_s = scalar.one();
        let one = (0..k).map(|i| one_s * place[i * k + i]).sum();
        let row_radix = s.pow(k as u32);
        let mut arith = MatrixArith {
            scalar,
            k,
            conj,
            digits,
            place,
            one,
            rows: Vec::new(),
            row_radix,
            size,
        };
        if k > 1 && (row_radix as usize).saturating_mul(size as usize) <= ROW_TABLE_LIMIT {
            let mut rows = Vec::with_capacity(row_radix as usize * size as usize);
            for r in 0..row_radix {
                // A matrix whose first row is r and the rest zero.
                for b in 0..size {
                    rows.push(arith.mul_direct(r, b) % row_radix);
                }
            }
            arith.rows = rows;
        }
        arith
    }

    pub(crate) fn one(&self) -> u32 {
        self.one
    }

    #[inline]
    pub(crate) fn entry(&self, a: u32, i: usize) -> u32 {
        if self.k == 1 {
            a
        } else {
            let kk = self.k * self.k;
            self.digits[a as usize * kk + i] as u32
        }
    }

    pub(crate) fn entries(&self, a: u32) -> Vec<u32> {
        (0..self.k * self.k).map(|i| self.entry(a, i)).collect()
    }

    pub(crate) fn encode(&self, entries: &[u32]) -> u32 {
        entries.iter().zip(&self.place).map(|(e, p)| e * p).sum()
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return self.scalar.add(a, b);
        }
        (0..self.k * self.k)
            .map(|i| self.scalar.add(self.entry(a, i), self.entry(b, i)) * self.place[i])
            .sum()
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return self.scalar.neg(a);
        }
        (0..self.k * self.k)
            .map(|i| self.scalar.neg(self.entry(a, i)) * self.place[i])
            .sum()
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return self.scalar.mul(a, b);
        }
        if self.rows.is_empty() {
            return self.mul_direct(a, b);
        }
        // Row i of ab is (row i of a) * b.
        let (mut rest, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            let r = rest % self.row_radix;
            rest /= self.row_radix;
            out += self.rows[(r * self.size + b) as usize] * place;
            place *= self.row_radix;
        }
        out
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        let k = self.k;
        let kk = k * k;
        let da = &self.digits[a as usize * kk..(a as usize + 1) * kk];
        let db = &self.digits[b as usize * kk..(b as usize + 1) * kk];
        let mut out = 0;
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0;
                for l in 0..k {
                    let prod = self.scalar.mul(da[i * k + l] as u32, db[l * k + j] as u32);
                    acc = self.scalar.add(acc, prod);
                }
                out += acc * self.place[i * k + j];
            }
        }
        out
    }

    pub(crate) fn star(&self, a: u32) -> u32 {
        let k = self.k;
        let mut out = 0;
        for i in 0..k {
            for j in 0..k {
                let e = self.entry(a, j * k + i);
                let e = if self.conj { self.scalar.conj(e) } else { e };
                out += e * self.place[i * k + j];
            }
        }
        out
    }
}
