//! Finite rings with involution.
//!
//! Three families are supported: `Z_n` with the identity involution, the
//! Gaussian residues `Z_n[i]` with conjugation, and `k x k` matrices over
//! either with transpose or conjugate-transpose. Elements are identified by a
//! canonical index in `[0, size)`, so enumeration order is fixed:
//!
//! * `Z_n`: the residue itself.
//! * `Z_n[i]`: `a + bi` has index `a * n + b`.
//! * `M_k(B)`: entries read row-major form a little-endian number in base
//!   `|B|`, i.e. entry `(0,0)` is the least significant digit.

mod arith;
mod subset;

use std::collections::HashMap;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use arith::{MatrixArith, ScalarArith};
pub use subset::{SubsetKind, SubsetReport, Subsets};

/// Largest carrier any constructor accepts.
pub const MAX_CARRIER: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Involution {
    Identity,
    Conjugate,
    Transpose,
    ConjugateTranspose,
}

/// Scalar carriers usable on their own or as matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Zn(u32),
    Gauss(u32),
}

impl Base {
    pub fn size(self) -> u32 {
        match self {
            Base::Zn(n) => n,
            Base::Gauss(n) => n * n,
        }
    }

    pub fn modulus(self) -> u32 {
        match self {
            Base::Zn(n) | Base::Gauss(n) => n,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Zn(n) => write!(f, "zn({n})"),
            Base::Gauss(n) => write!(f, "gauss({n})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Zn(u32),
    Gauss(u32),
    Matrix {
        base: Base,
        k: usize,
        involution: Involution,
    },
}

/// Identity of a ring, derived from its canonical spec string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

/// A ring element: the owning ring's identity plus a canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    ring: RingId,
    index: u32,
}

impl Elem {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn ring_id(self) -> RingId {
        self.ring
    }
}

/// A decoded element value, printed in the element-literal grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Residue(u32),
    Gauss(u32, u32),
    Matrix(Vec<Vec<Value>>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Residue(r) => write!(f, "{r}"),
            Value::Gauss(a, b) => write!(f, "({a},{b})"),
            Value::Matrix(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    for (j, v) in row.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{v}")?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Exponent behaviour of the power sequence `a, a^2, a^3, ...`.
///
/// `a^preperiod = a^(preperiod + period)` with both values minimal and
/// `preperiod >= 1`. The pairs `(a^n, a^(n+1))` for `n >= 1` take every value
/// they can already for `n <= preperiod + period - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerCycle {
    pub preperiod: u32,
    pub period: u32,
}

impl PowerCycle {
    /// Largest exponent an exhaustive search over `n >= 1` ever needs to try.
    pub fn exponent_bound(self) -> u32 {
        self.preperiod + self.period - 1
    }
}

#[derive(Debug)]
enum Arith {
    Scalar(ScalarArith),
    Matrix(MatrixArith),
}

#[derive(Debug)]
struct Inner {
    kind: RingKind,
    id: RingId,
    spec: String,
    size: u32,
    arith: Arith,
    subsets: OnceLock<Subsets>,
}

/// An immutable finite ring with involution. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct StarRing {
    inner: Arc<Inner>,
}

impl PartialEq for StarRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner.kind == other.inner.kind
    }
}

impl Eq for StarRing {}

impl fmt::Display for StarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.spec)
    }
}

fn check_modulus(n: u64, size: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "modulus must be >= 2, got {n}"
        )));
    }
    if size > MAX_CARRIER {
        return Err(Error::InvalidParameter(format!(
            "carrier of {size} elements exceeds the limit of {MAX_CARRIER}"
        )));
    }
    Ok(n as u32)
}

/// `Z_n` with the identity involution.
pub fn make_zn(n: u64) -> Result<StarRing> {
    let n = check_modulus(n, n)?;
    Ok(StarRing::build(
        RingKind::Zn(n),
        n,
        Arith::Scalar(ScalarArith::new(Base::Zn(n))),
    ))
}

/// `Z_n[i]` with `(a + bi)* = a - bi`. Defined for every `n >= 2`.
pub fn make_gauss(n: u64) -> Result<StarRing> {
    let n = check_modulus(n, n.saturating_mul(n))?;
    Ok(StarRing::build(
        RingKind::Gauss(n),
        n * n,
        Arith::Scalar(ScalarArith::new(Base::Gauss(n))),
    ))
}

/// `M_k(base)` with `Transpose` or (for Gaussian bases) `ConjugateTranspose`.
pub fn make_matrix_ring(base: &StarRing, k: usize, involution: Involution) -> Result<StarRing> {
    let base_kind = match base.kind() {
        RingKind::Zn(n) => Base::Zn(n),
        RingKind::Gauss(n) => Base::Gauss(n),
        RingKind::Matrix { .. } => {
            return Err(Error::InvalidParameter(
                "matrix base must be zn or gauss".into(),
            ))
        }
    };
    if k == 0 {
        return Err(Error::InvalidParameter(
            "matrix dimension must be >= 1".into(),
        ));
    }
    let conj = match (involution, base_kind) {
        (Involution::Transpose, _) => false,
        (Involution::ConjugateTranspose, Base::Gauss(_)) => true,
        (Involution::ConjugateTranspose, Base::Zn(_)) => {
            return Err(Error::InvalidParameter(
                "conjugate-transpose requires a gauss base".into(),
            ))
        }
        (inv, _) => {
            return Err(Error::InvalidParameter(format!(
                "matrix rings take transpose or conjugate-transpose, not {inv:?}"
            )))
        }
    };
    let s = base_kind.size() as u64;
    let mut size: u64 = 1;
    for _ in 0..k * k {
        size = size.saturating_mul(s);
        if size > MAX_CARRIER {
            return Err(Error::InvalidParameter(format!(
                "M_{k}({base_kind}) exceeds the carrier limit of {MAX_CARRIER}"
            )));
        }
    }
    let size = size as u32;
    Ok(StarRing::build(
        RingKind::Matrix {
            base: base_kind,
            k,
            involution,
        },
        size,
        Arith::Matrix(MatrixArith::new(base_kind, k, conj, size)),
    ))
}

impl StarRing {
    fn build(kind: RingKind, size: u32, arith: Arith) -> Self {
        let spec = match kind {
            RingKind::Zn(n) => format!("zn({n})"),
            RingKind::Gauss(n) => format!("gauss({n})"),
            RingKind::Matrix {
                base,
                k,
                involution,
            } => {
                let inv = if involution == Involution::ConjugateTranspose {
                    "conjtranspose"
                } else {
                    "transpose"
                };
                format!("mat({k},{base},{inv})")
            }
        };
        let mut hasher = DefaultHasher::new();
        spec.hash(&mut hasher);
        StarRing {
            inner: Arc::new(Inner {
                kind,
                id: RingId(hasher.finish()),
                spec,
                size,
                arith,
                subsets: OnceLock::new(),
            }),
        }
    }

    pub fn kind(&self) -> RingKind {
        self.inner.kind
    }

    pub fn id(&self) -> RingId {
        self.inner.id
    }

    /// Canonical ring-spec string, e.g. `mat(2,zn(5),transpose)`.
    pub fn spec(&self) -> &str {
        &self.inner.spec
    }

    pub fn size(&self) -> u32 {
        self.inner.size
    }

    pub fn involution(&self) -> Involution {
        match self.inner.kind {
            RingKind::Zn(_) => Involution::Identity,
            RingKind::Gauss(_) => Involution::Conjugate,
            RingKind::Matrix { involution, .. } => involution,
        }
    }

    /// Matrix dimension, or `None` for scalar rings.
    pub fn dimension(&self) -> Option<usize> {
        match self.inner.kind {
            RingKind::Matrix { k, .. } => Some(k),
            _ => None,
        }
    }

    pub fn is_commutative_kind(&self) -> bool {
        !matches!(self.inner.kind, RingKind::Matrix { k, .. } if k > 1)
    }

    #[inline]
    pub(crate) fn at(&self, index: u32) -> Elem {
        debug_assert!(index < self.inner.size);
        Elem {
            ring: self.inner.id,
            index,
        }
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index >= self.inner.size {
            return Err(Error::InvalidArgument(format!(
                "index {index} out of range for {} ({} elements)",
                self, self.inner.size
            )));
        }
        Ok(self.at(index))
    }

    pub fn owns(&self, a: Elem) -> bool {
        a.ring == self.inner.id && a.index < self.inner.size
    }

    pub(crate) fn ensure(&self, a: Elem) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "element #{} does not belong to {self}",
                a.index
            )))
        }
    }

    /// All elements in ascending canonical order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + '_ {
        (0..self.inner.size).map(|i| self.at(i))
    }

    pub fn zero(&self) -> Elem {
        self.at(0)
    }

    pub fn one(&self) -> Elem {
        let idx = match &self.inner.arith {
            Arith::Scalar(s) => s.one(),
            Arith::Matrix(m) => m.one(),
        };
        self.at(idx)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.owns(a) && self.owns(b));
        let idx = match &self.inner.arith {
            Arith::Scalar(s) => s.add(a.index, b.index),
            Arith::Matrix(m) => m.add(a.index, b.index),
        };
        self.at(idx)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(self.owns(a));
        let idx = match &self.inner.arith {
            Arith::Scalar(s) => s.neg(a.index),
            Arith::Matrix(m) => m.neg(a.index),
        };
        self.at(idx)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.owns(a) && self.owns(b));
        let idx = match &self.inner.arith {
            Arith::Scalar(s) => s.mul(a.index, b.index),
            Arith::Matrix(m) => m.mul(a.index, b.index),
        };
        self.at(idx)
    }

    /// Product of a sequence of factors, left to right.
    pub fn product(&self, factors: &[Elem]) -> Elem {
        factors.iter().fold(self.one(), |acc, &f| self.mul(acc, f))
    }

    #[inline]
    pub fn star(&self, a: Elem) -> Elem {
        debug_assert!(self.owns(a));
        let idx = match &self.inner.arith {
            Arith::Scalar(s) => s.conj(a.index),
            Arith::Matrix(m) => m.star(a.index),
        };
        self.at(idx)
    }

    /// `a^n`, with `a^0 = 1`.
    pub fn pow(&self, a: Elem, n: u32) -> Elem {
        let mut result = self.one();
        let mut base = a;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn power_cycle(&self, a: Elem) -> PowerCycle {
        let mut seen: HashMap<u32, u32> = HashMap::new();
        let mut p = a;
        let mut exp = 1u32;
        loop {
            if let Some(&first) = seen.get(&p.index) {
                return PowerCycle {
                    preperiod: first,
                    period: exp - first,
                };
            }
            seen.insert(p.index, exp);
            p = self.mul(p, a);
            exp += 1;
        }
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_hermitian(&self, a: Elem) -> bool {
        self.star(a) == a
    }

    pub fn is_projection(&self, a: Elem) -> bool {
        self.is_idempotent(a) && self.is_hermitian(a)
    }

    pub fn is_tripotent(&self, a: Elem) -> bool {
        self.mul(self.mul(a, a), a) == a
    }

    /// Definitional centrality: `ca = ac` for every `a` in the ring.
    pub fn commutes_with_all(&self, c: Elem) -> bool {
        self.elements().all(|r| self.mul(c, r) == self.mul(r, c))
    }

    pub fn decode(&self, a: Elem) -> Value {
        match &self.inner.arith {
            Arith::Scalar(_) => scalar_value(self.scalar_base(), a.index),
            Arith::Matrix(m) => {
                let base = self.scalar_base();
                let entries = m.entries(a.index);
                Value::Matrix(
                    entries
                        .chunks(m.k)
                        .map(|row| row.iter().map(|&e| scalar_value(base, e)).collect())
                        .collect(),
                )
            }
        }
    }

    /// Inverse of [`decode`](Self::decode). Scalar components are reduced
    /// modulo the base modulus.
    pub fn encode(&self, v: &Value) -> Result<Elem> {
        let mismatch = |msg: &str| Error::ElementMismatch {
            ring: self.to_string(),
            msg: msg.to_string(),
        };
        match (&self.inner.arith, v) {
            (Arith::Scalar(_), Value::Matrix(_)) => {
                Err(mismatch("matrix literal for a scalar ring"))
            }
            (Arith::Scalar(_), _) => {
                let idx = scalar_index(self.scalar_base(), v).map_err(|m| mismatch(&m))?;
                Ok(self.at(idx))
            }
            (Arith::Matrix(m), Value::Matrix(rows)) => {
                if rows.len() != m.k || rows.iter().any(|r| r.len() != m.k) {
                    return Err(mismatch(&format!("expected a {0}x{0} matrix", m.k)));
                }
                let base = self.scalar_base();
                let entries = rows
                    .iter()
                    .flatten()
                    .map(|e| scalar_index(base, e))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|m| mismatch(&m))?;
                Ok(self.at(m.encode(&entries)))
            }
            (Arith::Matrix(_), _) => Err(mismatch("scalar literal for a matrix ring")),
        }
    }

    /// Renders an element in the literal grammar.
    pub fn show(&self, a: Elem) -> String {
        self.decode(a).to_string()
    }

    fn scalar_base(&self) -> Base {
        match self.inner.kind {
            RingKind::Zn(n) => Base::Zn(n),
            RingKind::Gauss(n) => Base::Gauss(n),
            RingKind::Matrix { base, .. } => base,
        }
    }

    /// Distinguished subsets, computed exhaustively once per ring.
    pub fn subsets(&self) -> &Subsets {
        self.inner.subsets.get_or_init(|| Subsets::compute(self))
    }

    /// The subsets if they have already been computed.
    pub(crate) fn subsets_if_ready(&self) -> Option<&Subsets> {
        self.inner.subsets.get()
    }

    pub fn subset(&self, kind: SubsetKind) -> SubsetReport {
        self.subsets().report(self, kind)
    }

    pub fn unit_inverse(&self, a: Elem) -> Option<Elem> {
        self.subsets().unit_inverse(self, a)
    }
}

fn scalar_value(base: Base, idx: u32) -> Value {
    match base {
        Base::Zn(_) => Value::Residue(idx),
        Base::Gauss(n) => Value::Gauss(idx / n, idx % n),
    }
}

fn scalar_index(base: Base, v: &Value) -> std::result::Result<u32, String> {
    match (base, v) {
        (Base::Zn(n), Value::Residue(r)) => Ok(r % n),
        (Base::Gauss(n), Value::Gauss(a, b)) => Ok((a % n) * n + b % n),
        (Base::Zn(_), _) => Err("expected an integer entry".into()),
        (Base::Gauss(_), _) => Err("expected a Gaussian pair (a,b)".into()),
    }
}

#[cfg(test)]
mod tests;
