//! The two groups of order `pq`.
//!
//! Elements are residue pairs `(n, m)` standing for `σ^n τ^m`, with `σ` of
//! order `p` and `τ` of order `q`. In the cyclic group `C` the law is
//! componentwise addition; in the metacyclic group `M` (which only exists
//! when `p ≡ 1 (mod q)`) it is
//!
//! ```text
//! (n, m) + (s, t) = (n + g^m s, m + t)
//! ```
//!
//! which is the presentation `τσ = σ^g τ` written additively.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// Cyclic group `Z_p × Z_q`.
    C,
    /// Metacyclic group `Z_p ⋊_g Z_q`.
    M,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::C => f.write_str("C"),
            GroupKind::M => f.write_str("M"),
        }
    }
}

/// An element `σ^n τ^m` of `C` or `M`.
///
/// Ordering is by kind, then by the flat index `n·q + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem {
    kind: GroupKind,
    n: u32,
    m: u32,
}

impl GroupElem {
    /// Builds an element without range checks; see [`Params::elem`] for the
    /// validated constructor.
    pub const fn new(kind: GroupKind, n: u32, m: u32) -> Self {
        GroupElem { kind, n, m }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.n == 0 && self.m == 0
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// The primes `p > q` together with the constants derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    p: u32,
    q: u32,
    g: Option<u32>,
    a0: Option<u32>,
    /// `g^k mod p` for `0 <= k < q`.
    gpow: Vec<u32>,
    /// `1 + g + ... + g^(k-1) mod p` for `0 <= k < q`, summed term by term.
    geo: Vec<u32>,
}

impl Params {
    /// Validates `p > q` primes and fixes `g` as the smallest residue of
    /// multiplicative order `q` modulo `p`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Self::validate(p, q)?;
        let g = if (p - 1).is_multiple_of(q) {
            Some(
                (2..p)
                    .find(|&r| arith::mult_order(r, p) == Some(q))
                    .expect("Z_p^* is cyclic, so an element of order q exists"),
            )
        } else {
            None
        };
        Ok(Self::build(p, q, g))
    }

    /// Like [`Params::new`] but with a caller-chosen `g`, which must have
    /// multiplicative order exactly `q` modulo `p`.
    pub fn with_generator(p: u64, q: u64, g: u64) -> Result<Self> {
        Self::validate(p, q)?;
        if !(p - 1).is_multiple_of(q) {
            return Err(Error::NotCongruent {
                p: p as u32,
                q: q as u32,
            });
        }
        if arith::mult_order(g % p, p) != Some(q) {
            return Err(Error::InvalidParams(format!(
                "g = {g} does not have multiplicative order {q} modulo {p}"
            )));
        }
        Ok(Self::build(p, q, Some(g % p)))
    }

    fn validate(p: u64, q: u64) -> Result<()> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidParams(format!("p = {p} is not prime")));
        }
        if !arith::is_prime(q) {
            return Err(Error::InvalidParams(format!("q = {q} is not prime")));
        }
        if p <= q {
            return Err(Error::InvalidParams(format!(
                "need p > q, got p = {p}, q = {q}"
            )));
        }
        if p > u32::MAX as u64 / 2 {
            return Err(Error::InvalidParams(format!("p = {p} is too large")));
        }
        Ok(())
    }

    fn build(p: u64, q: u64, g: Option<u64>) -> Self {
        let (gpow, geo, a0) = match g {
            Some(g) => {
                let mut gpow = Vec::with_capacity(q as usize);
                let mut geo = Vec::with_capacity(q as usize);
                let (mut x, mut s) = (1u64, 0u64);
                for _ in 0..q {
                    gpow.push(x as u32);
                    geo.push(s as u32);
                    s = (s + x) % p;
                    x = x * g % p;
                }
                let a0 = arith::inv_mod((g + p - 1) % p, p).expect("g != 1 mod p");
                (gpow, geo, Some(a0 as u32))
            }
            None => (Vec::new(), Vec::new(), None),
        };
        Params {
            p: p as u32,
            q: q as u32,
            g: g.map(|g| g as u32),
            a0,
            gpow,
            geo,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `p ≡ 1 (mod q)`, i.e. the metacyclic group exists.
    pub fn congruent(&self) -> bool {
        self.g.is_some()
    }

    pub fn g(&self) -> Option<u32> {
        self.g
    }

    /// The inverse of `g - 1` modulo `p`.
    pub fn a0(&self) -> Option<u32> {
        self.a0
    }

    /// Group order `pq`.
    pub fn order(&self) -> usize {
        self.p as usize * self.q as usize
    }

    /// The group kinds that exist for these parameters, `C` first.
    pub fn kinds(&self) -> Vec<GroupKind> {
        if self.congruent() {
            vec![GroupKind::C, GroupKind::M]
        } else {
            vec![GroupKind::C]
        }
    }

    pub fn require_congruent(&self) -> Result<()> {
        if self.congruent() {
            Ok(())
        } else {
            Err(Error::NotCongruent {
                p: self.p,
                q: self.q,
            })
        }
    }

    pub fn require_kind(&self, kind: GroupKind) -> Result<()> {
        match kind {
            GroupKind::C => Ok(()),
            GroupKind::M => self.require_congruent(),
        }
    }

    /// `g^e mod p`, with the exponent taken modulo `q`.
    ///
    /// Panics on non-congruent parameters.
    #[inline]
    pub fn gpow(&self, e: u64) -> u32 {
        self.gpow[(e % self.q as u64) as usize]
    }

    /// Validated element constructor.
    pub fn elem(&self, kind: GroupKind, n: u32, m: u32) -> Result<GroupElem> {
        self.require_kind(kind)?;
        if n >= self.p {
            return Err(Error::OutOfRange {
                name: "n",
                value: n as u64,
                range: format!("0..{}", self.p),
            });
        }
        if m >= self.q {
            return Err(Error::OutOfRange {
                name: "m",
                value: m as u64,
                range: format!("0..{}", self.q),
            });
        }
        Ok(GroupElem::new(kind, n, m))
    }

    pub fn identity(&self, kind: GroupKind) -> GroupElem {
        GroupElem::new(kind, 0, 0)
    }

    /// `σ = (1, 0)`.
    pub fn sigma(&self, kind: GroupKind) -> GroupElem {
        GroupElem::new(kind, 1, 0)
    }

    /// `τ = (0, 1)`.
    pub fn tau(&self, kind: GroupKind) -> GroupElem {
        GroupElem::new(kind, 0, 1)
    }

    #[inline]
    pub fn flat(&self, x: GroupElem) -> usize {
        x.n as usize * self.q as usize + x.m as usize
    }

    #[inline]
    pub fn from_flat(&self, kind: GroupKind, idx: usize) -> GroupElem {
        let q = self.q as usize;
        GroupElem::new(kind, (idx / q) as u32, (idx % q) as u32)
    }

    /// All elements of the group of the given kind, in flat-index order.
    pub fn elements(&self, kind: GroupKind) -> impl Iterator<Item = GroupElem> + '_ {
        (0..self.order()).map(move |i| self.from_flat(kind, i))
    }

    /// The group law.
    pub fn op(&self, x: GroupElem, y: GroupElem) -> Result<GroupElem> {
        if x.kind != y.kind {
            return Err(Error::KindMismatch {
                expected: x.kind,
                found: y.kind,
            });
        }
        self.require_kind(x.kind)?;
        Ok(self.add(x, y))
    }

    /// Unchecked group law; both arguments must have the same kind.
    #[inline]
    pub(crate) fn add(&self, x: GroupElem, y: GroupElem) -> GroupElem {
        debug_assert_eq!(x.kind, y.kind);
        let (p, q) = (self.p as u64, self.q as u64);
        let n = match x.kind {
            GroupKind::C => (x.n as u64 + y.n as u64) % p,
            GroupKind::M => (x.n as u64 + self.gpow[x.m as usize] as u64 * y.n as u64) % p,
        };
        let m = (x.m as u64 + y.m as u64) % q;
        GroupElem::new(x.kind, n as u32, m as u32)
    }

    /// The group inverse.
    pub fn inv(&self, x: GroupElem) -> GroupElem {
        let (p, q) = (self.p as u64, self.q as u64);
        let m = arith::neg_mod(x.m as u64, q);
        let n = match x.kind {
            GroupKind::C => arith::neg_mod(x.n as u64, p),
            // (n, m)^-1 = (-g^-m n, -m) and g^-m = g^(q - m)
            GroupKind::M => arith::neg_mod(self.gpow(m) as u64 * x.n as u64 % p, p),
        };
        GroupElem::new(x.kind, n as u32, m as u32)
    }

    /// `x + x + ... + x` (`k` summands).
    pub fn times(&self, x: GroupElem, k: u64) -> GroupElem {
        let mut acc = self.identity(x.kind);
        let mut base = x;
        let mut k = k;
        while k != 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `x` in its group.
    pub fn elem_order(&self, x: GroupElem) -> u64 {
        let mut y = x;
        let mut k = 1;
        while !y.is_identity() {
            y = self.add(y, x);
            k += 1;
        }
        k
    }

    /// `1 + g + ... + g^(r-1) mod p`, evaluated as `a0 (g^r - 1)`.
    pub fn geometric_sum(&self, r: u64) -> Result<u32> {
        let (g, a0) = match (self.g, self.a0) {
            (Some(g), Some(a0)) => (g as u64, a0 as u64),
            _ => {
                return Err(Error::NotCongruent {
                    p: self.p,
                    q: self.q,
                })
            }
        };
        let p = self.p as u64;
        let gr = arith::pow_mod(g, r, p);
        Ok((a0 * ((gr + p - 1) % p) % p) as u32)
    }

    /// Tabulated `1 + g + ... + g^(m-1)` for `m < q`.
    #[inline]
    pub(crate) fn geo(&self, m: u32) -> u32 {
        self.geo[m as usize]
    }
}
