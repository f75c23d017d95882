//! Automorphisms of `C` and `M`.
//!
//! `Aut(C)` is stored as a pair of units `(u, v)` acting by
//! `σ ↦ σ^u, τ ↦ τ^v`. `Aut(M)` consists of the maps `φ_{i,j}` with
//! `σ ↦ σ^i, τ ↦ σ^j τ`, so that
//!
//! ```text
//! φ_{i,j}(n, m) = (i n + j (1 + g + ... + g^(m-1)), m)
//! φ_{i,j} ∘ φ_{k,l} = φ_{ik, il + j}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{GroupElem, GroupKind, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Aut {
    /// `σ ↦ σ^u`, `τ ↦ τ^v`.
    C { u: u32, v: u32 },
    /// `σ ↦ σ^i`, `τ ↦ σ^j τ`.
    M { i: u32, j: u32 },
}

impl fmt::Display for Aut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Aut::C { u, v } => write!(f, "(u={u}, v={v})"),
            Aut::M { i, j } => write!(f, "φ[{i},{j}]"),
        }
    }
}

impl Aut {
    pub fn kind(&self) -> GroupKind {
        match self {
            Aut::C { .. } => GroupKind::C,
            Aut::M { .. } => GroupKind::M,
        }
    }

    pub fn identity(kind: GroupKind) -> Aut {
        match kind {
            GroupKind::C => Aut::C { u: 1, v: 1 },
            GroupKind::M => Aut::M { i: 1, j: 0 },
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Aut::identity(self.kind())
    }

    /// Validated constructor for an automorphism of `C`.
    pub fn c(params: &Params, u: u32, v: u32) -> Result<Aut> {
        let (p, q) = (params.p(), params.q());
        if u == 0 || u >= p {
            return Err(out_of_range("u", u, format!("1..{p}")));
        }
        if v == 0 || v >= q {
            return Err(out_of_range("v", v, format!("1..{q}")));
        }
        Ok(Aut::C { u, v })
    }

    /// Validated constructor for `φ_{i,j} ∈ Aut(M)`.
    pub fn m(params: &Params, i: u32, j: u32) -> Result<Aut> {
        params.require_congruent()?;
        let p = params.p();
        if i == 0 || i >= p {
            return Err(out_of_range("i", i, format!("1..{p}")));
        }
        if j >= p {
            return Err(out_of_range("j", j, format!("0..{p}")));
        }
        Ok(Aut::M { i, j })
    }

    /// `φ_{i,j}` with `i`, `j` given as arbitrary integers and reduced mod `p`.
    pub fn m_reduced(params: &Params, i: i64, j: i64) -> Result<Aut> {
        let p = params.p() as i64;
        Aut::m(params, i.rem_euclid(p) as u32, j.rem_euclid(p) as u32)
    }

    /// Applies the automorphism to a group element.
    pub fn apply(&self, params: &Params, x: GroupElem) -> Result<GroupElem> {
        check_kind(self.kind(), x.kind())?;
        params.require_kind(x.kind())?;
        Ok(self.eval(params, x))
    }

    #[inline]
    pub(crate) fn eval(&self, params: &Params, x: GroupElem) -> GroupElem {
        let (p, q) = (params.p() as u64, params.q() as u64);
        match *self {
            Aut::C { u, v } => GroupElem::new(
                GroupKind::C,
                (u as u64 * x.n() as u64 % p) as u32,
                (v as u64 * x.m() as u64 % q) as u32,
            ),
            Aut::M { i, j } => {
                let n = (i as u64 * x.n() as u64 + j as u64 * params.geo(x.m()) as u64) % p;
                GroupElem::new(GroupKind::M, n as u32, x.m())
            }
        }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, params: &Params, other: &Aut) -> Result<Aut> {
        check_kind(self.kind(), other.kind())?;
        Ok(self.then_after(params, other))
    }

    #[inline]
    pub(crate) fn then_after(&self, params: &Params, other: &Aut) -> Aut {
        let (p, q) = (params.p() as u64, params.q() as u64);
        match (*self, *other) {
            (Aut::C { u, v }, Aut::C { u: u2, v: v2 }) => Aut::C {
                u: (u as u64 * u2 as u64 % p) as u32,
                v: (v as u64 * v2 as u64 % q) as u32,
            },
            (Aut::M { i, j }, Aut::M { i: k, j: l }) => Aut::M {
                i: (i as u64 * k as u64 % p) as u32,
                j: ((i as u64 * l as u64 + j as u64) % p) as u32,
            },
            _ => unreachable!("kinds checked by caller"),
        }
    }

    pub fn inverse(&self, params: &Params) -> Aut {
        let (p, q) = (params.p() as u64, params.q() as u64);
        match *self {
            Aut::C { u, v } => Aut::C {
                u: arith::inv_mod(u as u64, p).expect("unit") as u32,
                v: arith::inv_mod(v as u64, q).expect("unit") as u32,
            },
            Aut::M { i, j } => {
                let ii = arith::inv_mod(i as u64, p).expect("unit");
                // φ_{i,j}^-1 = φ_{i^-1, -j i^-1}
                let jj = arith::neg_mod(j as u64 * ii % p, p);
                Aut::M {
                    i: ii as u32,
                    j: jj as u32,
                }
            }
        }
    }

    pub fn pow(&self, params: &Params, k: u64) -> Aut {
        let mut acc = Aut::identity(self.kind());
        for _ in 0..k {
            acc = acc.then_after(params, self);
        }
        acc
    }

    /// Order of the automorphism in `Aut(A)`.
    pub fn order(&self, params: &Params) -> u64 {
        let mut f = *self;
        let mut k = 1;
        while !f.is_identity() {
            f = f.then_after(params, self);
            k += 1;
        }
        k
    }
}

fn out_of_range(name: &'static str, value: u32, range: String) -> Error {
    Error::OutOfRange {
        name,
        value: value as u64,
        range,
    }
}

pub(crate) fn check_kind(expected: GroupKind, found: GroupKind) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::KindMismatch { expected, found })
    }
}

/// Every automorphism of the group of the given kind, in canonical order.
pub fn all_automorphisms(params: &Params, kind: GroupKind) -> Result<Vec<Aut>> {
    params.require_kind(kind)?;
    let (p, q) = (params.p(), params.q());
    Ok(match kind {
        GroupKind::C => (1..p)
            .flat_map(|u| (1..q).map(move |v| Aut::C { u, v }))
            .collect(),
        GroupKind::M => (1..p)
            .flat_map(|i| (0..p).map(move |j| Aut::M { i, j }))
            .collect(),
    })
}

/// The automorphisms `α` and `β`.
///
/// For `M` these are `α = φ_{1,1}` and `β = φ_{g,0}`, which generate the
/// unique subgroup of order `pq` in `Aut(M)`. For `C` only `α: σ ↦ σ^g,
/// τ ↦ τ` is defined.
pub fn alpha_beta(params: &Params, kind: GroupKind) -> Result<(Aut, Option<Aut>)> {
    params.require_congruent()?;
    let g = params.g().expect("congruent");
    Ok(match kind {
        GroupKind::C => (Aut::C { u: g, v: 1 }, None),
        GroupKind::M => (Aut::M { i: 1, j: 1 }, Some(Aut::M { i: g, j: 0 })),
    })
}

/// Generators `φ: σ ↦ σ^n` and `ψ: τ ↦ τ^m` of `Aut(C)`, where `n` and `m`
/// are the smallest primitive roots modulo `p` and `q`.
pub fn aut_c_generators(params: &Params) -> (Aut, Aut) {
    let n = arith::primitive_root(params.p() as u64) as u32;
    let m = arith::primitive_root(params.q() as u64) as u32;
    (Aut::C { u: n, v: 1 }, Aut::C { u: 1, v: m })
}
