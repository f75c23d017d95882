//! The holomorph `Hol(A) = A ⋊ Aut(A)` with product
//! `(a, f)(b, h) = (a + f(b), f h)` and its action `(a, f)(b) = a + f(b)`.

use std::fmt;

use crate::automorphism::{check_kind, Aut};
use crate::error::Result;
use crate::group::{GroupElem, GroupKind, Params};

/// Element `(a, f)` of `Hol(A)`.
///
/// Ordered lexicographically by (flat index of `a`, then `f`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HolElem {
    a: GroupElem,
    f: Aut,
}

impl fmt::Display for HolElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.a, self.f)
    }
}

impl HolElem {
    pub fn new(a: GroupElem, f: Aut) -> Result<Self> {
        check_kind(a.kind(), f.kind())?;
        Ok(HolElem { a, f })
    }

    pub fn identity(kind: GroupKind) -> Self {
        HolElem {
            a: GroupElem::new(kind, 0, 0),
            f: Aut::identity(kind),
        }
    }

    /// The left translation `(a, id)`.
    pub fn translation(a: GroupElem) -> Self {
        HolElem {
            a,
            f: Aut::identity(a.kind()),
        }
    }

    /// The automorphism `(0, f)`.
    pub fn automorphism(f: Aut) -> Self {
        HolElem {
            a: GroupElem::new(f.kind(), 0, 0),
            f,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.a.kind()
    }

    /// `π₁`.
    pub fn point(&self) -> GroupElem {
        self.a
    }

    /// `π₂`.
    pub fn aut(&self) -> Aut {
        self.f
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.f.is_identity()
    }

    pub fn mul(&self, params: &Params, other: &HolElem) -> Result<HolElem> {
        check_kind(self.kind(), other.kind())?;
        params.require_kind(self.kind())?;
        Ok(self.mul_raw(params, other))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, params: &Params, other: &HolElem) -> HolElem {
        HolElem {
            a: params.add(self.a, self.f.eval(params, other.a)),
            f: self.f.then_after(params, &other.f),
        }
    }

    /// `(a, f)^-1 = (f^-1(-a), f^-1)`.
    pub fn inverse(&self, params: &Params) -> HolElem {
        let finv = self.f.inverse(params);
        HolElem {
            a: finv.eval(params, params.inv(self.a)),
            f: finv,
        }
    }

    /// `(a, f)(b) = a + f(b)`.
    pub fn act(&self, params: &Params, b: GroupElem) -> Result<GroupElem> {
        check_kind(self.kind(), b.kind())?;
        params.require_kind(b.kind())?;
        Ok(self.act_raw(params, b))
    }

    #[inline]
    pub(crate) fn act_raw(&self, params: &Params, b: GroupElem) -> GroupElem {
        params.add(self.a, self.f.eval(params, b))
    }

    pub fn pow(&self, params: &Params, k: u64) -> HolElem {
        let mut acc = HolElem::identity(self.kind());
        for _ in 0..k {
            acc = acc.mul_raw(params, self);
        }
        acc
    }

    pub fn order(&self, params: &Params) -> u64 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul_raw(params, self);
            k += 1;
        }
        k
    }

    /// `f x f^-1` for `f` viewed as `(0, f)`; equals `(f(a), f h f^-1)`.
    pub fn conjugate_by(&self, params: &Params, f: &Aut) -> HolElem {
        HolElem {
            a: f.eval(params, self.a),
            f: f.then_after(params, &self.f)
                .then_after(params, &f.inverse(params)),
        }
    }

    /// No point of `A` is fixed. Every non-identity element of a regular
    /// subgroup has this property.
    pub(crate) fn is_fixed_point_free(&self, params: &Params) -> bool {
        params
            .elements(self.kind())
            .all(|b| self.act_raw(params, b) != b)
    }
}

/// Every element of `Hol(A)` in canonical order.
pub fn all_hol_elements(params: &Params, kind: GroupKind) -> Result<Vec<HolElem>> {
    let auts = crate::automorphism::all_automorphisms(params, kind)?;
    let mut out = Vec::with_capacity(params.order() * auts.len());
    for a in params.elements(kind) {
        for &f in &auts {
            out.push(HolElem { a, f });
        }
    }
    Ok(out)
}
