//! Subgroups of `Hol(A)` in canonical form.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::automorphism::check_kind;
use crate::error::{Error, Result};
use crate::group::{GroupKind, Params};
use crate::holomorph::HolElem;

/// Which closed-form family a regular subgroup was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyLabel {
    /// `A × {1}`, the left translations.
    Trivial,
    /// `⟨σ, τ^b α⟩ ≤ Hol(C)`.
    Gb { b: u32 },
    /// `⟨σ^{a0} α, σ^c τ⟩ ≤ Hol(M)`.
    Gc { c: u32 },
    /// `⟨σ, τ^a α^b β⟩ ≤ Hol(M)`.
    Gab { a: u32, b: u32 },
    /// `⟨σ^{a0} α, σ^c τ^d β⟩ ≤ Hol(M)`.
    Gcd { c: u32, d: u32 },
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyLabel::Trivial => f.write_str("trivial"),
            FamilyLabel::Gb { b } => write!(f, "G_b(b={b})"),
            FamilyLabel::Gc { c } => write!(f, "G_c(c={c})"),
            FamilyLabel::Gab { a, b } => write!(f, "G_ab(a={a}, b={b})"),
            FamilyLabel::Gcd { c, d } => write!(f, "G_cd(c={c}, d={d})"),
        }
    }
}

/// A subgroup of `Hol(A)`. Two subgroups are the same iff their sorted
/// element lists agree; generators and labels are informational.
#[derive(Debug, Clone)]
pub struct Subgroup {
    kind: GroupKind,
    elements: Vec<HolElem>,
    gens: Vec<HolElem>,
    label: Option<FamilyLabel>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Elements in canonical (sorted) order.
    pub fn elements(&self) -> &[HolElem] {
        &self.elements
    }

    pub fn gens(&self) -> &[HolElem] {
        &self.gens
    }

    pub fn label(&self) -> Option<FamilyLabel> {
        self.label
    }

    pub fn with_label(mut self, label: FamilyLabel) -> Self {
        self.label = Some(label);
        self
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &HolElem) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// Size of the image under `π₂: Hol(A) → Aut(A)`.
    pub fn pi2_size(&self) -> usize {
        self.elements
            .iter()
            .map(|h| h.aut())
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn is_abelian(&self, params: &Params) -> bool {
        self.gens.iter().all(|x| {
            self.gens
                .iter()
                .all(|y| x.mul_raw(params, y) == y.mul_raw(params, x))
        })
    }

    /// Isomorphism type for a subgroup of order `pq`: abelian means cyclic.
    pub fn iso_type(&self, params: &Params) -> GroupKind {
        if self.is_abelian(params) {
            GroupKind::C
        } else {
            GroupKind::M
        }
    }

    pub(crate) fn from_parts(
        kind: GroupKind,
        mut elements: Vec<HolElem>,
        gens: Vec<HolElem>,
        label: Option<FamilyLabel>,
    ) -> Self {
        elements.sort_unstable();
        Subgroup {
            kind,
            elements,
            gens,
            label,
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subgroup of Hol({}) of order {}", self.kind, self.len())?;
        if let Some(l) = self.label {
            write!(f, " [{l}]")?;
        }
        Ok(())
    }
}

/// Closure of `gens` under multiplication, stopping early (returning `None`)
/// once more than `cap` elements have been found.
pub(crate) fn closure(
    params: &Params,
    gens: &[HolElem],
    cap: Option<usize>,
) -> Option<Vec<HolElem>> {
    let kind = gens[0].kind();
    let id = HolElem::identity(kind);
    let mut seen: HashSet<HolElem> = HashSet::from([id]);
    let mut out = vec![id];
    let mut cursor = 0;
    while cursor < out.len() {
        let x = out[cursor];
        cursor += 1;
        for g in gens {
            let y = x.mul_raw(params, g);
            if seen.insert(y) {
                out.push(y);
                if cap.is_some_and(|c| out.len() > c) {
                    return None;
                }
            }
        }
    }
    Some(out)
}

/// The smallest subgroup of `Hol(A)` containing `gens`.
pub fn close_subgroup(params: &Params, gens: &[HolElem]) -> Result<Subgroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("empty generator list".into()))?;
    let kind = first.kind();
    for g in gens {
        check_kind(kind, g.kind())?;
    }
    params.require_kind(kind)?;
    let elements = closure(params, gens, None).expect("uncapped closure");
    Ok(Subgroup::from_parts(kind, elements, gens.to_vec(), None))
}

/// A subgroup is regular iff it has order `pq` and moves `0` onto every
/// point of `A`.
pub fn is_regular(params: &Params, s: &Subgroup) -> bool {
    if s.len() != params.order() {
        return false;
    }
    let zero = params.identity(s.kind());
    let orbit: HashSet<_> = s
        .elements()
        .iter()
        .map(|h| h.act_raw(params, zero))
        .collect();
    orbit.len() == params.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{alpha_beta, Aut};
    use crate::group::GroupElem;
    use GroupKind::{C, M};

    #[test]
    fn close_trivial_and_translations() {
        let params = Params::new(7, 3).unwrap();
        let triv = close_subgroup(&params, &[HolElem::identity(C)]).unwrap();
        assert_eq!(triv.len(), 1);
        assert!(!is_regular(&params, &triv));

        let t = close_subgroup(
            &params,
            &[
                HolElem::translation(params.sigma(C)),
                HolElem::translation(params.tau(C)),
            ],
        )
        .unwrap();
        assert_eq!(t.len(), 21);
        assert!(is_regular(&params, &t));
        assert_eq!(t.pi2_size(), 1);
        assert!(t.is_abelian(&params));
    }

    #[test]
    fn close_g1_in_hol_c() {
        let params = Params::new(7, 3).unwrap();
        let (alpha, _) = alpha_beta(&params, C).unwrap();
        let sigma = HolElem::translation(params.sigma(C));
        let tau_alpha = HolElem::new(params.tau(C), alpha).unwrap();
        let s = close_subgroup(&params, &[sigma, tau_alpha]).unwrap();
        assert_eq!(s.len(), 21);
        assert!(!s.is_abelian(&params));
        assert_eq!(s.iso_type(&params), M);
        assert!(is_regular(&params, &s));
    }

    #[test]
    fn closure_is_a_subgroup() {
        let params = Params::new(7, 3).unwrap();
        let x = HolElem::new(GroupElem::new(M, 2, 1), Aut::M { i: 2, j: 5 }).unwrap();
        let y = HolElem::new(GroupElem::new(M, 0, 0), Aut::M { i: 1, j: 3 }).unwrap();
        let s = close_subgroup(&params, &[x, y]).unwrap();
        for a in s.elements() {
            assert!(s.contains(&a.inverse(&params)));
            for b in s.elements().iter().step_by(3) {
                assert!(s.contains(&a.mul_raw(&params, b)));
            }
        }
        // Lagrange: |S| divides |Hol(M)| = 21 * 42
        assert_eq!((21 * 42) % s.len(), 0);
    }

    #[test]
    fn close_rejects_bad_generators() {
        let params = Params::new(7, 3).unwrap();
        assert!(close_subgroup(&params, &[]).is_err());
        assert!(close_subgroup(&params, &[HolElem::identity(C), HolElem::identity(M)]).is_err());
        assert!(closure(
            &params,
            &[
                HolElem::translation(params.sigma(C)),
                HolElem::translation(params.tau(C))
            ],
            Some(20)
        )
        .is_none());
    }
}
