//! Skew braces of order `pq`.
//!
//! A [`SkewBrace`] always carries the canonical additive group of its kind
//! (`C` or `M` as encoded by [`Params`]), so both Cayley tables are indexed
//! by the flat index `n·q + m` and `0` is the identity of `+`.

mod catalog;
mod construct;
mod iso;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElem, GroupKind, Params};
use crate::subgroup::FamilyLabel;

pub use catalog::{catalog, catalog_entries, CatalogEntry};
pub use construct::{brace_from_regular, regular_section, semidirect_biskew};
pub use iso::{are_isomorphic, find_isomorphism};
pub use verify::{
    biskew_by_generators, brace_law_by_generators, circ_generators, circ_inverse, circ_iso_type,
    is_biskew, kernel_size_by_generators, lambda_of, verify_skew_axioms, GroupCheck, HasParams,
    LambdaMap, SkewReport,
};

/// Where a brace came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum BraceLabel {
    TrivialC,
    CyclicNontrivial,
    TrivialM,
    /// The brace over `M` with `|ker λ| = q`.
    KerQ,
    /// `A_γ`, `1 < γ <= q`.
    Gamma {
        gamma: u32,
    },
    /// `A_μ`, `1 < μ <= q`.
    Mu {
        mu: u32,
    },
    FromSubgroup {
        subgroup: Option<FamilyLabel>,
    },
    Semidirect {
        eta: u32,
        rho: u32,
    },
    Imported,
}

impl fmt::Display for BraceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraceLabel::TrivialC => f.write_str("trivial-C"),
            BraceLabel::CyclicNontrivial => f.write_str("cyclic-nontrivial"),
            BraceLabel::TrivialM => f.write_str("trivial-M"),
            BraceLabel::KerQ => f.write_str("kerq"),
            BraceLabel::Gamma { gamma } => write!(f, "A_gamma({gamma})"),
            BraceLabel::Mu { mu } => write!(f, "A_mu({mu})"),
            BraceLabel::FromSubgroup { subgroup: Some(s) } => write!(f, "from-subgroup[{s}]"),
            BraceLabel::FromSubgroup { subgroup: None } => f.write_str("from-subgroup"),
            BraceLabel::Semidirect { eta, rho } => write!(f, "semidirect(eta={eta}, rho={rho})"),
            BraceLabel::Imported => f.write_str("imported"),
        }
    }
}

/// The circle operation
///
/// ```text
/// (n, m) ∘ (s, t) = (g^(twist·t) n + g^(scale·m) s, m + t)
/// ```
///
/// Every brace in the catalog has this shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircFormula {
    pub twist: u32,
    pub scale: u32,
}

impl CircFormula {
    #[inline]
    pub fn eval(&self, params: &Params, x: GroupElem, y: GroupElem) -> GroupElem {
        let (p, q) = (params.p() as u64, params.q() as u64);
        let pw = |e: u64| -> u64 {
            if e.is_multiple_of(q) {
                1
            } else {
                params.gpow(e) as u64
            }
        };
        let n = (pw(self.twist as u64 * y.m() as u64) * x.n() as u64
            + pw(self.scale as u64 * x.m() as u64) * y.n() as u64)
            % p;
        let m = (x.m() as u64 + y.m() as u64) % q;
        GroupElem::new(x.kind(), n as u32, m as u32)
    }

    fn requires_g(&self, q: u32) -> bool {
        !self.twist.is_multiple_of(q) || !self.scale.is_multiple_of(q)
    }
}

impl fmt::Display for CircFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.twist {
            0 => "n".to_string(),
            1 => "g^t n".to_string(),
            k => format!("g^({k}t) n"),
        };
        let s = match self.scale {
            0 => "s".to_string(),
            1 => "g^m s".to_string(),
            k => format!("g^({k}m) s"),
        };
        write!(f, "({t} + {s}, m + t)")
    }
}

/// Read access to a brace on the flat carrier `0..size`, with `0` the
/// common identity.
pub trait BraceOps {
    fn size(&self) -> usize;
    fn add(&self, x: usize, y: usize) -> usize;
    fn neg(&self, x: usize) -> usize;
    fn circ(&self, x: usize, y: usize) -> usize;
}

/// A skew brace with both Cayley tables materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    params: Params,
    add_kind: GroupKind,
    add: Vec<u32>,
    neg: Vec<u32>,
    circ: Vec<u32>,
    label: BraceLabel,
    formula: Option<CircFormula>,
}

impl SkewBrace {
    /// Wraps an arbitrary circle table over the canonical additive group.
    /// No brace axioms are checked here; see [`verify_skew_axioms`].
    pub fn from_tables(
        params: &Params,
        add_kind: GroupKind,
        circ: Vec<u32>,
        label: BraceLabel,
    ) -> Result<Self> {
        params.require_kind(add_kind)?;
        let n = params.order();
        if circ.len() != n * n {
            return Err(Error::Malformed(format!(
                "circle table has {} entries, expected {}",
                circ.len(),
                n * n
            )));
        }
        if let Some(bad) = circ.iter().find(|&&v| v as usize >= n) {
            return Err(Error::Malformed(format!("table entry {bad} out of range")));
        }
        let (add, neg) = additive_tables(params, add_kind);
        Ok(SkewBrace {
            params: params.clone(),
            add_kind,
            add,
            neg,
            circ,
            label,
            formula: None,
        })
    }

    /// Materializes a circle formula.
    pub fn from_formula(
        params: &Params,
        add_kind: GroupKind,
        formula: CircFormula,
        label: BraceLabel,
    ) -> Result<Self> {
        params.require_kind(add_kind)?;
        if formula.requires_g(params.q()) {
            params.require_congruent()?;
        }
        let n = params.order();
        let mut circ = Vec::with_capacity(n * n);
        for x in params.elements(add_kind) {
            for y in params.elements(add_kind) {
                circ.push(params.flat(formula.eval(params, x, y)) as u32);
            }
        }
        let (add, neg) = additive_tables(params, add_kind);
        Ok(SkewBrace {
            params: params.clone(),
            add_kind,
            add,
            neg,
            circ,
            label,
            formula: Some(formula),
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn add_kind(&self) -> GroupKind {
        self.add_kind
    }

    pub fn label(&self) -> BraceLabel {
        self.label
    }

    pub fn formula(&self) -> Option<CircFormula> {
        self.formula
    }

    pub(crate) fn set_formula(&mut self, formula: Option<CircFormula>) {
        self.formula = formula;
    }

    /// Row-major additive Cayley table.
    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    /// Row-major circle Cayley table.
    pub fn circ_table(&self) -> &[u32] {
        &self.circ
    }

    pub fn elem(&self, idx: usize) -> GroupElem {
        self.params.from_flat(self.add_kind, idx)
    }

    pub fn index(&self, x: GroupElem) -> usize {
        self.params.flat(x)
    }

    /// True iff `∘` coincides with `+`.
    pub fn is_trivial(&self) -> bool {
        self.add == self.circ
    }
}

impl BraceOps for SkewBrace {
    #[inline]
    fn size(&self) -> usize {
        self.params.order()
    }

    #[inline]
    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y] as usize
    }

    #[inline]
    fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    fn circ(&self, x: usize, y: usize) -> usize {
        self.circ[x * self.size() + y] as usize
    }
}

impl fmt::Display for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.label, self.add_kind)?;
        if let Some(formula) = self.formula {
            write!(f, ", x∘y = {formula}")?;
        }
        Ok(())
    }
}

fn additive_tables(params: &Params, kind: GroupKind) -> (Vec<u32>, Vec<u32>) {
    let n = params.order();
    let mut add = Vec::with_capacity(n * n);
    let mut neg = Vec::with_capacity(n);
    for x in params.elements(kind) {
        neg.push(params.flat(params.inv(x)) as u32);
        for y in params.elements(kind) {
            add.push(params.flat(params.add(x, y)) as u32);
        }
    }
    (add, neg)
}

/// A catalog brace evaluated on the fly, for sizes where tables would be
/// too large.
#[derive(Debug, Clone)]
pub struct FormulaBrace<'a> {
    pub params: &'a Params,
    pub add_kind: GroupKind,
    pub formula: CircFormula,
}

impl BraceOps for FormulaBrace<'_> {
    fn size(&self) -> usize {
        self.params.order()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let prm = self.params;
        prm.flat(prm.add(
            prm.from_flat(self.add_kind, x),
            prm.from_flat(self.add_kind, y),
        ))
    }

    fn neg(&self, x: usize) -> usize {
        let prm = self.params;
        prm.flat(prm.inv(prm.from_flat(self.add_kind, x)))
    }

    fn circ(&self, x: usize, y: usize) -> usize {
        let prm = self.params;
        prm.flat(self.formula.eval(
            prm,
            prm.from_flat(self.add_kind, x),
            prm.from_flat(self.add_kind, y),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_and_table_paths_agree() {
        let params = Params::new(7, 3).unwrap();
        for e in catalog_entries(&params) {
            let b = SkewBrace::from_formula(&params, e.add_kind, e.formula, e.label).unwrap();
            let fb = FormulaBrace {
                params: &params,
                add_kind: e.add_kind,
                formula: e.formula,
            };
            for x in 0..21 {
                assert_eq!(b.neg(x), fb.neg(x));
                for y in 0..21 {
                    assert_eq!(b.add(x, y), fb.add(x, y));
                    assert_eq!(b.circ(x, y), fb.circ(x, y));
                }
            }
        }
    }

    #[test]
    fn from_tables_validates_shape() {
        let params = Params::new(7, 3).unwrap();
        assert!(
            SkewBrace::from_tables(&params, GroupKind::C, vec![0; 10], BraceLabel::Imported)
                .is_err()
        );
        assert!(
            SkewBrace::from_tables(&params, GroupKind::C, vec![21; 441], BraceLabel::Imported)
                .is_err()
        );
        assert!(SkewBrace::from_tables(
            &Params::new(5, 3).unwrap(),
            GroupKind::M,
            vec![0; 225],
            BraceLabel::Imported
        )
        .is_err());
    }

    #[test]
    fn trivial_formula_is_the_group_law() {
        let params = Params::new(7, 3).unwrap();
        let c = SkewBrace::from_formula(
            &params,
            GroupKind::C,
            CircFormula { twist: 0, scale: 0 },
            BraceLabel::TrivialC,
        )
        .unwrap();
        assert!(c.is_trivial());
        let m = SkewBrace::from_formula(
            &params,
            GroupKind::M,
            CircFormula { twist: 0, scale: 1 },
            BraceLabel::TrivialM,
        )
        .unwrap();
        assert!(m.is_trivial());
    }
}
