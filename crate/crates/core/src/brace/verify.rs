//! Brace axioms, the λ-map and the bi-skew test.
//!
//! The exhaustive checks sweep all triples. The `*_by_generators` variants
//! use that a map `f` with `f(0) = 0` is a homomorphism as soon as
//! `f(x * s) = f(x) * f(s)` for all `x` and all `s` in a generating set;
//! they cost `O(n²)` and are what `classify` uses on large inputs.

use std::collections::BTreeSet;

use crate::automorphism::Aut;
use crate::error::{Error, Result};
use crate::group::GroupKind;

use super::{BraceOps, FormulaBrace, SkewBrace};

/// Outcome of a group-table check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupCheck {
    Ok,
    NotAssociative([usize; 3]),
    NoIdentity,
    MissingInverse(usize),
}

impl GroupCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, GroupCheck::Ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewReport {
    pub add_group: GroupCheck,
    pub circ_group: GroupCheck,
    /// First `(a, b, c)` with `a∘(b+c) != a∘b - a + a∘c`.
    pub law_violation: Option<[usize; 3]>,
}

impl SkewReport {
    pub fn passed(&self) -> bool {
        self.add_group.is_ok() && self.circ_group.is_ok() && self.law_violation.is_none()
    }
}

fn check_group(n: usize, op: impl Fn(usize, usize) -> usize) -> GroupCheck {
    for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(xy, z) != op(x, op(y, z)) {
                    return GroupCheck::NotAssociative([x, y, z]);
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| op(e, x) == x && op(x, e) == x)) else {
        return GroupCheck::NoIdentity;
    };
    for x in 0..n {
        if !(0..n).any(|y| op(x, y) == e && op(y, x) == e) {
            return GroupCheck::MissingInverse(x);
        }
    }
    GroupCheck::Ok
}

/// Checks both group structures and the left brace law over every triple.
pub fn verify_skew_axioms<B: BraceOps>(b: &B) -> SkewReport {
    let n = b.size();
    let add_group = check_group(n, |x, y| b.add(x, y));
    let circ_group = check_group(n, |x, y| b.circ(x, y));
    let mut law_violation = None;
    'outer: for a in 0..n {
        let na = b.neg(a);
        for x in 0..n {
            let ax = b.circ(a, x);
            for y in 0..n {
                let lhs = b.circ(a, b.add(x, y));
                let rhs = b.add(b.add(ax, na), b.circ(a, y));
                if lhs != rhs {
                    law_violation = Some([a, x, y]);
                    break 'outer;
                }
            }
        }
    }
    SkewReport {
        add_group,
        circ_group,
        law_violation,
    }
}

fn circ_inverses<B: BraceOps>(b: &B) -> Option<Vec<usize>> {
    let n = b.size();
    (0..n)
        .map(|x| (0..n).find(|&y| b.circ(x, y) == 0 && b.circ(y, x) == 0))
        .collect()
}

/// True iff `(A, ∘, +)` is also a skew brace, i.e.
/// `x + (y∘z) = (x+y) ∘ x' ∘ (x+z)` for all triples.
pub fn is_biskew<B: BraceOps>(b: &B) -> bool {
    let n = b.size();
    let Some(inv) = circ_inverses(b) else {
        return false;
    };
    for (x, &xi) in inv.iter().enumerate() {
        for y in 0..n {
            let left = b.circ(b.add(x, y), xi);
            for z in 0..n {
                if b.add(x, b.circ(y, z)) != b.circ(left, b.add(x, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `a ↦ λ_a` together with `ker λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMap {
    /// `λ_a` for every flat index `a`.
    pub auts: Vec<Aut>,
    /// Flat indices of `ker λ`, sorted.
    pub kernel: Vec<usize>,
}

impl LambdaMap {
    pub fn kernel_size(&self) -> usize {
        self.kernel.len()
    }

    /// `|λ(A)|`.
    pub fn image_size(&self) -> usize {
        self.auts.iter().collect::<BTreeSet<_>>().len()
    }
}

/// Computes `λ_a(b) = -a + a∘b`, identifies each `λ_a` as an automorphism of
/// `(A, +)` and checks that `a ↦ λ_a` is a homomorphism from `(A, ∘)`.
pub fn lambda_of(b: &SkewBrace) -> Result<LambdaMap> {
    let params = b.params();
    let kind = b.add_kind();
    let n = b.size();
    let lambda = |a: usize, x: usize| b.add(b.neg(a), b.circ(a, x));
    let sigma = b.index(params.sigma(kind));
    let tau = b.index(params.tau(kind));

    let mut auts = Vec::with_capacity(n);
    for a in 0..n {
        let ls = b.elem(lambda(a, sigma));
        let lt = b.elem(lambda(a, tau));
        let f = match kind {
            GroupKind::C if ls.m() == 0 && lt.n() == 0 && ls.n() != 0 && lt.m() != 0 => Aut::C {
                u: ls.n(),
                v: lt.m(),
            },
            GroupKind::M if ls.m() == 0 && ls.n() != 0 && lt.m() == 1 => Aut::M {
                i: ls.n(),
                j: lt.n(),
            },
            _ => {
                return Err(Error::NotABrace(format!(
                    "λ_{} does not send σ, τ to automorphism images",
                    b.elem(a)
                )))
            }
        };
        for x in 0..n {
            if b.index(f.eval(params, b.elem(x))) != lambda(a, x) {
                return Err(Error::NotABrace(format!(
                    "λ_{} is not an automorphism of (A, +)",
                    b.elem(a)
                )));
            }
        }
        auts.push(f);
    }
    for a in 0..n {
        for c in 0..n {
            if auts[b.circ(a, c)] != auts[a].then_after(params, &auts[c]) {
                return Err(Error::NotABrace(format!(
                    "λ is not a homomorphism at ({}, {})",
                    b.elem(a),
                    b.elem(c)
                )));
            }
        }
    }
    let id = Aut::identity(kind);
    let kernel = (0..n).filter(|&a| auts[a] == id).collect();
    Ok(LambdaMap { auts, kernel })
}

/// Additive generators `σ`, `τ` as flat indices.
fn add_generators<B: BraceOps + HasParams>(b: &B) -> [usize; 2] {
    let prm = b.params_ref();
    let kind = b.kind();
    [prm.flat(prm.sigma(kind)), prm.flat(prm.tau(kind))]
}

/// Bridges [`SkewBrace`] and [`FormulaBrace`] for the generator-based checks.
pub trait HasParams {
    fn params_ref(&self) -> &crate::group::Params;
    fn kind(&self) -> GroupKind;
}

impl HasParams for SkewBrace {
    fn params_ref(&self) -> &crate::group::Params {
        self.params()
    }
    fn kind(&self) -> GroupKind {
        self.add_kind()
    }
}

impl HasParams for FormulaBrace<'_> {
    fn params_ref(&self) -> &crate::group::Params {
        self.params
    }
    fn kind(&self) -> GroupKind {
        self.add_kind
    }
}

/// The brace law checked on additive generators only. Assumes both
/// operations are groups with identity `0`.
pub fn brace_law_by_generators<B: BraceOps + HasParams>(b: &B) -> bool {
    let n = b.size();
    let gens = add_generators(b);
    (0..n).all(|a| {
        let na = b.neg(a);
        let lam = |x: usize| b.add(na, b.circ(a, x));
        lam(0) == 0
            && gens.iter().all(|&s| {
                let ls = lam(s);
                (0..n).all(|x| lam(b.add(x, s)) == b.add(lam(x), ls))
            })
    })
}

/// `|ker λ|`, counting `a` with `λ_a(σ) = σ` and `λ_a(τ) = τ`. Only
/// meaningful when the input is a skew brace.
pub fn kernel_size_by_generators<B: BraceOps + HasParams>(b: &B) -> usize {
    let gens = add_generators(b);
    (0..b.size())
        .filter(|&a| {
            let na = b.neg(a);
            gens.iter().all(|&s| b.add(na, b.circ(a, s)) == s)
        })
        .count()
}

fn circ_order<B: BraceOps>(b: &B, x: usize) -> Option<usize> {
    let mut y = x;
    for k in 1..=b.size() {
        if y == 0 {
            return Some(k);
        }
        y = b.circ(y, x);
    }
    None
}

/// The `∘`-inverse of `x`, found from the cyclic subgroup it generates.
pub fn circ_inverse<B: BraceOps>(b: &B, x: usize) -> Option<usize> {
    let k = circ_order(b, x)?;
    let mut y = 0;
    for _ in 0..k - 1 {
        y = b.circ(y, x);
    }
    Some(y)
}

/// Elements of `∘`-order `p` and `q`, which together generate `(A, ∘)`.
pub fn circ_generators<B: BraceOps + HasParams>(b: &B) -> Option<(usize, usize)> {
    let prm = b.params_ref();
    let (p, q) = (prm.p() as usize, prm.q() as usize);
    let [sigma, tau] = add_generators(b);
    let find = |want: usize, hint: usize| {
        std::iter::once(hint)
            .chain(0..b.size())
            .find(|&x| circ_order(b, x) == Some(want))
    };
    Some((find(p, sigma)?, find(q, tau)?))
}

/// `C` if `(A, ∘)` is abelian, `M` otherwise.
pub fn circ_iso_type<B: BraceOps + HasParams>(b: &B) -> Option<GroupKind> {
    let (x, y) = circ_generators(b)?;
    Some(if b.circ(x, y) == b.circ(y, x) {
        GroupKind::C
    } else {
        GroupKind::M
    })
}

/// Bi-skew test on `∘`-generators: every `x ↦ a'∘(a + x)` must be a
/// `∘`-endomorphism. Returns `None` if `(A, ∘)` has no generators of
/// orders `p`, `q`.
pub fn biskew_by_generators<B: BraceOps + HasParams>(b: &B) -> Option<bool> {
    let n = b.size();
    let (g1, g2) = circ_generators(b)?;
    for a in 0..n {
        let ai = circ_inverse(b, a)?;
        let mu = |x: usize| b.circ(ai, b.add(a, x));
        if mu(0) != 0 {
            return Some(false);
        }
        for s in [g1, g2] {
            let ms = mu(s);
            if (0..n).any(|x| mu(b.circ(x, s)) != b.circ(mu(x), ms)) {
                return Some(false);
            }
        }
    }
    Some(true)
}
