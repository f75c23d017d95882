//! Closed-form families of regular subgroups of `Hol(C)` and `Hol(M)`.

use crate::automorphism::{alpha_beta, Aut};
use crate::error::{Error, Result};
use crate::group::{GroupElem, GroupKind, Params};
use crate::holomorph::HolElem;
use crate::subgroup::{close_subgroup, FamilyLabel, Subgroup};

fn range_err(name: &'static str, value: u32, range: String) -> Error {
    Error::OutOfRange {
        name,
        value: value as u64,
        range,
    }
}

fn alpha_beta_m(params: &Params) -> Result<(Aut, Aut)> {
    let (alpha, beta) = alpha_beta(params, GroupKind::M)?;
    Ok((alpha, beta.expect("β exists on M")))
}

/// `A × {1}`: the group of left translations.
pub fn trivial_subgroup(params: &Params, kind: GroupKind) -> Result<Subgroup> {
    params.require_kind(kind)?;
    let gens = [
        HolElem::translation(params.sigma(kind)),
        HolElem::translation(params.tau(kind)),
    ];
    Ok(close_subgroup(params, &gens)?.with_label(FamilyLabel::Trivial))
}

/// `G_b = ⟨σ, τ^b α⟩ ≤ Hol(C)` for `1 <= b <= q-1`.
pub fn family_cyclic_gb(params: &Params, b: u32) -> Result<Subgroup> {
    params.require_congruent()?;
    let q = params.q();
    if b == 0 || b >= q {
        return Err(range_err("b", b, format!("1..{q}")));
    }
    let (alpha, _) = alpha_beta(params, GroupKind::C)?;
    let gens = [
        HolElem::translation(params.sigma(GroupKind::C)),
        HolElem::new(GroupElem::new(GroupKind::C, 0, b), alpha)?,
    ];
    Ok(close_subgroup(params, &gens)?.with_label(FamilyLabel::Gb { b }))
}

/// `G_c = ⟨σ^{a0} α, σ^c τ⟩ ≤ Hol(M)` for `0 <= c <= p-1`.
pub fn family_meta_gc(params: &Params, c: u32) -> Result<Subgroup> {
    let (alpha, _) = alpha_beta_m(params)?;
    let p = params.p();
    if c >= p {
        return Err(range_err("c", c, format!("0..{p}")));
    }
    let a0 = params.a0().expect("congruent");
    let gens = [
        HolElem::new(GroupElem::new(GroupKind::M, a0, 0), alpha)?,
        HolElem::translation(GroupElem::new(GroupKind::M, c, 1)),
    ];
    Ok(close_subgroup(params, &gens)?.with_label(FamilyLabel::Gc { c }))
}

/// `G_{a,b} = ⟨σ, τ^a α^b β⟩ ≤ Hol(M)` for `1 <= a <= q-1`, `0 <= b <= p-1`.
pub fn family_meta_gab(params: &Params, a: u32, b: u32) -> Result<Subgroup> {
    let (alpha, beta) = alpha_beta_m(params)?;
    let (p, q) = (params.p(), params.q());
    if a == 0 || a >= q {
        return Err(range_err("a", a, format!("1..{q}")));
    }
    if b >= p {
        return Err(range_err("b", b, format!("0..{p}")));
    }
    let f = alpha.pow(params, b as u64).then_after(params, &beta);
    let gens = [
        HolElem::translation(params.sigma(GroupKind::M)),
        HolElem::new(GroupElem::new(GroupKind::M, 0, a), f)?,
    ];
    Ok(close_subgroup(params, &gens)?.with_label(FamilyLabel::Gab { a, b }))
}

/// `G_{c,d} = ⟨σ^{a0} α, σ^c τ^d β⟩ ≤ Hol(M)` for `1 <= d <= q-1`, `0 <= c <= p-1`,
/// with `c = 0` forced when `d = q-1`.
pub fn family_meta_gcd(params: &Params, c: u32, d: u32) -> Result<Subgroup> {
    let (alpha, beta) = alpha_beta_m(params)?;
    let (p, q) = (params.p(), params.q());
    if d == 0 || d >= q {
        return Err(range_err("d", d, format!("1..{q}")));
    }
    if c >= p {
        return Err(range_err("c", c, format!("0..{p}")));
    }
    if d == q - 1 && c != 0 {
        return Err(Error::Precondition(format!(
            "G_cd with d = q-1 = {d} requires c = 0, got c = {c}"
        )));
    }
    let a0 = params.a0().expect("congruent");
    let gens = [
        HolElem::new(GroupElem::new(GroupKind::M, a0, 0), alpha)?,
        HolElem::new(GroupElem::new(GroupKind::M, c, d), beta)?,
    ];
    Ok(close_subgroup(params, &gens)?.with_label(FamilyLabel::Gcd { c, d }))
}

/// Every member of every closed-form family over the given additive group,
/// trivial subgroup first.
pub fn all_family_subgroups(params: &Params, kind: GroupKind) -> Result<Vec<Subgroup>> {
    params.require_kind(kind)?;
    let mut out = vec![trivial_subgroup(params, kind)?];
    if !params.congruent() {
        return Ok(out);
    }
    let (p, q) = (params.p(), params.q());
    match kind {
        GroupKind::C => {
            for b in 1..q {
                out.push(family_cyclic_gb(params, b)?);
            }
        }
        GroupKind::M => {
            for c in 0..p {
                out.push(family_meta_gc(params, c)?);
            }
            for a in 1..q {
                for b in 0..p {
                    out.push(family_meta_gab(params, a, b)?);
                }
            }
            for d in 1..q {
                let cs = if d == q - 1 { 0..1 } else { 0..p };
                for c in cs {
                    out.push(family_meta_gcd(params, c, d)?);
                }
            }
        }
    }
    Ok(out)
}
