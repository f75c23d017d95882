use crate::arith;
use crate::automorphism::{check_kind, Aut};
use crate::error::{Error, Result};
use crate::group::{GroupKind, Params};
use crate::subgroup::Subgroup;

use super::{BraceLabel, CircFormula, SkewBrace};

/// For a regular subgroup `S`, the map `a ↦ f` with `(a, f) ∈ S`, indexed by
/// the flat index of `a`.
pub fn regular_section(params: &Params, kind: GroupKind, s: &Subgroup) -> Result<Vec<Aut>> {
    check_kind(kind, s.kind())?;
    params.require_kind(kind)?;
    let n = params.order();
    if s.len() != n {
        return Err(Error::NotRegular(format!(
            "order {} differs from |A| = {n}",
            s.len()
        )));
    }
    let mut section: Vec<Option<Aut>> = vec![None; n];
    for h in s.elements() {
        let slot = &mut section[params.flat(h.point())];
        if slot.is_some() {
            return Err(Error::NotRegular(format!(
                "two elements over the point {}",
                h.point()
            )));
        }
        *slot = Some(h.aut());
    }
    section
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotRegular("π₁ is not onto A".into()))
}

/// The skew brace `a ∘ b = a + f(b)` where `(a, f)` is the unique element of
/// `S` over `a`.
pub fn brace_from_regular(params: &Params, kind: GroupKind, s: &Subgroup) -> Result<SkewBrace> {
    let section = regular_section(params, kind, s)?;
    let n = params.order();
    let mut circ = Vec::with_capacity(n * n);
    for (ia, f) in section.iter().enumerate() {
        let a = params.from_flat(kind, ia);
        for b in params.elements(kind) {
            circ.push(params.flat(params.add(a, f.eval(params, b))) as u32);
        }
    }
    SkewBrace::from_tables(
        params,
        kind,
        circ,
        BraceLabel::FromSubgroup {
            subgroup: s.label(),
        },
    )
}

fn unit_of_order_dividing_q(params: &Params, name: &str, x: u32) -> Result<u64> {
    let p = params.p() as u64;
    let x = x as u64 % p;
    match arith::mult_order(x, p) {
        Some(k) if (params.q() as u64).is_multiple_of(k) => Ok(x),
        _ => Err(Error::Precondition(format!(
            "{name} = {x} is not a unit of order dividing q = {} modulo {p}",
            params.q()
        ))),
    }
}

/// Exponent `k` in `0..q` with `g^k = x`.
fn log_g(params: &Params, x: u64) -> u64 {
    if x == 1 {
        return 0;
    }
    (1..params.q() as u64)
        .find(|&k| params.gpow(k) as u64 == x)
        .expect("units of order dividing q are powers of g")
}

/// The brace on `Z_p × Z_q` whose `+` is the semidirect product twisted by
/// `η(1) = eta` and whose `∘` is the one twisted by `ρ(1) = rho`:
///
/// ```text
/// (x, s) + (y, t) = (x + eta^s y, s + t)
/// (x, s) ∘ (y, t) = (x + rho^s y, s + t)
/// ```
///
/// Both `eta` and `rho` must be units modulo `p` of order dividing `q`
/// (automorphisms of a cyclic group commute, so no further condition is
/// needed). When `eta = g^k ≠ 1` the carrier is relabelled by
/// `(x, s) ↦ (x, k s)` so the additive group is the canonical `M`.
pub fn semidirect_biskew(params: &Params, eta: u32, rho: u32) -> Result<SkewBrace> {
    let eta_u = unit_of_order_dividing_q(params, "eta", eta)?;
    let rho_u = unit_of_order_dividing_q(params, "rho", rho)?;
    let (p, q) = (params.p() as u64, params.q() as u64);

    let (kind, k) = if eta_u == 1 {
        (GroupKind::C, 1)
    } else {
        (GroupKind::M, log_g(params, eta_u))
    };
    let r = log_g(params, rho_u);
    let relabel = |x: u64, s: u64| (x * q + k * s % q) as usize;

    let n = params.order();
    let mut circ = vec![0u32; n * n];
    let rho_pow: Vec<u64> = (0..q).map(|s| arith::pow_mod(rho_u, s, p)).collect();
    for x in 0..p {
        for s in 0..q {
            let row = relabel(x, s);
            for y in 0..p {
                for t in 0..q {
                    let col = relabel(y, t);
                    let z = (x + rho_pow[s as usize] * y) % p;
                    circ[row * n + col] = relabel(z, (s + t) % q) as u32;
                }
            }
        }
    }
    let mut brace = SkewBrace::from_tables(
        params,
        kind,
        circ,
        BraceLabel::Semidirect {
            eta: eta_u as u32,
            rho: rho_u as u32,
        },
    )?;
    // in the new coordinates m = k s, so rho^s = g^(r s) = g^(r k^-1 m)
    let k_inv = arith::inv_mod(k, q).expect("k is a unit mod q");
    brace.set_formula(Some(CircFormula {
        twist: 0,
        scale: (r * k_inv % q) as u32,
    }));
    Ok(brace)
}
