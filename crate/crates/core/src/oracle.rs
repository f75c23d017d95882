//! Brute-force enumeration of regular subgroups of `Hol(A)`.
//!
//! This path uses nothing but holomorph arithmetic, so it serves as an
//! independent check on the closed-form families. A group of order `pq` is
//! generated by any element of order `p` together with any element of order
//! `q`, so closing every such pair and keeping the regular results finds all
//! regular subgroups. Elements with a fixed point cannot lie in a regular
//! subgroup and are discarded up front.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{GroupKind, Params};
use crate::holomorph::{all_hol_elements, HolElem};
use crate::subgroup::{closure, is_regular, Subgroup};

/// Largest `pq` the oracle accepts by default.
pub const DEFAULT_ORACLE_BUDGET: u64 = 39;

/// One generator per cyclic subgroup of order `order` made of fixed-point-free
/// elements.
fn cyclic_generators(params: &Params, candidates: &[HolElem], order: u64) -> Vec<HolElem> {
    let mut seen: BTreeSet<HolElem> = BTreeSet::new();
    let mut gens = Vec::new();
    for x in candidates {
        if seen.contains(x) || x.order(params) != order {
            continue;
        }
        let mut y = *x;
        for _ in 1..order {
            seen.insert(y);
            y = y.mul_raw(params, x);
        }
        gens.push(*x);
    }
    gens
}

/// All regular subgroups of `Hol(A)`, sorted by canonical element list.
pub fn enumerate_regular_bruteforce(
    params: &Params,
    kind: GroupKind,
    budget: u64,
) -> Result<Vec<Subgroup>> {
    params.require_kind(kind)?;
    let order = params.order() as u64;
    if order > budget {
        return Err(Error::BudgetExceeded { order, budget });
    }
    let (p, q) = (params.p() as u64, params.q() as u64);
    let free: Vec<HolElem> = all_hol_elements(params, kind)?
        .into_iter()
        .filter(|h| h.is_fixed_point_free(params))
        .collect();
    let p_gens = cyclic_generators(params, &free, p);
    let q_gens = cyclic_generators(params, &free, q);
    let cap = params.order();

    let found: Vec<(Vec<HolElem>, [HolElem; 2])> = p_gens
        .par_iter()
        .flat_map_iter(|x| {
            q_gens.iter().filter_map(move |y| {
                let gens = [*x, *y];
                let els = closure(params, &gens, Some(cap))?;
                (els.len() == cap).then_some((els, gens))
            })
        })
        .collect();

    let mut unique: BTreeMap<Vec<HolElem>, Subgroup> = BTreeMap::new();
    for (els, gens) in found {
        let s = Subgroup::from_parts(kind, els, gens.to_vec(), None);
        if is_regular(params, &s) {
            unique.entry(s.elements().to_vec()).or_insert(s);
        }
    }
    Ok(unique.into_values().collect())
}
