//! Conjugation of subgroups of `Hol(A)` by `Aut(A)` and the resulting orbits.

use std::collections::{BTreeMap, HashMap};

use crate::automorphism::{all_automorphisms, check_kind, Aut};
use crate::error::Result;
use crate::group::Params;
use crate::subgroup::Subgroup;

/// `{ (0,f) h (0,f)^-1 : h ∈ S }`.
pub fn conjugate_subgroup(params: &Params, s: &Subgroup, f: &Aut) -> Result<Subgroup> {
    check_kind(s.kind(), f.kind())?;
    Ok(conjugate(params, s, f))
}

fn conjugate(params: &Params, s: &Subgroup, f: &Aut) -> Subgroup {
    let els = s
        .elements()
        .iter()
        .map(|h| h.conjugate_by(params, f))
        .collect();
    let gens = s.gens().iter().map(|h| h.conjugate_by(params, f)).collect();
    Subgroup::from_parts(s.kind(), els, gens, None)
}

/// One conjugation orbit, restricted to the subgroups handed to
/// [`compute_orbits`].
#[derive(Debug, Clone)]
pub struct Orbit {
    /// Lexicographically smallest canonical form in the full orbit.
    pub representative: Subgroup,
    /// Indices into the input list.
    pub members: Vec<usize>,
    /// Size of the full orbit under `Aut(A)`.
    pub size: usize,
}

/// Partitions `subgroups` into `Aut(A)`-conjugation orbits, ordered by
/// representative.
pub fn compute_orbits(params: &Params, subgroups: &[Subgroup]) -> Result<Vec<Orbit>> {
    let Some(first) = subgroups.first() else {
        return Ok(Vec::new());
    };
    let kind = first.kind();
    for s in subgroups {
        check_kind(kind, s.kind())?;
    }
    let auts = all_automorphisms(params, kind)?;
    let index: HashMap<&[_], usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.elements(), i))
        .collect();

    let mut assigned = vec![false; subgroups.len()];
    let mut orbits = Vec::new();
    for i in 0..subgroups.len() {
        if assigned[i] {
            continue;
        }
        let mut full: BTreeMap<Vec<_>, Subgroup> = BTreeMap::new();
        for f in &auts {
            let c = conjugate(params, &subgroups[i], f);
            full.entry(c.elements().to_vec()).or_insert(c);
        }
        let mut members = Vec::new();
        for els in full.keys() {
            if let Some(&j) = index.get(els.as_slice()) {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        let size = full.len();
        let (min_els, min_sub) = full.into_iter().next().expect("orbit contains S");
        let representative = match index.get(min_els.as_slice()) {
            Some(&j) => subgroups[j].clone(),
            None => min_sub,
        };
        orbits.push(Orbit {
            representative,
            members,
            size,
        });
    }
    orbits.sort_by(|a, b| a.representative.elements().cmp(b.representative.elements()));
    Ok(orbits)
}
