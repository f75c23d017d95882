//! Counts `e'(G, A, m)` of regular subgroups of `Hol(A)` isomorphic to `G`
//! whose image in `Aut(A)` has size `m`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{GroupKind, Params};
use crate::oracle::enumerate_regular_bruteforce;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EPrimeKey {
    /// Isomorphism type of the regular subgroup.
    pub iso: GroupKind,
    /// The additive group `A`.
    pub add: GroupKind,
    /// `|π₂(G)|`.
    pub m: usize,
}

impl fmt::Display for EPrimeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e'({},{},{})", self.iso, self.add, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// From the sizes of the closed-form families.
    ClosedForm,
    /// From brute-force enumeration, subject to a `pq` budget.
    Oracle { budget: u64 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EPrimeTable {
    entries: BTreeMap<EPrimeKey, usize>,
}

impl EPrimeTable {
    pub fn get(&self, iso: GroupKind, add: GroupKind, m: usize) -> usize {
        self.entries
            .get(&EPrimeKey { iso, add, m })
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (EPrimeKey, usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Equal as functions on keys, with absent keys read as zero.
    pub fn agrees_with(&self, other: &EPrimeTable) -> bool {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .all(|k| self.get(k.iso, k.add, k.m) == other.get(k.iso, k.add, k.m))
    }

    /// Keys on which the two tables differ (zero for absent keys).
    pub fn differences(&self, other: &EPrimeTable) -> Vec<(EPrimeKey, usize, usize)> {
        let keys: BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.get(k.iso, k.add, k.m), other.get(k.iso, k.add, k.m));
                (a != b).then_some((*k, a, b))
            })
            .collect()
    }

    fn set(&mut self, iso: GroupKind, add: GroupKind, m: usize, count: usize) {
        self.entries.insert(EPrimeKey { iso, add, m }, count);
    }

    /// Tallies an explicit list of regular subgroups of `Hol(kind)`.
    pub fn from_subgroups(params: &Params, kind: GroupKind, subs: &[Subgroup]) -> Self {
        let mut t = EPrimeTable::default();
        for s in subs {
            *t.entries
                .entry(EPrimeKey {
                    iso: s.iso_type(params),
                    add: kind,
                    m: s.pi2_size(),
                })
                .or_insert(0) += 1;
        }
        t
    }

    /// The table predicted by the family sizes, zero entries included.
    pub fn closed_form(params: &Params, kind: GroupKind) -> Result<Self> {
        use GroupKind::{C, M};
        params.require_kind(kind)?;
        let (p, q) = (params.p() as usize, params.q() as usize);
        let mut t = EPrimeTable::default();
        t.set(kind, kind, 1, 1);
        if !params.congruent() {
            return Ok(t);
        }
        match kind {
            C => {
                t.set(C, C, q, 0);
                t.set(M, C, q, q - 1);
            }
            M => {
                t.set(C, M, p, p);
                t.set(M, M, p, 0);
                t.set(M, M, q, p * (q - 2));
                t.set(C, M, q, p);
                t.set(M, M, p * q, p * (q - 2) + 1);
            }
        }
        Ok(t)
    }
}

pub fn e_prime_counts(params: &Params, kind: GroupKind, mode: CountMode) -> Result<EPrimeTable> {
    match mode {
        CountMode::ClosedForm => EPrimeTable::closed_form(params, kind),
        CountMode::Oracle { budget } => {
            let subs = enumerate_regular_bruteforce(params, kind, budget)?;
            Ok(EPrimeTable::from_subgroups(params, kind, &subs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::all_family_subgroups;
    use GroupKind::{C, M};

    #[test]
    fn closed_form_values_7_3() {
        let params = Params::new(7, 3).unwrap();
        let c = e_prime_counts(&params, C, CountMode::ClosedForm).unwrap();
        assert_eq!(c.get(C, C, 3), 0);
        assert_eq!(c.get(M, C, 3), 2);
        assert_eq!(c.total(), 3);
        let m = e_prime_counts(&params, M, CountMode::ClosedForm).unwrap();
        assert_eq!(m.get(C, M, 7), 7);
        assert_eq!(m.get(M, M, 7), 0);
        assert_eq!(m.get(M, M, 3), 7);
        assert_eq!(m.get(C, M, 3), 7);
        assert_eq!(m.get(M, M, 21), 8);
        assert_eq!(m.total(), 30);
    }

    #[test]
    fn closed_form_agrees_with_families() {
        for (p, q) in [(7, 3), (13, 3), (11, 5), (7, 2), (5, 3)] {
            let params = Params::new(p, q).unwrap();
            for kind in params.kinds() {
                let fam = all_family_subgroups(&params, kind).unwrap();
                let from_fam = EPrimeTable::from_subgroups(&params, kind, &fam);
                let closed = EPrimeTable::closed_form(&params, kind).unwrap();
                assert!(
                    closed.agrees_with(&from_fam),
                    "({p},{q}) {kind}: {:?}",
                    closed.differences(&from_fam)
                );
            }
        }
    }

    #[test]
    fn agreement_ignores_explicit_zeros() {
        let mut a = EPrimeTable::default();
        let mut b = EPrimeTable::default();
        a.set(C, C, 1, 1);
        a.set(C, C, 3, 0);
        b.set(C, C, 1, 1);
        assert!(a.agrees_with(&b));
        b.set(M, C, 3, 1);
        assert!(!a.agrees_with(&b));
        assert_eq!(a.differences(&b).len(), 1);
    }
}
