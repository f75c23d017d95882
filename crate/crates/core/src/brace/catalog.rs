use crate::group::{GroupKind, Params};

use super::{BraceLabel, CircFormula, SkewBrace};

/// A catalog brace before its tables are materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub add_kind: GroupKind,
    pub label: BraceLabel,
    pub formula: CircFormula,
}

/// The closed-form list of skew braces of order `pq` up to isomorphism:
/// a single trivial brace when `p ≢ 1 (mod q)`, otherwise `2q + 2` braces.
///
/// Exponents `γ`, `μ` run over `2..=q`; `q` stands for exponent `0`.
pub fn catalog_entries(params: &Params) -> Vec<CatalogEntry> {
    use GroupKind::{C, M};
    let entry = |add_kind, label, twist, scale| CatalogEntry {
        add_kind,
        label,
        formula: CircFormula { twist, scale },
    };
    let mut out = vec![entry(C, BraceLabel::TrivialC, 0, 0)];
    if !params.congruent() {
        return out;
    }
    let q = params.q();
    out.push(entry(C, BraceLabel::CyclicNontrivial, 0, 1));
    out.push(entry(M, BraceLabel::TrivialM, 0, 1));
    out.push(entry(M, BraceLabel::KerQ, 1, 1));
    for gamma in 2..=q {
        out.push(entry(M, BraceLabel::Gamma { gamma }, 0, gamma % q));
    }
    for mu in 2..=q {
        out.push(entry(M, BraceLabel::Mu { mu }, 1, mu % q));
    }
    out
}

/// [`catalog_entries`] with tables.
pub fn catalog(params: &Params) -> Vec<SkewBrace> {
    catalog_entries(params)
        .into_iter()
        .map(|e| {
            SkewBrace::from_formula(params, e.add_kind, e.formula, e.label)
                .expect("catalog kinds exist for these parameters")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::BraceOps;

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(&Params::new(5, 3).unwrap()).len(), 1);
        assert_eq!(catalog(&Params::new(7, 3).unwrap()).len(), 8);
        assert_eq!(catalog(&Params::new(7, 2).unwrap()).len(), 6);
        assert_eq!(catalog_entries(&Params::new(11, 5).unwrap()).len(), 12);
        assert_eq!(catalog_entries(&Params::new(13, 3).unwrap()).len(), 8);
    }

    #[test]
    fn gamma_q_is_abelian() {
        let params = Params::new(7, 3).unwrap();
        let b = catalog(&params)
            .into_iter()
            .find(|b| b.label() == BraceLabel::Gamma { gamma: 3 })
            .unwrap();
        let n = b.size();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(b.circ(x, y), b.circ(y, x));
            }
        }
    }
}
