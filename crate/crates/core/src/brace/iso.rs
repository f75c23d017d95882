//! Skew-brace isomorphism search.
//!
//! An isomorphism must in particular be an isomorphism of the additive
//! groups, so it is fixed by the images of `σ = (1,0)` and `τ = (0,1)`.
//! We try every pair of images with the right additive orders, extend by
//! `(n, m) ↦ n·x + m·y`, and check both operations on all pairs.

use super::{BraceOps, SkewBrace};

fn add_order(b: &SkewBrace, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = b.add(y, x);
        k += 1;
    }
    k
}

fn multiples(b: &SkewBrace, x: usize, count: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(count);
    let mut acc = 0;
    for _ in 0..count {
        out.push(acc);
        acc = b.add(acc, x);
    }
    out
}

fn candidate_map(b1: &SkewBrace, b2: &SkewBrace, x: usize, y: usize) -> Option<Vec<usize>> {
    let (p, q) = (b1.params().p() as usize, b1.params().q() as usize);
    let xs = multiples(b2, x, p);
    let ys = multiples(b2, y, q);
    let n = b1.size();
    let mut hit = vec![false; n];
    (0..n)
        .map(|i| {
            let e = b1.elem(i);
            let v = b2.add(xs[e.n() as usize], ys[e.m() as usize]);
            (!std::mem::replace(&mut hit[v], true)).then_some(v)
        })
        .collect()
}

fn is_hom(
    n: usize,
    map: &[usize],
    op1: impl Fn(usize, usize) -> usize,
    op2: impl Fn(usize, usize) -> usize,
) -> bool {
    (0..n).all(|a| (0..n).all(|c| map[op1(a, c)] == op2(map[a], map[c])))
}

/// A bijection `φ` (as flat indices, `φ[i]` the image of `i`) that is a
/// homomorphism for both `+` and `∘`, if one exists.
pub fn find_isomorphism(b1: &SkewBrace, b2: &SkewBrace) -> Option<Vec<usize>> {
    let n = b1.size();
    if n != b2.size() || b1.params().p() != b2.params().p() || b1.add_kind() != b2.add_kind() {
        return None;
    }
    let (p, q) = (b1.params().p() as usize, b1.params().q() as usize);
    let orders: Vec<usize> = (0..n).map(|x| add_order(b2, x)).collect();
    let xs: Vec<usize> = (0..n).filter(|&x| orders[x] == p).collect();
    let ys: Vec<usize> = (0..n).filter(|&y| orders[y] == q).collect();
    for &x in &xs {
        for &y in &ys {
            let Some(map) = candidate_map(b1, b2, x, y) else {
                continue;
            };
            if is_hom(n, &map, |a, c| b1.add(a, c), |a, c| b2.add(a, c))
                && is_hom(n, &map, |a, c| b1.circ(a, c), |a, c| b2.circ(a, c))
            {
                return Some(map);
            }
        }
    }
    None
}

pub fn are_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> bool {
    find_isomorphism(b1, b2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{catalog, BraceLabel};
    use crate::group::Params;

    #[test]
    fn reflexive_with_identity_witness() {
        let params = Params::new(7, 3).unwrap();
        for b in catalog(&params) {
            let map = find_isomorphism(&b, &b).unwrap();
            // any witness is a brace automorphism
            for a in 0..b.size() {
                for c in 0..b.size() {
                    assert_eq!(map[b.circ(a, c)], b.circ(map[a], map[c]));
                }
            }
        }
    }

    #[test]
    fn catalog_pairwise_non_isomorphic() {
        for (p, q) in [(7, 3), (7, 2), (5, 2)] {
            let cat = catalog(&Params::new(p, q).unwrap());
            for (i, a) in cat.iter().enumerate() {
                for b in &cat[i + 1..] {
                    assert!(!are_isomorphic(a, b), "{a} ≅ {b}");
                }
            }
        }
    }

    #[test]
    fn isomorphic_copy_is_found() {
        // transport the kerq brace along an additive automorphism
        let params = Params::new(7, 3).unwrap();
        let b = catalog(&params)
            .into_iter()
            .find(|b| b.label() == BraceLabel::KerQ)
            .unwrap();
        let f = crate::automorphism::Aut::M { i: 3, j: 5 };
        let n = b.size();
        let phi: Vec<usize> = (0..n)
            .map(|i| b.index(f.eval(&params, b.elem(i))))
            .collect();
        let mut inv = vec![0; n];
        for (i, &v) in phi.iter().enumerate() {
            inv[v] = i;
        }
        let mut circ = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                circ[x * n + y] = phi[b.circ(inv[x], inv[y])] as u32;
            }
        }
        let moved =
            SkewBrace::from_tables(&params, b.add_kind(), circ, BraceLabel::Imported).unwrap();
        assert_ne!(moved.circ_table(), b.circ_table());
        assert!(are_isomorphic(&b, &moved));
    }
}
