//! Set-theoretic solutions of the Yang–Baxter equation attached to skew
//! braces.
//!
//! For a skew brace `A` the map `r(a, b) = (σ_a(b), τ_b(a))` with
//!
//! ```text
//! σ_a(b) = λ_a(b) = -a + a∘b
//! τ_b(a) = λ_a(b)' ∘ a ∘ b        (' is the ∘-inverse)
//! ```
//!
//! is a non-degenerate solution, involutive iff `(A, +)` is abelian.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::{circ_inverse, verify_skew_axioms, BraceOps, SkewBrace};
use crate::error::{Error, Result};

/// `r(x, y) = (σ_x(y), τ_y(x))` on flat indices `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YbeSolution {
    pub size: usize,
    /// `sigma[x * size + y] = σ_x(y)`.
    pub sigma: Vec<u32>,
    /// `tau[y * size + x] = τ_y(x)`.
    pub tau: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YbeReport {
    pub braid: bool,
    pub nondegenerate: bool,
    pub involutive: bool,
}

impl YbeReport {
    /// Braid relation and non-degeneracy; involutivity is a property, not a
    /// requirement.
    pub fn is_solution(&self) -> bool {
        self.braid && self.nondegenerate
    }
}

impl YbeSolution {
    /// Wraps raw tables after a shape check.
    pub fn from_tables(size: usize, sigma: Vec<u32>, tau: Vec<u32>) -> Result<Self> {
        let ok = |t: &[u32]| t.len() == size * size && t.iter().all(|&v| (v as usize) < size);
        if !ok(&sigma) || !ok(&tau) {
            return Err(Error::Malformed(format!(
                "solution tables must have {} entries below {size}",
                size * size
            )));
        }
        Ok(YbeSolution { size, sigma, tau })
    }

    /// The flip `r(x, y) = (y, x)`.
    pub fn flip(size: usize) -> Self {
        let mut sigma = Vec::with_capacity(size * size);
        let mut tau = Vec::with_capacity(size * size);
        for _ in 0..size {
            for col in 0..size {
                sigma.push(col as u32);
                tau.push(col as u32);
            }
        }
        YbeSolution { size, sigma, tau }
    }

    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.size + y] as usize
    }

    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y * self.size + x] as usize
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.tau(y, x))
    }
}

/// The canonical solution of a skew brace. Fails on anything that is not a
/// skew brace, and on a solution that does not pass the braid check.
pub fn solution_from_brace(b: &SkewBrace) -> Result<YbeSolution> {
    let report = verify_skew_axioms(b);
    if !report.passed() {
        return Err(Error::NotABrace(format!("{report:?}")));
    }
    let n = b.size();
    let inv: Vec<usize> = (0..n)
        .map(|x| circ_inverse(b, x).expect("(A, ∘) is a group"))
        .collect();
    let mut sigma = vec![0u32; n * n];
    let mut tau = vec![0u32; n * n];
    for a in 0..n {
        let na = b.neg(a);
        for c in 0..n {
            let l = b.add(na, b.circ(a, c));
            sigma[a * n + c] = l as u32;
            tau[c * n + a] = b.circ(inv[l], b.circ(a, c)) as u32;
        }
    }
    let sol = YbeSolution {
        size: n,
        sigma,
        tau,
    };
    if !braid_holds(&sol) {
        return Err(Error::NotABrace(format!(
            "solution from {} fails the braid relation",
            b.label()
        )));
    }
    Ok(sol)
}

fn braid_holds(sol: &YbeSolution) -> bool {
    let n = sol.size;
    (0..n).into_par_iter().all(|x| {
        for y in 0..n {
            // r12 first: (x, y, z) -> (σ_x y, τ_y x, z)
            let (a1, b1) = sol.apply(x, y);
            for z in 0..n {
                // left: r12 r23 r12
                let (b2, c2) = sol.apply(b1, z);
                let (a3, b3) = sol.apply(a1, b2);
                let left = (a3, b3, c2);
                // right: r23 r12 r23
                let (y1, z1) = sol.apply(y, z);
                let (x2, y2) = sol.apply(x, y1);
                let (y3, z3) = sol.apply(y2, z1);
                if left != (x2, y3, z3) {
                    return false;
                }
            }
        }
        true
    })
}

fn rows_are_permutations(n: usize, table: &[u32]) -> bool {
    table.chunks(n).all(|row| {
        let mut seen = vec![false; n];
        row.iter()
            .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    })
}

/// Exhaustive braid, non-degeneracy and involutivity checks.
pub fn verify_solution(sol: &YbeSolution) -> YbeReport {
    let n = sol.size;
    let involutive = (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = sol.apply(x, y);
            sol.apply(u, v) == (x, y)
        })
    });
    YbeReport {
        braid: braid_holds(sol),
        nondegenerate: rows_are_permutations(n, &sol.sigma) && rows_are_permutations(n, &sol.tau),
        involutive,
    }
}
