//! Acceptance criteria, one PASS/FAIL line each. Expected values are either
//! fixed numbers or recomputed here by direct, table-level checks that do
//! not go through the library's own shortcuts.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use skewbrace_cli::run_from_args;
use skewbrace_core::brace::{
    are_isomorphic, brace_from_regular, lambda_of, verify_skew_axioms, BraceOps,
};
use skewbrace_core::export::BraceDescriptor;
use skewbrace_core::families::all_family_subgroups;
use skewbrace_core::oracle::{enumerate_regular_bruteforce, DEFAULT_ORACLE_BUDGET};
use skewbrace_core::orbits::compute_orbits;
use skewbrace_core::{
    catalog, solution_from_brace, verify_solution, BraceLabel, GroupKind, Params, SkewBrace,
    Subgroup,
};

use GroupKind::{C, M};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn params(p: u64, q: u64) -> Params {
    Params::new(p, q).unwrap()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skewbrace").chain(args.iter().copied());
    let code = run_from_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn ac1_counts() -> Outcome {
    let cases = [
        (7, 3, 8),
        (13, 3, 8),
        (11, 5, 12),
        (7, 2, 6),
        (5, 3, 1),
        (11, 3, 1),
        (13, 5, 1),
    ];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (p, q, want) in cases {
        let (ps, qs) = (p.to_string(), q.to_string());
        let t = Instant::now();
        let (code, out) = cli(&["classify", "--p", &ps, "--q", &qs]);
        let elapsed = t.elapsed();
        let head = if want == 1 {
            "1 skew brace (trivial, cyclic)".to_string()
        } else {
            format!("{want} skew braces")
        };
        let listed = out.lines().filter(|l| l.starts_with("  ")).count();
        seen.push(format!("({p},{q})={listed}"));
        if code != 0
            || out.lines().next() != Some(head.as_str())
            || listed != want
            || elapsed >= Duration::from_secs(1)
        {
            bad.push(format!(
                "({p},{q}): exit {code}, {listed} listed, {elapsed:?}"
            ));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} {}", seen.join(" "), bad.join("; ")),
    )
}

/// `(is_abelian, |π₂|)` computed from the element list.
fn shape(params: &Params, s: &Subgroup) -> (GroupKind, usize) {
    let els = s.elements();
    let abelian = els.iter().all(|x| {
        els.iter()
            .all(|y| x.mul(params, y).unwrap() == y.mul(params, x).unwrap())
    });
    let auts: BTreeSet<_> = els.iter().map(|h| h.aut()).collect();
    (if abelian { C } else { M }, auts.len())
}

fn ac2_eprime() -> Outcome {
    let mut bad = Vec::new();
    let t = Instant::now();
    for (p, q) in [(7usize, 3usize), (5, 3)] {
        let prm = params(p as u64, q as u64);
        let congruent = (p - 1) % q == 0;
        for kind in prm.kinds() {
            let subs = enumerate_regular_bruteforce(&prm, kind, DEFAULT_ORACLE_BUDGET).unwrap();
            let shapes: Vec<_> = subs.iter().map(|s| shape(&prm, s)).collect();
            let count = |iso, m| shapes.iter().filter(|&&x| x == (iso, m)).count();
            let mut want: Vec<((GroupKind, usize), usize)> = vec![((kind, 1), 1)];
            if congruent {
                match kind {
                    C => want.extend([((C, q), 0), ((M, q), q - 1)]),
                    M => want.extend([
                        ((C, p), p),
                        ((M, p), 0),
                        ((M, q), p * (q - 2)),
                        ((C, q), p),
                        ((M, p * q), p * (q - 2) + 1),
                    ]),
                }
            }
            let listed: usize = want.iter().map(|w| w.1).sum();
            if subs.len() != listed {
                bad.push(format!(
                    "({p},{q}) {kind}: {} subgroups, expected {listed}",
                    subs.len()
                ));
            }
            if shapes.iter().filter(|s| s.1 == 1).count() != 1 {
                bad.push(format!("({p},{q}) {kind}: not exactly one with |π₂| = 1"));
            }
            for ((iso, m), n) in want {
                let got = count(iso, m);
                if got != n {
                    bad.push(format!(
                        "({p},{q}) e'({iso},{kind},{m}) = {got}, expected {n}"
                    ));
                }
            }
        }
    }
    let elapsed = t.elapsed();
    let (code, _) = cli(&["oracle-check", "--p", "7", "--q", "3"]);
    if code != 0 {
        bad.push(format!("oracle-check exit {code}"));
    }
    if elapsed >= Duration::from_secs(60) {
        bad.push(format!("took {elapsed:?}"));
    }
    outcome(bad.is_empty(), format!("{elapsed:?} {}", bad.join("; ")))
}

fn ac3_orbits() -> Outcome {
    let t = Instant::now();
    let prm = params(7, 3);
    let mut counts = Vec::new();
    for kind in [C, M] {
        let subs = enumerate_regular_bruteforce(&prm, kind, DEFAULT_ORACLE_BUDGET).unwrap();
        counts.push(compute_orbits(&prm, &subs).unwrap().len());
    }
    let elapsed = t.elapsed();
    outcome(
        counts == [2, 6] && elapsed < Duration::from_secs(60),
        format!("C: {}, M: {} in {elapsed:?}", counts[0], counts[1]),
    )
}

fn corrupt(b: &SkewBrace) -> SkewBrace {
    let n = b.size();
    let mut circ = b.circ_table().to_vec();
    circ.swap(n + 2, n + 3);
    SkewBrace::from_tables(b.params(), b.add_kind(), circ, BraceLabel::Imported).unwrap()
}

fn ac4_axioms() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (p, q) in [(7, 3), (11, 5), (7, 2)] {
        for b in catalog(&params(p, q)) {
            let t = Instant::now();
            let rep = verify_skew_axioms(&b);
            slowest = slowest.max(t.elapsed());
            if !rep.passed() {
                bad.push(format!("({p},{q}) {}: {rep:?}", b.label()));
            }
        }
    }
    let control = corrupt(&catalog(&params(7, 3))[1]);
    let rep = verify_skew_axioms(&control);
    let witnessed = !rep.passed()
        && (rep.law_violation.is_some()
            || !matches!(rep.circ_group, skewbrace_core::brace::GroupCheck::Ok));
    if !witnessed {
        bad.push("mutated control passed".into());
    }
    if slowest >= Duration::from_secs(10) {
        bad.push(format!("slowest brace {slowest:?}"));
    }
    outcome(
        bad.is_empty(),
        format!(
            "slowest {slowest:?}, control {:?} {}",
            rep.circ_group,
            bad.join("; ")
        ),
    )
}

/// Exhaustive check that `(A, ∘, +)` is a skew brace:
/// `a + (b∘c) = (a+b) ∘ a' ∘ (a+c)` with `a'` the ∘-inverse.
fn swapped_law(b: &SkewBrace) -> bool {
    let n = b.size();
    let inv: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&x| b.circ(a, x) == 0).unwrap())
        .collect();
    (0..n).all(|a| {
        (0..n).all(|x| {
            (0..n)
                .all(|y| b.add(a, b.circ(x, y)) == b.circ(b.circ(b.add(a, x), inv[a]), b.add(a, y)))
        })
    })
}

fn ac5_biskew() -> Outcome {
    let mut bad = Vec::new();
    let mut flags = Vec::new();
    for (p, q) in [(7, 3), (7, 2), (13, 3)] {
        for b in catalog(&params(p, q)) {
            let reported = BraceDescriptor::of_brace(&b, false).biskew;
            let truth = swapped_law(&b);
            let claimed = matches!(
                b.label(),
                BraceLabel::TrivialC
                    | BraceLabel::TrivialM
                    | BraceLabel::CyclicNontrivial
                    | BraceLabel::Gamma { .. }
            );
            if reported != Some(truth) || (claimed && !truth) {
                bad.push(format!(
                    "({p},{q}) {}: reported {reported:?}, exhaustive {truth}",
                    b.label()
                ));
            }
            if (p, q) == (7, 3) && !claimed {
                flags.push(format!("{}={truth}", b.label()));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("computed: {} {}", flags.join(" "), bad.join("; ")),
    )
}

fn ac6_kernels() -> Outcome {
    let mut bad = Vec::new();
    let (mut braces, mut subgroups) = (0, 0);
    for (p, q) in [(7usize, 3usize), (11, 5), (7, 2), (13, 3)] {
        let prm = params(p as u64, q as u64);
        for b in catalog(&prm) {
            let want = match b.label() {
                BraceLabel::TrivialC | BraceLabel::TrivialM => p * q,
                BraceLabel::CyclicNontrivial | BraceLabel::Gamma { .. } => p,
                BraceLabel::KerQ => q,
                BraceLabel::Mu { .. } => 1,
                _ => unreachable!(),
            };
            // ker λ straight from the definition λ_a(b) = -a + a∘b
            let n = b.size();
            let direct = (0..n)
                .filter(|&a| (0..n).all(|x| b.add(b.neg(a), b.circ(a, x)) == x))
                .count();
            let lib = lambda_of(&b).unwrap().kernel_size();
            braces += 1;
            if direct != want || lib != want {
                bad.push(format!(
                    "({p},{q}) {}: {direct}/{lib}, expected {want}",
                    b.label()
                ));
            }
        }
        for kind in prm.kinds() {
            for s in all_family_subgroups(&prm, kind).unwrap() {
                let b = brace_from_regular(&prm, kind, &s).unwrap();
                let k = lambda_of(&b).unwrap().kernel_size();
                subgroups += 1;
                let pi2: BTreeSet<_> = s.elements().iter().map(|h| h.aut()).collect();
                if k * pi2.len() != p * q {
                    bad.push(format!("({p},{q}) {:?}: {k}·{}", s.label(), pi2.len()));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{braces} catalog braces, {subgroups} subgroup braces {}",
            bad.join("; ")
        ),
    )
}

fn ac7_orbit_iso() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for (p, q) in [(3, 2), (5, 2), (7, 2), (5, 3), (7, 3)] {
        let prm = params(p, q);
        for kind in prm.kinds() {
            let subs = enumerate_regular_bruteforce(&prm, kind, DEFAULT_ORACLE_BUDGET).unwrap();
            let orbits = compute_orbits(&prm, &subs).unwrap();
            let mut orbit_of = vec![usize::MAX; subs.len()];
            for (o, orb) in orbits.iter().enumerate() {
                for &i in &orb.members {
                    orbit_of[i] = o;
                }
            }
            let braces: Vec<SkewBrace> = subs
                .iter()
                .map(|s| brace_from_regular(&prm, kind, s).unwrap())
                .collect();
            for i in 0..braces.len() {
                for j in i..braces.len() {
                    pairs += 1;
                    let iso = are_isomorphic(&braces[i], &braces[j]);
                    if iso != (orbit_of[i] == orbit_of[j]) {
                        bad.push(format!("({p},{q}) {kind}: subgroups {i}, {j} iso={iso}"));
                    }
                }
            }
        }
        let cat = catalog(&prm);
        for i in 0..cat.len() {
            for j in i + 1..cat.len() {
                if are_isomorphic(&cat[i], &cat[j]) {
                    bad.push(format!("({p},{q}) {} ≅ {}", cat[i].label(), cat[j].label()));
                }
            }
        }
    }
    let elapsed = t.elapsed();
    if elapsed >= Duration::from_secs(300) {
        bad.push(format!("took {elapsed:?}"));
    }
    outcome(
        bad.is_empty(),
        format!("{pairs} pairs in {elapsed:?} {}", bad.join("; ")),
    )
}

fn ac8_ybe() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for b in catalog(&params(7, 3)) {
        let sol = solution_from_brace(&b).unwrap();
        let rep = verify_solution(&sol);
        // involutivity recomputed directly from the tables
        let n = sol.size;
        let involutive = (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = (sol.sigma[x * n + y] as usize, sol.tau[y * n + x] as usize);
                (sol.sigma[u * n + v] as usize, sol.tau[v * n + u] as usize) == (x, y)
            })
        });
        if !rep.braid
            || !rep.nondegenerate
            || rep.involutive != involutive
            || involutive != (b.add_kind() == C)
        {
            bad.push(format!("{}: {rep:?}", b.label()));
        }
    }
    let elapsed = t.elapsed();
    if elapsed >= Duration::from_secs(30) {
        bad.push(format!("took {elapsed:?}"));
    }
    outcome(bad.is_empty(), format!("{elapsed:?} {}", bad.join("; ")))
}

fn ac9_g_independence() -> Outcome {
    let a = catalog(&params(7, 3));
    let b = catalog(&Params::with_generator(7, 3, 4).unwrap());
    let mut bad = Vec::new();
    if a.len() != b.len() {
        bad.push(format!("sizes {} vs {}", a.len(), b.len()));
    }
    let mut used = vec![false; b.len()];
    for x in &a {
        let matches: Vec<usize> = (0..b.len()).filter(|&j| are_isomorphic(x, &b[j])).collect();
        match matches.as_slice() {
            [j] if !used[*j] => used[*j] = true,
            _ => bad.push(format!("{} matches {matches:?}", x.label())),
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} braces matched one-to-one {}",
            used.iter().filter(|&&u| u).count(),
            bad.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 classification counts", ac1_counts),
        ("AC2 e' tables", ac2_eprime),
        ("AC3 orbit counts", ac3_orbits),
        ("AC4 axiom exhaustiveness", ac4_axioms),
        ("AC5 bi-skew flags", ac5_biskew),
        ("AC6 kernel sizes", ac6_kernels),
        ("AC7 orbit-isomorphism bijection", ac7_orbit_iso),
        ("AC8 YBE suite", ac8_ybe),
        ("AC9 g-independence", ac9_g_independence),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let o = f();
        println!(
            "{} {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail.trim()
        );
        if !o.ok {
            failed.push(name);
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
