//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so the report is always
//! printed. Exits non-zero on any unexpected outcome, including a known
//! red criterion that starts passing.

use std::cell::RefCell;
use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use valuta_core::algebra::{integer_rank, monomial_box, solve_in_span, BivarPoly};
use valuta_core::decomposition::{invariant_rank, Invariant, TutteBasis};
use valuta_core::families::{
    class_n_generators, classify, family, g_split, is_elementary_split,
    proper_cyclic_flats_form_clutter, relax_all, FamilyKind, MatroidDescriptor,
};
use valuta_core::invariants::{brylawski_check, g_invariant, merino_welsh_check};
use valuta_core::matroid::{
    binomial, canonical_form, enumerate_matroids, random_matroid, RandomKind,
};
use valuta_core::verify::{formulas, run_suite, ReferenceValues, Suite};
use valuta_core::{GInvariantVector, Matroid};

/// Criteria expected to fail. Each one's function documents why and sets
/// `documented` only when the failure has exactly the analysed shape.
const KNOWN_RED: &[usize] = &[4, 5];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
    /// The failure matches the recorded analysis and nothing else failed.
    documented: bool,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
            documented: false,
        }
    }

    fn documented(mut self, yes: bool) -> Self {
        self.documented = yes;
        self
    }
}

thread_local! {
    /// `(polynomials checked, Brylawski failures)` over the whole run.
    static BRYLAWSKI: RefCell<(usize, Vec<String>)> = const { RefCell::new((0, Vec::new())) };
}

/// Tutte polynomial, with every result fed to the Brylawski tally.
fn tutte(m: &Matroid) -> BivarPoly {
    let t = valuta_core::tutte(m).expect("within cap");
    BRYLAWSKI.with(|b| {
        let mut b = b.borrow_mut();
        b.0 += 1;
        if !brylawski_check(&t, m.n()) {
            b.1.push(format!("{t} (n={})", m.n()));
        }
    });
    t
}

fn tutte_vector(m: &Matroid) -> Vec<BigInt> {
    tutte(m).coefficient_vector(&monomial_box(m.k(), m.n()))
}

fn t_rank(ms: &[Matroid]) -> usize {
    let rows: Vec<Vec<BigInt>> = ms.iter().map(tutte_vector).collect();
    integer_rank(&rows).unwrap()
}

fn realize(d: &MatroidDescriptor) -> Matroid {
    d.realize().expect("admissible")
}

fn g(m: &Matroid) -> GInvariantVector {
    g_invariant(m).expect("within cap")
}

fn all_small() -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 0..=6 {
        for k in 0..=n {
            out.extend(enumerate_matroids(n, k, true).unwrap());
        }
    }
    out
}

/// Seeded random matroids with `7 ≤ n ≤ 9`, cycling through the generators.
fn random_large(count: u64) -> Vec<Matroid> {
    let kinds = [
        RandomKind::SparsePaving,
        RandomKind::Graphic,
        RandomKind::RelaxationChain,
    ];
    (0..count)
        .map(|seed| {
            let n = 7 + (seed % 3) as usize;
            let k = 2 + (seed / 3) as usize % (n - 3);
            random_matroid(n, k, kinds[(seed % 3) as usize], seed).unwrap()
        })
        .collect()
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let checks = run_suite(Suite::Examples, &ReferenceValues::builtin()).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    let tutte_count = checks.iter().filter(|c| c.name.starts_with("T(")).count();
    let g_count = checks.iter().filter(|c| c.name.starts_with("G(")).count();
    Outcome::new(
        failed.is_empty() && tutte_count == 7 && g_count == 7 && elapsed.as_secs_f64() < 1.0,
        format!(
            "{} checks ({tutte_count} Tutte, {g_count} G), {} failed, {:.3}s",
            checks.len(),
            failed.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn rank_identities() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=6 {
        for k in 0..=n {
            let all = enumerate_matroids(n, k, true).unwrap();
            let t = t_rank(&all);
            let gr = invariant_rank(&all, Invariant::GInv).unwrap();
            let (want_t, want_g) = (k * (n - k) + 1, binomial(n, k) as usize);
            if t != want_t || gr != want_g {
                bad.push(format!("({n},{k}): T {t}/{want_t}, G {gr}/{want_g}"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("28 strata, mismatches {bad:?}"))
}

fn family_ranks() -> Outcome {
    let mut bad = Vec::new();
    let mut strata = 0;
    for n in 0..=9 {
        for k in 0..=n {
            for kind in [FamilyKind::Cuspidal, FamilyKind::ClassU, FamilyKind::ClassT] {
                strata += 1;
                let members: Vec<Matroid> = family(kind, n, k).iter().map(realize).collect();
                let distinct: HashSet<_> = members.iter().map(canonical_form).collect();
                let want = k * (n - k) + 1;
                let t = t_rank(&members);
                let gr = invariant_rank(&members, Invariant::GInv).unwrap();
                if members.len() != want || distinct.len() != want || t != want || gr != want {
                    bad.push(format!(
                        "{kind} ({n},{k}): members {}, distinct {}, T {t}, G {gr}, want {want}",
                        members.len(),
                        distinct.len()
                    ));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{strata} family strata, mismatches {bad:?}"),
    )
}

/// The beta invariant: the coefficient of `x` in the Tutte polynomial.
fn beta(t: &BivarPoly) -> BigInt {
    t.coeff(1, 0)
}

/// Cuspidal and class-T decompositions must all succeed.
///
/// Known red: integrality over class U is false. The class-U Tutte
/// polynomials are independent, so the rational solution is unique and a
/// fractional one rules out any integer combination. For connected `M` the
/// beta invariant shows why: every class-U member on `n ≥ 2` elements other
/// than `U_{k,n}` has a loop or a coloop, hence `β = 0`, so the coefficient
/// of `x` forces `c_U = β(M) / C(n−2, k−1)`. The smallest instance is
/// `T_{2,4}` with `β = 1` against `β(U_{2,4}) = 2`.
fn decomposition_theorems() -> Outcome {
    let mut matroids = all_small();
    let small = matroids.len();
    matroids.extend(random_large(120));
    let mut hard = Vec::new();
    let mut class_u_failures = 0;
    let mut unexplained = Vec::new();
    let mut beta_witnesses = 0;
    let mut bases: std::collections::HashMap<(FamilyKind, usize, usize), TutteBasis> =
        Default::default();
    for m in &matroids {
        let t = tutte(m);
        for kind in [FamilyKind::Cuspidal, FamilyKind::ClassU, FamilyKind::ClassT] {
            let basis = bases
                .entry((kind, m.n(), m.k()))
                .or_insert_with(|| TutteBasis::new(kind, m.n(), m.k()).unwrap());
            match basis.decompose(m) {
                Ok(d) if d.expand().unwrap() == t => {}
                Ok(d) => hard.push(format!("{kind}: re-expansion differs for {t}: {d}")),
                Err(e) if kind == FamilyKind::ClassU => {
                    class_u_failures += 1;
                    let sol = basis.solve_rational(&t).unwrap();
                    let unique = sol.as_ref().is_some_and(|s| s.is_unique);
                    let (n, k) = (m.n(), m.k());
                    if n >= 2
                        && k >= 1
                        && !(beta(&t) % BigInt::from(binomial(n - 2, k - 1))).is_zero()
                    {
                        beta_witnesses += 1;
                    }
                    if !unique {
                        unexplained.push(format!("{t}: {e}"));
                    }
                }
                Err(e) => hard.push(format!("{kind}: {e}")),
            }
        }
    }
    let total = matroids.len();
    let detail = format!(
        "{total} matroids ({small} with n<=6, {} random 7<=n<=9); cuspidal and class-t \
         failures {hard:?}; class-u non-integral in {class_u_failures} of {total}, unique over Q \
         in all but {}, beta-invariant obstruction in {beta_witnesses}",
        total - small,
        unexplained.len()
    );
    for u in &unexplained {
        eprintln!("class-u failure without a unique rational solution: {u}");
    }
    Outcome::new(hard.is_empty() && class_u_failures == 0, detail)
        .documented(hard.is_empty() && unexplained.is_empty() && beta_witnesses > 0)
}

/// Known red: the rank formula fails at `(n, k) = (4, 2)`. There the five
/// generators satisfy `2T(T_{2,4}) = T(U_{2,4}) + T(U_{1,2} ⊕ U_{1,2})`,
/// the relation checked by the worked examples, so the T-rank is 4, not
/// `min{k+3, n−k+3} = 5`. The independence argument behind the formula
/// only works for `n > 4`.
fn class_n_rank() -> Outcome {
    let mut bad = Vec::new();
    let mut rank_misses = Vec::new();
    let mut sampled = 0;
    for n in 4..=9 {
        for k in 2..=n - 2 {
            let gens: Vec<Matroid> = class_n_generators(n, k).iter().map(realize).collect();
            let rows: Vec<Vec<BigInt>> = gens.iter().map(tutte_vector).collect();
            let rank = integer_rank(&rows).unwrap();
            let want = (k + 3).min(n - k + 3);
            if rank != want {
                rank_misses.push((n, k, rank, want));
            }
            // Integer certificate over U_{k,n} and Λ_{1,k,n−k,n}, which
            // are the last two generators.
            let pair = &rows[rows.len() - 2..];
            for seed in 0..6 {
                let m = random_matroid(n, k, RandomKind::SparsePaving, 1000 + seed).unwrap();
                if !m.is_sparse_paving() {
                    bad.push(format!("({n},{k}) seed {seed} not sparse paving"));
                    continue;
                }
                sampled += 1;
                let target = tutte_vector(&m);
                match solve_in_span(&rows, &target).unwrap() {
                    Some(s) if s.is_integral => {}
                    // A fractional particular solution of a dependent
                    // system does not rule out an integer one.
                    Some(s)
                        if !s.is_unique
                            && solve_in_span(pair, &target)
                                .unwrap()
                                .is_some_and(|p| p.is_integral) => {}
                    Some(_) => bad.push(format!("({n},{k}) seed {seed} non-integral")),
                    None => bad.push(format!("({n},{k}) seed {seed} outside span")),
                }
            }
        }
    }
    let misses: Vec<String> = rank_misses
        .iter()
        .map(|(n, k, r, w)| format!("({n},{k}) rank {r}, want {w}"))
        .collect();
    Outcome::new(
        bad.is_empty() && misses.is_empty(),
        format!(
            "strata 2<=k<=n-2, n<=9; rank misses {misses:?}; {sampled} sparse paving samples; \
             problems {bad:?}"
        ),
    )
    .documented(bad.is_empty() && rank_misses == [(4, 2, 4, 5)])
}

fn formula_cross_checks() -> Outcome {
    let checks = formulas(9).unwrap();
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    Outcome::new(
        failed.is_empty(),
        format!("{} checks, failed {failed:?}", checks.len()),
    )
}

fn g_structure() -> Outcome {
    let mut bad = Vec::new();
    let mut split = 0;
    for m in all_small() {
        if is_elementary_split(&m) {
            split += 1;
            if g_split(&m).unwrap() != g(&m) {
                bad.push(format!("g_split on {:?}", m.bases()));
            }
        }
    }
    let vec = |m: &Matroid| g(m).to_vector();
    let mut substitutions = 0;
    for n in 0..=7 {
        for k in 0..=n {
            let uniform = vec(&Matroid::uniform(k, n));
            for r in 0..=k {
                for h in r..=n {
                    if k - r > n - h {
                        continue;
                    }
                    substitutions += 1;
                    let lhs =
                        vec(&Matroid::uniform(k - r, n - h).direct_sum(&Matroid::uniform(r, h)));
                    let a = vec(&realize(&MatroidDescriptor::cuspidal(k - r, k, n - h, n)));
                    let b = vec(&realize(&MatroidDescriptor::cuspidal(r, k, h, n)));
                    let rhs: Vec<BigInt> = (0..lhs.len())
                        .map(|i| &a[i] + &b[i] - &uniform[i])
                        .collect();
                    if lhs != rhs {
                        bad.push(format!("substitution (r={r},k={k},h={h},n={n})"));
                    }
                }
            }
        }
    }
    let mut paving = 0;
    for n in 4..=9 {
        for k in 2..=n - 2 {
            let uniform = vec(&Matroid::uniform(k, n));
            let relaxed = vec(&realize(&MatroidDescriptor::cuspidal(1, k, n - k, n)));
            for seed in 0..4 {
                let m = random_matroid(n, k, RandomKind::SparsePaving, 77 + seed).unwrap();
                paving += 1;
                // The relation holds for an integer λ; with c
                // circuit-hyperplanes that integer is −c.
                let circuit_hyperplanes = binomial(n, k) as usize - m.bases().len();
                let lambda = -BigInt::from(circuit_hyperplanes);
                let want: Vec<BigInt> = (0..uniform.len())
                    .map(|i| (&lambda + 1) * &uniform[i] - &lambda * &relaxed[i])
                    .collect();
                if vec(&m) != want {
                    bad.push(format!("sparse paving ({n},{k}) seed {seed}"));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{split} split matroids, {substitutions} substitutions, {paving} sparse paving samples; \
             problems {bad:?}"
        ),
    )
}

fn characterizations() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 0..=6 {
        for k in 0..=n {
            let shape = |kind| -> HashSet<_> {
                family(kind, n, k)
                    .iter()
                    .map(|d| canonical_form(&realize(d)))
                    .collect()
            };
            let (shape_u, shape_t) = (shape(FamilyKind::ClassU), shape(FamilyKind::ClassT));
            for m in enumerate_matroids(n, k, true).unwrap() {
                count += 1;
                let minor = is_elementary_split(&m);
                let relaxed = relax_all(&m).unwrap().is_uniform();
                let clutter = proper_cyclic_flats_form_clutter(&m);
                let report = classify(&m).unwrap();
                let form = canonical_form(&m);
                if minor != relaxed || minor != clutter {
                    bad.push(format!(
                        "split tests {minor}/{relaxed}/{clutter} on {:?}",
                        m.bases()
                    ));
                }
                if report.class_u != shape_u.contains(&form)
                    || report.class_t != shape_t.contains(&form)
                {
                    bad.push(format!("shape vs minor on {:?}", m.bases()));
                }
                if report.class_n && m.is_connected() && !m.is_sparse_paving() {
                    bad.push(format!(
                        "connected class N, not sparse paving: {:?}",
                        m.bases()
                    ));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{count} matroids, problems {bad:?}"),
    )
}

fn coefficient_relations() -> Outcome {
    let mut mw = 0;
    let mut bad = Vec::new();
    let mut candidates = all_small();
    for seed in 0..60 {
        let n = 7 + (seed % 2) as usize;
        let k = 2 + (seed / 2) as usize % (n - 3);
        let kind = if seed % 3 == 0 {
            RandomKind::SparsePaving
        } else {
            RandomKind::RelaxationChain
        };
        candidates.push(random_matroid(n, k, kind, 500 + seed).unwrap());
    }
    for m in &candidates {
        tutte(m);
        let free = m.loops().is_empty() && m.coloops().is_empty();
        if free && is_elementary_split(m) {
            mw += 1;
            if !merino_welsh_check(m).unwrap() {
                bad.push(format!("Merino-Welsh on {:?}", m.bases()));
            }
        }
    }
    let (checked, failures) = BRYLAWSKI.with(|b| b.borrow().clone());
    Outcome::new(
        bad.is_empty() && failures.is_empty(),
        format!(
            "Brylawski on {checked} Tutte polynomials, failures {failures:?}; \
             Merino-Welsh on {mw} split matroids, failures {bad:?}"
        ),
    )
}

fn simple_ranks() -> Outcome {
    let mut rows = Vec::new();
    let mut flagged = Vec::new();
    for n in 2..=6 {
        for k in 2..=n {
            let simple: Vec<Matroid> = enumerate_matroids(n, k, true)
                .unwrap()
                .into_iter()
                .filter(Matroid::is_simple)
                .collect();
            let rank = t_rank(&simple);
            let want = (k - 2) * (n - k) + 1;
            rows.push(format!("({n},{k})={rank}"));
            if rank != want {
                flagged.push(format!("FLAG ({n},{k}): {rank} vs {want}"));
            }
        }
    }
    Outcome::new(
        flagged.is_empty(),
        format!("{}; flagged {flagged:?}", rows.join(" ")),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", worked_examples),
        ("rank identities n<=6", rank_identities),
        ("family independence and universality n<=9", family_ranks),
        ("decomposition theorems", decomposition_theorems),
        ("class N rank", class_n_rank),
        ("formula cross-checks n<=9", formula_cross_checks),
        ("G-invariant structure", g_structure),
        ("characterization equivalences n<=6", characterizations),
        (
            "coefficient relations and inequalities",
            coefficient_relations,
        ),
        ("simple-matroid T-rank n<=6", simple_ranks),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if o.passed { "PASS" } else { "FAIL" };
        let known = KNOWN_RED.contains(&id);
        let note = match (o.passed, known) {
            (false, true) if o.documented => " [known red]",
            (false, _) | (true, true) => {
                unexpected += 1;
                " [unexpected]"
            }
            (true, false) => "",
        };
        println!("{status} {id:>2} {name}{note} ({secs:.2}s): {}", o.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
