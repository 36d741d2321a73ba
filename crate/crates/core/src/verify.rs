//! Self-check suites behind `valuta verify`.
//!
//! Each suite returns one [`Check`] per item with the expected and actual
//! values rendered as text, so a failing item can be shown as a diff.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::BivarPoly;
use crate::decomposition::{invariant_rank, Invariant, TutteBasis};
use crate::families::{
    closed_form_tutte, cuspidal_shifted_tutte, family, FamilyKind, MatroidDescriptor,
};
use crate::invariants::{brylawski_check, g_invariant, tutte, tutte_dc, GInvariantVector};
use crate::matroid::{binomial, enumerate_matroids, k_subsets, Matroid, SubsetMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Enumeration,
    Formulas,
    Decomposition,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Examples,
        Suite::Enumeration,
        Suite::Formulas,
        Suite::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "paper-examples",
            Suite::Enumeration => "enumeration",
            Suite::Formulas => "formulas",
            Suite::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(
        name: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            passed: expected == actual,
            expected,
            actual,
        }
    }

    fn holds(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, true, ok)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS  {}", self.name)
        } else {
            write!(
                f,
                "FAIL  {}\n  expected: {}\n  actual:   {}",
                self.name, self.expected, self.actual
            )
        }
    }
}

/// The seven rank-2 matroids on four elements, as named in the examples.
pub const M42: [(&str, &str); 7] = [
    ("U24", "uniform:2,4"),
    ("T24", "minimal:2,4"),
    ("U12+U12", "sum:(uniform:1,2)+(uniform:1,2)"),
    ("U02+U22", "sum:(uniform:0,2)+(uniform:2,2)"),
    ("U13+U11", "sum:(uniform:1,3)+(uniform:1,1)"),
    ("U01+U23", "sum:(uniform:0,1)+(uniform:2,3)"),
    (
        "U01+U12+U11",
        "sum:(uniform:0,1)+(uniform:1,2)+(uniform:1,1)",
    ),
];

/// Reference values for the seven matroids of rank 2 on four elements.
pub const REFERENCE_VALUES: &str = r#"{
  "tutte": {
    "U24": "x^2 + y^2 + 2*x + 2*y",
    "T24": "x^2 + x*y + y^2 + x + y",
    "U12+U12": "x^2 + 2*x*y + y^2",
    "U02+U22": "x^2*y^2",
    "U13+U11": "x*y^2 + x^2 + x*y",
    "U01+U23": "x^2*y + x*y + y^2",
    "U01+U12+U11": "x^2*y + x*y^2"
  },
  "ginv": {
    "U02+U22": [["0011", 4], ["0101", 4], ["0110", 4], ["1001", 4], ["1010", 4], ["1100", 4]],
    "U01+U12+U11": [["0101", 2], ["0110", 4], ["1001", 4], ["1010", 6], ["1100", 8]],
    "U13+U11": [["1001", 6], ["1010", 6], ["1100", 12]],
    "U01+U23": [["0110", 6], ["1010", 6], ["1100", 12]],
    "T24": [["1010", 4], ["1100", 20]],
    "U12+U12": [["1010", 8], ["1100", 16]],
    "U24": [["1100", 24]]
  },
  "t_rank": 5,
  "g_rank": 6
}"#;

/// Expected values for the `paper-examples` suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceValues {
    pub tutte: Vec<(String, BivarPoly)>,
    pub ginv: Vec<(String, GInvariantVector)>,
    pub t_rank: usize,
    pub g_rank: usize,
}

impl ReferenceValues {
    pub fn builtin() -> Self {
        let v: Value = serde_json::from_str(REFERENCE_VALUES).expect("embedded JSON");
        Self::from_json(&v).expect("embedded expectations are well formed")
    }

    /// Reads the layout of [`REFERENCE_VALUES`]. Every one of the seven
    /// names must be present in both tables.
    pub fn from_json(v: &Value) -> Result<Self, String> {
        let table = |key: &str| {
            v.get(key)
                .and_then(Value::as_object)
                .ok_or_else(|| format!("missing object `{key}`"))
        };
        let (tutte_table, ginv_table) = (table("tutte")?, table("ginv")?);
        let mut tutte = Vec::new();
        let mut ginv = Vec::new();
        for (name, _) in M42 {
            let t = tutte_table
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| format!("missing Tutte polynomial for {name}"))?;
            tutte.push((
                name.to_string(),
                BivarPoly::parse(t).map_err(|e| e.to_string())?,
            ));
            let entries = ginv_table
                .get(name)
                .and_then(Value::as_array)
                .ok_or_else(|| format!("missing G-invariant for {name}"))?;
            let mut pairs = Vec::new();
            for e in entries {
                let key = e.get(0).and_then(Value::as_str);
                let c = e.get(1).and_then(Value::as_u64);
                match (key, c) {
                    (Some(key), Some(c)) => pairs.push((key, c)),
                    _ => return Err(format!("bad G-invariant entry {e} for {name}")),
                }
            }
            ginv.push((
                name.to_string(),
                GInvariantVector::from_entries(4, 2, pairs)?,
            ));
        }
        let count = |key: &str| {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|c| c as usize)
                .ok_or_else(|| format!("missing integer `{key}`"))
        };
        Ok(ReferenceValues {
            tutte,
            ginv,
            t_rank: count("t_rank")?,
            g_rank: count("g_rank")?,
        })
    }
}

pub fn run_suite(suite: Suite, expected: &ReferenceValues) -> Result<Vec<Check>, String> {
    let r = match suite {
        Suite::Examples => worked_examples(expected),
        Suite::Enumeration => enumeration(),
        Suite::Formulas => formulas(8),
        Suite::Decomposition => decompositions(5),
    };
    r.map_err(|e| e.to_string())
}

type Res<T> = Result<T, Box<dyn std::error::Error>>;

fn realize(s: &str) -> Res<Matroid> {
    Ok(s.parse::<MatroidDescriptor>()?.realize()?)
}

fn worked_examples(expected: &ReferenceValues) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    let matroids: Vec<Matroid> = M42.iter().map(|(_, d)| realize(d)).collect::<Res<_>>()?;
    let mut t = Vec::new();
    let mut g = Vec::new();
    for (i, m) in matroids.iter().enumerate() {
        t.push(tutte(m)?);
        g.push(g_invariant(m)?);
        let (name, want) = &expected.tutte[i];
        out.push(Check::new(format!("T({name})"), want, &t[i]));
        let (name, want) = &expected.ginv[i];
        out.push(Check::new(format!("G({name})"), want, &g[i]));
    }
    let [u24, t24, pp, _, u13, u23, bad] = [0, 1, 2, 3, 4, 5, 6].map(|i| &t[i]);
    out.push(Check::new(
        "relation 1: 2T(T24) = T(U24) + T(U12+U12)",
        u24 + pp,
        t24.scale(2),
    ));
    out.push(Check::new(
        "relation 2: T(U23+U01) + T(U13+U11) = T(U01+U12+U11) + T(U12+U12)",
        bad + pp,
        u23 + u13,
    ));
    out.push(Check::new(
        "relation 3: 2T(T24) + T(U01+U12+U11) = T(U24) + T(U01+U23) + T(U13+U11)",
        &(u24 + u23) + u13,
        &t24.scale(2) + bad,
    ));
    let gv: Vec<Vec<num_bigint::BigInt>> = g.iter().map(GInvariantVector::to_vector).collect();
    let twice_t24: Vec<_> = gv[1].iter().map(|c| c * 2).collect();
    let rhs: Vec<_> = gv[0].iter().zip(&gv[2]).map(|(a, b)| a + b).collect();
    out.push(Check::holds(
        "G relation: 2G(T24) = G(U24) + G(U12+U12)",
        twice_t24 == rhs,
    ));
    out.push(Check::new(
        "T-rank of M(4,2)",
        expected.t_rank,
        invariant_rank(&matroids, Invariant::Tutte)?,
    ));
    out.push(Check::new(
        "G-rank of M(4,2)",
        expected.g_rank,
        invariant_rank(&matroids, Invariant::GInv)?,
    ));
    Ok(out)
}

/// Isomorphism classes by brute force: every nonempty family of `k`-sets
/// is filtered by the exchange axiom, then compared pairwise under all
/// permutations. Independent of the canonical-form code; use for n ≤ 5.
pub fn slow_enumeration_count(n: usize, k: usize) -> usize {
    let sets = k_subsets(n, k);
    let perms = permutations(n);
    let mut reps: Vec<BTreeSet<SubsetMask>> = Vec::new();
    for choice in 1u64..(1 << sets.len()) {
        let bases: Vec<SubsetMask> = (0..sets.len())
            .filter(|&i| choice & (1 << i) != 0)
            .map(|i| sets[i])
            .collect();
        if Matroid::from_bases(n, bases.iter().copied()).is_err() {
            continue;
        }
        let seen = reps.iter().any(|rep| {
            rep.len() == bases.len()
                && perms
                    .iter()
                    .any(|p| bases.iter().all(|b| rep.contains(&b.permute(p))))
        });
        if !seen {
            reps.push(bases.into_iter().collect());
        }
    }
    reps.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

fn enumeration() -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for k in 0..=n {
            out.push(Check::new(
                format!("classes of rank {k} on {n} elements"),
                slow_enumeration_count(n, k),
                enumerate_matroids(n, k, true)?.len(),
            ));
        }
    }
    for n in 0..=5 {
        for k in 0..=n {
            let all = enumerate_matroids(n, k, true)?;
            out.push(Check::new(
                format!("T-rank of M({n},{k})"),
                k * (n - k) + 1,
                invariant_rank(&all, Invariant::Tutte)?,
            ));
            out.push(Check::new(
                format!("G-rank of M({n},{k})"),
                binomial(n, k),
                invariant_rank(&all, Invariant::GInv)?,
            ));
            let mut agree = true;
            for m in &all {
                let t = tutte(m)?;
                agree &= t == tutte_dc(m)? && brylawski_check(&t, n);
            }
            out.push(Check::holds(
                format!("subset sum = deletion-contraction on M({n},{k})"),
                agree,
            ));
        }
    }
    Ok(out)
}

/// Closed forms against the subset-sum oracle for every family member
/// with at most `max_n` elements.
pub fn formulas(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for kind in [FamilyKind::Cuspidal, FamilyKind::ClassU, FamilyKind::ClassT] {
                let mut mismatches = Vec::new();
                for d in family(kind, n, k) {
                    if closed_form_tutte(&d)? != tutte(&d.realize()?)? {
                        mismatches.push(d.to_string());
                    }
                }
                out.push(Check::new(
                    format!("closed forms, {kind} family, n={n}, k={k}"),
                    "[]",
                    format!("{mismatches:?}"),
                ));
            }
            let mut lead_ok = true;
            for r in 0..=k {
                for h in r..=n {
                    if k - r > n - h {
                        continue;
                    }
                    let p = cuspidal_shifted_tutte(r, k, h, n);
                    let m = n - k + r - h;
                    // The unit coefficient is claimed only off the uniform
                    // boundary (r ≥ 1, m ≥ 1); at r = 0 or m = 0 it fails.
                    if r >= 1 && m >= 1 {
                        lead_ok &= p.coeff(r as u32, m as u32) == 1.into();
                    }
                    let direct = tutte(&MatroidDescriptor::cuspidal(r, k, h, n).realize()?)?;
                    lead_ok &= p.shift(-1, -1) == direct;
                }
            }
            out.push(Check::holds(
                format!("cuspidal double sum with unit leading monomial, n={n}, k={k}"),
                lead_ok,
            ));
            if 2 <= k && k + 2 <= n {
                let relaxed = tutte(&MatroidDescriptor::cuspidal(1, k, n - k, n).realize()?)?;
                let uniform = tutte(&Matroid::uniform(k, n))?;
                out.push(Check::new(
                    format!("T(Lambda_1,{k},{},{n}) - T(U_{k},{n})", n - k),
                    BivarPoly::parse("x*y - x - y")?,
                    &relaxed - &uniform,
                ));
            }
        }
    }
    Ok(out)
}

fn decompositions(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    let expect = |terms: &[(&str, i64)]| -> String {
        let parts: Vec<String> = terms.iter().map(|(d, c)| format!("{c}*[{d}]")).collect();
        parts.join(" + ")
    };
    let show = |dec: &crate::decomposition::Decomposition| -> String {
        let parts: Vec<String> = dec
            .terms
            .iter()
            .map(|(d, c)| format!("{c}*[{d}]"))
            .collect();
        parts.join(" + ")
    };
    let cusp = TutteBasis::new(FamilyKind::Cuspidal, 4, 2)?;
    out.push(Check::new(
        "U12+U12 over cuspidals",
        expect(&[("uniform:2,4", -1), ("cuspidal:1,2,2,4", 2)]),
        show(&cusp.decompose(&realize("sum:(uniform:1,2)+(uniform:1,2)")?)?),
    ));
    out.push(Check::new(
        "U01+U12+U11 over cuspidals",
        expect(&[
            ("uniform:2,4", 1),
            ("cuspidal:1,2,1,4", 1),
            ("cuspidal:1,2,2,4", -2),
            ("cuspidal:2,2,3,4", 1),
        ]),
        show(&cusp.decompose(&realize("sum:(uniform:0,1)+(uniform:1,2)+(uniform:1,1)")?)?),
    ));
    for n in 0..=max_n {
        for k in 0..=n {
            let all = enumerate_matroids(n, k, true)?;
            for kind in [FamilyKind::Cuspidal, FamilyKind::ClassU, FamilyKind::ClassT] {
                let basis = TutteBasis::new(kind, n, k)?;
                let mut failures = Vec::new();
                for m in &all {
                    match basis.decompose(m) {
                        Ok(dec) if dec.expand()? == tutte(m)? => {}
                        Ok(_) => failures.push(format!("{:?}: re-expansion differs", m.bases())),
                        Err(e) => failures.push(e.to_string()),
                    }
                }
                out.push(Check::new(
                    format!("all of M({n},{k}) over the {kind} basis"),
                    "[]",
                    format!("{failures:?}"),
                ));
            }
        }
    }
    Ok(out)
}

/// `{"suite": ..., "checks": [{name, passed, expected, actual}]}`.
pub fn report_json(suite: Suite, checks: &[Check]) -> Value {
    json!({
        "suite": suite.name(),
        "checks": checks
            .iter()
            .map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "expected": c.expected,
                "actual": c.actual,
            }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_expectations_parse() {
        let e = ReferenceValues::builtin();
        assert_eq!(e.tutte.len(), 7);
        assert_eq!(e.ginv[0].1.total(), 24);
    }

    #[test]
    fn examples_suite_passes() {
        let checks = run_suite(Suite::Examples, &ReferenceValues::builtin()).unwrap();
        for c in &checks {
            assert!(c.passed, "{c}");
        }
        assert_eq!(checks.len(), 7 + 7 + 3 + 1 + 2);
    }

    #[test]
    fn corrupted_expectation_fails() {
        let mut e = ReferenceValues::builtin();
        e.tutte[0].1 = BivarPoly::parse("x^2 + y^2 + 2*x + 3*y").unwrap();
        let checks = run_suite(Suite::Examples, &e).unwrap();
        assert_eq!(checks.iter().filter(|c| !c.passed).count(), 1);
    }

    #[test]
    fn slow_path_small() {
        assert_eq!(slow_enumeration_count(3, 1), 3);
        assert_eq!(slow_enumeration_count(4, 2), 7);
    }
}
