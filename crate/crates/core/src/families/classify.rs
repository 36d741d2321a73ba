//! Membership tests for the excluded-minor classes.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::stressed::{relax_all, STRESSED_CAP};
use super::MatroidDescriptor;
use crate::error::{FamilyError, MatroidError};
use crate::matroid::mtx::to_mtx;
use crate::matroid::{find_minor, Matroid, MinorEmbedding, SubsetMask};

/// One excluded minor found inside the classified matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Name of the class whose membership the minor rules out.
    pub class: &'static str,
    pub minor: MatroidDescriptor,
    pub embedding: MinorEmbedding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub elementary_split: bool,
    pub class_n: bool,
    /// Uniform matroids with added loops and coloops.
    pub class_u: bool,
    /// Minimal matroids with added loops and coloops (graphic Schubert).
    pub class_t: bool,
    pub schubert: bool,
    pub sparse_paving: bool,
    pub paving: bool,
    pub connected: bool,
    pub witnesses: Vec<Witness>,
}

fn d(s: &str) -> MatroidDescriptor {
    s.parse().expect("static descriptor")
}

/// `(class, excluded minor)` pairs.
fn excluded_minors() -> Vec<(&'static str, MatroidDescriptor)> {
    vec![
        (
            "elementary_split",
            d("sum:(uniform:0,1)+(uniform:1,2)+(uniform:1,1)"),
        ),
        ("class_n", d("sum:(uniform:1,1)+(uniform:1,3)")),
        ("class_n", d("sum:(uniform:0,1)+(uniform:2,3)")),
        ("class_u", d("minimal:2,4")),
        ("class_u", d("sum:(uniform:1,2)+(uniform:1,2)")),
        ("class_t", d("uniform:2,4")),
        ("class_t", d("sum:(uniform:1,2)+(uniform:1,2)")),
    ]
}

/// No minor isomorphic to `U_{0,1} ⊕ U_{1,2} ⊕ U_{1,1}`.
pub fn is_elementary_split(m: &Matroid) -> bool {
    let bad = d("sum:(uniform:0,1)+(uniform:1,2)+(uniform:1,1)")
        .realize()
        .expect("admissible");
    find_minor(m, &bad).is_none()
}

/// Cyclic flats other than `∅` and `E` are pairwise incomparable.
pub fn proper_cyclic_flats_form_clutter(m: &Matroid) -> bool {
    let ground = m.ground();
    let proper: Vec<SubsetMask> = m
        .cyclic_flats()
        .into_iter()
        .map(|(f, _)| f)
        .filter(|&f| !f.is_empty() && f != ground)
        .collect();
    proper.iter().enumerate().all(|(i, a)| {
        proper[i + 1..]
            .iter()
            .all(|b| !a.is_subset_of(*b) && !b.is_subset_of(*a))
    })
}

/// Cyclic flats form a chain under inclusion.
pub fn is_schubert(m: &Matroid) -> bool {
    let flats = m.cyclic_flats();
    flats.iter().enumerate().all(|(i, (a, _))| {
        flats[i + 1..]
            .iter()
            .all(|(b, _)| a.is_subset_of(*b) || b.is_subset_of(*a))
    })
}

pub fn classify(m: &Matroid) -> Result<ClassReport, FamilyError> {
    if m.n() > STRESSED_CAP {
        return Err(MatroidError::SizeCapExceeded {
            what: "classification",
            cap: STRESSED_CAP,
            n: m.n(),
        }
        .into());
    }
    let found: Vec<(&'static str, MatroidDescriptor, Option<MinorEmbedding>)> = excluded_minors()
        .into_par_iter()
        .map(|(class, minor)| {
            let target = minor.realize().expect("admissible");
            let hit = find_minor(m, &target);
            (class, minor, hit)
        })
        .collect();
    let avoids = |class: &str| {
        found
            .iter()
            .filter(|(c, _, _)| *c == class)
            .all(|(_, _, hit)| hit.is_none())
    };
    let report = ClassReport {
        elementary_split: avoids("elementary_split"),
        class_n: avoids("class_n"),
        class_u: avoids("class_u"),
        class_t: avoids("class_t"),
        schubert: is_schubert(m),
        sparse_paving: m.is_sparse_paving(),
        paving: m.is_paving(),
        connected: m.is_connected(),
        witnesses: found
            .into_iter()
            .filter_map(|(class, minor, hit)| {
                hit.map(|embedding| Witness {
                    class,
                    minor,
                    embedding,
                })
            })
            .collect(),
    };

    let by_relaxation = relax_all(m)?.is_uniform();
    let by_clutter = proper_cyclic_flats_form_clutter(m);
    if by_relaxation != report.elementary_split || by_clutter != report.elementary_split {
        return Err(FamilyError::InternalInconsistency(format!(
            "elementary split tests disagree: excluded minor {}, relaxation {by_relaxation}, \
             cyclic-flat clutter {by_clutter}",
            report.elementary_split
        )));
    }
    if report.class_t && !report.schubert {
        return Err(FamilyError::InternalInconsistency(
            "class T member is not Schubert".into(),
        ));
    }
    if report.sparse_paving && report.connected && !report.class_n {
        return Err(FamilyError::InternalInconsistency(
            "connected sparse paving matroid outside class N".into(),
        ));
    }
    Ok(report)
}

impl ClassReport {
    pub fn to_json(&self, m: &Matroid) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                let minor = m
                    .minor(w.embedding.contract, w.embedding.delete)
                    .expect("disjoint embedding");
                json!({
                    "class": w.class,
                    "excluded_minor": w.minor.to_string(),
                    "contract": w.embedding.contract.labels().collect::<Vec<_>>(),
                    "delete": w.embedding.delete.labels().collect::<Vec<_>>(),
                    "mtx": to_mtx(&minor),
                })
            })
            .collect();
        json!({
            "elementary_split": self.elementary_split,
            "class_n": self.class_n,
            "class_u": self.class_u,
            "class_t": self.class_t,
            "schubert": self.schubert,
            "sparse_paving": self.sparse_paving,
            "paving": self.paving,
            "connected": self.connected,
            "witnesses": witnesses,
        })
    }

    /// One `name: value` line per flag, then one line per witness.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, v) in [
            ("elementary_split", self.elementary_split),
            ("class_n", self.class_n),
            ("class_u", self.class_u),
            ("class_t", self.class_t),
            ("schubert", self.schubert),
            ("sparse_paving", self.sparse_paving),
            ("paving", self.paving),
            ("connected", self.connected),
        ] {
            out.push_str(&format!("{name}: {v}\n"));
        }
        for w in &self.witnesses {
            out.push_str(&format!(
                "witness {}: {} = M / {} \\ {}\n",
                w.class, w.minor, w.embedding.contract, w.embedding.delete
            ));
        }
        out
    }
}
