//! Invariant ranks of matroid families and unique integer decompositions
//! of Tutte polynomials over the cuspidal, class U and class T bases.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{
    integer_rank, monomial_box, solve_in_span, BivarPoly, Monomial, SpanSolution,
};
use crate::error::{DecompositionError, InvariantError};
use crate::families::{class_n_generators, classify, family, FamilyKind, MatroidDescriptor};
use crate::invariants::{g_invariant, tutte};
use crate::matroid::{enumerate_matroids, Matroid, EXHAUSTIVE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    Tutte,
    GInv,
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tutte" => Ok(Invariant::Tutte),
            "ginv" => Ok(Invariant::GInv),
            other => Err(format!("unknown invariant `{other}`")),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Tutte => "tutte",
            Invariant::GInv => "ginv",
        })
    }
}

/// Coefficient vector of the chosen invariant, in the fixed monomial or
/// key order for the stratum `(n, k)`.
pub fn invariant_vector(m: &Matroid, which: Invariant) -> Result<Vec<BigInt>, InvariantError> {
    Ok(match which {
        Invariant::Tutte => tutte(m)?.coefficient_vector(&monomial_box(m.k(), m.n())),
        Invariant::GInv => g_invariant(m)?.to_vector(),
    })
}

/// Rank of the span of the invariant over a list of same-stratum matroids.
pub fn invariant_rank(matroids: &[Matroid], which: Invariant) -> Result<usize, DecompositionError> {
    let Some(first) = matroids.first() else {
        return Ok(0);
    };
    let (n, k) = (first.n(), first.k());
    if let Some(other) = matroids.iter().find(|m| (m.n(), m.k()) != (n, k)) {
        return Err(DecompositionError::MixedStratum(n, k, other.n(), other.k()));
    }
    let rows: Vec<Vec<BigInt>> = matroids
        .par_iter()
        .map(|m| invariant_vector(m, which))
        .collect::<Result<_, _>>()?;
    Ok(integer_rank(&rows)?)
}

/// `T(M) = Σ c_i T(B_i)` over one of the three bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub basis: FamilyKind,
    pub n: usize,
    pub k: usize,
    /// Nonzero coefficients, in family order.
    pub terms: Vec<(MatroidDescriptor, BigInt)>,
}

impl Decomposition {
    /// `Σ c_i T(B_i)`.
    pub fn expand(&self) -> Result<BivarPoly, DecompositionError> {
        let mut total = BivarPoly::zero();
        for (d, c) in &self.terms {
            total = &total + &tutte(&d.realize()?)?.scale(c.clone());
        }
        Ok(total)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!([d.to_string(), coeff_json(c)]))
            .collect();
        json!({
            "basis": self.basis.name(),
            "n": self.n,
            "k": self.k,
            "terms": terms,
        })
    }
}

fn coeff_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(c.to_string()),
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in &self.terms {
            writeln!(f, "{c:>4}  {d}")?;
        }
        Ok(())
    }
}

/// Precomputed Tutte vectors of one basis family on one stratum.
pub struct TutteBasis {
    kind: FamilyKind,
    n: usize,
    k: usize,
    members: Vec<MatroidDescriptor>,
    monomials: Vec<Monomial>,
    vectors: Vec<Vec<BigInt>>,
}

impl TutteBasis {
    pub fn new(kind: FamilyKind, n: usize, k: usize) -> Result<Self, DecompositionError> {
        let members = family(kind, n, k);
        let monomials = monomial_box(k, n);
        let vectors = members
            .iter()
            .map(|d| Ok(tutte(&d.realize()?)?.coefficient_vector(&monomials)))
            .collect::<Result<Vec<_>, DecompositionError>>()?;
        Ok(TutteBasis {
            kind,
            n,
            k,
            members,
            monomials,
            vectors,
        })
    }

    pub fn members(&self) -> &[MatroidDescriptor] {
        &self.members
    }

    /// Decomposes a polynomial of the basis stratum.
    pub fn decompose_poly(&self, t: &BivarPoly) -> Result<Decomposition, DecompositionError> {
        let (dx, dy) = t.max_degrees();
        if !t.is_zero() && (dx as usize > self.k || dy as usize > self.n - self.k) {
            return Err(DecompositionError::TheoremViolation(format!(
                "{t} has degrees outside the ({}, {}) box",
                self.k,
                self.n - self.k
            )));
        }
        let sol = self.solve_rational(t)?.ok_or_else(|| {
            DecompositionError::TheoremViolation(format!("{t} is outside the {} span", self.kind))
        })?;
        if !sol.is_unique {
            return Err(DecompositionError::TheoremViolation(format!(
                "{} Tutte polynomials are dependent for n={}, k={}",
                self.kind, self.n, self.k
            )));
        }
        let coeffs = sol.integer_coefficients().ok_or_else(|| {
            let rational: Vec<String> = self
                .members
                .iter()
                .zip(&sol.coefficients)
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| format!("({c})*[{d}]"))
                .collect();
            DecompositionError::TheoremViolation(format!(
                "non-integral coefficients for {t} in the {} basis: {}",
                self.kind,
                rational.join(" + ")
            ))
        })?;
        Ok(Decomposition {
            basis: self.kind,
            n: self.n,
            k: self.k,
            terms: self
                .members
                .iter()
                .cloned()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        })
    }

    /// Coefficients over the rationals, or `None` outside the span.
    pub fn solve_rational(
        &self,
        t: &BivarPoly,
    ) -> Result<Option<SpanSolution>, DecompositionError> {
        let target = t.coefficient_vector(&self.monomials);
        Ok(solve_in_span(&self.vectors, &target)?)
    }

    pub fn decompose(&self, m: &Matroid) -> Result<Decomposition, DecompositionError> {
        if (m.n(), m.k()) != (self.n, self.k) {
            return Err(DecompositionError::MixedStratum(
                self.n,
                self.k,
                m.n(),
                m.k(),
            ));
        }
        self.decompose_poly(&tutte(m)?)
    }
}

pub fn decompose(m: &Matroid, basis: FamilyKind) -> Result<Decomposition, DecompositionError> {
    if basis == FamilyKind::ClassNDisconnected {
        return Err(DecompositionError::TheoremViolation(
            "class-N members do not form a Tutte basis".into(),
        ));
    }
    TutteBasis::new(basis, m.n(), m.k())?.decompose(m)
}

/// Families accepted by [`rank_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankFamily {
    All,
    Split,
    ClassN,
    ClassU,
    ClassT,
    Simple,
    Cuspidal,
}

impl FromStr for RankFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(RankFamily::All),
            "split" => Ok(RankFamily::Split),
            "class-n" => Ok(RankFamily::ClassN),
            "class-u" => Ok(RankFamily::ClassU),
            "class-t" => Ok(RankFamily::ClassT),
            "simple" => Ok(RankFamily::Simple),
            "cuspidal" => Ok(RankFamily::Cuspidal),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

impl fmt::Display for RankFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankFamily::All => "all",
            RankFamily::Split => "split",
            RankFamily::ClassN => "class-n",
            RankFamily::ClassU => "class-u",
            RankFamily::ClassT => "class-t",
            RankFamily::Simple => "simple",
            RankFamily::Cuspidal => "cuspidal",
        })
    }
}

/// Generating list of a family on one stratum.
///
/// `all`, `split` and `simple` need the exhaustive enumeration (n ≤ 6).
/// `class-n` uses the enumeration when available and otherwise the
/// generating set of disconnected members plus `U_{k,n}` and `Λ_{1,k,n−k,n}`.
pub fn family_members(
    fam: RankFamily,
    n: usize,
    k: usize,
) -> Result<Vec<Matroid>, DecompositionError> {
    let realize = |list: Vec<MatroidDescriptor>| -> Result<Vec<Matroid>, DecompositionError> {
        list.iter().map(|d| Ok(d.realize()?)).collect()
    };
    let enumerated = || -> Result<Vec<Matroid>, DecompositionError> {
        if n > EXHAUSTIVE_CAP {
            return Err(DecompositionError::SizeCapExceeded {
                what: "exhaustive family",
                cap: EXHAUSTIVE_CAP,
                n,
            });
        }
        Ok(enumerate_matroids(n, k, true)?)
    };
    match fam {
        RankFamily::All => enumerated(),
        RankFamily::Simple => Ok(enumerated()?
            .into_iter()
            .filter(Matroid::is_simple)
            .collect()),
        RankFamily::Split => {
            let all = enumerated()?;
            let keep: Vec<bool> = all
                .par_iter()
                .map(|m| Ok(classify(m)?.elementary_split))
                .collect::<Result<_, DecompositionError>>()?;
            Ok(all
                .into_iter()
                .zip(keep)
                .filter_map(|(m, k)| k.then_some(m))
                .collect())
        }
        RankFamily::ClassN if n <= EXHAUSTIVE_CAP => {
            let all = enumerated()?;
            let keep: Vec<bool> = all
                .par_iter()
                .map(|m| Ok(classify(m)?.class_n))
                .collect::<Result<_, DecompositionError>>()?;
            Ok(all
                .into_iter()
                .zip(keep)
                .filter_map(|(m, k)| k.then_some(m))
                .collect())
        }
        RankFamily::ClassN => realize(class_n_generators(n, k)),
        RankFamily::ClassU => realize(family(FamilyKind::ClassU, n, k)),
        RankFamily::ClassT => realize(family(FamilyKind::ClassT, n, k)),
        RankFamily::Cuspidal => realize(family(FamilyKind::Cuspidal, n, k)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEntry {
    pub n: usize,
    pub k: usize,
    pub members: usize,
    pub t_rank: Option<usize>,
    pub g_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    pub family: String,
    pub entries: Vec<RankEntry>,
}

pub fn rank_table(
    fam: RankFamily,
    strata: &[(usize, usize)],
    which: &[Invariant],
) -> Result<RankTable, DecompositionError> {
    let mut entries = Vec::new();
    for &(n, k) in strata {
        let members = family_members(fam, n, k)?;
        entries.push(rank_entry(n, k, &members, which)?);
    }
    Ok(RankTable {
        family: fam.to_string(),
        entries,
    })
}

/// One table row for an explicit list of matroids.
pub fn rank_entry(
    n: usize,
    k: usize,
    members: &[Matroid],
    which: &[Invariant],
) -> Result<RankEntry, DecompositionError> {
    let rank_of = |inv| -> Result<Option<usize>, DecompositionError> {
        if which.contains(&inv) {
            invariant_rank(members, inv).map(Some)
        } else {
            Ok(None)
        }
    };
    let entry = RankEntry {
        n,
        k,
        members: members.len(),
        t_rank: rank_of(Invariant::Tutte)?,
        g_rank: rank_of(Invariant::GInv)?,
    };
    if let (Some(t), Some(g)) = (entry.t_rank, entry.g_rank) {
        if t > g {
            return Err(DecompositionError::TheoremViolation(format!(
                "T-rank {t} exceeds G-rank {g} for n={n}, k={k}"
            )));
        }
    }
    Ok(entry)
}

impl RankTable {
    /// Aligned columns: `n k members t_rank g_rank`.
    pub fn to_text(&self) -> String {
        let header = ["n", "k", "members", "t_rank", "g_rank"];
        let rows: Vec<[String; 5]> = self.entries.iter().map(RankEntry::cells).collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: [&str; 5]| -> String {
            let parts: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            parts.join("  ")
        };
        let mut out = format!("# family: {}\n", self.family);
        out.push_str(&line(header));
        out.push('\n');
        for row in &rows {
            out.push_str(&line(row.each_ref().map(String::as_str)));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,k,members,t_rank,g_rank\n");
        for e in &self.entries {
            let [n, k, members, t, g] = e.cells();
            out.push_str(&format!("{},{n},{k},{members},{t},{g}\n", self.family));
        }
        out
    }
}

impl RankEntry {
    fn cells(&self) -> [String; 5] {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        [
            self.n.to_string(),
            self.k.to_string(),
            self.members.to_string(),
            opt(self.t_rank),
            opt(self.g_rank),
        ]
    }
}
