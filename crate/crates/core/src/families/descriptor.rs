//! Symbolic names for the matroids the families are built from.
//!
//! Grammar: `uniform:k,n`, `cuspidal:r,k,h,n`, `minimal:k,n`,
//! `sum:(d1)+(d2)+...` with arbitrary nesting inside the parentheses.

use std::fmt;
use std::str::FromStr;

use crate::error::FamilyError;
use crate::matroid::{k_subsets, Matroid, SubsetMask};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatroidDescriptor {
    Uniform {
        k: usize,
        n: usize,
    },
    /// Rank-`k` matroid on `[n]` whose bases meet `{1..h}` in at least `r` elements.
    Cuspidal {
        r: usize,
        k: usize,
        h: usize,
        n: usize,
    },
    /// `T_{k,n}`, realized as `cuspidal(k−1, k, k, n)`.
    Minimal {
        k: usize,
        n: usize,
    },
    Sum(Vec<MatroidDescriptor>),
}

use MatroidDescriptor as D;

impl MatroidDescriptor {
    pub fn uniform(k: usize, n: usize) -> Self {
        D::Uniform { k, n }
    }

    pub fn cuspidal(r: usize, k: usize, h: usize, n: usize) -> Self {
        D::Cuspidal { r, k, h, n }
    }

    pub fn minimal(k: usize, n: usize) -> Self {
        D::Minimal { k, n }
    }

    /// Direct sum. Nested sums are flattened, empty summands dropped, and a
    /// single remaining summand is returned as is. Summand order is kept.
    pub fn sum<I: IntoIterator<Item = MatroidDescriptor>>(parts: I) -> Self {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                D::Sum(inner) => flat.extend(inner),
                other if other.n() == 0 => {}
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => D::uniform(0, 0),
            1 => flat.pop().expect("one summand"),
            _ => D::Sum(flat),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            D::Uniform { n, .. } | D::Cuspidal { n, .. } | D::Minimal { n, .. } => *n,
            D::Sum(parts) => parts.iter().map(Self::n).sum(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            D::Uniform { k, .. } | D::Cuspidal { k, .. } | D::Minimal { k, .. } => *k,
            D::Sum(parts) => parts.iter().map(Self::k).sum(),
        }
    }

    /// Checks the parameter constraints of every constructor in the term.
    ///
    /// Cuspidal terms need `r ≤ h ≤ n` and `0 ≤ k − r ≤ n − h`; `k = r` is
    /// allowed because the cuspidal family contains those members.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::InadmissibleParameters(msg));
        match *self {
            D::Uniform { k, n } if k > n => bad(format!("uniform:{k},{n} needs k <= n")),
            D::Cuspidal { r, k, h, n } if !(r <= h && h <= n && r <= k && k - r <= n - h) => bad(
                format!("cuspidal:{r},{k},{h},{n} needs r <= h <= n and 0 <= k-r <= n-h"),
            ),
            D::Minimal { k, n } if !(1 <= k && k < n) => {
                bad(format!("minimal:{k},{n} needs 1 <= k <= n-1"))
            }
            D::Sum(ref parts) => parts.iter().try_for_each(Self::validate),
            _ => Ok(()),
        }
    }

    /// Flattened form with summands sorted, for comparing descriptors up
    /// to reordering of direct summands.
    pub fn canonical(&self) -> Self {
        match self {
            D::Sum(parts) => {
                let mut flat: Vec<Self> = Vec::new();
                for p in parts {
                    match p.canonical() {
                        D::Sum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort();
                Self::sum(flat)
            }
            other => other.clone(),
        }
    }

    /// The concrete matroid on `{1..n}`; summands occupy consecutive labels.
    pub fn realize(&self) -> Result<Matroid, FamilyError> {
        self.validate()?;
        Ok(self.build())
    }

    fn build(&self) -> Matroid {
        match *self {
            D::Uniform { k, n } => Matroid::uniform(k, n),
            D::Cuspidal { r, k, h, n } => {
                let head = SubsetMask::full(h);
                let bases = k_subsets(n, k)
                    .into_iter()
                    .filter(|b| b.intersection(head).len() >= r)
                    .collect();
                Matroid::from_sorted_unchecked(n, bases)
            }
            D::Minimal { k, n } => D::cuspidal(k - 1, k, k, n).build(),
            D::Sum(ref parts) => parts
                .iter()
                .fold(Matroid::uniform(0, 0), |acc, p| acc.direct_sum(&p.build())),
        }
    }
}

impl fmt::Display for MatroidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D::Uniform { k, n } => write!(f, "uniform:{k},{n}"),
            D::Cuspidal { r, k, h, n } => write!(f, "cuspidal:{r},{k},{h},{n}"),
            D::Minimal { k, n } => write!(f, "minimal:{k},{n}"),
            D::Sum(parts) => {
                f.write_str("sum:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "({p})")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for MatroidDescriptor {
    type Err = FamilyError;

    /// Parses without validating parameters; see [`MatroidDescriptor::validate`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: String| FamilyError::Parse(msg);
        let s = s.trim();
        let (head, args) = s
            .split_once(':')
            .ok_or_else(|| err(format!("expected `<kind>:<args>`, got `{s}`")))?;
        let ints = |want: usize| -> Result<Vec<usize>, FamilyError> {
            let v: Vec<usize> = args
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(format!("bad integer list `{args}` in `{s}`")))?;
            if v.len() != want {
                return Err(err(format!("`{head}` takes {want} integers, got `{args}`")));
            }
            Ok(v)
        };
        match head.trim() {
            "uniform" => ints(2).map(|v| D::uniform(v[0], v[1])),
            "cuspidal" => ints(4).map(|v| D::cuspidal(v[0], v[1], v[2], v[3])),
            "minimal" => ints(2).map(|v| D::minimal(v[0], v[1])),
            "sum" => {
                let parts = split_summands(args).map_err(err)?;
                let parsed: Vec<Self> = parts
                    .into_iter()
                    .map(Self::from_str)
                    .collect::<Result<_, _>>()?;
                Ok(D::sum(parsed))
            }
            other => Err(err(format!("unknown descriptor kind `{other}`"))),
        }
    }
}

/// Splits `(a)+(b)+...` at top-level `+`, returning the inner texts.
fn split_summands(args: &str) -> Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    let mut expect_plus = false;
    for (i, c) in args.char_indices() {
        match c {
            '(' => {
                if depth == 0 {
                    if expect_plus {
                        return Err(format!("missing `+` in `{args}`"));
                    }
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| format!("unbalanced `)` in `{args}`"))?;
                if depth == 0 {
                    out.push(&args[start.take().expect("open paren")..i]);
                    expect_plus = true;
                }
            }
            '+' if depth == 0 => {
                if !expect_plus {
                    return Err(format!("unexpected `+` in `{args}`"));
                }
                expect_plus = false;
            }
            c if depth == 0 && !c.is_whitespace() => {
                return Err(format!("summands must be parenthesized in `{args}`"));
            }
            _ => {}
        }
    }
    if depth != 0 || !expect_plus {
        return Err(format!("malformed sum `{args}`"));
    }
    Ok(out)
}
