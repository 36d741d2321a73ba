//! Sparse bivariate polynomials in `x, y` with unbounded integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::AlgebraError;

/// Exponent pair `x^i y^j`, ordered graded-lexicographically *descending*
/// on `(i + j, i)`. Iterating a sorted collection of monomials therefore
/// yields the print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub const fn new(i: u32, j: u32) -> Self {
        Monomial { i, j }
    }

    pub fn degree(self) -> u32 {
        self.i + self.j
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.degree(), other.i).cmp(&(self.degree(), self.i))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials `x^i y^j` with `i ≤ k`, `j ≤ n − k`, in vectorization order.
pub fn monomial_box(k: usize, n: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity((k + 1) * (n - k + 1));
    for i in 0..=k as u32 {
        for j in 0..=(n - k) as u32 {
            out.push(Monomial::new(i, j));
        }
    }
    out.sort();
    out
}

/// Polynomial in `Z[x, y]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::term(0, 0, c)
    }

    pub fn x() -> Self {
        Self::term(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::term(0, 1, 1)
    }

    pub fn term<C: Into<BigInt>>(i: u32, j: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(i, j), c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * &c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            total += c
                * num_traits::pow(x0.clone(), m.i as usize)
                * num_traits::pow(y0.clone(), m.j as usize);
        }
        total
    }

    pub fn evaluate_i64(&self, x0: i64, y0: i64) -> BigInt {
        self.evaluate(&BigInt::from(x0), &BigInt::from(y0))
    }

    /// Substitutes `x → x + a`, `y → y + b` by binomial expansion.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for p in 0..=m.i {
                let xa = binom(m.i, p) * num_traits::pow(a.clone(), (m.i - p) as usize);
                for q in 0..=m.j {
                    let yb = binom(m.j, q) * num_traits::pow(b.clone(), (m.j - q) as usize);
                    out.add_term(Monomial::new(p, q), c * &xa * &yb);
                }
            }
        }
        out
    }

    /// `P(y, x)`.
    pub fn swap_xy(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.j, m.i), c.clone()))
                .collect(),
        }
    }

    pub fn coefficient_vector(&self, monomials: &[Monomial]) -> Vec<BigInt> {
        monomials
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_default())
            .collect()
    }

    pub fn from_coefficient_vector(monomials: &[Monomial], coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (m, c) in monomials.iter().zip(coeffs) {
            p.add_term(*m, c.clone());
        }
        p
    }

    /// Largest `(i, j)` exponents present.
    pub fn max_degrees(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), m| (a.max(m.i), b.max(m.j)))
    }

    /// `[[i, j, c], ...]` in print order. Coefficients outside `i64` are strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let c = match c.to_i64() {
                        Some(v) => Value::from(v),
                        None => Value::from(c.to_string()),
                    };
                    Value::Array(vec![Value::from(m.i), Value::from(m.j), c])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("expected [[i, j, c], ...], got {v}"));
        let mut p = Self::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let i = t[0].as_u64().ok_or_else(bad)? as u32;
            let j = t[1].as_u64().ok_or_else(bad)? as u32;
            let c: BigInt = match &t[2] {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad)?,
                Value::String(s) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            p.add_term(Monomial::new(i, j), c);
        }
        Ok(p)
    }

    /// Parses the printed form, e.g. `x^2*y - 3*x + 1`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let err = |msg: String| AlgebraError::Parse(msg);
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut p = Self::zero();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(err(format!("expected `+` or `-` before `{rest}`")));
            }
            first = false;
            let end = rest
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map_or(rest.len(), |(i, _)| i);
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut coeff = BigInt::from(sign);
            let (mut i, mut j) = (0u32, 0u32);
            for factor in term.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<u32>()
                            .map_err(|_| err(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                match base {
                    "x" => i += exp,
                    "y" => j += exp,
                    digits => {
                        let c: BigInt = digits
                            .parse()
                            .map_err(|_| err(format!("bad factor `{factor}`")))?;
                        coeff *= num_traits::pow(c, exp as usize);
                    }
                }
            }
            p.add_term(Monomial::new(i, j), coeff);
        }
        Ok(p)
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (m.i == 0 && m.j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("x", m.i), ("y", m.j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        &self - &rhs
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        self.scale(-1)
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(Monomial::new(a.i + b.i, a.j + b.j), ca * cb);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    #[test]
    fn prints_graded_lex_descending() {
        let t = BivarPoly::from_terms([(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1)]);
        assert_eq!(t.to_string(), "x^2 + y^2 + 2*x + 2*y");
        assert_eq!(p("x - x^2").to_string(), "-x^2 + x");
        assert_eq!(BivarPoly::one().to_string(), "1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(p("x^2*y + x*y^2").to_string(), "x^2*y + x*y^2");
    }

    #[test]
    fn shift_by_one() {
        let q = p("x^2 + x*y + y^2 + x + y").shift(1, 1);
        assert_eq!(q, p("x^2 + x*y + y^2 + 4*x + 4*y + 5"));
    }

    #[test]
    fn evaluate_counts_bases() {
        let t = p("x^2 + y^2 + 2*x + 2*y");
        assert_eq!(t.evaluate_i64(1, 1), BigInt::from(6));
    }

    #[test]
    fn add_negation_is_zero() {
        let t = p("x^2 + y^2 + 2*x + 2*y");
        assert!((&t + &t.scale(-1)).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let t = p("x^2*y - 7*y + 3");
        assert_eq!(t.to_json().to_string(), "[[2,1,1],[0,1,-7],[0,0,3]]");
        assert_eq!(BivarPoly::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BivarPoly::parse("x^^2").is_err());
        assert!(BivarPoly::parse("").is_err());
        assert!(BivarPoly::parse("2z").is_err());
    }

    #[test]
    fn unbounded_coefficients() {
        let big = BivarPoly::x().scale(BigInt::from(i64::MAX)).pow(3);
        assert_eq!(big.coeff(3, 0), BigInt::from(i64::MAX).pow(3));
        assert_eq!(BivarPoly::from_json(&big.to_json()).unwrap(), big);
    }

    fn arb_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -20i64..20), 0..8).prop_map(BivarPoly::from_terms)
    }

    proptest! {
        #[test]
        fn shift_inverts(a in arb_poly()) {
            prop_assert_eq!(a.shift(1, 1).shift(-1, -1), a);
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn display_parses_back(a in arb_poly()) {
            prop_assert_eq!(BivarPoly::parse(&a.to_string()).unwrap(), a);
        }
    }
}
