//! Noncommutative integer polynomials without constant term.
//!
//! Variables are numbered from 1; `x`, `y`, `z` are aliases for `x1`, `x2`,
//! `x3`. A monomial is a word over the variables and products concatenate
//! words.

mod identity;
mod parse;

pub use identity::{evaluate, parse_suite, sample_identity, satisfies_identity, Verdict};

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonempty word of variable indices, ordered by length and then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("polynomial coefficient overflow")
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    /// The variable `x_i`, `i >= 1`.
    pub fn var(i: u32) -> NcPoly {
        assert!(i >= 1, "variables are numbered from 1");
        NcPoly::monomial(1, vec![i])
    }

    /// `c` times the word `letters`. The empty word is rejected.
    pub fn monomial(c: i64, letters: Vec<u32>) -> NcPoly {
        assert!(!letters.is_empty(), "constant terms are not representable");
        let mut p = NcPoly::zero();
        p.add_term(Word(letters), c);
        p
    }

    /// Builds a polynomial from `(coefficient, word)` pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Vec<u32>)>) -> Result<NcPoly> {
        let mut p = NcPoly::zero();
        for (c, w) in terms {
            if w.is_empty() {
                return Err(Error::InvalidParameter("constant terms are not representable".into()));
            }
            if w.contains(&0) {
                return Err(Error::InvalidParameter("variables are numbered from 1".into()));
            }
            p.add_term(Word(w), c);
        }
        Ok(p)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.mul(b).sub(&b.mul(a))
    }

    fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot = checked(slot.checked_add(c));
        if *slot == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (degree, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, letters: &[u32]) -> i64 {
        self.terms.get(&Word(letters.to_vec())).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.scale(-1))
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> NcPoly {
        let mut out = NcPoly::zero();
        if c != 0 {
            for (w, &d) in &self.terms {
                out.add_term(w.clone(), checked(d.checked_mul(c)));
            }
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                out.add_term(Word(w), checked(a.checked_mul(b)));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<NcPoly> {
        if k == 0 {
            return Err(Error::InvalidParameter("zeroth power would be a constant".into()));
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Replaces every variable by its binding; all variables must be bound.
    pub fn substitute(&self, bindings: &BTreeMap<u32, NcPoly>) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, &c) in &self.terms {
            let mut image: Option<NcPoly> = None;
            for v in &w.0 {
                let b = bindings.get(v).ok_or(Error::UnboundVariable(*v))?;
                image = Some(match image {
                    None => b.clone(),
                    Some(acc) => acc.mul(b),
                });
            }
            out = out.add(&image.expect("words are nonempty").scale(c));
        }
        Ok(out)
    }

    /// Minimum length of a word with nonzero coefficient.
    pub fn lower_degree(&self) -> Result<usize> {
        self.terms.keys().next().map(Word::len).ok_or(Error::ZeroPolynomial)
    }

    pub fn degree(&self) -> Result<usize> {
        self.terms.keys().next_back().map(Word::len).ok_or(Error::ZeroPolynomial)
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).collect()
    }

    /// True when setting any single occurring variable to 0 gives 0, i.e.
    /// every term contains every variable.
    pub fn essentially_depends(&self) -> bool {
        let vars = self.variables();
        vars.iter().all(|&v| self.terms.keys().all(|w| w.0.contains(&v)))
    }

    /// The polynomial with `v` set to zero.
    pub fn vanish(&self, v: u32) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !w.0.contains(&v))
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }
}

/// `2^s f - f(x_v -> 2 x_v)` where `s` is the degree of `f`.
///
/// For `f` in the single variable `v` this removes the top-degree part.
pub fn doubling_step(f: &NcPoly, v: u32) -> Result<NcPoly> {
    let s = f.degree()?;
    let mut bindings: BTreeMap<u32, NcPoly> = f.variables().into_iter().map(|u| (u, NcPoly::var(u))).collect();
    bindings.insert(v, NcPoly::var(v).scale(2));
    let doubled = f.substitute(&bindings)?;
    let factor = 1i64.checked_shl(s as u32).filter(|_| s < 63).expect("degree too large");
    Ok(f.scale(factor).sub(&doubled))
}

/// Applies [`doubling_step`] until the degree drops to at most 1.
///
/// A univariate `f = kx + x^2 g(x)` of degree `s` whose degrees stay
/// consecutive ends at `(2^s - 2)(2^(s-1) - 2)...(2^2 - 2) k x`.
pub fn collapse_to_linear(f: &NcPoly, v: u32) -> Result<NcPoly> {
    let mut cur = f.clone();
    while !cur.is_zero() && cur.degree()? > 1 {
        cur = doubling_step(&cur, v)?;
    }
    Ok(cur)
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render(self))
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({})", parse::render(self))
    }
}

impl FromStr for NcPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<NcPoly> {
        parse::parse(s)
    }
}

pub fn parse(text: &str) -> Result<NcPoly> {
    parse::parse(text)
}

pub fn render(p: &NcPoly) -> String {
    parse::render(p)
}
