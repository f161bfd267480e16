//! Evaluating polynomials in finite rings and checking identities.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits;
use crate::ring::FiniteRing;

use super::NcPoly;

/// Outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A failing assignment as `(variable, element)` pairs in variable order.
    Fails(Vec<(u32, usize)>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&[(u32, usize)]> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(a) => Some(a),
        }
    }
}

/// A polynomial with its variables renumbered to positions `0..d`.
struct Compiled {
    vars: Vec<u32>,
    terms: Vec<(i64, Vec<usize>)>,
}

impl Compiled {
    fn new(p: &NcPoly) -> Compiled {
        let vars: Vec<u32> = p.variables().into_iter().collect();
        let slot = |v: &u32| vars.binary_search(v).expect("variable listed");
        let terms = p
            .terms()
            .map(|(w, c)| (c, w.letters().iter().map(slot).collect()))
            .collect();
        Compiled { vars, terms }
    }

    fn eval(&self, r: &FiniteRing, values: &[usize]) -> usize {
        self.terms.iter().fold(0, |acc, (c, word)| {
            let product = word[1..].iter().fold(values[word[0]], |x, &s| r.mul(x, values[s]));
            r.add(acc, r.scale(*c, product))
        })
    }
}

/// Value of `p` in `r`; integer coefficients act as repeated addition.
pub fn evaluate(p: &NcPoly, r: &FiniteRing, assignment: &BTreeMap<u32, usize>) -> Result<usize> {
    let compiled = Compiled::new(p);
    let mut values = Vec::with_capacity(compiled.vars.len());
    for v in &compiled.vars {
        let x = *assignment.get(v).ok_or(Error::UnboundVariable(*v))?;
        if x >= r.order() {
            return Err(Error::InvalidParameter(format!("{x} is not an element of the ring")));
        }
        values.push(x);
    }
    Ok(compiled.eval(r, &values))
}

/// Advances `values` to the next tuple in lexicographic order.
fn next_tuple(values: &mut [usize], n: usize) -> bool {
    for i in (0..values.len()).rev() {
        values[i] += 1;
        if values[i] < n {
            return true;
        }
        values[i] = 0;
    }
    false
}

/// Exhaustive check over all `|R|^d` assignments. A failure reports the
/// least counterexample in lexicographic order of assignment tuples.
pub fn satisfies_identity(r: &FiniteRing, p: &NcPoly) -> Result<Verdict> {
    let compiled = Compiled::new(p);
    let d = compiled.vars.len();
    let n = r.order();
    let needed = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    let budget = limits::evaluation_budget() as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if d == 0 {
        return Ok(if compiled.terms.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Fails(Vec::new())
        });
    }
    // each worker scans one value of the first variable in order; the
    // ordered search keeps the globally least failure
    let failure = (0..n).into_par_iter().find_map_first(|first| {
        let mut values = vec![0; d];
        values[0] = first;
        loop {
            if compiled.eval(r, &values) != 0 {
                return Some(values);
            }
            if !next_tuple(&mut values[1..], n) {
                return None;
            }
        }
    });
    Ok(match failure {
        None => Verdict::Holds,
        Some(values) => Verdict::Fails(compiled.vars.iter().copied().zip(values).collect()),
    })
}

/// Random-assignment check for cases above the exhaustive budget. `Holds`
/// only means no counterexample was sampled.
pub fn sample_identity(r: &FiniteRing, p: &NcPoly, samples: u64, seed: u64) -> Verdict {
    let compiled = Compiled::new(p);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut values = vec![0; compiled.vars.len()];
    for _ in 0..samples {
        for v in values.iter_mut() {
            *v = rng.gen_range(0..r.order());
        }
        if compiled.eval(r, &values) != 0 {
            return Verdict::Fails(compiled.vars.iter().copied().zip(values).collect());
        }
    }
    Verdict::Holds
}

/// One polynomial per line; blank lines and `#` comments are skipped.
pub fn parse_suite(text: &str) -> Result<Vec<NcPoly>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let p = super::parse(body).map_err(|e| Error::format(i + 1, e.to_string()))?;
        out.push(p);
    }
    Ok(out)
}
