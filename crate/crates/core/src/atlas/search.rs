//! Backtracking over structure constants of a fixed additive type.
//!
//! A ring structure on `Z_{m_1} + ... + Z_{m_k}` (all `m_i` powers of one
//! prime) is fixed by the products of the generators,
//! `g_i g_j = sum_l c_ijl g_l`. Bilinearity forces `g_i g_j` into the
//! subgroup killed by `min(m_i, m_j)`, so `c_ijl` runs over the multiples of
//! `m_l / min(m_i, m_j, m_l)`. Associativity of the bilinear extension
//! reduces to the generator triples, and a triple is checked as soon as every
//! product it reads has been chosen.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::structure::{ring_canonical_certificate, RingCertificate};

/// Additive cyclic orders plus the structure constants `products[i][j][l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPresentation {
    pub orders: Vec<u64>,
    pub products: Vec<Vec<Vec<u64>>>,
}

impl GeneratorPresentation {
    /// Every product of generators lies in the subgroup its factors' orders
    /// annihilate, and every coefficient is reduced.
    pub fn is_consistent(&self) -> bool {
        let k = self.orders.len();
        self.products.len() == k
            && self.products.iter().all(|row| row.len() == k && row.iter().all(|c| c.len() == k))
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    (0..k).all(|l| {
                        let m = self.orders[i].min(self.orders[j]);
                        let c = self.products[i][j][l];
                        c < self.orders[l] && (c * m) % self.orders[l] == 0
                    })
                })
            })
    }

    pub fn is_associative(&self) -> bool {
        let k = self.orders.len();
        (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| triple_holds(&self.orders, &|i, j| Some(&self.products[i][j]), a, b, c) == Some(true))))
    }

    /// Elements are mixed-radix coordinate vectors, first generator least
    /// significant.
    pub fn to_ring(&self) -> Result<FiniteRing> {
        if !self.is_consistent() {
            return Err(Error::InvalidParameter("structure constants violate bilinearity".into()));
        }
        let order: u64 = self.orders.iter().product();
        crate::limits::check_order(order)?;
        let order = order as usize;
        let k = self.orders.len();
        let coords: Vec<Vec<u64>> = (0..order)
            .map(|mut x| {
                self.orders
                    .iter()
                    .map(|&m| {
                        let c = x as u64 % m;
                        x /= m as usize;
                        c
                    })
                    .collect()
            })
            .collect();
        let index = |v: &[u64]| {
            v.iter()
                .zip(&self.orders)
                .rev()
                .fold(0u64, |acc, (&c, &m)| acc * m + c) as usize
        };
        let add = |x: usize, y: usize| {
            let v: Vec<u64> = (0..k).map(|l| (coords[x][l] + coords[y][l]) % self.orders[l]).collect();
            index(&v)
        };
        let mul = |x: usize, y: usize| {
            let mut v = vec![0u64; k];
            for i in 0..k {
                for j in 0..k {
                    let s = coords[x][i] * coords[y][j];
                    if s == 0 {
                        continue;
                    }
                    for l in 0..k {
                        v[l] = (v[l] + s * self.products[i][j][l]) % self.orders[l];
                    }
                }
            }
            index(&v)
        };
        Ok(FiniteRing::from_fn(order, add, mul, ""))
    }
}

/// `Some(ok)` when `(g_a g_b) g_c = g_a (g_b g_c)` can be decided from the
/// products available through `get`, `None` when something is missing.
fn triple_holds<'a>(
    orders: &[u64],
    get: &dyn Fn(usize, usize) -> Option<&'a Vec<u64>>,
    a: usize,
    b: usize,
    c: usize,
) -> Option<bool> {
    let k = orders.len();
    let ab = get(a, b)?;
    let bc = get(b, c)?;
    let mut lhs = vec![0u64; k];
    let mut rhs = vec![0u64; k];
    for l in 0..k {
        if ab[l] != 0 {
            let lc = get(l, c)?;
            for t in 0..k {
                lhs[t] = (lhs[t] + ab[l] * lc[t]) % orders[t];
            }
        }
        if bc[l] != 0 {
            let al = get(a, l)?;
            for t in 0..k {
                rhs[t] = (rhs[t] + bc[l] * al[t]) % orders[t];
            }
        }
    }
    Some(lhs == rhs)
}

struct Space {
    orders: Vec<u64>,
    /// Generator pairs in assignment order.
    pairs: Vec<(usize, usize)>,
    /// Admissible coordinate vectors for each pair.
    choices: Vec<Vec<Vec<u64>>>,
}

impl Space {
    fn new(orders: &[u64]) -> Space {
        let k = orders.len();
        let pairs: Vec<(usize, usize)> =
            (0..k).flat_map(|t| (0..t).map(move |i| (i, t)).chain((0..=t).map(move |j| (t, j)))).collect();
        let choices = pairs
            .iter()
            .map(|&(i, j)| {
                let mut out: Vec<Vec<u64>> = vec![Vec::new()];
                for l in 0..k {
                    let m = orders[i].min(orders[j]).min(orders[l]);
                    let step = orders[l] / m;
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            (0..m).map(move |t| {
                                let mut v = prefix.clone();
                                v.push(t * step);
                                v
                            })
                        })
                        .collect();
                }
                out
            })
            .collect();
        Space {
            orders: orders.to_vec(),
            pairs,
            choices,
        }
    }
}

struct Walker<'a> {
    space: &'a Space,
    products: Vec<Vec<Option<Vec<u64>>>>,
}

impl Walker<'_> {
    fn new(space: &Space) -> Walker<'_> {
        let k = space.orders.len();
        Walker {
            space,
            products: vec![vec![None; k]; k],
        }
    }

    /// Checks the triples that may have become decidable after `(i, j)` was
    /// assigned: exactly those reading `g_i g_j`, which have `a = i` or `c = j`.
    fn consistent_after(&self, i: usize, j: usize) -> bool {
        let k = self.space.orders.len();
        let get = |x: usize, y: usize| self.products[x][y].as_ref();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if a != i && c != j {
                        continue;
                    }
                    if triple_holds(&self.space.orders, &get, a, b, c) == Some(false) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn assign(&mut self, depth: usize, choice: usize) -> bool {
        let (i, j) = self.space.pairs[depth];
        self.products[i][j] = Some(self.space.choices[depth][choice].clone());
        self.consistent_after(i, j)
    }

    fn unassign(&mut self, depth: usize) {
        let (i, j) = self.space.pairs[depth];
        self.products[i][j] = None;
    }

    fn presentation(&self) -> GeneratorPresentation {
        GeneratorPresentation {
            orders: self.space.orders.clone(),
            products: self
                .products
                .iter()
                .map(|row| row.iter().map(|c| c.clone().expect("complete assignment")).collect())
                .collect(),
        }
    }

    fn walk(&mut self, depth: usize, out: &mut dyn FnMut(GeneratorPresentation)) {
        if depth == self.space.pairs.len() {
            out(self.presentation());
            return;
        }
        for choice in 0..self.space.choices[depth].len() {
            if self.assign(depth, choice) {
                self.walk(depth + 1, out);
            }
            self.unassign(depth);
        }
    }
}

/// Consistent prefixes of the first `depth` pairs, as choice indices.
fn prefixes(space: &Space, depth: usize) -> Vec<Vec<usize>> {
    fn go(w: &mut Walker, depth: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == limit {
            out.push(cur.clone());
            return;
        }
        for choice in 0..w.space.choices[depth].len() {
            if w.assign(depth, choice) {
                cur.push(choice);
                go(w, depth + 1, limit, cur, out);
                cur.pop();
            }
            w.unassign(depth);
        }
    }
    let mut out = Vec::new();
    go(&mut Walker::new(space), 0, depth, &mut Vec::new(), &mut out);
    out
}

/// Number of leading pairs fixed per parallel task.
const TARGET_TASKS: usize = 512;

/// Every associative structure on the given additive type, up to isomorphism,
/// as sorted certificates.
pub(crate) fn certificates_for_type(orders: &[u64]) -> Result<BTreeSet<RingCertificate>> {
    let space = Space::new(orders);
    let mut depth = 0;
    let mut tasks = 1usize;
    while depth < space.pairs.len() && tasks < TARGET_TASKS {
        tasks = tasks.saturating_mul(space.choices[depth].len());
        depth += 1;
    }
    let starts = prefixes(&space, depth);
    let sets = starts
        .par_iter()
        .map(|prefix| -> Result<BTreeSet<RingCertificate>> {
            let mut w = Walker::new(&space);
            for (d, &c) in prefix.iter().enumerate() {
                w.assign(d, c);
            }
            let mut found = BTreeSet::new();
            let mut failure = None;
            w.walk(depth, &mut |pres| {
                if failure.is_some() {
                    return;
                }
                match pres.to_ring().and_then(|r| ring_canonical_certificate(&r)) {
                    Ok(cert) => {
                        found.insert(cert);
                    }
                    Err(e) => failure = Some(e),
                }
            });
            match failure {
                Some(e) => Err(e),
                None => Ok(found),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(sets.into_iter().flatten().collect())
}
