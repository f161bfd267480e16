use std::collections::{BTreeSet, HashSet};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::FiniteRing;

use crate::ring::ideal_closure;

/// A two-sided ideal, stored as a set of element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring_order: usize,
    members: ElemSet,
}

impl Ideal {
    /// Validates that `members` is a two-sided ideal of `r`.
    pub fn new(r: &FiniteRing, members: impl IntoIterator<Item = usize>) -> Result<Ideal> {
        if r.order() > ElemSet::CAPACITY {
            return Err(Error::OrderCapExceeded {
                what: "ideal",
                order: r.order() as u64,
                cap: ElemSet::CAPACITY as u64,
            });
        }
        let mut set = ElemSet::new();
        for x in members {
            if x >= r.order() {
                return Err(Error::NotAnIdeal(format!("{x} is not an element")));
            }
            set.insert(x);
        }
        if !set.contains(0) {
            return Err(Error::NotAnIdeal("missing 0".into()));
        }
        for x in set.iter() {
            if !set.contains(r.neg(x)) {
                return Err(Error::NotAnIdeal(format!("not closed under negation at {x}")));
            }
            for y in set.iter() {
                if !set.contains(r.add(x, y)) {
                    return Err(Error::NotAnIdeal(format!("not closed under + at ({x}, {y})")));
                }
            }
            for y in r.elements() {
                if !set.contains(r.mul(x, y)) || !set.contains(r.mul(y, x)) {
                    return Err(Error::NotAnIdeal(format!("not absorbing at ({x}, {y})")));
                }
            }
        }
        Ok(Ideal {
            ring_order: r.order(),
            members: set,
        })
    }

    pub(crate) fn from_set(r: &FiniteRing, members: ElemSet) -> Ideal {
        Ideal {
            ring_order: r.order(),
            members,
        }
    }

    pub fn zero(r: &FiniteRing) -> Ideal {
        Ideal::from_set(r, ElemSet::singleton(0))
    }

    pub fn whole(r: &FiniteRing) -> Ideal {
        Ideal::from_set(r, r.elements().collect())
    }

    /// The ideal generated by `gens`.
    pub fn generated(r: &FiniteRing, gens: &[usize]) -> Result<Ideal> {
        if r.order() > ElemSet::CAPACITY {
            return Err(Error::OrderCapExceeded {
                what: "ideal",
                order: r.order() as u64,
                cap: ElemSet::CAPACITY as u64,
            });
        }
        Ok(Ideal::from_set(r, ideal_closure(r, gens.iter().copied().collect())))
    }

    pub fn ring_order(&self) -> usize {
        self.ring_order
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.ring_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            ring_order: self.ring_order,
            members: self.members.intersection(&other.members),
        }
    }

    /// `I + K`, the smallest ideal containing both.
    pub fn join(&self, other: &Ideal, r: &FiniteRing) -> Ideal {
        Ideal::from_set(r, ideal_closure(r, self.members.union(&other.members)))
    }

    /// True when some power `I^k` is zero.
    pub fn is_nilpotent(&self, r: &FiniteRing) -> bool {
        let mut power = self.members;
        for _ in 0..=self.len() {
            if power.len() == 1 {
                return true;
            }
            let next = additive_span_of_products(r, &power, &self.members);
            if next == power {
                return false;
            }
            power = next;
        }
        power.len() == 1
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ideals sort by size, then by their sorted member lists.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members().cmp(&other.members()))
    }
}

/// Additive subgroup generated by all products `a * b` with `a` in `left`
/// and `b` in `right`.
pub(crate) fn additive_span_of_products(r: &FiniteRing, left: &ElemSet, right: &ElemSet) -> ElemSet {
    let mut gens = ElemSet::singleton(0);
    for a in left.iter() {
        for b in right.iter() {
            gens.insert(r.mul(a, b));
        }
    }
    additive_span(r, gens)
}

pub(crate) fn additive_span(r: &FiniteRing, gens: ElemSet) -> ElemSet {
    let mut span = ElemSet::singleton(0);
    let mut members = vec![0usize];
    for g in gens.iter() {
        if span.contains(g) {
            continue;
        }
        // span + <g>
        let base = members.clone();
        let mut shift = g;
        while !span.contains(shift) {
            for &x in &base {
                let y = r.add(x, shift);
                if span.insert(y) {
                    members.push(y);
                }
            }
            shift = r.add(shift, g);
        }
    }
    span
}

/// All two-sided ideals of `r`, sorted by `(size, members)`.
///
/// Every ideal is reached by adjoining one element at a time to a smaller
/// ideal and closing, starting from the zero ideal.
pub fn ideals(r: &FiniteRing) -> Result<Vec<Ideal>> {
    limits::check_structural(r.order())?;
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let zero = ElemSet::singleton(0);
    seen.insert(zero);
    let mut frontier = vec![zero];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in frontier {
            for x in r.elements() {
                if set.contains(x) {
                    continue;
                }
                let mut seed = set;
                seed.insert(x);
                let closed = ideal_closure(r, seed);
                if seen.insert(closed) {
                    next.push(closed);
                }
            }
        }
        frontier = next;
    }
    let sorted: BTreeSet<Ideal> = seen.into_iter().map(|s| Ideal::from_set(r, s)).collect();
    Ok(sorted.into_iter().collect())
}
