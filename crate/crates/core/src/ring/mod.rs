//! Finite associative rings stored as Cayley tables.
//!
//! Elements are the dense indices `0..order`, with `0` the additive zero.
//! Rings need not be commutative and need not have an identity.

mod combinators;
mod families;
pub mod ringtab;

pub use combinators::{characteristic, direct_sum, matrix_ring, quotient, subring_generated, Subring};
pub use families::{ap, ap0, gf, n0, np2, npp, zero_ring, zn, zpx_mod_x2};
pub(crate) use combinators::ideal_closure;
pub(crate) use ringtab::parse_ringtab_at;
pub use ringtab::{parse_ringtab, read_ringtab, write_ringtab, write_ringtab_file};

use std::fmt;

use crate::error::{Axiom, Error, Result};
use crate::limits;

/// Table entry type; orders are bounded by `limits::HARD_MAX_ORDER`.
pub(crate) type Cell = u16;

#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<Cell>,
    mul: Vec<Cell>,
    neg: Vec<Cell>,
    label: Option<String>,
    names: Option<Vec<String>>,
}

/// Validates a pair of `n x n` tables and returns the ring they define.
pub fn make_ring(add: &[Vec<usize>], mul: &[Vec<usize>], label: Option<&str>) -> Result<FiniteRing> {
    let n = add.len();
    if n == 0 {
        return Err(violation(Axiom::TableShape, vec![]));
    }
    limits::check_order(n as u64)?;
    if mul.len() != n {
        return Err(violation(Axiom::TableShape, vec![mul.len()]));
    }
    for (row_idx, row) in add.iter().chain(mul.iter()).enumerate() {
        if row.len() != n {
            return Err(violation(Axiom::TableShape, vec![row_idx % n, row.len()]));
        }
    }
    for (which, table) in [add, mul].into_iter().enumerate() {
        for (x, row) in table.iter().enumerate() {
            if let Some(y) = row.iter().position(|&v| v >= n) {
                return Err(violation(Axiom::EntryRange, vec![which, x, y]));
            }
        }
    }
    let flat = |t: &[Vec<usize>]| t.iter().flatten().map(|&v| v as Cell).collect::<Vec<_>>();
    let ring = FiniteRing::from_flat_unchecked(n, flat(add), flat(mul), label.map(str::to_owned));
    ring.validate()?;
    Ok(ring)
}

fn violation(axiom: Axiom, witness: Vec<usize>) -> Error {
    Error::AxiomViolation { axiom, witness }
}

impl FiniteRing {
    /// Builds a ring from flat row-major tables without checking the axioms.
    /// Callers must guarantee the tables define a ring; the additive inverse
    /// table is derived here.
    pub(crate) fn from_flat_unchecked(
        order: usize,
        add: Vec<Cell>,
        mul: Vec<Cell>,
        label: Option<String>,
    ) -> FiniteRing {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        let mut neg = vec![0; order];
        for x in 0..order {
            if let Some(y) = (0..order).find(|&y| add[x * order + y] == 0) {
                neg[x] = y as Cell;
            }
        }
        FiniteRing {
            order,
            add,
            mul,
            neg,
            label,
            names: None,
        }
    }

    pub(crate) fn from_fn(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        label: impl Into<String>,
    ) -> FiniteRing {
        let mut at = Vec::with_capacity(order * order);
        let mut mt = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                at.push(add(x, y) as Cell);
                mt.push(mul(x, y) as Cell);
            }
        }
        FiniteRing::from_flat_unchecked(order, at, mt, Some(label.into()))
    }

    /// Checks every ring axiom, returning the first violation found.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.add(0, x) != x || self.add(x, 0) != x {
                return Err(violation(Axiom::AdditiveIdentity, vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..x {
                if self.add(x, y) != self.add(y, x) {
                    return Err(violation(Axiom::AdditiveCommutativity, vec![x, y]));
                }
            }
        }
        for x in 0..n {
            if self.add(x, self.neg(x)) != 0 {
                return Err(violation(Axiom::AdditiveInverse, vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.add(x, y);
                let pxy = self.mul(x, y);
                for z in 0..n {
                    if self.add(xy, z) != self.add(x, self.add(y, z)) {
                        return Err(violation(Axiom::AdditiveAssociativity, vec![x, y, z]));
                    }
                    if self.mul(pxy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(violation(Axiom::MultiplicativeAssociativity, vec![x, y, z]));
                    }
                    let yz = self.add(y, z);
                    if self.mul(x, yz) != self.add(pxy, self.mul(x, z)) {
                        return Err(violation(Axiom::LeftDistributivity, vec![x, y, z]));
                    }
                    if self.mul(yz, x) != self.add(self.mul(y, x), self.mul(z, x)) {
                        return Err(violation(Axiom::RightDistributivity, vec![x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `k * x` for any integer `k`, computed by doubling.
    pub fn scale(&self, k: i64, x: usize) -> usize {
        let (mut k, mut base) = if k < 0 { (k.unsigned_abs(), self.neg(x)) } else { (k as u64, x) };
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn additive_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn set_label(&mut self, label: Option<String>) {
        self.label = label;
    }

    /// Display name for an element; falls back to its index.
    pub fn element_name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub(crate) fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.table(&self.add)
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.table(&self.mul)
    }

    fn table(&self, flat: &[Cell]) -> Vec<Vec<usize>> {
        flat.chunks(self.order.max(1))
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }
}

/// Rings compare equal when their tables are identical; labels are ignored.
impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// A map between the index sets of two rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    source_order: usize,
    target_order: usize,
    image: Vec<usize>,
    is_isomorphism: bool,
}

impl RingHom {
    /// Wraps `image` after checking it preserves both tables.
    pub fn new(source: &FiniteRing, target: &FiniteRing, image: Vec<usize>) -> Result<RingHom> {
        if image.len() != source.order() || image.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidParameter("image table does not match ring orders".into()));
        }
        if !preserves_operations(source, target, &image) {
            return Err(Error::InvalidParameter("map does not preserve + and *".into()));
        }
        let mut seen = vec![false; target.order()];
        let injective = image.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
        Ok(RingHom {
            source_order: source.order(),
            target_order: target.order(),
            is_isomorphism: injective && source.order() == target.order(),
            image,
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_isomorphism
    }

    pub fn inverse(&self) -> Option<RingHom> {
        if !self.is_isomorphism {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Some(RingHom {
            source_order: self.target_order,
            target_order: self.source_order,
            image: inv,
            is_isomorphism: true,
        })
    }
}

pub(crate) fn preserves_operations(source: &FiniteRing, target: &FiniteRing, image: &[usize]) -> bool {
    source.elements().all(|x| {
        source.elements().all(|y| {
            image[source.add(x, y)] == target.add(image[x], image[y])
                && image[source.mul(x, y)] == target.mul(image[x], image[y])
        })
    })
}
