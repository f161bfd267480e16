use std::fmt;

use crate::error::Result;
use crate::limits;
use crate::ring::{characteristic, FiniteRing};

use super::{
    identity, is_decomposable, is_field, is_local, is_subdirectly_irreducible, jacobson_radical, nilpotency_index,
    zero_divisors, Ideal,
};

/// Summary of the structural invariants of one ring.
///
/// `is_local` is false for rings without identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub order: usize,
    pub label: Option<String>,
    pub identity: Option<usize>,
    pub is_commutative: bool,
    pub is_field: bool,
    pub is_local: bool,
    pub nilpotency_index: Option<usize>,
    pub is_subdirectly_irreducible: bool,
    pub is_decomposable: bool,
    pub characteristic: u64,
    pub zero_divisor_count: usize,
    pub jacobson_radical: Ideal,
}

impl StructureReport {
    pub fn has_identity(&self) -> bool {
        self.identity.is_some()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index.is_some()
    }

    /// Checks the implications that must hold between the flags.
    pub fn is_consistent(&self) -> bool {
        let field_ok = !self.is_field
            || (self.zero_divisor_count == 0
                && self.has_identity()
                && self.is_commutative
                && self.jacobson_radical.is_zero()
                && self.is_local
                && self.is_subdirectly_irreducible
                && !self.is_decomposable);
        let nil_ok = !self.is_nilpotent() || self.order == 1 || (!self.is_field && self.jacobson_radical.is_whole());
        let local_ok = !self.is_local || (self.has_identity() && !self.is_decomposable);
        let radical_ok = self.jacobson_radical.ring_order() == self.order;
        field_ok && nil_ok && local_ok && radical_ok
    }
}

pub fn structure_report(r: &FiniteRing) -> Result<StructureReport> {
    limits::check_structural(r.order())?;
    let id = identity(r);
    Ok(StructureReport {
        order: r.order(),
        label: r.label().map(str::to_owned),
        identity: id,
        is_commutative: r.is_commutative(),
        is_field: is_field(r),
        is_local: if id.is_some() { is_local(r)? } else { false },
        nilpotency_index: nilpotency_index(r),
        is_subdirectly_irreducible: is_subdirectly_irreducible(r)?,
        is_decomposable: is_decomposable(r)?,
        characteristic: characteristic(r),
        zero_divisor_count: zero_divisors(r).len(),
        jacobson_radical: jacobson_radical(r)?,
    })
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Line-oriented `key: value` text; keys always appear in this order.
impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "label: {}", self.label.as_deref().unwrap_or("-"))?;
        writeln!(f, "has_identity: {}", flag(self.has_identity()))?;
        match self.identity {
            Some(e) => writeln!(f, "identity: {e}")?,
            None => writeln!(f, "identity: none")?,
        }
        writeln!(f, "is_commutative: {}", flag(self.is_commutative))?;
        writeln!(f, "is_field: {}", flag(self.is_field))?;
        writeln!(f, "is_local: {}", flag(self.is_local))?;
        writeln!(f, "is_nilpotent: {}", flag(self.is_nilpotent()))?;
        match self.nilpotency_index {
            Some(n) => writeln!(f, "nilpotency_index: {n}")?,
            None => writeln!(f, "nilpotency_index: none")?,
        }
        writeln!(f, "is_subdirectly_irreducible: {}", flag(self.is_subdirectly_irreducible))?;
        writeln!(f, "is_decomposable: {}", flag(self.is_decomposable))?;
        writeln!(f, "characteristic: {}", self.characteristic)?;
        writeln!(f, "zero_divisor_count: {}", self.zero_divisor_count)?;
        writeln!(f, "jacobson_radical_size: {}", self.jacobson_radical.len())?;
        let members: Vec<String> = self.jacobson_radical.members().iter().map(usize::to_string).collect();
        writeln!(f, "jacobson_radical: {}", members.join(" "))
    }
}
