//! Structural invariants: zero divisors, ideals, the radical, subdirect
//! irreducibility, locality, decomposability and isomorphism.

mod ideal;
mod iso;
mod report;

pub use ideal::{ideals, Ideal};
pub use iso::{ring_canonical_certificate, ring_isomorphic, RingCertificate};
pub use report::{structure_report, StructureReport};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::{quotient, subring_generated, FiniteRing};

use ideal::additive_span_of_products;

/// Nonzero elements with a nonzero one-sided annihilator.
pub fn zero_divisors(r: &FiniteRing) -> Vec<usize> {
    (1..r.order())
        .filter(|&x| (1..r.order()).any(|y| r.mul(x, y) == 0 || r.mul(y, x) == 0))
        .collect()
}

/// The two-sided identity, if there is one.
pub fn identity(r: &FiniteRing) -> Option<usize> {
    r.elements()
        .find(|&e| r.elements().all(|x| r.mul(e, x) == x && r.mul(x, e) == x))
}

pub fn units(r: &FiniteRing) -> Result<Vec<usize>> {
    let one = identity(r).ok_or(Error::NoIdentity)?;
    Ok(r.elements()
        .filter(|&x| r.elements().any(|y| r.mul(x, y) == one && r.mul(y, x) == one))
        .collect())
}

pub fn idempotents(r: &FiniteRing) -> Vec<usize> {
    r.elements().filter(|&x| r.mul(x, x) == x).collect()
}

pub fn nilpotent_elements(r: &FiniteRing) -> Vec<usize> {
    r.elements()
        .filter(|&x| {
            let mut power = x;
            for _ in 0..r.order() {
                if power == 0 {
                    return true;
                }
                power = r.mul(power, x);
            }
            power == 0
        })
        .collect()
}

/// Least `n` with every `n`-fold product zero; `None` if no `n <= |R| + 1` works.
pub fn nilpotency_index(r: &FiniteRing) -> Option<usize> {
    if r.order() > crate::elemset::ElemSet::CAPACITY {
        return nilpotency_index_by_elements(r);
    }
    let whole: ElemSet = r.elements().collect();
    let mut power = whole;
    for n in 1..=r.order() + 1 {
        if power.len() == 1 {
            return Some(n);
        }
        let next = additive_span_of_products(r, &power, &whole);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

fn nilpotency_index_by_elements(r: &FiniteRing) -> Option<usize> {
    let mut power: Vec<bool> = vec![true; r.order()];
    for n in 1..=r.order() + 1 {
        if power.iter().skip(1).all(|&b| !b) {
            return Some(n);
        }
        let mut next = vec![false; r.order()];
        next[0] = true;
        for x in r.elements().filter(|&x| power[x]) {
            for y in r.elements() {
                next[r.mul(x, y)] = true;
            }
        }
        // close under addition
        let mut changed = true;
        while changed {
            changed = false;
            let members: Vec<usize> = r.elements().filter(|&x| next[x]).collect();
            for &a in &members {
                for &b in &members {
                    let s = r.add(a, b);
                    if !next[s] {
                        next[s] = true;
                        changed = true;
                    }
                }
            }
        }
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

/// Jacobson radical, the join of all nilpotent two-sided ideals.
pub fn jacobson_radical(r: &FiniteRing) -> Result<Ideal> {
    let all = ideals(r)?;
    Ok(all
        .iter()
        .filter(|i| i.is_nilpotent(r))
        .fold(Ideal::zero(r), |acc, i| acc.join(i, r)))
}

fn minimal_nonzero_ideals(all: &[Ideal]) -> Vec<Ideal> {
    all.iter()
        .filter(|i| !i.is_zero())
        .filter(|i| !all.iter().any(|k| !k.is_zero() && k != *i && k.is_subset(i)))
        .copied()
        .collect()
}

/// True iff the nonzero ideals have a nonzero intersection, i.e. there is a
/// unique minimal nonzero ideal. The zero ring is not subdirectly irreducible.
pub fn is_subdirectly_irreducible(r: &FiniteRing) -> Result<bool> {
    let all = ideals(r)?;
    Ok(minimal_nonzero_ideals(&all).len() == 1)
}

pub fn is_field(r: &FiniteRing) -> bool {
    if r.order() < 2 || !r.is_commutative() {
        return false;
    }
    let Some(one) = identity(r) else {
        return false;
    };
    (1..r.order()).all(|x| r.elements().any(|y| r.mul(x, y) == one))
}

/// A ring with identity is local when `R / J(R)` is a field.
pub fn is_local(r: &FiniteRing) -> Result<bool> {
    identity(r).ok_or(Error::NoIdentity)?;
    limits::check_structural(r.order())?;
    let j = jacobson_radical(r)?;
    Ok(is_field(&quotient(r, &j)?))
}

/// Splits `r` into indecomposable ideals whose additive groups sum directly.
///
/// Returns a single component (the whole ring) when `r` is indecomposable.
/// Components are sorted by size and then by the certificate of the
/// component as a ring.
pub fn decompose(r: &FiniteRing) -> Result<Vec<Ideal>> {
    let all = ideals(r)?;
    let mut parts = Vec::new();
    let mut rest = Ideal::whole(r);
    loop {
        // smallest nonzero proper summand of `rest` is indecomposable
        let split = all.iter().filter(|i| !i.is_zero() && i.is_subset(&rest) && **i != rest).find_map(|i| {
            all.iter()
                .find(|k| k.is_subset(&rest) && k.intersection(i).is_zero() && i.len() * k.len() == rest.len())
                .map(|k| (*i, *k))
        });
        match split {
            Some((part, complement)) => {
                parts.push(part);
                rest = complement;
            }
            None => {
                parts.push(rest);
                break;
            }
        }
    }
    let mut keyed = parts
        .into_iter()
        .map(|i| {
            let sub = subring_generated(r, &i.members())?;
            Ok(((i.len(), ring_canonical_certificate(&sub.ring)?), i))
        })
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(keyed.into_iter().map(|(_, i)| i).collect())
}

pub fn is_decomposable(r: &FiniteRing) -> Result<bool> {
    Ok(decompose(r)?.len() > 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ap, direct_sum, gf, matrix_ring, n0, np2, npp, zero_ring, zn, zpx_mod_x2};

    #[test]
    fn zero_divisor_sets() {
        assert_eq!(zero_divisors(&zn(9)), vec![3, 6]);
        assert!(zero_divisors(&gf(2, 2).unwrap()).is_empty());
        assert_eq!(zero_divisors(&ap(2).unwrap()), vec![1, 2, 3]);
        assert!(zero_divisors(&zero_ring()).is_empty());
    }

    #[test]
    fn special_elements() {
        assert_eq!(idempotents(&zn(6)), vec![0, 1, 3, 4]);
        assert_eq!(nilpotent_elements(&gf(3, 1).unwrap()), vec![0]);
        assert_eq!(units(&zn(9)).unwrap().len(), 6);
        assert!(matches!(units(&n0(3, 1).unwrap()), Err(Error::NoIdentity)));
        assert_eq!(nilpotent_elements(&zn(8)), vec![0, 2, 4, 6]);
    }

    #[test]
    fn identities() {
        assert_eq!(identity(&zn(7)), Some(1));
        assert_eq!(identity(&n0(3, 1).unwrap()), None);
        assert_eq!(identity(&ap(2).unwrap()), None);
        assert_eq!(identity(&zero_ring()), Some(0));
    }

    #[test]
    fn nilpotency() {
        for p in [2u64, 3, 5] {
            assert_eq!(nilpotency_index(&n0(p, 1).unwrap()), Some(2));
            assert_eq!(nilpotency_index(&npp(p).unwrap()), Some(3));
            assert_eq!(nilpotency_index(&np2(p).unwrap()), Some(3));
        }
        assert_eq!(nilpotency_index(&zn(4)), None);
        assert_eq!(nilpotency_index(&zero_ring()), Some(1));
        assert_eq!(nilpotency_index_by_elements(&npp(3).unwrap()), Some(3));
        assert_eq!(nilpotency_index_by_elements(&zn(4)), None);
    }

    #[test]
    fn radicals() {
        assert_eq!(jacobson_radical(&zn(9)).unwrap().members(), vec![0, 3, 6]);
        assert!(jacobson_radical(&gf(2, 2).unwrap()).unwrap().is_zero());
        assert!(jacobson_radical(&gf(5, 1).unwrap()).unwrap().is_zero());
        assert!(jacobson_radical(&npp(2).unwrap()).unwrap().is_whole());
        assert!(jacobson_radical(&matrix_ring(&zn(2), 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn subdirect_irreducibility() {
        assert!(is_subdirectly_irreducible(&zn(5)).unwrap());
        assert!(!is_subdirectly_irreducible(&direct_sum(&zn(2), &zn(2)).unwrap()).unwrap());
        assert!(is_subdirectly_irreducible(&zn(9)).unwrap());
        assert!(!is_subdirectly_irreducible(&zero_ring()).unwrap());
        assert!(!is_subdirectly_irreducible(&zn(6)).unwrap());
    }

    #[test]
    fn locality_and_fields() {
        assert!(is_local(&zpx_mod_x2(3).unwrap()).unwrap());
        assert!(!is_local(&zn(6)).unwrap());
        assert!(is_local(&zn(9)).unwrap());
        assert!(matches!(is_local(&n0(2, 1).unwrap()), Err(Error::NoIdentity)));
        assert!(is_field(&gf(5, 1).unwrap()));
        assert!(!is_field(&zn(9)));
        assert!(!is_field(&matrix_ring(&zn(2), 2).unwrap()));
        assert!(!is_field(&zero_ring()));
    }

    #[test]
    fn decompositions() {
        let sizes = |r: &FiniteRing| decompose(r).unwrap().iter().map(Ideal::len).collect::<Vec<_>>();
        assert_eq!(sizes(&zn(6)), vec![2, 3]);
        assert_eq!(sizes(&zn(9)), vec![9]);
        assert_eq!(sizes(&direct_sum(&n0(2, 1).unwrap(), &zn(2)).unwrap()), vec![2, 2]);
        assert_eq!(sizes(&direct_sum(&zn(2), &direct_sum(&zn(2), &zn(2)).unwrap()).unwrap()), vec![2, 2, 2]);
        assert_eq!(sizes(&zero_ring()), vec![1]);
        assert!(!is_decomposable(&np2(2).unwrap()).unwrap());
    }
}
