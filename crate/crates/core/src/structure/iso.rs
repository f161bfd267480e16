//! Ring isomorphism and canonical certificates.
//!
//! Both searches walk the additive automorphisms of a ring one basis
//! generator at a time (see [`crate::additive`]). Because the span of the
//! first `j` generators occupies coordinate indices `0..M_j`, the part of the
//! relabeled multiplication table inside that span is already fixed at depth
//! `j` except for products that leave the span, which lets both searches
//! prune early.

use std::fmt;

use crate::additive::{additive_type, coordinate_add, BasisState};
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::{FiniteRing, RingHom};

/// Byte string equal for two rings exactly when they are isomorphic.
///
/// Layout: order (u16 BE), number of cyclic factors (u8), each factor order
/// (u16 BE), then the minimal relabeled multiplication table, u16 BE per
/// entry, in block order (pairs sorted by `max(x, y)`, then `x`, then `y`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingCertificate(Vec<u8>);

impl RingCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::InvalidParameter(format!("bad certificate hex: {e}")))?;
        let cert = RingCertificate(bytes);
        cert.decode()?;
        Ok(cert)
    }

    fn decode(&self) -> Result<(usize, Vec<u64>, Vec<usize>)> {
        let bad = || Error::InvalidParameter("truncated certificate".into());
        let b = &self.0;
        let word = |i: usize| -> Result<usize> {
            Ok(u16::from_be_bytes([*b.get(i).ok_or_else(bad)?, *b.get(i + 1).ok_or_else(bad)?]) as usize)
        };
        let order = word(0)?;
        let k = *b.get(2).ok_or_else(bad)? as usize;
        let mut orders = Vec::with_capacity(k);
        for i in 0..k {
            orders.push(word(3 + 2 * i)? as u64);
        }
        let start = 3 + 2 * k;
        if b.len() != start + 2 * order * order || orders.iter().product::<u64>() != order as u64 {
            return Err(bad());
        }
        let entries = (0..order * order).map(|i| word(start + 2 * i)).collect::<Result<Vec<_>>>()?;
        Ok((order, orders, entries))
    }

    /// The canonical representative of the isomorphism class: additive
    /// table in mixed-radix coordinates and the minimal multiplication table.
    pub fn to_ring(&self) -> Result<FiniteRing> {
        let (order, orders, entries) = self.decode()?;
        let mut mul = vec![0usize; order * order];
        for (pos, (x, y)) in block_order(order).enumerate() {
            mul[x * order + y] = entries[pos];
        }
        let ring = FiniteRing::from_fn(order, |x, y| coordinate_add(&orders, x, y), |x, y| mul[x * order + y], "");
        ring.validate()?;
        let mut ring = ring;
        ring.set_label(None);
        Ok(ring)
    }
}

impl fmt::Debug for RingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingCertificate({})", self.to_hex())
    }
}

/// Pairs `(x, y)` with `x, y < n` sorted by `max(x, y)`, then `x`, then `y`.
fn block_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(|t| (0..t).map(move |x| (x, t)).chain((0..=t).map(move |y| (t, y))))
}

struct CertSearch<'a> {
    ring: &'a FiniteRing,
    state: BasisState<'a>,
    best: Option<Vec<usize>>,
    scratch: Vec<Option<usize>>,
}

impl CertSearch<'_> {
    /// Relabeled table over the current span in block order; `None` marks
    /// products that leave the span.
    fn fill_prefix(&mut self) {
        let span = self.state.span_size();
        self.scratch.clear();
        for (x, y) in block_order(span) {
            let p = self.ring.mul(self.state.coord_elem[x], self.state.coord_elem[y]);
            let c = self.state.elem_coord[p];
            self.scratch.push((c != usize::MAX).then_some(c));
        }
    }

    /// False when no completion of the current partial basis can beat `best`.
    fn may_improve(&self) -> bool {
        let Some(best) = &self.best else {
            return true;
        };
        let span = self.state.span_size();
        for (cur, &b) in self.scratch.iter().zip(best) {
            match cur {
                Some(c) if *c < b => return true,
                Some(c) if *c > b => return false,
                Some(_) => {}
                None if b < span => return false,
                None => return true,
            }
        }
        true
    }

    fn run(&mut self) {
        self.fill_prefix();
        if !self.may_improve() {
            return;
        }
        if self.state.depth() == self.state.orders.len() {
            let table: Vec<usize> = self.scratch.iter().map(|c| c.expect("complete basis")).collect();
            if self.best.as_ref().is_none_or(|b| table < *b) {
                self.best = Some(table);
            }
            return;
        }
        for h in self.state.candidates() {
            self.state.push(h);
            self.run();
            self.state.pop();
        }
    }
}

pub fn ring_canonical_certificate(r: &FiniteRing) -> Result<RingCertificate> {
    limits::check_structural(r.order())?;
    let orders = additive_type(r);
    let mut search = CertSearch {
        ring: r,
        state: BasisState::new(r, &orders),
        best: None,
        scratch: Vec::new(),
    };
    search.run();
    let table = search.best.expect("every finite abelian group has a basis");
    let mut bytes = Vec::with_capacity(3 + 2 * orders.len() + 2 * table.len());
    bytes.extend_from_slice(&(r.order() as u16).to_be_bytes());
    bytes.push(orders.len() as u8);
    for &m in &orders {
        bytes.extend_from_slice(&(m as u16).to_be_bytes());
    }
    for v in table {
        bytes.extend_from_slice(&(v as u16).to_be_bytes());
    }
    Ok(RingCertificate(bytes))
}

/// An isomorphism `r -> s`, if one exists. Rings of different orders are
/// never isomorphic.
pub fn ring_isomorphic(r: &FiniteRing, s: &FiniteRing) -> Result<Option<RingHom>> {
    limits::check_structural(r.order().max(s.order()))?;
    if r.order() != s.order() {
        return Ok(None);
    }
    let orders = additive_type(r);
    if additive_type(s) != orders {
        return Ok(None);
    }
    let mut source = BasisState::new(r, &orders);
    for _ in 0..orders.len() {
        let h = source.candidates()[0];
        source.push(h);
    }
    // coordinate index of each product of source generators
    let k = orders.len();
    let products: Vec<Vec<usize>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| source.elem_coord[r.mul(source.gens[a], source.gens[b])])
                .collect()
        })
        .collect();

    fn search(target: &mut BasisState, s: &FiniteRing, products: &[Vec<usize>]) -> bool {
        let j = target.depth();
        let span = target.span_size();
        // A product inside the source span must map to the matching target
        // element; a product outside it must leave the target span too.
        for a in 0..j {
            for b in 0..j {
                let want = products[a][b];
                let got = s.mul(target.gens[a], target.gens[b]);
                let ok = if want < span {
                    target.coord_elem[want] == got
                } else {
                    target.elem_coord[got] == usize::MAX
                };
                if !ok {
                    return false;
                }
            }
        }
        if j == target.orders.len() {
            return true;
        }
        for h in target.candidates() {
            target.push(h);
            if search(target, s, products) {
                return true;
            }
            target.pop();
        }
        false
    }

    let mut target = BasisState::new(s, &orders);
    if !search(&mut target, s, &products) {
        return Ok(None);
    }
    let mut image = vec![0usize; r.order()];
    for c in 0..r.order() {
        image[source.coord_elem[c]] = target.coord_elem[c];
    }
    Ok(Some(RingHom::new(r, s, image)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ap, ap0, direct_sum, gf, matrix_ring, n0, np2, npp, zero_ring, zn, zpx_mod_x2};

    /// Relabel `r` by a permutation fixing 0.
    fn relabel(r: &FiniteRing, perm: &[usize]) -> FiniteRing {
        let mut inv = vec![0; perm.len()];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        FiniteRing::from_fn(
            r.order(),
            |x, y| perm[r.add(inv[x], inv[y])],
            |x, y| perm[r.mul(inv[x], inv[y])],
            "relabeled",
        )
    }

    #[test]
    fn certificates_ignore_labeling() {
        let z4 = zn(4);
        let shuffled = relabel(&z4, &[0, 3, 1, 2]);
        shuffled.validate().unwrap();
        assert_eq!(ring_canonical_certificate(&z4).unwrap(), ring_canonical_certificate(&shuffled).unwrap());
        assert_ne!(
            ring_canonical_certificate(&z4).unwrap(),
            ring_canonical_certificate(&n0(2, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn certificate_round_trips_to_an_isomorphic_ring() {
        for r in [
            zn(6),
            np2(3).unwrap(),
            ap(2).unwrap(),
            matrix_ring(&zn(2), 2).unwrap(),
            gf(2, 3).unwrap(),
            zero_ring(),
        ] {
            let cert = ring_canonical_certificate(&r).unwrap();
            let canon = cert.to_ring().unwrap();
            assert!(ring_isomorphic(&r, &canon).unwrap().is_some(), "{:?}", r.label());
            assert_eq!(ring_canonical_certificate(&canon).unwrap(), cert);
            assert_eq!(RingCertificate::from_hex(&cert.to_hex()).unwrap(), cert);
        }
    }

    #[test]
    fn isomorphism_witnesses() {
        assert!(ring_isomorphic(&zn(4), &n0(2, 2).unwrap()).unwrap().is_none());
        assert!(ring_isomorphic(&ap(2).unwrap(), &ap0(2).unwrap()).unwrap().is_none());
        assert!(ring_isomorphic(&ap(3).unwrap(), &ap0(3).unwrap()).unwrap().is_none());
        assert!(ring_isomorphic(&gf(3, 1).unwrap(), &zn(3)).unwrap().is_some());
        assert!(ring_isomorphic(&zn(2), &gf(2, 1).unwrap()).unwrap().is_some());
        let f4 = gf(2, 2).unwrap();
        let relabeled = relabel(&f4, &[0, 2, 3, 1]);
        let hom = ring_isomorphic(&f4, &relabeled).unwrap().unwrap();
        assert!(hom.is_isomorphism());
        assert!(ring_isomorphic(&zn(6), &direct_sum(&zn(2), &zn(3)).unwrap()).unwrap().is_some());
        assert!(ring_isomorphic(&np2(2).unwrap(), &npp(2).unwrap()).unwrap().is_none());
        assert!(ring_isomorphic(&zpx_mod_x2(2).unwrap(), &zn(4)).unwrap().is_none());
    }

    #[test]
    fn block_order_prefixes() {
        let v: Vec<_> = block_order(2).collect();
        assert_eq!(v, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(block_order(5).count(), 25);
    }
}
