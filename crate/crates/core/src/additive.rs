//! Structure of the additive group of a finite ring.
//!
//! A finite abelian group is a direct sum of cyclic groups of prime-power
//! order. The canonical *type* lists those orders with primes ascending and,
//! within one prime, orders descending: `[4, 2]`, `[2, 2, 2]`, `[2, 3]`.
//!
//! A *basis* is a tuple of elements `(h_1, .., h_k)` with `ord(h_i)` equal to
//! the `i`-th cyclic order and `Z_{m_1} x .. x Z_{m_k} -> (R, +)` bijective.
//! Coordinates are mixed-radix with the first generator least significant, so
//! the span of the first `j` generators is exactly the coordinate indices
//! below `m_1 * .. * m_j`.

use crate::arith::factorize;
use crate::ring::FiniteRing;

/// Canonical additive type of `r`.
pub fn additive_type(r: &FiniteRing) -> Vec<u64> {
    let n = r.order() as u64;
    let orders: Vec<u64> = r.elements().map(|x| r.additive_order(x) as u64).collect();
    let mut out = Vec::new();
    for (p, e) in factorize(n) {
        // counts[k] = #{x : ord(x) divides p^k}
        let counts: Vec<u64> = (0..=e)
            .map(|k| orders.iter().filter(|&&o| p.pow(k) % o == 0).count() as u64)
            .collect();
        // number of cyclic factors of order >= p^k is log_p(counts[k] / counts[k-1])
        let at_least: Vec<u32> = (1..=e as usize)
            .map(|k| {
                let mut ratio = counts[k] / counts[k - 1];
                let mut l = 0;
                while ratio > 1 {
                    ratio /= p;
                    l += 1;
                }
                l
            })
            .collect();
        let mut factors = Vec::new();
        for k in (1..=e as usize).rev() {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            for _ in 0..exactly {
                factors.push(p.pow(k as u32));
            }
        }
        out.extend(factors);
    }
    out
}

/// A partial or complete basis together with the coordinate map it induces.
pub(crate) struct BasisState<'a> {
    ring: &'a FiniteRing,
    pub orders: Vec<usize>,
    pub gens: Vec<usize>,
    /// `coord_elem[c]` is the element with coordinate index `c` in the span.
    pub coord_elem: Vec<usize>,
    /// Inverse of `coord_elem` on the span; `usize::MAX` outside it.
    pub elem_coord: Vec<usize>,
    element_orders: Vec<usize>,
}

impl<'a> BasisState<'a> {
    pub fn new(ring: &'a FiniteRing, orders: &[u64]) -> Self {
        let mut elem_coord = vec![usize::MAX; ring.order()];
        elem_coord[0] = 0;
        BasisState {
            ring,
            orders: orders.iter().map(|&m| m as usize).collect(),
            gens: Vec::new(),
            coord_elem: vec![0],
            elem_coord,
            element_orders: ring.elements().map(|x| ring.additive_order(x)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.gens.len()
    }

    pub fn span_size(&self) -> usize {
        self.coord_elem.len()
    }

    /// Elements that may extend the basis at the current depth, in index order.
    pub fn candidates(&self) -> Vec<usize> {
        let j = self.gens.len();
        let m = self.orders[j];
        self.ring
            .elements()
            .filter(|&h| self.element_orders[h] == m)
            .filter(|&h| {
                let mut acc = h;
                for _ in 1..m {
                    if self.elem_coord[acc] != usize::MAX {
                        return false;
                    }
                    acc = self.ring.add(acc, h);
                }
                true
            })
            .collect()
    }

    pub fn push(&mut self, h: usize) {
        let m = self.orders[self.gens.len()];
        let base = self.coord_elem.len();
        let mut shift = h;
        for t in 1..m {
            for c in 0..base {
                let x = self.ring.add(self.coord_elem[c], shift);
                self.elem_coord[x] = t * base + c;
                self.coord_elem.push(x);
            }
            shift = self.ring.add(shift, h);
        }
        self.gens.push(h);
    }

    pub fn pop(&mut self) {
        let m = self.orders[self.gens.len() - 1];
        let base = self.coord_elem.len() / m;
        for &x in &self.coord_elem[base..] {
            self.elem_coord[x] = usize::MAX;
        }
        self.coord_elem.truncate(base);
        self.gens.pop();
    }
}

/// Some basis of `(r, +)` realizing its canonical type.
pub fn find_basis(r: &FiniteRing) -> (Vec<u64>, Vec<usize>) {
    let orders = additive_type(r);
    let mut state = BasisState::new(r, &orders);
    for _ in 0..orders.len() {
        let h = state.candidates()[0];
        state.push(h);
    }
    (orders, state.gens)
}

/// Element at each coordinate index for the given basis.
pub fn coordinate_elements(r: &FiniteRing, orders: &[u64], basis: &[usize]) -> Vec<usize> {
    let mut state = BasisState::new(r, orders);
    for &h in basis {
        state.push(h);
    }
    state.coord_elem
}

/// Addition on mixed-radix coordinate indices for the given cyclic orders.
pub fn coordinate_add(orders: &[u64], x: usize, y: usize) -> usize {
    let mut out = 0;
    let mut weight = 1;
    let (mut x, mut y) = (x, y);
    for &m in orders {
        let m = m as usize;
        out += ((x % m + y % m) % m) * weight;
        x /= m;
        y /= m;
        weight *= m;
    }
    out
}
