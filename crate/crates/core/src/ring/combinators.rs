use crate::arith::lcm;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits;
use crate::structure::Ideal;

use super::{FiniteRing, RingHom};

fn label_or_unnamed(r: &FiniteRing) -> String {
    r.label().unwrap_or("R").to_string()
}

/// Componentwise direct sum; the pair `(r, s)` is stored at `r * |S| + s`.
pub fn direct_sum(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
    let (n, m) = (r.order(), s.order());
    let order = (n as u64) * (m as u64);
    limits::check_order(order)?;
    let order = order as usize;
    let split = |x: usize| (x / m, x % m);
    let sum = FiniteRing::from_fn(
        order,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r.add(a, c) * m + s.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r.mul(a, c) * m + s.mul(b, d)
        },
        format!("{} ⊕ {}", label_or_unnamed(r), label_or_unnamed(s)),
    );
    let names = (0..order)
        .map(|x| {
            let (a, b) = split(x);
            format!("({},{})", r.element_name(a), s.element_name(b))
        })
        .collect();
    Ok(sum.with_names(names))
}

/// The ring of `k x k` matrices over `r`. Entry `t` (row-major) of a matrix
/// is the base-`|r|` digit of weight `|r|^t` in its index.
pub fn matrix_ring(r: &FiniteRing, k: usize) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
    }
    let n = r.order() as u64;
    let order = u32::try_from(k * k)
        .ok()
        .and_then(|e| n.checked_pow(e))
        .ok_or(Error::OrderCapExceeded {
            what: "ring order",
            order: u64::MAX,
            cap: limits::max_order(),
        })?;
    limits::check_order(order)?;
    let n = n as usize;
    let order = order as usize;
    let decode = |mut x: usize| {
        let mut e = vec![0usize; k * k];
        for slot in e.iter_mut() {
            *slot = x % n;
            x /= n;
        }
        e
    };
    let encode = |e: &[usize]| e.iter().rev().fold(0usize, |acc, &d| acc * n + d);
    let decoded: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let add = |x: usize, y: usize| {
        let e: Vec<usize> = decoded[x].iter().zip(&decoded[y]).map(|(&a, &b)| r.add(a, b)).collect();
        encode(&e)
    };
    let mul = |x: usize, y: usize| {
        let (a, b) = (&decoded[x], &decoded[y]);
        let mut e = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0;
                for t in 0..k {
                    acc = r.add(acc, r.mul(a[i * k + t], b[t * k + j]));
                }
                e[i * k + j] = acc;
            }
        }
        encode(&e)
    };
    Ok(FiniteRing::from_fn(order, add, mul, format!("M_{k}({})", label_or_unnamed(r))))
}

/// Coset ring `r / ideal`. Each coset is represented by its least index and
/// cosets are numbered in increasing order of representative.
pub fn quotient(r: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing> {
    if ideal.ring_order() != r.order() {
        return Err(Error::NotAnIdeal("ideal belongs to a ring of another order".into()));
    }
    Ideal::new(r, ideal.members())?;
    let n = r.order();
    let members = ideal.members();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in &members {
            class_of[r.add(x, i)] = id;
        }
    }
    let order = reps.len();
    let label = format!("{}/I{}", label_or_unnamed(r), members.len());
    let q = FiniteRing::from_fn(
        order,
        |a, b| class_of[r.add(reps[a], reps[b])],
        |a, b| class_of[r.mul(reps[a], reps[b])],
        label,
    );
    let names = reps.iter().map(|&x| format!("{}+I", r.element_name(x))).collect();
    Ok(q.with_names(names))
}

/// A subring together with its embedding into the ambient ring.
#[derive(Clone, Debug)]
pub struct Subring {
    pub ring: FiniteRing,
    pub embedding: RingHom,
}

/// Smallest subring containing `gens`. Subring elements are numbered in
/// increasing order of their index in `r`.
pub fn subring_generated(r: &FiniteRing, gens: &[usize]) -> Result<Subring> {
    if let Some(&g) = gens.iter().find(|&&g| g >= r.order()) {
        return Err(Error::InvalidParameter(format!("generator {g} is not an element")));
    }
    let mut inside = vec![false; r.order()];
    let mut members = vec![0usize];
    inside[0] = true;
    let mut queue: Vec<usize> = Vec::new();
    let push = |x: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>, queue: &mut Vec<usize>| {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
            queue.push(x);
        }
    };
    for &g in gens {
        push(g, &mut inside, &mut members, &mut queue);
    }
    while let Some(x) = queue.pop() {
        push(r.neg(x), &mut inside, &mut members, &mut queue);
        let snapshot = members.clone();
        for y in snapshot {
            push(r.add(x, y), &mut inside, &mut members, &mut queue);
            push(r.mul(x, y), &mut inside, &mut members, &mut queue);
            push(r.mul(y, x), &mut inside, &mut members, &mut queue);
        }
    }
    members.sort_unstable();
    let mut local = vec![usize::MAX; r.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i;
    }
    let order = members.len();
    let sub = FiniteRing::from_fn(
        order,
        |a, b| local[r.add(members[a], members[b])],
        |a, b| local[r.mul(members[a], members[b])],
        format!("<{gens:?}> in {}", label_or_unnamed(r)),
    );
    let names = members.iter().map(|&x| r.element_name(x)).collect();
    let sub = sub.with_names(names);
    let embedding = RingHom::new(&sub, r, members)?;
    Ok(Subring { ring: sub, embedding })
}

/// Least `m >= 1` with `m x = 0` for every `x`.
pub fn characteristic(r: &FiniteRing) -> u64 {
    r.elements().fold(1, |acc, x| lcm(acc, r.additive_order(x) as u64))
}

/// Additive-subgroup-and-two-sided-ideal closure of `seed`.
pub(crate) fn ideal_closure(r: &FiniteRing, seed: ElemSet) -> ElemSet {
    let mut set = ElemSet::singleton(0);
    let mut members = vec![0usize];
    let mut queue: Vec<usize> = Vec::new();
    for x in seed.iter() {
        if set.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    while let Some(x) = queue.pop() {
        let mut fresh = Vec::new();
        for y in r.elements() {
            fresh.push(r.mul(x, y));
            fresh.push(r.mul(y, x));
        }
        for &y in &members {
            fresh.push(r.add(x, y));
        }
        fresh.push(r.neg(x));
        for z in fresh {
            if set.insert(z) {
                members.push(z);
                queue.push(z);
            }
        }
    }
    set
}
