//! Brute-force oracles. Everything here works from the raw `add`/`mul`
//! tables and shares no algorithm with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use finring::{FiniteRing, SimpleGraph};
use itertools::Itertools;

pub type Set = BTreeSet<usize>;

/// Every two-sided ideal, by testing each subset that contains 0.
pub fn ideals(r: &FiniteRing) -> Vec<Set> {
    let n = r.order();
    assert!(n <= 20, "subset oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let s: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&x| mask >> (x - 1) & 1 == 1))
            .collect();
        let mut inside = vec![false; n];
        for &x in &s {
            inside[x] = true;
        }
        let closed = s.iter().all(|&a| {
            s.iter().all(|&b| inside[r.add(a, b)])
                && (0..n).all(|t| inside[r.mul(t, a)] && inside[r.mul(a, t)])
        });
        if closed {
            out.push(s.into_iter().collect());
        }
    }
    out
}

pub fn meet(sets: &[Set], n: usize) -> Set {
    sets.iter().fold((0..n).collect(), |acc, s| acc.intersection(s).copied().collect())
}

/// Intersection of all nonzero ideals is nonzero.
pub fn subdirectly_irreducible(r: &FiniteRing) -> bool {
    let nonzero: Vec<Set> = ideals(r).into_iter().filter(|s| s.len() > 1).collect();
    !nonzero.is_empty() && meet(&nonzero, r.order()).len() > 1
}

/// Intersection of the maximal proper two-sided ideals.
pub fn maximal_ideal_meet(r: &FiniteRing) -> Set {
    let n = r.order();
    let proper: Vec<Set> = ideals(r).into_iter().filter(|s| s.len() < n).collect();
    let maximal: Vec<Set> = proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect();
    meet(&maximal, n)
}

/// All products of `k` elements of `s` vanish for some `k`.
pub fn nilpotent_set(r: &FiniteRing, s: &Set) -> bool {
    let mut products = s.clone();
    for _ in 0..=r.order() {
        if products.iter().all(|&x| x == 0) {
            return true;
        }
        products = products.iter().flat_map(|&a| s.iter().map(move |&b| r.mul(a, b))).collect();
    }
    false
}

pub fn two_sided_identity(r: &FiniteRing) -> Option<usize> {
    let n = r.order();
    (0..n).find(|&e| (0..n).all(|x| r.mul(e, x) == x && r.mul(x, e) == x))
}

pub fn zero_divisors(r: &FiniteRing) -> Set {
    let n = r.order();
    (1..n)
        .filter(|&x| (1..n).any(|y| r.mul(x, y) == 0 || r.mul(y, x) == 0))
        .collect()
}

/// Bijection search fixing 0 and preserving both tables; images are
/// assigned element by element and every relation among assigned elements
/// is checked immediately.
pub fn ring_isomorphic(r: &FiniteRing, s: &FiniteRing) -> bool {
    let n = r.order();
    if n != s.order() {
        return false;
    }
    fn go(r: &FiniteRing, s: &FiniteRing, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let x = map.len();
        let n = r.order();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || (x == 0) != (y == 0) {
                continue;
            }
            map.push(y);
            // a product landing on an unassigned element must not hit a used image
            let agrees = |src: usize, img: usize| {
                if src <= x {
                    map[src] == img
                } else {
                    !map.contains(&img)
                }
            };
            let ok = (0..=x).all(|a| {
                [(a, x), (x, a)].iter().all(|&(u, v)| {
                    agrees(r.add(u, v), s.add(map[u], map[v])) && agrees(r.mul(u, v), s.mul(map[u], map[v]))
                })
            });
            if ok {
                used[y] = true;
                if go(r, s, map, used) {
                    return true;
                }
                used[y] = false;
            }
            map.pop();
        }
        false
    }
    go(r, s, &mut Vec::new(), &mut vec![false; n])
}

/// All-permutations graph isomorphism.
pub fn graph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| g.has_edge(v, w)).count()).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| h.has_edge(v, w)).count()).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    (0..n)
        .permutations(n)
        .any(|p| g.edges().all(|(a, b)| h.has_edge(p[a], p[b])))
}

/// Ring on the coordinate group `Z_{m_1} x ... x Z_{m_k}` (first coordinate
/// least significant) whose generator products are `consts[i][j]`, given as
/// element indices.
pub fn bilinear_ring(orders: &[usize], consts: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n: usize = orders.iter().product();
    let coords = |mut x: usize| -> Vec<usize> {
        orders
            .iter()
            .map(|&m| {
                let c = x % m;
                x /= m;
                c
            })
            .collect()
    };
    let index = |v: &[usize]| v.iter().zip(orders).rev().fold(0, |acc, (&c, &m)| acc * m + c);
    let cs: Vec<Vec<usize>> = (0..n).map(coords).collect();
    let add: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let v: Vec<usize> = (0..orders.len()).map(|l| (cs[x][l] + cs[y][l]) % orders[l]).collect();
                    index(&v)
                })
                .collect()
        })
        .collect();
    let k = orders.len();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let mut v = vec![0usize; k];
                    for i in 0..k {
                        for j in 0..k {
                            let g = &cs[consts[i][j]];
                            for l in 0..k {
                                v[l] = (v[l] + cs[x][i] * cs[y][j] * g[l]) % orders[l];
                            }
                        }
                    }
                    index(&v)
                })
                .collect()
        })
        .collect();
    (add, mul)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn associative(mul: &[Vec<usize>]) -> bool {
    let n = mul.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul[mul[a][b]][c] == mul[a][mul[b][c]])))
}

fn additive_order(add: &[Vec<usize>], x: usize) -> usize {
    let (mut k, mut y) = (1, x);
    while y != 0 {
        y = add[y][x];
        k += 1;
    }
    k
}

/// Automorphisms of the coordinate group, as element permutations.
pub fn group_automorphisms(orders: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = orders.iter().product();
    let (add, _) = bilinear_ring(orders, &vec![vec![0; orders.len()]; orders.len()]);
    let mut out = Vec::new();
    for images in (0..orders.len()).map(|_| 0..n).multi_cartesian_product() {
        if images.iter().zip(orders).any(|(&y, &m)| m % additive_order(&add, y) != 0) {
            continue;
        }
        // x = sum c_i g_i  ->  sum c_i images_i
        let mut map = vec![0usize; n];
        for (x, slot) in map.iter_mut().enumerate() {
            let mut rest = x;
            let mut acc = 0;
            for (i, &m) in orders.iter().enumerate() {
                for _ in 0..rest % m {
                    acc = add[acc][images[i]];
                }
                rest /= m;
            }
            *slot = acc;
        }
        let distinct: Set = map.iter().copied().collect();
        if distinct.len() == n {
            out.push(map);
        }
    }
    out
}

/// Number of rings on the given additive type up to isomorphism, by brute
/// force over all generator products and all group automorphisms.
pub fn count_rings_of_type(orders: &[usize]) -> usize {
    let n: usize = orders.iter().product();
    let k = orders.len();
    let autos = group_automorphisms(orders);
    let mut classes: BTreeSet<Vec<usize>> = BTreeSet::new();
    for flat in (0..k * k).map(|_| 0..n).multi_cartesian_product() {
        let consts: Vec<Vec<usize>> = flat.chunks(k).map(<[usize]>::to_vec).collect();
        let (add, mul) = bilinear_ring(orders, &consts);
        // well defined: m_i g_i times anything must vanish
        let bilinear = (0..k).all(|i| {
            (0..k).all(|j| {
                let m = gcd(orders[i], orders[j]);
                let z = consts[i][j];
                (0..m).fold(0, |acc, _| add[acc][z]) == 0
            })
        });
        if !bilinear || !associative(&mul) {
            continue;
        }
        let canon = autos
            .iter()
            .map(|f| {
                let mut inv = vec![0; n];
                for (x, &y) in f.iter().enumerate() {
                    inv[y] = x;
                }
                let mut t = vec![0usize; n * n];
                for x in 0..n {
                    for y in 0..n {
                        t[x * n + y] = f[mul[inv[x]][inv[y]]];
                    }
                }
                t
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

pub fn relabel(r: &FiniteRing, perm: &[usize]) -> FiniteRing {
    let n = r.order();
    let mut inv = vec![0; n];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| perm[f(inv[x], inv[y])]).collect()).collect()
    };
    finring::make_ring(&table(&|a, b| r.add(a, b)), &table(&|a, b| r.mul(a, b)), None).unwrap()
}
