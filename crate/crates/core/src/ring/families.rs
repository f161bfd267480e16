use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::limits;

use super::FiniteRing;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn checked_power(p: u64, k: u32) -> Result<usize> {
    let order = p
        .checked_pow(k)
        .ok_or_else(|| Error::OrderCapExceeded {
            what: "ring order",
            order: u64::MAX,
            cap: limits::max_order(),
        })?;
    limits::check_order(order)?;
    Ok(order as usize)
}

fn multiples_of_a(n: usize) -> Vec<String> {
    (0..n)
        .map(|m| match m {
            0 => "0".to_string(),
            1 => "a".to_string(),
            _ => format!("{m}a"),
        })
        .collect()
}

fn pair_names(p: usize, first: &str, second: &str) -> Vec<String> {
    (0..p * p)
        .map(|idx| {
            let (a, b) = (idx % p, idx / p);
            format!("({first}{a},{second}{b})")
        })
        .collect()
}

/// The ring with a single element.
pub fn zero_ring() -> FiniteRing {
    FiniteRing::from_fn(1, |_, _| 0, |_, _| 0, "0")
}

/// The residue ring of integers modulo `n`.
pub fn zn(n: usize) -> FiniteRing {
    assert!(n >= 1, "zn requires n >= 1");
    FiniteRing::from_fn(n, |x, y| (x + y) % n, |x, y| (x * y) % n, format!("Z_{n}"))
}

/// Smallest monic irreducible polynomial of degree `k` over GF(p), coefficients
/// `c_0..c_{k-1}` compared lexicographically with `c_0` most significant.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let p = p as usize;
    let k = k as usize;
    let total = p.pow(k as u32);
    // Enumerate coefficient vectors in lexicographic order of (c_0, c_1, ...).
    (0..total)
        .map(|code| {
            let mut digits = vec![0u64; k];
            let mut c = code;
            for slot in (0..k).rev() {
                digits[slot] = (c % p) as u64;
                c /= p;
            }
            digits
        })
        .find(|low| {
            let mut poly = low.clone();
            poly.push(1);
            is_irreducible(&poly, p as u64)
        })
        .expect("an irreducible polynomial of every degree exists")
}

/// Brute-force irreducibility: no monic divisor of degree 1..=deg/2.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as usize) as u64);
                c /= p as usize;
            }
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo a monic `b` over GF(p); coefficients low degree first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * bc % p) % p;
        }
        r.pop();
    }
    r
}

/// The Galois field of order `p^k`, built on the least irreducible modulus.
pub fn gf(p: u64, k: u32) -> Result<FiniteRing> {
    require_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidParameter("gf needs degree k >= 1".into()));
    }
    let order = checked_power(p, k)?;
    let modulus = least_irreducible(p, k);
    let k = k as usize;
    let pu = p as usize;
    let digits = |mut x: usize| {
        let mut d = vec![0u64; k];
        for slot in d.iter_mut() {
            *slot = (x % pu) as u64;
            x /= pu;
        }
        d
    };
    let encode = |d: &[u64]| d.iter().rev().fold(0usize, |acc, &c| acc * pu + c as usize);
    let mut full_modulus = modulus.clone();
    full_modulus.push(1);
    let add = |x: usize, y: usize| {
        let (a, b) = (digits(x), digits(y));
        let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
        encode(&s)
    };
    let mul = |x: usize, y: usize| {
        let (a, b) = (digits(x), digits(y));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        let mut r = if prod.len() > k { poly_rem(&prod, &full_modulus, p) } else { prod };
        r.resize(k, 0);
        encode(&r)
    };
    let label = if k == 1 { format!("GF({p})") } else { format!("GF({p}^{k})") };
    Ok(FiniteRing::from_fn(order, add, mul, label))
}

/// `N_{0,p^n}`: cyclic additive group of order `p^n` with every product zero.
pub fn n0(p: u64, n: u32) -> Result<FiniteRing> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n0 needs n >= 1".into()));
    }
    let order = checked_power(p, n)?;
    let label = if n == 1 { format!("N_{{0,{p}}}") } else { format!("N_{{0,{order}}}") };
    Ok(FiniteRing::from_fn(order, |x, y| (x + y) % order, |_, _| 0, label).with_names(multiples_of_a(order)))
}

/// `N_{p^2}`: cyclic of order `p^2` on a generator `a` with `a^2 = pa`.
pub fn np2(p: u64) -> Result<FiniteRing> {
    require_prime(p)?;
    let order = checked_power(p, 2)?;
    let pu = p as usize;
    // (ma)(ka) = mk a^2 = mkp a
    Ok(FiniteRing::from_fn(
        order,
        |x, y| (x + y) % order,
        |x, y| (x * y * pu) % order,
        format!("N_{{{order}}}"),
    )
    .with_names(multiples_of_a(order)))
}

/// `N_{p,p}`: matrices `[[0,a,b],[0,0,a],[0,0,0]]` over GF(p), element
/// `(a, b)` stored at index `a + p*b`.
pub fn npp(p: u64) -> Result<FiniteRing> {
    require_prime(p)?;
    let order = checked_power(p, 2)?;
    let pu = p as usize;
    let split = |x: usize| (x % pu, x / pu);
    let join = |a: usize, b: usize| a % pu + pu * (b % pu);
    Ok(FiniteRing::from_fn(
        order,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(a + c, b + d)
        },
        |x, y| {
            let ((a, _), (c, _)) = (split(x), split(y));
            join(0, a * c)
        },
        format!("N_{{{p},{p}}}"),
    )
    .with_names(pair_names(pu, "a=", "b=")))
}

fn triangular_pair(p: u64, left: bool) -> Result<FiniteRing> {
    require_prime(p)?;
    let order = checked_power(p, 2)?;
    let pu = p as usize;
    let split = |x: usize| (x % pu, x / pu);
    let join = |a: usize, b: usize| a % pu + pu * (b % pu);
    let label = if left { format!("A_{p}") } else { format!("A^0_{p}") };
    Ok(FiniteRing::from_fn(
        order,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(a + c, b + d)
        },
        move |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            if left {
                // [[a,b],[0,0]] [[c,d],[0,0]] = [[ac, ad],[0,0]]
                join(a * c, a * d)
            } else {
                // [[a,0],[b,0]] [[c,0],[d,0]] = [[ac,0],[bc,0]]
                join(a * c, b * c)
            }
        },
        label,
    )
    .with_names(pair_names(pu, "", "")))
}

/// `A_p`: the matrices `[[a,b],[0,0]]` over GF(p); `(1,0)` is a left identity.
pub fn ap(p: u64) -> Result<FiniteRing> {
    triangular_pair(p, true)
}

/// `A^0_p`: the matrices `[[a,0],[b,0]]` over GF(p); `(1,0)` is a right identity.
pub fn ap0(p: u64) -> Result<FiniteRing> {
    triangular_pair(p, false)
}

/// `Z_p[x]/(x^2)`, element `a + bx` stored at index `a + p*b`.
pub fn zpx_mod_x2(p: u64) -> Result<FiniteRing> {
    require_prime(p)?;
    let order = checked_power(p, 2)?;
    let pu = p as usize;
    let split = |x: usize| (x % pu, x / pu);
    let join = |a: usize, b: usize| a % pu + pu * (b % pu);
    let names = (0..order)
        .map(|idx| {
            let (a, b) = split(idx);
            match (a, b) {
                (a, 0) => a.to_string(),
                (0, 1) => "x".to_string(),
                (0, b) => format!("{b}x"),
                (a, 1) => format!("{a}+x"),
                (a, b) => format!("{a}+{b}x"),
            }
        })
        .collect();
    Ok(FiniteRing::from_fn(
        order,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(a + c, b + d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(a * c, a * d + b * c)
        },
        format!("Z_{p}[x]/(x^2)"),
    )
    .with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_products_zero(r: &FiniteRing) -> bool {
        r.elements().all(|x| r.elements().all(|y| r.mul(x, y) == 0))
    }

    #[test]
    fn every_constructor_validates() {
        for p in [2u64, 3, 5] {
            for r in [
                n0(p, 1).unwrap(),
                n0(p, 2).unwrap(),
                np2(p).unwrap(),
                npp(p).unwrap(),
                ap(p).unwrap(),
                ap0(p).unwrap(),
                zpx_mod_x2(p).unwrap(),
                gf(p, 1).unwrap(),
                gf(p, 2).unwrap(),
            ] {
                r.validate().unwrap_or_else(|e| panic!("{:?}: {e}", r.label()));
            }
            assert_eq!(n0(p, 3).unwrap().order(), (p * p * p) as usize);
            for r in [np2(p).unwrap(), npp(p).unwrap(), ap(p).unwrap(), ap0(p).unwrap()] {
                assert_eq!(r.order(), (p * p) as usize);
            }
        }
        for n in 1..=12 {
            zn(n).validate().unwrap();
        }
        gf(2, 3).unwrap().validate().unwrap();
        zero_ring().validate().unwrap();
    }

    #[test]
    fn non_primes_are_rejected() {
        assert!(matches!(gf(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(n0(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(np2(1), Err(Error::NotPrime(1))));
        assert!(matches!(ap(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn gf_uses_least_irreducible_modulus() {
        // Over GF(2) degree 2: x^2 + x + 1 is the only irreducible.
        assert_eq!(least_irreducible(2, 2), vec![1, 1]);
        // Degree 3 over GF(2): (c0, c1, c2) = (1, 0, 1) precedes (1, 1, 0).
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1]);
        // Degree 2 over GF(3): x^2 + 1.
        assert_eq!(least_irreducible(3, 2), vec![1, 0]);
        assert_eq!(least_irreducible(5, 1), vec![0]);
    }

    #[test]
    fn gf4_multiplicative_group_is_cyclic_of_order_3() {
        let f = gf(2, 2).unwrap();
        let one = 1;
        let generators: Vec<usize> = (1..4)
            .filter(|&g| {
                let mut seen = vec![];
                let mut acc = g;
                for _ in 0..3 {
                    seen.push(acc);
                    acc = f.mul(acc, g);
                }
                seen.sort();
                seen == vec![1, 2, 3]
            })
            .collect();
        assert_eq!(generators, vec![2, 3]);
        assert_eq!(f.mul(2, f.mul(2, 2)), one);
    }

    #[test]
    fn named_nilpotent_families() {
        assert!(all_products_zero(&n0(3, 1).unwrap()));
        let n4 = np2(2).unwrap();
        // a^2 = 2a and 2a + a^2 = 0
        assert_eq!(n4.mul(1, 1), 2);
        assert_eq!(n4.add(n4.scale(2, 1), n4.mul(1, 1)), 0);
        for p in [2u64, 3] {
            let r = np2(p).unwrap();
            assert!(r.elements().all(|x| r.elements().all(|y| r.elements().all(|z| r.mul(r.mul(x, y), z) == 0))));
        }
        let npp2 = npp(2).unwrap();
        // generator a = 1, b = 0 squares to (0, 1) = index 2
        assert_eq!(npp2.mul(1, 1), 2);
        assert_eq!(npp2.element_name(1), "(a=1,b=0)");
    }

    #[test]
    fn ap_left_annihilator_and_identities() {
        let a = ap(2).unwrap();
        // (0,1) is index 2
        assert!(a.elements().all(|x| a.mul(2, x) == 0));
        assert!(a.elements().all(|x| a.mul(1, x) == x));
        let b = ap0(2).unwrap();
        assert!(b.elements().all(|x| b.mul(x, 1) == x));
    }

    #[test]
    fn dual_numbers() {
        let r = zpx_mod_x2(2).unwrap();
        assert_eq!(r.mul(2, 2), 0);
        let r3 = zpx_mod_x2(3).unwrap();
        let units = r3.elements().filter(|&x| r3.elements().any(|y| r3.mul(x, y) == 1)).count();
        assert_eq!(units, 6);
        assert_eq!(zn(9).mul(3, 6), 0);
    }
}
