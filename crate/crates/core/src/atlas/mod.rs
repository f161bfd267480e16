//! All rings of a given small order, one per isomorphism class.
//!
//! Prime-power orders are searched over structure constants for every
//! additive type. A finite ring is the direct sum of its primary components,
//! so composite orders are assembled from the prime-power atlases.

mod io;
mod search;

pub use io::{load_atlas, parse_atlas, save_atlas, write_atlas};
pub use search::GeneratorPresentation;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::arith::{factorize, partitions};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, zero_divisor_graph, GraphCertificate, SimpleGraph};
use crate::limits;
use crate::poly::{satisfies_identity, NcPoly};
use crate::ring::{ap, ap0, direct_sum, gf, matrix_ring, n0, np2, npp, zero_ring, zn, zpx_mod_x2, FiniteRing};
use crate::structure::{ring_canonical_certificate, structure_report, RingCertificate, StructureReport};

#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub ring: FiniteRing,
    pub certificate: RingCertificate,
    pub report: StructureReport,
    pub graph_certificate: GraphCertificate,
}

impl AtlasEntry {
    /// Builds the entry for `ring`, recomputing every cached invariant.
    pub fn new(ring: FiniteRing) -> Result<AtlasEntry> {
        let certificate = ring_canonical_certificate(&ring)?;
        let report = structure_report(&ring)?;
        let graph_certificate = canonical_form(&zero_divisor_graph(&ring))?;
        Ok(AtlasEntry {
            ring,
            certificate,
            report,
            graph_certificate,
        })
    }

    pub fn label(&self) -> &str {
        self.ring.label().unwrap_or("")
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }
}

/// Additive types of order `n`: per prime (ascending), cyclic orders in
/// descending order.
pub fn abelian_group_types(n: u64) -> Result<Vec<Vec<u64>>> {
    limits::check_enumeration(n)?;
    if n == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    let mut types: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let parts: Vec<Vec<u64>> = partitions(e)
            .into_iter()
            .map(|part| part.into_iter().map(|a| p.pow(a)).collect())
            .collect();
        types = types
            .into_iter()
            .flat_map(|prefix| {
                parts.iter().map(move |tail| {
                    let mut t = prefix.clone();
                    t.extend(tail);
                    t
                })
            })
            .collect();
    }
    Ok(types)
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<Vec<AtlasEntry>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<AtlasEntry>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// One entry per isomorphism class of rings of order `n`, sorted by
/// certificate. Results are memoized for the life of the process.
pub fn enumerate_rings(n: u64) -> Result<Arc<Vec<AtlasEntry>>> {
    limits::check_enumeration(n)?;
    if let Some(hit) = cache().lock().expect("atlas cache").get(&n) {
        return Ok(hit.clone());
    }
    let entries = Arc::new(build(n)?);
    cache().lock().expect("atlas cache").insert(n, entries.clone());
    Ok(entries)
}

/// Like [`enumerate_rings`] but always recomputes, on a dedicated pool of
/// `workers` threads. The result does not depend on `workers`.
pub fn enumerate_rings_with(n: u64, workers: usize) -> Result<Vec<AtlasEntry>> {
    limits::check_enumeration(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| build(n))
}

fn build(n: u64) -> Result<Vec<AtlasEntry>> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    let certs = certificates(n)?;
    let names = known_names(n)?;
    let entries = certs
        .par_iter()
        .enumerate()
        .map(|(k, cert)| {
            let label = names.get(cert).cloned().unwrap_or_else(|| format!("R{n}#{}", k + 1));
            AtlasEntry::new(cert.to_ring()?.with_label(label))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(entries)
}

/// Sorted certificates of all rings of order `n`.
fn certificates(n: u64) -> Result<Vec<RingCertificate>> {
    let factors = factorize(n);
    if factors.is_empty() {
        return Ok(vec![ring_canonical_certificate(&zero_ring())?]);
    }
    if factors.len() == 1 {
        let mut all = BTreeSet::new();
        for orders in abelian_group_types(n)? {
            all.extend(search::certificates_for_type(&orders)?);
        }
        return Ok(all.into_iter().collect());
    }
    // combine primary components
    let mut combined: Vec<FiniteRing> = vec![zero_ring()];
    for (p, e) in factors {
        let part = enumerate_rings(p.pow(e))?;
        let mut next = Vec::new();
        for r in &combined {
            for entry in part.iter() {
                next.push(direct_sum(r, &entry.ring)?);
            }
        }
        combined = next;
    }
    let set = combined
        .par_iter()
        .map(ring_canonical_certificate)
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(set.into_iter().collect())
}

/// Certificates of the named constructions of order `n`, and of direct sums
/// of smaller atlas entries, mapped to display names.
fn known_names(n: u64) -> Result<BTreeMap<RingCertificate, String>> {
    let mut names = BTreeMap::new();
    let note = |r: FiniteRing, names: &mut BTreeMap<RingCertificate, String>| -> Result<()> {
        let label = r.label().unwrap_or_default().to_string();
        names.entry(ring_canonical_certificate(&r)?).or_insert(label);
        Ok(())
    };
    if n == 1 {
        note(zero_ring().with_label("0"), &mut names)?;
        return Ok(names);
    }
    let factors = factorize(n);
    note(zn(n as usize), &mut names)?;
    if let [(p, e)] = factors[..] {
        note(gf(p, e)?, &mut names)?;
        note(n0(p, e)?, &mut names)?;
        if e == 2 {
            for r in [np2(p)?, npp(p)?, ap(p)?, ap0(p)?, zpx_mod_x2(p)?] {
                note(r, &mut names)?;
            }
        }
    }
    for m in 2..n {
        if m.pow(4) == n {
            note(matrix_ring(&zn(m as usize), 2)?, &mut names)?;
        }
    }
    // direct sums, preferring the shortest name
    let mut sums: BTreeMap<RingCertificate, String> = BTreeMap::new();
    for a in (2..n).filter(|a| n % a == 0 && a * a <= n) {
        let b = n / a;
        let left = enumerate_rings(a)?;
        let right = enumerate_rings(b)?;
        for x in left.iter() {
            for y in right.iter() {
                let (first, second) = if (x.order(), x.label()) <= (y.order(), y.label()) { (x, y) } else { (y, x) };
                let name = format!("{} ⊕ {}", first.label(), second.label());
                let cert = ring_canonical_certificate(&direct_sum(&x.ring, &y.ring)?)?;
                let slot = sums.entry(cert).or_insert_with(|| name.clone());
                if (name.len(), &name) < (slot.len(), &*slot) {
                    *slot = name;
                }
            }
        }
    }
    for (cert, name) in sums {
        names.entry(cert).or_insert(name);
    }
    Ok(names)
}

/// Entries of order `1..=n_max` whose zero-divisor graph is isomorphic to `g`.
pub fn rings_with_graph(n_max: u64, g: &SimpleGraph) -> Result<Vec<AtlasEntry>> {
    limits::check_enumeration(n_max)?;
    let target = canonical_form(g)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_rings(n)?.iter().filter(|e| e.graph_certificate == target).cloned());
    }
    Ok(out)
}

/// Index pairs `(i, j)`, `i < j`, of entries with isomorphic zero-divisor
/// graphs but non-isomorphic rings. With a filter, only entries satisfying
/// every listed identity take part.
pub fn graph_determinacy_report(entries: &[AtlasEntry], filter: Option<&[NcPoly]>) -> Result<Vec<(usize, usize)>> {
    let mut kept = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let ok = match filter {
            None => true,
            Some(ids) => {
                let mut all = true;
                for p in ids {
                    if !satisfies_identity(&e.ring, p)?.holds() {
                        all = false;
                        break;
                    }
                }
                all
            }
        };
        if ok {
            kept.push(i);
        }
    }
    let mut out = Vec::new();
    for (a, &i) in kept.iter().enumerate() {
        for &j in &kept[a + 1..] {
            let (x, y) = (&entries[i], &entries[j]);
            if x.graph_certificate == y.graph_certificate && x.certificate != y.certificate {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Entries of every order in `1..=n_max`, concatenated in order.
pub fn atlas_up_to(n_max: u64) -> Result<Vec<AtlasEntry>> {
    limits::check_enumeration(n_max)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_rings(n)?.iter().cloned());
    }
    Ok(out)
}
