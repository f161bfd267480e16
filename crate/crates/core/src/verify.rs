//! Named verification scenarios run by `finring verify`.
//!
//! Each scenario prints `RESULT <name> PASS|FAIL` followed by indented
//! detail lines, and records which library operations it called so the test
//! suite can check that the scenarios jointly exercise the whole API.

use std::collections::BTreeSet;
use std::fmt;

use crate::atlas::{
    abelian_group_types, enumerate_rings, graph_determinacy_report, load_atlas, rings_with_graph, save_atlas,
    AtlasEntry,
};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, export_dot, graph_isomorphic, is_complete, zero_divisor_graph, SimpleGraph};
use crate::poly::{self, evaluate, parse_suite, satisfies_identity, NcPoly};
use crate::ring::{
    ap, ap0, characteristic, direct_sum, gf, make_ring, matrix_ring, n0, np2, npp, quotient, subring_generated, zn,
    zpx_mod_x2, FiniteRing,
};
use crate::structure::{
    decompose, identity, ideals, idempotents, is_field, is_local, is_subdirectly_irreducible, jacobson_radical,
    nilpotency_index, nilpotent_elements, ring_canonical_certificate, ring_isomorphic, units, zero_divisors,
};

pub const SCENARIOS: [&str; 5] = ["cor1", "prop5", "prop4-counterexample", "tn4-identities", "theorem3-shape"];

/// Every public operation the scenarios are expected to cover.
pub const OPERATIONS: [&str; 49] = [
    "make_ring",
    "zn",
    "gf",
    "n0",
    "np2",
    "npp",
    "ap",
    "ap0",
    "zpx_mod_x2",
    "direct_sum",
    "matrix_ring",
    "quotient",
    "subring_generated",
    "characteristic",
    "zero_divisors",
    "units",
    "idempotents",
    "nilpotent_elements",
    "has_identity",
    "ideals",
    "jacobson_radical",
    "is_nilpotent_ring",
    "is_subdirectly_irreducible",
    "is_local",
    "is_field",
    "decompose",
    "ring_isomorphic",
    "ring_canonical_certificate",
    "zero_divisor_graph",
    "is_complete",
    "canonical_form",
    "graph_isomorphic",
    "export_dot",
    "parse",
    "render",
    "add",
    "mul",
    "scale",
    "substitute",
    "lower_degree",
    "essentially_depends",
    "evaluate",
    "satisfies_identity",
    "abelian_group_types",
    "enumerate_rings",
    "rings_with_graph",
    "graph_determinacy_report",
    "save_atlas",
    "load_atlas",
];

#[derive(Clone, Debug)]
pub struct ScenarioReport {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
    pub touched: BTreeSet<&'static str>,
}

impl ScenarioReport {
    fn new(name: &str) -> ScenarioReport {
        ScenarioReport {
            name: name.to_string(),
            passed: true,
            lines: Vec::new(),
            touched: BTreeSet::new(),
        }
    }

    fn touch(&mut self, ops: &[&'static str]) {
        self.touched.extend(ops.iter().copied());
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.lines.push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
        self.passed &= ok;
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RESULT {} {}", self.name, if self.passed { "PASS" } else { "FAIL" })?;
        for line in &self.lines {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Runs a scenario by name. `p` is only read by `prop5`.
pub fn run(name: &str, p: u64) -> Result<ScenarioReport> {
    match name {
        "cor1" => cor1(),
        "prop5" => prop5(p),
        "prop4-counterexample" => prop4_counterexample(),
        "tn4-identities" => tn4_identities(),
        "theorem3-shape" => theorem3_shape(),
        _ => Err(Error::InvalidParameter(format!(
            "unknown scenario `{name}` (expected one of {})",
            SCENARIOS.join(", ")
        ))),
    }
}

fn named(r: &FiniteRing) -> &str {
    r.label().unwrap_or("?")
}

/// The rings of order at most 9 whose zero-divisor graph is `K_2`.
pub fn cor1() -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("cor1");
    rep.touch(&["abelian_group_types", "enumerate_rings"]);
    let mut total = 0;
    for n in 2..=9u64 {
        let types = abelian_group_types(n)?;
        let count = enumerate_rings(n)?.len();
        total += count;
        rep.note(format!("order {n}: {count} classes over additive types {types:?}"));
    }
    rep.note(format!("{total} classes of orders 2..=9"));

    rep.touch(&["rings_with_graph", "zero_divisor_graph", "is_complete"]);
    let hits = rings_with_graph(9, &SimpleGraph::complete(2))?;
    rep.check(hits.len() == 4, format!("{} classes with graph K_2", hits.len()));
    for e in &hits {
        let g = zero_divisor_graph(&e.ring);
        rep.check(is_complete(&g) == Some(2), format!("{} has graph K_2", e.label()));
    }

    // rings without zero divisors are exactly the fields and the zero ring
    rep.touch(&["gf"]);
    let domains = rings_with_graph(9, &SimpleGraph::empty(0))?;
    let mut fields = vec![ring_canonical_certificate(&crate::ring::zero_ring())?];
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        fields.push(ring_canonical_certificate(&gf(p, k)?)?);
    }
    let mut found: Vec<_> = domains.iter().map(|e| e.certificate.clone()).collect();
    found.sort();
    fields.sort();
    rep.check(found == fields, format!("{} classes with no zero divisors, all fields or zero", domains.len()));

    rep.touch(&["n0", "zn", "zpx_mod_x2", "direct_sum", "ring_canonical_certificate", "ring_isomorphic"]);
    let expected = [n0(3, 1)?, zn(9), zpx_mod_x2(3)?, direct_sum(&zn(2), &zn(2))?];
    for r in &expected {
        let cert = ring_canonical_certificate(r)?;
        let hit = hits.iter().find(|e| e.certificate == cert);
        let witnessed = match hit {
            Some(e) => ring_isomorphic(r, &e.ring)?.is_some(),
            None => false,
        };
        rep.check(witnessed, format!("{} is among them", named(r)));
    }

    // the four rings side by side
    rep.touch(&[
        "has_identity",
        "units",
        "idempotents",
        "nilpotent_elements",
        "zero_divisors",
        "is_local",
        "is_field",
        "decompose",
        "characteristic",
    ]);
    for r in &expected {
        let zd = zero_divisors(r);
        let mut line = format!(
            "{}: characteristic {}, {} idempotents, {} nilpotents",
            named(r),
            characteristic(r),
            idempotents(r).len(),
            nilpotent_elements(r).len()
        );
        if identity(r).is_some() {
            let u = units(r)?;
            let covered = u.len() + zd.len() == r.order() - 1 && u.iter().all(|x| !zd.contains(x));
            rep.check(covered, format!("{}: every nonzero element is a unit or a zero divisor", named(r)));
            line += &format!(", local {}, field {}", is_local(r)?, is_field(r));
        } else {
            line += ", no identity";
        }
        let parts: Vec<usize> = decompose(r)?.iter().map(|i| i.len()).collect();
        line += &format!(", components {parts:?}");
        rep.note(line);
    }

    rep.touch(&["save_atlas", "load_atlas"]);
    let atlas = enumerate_rings(9)?;
    let path = std::env::temp_dir().join(format!("finring-cor1-{}.atlas", std::process::id()));
    save_atlas(9, &atlas, &path)?;
    let loaded = load_atlas(&path);
    let _ = std::fs::remove_file(&path);
    let loaded = loaded?;
    let same = loaded.len() == atlas.len() && loaded.iter().zip(atlas.iter()).all(|(a, b)| a.certificate == b.certificate);
    rep.check(same, "order-9 atlas survives a save/load round trip");
    Ok(rep)
}

/// The five rings whose zero-divisor graphs coincide for a prime `p`.
pub fn prop5_rings(p: u64) -> Result<[FiniteRing; 5]> {
    Ok([np2(p)?, npp(p)?, ap(p)?, ap0(p)?, direct_sum(&n0(p, 1)?, &zn(p as usize))?])
}

pub fn prop5(p: u64) -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("prop5");
    rep.touch(&["np2", "npp", "ap", "ap0", "n0", "zn", "direct_sum", "zero_divisor_graph"]);
    rep.note(format!("p = {p}"));
    let rings = prop5_rings(p)?;
    let graphs: Vec<SimpleGraph> = rings.iter().map(zero_divisor_graph).collect();

    rep.touch(&["graph_isomorphic", "canonical_form", "ring_isomorphic"]);
    let mut iso_pairs = 0;
    let mut distinct_rings = 0;
    for i in 0..rings.len() {
        for j in i + 1..rings.len() {
            let witness = graph_isomorphic(&graphs[i], &graphs[j])?;
            let same_form = canonical_form(&graphs[i])? == canonical_form(&graphs[j])?;
            let ok = witness.is_some() && same_form;
            iso_pairs += usize::from(ok);
            if ring_isomorphic(&rings[i], &rings[j])?.is_none() {
                distinct_rings += 1;
            }
            rep.check(ok, format!("graph of {} ≅ graph of {}", named(&rings[i]), named(&rings[j])));
        }
    }
    rep.check(iso_pairs == 10, format!("{iso_pairs}/10 graph isomorphisms"));
    rep.note(format!("{distinct_rings}/10 pairs are non-isomorphic as rings"));
    rep.touch(&["export_dot"]);
    let g = &graphs[0];
    rep.note(format!("graph of {}: {} vertices, {} edges", named(&rings[0]), g.vertex_count(), g.edge_count()));
    if g.vertex_count() <= 8 {
        for line in export_dot(g).lines() {
            rep.note(format!("  {line}"));
        }
    }
    Ok(rep)
}

/// `N_{0,3}` and `Z_2 + Z_2` share the graph `K_2` but are not isomorphic.
pub fn prop4_counterexample() -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("prop4-counterexample");
    rep.touch(&["n0", "make_ring", "zero_divisor_graph", "graph_isomorphic", "is_complete", "ring_isomorphic"]);
    let n03 = n0(3, 1)?;
    // Z_2 + Z_2 from explicit tables: (a, b) at index a + 2b
    let add: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| x & y).collect()).collect();
    let boolean = make_ring(&add, &mul, Some("Z_2 ⊕ Z_2"))?;
    let (g1, g2) = (zero_divisor_graph(&n03), zero_divisor_graph(&boolean));
    rep.check(is_complete(&g1) == Some(2) && is_complete(&g2) == Some(2), "both graphs are K_2");
    rep.check(graph_isomorphic(&g1, &g2)?.is_some(), "the graphs are isomorphic");
    rep.check(ring_isomorphic(&n03, &boolean)?.is_none(), "the rings are not isomorphic");

    rep.touch(&["enumerate_rings", "graph_determinacy_report", "parse", "ring_canonical_certificate"]);
    let atlas: Vec<AtlasEntry> = (1..=9).map(enumerate_rings).collect::<Result<Vec<_>>>()?.iter().flat_map(|a| a.iter().cloned()).collect();
    // identities shared by N_{0,3} and Z_2
    let joint: Vec<NcPoly> = ["6x", "2xy", "3x^2 - 3x"].iter().map(|s| poly::parse(s)).collect::<Result<_>>()?;
    let collisions = graph_determinacy_report(&atlas, Some(&joint))?;
    let (c1, c2) = (ring_canonical_certificate(&n03)?, ring_canonical_certificate(&boolean)?);
    let found = collisions.iter().any(|&(i, j)| {
        let pair = [&atlas[i].certificate, &atlas[j].certificate];
        pair.contains(&&c1) && pair.contains(&&c2)
    });
    rep.check(found, "the pair collides among rings satisfying 6x, 2xy, 3x^2 - 3x");
    for &(i, j) in &collisions {
        rep.note(format!("collision: {} / {}", atlas[i].label(), atlas[j].label()));
    }
    let zero_var: Vec<NcPoly> = ["2x", "xy"].iter().map(|s| poly::parse(s)).collect::<Result<_>>()?;
    let none = graph_determinacy_report(&atlas, Some(&zero_var))?;
    rep.check(none.is_empty(), format!("{} collisions among rings satisfying 2x, xy", none.len()));
    Ok(rep)
}

pub const N4_SUITE: &str = "# identities of N_4\nxyz\n4x\n2xy\n2x + x^2\n";
pub const N04_SUITE: &str = "# identities of N_{0,4}\n4x\nxy\n";

pub fn tn4_identities() -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("tn4-identities");
    rep.touch(&["np2", "n0", "parse", "satisfies_identity", "render"]);
    for (ring, suite) in [(np2(2)?, N4_SUITE), (n0(2, 2)?, N04_SUITE)] {
        for p in parse_suite(suite)? {
            let verdict = satisfies_identity(&ring, &p)?;
            rep.check(verdict.holds(), format!("{} satisfies {}", named(&ring), poly::render(&p)));
        }
    }

    rep.touch(&["evaluate", "lower_degree", "essentially_depends"]);
    let n4 = np2(2)?;
    let f = poly::parse("2x + x^2")?;
    let at_a = evaluate(&f, &n4, &[(1, 1)].into_iter().collect())?;
    rep.check(at_a == 0, "2a + a^2 = 0 in N_4");
    let xyz = poly::parse("xyz")?;
    rep.check(xyz.essentially_depends(), "xyz depends essentially on x, y, z");
    rep.check(f.lower_degree()? == 1 && xyz.lower_degree()? == 3, "lower degrees 1 and 3");

    // 2^2 f(x) - f(2x) for f = x + x^2
    rep.touch(&["substitute", "scale", "add", "mul"]);
    let x = NcPoly::var(1);
    let f = x.add(&x.mul(&x));
    let doubled = f.substitute(&[(1, x.scale(2))].into_iter().collect())?;
    let result = f.scale(4).add(&doubled.scale(-1));
    rep.check(result == x.scale(2), format!("4f(x) - f(2x) = {} for f = {}", poly::render(&result), poly::render(&f)));
    Ok(rep)
}

/// Orders of the rings checked by `theorem3-shape`.
const SHAPE_ORDERS: [u64; 3] = [2, 4, 8];

/// Rings derived from `r` inside any variety containing `Z_2` and `r`:
/// `Z_2`, `r`, its one-generated subrings and quotients, and pairwise sums.
fn variety_sample(r: &FiniteRing) -> Result<Vec<FiniteRing>> {
    let mut base = vec![zn(2), r.clone()];
    for x in 1..r.order() {
        base.push(subring_generated(r, &[x])?.ring);
    }
    for i in ideals(r)? {
        if !i.is_zero() && !i.is_whole() {
            base.push(quotient(r, &i)?);
        }
    }
    let mut out = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.order() * b.order() <= 16 {
                out.push(direct_sum(a, b)?);
            }
        }
    }
    Ok(out)
}

/// Two rings in `sample` with isomorphic graphs but distinct isomorphism
/// types, if any.
fn graph_collision(sample: &[FiniteRing]) -> Result<Option<(String, String)>> {
    let mut seen: Vec<(crate::graph::GraphCertificate, crate::structure::RingCertificate, String)> = Vec::new();
    for r in sample {
        let g = canonical_form(&zero_divisor_graph(r))?;
        let c = ring_canonical_certificate(r)?;
        if let Some((_, _, other)) = seen.iter().find(|(g2, c2, _)| *g2 == g && *c2 != c) {
            return Ok(Some((other.clone(), named(r).to_string())));
        }
        seen.push((g, c, named(r).to_string()));
    }
    Ok(None)
}

/// Every subdirectly irreducible ring of order 2, 4 or 8 is `Z_2`, or is
/// nilpotent with `2x = 0` and `x^2 = 0`, or else it cannot live in a variety
/// containing `Z_2` whose finite members are determined by their graphs: a
/// graph collision is exhibited among rings that variety must contain.
pub fn theorem3_shape() -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("theorem3-shape");
    rep.touch(&[
        "enumerate_rings",
        "is_subdirectly_irreducible",
        "is_nilpotent_ring",
        "jacobson_radical",
        "satisfies_identity",
        "parse",
        "ring_isomorphic",
        "zn",
    ]);
    let two_x = poly::parse("2x")?;
    let square = poly::parse("x^2")?;
    let mut candidates: Vec<FiniteRing> = Vec::new();
    for n in SHAPE_ORDERS {
        for e in enumerate_rings(n)?.iter() {
            candidates.push(e.ring.clone());
        }
    }
    // one simple ring beyond the enumerated range
    rep.touch(&["matrix_ring"]);
    candidates.push(matrix_ring(&zn(2), 2)?);

    rep.touch(&["subring_generated", "ideals", "quotient", "direct_sum", "zero_divisor_graph", "canonical_form", "ring_canonical_certificate"]);
    let (mut shaped, mut excluded) = (0, 0);
    for r in &candidates {
        if !is_subdirectly_irreducible(r)? {
            continue;
        }
        let nilpotent = nilpotency_index(r).is_some();
        // a nilpotent ring is its own radical
        rep.check(nilpotent == jacobson_radical(r)?.is_whole(), format!("{}: nilpotent iff R = J(R)", named(r)));
        let is_z2 = r.order() == 2 && ring_isomorphic(r, &zn(2))?.is_some();
        let conclusion = is_z2
            || (nilpotent && satisfies_identity(r, &two_x)?.holds() && satisfies_identity(r, &square)?.holds());
        if conclusion {
            shaped += 1;
            rep.note(format!("{}: has the concluded shape", named(r)));
            continue;
        }
        match graph_collision(&variety_sample(r)?)? {
            Some((a, b)) => {
                excluded += 1;
                rep.check(true, format!("{}: excluded, graphs of {a} and {b} coincide", named(r)));
            }
            None => rep.check(false, format!("{}: no graph collision found", named(r))),
        }
    }
    rep.note(format!("{shaped} rings of the concluded shape, {excluded} excluded by a collision"));
    Ok(rep)
}

/// Runs every scenario, `prop5` for p = 2, 3, 5.
pub fn run_all() -> Result<Vec<ScenarioReport>> {
    let mut out = vec![cor1()?];
    for p in [2, 3, 5] {
        out.push(prop5(p)?);
    }
    out.push(prop4_counterexample()?);
    out.push(tn4_identities()?);
    out.push(theorem3_shape()?);
    Ok(out)
}
