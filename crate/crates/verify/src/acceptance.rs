//! The acceptance criteria as named, individually runnable checks.

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use topokit::complex::{ChainComplex, Ring, SimplicialComplex};
use topokit::covers::{enumerate_covers, enumerate_covers_surface};
use topokit::graph;
use topokit::homology::{betti_euler_check, homology_z, homology_z2};
use topokit::links::{self, cone_count, generic_directions, linking_number};
use topokit::ribbon::{
    count_thickenings, for_each_rotation, genus_exhaustive, interlacement, mohar_genus, oriented_thickening_classes,
    CountMode, RotationSystem, DEFAULT_BUDGET,
};
use topokit::scheme::{self, Scheme2};
use topokit::surfaces::{classify_surface, h1_basis, intersection_form, w1_self_pairing};
use topokit::vankampen::{deleted_square, obstruction_cocycle, path_obstruction, vk_class_is_zero, vk_planarity};

use crate::fixtures::{self, closed_surfaces, Object};
use crate::oracles;

type Outcome = Result<String, String>;

pub struct Criterion {
    pub id: usize,
    /// Short name used for filtering.
    pub key: &'static str,
    pub title: &'static str,
    run: fn() -> Outcome,
}

pub struct Report {
    pub id: usize,
    pub key: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {:<24} {} ({:.2}s): {}", self.id, self.key, self.title, self.seconds, self.detail)
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, key, title, run| Criterion { id, key, title, run };
    vec![
        c(1, "sphere-homology", "integer homology of simplex boundaries", sphere_homology as fn() -> Outcome),
        c(2, "graph-cycle-space", "cycle space dimension of random multigraphs", graph_cycle_space),
        c(3, "surface-homology", "mod 2 first homology of closed surfaces", surface_homology),
        c(4, "classification", "classification of torus, Klein bottle, projective plane", classification),
        c(5, "intersection-form", "intersection form and w1 self-pairing", intersection_forms),
        c(6, "k4-thickenings", "oriented thickenings of K4", k4_thickenings),
        c(7, "genus-mohar", "genus by exhaustion and by interlacement rank", genus_agreement),
        c(8, "one-vertex-mohar", "interlacement rank of one-vertex ribbon graphs", one_vertex_ribbons),
        c(9, "vk-planarity-oracle", "van Kampen planarity against rotation search", planarity_oracle),
        c(10, "vk-drawing-independence", "obstruction class across random drawings", drawing_independence),
        c(11, "path-approximability", "approximability obstruction of plane paths", path_approximability),
        c(12, "double-covers", "double cover classes of graphs and surfaces", double_covers),
        c(13, "linking", "linking numbers of polygonal links", linking),
        c(14, "structural", "boundary, Euler characteristic and round-trip invariants", structural),
    ]
}

/// Run the criteria whose key contains `filter` (all when `None`).
pub fn run(filter: Option<&str>) -> Vec<Report> {
    criteria()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.key.contains(f) || c.id.to_string() == f))
        .map(|c| {
            let start = Instant::now();
            let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|p| {
                let msg =
                    p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
                Err(format!("panicked: {}", msg.unwrap_or_default()))
            });
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Report { id: c.id, key: c.key, title: c.title, passed, detail, seconds: start.elapsed().as_secs_f64() }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: topokit::Error) -> String {
    e.to_string()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sphere_homology() -> Outcome {
    for n in 1..=4 {
        let k = SimplicialComplex::simplex_boundary(n + 1);
        let h = homology_z(&ChainComplex::from_simplicial(&k, Ring::Z)).map_err(err)?;
        for dim in 0..=n {
            let expect = if dim == 0 || dim == n { "Z" } else { "0" };
            ensure(h.group_string(dim) == expect, || {
                format!("S^{n}: H_{dim} = {}, expected {expect}", h.group_string(dim))
            })?;
        }
    }
    Ok("S^1..S^4 have H_k = Z exactly at k = 0, n".into())
}

fn graph_cycle_space() -> Outcome {
    let mut r = rng(2);
    for i in 0..300 {
        let g = oracles::random_multigraph(&mut r, 12, 30);
        let s = Scheme2::new(g.clone(), vec![]).map_err(err)?;
        let dim = homology_z2(&ChainComplex::from_scheme(&s, Ring::Z2)).rank(1);
        let expect = g.edge_count() + oracles::component_count(&g) - g.vertex_count();
        ensure(dim == expect, || format!("sample {i}: dim H1 = {dim}, E - V + C = {expect}"))?;
    }
    Ok("300 random multigraphs match E - V + C".into())
}

fn surface_homology() -> Outcome {
    for (name, s) in closed_surfaces() {
        let dim = homology_z2(&ChainComplex::from_scheme(&s, Ring::Z2)).rank(1) as i64;
        ensure(dim == 2 - s.euler_characteristic(), || {
            format!("{name}: dim H1 = {dim}, chi = {}", s.euler_characteristic())
        })?;
    }
    Ok("8 closed surfaces satisfy dim H1 = 2 - chi".into())
}

fn random_subdivision(s: &Scheme2, r: &mut impl Rng, steps: usize) -> Result<Scheme2, String> {
    let mut s = s.clone();
    for _ in 0..steps {
        let faces: Vec<usize> = (0..s.face_count()).filter(|&f| s.faces()[f].len() >= 2).collect();
        if r.gen_bool(0.5) || faces.is_empty() {
            s = s.subdivide_edge(r.gen_range(0..s.graph().edge_count())).map_err(err)?;
        } else {
            let f = faces[r.gen_range(0..faces.len())];
            let len = s.faces()[f].len();
            let i = r.gen_range(0..len - 1);
            s = s.subdivide_face(f, i, r.gen_range(i + 1..len)).map_err(err)?;
        }
    }
    Ok(s)
}

fn classification() -> Outcome {
    let mut r = rng(4);
    for (name, s, orientable, genus) in [
        ("torus", scheme::torus(), true, 1),
        ("Klein bottle", scheme::klein_bottle(), false, 2),
        ("projective plane", scheme::projective_plane(), false, 1),
    ] {
        let c = classify_surface(&s).map_err(err)?;
        ensure(c.orientable == orientable && c.genus == genus && c.boundary == 0, || format!("{name}: {c}"))?;
        for k in 0..10 {
            let t = random_subdivision(&s, &mut r, 1 + k)?;
            let d = classify_surface(&t).map_err(err)?;
            ensure(d == c, || format!("{name}: subdivision {k} gives {d}"))?;
        }
    }
    Ok("torus (or, 1), Klein bottle (non, 2), projective plane (non, 1); stable under 10 subdivisions each".into())
}

fn intersection_forms() -> Outcome {
    let torus = intersection_form(&scheme::torus()).map_err(err)?;
    ensure(torus.to_rows() == vec![vec![0, 1], vec![1, 0]], || format!("torus form {:?}", torus.to_rows()))?;
    let mut checked = 0;
    for (name, s) in closed_surfaces() {
        let form = intersection_form(&s).map_err(err)?;
        let dim = h1_basis(&s).len();
        ensure(form.rank() == dim, || format!("{name}: rank {} but dim H1 = {dim}", form.rank()))?;
        let w1 = w1_self_pairing(&s).map_err(err)?;
        ensure(w1.holds(), || format!("{name}: w1 self-pairing fails on basis {:?}", w1.failures))?;
        ensure(w1.w1_squared == w1.chi_mod_2, || format!("{name}: w1.w1 differs from chi mod 2"))?;
        checked += 1;
    }
    Ok(format!("torus form [[0,1],[1,0]]; nondegenerate with w1 identities on {checked} surfaces"))
}

fn k4_thickenings() -> Outcome {
    let k4 = graph::complete(4);
    let classes = oriented_thickening_classes(&k4, DEFAULT_BUDGET).map_err(err)?;
    let mut genera: Vec<usize> = classes.iter().map(|c| c.genus).collect();
    genera.sort_unstable();
    ensure(genera == vec![0, 1, 1], || format!("class genera {genera:?}"))?;
    let labeled = count_thickenings(&k4, CountMode::Labeled, true).map_err(err)?;
    ensure(labeled == BigUint::from(16u32), || format!("labeled count {labeled}"))?;
    Ok("3 classes with genera 0, 1, 1; 16 labeled oriented thickenings".into())
}

fn genus_agreement() -> Outcome {
    for (name, g, expect) in
        [("K4", graph::complete(4), 0), ("K5", graph::complete(5), 1), ("K3,3", graph::complete_bipartite(3, 3), 1)]
    {
        let a = genus_exhaustive(&g, true, DEFAULT_BUDGET).map_err(err)?.genus;
        let b = mohar_genus(&g, true, DEFAULT_BUDGET).map_err(err)?.genus;
        ensure(a == expect && b == expect, || format!("{name}: exhaustive {a}, interlacement {b}, expected {expect}"))?;
    }
    let k5 = graph::complete(5);
    let mut count = 0;
    let mut bad = None;
    for_each_rotation(&k5, |rot| {
        let r = RotationSystem::new(k5.clone(), rot.to_vec(), vec![false; 10]).expect("valid rotation");
        let rank = interlacement(&r).expect("untwisted").rank();
        if rank != r.euler_genus() {
            bad = Some(count);
        }
        count += 1;
        bad.is_none()
    });
    ensure(bad.is_none(), || format!("K5 rotation {bad:?}: rank differs from twice the traced genus"))?;
    ensure(count == 7776, || format!("visited {count} rotation systems of K5"))?;
    Ok("K4 0, K5 1, K3,3 1 both ways; rank = 2 genus on all 7776 rotations of K5".into())
}

fn one_vertex_ribbons() -> Outcome {
    let mut total = 0u64;
    for loops in 1..=5 {
        let g = graph::bouquet(loops);
        let mut failure = None;
        for_each_rotation(&g, |rot| {
            for mask in 0u32..1 << loops {
                let twist: Vec<bool> = (0..loops).map(|e| mask >> e & 1 == 1).collect();
                let r = RotationSystem::new(g.clone(), rot.to_vec(), twist).expect("valid rotation");
                let rank = interlacement(&r).expect("interlacement").rank();
                let euler = r.euler_genus();
                let ok = if mask == 0 { rank.is_multiple_of(2) && rank == euler } else { rank == euler };
                if !ok {
                    failure = Some(format!(
                        "{loops} loops, rotation {rot:?}, twists {mask:b}: rank {rank}, Euler genus {euler}"
                    ));
                    return false;
                }
                total += 1;
            }
            true
        });
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(format!("{total} one-vertex ribbon graphs with up to 5 loops: rank = Euler genus, even when untwisted"))
}

fn planarity_oracle() -> Outcome {
    let mut graphs = 0;
    let mut planar = 0;
    for n in 1..=6 {
        for g in oracles::connected_simple_graphs(n) {
            let expect = oracles::planar_by_rotation_search(&g).map_err(err)?;
            let got = vk_planarity(&g);
            ensure(got == expect, || format!("{:?}: van Kampen says {got}, rotation search {expect}", g.edges()))?;
            graphs += 1;
            planar += usize::from(got);
        }
    }
    ensure(graphs == 143, || format!("generated {graphs} graphs, expected 143"))?;
    for (name, g) in [("K5", graph::complete(5)), ("K3,3", graph::complete_bipartite(3, 3))] {
        ensure(!vk_planarity(&g), || format!("{name} reported planar"))?;
    }
    Ok(format!("{graphs} connected simple graphs on <= 6 vertices agree ({planar} planar); K5, K3,3 nonzero"))
}

fn drawing_independence() -> Outcome {
    let mut r = rng(10);
    for (name, g, zero) in [
        ("K5", graph::complete(5), false),
        ("K3,3", graph::complete_bipartite(3, 3), false),
        ("K4", graph::complete(4), true),
        ("Petersen", graph::petersen(), false),
    ] {
        let ds = deleted_square(&g).map_err(err)?;
        for k in 0..20 {
            let d = oracles::random_drawing(&g, &mut r);
            let nu = obstruction_cocycle(&ds, &d).map_err(err)?;
            let class = vk_class_is_zero(&ds, &nu);
            ensure(class.verify(&ds, &nu), || format!("{name} drawing {k}: certificate does not verify"))?;
            ensure(class.is_zero() == zero, || format!("{name} drawing {k}: class zero = {}", class.is_zero()))?;
        }
    }
    Ok("20 random drawings each of K5, K3,3, K4, Petersen give a constant verdict".into())
}

fn path_approximability() -> Outcome {
    let o = path_obstruction(&fixtures::double_circuit_path()).map_err(err)?;
    ensure(o.obstruction == vec![true], || format!("double circuit: v = {:?}", o.obstruction))?;
    let o = path_obstruction(&fixtures::fork_path()).map_err(err)?;
    ensure(o.c() == 1 && o.obstruction == vec![true], || format!("fork path: c = {}, v = {:?}", o.c(), o.obstruction))?;
    let o = path_obstruction(&fixtures::folded_segment_path()).map_err(err)?;
    ensure(o.c() == 0, || format!("folded segment: c = {}", o.c()))?;
    Ok("double circuit v = (1); fork path c = 1, v = (1); folded segment c = 0".into())
}

fn double_covers() -> Outcome {
    let mut r = rng(12);
    let mut sampled = 0;
    while sampled < 50 {
        let g = oracles::random_multigraph(&mut r, 8, 14);
        let b = g.edge_count() + oracles::component_count(&g) - g.vertex_count();
        if b > 10 {
            continue;
        }
        let brute = oracles::cover_classes_by_orbits(&g);
        let listed = enumerate_covers(&g, 1 << 12).map_err(err)?.len() as u64;
        ensure(brute == 1 << b && listed == brute, || {
            format!("{:?}: orbits {brute}, listed {listed}, 2^b = {}", g.edges(), 1u64 << b)
        })?;
        sampled += 1;
    }
    for (name, s) in closed_surfaces() {
        let n = enumerate_covers_surface(&s, 1 << 12).map_err(err)?.len() as i64;
        ensure(n == 1 << (2 - s.euler_characteristic()), || format!("{name}: {n} classes"))?;
    }
    Ok("50 random graphs: orbit count = 2^(E-V+C); 8 surfaces: 2^(2-chi) classes".into())
}

fn linking() -> Outcome {
    let hopf = linking_number(&links::hopf_link()).map_err(err)?;
    ensure(hopf.value.abs() == 1 && hopf.mod2() == 1, || format!("Hopf lk = {}", hopf.value))?;
    let unlink = linking_number(&links::unlink()).map_err(err)?;
    ensure(unlink.value == 0, || format!("unlink lk = {}", unlink.value))?;
    for (name, l) in [("Hopf", links::hopf_link()), ("unlink", links::unlink())] {
        let values: Vec<i64> = generic_directions(&l, 5).map_err(err)?.iter().map(|x| x.value).collect();
        ensure(values.windows(2).all(|w| w[0] == w[1]), || format!("{name}: projections disagree {values:?}"))?;
        let cone = cone_count(&l).map_err(err)?;
        ensure(cone.rem_euclid(2) == values[0].rem_euclid(2), || format!("{name}: cone parity {cone}"))?;
    }
    Ok(format!("Hopf lk = {}, unlink 0; 5 projections agree; cone parity agrees", hopf.value))
}

fn structural() -> Outcome {
    let mut r = rng(14);
    let mut complexes: Vec<ChainComplex> = Vec::new();
    for f in fixtures::all() {
        ensure(f.object.round_trips().map_err(err)?, || format!("fixture {} does not round-trip", f.name))?;
        match &f.object {
            Object::Scheme(s) => complexes.push(ChainComplex::from_scheme(s, Ring::Z)),
            Object::Complex(k) => complexes.push(ChainComplex::from_simplicial(k, Ring::Z)),
            _ => {}
        }
    }
    let surfaces: Vec<Scheme2> = closed_surfaces().into_iter().map(|(_, s)| s).collect();
    for i in 0..1000 {
        match i % 4 {
            0 => {
                let g = oracles::random_multigraph(&mut r, 10, 20);
                ensure(Object::Graph(g.clone()).round_trips().map_err(err)?, || format!("random graph {i}"))?;
                complexes.push(ChainComplex::from_scheme(&Scheme2::new(g, vec![]).map_err(err)?, Ring::Z));
            }
            1 => {
                let base = &surfaces[r.gen_range(0..surfaces.len())];
                let steps = r.gen_range(1..6);
                let s = random_subdivision(base, &mut r, steps)?;
                ensure(s.euler_characteristic() == base.euler_characteristic(), || {
                    format!("random subdivision {i} changed chi")
                })?;
                ensure(Object::Scheme(s.clone()).round_trips().map_err(err)?, || format!("random scheme {i}"))?;
                complexes.push(ChainComplex::from_scheme(&s, Ring::Z));
            }
            2 => {
                let n = r.gen_range(2..=7);
                let simplices: Vec<Vec<usize>> =
                    (0..r.gen_range(1..8)).map(|_| (0..n).filter(|_| r.gen_bool(0.45)).collect()).collect();
                let k = SimplicialComplex::from_maximal(&simplices).map_err(err)?;
                ensure(Object::Complex(k.clone()).round_trips().map_err(err)?, || format!("random complex {i}"))?;
                complexes.push(ChainComplex::from_simplicial(&k, Ring::Z));
            }
            _ => {
                let g = oracles::random_multigraph(&mut r, 6, 8);
                let mut rot = g.darts_by_vertex();
                for darts in &mut rot {
                    rand::seq::SliceRandom::shuffle(darts.as_mut_slice(), &mut r);
                }
                let twist = (0..g.edge_count()).map(|_| r.gen()).collect();
                let rs = RotationSystem::new(g, rot, twist).map_err(err)?;
                ensure(Object::Rotation(rs).round_trips().map_err(err)?, || format!("random rotation {i}"))?;
            }
        }
    }
    let count = complexes.len();
    for (i, cx) in complexes.iter().enumerate() {
        ensure(cx.boundary_squares_to_zero(), || format!("complex {i}: boundary of boundary is nonzero"))?;
        ensure(cx.with_ring(Ring::Z2).boundary_squares_to_zero(), || {
            format!("complex {i}: mod 2 boundary squares nonzero")
        })?;
        ensure(betti_euler_check(cx), || format!("complex {i}: Betti numbers do not sum to chi"))?;
    }
    Ok(format!("fixtures and 1000 random inputs round-trip; {count} complexes pass boundary and Euler checks"))
}
