//! Surfaces given by schemes: recognition, orientability, classification and
//! the mod-2 intersection form.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec, EchelonBasis};
use crate::graph::{Dart, Graph};
use crate::scheme::{Scheme2, Slot, Step};

/// Why a scheme fails to be a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Offence {
    /// The edge lies in no face or in more than two face slots.
    Edge { edge: usize, slots: usize },
    /// The link of the vertex is neither a circle nor a segment.
    Vertex { vertex: usize, link_components: usize },
}

impl fmt::Display for Offence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Offence::Edge { edge, slots } => write!(f, "edge {edge} lies in {slots} face slots"),
            Offence::Vertex { vertex, link_components: 0 } => write!(f, "vertex {vertex} is isolated"),
            Offence::Vertex { vertex, link_components } => {
                write!(f, "link of vertex {vertex} has {link_components} components")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInfo {
    /// Edges lying in exactly one face slot, ascending.
    pub boundary_edges: Vec<usize>,
    /// Boundary edges grouped into circles, each listed in walking order.
    pub boundary_circles: Vec<Vec<usize>>,
}

impl SurfaceInfo {
    pub fn is_closed(&self) -> bool {
        self.boundary_edges.is_empty()
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_circles.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceVerdict {
    Surface(SurfaceInfo),
    NotSurface(Offence),
}

impl SurfaceVerdict {
    pub fn info(&self) -> Option<&SurfaceInfo> {
        match self {
            SurfaceVerdict::Surface(info) => Some(info),
            SurfaceVerdict::NotSurface(_) => None,
        }
    }
}

/// Check the manifold conditions: every edge lies in one or two face slots
/// and every vertex link is a single circle or a single segment.
pub fn is_surface(s: &Scheme2) -> SurfaceVerdict {
    let g = s.graph();
    let slots = s.slots_by_edge();
    if let Some((edge, sl)) = slots.iter().enumerate().find(|(_, sl)| sl.is_empty() || sl.len() > 2) {
        return SurfaceVerdict::NotSurface(Offence::Edge { edge, slots: sl.len() });
    }
    // Link graph: nodes are darts, one link per face corner.
    let mut uf = UnionFind::new(g.dart_count());
    for walk in s.faces() {
        for k in 0..walk.len() {
            let (cur, next) = (walk[k], walk[(k + 1) % walk.len()]);
            uf.union(Dart::new(cur.edge, cur.head_side()).0, Dart::new(next.edge, next.tail_side()).0);
        }
    }
    for (v, darts) in g.darts_by_vertex().iter().enumerate() {
        let mut roots: Vec<usize> = darts.iter().map(|d| uf.find(d.0)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() != 1 {
            return SurfaceVerdict::NotSurface(Offence::Vertex { vertex: v, link_components: roots.len() });
        }
    }
    let boundary_edges: Vec<usize> = (0..g.edge_count()).filter(|&e| slots[e].len() == 1).collect();
    let boundary_circles = trace_circles(g, &boundary_edges);
    SurfaceVerdict::Surface(SurfaceInfo { boundary_edges, boundary_circles })
}

/// Split a set of edges in which every vertex has even degree 0 or 2 into
/// circles, each starting at its smallest edge.
fn trace_circles(g: &Graph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for &e in edges {
        let (a, b) = g.endpoints(e);
        at[a].push(e);
        at[b].push(e);
    }
    let mut used = vec![false; g.edge_count()];
    let mut circles = Vec::new();
    for &start in edges {
        if used[start] {
            continue;
        }
        let mut circle = Vec::new();
        let (mut v, _) = g.endpoints(start);
        let mut e = start;
        loop {
            used[e] = true;
            circle.push(e);
            let (a, b) = g.endpoints(e);
            v = if a == v { b } else { a };
            match at[v].iter().find(|&&x| !used[x]) {
                Some(&next) => e = next,
                None => break,
            }
        }
        circles.push(circle);
    }
    circles
}

fn require_surface(s: &Scheme2) -> Result<SurfaceInfo> {
    match is_surface(s) {
        SurfaceVerdict::Surface(info) => Ok(info),
        SurfaceVerdict::NotSurface(o) => Err(Error::NotASurface(o.to_string())),
    }
}

/// The red edges for a choice of face orientations (`flips[f]` reverses
/// face `f`): interior edges whose two traversals run the same way.
pub fn obstruction_cycle(s: &Scheme2, flips: &[bool]) -> Vec<bool> {
    s.slots_by_edge()
        .iter()
        .map(|sl| match sl.as_slice() {
            [x, y] => direction(s, *x, flips) == direction(s, *y, flips),
            _ => false,
        })
        .collect()
}

fn direction(s: &Scheme2, slot: Slot, flips: &[bool]) -> bool {
    s.step(slot).forward ^ flips[slot.face]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientability {
    /// Face reversals making every interior edge traversed once each way.
    Orientable {
        flips: Vec<bool>,
    },
    NonOrientable(NonOrientabilityWitness),
}

impl Orientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientability::Orientable { .. })
    }
}

/// Proof that no face orientation is consistent.
///
/// `red_edges` is the obstruction cycle of the greedy orientation `flips`.
/// `dual_loop` marks the edges crossed by a closed walk through faces; it is
/// even on every face boundary (a cocycle) and meets `red_edges` an odd number
/// of times, so the obstruction is not a sum of face boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonOrientabilityWitness {
    pub flips: Vec<bool>,
    pub red_edges: Vec<bool>,
    pub dual_loop: Vec<bool>,
}

impl NonOrientabilityWitness {
    /// Re-check the certificate against the scheme.
    pub fn verify(&self, s: &Scheme2) -> bool {
        let e = s.graph().edge_count();
        if self.red_edges != obstruction_cycle(s, &self.flips) {
            return false;
        }
        let pairing = (0..e).filter(|&i| self.red_edges[i] && self.dual_loop[i]).count();
        let cocycle =
            face_boundaries_z2(s).iter().all(|b| b.iter_ones().filter(|&i| self.dual_loop[i]).count() % 2 == 0);
        pairing % 2 == 1 && cocycle
    }
}

/// Greedy orientation: breadth-first over face adjacency from the lowest
/// unvisited face, orienting each new face to agree across the shared edge.
pub fn orientability(s: &Scheme2) -> Result<Orientability> {
    require_surface(s)?;
    let f = s.face_count();
    let slots = s.slots_by_edge();
    let mut flips = vec![false; f];
    let mut seen = vec![false; f];
    // face tree: (parent face, edge crossed)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; f];
    for root in 0..f {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(face) = queue.pop_front() {
            for step in &s.faces()[face] {
                let [x, y] = slots[step.edge][..] else { continue };
                let (here, there) = if x.face == face { (x, y) } else { (y, x) };
                if seen[there.face] {
                    continue;
                }
                seen[there.face] = true;
                flips[there.face] = s.step(there).forward == direction(s, here, &flips);
                parent[there.face] = Some((face, step.edge));
                queue.push_back(there.face);
            }
        }
    }
    let red = obstruction_cycle(s, &flips);
    let Some(conflict) = red.iter().position(|&r| r) else {
        return Ok(Orientability::Orientable { flips });
    };
    let mut dual_loop = vec![false; s.graph().edge_count()];
    dual_loop[conflict] = true;
    for sl in &slots[conflict] {
        let mut face = sl.face;
        while let Some((up, edge)) = parent[face] {
            dual_loop[edge] ^= true;
            face = up;
        }
    }
    Ok(Orientability::NonOrientable(NonOrientabilityWitness { flips, red_edges: red, dual_loop }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceClass {
    pub orientable: bool,
    /// Handles when orientable, cross-caps otherwise.
    pub genus: usize,
    pub boundary: usize,
    pub chi: i64,
}

impl SurfaceClass {
    /// The class with the given orientability, Euler characteristic and
    /// boundary count, if one exists.
    pub fn from_invariants(orientable: bool, chi: i64, boundary: usize) -> Result<SurfaceClass> {
        let deficit = 2 - chi - boundary as i64;
        let genus = if orientable {
            if deficit < 0 || deficit % 2 != 0 {
                return Err(Error::Domain(format!(
                    "no orientable surface has chi={chi} and {boundary} boundary circles"
                )));
            }
            deficit / 2
        } else {
            if deficit < 1 {
                return Err(Error::Domain(format!(
                    "no non-orientable surface has chi={chi} and {boundary} boundary circles"
                )));
            }
            deficit
        };
        Ok(SurfaceClass { orientable, genus: genus as usize, boundary, chi })
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orientable={} genus={} boundary={} chi={}",
            if self.orientable { "yes" } else { "no" },
            self.genus,
            self.boundary,
            self.chi
        )
    }
}

pub fn classify_surface(s: &Scheme2) -> Result<SurfaceClass> {
    let info = require_surface(s)?;
    let components = s.graph().components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    let orientable = orientability(s)?.is_orientable();
    SurfaceClass::from_invariants(orientable, s.euler_characteristic(), info.boundary_count())
}

/// Split a scheme into its connected pieces (vertices, edges and faces
/// renumbered in their original order).
pub fn split_components(s: &Scheme2) -> Vec<Scheme2> {
    let g = s.graph();
    let comps = g.components();
    (0..comps.count)
        .map(|c| {
            let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| comps.label[v] == c).collect();
            let mut vmap = vec![usize::MAX; g.vertex_count()];
            for (i, &v) in vertices.iter().enumerate() {
                vmap[v] = i;
            }
            let mut emap = vec![usize::MAX; g.edge_count()];
            let mut edges = Vec::new();
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                if comps.label[a] == c {
                    emap[e] = edges.len();
                    edges.push((vmap[a], vmap[b]));
                }
            }
            let faces = s
                .faces()
                .iter()
                .filter(|w| comps.label[w[0].tail(g)] == c)
                .map(|w| w.iter().map(|st| Step::new(emap[st.edge], st.forward)).collect())
                .collect();
            let graph = Graph::new(vertices.len(), edges).expect("component of a valid graph");
            Scheme2::new(graph, faces).expect("component of a valid scheme")
        })
        .collect()
}

fn face_boundaries_z2(s: &Scheme2) -> Vec<BitVec> {
    let e = s.graph().edge_count();
    s.faces().iter().map(|w| BitVec::from_ones(e, w.iter().map(|st| st.edge))).collect()
}

/// A basis of `H_1(S; Z/2)`: fundamental cycles of a spanning forest that are
/// independent modulo face boundaries. Each element is an edge mask.
pub fn h1_basis(s: &Scheme2) -> Vec<BitVec> {
    let g = s.graph();
    let mut span = EchelonBasis::new(g.edge_count());
    for b in face_boundaries_z2(s) {
        span.insert(&b);
    }
    let forest = g.spanning_forest();
    forest
        .off_tree_edges()
        .into_iter()
        .map(|e| BitVec::from_bools(&forest.fundamental_cycle(g, e)))
        .filter(|c| span.insert(c))
        .collect()
}

/// Common refinement of a closed surface scheme and its dual: every face is
/// coned from a centre to the corners and edge midpoints of its boundary.
///
/// Edges of the refinement: half-edges `2e` (first endpoint to midpoint) and
/// `2e + 1` (midpoint to second endpoint), then per face slot a spoke from the
/// centre to the edge midpoint and a spoke to the corner at the slot's tail.
struct Refinement {
    half_edges: usize,
    edge_count: usize,
    /// The two midpoint spokes of each edge; their sum is the dual edge.
    dual: Vec<[usize; 2]>,
    basis: EchelonBasis,
    triangles: usize,
}

impl Refinement {
    fn new(s: &Scheme2) -> Refinement {
        let e = s.graph().edge_count();
        let half_edges = 2 * e;
        let mut next = half_edges;
        let spokes: Vec<Vec<(usize, usize)>> = s
            .faces()
            .iter()
            .map(|w| {
                w.iter()
                    .map(|_| {
                        next += 2;
                        (next - 2, next - 1)
                    })
                    .collect()
            })
            .collect();
        let edge_count = next;
        let mut generators = Vec::new();
        for (face, w) in s.faces().iter().enumerate() {
            for (k, st) in w.iter().enumerate() {
                let (mid, corner) = spokes[face][k];
                let corner_next = spokes[face][(k + 1) % w.len()].1;
                let tail_half = 2 * st.edge + st.tail_side();
                let head_half = 2 * st.edge + st.head_side();
                generators.push(BitVec::from_ones(edge_count, [corner, tail_half, mid]));
                generators.push(BitVec::from_ones(edge_count, [mid, head_half, corner_next]));
            }
        }
        let triangles = generators.len();
        let mut dual = vec![[usize::MAX; 2]; e];
        for (edge, sl) in s.slots_by_edge().iter().enumerate() {
            for (i, slot) in sl.iter().enumerate() {
                dual[edge][i] = spokes[slot.face][slot.position].0;
            }
        }
        for d in &dual {
            generators.push(BitVec::from_ones(edge_count, d.iter().copied()));
        }
        let mut basis = EchelonBasis::new(edge_count);
        for gen in &generators {
            basis.insert(gen);
        }
        Refinement { half_edges, edge_count, dual, basis, triangles }
    }

    /// A dual cycle (set of dual edges) homologous to the primal cycle `c`.
    fn dual_representative(&self, c: &BitVec) -> BitVec {
        let image = BitVec::from_ones(self.edge_count, c.iter_ones().flat_map(|e| [2 * e, 2 * e + 1]));
        let combo = self.basis.express(&image).expect("dual edges span the first homology");
        BitVec::from_ones(
            self.dual.len(),
            combo.into_iter().filter(|&i| i >= self.triangles).map(|i| i - self.triangles),
        )
    }
}

/// Mod-2 intersection form on a basis of `H_1` of a closed surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    /// Basis cycles as edge masks.
    pub basis: Vec<BitVec>,
    /// `matrix[i].get(j)` is `basis[i] . basis[j]`.
    pub matrix: Vec<BitVec>,
}

impl IntersectionForm {
    pub fn rank(&self) -> usize {
        gf2::rank(&self.matrix)
    }

    pub fn is_symmetric(&self) -> bool {
        gf2::is_symmetric(&self.matrix)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.matrix.iter().map(|r| r.to_bools().into_iter().map(u8::from).collect()).collect()
    }
}

/// Pairing of cycles on a closed surface: each second argument is moved to a
/// homologous cycle of the dual scheme, which meets a primal edge exactly at
/// its dual edge.
pub struct Pairing {
    refinement: Refinement,
}

impl Pairing {
    pub fn new(s: &Scheme2) -> Result<Pairing> {
        let info = require_surface(s)?;
        if !info.is_closed() {
            return Err(Error::HasBoundary(info.boundary_edges.len()));
        }
        Ok(Pairing { refinement: Refinement::new(s) })
    }

    /// `a . b` for primal cycles given as edge masks.
    pub fn pair(&self, a: &BitVec, b: &BitVec) -> bool {
        debug_assert_eq!(self.refinement.half_edges, 2 * a.len());
        a.dot(&self.refinement.dual_representative(b))
    }
}

pub fn intersection_form(s: &Scheme2) -> Result<IntersectionForm> {
    let pairing = Pairing::new(s)?;
    let basis = h1_basis(s);
    let n = basis.len();
    let duals: Vec<BitVec> = basis.iter().map(|b| pairing.refinement.dual_representative(b)).collect();
    let matrix =
        (0..n).map(|i| BitVec::from_bools(&(0..n).map(|j| basis[i].dot(&duals[j])).collect::<Vec<_>>())).collect();
    Ok(IntersectionForm { basis, matrix })
}

/// Outcome of checking `w1 . a = a . a` on a basis and `w1 . w1 = chi mod 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W1Check {
    pub w1: Vec<bool>,
    pub w1_squared: bool,
    pub chi_mod_2: bool,
    pub failures: Vec<usize>,
}

impl W1Check {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.w1_squared == self.chi_mod_2
    }
}

/// `w1` is represented by the red edges of the greedy orientation.
pub fn w1_self_pairing(s: &Scheme2) -> Result<W1Check> {
    let pairing = Pairing::new(s)?;
    let w1 = match orientability(s)? {
        Orientability::Orientable { flips } => obstruction_cycle(s, &flips),
        Orientability::NonOrientable(w) => w.red_edges,
    };
    let w1v = BitVec::from_bools(&w1);
    let failures = h1_basis(s)
        .iter()
        .enumerate()
        .filter(|(_, a)| pairing.pair(&w1v, a) != pairing.pair(a, a))
        .map(|(i, _)| i)
        .collect();
    Ok(W1Check {
        w1,
        w1_squared: pairing.pair(&w1v, &w1v),
        chi_mod_2: s.euler_characteristic().rem_euclid(2) == 1,
        failures,
    })
}

pub fn w1_self_pairing_check(s: &Scheme2) -> bool {
    w1_self_pairing(s).is_ok_and(|c| c.holds())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{self, polygon_word};

    fn class(s: &Scheme2) -> (bool, usize, usize) {
        let c = classify_surface(s).unwrap();
        (c.orientable, c.genus, c.boundary)
    }

    #[test]
    fn torus_is_closed_orientable() {
        let t = scheme::torus();
        assert!(is_surface(&t).info().unwrap().is_closed());
        assert_eq!(class(&t), (true, 1, 0));
    }

    #[test]
    fn triangle_has_one_boundary_circle() {
        let s = polygon_word("abc").unwrap();
        let info = is_surface(&s).info().cloned().unwrap();
        assert_eq!(info.boundary_count(), 1);
        assert_eq!(info.boundary_circles[0].len(), 3);
        assert_eq!(class(&s), (true, 0, 1));
    }

    #[test]
    fn book_is_not_a_surface() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (1, 3), (3, 0), (1, 4), (4, 0)]).unwrap();
        let f = |x: usize, y: usize| vec![Step::new(0, true), Step::new(x, true), Step::new(y, true)];
        let s = Scheme2::new(g, vec![f(1, 2), f(3, 4), f(5, 6)]).unwrap();
        assert_eq!(is_surface(&s), SurfaceVerdict::NotSurface(Offence::Edge { edge: 0, slots: 3 }));
    }

    #[test]
    fn pinched_vertex_is_reported() {
        // two triangles sharing only a vertex
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let s = Scheme2::new(
            g,
            vec![
                vec![Step::new(0, true), Step::new(1, true), Step::new(2, true)],
                vec![Step::new(3, true), Step::new(4, true), Step::new(5, true)],
            ],
        )
        .unwrap();
        assert_eq!(is_surface(&s), SurfaceVerdict::NotSurface(Offence::Vertex { vertex: 0, link_components: 2 }));
    }

    #[test]
    fn klein_bottle_witness_verifies() {
        let k = scheme::klein_bottle();
        match orientability(&k).unwrap() {
            Orientability::NonOrientable(w) => assert!(w.verify(&k)),
            o => panic!("expected non-orientable, got {o:?}"),
        }
        assert_eq!(class(&k), (false, 2, 0));
        assert_eq!(class(&scheme::projective_plane()), (false, 1, 0));
    }

    #[test]
    fn mobius_band() {
        let m = scheme::mobius_band();
        assert!(!orientability(&m).unwrap().is_orientable());
        assert_eq!(class(&m), (false, 1, 1));
    }

    /// Triangulated `n x n` grid torus.
    fn grid_torus(n: usize) -> Scheme2 {
        let v = |i: usize, j: usize| (i % n) * n + j % n;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                edges.push((v(i, j), v(i + 1, j)));
                edges.push((v(i, j), v(i, j + 1)));
                edges.push((v(i, j), v(i + 1, j + 1)));
            }
        }
        let g = Graph::new(n * n, edges).unwrap();
        let e = |i: usize, j: usize, k: usize| 3 * v(i, j) + k;
        let mut faces = Vec::new();
        for i in 0..n {
            for j in 0..n {
                faces.push(vec![
                    Step::new(e(i, j, 0), true),
                    Step::new(e(i + 1, j, 1), true),
                    Step::new(e(i, j, 2), false),
                ]);
                faces.push(vec![
                    Step::new(e(i, j, 2), true),
                    Step::new(e(i, j + 1, 0), false),
                    Step::new(e(i, j, 1), false),
                ]);
            }
        }
        Scheme2::new(g, faces).unwrap()
    }

    #[test]
    fn punctured_torus() {
        assert_eq!(class(&polygon_word("abABc").unwrap()), (true, 1, 1));
        let t = grid_torus(3);
        assert_eq!(class(&t), (true, 1, 0));
        assert_eq!(class(&t.remove_face(4).unwrap()), (true, 1, 1));
    }

    #[test]
    fn pinched_hole_is_not_a_surface() {
        // removing a face whose corners all sit at one vertex pinches it
        let t = scheme::torus().subdivide_face(0, 0, 2).unwrap().remove_face(1).unwrap();
        assert!(matches!(is_surface(&t), SurfaceVerdict::NotSurface(Offence::Vertex { vertex: 0, .. })));
    }

    #[test]
    fn torus_form_is_hyperbolic() {
        let form = intersection_form(&scheme::torus()).unwrap();
        assert_eq!(form.to_rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn sphere_form_is_empty() {
        let form = intersection_form(&scheme::tetrahedron_boundary()).unwrap();
        assert!(form.matrix.is_empty());
    }

    #[test]
    fn klein_form_has_odd_self_pairing() {
        let form = intersection_form(&scheme::klein_bottle()).unwrap();
        assert_eq!(form.rank(), 2);
        assert!(form.is_symmetric());
        assert!((0..2).any(|i| form.matrix[i].get(i)));
    }

    #[test]
    fn w1_identities() {
        for s in [scheme::torus(), scheme::klein_bottle(), scheme::projective_plane(), scheme::orientable_surface(2)] {
            let c = w1_self_pairing(&s).unwrap();
            assert!(c.holds(), "{c:?}");
        }
        assert!(w1_self_pairing(&scheme::projective_plane()).unwrap().w1_squared);
    }

    #[test]
    fn form_requires_closed_surface() {
        assert!(matches!(intersection_form(&scheme::mobius_band()), Err(Error::HasBoundary(_))));
    }

    #[test]
    fn disconnected_surfaces_split() {
        let t = scheme::torus();
        let g = Graph::new(2, vec![(0, 0), (0, 0), (1, 1), (1, 1)]).unwrap();
        let shift = |w: &Vec<Step>| w.iter().map(|s| Step::new(s.edge + 2, s.forward)).collect::<Vec<_>>();
        let faces = vec![t.faces()[0].clone(), shift(&t.faces()[0])];
        let s = Scheme2::new(g, faces).unwrap();
        assert_eq!(classify_surface(&s), Err(Error::Disconnected(2)));
        let parts = split_components(&s);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| class(p) == (true, 1, 0)));
    }
}
