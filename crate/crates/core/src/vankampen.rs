//! The van Kampen obstruction: crossing parities of a drawing on the deleted
//! square of a graph, modulo elementary coboundaries.

use std::collections::HashMap;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::{
    integer, on_segment, overlap_at_shared_end, rational, segment_contact, Contact, Point, Rational,
};
use crate::gf2::{span_membership, BitVec, SpanMembership};
use crate::graph::Graph;

mod path;

pub use path::{path_obstruction, path_obstruction_with_layout, PathObstruction, PlanePath};

/// Unordered pairs of disjoint edges, with the (vertex, edge) supports of
/// elementary coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletedSquare {
    graph: Graph,
    /// `(e, f)` with `e < f` and no common endpoint, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    /// `(a, e)` with `a` not an endpoint of `e`, vertex-major.
    pub supports: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

fn disjoint(g: &Graph, e: usize, f: usize) -> bool {
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    a != c && a != d && b != c && b != d
}

impl DeletedSquare {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cell_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_index(&self, e: usize, f: usize) -> Option<usize> {
        self.index.get(&(e.min(f), e.max(f))).copied()
    }

    /// The elementary coboundary of `(a, e)`: flips every pair `{e', e}`
    /// with `e'` at `a` and disjoint from `e`.
    pub fn coboundary(&self, a: usize, e: usize) -> BitVec {
        let g = &self.graph;
        let ones = (0..g.edge_count())
            .filter(|&f| {
                let (x, y) = g.endpoints(f);
                (x == a || y == a) && disjoint(g, e, f)
            })
            .filter_map(|f| self.pair_index(e, f));
        BitVec::from_ones(self.pairs.len(), ones)
    }

    pub fn coboundaries(&self) -> Vec<BitVec> {
        self.supports.iter().map(|&(a, e)| self.coboundary(a, e)).collect()
    }
}

pub fn deleted_square(g: &Graph) -> Result<DeletedSquare> {
    if let Some(why) = g.simplicity_violation() {
        return Err(Error::NotSimple(why));
    }
    let e = g.edge_count();
    let pairs: Vec<(usize, usize)> =
        (0..e).flat_map(|x| (x + 1..e).map(move |y| (x, y))).filter(|&(x, y)| disjoint(g, x, y)).collect();
    let supports = (0..g.vertex_count())
        .flat_map(|a| (0..e).map(move |f| (a, f)))
        .filter(|&(a, f)| {
            let (x, y) = g.endpoints(f);
            a != x && a != y
        })
        .collect();
    let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    Ok(DeletedSquare { graph: g.clone(), pairs, supports, index })
}

/// A drawing of a graph: rational vertex positions and, per edge, the interior
/// bend points of its polyline (from the first endpoint to the second).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub positions: Vec<Point>,
    pub bends: Vec<Vec<Point>>,
}

/// A segment of an edge polyline: `(edge, index along the polyline)`.
type SegmentId = (usize, usize);

impl Drawing {
    pub fn straight(positions: Vec<Point>, edge_count: usize) -> Drawing {
        Drawing { positions, bends: vec![Vec::new(); edge_count] }
    }

    pub fn polyline(&self, g: &Graph, e: usize) -> Vec<Point> {
        let (a, b) = g.endpoints(e);
        let mut pts = Vec::with_capacity(self.bends[e].len() + 2);
        pts.push(self.positions[a].clone());
        pts.extend(self.bends[e].iter().cloned());
        pts.push(self.positions[b].clone());
        pts
    }

    fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.positions.len() != g.vertex_count() || self.bends.len() != g.edge_count() {
            return Err(Error::Malformed(format!(
                "drawing has {} positions and {} polylines for a graph with {} vertices and {} edges",
                self.positions.len(),
                self.bends.len(),
                g.vertex_count(),
                g.edge_count()
            )));
        }
        Ok(())
    }

    /// Check general position and return every crossing: pairs of segments
    /// meeting transversally at a point interior to both.
    pub fn crossings(&self, g: &Graph) -> Result<Vec<Crossing>> {
        self.check_shape(g)?;
        for a in 0..g.vertex_count() {
            for b in a + 1..g.vertex_count() {
                if self.positions[a] == self.positions[b] {
                    return Err(Error::GeneralPosition(format!("vertices {a} and {b} are drawn at the same point")));
                }
            }
        }
        let polylines: Vec<Vec<Point>> = (0..g.edge_count()).map(|e| self.polyline(g, e)).collect();
        let mut segments: Vec<(SegmentId, &Point, &Point)> = Vec::new();
        for (e, pts) in polylines.iter().enumerate() {
            for (k, w) in pts.windows(2).enumerate() {
                if w[0] == w[1] {
                    return Err(Error::GeneralPosition(format!("segment {k} of edge {e} has zero length")));
                }
                segments.push(((e, k), &w[0], &w[1]));
            }
        }
        let last = |e: usize| polylines[e].len() - 2;
        for (v, pos) in self.positions.iter().enumerate() {
            for &((e, k), p1, p2) in &segments {
                let (a, b) = g.endpoints(e);
                let own_end = (k == 0 && a == v) || (k == last(e) && b == v);
                if !own_end && on_segment(p1, p2, pos) {
                    return Err(Error::GeneralPosition(format!("vertex {v} lies on segment {k} of edge {e}")));
                }
            }
        }
        let mut crossings = Vec::new();
        for (i, &(s, p1, p2)) in segments.iter().enumerate() {
            for &(t, q1, q2) in &segments[i + 1..] {
                let shared = shared_point(g, s, t, last(s.0), last(t.0));
                match (segment_contact(p1, p2, q1, q2), shared) {
                    (Contact::Disjoint, _) => {}
                    (Contact::Crossing(at), None) => {
                        crossings.push(Crossing { first: s, second: t, at, sign: crossing_sign(p1, p2, q1, q2) })
                    }
                    (Contact::Touching, Some((s_end, t_end))) => {
                        let (ps, pt) = ([p1, p2], [q1, q2]);
                        let (shared_pt, a, b) = (ps[s_end], ps[1 - s_end], pt[1 - t_end]);
                        if shared_pt != pt[t_end] || overlap_at_shared_end(shared_pt, a, b) {
                            return Err(touch_error(s, t));
                        }
                    }
                    _ => return Err(touch_error(s, t)),
                }
            }
        }
        let mut points: Vec<(&Point, usize)> = crossings.iter().enumerate().map(|(i, c)| (&c.at, i)).collect();
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0].0 == w[1].0) {
            let (c1, c2) = (&crossings[w[0].1], &crossings[w[1].1]);
            return Err(Error::GeneralPosition(format!(
                "triple point at {}: segments {:?}, {:?} and {:?}, {:?} cross there",
                w[0].0, c1.first, c1.second, c2.first, c2.second
            )));
        }
        Ok(crossings)
    }
}

fn touch_error(s: SegmentId, t: SegmentId) -> Error {
    Error::GeneralPosition(format!(
        "segment {} of edge {} and segment {} of edge {} touch without crossing transversally",
        s.1, s.0, t.1, t.0
    ))
}

/// Where two segments are supposed to meet: consecutive segments of one
/// polyline at their bend, or end segments of edges with a common vertex.
/// Returns which end (0 or 1) of each segment is shared.
fn shared_point(g: &Graph, s: SegmentId, t: SegmentId, s_last: usize, t_last: usize) -> Option<(usize, usize)> {
    if s.0 == t.0 {
        return match t.1.checked_sub(s.1) {
            Some(1) => Some((1, 0)),
            _ if s.1 == t.1 + 1 => Some((0, 1)),
            _ if g.is_loop(s.0) && s.1 == 0 && t.1 == t_last => Some((0, 1)),
            _ if g.is_loop(s.0) && t.1 == 0 && s.1 == s_last => Some((1, 0)),
            _ => None,
        };
    }
    let (sa, sb) = g.endpoints(s.0);
    let (ta, tb) = g.endpoints(t.0);
    let mut ends_s = Vec::new();
    if s.1 == 0 {
        ends_s.push((sa, 0));
    }
    if s.1 == s_last {
        ends_s.push((sb, 1));
    }
    let mut ends_t = Vec::new();
    if t.1 == 0 {
        ends_t.push((ta, 0));
    }
    if t.1 == t_last {
        ends_t.push((tb, 1));
    }
    ends_s.iter().find_map(|&(v, i)| ends_t.iter().find(|&&(w, _)| w == v).map(|&(_, j)| (i, j)))
}

fn crossing_sign(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> i8 {
    if p2.minus(p1).cross(&q2.minus(q1)).is_positive() {
        1
    } else {
        -1
    }
}

/// A transversal crossing between two polyline segments. `sign` is the
/// orientation of (direction of `first`, direction of `second`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub at: Point,
    pub sign: i8,
}

/// Crossing parity of each pair of disjoint edges.
pub fn obstruction_cocycle(ds: &DeletedSquare, d: &Drawing) -> Result<BitVec> {
    let mut nu = BitVec::zeros(ds.cell_count());
    for c in d.crossings(ds.graph())? {
        if let Some(i) = ds.pair_index(c.first.0, c.second.0) {
            nu.flip(i);
        }
    }
    Ok(nu)
}

/// Signed crossing count of each pair `(e, f)`, `e < f`, of disjoint edges,
/// edges oriented from their first endpoint to their second. The entry for
/// the reversed pair is the negative.
pub fn obstruction_cocycle_z(ds: &DeletedSquare, d: &Drawing) -> Result<Vec<i64>> {
    let mut nu = vec![0i64; ds.cell_count()];
    for c in d.crossings(ds.graph())? {
        if let Some(i) = ds.pair_index(c.first.0, c.second.0) {
            let flip = if c.first.0 < c.second.0 { 1 } else { -1 };
            nu[i] += i64::from(c.sign) * flip;
        }
    }
    Ok(nu)
}

/// Outcome of reducing a cochain modulo elementary coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VkClass {
    /// The cochain is the sum of the coboundaries of these supports.
    Zero { supports: Vec<(usize, usize)> },
    /// A functional on cochains vanishing on every coboundary but not on the
    /// cochain.
    Nonzero { functional: BitVec },
}

impl VkClass {
    pub fn is_zero(&self) -> bool {
        matches!(self, VkClass::Zero { .. })
    }

    /// Re-check the certificate.
    pub fn verify(&self, ds: &DeletedSquare, nu: &BitVec) -> bool {
        match self {
            VkClass::Zero { supports } => {
                let mut sum = BitVec::zeros(ds.cell_count());
                for &(a, e) in supports {
                    sum.xor_assign(&ds.coboundary(a, e));
                }
                &sum == nu
            }
            VkClass::Nonzero { functional } => {
                functional.dot(nu) && ds.coboundaries().iter().all(|c| !functional.dot(c))
            }
        }
    }
}

pub fn vk_class_is_zero(ds: &DeletedSquare, nu: &BitVec) -> VkClass {
    match span_membership(&ds.coboundaries(), nu) {
        SpanMembership::Inside(combo) => {
            VkClass::Zero { supports: combo.into_iter().map(|i| ds.supports[i]).collect() }
        }
        SpanMembership::Outside(functional) => VkClass::Nonzero { functional },
    }
}

/// Straight-line drawing with vertices on the parabola `y = x^2`. The
/// abscissas `i + h(i) / 2^k` use a fixed irregular offset `h`, with `k`
/// increased until the drawing is in general position.
pub fn default_drawing(g: &Graph) -> Drawing {
    let offset = |i: usize| ((i * i * 31 + i * 7 + 3) % 97) as i64;
    for k in 1..=64u32 {
        let positions = (0..g.vertex_count())
            .map(|i| {
                let x = integer(i as i64)
                    + rational(offset(i), 97) / Rational::from_integer(num_bigint::BigInt::one() << k);
                let y = &x * &x;
                Point::new(x, y)
            })
            .collect();
        let d = Drawing::straight(positions, g.edge_count());
        if d.crossings(g).is_ok() {
            return d;
        }
    }
    unreachable!("some perturbation of points on a parabola is in general position")
}

/// Replace loops and repeated edges by subdivided copies, giving a simple
/// graph homeomorphic to the input.
pub fn simplify_by_subdivision(g: &Graph) -> Graph {
    let mut h = g.clone();
    let mut seen = std::collections::HashSet::new();
    for e in 0..g.edge_count() {
        let (a, b) = g.endpoints(e);
        if a == b {
            h = h.subdivide_edge(e).expect("edge exists");
            h = h.subdivide_edge(e).expect("edge exists");
        } else if !seen.insert((a.min(b), a.max(b))) {
            h = h.subdivide_edge(e).expect("edge exists");
        }
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityReport {
    pub planar: bool,
    /// The simple graph the obstruction was computed on.
    pub graph: Graph,
    pub drawing: Drawing,
    pub cocycle: BitVec,
    pub class: VkClass,
}

/// Planarity via the van Kampen obstruction of a default drawing.
pub fn vk_planarity_report(g: &Graph) -> PlanarityReport {
    let graph = simplify_by_subdivision(g);
    let ds = deleted_square(&graph).expect("subdivided graph is simple");
    let drawing = default_drawing(&graph);
    let cocycle = obstruction_cocycle(&ds, &drawing).expect("default drawing is in general position");
    let class = vk_class_is_zero(&ds, &cocycle);
    PlanarityReport { planar: class.is_zero(), graph, drawing, cocycle, class }
}

pub fn vk_planarity(g: &Graph) -> bool {
    vk_planarity_report(g).planar
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn deleted_square_sizes() {
        assert_eq!(deleted_square(&graph::complete(5)).unwrap().cell_count(), 15);
        assert_eq!(deleted_square(&graph::complete(3)).unwrap().cell_count(), 0);
        assert_eq!(deleted_square(&graph::complete_bipartite(3, 3)).unwrap().cell_count(), 18);
        assert!(matches!(deleted_square(&graph::bouquet(1)), Err(Error::NotSimple(_))));
    }

    fn pentagon_k5() -> (Graph, Drawing) {
        let pts = [(0, 10), (-9, 3), (-6, -8), (6, -8), (9, 3)];
        let g = graph::complete(5);
        let d = Drawing::straight(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), g.edge_count());
        (g, d)
    }

    #[test]
    fn k5_pentagon_has_one_odd_pair() {
        let (g, d) = pentagon_k5();
        let ds = deleted_square(&g).unwrap();
        let nu = obstruction_cocycle(&ds, &d).unwrap();
        assert_eq!(nu.count_ones() % 2, 1);
        let class = vk_class_is_zero(&ds, &nu);
        assert!(!class.is_zero());
        assert!(class.verify(&ds, &nu));
    }

    #[test]
    fn planar_verdicts() {
        assert!(vk_planarity(&graph::complete(4)));
        assert!(!vk_planarity(&graph::complete(5)));
        assert!(!vk_planarity(&graph::complete_bipartite(3, 3)));
        assert!(!vk_planarity(&graph::petersen()));
        assert!(vk_planarity(&graph::cycle(6)));
        assert!(vk_planarity(&graph::bouquet(3)));
    }

    #[test]
    fn crossed_planar_drawing_reduces_to_zero() {
        // K4 drawn with a crossing: convex quadrilateral with both diagonals
        let g = graph::complete(4);
        let pts = [(0, 0), (4, 0), (4, 4), (0, 4)];
        let d = Drawing::straight(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), 6);
        let ds = deleted_square(&g).unwrap();
        let nu = obstruction_cocycle(&ds, &d).unwrap();
        assert_eq!(nu.count_ones(), 1);
        let class = vk_class_is_zero(&ds, &nu);
        assert!(class.is_zero() && class.verify(&ds, &nu));
    }

    #[test]
    fn general_position_diagnostics() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect::<Vec<_>>();
        // isolated vertex on an edge
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        let d = Drawing::straight(pts(&[(0, 0), (2, 0), (1, 0)]), 1);
        assert!(d.crossings(&g).unwrap_err().to_string().contains("vertex 2 lies on segment 0 of edge 0"));
        // bend point on another edge
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let mut d = Drawing::straight(pts(&[(0, 0), (2, 0), (1, -1), (3, 1)]), 2);
        d.bends[1] = pts(&[(1, 0)]);
        assert!(matches!(d.crossings(&g), Err(Error::GeneralPosition(_))));
        // a loop drawn as a triangle is fine
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        let mut d = Drawing::straight(pts(&[(0, 0)]), 1);
        d.bends[0] = pts(&[(1, 0), (0, 1)]);
        assert_eq!(d.crossings(&g).unwrap(), vec![]);
        // triple point
        let g = Graph::new(6, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let d = Drawing::straight(pts(&[(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)]), 3);
        let err = d.crossings(&g).unwrap_err().to_string();
        assert!(err.contains("triple point"), "{err}");
    }

    #[test]
    fn integer_cocycle_reduces_to_parity() {
        let (g, d) = pentagon_k5();
        let ds = deleted_square(&g).unwrap();
        let z = obstruction_cocycle_z(&ds, &d).unwrap();
        let nu = obstruction_cocycle(&ds, &d).unwrap();
        assert!(z.iter().enumerate().all(|(i, &x)| (x.rem_euclid(2) == 1) == nu.get(i)));
    }
}
