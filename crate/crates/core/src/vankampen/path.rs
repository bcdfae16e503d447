//! The obstruction to approximating a simplicial plane path by embeddings.
//!
//! The singular graph has a vertex `i x j` (`i > j`) for every pair of
//! breakpoints with the same image, and joins `i x j` to `(i +- 1) x (j +- 1)`.
//! Components containing a vertex `i x (i - 2)`, `i x 0` or `n x i` are
//! discarded; the remaining ones index the obstruction. A companion path runs
//! along the image in thin bands, each traversal of a band on its own lane, and
//! meets the disc around each image vertex in chords. Each singular vertex
//! gets a bit telling whether its two chords interleave; the obstruction sums
//! these bits over each component.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{angle_cmp, overlap_at_shared_end, segment_contact, Contact, Point};

/// Breakpoints `p_0 .. p_n` of a path moving straight from each to the next.
/// A closed path also returns from `p_n` to `p_0`, and its indices are cyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePath {
    pub points: Vec<Point>,
    pub closed: bool,
}

impl PlanePath {
    pub fn open(points: Vec<Point>) -> PlanePath {
        PlanePath { points, closed: false }
    }

    pub fn closed(points: Vec<Point>) -> PlanePath {
        PlanePath { points, closed: true }
    }

    pub fn segment_count(&self) -> usize {
        match (self.closed, self.points.len()) {
            (_, 0) => 0,
            (true, n) => n,
            (false, n) => n - 1,
        }
    }

    /// Endpoints of segment `k`.
    pub fn segment(&self, k: usize) -> (&Point, &Point) {
        (&self.points[k], &self.points[(k + 1) % self.points.len()])
    }

    /// Insert the midpoint of the image edge of segment `k` into every segment
    /// running along that edge.
    pub fn refine(&self, k: usize) -> PlanePath {
        let (a, b) = self.segment(k);
        let same = |p: &Point, q: &Point| (p == a && q == b) || (p == b && q == a);
        let mid = Point::new((&a.x + &b.x) / crate::geometry::integer(2), (&a.y + &b.y) / crate::geometry::integer(2));
        let mut points = Vec::with_capacity(self.points.len() * 2);
        for s in 0..self.segment_count() {
            let (p, q) = self.segment(s);
            points.push(p.clone());
            if same(p, q) {
                points.push(mid.clone());
            }
        }
        if !self.closed {
            points.extend(self.points.last().cloned());
        }
        PlanePath { points, closed: self.closed }
    }

    /// Nondegenerate and simplicial: no segment collapses, and two segments
    /// either run along the same image edge, share exactly one endpoint, or
    /// are disjoint.
    pub fn validate(&self) -> Result<()> {
        let m = self.segment_count();
        if self.points.len() < 2 || (self.closed && self.points.len() < 3) {
            return Err(Error::Domain(
                "a path needs at least one segment (a closed path at least three points)".into(),
            ));
        }
        for k in 0..m {
            let (a, b) = self.segment(k);
            if a == b {
                return Err(Error::Domain(format!("segment {k} is degenerate: it maps to the point {a}")));
            }
        }
        for k in 0..m {
            let (a, b) = self.segment(k);
            for l in k + 1..m {
                let (c, d) = self.segment(l);
                if (a == c && b == d) || (a == d && b == c) {
                    continue;
                }
                let shared =
                    [(a, b, c, d), (a, b, d, c), (b, a, c, d), (b, a, d, c)].into_iter().find(|(p, _, q, _)| p == q);
                let ok = match shared {
                    Some((p, x, _, y)) => !overlap_at_shared_end(p, x, y),
                    None => segment_contact(a, b, c, d) == Contact::Disjoint,
                };
                if !ok {
                    return Err(Error::Domain(format!("path is not simplicial: segments {k} and {l} meet improperly")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathObstruction {
    /// Vertices `(i, j)` of the singular graph, `i > j`, sorted.
    pub singular: Vec<(usize, usize)>,
    pub edges: Vec<((usize, usize), (usize, usize))>,
    /// Unmarked components, each a sorted vertex list, ordered by first vertex.
    pub components: Vec<Vec<(usize, usize)>>,
    /// Interleaving bit of each singular vertex (false at path ends).
    pub interleave: Vec<bool>,
    /// One bit per unmarked component.
    pub obstruction: Vec<bool>,
}

impl PathObstruction {
    pub fn c(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.obstruction.iter().all(|&b| !b)
    }
}

/// Obstruction with each segment on the lane given by its index.
pub fn path_obstruction(path: &PlanePath) -> Result<PathObstruction> {
    let lanes: Vec<i64> = (0..path.segment_count() as i64).collect();
    path_obstruction_with_layout(path, &lanes)
}

/// Obstruction for the companion path whose segment `k` runs on lane
/// `lanes[k]` of its band. Lanes are offsets to the left of the band's
/// canonical direction (from its lexicographically smaller end); segments
/// sharing a band need distinct lanes.
pub fn path_obstruction_with_layout(path: &PlanePath, lanes: &[i64]) -> Result<PathObstruction> {
    path.validate()?;
    let m = path.segment_count();
    if lanes.len() != m {
        return Err(Error::Malformed(format!("{} lanes given for {m} segments", lanes.len())));
    }
    let mut used: HashMap<(&Point, &Point, i64), usize> = HashMap::new();
    for (k, &lane) in lanes.iter().enumerate() {
        let (a, b) = path.segment(k);
        let band = if a < b { (a, b) } else { (b, a) };
        if let Some(other) = used.insert((band.0, band.1, lane), k) {
            return Err(Error::Malformed(format!("segments {other} and {k} share a band and a lane")));
        }
    }

    let n = path.points.len();
    let last = n - 1;
    let mut singular = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if path.points[i] == path.points[j] {
                singular.push((i, j));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = singular.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let key = |a: usize, b: usize| (a.max(b), a.min(b));
    let step = |x: usize, d: i64| -> Option<usize> {
        let y = x as i64 + d;
        if path.closed {
            Some(y.rem_euclid(n as i64) as usize)
        } else {
            (0..n as i64).contains(&y).then_some(y as usize)
        }
    };
    let mut uf: Vec<usize> = (0..singular.len()).collect();
    let mut edges = Vec::new();
    for (k, &(i, j)) in singular.iter().enumerate() {
        for di in [-1, 1] {
            for dj in [-1, 1] {
                let (Some(a), Some(b)) = (step(i, di), step(j, dj)) else { continue };
                if a == b {
                    continue;
                }
                if let Some(&l) = index.get(&key(a, b)) {
                    if k < l {
                        edges.push(((i, j), singular[l]));
                    }
                    let (ra, rb) = (find(&mut uf, k), find(&mut uf, l));
                    uf[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    edges.sort();
    edges.dedup();

    let cyclic_gap = |i: usize, j: usize| {
        let d = i - j;
        if path.closed {
            d.min(n - d)
        } else {
            d
        }
    };
    let marked = |&(i, j): &(usize, usize)| cyclic_gap(i, j) == 2 || (!path.closed && (j == 0 || i == last));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of: HashMap<usize, usize> = HashMap::new();
    for k in 0..singular.len() {
        let root = find(&mut uf, k);
        let g = *group_of.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(k);
    }
    groups.retain(|g| !g.iter().any(|&k| marked(&singular[k])));

    let interleave: Vec<bool> = singular.iter().map(|&(i, j)| chords_interleave(path, lanes, i, j)).collect();
    let obstruction = groups.iter().map(|g| g.iter().filter(|&&k| interleave[k]).count() % 2 == 1).collect();
    let components = groups.iter().map(|g| g.iter().map(|&k| singular[k]).collect()).collect();
    Ok(PathObstruction { singular, edges, components, interleave, obstruction })
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Position on the boundary circle of the disc around `at` where the lane of
/// segment `k` (whose other end is `to`) leaves the disc.
fn lane_key<'a>(at: &'a Point, to: &'a Point, lane: i64) -> (crate::geometry::Vector, i64) {
    let offset = if at < to { lane } else { -lane };
    (to.minus(at), offset)
}

fn key_cmp(a: &(crate::geometry::Vector, i64), b: &(crate::geometry::Vector, i64)) -> Ordering {
    angle_cmp(&a.0, &b.0).then(a.1.cmp(&b.1))
}

/// Whether the chords of passes `i` and `j` through their common image point
/// interleave. A pass at an end of an open path has no chord.
fn chords_interleave(path: &PlanePath, lanes: &[i64], i: usize, j: usize) -> bool {
    let n = path.points.len();
    let chord = |t: usize| -> Option<[(crate::geometry::Vector, i64); 2]> {
        if !path.closed && (t == 0 || t == n - 1) {
            return None;
        }
        let before = (t + n - 1) % n;
        let after = (t + 1) % n;
        let at = &path.points[t];
        Some([lane_key(at, &path.points[before], lanes[before]), lane_key(at, &path.points[after], lanes[t])])
    };
    let (Some(x), Some(y)) = (chord(i), chord(j)) else { return false };
    let (lo, hi) = if key_cmp(&x[0], &x[1]) == Ordering::Less { (&x[0], &x[1]) } else { (&x[1], &x[0]) };
    let inside =
        |p: &(crate::geometry::Vector, i64)| key_cmp(lo, p) == Ordering::Less && key_cmp(p, hi) == Ordering::Less;
    inside(&y[0]) != inside(&y[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn back_and_forth_is_approximable() {
        let p = PlanePath::open(pts(&[(0, 0), (1, 0), (0, 0)]));
        let o = path_obstruction(&p).unwrap();
        assert_eq!(o.singular, vec![(2, 0)]);
        assert_eq!(o.c(), 0);
        let p = PlanePath::open(pts(&[(0, 0), (1, 0), (2, 1)]));
        assert_eq!(path_obstruction(&p).unwrap().singular, vec![]);
    }

    #[test]
    fn degenerate_and_crossing_paths_rejected() {
        assert!(matches!(path_obstruction(&PlanePath::open(pts(&[(0, 0), (0, 0)]))), Err(Error::Domain(_))));
        let crossing = PlanePath::open(pts(&[(0, 0), (2, 2), (2, 0), (0, 2)]));
        assert!(matches!(path_obstruction(&crossing), Err(Error::Domain(_))));
        let overlapping = PlanePath::open(pts(&[(0, 0), (2, 0), (1, 0)]));
        assert!(path_obstruction(&overlapping).is_err());
    }

    #[test]
    fn lanes_must_be_distinct_within_a_band() {
        let p = PlanePath::open(pts(&[(0, 0), (1, 0), (0, 0)]));
        assert!(matches!(path_obstruction_with_layout(&p, &[3, 3]), Err(Error::Malformed(_))));
    }

    #[test]
    fn refinement_splits_every_traversal() {
        let p = PlanePath::open(pts(&[(0, 0), (2, 0), (0, 0)]));
        let r = p.refine(1);
        assert_eq!(r.points, pts(&[(0, 0), (1, 0), (2, 0), (1, 0), (0, 0)]));
        let c = PlanePath::closed(pts(&[(0, 0), (2, 0), (0, 2)]));
        assert_eq!(c.refine(2).points.len(), 4);
    }

    /// Two meadows joined by two trails, run around twice.
    fn double_circuit() -> PlanePath {
        PlanePath::closed(pts(&[(0, 0), (2, 1), (4, 0), (2, -1), (0, 0), (2, 1), (4, 0), (2, -1)]))
    }

    /// A path that doubles back on a stem and sweeps both sides of a fork.
    fn fork_path(p0: (i64, i64), p8: (i64, i64)) -> PlanePath {
        let (l, r, x, y) = ((0, 0), (2, 0), (3, 1), (3, -1));
        PlanePath::open(pts(&[p0, l, r, x, r, y, r, l, p8]))
    }

    #[test]
    fn double_circuit_is_obstructed() {
        let o = path_obstruction(&double_circuit()).unwrap();
        assert_eq!(o.singular, vec![(4, 0), (5, 1), (6, 2), (7, 3)]);
        assert_eq!(o.c(), 1);
        assert_eq!(o.obstruction, vec![true]);
    }

    #[test]
    fn fork_path_is_obstructed() {
        let o = path_obstruction(&fork_path((-1, -1), (-1, 1))).unwrap();
        assert_eq!(o.singular, vec![(4, 2), (6, 2), (6, 4), (7, 1)]);
        assert_eq!(o.components, vec![vec![(6, 2), (7, 1)]]);
        assert_eq!(o.obstruction, vec![true]);
    }

    #[test]
    fn obstruction_ignores_lane_layout() {
        for path in [double_circuit(), fork_path((-1, 1), (-1, -1)), fork_path((-1, -1), (-1, 1))] {
            let base = path_obstruction(&path).unwrap().obstruction;
            let m = path.segment_count() as i64;
            for seed in 0..40i64 {
                let lanes: Vec<i64> = (0..m)
                    .map(|k| (k * 7 + seed * 13) % 29 * if (k + seed) % 3 == 0 { -1 } else { 1 } + k * 100)
                    .collect();
                assert_eq!(path_obstruction_with_layout(&path, &lanes).unwrap().obstruction, base);
            }
        }
    }

    #[test]
    fn obstruction_survives_refinement() {
        for path in [double_circuit(), fork_path((-1, 1), (-1, -1))] {
            let base = path_obstruction(&path).unwrap();
            for k in 0..path.segment_count() {
                let fine = path_obstruction(&path.refine(k)).unwrap();
                assert_eq!((fine.c(), &fine.obstruction), (base.c(), &base.obstruction), "segment {k}");
            }
        }
    }
}
