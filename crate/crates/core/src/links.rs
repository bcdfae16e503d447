//! Linking numbers of two disjoint closed polygons in space.
//!
//! The primary computation projects along a generic direction `(p, q, 1)` and
//! sums the signs of crossings where the first curve passes over the second.
//! An independent count intersects the second curve with the cone from an
//! apex over the first.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    cross3, det3, integer, orient3d, segment_contact, segments_meet_3d, Contact, Point, Point3, Rational,
};

/// Two closed polygons, each a cyclic list of at least three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyLink {
    curves: [Vec<Point3>; 2],
}

fn segments(curve: &[Point3]) -> impl Iterator<Item = (usize, &Point3, &Point3)> {
    (0..curve.len()).map(move |i| (i, &curve[i], &curve[(i + 1) % curve.len()]))
}

/// Whether neighbouring segments `a -> p` and `p -> b` meet only at `p`.
fn turns_cleanly(a: &Point3, p: &Point3, b: &Point3) -> bool {
    let u = a.minus(p);
    let v = b.minus(p);
    let parallel = cross3(&u, &v).iter().all(Zero::is_zero);
    let dot = &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2];
    !(parallel && dot.is_positive())
}

fn check_simple(curve: &[Point3], which: usize) -> Result<()> {
    let n = curve.len();
    if n < 3 {
        return Err(Error::Malformed(format!("curve {which} has {n} vertices; a closed polygon needs at least 3")));
    }
    for (i, a, b) in segments(curve) {
        if a == b {
            return Err(Error::Domain(format!("curve {which}: segment {i} is degenerate")));
        }
        if !turns_cleanly(a, b, &curve[(i + 2) % n]) {
            return Err(Error::Domain(format!("curve {which} doubles back at vertex {}", (i + 1) % n)));
        }
    }
    for (i, a, b) in segments(curve) {
        for (j, c, d) in segments(curve).skip(i + 2) {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_meet_3d(a, b, c, d) {
                return Err(Error::Domain(format!("curve {which} is not simple: segments {i} and {j} meet")));
            }
        }
    }
    Ok(())
}

impl PolyLink {
    pub fn new(first: Vec<Point3>, second: Vec<Point3>) -> Result<PolyLink> {
        check_simple(&first, 0)?;
        check_simple(&second, 1)?;
        for (i, a, b) in segments(&first) {
            for (j, c, d) in segments(&second) {
                if segments_meet_3d(a, b, c, d) {
                    return Err(Error::Domain(format!(
                        "curves meet: segment {i} of curve 0 and segment {j} of curve 1"
                    )));
                }
            }
        }
        Ok(PolyLink { curves: [first, second] })
    }

    pub fn curve(&self, which: usize) -> &[Point3] {
        &self.curves[which]
    }

    pub fn swapped(&self) -> PolyLink {
        PolyLink { curves: [self.curves[1].clone(), self.curves[0].clone()] }
    }

    /// The same link with curve `which` traversed backwards.
    pub fn reversed(&self, which: usize) -> PolyLink {
        let mut l = self.clone();
        l.curves[which].reverse();
        l
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    pub value: i64,
    /// Shear `(p, q)` of the projection direction `(p, q, 1)` used.
    pub direction: (Rational, Rational),
}

impl Linking {
    pub fn mod2(&self) -> u8 {
        (self.value.rem_euclid(2)) as u8
    }
}

fn project(x: &Point3, p: &Rational, q: &Rational) -> Point {
    Point::new(&x.x - p * &x.z, &x.y - q * &x.z)
}

/// Signed count of crossings of the first curve over the second, projecting
/// along `(p, q, 1)` and viewing from positive height. A crossing counts `+1`
/// when the under strand points counterclockwise from the over strand.
/// Fails with `GeneralPosition` when the projection is not generic.
pub fn linking_number_along(l: &PolyLink, p: &Rational, q: &Rational) -> Result<i64> {
    let flat = |c: &[Point3]| c.iter().map(|x| project(x, p, q)).collect::<Vec<_>>();
    let (fa, fb) = (flat(&l.curves[0]), flat(&l.curves[1]));
    let mut total = 0i64;
    for (i, a0, a1) in segments(&l.curves[0]) {
        let (pa0, pa1) = (&fa[i], &fa[(i + 1) % fa.len()]);
        if pa0 == pa1 {
            return Err(Error::GeneralPosition(format!("segment {i} of curve 0 projects to a point")));
        }
        for (j, b0, b1) in segments(&l.curves[1]) {
            let (pb0, pb1) = (&fb[j], &fb[(j + 1) % fb.len()]);
            if pb0 == pb1 {
                return Err(Error::GeneralPosition(format!("segment {j} of curve 1 projects to a point")));
            }
            match segment_contact(pa0, pa1, pb0, pb1) {
                Contact::Disjoint => {}
                Contact::Touching => {
                    return Err(Error::GeneralPosition(format!(
                        "projections of segment {i} of curve 0 and segment {j} of curve 1 touch"
                    )))
                }
                Contact::Crossing(_) => {
                    let da = pa1.minus(pa0);
                    let db = pb1.minus(pb0);
                    let w = pb0.minus(pa0);
                    let denom = da.cross(&db);
                    let t = w.cross(&db) / &denom;
                    let s = w.cross(&da) / &denom;
                    let za = &a0.z + &t * (&a1.z - &a0.z);
                    let zb = &b0.z + &s * (&b1.z - &b0.z);
                    if za > zb {
                        total += if denom.is_positive() { 1 } else { -1 };
                    }
                }
            }
        }
    }
    Ok(total)
}

/// Candidate shears `(k, k^2)` for `k = 0, 1, -1, 2, -2, ..`. A non-generic
/// direction lies on one of finitely many lines of the shear plane, and a
/// parabola meets each line at most twice, so a generic one comes soon.
fn candidate_shears() -> impl Iterator<Item = (Rational, Rational)> {
    (0i64..).map(|i| {
        let k = if i % 2 == 1 { (i + 1) / 2 } else { -i / 2 };
        (integer(k), integer(k * k))
    })
}

fn search_limit(l: &PolyLink) -> usize {
    let (n, m) = (l.curves[0].len(), l.curves[1].len());
    8 * (n + m) * (n + m) + 16
}

/// Integer linking number along the first generic direction found.
pub fn linking_number(l: &PolyLink) -> Result<Linking> {
    generic_directions(l, 1)?.into_iter().next().ok_or_else(unreachable_search)
}

fn unreachable_search() -> Error {
    Error::GeneralPosition("no generic projection found; this contradicts exact input".into())
}

/// Linking numbers along the first `count` generic directions.
pub fn generic_directions(l: &PolyLink, count: usize) -> Result<Vec<Linking>> {
    let mut out = Vec::with_capacity(count);
    for (p, q) in candidate_shears().take(search_limit(l) + 2 * count) {
        if out.len() == count {
            break;
        }
        match linking_number_along(l, &p, &q) {
            Ok(value) => out.push(Linking { value, direction: (p, q) }),
            Err(Error::GeneralPosition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if out.len() < count {
        return Err(unreachable_search());
    }
    Ok(out)
}

/// Signed intersection count of the second curve with the cone over the
/// first from `apex`: triangles `(apex, a_i, a_{i+1})`. Fails with
/// `GeneralPosition` when the second curve touches a triangle anywhere but
/// in a transversal interior crossing, or a triangle is flat.
pub fn cone_intersections(l: &PolyLink, apex: &Point3) -> Result<i64> {
    let mut total = 0;
    for (i, a, b) in segments(&l.curves[0]) {
        let normal = cross3(&a.minus(apex), &b.minus(apex));
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::GeneralPosition(format!("cone triangle {i} is flat")));
        }
        for (j, s, t) in segments(&l.curves[1]) {
            let os = orient3d(apex, a, b, s);
            let ot = orient3d(apex, a, b, t);
            if os == 0 || ot == 0 {
                if segment_meets_triangle(s, t, apex, a, b) {
                    return Err(Error::GeneralPosition(format!("segment {j} of curve 1 touches cone triangle {i}")));
                }
                continue;
            }
            if os == ot {
                continue;
            }
            let sides = [orient3d(s, t, apex, a), orient3d(s, t, a, b), orient3d(s, t, b, apex)];
            if sides.contains(&1) && sides.contains(&-1) {
                continue;
            }
            if sides.contains(&0) {
                return Err(Error::GeneralPosition(format!(
                    "segment {j} of curve 1 meets an edge of cone triangle {i}"
                )));
            }
            total += i64::from(ot);
        }
    }
    Ok(total)
}

/// Cone count from the first apex on the moment curve `(k, k^2, k^3)` that
/// is in general position.
pub fn cone_count(l: &PolyLink) -> Result<i64> {
    for k in 0..search_limit(l) as i64 * 2 {
        let k = k + 7;
        let apex = Point3::from_ints(k, k * k, k * k * k);
        match cone_intersections(l, &apex) {
            Err(Error::GeneralPosition(_)) => continue,
            other => return other,
        }
    }
    Err(unreachable_search())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Insert `at` (a fraction strictly between 0 and 1) along a segment.
    Subdivide { curve: usize, segment: usize, at: Rational },
    /// Slide a vertex along a straight line to a new position.
    Perturb { curve: usize, vertex: usize, to: Point3 },
}

/// Apply the moves in order, checking that each is an isotopy of the link
/// and that the linking number never changes. A move that would pass one
/// curve through the other or break simplicity is rejected with its index.
pub fn isotopy_moves_check(l: &PolyLink, moves: &[Move]) -> Result<bool> {
    let start = linking_number(l)?.value;
    let mut current = l.clone();
    let mut constant = true;
    for (index, m) in moves.iter().enumerate() {
        let reject = |reason: String| Error::MoveRejected { index, reason };
        let mut curves = current.curves.clone();
        match m {
            Move::Subdivide { curve, segment, at } => {
                let c = curves.get_mut(*curve).ok_or_else(|| reject(format!("no curve {curve}")))?;
                if *segment >= c.len() || !at.is_positive() || *at >= integer(1) {
                    return Err(reject("subdivision point outside the segment".into()));
                }
                let a = &c[*segment];
                let b = &c[(segment + 1) % c.len()];
                let x = Point3::new(&a.x + at * (&b.x - &a.x), &a.y + at * (&b.y - &a.y), &a.z + at * (&b.z - &a.z));
                c.insert(segment + 1, x);
            }
            Move::Perturb { curve, vertex, to } => {
                let c = curves.get(*curve).ok_or_else(|| reject(format!("no curve {curve}")))?;
                let n = c.len();
                if *vertex >= n {
                    return Err(reject(format!("no vertex {vertex}")));
                }
                let from = &c[*vertex];
                let prev = &c[(vertex + n - 1) % n];
                let next = &c[(vertex + 1) % n];
                let other = &current.curves[1 - curve];
                for (j, s, t) in segments(other) {
                    if segment_meets_triangle(s, t, prev, from, to) || segment_meets_triangle(s, t, next, from, to) {
                        return Err(reject(format!("the sweep passes through segment {j} of the other curve")));
                    }
                }
                curves[*curve][*vertex] = to.clone();
            }
        }
        let [a, b] = curves;
        current = PolyLink::new(a, b).map_err(|e| reject(e.to_string()))?;
        constant &= linking_number(&current)?.value == start;
    }
    Ok(constant)
}

/// Whether the closed segment `st` meets the closed triangle `abc`.
fn segment_meets_triangle(s: &Point3, t: &Point3, a: &Point3, b: &Point3, c: &Point3) -> bool {
    let normal = cross3(&b.minus(a), &c.minus(a));
    if normal.iter().all(Zero::is_zero) {
        return segments_meet_3d(s, t, a, b) || segments_meet_3d(s, t, b, c) || segments_meet_3d(s, t, a, c);
    }
    let vs = det3(&b.minus(a), &c.minus(a), &s.minus(a));
    let vt = det3(&b.minus(a), &c.minus(a), &t.minus(a));
    if (vs.is_positive() && vt.is_positive()) || (vs.is_negative() && vt.is_negative()) {
        return false;
    }
    let drop = (0..3).find(|&i| !normal[i].is_zero()).expect("nonzero normal");
    let flat = |x: &Point3| {
        let c = [&x.x, &x.y, &x.z];
        let keep: Vec<Rational> = (0..3).filter(|&i| i != drop).map(|i| c[i].clone()).collect();
        Point::new(keep[0].clone(), keep[1].clone())
    };
    let (fa, fb, fc) = (flat(a), flat(b), flat(c));
    let inside = |p: &Point| {
        let o = [
            crate::geometry::orient(&fa, &fb, p),
            crate::geometry::orient(&fb, &fc, p),
            crate::geometry::orient(&fc, &fa, p),
        ];
        !(o.contains(&1) && o.contains(&-1))
    };
    if vs.is_zero() && vt.is_zero() {
        let (fs, ft) = (flat(s), flat(t));
        return inside(&fs)
            || inside(&ft)
            || [(&fa, &fb), (&fb, &fc), (&fc, &fa)]
                .iter()
                .any(|(u, v)| segment_contact(&fs, &ft, u, v) != Contact::Disjoint);
    }
    let r = &vs / (&vs - &vt);
    let x = Point3::new(&s.x + &r * (&t.x - &s.x), &s.y + &r * (&t.y - &s.y), &s.z + &r * (&t.z - &s.z));
    inside(&flat(&x))
}

/// Two interlocked unit squares in orthogonal planes.
pub fn hopf_link() -> PolyLink {
    let sq = |pts: [(i64, i64, i64); 4]| pts.iter().map(|&(x, y, z)| Point3::from_ints(x, y, z)).collect();
    PolyLink::new(sq([(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0)]), sq([(1, 1, -1), (1, 1, 1), (1, 3, 1), (1, 3, -1)]))
        .expect("fixture is a valid link")
}

/// Two disjoint unit squares in one plane.
pub fn unlink() -> PolyLink {
    let sq = |dx: i64| (0..4).map(|i| Point3::from_ints(dx + [0, 1, 1, 0][i], [0, 0, 1, 1][i], 0)).collect();
    PolyLink::new(sq(0), sq(3)).expect("fixture is a valid link")
}
