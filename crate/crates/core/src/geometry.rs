//! Exact rational geometry in the plane and in space.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p`, `p/q` or a finite decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        return (!q.is_zero()).then(|| Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let whole: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().ok()?,
        };
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().ok()?;
        let magnitude = Rational::new(whole * &scale + frac, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point { x: integer(x), y: integer(y) }
    }

    pub fn minus(&self, other: &Point) -> Vector {
        Vector { x: &self.x - &other.x, y: &self.y - &other.y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// 0 for directions in `[0, pi)`, 1 for `[pi, 2pi)`.
    fn half(&self) -> u8 {
        u8::from(self.y.is_negative() || (self.y.is_zero() && self.x.is_negative()))
    }
}

/// Compare nonzero vectors by counterclockwise angle from the positive x-axis.
pub fn angle_cmp(u: &Vector, v: &Vector) -> Ordering {
    u.half().cmp(&v.half()).then_with(|| {
        let c = u.cross(v);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of the turn `a -> b -> c`: positive when counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    sign(&b.minus(a).cross(&c.minus(a)))
}

/// Whether `p`, known to be collinear with `a` and `b`, lies on the closed segment.
fn within(a: &Point, b: &Point, p: &Point) -> bool {
    let between = |s: &Rational, t: &Rational, u: &Rational| (s <= u && u <= t) || (t <= u && u <= s);
    between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}

pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == 0 && within(a, b, p)
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// A single transversal crossing interior to both segments.
    Crossing(Point),
    /// Any other contact: an endpoint on the other segment, or overlap.
    Touching,
}

pub fn segment_contact(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Contact {
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let d = p2.minus(p1);
        let e = q2.minus(q1);
        let t = q1.minus(p1).cross(&e) / d.cross(&e);
        return Contact::Crossing(Point::new(&p1.x + &t * &d.x, &p1.y + &t * &d.y));
    }
    let touching = (o1 == 0 && within(p1, p2, q1))
        || (o2 == 0 && within(p1, p2, q2))
        || (o3 == 0 && within(q1, q2, p1))
        || (o4 == 0 && within(q1, q2, p2));
    if touching {
        Contact::Touching
    } else {
        Contact::Disjoint
    }
}

/// Two segments sharing the endpoint `p` (other ends `a`, `b`) meet only at
/// `p` unless they run along each other.
pub fn overlap_at_shared_end(p: &Point, a: &Point, b: &Point) -> bool {
    orient(p, a, b) == 0 && a.minus(p).dot(&b.minus(p)).is_positive()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Point3 {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Point3 {
        Point3 { x: integer(x), y: integer(y), z: integer(z) }
    }

    pub fn minus(&self, o: &Point3) -> [Rational; 3] {
        [&self.x - &o.x, &self.y - &o.y, &self.z - &o.z]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", format_rational(&self.x), format_rational(&self.y), format_rational(&self.z))
    }
}

pub fn det3(u: &[Rational; 3], v: &[Rational; 3], w: &[Rational; 3]) -> Rational {
    &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0])
}

/// Sign of the volume of the tetrahedron `abcd`.
pub fn orient3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> i8 {
    sign(&det3(&b.minus(a), &c.minus(a), &d.minus(a)))
}

/// Whether the closed segments `pq` and `rs` in space share a point.
pub fn segments_meet_3d(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> bool {
    if orient3d(p, q, r, s) != 0 {
        return false;
    }
    // coplanar: project onto a coordinate plane where the plane is not vertical
    let n = cross3(&q.minus(p), &r.minus(p));
    let n = if n.iter().all(Zero::is_zero) { cross3(&q.minus(p), &s.minus(p)) } else { n };
    let n = if n.iter().all(Zero::is_zero) { cross3(&s.minus(r), &p.minus(r)) } else { n };
    let drop = if n.iter().all(Zero::is_zero) {
        // all four points collinear: any projection preserving the line works
        let d = if p != q { q.minus(p) } else { s.minus(r) };
        (0..3).max_by_key(|&i| d[i].is_zero()).unwrap_or(2)
    } else {
        (0..3).find(|&i| !n[i].is_zero()).expect("nonzero normal")
    };
    let flat = |a: &Point3| {
        let c = [a.x.clone(), a.y.clone(), a.z.clone()];
        let keep: Vec<Rational> = (0..3).filter(|&i| i != drop).map(|i| c[i].clone()).collect();
        Point::new(keep[0].clone(), keep[1].clone())
    };
    let (p2, q2, r2, s2) = (flat(p), flat(q), flat(r), flat(s));
    if p2 == q2 {
        return on_segment(&r2, &s2, &p2) && p3_on(r, s, p);
    }
    if r2 == s2 {
        return on_segment(&p2, &q2, &r2) && p3_on(p, q, r);
    }
    segment_contact(&p2, &q2, &r2, &s2) != Contact::Disjoint
}

fn p3_on(a: &Point3, b: &Point3, p: &Point3) -> bool {
    cross3(&b.minus(a), &p.minus(a)).iter().all(Zero::is_zero)
        && [(&a.x, &b.x, &p.x), (&a.y, &b.y, &p.y), (&a.z, &b.z, &p.z)]
            .iter()
            .all(|(s, t, u)| (s <= u && u <= t) || (t <= u && u <= s))
}

pub fn cross3(u: &[Rational; 3], v: &[Rational; 3]) -> [Rational; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3"), Some(integer(3)));
        assert_eq!(parse_rational("-6/4"), Some(rational(-3, 2)));
        assert_eq!(parse_rational("-1.25"), Some(rational(-5, 4)));
        assert_eq!(parse_rational("-0.5"), Some(rational(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&rational(6, -4)), "-3/2");
    }

    #[test]
    fn contacts() {
        assert_eq!(segment_contact(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), Contact::Crossing(p(1, 1)));
        assert_eq!(segment_contact(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)), Contact::Touching);
        assert_eq!(segment_contact(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)), Contact::Touching);
        assert_eq!(segment_contact(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)), Contact::Disjoint);
        assert_eq!(segment_contact(&p(0, 0), &p(1, 1), &p(0, 1), &p(-1, 5)), Contact::Disjoint);
    }

    #[test]
    fn angles_sort_counterclockwise() {
        let mut dirs = vec![p(0, -1), p(-1, 0), p(1, 0), p(0, 1), p(1, 1), p(-1, -1)];
        let o = p(0, 0);
        dirs.sort_by(|a, b| angle_cmp(&a.minus(&o), &b.minus(&o)));
        assert_eq!(dirs, vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(-1, -1), p(0, -1)]);
    }

    #[test]
    fn space_segments() {
        let q = |x, y, z| Point3::from_ints(x, y, z);
        assert!(segments_meet_3d(&q(0, 0, 0), &q(2, 0, 0), &q(1, -1, 0), &q(1, 1, 0)));
        assert!(!segments_meet_3d(&q(0, 0, 0), &q(2, 0, 0), &q(1, -1, 1), &q(1, 1, 1)));
        assert!(segments_meet_3d(&q(0, 0, 0), &q(2, 2, 2), &q(1, 1, 1), &q(3, 3, 3)));
        assert!(!segments_meet_3d(&q(0, 0, 0), &q(1, 1, 1), &q(2, 2, 2), &q(3, 3, 3)));
        assert_eq!(orient3d(&q(0, 0, 0), &q(1, 0, 0), &q(0, 1, 0), &q(0, 0, 1)), 1);
    }
}
