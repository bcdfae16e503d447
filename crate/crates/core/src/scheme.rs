//! 2-schemes: a graph together with distinguished closed walks called faces.
//!
//! A scheme is the combinatorial presentation of a 2-dimensional polyhedron.
//! Faces may have length one or two and may run over the same edge several
//! times; nothing here assumes the result is a surface.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An edge traversed in a direction. `forward` goes from the edge's first
/// endpoint to its second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

impl Step {
    pub fn new(edge: usize, forward: bool) -> Step {
        Step { edge, forward }
    }

    pub fn reversed(self) -> Step {
        Step { edge: self.edge, forward: !self.forward }
    }

    pub fn tail(self, g: &Graph) -> usize {
        let (a, b) = g.endpoints(self.edge);
        if self.forward {
            a
        } else {
            b
        }
    }

    pub fn head(self, g: &Graph) -> usize {
        let (a, b) = g.endpoints(self.edge);
        if self.forward {
            b
        } else {
            a
        }
    }

    /// Side index (0 = first endpoint) of the edge end at the walk's tail.
    pub fn tail_side(self) -> usize {
        usize::from(!self.forward)
    }

    pub fn head_side(self) -> usize {
        usize::from(self.forward)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.edge, if self.forward { '+' } else { '-' })
    }
}

/// Location of one traversal of an edge by a face: `(face, position)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub face: usize,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scheme2 {
    graph: Graph,
    faces: Vec<Vec<Step>>,
}

impl Scheme2 {
    /// Validate that every face is a nonempty closed walk in `graph`.
    pub fn new(graph: Graph, faces: Vec<Vec<Step>>) -> Result<Scheme2> {
        for (fi, face) in faces.iter().enumerate() {
            if face.is_empty() {
                return Err(Error::Malformed(format!("face {fi} is empty")));
            }
            if let Some(s) = face.iter().find(|s| s.edge >= graph.edge_count()) {
                return Err(Error::Malformed(format!(
                    "face {fi} references edge {} but the graph has {} edges",
                    s.edge,
                    graph.edge_count()
                )));
            }
            for k in 0..face.len() {
                let (cur, next) = (face[k], face[(k + 1) % face.len()]);
                if cur.head(&graph) != next.tail(&graph) {
                    return Err(Error::Malformed(format!(
                        "face {fi} is not a closed walk: step {k} ({cur}) ends at vertex {} but step {} ({next}) starts at vertex {}",
                        cur.head(&graph),
                        (k + 1) % face.len(),
                        next.tail(&graph)
                    )));
                }
            }
        }
        Ok(Scheme2 { graph, faces })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[Vec<Step>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + self.faces.len() as i64
    }

    /// Every traversal of every edge, grouped by edge, in face order.
    pub fn slots_by_edge(&self) -> Vec<Vec<Slot>> {
        let mut out = vec![Vec::new(); self.graph.edge_count()];
        for (face, walk) in self.faces.iter().enumerate() {
            for (position, s) in walk.iter().enumerate() {
                out[s.edge].push(Slot { face, position });
            }
        }
        out
    }

    pub fn step(&self, slot: Slot) -> Step {
        self.faces[slot.face][slot.position]
    }

    /// Split an edge by a new vertex. The edge keeps its id for the first half;
    /// the second half gets id `E`, and every face traversal is rewritten.
    pub fn subdivide_edge(&self, edge: usize) -> Result<Scheme2> {
        let graph = self.graph.subdivide_edge(edge)?;
        let new_edge = self.graph.edge_count();
        let faces = self
            .faces
            .iter()
            .map(|walk| {
                walk.iter()
                    .flat_map(|&s| {
                        if s.edge != edge {
                            vec![s]
                        } else if s.forward {
                            vec![s, Step::new(new_edge, true)]
                        } else {
                            vec![Step::new(new_edge, false), s]
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Scheme2 { graph, faces })
    }

    /// Cut face `face` by a diagonal from the tail of step `i` to the tail of
    /// step `j` (`i < j`). The new edge has id `E`; the face keeps steps
    /// `i..j` and a new face with the remaining steps is appended.
    pub fn subdivide_face(&self, face: usize, i: usize, j: usize) -> Result<Scheme2> {
        let walk = self.faces.get(face).ok_or_else(|| Error::Malformed(format!("face {face} does not exist")))?;
        if !(i < j && j < walk.len()) {
            return Err(Error::Malformed(format!("diagonal positions must satisfy {i} < {j} < {}", walk.len())));
        }
        let from = walk[i].tail(&self.graph);
        let to = walk[j].tail(&self.graph);
        let mut edges = self.graph.edges().to_vec();
        let diagonal = edges.len();
        edges.push((from, to));
        let graph = Graph::new(self.graph.vertex_count(), edges)?;
        let mut first: Vec<Step> = walk[i..j].to_vec();
        first.push(Step::new(diagonal, false));
        let mut second: Vec<Step> = walk[j..].iter().chain(&walk[..i]).copied().collect();
        second.push(Step::new(diagonal, true));
        let mut faces = self.faces.clone();
        faces[face] = first;
        faces.push(second);
        Ok(Scheme2 { graph, faces })
    }

    /// The same scheme with one face deleted (cuts a hole).
    pub fn remove_face(&self, face: usize) -> Result<Scheme2> {
        if face >= self.faces.len() {
            return Err(Error::Malformed(format!("face {face} does not exist")));
        }
        let mut faces = self.faces.clone();
        faces.remove(face);
        Ok(Scheme2 { graph: self.graph.clone(), faces })
    }

    /// Reverse the direction of the selected faces.
    pub fn with_reversed_faces(&self, flips: &[bool]) -> Scheme2 {
        let faces = self
            .faces
            .iter()
            .zip(flips)
            .map(|(walk, &flip)| if flip { walk.iter().rev().map(|s| s.reversed()).collect() } else { walk.clone() })
            .collect();
        Scheme2 { graph: self.graph.clone(), faces }
    }
}

/// Parse a word like `"a b A B"` into steps: lowercase letters are forward
/// traversals, uppercase letters backward ones; edges are numbered by first
/// appearance of the letter.
pub fn polygon_word(word: &str) -> Result<Scheme2> {
    let mut letters: Vec<char> = Vec::new();
    let mut steps = Vec::new();
    for c in word.chars().filter(|c| !c.is_whitespace()) {
        if !c.is_ascii_alphabetic() {
            return Err(Error::Malformed(format!("unexpected character {c:?} in polygon word")));
        }
        let lower = c.to_ascii_lowercase();
        let edge = match letters.iter().position(|&l| l == lower) {
            Some(i) => i,
            None => {
                letters.push(lower);
                letters.len() - 1
            }
        };
        steps.push(Step::new(edge, c.is_ascii_lowercase()));
    }
    polygon_scheme(letters.len(), &[steps])
}

/// Build a scheme from faces given as words over `edge_count` edge labels by
/// identifying polygon corners: vertices are the classes of edge ends forced
/// together by consecutive steps.
pub fn polygon_scheme(edge_count: usize, faces: &[Vec<Step>]) -> Result<Scheme2> {
    // union-find over edge ends 2e (tail side) and 2e+1 (head side)
    let mut parent: Vec<usize> = (0..2 * edge_count).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let mut used = vec![false; edge_count];
    for walk in faces {
        for k in 0..walk.len() {
            let (cur, next) = (walk[k], walk[(k + 1) % walk.len()]);
            if cur.edge >= edge_count || next.edge >= edge_count {
                return Err(Error::BadEdge(cur.edge.max(next.edge)));
            }
            used[cur.edge] = true;
            let head_end = 2 * cur.edge + cur.head_side();
            let tail_end = 2 * next.edge + next.tail_side();
            let (x, y) = (find(&mut parent, head_end), find(&mut parent, tail_end));
            parent[x] = y;
        }
    }
    if let Some(e) = used.iter().position(|u| !u) {
        return Err(Error::Malformed(format!("edge {e} is not used by any face")));
    }
    let mut vertex_of_root = vec![usize::MAX; 2 * edge_count];
    let mut vertex_count = 0;
    let mut edges = Vec::with_capacity(edge_count);
    for e in 0..edge_count {
        let mut ends = [0; 2];
        for (side, end) in ends.iter_mut().enumerate() {
            let r = find(&mut parent, 2 * e + side);
            if vertex_of_root[r] == usize::MAX {
                vertex_of_root[r] = vertex_count;
                vertex_count += 1;
            }
            *end = vertex_of_root[r];
        }
        edges.push((ends[0], ends[1]));
    }
    Scheme2::new(Graph::new(vertex_count, edges)?, faces.to_vec())
}

/// Boundary of the tetrahedron: 4 vertices, 6 edges, 4 triangles.
pub fn tetrahedron_boundary() -> Scheme2 {
    let g = crate::graph::complete(4);
    // edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
    let f = |v: &[(usize, bool)]| v.iter().map(|&(e, d)| Step::new(e, d)).collect::<Vec<_>>();
    let faces = vec![
        f(&[(0, true), (3, true), (1, false)]),
        f(&[(0, false), (2, true), (4, false)]),
        f(&[(3, false), (4, true), (5, false)]),
        f(&[(1, true), (5, true), (2, false)]),
    ];
    Scheme2::new(g, faces).expect("tetrahedron faces are closed walks")
}

/// One-face scheme of the sphere with `g` handles: `a1 b1 A1 B1 a2 b2 A2 B2 ...`;
/// `g = 0` gives the two-edge-end word `a A`.
pub fn orientable_surface(genus: usize) -> Scheme2 {
    if genus == 0 {
        return polygon_word("aA").expect("valid word");
    }
    let mut steps = Vec::new();
    for h in 0..genus {
        let (a, b) = (2 * h, 2 * h + 1);
        steps.extend([Step::new(a, true), Step::new(b, true), Step::new(a, false), Step::new(b, false)]);
    }
    polygon_scheme(2 * genus, &[steps]).expect("valid surface word")
}

/// One-face scheme of the sphere with `m >= 1` cross-caps: `a1 a1 a2 a2 ...`.
pub fn nonorientable_surface(crosscaps: usize) -> Scheme2 {
    assert!(crosscaps >= 1, "a non-orientable surface has at least one cross-cap");
    let steps = (0..crosscaps).flat_map(|c| [Step::new(c, true), Step::new(c, true)]).collect::<Vec<_>>();
    polygon_scheme(crosscaps, &[steps]).expect("valid surface word")
}

/// Torus `a b A B`.
pub fn torus() -> Scheme2 {
    polygon_word("abAB").expect("valid word")
}

/// Klein bottle `a b A b`.
pub fn klein_bottle() -> Scheme2 {
    polygon_word("abAb").expect("valid word")
}

/// Projective plane as the square `a b a b` (two vertices, two edges).
pub fn projective_plane() -> Scheme2 {
    polygon_word("abab").expect("valid word")
}

/// Möbius band: the square `a b c b` whose vertical sides are both `b`,
/// glued so that the band is twisted. Boundary is the circle `a c`.
pub fn mobius_band() -> Scheme2 {
    let g = Graph::new(2, vec![(0, 1), (1, 0), (1, 0)]).expect("valid graph");
    let faces = vec![vec![Step::new(0, true), Step::new(1, true), Step::new(2, false), Step::new(1, true)]];
    Scheme2::new(g, faces).expect("mobius walk is closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(torus().euler_characteristic(), 0);
        assert_eq!(tetrahedron_boundary().euler_characteristic(), 2);
        assert_eq!(klein_bottle().euler_characteristic(), 0);
        assert_eq!(projective_plane().euler_characteristic(), 1);
        for g in 0..4 {
            assert_eq!(orientable_surface(g).euler_characteristic(), 2 - 2 * g as i64);
        }
        for m in 1..5 {
            assert_eq!(nonorientable_surface(m).euler_characteristic(), 2 - m as i64);
        }
        // sphere with two handles and one hole
        let punctured = orientable_surface(2).subdivide_face(0, 0, 4).unwrap().remove_face(1).unwrap();
        assert_eq!(punctured.euler_characteristic(), -3);
    }

    #[test]
    fn torus_word_has_one_vertex() {
        let t = torus();
        assert_eq!(t.graph().vertex_count(), 1);
        assert_eq!(t.graph().edge_count(), 2);
        let p = projective_plane();
        assert_eq!(p.graph().vertex_count(), 2);
    }

    #[test]
    fn open_walk_is_rejected() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let err = Scheme2::new(g, vec![vec![Step::new(0, true), Step::new(1, true)]]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn edge_subdivision_rewrites_faces() {
        let t = tetrahedron_boundary().subdivide_edge(0).unwrap();
        assert_eq!(t.graph().vertex_count(), 5);
        assert_eq!(t.faces()[0].len(), 4);
        assert_eq!(t.euler_characteristic(), 2);
        let mut s = torus();
        for e in [0, 1, 2, 0, 3] {
            s = s.subdivide_edge(e).unwrap();
            assert_eq!(s.euler_characteristic(), 0);
        }
    }

    #[test]
    fn face_subdivision_keeps_chi() {
        let t = torus().subdivide_face(0, 0, 2).unwrap();
        assert_eq!(t.face_count(), 2);
        assert_eq!(t.euler_characteristic(), 0);
    }
}
