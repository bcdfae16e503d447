//! Rotation systems (thickenings of graphs): face tracing, the surface of a
//! thickening, genus by exhaustion and by interlacement rank, and counts.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Dart, Graph};
use crate::surfaces::SurfaceClass;

mod classes;
mod genus;
mod interlace;

pub use classes::{count_thickenings, oriented_thickening_classes, CountMode, ThickeningClass};
pub use genus::{
    euler_genus_lower_bound, for_each_rotation, genus_exhaustive, mohar_genus, search_space, GenusWitness,
    DEFAULT_BUDGET,
};
pub use interlace::{interlacement, Interlacement};

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge(), self.side())
    }
}

/// A cyclic order of darts at every vertex plus a twist bit per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<Dart>>,
    twist: Vec<bool>,
    succ: Vec<Dart>,
    pred: Vec<Dart>,
}

impl RotationSystem {
    pub fn new(graph: Graph, rotation: Vec<Vec<Dart>>, twist: Vec<bool>) -> Result<RotationSystem> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::Malformed(format!(
                "{} vertex rotations given for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        if twist.len() != graph.edge_count() {
            return Err(Error::Malformed(format!("{} twist bits for {} edges", twist.len(), graph.edge_count())));
        }
        let mut seen = vec![false; graph.dart_count()];
        for (v, rot) in rotation.iter().enumerate() {
            for &d in rot {
                if d.0 >= seen.len() {
                    return Err(Error::Malformed(format!("dart {d} at vertex {v} does not exist")));
                }
                if graph.dart_vertex(d) != v {
                    return Err(Error::Malformed(format!("dart {d} is listed at vertex {v} but belongs elsewhere")));
                }
                if std::mem::replace(&mut seen[d.0], true) {
                    return Err(Error::Malformed(format!("dart {d} appears twice")));
                }
            }
        }
        if let Some(d) = seen.iter().position(|&s| !s) {
            return Err(Error::Malformed(format!("dart {} is missing from the rotation", Dart(d))));
        }
        Ok(Self::assemble(graph, rotation, twist))
    }

    pub(crate) fn assemble(graph: Graph, rotation: Vec<Vec<Dart>>, twist: Vec<bool>) -> RotationSystem {
        let n = graph.dart_count();
        let mut succ = vec![Dart(0); n];
        let mut pred = vec![Dart(0); n];
        for rot in &rotation {
            for (i, &d) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                succ[d.0] = next;
                pred[next.0] = d;
            }
        }
        RotationSystem { graph, rotation, twist, succ, pred }
    }

    /// Darts in increasing order at every vertex, nothing twisted.
    pub fn standard(graph: Graph) -> RotationSystem {
        let rotation = graph.darts_by_vertex();
        let twist = vec![false; graph.edge_count()];
        Self::assemble(graph, rotation, twist)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn twists(&self) -> &[bool] {
        &self.twist
    }

    pub fn is_twisted(&self, edge: usize) -> bool {
        self.twist[edge]
    }

    pub fn has_twists(&self) -> bool {
        self.twist.iter().any(|&t| t)
    }

    pub fn succ(&self, d: Dart) -> Dart {
        self.succ[d.0]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        self.pred[d.0]
    }

    pub fn with_twists(&self, twist: Vec<bool>) -> Result<RotationSystem> {
        RotationSystem::new(self.graph.clone(), self.rotation.clone(), twist)
    }

    /// Turn the disc at `v` over: reverse its rotation and toggle the twist of
    /// every non-loop edge at `v`. The thickened surface is unchanged.
    pub fn switch_vertex(&self, v: usize) -> RotationSystem {
        let mut rotation = self.rotation.clone();
        rotation[v].reverse();
        let mut twist = self.twist.clone();
        for (e, &(a, b)) in self.graph.edges().iter().enumerate() {
            if (a == v) != (b == v) {
                twist[e] ^= true;
            }
        }
        Self::assemble(self.graph.clone(), rotation, twist)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> RotationSystem {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Self::assemble(self.graph.clone(), rotation, self.twist.clone())
    }

    /// Switch vertices along a breadth-first spanning forest so that every
    /// tree edge becomes untwisted.
    pub fn untwist_forest(&self) -> RotationSystem {
        let forest = self.graph.spanning_forest();
        let mut r = self.clone();
        for &v in &forest.order {
            if let Some(e) = forest.parent_edge[v] {
                if r.twist[e] {
                    r = r.switch_vertex(v);
                }
            }
        }
        r
    }

    /// Whether the twists are a coboundary, i.e. the thickening is orientable.
    pub fn is_orientable(&self) -> bool {
        !self.untwist_forest().has_twists()
    }

    /// Successor state of the boundary walk. A state is a dart about to be
    /// traversed together with the side flag accumulated from twisted bands.
    fn next_state(&self, d: Dart, flipped: bool) -> (Dart, bool) {
        let arrive = d.opposite();
        let flipped = flipped ^ self.twist[d.edge()];
        let next = if flipped { self.pred(arrive) } else { self.succ(arrive) };
        (next, flipped)
    }

    /// The same band side walked in the opposite direction.
    fn mirror_state(&self, d: Dart, flipped: bool) -> (Dart, bool) {
        (d.opposite(), !(flipped ^ self.twist[d.edge()]))
    }

    /// Boundary circuits of the thickened surface. Each circuit lists the darts
    /// left through, in walking order; an isolated vertex gives an empty circuit.
    pub fn trace_faces(&self) -> FaceTrace {
        let n = self.graph.dart_count();
        let index = |d: Dart, f: bool| 2 * d.0 + usize::from(f);
        let mut seen = vec![false; 2 * n];
        let mut circuits = Vec::new();
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            let first = (Dart(start / 2), start % 2 == 1);
            let mut state = first;
            let mut circuit = Vec::new();
            loop {
                seen[index(state.0, state.1)] = true;
                let (md, mf) = self.mirror_state(state.0, state.1);
                seen[index(md, mf)] = true;
                circuit.push(state.0);
                state = self.next_state(state.0, state.1);
                if state == first {
                    break;
                }
            }
            circuits.push(circuit);
        }
        circuits.extend(self.rotation.iter().filter(|r| r.is_empty()).map(|_| Vec::new()));
        FaceTrace { circuits }
    }

    /// Number of boundary circuits, without recording them.
    pub fn face_count(&self) -> usize {
        let n = self.graph.dart_count();
        let mut seen = vec![false; 2 * n];
        let mut count = self.rotation.iter().filter(|r| r.is_empty()).count();
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            count += 1;
            let first = (Dart(start / 2), start % 2 == 1);
            let mut state = first;
            loop {
                seen[2 * state.0 .0 + usize::from(state.1)] = true;
                let (md, mf) = self.mirror_state(state.0, state.1);
                seen[2 * md.0 + usize::from(mf)] = true;
                state = self.next_state(state.0, state.1);
                if state == first {
                    break;
                }
            }
        }
        count
    }

    /// `V - E`: the thickening retracts onto the graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64
    }

    /// `2 - chi - h` of the closed surface obtained by capping the boundary:
    /// twice the genus when orientable, the cross-cap number otherwise.
    pub fn euler_genus(&self) -> usize {
        (2 - self.euler_characteristic() - self.face_count() as i64) as usize
    }

    /// The surface with boundary obtained by thickening.
    pub fn surface(&self) -> Result<SurfaceClass> {
        let components = self.graph.components().count;
        if components != 1 {
            return Err(Error::Disconnected(components));
        }
        SurfaceClass::from_invariants(self.is_orientable(), self.euler_characteristic(), self.face_count())
    }
}

/// Boundary circuits of a thickening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTrace {
    pub circuits: Vec<Vec<Dart>>,
}

impl FaceTrace {
    pub fn count(&self) -> usize {
        self.circuits.len()
    }

    pub fn total_length(&self) -> usize {
        self.circuits.iter().map(Vec::len).sum()
    }
}

pub fn trace_faces(r: &RotationSystem) -> FaceTrace {
    r.trace_faces()
}

pub fn thickening_surface(r: &RotationSystem) -> Result<SurfaceClass> {
    r.surface()
}

/// `V - E + h = 2` for a connected untwisted rotation system.
pub fn is_planar_rotation(r: &RotationSystem) -> Result<bool> {
    if r.has_twists() {
        return Err(Error::Domain("planarity is defined for untwisted rotation systems".into()));
    }
    let components = r.graph().components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    Ok(r.euler_characteristic() + r.face_count() as i64 == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn one_vertex(word: &[usize], twisted: &[usize]) -> RotationSystem {
        // word lists loop ids in rotation order; first occurrence is side 0
        let loops = word.iter().max().map_or(0, |m| m + 1);
        let g = Graph::new(1, vec![(0, 0); loops]).unwrap();
        let mut seen = vec![false; loops];
        let rot = word
            .iter()
            .map(|&e| {
                let side = usize::from(std::mem::replace(&mut seen[e], true));
                Dart::new(e, side)
            })
            .collect();
        let mut twist = vec![false; loops];
        for &e in twisted {
            twist[e] = true;
        }
        RotationSystem::new(g, vec![rot], twist).unwrap()
    }

    #[test]
    fn annulus_and_mobius() {
        assert_eq!(one_vertex(&[0, 0], &[]).face_count(), 2);
        assert_eq!(one_vertex(&[0, 0], &[0]).face_count(), 1);
        let m = one_vertex(&[0, 0], &[0]).surface().unwrap();
        assert_eq!((m.orientable, m.genus, m.boundary), (false, 1, 1));
    }

    #[test]
    fn interleaved_loops() {
        let t = one_vertex(&[0, 1, 0, 1], &[]).surface().unwrap();
        assert_eq!((t.orientable, t.genus, t.boundary), (true, 1, 1));
        let t2 = one_vertex(&[0, 1, 2, 0, 1, 2], &[]).surface().unwrap();
        assert_eq!((t2.orientable, t2.genus, t2.boundary), (true, 1, 2));
        let k = one_vertex(&[0, 0, 1, 1], &[0, 1]).surface().unwrap();
        assert_eq!((k.orientable, k.genus, k.boundary), (false, 2, 1));
    }

    #[test]
    fn circuits_use_every_band_side_once() {
        let r = RotationSystem::standard(graph::complete(5));
        let trace = r.trace_faces();
        assert_eq!(trace.total_length(), 2 * 10);
        assert_eq!(trace.count(), r.face_count());
    }

    #[test]
    fn isolated_vertex_is_a_disc() {
        let r = RotationSystem::standard(Graph::empty(1));
        assert_eq!(r.trace_faces().circuits, vec![Vec::<Dart>::new()]);
        assert!(is_planar_rotation(&r).unwrap());
    }

    #[test]
    fn switching_preserves_the_surface() {
        let g = graph::complete(4);
        let r = RotationSystem::standard(g).with_twists(vec![true, false, true, false, false, true]).unwrap();
        let s = r.switch_vertex(2);
        assert_eq!(r.face_count(), s.face_count());
        assert_eq!(r.is_orientable(), s.is_orientable());
        assert!(!r.untwist_forest().twists()[..3].iter().any(|&t| t));
    }

    #[test]
    fn twisted_planar_check_is_domain_error() {
        let r = one_vertex(&[0, 0], &[0]);
        assert!(matches!(is_planar_rotation(&r), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_bad_rotations() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        assert!(RotationSystem::new(g.clone(), vec![vec![Dart(1)], vec![Dart(0)]], vec![false]).is_err());
        assert!(RotationSystem::new(g.clone(), vec![vec![Dart(0)], vec![]], vec![false]).is_err());
        assert!(RotationSystem::new(g, vec![vec![Dart(0)], vec![Dart(1)]], vec![false]).is_ok());
    }
}
