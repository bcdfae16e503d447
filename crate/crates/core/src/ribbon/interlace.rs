//! Interlacement of off-tree edges along the boundary of a thickened
//! spanning tree.

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::graph::Dart;

use super::RotationSystem;

/// Interlacement matrix of a rotation system relative to its breadth-first
/// spanning tree. Row `i` belongs to off-tree edge `edges[i]`; the diagonal
/// holds the twist of that edge once the tree has been untwisted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interlacement {
    pub edges: Vec<usize>,
    /// Off-tree edges in the order their darts are met around the tree.
    pub word: Vec<usize>,
    pub matrix: Vec<BitVec>,
}

impl Interlacement {
    pub fn rank(&self) -> usize {
        gf2::rank(&self.matrix)
    }
}

/// Walk once around the boundary of the tree's thickening, starting at the
/// first dart of vertex 0, and record the off-tree darts met.
pub(crate) fn tree_word(r: &RotationSystem, in_tree: &[bool]) -> Vec<Dart> {
    let Some(&start) = r.rotation(0).first() else { return Vec::new() };
    let mut word = Vec::new();
    let mut d = start;
    loop {
        d = if in_tree[d.edge()] {
            r.succ(d.opposite())
        } else {
            word.push(d);
            r.succ(d)
        };
        if d == start {
            break;
        }
    }
    word
}

/// Symmetric matrix of pairs of edges alternating in a cyclic word in which
/// each edge occurs twice.
pub(crate) fn interlace_matrix(word: &[Dart], edges: &[usize], edge_count: usize) -> Vec<BitVec> {
    let mut row_of = vec![usize::MAX; edge_count];
    for (i, &e) in edges.iter().enumerate() {
        row_of[e] = i;
    }
    let mut first = vec![usize::MAX; edges.len()];
    let mut span = vec![(0, 0); edges.len()];
    for (pos, d) in word.iter().enumerate() {
        let i = row_of[d.edge()];
        if first[i] == usize::MAX {
            first[i] = pos;
        } else {
            span[i] = (first[i], pos);
        }
    }
    let b = edges.len();
    let mut m = vec![BitVec::zeros(b); b];
    for i in 0..b {
        for j in 0..i {
            let (p, q) = span[i];
            let inside = |x: usize| p < x && x < q;
            if inside(span[j].0) != inside(span[j].1) {
                m[i].set(j, true);
                m[j].set(i, true);
            }
        }
    }
    m
}

/// Interlacement matrix with the twists of off-tree edges on the diagonal.
/// Its rank is the Euler genus (twice the genus when orientable) of the
/// rotation system.
pub fn interlacement(r: &RotationSystem) -> Result<Interlacement> {
    let components = r.graph().components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    let r = r.untwist_forest();
    let forest = r.graph().spanning_forest();
    let edges = forest.off_tree_edges();
    let darts = tree_word(&r, &forest.in_tree);
    let mut matrix = interlace_matrix(&darts, &edges, r.graph().edge_count());
    for (i, &e) in edges.iter().enumerate() {
        matrix[i].set(i, r.is_twisted(e));
    }
    Ok(Interlacement { edges, word: darts.iter().map(|d| d.edge()).collect(), matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, Graph};

    #[test]
    fn hieroglyph_abab() {
        let g = Graph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let rot = vec![vec![Dart(0), Dart(2), Dart(1), Dart(3)]];
        let r = RotationSystem::new(g, rot, vec![false, false]).unwrap();
        let s = interlacement(&r).unwrap();
        assert_eq!(s.word, vec![0, 1, 0, 1]);
        assert_eq!(s.rank(), 2);
        assert_eq!(r.euler_genus(), 2);
    }

    #[test]
    fn rank_matches_traced_genus_on_k4() {
        let g = graph::complete(4);
        super::super::for_each_rotation(&g, |rot| {
            let r = RotationSystem::assemble(g.clone(), rot.to_vec(), vec![false; 6]);
            assert_eq!(interlacement(&r).unwrap().rank(), r.euler_genus());
            true
        });
    }

    #[test]
    fn word_visits_each_off_tree_dart_once() {
        let r = RotationSystem::standard(graph::petersen());
        let s = interlacement(&r).unwrap();
        assert_eq!(s.word.len(), 2 * s.edges.len());
        assert!(gf2::is_symmetric(&s.matrix));
    }
}
