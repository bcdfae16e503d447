//! Double covers as Z2 edge labelings.
//!
//! A label of one on an edge means its two lifts join opposite sheets.
//! Renaming the sheets over a vertex set `S` flips exactly the labels on
//! edges with one end in `S`, so covers are equivalent when their labelings
//! differ by such a cut.

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec, EchelonBasis};
use crate::graph::Graph;
use crate::scheme::Scheme2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover {
    base: Graph,
    labels: BitVec,
}

impl DoubleCover {
    pub fn new(base: Graph, labels: Vec<bool>) -> Result<DoubleCover> {
        if labels.len() != base.edge_count() {
            return Err(Error::Malformed(format!("{} labels for {} edges", labels.len(), base.edge_count())));
        }
        Ok(DoubleCover { labels: BitVec::from_bools(&labels), base })
    }

    pub fn trivial(base: Graph) -> DoubleCover {
        DoubleCover { labels: BitVec::zeros(base.edge_count()), base }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn labels(&self) -> &BitVec {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> bool {
        self.labels.get(edge)
    }

    /// Parity of labeled edges along a cycle given as an edge mask.
    pub fn evaluate(&self, cycle: &[bool]) -> bool {
        cycle.iter().enumerate().filter(|&(e, &on)| on && self.labels.get(e)).count() % 2 == 1
    }

    /// The cover whose deck involution is the composite of the two: labels add.
    pub fn compose(&self, other: &DoubleCover) -> Result<DoubleCover> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        Ok(DoubleCover { base: self.base.clone(), labels: self.labels.xor(&other.labels) })
    }

    /// The covering graph: vertex `v` lifts to `v` and `v + V`, and each edge
    /// to two edges (`e` on sheet 0 first).
    pub fn lift(&self) -> Graph {
        let n = self.base.vertex_count();
        let mut edges = Vec::with_capacity(2 * self.base.edge_count());
        for (e, &(a, b)) in self.base.edges().iter().enumerate() {
            let cross = if self.labels.get(e) { n } else { 0 };
            edges.push((a, b + cross));
            edges.push((a + n, (b + n + cross) % (2 * n)));
        }
        Graph::new(2 * n, edges).expect("lifted endpoints are in range")
    }

    /// Labels to one on exactly the edges cut by `vertices`.
    pub fn switched(&self, vertices: &[usize]) -> DoubleCover {
        let mut c = self.clone();
        c.labels.xor_assign(&cut(&self.base, vertices));
        c
    }
}

fn cut(g: &Graph, vertices: &[usize]) -> BitVec {
    let mut inside = vec![false; g.vertex_count()];
    for &v in vertices {
        inside[v] = true;
    }
    BitVec::from_bools(&g.edges().iter().map(|&(a, b)| inside[a] != inside[b]).collect::<Vec<_>>())
}

/// A cover's class as a functional on cycles, recorded by its values on the
/// fundamental cycles of the breadth-first forest's off-tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W1 {
    pub off_tree: Vec<usize>,
    pub values: BitVec,
}

impl W1 {
    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn add(&self, other: &W1) -> W1 {
        W1 { off_tree: self.off_tree.clone(), values: self.values.xor(&other.values) }
    }
}

pub fn w1_functional(c: &DoubleCover) -> W1 {
    let forest = c.base.spanning_forest();
    let off_tree = forest.off_tree_edges();
    let values = off_tree.iter().map(|&e| c.evaluate(&forest.fundamental_cycle(&c.base, e))).collect::<Vec<_>>();
    W1 { off_tree, values: BitVec::from_bools(&values) }
}

/// Outcome of an equivalence test. When equivalent, switching the sheets over
/// `witness` carries the first labeling to the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn are_equivalent(c1: &DoubleCover, c2: &DoubleCover) -> Result<Equivalence> {
    if c1.base != c2.base {
        return Err(Error::BaseMismatch);
    }
    let g = &c1.base;
    let diff = c1.labels.xor(&c2.labels);
    let forest = g.spanning_forest();
    let mut side = vec![false; g.vertex_count()];
    for &v in &forest.order {
        if let Some(e) = forest.parent_edge[v] {
            let (a, b) = g.endpoints(e);
            side[v] = side[if a == v { b } else { a }] ^ diff.get(e);
        }
    }
    let consistent = g.edges().iter().enumerate().all(|(e, &(a, b))| diff.get(e) == (side[a] != side[b]));
    Ok(Equivalence {
        equivalent: consistent,
        witness: consistent.then(|| (0..g.vertex_count()).filter(|&v| side[v]).collect()),
    })
}

/// Number of cover classes, `2^(E - V + C)`, saturating.
pub fn cover_class_count(g: &Graph) -> u128 {
    let b = g.cycle_rank();
    if b >= 128 {
        u128::MAX
    } else {
        1u128 << b
    }
}

/// One representative per class, labels supported on off-tree edges, in
/// order of the binary subset index.
pub fn enumerate_covers(g: &Graph, budget: u128) -> Result<Vec<DoubleCover>> {
    let size = cover_class_count(g);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let off_tree = g.spanning_forest().off_tree_edges();
    Ok((0..size as u64)
        .map(|subset| {
            let labels = BitVec::from_ones(
                g.edge_count(),
                off_tree.iter().enumerate().filter(|&(i, _)| subset >> i & 1 == 1).map(|(_, &e)| e),
            );
            DoubleCover { base: g.clone(), labels }
        })
        .collect())
}

/// Classes of double covers of the surface of a scheme: labelings of its
/// 1-skeleton that are even around every face, modulo cuts. For a closed
/// connected surface there are `2^(2 - chi)` of them.
pub fn enumerate_covers_surface(s: &Scheme2, budget: u128) -> Result<Vec<DoubleCover>> {
    let g = s.graph();
    let e = g.edge_count();
    let face_rows: Vec<BitVec> = s
        .faces()
        .iter()
        .map(|f| {
            let mut row = BitVec::zeros(e);
            for step in f {
                row.flip(step.edge);
            }
            row
        })
        .collect();
    let cocycles = gf2::null_space(&face_rows, e);
    let mut basis = EchelonBasis::new(e);
    for v in 0..g.vertex_count() {
        basis.insert(&cut(g, &[v]));
    }
    let classes: Vec<BitVec> = cocycles.into_iter().filter(|z| basis.insert(z)).collect();
    let size = if classes.len() >= 128 { u128::MAX } else { 1u128 << classes.len() };
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok((0..size as u64)
        .map(|subset| {
            let mut labels = BitVec::zeros(e);
            for (i, z) in classes.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    labels.xor_assign(z);
                }
            }
            DoubleCover { base: g.clone(), labels }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::scheme;

    fn theta() -> Graph {
        Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn circle_covers() {
        let c = graph::cycle(4);
        let twisted = DoubleCover::new(c.clone(), vec![true, false, false, false]).unwrap();
        assert!(!w1_functional(&twisted).is_zero());
        assert!(w1_functional(&DoubleCover::trivial(c.clone())).is_zero());
        let eq = are_equivalent(&twisted, &DoubleCover::trivial(c.clone())).unwrap();
        assert!(!eq.equivalent && eq.witness.is_none());
        assert!(twisted.lift().is_connected());
        assert_eq!(DoubleCover::trivial(c).lift().components().count, 2);
    }

    #[test]
    fn trees_carry_only_the_trivial_cover() {
        let tree = Graph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let c = DoubleCover::new(tree.clone(), vec![true, false, true, true]).unwrap();
        let eq = are_equivalent(&c, &DoubleCover::trivial(tree.clone())).unwrap();
        assert!(eq.equivalent);
        assert_eq!(c.switched(&eq.witness.unwrap()), DoubleCover::trivial(tree.clone()));
        assert_eq!(enumerate_covers(&tree, 10).unwrap().len(), 1);
    }

    #[test]
    fn self_equivalence_has_empty_witness() {
        let c = DoubleCover::new(theta(), vec![true, true, false]).unwrap();
        assert_eq!(are_equivalent(&c, &c).unwrap(), Equivalence { equivalent: true, witness: Some(vec![]) });
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_covers(&graph::bouquet(2), 100).unwrap().len(), 4);
        assert_eq!(enumerate_covers(&theta(), 100).unwrap().len(), 4);
        assert_eq!(enumerate_covers(&graph::complete(5), 100).unwrap().len(), 64);
        assert!(matches!(enumerate_covers(&graph::complete(8), 1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn representatives_are_pairwise_inequivalent() {
        let covers = enumerate_covers(&graph::complete(4), 100).unwrap();
        for (i, a) in covers.iter().enumerate() {
            for b in &covers[i + 1..] {
                assert!(!are_equivalent(a, b).unwrap().equivalent);
                assert_ne!(w1_functional(a), w1_functional(b));
            }
        }
    }

    #[test]
    fn bases_must_agree() {
        let a = DoubleCover::trivial(graph::cycle(3));
        let b = DoubleCover::trivial(graph::cycle(4));
        assert_eq!(are_equivalent(&a, &b), Err(Error::BaseMismatch));
        assert_eq!(a.compose(&b), Err(Error::BaseMismatch));
        assert!(DoubleCover::new(graph::cycle(3), vec![true]).is_err());
    }

    #[test]
    fn composition_adds_functionals() {
        let g = graph::complete(4);
        let a = DoubleCover::new(g.clone(), vec![true, false, true, false, false, true]).unwrap();
        let b = DoubleCover::new(g, vec![false, true, true, true, false, false]).unwrap();
        assert_eq!(w1_functional(&a.compose(&b).unwrap()), w1_functional(&a).add(&w1_functional(&b)));
    }

    #[test]
    fn surface_classes() {
        for (s, expect) in [
            (scheme::tetrahedron_boundary(), 1),
            (scheme::projective_plane(), 2),
            (scheme::torus(), 4),
            (scheme::klein_bottle(), 4),
            (scheme::orientable_surface(2), 16),
            (scheme::nonorientable_surface(3), 8),
        ] {
            let covers = enumerate_covers_surface(&s, 1 << 20).unwrap();
            assert_eq!(covers.len(), expect);
            assert_eq!(covers.len() as i64, 1 << (2 - s.euler_characteristic()));
        }
    }
}
