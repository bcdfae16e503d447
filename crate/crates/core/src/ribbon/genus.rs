//! Exact genus by exhausting rotation systems, either tracing faces or taking
//! interlacement ranks.

use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::{Dart, Graph};

use super::interlace::{interlace_matrix, tree_word};
use super::RotationSystem;

/// Default cap on the number of rotation systems (times twist sets) visited.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Visit every rotation system of `g` once. The first dart at each vertex stays
/// fixed and the remaining darts run through their permutations in
/// lexicographic order, the last vertex varying fastest. The visitor returns
/// `false` to stop early.
pub fn for_each_rotation(g: &Graph, mut visit: impl FnMut(&[Vec<Dart>]) -> bool) {
    let mut rot = g.darts_by_vertex();
    loop {
        if !visit(&rot) {
            return;
        }
        let mut advanced = false;
        for r in rot.iter_mut().rev() {
            if r.len() > 2 && next_permutation(&mut r[1..]) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

/// Advance to the next lexicographic permutation; on the last one, wrap to the
/// first and return `false`.
fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        xs.reverse();
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("a larger element exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
}

/// Number of configurations an exhaustive search visits: `prod (deg - 1)!`
/// rotation systems, times the nonempty twist sets on off-tree edges in the
/// non-orientable case. Saturates at `u128::MAX`.
pub fn search_space(g: &Graph, orientable: bool) -> u128 {
    let rotations = g
        .degrees()
        .into_iter()
        .map(|d| factorial(d.saturating_sub(1)))
        .try_fold(1u128, |acc, f| acc.checked_mul(f))
        .unwrap_or(u128::MAX);
    if orientable {
        return rotations;
    }
    let b = g.cycle_rank();
    let twists = if b >= 127 { u128::MAX } else { (1u128 << b) - 1 };
    rotations.saturating_mul(twists)
}

/// Lower bound from Euler's formula. For a connected simple graph with at
/// least three vertices every face has length at least three; otherwise the
/// bound is trivial.
pub fn euler_genus_lower_bound(g: &Graph, orientable: bool) -> usize {
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let floor = usize::from(!orientable);
    if v < 3 || !g.is_simple() {
        return floor;
    }
    let excess = e - 3 * v + 6;
    let divisor = if orientable { 6 } else { 3 };
    let bound = if excess <= 0 { 0 } else { (excess + divisor - 1) / divisor };
    floor.max(bound as usize)
}

/// Minimal genus found by a search, with a rotation system attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusWitness {
    /// Handles when orientable, cross-caps otherwise.
    pub genus: usize,
    pub rotation: RotationSystem,
}

fn check_search(g: &Graph, orientable: bool, budget: u128) -> Result<()> {
    let components = g.components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    if !orientable && g.cycle_rank() == 0 {
        return Err(Error::Domain("a tree has no non-orientable thickening".into()));
    }
    let size = search_space(g, orientable);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(())
}

/// Twist masks on the given edges for every nonempty subset, by subset index.
fn twist_mask(edge_count: usize, off_tree: &[usize], subset: u64) -> Vec<bool> {
    let mut twist = vec![false; edge_count];
    for (i, &e) in off_tree.iter().enumerate() {
        twist[e] = subset >> i & 1 == 1;
    }
    twist
}

/// Minimum genus over all thickenings, found by tracing faces of every
/// rotation system (with every nonempty twist set on off-tree edges of the
/// breadth-first tree in the non-orientable case).
pub fn genus_exhaustive(g: &Graph, orientable: bool, budget: u128) -> Result<GenusWitness> {
    check_search(g, orientable, budget)?;
    let bound = euler_genus_lower_bound(g, orientable);
    let off_tree = g.spanning_forest().off_tree_edges();
    let subsets: Vec<u64> = if orientable { vec![0] } else { (1..1u64 << off_tree.len()).collect() };
    let mut best: Option<GenusWitness> = None;
    for_each_rotation(g, |rot| {
        for &subset in &subsets {
            let twist = twist_mask(g.edge_count(), &off_tree, subset);
            let r = RotationSystem::assemble(g.clone(), rot.to_vec(), twist);
            let euler = r.euler_genus();
            let genus = if orientable { euler / 2 } else { euler };
            if best.as_ref().is_none_or(|b| genus < b.genus) {
                best = Some(GenusWitness { genus, rotation: r });
                if genus <= bound {
                    return false;
                }
            }
        }
        true
    });
    Ok(best.expect("at least one rotation system exists"))
}

/// Minimum genus via interlacement ranks: half the minimal rank over rotation
/// systems (orientable), or the minimal rank with a nonempty twisted diagonal
/// (non-orientable). Vertices of degree one are pruned first.
pub fn mohar_genus(g: &Graph, orientable: bool, budget: u128) -> Result<GenusWitness> {
    let components = g.components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    let (h, _) = g.prune_leaves();
    check_search(&h, orientable, budget)?;
    let bound = euler_genus_lower_bound(&h, orientable);
    let forest = h.spanning_forest();
    let off_tree = forest.off_tree_edges();
    let b = off_tree.len();
    let mut best: Option<GenusWitness> = None;
    for_each_rotation(&h, |rot| {
        let r = RotationSystem::assemble(h.clone(), rot.to_vec(), vec![false; h.edge_count()]);
        let mut m = interlace_matrix(&tree_word(&r, &forest.in_tree), &off_tree, h.edge_count());
        let candidates: Box<dyn Iterator<Item = u64>> =
            if orientable { Box::new(0..1) } else { Box::new(1..1u64 << b) };
        for subset in candidates {
            for (i, row) in m.iter_mut().enumerate() {
                row.set(i, subset >> i & 1 == 1);
            }
            let rank = gf2::rank(&m);
            let genus = if orientable { rank / 2 } else { rank };
            if best.as_ref().is_none_or(|w| genus < w.genus) {
                let twist = twist_mask(h.edge_count(), &off_tree, subset);
                best = Some(GenusWitness { genus, rotation: RotationSystem::assemble(h.clone(), rot.to_vec(), twist) });
                if genus <= bound {
                    return false;
                }
            }
        }
        true
    });
    Ok(best.expect("at least one rotation system exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn permutations_in_order() {
        let mut xs = [1, 2, 3];
        let mut seen = vec![xs];
        while next_permutation(&mut xs) {
            seen.push(xs);
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], [1, 3, 2]);
        assert_eq!(xs, [1, 2, 3]);
    }

    #[test]
    fn visits_product_of_factorials() {
        let g = graph::complete(5);
        let mut n = 0;
        for_each_rotation(&g, |_| {
            n += 1;
            true
        });
        assert_eq!(n, 7776);
        assert_eq!(search_space(&g, true), 7776);
    }

    #[test]
    fn small_genera() {
        let b = DEFAULT_BUDGET;
        for (g, expect) in [(graph::complete(4), 0), (graph::complete(5), 1), (graph::complete_bipartite(3, 3), 1)] {
            assert_eq!(genus_exhaustive(&g, true, b).unwrap().genus, expect);
            assert_eq!(mohar_genus(&g, true, b).unwrap().genus, expect);
        }
    }

    #[test]
    fn nonorientable_genera() {
        let b = DEFAULT_BUDGET;
        // K5 and K3,3 embed in the projective plane; planar graphs need one cross-cap here
        for (g, expect) in [(graph::complete(5), 1), (graph::complete_bipartite(3, 3), 1), (graph::complete(4), 1)] {
            assert_eq!(genus_exhaustive(&g, false, b).unwrap().genus, expect);
            assert_eq!(mohar_genus(&g, false, b).unwrap().genus, expect);
        }
        assert!(matches!(genus_exhaustive(&graph::complete_bipartite(1, 3), false, b), Err(Error::Domain(_))));
    }

    #[test]
    fn witness_attains_genus() {
        let w = genus_exhaustive(&graph::complete(5), true, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.rotation.euler_genus(), 2);
        let w = mohar_genus(&graph::complete(5), false, DEFAULT_BUDGET).unwrap();
        assert!(!w.rotation.is_orientable());
        assert_eq!(w.rotation.euler_genus(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let err = genus_exhaustive(&graph::complete(8), true, DEFAULT_BUDGET).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert_eq!(euler_genus_lower_bound(&graph::complete(8), true), 2);
    }

    #[test]
    fn leaves_are_pruned_for_mohar() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(mohar_genus(&g, true, DEFAULT_BUDGET).unwrap().genus, 0);
    }
}
