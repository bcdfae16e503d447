//! Counting thickenings: closed formulas and orbit enumeration.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Dart, Graph};

use super::genus::{for_each_rotation, search_space};
use super::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountMode {
    /// Every rotation system (and twist labeling) on the labeled graph.
    Labeled,
    /// Thickenings up to homeomorphism fixing the graph.
    RelHomeomorphism,
}

/// Closed-form thickening counts of a connected graph with degrees `k_v`.
///
/// * labeled, oriented: `prod (k_v - 1)!`
/// * labeled, all: `2^E prod (k_v - 1)!`
/// * up to homeomorphism, oriented: `prod (k_v - 1)! / 2`
/// * up to homeomorphism, all: `2^(E - V) prod (k_v - 1)!`
///
/// The homeomorphism counts need a vertex of degree at least three; graphs
/// homeomorphic to a point, a segment or a circle are rejected.
pub fn count_thickenings(g: &Graph, mode: CountMode, orientable_only: bool) -> Result<BigUint> {
    let components = g.components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    let mut product = BigUint::one();
    for d in g.degrees() {
        for k in 2..d {
            product *= k as u64;
        }
    }
    let (v, e) = (g.vertex_count(), g.edge_count());
    match mode {
        CountMode::Labeled => Ok(if orientable_only { product } else { product << e }),
        CountMode::RelHomeomorphism => {
            if g.degrees().into_iter().all(|d| d <= 2) {
                return Err(Error::Domain(
                    "the count needs a vertex of degree at least 3 (graph is homeomorphic to a point, segment or circle)"
                        .into(),
                ));
            }
            let shift = if orientable_only { -1 } else { e as i64 - v as i64 };
            if shift >= 0 {
                return Ok(product << shift as usize);
            }
            let divisor = BigUint::one() << (-shift) as usize;
            if !(&product % &divisor).is_zero() {
                return Err(Error::Domain("count is not an integer for this degree sequence".into()));
            }
            Ok(product / divisor)
        }
    }
}

/// An isomorphism class of untwisted thickenings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickeningClass {
    pub representative: RotationSystem,
    pub genus: usize,
    /// Number of labeled rotation systems in the class.
    pub size: usize,
}

/// Classes of untwisted rotation systems of a simple connected graph under
/// graph automorphisms and reversal of all rotations, in order of first
/// appearance during enumeration.
pub fn oriented_thickening_classes(g: &Graph, budget: u128) -> Result<Vec<ThickeningClass>> {
    if let Some(why) = g.simplicity_violation() {
        return Err(Error::NotSimple(why));
    }
    let components = g.components().count;
    if components != 1 {
        return Err(Error::Disconnected(components));
    }
    let size = search_space(g, true);
    let autos = automorphisms(g);
    let work = size.saturating_mul(2 * autos.len() as u128);
    if work > budget {
        return Err(Error::BudgetExceeded { size: work, budget });
    }
    let dart_maps: Vec<Vec<usize>> = autos.iter().map(|p| dart_map(g, p)).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<ThickeningClass> = Vec::new();
    for_each_rotation(g, |rot| {
        let r = RotationSystem::assemble(g.clone(), rot.to_vec(), vec![false; g.edge_count()]);
        let key = canonical(&r, &dart_maps);
        match index.get(&key) {
            Some(&i) => classes[i].size += 1,
            None => {
                index.insert(key, classes.len());
                let genus = r.euler_genus() / 2;
                classes.push(ThickeningClass { representative: r, genus, size: 1 });
            }
        }
        true
    });
    Ok(classes)
}

/// Lexicographically least successor table over the images of `r` under the
/// given dart permutations, with and without reversal.
fn canonical(r: &RotationSystem, maps: &[Vec<usize>]) -> Vec<usize> {
    let n = r.graph().dart_count();
    let mut best: Option<Vec<usize>> = None;
    let mut image = vec![0; n];
    for map in maps {
        for reverse in [false, true] {
            for d in 0..n {
                let next = if reverse { r.pred(Dart(d)) } else { r.succ(Dart(d)) };
                image[map[d]] = map[next.0];
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
    }
    best.expect("the identity is an automorphism")
}

/// Action of a vertex automorphism of a simple graph on darts.
fn dart_map(g: &Graph, perm: &[usize]) -> Vec<usize> {
    let mut lookup = HashMap::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        lookup.insert((a, b), Dart::new(e, 0).0);
        lookup.insert((b, a), Dart::new(e, 1).0);
    }
    (0..g.dart_count())
        .map(|d| {
            let d = Dart(d);
            let u = g.dart_vertex(d);
            let w = g.dart_vertex(d.opposite());
            lookup[&(perm[u], perm[w])]
        })
        .collect()
}

/// All vertex permutations preserving adjacency of a simple graph, found by
/// backtracking.
fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let deg = g.degrees();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(&adj, &deg, &mut perm, &mut used, &mut out);
    out
}

fn extend(adj: &[Vec<bool>], deg: &[usize], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let v = perm.len();
    if v == adj.len() {
        out.push(perm.clone());
        return;
    }
    for w in 0..adj.len() {
        if used[w] || deg[w] != deg[v] || (0..v).any(|u| adj[u][v] != adj[perm[u]][w]) {
            continue;
        }
        used[w] = true;
        perm.push(w);
        extend(adj, deg, perm, used, out);
        perm.pop();
        used[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn k4_counts() {
        let k4 = graph::complete(4);
        assert_eq!(count_thickenings(&k4, CountMode::Labeled, true).unwrap(), n(16));
        assert_eq!(count_thickenings(&k4, CountMode::Labeled, false).unwrap(), n(1024));
        assert_eq!(count_thickenings(&k4, CountMode::RelHomeomorphism, true).unwrap(), n(8));
        assert_eq!(count_thickenings(&k4, CountMode::RelHomeomorphism, false).unwrap(), n(64));
    }

    #[test]
    fn cubic_graphs_have_two_to_the_v_minus_one() {
        let petersen = graph::petersen();
        assert_eq!(count_thickenings(&petersen, CountMode::RelHomeomorphism, true).unwrap(), n(1 << 9));
        assert_eq!(count_thickenings(&petersen, CountMode::RelHomeomorphism, false).unwrap(), n(1 << 15));
    }

    #[test]
    fn circles_are_outside_the_formula() {
        assert!(matches!(
            count_thickenings(&graph::cycle(5), CountMode::RelHomeomorphism, true),
            Err(Error::Domain(_))
        ));
        assert_eq!(count_thickenings(&graph::cycle(5), CountMode::Labeled, true).unwrap(), n(1));
    }

    #[test]
    fn k4_has_three_classes() {
        let classes = oriented_thickening_classes(&graph::complete(4), u128::MAX).unwrap();
        let mut genera: Vec<usize> = classes.iter().map(|c| c.genus).collect();
        genera.sort_unstable();
        assert_eq!(genera, vec![0, 1, 1]);
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), 16);
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&graph::complete(4)).len(), 24);
        assert_eq!(automorphisms(&graph::petersen()).len(), 120);
        assert_eq!(automorphisms(&graph::cycle(6)).len(), 12);
    }
}
