//! Brute-force and third-party reference computations.

use std::collections::HashSet;

use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use rand::Rng;

use topokit::geometry::Point;
use topokit::graph::Graph;
use topokit::ribbon::{euler_genus_lower_bound, genus_exhaustive, DEFAULT_BUDGET};
use topokit::vankampen::Drawing;
use topokit::Error;

pub fn random_multigraph(r: &mut impl Rng, max_v: usize, max_e: usize) -> Graph {
    let n = r.gen_range(1..=max_v);
    let m = r.gen_range(0..=max_e);
    Graph::new(n, (0..m).map(|_| (r.gen_range(0..n), r.gen_range(0..n))).collect()).expect("endpoints in range")
}

/// Component count computed by petgraph.
pub fn component_count(g: &Graph) -> usize {
    let mut pg = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for &(a, b) in g.edges() {
        pg.add_edge(nodes[a], nodes[b], ());
    }
    connected_components(&pg)
}

/// Number of double-cover classes found by sweeping all `2^E` labelings and
/// marking each orbit under the `2^V` sheet switches.
pub fn cover_classes_by_orbits(g: &Graph) -> u64 {
    let (n, m) = (g.vertex_count(), g.edge_count());
    assert!(m <= 24 && n <= 16, "brute force is limited to small graphs");
    let cut = |set: u32| -> u32 {
        g.edges()
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| (set >> a & 1) != (set >> b & 1))
            .fold(0, |acc, (e, _)| acc | 1 << e)
    };
    let cuts: HashSet<u32> = (0..1u32 << n).map(cut).collect();
    let mut seen = vec![false; 1 << m];
    let mut classes = 0;
    for label in 0..1u32 << m {
        if seen[label as usize] {
            continue;
        }
        classes += 1;
        for &c in &cuts {
            seen[(label ^ c) as usize] = true;
        }
    }
    classes
}

/// All connected simple graphs on `n` vertices up to isomorphism, one per
/// class, each the labeling whose edge mask is least over all relabelings.
pub fn connected_simple_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair exists");
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms.iter().map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, edges).expect("endpoints in range");
        if !g.is_connected() {
            continue;
        }
        let least = maps
            .iter()
            .map(|map| (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << map[i]))
            .min()
            .expect("identity permutation");
        if least == mask {
            out.push(g);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Planarity by exhaustive rotation search. When the search exceeds the
/// budget the graph must have more than `3V - 6` edges to be decided.
pub fn planar_by_rotation_search(g: &Graph) -> Result<bool, Error> {
    match genus_exhaustive(g, true, DEFAULT_BUDGET) {
        Ok(w) => Ok(w.genus == 0),
        Err(e @ Error::BudgetExceeded { .. }) => {
            if euler_genus_lower_bound(g, true) > 0 {
                Ok(false)
            } else {
                Err(e)
            }
        }
        Err(e) => Err(e),
    }
}

/// A random polyline drawing with integer coordinates, resampled until it is
/// in general position. Loops get at least two bends.
pub fn random_drawing(g: &Graph, r: &mut impl Rng) -> Drawing {
    let coord = |r: &mut dyn rand::RngCore| Point::from_ints(r.gen_range(-40..=40), r.gen_range(-40..=40));
    loop {
        let positions = (0..g.vertex_count()).map(|_| coord(r)).collect();
        let bends = (0..g.edge_count())
            .map(|e| {
                let k = if g.is_loop(e) { r.gen_range(2..=3) } else { r.gen_range(0..=2) };
                (0..k).map(|_| coord(r)).collect()
            })
            .collect();
        let d = Drawing { positions, bends };
        if d.crossings(g).is_ok() {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use topokit::graph;

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_simple_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(cover_classes_by_orbits(&graph::cycle(5)), 2);
        assert_eq!(cover_classes_by_orbits(&graph::complete(4)), 8);
        assert_eq!(cover_classes_by_orbits(&graph::bouquet(2)), 4);
    }

    #[test]
    fn petgraph_components() {
        let g = Graph::new(5, vec![(0, 1), (2, 3), (3, 3)]).unwrap();
        assert_eq!(component_count(&g), 3);
    }
}
