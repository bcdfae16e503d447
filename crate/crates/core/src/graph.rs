//! Finite graphs with loops and multiple edges.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// One half of an edge: edge `e` owns darts `2e` (at its first endpoint) and
/// `2e + 1` (at its second endpoint). A loop owns two darts at the same vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: usize, side: usize) -> Dart {
        debug_assert!(side < 2);
        Dart(2 * edge + side)
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn side(self) -> usize {
        self.0 % 2
    }

    /// The other dart of the same edge.
    pub fn opposite(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Connected components with a dense labeling, components numbered in order
/// of their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub label: Vec<usize>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if let Some((i, &(a, b))) = edges.iter().enumerate().find(|(_, &(a, b))| a >= vertex_count || b >= vertex_count)
        {
            return Err(Error::Malformed(format!(
                "edge {i} = ({a}, {b}) references a vertex outside 0..{vertex_count}"
            )));
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Graph {
        Graph { vertex_count, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Vertex a dart is attached to.
    pub fn dart_vertex(&self, d: Dart) -> usize {
        let (a, b) = self.edges[d.edge()];
        if d.side() == 0 {
            a
        } else {
            b
        }
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edges[edge];
        a == b
    }

    /// Darts at each vertex, in increasing dart order.
    pub fn darts_by_vertex(&self) -> Vec<Vec<Dart>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for d in (0..self.dart_count()).map(Dart) {
            out[self.dart_vertex(d)].push(d);
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    /// No loops and no repeated vertex pairs.
    pub fn is_simple(&self) -> bool {
        self.simplicity_violation().is_none()
    }

    pub(crate) fn simplicity_violation(&self) -> Option<String> {
        let mut seen = std::collections::HashSet::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                return Some(format!("edge {i} is a loop at vertex {a}"));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Some(format!("edge {i} duplicates the pair ({a}, {b})"));
            }
        }
        None
    }

    /// Neighbor lists (with multiplicity; a loop lists its vertex twice).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn components(&self) -> Components {
        let mut label = vec![usize::MAX; self.vertex_count];
        let adj = self.adjacency();
        let mut count = 0;
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, label }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    /// `E - V + C`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().count - self.vertex_count
    }

    /// Breadth-first spanning forest rooted at the smallest vertex of each
    /// component; returns a tree-edge mask. Darts are scanned in increasing
    /// order so the forest is deterministic.
    pub fn spanning_forest(&self) -> SpanningForest {
        let darts = self.darts_by_vertex();
        let mut parent_edge = vec![None; self.vertex_count];
        let mut visited = vec![false; self.vertex_count];
        let mut in_tree = vec![false; self.edge_count()];
        let mut order = Vec::with_capacity(self.vertex_count);
        for root in 0..self.vertex_count {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &d in &darts[v] {
                    let w = self.dart_vertex(d.opposite());
                    if !visited[w] {
                        visited[w] = true;
                        in_tree[d.edge()] = true;
                        parent_edge[w] = Some(d.edge());
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { in_tree, parent_edge, order }
    }

    /// Split `edge` = (a, b) into (a, new) keeping the id and (new, b) with id `E`.
    pub fn subdivide_edge(&self, edge: usize) -> Result<Graph> {
        if edge >= self.edges.len() {
            return Err(Error::BadEdge(edge));
        }
        let (a, b) = self.edges[edge];
        let mid = self.vertex_count;
        let mut edges = self.edges.clone();
        edges[edge] = (a, mid);
        edges.push((mid, b));
        Ok(Graph { vertex_count: self.vertex_count + 1, edges })
    }

    /// Subgraph induced on the given vertices, relabeled densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Graph { vertex_count: vertices.len(), edges }
    }

    /// Delete vertices of degree one until none remain (a single isolated
    /// vertex may be left). Returns the pruned graph and the kept original vertices.
    pub fn prune_leaves(&self) -> (Graph, Vec<usize>) {
        let mut alive = vec![true; self.vertex_count];
        let mut edge_alive = vec![true; self.edge_count()];
        let mut deg = self.degrees();
        while let Some(leaf) = (0..self.vertex_count).find(|&v| alive[v] && deg[v] == 1) {
            let e = (0..self.edge_count())
                .find(|&e| edge_alive[e] && (self.edges[e].0 == leaf || self.edges[e].1 == leaf))
                .expect("a degree-one vertex has an incident edge");
            edge_alive[e] = false;
            let (a, b) = self.edges[e];
            deg[a] -= 1;
            deg[b] -= 1;
            alive[leaf] = false;
        }
        let kept: Vec<usize> = (0..self.vertex_count).filter(|&v| alive[v]).collect();
        let mut map = vec![usize::MAX; self.vertex_count];
        for (i, &v) in kept.iter().enumerate() {
            map[v] = i;
        }
        let edges = (0..self.edge_count())
            .filter(|&e| edge_alive[e])
            .map(|e| (map[self.edges[e].0], map[self.edges[e].1]))
            .collect();
        (Graph { vertex_count: kept.len(), edges }, kept)
    }
}

/// Output of [`Graph::spanning_forest`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    pub in_tree: Vec<bool>,
    /// Tree edge leading to each vertex from its parent (`None` at roots).
    pub parent_edge: Vec<Option<usize>>,
    /// Vertices in breadth-first order; parents precede children.
    pub order: Vec<usize>,
}

impl SpanningForest {
    pub fn off_tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| !self.in_tree[e]).collect()
    }

    /// Tree edges on the path from `v` up to its root.
    pub fn path_to_root(&self, g: &Graph, mut v: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some(e) = self.parent_edge[v] {
            path.push(e);
            let (a, b) = g.endpoints(e);
            v = if a == v { b } else { a };
        }
        path
    }

    /// Edge set (as a mask) of the fundamental cycle of an off-tree edge.
    pub fn fundamental_cycle(&self, g: &Graph, edge: usize) -> Vec<bool> {
        let mut mask = vec![false; g.edge_count()];
        mask[edge] = true;
        let (a, b) = g.endpoints(edge);
        for e in self.path_to_root(g, a).into_iter().chain(self.path_to_root(g, b)) {
            mask[e] ^= true;
        }
        mask
    }
}

/// Complete graph on `n` vertices, edges in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph { vertex_count: n, edges }
}

/// Complete bipartite graph with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Graph { vertex_count: m + n, edges }
}

/// Cycle of length `n >= 1` (a loop for `n = 1`, a digon for `n = 2`).
pub fn cycle(n: usize) -> Graph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph { vertex_count: n, edges }
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph { vertex_count: 10, edges }
}

/// One vertex with `n` loops.
pub fn bouquet(n: usize) -> Graph {
    Graph { vertex_count: 1, edges: vec![(0, 0); n] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_counts() {
        assert_eq!(complete(4).components().count, 1);
        let two_triangles = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two_triangles.components().count, 2);
        assert_eq!(Graph::empty(3).components().count, 3);
        assert_eq!(Graph::empty(0).components().count, 0);
    }

    #[test]
    fn degree_sum_counts_loops_twice() {
        let g = Graph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![4, 2]);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.darts_by_vertex()[0], vec![Dart(0), Dart(1), Dart(2), Dart(4)]);
    }

    #[test]
    fn bad_endpoint_rejected() {
        assert!(matches!(Graph::new(2, vec![(0, 2)]), Err(Error::Malformed(_))));
    }

    #[test]
    fn subdivision_of_a_loop_is_a_digon() {
        let g = bouquet(1).subdivide_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 0)]);
        assert!(complete(3).subdivide_edge(3).is_err());
    }

    #[test]
    fn spanning_forest_and_fundamental_cycles() {
        let g = complete(4);
        let f = g.spanning_forest();
        assert_eq!(f.in_tree.iter().filter(|&&t| t).count(), 3);
        for e in f.off_tree_edges() {
            let cyc = f.fundamental_cycle(&g, e);
            let mut deg = [0; 4];
            for (i, &on) in cyc.iter().enumerate() {
                if on {
                    let (a, b) = g.endpoints(i);
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
            assert!(deg.iter().all(|d| d % 2 == 0));
        }
        assert_eq!(g.cycle_rank(), 3);
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert!(complete(5).is_simple());
        assert!(!cycle(2).is_simple());
    }

    #[test]
    fn leaves_are_pruned_iteratively() {
        // triangle with a pendant path of length two
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let (p, kept) = g.prune_leaves();
        assert_eq!(kept, vec![0, 1, 2]);
        assert_eq!(p.edge_count(), 3);
    }
}
