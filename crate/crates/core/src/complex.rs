//! Chain complexes of schemes and simplicial complexes.
//!
//! Boundary maps are stored as sparse integer columns (one column per cell of
//! the higher dimension). Over Z/2 the same columns are read modulo 2, so a
//! face running over an edge twice in the same direction contributes 0 there,
//! and a face running over it in opposite directions contributes 0 over Z as well.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::scheme::Scheme2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z2,
    Z,
}

/// A sparse column: `(row, coefficient)` with nonzero integer coefficients.
pub type Column = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: Ring,
    cell_counts: Vec<usize>,
    /// `boundaries[k - 1]` is the map `C_k -> C_{k-1}`.
    boundaries: Vec<Vec<Column>>,
    /// `faces[k - 1][j]`: the (k-1)-cells incident to cell `j` of dimension `k`,
    /// whether or not their coefficient cancels.
    faces: Vec<Vec<Vec<usize>>>,
}

impl ChainComplex {
    /// Assemble a complex from raw columns. Coefficients equal to zero are
    /// dropped from the columns but kept as incidences.
    pub fn from_columns(ring: Ring, cell_counts: Vec<usize>, raw: Vec<Vec<Vec<(usize, i64)>>>) -> Result<ChainComplex> {
        if raw.len() + 1 != cell_counts.len().max(1) {
            return Err(Error::Malformed("need one boundary map per positive dimension".into()));
        }
        let mut boundaries = Vec::with_capacity(raw.len());
        let mut faces = Vec::with_capacity(raw.len());
        for (k, cols) in raw.into_iter().enumerate() {
            if cols.len() != cell_counts[k + 1] {
                return Err(Error::Malformed(format!(
                    "dimension {} has {} cells but {} columns",
                    k + 1,
                    cell_counts[k + 1],
                    cols.len()
                )));
            }
            let mut dim_cols = Vec::with_capacity(cols.len());
            let mut dim_faces = Vec::with_capacity(cols.len());
            for col in cols {
                let mut merged: HashMap<usize, i64> = HashMap::new();
                let mut incident = BTreeSet::new();
                for (row, c) in col {
                    if row >= cell_counts[k] {
                        return Err(Error::Malformed(format!(
                            "dangling reference to cell {row} of dimension {k} (only {} exist)",
                            cell_counts[k]
                        )));
                    }
                    *merged.entry(row).or_insert(0) += c;
                    incident.insert(row);
                }
                let mut column: Column = merged
                    .into_iter()
                    .filter_map(|(r, c)| {
                        let c = if ring == Ring::Z2 { c.rem_euclid(2) } else { c };
                        (c != 0).then_some((r, c))
                    })
                    .collect();
                column.sort_unstable();
                dim_cols.push(column);
                dim_faces.push(incident.into_iter().collect());
            }
            boundaries.push(dim_cols);
            faces.push(dim_faces);
        }
        Ok(ChainComplex { ring, cell_counts, boundaries, faces })
    }

    /// The cellular chain complex of a scheme: vertices, edges, faces.
    /// An edge `(a, b)` has boundary `b - a`; a face the signed sum of its steps.
    pub fn from_scheme(s: &Scheme2, ring: Ring) -> ChainComplex {
        let g = s.graph();
        let edge_cols =
            g.edges().iter().map(|&(a, b)| if a == b { vec![(a, 0)] } else { vec![(a, -1), (b, 1)] }).collect();
        let face_cols = s
            .faces()
            .iter()
            .map(|walk| walk.iter().map(|st| (st.edge, if st.forward { 1 } else { -1 })).collect())
            .collect();
        ChainComplex::from_columns(
            ring,
            vec![g.vertex_count(), g.edge_count(), s.face_count()],
            vec![edge_cols, face_cols],
        )
        .expect("scheme faces only reference existing edges")
    }

    pub fn from_simplicial(k: &SimplicialComplex, ring: Ring) -> ChainComplex {
        let counts: Vec<usize> = k.simplices.iter().map(Vec::len).collect();
        let mut raw = Vec::new();
        for dim in 1..k.simplices.len() {
            let index: HashMap<&[usize], usize> =
                k.simplices[dim - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            let cols = k.simplices[dim]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|drop| {
                            let face: Vec<usize> =
                                s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                            let sign = if drop % 2 == 0 { 1 } else { -1 };
                            (index[face.as_slice()], sign)
                        })
                        .collect()
                })
                .collect();
            raw.push(cols);
        }
        ChainComplex::from_columns(ring, counts, raw).expect("simplicial complexes are closed under faces")
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Highest dimension with a slot in the complex (0 for an empty complex).
    pub fn top_dimension(&self) -> usize {
        self.cell_counts.len().saturating_sub(1)
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cell_counts.get(dim).copied().unwrap_or(0)
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    /// Columns of the boundary map out of dimension `dim` (`dim >= 1`).
    pub fn boundary(&self, dim: usize) -> &[Column] {
        if dim == 0 {
            return &[];
        }
        self.boundaries.get(dim - 1).map_or(&[], Vec::as_slice)
    }

    pub fn incident_faces(&self, dim: usize, cell: usize) -> &[usize] {
        &self.faces[dim - 1][cell]
    }

    /// Boundary map out of dimension `dim` reduced mod 2, one bit vector per column.
    pub fn boundary_z2(&self, dim: usize) -> Vec<BitVec> {
        let rows = self.cell_count(dim.saturating_sub(1));
        self.boundary(dim)
            .iter()
            .map(|col| BitVec::from_ones(rows, col.iter().filter(|(_, c)| c % 2 != 0).map(|&(r, _)| r)))
            .collect()
    }

    /// Dense row-major integer matrix of the boundary map out of dimension `dim`.
    pub fn boundary_dense(&self, dim: usize) -> Vec<Vec<BigInt>> {
        let rows = self.cell_count(dim.saturating_sub(1));
        let cols = self.boundary(dim);
        let mut m = vec![vec![BigInt::from(0); cols.len()]; if dim == 0 { 0 } else { rows }];
        for (j, col) in cols.iter().enumerate() {
            for &(r, c) in col {
                m[r][j] = BigInt::from(c);
            }
        }
        m
    }

    /// Whether every composite `C_{k+1} -> C_k -> C_{k-1}` vanishes over the ring.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for k in 1..self.top_dimension() {
            let lower = self.boundary(k);
            for col in self.boundary(k + 1) {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, c) in col {
                    for &(r, d) in &lower[mid] {
                        *acc.entry(r).or_insert(0) += c * d;
                    }
                }
                let nonzero = acc.values().any(|&v| match self.ring {
                    Ring::Z2 => v % 2 != 0,
                    Ring::Z => v != 0,
                });
                if nonzero {
                    return false;
                }
            }
        }
        true
    }

    /// The same complex with coefficients read in another ring.
    pub fn with_ring(&self, ring: Ring) -> ChainComplex {
        let mut out = self.clone();
        out.ring = ring;
        if ring == Ring::Z2 {
            for dim in out.boundaries.iter_mut() {
                for col in dim.iter_mut() {
                    col.retain_mut(|(_, c)| {
                        *c = c.rem_euclid(2);
                        *c != 0
                    });
                }
            }
        }
        out
    }

    /// Keep only the cells not selected by `mask` (one mask per dimension);
    /// the quotient complex `C(X) / C(A)`.
    pub(crate) fn quotient(&self, mask: &[Vec<bool>]) -> ChainComplex {
        let keep: Vec<Vec<usize>> =
            (0..self.cell_counts.len()).map(|d| (0..self.cell_counts[d]).filter(|&i| !mask[d][i]).collect()).collect();
        let mut new_index: Vec<Vec<usize>> = self.cell_counts.iter().map(|&n| vec![usize::MAX; n]).collect();
        for (d, cells) in keep.iter().enumerate() {
            for (i, &c) in cells.iter().enumerate() {
                new_index[d][c] = i;
            }
        }
        let mut boundaries = Vec::new();
        let mut faces = Vec::new();
        for k in 1..self.cell_counts.len() {
            let mut cols = Vec::new();
            let mut fcs = Vec::new();
            for &c in &keep[k] {
                cols.push(
                    self.boundaries[k - 1][c]
                        .iter()
                        .filter(|(r, _)| new_index[k - 1][*r] != usize::MAX)
                        .map(|&(r, v)| (new_index[k - 1][r], v))
                        .collect(),
                );
                fcs.push(
                    self.faces[k - 1][c]
                        .iter()
                        .filter(|&&r| new_index[k - 1][r] != usize::MAX)
                        .map(|&r| new_index[k - 1][r])
                        .collect(),
                );
            }
            boundaries.push(cols);
            faces.push(fcs);
        }
        ChainComplex { ring: self.ring, cell_counts: keep.iter().map(Vec::len).collect(), boundaries, faces }
    }
}

/// A finite abstract simplicial complex, stored as sorted vertex lists per
/// dimension. Simplices are sorted lexicographically within each dimension,
/// and each simplex is oriented by increasing vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Closure under subsets of the given simplices. Vertex lists are sorted;
    /// repeated vertices inside one simplex are rejected.
    pub fn from_maximal(simplices: &[Vec<usize>]) -> Result<SimplicialComplex> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for s in simplices {
            if s.is_empty() {
                continue;
            }
            let mut sorted = s.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Malformed(format!("simplex {s:?} repeats a vertex")));
            }
            let n = sorted.len();
            if sorted.len() > 24 {
                return Err(Error::Malformed(format!("simplex {s:?} is too large to close under faces")));
            }
            for mask in 1u32..(1 << n) {
                let face: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| sorted[i]).collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(face);
            }
        }
        Ok(SimplicialComplex { simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    /// Boundary of the `n`-simplex on vertices `0..=n` (an (n-1)-sphere).
    pub fn simplex_boundary(n: usize) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = (0..=n).map(|drop| (0..=n).filter(|&v| v != drop).collect()).collect();
        SimplicialComplex::from_maximal(&facets).expect("valid facets")
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.simplices.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Maximal simplices (those that are not a face of another), in dimension order.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for d in 0..self.simplices.len() {
            let upper: BTreeSet<Vec<usize>> = self
                .simplices
                .get(d + 1)
                .into_iter()
                .flatten()
                .flat_map(|s| {
                    (0..s.len())
                        .map(move |drop| s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect())
                })
                .collect();
            out.extend(self.simplices[d].iter().filter(|s| !upper.contains(*s)).cloned());
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }
}

/// Build the chain complex of either input kind.
pub fn build_chain_complex(input: &ComplexInput, ring: Ring) -> ChainComplex {
    match input {
        ComplexInput::Scheme(s) => ChainComplex::from_scheme(s, ring),
        ComplexInput::Simplicial(k) => ChainComplex::from_simplicial(k, ring),
    }
}

#[derive(Clone, Debug)]
pub enum ComplexInput {
    Scheme(Scheme2),
    Simplicial(SimplicialComplex),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::scheme::{self, Step};

    #[test]
    fn triangle_face_boundary() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = Scheme2::new(g, vec![vec![Step::new(0, true), Step::new(1, true), Step::new(2, true)]]).unwrap();
        let cx = ChainComplex::from_scheme(&s, Ring::Z2);
        assert_eq!(cx.boundary_z2(2)[0], BitVec::from_ones(3, [0, 1, 2]));
        assert!(cx.boundary_squares_to_zero());
    }

    #[test]
    fn torus_boundaries_vanish_mod_two() {
        let cx = ChainComplex::from_scheme(&scheme::torus(), Ring::Z2);
        assert!(cx.boundary_z2(1).iter().all(BitVec::is_zero));
        assert!(cx.boundary_z2(2).iter().all(BitVec::is_zero));
        let cz = ChainComplex::from_scheme(&scheme::torus(), Ring::Z);
        assert!(cz.boundary(2).iter().all(Vec::is_empty));
    }

    #[test]
    fn klein_bottle_face_has_coefficient_two() {
        let cz = ChainComplex::from_scheme(&scheme::klein_bottle(), Ring::Z);
        assert_eq!(cz.boundary(2)[0], vec![(1, 2)]);
        let c2 = ChainComplex::from_scheme(&scheme::klein_bottle(), Ring::Z2);
        assert!(c2.boundary(2)[0].is_empty());
        assert_eq!(c2.incident_faces(2, 0), &[0, 1]);
    }

    #[test]
    fn empty_scheme_is_zero_complex() {
        let s = Scheme2::new(Graph::empty(0), vec![]).unwrap();
        let cx = ChainComplex::from_scheme(&s, Ring::Z2);
        assert_eq!(cx.cell_counts(), &[0, 0, 0]);
        assert!(cx.boundary_squares_to_zero());
    }

    #[test]
    fn dangling_reference_is_malformed() {
        let err = ChainComplex::from_columns(Ring::Z, vec![1, 1], vec![vec![vec![(3, 1)]]]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn simplicial_closure_and_signs() {
        let k = SimplicialComplex::simplex_boundary(3);
        assert_eq!(k.simplices(0).len(), 4);
        assert_eq!(k.simplices(1).len(), 6);
        assert_eq!(k.simplices(2).len(), 4);
        assert_eq!(k.euler_characteristic(), 2);
        let cx = ChainComplex::from_simplicial(&k, Ring::Z);
        assert!(cx.boundary_squares_to_zero());
        assert_eq!(k.maximal_simplices().len(), 4);
        assert!(SimplicialComplex::from_maximal(&[vec![1, 1]]).is_err());
    }
}
