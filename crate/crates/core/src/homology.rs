//! Homology of chain complexes over Z/2, Z and Q.

use std::fmt;

use num_bigint::BigInt;

use crate::complex::{ChainComplex, Ring};
use crate::error::{Error, Result};
use crate::gf2;
use crate::snf::smith_normal_form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Z2,
    Z,
    Q,
}

/// One homology group: free rank plus invariant factors (only over Z).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    /// `groups[k]` is `H_k`.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn rank(&self, k: usize) -> usize {
        self.groups.get(k).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, k: usize) -> &[BigInt] {
        self.groups.get(k).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// `sum (-1)^k rank H_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }

    /// Render one group, e.g. `0`, `Z`, `Z^2+Z/2`, `Z2^3`, `Q`.
    pub fn group_string(&self, k: usize) -> String {
        let g = &self.groups[k];
        let base = match self.coefficients {
            Coefficients::Z => "Z",
            Coefficients::Z2 => "Z2",
            Coefficients::Q => "Q",
        };
        let mut parts = Vec::new();
        match g.rank {
            0 => {}
            1 => parts.push(base.to_string()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(g.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.groups.len()).map(|k| format!("H_{k}={}", self.group_string(k))).collect();
        f.write_str(&parts.join(" "))
    }
}

fn z2_ranks(cx: &ChainComplex) -> Vec<usize> {
    (0..=cx.top_dimension() + 1).map(|k| gf2::rank(&cx.boundary_z2(k))).collect()
}

/// `dim H_k = c_k - rank d_k - rank d_{k+1}` with boundary ranks over GF(2).
pub fn homology_z2(cx: &ChainComplex) -> HomologyResult {
    let ranks = z2_ranks(cx);
    let groups = (0..=cx.top_dimension())
        .map(|k| HomologyGroup {
            rank: cx.cell_count(k) - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0),
            torsion: Vec::new(),
        })
        .collect();
    HomologyResult { coefficients: Coefficients::Z2, groups }
}

/// Integral homology via Smith normal forms of all boundary maps.
pub fn homology_z(cx: &ChainComplex) -> Result<HomologyResult> {
    if cx.ring() != Ring::Z {
        return Err(Error::WrongRing);
    }
    let top = cx.top_dimension();
    let forms: Vec<_> = (0..=top + 1).map(|k| smith_normal_form(&cx.boundary_dense(k))).collect();
    let groups = (0..=top)
        .map(|k| {
            let outgoing = forms[k].rank();
            let incoming = &forms[k + 1];
            HomologyGroup { rank: cx.cell_count(k) - outgoing - incoming.rank(), torsion: incoming.torsion() }
        })
        .collect();
    Ok(HomologyResult { coefficients: Coefficients::Z, groups })
}

/// Rational homology: the free ranks of integral homology.
pub fn homology_q(cx: &ChainComplex) -> Result<HomologyResult> {
    let z = homology_z(cx)?;
    Ok(HomologyResult {
        coefficients: Coefficients::Q,
        groups: z.groups.into_iter().map(|g| HomologyGroup { rank: g.rank, torsion: Vec::new() }).collect(),
    })
}

pub fn homology(cx: &ChainComplex, coefficients: Coefficients) -> Result<HomologyResult> {
    match coefficients {
        Coefficients::Z2 => Ok(homology_z2(cx)),
        Coefficients::Z => homology_z(cx),
        Coefficients::Q => homology_q(cx),
    }
}

/// Homology of the pair `(X, A)` where `A` is given by a mask per dimension.
/// The mask must be closed under taking faces.
pub fn relative_homology(
    cx: &ChainComplex,
    subcomplex: &[Vec<bool>],
    coefficients: Coefficients,
) -> Result<HomologyResult> {
    let dims = cx.top_dimension() + 1;
    if subcomplex.len() != dims || (0..dims).any(|d| subcomplex[d].len() != cx.cell_count(d)) {
        return Err(Error::Malformed("subcomplex mask does not match the cell counts".into()));
    }
    for dim in 1..dims {
        for cell in 0..cx.cell_count(dim) {
            if !subcomplex[dim][cell] {
                continue;
            }
            if let Some(&face) = cx.incident_faces(dim, cell).iter().find(|&&f| !subcomplex[dim - 1][f]) {
                return Err(Error::NotClosed { dim, cell, face });
            }
        }
    }
    homology(&cx.quotient(subcomplex), coefficients)
}

/// Check `sum (-1)^k rank H_k = sum (-1)^k c_k` (mod-2 ranks, and integral
/// ranks as well for integer complexes).
pub fn betti_euler_check(cx: &ChainComplex) -> bool {
    let cells: i64 =
        cx.cell_counts().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
    if homology_z2(cx).euler_characteristic() != cells {
        return false;
    }
    match homology_z(cx) {
        Ok(h) => h.euler_characteristic() == cells,
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::graph::Graph;
    use crate::scheme::{self, Scheme2, Step};

    fn z(s: &Scheme2) -> HomologyResult {
        homology_z(&ChainComplex::from_scheme(s, Ring::Z)).unwrap()
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let h = z(&scheme::projective_plane());
        assert_eq!(h.ranks(), vec![1, 0, 0]);
        assert_eq!(h.torsion(1), &[BigInt::from(2)]);
        assert_eq!(h.to_string(), "H_0=Z H_1=Z/2 H_2=0");
    }

    #[test]
    fn torus_over_z() {
        let h = z(&scheme::torus());
        assert_eq!(h.ranks(), vec![1, 2, 1]);
        assert!(h.torsion(1).is_empty());
    }

    #[test]
    fn point_over_z2() {
        let cx = ChainComplex::from_simplicial(&SimplicialComplex::from_maximal(&[vec![0]]).unwrap(), Ring::Z2);
        assert_eq!(homology_z2(&cx).ranks(), vec![1]);
    }

    #[test]
    fn sphere_fixtures() {
        for n in 1..=4 {
            let cx = ChainComplex::from_simplicial(&SimplicialComplex::simplex_boundary(n + 1), Ring::Z);
            let h = homology_z(&cx).unwrap();
            for k in 0..=n {
                let expect = usize::from(k == 0 || k == n);
                assert_eq!(h.rank(k), expect, "H_{k}(S^{n})");
                assert!(h.torsion(k).is_empty());
            }
        }
    }

    #[test]
    fn rational_drops_torsion() {
        let cx = ChainComplex::from_scheme(&scheme::klein_bottle(), Ring::Z);
        let hz = homology_z(&cx).unwrap();
        assert_eq!(hz.to_string(), "H_0=Z H_1=Z+Z/2 H_2=0");
        assert_eq!(homology_q(&cx).unwrap().to_string(), "H_0=Q H_1=Q H_2=0");
        assert_eq!(homology_z2(&cx).to_string(), "H_0=Z2 H_1=Z2^2 H_2=Z2");
    }

    #[test]
    fn wrong_ring_is_reported() {
        let cx = ChainComplex::from_scheme(&scheme::torus(), Ring::Z2);
        assert_eq!(homology_z(&cx).unwrap_err(), Error::WrongRing);
    }

    #[test]
    fn segment_relative_to_endpoints() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let cx = ChainComplex::from_simplicial(&k, Ring::Z2);
        let h = relative_homology(&cx, &[vec![true, true], vec![false]], Coefficients::Z2).unwrap();
        assert_eq!(h.ranks(), vec![0, 1]);
        let empty = relative_homology(&cx, &[vec![false, false], vec![false]], Coefficients::Z2).unwrap();
        assert_eq!(empty, homology_z2(&cx));
    }

    #[test]
    fn disk_relative_to_boundary() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let cx = ChainComplex::from_simplicial(&k, Ring::Z2);
        let h = relative_homology(&cx, &[vec![true; 3], vec![true; 3], vec![false]], Coefficients::Z2).unwrap();
        assert_eq!(h.ranks(), vec![0, 0, 1]);
    }

    #[test]
    fn relative_h0_counts_components_missing_the_subcomplex() {
        // two disjoint edges, subcomplex = one endpoint of the first
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let s = Scheme2::new(g, vec![]).unwrap();
        let cx = ChainComplex::from_scheme(&s, Ring::Z2);
        let mask = vec![vec![true, false, false, false], vec![false, false], vec![]];
        assert_eq!(relative_homology(&cx, &mask, Coefficients::Z2).unwrap().rank(0), 1);
    }

    #[test]
    fn open_mask_rejected() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let cx = ChainComplex::from_simplicial(&k, Ring::Z2);
        let err = relative_homology(&cx, &[vec![true, false], vec![true]], Coefficients::Z2).unwrap_err();
        assert_eq!(err, Error::NotClosed { dim: 1, cell: 0, face: 1 });
    }

    #[test]
    fn euler_check_on_fixtures() {
        assert!(betti_euler_check(&ChainComplex::from_scheme(&scheme::torus(), Ring::Z)));
        assert!(betti_euler_check(&ChainComplex::from_simplicial(&SimplicialComplex::simplex_boundary(3), Ring::Z)));
        let g = Graph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap();
        let s = Scheme2::new(g, vec![vec![Step::new(2, true)]]).unwrap();
        assert!(betti_euler_check(&ChainComplex::from_scheme(&s, Ring::Z2)));
    }
}
