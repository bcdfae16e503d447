//! Linear algebra over GF(2) on packed bit vectors.
//!
//! Everything here is elimination on lists of vectors: ranks, membership in a
//! span (with the combination that produces the target), null spaces, and
//! "separating functionals" certifying that a vector is outside a span.

use std::fmt;

const WORD: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector of length `len` with ones exactly at `ones` (repeated indices cancel).
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Standard dot product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones % 2 == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + bit)
                }
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Incremental echelon basis of a subspace of GF(2)^n.
///
/// Each stored vector remembers which input vectors were combined to make it,
/// so membership queries can return an explicit combination.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    inputs: usize,
    rows: Vec<(usize, BitVec, Vec<usize>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, inputs: 0, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the residue and the input indices
    /// whose sum was subtracted.
    fn reduce(&self, v: &BitVec) -> (BitVec, Vec<usize>) {
        let mut r = v.clone();
        let mut used: Vec<usize> = Vec::new();
        for (pivot, row, combo) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(row);
                used.extend_from_slice(combo);
            }
        }
        (r, cancel_pairs(used))
    }

    /// Add a vector. Returns `true` if it was independent of the previous ones.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let index = self.inputs;
        self.inputs += 1;
        let (r, mut combo) = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(pivot) => {
                combo.push(index);
                combo.sort_unstable();
                // keep rows fully reduced on the new pivot
                for (_, row, c) in self.rows.iter_mut() {
                    if row.get(pivot) {
                        row.xor_assign(&r);
                        c.extend_from_slice(&combo);
                        *c = cancel_pairs(std::mem::take(c));
                    }
                }
                self.rows.push((pivot, r, combo));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// If `v` lies in the span, the sorted indices of inserted vectors summing to it.
    pub fn express(&self, v: &BitVec) -> Option<Vec<usize>> {
        let (r, combo) = self.reduce(v);
        r.is_zero().then_some(combo)
    }
}

fn cancel_pairs(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Rank of a family of equal-length vectors.
pub fn rank(vectors: &[BitVec]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut basis = EchelonBasis::new(first.len());
    vectors.iter().filter(|v| basis.insert(v)).count()
}

/// Basis of `{x : row · x = 0 for every row}` in GF(2)^ncols.
pub fn null_space(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let mut m: Vec<BitVec> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else { continue };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = BitVec::zeros(ncols);
        x.set(free, true);
        for (row, &p) in m.iter().zip(&pivots) {
            if row.get(free) {
                x.set(p, true);
            }
        }
        basis.push(x);
    }
    basis
}

/// Outcome of testing whether a target vector lies in the span of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanMembership {
    /// Indices of generators whose sum is the target.
    Inside(Vec<usize>),
    /// A functional vanishing on every generator but not on the target.
    Outside(BitVec),
}

/// Decide whether `target` is a sum of some of `generators`, returning either
/// the combination or a separating functional.
pub fn span_membership(generators: &[BitVec], target: &BitVec) -> SpanMembership {
    let len = target.len();
    let mut basis = EchelonBasis::new(len);
    for g in generators {
        basis.insert(g);
    }
    if let Some(combo) = basis.express(target) {
        return SpanMembership::Inside(combo);
    }
    let functional = null_space(generators, len)
        .into_iter()
        .find(|f| f.dot(target))
        .expect("a vector outside a span is detected by some annihilating functional");
    SpanMembership::Outside(functional)
}

/// Square bit matrix helpers used by interlacement and intersection forms.
pub fn is_symmetric(rows: &[BitVec]) -> bool {
    let n = rows.len();
    (0..n).all(|i| rows[i].len() == n && (0..i).all(|j| rows[i].get(j) == rows[j].get(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVec {
        BitVec::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_small_families() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[bv("000")]), 0);
        assert_eq!(rank(&[bv("110"), bv("011"), bv("101")]), 2);
        assert_eq!(rank(&[bv("100"), bv("010"), bv("001")]), 3);
    }

    #[test]
    fn long_vectors_cross_word_boundaries() {
        let a = BitVec::from_ones(130, [0, 64, 129]);
        let b = BitVec::from_ones(130, [64, 65]);
        assert_eq!(a.xor(&b).iter_ones().collect::<Vec<_>>(), vec![0, 65, 129]);
        assert!(a.dot(&b));
        assert_eq!(a.count_ones(), 3);
        assert_eq!(b.first_one(), Some(64));
    }

    #[test]
    fn membership_returns_combination() {
        let gens = [bv("1100"), bv("0110"), bv("0011")];
        match span_membership(&gens, &bv("1001")) {
            SpanMembership::Inside(c) => {
                let mut sum = BitVec::zeros(4);
                for i in c {
                    sum.xor_assign(&gens[i]);
                }
                assert_eq!(sum, bv("1001"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn membership_returns_separating_functional() {
        let gens = [bv("1100"), bv("0110"), bv("0011")];
        match span_membership(&gens, &bv("1000")) {
            SpanMembership::Outside(f) => {
                assert!(gens.iter().all(|g| !f.dot(g)));
                assert!(f.dot(&bv("1000")));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn null_space_dimension() {
        let rows = [bv("1100"), bv("0110")];
        let ns = null_space(&rows, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(rows.iter().all(|r| !r.dot(x)));
        }
        assert_eq!(null_space(&[], 3).len(), 3);
    }
}
