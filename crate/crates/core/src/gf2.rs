//! Bit-packed linear algebra over GF(2).
//!
//! Vectors are stored 64 entries per machine word; addition is XOR. Row
//! reduction always picks the leftmost available pivot column and, within
//! that column, the topmost available row, so every routine here is
//! deterministic for a fixed input.

use std::fmt;

use thiserror::Error;

/// Errors raised by the GF(2) kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("symplectic vectors must have even length, found {0}")]
    OddLength(usize),
}

const WORD: usize = 64;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; word_count(len)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = !0;
        }
        v.clear_tail();
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero entry counts as 1.
    pub fn from_bits<T: Copy + Into<u64>>(bits: &[T]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b.into() != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with ones at `indices`.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Wraps raw words; bits past `len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(word_count(len), 0);
        let mut v = Self { words, len };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place addition. Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        BitVector { words, len: self.len }
    }

    pub fn or(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        BitVector { words, len: self.len }
    }

    /// True iff every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    /// Entries `start..start + len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        let (first, off) = (start / 64, start % 64);
        let nwords = len.div_ceil(64);
        let words = (0..nwords)
            .map(|w| {
                let lo = self.words.get(first + w).copied().unwrap_or(0) >> off;
                let hi = if off == 0 {
                    0
                } else {
                    self.words.get(first + w + 1).copied().unwrap_or(0) << (64 - off)
                };
                lo | hi
            })
            .collect();
        BitVector::from_words(len, words)
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Kronecker product of two row vectors.
    pub fn kron(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len * other.len);
        for i in self.iter_ones() {
            for j in other.iter_ones() {
                out.set(i * other.len + j, true);
            }
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Symplectic product of two `2n`-length vectors laid out as `(x | z)`.
///
/// Returns `true` (the GF(2) element 1) iff the corresponding Pauli
/// operators anticommute.
pub fn symplectic_product(u: &BitVector, v: &BitVector) -> Result<bool, Gf2Error> {
    if u.len() != v.len() {
        return Err(Gf2Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    if !u.len().is_multiple_of(2) {
        return Err(Gf2Error::OddLength(u.len()));
    }
    Ok(symplectic_unchecked(u, v))
}

pub(crate) fn symplectic_unchecked(u: &BitVector, v: &BitVector) -> bool {
    twist(u).dot(v)
}

/// Swaps the two halves of a `(x | z)` vector, so that
/// `twist(u).dot(v)` is the symplectic product.
pub fn twist(u: &BitVector) -> BitVector {
    let n = u.len() / 2;
    let mut out = BitVector::zeros(u.len());
    for i in u.iter_ones() {
        if i < n {
            out.set(i + n, true);
        } else {
            out.set(i - n, true);
        }
    }
    out
}

/// An ordered list of equal-length rows over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    ncols: usize,
}

impl BitMatrix {
    /// An empty matrix (zero rows) with `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::from_indices(n, [i])).collect(),
            ncols: n,
        }
    }

    /// Builds a matrix from rows; all rows must share the length `ncols`.
    pub fn from_rows(ncols: usize, rows: Vec<BitVector>) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Gf2Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, ncols })
    }

    /// Builds a matrix from nested 0/1 entries. Panics on ragged input.
    pub fn from_dense<T: Copy + Into<u64>>(rows: &[Vec<T>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<BitVector> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                BitVector::from_bits(r)
            })
            .collect();
        Self { rows, ncols }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<(), Gf2Error> {
        if row.len() != self.ncols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut rows = Vec::with_capacity(self.nrows() * other.nrows());
        for a in &self.rows {
            for b in &other.rows {
                rows.push(a.kron(b));
            }
        }
        BitMatrix {
            rows,
            ncols: self.ncols * other.ncols,
        }
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.nrows() != other.nrows() {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.nrows(),
                found: other.nrows(),
            });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect();
        Ok(BitMatrix {
            rows,
            ncols: self.ncols + other.ncols,
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.ncols != other.ncols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.ncols,
                found: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            rows,
            ncols: self.ncols,
        })
    }

    /// Computes `self · vᵀ`, one bit per row.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.ncols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        Ok(BitVector::from_bools(
            &self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>(),
        ))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.ncols != other.nrows() {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zeros(other.ncols);
                for j in r.iter_ones() {
                    acc.xor_assign(&other.rows[j]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows,
            ncols: other.ncols,
        })
    }

    /// Dimension of the row span.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.ncols);
        for r in &self.rows {
            basis.insert(r.clone());
        }
        basis.rank()
    }

    /// Reduced row echelon form and its strictly increasing pivot columns.
    ///
    /// The output has exactly `nrows` rows: the nonzero reduced rows first,
    /// then zero rows.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (
            BitMatrix {
                rows,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    /// True iff `v` lies in the row span.
    pub fn in_span(&self, v: &BitVector) -> Result<bool, Gf2Error> {
        if v.len() != self.ncols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        let mut basis = EchelonBasis::new(self.ncols);
        for r in &self.rows {
            basis.insert(r.clone());
        }
        Ok(basis.contains(v))
    }

    /// A basis of `{x : self · xᵀ = 0}`, one row per free column of the
    /// reduced echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = BitMatrix::empty(self.ncols);
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut x = BitVector::zeros(self.ncols);
            x.set(free, true);
            for (i, &p) in pivots.iter().enumerate() {
                if reduced.rows[i].get(free) {
                    x.set(p, true);
                }
            }
            out.rows.push(x);
        }
        out
    }

    /// The rows that are linearly independent of the rows before them.
    pub fn independent_rows(&self) -> BitMatrix {
        let mut basis = EchelonBasis::new(self.ncols);
        let rows = self
            .rows
            .iter()
            .filter(|r| basis.insert((*r).clone()))
            .cloned()
            .collect();
        BitMatrix {
            rows,
            ncols: self.ncols,
        }
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.nrows();
        if n != self.ncols {
            return None;
        }
        let aug = self.hstack(&BitMatrix::identity(n)).ok()?;
        let (reduced, pivots) = aug.rref();
        if pivots.len() < n || pivots.last().is_some_and(|&p| p >= n) {
            return None;
        }
        let rows = reduced.rows.iter().map(|r| r.slice(n, n)).collect();
        Some(BitMatrix { rows, ncols: n })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained echelon basis of a subspace.
///
/// Each stored row has a distinct leading one, and rows are kept sorted by
/// that leading position; reduction against them is a single pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<(usize, BitVector)>,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Residual of `v` after elimination against the basis; zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (lead, row) in &self.rows {
            if r.get(*lead) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the basis; returns false if it was already in the span.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.ncols, "echelon basis dimension mismatch");
        let r = self.reduce(&v);
        let Some(lead) = r.first_one() else {
            return false;
        };
        let at = self.rows.partition_point(|(l, _)| *l < lead);
        self.rows.insert(at, (lead, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_dense(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn v(bits: &[u8]) -> BitVector {
        BitVector::from_bits(bits)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(BitMatrix::empty(3).rank(), 0);
    }

    #[test]
    fn rref_examples() {
        let (r, p) = BitMatrix::zeros(2, 3).rref();
        assert_eq!(r, BitMatrix::zeros(2, 3));
        assert!(p.is_empty());

        let (r, p) = m(&[&[1, 1], &[0, 1]]).rref();
        assert_eq!(r, m(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn in_span_examples() {
        let id2 = BitMatrix::identity(2);
        assert!(id2.in_span(&v(&[0, 0])).unwrap());
        assert!(id2.in_span(&v(&[1, 1])).unwrap());
        let a = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert!(!a.in_span(&v(&[1, 0, 0])).unwrap());
        assert_eq!(
            a.in_span(&v(&[1, 0])),
            Err(Gf2Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(BitMatrix::empty(3).in_span(&v(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(BitMatrix::identity(3).kernel_basis().nrows(), 0);
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, m(&[&[1, 1]]));
        let k = m(&[&[1, 1, 0], &[0, 1, 1]]).kernel_basis();
        assert_eq!(k, m(&[&[1, 1, 1]]));
    }

    #[test]
    fn kernel_matches_exhaustive_scan() {
        // H = (1 1 0; 0 1 1): scan all 8 vectors.
        let h = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let zeros: Vec<u8> = (0u8..8)
            .filter(|&x| {
                let x = v(&[x & 1, (x >> 1) & 1, (x >> 2) & 1]);
                h.mul_vec(&x).unwrap().is_zero()
            })
            .collect();
        assert_eq!(zeros, vec![0, 7]);
    }

    #[test]
    fn symplectic_examples() {
        // one qubit: X = (1|0), Z = (0|1)
        assert!(!symplectic_product(&v(&[1, 0]), &v(&[1, 0])).unwrap());
        assert!(symplectic_product(&v(&[1, 0]), &v(&[0, 1])).unwrap());
        // XX vs ZZ
        assert!(!symplectic_product(&v(&[1, 1, 0, 0]), &v(&[0, 0, 1, 1])).unwrap());
        assert_eq!(
            symplectic_product(&v(&[1, 0, 0]), &v(&[1, 0, 0])),
            Err(Gf2Error::OddLength(3))
        );
    }

    #[test]
    fn steane_rank() {
        let h = [[1u8, 0, 0, 1, 0, 1, 1], [0, 1, 0, 1, 1, 0, 1], [0, 0, 1, 0, 1, 1, 1]];
        let mut rows = Vec::new();
        for r in &h {
            let mut row = r.to_vec();
            row.extend([0; 7]);
            rows.push(row);
        }
        for r in &h {
            let mut row = vec![0u8; 7];
            row.extend_from_slice(r);
            rows.push(row);
        }
        assert_eq!(BitMatrix::from_dense(&rows).rank(), 6);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), BitMatrix::identity(3));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut a = BitVector::zeros(130);
        a.set(0, true);
        a.set(64, true);
        a.set(129, true);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.count_ones(), 3);
        assert_eq!(BitVector::ones(130).count_ones(), 130);
        assert_eq!(a.slice(60, 10).iter_ones().collect::<Vec<_>>(), vec![4]);
    }
}
