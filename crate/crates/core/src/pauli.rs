//! Pauli operators, stabilizer codes and logical classes.
//!
//! An `n`-qubit Pauli operator is a `2n`-bit string `(x | z)`: bit `i` of the
//! x-part and bit `i` of the z-part select `X_i^{x_i} Z_i^{z_i}`. Phases are
//! discarded throughout, so products are plain XOR.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::gf2::{symplectic_unchecked, twist, BitMatrix, BitVector, EchelonBasis};

/// Default cap on `n - k` for coset enumeration (`2^26` representatives).
pub const DEFAULT_COSET_CAP_LOG2: u32 = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("illegal Pauli character {found:?} at index {position}")]
    Parse { position: usize, found: char },
    #[error("check matrix must have an even number of columns, found {0}")]
    OddColumns(usize),
    #[error("check matrix is not full rank: rank {rank} with {rows} rows")]
    NotFullRank { rank: usize, rows: usize },
    #[error("check rows {0} and {1} anticommute")]
    NonAbelian(usize, usize),
    #[error("operator acts on {found} qubits, expected {expected}")]
    QubitMismatch { expected: usize, found: usize },
    #[error("coset of 2^{log2} representatives exceeds the enumeration cap 2^{cap}")]
    TooLarge { log2: usize, cap: u32 },
    #[error("operator does not commute with check row {0}")]
    NotLogical(usize),
    #[error("line {line}: {message}")]
    CodeFile { line: usize, message: String },
}

/// A Pauli operator modulo phase, stored as a `2n`-bit `(x | z)` vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    vec: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            vec: BitVector::zeros(2 * n),
        }
    }

    /// Wraps a `(x | z)` vector. Panics if the length is odd.
    pub fn from_vector(vec: BitVector) -> Self {
        assert!(vec.len().is_multiple_of(2), "Pauli vectors have even length");
        Self { vec }
    }

    pub fn from_xz(x: &BitVector, z: &BitVector) -> Self {
        assert_eq!(x.len(), z.len());
        Self { vec: x.concat(z) }
    }

    /// Pure X-type operator acting on `qubits`.
    pub fn x_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self {
            vec: BitVector::from_indices(2 * n, qubits),
        }
    }

    /// Pure Z-type operator acting on `qubits`.
    pub fn z_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self {
            vec: BitVector::from_indices(2 * n, qubits.into_iter().map(|q| q + n)),
        }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.vec.len() / 2
    }

    #[inline]
    pub fn vector(&self) -> &BitVector {
        &self.vec
    }

    pub fn into_vector(self) -> BitVector {
        self.vec
    }

    pub fn x_part(&self) -> BitVector {
        self.vec.slice(0, self.num_qubits())
    }

    pub fn z_part(&self) -> BitVector {
        let n = self.num_qubits();
        self.vec.slice(n, n)
    }

    /// Qubits on which the operator acts nontrivially.
    pub fn support(&self) -> BitVector {
        let n = self.num_qubits();
        let mut s = BitVector::zeros(n);
        for i in self.vec.iter_ones() {
            s.set(if i < n { i } else { i - n }, true);
        }
        s
    }

    pub fn weight(&self) -> usize {
        self.support().count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.vec.is_zero()
    }

    pub fn is_x_type(&self) -> bool {
        self.z_part().is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x_part().is_zero()
    }

    /// Product modulo phase.
    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        PauliOperator {
            vec: self.vec.xor(&other.vec),
        }
    }

    pub fn mul_assign(&mut self, other: &PauliOperator) {
        self.vec.xor_assign(&other.vec);
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.vec.len(), other.vec.len());
        !symplectic_unchecked(&self.vec, &other.vec)
    }

    /// Single-qubit letter at position `i`.
    pub fn letter(&self, i: usize) -> char {
        let n = self.num_qubits();
        match (self.vec.get(i), self.vec.get(i + n)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Parses a `x-bits|z-bits` string.
    pub fn parse_bits(s: &str) -> Result<Self, PauliError> {
        let (xs, zs) = s.split_once('|').ok_or(PauliError::Parse {
            position: s.len(),
            found: '|',
        })?;
        if xs.len() != zs.len() {
            return Err(PauliError::QubitMismatch {
                expected: xs.len(),
                found: zs.len(),
            });
        }
        let mut bits = Vec::with_capacity(2 * xs.len());
        for (pos, ch) in xs.chars().chain(zs.chars()).enumerate() {
            let position = if pos < xs.len() { pos } else { pos + 1 };
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(PauliError::Parse { position, found }),
            }
        }
        Ok(Self {
            vec: BitVector::from_bools(&bits),
        })
    }
}

/// Parses a string over `{I, X, Y, Z}`.
pub fn parse_pauli_string(s: &str) -> Result<PauliOperator, PauliError> {
    let letters: Vec<char> = s.chars().collect();
    let n = letters.len();
    let mut vec = BitVector::zeros(2 * n);
    for (i, &c) in letters.iter().enumerate() {
        let (x, z) = match c {
            'I' => (false, false),
            'X' => (true, false),
            'Y' => (true, true),
            'Z' => (false, true),
            found => return Err(PauliError::Parse { position: i, found }),
        };
        vec.set(i, x);
        vec.set(i + n, z);
    }
    Ok(PauliOperator { vec })
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains('|') {
            Self::parse_bits(s)
        } else {
            parse_pauli_string(s)
        }
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.num_qubits() {
            write!(f, "{}", self.letter(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl Serialize for PauliOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A stabilizer code given by a full-rank, symplectically self-orthogonal
/// `(n - k) × 2n` check matrix.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    checks: BitMatrix,
    span: EchelonBasis,
    n: usize,
    k: usize,
    coset_cap_log2: u32,
}

impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.checks == other.checks
    }
}

impl Eq for StabilizerCode {}

/// Validates a check matrix and wraps it as a code.
pub fn validate(checks: BitMatrix) -> Result<StabilizerCode, PauliError> {
    StabilizerCode::new(checks)
}

impl StabilizerCode {
    pub fn new(checks: BitMatrix) -> Result<Self, PauliError> {
        if !checks.ncols().is_multiple_of(2) {
            return Err(PauliError::OddColumns(checks.ncols()));
        }
        let n = checks.ncols() / 2;
        let twisted: Vec<BitVector> = checks.rows().iter().map(twist).collect();
        for i in 0..checks.nrows() {
            for j in (i + 1)..checks.nrows() {
                if twisted[i].dot(checks.row(j)) {
                    return Err(PauliError::NonAbelian(i, j));
                }
            }
        }
        let mut span = EchelonBasis::new(2 * n);
        for r in checks.rows() {
            span.insert(r.clone());
        }
        if span.rank() != checks.nrows() {
            return Err(PauliError::NotFullRank {
                rank: span.rank(),
                rows: checks.nrows(),
            });
        }
        if checks.nrows() > n {
            // an isotropic subspace has dimension at most n, so this is
            // unreachable for abelian full-rank input
            return Err(PauliError::NotFullRank {
                rank: span.rank(),
                rows: checks.nrows(),
            });
        }
        let k = n - checks.nrows();
        Ok(Self {
            checks,
            span,
            n,
            k,
            coset_cap_log2: DEFAULT_COSET_CAP_LOG2,
        })
    }

    /// Builds a code from generators that may be linearly dependent,
    /// keeping the first independent subset. Returns the code and the
    /// number of rows dropped.
    pub fn from_generators(generators: BitMatrix) -> Result<(Self, usize), PauliError> {
        let kept = generators.independent_rows();
        let removed = generators.nrows() - kept.nrows();
        Ok((Self::new(kept)?, removed))
    }

    pub fn from_paulis(n: usize, ops: &[PauliOperator]) -> Result<Self, PauliError> {
        if let Some(bad) = ops.iter().find(|p| p.num_qubits() != n) {
            return Err(PauliError::QubitMismatch {
                expected: n,
                found: bad.num_qubits(),
            });
        }
        let rows = ops.iter().map(|p| p.vector().clone()).collect();
        let checks = BitMatrix::from_rows(2 * n, rows).expect("lengths checked");
        Self::new(checks)
    }

    /// Convenience constructor from Pauli strings; panics on bad input.
    pub fn from_strings(rows: &[&str]) -> Result<Self, PauliError> {
        let ops: Vec<PauliOperator> = rows
            .iter()
            .map(|s| parse_pauli_string(s))
            .collect::<Result<_, _>>()?;
        let n = ops.first().map_or(0, |p| p.num_qubits());
        Self::from_paulis(n, &ops)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of independent stabilizer generators, `n - k`.
    #[inline]
    pub fn num_generators(&self) -> usize {
        self.n - self.k
    }

    #[inline]
    /// Largest `n - k` for which cosets may be enumerated.
    pub fn coset_cap_log2(&self) -> u32 {
        self.coset_cap_log2
    }

    pub fn set_coset_cap_log2(&mut self, cap: u32) {
        self.coset_cap_log2 = cap;
    }

    pub fn with_coset_cap_log2(mut self, cap: u32) -> Self {
        self.coset_cap_log2 = cap;
        self
    }

    pub fn checks(&self) -> &BitMatrix {
        &self.checks
    }

    pub fn generators(&self) -> Vec<PauliOperator> {
        self.checks
            .rows()
            .iter()
            .map(|r| PauliOperator::from_vector(r.clone()))
            .collect()
    }

    pub fn is_stabilizer(&self, p: &PauliOperator) -> bool {
        p.num_qubits() == self.n && self.span.contains(p.vector())
    }

    /// True iff `p` commutes with every check row.
    pub fn commutes_with_all(&self, p: &PauliOperator) -> bool {
        let t = twist(p.vector());
        self.checks.rows().iter().all(|r| !t.dot(r))
    }

    /// True iff `p` is a logical operator, trivial or not.
    pub fn is_logical(&self, p: &PauliOperator) -> bool {
        p.num_qubits() == self.n && self.commutes_with_all(p)
    }

    /// Single-qubit Paulis that commute with every generator without being
    /// stabilizers, as `(qubit, letter)` pairs. Empty iff no nontrivial
    /// logical operator has weight one.
    pub fn undetected_single_qubit_errors(&self) -> Vec<(usize, char)> {
        let mut out = Vec::new();
        for q in 0..self.n {
            for letter in ['X', 'Y', 'Z'] {
                let mut vec = BitVector::zeros(2 * self.n);
                if letter != 'Z' {
                    vec.set(q, true);
                }
                if letter != 'X' {
                    vec.set(q + self.n, true);
                }
                let p = PauliOperator::from_vector(vec);
                if self.commutes_with_all(&p) && !self.is_stabilizer(&p) {
                    out.push((q, letter));
                }
            }
        }
        out
    }

    /// Parses the text code format: a header line `n k` followed by
    /// `n - k` rows, each a Pauli string or an `x-bits|z-bits` string.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self, PauliError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(PauliError::CodeFile {
            line: 1,
            message: "missing header \"n k\"".into(),
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| PauliError::CodeFile {
                line: hline,
                message: format!("expected a nonnegative integer, found {s:?}"),
            })
        };
        if nums.len() != 2 {
            return Err(PauliError::CodeFile {
                line: hline,
                message: "header must be \"n k\"".into(),
            });
        }
        let n = parse(nums[0])?;
        let k = parse(nums[1])?;
        if k > n {
            return Err(PauliError::CodeFile {
                line: hline,
                message: format!("k = {k} exceeds n = {n}"),
            });
        }
        let mut rows = Vec::new();
        for (line, l) in lines {
            let op: PauliOperator = l.parse().map_err(|e: PauliError| PauliError::CodeFile {
                line,
                message: e.to_string(),
            })?;
            if op.num_qubits() != n {
                return Err(PauliError::CodeFile {
                    line,
                    message: format!("row acts on {} qubits, expected {n}", op.num_qubits()),
                });
            }
            rows.push(op.into_vector());
        }
        if rows.len() != n - k {
            return Err(PauliError::CodeFile {
                line: hline,
                message: format!("expected {} check rows, found {}", n - k, rows.len()),
            });
        }
        let checks = BitMatrix::from_rows(2 * n, rows).expect("row lengths checked");
        Self::new(checks)
    }

    /// Renders the code in the text format accepted by [`Self::parse_text`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k);
        for g in self.generators() {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Logical classes of this code for a given basis, by label.
    pub fn class<'a>(&'a self, basis: &LogicalBasis, label: ClassLabel) -> LogicalClass<'a> {
        LogicalClass::new(self, basis.class_rep(label))
    }
}

/// A logical class label: `2k` exponent bits, bit `i < k` for `X̄_{i+1}` and
/// bit `k + i` for `Z̄_{i+1}`. Rendered least-significant bit first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassLabel {
    pub bits: u64,
    pub k: usize,
}

impl ClassLabel {
    pub fn new(bits: u64, k: usize) -> Self {
        assert!(2 * k < 64, "class labels support k < 32");
        assert!(bits < (1u64 << (2 * k)), "label out of range");
        Self { bits, k }
    }

    /// All nontrivial labels `1 .. 4^k` in increasing order.
    pub fn nontrivial(k: usize) -> impl Iterator<Item = ClassLabel> {
        assert!(2 * k < 64, "class labels support k < 32");
        (1u64..(1u64 << (2 * k))).map(move |bits| ClassLabel { bits, k })
    }

    pub fn x_bits(&self) -> u64 {
        self.bits & ((1u64 << self.k) - 1)
    }

    pub fn z_bits(&self) -> u64 {
        self.bits >> self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }

    pub fn parse(s: &str) -> Option<ClassLabel> {
        if !s.len().is_multiple_of(2) || s.len() >= 64 {
            return None;
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return None,
            }
        }
        Some(ClassLabel { bits, k: s.len() / 2 })
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..2 * self.k {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `k` conjugate pairs of logical operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalBasis {
    pub x_ops: Vec<PauliOperator>,
    pub z_ops: Vec<PauliOperator>,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.x_ops.len()
    }

    /// Representative `∏ X̄_i^{a_i} ∏ Z̄_i^{b_i}` for a label.
    pub fn class_rep(&self, label: ClassLabel) -> PauliOperator {
        let k = self.k();
        assert_eq!(label.k, k, "label and basis disagree on k");
        let n = self.x_ops.first().map_or(0, |p| p.num_qubits());
        let mut rep = PauliOperator::identity(n);
        for i in 0..k {
            if label.bits >> i & 1 == 1 {
                rep.mul_assign(&self.x_ops[i]);
            }
            if label.bits >> (k + i) & 1 == 1 {
                rep.mul_assign(&self.z_ops[i]);
            }
        }
        rep
    }

    /// Label of the class containing the logical operator `p`.
    pub fn label_of(&self, p: &PauliOperator) -> ClassLabel {
        let k = self.k();
        let mut bits = 0u64;
        for i in 0..k {
            // the X̄_i exponent is detected by Z̄_i and vice versa
            if !p.commutes_with(&self.z_ops[i]) {
                bits |= 1 << i;
            }
            if !p.commutes_with(&self.x_ops[i]) {
                bits |= 1 << (k + i);
            }
        }
        ClassLabel { bits, k }
    }

    /// Checks the basis invariants against `code`.
    pub fn satisfies_invariants(&self, code: &StabilizerCode) -> bool {
        let k = code.k();
        if self.x_ops.len() != k || self.z_ops.len() != k {
            return false;
        }
        let all: Vec<&PauliOperator> = self.x_ops.iter().chain(&self.z_ops).collect();
        if all.iter().any(|p| !code.is_logical(p) || code.is_stabilizer(p)) {
            return false;
        }
        for i in 0..k {
            for j in 0..k {
                let anti = !self.x_ops[i].commutes_with(&self.z_ops[j]);
                if anti != (i == j) {
                    return false;
                }
                if !self.x_ops[i].commutes_with(&self.x_ops[j])
                    || !self.z_ops[i].commutes_with(&self.z_ops[j])
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Extracts `k` conjugate logical pairs by symplectic Gram–Schmidt over a
/// complement of the stabilizer inside its normalizer.
pub fn logical_basis(code: &StabilizerCode) -> LogicalBasis {
    let n = code.n();
    let twisted_rows: Vec<BitVector> = code.checks().rows().iter().map(twist).collect();
    let twisted = BitMatrix::from_rows(2 * n, twisted_rows).expect("uniform rows");
    let normalizer = twisted.kernel_basis();

    let mut span = code.span.clone();
    let mut pool: Vec<BitVector> = normalizer
        .into_rows()
        .into_iter()
        .filter(|v| span.insert(v.clone()))
        .collect();
    debug_assert_eq!(pool.len(), 2 * code.k());

    let mut x_ops = Vec::with_capacity(code.k());
    let mut z_ops = Vec::with_capacity(code.k());
    while !pool.is_empty() {
        let a = pool.remove(0);
        let partner = pool
            .iter()
            .position(|w| symplectic_unchecked(&a, w))
            .expect("symplectic form is nondegenerate on the normalizer quotient");
        let b = pool.remove(partner);
        for w in pool.iter_mut() {
            let with_b = symplectic_unchecked(w, &b);
            let with_a = symplectic_unchecked(w, &a);
            if with_b {
                w.xor_assign(&a);
            }
            if with_a {
                w.xor_assign(&b);
            }
        }
        x_ops.push(PauliOperator::from_vector(a));
        z_ops.push(PauliOperator::from_vector(b));
    }
    LogicalBasis { x_ops, z_ops }
}

/// A logical class `L̄`: all operators `rep · S` for `S` in the stabilizer
/// group.
#[derive(Clone, Debug)]
pub struct LogicalClass<'a> {
    code: &'a StabilizerCode,
    rep: PauliOperator,
}

impl<'a> LogicalClass<'a> {
    /// Panics if `rep` has the wrong qubit count or is not a logical
    /// operator.
    pub fn new(code: &'a StabilizerCode, rep: PauliOperator) -> Self {
        assert_eq!(rep.num_qubits(), code.n(), "representative qubit count");
        assert!(code.is_logical(&rep), "representative must commute with the stabilizer");
        Self { code, rep }
    }

    /// Fallible variant of [`Self::new`].
    pub fn try_new(code: &'a StabilizerCode, rep: PauliOperator) -> Result<Self, PauliError> {
        if rep.num_qubits() != code.n() {
            return Err(PauliError::QubitMismatch {
                expected: code.n(),
                found: rep.num_qubits(),
            });
        }
        if !code.is_logical(&rep) {
            let row = code
                .generators()
                .iter()
                .position(|g| !g.commutes_with(&rep))
                .unwrap_or(0);
            return Err(PauliError::NotLogical(row));
        }
        Ok(Self { code, rep })
    }

    pub fn code(&self) -> &'a StabilizerCode {
        self.code
    }

    pub fn rep(&self) -> &PauliOperator {
        &self.rep
    }

    pub fn is_trivial(&self) -> bool {
        self.code.is_stabilizer(&self.rep)
    }

    /// Number of representatives, as `log2`.
    pub fn coset_log2(&self) -> usize {
        self.code.num_generators()
    }

    /// Membership by the rank test: appending `p · rep` to the check matrix
    /// leaves the rank at `n - k` iff `p` represents this class.
    pub fn is_representative(&self, p: &PauliOperator) -> bool {
        if p.num_qubits() != self.code.n() {
            return false;
        }
        let mut extended = self.code.span.clone();
        !extended.insert(p.mul(&self.rep).into_vector())
    }

    /// All `2^{n-k}` representatives in Gray-code order over generator
    /// subsets, starting from `rep`.
    pub fn enumerate(&self, cap_log2: u32) -> Result<CosetIter<'a>, PauliError> {
        let log2 = self.coset_log2();
        if log2 > cap_log2 as usize || log2 >= 64 {
            return Err(PauliError::TooLarge { log2, cap: cap_log2 });
        }
        Ok(CosetIter::new(self.code.checks().rows(), self.rep.vector().clone()))
    }
}

/// Enumerates a class, honouring the code's coset cap.
pub fn enumerate_class<'a>(cls: &LogicalClass<'a>) -> Result<CosetIter<'a>, PauliError> {
    cls.enumerate(cls.code.coset_cap_log2)
}

/// Gray-code walk over `rep + span(generators)`.
pub struct CosetIter<'a> {
    gens: &'a [BitVector],
    current: BitVector,
    step: u64,
    total: u64,
}

impl<'a> CosetIter<'a> {
    pub fn new(gens: &'a [BitVector], start: BitVector) -> Self {
        Self {
            gens,
            current: start,
            step: 0,
            total: 1u64 << gens.len(),
        }
    }

    /// Visits every element as a raw `(x | z)` vector without allocating.
    pub fn for_each_vector(mut self, mut f: impl FnMut(&BitVector)) {
        while self.step < self.total {
            if self.step > 0 {
                let g = self.step.trailing_zeros() as usize;
                self.current.xor_assign(&self.gens[g]);
            }
            f(&self.current);
            self.step += 1;
        }
    }
}

impl Iterator for CosetIter<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<Self::Item> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let g = self.step.trailing_zeros() as usize;
            self.current.xor_assign(&self.gens[g]);
        }
        self.step += 1;
        Some(PauliOperator::from_vector(self.current.clone()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CosetIter<'_> {}

/// Support of a raw `(x | z)` vector of an `n`-qubit operator.
pub(crate) fn support_of(vec: &BitVector, n: usize) -> BitVector {
    vec.slice(0, n).or(&vec.slice(n, n))
}
