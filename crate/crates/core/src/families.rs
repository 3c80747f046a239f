//! CSS codes, concatenation and hypergraph products, with checkers for the
//! disjointness bounds each family satisfies.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::disjointness::{code_disjointness, delta_star, packing_lp};
use crate::gf2::{BitMatrix, BitVector, EchelonBasis};
use crate::hierarchy::level_bound;
use crate::logical::distance_report;
use crate::pauli::{
    logical_basis, support_of, ClassLabel, CosetIter, LogicalBasis, LogicalClass, PauliOperator,
    StabilizerCode,
};
use crate::{ratio_serde, Error, Integer, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PauliType {
    X,
    Z,
}

/// A stabilizer code whose stabilizer is generated by pure-X and pure-Z
/// operators, with a logical basis of pure-X `X̄_i` and pure-Z `Z̄_i`.
#[derive(Debug, Clone)]
pub struct CssCode {
    pub code: StabilizerCode,
    /// X-type generators as `n`-bit rows.
    pub x_rows: BitMatrix,
    /// Z-type generators as `n`-bit rows.
    pub z_rows: BitMatrix,
    pub standard_basis: LogicalBasis,
}

/// Rows of the stabilizer span whose `drop` half vanishes, as `n`-bit
/// vectors of their `keep` half.
fn pure_subspace(code: &StabilizerCode, keep_x: bool) -> BitMatrix {
    let n = code.n();
    // eliminate on the unwanted half first; rows left without a pivot there
    // span the pure subspace
    let reordered: Vec<BitVector> = code
        .checks()
        .rows()
        .iter()
        .map(|r| {
            let (x, z) = (r.slice(0, n), r.slice(n, n));
            if keep_x {
                z.concat(&x)
            } else {
                x.concat(&z)
            }
        })
        .collect();
    let m = BitMatrix::from_rows(2 * n, reordered).expect("equal lengths");
    let (rref, pivots) = m.rref();
    let rows = pivots
        .iter()
        .enumerate()
        .filter(|(_, &p)| p >= n)
        .map(|(i, _)| rref.row(i).slice(n, n))
        .collect();
    BitMatrix::from_rows(n, rows).expect("equal lengths")
}

/// Vectors of `ker(dual)` that are independent modulo `span`, one per
/// missing dimension.
fn complement_in_kernel(dual: &BitMatrix, span: &BitMatrix, n: usize) -> Vec<BitVector> {
    let mut echelon = EchelonBasis::new(n);
    for r in span.rows() {
        echelon.insert(r.clone());
    }
    let kernel = if dual.nrows() == 0 {
        BitMatrix::identity(n)
    } else {
        dual.kernel_basis()
    };
    kernel
        .rows()
        .iter()
        .filter(|v| echelon.insert((*v).clone()))
        .cloned()
        .collect()
}

impl CssCode {
    /// Recognizes a CSS code: the pure-X and pure-Z parts of the stabilizer
    /// must together have full dimension.
    pub fn from_code(code: StabilizerCode) -> Result<Self> {
        let n = code.n();
        let x_rows = pure_subspace(&code, true);
        let z_rows = pure_subspace(&code, false);
        if x_rows.nrows() + z_rows.nrows() != code.num_generators() {
            return Err(Error::NotCss(format!(
                "pure-X rank {} plus pure-Z rank {} is below {}",
                x_rows.nrows(),
                z_rows.nrows(),
                code.num_generators()
            )));
        }
        let xs = complement_in_kernel(&z_rows, &x_rows, n);
        let zs = complement_in_kernel(&x_rows, &z_rows, n);
        let k = code.k();
        debug_assert_eq!((xs.len(), zs.len()), (k, k));
        // make the pairing between the two families the identity
        let pairing = BitMatrix::from_rows(
            k,
            xs.iter()
                .map(|a| BitVector::from_bools(&zs.iter().map(|b| a.dot(b)).collect::<Vec<_>>()))
                .collect(),
        )
        .expect("k columns");
        let inv = pairing.inverse().expect("the pairing of a logical basis is invertible");
        let zero = BitVector::zeros(n);
        let x_ops = xs
            .iter()
            .map(|a| PauliOperator::from_xz(a, &zero))
            .collect();
        let z_ops = (0..k)
            .map(|j| {
                let mut b = BitVector::zeros(n);
                for (l, bl) in zs.iter().enumerate() {
                    if inv.get(l, j) {
                        b.xor_assign(bl);
                    }
                }
                PauliOperator::from_xz(&zero, &b)
            })
            .collect();
        let standard_basis = LogicalBasis { x_ops, z_ops };
        debug_assert!(standard_basis.satisfies_invariants(&code));
        Ok(Self {
            code,
            x_rows,
            z_rows,
            standard_basis,
        })
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    /// Nontrivial labels of pure-`p` classes in the standard basis.
    pub fn pure_labels(&self, p: PauliType) -> Vec<ClassLabel> {
        let k = self.k();
        (1u64..(1u64 << k))
            .map(|bits| match p {
                PauliType::X => ClassLabel::new(bits, k),
                PauliType::Z => ClassLabel::new(bits << k, k),
            })
            .collect()
    }

    pub fn class(&self, label: ClassLabel) -> LogicalClass<'_> {
        self.code.class(&self.standard_basis, label)
    }

    /// The representatives `rep · S` with `S` in the pure-`p` stabilizer
    /// subgroup.
    fn pure_coset_supports(&self, rep: &PauliOperator, p: PauliType) -> Result<Vec<BitVector>> {
        let n = self.n();
        let zero = BitVector::zeros(n);
        let gens: Vec<BitVector> = match p {
            PauliType::X => self.x_rows.rows().iter().map(|r| r.concat(&zero)).collect(),
            PauliType::Z => self.z_rows.rows().iter().map(|r| zero.concat(r)).collect(),
        };
        let cap = self.code.coset_cap_log2();
        if gens.len() > cap as usize {
            return Err(Error::from(crate::pauli::PauliError::TooLarge {
                log2: gens.len(),
                cap,
            }));
        }
        let mut supports = Vec::with_capacity(1 << gens.len());
        CosetIter::new(&gens, rep.vector().clone()).for_each_vector(|v| supports.push(support_of(v, n)));
        Ok(supports)
    }

    /// `Δ*` of a pure-`p` class with the LP restricted to pure-`p`
    /// representatives.
    pub fn pure_delta_star(&self, label: ClassLabel, p: PauliType) -> Result<Rational> {
        let rep = self.standard_basis.class_rep(label);
        Ok(packing_lp(&self.pure_coset_supports(&rep, p)?, self.n()).value)
    }
}

/// Splits a class into its standard-basis X-type and Z-type factors; a
/// missing factor is returned as the trivial class.
pub fn css_decompose<'a>(css: &'a CssCode, cls: &LogicalClass<'_>) -> Result<(LogicalClass<'a>, LogicalClass<'a>)> {
    if cls.is_trivial() {
        return Err(Error::TrivialClass);
    }
    if cls.code() != &css.code {
        return Err(Error::NotCss("class belongs to a different code".into()));
    }
    let label = css.standard_basis.label_of(cls.rep());
    let k = css.k();
    let x = ClassLabel::new(label.x_bits(), k);
    let z = ClassLabel::new(label.z_bits() << k, k);
    Ok((css.class(x), css.class(z)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PureRestriction {
    pub p: PauliType,
    #[serde(with = "ratio_serde")]
    pub full: Rational,
    #[serde(with = "ratio_serde")]
    pub restricted: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop3Verdict {
    pub class: ClassLabel,
    #[serde(with = "ratio_serde")]
    pub delta_star: Rational,
    /// `Δ*` of the X factor; `None` when the factor is trivial.
    #[serde(with = "ratio_serde::option")]
    pub delta_x: Option<Rational>,
    #[serde(with = "ratio_serde::option")]
    pub delta_z: Option<Rational>,
    /// `min_P Δ*(L̄^P)`.
    #[serde(with = "ratio_serde")]
    pub upper: Rational,
    /// `ab / (a + b - 1)` for factor values `a`, `b`; the nontrivial factor's
    /// value when the other is trivial.
    #[serde(with = "ratio_serde")]
    pub lower: Rational,
    pub upper_holds: bool,
    pub lower_holds: bool,
    pub pure_restrictions: Vec<PureRestriction>,
    pub pure_optimal: bool,
}

impl Prop3Verdict {
    pub fn holds(&self) -> bool {
        self.upper_holds && self.lower_holds && self.pure_optimal
    }
}

/// Checks `ab/(a+b-1) ≤ Δ*(L̄) ≤ min(a, b)` with `a`, `b` the values of the
/// pure factors, and that each pure factor reaches its optimum with pure
/// representatives alone.
pub fn check_prop3(css: &CssCode, cls: &LogicalClass<'_>) -> Result<Prop3Verdict> {
    let (xf, zf) = css_decompose(css, cls)?;
    let value = delta_star(cls)?.value;
    let factor = |f: &LogicalClass<'_>| -> Result<Option<Rational>> {
        if f.is_trivial() {
            Ok(None)
        } else {
            delta_star(f).map(|d| Some(d.value))
        }
    };
    let (dx, dz) = (factor(&xf)?, factor(&zf)?);
    let (upper, lower) = match (&dx, &dz) {
        (Some(a), Some(b)) => (
            a.clone().min(b.clone()),
            a * b / (a + b - Rational::one()),
        ),
        (Some(a), None) | (None, Some(a)) => (a.clone(), a.clone()),
        (None, None) => unreachable!("nontrivial class has a nontrivial factor"),
    };
    let mut pure_restrictions = Vec::new();
    for (p, f, full) in [(PauliType::X, &xf, &dx), (PauliType::Z, &zf, &dz)] {
        if let Some(full) = full {
            let label = css.standard_basis.label_of(f.rep());
            pure_restrictions.push(PureRestriction {
                p,
                full: full.clone(),
                restricted: css.pure_delta_star(label, p)?,
            });
        }
    }
    Ok(Prop3Verdict {
        class: css.standard_basis.label_of(cls.rep()),
        upper_holds: value <= upper,
        lower_holds: lower <= value,
        pure_optimal: pure_restrictions.iter().all(|r| r.full == r.restricted),
        delta_star: value,
        delta_x: dx,
        delta_z: dz,
        upper,
        lower,
        pure_restrictions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    #[serde(with = "ratio_serde")]
    pub lower: Rational,
    #[serde(with = "ratio_serde")]
    pub upper: Rational,
    #[serde(with = "ratio_serde")]
    pub delta: Rational,
    /// `lower < Δ(S) ≤ upper`.
    pub holds: bool,
}

/// `min Δ*` over the pure classes, halved and not, against `Δ(S)`.
pub fn css_sandwich(css: &CssCode) -> Result<Sandwich> {
    if css.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let labels: Vec<ClassLabel> = [PauliType::X, PauliType::Z]
        .into_iter()
        .flat_map(|p| css.pure_labels(p))
        .collect();
    let upper = labels
        .par_iter()
        .map(|&l| delta_star(&css.class(l)).map(|d| d.value))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("k ≥ 1");
    let lower = &upper / Rational::from_integer(Integer::from(2));
    let delta = code_disjointness(&css.code, &css.standard_basis)?.code_delta;
    Ok(Sandwich {
        holds: lower < delta && delta <= upper,
        lower,
        upper,
        delta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PTypeDisjointness {
    pub p: PauliType,
    /// Minimum over the pure classes; `None` when there are none.
    #[serde(with = "ratio_serde::option")]
    pub value: Option<Rational>,
    pub per_class: BTreeMap<ClassLabel, PTypeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PTypeEntry(#[serde(with = "ratio_serde")] pub Rational);

/// `Δ^P(S)`: the minimum of `Δ*` over nontrivial pure-`p` classes, each LP
/// restricted to pure-`p` representatives.
pub fn p_type_disjointness(css: &CssCode, p: PauliType) -> Result<PTypeDisjointness> {
    let labels = css.pure_labels(p);
    let values = labels
        .par_iter()
        .map(|&l| css.pure_delta_star(l, p))
        .collect::<Result<Vec<_>>>()?;
    let value = values.iter().min().cloned();
    Ok(PTypeDisjointness {
        p,
        value,
        per_class: labels.into_iter().zip(values.into_iter().map(PTypeEntry)).collect(),
    })
}

/// Block operator `⊗_i K^{P_i}` for an `n₁`-qubit operator, with `K^X`,
/// `K^Z` the inner basis pair and `K^Y = K^X K^Z`.
pub fn lift_operator(p: &PauliOperator, inner_basis: &LogicalBasis) -> PauliOperator {
    let n1 = p.num_qubits();
    let kx = &inner_basis.x_ops[0];
    let kz = &inner_basis.z_ops[0];
    let n2 = kx.num_qubits();
    let mut x = BitVector::zeros(n1 * n2);
    let mut z = BitVector::zeros(n1 * n2);
    let (px, pz) = (p.x_part(), p.z_part());
    for i in 0..n1 {
        for (on, k) in [(px.get(i), kx), (pz.get(i), kz)] {
            if on {
                for q in k.x_part().iter_ones() {
                    x.flip(i * n2 + q);
                }
                for q in k.z_part().iter_ones() {
                    z.flip(i * n2 + q);
                }
            }
        }
    }
    PauliOperator::from_xz(&x, &z)
}

/// `S₁ ◁ S₂`: each outer qubit `i` becomes the block of qubits
/// `i·n₂ .. (i+1)·n₂` encoded in the inner code.
pub fn concatenate(outer: &StabilizerCode, inner: &StabilizerCode, inner_basis: &LogicalBasis) -> Result<StabilizerCode> {
    if inner.k() != 1 || inner_basis.k() != 1 {
        return Err(Error::InnerNotK1(inner.k()));
    }
    let (n1, n2) = (outer.n(), inner.n());
    let n = n1 * n2;
    let mut rows = Vec::with_capacity(n - outer.k());
    for block in 0..n1 {
        for g in inner.generators() {
            let mut x = BitVector::zeros(n);
            let mut z = BitVector::zeros(n);
            for q in g.x_part().iter_ones() {
                x.set(block * n2 + q, true);
            }
            for q in g.z_part().iter_ones() {
                z.set(block * n2 + q, true);
            }
            rows.push(x.concat(&z));
        }
    }
    for g in outer.generators() {
        rows.push(lift_operator(&g, inner_basis).into_vector());
    }
    let mut code = StabilizerCode::new(BitMatrix::from_rows(2 * n, rows)?)?;
    code.set_coset_cap_log2(outer.coset_cap_log2().max(inner.coset_cap_log2()));
    Ok(code)
}

/// Logical basis of `S₁ ◁ S₂` obtained by lifting an outer basis.
pub fn concatenated_basis(outer_basis: &LogicalBasis, inner_basis: &LogicalBasis) -> LogicalBasis {
    LogicalBasis {
        x_ops: outer_basis.x_ops.iter().map(|p| lift_operator(p, inner_basis)).collect(),
        z_ops: outer_basis.z_ops.iter().map(|p| lift_operator(p, inner_basis)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceProducts {
    pub outer: (usize, usize),
    pub inner: (usize, usize),
    pub concatenated: (usize, usize),
    /// `d↓(S₁◁S₂) ≥ d↓(S₁)d↓(S₂)`.
    pub min_holds: bool,
    /// `d↑(S₁◁S₂) ≤ d↑(S₁)d↑(S₂)`.
    pub max_holds: bool,
}

/// Compares the `(d↓, d↑)` of a concatenated code with the products of the
/// factors' values.
pub fn check_concatenated_distances(
    outer: &StabilizerCode,
    inner: &StabilizerCode,
    inner_basis: &LogicalBasis,
) -> Result<DistanceProducts> {
    let cat = concatenate(outer, inner, inner_basis)?;
    let r1 = distance_report(outer, &logical_basis(outer))?;
    let r2 = distance_report(inner, inner_basis)?;
    let rc = distance_report(&cat, &logical_basis(&cat))?;
    Ok(DistanceProducts {
        outer: (r1.d_min, r1.d_max),
        inner: (r2.d_min, r2.d_max),
        concatenated: (rc.d_min, rc.d_max),
        min_holds: rc.d_min >= r1.d_min * r2.d_min,
        max_holds: rc.d_max <= r1.d_max * r2.d_max,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop4Verdict {
    #[serde(with = "ratio_serde")]
    pub outer_delta: Rational,
    #[serde(with = "ratio_serde")]
    pub inner_delta: Rational,
    #[serde(with = "ratio_serde")]
    pub concatenated_delta: Rational,
    /// `Δ(S₁◁S₂) ≥ Δ(S₁)Δ(S₂)`.
    pub product_holds: bool,
    /// Largest of the factors' level bounds; `None` if neither applies.
    pub m_max: Option<u64>,
    /// Level bound of the concatenated code, when it applies.
    pub concatenated_level: Option<u64>,
    /// The concatenated level bound does not exceed `m_max`.
    pub level_holds: bool,
    pub distances: DistanceProducts,
}

/// Checks the product bound on the disjointness of `S₁ ◁ S₂` and the
/// level bound inherited from the factors.
pub fn check_prop4(s1: &StabilizerCode, s2: &StabilizerCode, basis2: &LogicalBasis) -> Result<Prop4Verdict> {
    let basis1 = logical_basis(s1);
    let cat = concatenate(s1, s2, basis2)?;
    let basis_cat = concatenated_basis(&basis1, basis2);
    let distances = check_concatenated_distances(s1, s2, basis2)?;
    if distances.outer.0 <= 1 || distances.inner.0 <= 1 {
        return Err(Error::BoundInapplicable("both codes need min-distance above one".into()));
    }
    let d1 = code_disjointness(s1, &basis1)?.code_delta;
    let d2 = code_disjointness(s2, basis2)?.code_delta;
    let dc = code_disjointness(&cat, &basis_cat)?.code_delta;
    let level = |d_down: usize, d_up: usize, delta: &Rational| {
        level_bound(d_down as u64, d_up as u64, delta).ok().map(|b| b.m_max)
    };
    let m_max = [
        level(distances.outer.0, distances.outer.1, &d1),
        level(distances.inner.0, distances.inner.1, &d2),
    ]
    .into_iter()
    .flatten()
    .max();
    let concatenated_level = level(distances.concatenated.0, distances.concatenated.1, &dc);
    Ok(Prop4Verdict {
        product_holds: dc >= &d1 * &d2,
        level_holds: match (concatenated_level, m_max) {
            (Some(c), Some(m)) => c <= m,
            _ => true,
        },
        outer_delta: d1,
        inner_delta: d2,
        concatenated_delta: dc,
        m_max,
        concatenated_level,
        distances,
    })
}

/// A hypergraph product code and the number of dependent rows dropped from
/// its block matrix.
#[derive(Debug, Clone)]
pub struct HypergraphProduct {
    pub css: CssCode,
    pub block_rows: usize,
    pub removed_rows: usize,
}

fn require_full_rank(h: &BitMatrix, which: &'static str) -> Result<()> {
    if h.rank() != h.nrows().min(h.ncols()) || h.nrows() == 0 || h.ncols() == 0 {
        return Err(Error::InputNotFullRank { which });
    }
    Ok(())
}

/// The hypergraph product of `h1` (`m₁ × n₁`) and `h2` (`m₂ × n₂`) on
/// `n₁m₂ + m₁n₂` qubits, with X rows `(H₁⊗I | I⊗H₂)` and Z rows
/// `(I⊗H₂ᵀ | H₁ᵀ⊗I)`.
pub fn hypergraph_product(h1: &BitMatrix, h2: &BitMatrix) -> Result<HypergraphProduct> {
    require_full_rank(h1, "H1")?;
    require_full_rank(h2, "H2")?;
    let (m1, n1, m2, n2) = (h1.nrows(), h1.ncols(), h2.nrows(), h2.ncols());
    let n = n1 * m2 + m1 * n2;
    let x_block = h1.kron(&BitMatrix::identity(m2)).hstack(&BitMatrix::identity(m1).kron(h2))?;
    let z_block = BitMatrix::identity(n1)
        .kron(&h2.transpose())
        .hstack(&h1.transpose().kron(&BitMatrix::identity(n2)))?;
    let zero_x = BitMatrix::zeros(x_block.nrows(), n);
    let zero_z = BitMatrix::zeros(z_block.nrows(), n);
    let full = x_block.hstack(&zero_x)?.vstack(&zero_z.hstack(&z_block)?)?;
    let block_rows = full.nrows();
    let (code, removed_rows) = StabilizerCode::from_generators(full)?;
    Ok(HypergraphProduct {
        css: CssCode::from_code(code)?,
        block_rows,
        removed_rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Prop5Status {
    Holds,
    Violated,
    /// The product encodes no qubits, so its disjointness is undefined.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop5Verdict {
    pub n: usize,
    pub k: usize,
    #[serde(with = "ratio_serde::option")]
    pub delta: Option<Rational>,
    /// `Δ^X` of the classical codes `(H_i | 0)`; `None` for no X classes.
    #[serde(with = "ratio_serde::option")]
    pub delta_x1: Option<Rational>,
    #[serde(with = "ratio_serde::option")]
    pub delta_x2: Option<Rational>,
    /// `min_i Δ^X(S_i)`; `None` is unbounded.
    #[serde(with = "ratio_serde::option")]
    pub bound: Option<Rational>,
    pub status: Prop5Status,
}

/// The classical code `(H | 0)` as a CSS code.
pub fn classical_code(h: &BitMatrix) -> Result<CssCode> {
    let n = h.ncols();
    let rows = h
        .rows()
        .iter()
        .map(|r| r.concat(&BitVector::zeros(n)))
        .collect();
    let (code, _) = StabilizerCode::from_generators(BitMatrix::from_rows(2 * n, rows)?)?;
    CssCode::from_code(code)
}

/// Compares `Δ(S)` of the hypergraph product with `min_i Δ^X(S_i)`.
pub fn check_prop5(h1: &BitMatrix, h2: &BitMatrix) -> Result<Prop5Verdict> {
    let hp = hypergraph_product(h1, h2)?;
    let dx1 = p_type_disjointness(&classical_code(h1)?, PauliType::X)?.value;
    let dx2 = p_type_disjointness(&classical_code(h2)?, PauliType::X)?.value;
    let bound = [dx1.clone(), dx2.clone()].into_iter().flatten().min();
    let delta = if hp.css.k() == 0 {
        None
    } else {
        Some(code_disjointness(&hp.css.code, &hp.css.standard_basis)?.code_delta)
    };
    let status = match (&delta, &bound) {
        (None, _) => Prop5Status::Vacuous,
        (Some(_), None) => Prop5Status::Holds,
        (Some(d), Some(b)) if d <= b => Prop5Status::Holds,
        _ => Prop5Status::Violated,
    };
    Ok(Prop5Verdict {
        n: hp.css.n(),
        k: hp.css.k(),
        delta,
        delta_x1: dx1,
        delta_x2: dx2,
        bound,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn steane() -> CssCode {
        let code = StabilizerCode::from_strings(&[
            "XIIXIXX", "IXIXXIX", "IIXIXXX", "ZIIZIZZ", "IZIZZIZ", "IIZIZZZ",
        ])
        .unwrap();
        CssCode::from_code(code).unwrap()
    }

    fn css422() -> CssCode {
        CssCode::from_code(StabilizerCode::from_strings(&["XXXX", "ZZZZ"]).unwrap()).unwrap()
    }

    fn code412() -> StabilizerCode {
        StabilizerCode::from_strings(&["XXXX", "ZZII", "IIZZ"]).unwrap()
    }

    #[test]
    fn recognition() {
        let s = steane();
        assert_eq!((s.x_rows.nrows(), s.z_rows.nrows()), (3, 3));
        assert!(s.standard_basis.x_ops[0].is_x_type());
        assert!(s.standard_basis.z_ops[0].is_z_type());
        let perfect = StabilizerCode::from_strings(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).unwrap();
        assert!(matches!(CssCode::from_code(perfect), Err(Error::NotCss(_))));
        // a mixed generating set of a CSS stabilizer is still recognized
        let mixed = StabilizerCode::from_strings(&["YYYY", "ZZZZ"]).unwrap();
        assert!(CssCode::from_code(mixed).is_ok());
        let c = css422();
        assert!(c.standard_basis.satisfies_invariants(&c.code));
    }

    #[test]
    fn decomposition() {
        let s = steane();
        let y = s.class(ClassLabel::new(0b11, 1));
        let (x, z) = css_decompose(&s, &y).unwrap();
        assert!(y.is_representative(&x.rep().mul(z.rep())));
        let (x, z) = css_decompose(&s, &s.class(ClassLabel::new(0b01, 1))).unwrap();
        assert!(!x.is_trivial() && z.is_trivial());
    }

    #[test]
    fn steane_prop3_and_sandwich() {
        let s = steane();
        for label in ClassLabel::nontrivial(1) {
            let v = check_prop3(&s, &s.class(label)).unwrap();
            assert!(v.holds(), "{v:?}");
        }
        let w = css_sandwich(&s).unwrap();
        assert_eq!(w.upper, q(7, 3));
        assert!(w.holds);
        assert_eq!(p_type_disjointness(&s, PauliType::Z).unwrap().value, Some(q(7, 3)));
    }

    #[test]
    fn css422_checks() {
        let c = css422();
        for label in ClassLabel::nontrivial(2) {
            assert!(check_prop3(&c, &c.class(label)).unwrap().holds());
        }
        assert!(css_sandwich(&c).unwrap().holds);
    }

    #[test]
    fn repetition_p_type() {
        let h = BitMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1]]);
        let c = classical_code(&h).unwrap();
        let d = code_disjointness(&c.code, &c.standard_basis).unwrap().code_delta;
        assert_eq!(d, q(1, 1));
        assert_eq!(p_type_disjointness(&c, PauliType::X).unwrap().value, Some(q(3, 1)));
    }

    #[test]
    fn concatenation_parameters() {
        let rep = StabilizerCode::from_strings(&["ZZI", "IZZ"]).unwrap();
        let cat = concatenate(&rep, &rep, &logical_basis(&rep)).unwrap();
        assert_eq!((cat.n(), cat.k()), (9, 1));
        let d = check_concatenated_distances(&rep, &rep, &logical_basis(&rep)).unwrap();
        assert!(d.min_holds && d.max_holds);
        let c = code412();
        let cat = concatenate(&c, &c, &logical_basis(&c)).unwrap();
        assert_eq!((cat.n(), cat.k()), (16, 1));
        let css = css422();
        assert_eq!(
            concatenate(&c, &css.code, &css.standard_basis).unwrap_err(),
            Error::InnerNotK1(2)
        );
    }

    #[test]
    fn concatenated_basis_is_valid() {
        let c = code412();
        let b = logical_basis(&c);
        let cat = concatenate(&c, &c, &b).unwrap();
        assert!(concatenated_basis(&b, &b).satisfies_invariants(&cat));
    }

    #[test]
    fn hypergraph_product_shapes() {
        let h = BitMatrix::from_dense(&[vec![1u8, 1]]);
        let hp = hypergraph_product(&h, &h).unwrap();
        assert_eq!(hp.css.n(), 4);
        assert_eq!(hp.block_rows, 1 + 4);
        // wide full-rank inputs leave no logical qubits
        assert_eq!(hp.css.k(), 0);

        let h1 = BitMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1]]);
        let h2 = BitMatrix::from_dense(&[vec![1u8], vec![1]]);
        let hp = hypergraph_product(&h1, &h2).unwrap();
        assert_eq!((hp.css.n(), hp.css.k()), (8, 1));

        let bad = BitMatrix::from_dense(&[vec![1u8, 1], vec![1, 1]]);
        assert_eq!(
            hypergraph_product(&bad, &h).unwrap_err(),
            Error::InputNotFullRank { which: "H1" }
        );
    }

    #[test]
    fn prop5_asymmetric() {
        let h1 = BitMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1]]);
        let h2 = BitMatrix::from_dense(&[vec![1u8], vec![1]]);
        let v = check_prop5(&h1, &h2).unwrap();
        assert_eq!(v.status, Prop5Status::Holds);
        let h = BitMatrix::from_dense(&[vec![1u8, 1]]);
        assert_eq!(check_prop5(&h, &h).unwrap().status, Prop5Status::Vacuous);
    }
}
