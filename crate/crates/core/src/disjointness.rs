//! `c`-disjointness, its LP relaxation and the disjointness of a code.
//!
//! A `c`-disjoint collection is a multiset of representatives of one class
//! in which every qubit lies in the support of at most `c` members. The
//! `c`-disjointness of a class is the largest such collection divided by
//! `c`; its supremum over `c` is the optimum of a fractional packing LP
//! with one variable per representative, and the lcm of the denominators
//! of an optimal vertex is a `c` attaining it.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::BitVector;
use crate::logical::minimal_representatives;
use crate::lp::{LpStatus, Relation};
use crate::pauli::{
    enumerate_class, support_of, ClassLabel, LogicalBasis, LogicalClass, PauliOperator,
    StabilizerCode,
};
use crate::{ratio_serde, Error, ExactProgram, ExactSolution, Integer, Rational, Result};

/// A multiset of representatives claimed to be `c`-disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointCollection {
    pub members: Vec<PauliOperator>,
    pub c: u64,
}

impl DisjointCollection {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Outcome of [`verify_collection`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollectionVerdict {
    pub valid: bool,
    pub size: usize,
    pub c: u64,
    /// Indices of members that do not represent the class.
    pub non_representatives: Vec<usize>,
    /// `(qubit, load)` for every qubit covered more than `c` times.
    pub overloaded_qubits: Vec<(usize, usize)>,
}

impl CollectionVerdict {
    /// Whether the collection certifies `c · Δ_c ≥ a`.
    pub fn certifies(&self, a: usize) -> bool {
        self.valid && self.size >= a
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaStar {
    pub value: Rational,
    pub solution: ExactSolution,
    /// Representatives in the order of the LP variables.
    pub representatives: Vec<PauliOperator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDisjointness {
    #[serde(with = "ratio_serde")]
    pub delta_star: Rational,
    pub c_star: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessReport {
    pub per_class: BTreeMap<ClassLabel, ClassDisjointness>,
    #[serde(with = "ratio_serde")]
    pub code_delta: Rational,
    pub argmin_classes: Vec<ClassLabel>,
}

fn positive_c(c: u64) -> Result<()> {
    if c == 0 {
        return Err(Error::InvalidC(c));
    }
    Ok(())
}

fn int(v: u64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// Packing program over the given supports: maximize `Σ x` with every
/// qubit covered at most `capacity` times.
fn packing_program(supports: &[BitVector], n: usize, capacity: u64) -> ExactProgram {
    let mut p = ExactProgram::new(supports.len()).expect("a class has at least one representative");
    for j in 0..supports.len() {
        p.set_objective(j, Rational::one()).expect("index in range");
    }
    let cap = int(capacity);
    for q in 0..n {
        let row: Vec<(usize, Rational)> = supports
            .iter()
            .enumerate()
            .filter(|(_, s)| s.get(q))
            .map(|(j, _)| (j, Rational::one()))
            .collect();
        if !row.is_empty() {
            p.add_constraint(row, Relation::Le, cap.clone()).expect("index in range");
        }
    }
    p
}

/// `Δ_c(L̄)` and an optimal `c`-disjoint collection.
///
/// The integer program ranges over the distinct inclusion-minimal supports
/// of the class: replacing a member by a representative with a smaller
/// support keeps a collection `c`-disjoint, so the optimum is unchanged.
pub fn c_disjoint_collection(cls: &LogicalClass<'_>, c: u64) -> Result<(Rational, DisjointCollection)> {
    positive_c(c)?;
    if cls.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let reps = minimal_representatives(cls)?;
    let supports: Vec<BitVector> = reps.iter().map(|(s, _)| s.clone()).collect();
    let program = packing_program(&supports, cls.code().n(), c);
    let integral: Vec<usize> = (0..supports.len()).collect();
    let sol = program.solve_ilp(&integral);
    debug_assert_eq!(sol.status, LpStatus::Optimal);
    let mut members = Vec::new();
    for (x, (_, rep)) in sol.assignment.iter().zip(&reps) {
        let times = x.to_integer().to_usize().expect("bounded by c");
        members.extend(std::iter::repeat_n(rep.clone(), times));
    }
    Ok((sol.value / int(c), DisjointCollection { members, c }))
}

/// `Δ_c(L̄)`: the largest `c`-disjoint collection divided by `c`.
pub fn c_disjointness(cls: &LogicalClass<'_>, c: u64) -> Result<Rational> {
    c_disjoint_collection(cls, c).map(|(v, _)| v)
}

/// Whether a `c`-disjoint collection of at least `a` representatives
/// exists, i.e. `c · Δ_c(L̄) ≥ a`.
pub fn decide_c_disjointness(cls: &LogicalClass<'_>, c: u64, a: u64) -> Result<bool> {
    Ok(c_disjointness(cls, c)? * int(c) >= int(a))
}

/// `Δ*(L̄) = sup_c Δ_c(L̄)`, from the packing LP with one variable per
/// representative in coset order.
pub fn delta_star(cls: &LogicalClass<'_>) -> Result<DeltaStar> {
    if cls.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let n = cls.code().n();
    let mut supports = Vec::new();
    let mut representatives = Vec::new();
    enumerate_class(cls)?.for_each_vector(|v| {
        supports.push(support_of(v, n));
        representatives.push(PauliOperator::from_vector(v.clone()));
    });
    let solution = packing_lp(&supports, n);
    Ok(DeltaStar {
        value: solution.value.clone(),
        solution,
        representatives,
    })
}

/// Optimum of the fractional packing LP over an explicit list of supports
/// on `n` qubits (one variable per entry, duplicates allowed).
pub fn packing_lp(supports: &[BitVector], n: usize) -> ExactSolution {
    let solution = packing_program(supports, n, 1).solve();
    debug_assert_eq!(solution.status, LpStatus::Optimal);
    solution
}

/// The lcm of the denominators of an optimal assignment.
pub fn witness_c(sol: &ExactSolution) -> Result<u64> {
    if sol.status != LpStatus::Optimal {
        return Err(Error::InvalidWitness);
    }
    let lcm = lcm_of_denominators(&sol.assignment);
    lcm.to_u64().ok_or_else(|| Error::TooLarge {
        what: "witness c",
        size: lcm.to_string(),
        cap: u64::MAX.to_string(),
    })
}

/// Lcm of the denominators of `values`.
pub fn lcm_of_denominators(values: &[Rational]) -> Integer {
    values.iter().fold(Integer::one(), |acc, x| acc.lcm(x.denom()))
}

/// `Δ*` and `c*` for every nontrivial class, and their minimum `Δ(S)`.
pub fn code_disjointness(code: &StabilizerCode, basis: &LogicalBasis) -> Result<DisjointnessReport> {
    if code.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let labels: Vec<ClassLabel> = ClassLabel::nontrivial(code.k()).collect();
    let results = labels
        .par_iter()
        .map(|&label| {
            let d = delta_star(&code.class(basis, label))?;
            Ok(ClassDisjointness {
                c_star: witness_c(&d.solution)?,
                delta_star: d.value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let per_class: BTreeMap<_, _> = labels.into_iter().zip(results).collect();
    let code_delta = per_class
        .values()
        .map(|c| c.delta_star.clone())
        .min()
        .expect("k ≥ 1");
    let argmin_classes = per_class
        .iter()
        .filter(|(_, c)| c.delta_star == code_delta)
        .map(|(l, _)| *l)
        .collect();
    Ok(DisjointnessReport {
        per_class,
        code_delta,
        argmin_classes,
    })
}

/// Checks that every member represents the class (by the rank test) and
/// that no qubit is covered more than `c` times.
pub fn verify_collection(col: &DisjointCollection, cls: &LogicalClass<'_>) -> CollectionVerdict {
    let n = cls.code().n();
    let non_representatives: Vec<usize> = col
        .members
        .iter()
        .enumerate()
        .filter(|(_, p)| !cls.is_representative(p))
        .map(|(i, _)| i)
        .collect();
    let mut load = vec![0usize; n];
    for p in col.members.iter().filter(|p| p.num_qubits() == n) {
        for q in p.support().iter_ones() {
            load[q] += 1;
        }
    }
    let overloaded_qubits: Vec<(usize, usize)> = load
        .iter()
        .enumerate()
        .filter(|(_, &l)| l as u64 > col.c)
        .map(|(q, &l)| (q, l))
        .collect();
    CollectionVerdict {
        valid: col.c > 0 && non_representatives.is_empty() && overloaded_qubits.is_empty(),
        size: col.len(),
        c: col.c,
        non_representatives,
        overloaded_qubits,
    }
}

/// Dual feasibility certificate check: `y ≥ 0` with `Σ_{q ∈ supp L} y_q ≥ 1`
/// for every support bounds the packing LP above by `Σ y`.
pub fn is_packing_dual_feasible(supports: &[BitVector], y: &[Rational]) -> bool {
    y.iter().all(|v| v >= &Rational::zero())
        && supports.iter().all(|s| {
            s.iter_ones().fold(Rational::zero(), |acc, q| acc + y[q].clone()) >= Rational::one()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::logical_basis;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rep3() -> StabilizerCode {
        StabilizerCode::from_strings(&["ZZI", "IZZ"]).unwrap()
    }

    fn steane() -> StabilizerCode {
        StabilizerCode::from_strings(&[
            "XIIXIXX", "IXIXXIX", "IIXIXXX", "ZIIZIZZ", "IZIZZIZ", "IIZIZZZ",
        ])
        .unwrap()
    }

    #[test]
    fn repetition_examples() {
        let c = rep3();
        let z = LogicalClass::new(&c, "ZII".parse().unwrap());
        let x = LogicalClass::new(&c, "XXX".parse().unwrap());
        assert_eq!(c_disjointness(&z, 1).unwrap(), q(3, 1));
        assert_eq!(c_disjointness(&x, 1).unwrap(), q(1, 1));
        assert!(decide_c_disjointness(&z, 1, 3).unwrap());
        assert!(!decide_c_disjointness(&z, 1, 4).unwrap());
        assert!(decide_c_disjointness(&x, 2, 1).unwrap());
        assert_eq!(delta_star(&x).unwrap().value, q(1, 1));
        let report = code_disjointness(&c, &logical_basis(&c)).unwrap();
        assert_eq!(report.code_delta, q(1, 1));
    }

    #[test]
    fn steane_logical_z() {
        let c = steane();
        let z = LogicalClass::new(&c, "ZZZZZZZ".parse().unwrap());
        let d = delta_star(&z).unwrap();
        assert_eq!(d.value, q(7, 3));
        assert_eq!(witness_c(&d.solution).unwrap(), 3);
        assert_eq!(c_disjointness(&z, 3).unwrap(), q(7, 3));
        assert_eq!(c_disjointness(&z, 1).unwrap(), q(1, 1));
    }

    #[test]
    fn witness_lcm() {
        let sol = ExactSolution {
            status: LpStatus::Optimal,
            value: q(5, 6),
            assignment: vec![q(1, 2), q(1, 3)],
        };
        assert_eq!(witness_c(&sol).unwrap(), 6);
        let bad = ExactSolution {
            status: LpStatus::Infeasible,
            ..sol
        };
        assert_eq!(witness_c(&bad), Err(Error::InvalidWitness));
    }

    #[test]
    fn collection_verdicts() {
        let c = rep3();
        let z = LogicalClass::new(&c, "ZII".parse().unwrap());
        let col = |ms: &[&str], c: u64| DisjointCollection {
            members: ms.iter().map(|m| m.parse().unwrap()).collect(),
            c,
        };
        assert!(verify_collection(&col(&["ZII", "IZI", "IIZ"], 1), &z).valid);
        let dup = verify_collection(&col(&["ZII", "ZII"], 1), &z);
        assert_eq!(dup.overloaded_qubits, vec![(0, 2)]);
        let wrong = verify_collection(&col(&["XII"], 1), &z);
        assert_eq!(wrong.non_representatives, vec![0]);
        assert!(!wrong.valid);
    }

    #[test]
    fn ilp_collection_verifies() {
        let c = steane();
        let z = LogicalClass::new(&c, "ZZZZZZZ".parse().unwrap());
        let (value, col) = c_disjoint_collection(&z, 3).unwrap();
        assert_eq!(value * int(3), int(col.len() as u64));
        assert!(verify_collection(&col, &z).valid);
    }

    #[test]
    fn invalid_c_and_trivial() {
        let c = rep3();
        let z = LogicalClass::new(&c, "ZII".parse().unwrap());
        assert_eq!(c_disjointness(&z, 0), Err(Error::InvalidC(0)));
        let t = LogicalClass::new(&c, "ZZI".parse().unwrap());
        assert_eq!(delta_star(&t).map(|d| d.value), Err(Error::TrivialClass));
    }
}
