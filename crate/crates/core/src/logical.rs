//! Distances of logical classes: `d(L̄)`, the min-distance `d↓` and the
//! max-distance `d↑`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::BitVector;
use crate::pauli::{
    enumerate_class, support_of, ClassLabel, LogicalBasis, LogicalClass, PauliOperator,
    StabilizerCode,
};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// `d↓`, the usual code distance.
    pub d_min: usize,
    /// `d↑`.
    pub d_max: usize,
    pub per_class: BTreeMap<ClassLabel, usize>,
}

/// Weight of the lightest representative of a nontrivial class.
pub fn class_distance(cls: &LogicalClass<'_>) -> Result<usize> {
    if cls.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let n = cls.code().n();
    let mut best = usize::MAX;
    enumerate_class(cls)?.for_each_vector(|v| {
        best = best.min(support_of(v, n).count_ones());
    });
    Ok(best)
}

/// Distances of all `4^k - 1` nontrivial classes.
pub fn distance_report(code: &StabilizerCode, basis: &LogicalBasis) -> Result<DistanceReport> {
    if code.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let labels: Vec<ClassLabel> = ClassLabel::nontrivial(code.k()).collect();
    let distances = labels
        .par_iter()
        .map(|&label| class_distance(&code.class(basis, label)))
        .collect::<Result<Vec<_>>>()?;
    let per_class: BTreeMap<_, _> = labels.into_iter().zip(distances).collect();
    let d_min = *per_class.values().min().expect("k ≥ 1");
    let d_max = *per_class.values().max().expect("k ≥ 1");
    Ok(DistanceReport {
        d_min,
        d_max,
        per_class,
    })
}

/// Representatives of a class whose support is one of its distinct
/// inclusion-minimal supports, one per support, ordered by weight and then
/// by first appearance in coset order.
///
/// Any collection of representatives can shrink each member to one of
/// these without raising a per-qubit load or an intersection size.
pub fn minimal_representatives(cls: &LogicalClass<'_>) -> Result<Vec<(BitVector, PauliOperator)>> {
    let n = cls.code().n();
    let mut all: Vec<(BitVector, PauliOperator)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    enumerate_class(cls)?.for_each_vector(|v| {
        let s = support_of(v, n);
        if seen.insert(s.clone()) {
            all.push((s, PauliOperator::from_vector(v.clone())));
        }
    });
    all.sort_by_key(|(s, _)| s.count_ones());
    let mut kept: Vec<(BitVector, PauliOperator)> = Vec::new();
    for (s, p) in all {
        if !kept.iter().any(|(k, _)| k.is_subset_of(&s)) {
            kept.push((s, p));
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::logical_basis;

    fn code(rows: &[&str]) -> StabilizerCode {
        StabilizerCode::from_strings(rows).unwrap()
    }

    #[test]
    fn repetition_code_distances() {
        let c = code(&["ZZI", "IZZ"]);
        let basis = logical_basis(&c);
        let report = distance_report(&c, &basis).unwrap();
        assert_eq!(report.d_min, 1);
        assert_eq!(report.d_max, 3);
        let z = LogicalClass::new(&c, "ZII".parse().unwrap());
        assert_eq!(class_distance(&z).unwrap(), 1);
        let x = LogicalClass::new(&c, "XXX".parse().unwrap());
        assert_eq!(class_distance(&x).unwrap(), 3);
    }

    #[test]
    fn perfect_code_distances() {
        let c = code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let report = distance_report(&c, &logical_basis(&c)).unwrap();
        assert_eq!((report.d_min, report.d_max), (3, 3));
        assert_eq!(report.per_class.len(), 3);
    }

    #[test]
    fn trivial_class_rejected() {
        let c = code(&["ZZI", "IZZ"]);
        let t = LogicalClass::new(&c, "ZZI".parse().unwrap());
        assert_eq!(class_distance(&t), Err(Error::TrivialClass));
    }

    #[test]
    fn no_logicals() {
        let c = code(&["XX", "ZZ"]);
        assert_eq!(
            distance_report(&c, &logical_basis(&c)),
            Err(Error::NoLogicalQubits)
        );
    }

    #[test]
    fn minimal_supports_of_repetition_z() {
        let c = code(&["ZZI", "IZZ"]);
        let z = LogicalClass::new(&c, "ZII".parse().unwrap());
        let mins = minimal_representatives(&z).unwrap();
        let weights: Vec<usize> = mins.iter().map(|(s, _)| s.count_ones()).collect();
        assert_eq!(weights, vec![1, 1, 1]);
    }

    #[test]
    fn distance_is_representative_independent() {
        let c = code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let basis = logical_basis(&c);
        let rep = basis.x_ops[0].clone();
        for g in c.generators() {
            let cls = LogicalClass::new(&c, rep.mul(&g));
            assert_eq!(class_distance(&cls).unwrap(), 3);
        }
    }
}
