//! Clifford hierarchy bounds for transversal logical gates.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::disjointness::delta_star;
use crate::gf2::BitVector;
use crate::logical::{distance_report, minimal_representatives};
use crate::pauli::{ClassLabel, LogicalBasis, PauliOperator, StabilizerCode};
use crate::{ratio_serde, Error, Integer, Rational, Result};

/// Default cap on the number of support intersections [`omega`] may test.
pub const DEFAULT_OMEGA_WORK_CAP: u128 = 10_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelBound {
    /// Every transversal logical gate lies in this level.
    pub m_max: u64,
    pub d_down: u64,
    pub d_up: u64,
    #[serde(with = "ratio_serde")]
    pub delta: Rational,
}

/// `⌊log_Δ(d↑/d↓)⌋ + 2`, evaluated with exact powers of `Δ`.
pub fn level_bound(d_down: u64, d_up: u64, delta: &Rational) -> Result<LevelBound> {
    if d_down <= 1 {
        return Err(Error::BoundInapplicable(format!("min-distance {d_down} ≤ 1")));
    }
    if *delta <= Rational::one() {
        return Err(Error::BoundInapplicable(format!("disjointness {delta} ≤ 1")));
    }
    if d_up < d_down {
        return Err(Error::BoundInapplicable(format!(
            "max-distance {d_up} below min-distance {d_down}"
        )));
    }
    let ratio = Rational::new(Integer::from(d_up), Integer::from(d_down));
    let mut t = 0u64;
    let mut power = delta.clone();
    while power <= ratio {
        t += 1;
        power *= delta;
    }
    Ok(LevelBound {
        m_max: t + 2,
        d_down,
        d_up,
        delta: delta.clone(),
    })
}

#[derive(Debug, Clone, Default)]
pub struct OmegaOptions {
    /// For `m = 2`, skip class pairs whose averaging bound
    /// `⌊d(L̄_j) / Δ*(L̄_i)⌋` cannot beat the best value found so far.
    pub prune: bool,
    /// Cap on support intersections; `None` uses [`DEFAULT_OMEGA_WORK_CAP`].
    pub work_cap: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaWitness {
    pub class: ClassLabel,
    pub representative: PauliOperator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub m: usize,
    pub value: usize,
    /// The maximizing tuple of classes, each with the representative chosen
    /// in a minimizing intersection.
    pub witness: Vec<OmegaWitness>,
    /// Number of class multisets considered.
    pub tuples: usize,
}

/// Smallest `|∩ supports|` over one choice per list, abandoning the search
/// once a value below `floor` is found.
fn min_intersection(
    lists: &[&[(BitVector, PauliOperator)]],
    floor: usize,
) -> (usize, Vec<usize>) {
    fn go(
        lists: &[&[(BitVector, PauliOperator)]],
        depth: usize,
        acc: &BitVector,
        floor: usize,
        choice: &mut Vec<usize>,
        best: &mut (usize, Vec<usize>),
    ) -> bool {
        if depth == lists.len() {
            let w = acc.count_ones();
            if w < best.0 {
                *best = (w, choice.clone());
            }
            return w < floor;
        }
        for (i, (s, _)) in lists[depth].iter().enumerate() {
            let next = acc.and(s);
            choice.push(i);
            let stop = go(lists, depth + 1, &next, floor, choice, best);
            choice.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let n = lists[0][0].0.len();
    let mut best = (usize::MAX, Vec::new());
    go(lists, 0, &BitVector::ones(n), floor, &mut Vec::new(), &mut best);
    best
}

/// Nondecreasing index tuples of length `m` over `0..count`.
fn multisets(count: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    if count == 0 {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..m).rev().find(|&i| cur[i] + 1 < count) else {
            return out;
        };
        let v = cur[pos] + 1;
        for c in &mut cur[pos..] {
            *c = v;
        }
    }
}

/// `Ω_M(S)`: the maximum over multisets of `m` nontrivial classes of the
/// smallest common support of one representative from each.
pub fn omega(code: &StabilizerCode, basis: &LogicalBasis, m: usize, options: &OmegaOptions) -> Result<OmegaReport> {
    if m == 0 {
        return Err(Error::InvalidC(0));
    }
    if code.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let labels: Vec<ClassLabel> = ClassLabel::nontrivial(code.k()).collect();
    let reps = labels
        .par_iter()
        .map(|&l| minimal_representatives(&code.class(basis, l)))
        .collect::<Result<Vec<_>>>()?;
    let tuples = multisets(labels.len(), m);
    let work: u128 = tuples
        .iter()
        .map(|t| t.iter().map(|&i| reps[i].len() as u128).product::<u128>())
        .sum();
    let cap = options.work_cap.unwrap_or(DEFAULT_OMEGA_WORK_CAP);
    if work > cap {
        return Err(Error::TooLarge {
            what: "omega search",
            size: work.to_string(),
            cap: cap.to_string(),
        });
    }

    // Pair bounds from the packing LP: some representative of class i meets
    // a fixed representative of class j in at most ⌊d_j / Δ*_i⌋ qubits.
    let pair_bound: Option<Vec<Vec<usize>>> = if options.prune && m == 2 {
        let stars = labels
            .par_iter()
            .map(|&l| delta_star(&code.class(basis, l)).map(|d| d.value))
            .collect::<Result<Vec<_>>>()?;
        let dists: Vec<usize> = reps.iter().map(|r| r[0].0.count_ones()).collect();
        Some(
            (0..labels.len())
                .map(|i| {
                    (0..labels.len())
                        .map(|j| {
                            let by = |a: usize, b: usize| {
                                (Rational::from_integer(dists[b].into()) / &stars[a])
                                    .floor()
                                    .to_integer()
                                    .to_usize()
                                    .unwrap_or(usize::MAX)
                            };
                            by(i, j).min(by(j, i))
                        })
                        .collect()
                })
                .collect(),
        )
    } else {
        None
    };

    let best = AtomicUsize::new(0);
    let values: Vec<Option<(usize, Vec<usize>)>> = tuples
        .par_iter()
        .map(|t| {
            let floor = best.load(Ordering::Relaxed);
            if let Some(bounds) = &pair_bound {
                if bounds[t[0]][t[1]] < floor {
                    return None;
                }
            }
            let lists: Vec<&[(BitVector, PauliOperator)]> = t.iter().map(|&i| reps[i].as_slice()).collect();
            let (v, choice) = min_intersection(&lists, floor);
            if v < floor {
                return None;
            }
            best.fetch_max(v, Ordering::Relaxed);
            Some((v, choice))
        })
        .collect();
    // Tuples below the running maximum are discarded, never those equal to
    // it, so the first maximizer is independent of scheduling.
    let value = values.iter().flatten().map(|(v, _)| *v).max().unwrap_or(0);
    let (index, (_, choice)) = values
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.as_ref().filter(|(v, _)| *v == value).map(|r| (i, r)))
        .expect("some tuple attains the maximum");
    let witness = tuples[index]
        .iter()
        .zip(choice)
        .map(|(&ci, &ri)| OmegaWitness {
            class: labels[ci],
            representative: reps[ci][ri].1.clone(),
        })
        .collect();
    Ok(OmegaReport {
        m,
        value,
        witness,
        tuples: tuples.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCertificate {
    pub m: usize,
    pub d_down: usize,
    pub omega: OmegaReport,
    /// `Ω_M < d↓`: every transversal logical gate lies in level `M`.
    pub certified: bool,
}

/// Evaluates the criterion `Ω_M(S) < d↓`.
pub fn transversal_level_certificate(
    code: &StabilizerCode,
    basis: &LogicalBasis,
    m: usize,
    options: &OmegaOptions,
) -> Result<LevelCertificate> {
    let d_down = distance_report(code, basis)?.d_min;
    let omega = omega(code, basis, m, options)?;
    Ok(LevelCertificate {
        m,
        d_down,
        certified: omega.value < d_down,
        omega,
    })
}
