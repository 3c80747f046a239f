use serde::Serialize;

use super::simplex::{self, Bounds};
use super::{LinearProgram, LpError, LpScalar, LpSolution, LpStatus};

#[derive(Debug, Clone, Default)]
pub struct IlpOptions {
    /// Abort with [`LpError::NodeLimit`] after this many relaxations.
    pub max_nodes: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IlpStats {
    pub nodes: usize,
}

/// Depth-first branch-and-bound, branching on the lowest-index fractional
/// variable and exploring the up branch first.
pub(crate) fn solve<T: LpScalar>(
    p: &LinearProgram<T>,
    integral: &[usize],
    options: &IlpOptions,
) -> Result<(LpSolution<T>, IlpStats), LpError> {
    let n = p.num_vars;
    let mut is_int = vec![false; n];
    for &j in integral {
        is_int[j] = true;
    }
    // With an integer-valued objective the node bound can be rounded down.
    let integral_objective =
        (0..n).all(|j| if is_int[j] { p.objective[j].is_integral() } else { !p.objective[j].is_nonzero() });

    let mut stats = IlpStats::default();
    let mut incumbent: Option<(T, Vec<T>)> = None;
    let mut stack = vec![Bounds::none(n)];
    while let Some(bounds) = stack.pop() {
        if options.max_nodes.is_some_and(|cap| stats.nodes >= cap) {
            return Err(LpError::NodeLimit(stats.nodes));
        }
        stats.nodes += 1;
        let relax = simplex::solve(p, &bounds);
        match relax.status {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => {
                return Ok((LpSolution::non_optimal(LpStatus::Unbounded, n), stats));
            }
            LpStatus::Optimal => {}
        }
        let bound = if integral_objective {
            relax.value.floor_value()
        } else {
            relax.value.clone()
        };
        if let Some((best, _)) = &incumbent {
            if !(bound - best.clone()).is_pos() {
                continue;
            }
        }
        let fractional = (0..n).find(|&j| is_int[j] && !relax.assignment[j].is_integral());
        match fractional {
            None => {
                let mut x = relax.assignment;
                if !T::EXACT {
                    for j in 0..n {
                        if is_int[j] {
                            x[j] = x[j].floor_value();
                        }
                    }
                }
                let value = p.evaluate(&x);
                incumbent = Some((value, x));
            }
            Some(j) => {
                let v = &relax.assignment[j];
                let mut down = bounds.clone();
                down.upper[j] = Some(v.floor_value());
                let mut up = bounds;
                up.lower[j] = v.ceil_value();
                stack.push(down);
                stack.push(up);
            }
        }
    }
    let solution = match incumbent {
        Some((value, assignment)) => LpSolution {
            status: LpStatus::Optimal,
            value,
            assignment,
        },
        None => LpSolution::non_optimal(LpStatus::Infeasible, n),
    };
    Ok((solution, stats))
}
