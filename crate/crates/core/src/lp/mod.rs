//! Linear and integer programming over an ordered field.
//!
//! The engine is a two-phase revised simplex method with Bland's rule
//! (lowest-index entering column, lowest-index leaving basic variable on
//! ratio ties), so every solve is deterministic and terminates. Integer
//! programs are handled by depth-first branch-and-bound on the relaxation.
//!
//! With [`crate::Rational`] every reported optimum is exact.

mod branch;
mod scalar;
mod simplex;

use serde::Serialize;
use thiserror::Error;

pub use branch::{IlpOptions, IlpStats};
pub use scalar::{LpScalar, F64_TOLERANCE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("variable index {index} out of range for a program with {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("a linear program needs at least one variable")]
    NoVariables,
    #[error("branch-and-bound exceeded the node limit of {0}")]
    NodeLimit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// One row `Σ coeffs · x (relation) rhs`, stored sparsely with strictly
/// increasing variable indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint<T> {
    pub coeffs: Vec<(usize, T)>,
    pub relation: Relation,
    pub rhs: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    /// Objective value; zero unless `status` is `Optimal`.
    pub value: T,
    /// One entry per variable; all zero unless `status` is `Optimal`.
    pub assignment: Vec<T>,
}

impl<T: LpScalar> LpSolution<T> {
    fn non_optimal(status: LpStatus, num_vars: usize) -> Self {
        Self {
            status,
            value: T::zero(),
            assignment: vec![T::zero(); num_vars],
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// `maximize objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram<T> {
    num_vars: usize,
    objective: Vec<T>,
    constraints: Vec<Constraint<T>>,
}

impl<T: LpScalar> LinearProgram<T> {
    pub fn new(num_vars: usize) -> Result<Self, LpError> {
        if num_vars == 0 {
            return Err(LpError::NoVariables);
        }
        Ok(Self {
            num_vars,
            objective: vec![T::zero(); num_vars],
            constraints: Vec::new(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[T] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint<T>] {
        &self.constraints
    }

    pub fn set_objective(&mut self, var: usize, coeff: T) -> Result<(), LpError> {
        self.check_var(var)?;
        self.objective[var] = coeff;
        Ok(())
    }

    /// Adds a constraint. Repeated indices are summed and zero
    /// coefficients dropped.
    pub fn add_constraint(
        &mut self,
        coeffs: impl IntoIterator<Item = (usize, T)>,
        relation: Relation,
        rhs: T,
    ) -> Result<(), LpError> {
        let mut entries: Vec<(usize, T)> = coeffs.into_iter().collect();
        for &(j, _) in &entries {
            self.check_var(j)?;
        }
        entries.sort_by_key(|(j, _)| *j);
        let mut merged: Vec<(usize, T)> = Vec::with_capacity(entries.len());
        for (j, a) in entries {
            match merged.last_mut() {
                Some((last, acc)) if *last == j => *acc = acc.clone() + a,
                _ => merged.push((j, a)),
            }
        }
        merged.retain(|(_, a)| !a.is_zero());
        self.constraints.push(Constraint {
            coeffs: merged,
            relation,
            rhs,
        });
        Ok(())
    }

    fn check_var(&self, index: usize) -> Result<(), LpError> {
        if index >= self.num_vars {
            return Err(LpError::VariableOutOfRange {
                index,
                num_vars: self.num_vars,
            });
        }
        Ok(())
    }

    /// Objective value of an assignment.
    pub fn evaluate(&self, x: &[T]) -> T {
        self.objective
            .iter()
            .zip(x)
            .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
    }

    /// True iff `x` is nonnegative and satisfies every constraint (exactly
    /// for exact scalars).
    pub fn is_feasible(&self, x: &[T]) -> bool {
        if x.len() != self.num_vars || x.iter().any(|v| v.is_neg()) {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs = c
                .coeffs
                .iter()
                .fold(T::zero(), |acc, (j, a)| acc + a.clone() * x[*j].clone());
            let diff = lhs - c.rhs.clone();
            match c.relation {
                Relation::Le => !diff.is_pos(),
                Relation::Ge => !diff.is_neg(),
                Relation::Eq => !diff.is_nonzero(),
            }
        })
    }

    /// Solves the relaxation.
    pub fn solve(&self) -> LpSolution<T> {
        simplex::solve(self, &simplex::Bounds::none(self.num_vars))
    }

    /// Solves with the listed variables restricted to integers.
    pub fn solve_ilp(&self, integral: &[usize]) -> LpSolution<T> {
        branch::solve(self, integral, &IlpOptions::default())
            .expect("no node limit configured")
            .0
    }

    pub fn solve_ilp_with(
        &self,
        integral: &[usize],
        options: &IlpOptions,
    ) -> Result<(LpSolution<T>, IlpStats), LpError> {
        for &j in integral {
            self.check_var(j)?;
        }
        branch::solve(self, integral, options)
    }
}

/// Solves a linear program exactly (for exact scalars).
pub fn solve_lp<T: LpScalar>(p: &LinearProgram<T>) -> LpSolution<T> {
    p.solve()
}

/// Solves a mixed integer program by branch-and-bound.
pub fn solve_ilp<T: LpScalar>(p: &LinearProgram<T>, integral: &[usize]) -> LpSolution<T> {
    p.solve_ilp(integral)
}
