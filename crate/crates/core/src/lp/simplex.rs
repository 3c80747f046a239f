use super::{LinearProgram, LpScalar, LpSolution, LpStatus, Relation};

/// Per-variable box `lower ≤ x ≤ upper` layered on top of `x ≥ 0`.
#[derive(Debug, Clone)]
pub(crate) struct Bounds<T> {
    pub lower: Vec<T>,
    pub upper: Vec<Option<T>>,
}

impl<T: LpScalar> Bounds<T> {
    pub fn none(n: usize) -> Self {
        Self {
            lower: vec![T::zero(); n],
            upper: vec![None; n],
        }
    }
}

struct Row<T> {
    coeffs: Vec<(usize, T)>,
    relation: Relation,
    rhs: T,
}

struct Tableau<T> {
    m: usize,
    cols: Vec<Vec<(usize, T)>>,
    first_artificial: usize,
    basis: Vec<usize>,
    is_basic: Vec<bool>,
    binv: Vec<Vec<T>>,
    xb: Vec<T>,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl<T: LpScalar> Tableau<T> {
    fn build(nvars: usize, mut rows: Vec<Row<T>>) -> Self {
        let m = rows.len();
        for r in &mut rows {
            if r.rhs.is_neg() {
                r.rhs = -r.rhs.clone();
                for (_, a) in &mut r.coeffs {
                    *a = -a.clone();
                }
                r.relation = match r.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
        }
        let mut cols: Vec<Vec<(usize, T)>> = vec![Vec::new(); nvars];
        for (i, r) in rows.iter().enumerate() {
            for (j, a) in &r.coeffs {
                cols[*j].push((i, a.clone()));
            }
        }
        let mut basis = vec![usize::MAX; m];
        for (i, r) in rows.iter().enumerate() {
            match r.relation {
                Relation::Le => {
                    basis[i] = cols.len();
                    cols.push(vec![(i, T::one())]);
                }
                Relation::Ge => cols.push(vec![(i, -T::one())]),
                Relation::Eq => {}
            }
        }
        let first_artificial = cols.len();
        for (i, r) in rows.iter().enumerate() {
            if r.relation != Relation::Le {
                basis[i] = cols.len();
                cols.push(vec![(i, T::one())]);
            }
        }
        let mut is_basic = vec![false; cols.len()];
        for &b in &basis {
            is_basic[b] = true;
        }
        let binv = (0..m)
            .map(|i| {
                (0..m)
                    .map(|k| if i == k { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        let xb = rows.into_iter().map(|r| r.rhs).collect();
        Self {
            m,
            cols,
            first_artificial,
            basis,
            is_basic,
            binv,
            xb,
        }
    }

    fn has_artificials(&self) -> bool {
        self.first_artificial < self.cols.len()
    }

    fn column_image(&self, j: usize) -> Vec<T> {
        (0..self.m)
            .map(|r| {
                self.cols[j]
                    .iter()
                    .filter(|(i, _)| self.binv[r][*i].is_nonzero())
                    .fold(T::zero(), |acc, (i, a)| acc + self.binv[r][*i].clone() * a.clone())
            })
            .collect()
    }

    fn pivot(&mut self, leave: usize, enter: usize, u: &[T]) {
        let p = u[leave].clone();
        let theta = self.xb[leave].clone() / p.clone();
        for v in self.binv[leave].iter_mut().filter(|v| v.is_nonzero()) {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.binv[leave].clone();
        for r in 0..self.m {
            if r == leave || !u[r].is_nonzero() {
                continue;
            }
            let f = u[r].clone();
            for (v, w) in self.binv[r].iter_mut().zip(&pivot_row) {
                if w.is_nonzero() {
                    *v = v.clone() - f.clone() * w.clone();
                }
            }
            self.xb[r] = self.xb[r].clone() - theta.clone() * f;
            if !T::EXACT && !self.xb[r].is_nonzero() {
                self.xb[r] = T::zero();
            }
        }
        self.xb[leave] = theta;
        self.is_basic[self.basis[leave]] = false;
        self.is_basic[enter] = true;
        self.basis[leave] = enter;
    }

    /// Maximizes `cost · x` from the current basis using Bland's rule.
    fn optimize(&mut self, cost: &[T], allow_artificial: bool) -> Outcome {
        let limit = if allow_artificial {
            self.cols.len()
        } else {
            self.first_artificial
        };
        loop {
            let mut y = vec![T::zero(); self.m];
            for (r, &b) in self.basis.iter().enumerate() {
                if !cost[b].is_nonzero() {
                    continue;
                }
                for (yi, v) in y.iter_mut().zip(&self.binv[r]) {
                    if v.is_nonzero() {
                        *yi = yi.clone() + cost[b].clone() * v.clone();
                    }
                }
            }
            let prices = T::prices(&y);
            let entering =
                (0..limit).find(|&j| !self.is_basic[j] && T::improves(&cost[j], &self.cols[j], &prices));
            let Some(enter) = entering else {
                return Outcome::Optimal;
            };
            let u = self.column_image(enter);
            let mut leave: Option<(usize, T)> = None;
            for r in 0..self.m {
                if !u[r].is_pos() {
                    continue;
                }
                let ratio = self.xb[r].clone() / u[r].clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        let diff = ratio.clone() - best.clone();
                        diff.is_neg() || (!diff.is_pos() && self.basis[r] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((leave, _)) = leave else {
                return Outcome::Unbounded;
            };
            self.pivot(leave, enter, &u);
        }
    }

    /// Pivots basic artificials out where some real column allows it.
    fn expel_artificials(&mut self) {
        for r in 0..self.m {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            let found = (0..self.first_artificial).find_map(|j| {
                if self.is_basic[j] {
                    return None;
                }
                let u = self.column_image(j);
                u[r].is_nonzero().then_some((j, u))
            });
            if let Some((j, u)) = found {
                self.pivot(r, j, &u);
            }
        }
    }

    fn value_of(&self, j: usize) -> T {
        self.basis
            .iter()
            .position(|&b| b == j)
            .map_or_else(T::zero, |r| self.xb[r].clone())
    }
}

/// Solves `p` restricted to `bounds`.
pub(crate) fn solve<T: LpScalar>(p: &LinearProgram<T>, bounds: &Bounds<T>) -> LpSolution<T> {
    let n = p.num_vars;
    for j in 0..n {
        if let Some(u) = &bounds.upper[j] {
            if (u.clone() - bounds.lower[j].clone()).is_neg() {
                return LpSolution::non_optimal(LpStatus::Infeasible, n);
            }
        }
    }
    // Shift x = lower + y and drop fixed variables.
    let fixed: Vec<bool> = (0..n)
        .map(|j| {
            bounds.upper[j]
                .as_ref()
                .is_some_and(|u| !(u.clone() - bounds.lower[j].clone()).is_nonzero())
        })
        .collect();
    let mut index = vec![usize::MAX; n];
    let mut free = Vec::new();
    for j in 0..n {
        if !fixed[j] {
            index[j] = free.len();
            free.push(j);
        }
    }
    let mut rows = Vec::with_capacity(p.constraints.len());
    for c in &p.constraints {
        let mut rhs = c.rhs.clone();
        let mut coeffs = Vec::with_capacity(c.coeffs.len());
        for (j, a) in &c.coeffs {
            if bounds.lower[*j].is_nonzero() {
                rhs = rhs - a.clone() * bounds.lower[*j].clone();
            }
            if !fixed[*j] {
                coeffs.push((index[*j], a.clone()));
            }
        }
        if coeffs.is_empty() {
            let ok = match c.relation {
                Relation::Le => !rhs.is_neg(),
                Relation::Ge => !rhs.is_pos(),
                Relation::Eq => !rhs.is_nonzero(),
            };
            if !ok {
                return LpSolution::non_optimal(LpStatus::Infeasible, n);
            }
            continue;
        }
        rows.push(Row {
            coeffs,
            relation: c.relation,
            rhs,
        });
    }
    for &j in &free {
        if let Some(u) = &bounds.upper[j] {
            rows.push(Row {
                coeffs: vec![(index[j], T::one())],
                relation: Relation::Le,
                rhs: u.clone() - bounds.lower[j].clone(),
            });
        }
    }

    let mut assignment = bounds.lower.clone();
    if free.is_empty() {
        let value = p.evaluate(&assignment);
        return LpSolution {
            status: LpStatus::Optimal,
            value,
            assignment,
        };
    }

    let mut t = Tableau::build(free.len(), rows);
    if t.has_artificials() {
        let cost: Vec<T> = (0..t.cols.len())
            .map(|j| {
                if j >= t.first_artificial {
                    -T::one()
                } else {
                    T::zero()
                }
            })
            .collect();
        t.optimize(&cost, true);
        let infeasibility = t
            .basis
            .iter()
            .zip(&t.xb)
            .filter(|(b, _)| **b >= t.first_artificial)
            .fold(T::zero(), |acc, (_, v)| acc + v.clone());
        if infeasibility.is_pos() {
            return LpSolution::non_optimal(LpStatus::Infeasible, n);
        }
        t.expel_artificials();
    }
    let mut cost = vec![T::zero(); t.cols.len()];
    for (k, &j) in free.iter().enumerate() {
        cost[k] = p.objective[j].clone();
    }
    if let Outcome::Unbounded = t.optimize(&cost, false) {
        return LpSolution::non_optimal(LpStatus::Unbounded, n);
    }
    for (k, &j) in free.iter().enumerate() {
        let v = t.value_of(k);
        assignment[j] = assignment[j].clone() + if v.is_neg() { T::zero() } else { v };
    }
    let value = p.evaluate(&assignment);
    LpSolution {
        status: LpStatus::Optimal,
        value,
        assignment,
    }
}
