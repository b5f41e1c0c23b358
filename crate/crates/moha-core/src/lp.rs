//! Small dense linear-program solver.
//!
//! Maximizes `c·x` over free variables subject to `a·x <= b` rows. Two-phase
//! simplex with Bland's rule; sized for the desk-scale problems this crate
//! produces (≤ ~10 variables, ≤ a few hundred rows): cell adjacency
//! feasibility, affine range checks over polytopes, and polytope projections
//! inside the reachability engine.

use alloc::vec;
use alloc::vec::Vec;

const TOL: f64 = 1e-9;
const MAX_ITERS: usize = 50_000;

/// One inequality `coeffs · x <= rhs`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(coeffs: Vec<f64>, rhs: f64) -> Self {
        Constraint { coeffs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: f64, point: Vec<f64> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<f64> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }
}

struct Tableau {
    rows: usize,
    cols: usize, // total columns incl. rhs
    t: Vec<f64>, // (rows+1) x cols, last row = objective
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.t[r * self.cols + c]
    }
    fn at_mut(&mut self, r: usize, c: usize) -> &mut f64 {
        &mut self.t[r * self.cols + c]
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let cols = self.cols;
        let pv = self.at(pr, pc);
        for c in 0..cols {
            *self.at_mut(pr, c) /= pv;
        }
        for r in 0..=self.rows {
            if r == pr {
                continue;
            }
            let f = self.at(r, pc);
            if f == 0.0 {
                continue;
            }
            for c in 0..cols {
                let v = self.at(pr, c);
                *self.at_mut(r, c) -= f * v;
            }
        }
        self.basis[pr] = pc;
    }

    /// Runs simplex on the current objective row (a maximization written as
    /// reduced costs in the last row). Returns false on iteration blow-up.
    fn solve(&mut self, ncols_active: usize) -> Option<bool> {
        for _ in 0..MAX_ITERS {
            // Bland: entering = lowest-index column with positive reduced cost.
            let obj = self.rows;
            let mut enter = None;
            for c in 0..ncols_active {
                if self.at(obj, c) > TOL {
                    enter = Some(c);
                    break;
                }
            }
            let Some(pc) = enter else {
                return Some(true);
            };
            // leaving row: min ratio, ties by lowest basis index
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.at(r, pc);
                if a > TOL {
                    let ratio = self.at(r, self.cols - 1) / a;
                    match leave {
                        None => leave = Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - TOL
                                || (ratio < lratio + TOL && self.basis[r] < self.basis[lr])
                            {
                                leave = Some((r, ratio));
                            }
                        }
                    }
                }
            }
            let Some((pr, _)) = leave else {
                return Some(false); // unbounded
            };
            self.pivot(pr, pc);
        }
        None
    }
}

/// Maximizes `objective · x` subject to the constraint rows; `x` is free.
pub fn maximize(objective: &[f64], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    let m = constraints.len();
    if m == 0 {
        return if objective.iter().all(|&c| c == 0.0) {
            LpOutcome::Optimal {
                value: 0.0,
                point: vec![0.0; n],
            }
        } else {
            LpOutcome::Unbounded
        };
    }

    // columns: x+ (n), x- (n), slack (m), artificial (m worst case), rhs
    let nx = 2 * n;
    let cols = nx + m + m + 1;
    let mut t = vec![0.0; (m + 1) * cols];
    let mut basis = vec![0usize; m];
    let mut n_art = 0usize;

    for (i, con) in constraints.iter().enumerate() {
        debug_assert_eq!(con.coeffs.len(), n);
        let neg = con.rhs < 0.0;
        let sign = if neg { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i * cols + j] = sign * con.coeffs[j];
            t[i * cols + n + j] = -sign * con.coeffs[j];
        }
        // slack: +1 for kept rows, -1 for negated rows
        t[i * cols + nx + i] = sign;
        t[i * cols + cols - 1] = sign * con.rhs;
        if neg {
            let a = nx + m + n_art;
            t[i * cols + a] = 1.0;
            basis[i] = a;
            n_art += 1;
        } else {
            basis[i] = nx + i;
        }
    }

    let mut tab = Tableau {
        rows: m,
        cols,
        t,
        basis,
    };

    let active = nx + m + n_art;
    if n_art > 0 {
        // phase 1: maximize -sum(artificials); objective row = sum of rows
        // holding artificial basis vars (so reduced costs start consistent)
        for r in 0..m {
            if tab.basis[r] >= nx + m {
                for c in 0..cols {
                    let v = tab.at(r, c);
                    *tab.at_mut(m, c) += v;
                }
            }
        }
        for a in 0..n_art {
            *tab.at_mut(m, nx + m + a) = 0.0;
        }
        match tab.solve(active) {
            Some(true) => {}
            Some(false) | None => return LpOutcome::Infeasible,
        }
        if tab.at(m, cols - 1) > 1e-7 {
            return LpOutcome::Infeasible;
        }
        // drive any artificial still in basis out (or its row is degenerate)
        for r in 0..m {
            if tab.basis[r] >= nx + m {
                let mut done = false;
                for c in 0..nx + m {
                    if tab.at(r, c).abs() > TOL {
                        tab.pivot(r, c);
                        done = true;
                        break;
                    }
                }
                if !done {
                    // redundant row; leave it, artificial stays at zero
                }
            }
        }
        // clear phase-1 objective
        for c in 0..cols {
            *tab.at_mut(m, c) = 0.0;
        }
    }

    // phase 2 objective: maximize c·x → reduced costs row
    for j in 0..n {
        *tab.at_mut(m, j) = objective[j];
        *tab.at_mut(m, n + j) = -objective[j];
    }
    // make objective row consistent with current basis
    for r in 0..m {
        let b = tab.basis[r];
        let f = tab.at(m, b);
        if f != 0.0 {
            for c in 0..cols {
                let v = tab.at(r, c);
                *tab.at_mut(m, c) -= f * v;
            }
        }
    }

    match tab.solve(nx + m) {
        Some(true) => {}
        Some(false) => return LpOutcome::Unbounded,
        None => return LpOutcome::Infeasible,
    }

    let mut point = vec![0.0; n];
    for r in 0..m {
        let b = tab.basis[r];
        let v = tab.at(r, cols - 1);
        if b < n {
            point[b] += v;
        } else if b < 2 * n {
            point[b - n] -= v;
        }
    }
    let value = objective
        .iter()
        .zip(&point)
        .map(|(c, x)| c * x)
        .sum::<f64>();
    LpOutcome::Optimal { value, point }
}

/// True when the constraint system admits a point.
pub fn is_feasible(n_vars: usize, constraints: &[Constraint]) -> bool {
    matches!(
        maximize(&vec![0.0; n_vars], constraints),
        LpOutcome::Optimal { .. }
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn box2(lo: f64, hi: f64) -> Vec<Constraint> {
        vec![
            Constraint::new(vec![1.0, 0.0], hi),
            Constraint::new(vec![-1.0, 0.0], -lo),
            Constraint::new(vec![0.0, 1.0], hi),
            Constraint::new(vec![0.0, -1.0], -lo),
        ]
    }

    #[test]
    fn box_corner() {
        let out = maximize(&[1.0, 2.0], &box2(-1.0, 3.0));
        let LpOutcome::Optimal { value, point } = out else {
            panic!("{out:?}")
        };
        assert!((value - 9.0).abs() < 1e-7);
        assert!((point[0] - 3.0).abs() < 1e-7 && (point[1] - 3.0).abs() < 1e-7);
    }

    #[test]
    fn negative_rhs_feasible() {
        // x >= 2 (as -x <= -2), x <= 5, maximize -x → x = 2
        let cons = vec![
            Constraint::new(vec![-1.0], -2.0),
            Constraint::new(vec![1.0], 5.0),
        ];
        let out = maximize(&[-1.0], &cons);
        assert!((out.value().unwrap() + 2.0).abs() < 1e-7, "{out:?}");
    }

    #[test]
    fn infeasible_detected() {
        let cons = vec![
            Constraint::new(vec![1.0], 1.0),
            Constraint::new(vec![-1.0], -2.0),
        ];
        assert_eq!(maximize(&[1.0], &cons), LpOutcome::Infeasible);
        assert!(!is_feasible(1, &cons));
    }

    #[test]
    fn unbounded_detected() {
        let cons = vec![Constraint::new(vec![-1.0, 0.0], 0.0)];
        assert_eq!(maximize(&[1.0, 0.0], &cons), LpOutcome::Unbounded);
    }

    #[test]
    fn diamond_projection() {
        // |x| + |y| <= 1 as four halfspaces; maximize x + y = 1
        let cons = vec![
            Constraint::new(vec![1.0, 1.0], 1.0),
            Constraint::new(vec![1.0, -1.0], 1.0),
            Constraint::new(vec![-1.0, 1.0], 1.0),
            Constraint::new(vec![-1.0, -1.0], 1.0),
        ];
        let v = maximize(&[1.0, 1.0], &cons).value().unwrap();
        assert!((v - 1.0).abs() < 1e-7);
        let v = maximize(&[1.0, 0.0], &cons).value().unwrap();
        assert!((v - 1.0).abs() < 1e-7);
    }

    #[test]
    fn equality_via_pair() {
        // x + y = 1, x,y in [0, 1]: maximize x → 1
        let cons = vec![
            Constraint::new(vec![1.0, 1.0], 1.0),
            Constraint::new(vec![-1.0, -1.0], -1.0),
            Constraint::new(vec![-1.0, 0.0], 0.0),
            Constraint::new(vec![0.0, -1.0], 0.0),
        ];
        let v = maximize(&[1.0, 0.0], &cons).value().unwrap();
        assert!((v - 1.0).abs() < 1e-7);
    }
}
