//! Primal simplex over exact rationals with Bland's anti-cycling rule.
//!
//! Two-phase method on a dense tableau. Slow and safe: termination is
//! guaranteed by Bland's rule and identical inputs pivot identically, so
//! optimal points are reproducible across runs.

use super::Rational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Row sense of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

/// `maximize objective . x` subject to `rows` and per-variable bounds.
///
/// A bound of `None` leaves that side free; the common case
/// `(Some(0), None)` is a nonnegative variable.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub rows: Vec<(Vec<Rational>, Sense, Rational)>,
    pub bounds: Vec<(Option<Rational>, Option<Rational>)>,
}

impl LinearProgram {
    /// Maximization over nonnegative variables.
    pub fn maximize(objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            objective,
            rows: Vec::new(),
            bounds: vec![(Some(Rational::zero()), None); n],
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> &mut Self {
        self.rows.push((coeffs, sense, rhs));
        self
    }

    fn check(&self) -> Result<(), LpError> {
        let n = self.objective.len();
        if self.bounds.len() != n {
            return Err(LpError::Dimension);
        }
        if self.rows.iter().any(|(c, _, _)| c.len() != n) {
            return Err(LpError::Dimension);
        }
        Ok(())
    }
}

/// Outcome of [`lp_solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("inconsistent LP dimensions")]
    Dimension,
}

/// Exact primal simplex. Deterministic: Bland's rule throughout.
pub fn lp_solve(lp: &LinearProgram) -> Result<LpResult, LpError> {
    lp.check()?;
    let n_orig = lp.objective.len();

    // Substitute variables so every tableau variable is >= 0:
    //   lower bound l:  x = l + x'
    //   free:           x = x+ - x-
    // Upper bounds become extra rows after substitution.
    // var_map[i] = (column of x' or x+, optional column of x-)
    let mut var_map: Vec<(usize, Option<usize>)> = Vec::with_capacity(n_orig);
    let mut shift: Vec<Rational> = Vec::with_capacity(n_orig);
    let mut ncols = 0;
    for (lo, _) in &lp.bounds {
        match lo {
            Some(l) => {
                var_map.push((ncols, None));
                shift.push(l.clone());
                ncols += 1;
            }
            None => {
                var_map.push((ncols, Some(ncols + 1)));
                shift.push(Rational::zero());
                ncols += 2;
            }
        }
    }

    let mut rows: Vec<(Vec<Rational>, Sense, Rational)> = Vec::new();
    let expand = |coeffs: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); ncols];
        for (i, c) in coeffs.iter().enumerate() {
            let (pos, neg) = &var_map[i];
            out[*pos] = c.clone();
            if let Some(neg) = neg {
                out[*neg] = -c.clone();
            }
        }
        out
    };

    for (coeffs, sense, rhs) in &lp.rows {
        let adjusted = rhs - super::dot(coeffs, &shift);
        rows.push((expand(coeffs), *sense, adjusted));
    }
    for (i, (lo, hi)) in lp.bounds.iter().enumerate() {
        if let Some(hi) = hi {
            let mut coeffs = vec![Rational::zero(); n_orig];
            coeffs[i] = Rational::one();
            let adjusted = hi - lo.as_ref().unwrap_or(&Rational::zero());
            rows.push((expand(&coeffs), Sense::Le, adjusted));
        }
    }
    let objective = expand(&lp.objective);

    match simplex(objective, rows, ncols) {
        Tableau::Infeasible => Ok(LpResult::Infeasible),
        Tableau::Unbounded => Ok(LpResult::Unbounded),
        Tableau::Optimal { point } => {
            let point: Vec<Rational> = var_map
                .iter()
                .zip(&shift)
                .map(|((pos, neg), s)| {
                    let mut v = point[*pos].clone() + s;
                    if let Some(neg) = neg {
                        v -= &point[*neg];
                    }
                    v
                })
                .collect();
            let value = super::dot(&lp.objective, &point);
            Ok(LpResult::Optimal { value, point })
        }
    }
}

enum Tableau {
    Optimal { point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

/// Two-phase simplex over x >= 0 with equality/inequality rows.
fn simplex(objective: Vec<Rational>, rows: Vec<(Vec<Rational>, Sense, Rational)>, n: usize) -> Tableau {
    let m = rows.len();
    // Column layout: [x (n)] [slacks (one per Le/Ge row)] [artificials].
    let mut nslack = 0;
    for (_, sense, _) in &rows {
        if *sense != Sense::Eq {
            nslack += 1;
        }
    }
    let mut width = n + nslack;
    let mut body: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = vec![usize::MAX; m];
    let mut artificial_of_row: Vec<Option<usize>> = vec![None; m];

    let mut slack_idx = 0;
    for (r, (coeffs, sense, b)) in rows.into_iter().enumerate() {
        let flip = b.is_negative();
        let mut row: Vec<Rational> = if flip {
            coeffs.iter().map(|c| -c.clone()).collect()
        } else {
            coeffs
        };
        let b = if flip { -b } else { b };
        let sense = match (sense, flip) {
            (Sense::Eq, _) => Sense::Eq,
            (s, false) => s,
            (Sense::Le, true) => Sense::Ge,
            (Sense::Ge, true) => Sense::Le,
        };
        row.resize(width, Rational::zero());
        match sense {
            Sense::Le => {
                row[n + slack_idx] = Rational::one();
                basis[r] = n + slack_idx;
                slack_idx += 1;
            }
            Sense::Ge => {
                row[n + slack_idx] = -Rational::one();
                slack_idx += 1;
                artificial_of_row[r] = Some(r);
            }
            Sense::Eq => {
                artificial_of_row[r] = Some(r);
            }
        }
        body.push(row);
        rhs.push(b);
    }
    // Append artificial columns where needed.
    let mut artificials: Vec<usize> = Vec::new();
    for r in 0..m {
        if artificial_of_row[r].is_some() {
            for (rr, row) in body.iter_mut().enumerate() {
                row.push(if rr == r { Rational::one() } else { Rational::zero() });
            }
            basis[r] = width;
            artificials.push(width);
            width += 1;
        }
    }

    // Phase 1: maximize -(sum of artificials) to 0.
    if !artificials.is_empty() {
        let mut phase1 = vec![Rational::zero(); width];
        for &a in &artificials {
            phase1[a] = -Rational::one();
        }
        match run_simplex(&mut body, &mut rhs, &mut basis, &phase1, width) {
            SimplexEnd::Unbounded => unreachable!("phase-1 objective is bounded"),
            SimplexEnd::Optimal(value) => {
                if !value.is_zero() {
                    return Tableau::Infeasible;
                }
            }
        }
        // Drive remaining artificials out of the basis; rows that cannot
        // be pivoted are redundant (all-zero with zero rhs) and go inert.
        for r in 0..m {
            if artificials.contains(&basis[r]) {
                let enter = (0..n + nslack).find(|&c| !body[r][c].is_zero());
                match enter {
                    Some(c) => pivot(&mut body, &mut rhs, &mut basis, r, c),
                    None => {
                        debug_assert!(rhs[r].is_zero());
                        basis[r] = usize::MAX;
                    }
                }
            }
        }
        // Artificial columns are now nonbasic everywhere: drop them.
        for row in body.iter_mut() {
            row.truncate(n + nslack);
        }
        width = n + nslack;
    }

    let mut phase2 = objective;
    phase2.resize(width, Rational::zero());
    match run_simplex(&mut body, &mut rhs, &mut basis, &phase2, width) {
        SimplexEnd::Unbounded => Tableau::Unbounded,
        SimplexEnd::Optimal(_) => {
            let mut point = vec![Rational::zero(); width];
            for r in 0..m {
                if basis[r] != usize::MAX {
                    point[basis[r]] = rhs[r].clone();
                }
            }
            point.truncate(n);
            Tableau::Optimal { point }
        }
    }
}

enum SimplexEnd {
    Optimal(Rational),
    Unbounded,
}

/// Maximizes `objective` by primal simplex with Bland's rule.
fn run_simplex(
    body: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    basis: &mut [usize],
    objective: &[Rational],
    width: usize,
) -> SimplexEnd {
    let m = body.len();
    loop {
        // Reduced costs: c_j - c_B . B^-1 A_j (tableau is kept in basis form).
        let mut reduced = objective.to_vec();
        for r in 0..m {
            let b = basis[r];
            if b == usize::MAX {
                continue;
            }
            let cb = objective[b].clone();
            if cb.is_zero() {
                continue;
            }
            for c in 0..width {
                let sub = &cb * &body[r][c];
                reduced[c] -= sub;
            }
        }
        // Bland: lowest-index column with positive reduced cost.
        let Some(enter) = (0..width).find(|&c| reduced[c].is_positive()) else {
            let value = (0..m)
                .filter(|&r| basis[r] != usize::MAX)
                .map(|r| &objective[basis[r]] * &rhs[r])
                .sum::<Rational>();
            return SimplexEnd::Optimal(value);
        };
        // Ratio test; Bland tie-break on lowest basis variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if body[r][enter].is_positive() {
                let ratio = &rhs[r] / &body[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((leave, _)) = leave else {
            return SimplexEnd::Unbounded;
        };
        pivot(body, rhs, basis, leave, enter);
    }
}

fn pivot(body: &mut [Vec<Rational>], rhs: &mut [Rational], basis: &mut [usize], r: usize, c: usize) {
    let inv = body[r][c].clone();
    for v in body[r].iter_mut() {
        *v /= &inv;
    }
    rhs[r] /= &inv;
    for rr in 0..body.len() {
        if rr != r && !body[rr][c].is_zero() {
            let factor = body[rr][c].clone();
            for cc in 0..body[rr].len() {
                let sub = &factor * &body[r][cc];
                body[rr][cc] -= sub;
            }
            let sub = &factor * &rhs[r];
            rhs[rr] -= sub;
        }
    }
    basis[r] = c;
}
