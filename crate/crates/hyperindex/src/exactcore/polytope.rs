//! Polytopes cut out of a probability simplex by linear inequalities, and
//! their exact dimension / interiority analysis.

use super::{dot, lp_solve, matrix_rank, LinearProgram, LpResult, Rational, Sense};
use num_traits::{One, Zero};

/// One extra inequality `coeffs . x <= bound` (or `<` when `strict`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyConstraint {
    pub coeffs: Vec<Rational>,
    pub bound: Rational,
    pub strict: bool,
}

/// A subset of the probability simplex over `labels`, described by extra
/// linear inequalities. Members are probability vectors by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityPolytope {
    pub labels: Vec<String>,
    pub constraints: Vec<PolyConstraint>,
}

impl InequalityPolytope {
    pub fn simplex(labels: Vec<String>) -> Self {
        InequalityPolytope { labels, constraints: Vec::new() }
    }

    pub fn dim_ambient(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, bound: Rational, strict: bool) -> &mut Self {
        assert_eq!(coeffs.len(), self.labels.len(), "constraint width mismatch");
        self.constraints.push(PolyConstraint { coeffs, bound, strict });
        self
    }

    /// Exact membership; strict constraints must hold strictly.
    pub fn contains(&self, point: &[Rational]) -> bool {
        if point.len() != self.labels.len() {
            return false;
        }
        if point.iter().any(|p| p < &Rational::zero()) {
            return false;
        }
        if point.iter().sum::<Rational>() != Rational::one() {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs = dot(&c.coeffs, point);
            if c.strict { lhs < c.bound } else { lhs <= c.bound }
        })
    }

    /// Indices of non-strict constraints that hold with equality at `point`.
    pub fn tight_constraints(&self, point: &[Rational]) -> Vec<usize> {
        self.constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.strict && dot(&c.coeffs, point) == c.bound)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Result of [`polytope_dimension`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeDimension {
    /// Full-dimensional relative to the simplex; the witness point lies in
    /// the relative interior of the simplex and gives every constraint
    /// positive slack.
    FullDimensional(Vec<Rational>),
    /// Dimension of the affine hull of the feasible set (0 = a point).
    Dimension(usize),
    Empty,
}

/// Decides full-dimensionality by a slack-maximization LP; otherwise
/// computes the affine dimension of the (closure of the) feasible set.
pub fn polytope_dimension(p: &InequalityPolytope) -> PolytopeDimension {
    let n = p.labels.len();
    if n == 0 {
        return PolytopeDimension::Empty;
    }

    // Variables (x_1..x_n, t): maximize t subject to
    //   sum x = 1, x_i - t >= 0, c.x + t <= bound for every constraint.
    let mut obj = vec![Rational::zero(); n];
    obj.push(Rational::one());
    let mut lp = LinearProgram::maximize(obj);
    let mut ones = vec![Rational::one(); n];
    ones.push(Rational::zero());
    lp.constrain(ones, Sense::Eq, Rational::one());
    for i in 0..n {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[i] = Rational::one();
        coeffs[n] = -Rational::one();
        lp.constrain(coeffs, Sense::Ge, Rational::zero());
    }
    for c in &p.constraints {
        let mut coeffs = c.coeffs.clone();
        coeffs.push(Rational::one());
        lp.constrain(coeffs, Sense::Le, c.bound.clone());
    }
    // t is free downward only in principle; keep it bounded at 0 from below
    // is wrong (a point polytope has t = 0). Allow any t <= 1.
    lp.bounds[n] = (None, Some(Rational::one()));

    if let Ok(LpResult::Optimal { value, mut point }) = lp_solve(&lp) {
        if value > Rational::zero() {
            point.truncate(n);
            return PolytopeDimension::FullDimensional(point);
        }
    } else {
        return PolytopeDimension::Empty;
    }

    // Not full-dimensional. Work with the closed relaxation.
    if !closed_feasible(p) {
        return PolytopeDimension::Empty;
    }
    // A strict constraint that cannot attain positive slack over the closed
    // set has no strictly-feasible point at all (by convexity, averaging
    // per-constraint witnesses satisfies all strict constraints at once).
    for (i, c) in p.constraints.iter().enumerate() {
        if c.strict && max_slack(p, i) == Some(Rational::zero()) {
            return PolytopeDimension::Empty;
        }
    }

    // Dimension of the affine hull: simplex equation plus every implicit
    // equality (constraints and coordinate bounds whose slack is stuck at 0).
    let mut normals: Vec<Vec<Rational>> = vec![vec![Rational::one(); n]];
    for (i, c) in p.constraints.iter().enumerate() {
        if max_slack(p, i) == Some(Rational::zero()) {
            normals.push(c.coeffs.clone());
        }
    }
    for i in 0..n {
        if coordinate_max(p, i) == Some(Rational::zero()) {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            normals.push(e);
        }
    }
    PolytopeDimension::Dimension(n - matrix_rank(&normals))
}

fn base_lp(p: &InequalityPolytope, objective: Vec<Rational>) -> LinearProgram {
    let n = p.labels.len();
    let mut lp = LinearProgram::maximize(objective);
    lp.constrain(vec![Rational::one(); n], Sense::Eq, Rational::one());
    for c in &p.constraints {
        lp.constrain(c.coeffs.clone(), Sense::Le, c.bound.clone());
    }
    lp
}

fn closed_feasible(p: &InequalityPolytope) -> bool {
    let n = p.labels.len();
    matches!(
        lp_solve(&base_lp(p, vec![Rational::zero(); n])),
        Ok(LpResult::Optimal { .. })
    )
}

/// Maximum slack of constraint `i` over the closed feasible set.
fn max_slack(p: &InequalityPolytope, i: usize) -> Option<Rational> {
    let c = &p.constraints[i];
    let obj: Vec<Rational> = c.coeffs.iter().map(|v| -v.clone()).collect();
    match lp_solve(&base_lp(p, obj)) {
        Ok(LpResult::Optimal { value, .. }) => Some(value + &c.bound),
        Ok(LpResult::Unbounded) => None,
        _ => Some(Rational::zero()),
    }
}

/// Maximum of coordinate `i` over the closed feasible set.
fn coordinate_max(p: &InequalityPolytope, i: usize) -> Option<Rational> {
    let n = p.labels.len();
    let mut obj = vec![Rational::zero(); n];
    obj[i] = Rational::one();
    match lp_solve(&base_lp(p, obj)) {
        Ok(LpResult::Optimal { value, .. }) => Some(value),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn bare_simplex_is_full_dimensional() {
        let p = InequalityPolytope::simplex(labels(3));
        match polytope_dimension(&p) {
            PolytopeDimension::FullDimensional(pt) => {
                assert!(pt.iter().all(|v| v > &int(0)));
                assert_eq!(pt.iter().sum::<Rational>(), int(1));
            }
            other => panic!("expected full-dimensional, got {other:?}"),
        }
    }

    #[test]
    fn entry_supporting_polytope_is_full_dimensional() {
        // Delta({l,r}) with 3*b_l <= 2: interior points exist (e.g. b_l=1/3).
        let mut p = InequalityPolytope::simplex(vec!["l".into(), "r".into()]);
        p.add(vec![int(3), int(0)], int(2), false);
        match polytope_dimension(&p) {
            PolytopeDimension::FullDimensional(pt) => {
                assert!(p.contains(&pt));
                assert!(pt[0] > int(0) && pt[1] > int(0));
                assert!(int(3) * &pt[0] < int(2));
            }
            other => panic!("expected full-dimensional, got {other:?}"),
        }
    }

    #[test]
    fn pinned_coordinate_gives_dimension_zero() {
        // b_l <= 0 and b_l >= 0 pin the point (0, 1).
        let mut p = InequalityPolytope::simplex(vec!["l".into(), "r".into()]);
        p.add(vec![int(1), int(0)], int(0), false);
        p.add(vec![int(-1), int(0)], int(0), false);
        assert_eq!(polytope_dimension(&p), PolytopeDimension::Dimension(0));
        assert!(p.contains(&[int(0), int(1)]));
        assert!(!p.contains(&[rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn infeasible_is_empty() {
        let mut p = InequalityPolytope::simplex(labels(2));
        p.add(vec![int(1), int(1)], int(0), false); // sum <= 0 but sum = 1
        assert_eq!(polytope_dimension(&p), PolytopeDimension::Empty);
    }

    #[test]
    fn strict_constraint_with_no_witness_is_empty() {
        // x0 < 0 cannot hold on the simplex.
        let mut p = InequalityPolytope::simplex(labels(2));
        p.add(vec![int(1), int(0)], int(0), true);
        assert_eq!(polytope_dimension(&p), PolytopeDimension::Empty);
    }

    #[test]
    fn point_simplex_full_dimensional() {
        // Over a single label the simplex is one point; with slack-free
        // constraints absent it is (trivially) full-dimensional.
        let p = InequalityPolytope::simplex(labels(1));
        match polytope_dimension(&p) {
            PolytopeDimension::FullDimensional(pt) => assert_eq!(pt, vec![int(1)]),
            other => panic!("expected full-dimensional, got {other:?}"),
        }
    }
}
