//! Exact convex-hull membership by LP feasibility.

use super::{lp_solve, LinearProgram, LpError, LpResult, Rational, Sense};
use num_traits::{One, Zero};

/// Result of [`in_convex_hull`]. `Inside` carries exact convex weights over
/// the generators reproducing the queried point; `Outside` is certified by
/// infeasibility of the weight LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullResult {
    Inside(Vec<Rational>),
    Outside,
}

/// Decides whether `point` lies in the convex hull of `generators`.
pub fn in_convex_hull(point: &[Rational], generators: &[Vec<Rational>]) -> Result<HullResult, LpError> {
    let dim = point.len();
    if generators.iter().any(|g| g.len() != dim) {
        return Err(LpError::Dimension);
    }
    if generators.is_empty() {
        return Ok(HullResult::Outside);
    }
    let k = generators.len();
    // Feasibility: w >= 0, sum w = 1, sum_i w_i g_i = point.
    let mut lp = LinearProgram::maximize(vec![Rational::zero(); k]);
    lp.constrain(vec![Rational::one(); k], Sense::Eq, Rational::one());
    for coord in 0..dim {
        let coeffs: Vec<Rational> = generators.iter().map(|g| g[coord].clone()).collect();
        lp.constrain(coeffs, Sense::Eq, point[coord].clone());
    }
    match lp_solve(&lp)? {
        LpResult::Optimal { point: weights, .. } => Ok(HullResult::Inside(weights)),
        LpResult::Infeasible => Ok(HullResult::Outside),
        LpResult::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    #[test]
    fn generator_itself_is_inside() {
        let g = vec![vec![int(1), int(2)], vec![int(3), int(4)]];
        match in_convex_hull(&[int(3), int(4)], &g).unwrap() {
            HullResult::Inside(w) => {
                assert_eq!(w, vec![int(0), int(1)]);
            }
            HullResult::Outside => panic!("expected inside"),
        }
    }

    #[test]
    fn midpoint_of_two_generators() {
        let g = vec![vec![int(0), int(0)], vec![int(2), int(2)]];
        match in_convex_hull(&[int(1), int(1)], &g).unwrap() {
            HullResult::Inside(w) => assert_eq!(w, vec![rat(1, 2), rat(1, 2)]),
            HullResult::Outside => panic!("expected inside"),
        }
    }

    #[test]
    fn entry_duplicate_row_certificate() {
        // Payoff-pair rows of the entry game: Out=(2,2,2,2), InL=(3,0,1,0).
        // 3/4 Out + 1/4 InL = (9/4, 3/2, 7/4, 3/2).
        let g = vec![
            vec![int(2), int(2), int(2), int(2)],
            vec![int(3), int(0), int(1), int(0)],
        ];
        let p = [rat(9, 4), rat(3, 2), rat(7, 4), rat(3, 2)];
        match in_convex_hull(&p, &g).unwrap() {
            HullResult::Inside(w) => assert_eq!(w, vec![rat(3, 4), rat(1, 4)]),
            HullResult::Outside => panic!("expected inside"),
        }
    }

    #[test]
    fn outside_point() {
        let g = vec![vec![int(0)], vec![int(1)]];
        assert_eq!(in_convex_hull(&[int(2)], &g).unwrap(), HullResult::Outside);
    }

    #[test]
    fn dimension_mismatch() {
        let g = vec![vec![int(0), int(1)]];
        assert!(in_convex_hull(&[int(0)], &g).is_err());
    }
}
