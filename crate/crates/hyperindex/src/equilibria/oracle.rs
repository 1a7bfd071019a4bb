//! Brute-force reference enumeration used by the test suite.
//!
//! Independent of the incremental double-description path in the parent
//! module: vertices of each best-reply polytope are found by exhaustive
//! basis enumeration (every square subsystem of tight constraints is solved
//! exactly and kept when feasible), i.e. support enumeration over all
//! tight-set patterns, with best-reply certification via the same
//! complete-labeling test. Exponential in the strategy counts; intended for
//! games up to about 4x4.

use super::{is_equilibrium, ExtremeEquilibrium};
use crate::exactcore::{determinant, dot, Rational};
use crate::normalform::{payoff, BimatrixGame, MixedProfile};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// All vertices of `{x >= 0, rows . x <= rhs}` by basis enumeration.
fn vertices_bruteforce(rows: &[Vec<Rational>], rhs: &[Rational], dim: usize) -> Vec<Vec<Rational>> {
    // Constraints: -x_i <= 0 for i < dim, then the rows.
    let total = dim + rows.len();
    let constraint = |c: usize| -> (Vec<Rational>, Rational) {
        if c < dim {
            let mut v = vec![Rational::zero(); dim];
            v[c] = -Rational::one();
            (v, Rational::zero())
        } else {
            (rows[c - dim].clone(), rhs[c - dim].clone())
        }
    };
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    enumerate_subsets(total, dim, 0, &mut chosen, &mut |subset| {
        let system: Vec<Vec<Rational>> = subset.iter().map(|&c| constraint(c).0).collect();
        let rhs_v: Vec<Rational> = subset.iter().map(|&c| constraint(c).1).collect();
        if let Some(point) = solve_square(&system, &rhs_v) {
            let feasible = (0..total).all(|c| {
                let (n, b) = constraint(c);
                dot(&n, &point) <= b
            });
            if feasible && !out.contains(&point) {
                out.push(point);
            }
        }
    });
    out.sort();
    out
}

fn enumerate_subsets(
    total: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for c in start..total {
        chosen.push(c);
        enumerate_subsets(total, k, c + 1, chosen, f);
        chosen.pop();
    }
}

/// Solves a square rational system by Cramer's rule; `None` when singular.
fn solve_square(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let det = determinant(m);
    if det.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for col in 0..n {
        let replaced: Vec<Vec<Rational>> = m
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut row = row.clone();
                row[col] = rhs[r].clone();
                row
            })
            .collect();
        out.push(determinant(&replaced) / &det);
    }
    Some(out)
}

/// Reference implementation of extreme-equilibrium enumeration.
pub fn extreme_equilibria_bruteforce(game: &BimatrixGame) -> Vec<ExtremeEquilibrium> {
    let (m, n) = (game.rows(), game.cols());
    let a_pos = super::positivize(&game.a);
    let b_pos = super::positivize(&game.b);
    let bt: Vec<Vec<Rational>> = (0..n)
        .map(|j| (0..m).map(|i| b_pos[i][j].clone()).collect())
        .collect();
    let xs = vertices_bruteforce(&bt, &vec![Rational::one(); n], m);
    let ys = vertices_bruteforce(&a_pos, &vec![Rational::one(); m], n);

    let mut out: Vec<ExtremeEquilibrium> = Vec::new();
    for x in xs.iter().filter(|x| x.iter().any(|v| !v.is_zero())) {
        let mut lx = BTreeSet::new();
        for i in 0..m {
            if x[i].is_zero() {
                lx.insert(i);
            }
        }
        for (j, row) in bt.iter().enumerate() {
            if dot(row, x) == Rational::one() {
                lx.insert(m + j);
            }
        }
        for y in ys.iter().filter(|y| y.iter().any(|v| !v.is_zero())) {
            let mut ly = BTreeSet::new();
            for j in 0..n {
                if y[j].is_zero() {
                    ly.insert(m + j);
                }
            }
            for (i, row) in a_pos.iter().enumerate() {
                if dot(row, y) == Rational::one() {
                    ly.insert(i);
                }
            }
            if lx.union(&ly).count() != m + n {
                continue;
            }
            let sx: Rational = x.iter().sum();
            let sy: Rational = y.iter().sum();
            let profile = MixedProfile {
                row: x.iter().map(|v| v / &sx).collect(),
                col: y.iter().map(|v| v / &sy).collect(),
            };
            assert!(is_equilibrium(game, &profile), "oracle certification failed");
            let pay = payoff(game, &profile).expect("fits");
            out.push(ExtremeEquilibrium {
                row_support: super::support(&profile.row),
                col_support: super::support(&profile.col),
                payoffs: pay,
                profile,
            });
        }
    }
    out.sort_by(|a, b| {
        (&a.row_support, &a.col_support, &a.profile)
            .cmp(&(&b.row_support, &b.col_support, &b.profile))
    });
    out.dedup_by(|a, b| a.profile == b.profile);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    #[test]
    fn oracle_matches_main_on_entry_and_matching_pennies() {
        let entry = BimatrixGame {
            row_labels: vec!["Out".into(), "In-L".into(), "In-R".into()],
            col_labels: vec!["l".into(), "r".into()],
            a: vec![vec![int(2), int(2)], vec![int(3), int(0)], vec![int(0), int(1)]],
            b: vec![vec![int(2), int(2)], vec![int(1), int(0)], vec![int(0), int(3)]],
        };
        let pennies = BimatrixGame {
            row_labels: vec!["H".into(), "T".into()],
            col_labels: vec!["H".into(), "T".into()],
            a: vec![vec![int(1), int(-1)], vec![int(-1), int(1)]],
            b: vec![vec![int(-1), int(1)], vec![int(1), int(-1)]],
        };
        for game in [entry, pennies] {
            let main = super::super::enumerate_extreme_equilibria(&game);
            let brute = extreme_equilibria_bruteforce(&game);
            assert_eq!(main.len(), brute.len());
            for (a, b) in main.iter().zip(&brute) {
                assert_eq!(a.profile, b.profile);
            }
        }
    }

    #[test]
    fn oracle_finds_mixed_equilibrium() {
        // Coordination stage game: unique mixed at (4/5, 1/5) x (1/5, 4/5).
        let game = BimatrixGame {
            row_labels: vec!["T".into(), "B".into()],
            col_labels: vec!["L".into(), "R".into()],
            a: vec![vec![int(4), int(0)], vec![int(0), int(1)]],
            b: vec![vec![int(1), int(0)], vec![int(0), int(4)]],
        };
        let brute = extreme_equilibria_bruteforce(&game);
        assert_eq!(brute.len(), 3);
        assert!(brute.iter().any(|e| e.profile.row == vec![rat(4, 5), rat(1, 5)]
            && e.profile.col == vec![rat(1, 5), rat(4, 5)]));
    }
}
