//! Exact enumeration of all extreme Nash equilibria of a bimatrix game,
//! their grouping into maximal Nash subsets (products of convex hulls
//! closed under exchangeability) and connected components.
//!
//! The enumeration follows the classic polyhedral characterization: after
//! shifting both payoff matrices positive, the extreme equilibria are the
//! completely-labeled vertex pairs of the two best-reply polytopes
//! `P = {x >= 0, B^T x <= 1}` and `Q = {y >= 0, A y <= 1}`. Vertices are
//! found by an exact incremental double-description pass, which handles the
//! degenerate games that positive-dimensional components produce.

use crate::exactcore::{dot, in_convex_hull, lp_solve, HullResult, LinearProgram, LpResult,
    Rational, Sense};
use crate::gametree::{expected_payoffs, mixed_to_behavior, outcome_of, GameTree, Outcome,
    Player, StrategySpace};
use crate::normalform::{payoff, BimatrixGame, MixedProfile};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

pub mod oracle;

/// A vertex of the equilibrium set together with supports and payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeEquilibrium {
    pub profile: MixedProfile,
    pub row_support: Vec<usize>,
    pub col_support: Vec<usize>,
    pub payoffs: [Rational; 2],
}

/// `conv(row_generators) x conv(col_generators)`, every pair of which is an
/// equilibrium; maximal under exchangeability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalNashSubset {
    pub row_generators: Vec<Vec<Rational>>,
    pub col_generators: Vec<Vec<Rational>>,
    /// Indices into the enumerated extreme-equilibrium list.
    pub extreme_ids: Vec<usize>,
}

/// A connected union of maximal Nash subsets (connectedness via nonempty
/// pairwise intersections of the closed convex subsets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashComponent {
    pub id: usize,
    pub subsets: Vec<MaximalNashSubset>,
}

impl MaximalNashSubset {
    pub fn contains(&self, profile: &MixedProfile) -> bool {
        matches!(
            in_convex_hull(&profile.row, &self.row_generators),
            Ok(HullResult::Inside(_))
        ) && matches!(
            in_convex_hull(&profile.col, &self.col_generators),
            Ok(HullResult::Inside(_))
        )
    }
}

impl NashComponent {
    pub fn contains(&self, profile: &MixedProfile) -> bool {
        self.subsets.iter().any(|s| s.contains(profile))
    }

    pub fn extreme_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .subsets
            .iter()
            .flat_map(|s| s.extreme_ids.iter().copied())
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// All generator pairs of all subsets, as profiles (the component's
    /// extreme equilibria).
    pub fn vertex_profiles(&self, extremes: &[ExtremeEquilibrium]) -> Vec<MixedProfile> {
        let mut out: Vec<MixedProfile> = self
            .extreme_ids()
            .into_iter()
            .map(|i| extremes[i].profile.clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Exact best-reply test: every support strategy of each player attains the
/// maximum payoff against the opponent's strategy.
pub fn is_equilibrium(game: &BimatrixGame, profile: &MixedProfile) -> bool {
    if profile.row.len() != game.rows() || profile.col.len() != game.cols() {
        return false;
    }
    for player in Player::both() {
        let (own, opp) = match player {
            Player::One => (&profile.row, &profile.col),
            Player::Two => (&profile.col, &profile.row),
        };
        if own.iter().any(|w| w < &Rational::zero())
            || own.iter().sum::<Rational>() != Rational::one()
        {
            return false;
        }
        let values: Vec<Rational> = (0..game.strategy_count(player))
            .map(|k| game.pure_vs_mixed(player, k, opp))
            .collect();
        let best = values.iter().max().unwrap();
        for (k, w) in own.iter().enumerate() {
            if !w.is_zero() && &values[k] != best {
                return false;
            }
        }
    }
    true
}

fn support(v: &[Rational]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Shifts a payoff matrix so every entry is strictly positive.
fn positivize(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let min = m
        .iter()
        .flat_map(|r| r.iter())
        .min()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let shift = if min > Rational::zero() {
        Rational::zero()
    } else {
        Rational::one() - &min
    };
    m.iter()
        .map(|r| r.iter().map(|v| v + &shift).collect())
        .collect()
}

/// Vertices of `{x >= 0, rows . x <= rhs}` (must be bounded), by an exact
/// incremental double-description pass starting from a large simplex.
fn polytope_vertices(rows: &[Vec<Rational>], rhs: &[Rational], dim: usize) -> Vec<Vec<Rational>> {
    // A bound with sum(x) < bound over the feasible set: every row is
    // strictly positive here, so x_i <= rhs_r / rows[r][i] for any row r.
    let mut bound = Rational::one();
    for i in 0..dim {
        let mut best: Option<Rational> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[i].is_positive() {
                let cap = &rhs[r] / &row[i];
                if best.as_ref().is_none_or(|b| &cap < b) {
                    best = Some(cap);
                }
            }
        }
        bound += best.expect("bounded polytope: every coordinate capped");
    }

    // Constraint universe: 0..dim nonnegativity (-x_i <= 0), then the given
    // rows, then the artificial cap sum(x) <= bound.
    let total = dim + rows.len() + 1;
    let normal = |c: usize| -> Vec<Rational> {
        if c < dim {
            let mut v = vec![Rational::zero(); dim];
            v[c] = -Rational::one();
            v
        } else if c < dim + rows.len() {
            rows[c - dim].clone()
        } else {
            vec![Rational::one(); dim]
        }
    };
    let bound_of = |c: usize| -> Rational {
        if c < dim {
            Rational::zero()
        } else if c < dim + rows.len() {
            rhs[c - dim].clone()
        } else {
            bound.clone()
        }
    };

    // Initial simplex: origin and bound * e_i.
    let mut points: Vec<Vec<Rational>> = Vec::new();
    points.push(vec![Rational::zero(); dim]);
    for i in 0..dim {
        let mut p = vec![Rational::zero(); dim];
        p[i] = bound.clone();
        points.push(p);
    }

    let active_set = |p: &[Rational], upto: usize| -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for c in (0..upto).chain([total - 1]) {
            if dot(&normal(c), p) == bound_of(c) {
                set.insert(c);
            }
        }
        set
    };

    for step in 0..rows.len() {
        let cidx = dim + step;
        let cn = normal(cidx);
        let cb = bound_of(cidx);
        let value: Vec<Rational> = points.iter().map(|p| dot(&cn, p)).collect();
        let mut kept: Vec<Vec<Rational>> = Vec::new();
        let mut new_pts: Vec<Vec<Rational>> = Vec::new();
        let actives: Vec<BTreeSet<usize>> =
            points.iter().map(|p| active_set(p, cidx)).collect();
        for (i, p) in points.iter().enumerate() {
            if value[i] <= cb {
                kept.push(p.clone());
            }
        }
        for i in 0..points.len() {
            if value[i] >= cb {
                continue;
            }
            for j in 0..points.len() {
                if value[j] <= cb {
                    continue;
                }
                // i strictly inside, j strictly outside: cut the edge if the
                // two vertices are adjacent (common actives span dim-1).
                let common: Vec<Vec<Rational>> = actives[i]
                    .intersection(&actives[j])
                    .map(|&c| normal(c))
                    .collect();
                if common.len() < dim - 1
                    || crate::exactcore::matrix_rank(&common) != dim - 1
                {
                    continue;
                }
                // p = points[i] + t (points[j] - points[i]) with c.p = cb.
                let denom = &value[j] - &value[i];
                let t = (&cb - &value[i]) / denom;
                let pt: Vec<Rational> = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(a, b)| a + &t * (b - a))
                    .collect();
                new_pts.push(pt);
            }
        }
        kept.extend(new_pts);
        kept.sort();
        kept.dedup();
        points = kept;
    }

    // Drop anything still leaning on the artificial cap.
    points.retain(|p| p.iter().sum::<Rational>() < bound);
    points
}

/// Complete list of extreme Nash equilibria, in a deterministic order
/// (lexicographic on supports, then on the strategy vectors).
pub fn enumerate_extreme_equilibria(game: &BimatrixGame) -> Vec<ExtremeEquilibrium> {
    let (m, n) = (game.rows(), game.cols());
    let a_pos = positivize(&game.a);
    let b_pos = positivize(&game.b);

    // P = {x >= 0, B^T x <= 1} in R^m; Q = {y >= 0, A y <= 1} in R^n.
    let bt: Vec<Vec<Rational>> = (0..n)
        .map(|j| (0..m).map(|i| b_pos[i][j].clone()).collect())
        .collect();
    let ones_n = vec![Rational::one(); n];
    let ones_m = vec![Rational::one(); m];
    let xs = polytope_vertices(&bt, &ones_n, m);
    let ys = polytope_vertices(&a_pos, &ones_m, n);

    // Labels: for x, strategies i with x_i = 0 plus columns j with
    // (B^T x)_j = 1; for y, columns with y_j = 0 plus rows with (A y)_i = 1.
    let x_labels: Vec<(Vec<Rational>, BTreeSet<usize>)> = xs
        .into_iter()
        .filter(|x| x.iter().any(|v| !v.is_zero()))
        .map(|x| {
            let mut l = BTreeSet::new();
            for i in 0..m {
                if x[i].is_zero() {
                    l.insert(i);
                }
            }
            for (j, row) in bt.iter().enumerate() {
                if dot(row, &x) == Rational::one() {
                    l.insert(m + j);
                }
            }
            (x, l)
        })
        .collect();
    let y_labels: Vec<(Vec<Rational>, BTreeSet<usize>)> = ys
        .into_iter()
        .filter(|y| y.iter().any(|v| !v.is_zero()))
        .map(|y| {
            let mut l = BTreeSet::new();
            for j in 0..n {
                if y[j].is_zero() {
                    l.insert(m + j);
                }
            }
            for (i, row) in a_pos.iter().enumerate() {
                if dot(row, &y) == Rational::one() {
                    l.insert(i);
                }
            }
            (y, l)
        })
        .collect();

    let mut out: Vec<ExtremeEquilibrium> = Vec::new();
    for (x, lx) in &x_labels {
        for (y, ly) in &y_labels {
            if lx.union(ly).count() != m + n {
                continue;
            }
            let sx: Rational = x.iter().sum();
            let sy: Rational = y.iter().sum();
            let row: Vec<Rational> = x.iter().map(|v| v / &sx).collect();
            let col: Vec<Rational> = y.iter().map(|v| v / &sy).collect();
            let profile = MixedProfile { row, col };
            debug_assert!(is_equilibrium(game, &profile));
            let pay = payoff(game, &profile).expect("profile fits game");
            out.push(ExtremeEquilibrium {
                row_support: support(&profile.row),
                col_support: support(&profile.col),
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

/// Maximal Nash subsets: maximal bicliques of the exchangeability relation
/// on the extreme equilibria's strategy vectors.
pub fn maximal_nash_subsets(
    game: &BimatrixGame,
    extremes: &[ExtremeEquilibrium],
) -> Vec<MaximalNashSubset> {
    let mut xs: Vec<Vec<Rational>> = extremes.iter().map(|e| e.profile.row.clone()).collect();
    xs.sort();
    xs.dedup();
    let mut ys: Vec<Vec<Rational>> = extremes.iter().map(|e| e.profile.col.clone()).collect();
    ys.sort();
    ys.dedup();

    let edge: Vec<BTreeSet<usize>> = xs
        .iter()
        .map(|x| {
            ys.iter()
                .enumerate()
                .filter(|(_, y)| {
                    is_equilibrium(game, &MixedProfile { row: x.clone(), col: (*y).clone() })
                })
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    // Galois-closed pairs: close the neighborhood family under pairwise
    // intersection; each closed Y' with its co-set X' is a maximal biclique.
    let mut families: BTreeSet<BTreeSet<usize>> = edge.iter().cloned().collect();
    families.retain(|f| !f.is_empty());
    loop {
        let snapshot: Vec<BTreeSet<usize>> = families.iter().cloned().collect();
        let before = families.len();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let inter: BTreeSet<usize> =
                    snapshot[i].intersection(&snapshot[j]).copied().collect();
                if !inter.is_empty() {
                    families.insert(inter);
                }
            }
        }
        if families.len() == before {
            break;
        }
    }

    let mut subsets: Vec<MaximalNashSubset> = Vec::new();
    for yset in &families {
        let xset: Vec<usize> = (0..xs.len())
            .filter(|&i| yset.iter().all(|j| edge[i].contains(j)))
            .collect();
        if xset.is_empty() {
            continue;
        }
        // Closure: the biclique is maximal iff yset is exactly the common
        // neighborhood of xset.
        let closed: BTreeSet<usize> = (0..ys.len())
            .filter(|j| xset.iter().all(|&i| edge[i].contains(j)))
            .collect();
        if &closed != yset {
            continue;
        }
        let row_generators: Vec<Vec<Rational>> = xset.iter().map(|&i| xs[i].clone()).collect();
        let col_generators: Vec<Vec<Rational>> = yset.iter().map(|&j| ys[j].clone()).collect();
        let extreme_ids: Vec<usize> = extremes
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                row_generators.contains(&e.profile.row) && col_generators.contains(&e.profile.col)
            })
            .map(|(i, _)| i)
            .collect();
        subsets.push(MaximalNashSubset { row_generators, col_generators, extreme_ids });
    }
    subsets.sort_by(|a, b| a.extreme_ids.cmp(&b.extreme_ids));
    subsets
}

/// Groups subsets into connected components: two subsets touch when both
/// coordinate hulls intersect (decided exactly by LP).
pub fn components(subsets: &[MaximalNashSubset]) -> Vec<NashComponent> {
    let n = subsets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if hulls_intersect(&subsets[i].row_generators, &subsets[j].row_generators)
                && hulls_intersect(&subsets[i].col_generators, &subsets[j].col_generators)
            {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        match seen.iter().find(|(r, _)| *r == root) {
            Some(&(_, g)) => groups[g].push(i),
            None => {
                seen.push((root, groups.len()));
                groups.push(vec![i]);
            }
        }
    }
    groups.sort_by_key(|g| {
        g.iter()
            .map(|&s| subsets[s].extreme_ids.first().copied().unwrap_or(usize::MAX))
            .min()
    });
    groups
        .into_iter()
        .enumerate()
        .map(|(id, g)| NashComponent {
            id,
            subsets: g.into_iter().map(|s| subsets[s].clone()).collect(),
        })
        .collect()
}

fn hulls_intersect(g1: &[Vec<Rational>], g2: &[Vec<Rational>]) -> bool {
    if g1.is_empty() || g2.is_empty() {
        return false;
    }
    let dim = g1[0].len();
    // Feasibility: lambda >= 0, mu >= 0, sum each = 1, hull points equal.
    let k1 = g1.len();
    let k2 = g2.len();
    let mut lp = LinearProgram::maximize(vec![Rational::zero(); k1 + k2]);
    let mut ones1 = vec![Rational::one(); k1];
    ones1.extend(vec![Rational::zero(); k2]);
    lp.constrain(ones1, Sense::Eq, Rational::one());
    let mut ones2 = vec![Rational::zero(); k1];
    ones2.extend(vec![Rational::one(); k2]);
    lp.constrain(ones2, Sense::Eq, Rational::one());
    for c in 0..dim {
        let mut coeffs: Vec<Rational> = g1.iter().map(|g| g[c].clone()).collect();
        coeffs.extend(g2.iter().map(|g| -g[c].clone()));
        lp.constrain(coeffs, Sense::Eq, Rational::zero());
    }
    matches!(lp_solve(&lp), Ok(LpResult::Optimal { .. }))
}

/// Result of [`component_outcome`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentOutcome {
    Unique(Outcome),
    /// Two extreme equilibria of the component inducing different outcomes.
    Multiple(Box<(MixedProfile, MixedProfile)>),
}

/// Decides whether every profile of the component induces one outcome.
/// Outcomes are bilinear in the profile, so checking all generator pairs of
/// every subset suffices.
pub fn component_outcome(
    tree: &GameTree,
    row_space: &StrategySpace,
    col_space: &StrategySpace,
    component: &NashComponent,
) -> ComponentOutcome {
    let mut reference: Option<(Outcome, MixedProfile)> = None;
    for subset in &component.subsets {
        for x in &subset.row_generators {
            for y in &subset.col_generators {
                let b1 = mixed_to_behavior(tree, row_space, x);
                let b2 = mixed_to_behavior(tree, col_space, y);
                let outcome = outcome_of(tree, &b1, &b2).expect("total behavior");
                let profile = MixedProfile { row: x.clone(), col: y.clone() };
                match &reference {
                    None => reference = Some((outcome, profile)),
                    Some((q, witness)) => {
                        if q != &outcome {
                            return ComponentOutcome::Multiple(Box::new((
                                witness.clone(),
                                profile,
                            )));
                        }
                    }
                }
            }
        }
    }
    ComponentOutcome::Unique(reference.expect("component has a generator").0)
}

/// Expected payoffs of a component with a unique outcome.
pub fn component_payoffs(tree: &GameTree, outcome: &Outcome) -> [Rational; 2] {
    expected_payoffs(tree, outcome)
}

/// Finds the component containing `profile`, if any.
pub fn locate_component<'a>(
    components: &'a [NashComponent],
    profile: &MixedProfile,
) -> Option<&'a NashComponent> {
    components.iter().find(|c| c.contains(profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    fn entry_reduced() -> BimatrixGame {
        BimatrixGame {
            row_labels: vec!["Out".into(), "In-L".into(), "In-R".into()],
            col_labels: vec!["l".into(), "r".into()],
            a: vec![vec![int(2), int(2)], vec![int(3), int(0)], vec![int(0), int(1)]],
            b: vec![vec![int(2), int(2)], vec![int(1), int(0)], vec![int(0), int(3)]],
        }
    }

    #[test]
    fn entry_reduced_has_three_extremes() {
        let game = entry_reduced();
        let eqs = enumerate_extreme_equilibria(&game);
        let profiles: Vec<(Vec<Rational>, Vec<Rational>)> = eqs
            .iter()
            .map(|e| (e.profile.row.clone(), e.profile.col.clone()))
            .collect();
        assert_eq!(eqs.len(), 3, "{profiles:?}");
        assert!(profiles.contains(&(
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0)]
        )));
        assert!(profiles.contains(&(
            vec![int(1), int(0), int(0)],
            vec![int(0), int(1)]
        )));
        assert!(profiles.contains(&(
            vec![int(1), int(0), int(0)],
            vec![rat(2, 3), rat(1, 3)]
        )));
    }

    #[test]
    fn entry_reduced_subsets_and_components() {
        let game = entry_reduced();
        let eqs = enumerate_extreme_equilibria(&game);
        let subsets = maximal_nash_subsets(&game, &eqs);
        assert_eq!(subsets.len(), 2);
        let comps = components(&subsets);
        assert_eq!(comps.len(), 2);
        // One singleton strict component, one segment component.
        let sizes: Vec<usize> = comps.iter().map(|c| c.extreme_ids().len()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2]);
    }

    #[test]
    fn one_by_one_game() {
        let game = BimatrixGame {
            row_labels: vec!["a".into()],
            col_labels: vec!["b".into()],
            a: vec![vec![int(5)]],
            b: vec![vec![int(-1)]],
        };
        let eqs = enumerate_extreme_equilibria(&game);
        assert_eq!(eqs.len(), 1);
        assert_eq!(eqs[0].profile.row, vec![int(1)]);
        assert_eq!(eqs[0].payoffs, [int(5), int(-1)]);
    }

    #[test]
    fn constant_game_single_component() {
        let game = BimatrixGame {
            row_labels: vec!["a".into(), "b".into()],
            col_labels: vec!["c".into(), "d".into()],
            a: vec![vec![int(1), int(1)], vec![int(1), int(1)]],
            b: vec![vec![int(1), int(1)], vec![int(1), int(1)]],
        };
        let eqs = enumerate_extreme_equilibria(&game);
        assert_eq!(eqs.len(), 4); // pure profiles are the vertices
        let subsets = maximal_nash_subsets(&game, &eqs);
        assert_eq!(subsets.len(), 1);
        let comps = components(&subsets);
        assert_eq!(comps.len(), 1);
    }

    #[test]
    fn figure6_stage_game_seven_equilibria() {
        let game = BimatrixGame {
            row_labels: vec!["A".into(), "B".into(), "C".into()],
            col_labels: vec!["A".into(), "B".into(), "C".into()],
            a: vec![
                vec![int(4), int(0), int(0)],
                vec![int(0), int(3), int(0)],
                vec![int(2), int(0), int(1)],
            ],
            b: vec![
                vec![int(4), int(0), int(2)],
                vec![int(0), int(1), int(0)],
                vec![int(2), int(0), int(3)],
            ],
        };
        // b above must be the column player's payoffs oriented rows x cols:
        // entry (i, j) pays column player b[i][j]. From the paper's table:
        // (A,A)=(4,4), (B,B)=(3,1), (C,A)=(2,2), (C,C)=(1,3), rest 0.
        let game = BimatrixGame {
            b: vec![
                vec![int(4), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(2), int(0), int(3)],
            ],
            ..game
        };
        let eqs = enumerate_extreme_equilibria(&game);
        assert_eq!(eqs.len(), 7);
        let expected: Vec<(Vec<Rational>, Vec<Rational>)> = vec![
            (vec![int(1), int(0), int(0)], vec![int(1), int(0), int(0)]),
            (vec![int(0), int(1), int(0)], vec![int(0), int(1), int(0)]),
            (vec![int(0), int(0), int(1)], vec![int(0), int(0), int(1)]),
            (
                vec![rat(1, 5), rat(4, 5), int(0)],
                vec![rat(3, 7), rat(4, 7), int(0)],
            ),
            (
                vec![rat(1, 5), int(0), rat(4, 5)],
                vec![rat(1, 3), int(0), rat(2, 3)],
            ),
            (
                vec![int(0), rat(3, 4), rat(1, 4)],
                vec![int(0), rat(1, 4), rat(3, 4)],
            ),
            (
                vec![rat(1, 17), rat(12, 17), rat(4, 17)],
                vec![rat(3, 13), rat(4, 13), rat(6, 13)],
            ),
        ];
        for (row, col) in expected {
            assert!(
                eqs.iter().any(|e| e.profile.row == row && e.profile.col == col),
                "missing equilibrium ({row:?}, {col:?})"
            );
        }
        let comps = components(&maximal_nash_subsets(&game, &eqs));
        assert_eq!(comps.len(), 7);
    }
}
