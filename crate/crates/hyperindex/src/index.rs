//! Fixed-point indices of equilibrium components.
//!
//! Isolated regular equilibria get Shapley's determinant formula. General
//! components are resolved by the first applicable of: the formula itself,
//! the complement rule (indices sum to +1), deletion of strictly inferior
//! replies, and perturbation sampling inside an admissible region. All
//! methods must agree whenever several apply; the property suite checks
//! this on the whole corpus.

use crate::equilibria::{
    components, enumerate_extreme_equilibria, maximal_nash_subsets, ExtremeEquilibrium,
    MaximalNashSubset, NashComponent,
};
use crate::exactcore::{
    determinant, dot, lp_solve, InequalityPolytope, LinearProgram, LpResult, Rational, Sense,
};
use crate::gametree::Player;
use crate::normalform::{add_duplicates, eliminate_strictly_inferior, BimatrixGame, MixedProfile};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

/// Signed integer index value.
pub type IndexValue = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Shapley,
    Complement,
    Elimination,
    Perturbation,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Shapley => "shapley",
            Method::Complement => "complement",
            Method::Elimination => "elimination",
            Method::Perturbation => "perturbation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("equilibrium is not regular: {0}")]
    NotRegular(String),
    #[error("component index unresolvable: {0}")]
    Unresolvable(String),
    #[error("component straddles the region boundary: {0}")]
    ComponentStraddlesBoundary(String),
    #[error("equilibrium on the region boundary: {0}")]
    BoundaryEquilibrium(String),
}

/// A full equilibrium census of one bimatrix game.
#[derive(Debug, Clone)]
pub struct Census {
    pub game: BimatrixGame,
    pub extremes: Vec<ExtremeEquilibrium>,
    pub subsets: Vec<MaximalNashSubset>,
    pub components: Vec<NashComponent>,
}

pub fn census(game: &BimatrixGame) -> Census {
    let extremes = enumerate_extreme_equilibria(game);
    let subsets = maximal_nash_subsets(game, &extremes);
    let comps = components(&subsets);
    Census { game: game.clone(), extremes, subsets, components: comps }
}

/// An open region given per player by an inequality polytope over that
/// player's strategy simplex; admissible when no equilibrium of the game
/// meets the extra inequalities with equality.
#[derive(Debug, Clone)]
pub struct AdmissibleRegion {
    pub row: InequalityPolytope,
    pub col: InequalityPolytope,
}

impl AdmissibleRegion {
    pub fn whole(game: &BimatrixGame) -> AdmissibleRegion {
        AdmissibleRegion {
            row: InequalityPolytope::simplex(game.row_labels.clone()),
            col: InequalityPolytope::simplex(game.col_labels.clone()),
        }
    }

    pub fn contains(&self, profile: &MixedProfile) -> bool {
        self.row.contains(&profile.row) && self.col.contains(&profile.col)
    }

    /// A non-strict extra inequality met with equality, if any.
    fn on_boundary(&self, profile: &MixedProfile) -> bool {
        (self.contains(profile))
            && (!self.row.tight_constraints(&profile.row).is_empty()
                || !self.col.tight_constraints(&profile.col).is_empty())
    }
}

/// Shapley's formula for an isolated regular equilibrium: with supports S,
/// T of equal size k and the payoff matrices shifted entrywise positive,
/// the index is `(-1)^(k+1) sign(det A_ST det B_ST)`.
pub fn shapley_index(game: &BimatrixGame, eq: &ExtremeEquilibrium) -> Result<IndexValue, IndexError> {
    let k = eq.row_support.len();
    if eq.col_support.len() != k {
        return Err(IndexError::NotRegular(format!(
            "support sizes differ: {} vs {}",
            k,
            eq.col_support.len()
        )));
    }
    // Off-support strategies must earn strictly less than the equilibrium
    // payoff (the best-reply value).
    for i in 0..game.rows() {
        if !eq.row_support.contains(&i)
            && game.pure_vs_mixed(Player::One, i, &eq.profile.col) >= eq.payoffs[0]
        {
            return Err(IndexError::NotRegular(format!(
                "row `{}` is a weak off-support reply",
                game.row_labels[i]
            )));
        }
    }
    for j in 0..game.cols() {
        if !eq.col_support.contains(&j)
            && game.pure_vs_mixed(Player::Two, j, &eq.profile.row) >= eq.payoffs[1]
        {
            return Err(IndexError::NotRegular(format!(
                "column `{}` is a weak off-support reply",
                game.col_labels[j]
            )));
        }
    }
    let det_a = restricted_positive_det(&game.a, &eq.row_support, &eq.col_support);
    let det_b = restricted_positive_det(&game.b, &eq.row_support, &eq.col_support);
    if det_a.is_zero() || det_b.is_zero() {
        return Err(IndexError::NotRegular(
            "restricted positivized payoff matrix is singular".into(),
        ));
    }
    let sign = crate::exactcore::sign(&(det_a * det_b));
    Ok(if k % 2 == 1 { sign } else { -sign })
}

/// Same formula with a caller-chosen per-player shift (used by the
/// shift-invariance property suite). The shift must make entries positive.
pub fn shapley_index_with_shifts(
    game: &BimatrixGame,
    eq: &ExtremeEquilibrium,
    extra_a: &Rational,
    extra_b: &Rational,
) -> Result<IndexValue, IndexError> {
    let mut shifted = game.clone();
    for row in shifted.a.iter_mut() {
        for v in row.iter_mut() {
            *v += extra_a;
        }
    }
    for row in shifted.b.iter_mut() {
        for v in row.iter_mut() {
            *v += extra_b;
        }
    }
    let mut eq = eq.clone();
    eq.payoffs[0] += extra_a;
    eq.payoffs[1] += extra_b;
    shapley_index(&shifted, &eq)
}

fn restricted_positive_det(m: &[Vec<Rational>], rows: &[usize], cols: &[usize]) -> Rational {
    let min = m.iter().flat_map(|r| r.iter()).min().cloned().unwrap();
    let shift = if min > Rational::zero() {
        Rational::zero()
    } else {
        Rational::one() - min
    };
    let sub: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| &m[i][j] + &shift).collect())
        .collect();
    determinant(&sub)
}

fn component_profiles(census: &Census, idx: usize) -> Vec<MixedProfile> {
    census.components[idx].vertex_profiles(&census.extremes)
}

fn singleton_extreme(census: &Census, idx: usize) -> Option<ExtremeEquilibrium> {
    let profiles = component_profiles(census, idx);
    if profiles.len() != 1 {
        return None;
    }
    census
        .extremes
        .iter()
        .find(|e| e.profile == profiles[0])
        .cloned()
}

/// Index of one component by the first applicable method. `seed` drives the
/// perturbation-sampling fallback only.
pub fn component_index(census: &Census, idx: usize, seed: u64) -> Result<(IndexValue, Method), IndexError> {
    component_index_depth(census, idx, seed, 0)
}

fn component_index_depth(
    census: &Census,
    idx: usize,
    seed: u64,
    depth: usize,
) -> Result<(IndexValue, Method), IndexError> {
    // (a) Shapley on a singleton regular equilibrium.
    if let Some(eq) = singleton_extreme(census, idx) {
        if let Ok(v) = shapley_index(&census.game, &eq) {
            return Ok((v, Method::Shapley));
        }
    }
    // (b) Complement rule when every other component resolves by (a).
    if let Some(v) = complement_value(census, idx) {
        return Ok((v, Method::Complement));
    }
    // (c) Deletion of strictly inferior replies, recursing in the smaller
    // game.
    if depth < 8 {
        match try_elimination(census, idx, seed, depth) {
            Ok(Some(v)) => return Ok((v, Method::Elimination)),
            Ok(None) => {}
            Err(e) => return Err(e),
        }
    }
    // (d) Perturbation sampling.
    perturbation_value(census, idx, seed).map(|v| (v, Method::Perturbation))
}

fn complement_value(census: &Census, idx: usize) -> Option<IndexValue> {
    let mut total = 0;
    for (i, _) in census.components.iter().enumerate() {
        if i == idx {
            continue;
        }
        let eq = singleton_extreme(census, i)?;
        total += shapley_index(&census.game, &eq).ok()?;
    }
    Some(1 - total)
}

fn try_elimination(
    census: &Census,
    idx: usize,
    seed: u64,
    depth: usize,
) -> Result<Option<IndexValue>, IndexError> {
    let component = &census.components[idx];
    let (reduced, removed) = eliminate_strictly_inferior(&census.game, component)
        .map_err(|e| IndexError::Unresolvable(format!("elimination failed: {e}")))?;
    if removed[0].is_empty() && removed[1].is_empty() {
        return Ok(None);
    }
    // Merge strategies that became duplicates once inferior replies left.
    let (reduced, _) = crate::normalform::reduce(&reduced);
    let keep_rows: Vec<usize> = resolve_kept(&census.game.row_labels, &reduced.row_labels);
    let keep_cols: Vec<usize> = resolve_kept(&census.game.col_labels, &reduced.col_labels);
    let small = census2(&reduced);
    // The component survives elimination: its profiles restrict to the kept
    // strategies (removed ones carry zero weight on the component).
    let restricted: Vec<MixedProfile> = component_profiles(census, idx)
        .into_iter()
        .map(|p| MixedProfile {
            row: keep_rows.iter().map(|&i| p.row[i].clone()).collect(),
            col: keep_cols.iter().map(|&j| p.col[j].clone()).collect(),
        })
        .collect();
    if restricted
        .iter()
        .any(|p| p.row.iter().sum::<Rational>() != Rational::one())
    {
        return Err(IndexError::Unresolvable(
            "component places weight on an eliminated strategy".into(),
        ));
    }
    let mut target = None;
    for p in &restricted {
        match small.components.iter().position(|c| c.contains(p)) {
            Some(t) => {
                if *target.get_or_insert(t) != t {
                    return Err(IndexError::Unresolvable(
                        "component image splits across components after elimination".into(),
                    ));
                }
            }
            None => {
                return Err(IndexError::Unresolvable(
                    "component image lost after elimination".into(),
                ))
            }
        }
    }
    let target = target.ok_or_else(|| IndexError::Unresolvable("empty component".into()))?;
    component_index_depth(&small, target, seed, depth + 1).map(|(v, _)| Some(v))
}

/// Indices of the kept strategies in the original label list. Merged
/// duplicates keep a label that may be a common prefix; match by prefix
/// with a unique original row as fallback to exact match.
fn resolve_kept(original: &[String], kept: &[String]) -> Vec<usize> {
    kept.iter()
        .map(|k| {
            original
                .iter()
                .position(|o| o == k)
                .or_else(|| original.iter().position(|o| o.starts_with(k.as_str())))
                .expect("kept label traces back to an original strategy")
        })
        .collect()
}

fn census2(game: &BimatrixGame) -> Census {
    census(game)
}

const PERTURBATION_ATTEMPTS: usize = 8;
const PERTURBATION_GRID: i64 = 4096;

fn perturbation_value(census: &Census, idx: usize, seed: u64) -> Result<IndexValue, IndexError> {
    let delta = perturbation_magnitude(&census.game);
    let radius = admissible_radius(census, idx);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut seen: Vec<IndexValue> = Vec::new();
    for _ in 0..PERTURBATION_ATTEMPTS {
        let value = single_perturbation_draw(census, idx, &delta, &radius, &mut rng);
        if let Some(v) = value {
            if seen.contains(&v) {
                return Ok(v);
            }
            seen.push(v);
        }
    }
    Err(IndexError::Unresolvable(format!(
        "no two perturbation draws agreed (saw {seen:?})"
    )))
}

/// delta = (minimum nonzero payoff gap in the game) / 8.
fn perturbation_magnitude(game: &BimatrixGame) -> Rational {
    let mut values: Vec<Rational> = game
        .a
        .iter()
        .chain(game.b.iter())
        .flat_map(|r| r.iter().cloned())
        .collect();
    values.sort();
    values.dedup();
    let mut min_gap: Option<Rational> = None;
    for w in values.windows(2) {
        let gap = &w[1] - &w[0];
        if min_gap.as_ref().is_none_or(|g| &gap < g) {
            min_gap = Some(gap);
        }
    }
    min_gap.unwrap_or_else(Rational::one) / Rational::from_integer(8.into())
}

/// Half the minimum distance from this component's subsets to any other
/// component's subsets (infinity-norm); 1/2 when no other component exists.
fn admissible_radius(census: &Census, idx: usize) -> Rational {
    let mut best: Option<Rational> = None;
    for (i, other) in census.components.iter().enumerate() {
        if i == idx {
            continue;
        }
        for s1 in &census.components[idx].subsets {
            for s2 in &other.subsets {
                let d = subset_distance(s1, s2);
                if best.as_ref().is_none_or(|b| &d < b) {
                    best = Some(d);
                }
            }
        }
    }
    best.unwrap_or_else(Rational::one) / Rational::from_integer(2.into())
}

/// Minimum infinity-norm distance between two subsets, by LP.
fn subset_distance(s1: &MaximalNashSubset, s2: &MaximalNashSubset) -> Rational {
    let k1r = s1.row_generators.len();
    let k1c = s1.col_generators.len();
    let k2r = s2.row_generators.len();
    let k2c = s2.col_generators.len();
    let rows = s1.row_generators[0].len();
    let cols = s1.col_generators[0].len();
    // Variables: weights (k1r + k1c + k2r + k2c), then t. Minimize t.
    let nv = k1r + k1c + k2r + k2c + 1;
    let mut obj = vec![Rational::zero(); nv];
    obj[nv - 1] = -Rational::one();
    let mut lp = LinearProgram::maximize(obj);
    let block =
        |lp: &mut LinearProgram, offset: usize, count: usize| {
            let mut ones = vec![Rational::zero(); nv];
            for i in 0..count {
                ones[offset + i] = Rational::one();
            }
            lp.constrain(ones, Sense::Eq, Rational::one());
        };
    block(&mut lp, 0, k1r);
    block(&mut lp, k1r, k1c);
    block(&mut lp, k1r + k1c, k2r);
    block(&mut lp, k1r + k1c + k2r, k2c);
    // |x1 - x2|_inf <= t and |y1 - y2|_inf <= t, coordinatewise.
    let mut bound_coord = |gen_a: &[Vec<Rational>],
                           off_a: usize,
                           gen_b: &[Vec<Rational>],
                           off_b: usize,
                           coord: usize| {
        for sgn in [1i64, -1] {
            let mut coeffs = vec![Rational::zero(); nv];
            for (i, g) in gen_a.iter().enumerate() {
                coeffs[off_a + i] = Rational::from_integer(sgn.into()) * &g[coord];
            }
            for (i, g) in gen_b.iter().enumerate() {
                coeffs[off_b + i] = Rational::from_integer((-sgn).into()) * &g[coord];
            }
            coeffs[nv - 1] = -Rational::one();
            lp.constrain(coeffs, Sense::Le, Rational::zero());
        }
    };
    for c in 0..rows {
        bound_coord(&s1.row_generators, 0, &s2.row_generators, k1r + k1c, c);
    }
    for c in 0..cols {
        bound_coord(&s1.col_generators, k1r, &s2.col_generators, k1r + k1c + k2r, c);
    }
    match lp_solve(&lp) {
        Ok(LpResult::Optimal { value, .. }) => -value,
        _ => Rational::one(),
    }
}

/// Infinity-norm distance from a profile to a component.
pub fn profile_component_distance(profile: &MixedProfile, component: &NashComponent) -> Rational {
    let mut best: Option<Rational> = None;
    for subset in &component.subsets {
        let point = MaximalNashSubset {
            row_generators: vec![profile.row.clone()],
            col_generators: vec![profile.col.clone()],
            extreme_ids: vec![],
        };
        let d = subset_distance(&point, subset);
        if best.as_ref().is_none_or(|b| &d < b) {
            best = Some(d);
        }
    }
    best.expect("component has a subset")
}

fn single_perturbation_draw(
    census: &Census,
    idx: usize,
    delta: &Rational,
    radius: &Rational,
    rng: &mut ChaCha20Rng,
) -> Option<IndexValue> {
    let (m, n) = (census.game.rows(), census.game.cols());
    let mut draw_matrix = || -> Vec<Vec<Rational>> {
        (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let k: i64 = rng.gen_range(-PERTURBATION_GRID..=PERTURBATION_GRID);
                        delta * Rational::new(k.into(), PERTURBATION_GRID.into())
                    })
                    .collect()
            })
            .collect()
    };
    let da = draw_matrix();
    let db = draw_matrix();
    let perturbed = crate::normalform::perturb(&census.game, &da, &db).ok()?;
    let extremes = enumerate_extreme_equilibria(&perturbed);
    let mut total = 0;
    for eq in &extremes {
        let d = profile_component_distance(&eq.profile, &census.components[idx]);
        if &d <= radius {
            total += shapley_index(&perturbed, eq).ok()?;
        }
    }
    Some(total)
}

/// Index of an admissible region: the sum of the component indices of the
/// components fully inside it.
pub fn region_index(
    census: &Census,
    region: &AdmissibleRegion,
    seed: u64,
) -> Result<IndexValue, IndexError> {
    for eq in &census.extremes {
        if region.on_boundary(&eq.profile) {
            return Err(IndexError::BoundaryEquilibrium(format!(
                "equilibrium {:?} meets a region inequality with equality",
                eq.profile
            )));
        }
    }
    let mut total = 0;
    for (i, comp) in census.components.iter().enumerate() {
        let profiles = comp.vertex_profiles(&census.extremes);
        let inside = profiles.iter().filter(|p| region.contains(p)).count();
        if inside == 0 {
            continue;
        }
        if inside < profiles.len() {
            return Err(IndexError::ComponentStraddlesBoundary(format!(
                "component {i} has {inside}/{} extreme equilibria inside",
                profiles.len()
            )));
        }
        total += component_index(census, i, seed)?.0;
    }
    Ok(total)
}

/// Property I.2 check: adds the duplicates, relocates the component in the
/// extended game, and compares indices.
pub fn check_duplication_invariance(
    census: &Census,
    idx: usize,
    player: Player,
    mixtures: &[Vec<Rational>],
    seed: u64,
) -> Result<bool, IndexError> {
    let original = component_index(census, idx, seed)?.0;
    if mixtures.is_empty() {
        return Ok(true);
    }
    let (bigger, _) = add_duplicates(&census.game, player, mixtures)
        .map_err(|e| IndexError::Unresolvable(format!("duplicate construction failed: {e}")))?;
    let big = census2(&bigger);
    // The original profiles pad with zero weight on the duplicates.
    let padded: Vec<MixedProfile> = component_profiles(census, idx)
        .into_iter()
        .map(|mut p| {
            match player {
                Player::One => p.row.extend(vec![Rational::zero(); mixtures.len()]),
                Player::Two => p.col.extend(vec![Rational::zero(); mixtures.len()]),
            }
            p
        })
        .collect();
    let mut target = None;
    for p in &padded {
        match big.components.iter().position(|c| c.contains(p)) {
            Some(t) => {
                if *target.get_or_insert(t) != t {
                    return Err(IndexError::Unresolvable(
                        "component image splits after adding duplicates".into(),
                    ));
                }
            }
            None => {
                return Err(IndexError::Unresolvable(
                    "padded profile is no longer an equilibrium".into(),
                ))
            }
        }
    }
    let target = target.ok_or_else(|| IndexError::Unresolvable("empty component".into()))?;
    let dup = component_index(&big, target, seed)?.0;
    Ok(dup == original)
}

/// Every method that resolves for the component, for agreement testing.
pub fn component_index_all_methods(
    census: &Census,
    idx: usize,
    seed: u64,
) -> Vec<(Method, IndexValue)> {
    let mut out = Vec::new();
    if let Some(eq) = singleton_extreme(census, idx) {
        if let Ok(v) = shapley_index(&census.game, &eq) {
            out.push((Method::Shapley, v));
        }
    }
    if let Some(v) = complement_value(census, idx) {
        out.push((Method::Complement, v));
    }
    if let Ok(Some(v)) = try_elimination(census, idx, seed, 0) {
        out.push((Method::Elimination, v));
    }
    if let Ok(v) = perturbation_value(census, idx, seed) {
        out.push((Method::Perturbation, v));
    }
    out
}

/// Sum of all component indices (must be +1 for every game).
pub fn index_sum(census: &Census, seed: u64) -> Result<IndexValue, IndexError> {
    let mut total = 0;
    for i in 0..census.components.len() {
        total += component_index(census, i, seed)?.0;
    }
    Ok(total)
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

    fn entry_subgame() -> BimatrixGame {
        BimatrixGame {
            row_labels: vec!["L".into(), "R".into()],
            col_labels: vec!["l".into(), "r".into()],
            a: vec![vec![int(3), int(0)], vec![int(0), int(1)]],
            b: vec![vec![int(1), int(0)], vec![int(0), int(3)]],
        }
    }

    fn coordination() -> BimatrixGame {
        BimatrixGame {
            row_labels: vec!["T".into(), "B".into()],
            col_labels: vec!["L".into(), "R".into()],
            a: vec![vec![int(4), int(0)], vec![int(0), int(1)]],
            b: vec![vec![int(1), int(0)], vec![int(0), int(4)]],
        }
    }

    #[test]
    fn strict_pure_equilibria_have_index_plus_one() {
        let c = census(&entry_subgame());
        for eq in &c.extremes {
            if eq.row_support.len() == 1 && eq.col_support.len() == 1 {
                assert_eq!(shapley_index(&c.game, eq).unwrap(), 1);
            }
        }
    }

    #[test]
    fn coordination_mixed_equilibrium_has_index_minus_one() {
        let c = census(&coordination());
        let mixed = c
            .extremes
            .iter()
            .find(|e| e.profile.row == vec![rat(4, 5), rat(1, 5)])
            .expect("mixed equilibrium");
        assert_eq!(mixed.profile.col, vec![rat(1, 5), rat(4, 5)]);
        assert_eq!(shapley_index(&c.game, mixed).unwrap(), -1);
    }

    #[test]
    fn entry_subgame_mixed_equilibrium_has_index_minus_one() {
        let c = census(&entry_subgame());
        let mixed = c
            .extremes
            .iter()
            .find(|e| e.profile.row == vec![rat(3, 4), rat(1, 4)])
            .expect("mixed equilibrium");
        assert_eq!(mixed.profile.col, vec![rat(1, 4), rat(3, 4)]);
        assert_eq!(shapley_index(&c.game, mixed).unwrap(), -1);
    }

    #[test]
    fn entry_components_have_indices_one_and_zero() {
        let c = census(&entry_reduced());
        assert_eq!(c.components.len(), 2);
        let mut values = Vec::new();
        for i in 0..2 {
            values.push(component_index(&c, i, 7).unwrap().0);
        }
        values.sort_unstable();
        assert_eq!(values, vec![0, 1]);
        assert_eq!(index_sum(&c, 7).unwrap(), 1);
    }

    #[test]
    fn region_index_whole_game_is_plus_one() {
        let c = census(&entry_subgame());
        let region = AdmissibleRegion::whole(&c.game);
        assert_eq!(region_index(&c, &region, 7).unwrap(), 1);
    }

    #[test]
    fn entry_supporting_polytope_region_has_index_zero() {
        // Region: all rows, columns with 3*y_l <= 2.
        let c = census(&entry_subgame());
        let mut col = InequalityPolytope::simplex(c.game.col_labels.clone());
        col.add(vec![int(3), int(0)], int(2), false);
        let region = AdmissibleRegion { row: InequalityPolytope::simplex(c.game.row_labels.clone()), col };
        assert_eq!(region_index(&c, &region, 7).unwrap(), 0);
    }

    #[test]
    fn region_with_no_equilibria_has_index_zero() {
        let c = census(&entry_subgame());
        // Columns with y_l >= 1/2 but <= 2/3: excludes all three equilibria
        // ((L,l) has y_l = 1, (R,r) has 0, mixed has 1/4)... y_l in
        // [1/2, 2/3] in fact contains none of them.
        let mut col = InequalityPolytope::simplex(c.game.col_labels.clone());
        col.add(vec![int(3), int(0)], int(2), false);
        col.add(vec![int(-1), int(0)], rat(-1, 2), false);
        let region = AdmissibleRegion { row: InequalityPolytope::simplex(c.game.row_labels.clone()), col };
        assert_eq!(region_index(&c, &region, 7).unwrap(), 0);
    }

    #[test]
    fn duplication_invariance_on_entry() {
        let c = census(&entry_reduced());
        // The Out-component is the one with two extremes.
        let out_idx = (0..2)
            .find(|&i| c.components[i].extreme_ids().len() == 2)
            .unwrap();
        let ok = check_duplication_invariance(
            &c,
            out_idx,
            Player::One,
            &[vec![rat(3, 4), rat(1, 4), int(0)]],
            7,
        )
        .unwrap();
        assert!(ok);
        let strict_idx = 1 - out_idx;
        let ok = check_duplication_invariance(
            &c,
            strict_idx,
            Player::Two,
            &[vec![rat(1, 2), rat(1, 2)]],
            7,
        )
        .unwrap();
        assert!(ok);
    }

    #[test]
    fn perturbation_method_agrees_on_entry_out_component() {
        let c = census(&entry_reduced());
        let out_idx = (0..2)
            .find(|&i| c.components[i].extreme_ids().len() == 2)
            .unwrap();
        let methods = component_index_all_methods(&c, out_idx, 11);
        assert!(methods.len() >= 2, "{methods:?}");
        let first = methods[0].1;
        assert!(methods.iter().all(|(_, v)| *v == first), "{methods:?}");
        assert_eq!(first, 0);
    }
}
