//! Bimatrix games: payoffs, strategy equivalence, the reduced normal form,
//! duplicate strategies, payoff perturbations, and reply analysis.

use crate::equilibria::NashComponent;
use crate::exactcore::{dot, in_convex_hull, HullResult, Rational};
use crate::gametree::Player;
use num_traits::{One, Zero};
use thiserror::Error;

/// Two-player normal form with exact rational payoff matrices. `a` pays the
/// row player (player 1), `b` the column player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimatrixGame {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Vec<Rational>>,
}

/// A mixed strategy pair over the game's strategy labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedProfile {
    pub row: Vec<Rational>,
    pub col: Vec<Rational>,
}

/// For each removed or duplicate strategy, the retained mixture it is
/// equivalent to (label, weight pairs).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EquivalenceMap {
    pub row: Vec<(String, Vec<(String, Rational)>)>,
    pub col: Vec<(String, Vec<(String, Rational)>)>,
}

impl EquivalenceMap {
    pub fn of(&self, player: Player) -> &[(String, Vec<(String, Rational)>)] {
        match player {
            Player::One => &self.row,
            Player::Two => &self.col,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NfError {
    #[error("dimension mismatch")]
    Dimension,
    #[error("profile is not an equilibrium set member: {0}")]
    NotEquilibrium(String),
}

impl BimatrixGame {
    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a.first().map_or(0, Vec::len)
    }

    pub fn labels(&self, player: Player) -> &[String] {
        match player {
            Player::One => &self.row_labels,
            Player::Two => &self.col_labels,
        }
    }

    pub fn strategy_count(&self, player: Player) -> usize {
        match player {
            Player::One => self.rows(),
            Player::Two => self.cols(),
        }
    }

    /// Payoff matrix of `player` oriented rows x cols.
    pub fn matrix(&self, player: Player) -> &Vec<Vec<Rational>> {
        match player {
            Player::One => &self.a,
            Player::Two => &self.b,
        }
    }

    pub fn check(&self) -> Result<(), NfError> {
        let (m, n) = (self.rows(), self.cols());
        if m == 0 || n == 0 {
            return Err(NfError::Dimension);
        }
        let ok = self.a.iter().all(|r| r.len() == n)
            && self.b.len() == m
            && self.b.iter().all(|r| r.len() == n)
            && self.row_labels.len() == m
            && self.col_labels.len() == n;
        if ok { Ok(()) } else { Err(NfError::Dimension) }
    }

    /// Expected payoff of `player`'s pure strategy `k` against an opposing
    /// mixed strategy.
    pub fn pure_vs_mixed(&self, player: Player, k: usize, opp: &[Rational]) -> Rational {
        match player {
            Player::One => dot(&self.a[k], opp),
            Player::Two => (0..self.rows()).map(|i| &opp[i] * &self.b[i][k]).sum(),
        }
    }

    /// The payoff-pair row vector of one pure strategy: both players'
    /// payoffs against every opposing pure strategy, concatenated. Two
    /// strategies are equivalent exactly when these vectors agree.
    pub fn payoff_row_vector(&self, player: Player, k: usize) -> Vec<Rational> {
        match player {
            Player::One => {
                let mut v = self.a[k].clone();
                v.extend(self.b[k].iter().cloned());
                v
            }
            Player::Two => {
                let mut v: Vec<Rational> = (0..self.rows()).map(|i| self.a[i][k].clone()).collect();
                v.extend((0..self.rows()).map(|i| self.b[i][k].clone()));
                v
            }
        }
    }

    fn mixed_row_vector(&self, player: Player, mix: &[Rational]) -> Vec<Rational> {
        let n = self.strategy_count(player);
        assert_eq!(mix.len(), n);
        let dim = 2 * self.strategy_count(player.opponent());
        let mut v = vec![Rational::zero(); dim];
        for (k, w) in mix.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (i, x) in self.payoff_row_vector(player, k).iter().enumerate() {
                v[i] += w * x;
            }
        }
        v
    }
}

/// Exact bilinear payoff pair of a mixed profile.
pub fn payoff(game: &BimatrixGame, profile: &MixedProfile) -> Result<[Rational; 2], NfError> {
    if profile.row.len() != game.rows() || profile.col.len() != game.cols() {
        return Err(NfError::Dimension);
    }
    let mut pay = [Rational::zero(), Rational::zero()];
    for (i, x) in profile.row.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in profile.col.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            pay[0] += x * y * &game.a[i][j];
            pay[1] += x * y * &game.b[i][j];
        }
    }
    Ok(pay)
}

/// True iff both players' payoffs agree against every opposing pure
/// strategy (exact equality).
pub fn is_equivalent(
    game: &BimatrixGame,
    player: Player,
    sigma: &[Rational],
    sigma_prime: &[Rational],
) -> bool {
    game.mixed_row_vector(player, sigma) == game.mixed_row_vector(player, sigma_prime)
}

/// Exact argmax set of pure replies for `player` against `opponent`.
pub fn best_replies(game: &BimatrixGame, player: Player, opponent: &[Rational]) -> Vec<usize> {
    let n = game.strategy_count(player);
    let values: Vec<Rational> = (0..n)
        .map(|k| game.pure_vs_mixed(player, k, opponent))
        .collect();
    let best = values.iter().max().expect("nonempty strategy set").clone();
    (0..n).filter(|&k| values[k] == best).collect()
}

/// The reduced normal form: first merges exact-duplicate strategies, then
/// repeatedly removes any strategy whose payoff-pair row vector lies in the
/// convex hull of the remaining ones. The fixpoint is unique up to
/// labeling; the scan order makes it deterministic.
pub fn reduce(game: &BimatrixGame) -> (BimatrixGame, EquivalenceMap) {
    let mut current = game.clone();
    let mut map = EquivalenceMap::default();
    for player in Player::both() {
        merge_exact_duplicates(&mut current, player, &mut map);
    }
    loop {
        let mut removed_any = false;
        for player in Player::both() {
            if let Some((victim, weights)) = find_hull_member(&current, player) {
                record_removal(&current, player, victim, &weights, &mut map);
                remove_strategy(&mut current, player, victim);
                removed_any = true;
            }
        }
        if !removed_any {
            break;
        }
    }
    // Rewrite map targets that were themselves removed later, so every
    // image mixes only retained strategies.
    resolve_map(&mut map, &current);
    (current, map)
}

fn merge_exact_duplicates(game: &mut BimatrixGame, player: Player, map: &mut EquivalenceMap) {
    loop {
        let n = game.strategy_count(player);
        let mut victim = None;
        'outer: for j in 1..n {
            let vj = game.payoff_row_vector(player, j);
            for i in 0..j {
                if game.payoff_row_vector(player, i) == vj {
                    victim = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((keep, drop)) = victim else { break };
        let keep_label = merged_label(
            &game.labels(player)[keep],
            &game.labels(player)[drop],
        );
        let drop_label = game.labels(player)[drop].clone();
        let old_keep_label = game.labels(player)[keep].clone();
        match player {
            Player::One => game.row_labels[keep] = keep_label.clone(),
            Player::Two => game.col_labels[keep] = keep_label.clone(),
        }
        let entries = match player {
            Player::One => &mut map.row,
            Player::Two => &mut map.col,
        };
        if old_keep_label != keep_label {
            for (_, image) in entries.iter_mut() {
                for (target, _) in image.iter_mut() {
                    if *target == old_keep_label {
                        *target = keep_label.clone();
                    }
                }
            }
            entries.push((old_keep_label, vec![(keep_label.clone(), Rational::one())]));
        }
        entries.push((drop_label, vec![(keep_label, Rational::one())]));
        remove_strategy(game, player, drop);
    }
}

/// When duplicates merge, keep the longest common `-`-separated action
/// prefix (`Out-L` + `Out-R` becomes `Out`); fall back to the first label.
fn merged_label(a: &str, b: &str) -> String {
    let common: Vec<&str> = a
        .split('-')
        .zip(b.split('-'))
        .take_while(|(x, y)| x == y)
        .map(|(x, _)| x)
        .collect();
    if common.is_empty() {
        a.to_string()
    } else {
        common.join("-")
    }
}

fn find_hull_member(game: &BimatrixGame, player: Player) -> Option<(usize, Vec<Rational>)> {
    let n = game.strategy_count(player);
    if n <= 1 {
        return None;
    }
    for k in 0..n {
        let point = game.payoff_row_vector(player, k);
        let generators: Vec<Vec<Rational>> = (0..n)
            .filter(|&i| i != k)
            .map(|i| game.payoff_row_vector(player, i))
            .collect();
        if let Ok(HullResult::Inside(w)) = in_convex_hull(&point, &generators) {
            let mut weights = Vec::with_capacity(n);
            let mut it = w.into_iter();
            for i in 0..n {
                if i == k {
                    weights.push(Rational::zero());
                } else {
                    weights.push(it.next().expect("weight per generator"));
                }
            }
            return Some((k, weights));
        }
    }
    None
}

fn record_removal(
    game: &BimatrixGame,
    player: Player,
    victim: usize,
    weights: &[Rational],
    map: &mut EquivalenceMap,
) {
    let labels = game.labels(player);
    let image: Vec<(String, Rational)> = weights
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(i, w)| (labels[i].clone(), w.clone()))
        .collect();
    let entry = (labels[victim].clone(), image);
    match player {
        Player::One => map.row.push(entry),
        Player::Two => map.col.push(entry),
    }
}

fn remove_strategy(game: &mut BimatrixGame, player: Player, k: usize) {
    match player {
        Player::One => {
            game.a.remove(k);
            game.b.remove(k);
            game.row_labels.remove(k);
        }
        Player::Two => {
            for row in game.a.iter_mut() {
                row.remove(k);
            }
            for row in game.b.iter_mut() {
                row.remove(k);
            }
            game.col_labels.remove(k);
        }
    }
}

/// Substitute away map targets that are not retained labels, so every image
/// is a mixture over the reduced game's strategies.
fn resolve_map(map: &mut EquivalenceMap, reduced: &BimatrixGame) {
    for (entries, retained) in [
        (&mut map.row, &reduced.row_labels),
        (&mut map.col, &reduced.col_labels),
    ] {
        loop {
            let lookup: Vec<(String, Vec<(String, Rational)>)> = entries.clone();
            let mut changed = false;
            for (_, image) in entries.iter_mut() {
                if image.iter().all(|(t, _)| retained.contains(t)) {
                    continue;
                }
                let mut next: Vec<(String, Rational)> = Vec::new();
                for (target, w) in image.iter() {
                    if retained.contains(target) {
                        push_weight(&mut next, target.clone(), w.clone());
                    } else if let Some((_, sub)) = lookup.iter().find(|(l, _)| l == target) {
                        for (t2, w2) in sub {
                            push_weight(&mut next, t2.clone(), w * w2);
                        }
                        changed = true;
                    } else {
                        push_weight(&mut next, target.clone(), w.clone());
                    }
                }
                *image = next;
            }
            if !changed {
                break;
            }
        }
    }
}

fn push_weight(image: &mut Vec<(String, Rational)>, label: String, w: Rational) {
    match image.iter_mut().find(|(l, _)| *l == label) {
        Some((_, acc)) => *acc += w,
        None => image.push((label, w)),
    }
}

/// Adds one duplicate pure strategy per mixture; the new strategy's payoff
/// rows are the mixture's expected rows. Labels get a `#dup<k>` suffix.
pub fn add_duplicates(
    game: &BimatrixGame,
    player: Player,
    mixtures: &[Vec<Rational>],
) -> Result<(BimatrixGame, EquivalenceMap), NfError> {
    let mut out = game.clone();
    let mut map = EquivalenceMap::default();
    for (k, mix) in mixtures.iter().enumerate() {
        if mix.len() != game.strategy_count(player) {
            return Err(NfError::Dimension);
        }
        let label = format!("{}#dup{}", mixture_label(game, player, mix), k + 1);
        let image: Vec<(String, Rational)> = mix
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(i, w)| (game.labels(player)[i].clone(), w.clone()))
            .collect();
        match player {
            Player::One => {
                let arow: Vec<Rational> = (0..game.cols())
                    .map(|j| (0..game.rows()).map(|i| &mix[i] * &game.a[i][j]).sum())
                    .collect();
                let brow: Vec<Rational> = (0..game.cols())
                    .map(|j| (0..game.rows()).map(|i| &mix[i] * &game.b[i][j]).sum())
                    .collect();
                out.a.push(arow);
                out.b.push(brow);
                out.row_labels.push(label.clone());
                map.row.push((label, image));
            }
            Player::Two => {
                for i in 0..game.rows() {
                    let aval: Rational = (0..game.cols()).map(|j| &mix[j] * &game.a[i][j]).sum();
                    let bval: Rational = (0..game.cols()).map(|j| &mix[j] * &game.b[i][j]).sum();
                    out.a[i].push(aval);
                    out.b[i].push(bval);
                }
                out.col_labels.push(label.clone());
                map.col.push((label, image));
            }
        }
    }
    Ok((out, map))
}

fn mixture_label(game: &BimatrixGame, player: Player, mix: &[Rational]) -> String {
    let parts: Vec<String> = mix
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(i, w)| {
            if w.is_one() {
                game.labels(player)[i].clone()
            } else {
                format!("{}*{}", crate::exactcore::format_rational(w), game.labels(player)[i])
            }
        })
        .collect();
    parts.join("+")
}

/// Entrywise exact payoff perturbation.
pub fn perturb(
    game: &BimatrixGame,
    delta_a: &[Vec<Rational>],
    delta_b: &[Vec<Rational>],
) -> Result<BimatrixGame, NfError> {
    let (m, n) = (game.rows(), game.cols());
    let fits = |d: &[Vec<Rational>]| d.len() == m && d.iter().all(|r| r.len() == n);
    if !fits(delta_a) || !fits(delta_b) {
        return Err(NfError::Dimension);
    }
    let mut out = game.clone();
    for i in 0..m {
        for j in 0..n {
            out.a[i][j] += &delta_a[i][j];
            out.b[i][j] += &delta_b[i][j];
        }
    }
    Ok(out)
}

/// Removes the pure strategies that are strictly inferior replies to every
/// profile in the component. By bilinearity it suffices to test strictness
/// at the extreme points of each maximal Nash subset: on a subset the
/// best-reply value is linear in the opponent's strategy (any fixed
/// generator of the own side attains it), so a linear gap positive at the
/// vertices is positive on the hull.
pub fn eliminate_strictly_inferior(
    game: &BimatrixGame,
    component: &NashComponent,
) -> Result<(BimatrixGame, [Vec<String>; 2]), NfError> {
    for subset in &component.subsets {
        for x in &subset.row_generators {
            for y in &subset.col_generators {
                let profile = MixedProfile { row: x.clone(), col: y.clone() };
                if !crate::equilibria::is_equilibrium(game, &profile) {
                    return Err(NfError::NotEquilibrium(format!(
                        "subset generator pair is not an equilibrium: {profile:?}"
                    )));
                }
            }
        }
    }
    let mut removed = [Vec::new(), Vec::new()];
    let mut keep_rows = Vec::new();
    let mut keep_cols = Vec::new();
    for player in Player::both() {
        let n = game.strategy_count(player);
        for k in 0..n {
            let mut strictly_inferior = true;
            'subsets: for subset in &component.subsets {
                let (own, opp) = match player {
                    Player::One => (&subset.row_generators, &subset.col_generators),
                    Player::Two => (&subset.col_generators, &subset.row_generators),
                };
                // Any own generator is a best reply throughout the subset.
                let own_ref = &own[0];
                for o in opp {
                    let best: Rational = match player {
                        Player::One => {
                            (0..game.rows()).map(|i| &own_ref[i] * dot(&game.a[i], o)).sum()
                        }
                        Player::Two => (0..game.cols())
                            .map(|j| {
                                &own_ref[j]
                                    * (0..game.rows())
                                        .map(|i| &o[i] * &game.b[i][j])
                                        .sum::<Rational>()
                            })
                            .sum(),
                    };
                    let mine = game.pure_vs_mixed(player, k, o);
                    if mine >= best {
                        strictly_inferior = false;
                        break 'subsets;
                    }
                }
            }
            if strictly_inferior {
                removed[player.index()].push(game.labels(player)[k].clone());
            } else {
                match player {
                    Player::One => keep_rows.push(k),
                    Player::Two => keep_cols.push(k),
                }
            }
        }
    }
    let select = |m: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        keep_rows
            .iter()
            .map(|&i| keep_cols.iter().map(|&j| m[i][j].clone()).collect())
            .collect()
    };
    let out = BimatrixGame {
        row_labels: keep_rows.iter().map(|&i| game.row_labels[i].clone()).collect(),
        col_labels: keep_cols.iter().map(|&j| game.col_labels[j].clone()).collect(),
        a: select(&game.a),
        b: select(&game.b),
    };
    Ok((out, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, rat};

    pub fn entry_reduced() -> BimatrixGame {
        BimatrixGame {
            row_labels: vec!["Out".into(), "In-L".into(), "In-R".into()],
            col_labels: vec!["l".into(), "r".into()],
            a: vec![
                vec![int(2), int(2)],
                vec![int(3), int(0)],
                vec![int(0), int(1)],
            ],
            b: vec![
                vec![int(2), int(2)],
                vec![int(1), int(0)],
                vec![int(0), int(3)],
            ],
        }
    }

    pub fn entry_full() -> BimatrixGame {
        BimatrixGame {
            row_labels: vec!["Out-L".into(), "Out-R".into(), "In-L".into(), "In-R".into()],
            col_labels: vec!["l".into(), "r".into()],
            a: vec![
                vec![int(2), int(2)],
                vec![int(2), int(2)],
                vec![int(3), int(0)],
                vec![int(0), int(1)],
            ],
            b: vec![
                vec![int(2), int(2)],
                vec![int(2), int(2)],
                vec![int(1), int(0)],
                vec![int(0), int(3)],
            ],
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

    #[test]
    fn payoff_examples() {
        let g = entry_reduced();
        // (Out, any y) -> (2,2)
        let p = MixedProfile { row: vec![int(1), int(0), int(0)], col: vec![rat(1, 3), rat(2, 3)] };
        assert_eq!(payoff(&g, &p).unwrap(), [int(2), int(2)]);
        // Subgame (3/4 L + 1/4 R, 1/4 l + 3/4 r) -> (3/4, 3/4)
        let sub = entry_subgame();
        let p = MixedProfile { row: vec![rat(3, 4), rat(1, 4)], col: vec![rat(1, 4), rat(3, 4)] };
        assert_eq!(payoff(&sub, &p).unwrap(), [rat(3, 4), rat(3, 4)]);
    }

    #[test]
    fn equivalence_of_out_rows() {
        let g = entry_full();
        let out_l = vec![int(1), int(0), int(0), int(0)];
        let out_r = vec![int(0), int(1), int(0), int(0)];
        assert!(is_equivalent(&g, Player::One, &out_l, &out_r));
        let in_l = vec![int(0), int(0), int(1), int(0)];
        assert!(!is_equivalent(&g, Player::One, &out_l, &in_l));
        assert!(is_equivalent(&g, Player::One, &in_l, &in_l));
    }

    #[test]
    fn reduce_entry_full_to_3x2() {
        let (reduced, map) = reduce(&entry_full());
        assert_eq!(reduced.rows(), 3);
        assert_eq!(reduced.cols(), 2);
        assert_eq!(reduced.row_labels, vec!["Out", "In-L", "In-R"]);
        assert_eq!(map.row.len(), 2); // Out-L renamed, Out-R merged
        // Every removed strategy's image reproduces its payoff rows.
        for (gone, image) in &map.row {
            let full = entry_full();
            let k = full.row_labels.iter().position(|l| l == gone).unwrap();
            let mut mix = vec![Rational::zero(); reduced.rows()];
            for (target, w) in image {
                let t = reduced.row_labels.iter().position(|l| l == target).unwrap();
                mix[t] += w;
            }
            let expect = full.payoff_row_vector(Player::One, k);
            let got = reduced.mixed_row_vector(Player::One, &mix);
            assert_eq!(expect, got);
        }
    }

    #[test]
    fn reduce_is_idempotent() {
        let (once, _) = reduce(&entry_full());
        let (twice, _) = reduce(&once);
        assert_eq!(once.rows(), twice.rows());
        assert_eq!(once.cols(), twice.cols());
    }

    #[test]
    fn add_duplicate_entry_x_strategy() {
        // Entry NF + 3/4 Out + 1/4 In-L reproduces the X row of the
        // equivalent presentation.
        let g = entry_reduced();
        let (bigger, map) =
            add_duplicates(&g, Player::One, &[vec![rat(3, 4), rat(1, 4), int(0)]]).unwrap();
        assert_eq!(bigger.rows(), 4);
        assert_eq!(bigger.a[3], vec![rat(9, 4), rat(3, 2)]);
        assert_eq!(bigger.b[3], vec![rat(7, 4), rat(3, 2)]);
        assert_eq!(map.row.len(), 1);
        // reduce(bigger) = reduce(entry) up to labels.
        let (re, _) = reduce(&bigger);
        assert_eq!(re.rows(), 3);
        let x = vec![int(0), int(0), int(0), int(1)];
        let img = vec![rat(3, 4), rat(1, 4), int(0), int(0)];
        assert!(is_equivalent(&bigger, Player::One, &x, &img));
    }

    #[test]
    fn perturb_entry_subgame_to_example_table() {
        let sub = entry_subgame();
        let zero = vec![vec![int(0), int(0)], vec![int(0), int(0)]];
        let same = perturb(&sub, &zero, &zero).unwrap();
        assert_eq!(same, sub);
        // +2 to player 1 at (L, r) gives row L = (3,1),(2,0).
        let da = vec![vec![int(0), int(2)], vec![int(0), int(0)]];
        let p = perturb(&sub, &da, &zero).unwrap();
        assert_eq!(p.a[0], vec![int(3), int(2)]);
        assert_eq!(p.b[0], vec![int(1), int(0)]);
        assert_eq!(p.a[1], vec![int(0), int(1)]);
    }

    #[test]
    fn best_replies_entry() {
        let g = entry_reduced();
        // vs y = (2/3, 1/3): Out and In-L tie at 2, In-R pays 1/3.
        let br = best_replies(&g, Player::One, &[rat(2, 3), rat(1, 3)]);
        assert_eq!(br, vec![0, 1]);
        // vs a strictly dominant column: singleton.
        let br = best_replies(&g, Player::One, &[int(0), int(1)]);
        assert_eq!(br, vec![0]);
    }
}
