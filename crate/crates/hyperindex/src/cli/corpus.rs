//! The bundled game collection: the nine static games ship as data files,
//! the twice-repeated games and the embedding demo are generated with their
//! parameters.

use super::parser::parse_game;
use crate::exactcore::{int, rat, Rational};
use crate::gametree::{GameTree, Infoset, Node, NodeId, Player};
use num_traits::Zero;

macro_rules! corpus_game {
    ($fn_name:ident, $file:literal) => {
        pub fn $fn_name() -> GameTree {
            parse_game(include_str!(concat!("../../corpus/", $file)))
                .expect(concat!("bundled game parses: ", $file))
        }
    };
}

corpus_game!(entry, "entry.game");
corpus_game!(entrymod, "entrymod.game");
corpus_game!(game_fig3, "game-fig3.game");
corpus_game!(beer_quiche, "beer_quiche.game");
corpus_game!(chokreps_fig_iv, "chokreps_figIV.game");
corpus_game!(three_types, "three_types.game");
corpus_game!(spence, "spence.game");
corpus_game!(stage_fig6, "stage_fig6.game");
corpus_game!(stage_fig8, "stage_fig8.game");

/// Raw payoff tables of the two stage games, used by the repeated builders.
fn stage_fig6_tables() -> (Vec<&'static str>, Vec<Vec<[Rational; 2]>>) {
    let labels = vec!["A", "B", "C"];
    let pay = vec![
        vec![[int(4), int(4)], [int(0), int(0)], [int(0), int(0)]],
        vec![[int(0), int(0)], [int(3), int(1)], [int(0), int(0)]],
        vec![[int(2), int(2)], [int(0), int(0)], [int(1), int(3)]],
    ];
    (labels, pay)
}

fn stage_fig8_tables() -> (Vec<&'static str>, Vec<Vec<[Rational; 2]>>) {
    let labels = vec!["T", "B"];
    let pay = vec![
        vec![[int(4), int(1)], [int(0), int(0)]],
        vec![[int(0), int(0)], [int(1), int(4)]],
    ];
    (labels, pay)
}

/// Builds the two-fold repetition of a simultaneous stage game: both
/// players observe the realized first-stage profile, payoffs add across
/// stages. `first_stage_delta` perturbs the first-stage payoff vector of
/// one profile (row, col, delta).
fn twice_repeated(
    labels: &[&str],
    pay: &[Vec<[Rational; 2]>],
    first_stage_delta: Option<(usize, usize, [Rational; 2])>,
) -> GameTree {
    let n = labels.len();
    let mut nodes: Vec<Node> = Vec::new();
    let mut infosets: Vec<Infoset> = Vec::new();
    let actions: Vec<String> = labels.iter().map(|s| s.to_string()).collect();

    let add_infoset = |infosets: &mut Vec<Infoset>, player: Player, name: String| -> usize {
        infosets.push(Infoset { player, name, actions: actions.clone(), nodes: Vec::new() });
        infosets.len() - 1
    };

    // Creation order fixes infoset ids: player 1's first move, player 2's
    // first move, then per first-stage profile (row-major) the second-stage
    // pair.
    let p1_first = add_infoset(&mut infosets, Player::One, "first".into());
    let p2_first = add_infoset(&mut infosets, Player::Two, "first".into());
    let mut second: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            let tag = format!("{}{}", labels[i], labels[j]);
            let u = add_infoset(&mut infosets, Player::One, format!("after_{tag}"));
            let v = add_infoset(&mut infosets, Player::Two, format!("after_{tag}"));
            row.push((u, v));
        }
        second.push(row);
    }

    let mut p2_first_children: Vec<NodeId> = Vec::new();
    let mut p1_children: Vec<NodeId> = Vec::new();
    for i in 0..n {
        let mut subgame_roots: Vec<NodeId> = Vec::new();
        for j in 0..n {
            let mut stage1 = pay[i][j].clone();
            if let Some((di, dj, delta)) = &first_stage_delta {
                if *di == i && *dj == j {
                    stage1[0] += &delta[0];
                    stage1[1] += &delta[1];
                }
            }
            let (u, v) = second[i][j];
            let mut p1_second_children = Vec::new();
            for k in 0..n {
                let mut p2_second_children = Vec::new();
                for l in 0..n {
                    nodes.push(Node::Terminal {
                        payoffs: [
                            &stage1[0] + &pay[k][l][0],
                            &stage1[1] + &pay[k][l][1],
                        ],
                    });
                    p2_second_children.push(nodes.len() - 1);
                }
                nodes.push(Node::Decision { infoset: v, children: p2_second_children });
                p1_second_children.push(nodes.len() - 1);
            }
            nodes.push(Node::Decision { infoset: u, children: p1_second_children });
            subgame_roots.push(nodes.len() - 1);
        }
        nodes.push(Node::Decision { infoset: p2_first, children: subgame_roots });
        p2_first_children.push(nodes.len() - 1);
    }
    p1_children.extend(p2_first_children);
    nodes.push(Node::Decision { infoset: p1_first, children: p1_children });
    let root = nodes.len() - 1;
    GameTree::new(nodes, root, infosets)
}

/// Twice-repeated 3x3 stage game; `epsilon > 0` lowers player 2's
/// first-stage payoff under (C,C) to 3 - epsilon, isolating the outcome of
/// the (C,A)-then-(A,A) component.
pub fn repeated_fig6(epsilon: &Rational) -> GameTree {
    let (labels, pay) = stage_fig6_tables();
    let delta = if epsilon.is_zero() {
        None
    } else {
        Some((2, 2, [int(0), -epsilon.clone()]))
    };
    twice_repeated(&labels, &pay, delta)
}

/// Twice-repeated coordination game.
pub fn repeated_fig8() -> GameTree {
    let (labels, pay) = stage_fig8_tables();
    twice_repeated(&labels, &pay, None)
}

/// The hand-built perturbed version of the entry subgame (the payoff at
/// (L, r) raised from 0 to 2): it has a unique equilibrium, which lies
/// outside the supporting polytope of the entry game's Out-component.
pub fn perturbed_entry_subgame() -> crate::normalform::BimatrixGame {
    crate::normalform::BimatrixGame {
        row_labels: vec!["L".into(), "R".into()],
        col_labels: vec!["\u{2113}".into(), "r".into()],
        a: vec![vec![int(3), int(2)], vec![int(0), int(1)]],
        b: vec![vec![int(1), int(0)], vec![int(0), int(3)]],
    }
}

/// Names of the bundled corpus entries, with a short description.
pub fn listing() -> Vec<(&'static str, &'static str)> {
    vec![
        ("entry", "entry game (two components: strict and Out)"),
        ("entrymod", "entry game plus the redundant strategy X"),
        ("game-fig3", "genericity-failure example (strict-payoff check)"),
        ("beer_quiche", "Beer-Quiche signaling game"),
        ("chokreps_figIV", "two-type signaling game"),
        ("three_types", "three-type signaling game"),
        ("spence", "finite Spence job-market game"),
        ("stage_fig6", "3x3 stage game with seven equilibria"),
        ("repeated_fig6", "twice-repeated stage_fig6 (parameter: epsilon)"),
        ("stage_fig8", "2x2 coordination stage game"),
        ("repeated_fig8", "twice-repeated stage_fig8"),
        ("entry-embedding", "Nature embedding of the perturbed entry subgame"),
    ]
}

/// Loads a corpus tree by name (parameterized entries use defaults).
pub fn load(name: &str) -> Option<GameTree> {
    match name {
        "entry" => Some(entry()),
        "entrymod" => Some(entrymod()),
        "game-fig3" => Some(game_fig3()),
        "beer_quiche" => Some(beer_quiche()),
        "chokreps_figIV" => Some(chokreps_fig_iv()),
        "three_types" => Some(three_types()),
        "spence" => Some(spence()),
        "stage_fig6" => Some(stage_fig6()),
        "repeated_fig6" => Some(repeated_fig6(&rat(1, 100))),
        "stage_fig8" => Some(stage_fig8()),
        "repeated_fig8" => Some(repeated_fig8()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gametree::{validate_tree, StrategySpace};

    #[test]
    fn all_static_corpus_games_validate() {
        for (name, _) in listing() {
            if name == "entry-embedding" {
                continue;
            }
            let tree = load(name).unwrap();
            let diags = validate_tree(&tree);
            assert!(diags.is_empty(), "{name}: {diags:?}");
        }
    }

    #[test]
    fn repeated_fig6_shape() {
        let tree = repeated_fig6(&rat(1, 100));
        assert_eq!(tree.terminals().len(), 81);
        assert_eq!(tree.infosets.len(), 20);
        let p1 = StrategySpace::reduced(&tree, Player::One);
        let p2 = StrategySpace::reduced(&tree, Player::Two);
        assert_eq!(p1.len(), 81);
        assert_eq!(p2.len(), 81);
    }

    #[test]
    fn repeated_fig8_reduced_is_8x8() {
        let tree = repeated_fig8();
        let p1 = StrategySpace::reduced(&tree, Player::One);
        let p2 = StrategySpace::reduced(&tree, Player::Two);
        assert_eq!(p1.len(), 8);
        assert_eq!(p2.len(), 8);
        let full = StrategySpace::full(&tree, Player::One);
        assert_eq!(full.len(), 32);
    }
}
