//! Two-player finite extensive-form games with perfect recall and Nature.
//!
//! Trees are immutable arenas of nodes. Information sets group decision
//! nodes of one player and carry the shared action list; chance nodes hold
//! completely mixed rational distributions; terminals hold one rational
//! payoff per player.

use crate::exactcore::Rational;
use crate::normalform::BimatrixGame;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

pub type NodeId = usize;
pub type InfosetId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }

    pub fn opponent(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }

    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn both() -> [Player; 2] {
        [Player::One, Player::Two]
    }
}

#[derive(Debug, Clone)]
pub enum Node {
    /// Completely mixed move of Nature; edges carry exact probabilities.
    Chance { edges: Vec<(Rational, NodeId)> },
    /// A decision node; children align with the infoset's action list.
    Decision { infoset: InfosetId, children: Vec<NodeId> },
    Terminal { payoffs: [Rational; 2] },
}

#[derive(Debug, Clone)]
pub struct Infoset {
    pub player: Player,
    pub name: String,
    pub actions: Vec<String>,
    pub nodes: Vec<NodeId>,
}

#[derive(Debug, Clone)]
pub struct GameTree {
    pub nodes: Vec<Node>,
    pub root: NodeId,
    pub infosets: Vec<Infoset>,
    terminals: Vec<NodeId>,
}

/// Probability distribution over the tree's terminals, aligned with
/// [`GameTree::terminals`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub probs: Vec<Rational>,
}

impl Outcome {
    pub fn support(&self) -> Vec<usize> {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.probs.iter().all(|p| !p.is_zero())
    }
}

/// Pure strategy as a (possibly partial) assignment infoset -> action index.
/// Full strategies assign every infoset of the player; reduced strategies
/// leave own-unreachable infosets unassigned.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureStrategy {
    pub player: Player,
    pub choices: BTreeMap<InfosetId, usize>,
}

impl PureStrategy {
    pub fn action(&self, infoset: InfosetId) -> Option<usize> {
        self.choices.get(&infoset).copied()
    }
}

/// Behavior strategy: one local distribution per assigned infoset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehaviorStrategy {
    pub player: Player,
    pub local: BTreeMap<InfosetId, Vec<Rational>>,
}

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("strategy does not cover infoset `{0}`")]
    MissingInfoset(String),
    #[error("strategy/player mismatch")]
    PlayerMismatch,
    #[error("{0}")]
    Invalid(String),
}

impl GameTree {
    pub fn new(nodes: Vec<Node>, root: NodeId, infosets: Vec<Infoset>) -> GameTree {
        let mut tree = GameTree { nodes, root, infosets, terminals: Vec::new() };
        tree.terminals = tree.collect_terminals();
        for inf in &mut tree.infosets {
            inf.nodes.clear();
        }
        for (id, node) in tree.nodes.iter().enumerate() {
            if let Node::Decision { infoset, .. } = node {
                tree.infosets[*infoset].nodes.push(id);
            }
        }
        tree
    }

    fn collect_terminals(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            match &self.nodes[id] {
                Node::Terminal { .. } => out.push(id),
                Node::Chance { edges } => {
                    for (_, child) in edges.iter().rev() {
                        stack.push(*child);
                    }
                }
                Node::Decision { children, .. } => {
                    for child in children.iter().rev() {
                        stack.push(*child);
                    }
                }
            }
        }
        out
    }

    /// Terminal nodes in depth-first order; [`Outcome`] vectors align with it.
    pub fn terminals(&self) -> &[NodeId] {
        &self.terminals
    }

    pub fn terminal_payoffs(&self, node: NodeId) -> &[Rational; 2] {
        match &self.nodes[node] {
            Node::Terminal { payoffs } => payoffs,
            _ => panic!("not a terminal"),
        }
    }

    pub fn terminal_index(&self, node: NodeId) -> usize {
        self.terminals.iter().position(|&t| t == node).expect("terminal id")
    }

    pub fn infosets_of(&self, player: Player) -> Vec<InfosetId> {
        (0..self.infosets.len())
            .filter(|&i| self.infosets[i].player == player)
            .collect()
    }

    /// The player's own history to `node`: (infoset, action) pairs of that
    /// player along the path from the root, in order.
    pub fn own_history(&self, player: Player, node: NodeId) -> Vec<(InfosetId, usize)> {
        let mut path = Vec::new();
        self.find_path(self.root, node, &mut path);
        let mut history = Vec::new();
        for (id, edge) in path {
            if let Node::Decision { infoset, .. } = &self.nodes[id] {
                if self.infosets[*infoset].player == player {
                    history.push((*infoset, edge));
                }
            }
        }
        history
    }

    fn find_path(&self, from: NodeId, target: NodeId, path: &mut Vec<(NodeId, usize)>) -> bool {
        if from == target {
            return true;
        }
        let children: Vec<NodeId> = match &self.nodes[from] {
            Node::Terminal { .. } => return false,
            Node::Chance { edges } => edges.iter().map(|(_, c)| *c).collect(),
            Node::Decision { children, .. } => children.clone(),
        };
        for (edge, child) in children.into_iter().enumerate() {
            path.push((from, edge));
            if self.find_path(child, target, path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Checks every structural invariant; an empty list means the tree is valid.
pub fn validate_tree(tree: &GameTree) -> Vec<String> {
    let mut diags = Vec::new();
    for (id, node) in tree.nodes.iter().enumerate() {
        match node {
            Node::Chance { edges } => {
                let total: Rational = edges.iter().map(|(p, _)| p.clone()).sum();
                if total != Rational::one() {
                    diags.push(format!(
                        "chance distribution at node {id} sums to {}",
                        crate::exactcore::format_rational(&total)
                    ));
                }
                for (p, _) in edges {
                    if p <= &Rational::zero() {
                        diags.push(format!(
                            "chance distribution at node {id} is not completely mixed (weight {})",
                            crate::exactcore::format_rational(p)
                        ));
                    }
                }
            }
            Node::Decision { infoset, children } => {
                let inf = &tree.infosets[*infoset];
                if children.len() != inf.actions.len() {
                    diags.push(format!(
                        "node {id} has {} children but infoset `{}` lists {} actions",
                        children.len(),
                        inf.name,
                        inf.actions.len()
                    ));
                }
            }
            Node::Terminal { .. } => {}
        }
    }
    // Perfect recall: all nodes of an infoset share the owner's own history.
    for inf in &tree.infosets {
        let mut histories: Vec<Vec<(InfosetId, usize)>> = inf
            .nodes
            .iter()
            .map(|&n| tree.own_history(inf.player, n))
            .collect();
        histories.dedup();
        if histories.len() > 1 {
            diags.push(format!(
                "perfect recall violated at infoset `{}` of player {}: nodes reached after different own histories",
                inf.name,
                inf.player.number()
            ));
        }
    }
    diags
}

/// Expected outcome of a behavior-strategy profile.
pub fn outcome_of(
    tree: &GameTree,
    b1: &BehaviorStrategy,
    b2: &BehaviorStrategy,
) -> Result<Outcome, TreeError> {
    if b1.player != Player::One || b2.player != Player::Two {
        return Err(TreeError::PlayerMismatch);
    }
    let mut probs = vec![Rational::zero(); tree.terminals.len()];
    walk(tree, tree.root, Rational::one(), &mut |terminal, p| {
        let idx = tree.terminal_index(terminal);
        probs[idx] += p;
    }, &|infoset| {
        let inf = &tree.infosets[infoset];
        let b = match inf.player {
            Player::One => b1,
            Player::Two => b2,
        };
        b.local
            .get(&infoset)
            .cloned()
            .ok_or_else(|| TreeError::MissingInfoset(inf.name.clone()))
    })?;
    Ok(Outcome { probs })
}

/// Generic weighted walk: `local` yields the distribution at each reached
/// decision infoset; `sink` accumulates terminal probabilities.
fn walk<F, G>(
    tree: &GameTree,
    node: NodeId,
    prob: Rational,
    sink: &mut F,
    local: &G,
) -> Result<(), TreeError>
where
    F: FnMut(NodeId, Rational),
    G: Fn(InfosetId) -> Result<Vec<Rational>, TreeError>,
{
    if prob.is_zero() {
        return Ok(());
    }
    match &tree.nodes[node] {
        Node::Terminal { .. } => {
            sink(node, prob);
            Ok(())
        }
        Node::Chance { edges } => {
            for (p, child) in edges {
                walk(tree, *child, &prob * p, sink, local)?;
            }
            Ok(())
        }
        Node::Decision { infoset, children } => {
            let dist = local(*infoset)?;
            if dist.len() != children.len() {
                return Err(TreeError::Invalid(format!(
                    "distribution width mismatch at infoset `{}`",
                    tree.infosets[*infoset].name
                )));
            }
            for (p, child) in dist.iter().zip(children) {
                walk(tree, *child, &prob * p, sink, local)?;
            }
            Ok(())
        }
    }
}

/// Linear expectation of terminal payoffs under an outcome.
pub fn expected_payoffs(tree: &GameTree, outcome: &Outcome) -> [Rational; 2] {
    let mut total = [Rational::zero(), Rational::zero()];
    for (i, &t) in tree.terminals.iter().enumerate() {
        let pay = tree.terminal_payoffs(t);
        total[0] += &outcome.probs[i] * &pay[0];
        total[1] += &outcome.probs[i] * &pay[1];
    }
    total
}

/// Point-mass behavior of a pure strategy; unassigned infosets get a
/// uniform distribution so the behavior is total.
pub fn pure_to_behavior(tree: &GameTree, strategy: &PureStrategy) -> BehaviorStrategy {
    let mut local = BTreeMap::new();
    for id in tree.infosets_of(strategy.player) {
        let n = tree.infosets[id].actions.len();
        let dist = match strategy.action(id) {
            Some(a) => {
                let mut d = vec![Rational::zero(); n];
                d[a] = Rational::one();
                d
            }
            None => uniform(n),
        };
        local.insert(id, dist);
    }
    BehaviorStrategy { player: strategy.player, local }
}

fn uniform(n: usize) -> Vec<Rational> {
    vec![Rational::new(1.into(), (n as i64).into()); n]
}

/// An indexed family of pure strategies for one player, either the full
/// cartesian assignment space or the reduced (own-reachability) space.
#[derive(Debug, Clone)]
pub struct StrategySpace {
    pub player: Player,
    pub strategies: Vec<PureStrategy>,
    pub labels: Vec<String>,
}

impl StrategySpace {
    /// Every total assignment infoset -> action, in lexicographic order of
    /// the tree's infoset ids.
    pub fn full(tree: &GameTree, player: Player) -> StrategySpace {
        let infosets = tree.infosets_of(player);
        let mut strategies = vec![PureStrategy { player, choices: BTreeMap::new() }];
        for &inf in &infosets {
            let n = tree.infosets[inf].actions.len();
            let mut next = Vec::with_capacity(strategies.len() * n);
            for s in &strategies {
                for a in 0..n {
                    let mut s = s.clone();
                    s.choices.insert(inf, a);
                    next.push(s);
                }
            }
            strategies = next;
        }
        let labels = strategies.iter().map(|s| strategy_label(tree, s)).collect();
        StrategySpace { player, strategies, labels }
    }

    /// Reduced pure strategies: assignments only to infosets the player can
    /// reach given her own earlier choices (opponent and chance free). Two
    /// full strategies inducing the same reduced strategy are realization
    /// equivalent.
    pub fn reduced(tree: &GameTree, player: Player) -> StrategySpace {
        let mut strategies = Vec::new();
        let base = PureStrategy { player, choices: BTreeMap::new() };
        extend_reduced(tree, player, base, &mut strategies);
        strategies.sort();
        strategies.dedup();
        let labels = strategies.iter().map(|s| strategy_label(tree, s)).collect();
        StrategySpace { player, strategies, labels }
    }

    pub fn len(&self) -> usize {
        self.strategies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strategies.is_empty()
    }

    pub fn position(&self, s: &PureStrategy) -> Option<usize> {
        self.strategies.iter().position(|t| t == s)
    }
}

fn extend_reduced(
    tree: &GameTree,
    player: Player,
    partial: PureStrategy,
    out: &mut Vec<PureStrategy>,
) {
    // Infosets reachable under the partial assignment (own moves honored,
    // everything else free) that are still unassigned.
    let reachable = own_reachable_infosets(tree, player, &partial, |_, _| true);
    let next = reachable.into_iter().find(|i| partial.action(*i).is_none());
    match next {
        None => out.push(partial),
        Some(inf) => {
            for a in 0..tree.infosets[inf].actions.len() {
                let mut s = partial.clone();
                s.choices.insert(inf, a);
                extend_reduced(tree, player, s, out);
            }
        }
    }
}

/// Infosets of `player` reachable when the player follows `strategy` where
/// assigned (all actions where not), the opponent restricted edgewise by
/// `opp_allows(infoset, action)`. Used both for reduced-strategy
/// enumeration and for the trace classes of the excluded-game construction.
pub fn own_reachable_infosets<F>(
    tree: &GameTree,
    player: Player,
    strategy: &PureStrategy,
    opp_allows: F,
) -> Vec<InfosetId>
where
    F: Fn(InfosetId, usize) -> bool + Copy,
{
    let mut reach = Vec::new();
    let mut stack = vec![tree.root];
    while let Some(id) = stack.pop() {
        match &tree.nodes[id] {
            Node::Terminal { .. } => {}
            Node::Chance { edges } => {
                for (_, c) in edges {
                    stack.push(*c);
                }
            }
            Node::Decision { infoset, children } => {
                let inf = &tree.infosets[*infoset];
                if inf.player == player {
                    if !reach.contains(infoset) {
                        reach.push(*infoset);
                    }
                    match strategy.action(*infoset) {
                        Some(a) => stack.push(children[a]),
                        None => stack.extend(children.iter().copied()),
                    }
                } else {
                    for (edge, child) in children.iter().enumerate() {
                        if opp_allows(*infoset, edge) {
                            stack.push(*child);
                        }
                    }
                }
            }
        }
    }
    reach.sort_unstable();
    reach
}

/// Human-readable strategy label: the assigned actions joined by `-` in
/// infoset order (e.g. `Out`, `In-L`, `B-Q`).
pub fn strategy_label(tree: &GameTree, s: &PureStrategy) -> String {
    let parts: Vec<&str> = s
        .choices
        .iter()
        .map(|(&inf, &a)| tree.infosets[inf].actions[a].as_str())
        .collect();
    if parts.is_empty() {
        "()".to_string()
    } else {
        parts.join("-")
    }
}

/// Outcome of a pure-strategy pair (spaces may be full or reduced).
pub fn outcome_of_pure(tree: &GameTree, s1: &PureStrategy, s2: &PureStrategy) -> Outcome {
    let b1 = pure_to_behavior(tree, s1);
    let b2 = pure_to_behavior(tree, s2);
    outcome_of(tree, &b1, &b2).expect("total behavior")
}

/// The induced normal form: one row/column per pure strategy of the given
/// spaces, entries the exact expected payoffs of the pure profile.
pub fn normal_form_over(
    tree: &GameTree,
    rows: &StrategySpace,
    cols: &StrategySpace,
) -> BimatrixGame {
    let mut a = Vec::with_capacity(rows.len());
    let mut b = Vec::with_capacity(rows.len());
    for s1 in &rows.strategies {
        let mut arow = Vec::with_capacity(cols.len());
        let mut brow = Vec::with_capacity(cols.len());
        for s2 in &cols.strategies {
            let outcome = outcome_of_pure(tree, s1, s2);
            let [p1, p2] = expected_payoffs(tree, &outcome);
            arow.push(p1);
            brow.push(p2);
        }
        a.push(arow);
        b.push(brow);
    }
    BimatrixGame {
        row_labels: rows.labels.clone(),
        col_labels: cols.labels.clone(),
        a,
        b,
    }
}

/// Normal form over the full pure-strategy spaces, plus those spaces.
pub fn normal_form(tree: &GameTree) -> (BimatrixGame, StrategySpace, StrategySpace) {
    let rows = StrategySpace::full(tree, Player::One);
    let cols = StrategySpace::full(tree, Player::Two);
    let game = normal_form_over(tree, &rows, &cols);
    (game, rows, cols)
}

/// Normal form over reduced pure strategies (realization-equivalence
/// classes of full strategies); the tractable presentation for trees whose
/// full strategy space is exponentially larger.
pub fn reduced_normal_form(tree: &GameTree) -> (BimatrixGame, StrategySpace, StrategySpace) {
    let rows = StrategySpace::reduced(tree, Player::One);
    let cols = StrategySpace::reduced(tree, Player::Two);
    let game = normal_form_over(tree, &rows, &cols);
    (game, rows, cols)
}

/// Kuhn transport: the behavior strategy realization-equivalent to the
/// mixed strategy `weights` over `space`. Where the conditioning event has
/// probability zero the local distribution defaults to uniform.
pub fn mixed_to_behavior(
    tree: &GameTree,
    space: &StrategySpace,
    weights: &[Rational],
) -> BehaviorStrategy {
    assert_eq!(weights.len(), space.len(), "weight vector width mismatch");
    let player = space.player;
    let mut local = BTreeMap::new();
    for inf in tree.infosets_of(player) {
        let history = tree.own_history(player, tree.infosets[inf].nodes[0]);
        let consistent = |s: &PureStrategy| {
            history.iter().all(|&(h_inf, h_act)| match s.action(h_inf) {
                Some(a) => a == h_act,
                // Reduced strategies leave own-unreachable infosets
                // unassigned; an unassigned history infoset means the
                // strategy cannot reach this infoset.
                None => false,
            })
        };
        let n = tree.infosets[inf].actions.len();
        let mut mass = Rational::zero();
        let mut dist = vec![Rational::zero(); n];
        for (s, w) in space.strategies.iter().zip(weights) {
            if w.is_zero() || !consistent(s) {
                continue;
            }
            mass += w;
            match s.action(inf) {
                Some(a) => dist[a] += w,
                // Consistent but unassigned: the infoset is off the
                // strategy's own play; spread uniformly.
                None => {
                    let share = w / Rational::from_integer((n as i64).into());
                    for d in dist.iter_mut() {
                        *d += &share;
                    }
                }
            }
        }
        let dist = if mass.is_zero() {
            uniform(n)
        } else {
            dist.into_iter().map(|d| d / &mass).collect()
        };
        local.insert(inf, dist);
    }
    BehaviorStrategy { player, local }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::corpus;
    use crate::exactcore::{int, rat};

    fn entry() -> GameTree {
        corpus::entry()
    }

    #[test]
    fn entry_tree_is_valid() {
        assert!(validate_tree(&entry()).is_empty());
    }

    #[test]
    fn bad_chance_sum_is_reported() {
        let mut tree = entry();
        // Splice a chance node with weights 1/2, 1/3 above the root.
        let t1 = tree.nodes.len();
        tree.nodes.push(Node::Terminal { payoffs: [int(0), int(0)] });
        let old_root = tree.root;
        let chance = tree.nodes.len();
        tree.nodes.push(Node::Chance { edges: vec![(rat(1, 2), old_root), (rat(1, 3), t1)] });
        let tree = GameTree::new(tree.nodes, chance, tree.infosets);
        let diags = validate_tree(&tree);
        assert!(diags.iter().any(|d| d.contains("sums to 5/6")), "{diags:?}");
    }

    #[test]
    fn absurd_recall_is_reported() {
        // Player 2 infoset merging nodes after different own past actions:
        // she moves, observes nothing, and moves again into a merged set.
        let mut nodes = Vec::new();
        let term = |nodes: &mut Vec<Node>| {
            nodes.push(Node::Terminal { payoffs: [int(0), int(0)] });
            nodes.len() - 1
        };
        let t1 = term(&mut nodes);
        let t2 = term(&mut nodes);
        let t3 = term(&mut nodes);
        let t4 = term(&mut nodes);
        // Second-stage nodes share infoset 1 but follow different own moves.
        nodes.push(Node::Decision { infoset: 1, children: vec![t1, t2] });
        let d1 = nodes.len() - 1;
        nodes.push(Node::Decision { infoset: 1, children: vec![t3, t4] });
        let d2 = nodes.len() - 1;
        nodes.push(Node::Decision { infoset: 0, children: vec![d1, d2] });
        let root = nodes.len() - 1;
        let infosets = vec![
            Infoset { player: Player::Two, name: "first".into(), actions: vec!["a".into(), "b".into()], nodes: vec![] },
            Infoset { player: Player::Two, name: "second".into(), actions: vec!["x".into(), "y".into()], nodes: vec![] },
        ];
        let tree = GameTree::new(nodes, root, infosets);
        let diags = validate_tree(&tree);
        assert!(diags.iter().any(|d| d.contains("perfect recall")), "{diags:?}");
    }

    #[test]
    fn entry_out_is_a_point_mass() {
        let tree = entry();
        let rows = StrategySpace::reduced(&tree, Player::One);
        let cols = StrategySpace::reduced(&tree, Player::Two);
        let out = rows.labels.iter().position(|l| l == "Out").unwrap();
        let l = cols.labels.iter().position(|l| l == "\u{2113}").unwrap();
        let outcome = outcome_of_pure(&tree, &rows.strategies[out], &cols.strategies[l]);
        assert_eq!(outcome.probs.iter().filter(|p| !p.is_zero()).count(), 1);
        assert_eq!(expected_payoffs(&tree, &outcome), [int(2), int(2)]);
    }

    #[test]
    fn entry_half_half_outcome() {
        // In then 1/2 L, opponent 1/2 l: 1/4 on each subgame terminal.
        let tree = entry();
        let i1 = tree.infosets_of(Player::One);
        let i2 = tree.infosets_of(Player::Two);
        let b1 = BehaviorStrategy {
            player: Player::One,
            local: BTreeMap::from([
                (i1[0], vec![int(0), int(1)]),
                (i1[1], vec![rat(1, 2), rat(1, 2)]),
            ]),
        };
        let b2 = BehaviorStrategy {
            player: Player::Two,
            local: BTreeMap::from([(i2[0], vec![rat(1, 2), rat(1, 2)])]),
        };
        let outcome = outcome_of(&tree, &b1, &b2).unwrap();
        let nonzero: Vec<&Rational> = outcome.probs.iter().filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 4);
        assert!(nonzero.iter().all(|p| **p == rat(1, 4)));
        // Uniform outcome over the subgame pays (1,1).
        assert_eq!(expected_payoffs(&tree, &outcome), [int(1), int(1)]);
    }

    #[test]
    fn entry_full_normal_form_is_4x2() {
        let tree = entry();
        let (game, rows, _) = normal_form(&tree);
        assert_eq!(rows.len(), 4);
        assert_eq!(game.a.len(), 4);
        assert_eq!(game.a[0].len(), 2);
        // Out rows are (2,2),(2,2); In-L is (3,1),(0,0); In-R is (0,0),(1,3).
        let by_label = |l: &str| rows.labels.iter().position(|x| x == l).unwrap();
        let inl = by_label("In-L");
        let inr = by_label("In-R");
        assert_eq!(game.a[inl], vec![int(3), int(0)]);
        assert_eq!(game.b[inl], vec![int(1), int(0)]);
        assert_eq!(game.a[inr], vec![int(0), int(1)]);
        assert_eq!(game.b[inr], vec![int(0), int(3)]);
        for l in ["Out-L", "Out-R"] {
            let i = by_label(l);
            assert_eq!(game.a[i], vec![int(2), int(2)]);
            assert_eq!(game.b[i], vec![int(2), int(2)]);
        }
    }

    #[test]
    fn beer_quiche_pooling_outcome() {
        let tree = corpus::beer_quiche();
        let rows = StrategySpace::reduced(&tree, Player::One);
        let cols = StrategySpace::reduced(&tree, Player::Two);
        // Pooling on B; receiver NF after B, NF after Q.
        let bb = rows.labels.iter().position(|l| l == "B-B").unwrap();
        let nf = cols.labels.iter().position(|l| l == "NF-NF").unwrap();
        let outcome = outcome_of_pure(&tree, &rows.strategies[bb], &cols.strategies[nf]);
        let pay = expected_payoffs(&tree, &outcome);
        assert_eq!(pay, [rat(29, 10), rat(9, 10)]);
        let support = outcome.support();
        assert_eq!(support.len(), 2);
        let probs: Vec<Rational> =
            support.iter().map(|&i| outcome.probs[i].clone()).collect();
        assert_eq!(probs, vec![rat(9, 10), rat(1, 10)]);
    }

    #[test]
    fn mixed_to_behavior_point_mass() {
        let tree = entry();
        let space = StrategySpace::full(&tree, Player::One);
        let mut weights = vec![int(0); space.len()];
        let inl = space.labels.iter().position(|l| l == "In-L").unwrap();
        weights[inl] = int(1);
        let b = mixed_to_behavior(&tree, &space, &weights);
        let i1 = tree.infosets_of(Player::One);
        assert_eq!(b.local[&i1[0]], vec![int(0), int(1)]);
        assert_eq!(b.local[&i1[1]], vec![int(1), int(0)]);
    }

    #[test]
    fn mixed_to_behavior_conditional() {
        // 1/2 In-L + 1/2 In-R: In with prob 1, then 1/2 L.
        let tree = entry();
        let space = StrategySpace::full(&tree, Player::One);
        let mut weights = vec![int(0); space.len()];
        for l in ["In-L", "In-R"] {
            let i = space.labels.iter().position(|x| x == l).unwrap();
            weights[i] = rat(1, 2);
        }
        let b = mixed_to_behavior(&tree, &space, &weights);
        let i1 = tree.infosets_of(Player::One);
        assert_eq!(b.local[&i1[0]], vec![int(0), int(1)]);
        assert_eq!(b.local[&i1[1]], vec![rat(1, 2), rat(1, 2)]);

        // 1/2 Out-L + 1/2 In-R: 1/2 Out; conditional on reaching the
        // second infoset, R with probability 1.
        let mut weights = vec![int(0); space.len()];
        for l in ["Out-L", "In-R"] {
            let i = space.labels.iter().position(|x| x == l).unwrap();
            weights[i] = rat(1, 2);
        }
        let b = mixed_to_behavior(&tree, &space, &weights);
        assert_eq!(b.local[&i1[0]], vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(b.local[&i1[1]], vec![int(0), int(1)]);
    }

    #[test]
    fn reduced_spaces_merge_unreachable_assignments() {
        let tree = entry();
        let rows = StrategySpace::reduced(&tree, Player::One);
        assert_eq!(rows.labels, vec!["Out", "In-L", "In-R"]);
    }
}
