//! The game file format.
//!
//! Grammar (whitespace separates tokens; `#` starts a line comment):
//!
//! ```text
//! node     := chance | decision | terminal
//! chance   := "chance" "{" (rational ":" node)+ "}"
//! decision := "player" int "infoset" string "{" (label ":" node)+ "}"
//! terminal := "(" rational "," rational ")"
//! ```
//!
//! Rationals are `p/q` or integers. Infoset ids and action labels are bare
//! words (unicode letters, digits, `_`, `'`) or double-quoted strings. Two
//! occurrences of one infoset id (per player) must list identical actions
//! in identical order.

use crate::exactcore::{format_rational, parse_rational, Rational};
use crate::gametree::{GameTree, Infoset, Node, NodeId, Player};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Word(String),
    Punct(char),
}

struct Scanner {
    tokens: Vec<(Token, usize, usize)>,
    pos: usize,
}

fn scan(text: &str) -> Result<Vec<(Token, usize, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            '#' => {
                for c in chars.by_ref() {
                    bump(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            '{' | '}' | ':' | '(' | ')' | ',' => {
                chars.next();
                bump(c, &mut line, &mut col);
                out.push((Token::Punct(c), tl, tc));
            }
            '"' => {
                chars.next();
                bump(c, &mut line, &mut col);
                let mut word = String::new();
                let mut closed = false;
                while let Some(&c) = chars.peek() {
                    chars.next();
                    bump(c, &mut line, &mut col);
                    if c == '"' {
                        closed = true;
                        break;
                    }
                    word.push(c);
                }
                if !closed {
                    return Err(ParseError { line: tl, col: tc, message: "unterminated string".into() });
                }
                out.push((Token::Word(word), tl, tc));
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' || c == '\'' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || matches!(c, '_' | '-' | '\'' | '/') {
                        word.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push((Token::Word(word), tl, tc));
            }
            other => {
                return Err(ParseError {
                    line: tl,
                    col: tc,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(out)
}

impl Scanner {
    fn peek(&self) -> Option<&(Token, usize, usize)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(Token, usize, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: String) -> ParseError {
        match self.tokens.get(self.pos.min(self.tokens.len().saturating_sub(1))) {
            Some((_, l, c)) => ParseError { line: *l, col: *c, message },
            None => ParseError { line: 0, col: 0, message },
        }
    }

    fn expect_punct(&mut self, p: char) -> Result<(), ParseError> {
        match self.next() {
            Some((Token::Punct(c), _, _)) if c == p => Ok(()),
            Some((t, l, c)) => Err(ParseError {
                line: l,
                col: c,
                message: format!("expected `{p}`, found {t:?}"),
            }),
            None => Err(ParseError { line: 0, col: 0, message: format!("expected `{p}`, found end of input") }),
        }
    }

    fn expect_word(&mut self) -> Result<(String, usize, usize), ParseError> {
        match self.next() {
            Some((Token::Word(w), l, c)) => Ok((w, l, c)),
            Some((t, l, c)) => Err(ParseError { line: l, col: c, message: format!("expected a word, found {t:?}") }),
            None => Err(ParseError { line: 0, col: 0, message: "expected a word, found end of input".into() }),
        }
    }

    fn expect_rational(&mut self) -> Result<Rational, ParseError> {
        let (w, l, c) = self.expect_word()?;
        parse_rational(&w).map_err(|m| ParseError { line: l, col: c, message: m })
    }
}

struct TreeAssembler {
    nodes: Vec<Node>,
    infosets: Vec<Infoset>,
}

impl TreeAssembler {
    fn open_infoset(&mut self, player: Player, name: &str) -> (usize, bool) {
        if let Some(id) = self
            .infosets
            .iter()
            .position(|i| i.player == player && i.name == name)
        {
            (id, false)
        } else {
            self.infosets.push(Infoset {
                player,
                name: name.to_string(),
                actions: Vec::new(),
                nodes: Vec::new(),
            });
            (self.infosets.len() - 1, true)
        }
    }

    fn close_infoset(
        &mut self,
        id: usize,
        fresh: bool,
        actions: &[String],
        at: (usize, usize),
    ) -> Result<(), ParseError> {
        let inf = &mut self.infosets[id];
        if fresh {
            inf.actions = actions.to_vec();
            Ok(())
        } else if inf.actions != actions {
            Err(ParseError {
                line: at.0,
                col: at.1,
                message: format!(
                    "infoset `{}` of player {} re-declared with different actions",
                    inf.name,
                    inf.player.number()
                ),
            })
        } else {
            Ok(())
        }
    }
}

fn parse_node(s: &mut Scanner, t: &mut TreeAssembler) -> Result<NodeId, ParseError> {
    match s.peek() {
        Some((Token::Punct('('), _, _)) => {
            s.expect_punct('(')?;
            let p1 = s.expect_rational()?;
            s.expect_punct(',')?;
            let p2 = s.expect_rational()?;
            s.expect_punct(')')?;
            t.nodes.push(Node::Terminal { payoffs: [p1, p2] });
            Ok(t.nodes.len() - 1)
        }
        Some((Token::Word(w), _, _)) if w == "chance" => {
            s.next();
            s.expect_punct('{')?;
            let mut edges = Vec::new();
            loop {
                if let Some((Token::Punct('}'), _, _)) = s.peek() {
                    break;
                }
                let p = s.expect_rational()?;
                s.expect_punct(':')?;
                let child = parse_node(s, t)?;
                edges.push((p, child));
            }
            s.expect_punct('}')?;
            if edges.is_empty() {
                return Err(s.err_here("chance node needs at least one branch".into()));
            }
            t.nodes.push(Node::Chance { edges });
            Ok(t.nodes.len() - 1)
        }
        Some((Token::Word(w), _, _)) if w == "player" => {
            s.next();
            let (num, l, c) = s.expect_word()?;
            let player = match num.as_str() {
                "1" => Player::One,
                "2" => Player::Two,
                other => {
                    return Err(ParseError {
                        line: l,
                        col: c,
                        message: format!("player must be 1 or 2, found `{other}`"),
                    })
                }
            };
            let (kw, l, c) = s.expect_word()?;
            if kw != "infoset" {
                return Err(ParseError { line: l, col: c, message: format!("expected `infoset`, found `{kw}`") });
            }
            let (name, nl, nc) = s.expect_word()?;
            // Register (or look up) the infoset before descending so ids
            // follow the top-down order of first appearance; actions are
            // checked once the block closes.
            let (infoset, fresh) = t.open_infoset(player, &name);
            s.expect_punct('{')?;
            let mut actions = Vec::new();
            let mut children = Vec::new();
            loop {
                if let Some((Token::Punct('}'), _, _)) = s.peek() {
                    break;
                }
                let (label, _, _) = s.expect_word()?;
                s.expect_punct(':')?;
                let child = parse_node(s, t)?;
                actions.push(label);
                children.push(child);
            }
            s.expect_punct('}')?;
            if actions.is_empty() {
                return Err(s.err_here(format!("infoset `{name}` needs at least one action")));
            }
            t.close_infoset(infoset, fresh, &actions, (nl, nc))?;
            t.nodes.push(Node::Decision { infoset, children });
            Ok(t.nodes.len() - 1)
        }
        Some((tok, l, c)) => Err(ParseError {
            line: *l,
            col: *c,
            message: format!("expected a node (chance/player/terminal), found {tok:?}"),
        }),
        None => Err(ParseError { line: 0, col: 0, message: "unexpected end of input".into() }),
    }
}

/// Parses a game file into a tree. Fails with line/column positions; the
/// result still needs [`crate::gametree::validate_tree`].
pub fn parse_game(text: &str) -> Result<GameTree, ParseError> {
    let tokens = scan(text)?;
    let mut s = Scanner { tokens, pos: 0 };
    let mut t = TreeAssembler { nodes: Vec::new(), infosets: Vec::new() };
    let root = parse_node(&mut s, &mut t)?;
    if let Some((tok, l, c)) = s.peek() {
        return Err(ParseError {
            line: *l,
            col: *c,
            message: format!("trailing input after the root node: {tok:?}"),
        });
    }
    Ok(GameTree::new(t.nodes, root, t.infosets))
}

fn needs_quotes(word: &str) -> bool {
    word.is_empty()
        || word
            .chars()
            .any(|c| !(c.is_alphanumeric() || matches!(c, '_' | '-' | '\'' | '/')))
        || word.parse::<i64>().is_ok()
}

fn emit_word(w: &str) -> String {
    if needs_quotes(w) {
        format!("\"{w}\"")
    } else {
        w.to_string()
    }
}

fn write_node(tree: &GameTree, node: NodeId, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match &tree.nodes[node] {
        Node::Terminal { payoffs } => {
            out.push_str(&format!(
                "({}, {})",
                format_rational(&payoffs[0]),
                format_rational(&payoffs[1])
            ));
        }
        Node::Chance { edges } => {
            out.push_str("chance {\n");
            for (p, child) in edges {
                out.push_str(&format!("{pad}  {}: ", format_rational(p)));
                write_node(tree, *child, depth + 1, out);
                out.push('\n');
            }
            out.push_str(&format!("{pad}}}"));
        }
        Node::Decision { infoset, children } => {
            let inf = &tree.infosets[*infoset];
            out.push_str(&format!(
                "player {} infoset {} {{\n",
                inf.player.number(),
                emit_word(&inf.name)
            ));
            for (action, child) in inf.actions.iter().zip(children) {
                out.push_str(&format!("{pad}  {}: ", emit_word(action)));
                write_node(tree, *child, depth + 1, out);
                out.push('\n');
            }
            out.push_str(&format!("{pad}}}"));
        }
    }
}

/// Serializes a tree back to the file format (parse/write round-trips).
pub fn write_game(tree: &GameTree) -> String {
    let mut out = String::new();
    write_node(tree, tree.root, 0, &mut out);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::int;
    use crate::gametree::validate_tree;

    #[test]
    fn parse_entry_corpus_file() {
        let tree = super::super::corpus::entry();
        assert!(validate_tree(&tree).is_empty());
        assert_eq!(tree.terminals().len(), 5);
        assert_eq!(tree.infosets.len(), 3);
    }

    #[test]
    fn zero_denominator_is_an_error_naming_the_token() {
        let text = "player 1 infoset a { x: (1/0, 2) }";
        let err = parse_game(text).unwrap_err();
        assert!(err.message.contains("1/0"), "{err}");
        assert_eq!(err.line, 1);
    }

    #[test]
    fn inconsistent_infoset_redeclaration_fails() {
        let text = "player 1 infoset a { x: player 2 infoset b { u: (0,0) v: (1,1) } y: player 2 infoset b { u: (0,0) w: (1,1) } }";
        let err = parse_game(text).unwrap_err();
        assert!(err.message.contains("re-declared"), "{err}");
    }

    #[test]
    fn round_trip_through_writer() {
        let tree = super::super::corpus::beer_quiche();
        let text = write_game(&tree);
        let again = parse_game(&text).unwrap();
        assert_eq!(tree.terminals().len(), again.terminals().len());
        for (&a, &b) in tree.terminals().iter().zip(again.terminals()) {
            assert_eq!(tree.terminal_payoffs(a), again.terminal_payoffs(b));
        }
        assert_eq!(tree.infosets.len(), again.infosets.len());
    }

    #[test]
    fn quoted_labels_and_comments() {
        let text = "# a comment\nplayer 1 infoset \"the start\" { \"go left\": (1, 2) right: (3, 4) }";
        let tree = parse_game(text).unwrap();
        assert_eq!(tree.infosets[0].name, "the start");
        assert_eq!(tree.infosets[0].actions[0], "go left");
        assert_eq!(tree.terminal_payoffs(tree.terminals()[0]), &[int(1), int(2)]);
    }
}
