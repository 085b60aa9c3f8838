//! Exhaustive enumeration of the command space.

use crate::grammar::{Application, ParseTree, Phrase, Repetition, Rotation, Verb, VerbPhrase};
use crate::interp::interpret;
use crate::token::{ActionSequence, Command};

/// Number of grammatical commands: 102 single phrases plus two ordered
/// phrase pairs per conjunction word (102 + 2 * 102^2).
pub const COMMAND_COUNT: usize = 20_910;

/// Longest command, in words.
pub const MAX_COMMAND_LEN: usize = 9;

/// Longest gold action sequence realized by the grammar.
pub const MAX_ACTION_LEN: usize = 48;

/// One (command, gold actions) pair.
pub type Pair = (Command, ActionSequence);

/// Every valid V node, in a fixed canonical order.
pub fn all_verb_phrases() -> Vec<VerbPhrase> {
    let mut out = Vec::with_capacity(34);
    for verb in Verb::PRIMITIVES {
        out.push(VerbPhrase { verb, application: Application::Plain });
    }
    for verb in Verb::ALL {
        for dir in Rotation::BOTH {
            out.push(VerbPhrase { verb, application: Application::Directed(dir) });
        }
    }
    for verb in Verb::ALL {
        for dir in Rotation::BOTH {
            out.push(VerbPhrase { verb, application: Application::Opposite(dir) });
        }
    }
    for verb in Verb::ALL {
        for dir in Rotation::BOTH {
            out.push(VerbPhrase { verb, application: Application::Around(dir) });
        }
    }
    out
}

/// Every valid S node: 3 repetitions of each of the 34 verb phrases.
pub fn all_phrases() -> Vec<Phrase> {
    let mut out = Vec::with_capacity(102);
    for verb_phrase in all_verb_phrases() {
        for repetition in Repetition::ALL {
            out.push(Phrase { verb_phrase, repetition });
        }
    }
    out
}

/// Every derivation: single phrases first, then all `and` pairs, then all
/// `after` pairs. The order is deterministic and stable.
pub fn all_trees() -> Vec<ParseTree> {
    let phrases = all_phrases();
    let n = phrases.len();
    let mut out = Vec::with_capacity(n + 2 * n * n);
    for &p in &phrases {
        out.push(ParseTree::Single(p));
    }
    for &a in &phrases {
        for &b in &phrases {
            out.push(ParseTree::And(a, b));
        }
    }
    for &a in &phrases {
        for &b in &phrases {
            out.push(ParseTree::After(a, b));
        }
    }
    out
}

/// Enumerates every grammatical command exactly once, paired with its gold
/// execution. Asserts the documented length bounds on the way out; they size
/// positional tables downstream.
pub fn enumerate_all() -> Vec<Pair> {
    let trees = all_trees();
    let mut out = Vec::with_capacity(trees.len());
    for tree in &trees {
        let command = tree.render();
        let actions = interpret(tree);
        assert!(command.len() >= 1 && command.len() <= MAX_COMMAND_LEN);
        assert!(actions.len() >= 1 && actions.len() <= MAX_ACTION_LEN);
        out.push((command, actions));
    }
    assert_eq!(out.len(), COMMAND_COUNT);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_counts_match_closed_forms() {
        assert_eq!(all_verb_phrases().len(), 34);
        assert_eq!(all_phrases().len(), 102);
        assert_eq!(all_trees().len(), 102 + 2 * 102 * 102);
    }

    #[test]
    fn enumeration_count_and_uniqueness() {
        let pairs = enumerate_all();
        assert_eq!(pairs.len(), COMMAND_COUNT);
        let mut commands: Vec<_> = pairs.iter().map(|(c, _)| c.clone()).collect();
        commands.sort();
        commands.dedup();
        assert_eq!(commands.len(), COMMAND_COUNT);
    }

    #[test]
    fn length_bounds_are_tight() {
        let pairs = enumerate_all();
        let max_cmd = pairs.iter().map(|(c, _)| c.len()).max().unwrap();
        let max_act = pairs.iter().map(|(_, a)| a.len()).max().unwrap();
        assert_eq!(max_cmd, MAX_COMMAND_LEN);
        assert_eq!(max_act, MAX_ACTION_LEN);
    }
}
