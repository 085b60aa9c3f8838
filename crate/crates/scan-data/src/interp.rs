//! Interpretation of parse trees into action sequences.
//!
//! The composition rules: a bare verb maps to its action; `turn left/right`
//! is a single turn; `v left/right` turns then acts; `opposite` doubles the
//! turn; `around` interleaves four turns with four actions; `twice`/`thrice`
//! repeat; `and` concatenates; `after` concatenates in reverse order.

use crate::error::ScanError;
use crate::grammar::{self, Application, ParseTree, Phrase, Rotation, Verb, VerbPhrase};
use crate::token::{ActionSequence, ActionToken, Command};

fn turn_action(dir: Rotation) -> ActionToken {
    match dir {
        Rotation::Left => ActionToken::LTurn,
        Rotation::Right => ActionToken::RTurn,
    }
}

fn verb_action(verb: Verb) -> Option<ActionToken> {
    match verb {
        Verb::Walk => Some(ActionToken::Walk),
        Verb::Look => Some(ActionToken::Look),
        Verb::Run => Some(ActionToken::Run),
        Verb::Jump => Some(ActionToken::Jump),
        Verb::Turn => None,
    }
}

fn interpret_verb_phrase(vp: &VerbPhrase, out: &mut Vec<ActionToken>) {
    let act = verb_action(vp.verb);
    match vp.application {
        Application::Plain => {
            // Bare `turn` is excluded by the grammar.
            out.push(act.expect("plain turn is ungrammatical"));
        }
        Application::Directed(d) => {
            out.push(turn_action(d));
            out.extend(act);
        }
        Application::Opposite(d) => {
            out.push(turn_action(d));
            out.push(turn_action(d));
            out.extend(act);
        }
        Application::Around(d) => {
            for _ in 0..4 {
                out.push(turn_action(d));
                out.extend(act);
            }
        }
    }
}

fn interpret_phrase(p: &Phrase, out: &mut Vec<ActionToken>) {
    for _ in 0..p.repetition.count() {
        interpret_verb_phrase(&p.verb_phrase, out);
    }
}

/// Deterministically maps a derivation to its action sequence.
pub fn interpret(tree: &ParseTree) -> ActionSequence {
    let mut out = Vec::new();
    match tree {
        ParseTree::Single(p) => interpret_phrase(p, &mut out),
        ParseTree::And(a, b) => {
            interpret_phrase(a, &mut out);
            interpret_phrase(b, &mut out);
        }
        ParseTree::After(a, b) => {
            interpret_phrase(b, &mut out);
            interpret_phrase(a, &mut out);
        }
    }
    ActionSequence(out)
}

/// Parses and interprets in one step.
pub fn execute(command: &Command) -> Result<ActionSequence, ScanError> {
    Ok(interpret(&grammar::parse(command.tokens())?))
}
