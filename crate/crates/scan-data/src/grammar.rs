//! The SCAN command grammar: parse trees, the parser, and tree rendering.
//!
//! Phrase structure:
//!
//! ```text
//! C → S and S | S after S | S
//! S → V twice | V thrice | V
//! V → U | U left | U right | turn left | turn right
//!   | W opposite left | W opposite right
//!   | W around left   | W around right
//! U → walk | look | run | jump          W → U | turn
//! ```
//!
//! The grammar is unambiguous: a command contains at most one conjunction
//! word, so parsing is a split at the conjunction followed by pattern
//! matching on each side.

use serde::{Deserialize, Serialize};

use crate::error::ScanError;
use crate::token::{Command, CommandToken};

/// U node: a primitive verb, or `turn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verb {
    Walk,
    Look,
    Run,
    Jump,
    Turn,
}

impl Verb {
    pub const PRIMITIVES: [Verb; 4] = [Verb::Walk, Verb::Look, Verb::Run, Verb::Jump];
    pub const ALL: [Verb; 5] = [Verb::Walk, Verb::Look, Verb::Run, Verb::Jump, Verb::Turn];

    pub fn token(self) -> CommandToken {
        match self {
            Verb::Walk => CommandToken::Walk,
            Verb::Look => CommandToken::Look,
            Verb::Run => CommandToken::Run,
            Verb::Jump => CommandToken::Jump,
            Verb::Turn => CommandToken::Turn,
        }
    }

    fn from_token(t: CommandToken) -> Option<Verb> {
        match t {
            CommandToken::Walk => Some(Verb::Walk),
            CommandToken::Look => Some(Verb::Look),
            CommandToken::Run => Some(Verb::Run),
            CommandToken::Jump => Some(Verb::Jump),
            CommandToken::Turn => Some(Verb::Turn),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rotation {
    Left,
    Right,
}

impl Rotation {
    pub const BOTH: [Rotation; 2] = [Rotation::Left, Rotation::Right];

    pub fn token(self) -> CommandToken {
        match self {
            Rotation::Left => CommandToken::Left,
            Rotation::Right => CommandToken::Right,
        }
    }

    fn from_token(t: CommandToken) -> Option<Rotation> {
        match t {
            CommandToken::Left => Some(Rotation::Left),
            CommandToken::Right => Some(Rotation::Right),
            _ => None,
        }
    }
}

/// How a direction is applied to the verb of a V node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Application {
    /// Bare verb; only valid for the four primitive verbs.
    Plain,
    /// `<verb> left` / `<verb> right` (includes `turn left` / `turn right`).
    Directed(Rotation),
    /// `<verb> opposite <dir>`: two turns, then the verb.
    Opposite(Rotation),
    /// `<verb> around <dir>`: four (turn, verb) steps.
    Around(Rotation),
}

/// V node: a verb with its direction application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VerbPhrase {
    pub verb: Verb,
    pub application: Application,
}

impl VerbPhrase {
    /// Checks the one lexical restriction of the grammar: bare `turn` is not
    /// a command.
    pub fn is_valid(&self) -> bool {
        !(self.verb == Verb::Turn && self.application == Application::Plain)
    }

    pub fn tokens(&self) -> Vec<CommandToken> {
        let v = self.verb.token();
        match self.application {
            Application::Plain => vec![v],
            Application::Directed(d) => vec![v, d.token()],
            Application::Opposite(d) => vec![v, CommandToken::Opposite, d.token()],
            Application::Around(d) => vec![v, CommandToken::Around, d.token()],
        }
    }
}

/// S node: a verb phrase with its repetition count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Repetition {
    One,
    Twice,
    Thrice,
}

impl Repetition {
    pub const ALL: [Repetition; 3] = [Repetition::One, Repetition::Twice, Repetition::Thrice];

    pub fn count(self) -> usize {
        match self {
            Repetition::One => 1,
            Repetition::Twice => 2,
            Repetition::Thrice => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Phrase {
    pub verb_phrase: VerbPhrase,
    pub repetition: Repetition,
}

impl Phrase {
    pub fn tokens(&self) -> Vec<CommandToken> {
        let mut out = self.verb_phrase.tokens();
        match self.repetition {
            Repetition::One => {}
            Repetition::Twice => out.push(CommandToken::Twice),
            Repetition::Thrice => out.push(CommandToken::Thrice),
        }
        out
    }
}

/// C node: the root of a derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParseTree {
    Single(Phrase),
    And(Phrase, Phrase),
    After(Phrase, Phrase),
}

impl ParseTree {
    /// Rendering the leaves left to right reproduces the source command.
    pub fn render(&self) -> Command {
        let mut tokens = Vec::new();
        match self {
            ParseTree::Single(p) => tokens.extend(p.tokens()),
            ParseTree::And(a, b) => {
                tokens.extend(a.tokens());
                tokens.push(CommandToken::And);
                tokens.extend(b.tokens());
            }
            ParseTree::After(a, b) => {
                tokens.extend(a.tokens());
                tokens.push(CommandToken::After);
                tokens.extend(b.tokens());
            }
        }
        Command(tokens)
    }
}

/// Parses a token sequence into its unique derivation.
pub fn parse(tokens: &[CommandToken]) -> Result<ParseTree, ScanError> {
    let fail = || {
        ScanError::UngrammaticalCommand(
            Command(tokens.to_vec()).to_string(),
        )
    };
    if tokens.is_empty() {
        return Err(fail());
    }

    let conj_positions: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| matches!(t, CommandToken::And | CommandToken::After))
        .map(|(i, _)| i)
        .collect();

    match conj_positions.as_slice() {
        [] => Ok(ParseTree::Single(parse_phrase(tokens).ok_or_else(fail)?)),
        [i] => {
            let left = parse_phrase(&tokens[..*i]).ok_or_else(fail)?;
            let right = parse_phrase(&tokens[*i + 1..]).ok_or_else(fail)?;
            match tokens[*i] {
                CommandToken::And => Ok(ParseTree::And(left, right)),
                CommandToken::After => Ok(ParseTree::After(left, right)),
                _ => unreachable!(),
            }
        }
        _ => Err(fail()),
    }
}

/// S → V twice | V thrice | V
fn parse_phrase(tokens: &[CommandToken]) -> Option<Phrase> {
    let (repetition, rest) = match tokens.last()? {
        CommandToken::Twice => (Repetition::Twice, &tokens[..tokens.len() - 1]),
        CommandToken::Thrice => (Repetition::Thrice, &tokens[..tokens.len() - 1]),
        _ => (Repetition::One, tokens),
    };
    let verb_phrase = parse_verb_phrase(rest)?;
    Some(Phrase { verb_phrase, repetition })
}

/// V → U | U left | U right | turn left | turn right | W opposite D | W around D
fn parse_verb_phrase(tokens: &[CommandToken]) -> Option<VerbPhrase> {
    let vp = match tokens {
        [v] => VerbPhrase {
            verb: Verb::from_token(*v)?,
            application: Application::Plain,
        },
        [v, d] => VerbPhrase {
            verb: Verb::from_token(*v)?,
            application: Application::Directed(Rotation::from_token(*d)?),
        },
        [v, CommandToken::Opposite, d] => VerbPhrase {
            verb: Verb::from_token(*v)?,
            application: Application::Opposite(Rotation::from_token(*d)?),
        },
        [v, CommandToken::Around, d] => VerbPhrase {
            verb: Verb::from_token(*v)?,
            application: Application::Around(Rotation::from_token(*d)?),
        },
        _ => return None,
    };
    vp.is_valid().then_some(vp)
}
