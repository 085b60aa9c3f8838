//! Token alphabets for commands and actions, plus the sequence newtypes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ScanError;

/// The 13 words a command can be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CommandToken {
    Walk,
    Look,
    Run,
    Jump,
    Turn,
    Left,
    Right,
    Opposite,
    Around,
    Twice,
    Thrice,
    And,
    After,
}

impl CommandToken {
    pub const ALL: [CommandToken; 13] = [
        CommandToken::Walk,
        CommandToken::Look,
        CommandToken::Run,
        CommandToken::Jump,
        CommandToken::Turn,
        CommandToken::Left,
        CommandToken::Right,
        CommandToken::Opposite,
        CommandToken::Around,
        CommandToken::Twice,
        CommandToken::Thrice,
        CommandToken::And,
        CommandToken::After,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CommandToken::Walk => "walk",
            CommandToken::Look => "look",
            CommandToken::Run => "run",
            CommandToken::Jump => "jump",
            CommandToken::Turn => "turn",
            CommandToken::Left => "left",
            CommandToken::Right => "right",
            CommandToken::Opposite => "opposite",
            CommandToken::Around => "around",
            CommandToken::Twice => "twice",
            CommandToken::Thrice => "thrice",
            CommandToken::And => "and",
            CommandToken::After => "after",
        }
    }
}

impl fmt::Display for CommandToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CommandToken {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CommandToken::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| ScanError::UnknownCommandWord(s.to_string()))
    }
}

/// The 6 actions the executing agent can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ActionToken {
    Walk,
    Look,
    Run,
    Jump,
    LTurn,
    RTurn,
}

impl ActionToken {
    pub const ALL: [ActionToken; 6] = [
        ActionToken::Walk,
        ActionToken::Look,
        ActionToken::Run,
        ActionToken::Jump,
        ActionToken::LTurn,
        ActionToken::RTurn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ActionToken::Walk => "WALK",
            ActionToken::Look => "LOOK",
            ActionToken::Run => "RUN",
            ActionToken::Jump => "JUMP",
            ActionToken::LTurn => "LTURN",
            ActionToken::RTurn => "RTURN",
        }
    }

    /// Spelling used by the published SCAN corpus files.
    pub fn corpus_name(self) -> &'static str {
        match self {
            ActionToken::Walk => "I_WALK",
            ActionToken::Look => "I_LOOK",
            ActionToken::Run => "I_RUN",
            ActionToken::Jump => "I_JUMP",
            ActionToken::LTurn => "I_TURN_LEFT",
            ActionToken::RTurn => "I_TURN_RIGHT",
        }
    }

    /// Accepts either the internal or the corpus spelling.
    pub fn parse_name(s: &str) -> Result<Self, ScanError> {
        ActionToken::ALL
            .iter()
            .copied()
            .find(|a| a.as_str() == s || a.corpus_name() == s)
            .ok_or_else(|| ScanError::UnknownActionName(s.to_string()))
    }
}

impl fmt::Display for ActionToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A sequence of command words. Grammaticality is a property checked by
/// [`crate::grammar::parse`], not enforced by this container, so arbitrary
/// token sequences (e.g. model inputs under analysis) can be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Command(pub Vec<CommandToken>);

impl Command {
    pub fn new(tokens: Vec<CommandToken>) -> Self {
        Command(tokens)
    }

    pub fn tokens(&self) -> &[CommandToken] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, token: CommandToken) -> bool {
        self.0.contains(&token)
    }

    /// True when `first` is immediately followed by `second` anywhere in the
    /// command.
    pub fn contains_bigram(&self, first: CommandToken, second: CommandToken) -> bool {
        self.0.windows(2).any(|w| w[0] == first && w[1] == second)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(t.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for Command {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(CommandToken::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(Command)
    }
}

/// A sequence of actions: the gold (or predicted) execution of a command.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ActionSequence(pub Vec<ActionToken>);

impl ActionSequence {
    pub fn new(actions: Vec<ActionToken>) -> Self {
        ActionSequence(actions)
    }

    pub fn actions(&self) -> &[ActionToken] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renders with internal (`WALK`, `LTURN`) or corpus (`I_WALK`,
    /// `I_TURN_LEFT`) action names.
    pub fn render(&self, corpus_names: bool) -> String {
        let mut out = String::new();
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(if corpus_names { a.corpus_name() } else { a.as_str() });
        }
        out
    }
}

impl fmt::Display for ActionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl FromStr for ActionSequence {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(ActionToken::parse_name)
            .collect::<Result<Vec<_>, _>>()
            .map(ActionSequence)
    }
}
