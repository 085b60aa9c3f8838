//! The `IN: <command> OUT: <actions>` line format used by SCAN corpus files.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::enumerate::Pair;
use crate::error::ScanError;
use crate::interp::execute;
use crate::token::{ActionSequence, Command};

/// Formats one pair as a corpus line. With `corpus_names` the actions use
/// the published `I_WALK` / `I_TURN_LEFT` spelling.
pub fn format_line(command: &Command, actions: &ActionSequence, corpus_names: bool) -> String {
    format!("IN: {} OUT: {}", command, actions.render(corpus_names))
}

/// Parses one corpus line. Accepts both action spellings.
pub fn parse_line(line: &str, line_no: usize) -> Result<Pair, ScanError> {
    let malformed = |reason: &str| ScanError::CorpusFormat {
        line: line_no,
        reason: reason.to_string(),
    };
    let rest = line.strip_prefix("IN: ").ok_or_else(|| malformed("missing IN: prefix"))?;
    let (cmd_text, act_text) = rest
        .split_once(" OUT: ")
        .ok_or_else(|| malformed("missing OUT: separator"))?;
    let command = Command::from_str(cmd_text)?;
    let actions = ActionSequence::from_str(act_text)?;
    Ok((command, actions))
}

pub fn write_pairs(path: &Path, pairs: &[Pair], corpus_names: bool) -> Result<(), ScanError> {
    let mut out = String::new();
    for (c, a) in pairs {
        out.push_str(&format_line(c, a, corpus_names));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn read_pairs(path: &Path) -> Result<Vec<Pair>, ScanError> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// Outcome of checking a reference corpus file against the interpreter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCheck {
    pub lines: usize,
    pub mismatches: Vec<usize>,
}

impl CorpusCheck {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Executes every command in a reference corpus file and compares against
/// its OUT field. Line numbers of mismatches are reported.
pub fn check_corpus(path: &Path) -> Result<CorpusCheck, ScanError> {
    let text = fs::read_to_string(path)?;
    let mut lines = 0;
    let mut mismatches = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        lines += 1;
        let (command, gold) = parse_line(line, i + 1)?;
        if execute(&command)? != gold {
            mismatches.push(i + 1);
        }
    }
    Ok(CorpusCheck { lines, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format_is_exact() {
        let c: Command = "jump around right twice".parse().unwrap();
        let a = execute(&c).unwrap();
        assert_eq!(
            format_line(&c, &a, false),
            "IN: jump around right twice OUT: RTURN JUMP RTURN JUMP RTURN JUMP RTURN JUMP \
             RTURN JUMP RTURN JUMP RTURN JUMP RTURN JUMP"
        );
        assert_eq!(
            format_line(&c, &execute(&"turn left".parse().unwrap()).unwrap(), true),
            "IN: jump around right twice OUT: I_TURN_LEFT"
        );
    }

    #[test]
    fn parse_line_round_trips_both_spellings() {
        let c: Command = "walk opposite left".parse().unwrap();
        let a = execute(&c).unwrap();
        for names in [false, true] {
            let line = format_line(&c, &a, names);
            assert_eq!(parse_line(&line, 1).unwrap(), (c.clone(), a.clone()));
        }
    }

    #[test]
    fn parse_line_rejects_malformed() {
        assert!(parse_line("jump OUT: JUMP", 1).is_err());
        assert!(parse_line("IN: jump JUMP", 1).is_err());
        assert!(parse_line("IN: jump OUT: FLY", 1).is_err());
    }
}
