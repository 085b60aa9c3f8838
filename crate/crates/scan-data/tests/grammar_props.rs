//! Whole-language properties: round-trips, totality, and the composition
//! laws checked over randomly sampled subcommands.

use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scan_data::enumerate::{all_phrases, enumerate_all};
use scan_data::grammar::parse;
use scan_data::interp::{execute, interpret};
use scan_data::token::{Command, CommandToken};

#[test]
fn parse_render_round_trip_over_full_enumeration() {
    for (command, _) in enumerate_all() {
        let tree = parse(command.tokens()).expect("enumerated command parses");
        assert_eq!(tree.render(), command);
    }
}

#[test]
fn execute_total_on_enumeration() {
    for (command, gold) in enumerate_all() {
        assert_eq!(execute(&command).unwrap(), gold);
    }
}

/// The laws `x twice = x x`, `x thrice = x x x`, `x1 and x2 = x1 x2`,
/// `x1 after x2 = x2 x1`, exercised on randomly drawn verb phrases.
#[test]
fn composition_laws_hold_on_sampled_subcommands() {
    let phrases = all_phrases();
    let verb_phrases: Vec<_> = phrases
        .iter()
        .filter(|p| p.repetition == scan_data::grammar::Repetition::One)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(17);

    for _ in 0..1_000 {
        let vp = **verb_phrases.choose(&mut rng).unwrap();
        let base_tokens = vp.verb_phrase.tokens();
        let base = execute(&Command(base_tokens.clone())).unwrap();

        let mut twice_tokens = base_tokens.clone();
        twice_tokens.push(CommandToken::Twice);
        let twice = execute(&Command(twice_tokens)).unwrap();
        assert_eq!(twice.0, [base.0.clone(), base.0.clone()].concat());

        let mut thrice_tokens = base_tokens.clone();
        thrice_tokens.push(CommandToken::Thrice);
        let thrice = execute(&Command(thrice_tokens)).unwrap();
        assert_eq!(thrice.0, [base.0.clone(), base.0.clone(), base.0.clone()].concat());

        let s1 = *phrases.choose(&mut rng).unwrap();
        let s2 = *phrases.choose(&mut rng).unwrap();
        let e1 = interpret(&scan_data::grammar::ParseTree::Single(s1));
        let e2 = interpret(&scan_data::grammar::ParseTree::Single(s2));

        let mut and_tokens = s1.tokens();
        and_tokens.push(CommandToken::And);
        and_tokens.extend(s2.tokens());
        let and_result = execute(&Command(and_tokens)).unwrap();
        assert_eq!(and_result.0, [e1.0.clone(), e2.0.clone()].concat());

        let mut after_tokens = s1.tokens();
        after_tokens.push(CommandToken::After);
        after_tokens.extend(s2.tokens());
        let after_result = execute(&Command(after_tokens)).unwrap();
        assert_eq!(after_result.0, [e2.0, e1.0].concat());
    }
}

#[test]
fn generated_corpus_checks_clean() {
    let dir = std::env::temp_dir().join(format!("scan-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sample.txt");
    let pairs: Vec<_> = enumerate_all().into_iter().step_by(97).collect();
    scan_data::corpus::write_pairs(&path, &pairs, true).unwrap();
    let check = scan_data::corpus::check_corpus(&path).unwrap();
    assert_eq!(check.lines, pairs.len());
    assert!(check.all_match());
    std::fs::remove_dir_all(&dir).unwrap();
}

/// A reference-style fixture in the published spelling, with gold sequences
/// worked out by hand from the composition rules.
#[test]
fn hand_written_reference_lines_match() {
    let fixture = "\
IN: jump OUT: I_JUMP
IN: walk opposite left OUT: I_TURN_LEFT I_TURN_LEFT I_WALK
IN: turn left twice and look OUT: I_TURN_LEFT I_TURN_LEFT I_LOOK
IN: turn left twice after jump OUT: I_JUMP I_TURN_LEFT I_TURN_LEFT
IN: run twice and jump OUT: I_RUN I_RUN I_JUMP
IN: look around right and jump left OUT: I_TURN_RIGHT I_LOOK I_TURN_RIGHT I_LOOK I_TURN_RIGHT I_LOOK I_TURN_RIGHT I_LOOK I_TURN_LEFT I_JUMP
IN: turn opposite right twice OUT: I_TURN_RIGHT I_TURN_RIGHT I_TURN_RIGHT I_TURN_RIGHT
IN: jump around left OUT: I_TURN_LEFT I_JUMP I_TURN_LEFT I_JUMP I_TURN_LEFT I_JUMP I_TURN_LEFT I_JUMP
";
    let dir = std::env::temp_dir().join(format!("scan-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reference.txt");
    std::fs::write(&path, fixture).unwrap();
    let check = scan_data::corpus::check_corpus(&path).unwrap();
    assert_eq!(check.lines, 8);
    assert!(check.all_match(), "mismatched lines: {:?}", check.mismatches);
    std::fs::remove_dir_all(&dir).unwrap();
}
