//! Train/test split builders over the enumerated command space.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus;
use crate::enumerate::Pair;
use crate::error::ScanError;
use crate::token::CommandToken;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitKind {
    Random,
    Jump,
    AroundRight,
    TurnLeft,
    Length,
}

impl SplitKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitKind::Random => "random",
            SplitKind::Jump => "jump",
            SplitKind::AroundRight => "around-right",
            SplitKind::TurnLeft => "turn-left",
            SplitKind::Length => "length",
        }
    }
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplitKind {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(SplitKind::Random),
            "jump" => Ok(SplitKind::Jump),
            "around-right" => Ok(SplitKind::AroundRight),
            "turn-left" => Ok(SplitKind::TurnLeft),
            "length" => Ok(SplitKind::Length),
            other => Err(ScanError::UnknownCommandWord(format!("split kind {other:?}"))),
        }
    }
}

/// A named train/test partition of command/action pairs.
#[derive(Debug, Clone)]
pub struct DatasetSplit {
    pub kind: SplitKind,
    /// Shuffle seed; only the random split uses one.
    pub seed: Option<u64>,
    pub train: Vec<Pair>,
    pub test: Vec<Pair>,
}

impl DatasetSplit {
    /// Hash over every train and test line; identifies the split contents
    /// independent of file paths.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for (section, pairs) in [("train", &self.train), ("test", &self.test)] {
            hasher.update(section.as_bytes());
            for (c, a) in pairs.iter() {
                hasher.update(corpus::format_line(c, a, false).as_bytes());
                hasher.update(b"\n");
            }
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Uniform random partition of the distinct commands. `|train|` is
/// `train_fraction * total`, rounded half-up.
pub fn build_random(pairs: &[Pair], seed: u64, train_fraction: f64) -> Result<DatasetSplit, ScanError> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(ScanError::InvalidTrainFraction(train_fraction));
    }
    let n_train = (train_fraction * pairs.len() as f64 + 0.5).floor() as usize;
    let mut indices: Vec<usize> = (0..pairs.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    indices.shuffle(&mut rng);
    let train = indices[..n_train].iter().map(|&i| pairs[i].clone()).collect();
    let test = indices[n_train..].iter().map(|&i| pairs[i].clone()).collect();
    Ok(DatasetSplit { kind: SplitKind::Random, seed: Some(seed), train, test })
}

/// `jump` is seen only in isolation during training; every composite command
/// containing `jump` is held out.
pub fn build_jump(pairs: &[Pair]) -> DatasetSplit {
    let (mut train, mut test) = (Vec::new(), Vec::new());
    for pair in pairs {
        let has_jump = pair.0.contains(CommandToken::Jump);
        let is_bare_jump = pair.0.tokens() == [CommandToken::Jump];
        if has_jump && !is_bare_jump {
            test.push(pair.clone());
        } else {
            train.push(pair.clone());
        }
    }
    DatasetSplit { kind: SplitKind::Jump, seed: None, train, test }
}

/// Every command containing the adjacent bigram `around right` is held out;
/// `around` and `right` still occur separately in training.
pub fn build_around_right(pairs: &[Pair]) -> DatasetSplit {
    build_bigram_holdout(pairs, SplitKind::AroundRight, CommandToken::Around, CommandToken::Right)
}

/// Every command containing the adjacent bigram `turn left` is held out.
pub fn build_turn_left(pairs: &[Pair]) -> DatasetSplit {
    build_bigram_holdout(pairs, SplitKind::TurnLeft, CommandToken::Turn, CommandToken::Left)
}

fn build_bigram_holdout(
    pairs: &[Pair],
    kind: SplitKind,
    first: CommandToken,
    second: CommandToken,
) -> DatasetSplit {
    let (mut train, mut test) = (Vec::new(), Vec::new());
    for pair in pairs {
        if pair.0.contains_bigram(first, second) {
            test.push(pair.clone());
        } else {
            train.push(pair.clone());
        }
    }
    DatasetSplit { kind, seed: None, train, test }
}

/// Partition by gold action length: training pairs have at most
/// `max_train_actions` actions, test pairs have more.
pub fn build_length(pairs: &[Pair], max_train_actions: usize) -> Result<DatasetSplit, ScanError> {
    let (mut train, mut test) = (Vec::new(), Vec::new());
    for pair in pairs {
        if pair.1.len() <= max_train_actions {
            train.push(pair.clone());
        } else {
            test.push(pair.clone());
        }
    }
    if train.is_empty() || test.is_empty() {
        return Err(ScanError::DegenerateSplit(format!(
            "max_train_actions={max_train_actions} leaves train={} test={}",
            train.len(),
            test.len()
        )));
    }
    Ok(DatasetSplit { kind: SplitKind::Length, seed: None, train, test })
}

/// Default action-length threshold for the length split.
pub const DEFAULT_MAX_TRAIN_ACTIONS: usize = 22;

/// Default train fraction for the random split.
pub const DEFAULT_TRAIN_FRACTION: f64 = 0.8;

/// Sidecar metadata written next to the split files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplitManifest {
    pub name: SplitKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub train_size: usize,
    pub test_size: usize,
    pub content_hash: String,
}

/// Written file locations for one split.
#[derive(Debug, Clone)]
pub struct SplitFiles {
    pub train: PathBuf,
    pub test: PathBuf,
    pub manifest: PathBuf,
}

/// Writes `<name>.train.txt`, `<name>.test.txt` and a JSON sidecar into
/// `dir`.
pub fn write_split(split: &DatasetSplit, dir: &Path, corpus_names: bool) -> Result<SplitFiles, ScanError> {
    fs::create_dir_all(dir)?;
    let name = split.kind.as_str();
    let files = SplitFiles {
        train: dir.join(format!("{name}.train.txt")),
        test: dir.join(format!("{name}.test.txt")),
        manifest: dir.join(format!("{name}.json")),
    };
    corpus::write_pairs(&files.train, &split.train, corpus_names)?;
    corpus::write_pairs(&files.test, &split.test, corpus_names)?;
    let manifest = SplitManifest {
        name: split.kind,
        seed: split.seed,
        train_size: split.train.len(),
        test_size: split.test.len(),
        content_hash: split.content_hash(),
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(&files.manifest, json + "\n")?;
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_all;
    use crate::token::Command;
    use std::collections::HashSet;
    use std::str::FromStr;

    fn pairs() -> Vec<Pair> {
        enumerate_all()
    }

    fn commands(side: &[Pair]) -> HashSet<Command> {
        side.iter().map(|(c, _)| c.clone()).collect()
    }

    fn assert_partition(split: &DatasetSplit, total: usize) {
        let train = commands(&split.train);
        let test = commands(&split.test);
        assert!(train.is_disjoint(&test));
        assert_eq!(train.len() + test.len(), total);
    }

    #[test]
    fn random_split_sizes_and_determinism() {
        let all = pairs();
        let a = build_random(&all, 7, 0.8).unwrap();
        assert_eq!(a.train.len(), 16_728);
        assert_eq!(a.test.len(), 4_182);
        assert_partition(&a, all.len());

        let b = build_random(&all, 7, 0.8).unwrap();
        assert_eq!(a.train, b.train);
        assert_eq!(a.test, b.test);

        let c = build_random(&all, 8, 0.8).unwrap();
        assert_eq!(c.train.len(), a.train.len());
        assert_ne!(commands(&a.train), commands(&c.train));
    }

    #[test]
    fn random_split_rejects_bad_fraction() {
        let all = pairs();
        assert!(build_random(&all, 0, 0.0).is_err());
        assert!(build_random(&all, 0, 1.0).is_err());
    }

    #[test]
    fn jump_split_counts_and_membership() {
        let all = pairs();
        let split = build_jump(&all);
        assert_eq!(split.test.len(), 7_706);
        assert_eq!(split.train.len(), 13_204);
        assert_partition(&split, all.len());

        let test = commands(&split.test);
        let train = commands(&split.train);
        assert!(test.contains(&Command::from_str("turn left twice after jump").unwrap()));
        assert!(train.contains(&Command::from_str("turn left twice after look").unwrap()));
        assert!(train.contains(&Command::from_str("jump").unwrap()));

        // Only the bare primitive mentions `jump` on the training side.
        for (c, _) in &split.train {
            if c.contains(CommandToken::Jump) {
                assert_eq!(c.tokens(), [CommandToken::Jump]);
            }
        }
    }

    #[test]
    fn around_right_split_counts_and_membership() {
        let all = pairs();
        let split = build_around_right(&all);
        assert_eq!(split.test.len(), 5_685);
        assert_partition(&split, all.len());

        let test = commands(&split.test);
        let train = commands(&split.train);
        assert!(test.contains(&Command::from_str("walk around right").unwrap()));
        assert!(train.contains(&Command::from_str("jump around left").unwrap()));
        assert!(train.contains(&Command::from_str("turn opposite right twice").unwrap()));

        for (c, _) in &split.train {
            assert!(!c.contains_bigram(CommandToken::Around, CommandToken::Right));
        }
        for (c, _) in &split.test {
            assert!(c.contains_bigram(CommandToken::Around, CommandToken::Right));
        }
    }

    #[test]
    fn turn_left_split_membership() {
        let all = pairs();
        let split = build_turn_left(&all);
        assert_partition(&split, all.len());
        let test = commands(&split.test);
        let train = commands(&split.train);
        assert!(test.contains(&Command::from_str("turn left").unwrap()));
        assert!(train.contains(&Command::from_str("walk left").unwrap()));
        assert_eq!(split.test.len(), 1_209);
    }

    #[test]
    fn length_split_thresholds() {
        let all = pairs();
        let split = build_length(&all, 22).unwrap();
        assert_partition(&split, all.len());
        assert!(split.test.iter().all(|(_, a)| a.len() >= 24));

        assert!(build_length(&all, 48).is_err());

        let tiny = build_length(&all, 1).unwrap();
        assert_eq!(tiny.train.len(), 6);
        assert!(tiny.train.iter().all(|(_, a)| a.len() == 1));
    }

    #[test]
    fn split_files_round_trip() {
        let all = pairs();
        let split = build_length(&all, 1).unwrap();
        let dir = std::env::temp_dir().join(format!("scan-split-{}", std::process::id()));
        let files = write_split(&split, &dir, false).unwrap();
        let train = corpus::read_pairs(&files.train).unwrap();
        assert_eq!(train, split.train);
        let manifest: SplitManifest =
            serde_json::from_str(&std::fs::read_to_string(&files.manifest).unwrap()).unwrap();
        assert_eq!(manifest.train_size, 6);
        assert_eq!(manifest.content_hash, split.content_hash());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
