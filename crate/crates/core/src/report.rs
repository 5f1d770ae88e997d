//! Structured results of acceptor-versus-oracle comparisons.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of comparing an acceptor's enumeration against an independently
/// computed set of words, up to a fixed depth.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    /// Which language was checked, e.g. `vertices`, `pairs`, `edge:a`.
    pub language: String,
    pub depth: usize,
    /// Words produced by both sides.
    pub agreements: usize,
    /// Words only the oracle produced.
    pub oracle_only: usize,
    /// Words only the acceptor produced.
    pub acceptor_only: usize,
    /// Up to ten rendered disagreements, oracle-only first.
    pub mismatch_sample: Vec<String>,
    pub pass: bool,
}

impl VerificationReport {
    /// Builds a report from two sorted, deduplicated word lists rendered as
    /// strings.
    pub fn from_sets(
        language: &str,
        depth: usize,
        oracle: &[String],
        acceptor: &[String],
    ) -> Self {
        let mut agreements = 0;
        let mut oracle_only = Vec::new();
        let mut acceptor_only = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < oracle.len() && j < acceptor.len() {
            match oracle[i].cmp(&acceptor[j]) {
                std::cmp::Ordering::Equal => {
                    agreements += 1;
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    oracle_only.push(oracle[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    acceptor_only.push(acceptor[j].clone());
                    j += 1;
                }
            }
        }
        oracle_only.extend_from_slice(&oracle[i..]);
        acceptor_only.extend_from_slice(&acceptor[j..]);
        let pass = oracle_only.is_empty() && acceptor_only.is_empty();
        let mut mismatch_sample: Vec<String> = oracle_only
            .iter()
            .map(|w| format!("oracle-only: {w}"))
            .chain(acceptor_only.iter().map(|w| format!("acceptor-only: {w}")))
            .collect();
        mismatch_sample.truncate(10);
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            language: language.to_string(),
            depth,
            agreements,
            oracle_only: oracle_only.len(),
            acceptor_only: acceptor_only.len(),
            mismatch_sample,
            pass,
        }
    }
}
