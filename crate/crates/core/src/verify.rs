//! Standalone U-cycle verification.
//!
//! Only the class predicate and brute-force counting are used here; nothing
//! from the digraph or circuit code is involved.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::class::{validate_spec, ClassSpec};
use crate::counting::count_brute_force;
use crate::error::Result;
use crate::word::{check_letters, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    /// The window starting at `index` is not a class member.
    NotMember { index: usize, window: Word },
    /// The window starting at `index` already appeared at `first_index`.
    Duplicate { index: usize, first_index: usize, window: Word },
    /// Windows are fine but the cycle length differs from the class size.
    Length { expected: u64, actual: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub length_ok: bool,
    pub windows_all_members: bool,
    pub windows_distinct: bool,
    pub count_matches_class: bool,
    pub class_size: u64,
    pub cycle_length: usize,
    pub distinct_windows: usize,
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.length_ok && self.windows_all_members && self.windows_distinct && self.count_matches_class
    }
}

/// Checks that the cyclic windows of `cycle` list every class member exactly
/// once. Letters outside `[1, n]` are a contract error, not a failed check.
pub fn verify_ucycle(spec: &ClassSpec, cycle: &[Letter], budget: u64) -> Result<VerificationReport> {
    let spec = validate_spec(spec)?.spec;
    check_letters(cycle, spec.alphabet())?;
    let class_size = count_brute_force(&spec, budget)?;
    let m = spec.word_len();
    let len = cycle.len();

    let mut seen: HashMap<Vec<Letter>, usize> = HashMap::with_capacity(len);
    let mut scratch = Vec::new();
    let mut window = Vec::with_capacity(m);
    let mut all_members = true;
    let mut distinct = true;
    let mut first_failure = None;

    for i in 0..len {
        window.clear();
        window.extend((0..m).map(|j| cycle[(i + j) % len]));
        if !spec.member_letters(&window, &mut scratch) {
            all_members = false;
            first_failure
                .get_or_insert_with(|| Failure::NotMember { index: i, window: Word::from(&window[..]) });
        }
        match seen.get(&window) {
            Some(&first_index) => {
                distinct = false;
                first_failure.get_or_insert_with(|| Failure::Duplicate {
                    index: i,
                    first_index,
                    window: Word::from(&window[..]),
                });
            }
            None => {
                seen.insert(window.clone(), i);
            }
        }
    }

    let length_ok = len as u64 == class_size;
    let distinct_windows = seen.len();
    let count_matches_class = all_members && distinct_windows as u64 == class_size;
    if !length_ok || !count_matches_class {
        first_failure.get_or_insert(Failure::Length { expected: class_size, actual: len });
    }

    Ok(VerificationReport {
        length_ok,
        windows_all_members: all_members,
        windows_distinct: distinct,
        count_matches_class,
        class_size,
        cycle_length: len,
        distinct_windows,
        first_failure,
    })
}
