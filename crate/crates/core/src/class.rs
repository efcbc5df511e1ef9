//! Restricted word classes: parameter validation, membership predicates and
//! exhaustive enumeration.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{check_letters, Letter, Word, MAX_ALPHABET};

/// Default cap on the number of candidate words `n^m` an enumeration may scan.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A restricted class of fixed-length words over `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ClassSpec {
    /// All `m`-letter words on `[n]`.
    Plain { m: u32, n: u32 },
    /// `k`-letter words on `[n]` with no repeated letter.
    Injection { k: u32, n: u32 },
    /// `k`-letter words on `[n]` using every letter.
    Surjection { k: u32, n: u32 },
    /// `n`-letter words on `[n]` missing exactly one letter.
    AlmostOnto { n: u32 },
    /// `n`-letter words on `[n]` missing at least one letter.
    NonBijection { n: u32 },
    /// `m`-letter words whose letter multiplicities differ pairwise by at most one.
    Equitable { m: u32, n: u32 },
    /// `m`-letter words whose letter multiplicities differ pairwise by at most `s`.
    SInequitable { m: u32, n: u32, s: u32 },
    /// Rankings with ties of `m` items, as `m`-letter words on `[m]`.
    Ranking { m: u32 },
    /// `m`-letter words on `[n]` containing at least one letter from each class.
    Password { m: u32, n: u32, classes: Vec<Vec<Letter>> },
}

impl ClassSpec {
    /// Length of the member words.
    pub fn word_len(&self) -> usize {
        use ClassSpec::*;
        (match *self {
            Plain { m, .. } | Equitable { m, .. } | SInequitable { m, .. } => m,
            Injection { k, .. } | Surjection { k, .. } => k,
            AlmostOnto { n } | NonBijection { n } => n,
            Ranking { m } | Password { m, .. } => m,
        }) as usize
    }

    /// Alphabet size `n`.
    pub fn alphabet(&self) -> u32 {
        use ClassSpec::*;
        match *self {
            Plain { n, .. }
            | Injection { n, .. }
            | Surjection { n, .. }
            | AlmostOnto { n }
            | NonBijection { n }
            | Equitable { n, .. }
            | SInequitable { n, .. }
            | Password { n, .. } => n,
            Ranking { m } => m,
        }
    }

    /// Length of the digraph vertices, `m - 1`.
    pub fn vertex_len(&self) -> usize {
        self.word_len() - 1
    }

    /// Kebab-case class name as used on the command line.
    pub fn name(&self) -> &'static str {
        use ClassSpec::*;
        match self {
            Plain { .. } => "plain",
            Injection { .. } => "injection",
            Surjection { .. } => "surjection",
            AlmostOnto { .. } => "almost-onto",
            NonBijection { .. } => "non-bijection",
            Equitable { .. } => "equitable",
            SInequitable { .. } => "s-inequitable",
            Ranking { .. } => "ranking",
            Password { .. } => "password",
        }
    }

    /// Membership test. Length or alphabet mismatches are errors, not `false`.
    pub fn is_member(&self, word: &Word) -> Result<bool> {
        is_member(self, word)
    }

    pub(crate) fn member_letters(&self, letters: &[Letter], scratch: &mut Vec<usize>) -> bool {
        let n = self.alphabet() as usize;
        scratch.clear();
        scratch.resize(n, 0);
        for &l in letters {
            scratch[l as usize - 1] += 1;
        }
        let counts = &scratch[..];
        use ClassSpec::*;
        match self {
            Plain { .. } => true,
            Injection { .. } => counts.iter().all(|&c| c <= 1),
            Surjection { .. } => counts.iter().all(|&c| c >= 1),
            AlmostOnto { .. } => counts.iter().filter(|&&c| c == 0).count() == 1,
            NonBijection { .. } => counts.contains(&0),
            Equitable { .. } => spread(counts) <= 1,
            SInequitable { s, .. } => spread(counts) <= *s as usize,
            Ranking { .. } => is_ranking_histogram(counts),
            Password { classes, .. } => classes
                .iter()
                .all(|class| class.iter().any(|&l| counts[l as usize - 1] > 0)),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ClassSpec::*;
        match self {
            Plain { m, n } => write!(f, "Plain{{m={m},n={n}}}"),
            Injection { k, n } => write!(f, "Injection{{k={k},n={n}}}"),
            Surjection { k, n } => write!(f, "Surjection{{k={k},n={n}}}"),
            AlmostOnto { n } => write!(f, "AlmostOnto{{n={n}}}"),
            NonBijection { n } => write!(f, "NonBijection{{n={n}}}"),
            Equitable { m, n } => write!(f, "Equitable{{m={m},n={n}}}"),
            SInequitable { m, n, s } => write!(f, "SInequitable{{m={m},n={n},s={s}}}"),
            Ranking { m } => write!(f, "Ranking{{m={m}}}"),
            Password { m, n, classes } => {
                write!(f, "Password{{m={m},n={n},classes=\"{}\"}}", format_classes(classes))
            }
        }
    }
}

fn spread(counts: &[usize]) -> usize {
    let max = counts.iter().copied().max().unwrap_or(0);
    let min = counts.iter().copied().min().unwrap_or(0);
    max - min
}

/// A histogram over `[n]` is a ranking iff its smallest used letter is 1 and
/// each further distinct letter equals the previous one plus its multiplicity.
pub(crate) fn is_ranking_histogram(counts: &[usize]) -> bool {
    let mut expected = 1usize;
    let mut seen_any = false;
    for (i, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let letter = i + 1;
        if letter != expected {
            return false;
        }
        expected = letter + c;
        seen_any = true;
    }
    seen_any
}

/// Formats password classes as semicolon-separated comma lists, e.g. `1,2;3`.
pub fn format_classes(classes: &[Vec<Letter>]) -> String {
    classes
        .iter()
        .map(|c| c.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// Parses `"1,2;3"` into `[[1, 2], [3]]`.
pub fn parse_classes(text: &str) -> Result<Vec<Vec<Letter>>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty class list".into()));
    }
    text.split(';')
        .map(|group| {
            let group = group.trim();
            if group.is_empty() {
                return Err(Error::Parse(format!("empty class in {text:?}")));
            }
            group
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<Letter>()
                        .map_err(|e| Error::Parse(format!("bad letter {tok:?} in classes: {e}")))
                })
                .collect()
        })
        .collect()
}

/// Three-valued existence expectation derived from known existence results. Used
/// only to cross-check computed diagnoses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    ExpectedYes,
    ExpectedNo,
    Unknown,
}

/// Derived quantities of an equitable-type class: `m = r*n + k`, `0 <= k < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitableParams {
    pub k: u32,
    pub r: u32,
}

impl EquitableParams {
    pub fn of(m: u32, n: u32) -> Self {
        EquitableParams { k: m % n, r: m / n }
    }
}

/// A validated class together with its derived quantities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedSpec {
    pub spec: ClassSpec,
    pub word_len: usize,
    pub alphabet: u32,
    /// `M = m - 1`.
    pub vertex_len: usize,
    pub equitable: Option<EquitableParams>,
    pub expectation: Expectation,
    pub note: String,
}

/// Validates parameters, normalizes password classes (sorted, deduplicated)
/// and attaches the existence expectation.
pub fn validate_spec(spec: &ClassSpec) -> Result<NormalizedSpec> {
    use ClassSpec::*;
    use Expectation::*;

    let positive = |name: &str, v: u32| {
        if v == 0 {
            Err(Error::InvalidSpec(format!("{name} must be positive")))
        } else {
            Ok(())
        }
    };
    let alphabet_ok = |n: u32| {
        if n > MAX_ALPHABET {
            Err(Error::InvalidSpec(format!("alphabet size {n} exceeds {MAX_ALPHABET}")))
        } else {
            Ok(())
        }
    };

    let name = spec.name();
    let mut spec = spec.clone();
    let mut equitable = None;
    let (expectation, note): (Expectation, String) = match &mut spec {
        Plain { m, n } => {
            positive("m", *m)?;
            positive("n", *n)?;
            alphabet_ok(*n)?;
            (ExpectedYes, "all words: full de Bruijn digraph".into())
        }
        Injection { k, n } => {
            positive("k", *k)?;
            positive("n", *n)?;
            alphabet_ok(*n)?;
            if k > n {
                return Err(Error::EmptyClass(format!("injection needs k <= n, got k={k}, n={n}")));
            }
            permutation_like(*k < *n, *n, "injections exist iff n > k")
        }
        Surjection { k, n } => {
            positive("k", *k)?;
            positive("n", *n)?;
            alphabet_ok(*n)?;
            if k < n {
                return Err(Error::EmptyClass(format!("surjection needs k >= n, got k={k}, n={n}")));
            }
            permutation_like(*k > *n, *n, "surjections exist iff k > n")
        }
        AlmostOnto { n } | NonBijection { n } => {
            positive("n", *n)?;
            alphabet_ok(*n)?;
            if *n < 2 {
                return Err(Error::EmptyClass(format!("no {name} words for n={n}")));
            }
            if *n >= 3 {
                (ExpectedYes, "exists for n >= 3".into())
            } else {
                (Unknown, "n = 2 lies outside the n >= 3 range".into())
            }
        }
        Equitable { m, n } => {
            positive("m", *m)?;
            positive("n", *n)?;
            alphabet_ok(*n)?;
            let params = EquitableParams::of(*m, *n);
            equitable = Some(params);
            equitable_expectation(*m, *n)
        }
        SInequitable { m, n, s } => {
            positive("m", *m)?;
            positive("n", *n)?;
            positive("s", *s)?;
            alphabet_ok(*n)?;
            equitable = Some(EquitableParams::of(*m, *n));
            if *s == 1 {
                equitable_expectation(*m, *n)
            } else if *s >= *m || *n == 1 {
                (ExpectedYes, "every word qualifies: plain de Bruijn case".into())
            } else if *m % *n != 0 {
                (ExpectedYes, "exists when m is not a multiple of n".into())
            } else {
                (Unknown, "m is a multiple of n".into())
            }
        }
        Ranking { m } => {
            positive("m", *m)?;
            alphabet_ok(*m)?;
            (ExpectedYes, "rankings admit a U-cycle for every m".into())
        }
        Password { m, n, classes } => {
            positive("m", *m)?;
            positive("n", *n)?;
            alphabet_ok(*n)?;
            if classes.is_empty() {
                return Err(Error::InvalidSpec("password needs at least one class".into()));
            }
            let q = classes.len() as u32;
            if q >= *n {
                return Err(Error::InvalidSpec(format!("password needs q < n, got q={q}, n={n}")));
            }
            for class in classes.iter_mut() {
                if class.is_empty() {
                    return Err(Error::InvalidSpec("password class is empty".into()));
                }
                check_letters(class, *n).map_err(|e| Error::InvalidSpec(e.to_string()))?;
                class.sort_unstable();
                class.dedup();
            }
            if *m >= 2 * q {
                (ExpectedYes, "exists when m >= 2q".into())
            } else {
                (Unknown, "m < 2q".into())
            }
        }
    };

    if let Password { .. } = spec {
        if crate::counting::count_closed_form(&spec)?.is_some_and(|c| c.is_zero()) {
            return Err(Error::EmptyClass(format!("no word of {spec} meets every class")));
        }
    }

    Ok(NormalizedSpec {
        word_len: spec.word_len(),
        alphabet: spec.alphabet(),
        vertex_len: spec.word_len() - 1,
        equitable,
        expectation,
        note,
        spec,
    })
}

// Injections with k = n and surjections with k = n are both the permutations
// of [n]; those are connected only for n <= 2.
fn permutation_like(strict: bool, n: u32, rule: &str) -> (Expectation, String) {
    if strict {
        (Expectation::ExpectedYes, rule.into())
    } else if n <= 2 {
        (Expectation::ExpectedYes, format!("{rule}; n <= 2 is a trivial exception"))
    } else {
        (Expectation::ExpectedNo, format!("{rule}; permutations of [n] split into disjoint cycles"))
    }
}

fn equitable_expectation(m: u32, n: u32) -> (Expectation, String) {
    if !m.is_multiple_of(n) {
        (Expectation::ExpectedYes, format!("m mod n = {} is nonzero", m % n))
    } else if n == 1 || (m == 2 && n == 2) {
        (Expectation::ExpectedYes, "degenerate single-cycle case".into())
    } else {
        (Expectation::ExpectedNo, "m = 0 mod n forces disjoint cycles".into())
    }
}

/// Membership test with contract checks on length and alphabet.
pub fn is_member(spec: &ClassSpec, word: &Word) -> Result<bool> {
    if word.len() != spec.word_len() {
        return Err(Error::LengthMismatch { expected: spec.word_len(), actual: word.len() });
    }
    word.check_alphabet(spec.alphabet())?;
    let mut scratch = Vec::new();
    Ok(spec.member_letters(word.letters(), &mut scratch))
}

/// Number of candidate words `n^m`.
pub fn candidate_count(spec: &ClassSpec) -> BigUint {
    BigUint::from(spec.alphabet()).pow(spec.word_len() as u32)
}

/// Fails unless `n^m` fits within `budget`.
pub fn check_budget(spec: &ClassSpec, budget: u64) -> Result<u64> {
    let candidates = candidate_count(spec);
    match candidates.to_u64() {
        Some(c) if c <= budget => Ok(c),
        _ => Err(Error::BudgetExceeded {
            candidates: format!("{}^{} = {}", spec.alphabet(), spec.word_len(), candidates),
            budget,
        }),
    }
}

/// Visits every member of the class in lexicographic order.
pub fn for_each_member(
    spec: &ClassSpec,
    budget: u64,
    mut visit: impl FnMut(&[Letter]),
) -> Result<()> {
    check_budget(spec, budget)?;
    let n = spec.alphabet() as Letter;
    let m = spec.word_len();
    let mut word: Vec<Letter> = vec![1; m];
    let mut scratch = Vec::with_capacity(n as usize);
    loop {
        if spec.member_letters(&word, &mut scratch) {
            visit(&word);
        }
        // odometer increment, rightmost letter fastest
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if word[pos] < n {
                word[pos] += 1;
                break;
            }
            word[pos] = 1;
        }
    }
}

/// All members of the class, sorted lexicographically and duplicate-free.
pub fn enumerate_class(spec: &ClassSpec, budget: u64) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for_each_member(spec, budget, |w| out.push(Word::from(w)))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        let e = validate_spec(&ClassSpec::Equitable { m: 7, n: 3 }).unwrap();
        assert_eq!(e.vertex_len, 6);
        assert_eq!(e.equitable, Some(EquitableParams { k: 1, r: 2 }));
        assert_eq!(e.expectation, Expectation::ExpectedYes);

        let e = validate_spec(&ClassSpec::Equitable { m: 6, n: 3 }).unwrap();
        assert_eq!(e.expectation, Expectation::ExpectedNo);

        let e = validate_spec(&ClassSpec::Injection { k: 3, n: 3 }).unwrap();
        assert_eq!(e.expectation, Expectation::ExpectedNo);
    }

    #[test]
    fn validate_rejects_empty_and_malformed() {
        assert!(matches!(
            validate_spec(&ClassSpec::Injection { k: 4, n: 3 }),
            Err(Error::EmptyClass(_))
        ));
        assert!(matches!(
            validate_spec(&ClassSpec::Surjection { k: 2, n: 3 }),
            Err(Error::EmptyClass(_))
        ));
        assert!(matches!(validate_spec(&ClassSpec::AlmostOnto { n: 1 }), Err(Error::EmptyClass(_))));
        assert!(matches!(
            validate_spec(&ClassSpec::Password { m: 3, n: 3, classes: vec![vec![1], vec![2], vec![3]] }),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            validate_spec(&ClassSpec::Password { m: 3, n: 3, classes: vec![] }),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            validate_spec(&ClassSpec::Password { m: 3, n: 3, classes: vec![vec![]] }),
            Err(Error::InvalidSpec(_))
        ));
        // two disjoint classes cannot both be hit by a single letter
        assert!(matches!(
            validate_spec(&ClassSpec::Password { m: 1, n: 3, classes: vec![vec![1], vec![2]] }),
            Err(Error::EmptyClass(_))
        ));
        assert!(validate_spec(&ClassSpec::Plain { m: 0, n: 2 }).is_err());
        assert!(validate_spec(&ClassSpec::SInequitable { m: 3, n: 2, s: 0 }).is_err());
    }

    #[test]
    fn password_classes_are_normalized() {
        let spec = ClassSpec::Password { m: 4, n: 4, classes: vec![vec![2, 1, 2], vec![3]] };
        let norm = validate_spec(&spec).unwrap();
        assert_eq!(
            norm.spec,
            ClassSpec::Password { m: 4, n: 4, classes: vec![vec![1, 2], vec![3]] }
        );
        assert_eq!(norm.expectation, Expectation::ExpectedYes);
    }

    #[test]
    fn membership_examples() {
        let ranking = ClassSpec::Ranking { m: 3 };
        assert!(is_member(&ranking, &w("113")).unwrap());
        assert!(!is_member(&ranking, &w("112")).unwrap());

        let eq = ClassSpec::Equitable { m: 6, n: 3 };
        assert!(is_member(&eq, &w("112233")).unwrap());
        assert!(!is_member(&eq, &w("111223")).unwrap());

        let ao = ClassSpec::AlmostOnto { n: 5 };
        assert!(is_member(&ao, &w("11234")).unwrap());
        assert!(!is_member(&ao, &w("11223")).unwrap());

        let pw = ClassSpec::Password { m: 4, n: 4, classes: vec![vec![1, 2], vec![3]] };
        assert!(is_member(&pw, &w("2344")).unwrap());
        assert!(!is_member(&pw, &w("1244")).unwrap());
    }

    #[test]
    fn membership_contract_errors() {
        let ranking = ClassSpec::Ranking { m: 3 };
        assert!(matches!(
            is_member(&ranking, &w("11")),
            Err(Error::LengthMismatch { expected: 3, actual: 2 })
        ));
        assert!(matches!(is_member(&ranking, &w("114")), Err(Error::LetterOutOfRange { .. })));
    }

    #[test]
    fn enumeration_examples() {
        let mut listed: Vec<Word> = "111 122 221 212 113 311 131 123 312 231 321 132 213"
            .split(' ')
            .map(w)
            .collect();
        listed.sort();
        assert_eq!(enumerate_class(&ClassSpec::Ranking { m: 3 }, DEFAULT_BUDGET).unwrap(), listed);

        assert_eq!(
            enumerate_class(&ClassSpec::Plain { m: 1, n: 2 }, DEFAULT_BUDGET).unwrap(),
            vec![w("1"), w("2")]
        );
        assert_eq!(
            enumerate_class(&ClassSpec::Equitable { m: 6, n: 3 }, DEFAULT_BUDGET)
                .unwrap()
                .len(),
            90
        );
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let err = enumerate_class(&ClassSpec::Plain { m: 10, n: 10 }, DEFAULT_BUDGET).unwrap_err();
        match err {
            Error::BudgetExceeded { candidates, budget } => {
                assert!(candidates.contains("10^10"));
                assert_eq!(budget, DEFAULT_BUDGET);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn class_parsing() {
        assert_eq!(parse_classes("1,2;3").unwrap(), vec![vec![1, 2], vec![3]]);
        assert!(parse_classes("1,2;;3").is_err());
        assert!(parse_classes("1,x").is_err());
        assert_eq!(format_classes(&[vec![1, 2], vec![3]]), "1,2;3");
    }
}
