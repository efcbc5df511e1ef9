//! Explicit connectivity witnesses.
//!
//! A witness path is a sequence of `(m-1)`-letter vertices in which each
//! consecutive pair overlaps in `m-2` letters and spells a class member.
//! The constructions here (lag cycling, status swaps, position swaps and the
//! ranking collapse) produce such paths directly from a vertex, without
//! building the digraph, and `validate_path` checks them edge by edge.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::class::{is_ranking_histogram, ClassSpec, EquitableParams};
use crate::digraph::TransitionDigraph;
use crate::error::{Error, Result};
use crate::word::{check_letters, histogram_unchecked, parse_letters, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    pub class: ClassSpec,
    pub vertices: Vec<Word>,
}

impl WitnessPath {
    pub fn single(class: &ClassSpec, vertex: Word) -> Self {
        WitnessPath { class: class.clone(), vertices: vec![vertex] }
    }

    pub fn start(&self) -> &Word {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Word {
        self.vertices.last().expect("witness paths are non-empty")
    }

    /// Number of edges traversed.
    pub fn transitions(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// The implied edge words, one per transition.
    pub fn edge_words(&self) -> Vec<Word> {
        self.vertices
            .windows(2)
            .map(|p| {
                let mut w = p[0].0.clone();
                w.extend(p[1].0.last().copied());
                Word(w)
            })
            .collect()
    }

    /// One vertex per line.
    pub fn to_text(&self) -> String {
        let n = self.class.alphabet();
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "{}", v.render(n));
        }
        out
    }

    /// Parses the one-vertex-per-line format. Blank lines are skipped.
    pub fn from_text(class: &ClassSpec, text: &str) -> Result<Self> {
        let vertices = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_letters(l).map(Word))
            .collect::<Result<Vec<_>>>()?;
        if vertices.is_empty() {
            return Err(Error::Parse("path has no vertices".into()));
        }
        Ok(WitnessPath { class: class.clone(), vertices })
    }

    fn append(&mut self, mut tail: WitnessPath) {
        debug_assert_eq!(self.end(), tail.start());
        self.vertices.extend(tail.vertices.drain(1..));
    }
}

/// Path through the windows of `start` followed by `appended`: each step
/// drops the first letter and appends the next letter of `appended`.
fn stream_path(class: &ClassSpec, start: &[Letter], appended: &[Letter]) -> WitnessPath {
    let len = start.len();
    let mut seq = start.to_vec();
    seq.extend_from_slice(appended);
    let vertices = (0..=appended.len()).map(|t| Word::from(&seq[t..t + len])).collect();
    WitnessPath { class: class.clone(), vertices }
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PathDefect {
    /// Vertex at `index` does not have `m - 1` letters.
    WrongLength { index: usize, expected: usize, actual: usize },
    /// Vertex at `index` uses a letter outside the alphabet.
    BadLetter { index: usize, letter: u32 },
    /// Transition `index -> index + 1` breaks the `m - 2` letter overlap.
    Overlap { index: usize },
    /// Transition `index -> index + 1` spells a word outside the class.
    NotMember { index: usize, word: Word },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCheck {
    pub valid: bool,
    pub first_bad: Option<PathDefect>,
}

/// Checks every vertex and every transition of a path.
pub fn validate_path(class: &ClassSpec, path: &WitnessPath) -> PathCheck {
    let fail = |d| PathCheck { valid: false, first_bad: Some(d) };
    let vlen = class.vertex_len();
    let n = class.alphabet();
    for (index, v) in path.vertices.iter().enumerate() {
        if v.len() != vlen {
            return fail(PathDefect::WrongLength { index, expected: vlen, actual: v.len() });
        }
        if let Err(Error::LetterOutOfRange { letter, .. }) = check_letters(v.letters(), n) {
            return fail(PathDefect::BadLetter { index, letter });
        }
    }
    let mut scratch = Vec::new();
    for (index, pair) in path.vertices.windows(2).enumerate() {
        let (a, b) = (pair[0].letters(), pair[1].letters());
        if vlen > 0 && a[1..] != b[..vlen - 1] {
            return fail(PathDefect::Overlap { index });
        }
        let mut word = a.to_vec();
        word.extend(b.last().copied());
        if vlen == 0 {
            // the empty vertex carries no letter to append; such paths only loop
            continue;
        }
        if !class.member_letters(&word, &mut scratch) {
            return fail(PathDefect::NotMember { index, word: Word(word) });
        }
    }
    PathCheck { valid: true, first_bad: None }
}

// ---------------------------------------------------------------------------
// Letter status for equitable classes

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LetterStatus {
    /// `r - 1` occurrences.
    Deficient,
    /// `r` occurrences.
    Normal,
    /// `r + 1` occurrences.
    Super,
    /// Any other multiplicity; never occurs in a class vertex.
    Other,
}

struct EquitableVertex {
    class: ClassSpec,
    n: u32,
    params: EquitableParams,
    letters: Vec<Letter>,
    counts: Vec<usize>,
}

impl EquitableVertex {
    fn new(class: &ClassSpec, vertex: &Word) -> Result<Self> {
        let ClassSpec::Equitable { m, n } = *class else {
            return Err(Error::Unsupported(format!("{class} is not an equitable class")));
        };
        if vertex.len() + 1 != m as usize {
            return Err(Error::LengthMismatch { expected: m as usize - 1, actual: vertex.len() });
        }
        vertex.check_alphabet(n)?;
        Ok(EquitableVertex {
            class: class.clone(),
            n,
            params: EquitableParams::of(m, n),
            letters: vertex.0.clone(),
            counts: histogram_unchecked(vertex.letters(), n).counts,
        })
    }

    fn status_of_count(&self, count: usize) -> LetterStatus {
        let r = self.params.r as usize;
        if count == r {
            LetterStatus::Normal
        } else if count == r + 1 {
            LetterStatus::Super
        } else if r >= 1 && count == r - 1 {
            LetterStatus::Deficient
        } else {
            LetterStatus::Other
        }
    }

    fn status(&self, letter: Letter) -> LetterStatus {
        self.status_of_count(self.counts[letter as usize - 1])
    }

    fn require_equitable(&self) -> Result<()> {
        match (1..=self.n as Letter).find(|&l| {
            matches!(self.status(l), LetterStatus::Deficient | LetterStatus::Other)
        }) {
            Some(l) => Err(Error::InvalidWitness(format!(
                "vertex {} is not equitable: letter {l} is {:?}",
                Word(self.letters.clone()),
                self.status(l)
            ))),
            None => Ok(()),
        }
    }

    /// Smallest letter whose count in `counts` is exactly `r`, skipping `exclude`.
    fn smallest_normal_in(&self, counts: &[usize], exclude: &[Letter]) -> Option<Letter> {
        (1..=self.n as Letter).find(|l| {
            !exclude.contains(l) && self.status_of_count(counts[*l as usize - 1]) == LetterStatus::Normal
        })
    }

    fn check_letter(&self, letter: Letter) -> Result<()> {
        check_letters(&[letter], self.n)
    }
}

/// Status of every letter `1..=n` relative to `r = (m - k) / n`.
pub fn letter_status(class: &ClassSpec, vertex: &Word) -> Result<Vec<LetterStatus>> {
    let ev = EquitableVertex::new(class, vertex)?;
    Ok((1..=ev.n as Letter).map(|l| ev.status(l)).collect())
}

// ---------------------------------------------------------------------------
// Equitable constructions

/// Rotates an equitable vertex once around, with `placeholder` (a normal
/// letter) in flight so one letter is always missing from the cyclic word.
/// The path has `m` transitions and ends where it started.
pub fn lag_cycle(class: &ClassSpec, vertex: &Word, placeholder: Letter) -> Result<WitnessPath> {
    let ev = EquitableVertex::new(class, vertex)?;
    ev.require_equitable()?;
    ev.check_letter(placeholder)?;
    if ev.status(placeholder) != LetterStatus::Normal {
        return Err(Error::InvalidWitness(format!(
            "placeholder {placeholder} is {:?} in {vertex}, not normal",
            ev.status(placeholder)
        )));
    }
    let mut appended = vec![placeholder];
    appended.extend_from_slice(&ev.letters);
    Ok(stream_path(class, &ev.letters, &appended))
}

/// Walks from an equitable vertex to one where `super_letter` has become
/// normal and `normal_letter` super.
///
/// The walk drops letters up to and including the first `super_letter`. The
/// first earlier occurrence of a super letter (or of `normal_letter`) is
/// replaced by `normal_letter`; every later such occurrence is replaced by
/// the previous one, and the dropped `super_letter` by the last of them.
/// Other letters are re-appended unchanged.
pub fn status_swap_path(
    class: &ClassSpec,
    vertex: &Word,
    super_letter: Letter,
    normal_letter: Letter,
) -> Result<WitnessPath> {
    let ev = EquitableVertex::new(class, vertex)?;
    ev.require_equitable()?;
    ev.check_letter(super_letter)?;
    ev.check_letter(normal_letter)?;
    if super_letter == normal_letter {
        return Err(Error::InvalidWitness("status swap needs two distinct letters".into()));
    }
    if ev.status(super_letter) != LetterStatus::Super {
        return Err(Error::InvalidWitness(format!("{super_letter} is not super in {vertex}")));
    }
    if ev.status(normal_letter) != LetterStatus::Normal {
        return Err(Error::InvalidWitness(format!("{normal_letter} is not normal in {vertex}")));
    }

    let first = ev
        .letters
        .iter()
        .position(|&l| l == super_letter)
        .expect("super letters occur");
    let mut carry = normal_letter;
    let mut appended = Vec::with_capacity(first + 1);
    for &a in &ev.letters[..first] {
        if a == normal_letter || ev.status(a) == LetterStatus::Super {
            appended.push(carry);
            carry = a;
        } else {
            appended.push(a);
        }
    }
    appended.push(carry);
    Ok(stream_path(class, &ev.letters, &appended))
}

/// Walks from an equitable vertex to the same vertex with the letters at
/// 0-based positions `i` and `j` exchanged, using two or three normal
/// placeholders. Requires `k = m mod n >= 2`.
pub fn position_swap_path(class: &ClassSpec, vertex: &Word, i: usize, j: usize) -> Result<WitnessPath> {
    let ev = EquitableVertex::new(class, vertex)?;
    if ev.params.k < 2 {
        return Err(Error::Unsupported(format!(
            "position swaps need m mod n >= 2, {} has m mod n = {}",
            ev.class, ev.params.k
        )));
    }
    ev.require_equitable()?;
    let len = ev.letters.len();
    if i >= len || j >= len {
        return Err(Error::InvalidWitness(format!("positions ({i}, {j}) out of range for length {len}")));
    }
    let (i, j) = (i.min(j), i.max(j));
    let a = &ev.letters;
    let (ai, aj) = (a[i], a[j]);
    if ai == aj {
        return Ok(WitnessPath::single(class, vertex.clone()));
    }

    let heart = if ev.status(ai) == LetterStatus::Normal {
        ai
    } else {
        ev.smallest_normal_in(&ev.counts, &[aj])
            .ok_or_else(|| Error::InvalidWitness("no normal letter for the first placeholder".into()))?
    };
    // counts of the cyclic word once a_i has been replaced by the first placeholder
    let mut after_heart = ev.counts.clone();
    after_heart[ai as usize - 1] -= 1;
    after_heart[heart as usize - 1] += 1;
    let spade = if aj != heart
        && aj != ai
        && ev.status_of_count(after_heart[aj as usize - 1]) == LetterStatus::Normal
    {
        aj
    } else {
        ev.smallest_normal_in(&after_heart, &[ai, heart])
            .ok_or_else(|| Error::InvalidWitness("no normal letter for the second placeholder".into()))?
    };

    let mut appended = Vec::with_capacity(len + 1);
    appended.push(heart);
    appended.extend_from_slice(&a[..i]);
    appended.push(spade);
    appended.extend_from_slice(&a[i + 1..j]);
    appended.push(ai);
    appended.extend_from_slice(&a[j + 1..]);
    let mut path = stream_path(class, a, &appended);
    if spade == aj {
        return Ok(path);
    }

    // a_j still has to replace the second placeholder at position i
    let mid = path.end().0.clone();
    let mid_counts = histogram_unchecked(&mid, ev.n).counts;
    let club = ev
        .smallest_normal_in(&mid_counts, &[aj])
        .ok_or_else(|| Error::InvalidWitness("no normal letter for the third placeholder".into()))?;
    let mut appended = Vec::with_capacity(len + 1);
    appended.push(club);
    appended.extend_from_slice(&mid[..i]);
    appended.push(aj);
    appended.extend_from_slice(&mid[i + 1..]);
    path.append(stream_path(class, &mid, &appended));
    Ok(path)
}

// ---------------------------------------------------------------------------
// Rankings

/// Walks from a ranking vertex to the all-ones vertex. At each step a `1` is
/// appended whenever that keeps the edge a ranking; otherwise the largest
/// admissible letter is appended, which fills the gap left by the dropped
/// letter. Letters `2, 3, ...` are thereby eliminated in turn.
pub fn ranking_collapse_path(class: &ClassSpec, vertex: &Word) -> Result<WitnessPath> {
    let ClassSpec::Ranking { m } = *class else {
        return Err(Error::Unsupported(format!("{class} is not a ranking class")));
    };
    let m = m as usize;
    if vertex.len() + 1 != m {
        return Err(Error::LengthMismatch { expected: m - 1, actual: vertex.len() });
    }
    vertex.check_alphabet(m as u32)?;

    let step_limit = 4 * m * m + 16;
    let mut path = WitnessPath::single(class, vertex.clone());
    let mut current = vertex.0.clone();
    let mut counts = vec![0usize; m];
    while current.iter().any(|&l| l != 1) {
        if path.transitions() >= step_limit {
            return Err(Error::InvalidWitness(format!(
                "collapse from {vertex} did not reach the all-ones vertex within {step_limit} steps"
            )));
        }
        counts.iter_mut().for_each(|c| *c = 0);
        for &l in &current {
            counts[l as usize - 1] += 1;
        }
        let admissible = |x: usize, counts: &mut Vec<usize>| {
            counts[x - 1] += 1;
            let ok = is_ranking_histogram(counts);
            counts[x - 1] -= 1;
            ok
        };
        let next = if admissible(1, &mut counts) {
            1
        } else {
            (2..=m).rev().find(|&x| admissible(x, &mut counts)).ok_or_else(|| {
                Error::InvalidWitness(format!("{} is not a ranking vertex", Word(current.clone())))
            })?
        };
        current.remove(0);
        current.push(next as Letter);
        path.vertices.push(Word(current.clone()));
    }
    Ok(path)
}

/// Reverses the vertex order and each vertex. Valid whenever membership is
/// invariant under word reversal, which holds for every class here.
pub fn reverse_path(path: &WitnessPath) -> WitnessPath {
    WitnessPath {
        class: path.class.clone(),
        vertices: path.vertices.iter().rev().map(Word::reversed).collect(),
    }
}

/// Shortest path (in edges) from `from` to `to`, or `None` if unreachable.
pub fn bfs_path(g: &TransitionDigraph, from: &Word, to: &Word) -> Result<Option<WitnessPath>> {
    let unknown = |w: &Word| Error::UnknownVertex(w.render(g.spec().alphabet()));
    let s = g.vertex_index(from).ok_or_else(|| unknown(from))?;
    let t = g.vertex_index(to).ok_or_else(|| unknown(to))?;

    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for w in g.successors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[t] == usize::MAX {
        return Ok(None);
    }
    let mut rev = vec![t];
    let mut v = t;
    while v != s {
        v = parent[v];
        rev.push(v);
    }
    let vertices = rev.into_iter().rev().map(|v| g.vertices()[v].clone()).collect();
    Ok(Some(WitnessPath { class: g.spec().clone(), vertices }))
}
