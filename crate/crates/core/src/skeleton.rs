//! The skeleton of a 321-avoider (its left-to-right maxima grid with the
//! occupied cells marked), the {h, u, d, m} word language describing marked
//! lattice paths over that grid, a deterministic recognizer for the
//! language, and the bijection between labelled words and 321-avoiders.
//!
//! Cells are addressed as (i, j): value band i (below the i-th maximum),
//! position band j (after the j-th maximum), 1 <= i <= j <= n. The path
//! starts at cell (1, 1); a step u moves to (i, j+1), d to (i+1, j), h to
//! (i+1, j+1), and m marks the current cell. A word with s = #h + #u
//! segments describes a grid with s + 1 maxima.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::perm::{avoids_321, left_to_right_maxima, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    H,
    U,
    D,
    M,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::H => 'h',
            Letter::U => 'u',
            Letter::D => 'd',
            Letter::M => 'm',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'h' => Some(Letter::H),
            'u' => Some(Letter::U),
            'd' => Some(Letter::D),
            'm' => Some(Letter::M),
            _ => None,
        }
    }
}

pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .map(|c| {
            Letter::from_char(c).ok_or_else(|| Error::ParseWord {
                input: s.to_string(),
                reason: format!("unknown letter {c:?}"),
            })
        })
        .collect()
}

/// Recognizer state: the grammar nonterminal governing the next letter.
#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    S,
    U,
    D,
    M,
}

/// Single left-to-right pass equivalent to the grammar
///   S -> e | hS | uUdD | mM
///   U -> mM | uUdD
///   D -> e | mM
///   M -> e | hS | uUdD
/// with a balance counter for the pending d of each open uUdD.
fn scan(word: &[Letter]) -> Option<(State, usize)> {
    let mut state = State::S;
    let mut balance = 0usize;
    for &letter in word {
        state = match (state, letter) {
            (State::S | State::M, Letter::H) => State::S,
            (State::S | State::U | State::M, Letter::U) => {
                balance += 1;
                State::U
            }
            (State::S | State::M | State::D, Letter::D) if balance > 0 => {
                balance -= 1;
                State::D
            }
            (State::S | State::U | State::D, Letter::M) => State::M,
            _ => return None,
        };
    }
    Some((state, balance))
}

/// True iff the word is derivable from S.
pub fn word_recognize(word: &[Letter]) -> bool {
    match scan(word) {
        Some((state, 0)) => state != State::U,
        _ => false,
    }
}

/// Recognize a word given as text; anything outside {h, u, d, m} makes it
/// a non-word.
pub fn word_recognize_str(s: &str) -> bool {
    match parse_letters(s) {
        Ok(word) => word_recognize(&word),
        Err(_) => false,
    }
}

/// A grammar-accepted word together with one positive occupancy label per m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonWord {
    word: Vec<Letter>,
    labels: Vec<u64>,
}

impl SkeletonWord {
    pub fn new(word: Vec<Letter>, labels: Vec<u64>) -> Result<Self> {
        if !word_recognize(&word) {
            let rendered: String = word.iter().map(|l| l.as_char()).collect();
            return Err(Error::InvalidWord(rendered));
        }
        let marks = word.iter().filter(|&&l| l == Letter::M).count();
        if marks != labels.len() {
            return Err(Error::LabelCountMismatch {
                marks,
                labels: labels.len(),
            });
        }
        if labels.contains(&0) {
            return Err(Error::NonPositiveLabel);
        }
        Ok(Self { word, labels })
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn segment_count(&self) -> usize {
        self.word
            .iter()
            .filter(|&&l| l == Letter::H || l == Letter::U)
            .count()
    }

    pub fn mark_count(&self) -> usize {
        self.labels.len()
    }
}

impl fmt::Display for SkeletonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        if self.word.is_empty() {
            write!(f, "[{}]", labels.join(","))
        } else {
            let word: String = self.word.iter().map(|l| l.as_char()).collect();
            write!(f, "{} [{}]", word, labels.join(","))
        }
    }
}

impl FromStr for SkeletonWord {
    type Err = Error;

    /// Parses "mhm [2,1]"; a missing bracket list means no labels.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (word_part, labels) = match s.find('[') {
            None => (s, Vec::new()),
            Some(open) => {
                let close = s.rfind(']').ok_or_else(|| Error::ParseWord {
                    input: s.to_string(),
                    reason: "unterminated label list".to_string(),
                })?;
                let inner = &s[open + 1..close];
                let labels = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<u64>().map_err(|e| Error::ParseWord {
                            input: s.to_string(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                (s[..open].trim(), labels)
            }
        };
        Self::new(parse_letters(word_part)?, labels)
    }
}

/// The unlabelled skeleton: number of maxima plus the set of marked cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    maxima_count: usize,
    marked_cells: BTreeSet<(u32, u32)>,
}

impl Skeleton {
    pub fn new(maxima_count: usize, marked_cells: BTreeSet<(u32, u32)>) -> Result<Self> {
        for &(i, j) in &marked_cells {
            if i < 1 || j < i || j as usize > maxima_count {
                return Err(Error::InvalidWord(format!(
                    "cell ({i}, {j}) outside the {maxima_count}-maxima grid"
                )));
            }
        }
        for &(i, j) in &marked_cells {
            for &(i2, j2) in &marked_cells {
                if i < i2 && j > j2 {
                    return Err(Error::InvalidWord(format!(
                        "cells ({i}, {j}) and ({i2}, {j2}) lie on a negative slope"
                    )));
                }
            }
        }
        Ok(Self {
            maxima_count,
            marked_cells,
        })
    }

    pub fn maxima_count(&self) -> usize {
        self.maxima_count
    }

    pub fn marked_cells(&self) -> &BTreeSet<(u32, u32)> {
        &self.marked_cells
    }

    /// Total number of cells in the grid.
    pub fn cell_count(&self) -> usize {
        self.maxima_count * (self.maxima_count + 1) / 2
    }
}

/// Occupancies keyed by (position band, value band): the path visit order.
type OccupancyMap = BTreeMap<(u32, u32), u64>;

fn cells_with_occupancy(p: &Permutation) -> Result<(usize, OccupancyMap)> {
    if !avoids_321(p.values()) {
        return Err(Error::Contains321);
    }
    let v = p.values();
    let maxima_pos = left_to_right_maxima(p);
    let maxima_vals: Vec<u32> = maxima_pos.iter().map(|&pos| v[pos - 1]).collect();
    let n = maxima_vals.len();
    let is_max: BTreeSet<usize> = maxima_pos.iter().copied().collect();
    let mut occ = OccupancyMap::new();
    for (pos0, &val) in v.iter().enumerate() {
        let pos = pos0 + 1;
        if is_max.contains(&pos) {
            continue;
        }
        let j = maxima_pos.iter().take_while(|&&mp| mp < pos).count() as u32;
        let i = maxima_vals.iter().take_while(|&&mv| mv < val).count() as u32 + 1;
        debug_assert!(i <= j);
        *occ.entry((j, i)).or_insert(0) += 1;
    }
    Ok((n, occ))
}

/// The skeleton of a 321-avoider.
pub fn skeleton_of(p: &Permutation) -> Result<Skeleton> {
    let (n, occ) = cells_with_occupancy(p)?;
    Skeleton::new(n, occ.keys().map(|&(j, i)| (i, j)).collect())
}

/// Encode a nonempty 321-avoider as a marked-path word plus cell
/// occupancies. The empty permutation is the lone skeleton outside the word
/// language and is rejected.
pub fn skeleton_encode(p: &Permutation) -> Result<SkeletonWord> {
    if p.is_empty() {
        return Err(Error::NoWordForEmpty);
    }
    let (n, occ) = cells_with_occupancy(p)?;
    let mut word = Vec::new();
    let mut labels = Vec::new();
    let (mut ci, mut cj) = (1u32, 1u32);
    for (&(j, i), &count) in &occ {
        // unique segment between consecutive marks: the h's come first,
        // then either climbs or descents
        let di = i - ci;
        let dj = j - cj;
        if dj >= di {
            word.extend(std::iter::repeat_n(Letter::H, di as usize));
            word.extend(std::iter::repeat_n(Letter::U, (dj - di) as usize));
        } else {
            word.extend(std::iter::repeat_n(Letter::H, dj as usize));
            word.extend(std::iter::repeat_n(Letter::D, (di - dj) as usize));
        }
        word.push(Letter::M);
        labels.push(count);
        ci = i;
        cj = j;
    }
    word.extend(std::iter::repeat_n(Letter::H, n - cj as usize));
    word.extend(std::iter::repeat_n(Letter::D, (cj - ci) as usize));
    SkeletonWord::new(word, labels)
}

/// Decode a labelled word back into the unique 321-avoider with that
/// skeleton and those occupancies.
pub fn skeleton_decode(sw: &SkeletonWord) -> Permutation {
    let mut cells: Vec<(u32, u32, u64)> = Vec::new(); // (i, j, label) in path order
    let (mut i, mut j) = (1u32, 1u32);
    let mut label_iter = sw.labels().iter();
    for &letter in sw.word() {
        match letter {
            Letter::H => {
                i += 1;
                j += 1;
            }
            Letter::U => j += 1,
            Letter::D => i += 1,
            Letter::M => cells.push((i, j, *label_iter.next().unwrap())),
        }
    }
    let n = j as usize; // balance is zero at the end, so i == j == maxima count

    // values per band and the maxima values they force
    let mut band_load = vec![0u64; n + 1];
    for &(ci, _, label) in &cells {
        band_load[ci as usize] += label;
    }
    let mut maxima = vec![0u32; n + 1];
    let mut acc = 0u64;
    for b in 1..=n {
        acc += band_load[b];
        maxima[b] = b as u32 + acc as u32;
    }

    // assign each cell its chunk of consecutive values within its band;
    // within a band, earlier position bands take smaller values
    let mut by_value_order: Vec<usize> = (0..cells.len()).collect();
    by_value_order.sort_by_key(|&k| (cells[k].0, cells[k].1));
    let mut start_value = vec![0u32; cells.len()];
    let mut cursor = 0u32;
    let mut band = 0u32;
    for &k in &by_value_order {
        let (ci, _, _) = cells[k];
        if ci != band {
            band = ci;
            cursor = maxima[ci as usize - 1] + 1;
        }
        start_value[k] = cursor;
        cursor += cells[k].2 as u32;
    }

    let total: u64 = n as u64 + sw.labels().iter().sum::<u64>();
    let mut values = Vec::with_capacity(total as usize);
    let mut k = 0;
    for b in 1..=n {
        values.push(maxima[b]);
        while k < cells.len() && cells[k].1 as usize == b {
            let (_, _, label) = cells[k];
            for off in 0..label as u32 {
                values.push(start_value[k] + off);
            }
            k += 1;
        }
    }
    Permutation::from_values_unchecked(values)
}

/// Exhaustively generate the accepted words with at most `max_segments`
/// h/u segments, counted by (#h + #u, #m).
pub fn enumerate_words(max_segments: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    if max_segments > 12 {
        return Err(Error::LimitExceeded(
            "word enumeration is capped at 12 segments".to_string(),
        ));
    }
    let mut table = BTreeMap::new();
    fn dfs(
        state: State,
        balance: usize,
        segments: usize,
        marks: usize,
        max_segments: usize,
        table: &mut BTreeMap<(usize, usize), u64>,
    ) {
        if balance == 0 && state != State::U {
            *table.entry((segments, marks)).or_insert(0) += 1;
        }
        if matches!(state, State::S | State::M) && segments < max_segments {
            dfs(State::S, balance, segments + 1, marks, max_segments, table);
        }
        if matches!(state, State::S | State::U | State::M) && segments < max_segments {
            dfs(State::U, balance + 1, segments + 1, marks, max_segments, table);
        }
        if matches!(state, State::S | State::M | State::D) && balance > 0 {
            dfs(State::D, balance - 1, segments, marks, max_segments, table);
        }
        if matches!(state, State::S | State::U | State::D) {
            dfs(State::M, balance, segments, marks + 1, max_segments, table);
        }
    }
    dfs(State::S, 0, 0, 0, max_segments, &mut table);
    Ok(table)
}
