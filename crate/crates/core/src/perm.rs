//! Permutations in one-line notation, pattern containment, the structural
//! predicates (irreducibility / indecomposability), block decomposition into
//! interval factors, and inflation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. Immutable; the empty
/// permutation (n = 0) is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a bijection on `{1..n}`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if !is_permutation(&values) {
            return Err(Error::NotAPermutation(values.len()));
        }
        Ok(Self { values })
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    /// The pattern (rank sequence) of an arbitrary sequence of distinct values.
    pub fn pattern_of(values: &[u32]) -> Self {
        Self {
            values: normalize(values),
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(is_permutation(&values));
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

// Ordered by length first so that pattern sets list short patterns before long.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.values.len(), &self.values).cmp(&(other.values.len(), &other.values))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    /// Compact digit form for n <= 9, space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space- or comma-separated values ("4 5 1 2 7 3 6 10 8 9") and,
    /// for n <= 9, the compact digit form ("42513").
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::ParsePermutation {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let values: Vec<u32> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| parse_err(&e.to_string())))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(parse_err("compact digit form is only accepted for n <= 9"));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| parse_err("compact form must use digits 1-9"))
                })
                .collect::<Result<_>>()?
        };
        Self::new(values)
    }
}

pub fn is_permutation(values: &[u32]) -> bool {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        if v < 1 || v as usize > n || seen[v as usize - 1] {
            return false;
        }
        seen[v as usize - 1] = true;
    }
    true
}

/// Rank sequence of a list of distinct values, as 1-based values.
pub fn normalize(values: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| values[i]);
    let mut out = vec![0u32; values.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

/// True iff `values` has a decreasing subsequence of length 3.
pub fn contains_321(values: &[u32]) -> bool {
    let n = values.len();
    if n < 3 {
        return false;
    }
    // v_j is the middle of a 321 iff something bigger precedes it and
    // something smaller follows it.
    let mut suffix_min = vec![u32::MAX; n];
    let mut m = u32::MAX;
    for i in (0..n).rev() {
        suffix_min[i] = m;
        m = m.min(values[i]);
    }
    let mut prefix_max = 0u32;
    for j in 0..n {
        if prefix_max > values[j] && suffix_min[j] < values[j] {
            return true;
        }
        prefix_max = prefix_max.max(values[j]);
    }
    false
}

pub fn avoids_321(values: &[u32]) -> bool {
    !contains_321(values)
}

fn contains_pattern_values(host: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > host.len() {
        return false;
    }
    if pattern == [3, 2, 1] {
        return contains_321(host);
    }
    // Depth-first choice of host positions; chosen values must stay
    // order-isomorphic to the pattern prefix.
    fn rec(host: &[u32], pattern: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        let remaining_needed = pattern.len() - t;
        for i in start..=(host.len() - remaining_needed) {
            let v = host[i];
            let consistent = (0..t).all(|s| (pattern[s] < pattern[t]) == (chosen[s] < v));
            if consistent {
                chosen.push(v);
                if rec(host, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(host, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// True iff some subsequence of `host` is order-isomorphic to `pattern`.
pub fn contains_pattern(host: &Permutation, pattern: &Permutation) -> bool {
    contains_pattern_values(host.values(), pattern.values())
}

/// Positions (1-based, increasing) of the left-to-right maxima.
pub fn left_to_right_maxima(p: &Permutation) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best = 0u32;
    for (i, &v) in p.values().iter().enumerate() {
        if v > best {
            out.push(i + 1);
            best = v;
        }
    }
    out
}

pub fn lr_maxima_count(values: &[u32]) -> usize {
    let mut count = 0;
    let mut best = 0u32;
    for &v in values {
        if v > best {
            count += 1;
            best = v;
        }
    }
    count
}

/// No adjacent factor `i (i+1)`.
pub fn plus_irreducible(values: &[u32]) -> bool {
    values.windows(2).all(|w| w[1] != w[0] + 1)
}

/// No adjacent factor `i (i-1)`.
pub fn minus_irreducible(values: &[u32]) -> bool {
    values.windows(2).all(|w| w[1] + 1 != w[0])
}

/// No proper prefix whose values form an initial segment of [1, n].
pub fn plus_indecomposable(values: &[u32]) -> bool {
    let n = values.len();
    let mut mx = 0u32;
    for k in 1..n {
        mx = mx.max(values[k - 1]);
        if mx as usize == k {
            return false;
        }
    }
    true
}

/// No proper final segment whose values form an initial segment of [1, n];
/// equivalently no proper prefix taking the top values.
pub fn minus_indecomposable(values: &[u32]) -> bool {
    let n = values.len();
    let mut mn = u32::MAX;
    for k in 1..n {
        mn = mn.min(values[k - 1]);
        if mn as usize == n - k + 1 {
            return false;
        }
    }
    true
}

/// No proper contiguous factor of length >= 2 whose values form an interval.
pub fn absolutely_irreducible(values: &[u32]) -> bool {
    let n = values.len();
    for s in 0..n {
        let mut mn = values[s];
        let mut mx = values[s];
        for e in s + 1..n {
            mn = mn.min(values[e]);
            mx = mx.max(values[e]);
            if e - s == n - 1 && s == 0 {
                continue; // the whole word is not a proper factor
            }
            if (mx - mn) as usize == e - s {
                return false;
            }
        }
    }
    true
}

/// The structural flags of a permutation, each computed from its definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub plus_irreducible: bool,
    pub minus_irreducible: bool,
    pub plus_indecomposable: bool,
    pub minus_indecomposable: bool,
    pub absolutely_irreducible: bool,
    pub avoids_321: bool,
    pub lr_maxima_count: usize,
}

pub fn classify(p: &Permutation) -> Classification {
    let v = p.values();
    Classification {
        plus_irreducible: plus_irreducible(v),
        minus_irreducible: minus_irreducible(v),
        plus_indecomposable: plus_indecomposable(v),
        minus_indecomposable: minus_indecomposable(v),
        absolutely_irreducible: absolutely_irreducible(v),
        avoids_321: avoids_321(v),
        lr_maxima_count: lr_maxima_count(v),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    Sum,
    Skew,
    Simple,
}

/// Block decomposition into contiguous factors with interval value sets.
///
/// For `Sum`/`Skew` the blocks are the finest partition (every block
/// plus- resp. minus-indecomposable) and the quotient is `1..c` resp.
/// `c..1`. Otherwise the blocks are the maximal proper interval factors,
/// whose quotient is the unique absolutely irreducible pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub quotient: Permutation,
    pub blocks: Vec<Permutation>,
}

impl Decomposition {
    /// Lengths of the blocks in position order.
    pub fn block_lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

fn sum_cut_points(values: &[u32]) -> Vec<usize> {
    let n = values.len();
    let mut cuts = Vec::new();
    let mut mx = 0u32;
    for k in 1..n {
        mx = mx.max(values[k - 1]);
        if mx as usize == k {
            cuts.push(k);
        }
    }
    cuts
}

fn skew_cut_points(values: &[u32]) -> Vec<usize> {
    let n = values.len();
    let mut cuts = Vec::new();
    let mut mn = u32::MAX;
    for k in 1..n {
        mn = mn.min(values[k - 1]);
        if mn as usize == n - k + 1 {
            cuts.push(k);
        }
    }
    cuts
}

fn blocks_from_cuts(values: &[u32], cuts: &[usize]) -> Vec<Permutation> {
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend_from_slice(cuts);
    bounds.push(values.len());
    bounds
        .windows(2)
        .map(|w| Permutation::pattern_of(&values[w[0]..w[1]]))
        .collect()
}

/// Decompose into sum blocks, skew blocks, or the unique partition into
/// maximal proper interval factors with absolutely irreducible quotient.
pub fn decompose(p: &Permutation) -> Result<Decomposition> {
    let n = p.len();
    if n < 2 {
        return Err(Error::NoProperDecomposition(n));
    }
    let v = p.values();

    let cuts = sum_cut_points(v);
    if !cuts.is_empty() {
        let blocks = blocks_from_cuts(v, &cuts);
        let c = blocks.len();
        return Ok(Decomposition {
            kind: DecompositionKind::Sum,
            quotient: Permutation::identity(c),
            blocks,
        });
    }

    let cuts = skew_cut_points(v);
    if !cuts.is_empty() {
        let blocks = blocks_from_cuts(v, &cuts);
        let c = blocks.len();
        let quotient = Permutation::from_values_unchecked((1..=c as u32).rev().collect());
        return Ok(Decomposition {
            kind: DecompositionKind::Skew,
            quotient,
            blocks,
        });
    }

    // Neither sum- nor skew-decomposable: the maximal proper interval factors
    // partition the word, and each starts right after the previous one ends.
    let mut blocks = Vec::new();
    let mut reps = Vec::new();
    let mut s = 0;
    while s < n {
        let mut mn = v[s];
        let mut mx = v[s];
        let mut best = s;
        for e in s + 1..n {
            mn = mn.min(v[e]);
            mx = mx.max(v[e]);
            if s == 0 && e == n - 1 {
                break; // whole word: not proper
            }
            if (mx - mn) as usize == e - s {
                best = e;
            }
        }
        reps.push(v[s..=best].iter().min().copied().unwrap());
        blocks.push(Permutation::pattern_of(&v[s..=best]));
        s = best + 1;
    }
    let quotient = Permutation::pattern_of(&reps);
    debug_assert!(absolutely_irreducible(quotient.values()));
    Ok(Decomposition {
        kind: DecompositionKind::Simple,
        quotient,
        blocks,
    })
}

/// Replace each entry of `quotient` by the corresponding block.
pub fn inflate(quotient: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
    if blocks.len() != quotient.len() {
        return Err(Error::BlockCountMismatch {
            expected: quotient.len(),
            got: blocks.len(),
        });
    }
    if blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::EmptyBlock);
    }
    // Value offset of block i: total length of blocks placed below it.
    let mut offsets = vec![0u32; blocks.len()];
    for i in 0..blocks.len() {
        let mut offset = 0u32;
        for j in 0..blocks.len() {
            if quotient.values()[j] < quotient.values()[i] {
                offset += blocks[j].len() as u32;
            }
        }
        offsets[i] = offset;
    }
    let mut values = Vec::with_capacity(blocks.iter().map(|b| b.len()).sum());
    for (block, &offset) in blocks.iter().zip(&offsets) {
        values.extend(block.values().iter().map(|&v| v + offset));
    }
    Ok(Permutation::from_values_unchecked(values))
}

/// Deduplicated patterns obtained by deleting a single point.
pub fn one_point_deletions(p: &Permutation) -> BTreeSet<Permutation> {
    let v = p.values();
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(v.len().saturating_sub(1));
    for i in 0..v.len() {
        buf.clear();
        buf.extend_from_slice(&v[..i]);
        buf.extend_from_slice(&v[i + 1..]);
        out.insert(Permutation::pattern_of(&buf));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert_eq!(Permutation::new(vec![]).unwrap(), Permutation::empty());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("42513").values(), &[4, 2, 5, 1, 3]);
        assert_eq!(p("4 2 5 1 3"), p("42513"));
        assert_eq!(p("4,2,5,1,3"), p("42513"));
        let long = p("4 5 1 2 7 3 6 10 8 9");
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "4 5 1 2 7 3 6 10 8 9");
        assert_eq!(p("42513").to_string(), "42513");
        assert!("4213".parse::<Permutation>().is_ok());
        assert!("4251".parse::<Permutation>().is_err());
        assert!("10".parse::<Permutation>().is_err());
        assert!("12345678910".parse::<Permutation>().is_err());
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
    }

    #[test]
    fn pattern_containment() {
        // the running 10-element example avoids 321
        assert!(!contains_pattern(&p("4 5 1 2 7 3 6 10 8 9"), &p("321")));
        assert!(contains_pattern(&p("321"), &p("321")));
        assert!(contains_pattern(&p("42513"), &p("321")));
        assert!(contains_pattern(&p("42513"), &p("")));
        assert!(!contains_pattern(&p("12"), &p("123")));
    }

    // Exhaustive cross-check of the fast 321 path against the generic search.
    #[test]
    fn contains_321_matches_generic_search() {
        let pat = vec![3, 2, 1];
        for n in 0..=6 {
            crate::oracle::for_each_permutation(n, |v| {
                let generic = super::contains_pattern_values(v, &pat);
                assert_eq!(contains_321(v), generic, "mismatch at {v:?}");
            });
        }
    }

    #[test]
    fn lr_maxima() {
        let q = p("4 5 1 2 7 3 6 10 8 9");
        assert_eq!(left_to_right_maxima(&q), vec![1, 2, 5, 8]);
        assert_eq!(left_to_right_maxima(&Permutation::identity(5)), vec![1, 2, 3, 4, 5]);
        assert_eq!(left_to_right_maxima(&p("54321")), vec![1]);
        assert_eq!(left_to_right_maxima(&Permutation::empty()), Vec::<usize>::new());
    }

    #[test]
    fn classify_examples() {
        assert!(classify(&p("2413")).absolutely_irreducible);
        assert!(!classify(&p("3412")).minus_indecomposable);
        let c = classify(&p("123"));
        assert!(!c.plus_irreducible);
        assert!(!c.plus_indecomposable);
        assert!(c.minus_irreducible);

        let e = classify(&Permutation::empty());
        assert!(e.plus_irreducible && e.minus_irreducible);
        assert!(e.plus_indecomposable && e.minus_indecomposable);
        assert!(e.absolutely_irreducible && e.avoids_321);
        assert_eq!(e.lr_maxima_count, 0);

        // length 2 is vacuously absolutely irreducible
        assert!(classify(&p("12")).absolutely_irreducible);
        assert!(classify(&p("21")).absolutely_irreducible);
    }

    #[test]
    fn abs_irreducible_implies_all_for_n_ge_3() {
        for n in 3..=8 {
            crate::oracle::for_each_permutation(n, |v| {
                if absolutely_irreducible(v) {
                    assert!(plus_irreducible(v));
                    assert!(minus_irreducible(v));
                    assert!(plus_indecomposable(v));
                    assert!(minus_indecomposable(v));
                }
            });
        }
    }

    #[test]
    fn lr_maxima_count_in_range() {
        for n in 1..=7 {
            crate::oracle::for_each_permutation(n, |v| {
                let c = lr_maxima_count(v);
                assert!(c >= 1 && c <= n);
            });
        }
    }

    #[test]
    fn decompose_simple_examples() {
        let d = decompose(&p("423615")).unwrap();
        assert_eq!(d.kind, DecompositionKind::Simple);
        assert_eq!(d.quotient, p("2413"));
        assert_eq!(d.blocks, vec![p("312"), p("1"), p("1"), p("1")]);

        let d = decompose(&p("724513986")).unwrap();
        assert_eq!(d.kind, DecompositionKind::Simple);
        assert_eq!(d.quotient, p("3142"));
        assert_eq!(d.blocks, vec![p("1"), p("24513"), p("21"), p("1")]);
    }

    #[test]
    fn decompose_sum_and_skew() {
        let d = decompose(&p("123")).unwrap();
        assert_eq!(d.kind, DecompositionKind::Sum);
        assert_eq!(d.quotient, p("123"));
        assert_eq!(d.blocks, vec![p("1"), p("1"), p("1")]);

        let d = decompose(&p("3412")).unwrap();
        assert_eq!(d.kind, DecompositionKind::Skew);
        assert_eq!(d.quotient, p("21"));
        assert_eq!(d.blocks, vec![p("12"), p("12")]);

        assert!(decompose(&p("1")).is_err());
        assert!(decompose(&Permutation::empty()).is_err());
    }

    #[test]
    fn inflate_examples() {
        assert_eq!(
            inflate(&p("2413"), &[p("312"), p("1"), p("1"), p("1")]).unwrap(),
            p("423615")
        );
        assert_eq!(inflate(&p("1"), &[p("42513")]).unwrap(), p("42513"));
        assert_eq!(inflate(&p("21"), &[p("12"), p("12")]).unwrap(), p("3412"));
        assert!(inflate(&p("21"), &[p("12")]).is_err());
        assert!(inflate(&p("12"), &[p("1"), Permutation::empty()]).is_err());
    }

    #[test]
    fn decompose_roundtrip_small() {
        for n in 2..=8 {
            crate::oracle::for_each_permutation(n, |v| {
                let q = Permutation::from_values_unchecked(v.to_vec());
                let d = decompose(&q).unwrap();
                assert_eq!(inflate(&d.quotient, &d.blocks).unwrap(), q);
                match d.kind {
                    DecompositionKind::Sum => {
                        assert!(d.blocks.iter().all(|b| plus_indecomposable(b.values())))
                    }
                    DecompositionKind::Skew => {
                        assert!(d.blocks.iter().all(|b| minus_indecomposable(b.values())))
                    }
                    DecompositionKind::Simple => {
                        assert!(absolutely_irreducible(d.quotient.values()));
                        assert!(d.quotient.len() >= 4);
                    }
                }
            });
        }
    }

    #[test]
    fn sum_and_skew_are_mutually_exclusive() {
        for n in 2..=7 {
            crate::oracle::for_each_permutation(n, |v| {
                assert!(sum_cut_points(v).is_empty() || skew_cut_points(v).is_empty());
            });
        }
    }

    // Every proper interval partition other than the one found either fails to
    // be coarser or has a reducible quotient: brute-force check of uniqueness.
    #[test]
    fn simple_partition_is_the_unique_abs_irreducible_one() {
        for n in 4..=7 {
            crate::oracle::for_each_permutation(n, |v| {
                if !sum_cut_points(v).is_empty() || !skew_cut_points(v).is_empty() {
                    return;
                }
                let q = Permutation::from_values_unchecked(v.to_vec());
                let d = decompose(&q).unwrap();
                let mut abs_irr_partitions = 0;
                // cut-point subsets encode partitions into contiguous blocks
                for mask in 0..(1u32 << (n - 1)) {
                    if mask.count_ones() == 0 {
                        continue; // trivial single block
                    }
                    let mut bounds = vec![0usize];
                    for b in 0..n - 1 {
                        if mask & (1 << b) != 0 {
                            bounds.push(b + 1);
                        }
                    }
                    bounds.push(n);
                    let ok = bounds.windows(2).all(|w| {
                        let seg = &v[w[0]..w[1]];
                        let mn = seg.iter().min().unwrap();
                        let mx = seg.iter().max().unwrap();
                        (mx - mn) as usize == w[1] - w[0] - 1
                    });
                    if !ok {
                        continue;
                    }
                    let reps: Vec<u32> = bounds
                        .windows(2)
                        .map(|w| *v[w[0]..w[1]].iter().min().unwrap())
                        .collect();
                    if absolutely_irreducible(&normalize(&reps)) {
                        abs_irr_partitions += 1;
                        assert_eq!(Permutation::pattern_of(&reps), d.quotient);
                    }
                }
                assert_eq!(abs_irr_partitions, 1, "at {v:?}");
            });
        }
    }

    #[test]
    fn minus_decomposable_321_avoiders_have_the_known_form() {
        // (k+1)...n 1...k are the only minus-decomposable 321-avoiders
        for n in 3..=9 {
            let mut count = 0u64;
            crate::oracle::for_each_permutation(n, |v| {
                if avoids_321(v) && !minus_indecomposable(v) {
                    count += 1;
                    let k = (v[v.len() - 1]) as usize;
                    let expected: Vec<u32> = ((k as u32 + 1)..=(n as u32))
                        .chain(1..=k as u32)
                        .collect();
                    assert_eq!(v, &expected[..]);
                }
            });
            assert_eq!(count, n as u64 - 1);
        }
    }

    #[test]
    fn deletions() {
        let d = one_point_deletions(&p("42513"));
        let expected: BTreeSet<Permutation> =
            ["2413", "3412", "4213", "3142", "3241"].iter().map(|s| p(s)).collect();
        assert_eq!(d, expected);
        assert_eq!(
            one_point_deletions(&p("12")),
            [p("1")].into_iter().collect::<BTreeSet<_>>()
        );
        assert_eq!(
            one_point_deletions(&Permutation::identity(6)),
            [Permutation::identity(5)].into_iter().collect::<BTreeSet<_>>()
        );
    }

    proptest! {
        #[test]
        fn contains_is_reflexive(v in proptest::sample::subsequence((1u32..=10).collect::<Vec<_>>(), 10)) {
            let q = Permutation::pattern_of(&v);
            prop_assert!(contains_pattern(&q, &q));
        }

        #[test]
        fn deletion_then_containment(seed in any::<u64>()) {
            // every one-point deletion is contained in the original
            let mut vals: Vec<u32> = (1..=8).collect();
            let mut state = seed;
            for i in (1..vals.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                vals.swap(i, j);
            }
            let q = Permutation::from_values_unchecked(vals);
            for d in one_point_deletions(&q) {
                prop_assert!(contains_pattern(&q, &d));
            }
        }

        #[test]
        fn containment_is_transitive_via_deletion_chains(seed in any::<u64>()) {
            let mut vals: Vec<u32> = (1..=7).collect();
            let mut state = seed;
            for i in (1..vals.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                vals.swap(i, j);
            }
            let q = Permutation::from_values_unchecked(vals);
            for d in one_point_deletions(&q) {
                for dd in one_point_deletions(&d) {
                    prop_assert!(contains_pattern(&q, &dd));
                }
            }
        }
    }
}
