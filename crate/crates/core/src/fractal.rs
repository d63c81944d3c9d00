//! Membership in the fractal closure classes and the search for their
//! minimal forbidden patterns.
//!
//! A permutation belongs to the 321-fractal class when its block tree —
//! built by repeatedly taking the finest sum/skew split or the unique
//! simple-quotient split — only ever uses 321-avoiding simple quotients.
//! The depth-n classes D_n instead require every simple quotient to have
//! length at most n.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::perm::{avoids_321, normalize, Permutation};
use crate::{oracle, Error, Result};

/// Which fractal class a membership query is against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FractalClass {
    /// Simple quotients must avoid 321.
    F321,
    /// Simple quotients must have length <= n ("fractally at most n
    /// elements"); sum and skew nodes regroup into nested pairs, so they
    /// pass for every n >= 2.
    Dn(usize),
}

impl FractalClass {
    fn simple_quotient_ok(&self, quotient: &[u32]) -> bool {
        match self {
            FractalClass::F321 => avoids_321(quotient),
            FractalClass::Dn(n) => quotient.len() <= *n,
        }
    }
}

/// Memoized membership oracle for one fractal class. The cache is keyed by
/// the normalized one-line form and bounded; once full, recursion continues
/// without recording. Not shared between threads: give each worker its own.
pub struct Membership {
    class: FractalClass,
    cache: HashMap<Vec<u32>, bool>,
    capacity: usize,
}

impl Membership {
    pub fn new(class: FractalClass) -> Self {
        Self::with_capacity(class, 4_000_000)
    }

    pub fn with_capacity(class: FractalClass, capacity: usize) -> Self {
        Self {
            class,
            cache: HashMap::new(),
            capacity,
        }
    }

    pub fn class(&self) -> FractalClass {
        self.class
    }

    pub fn contains(&mut self, p: &Permutation) -> bool {
        self.contains_values(p.values())
    }

    /// Membership for a slice already known to be a permutation of 1..n.
    pub fn contains_values(&mut self, values: &[u32]) -> bool {
        let n = values.len();
        if n <= 2 {
            return true;
        }
        if let Some(&hit) = self.cache.get(values) {
            return hit;
        }
        let answer = self.decide(values);
        if self.cache.len() < self.capacity {
            self.cache.insert(values.to_vec(), answer);
        }
        answer
    }

    fn decide(&mut self, values: &[u32]) -> bool {
        // finest sum split
        let n = values.len();
        let mut cuts: Vec<usize> = Vec::new();
        let mut mx = 0u32;
        for k in 1..n {
            mx = mx.max(values[k - 1]);
            if mx as usize == k {
                cuts.push(k);
            }
        }
        if cuts.is_empty() {
            // finest skew split
            let mut mn = u32::MAX;
            for k in 1..n {
                mn = mn.min(values[k - 1]);
                if mn as usize == n - k + 1 {
                    cuts.push(k);
                }
            }
        }
        if !cuts.is_empty() {
            let mut bounds = vec![0usize];
            bounds.extend_from_slice(&cuts);
            bounds.push(n);
            return bounds
                .windows(2)
                .all(|w| self.contains_values(&normalize(&values[w[0]..w[1]])));
        }
        // neither: split into the maximal proper interval factors
        let mut reps = Vec::new();
        let mut blocks = Vec::new();
        let mut s = 0;
        while s < n {
            let mut mn = values[s];
            let mut mx = values[s];
            let mut best = s;
            for e in s + 1..n {
                mn = mn.min(values[e]);
                mx = mx.max(values[e]);
                if s == 0 && e == n - 1 {
                    break;
                }
                if (mx - mn) as usize == e - s {
                    best = e;
                }
            }
            reps.push(values[s]);
            blocks.push(s..best + 1);
            s = best + 1;
        }
        if !self.class.simple_quotient_ok(&normalize(&reps)) {
            return false;
        }
        blocks
            .into_iter()
            .all(|r| self.contains_values(&normalize(&values[r])))
    }
}

/// Membership in the 321-fractal class.
pub fn is_f321_member(p: &Permutation) -> bool {
    Membership::new(FractalClass::F321).contains(p)
}

/// Membership in D_n. n = 0 is rejected; D_1 = {1}; membership is monotone
/// in n from 2 upward.
pub fn is_dn_member(p: &Permutation, n: usize) -> Result<bool> {
    match n {
        0 => Err(Error::InvalidDepthClass),
        1 => Ok(p.len() == 1),
        _ => Ok(Membership::new(FractalClass::Dn(n)).contains(p)),
    }
}

/// Count the members of the class among permutations of length n,
/// partitioned over workers by the first two entries.
pub fn count_members(class: FractalClass, n: usize, jobs: Option<usize>) -> u64 {
    struct Acc {
        cache: Membership,
        count: u64,
    }
    impl Clone for Acc {
        fn clone(&self) -> Self {
            Acc {
                cache: Membership::new(self.cache.class()),
                count: 0,
            }
        }
    }
    let acc = oracle::fold_permutations_parallel(
        n,
        jobs,
        Acc {
            cache: Membership::new(class),
            count: 0,
        },
        |acc, v| {
            if acc.cache.contains_values(v) {
                acc.count += 1;
            }
        },
        |mut a, b| {
            a.count += b.count;
            a
        },
    );
    acc.count
}

/// Outcome of a minimal-forbidden-pattern search.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub searched_max_length: usize,
    /// Length-sorted, deduplicated minimal forbidden patterns.
    pub minimal_patterns: BTreeSet<Permutation>,
    /// Wall-clock seconds spent per searched length.
    pub timings: BTreeMap<usize, f64>,
}

#[derive(Clone, Debug, Default)]
pub struct BasisOptions {
    pub jobs: Option<usize>,
    /// Required for lengths 11 and 12.
    pub long_run: bool,
    /// Completed work units are appended here; present units are skipped on
    /// restart.
    pub checkpoint: Option<PathBuf>,
}

fn checkpoint_lines(path: &PathBuf) -> Result<BTreeSet<String>> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(text.lines().map(|l| l.trim().to_string()).collect()),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(BTreeSet::new()),
        Err(e) => Err(Error::Checkpoint(e.to_string())),
    }
}

/// All prefixes of `len` distinct values from 1..=n, lexicographic.
fn prefixes(n: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(n: usize, len: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !current.contains(&v) {
                current.push(v);
                rec(n, len, current, out);
                current.pop();
            }
        }
    }
    rec(n, len, &mut current, &mut out);
    out
}

/// Search for the minimal forbidden patterns of a fractal class: the
/// permutations outside the class all of whose one-point deletions are
/// inside. Work is partitioned by the first ceil(L/3) entries; the result
/// does not depend on the partitioning.
pub fn basis_search(class: FractalClass, max_length: usize, opts: &BasisOptions) -> Result<BasisReport> {
    if max_length > 12 {
        return Err(Error::LimitExceeded(
            "basis search is capped at length 12".to_string(),
        ));
    }
    if max_length > 10 && !opts.long_run {
        return Err(Error::LimitExceeded(
            "lengths 11 and 12 require the long-run flag".to_string(),
        ));
    }
    let done = match &opts.checkpoint {
        Some(path) => checkpoint_lines(path)?,
        None => BTreeSet::new(),
    };
    let checkpoint_file = match &opts.checkpoint {
        Some(path) => Some(Mutex::new(
            std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Checkpoint(e.to_string()))?,
        )),
        None => None,
    };

    let mut minimal_patterns = BTreeSet::new();
    let mut timings = BTreeMap::new();
    let jobs = opts.jobs
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1));

    for length in 1..=max_length {
        let start = Instant::now();
        let prefix_len = length.div_ceil(3).min(length);
        let tasks = prefixes(length, prefix_len);
        let next = AtomicUsize::new(0);
        let found: Mutex<Vec<Permutation>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(tasks.len()) {
                scope.spawn(|| {
                    let mut cache = Membership::new(class);
                    let mut local = Vec::new();
                    loop {
                        let t = next.fetch_add(1, Ordering::Relaxed);
                        if t >= tasks.len() {
                            break;
                        }
                        let prefix = &tasks[t];
                        let unit = format!(
                            "{} {}",
                            length,
                            prefix
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        );
                        if done.contains(&unit) {
                            continue;
                        }
                        let mut values: Vec<u32> = prefix.clone();
                        values.extend((1..=length as u32).filter(|v| !prefix.contains(v)));
                        let tail = prefix.len();
                        loop {
                            search_candidate(&values, &mut cache, &mut local);
                            if !oracle::next_permutation(&mut values[tail..]) {
                                break;
                            }
                        }
                        if let Some(file) = &checkpoint_file {
                            let mut f = file.lock().unwrap();
                            let _ = writeln!(f, "{unit}");
                        }
                    }
                    found.lock().unwrap().extend(local);
                });
            }
        });
        minimal_patterns.extend(found.into_inner().unwrap());
        timings.insert(length, start.elapsed().as_secs_f64());
    }

    Ok(BasisReport {
        searched_max_length: max_length,
        minimal_patterns,
        timings,
    })
}

fn search_candidate(values: &[u32], cache: &mut Membership, out: &mut Vec<Permutation>) {
    if cache.contains_values(values) {
        return;
    }
    let mut buf = Vec::with_capacity(values.len() - 1);
    for skip in 0..values.len() {
        buf.clear();
        buf.extend_from_slice(&values[..skip]);
        buf.extend_from_slice(&values[skip + 1..]);
        if !cache.contains_values(&normalize(&buf)) {
            return;
        }
    }
    out.push(Permutation::pattern_of(values));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_f321_member(&p("423615")));
        assert!(!is_f321_member(&p("42513")));
        assert!(!is_f321_member(&p("25314")));
        assert!(is_f321_member(&p("321")));
        assert!(is_f321_member(&p("54321")));
        assert!(is_f321_member(&p("1")));
        assert!(is_f321_member(&Permutation::empty()));
    }

    #[test]
    fn all_321_avoiders_are_members() {
        for n in 0..=7 {
            oracle::for_each_permutation(n, |v| {
                if avoids_321(v) {
                    assert!(Membership::new(FractalClass::F321).contains_values(v));
                }
            });
        }
    }

    #[test]
    fn depth_class_examples() {
        assert!(!is_dn_member(&p("2413"), 2).unwrap());
        assert!(is_dn_member(&p("2413"), 4).unwrap());
        assert!(is_dn_member(&p("423615"), 4).unwrap());
        assert!(!is_dn_member(&p("423615"), 3).unwrap());
        assert!(is_dn_member(&p("1"), 1).unwrap());
        assert!(!is_dn_member(&p("12"), 1).unwrap());
        assert!(is_dn_member(&p("12"), 2).unwrap());
        assert!(is_dn_member(&p("4321"), 2).unwrap());
        assert!(is_dn_member(&Permutation::empty(), 2).unwrap());
        assert!(is_dn_member(&p("321"), 5).unwrap());
        assert!(matches!(
            is_dn_member(&p("1"), 0),
            Err(Error::InvalidDepthClass)
        ));
    }

    #[test]
    fn depth_chain_is_monotone() {
        for n in 1..=7 {
            oracle::for_each_permutation(n, |v| {
                let q = Permutation::pattern_of(v);
                let mut previous = is_dn_member(&q, 2).unwrap();
                for depth in 3..=7 {
                    let now = is_dn_member(&q, depth).unwrap();
                    assert!(!previous || now, "monotonicity broke at {v:?} depth {depth}");
                    previous = now;
                }
                if n <= 7 {
                    // anything of length <= depth is a member
                    assert!(is_dn_member(&q, n.max(2)).unwrap());
                }
            });
        }
    }

    #[test]
    fn d2_counts_are_the_separable_numbers() {
        let expected = [1u64, 2, 6, 22, 90, 394, 1806];
        for n in 1..=7 {
            assert_eq!(count_members(FractalClass::Dn(2), n, None), expected[n - 1]);
        }
    }

    #[test]
    fn membership_is_hereditary_under_deletion() {
        for n in 1..=7 {
            oracle::for_each_permutation(n, |v| {
                let q = Permutation::pattern_of(v);
                if is_f321_member(&q) {
                    for d in crate::perm::one_point_deletions(&q) {
                        assert!(is_f321_member(&d), "deletion of {v:?} left the class");
                    }
                }
            });
        }
    }

    #[test]
    fn small_counts_match_series() {
        let expected = [1u64, 2, 6, 24, 116, 625, 3580];
        for n in 1..=7 {
            assert_eq!(
                count_members(FractalClass::F321, n, None),
                expected[n - 1],
                "length {n}"
            );
        }
    }

    #[test]
    fn basis_through_length_six() {
        let report = basis_search(FractalClass::F321, 6, &BasisOptions::default()).unwrap();
        let found: Vec<String> = report
            .minimal_patterns
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(found, vec!["25314", "35142", "41352", "42513", "362514", "531642"]);
        assert!(report.timings.len() == 6);
        // every reported pattern fails membership while all deletions pass
        for q in &report.minimal_patterns {
            assert!(!is_f321_member(q));
            for d in crate::perm::one_point_deletions(q) {
                assert!(is_f321_member(&d));
            }
        }
    }

    #[test]
    fn long_lengths_are_gated() {
        assert!(basis_search(FractalClass::F321, 11, &BasisOptions::default()).is_err());
        assert!(basis_search(FractalClass::F321, 13, &BasisOptions::default()).is_err());
    }

    #[test]
    fn checkpoint_skips_completed_units() {
        let dir = std::env::temp_dir().join(format!("permfrac-ckpt-{}", std::process::id()));
        let _ = std::fs::remove_file(&dir);
        let opts = BasisOptions {
            checkpoint: Some(dir.clone()),
            ..Default::default()
        };
        let first = basis_search(FractalClass::F321, 5, &opts).unwrap();
        assert_eq!(first.minimal_patterns.len(), 4);
        let text = std::fs::read_to_string(&dir).unwrap();
        assert!(text.lines().count() > 0);
        // a rerun finds nothing new because every unit is recorded
        let second = basis_search(FractalClass::F321, 5, &opts).unwrap();
        assert!(second.minimal_patterns.is_empty());
        let _ = std::fs::remove_file(&dir);
    }
}
