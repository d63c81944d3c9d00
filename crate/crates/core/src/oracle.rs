//! Brute-force ground truth: exhaustive permutation enumeration with a
//! parallel counting driver, the cell conflict graph of a skeleton grid,
//! independent-set counting, and non-crossing graphs on a convex polygon.

use crate::{Error, QSeries, Result, Q, Z};

/// Advance `values` to the next permutation in lexicographic order.
/// Returns false (leaving the slice sorted ascending) after the last one.
pub fn next_permutation(values: &mut [u32]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        values.reverse();
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Visit every permutation of {1..n} in lexicographic order.
pub fn for_each_permutation<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&values);
        if !next_permutation(&mut values) {
            return;
        }
    }
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.filter(|&j| j > 0).unwrap_or_else(|| {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    })
}

/// Visit every permutation of {1..n}, partitioned over `jobs` workers by the
/// first two entries. Each worker folds into its own accumulator; the final
/// result is the order-independent merge of the per-worker values.
pub fn fold_permutations_parallel<T, F, M>(n: usize, jobs: Option<usize>, init: T, f: F, merge: M) -> T
where
    T: Send + Clone,
    F: Fn(&mut T, &[u32]) + Sync,
    M: Fn(T, T) -> T,
{
    let jobs = default_jobs(jobs);
    if n < 3 || jobs == 1 {
        let mut acc = init;
        for_each_permutation(n, |v| f(&mut acc, v));
        return acc;
    }
    // tasks: ordered pairs (a, b), a != b, in lexicographic order
    let mut prefixes = Vec::new();
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            if a != b {
                prefixes.push((a, b));
            }
        }
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(prefixes.len()) {
            let mut acc = init.clone();
            let next = &next;
            let results = &results;
            let prefixes = &prefixes;
            let f = &f;
            scope.spawn(move || {
                let mut values = Vec::with_capacity(n);
                loop {
                    let t = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if t >= prefixes.len() {
                        break;
                    }
                    let (a, b) = prefixes[t];
                    values.clear();
                    values.push(a);
                    values.push(b);
                    values.extend((1..=n as u32).filter(|&v| v != a && v != b));
                    loop {
                        f(&mut acc, &values);
                        if !next_permutation(&mut values[2..]) {
                            break;
                        }
                    }
                }
                results.lock().unwrap().push(acc);
            });
        }
    });
    let collected = results.into_inner().unwrap();
    collected.into_iter().fold(init, &merge)
}

/// Number of permutations of length n satisfying `pred`.
pub fn count_where<P: Fn(&[u32]) -> bool + Sync>(n: usize, jobs: Option<usize>, pred: P) -> u64 {
    fold_permutations_parallel(
        n,
        jobs,
        0u64,
        |acc, v| {
            if pred(v) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// A small graph given by adjacency bitmasks, used for the skeleton-cell
/// conflict graph T_n and for the chord-crossing graph of a convex polygon.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    label: String,
    adj: Vec<u32>,
}

impl ConflictGraph {
    /// Conflict graph on the n(n+1)/2 cells (i, j), 1 <= i <= j <= n, of an
    /// n-maxima skeleton grid; cells conflict when they are joined by a
    /// segment of negative slope (i < i' and j > j').
    pub fn cells(n: usize) -> Self {
        let mut cells = Vec::new();
        for i in 1..=n as u32 {
            for j in i..=n as u32 {
                cells.push((i, j));
            }
        }
        debug_assert_eq!(cells.len(), n * (n + 1) / 2);
        let mut adj = vec![0u32; cells.len()];
        for a in 0..cells.len() {
            for b in 0..cells.len() {
                let (ia, ja) = cells[a];
                let (ib, jb) = cells[b];
                if ia < ib && ja > jb {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Self {
            label: format!("T_{n}"),
            adj,
        }
    }

    /// Crossing graph of the chords of a convex m-gon: vertices are the
    /// C(m, 2) chords {a, b}; two chords conflict iff they cross internally
    /// (a < c < b < d in cyclic order). Its independent sets are exactly the
    /// non-crossing graphs on m vertices.
    pub fn chords(m: usize) -> Self {
        let mut chords = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                chords.push((a, b));
            }
        }
        let mut adj = vec![0u32; chords.len()];
        for x in 0..chords.len() {
            for y in 0..chords.len() {
                let (a, b) = chords[x];
                let (c, d) = chords[y];
                if a < c && c < b && b < d {
                    adj[x] |= 1 << y;
                    adj[y] |= 1 << x;
                }
            }
        }
        Self {
            label: format!("NC_{m}"),
            adj,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.adj.iter().filter(|m| **m == 0).count()
    }

    /// Sorted vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(|m| m.count_ones() as usize).collect();
        degs.sort_unstable();
        degs
    }
}

/// Number of independent sets of each size, as a vector indexed by size.
pub fn independent_set_counts(g: &ConflictGraph) -> Result<Vec<u64>> {
    let n = g.adj.len();
    if n > 24 {
        return Err(Error::LimitExceeded(format!(
            "independent-set counting is capped at 24 vertices, {} has {n}",
            g.label
        )));
    }
    let mut counts = vec![0u64; n + 1];
    // branch on the lowest remaining vertex: either excluded, or included
    // with its neighbourhood removed
    fn rec(adj: &[u32], remaining: u32, size: usize, counts: &mut [u64]) {
        if remaining == 0 {
            counts[size] += 1;
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        rec(adj, remaining & !(1 << v), size, counts);
        rec(adj, remaining & !(1 << v) & !adj[v], size + 1, counts);
    }
    rec(&g.adj, if n == 32 { u32::MAX } else { (1u32 << n) - 1 }, 0, &mut counts);
    Ok(counts)
}

/// Independent sets of `g` counted by size, as a series in y.
pub fn independent_set_polynomial(g: &ConflictGraph) -> Result<QSeries> {
    let counts = independent_set_counts(g)?;
    let coeffs: Vec<Q> = counts.iter().map(|&c| Q::from_integer(Z::from(c))).collect();
    let order = counts.len() - 1;
    Ok(QSeries::from_coeffs(coeffs, order))
}

/// Non-crossing graphs on m convex-position vertices, counted by number of
/// edges; returns the distribution and the total.
pub fn noncrossing_graph_counts(m: usize) -> Result<(QSeries, u64)> {
    if m > 7 {
        return Err(Error::LimitExceeded(format!(
            "non-crossing graph counting is capped at 7 vertices, got {m}"
        )));
    }
    let g = ConflictGraph::chords(m);
    let counts = independent_set_counts(&g)?;
    let total = counts.iter().sum();
    let coeffs: Vec<Q> = counts.iter().map(|&c| Q::from_integer(Z::from(c))).collect();
    let order = counts.len() - 1;
    Ok((QSeries::from_coeffs(coeffs, order), total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    #[test]
    fn lexicographic_enumeration() {
        let mut seen = Vec::new();
        for_each_permutation(3, |v| seen.push(v.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let mut count = 0u64;
        for_each_permutation(0, |v| {
            assert!(v.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn parallel_count_agrees_with_sequential() {
        for n in 0..=7 {
            let seq = count_where(n, Some(1), perm::avoids_321);
            let par = count_where(n, Some(4), perm::avoids_321);
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for n in 0..=7 {
            assert_eq!(count_where(n, None, perm::avoids_321), catalan[n]);
        }
    }

    #[test]
    fn cell_graph_shape() {
        let t2 = ConflictGraph::cells(2);
        assert_eq!(t2.vertex_count(), 3);
        assert_eq!(t2.edge_count(), 0);
        let t3 = ConflictGraph::cells(3);
        assert_eq!(t3.vertex_count(), 6);
        assert_eq!(t3.edge_count(), 1);
        for n in 4..=6 {
            assert_eq!(ConflictGraph::cells(n).isolated_vertex_count(), 4);
        }
        assert_eq!(ConflictGraph::cells(5).vertex_count(), 15);
    }

    #[test]
    fn independent_set_totals() {
        let total = |n: usize| {
            independent_set_counts(&ConflictGraph::cells(n))
                .unwrap()
                .iter()
                .sum::<u64>()
        };
        assert_eq!(total(2), 8);
        assert_eq!(total(3), 48);
        assert_eq!(total(4), 352);
    }

    #[test]
    fn noncrossing_totals() {
        assert_eq!(noncrossing_graph_counts(3).unwrap().1, 8);
        assert_eq!(noncrossing_graph_counts(4).unwrap().1, 48);
        assert!(noncrossing_graph_counts(8).is_err());
    }

    #[test]
    fn nc4_matches_t3_by_size() {
        let t3 = independent_set_counts(&ConflictGraph::cells(3)).unwrap();
        let nc4 = independent_set_counts(&ConflictGraph::chords(4)).unwrap();
        let trim = |mut v: Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        assert_eq!(trim(t3), trim(nc4));
    }
}
