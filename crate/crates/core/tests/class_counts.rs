//! Cross-module count checks: brute-force enumeration against the series
//! builders and the wreath fixed point.

#![allow(clippy::needless_range_loop)]

use permfrac::perm::{absolutely_irreducible, avoids_321, plus_indecomposable};
use permfrac::{
    build_univariate, fractal, oracle, solve_wreath_fixed_point, FractalClass, QSeries,
    SeriesKind, Q, Z,
};

fn as_u64(c: &Q) -> u64 {
    assert!(c.is_integer());
    u64::try_from(c.numer().clone()).unwrap()
}

#[test]
fn plus_indecomposable_counts_match_series() {
    let series = build_univariate(SeriesKind::APlusInd, 9).unwrap();
    for n in 1..=9usize {
        let brute = oracle::count_where(n, None, |v| avoids_321(v) && plus_indecomposable(v));
        assert_eq!(brute, as_u64(series.coeff(n)), "n = {n}");
    }
}

#[test]
fn depth_class_counts_match_the_fixed_point() {
    // numbers of simple permutations of each length, counted by brute force
    let simple_counts: Vec<u64> = (0..=5)
        .map(|n| oracle::count_where(n, None, |v| v.len() >= 4 && absolutely_irreducible(v)))
        .collect();
    assert_eq!(simple_counts[4], 2);
    assert_eq!(simple_counts[5], 6);

    for depth in [2usize, 3, 4] {
        let order = 9;
        let mut gf = QSeries::zero(order);
        for (len, &count) in simple_counts.iter().enumerate().take(depth + 1) {
            if count > 0 {
                gf = gf.add(&QSeries::monomial(
                    Q::from_integer(Z::from(count)),
                    len,
                    order,
                ));
            }
        }
        let series = solve_wreath_fixed_point(&gf, order).unwrap();
        for n in 1..=9usize {
            let brute = fractal::count_members(FractalClass::Dn(depth), n, None);
            assert_eq!(
                brute,
                as_u64(series.coeff(n)),
                "depth {depth} at length {n}"
            );
        }
    }
}

#[test]
fn simple_permutation_counts() {
    // 1, 2, 0, 2, 6, 46 including the vacuous short ones
    let expected = [1u64, 2, 0, 2, 6, 46];
    for n in 1..=6usize {
        let brute = oracle::count_where(n, None, absolutely_irreducible);
        assert_eq!(brute, expected[n - 1], "n = {n}");
    }
}

// Summing label compositions over all skeleton words reproduces the number
// of 321-avoiders: a word with m maxima and k marks accounts for
// C(n - m - 1, k - 1) permutations of length n.
#[test]
fn skeleton_words_with_labels_count_all_321_avoiders() {
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
    let words = permfrac::skeleton::enumerate_words(7).unwrap();
    let choose = |n: usize, k: usize| -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for t in 0..k.min(n - k) {
            acc = acc * (n - t) as u64 / (t + 1) as u64;
        }
        acc
    };
    for n in 1..=8usize {
        let mut total = 0u64;
        for (&(segments, marks), &count) in &words {
            let maxima = segments + 1;
            if maxima > n {
                continue;
            }
            let spare = n - maxima;
            let compositions = if marks == 0 {
                u64::from(spare == 0)
            } else if spare == 0 {
                0
            } else {
                choose(spare - 1, marks - 1)
            };
            total += count * compositions;
        }
        assert_eq!(total, catalan[n], "n = {n}");
    }
}

// The cell conflict graph's independent sets, counted by size, are the rows
// of the bivariate skeleton series.
#[test]
fn cell_graph_distribution_matches_skeleton_series() {
    let order = 28;
    let s = permfrac::build_bivariate(SeriesKind::S, order).unwrap();
    for n in 1..=6usize {
        let counts =
            oracle::independent_set_counts(&oracle::ConflictGraph::cells(n)).unwrap();
        for (k, &count) in counts.iter().enumerate() {
            assert_eq!(count, as_u64(s.coeff(n, k)), "T_{n} at size {k}");
        }
    }
}

#[test]
fn counting_series_are_nonnegative_integers() {
    for kind in SeriesKind::ALL {
        let s = build_univariate(kind, 24).unwrap();
        for k in 0..=24 {
            let c = s.coeff(k);
            assert!(c.is_integer(), "{} at {k}", kind.name());
            assert!(c.numer() >= &Z::from(0), "{} at {k}", kind.name());
        }
    }
}
