//! Exhaustive block-decomposition invariants over all permutations of
//! length 2..=10: inflating the decomposition reproduces the input, and the
//! canonical block properties hold for each kind.

use permfrac::perm::{absolutely_irreducible, minus_indecomposable, plus_indecomposable};
use permfrac::{decompose, inflate, oracle, DecompositionKind, Permutation};

#[test]
fn roundtrip_and_block_properties_exhaustive() {
    for n in 2..=10usize {
        let checked = oracle::fold_permutations_parallel(
            n,
            None,
            0u64,
            |count, v| {
                let p = Permutation::pattern_of(v);
                let d = decompose(&p).unwrap();
                assert_eq!(inflate(&d.quotient, &d.blocks).unwrap(), p, "at {v:?}");
                match d.kind {
                    DecompositionKind::Sum => {
                        assert!(d.blocks.iter().all(|b| plus_indecomposable(b.values())));
                        assert_eq!(d.quotient, Permutation::identity(d.blocks.len()));
                    }
                    DecompositionKind::Skew => {
                        assert!(d.blocks.iter().all(|b| minus_indecomposable(b.values())));
                    }
                    DecompositionKind::Simple => {
                        assert!(absolutely_irreducible(d.quotient.values()), "at {v:?}");
                        assert!(d.quotient.len() >= 4, "at {v:?}");
                    }
                }
                *count += 1;
            },
            |a, b| a + b,
        );
        let factorial: u64 = (1..=n as u64).product();
        assert_eq!(checked, factorial);
    }
}
