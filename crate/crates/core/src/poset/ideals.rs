//! Counting order ideals (hereditary subsets).
//!
//! For a pivot `x`, the ideals avoiding `x` are exactly the ideals of the
//! part outside the filter of `x`, and the ideals containing `x` are the
//! ideal of `x` plus any ideal of the part outside that ideal:
//!
//! `N(S) = N(S \ up(x)) + N(S \ down(x))`.
//!
//! Memoized on the remaining subset as a bitmask.

use std::collections::HashMap;

use super::Poset;
use crate::bits::{bit, Mask, MAX_ELEMENTS};
use crate::error::{Error, Result};

struct Counter<'a> {
    up: &'a [Mask],
    down: &'a [Mask],
    memo: HashMap<Mask, u128>,
    prefer_maximal: bool,
}

impl Counter<'_> {
    fn count(&mut self, rest: Mask) -> u128 {
        if rest == 0 {
            return 1;
        }
        if rest.count_ones() == 1 {
            return 2;
        }
        if let Some(&known) = self.memo.get(&rest) {
            return known;
        }
        let pivot = if self.prefer_maximal {
            crate::bits::bits(rest)
                .find(|&x| self.up[x] & rest == bit(x))
                .expect("a finite poset has a maximal element")
        } else {
            rest.trailing_zeros() as usize
        };
        let total = self.count(rest & !self.up[pivot]) + self.count(rest & !self.down[pivot]);
        self.memo.insert(rest, total);
        total
    }
}

pub(super) fn count_downsets(p: &Poset) -> u128 {
    let up: Vec<Mask> = (0..p.len()).map(|x| p.up_mask(x)).collect();
    let down: Vec<Mask> = (0..p.len()).map(|x| p.down_mask(x)).collect();
    Counter {
        up: &up,
        down: &down,
        memo: HashMap::new(),
        prefer_maximal: true,
    }
    .count(p.all_mask())
}

/// Counts the hereditary subsets of a quasiordered set.
///
/// `rel[x][y]` means `x ⊴ y`; the relation must be reflexive and transitive
/// but need not be antisymmetric. A subset `X` is hereditary when
/// `y ⊴ x` and `x ∈ X` imply `y ∈ X`.
pub fn count_hereditary_quasi(rel: &[Vec<bool>]) -> Result<u128> {
    let n = rel.len();
    if n > MAX_ELEMENTS {
        return Err(Error::Size(format!(
            "quasiorders are limited to {MAX_ELEMENTS} elements, got {n}"
        )));
    }
    let mut up = vec![0 as Mask; n];
    let mut down = vec![0 as Mask; n];
    for (x, row) in rel.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotQuasiorder(format!(
                "row {x} has length {}",
                row.len()
            )));
        }
        if !row[x] {
            return Err(Error::NotQuasiorder(format!("not reflexive at {x}")));
        }
        for (y, &related) in row.iter().enumerate() {
            if related {
                up[x] |= bit(y);
                down[y] |= bit(x);
            }
        }
    }
    for x in 0..n {
        for y in crate::bits::bits(up[x]) {
            if up[y] & !up[x] != 0 {
                let z = (up[y] & !up[x]).trailing_zeros();
                return Err(Error::NotQuasiorder(format!(
                    "not transitive: {x} ⊴ {y} ⊴ {z} but not {x} ⊴ {z}"
                )));
            }
        }
    }
    let all = crate::bits::full(n);
    Ok(Counter {
        up: &up,
        down: &down,
        memo: HashMap::new(),
        prefer_maximal: false,
    }
    .count(all))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets_brute(p: &Poset) -> u128 {
        let n = p.len();
        (0u64..1 << n)
            .filter(|&s| {
                (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !p.leq(y, x) || s >> y & 1 == 1))
            })
            .count() as u128
    }

    #[test]
    fn antichain_and_chain() {
        assert_eq!(Poset::antichain(3).unwrap().count_downsets(), 8);
        assert_eq!(Poset::chain(4).unwrap().count_downsets(), 5);
        assert_eq!(Poset::antichain(0).unwrap().count_downsets(), 1);
    }

    #[test]
    fn one_bottom_two_tops() {
        let p = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(subsets_brute(&p), 5);
        assert_eq!(p.count_downsets(), 5);
    }

    #[test]
    fn quasi_identity_and_full() {
        let id: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        assert_eq!(count_hereditary_quasi(&id).unwrap(), 8);
        for k in 1..5 {
            let full = vec![vec![true; k]; k];
            assert_eq!(count_hereditary_quasi(&full).unwrap(), 2);
        }
    }

    #[test]
    fn quasi_mutual_pair_plus_isolated() {
        let rel = vec![
            vec![true, true, false],
            vec![true, true, false],
            vec![false, false, true],
        ];
        assert_eq!(count_hereditary_quasi(&rel).unwrap(), 4);
    }

    #[test]
    fn quasi_rejects_bad_relations() {
        let not_reflexive = vec![vec![false, true], vec![false, true]];
        assert!(matches!(
            count_hereditary_quasi(&not_reflexive),
            Err(Error::NotQuasiorder(_))
        ));
        let not_transitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            count_hereditary_quasi(&not_transitive),
            Err(Error::NotQuasiorder(_))
        ));
    }

    #[test]
    fn matches_brute_force_on_small_posets() {
        let posets = [
            Poset::from_covers(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).unwrap(),
            Poset::from_covers(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]).unwrap(),
            Poset::from_covers(7, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for p in &posets {
            assert_eq!(p.count_downsets(), subsets_brute(p));
        }
    }
}
