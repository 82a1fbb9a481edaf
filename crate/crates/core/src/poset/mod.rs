//! Finite posets on `{0, .., n-1}`.
//!
//! The order is stored as one bitmask row per element in each direction,
//! so `x <= y` is a single bit test. The cover relation (transitive
//! reduction) is derived at construction time and kept as a sorted pair
//! list plus per-element masks.

mod canon;
mod embed;
mod ideals;

pub use canon::CanonicalForm;
pub use embed::{find_embedding, Embedding};
pub use ideals::count_hereditary_quasi;

use crate::bits::{bit, bits, contains, full, Mask, MAX_ELEMENTS};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `up[i]` holds every `j` with `i <= j`.
    up: Vec<Mask>,
    /// `down[j]` holds every `i` with `i <= j`.
    down: Vec<Mask>,
    upper_covers: Vec<Mask>,
    lower_covers: Vec<Mask>,
    covers: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds the poset generated by `pairs`, where `(i, j)` asserts `i <= j`.
    ///
    /// The pairs need not be covers; the reflexive-transitive closure is
    /// taken and the cover relation recomputed from it.
    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::Size(format!(
                "posets are limited to {MAX_ELEMENTS} elements, got {n}"
            )));
        }
        let mut up: Vec<Mask> = (0..n).map(bit).collect();
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::Index { index, n });
                }
            }
            up[i] |= bit(j);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if contains(*row, k) {
                    *row |= row_k;
                }
            }
        }
        Poset::from_up_sets(up)
    }

    /// Builds a poset from a full `leq` relation given as up-set rows.
    /// The rows must already be reflexive and transitive.
    pub(crate) fn from_up_sets(up: Vec<Mask>) -> Result<Poset> {
        let n = up.len();
        let mut down = vec![0 as Mask; n];
        for (i, &row) in up.iter().enumerate() {
            for j in bits(row) {
                down[j] |= bit(i);
            }
        }
        for i in 0..n {
            let both = up[i] & down[i] & !bit(i);
            if both != 0 {
                let j = both.trailing_zeros() as usize;
                return Err(Error::Cycle(i.min(j), i.max(j)));
            }
        }
        let mut upper_covers = vec![0 as Mask; n];
        let mut lower_covers = vec![0 as Mask; n];
        let mut covers = Vec::new();
        for i in 0..n {
            let strict_up = up[i] & !bit(i);
            for j in bits(strict_up) {
                let between = strict_up & down[j] & !bit(j);
                if between == 0 {
                    upper_covers[i] |= bit(j);
                    lower_covers[j] |= bit(i);
                    covers.push((i, j));
                }
            }
        }
        Ok(Poset {
            n,
            up,
            down,
            upper_covers,
            lower_covers,
            covers,
        })
    }

    /// Builds a poset from a boolean `leq` matrix, checking that it is a
    /// partial order.
    pub fn from_relation(leq: &[Vec<bool>]) -> Result<Poset> {
        let n = leq.len();
        if n > MAX_ELEMENTS {
            return Err(Error::Size(format!(
                "posets are limited to {MAX_ELEMENTS} elements, got {n}"
            )));
        }
        let mut pairs = Vec::new();
        for (i, row) in leq.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Size(format!("row {i} has length {}", row.len())));
            }
            for (j, &related) in row.iter().enumerate() {
                if related {
                    pairs.push((i, j));
                }
            }
        }
        let p = Poset::from_covers(n, &pairs)?;
        // The closure must not have added anything.
        for (i, row) in leq.iter().enumerate() {
            for (j, &related) in row.iter().enumerate() {
                if related != p.leq(i, j) && i != j {
                    return Err(Error::NotQuasiorder(format!(
                        "relation is not transitive at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn antichain(n: usize) -> Result<Poset> {
        Poset::from_covers(n, &[])
    }

    pub fn chain(n: usize) -> Result<Poset> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(n, &pairs)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        contains(self.up[x], y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `x ≺ y`.
    #[inline]
    pub fn covers(&self, x: usize, y: usize) -> bool {
        contains(self.upper_covers[x], y)
    }

    /// Cover pairs `(x, y)` with `x ≺ y`, sorted.
    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.leq(i, j)).collect())
            .collect()
    }

    pub fn upper_covers_of(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.upper_covers[x])
    }

    pub fn lower_covers_of(&self, x: usize) -> impl Iterator<Item = usize> {
        bits(self.lower_covers[x])
    }

    pub fn upper_cover_count(&self, x: usize) -> usize {
        self.upper_covers[x].count_ones() as usize
    }

    pub fn lower_cover_count(&self, x: usize) -> usize {
        self.lower_covers[x].count_ones() as usize
    }

    /// Elements `>= x`, ascending.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        bits(self.up[x]).collect()
    }

    /// Elements `<= x`, ascending.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        bits(self.down[x]).collect()
    }

    #[inline]
    pub(crate) fn up_mask(&self, x: usize) -> Mask {
        self.up[x]
    }

    #[inline]
    pub(crate) fn down_mask(&self, x: usize) -> Mask {
        self.down[x]
    }

    #[inline]
    pub(crate) fn upper_cover_mask(&self, x: usize) -> Mask {
        self.upper_covers[x]
    }

    #[inline]
    pub(crate) fn lower_cover_mask(&self, x: usize) -> Mask {
        self.lower_covers[x]
    }

    #[inline]
    pub(crate) fn all_mask(&self) -> Mask {
        full(self.n)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.down[x] == bit(x)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up[x] == bit(x)).collect()
    }

    /// The order dual: `x <= y` here iff `y <= x` in the result.
    pub fn dual(&self) -> Poset {
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            upper_covers: self.lower_covers.clone(),
            lower_covers: self.upper_covers.clone(),
            covers,
        }
    }

    /// Relabels elements: old element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut up = vec![0 as Mask; self.n];
        for i in 0..self.n {
            up[perm[i]] = bits(self.up[i]).fold(0, |acc, j| acc | bit(perm[j]));
        }
        Poset::from_up_sets(up).expect("relabeling preserves the order axioms")
    }

    /// The subposet induced on `elements`; element `elements[k]` becomes `k`.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let up = elements
            .iter()
            .map(|&x| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.leq(x, y))
                    .fold(0, |acc, (k, _)| acc | bit(k))
            })
            .collect();
        Poset::from_up_sets(up).expect("induced subposets are posets")
    }

    /// A linear extension, listing elements so that smaller ones come
    /// first; ties broken by lowest index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(), x));
        order
    }

    /// Length of the longest chain ending in each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.n];
        for x in self.linear_extension() {
            height[x] = self
                .lower_covers_of(x)
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Number of order ideals (hereditary subsets), including the empty
    /// set and the whole poset.
    pub fn count_downsets(&self) -> u128 {
        ideals::count_downsets(self)
    }

    /// Canonical form: equal for two posets iff they are isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_labeling(self).0
    }

    /// A relabeling into canonical position; `perm[i]` is the canonical
    /// index of element `i`.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        canon::canonical_labeling(self).1
    }

    /// The poset relabeled into canonical position.
    pub fn canonical_poset(&self) -> Poset {
        self.relabel(&self.canonical_labeling())
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.n == other.n
            && self.covers.len() == other.covers.len()
            && self.canonical_form() == other.canonical_form()
    }
}
