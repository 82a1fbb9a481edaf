//! Lattice congruences.
//!
//! Principal congruences are closed with a union-find worklist. The
//! quasiorder on join-irreducibles compares the congruences generated by
//! their prime quotients `[p_*, p]`; collapsing it gives the poset whose
//! order ideals are in bijection with the congruences of the lattice.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;

/// A congruence as a partition of the element set.
///
/// `class[x]` is the block index of `x`; blocks are numbered in order of
/// their least element, so two equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class: Vec<usize>,
}

impl Congruence {
    /// The identity congruence (all blocks singletons).
    pub fn identity(n: usize) -> Congruence {
        Congruence {
            class: (0..n).collect(),
        }
    }

    /// The congruence with a single block.
    pub fn total(n: usize) -> Congruence {
        Congruence { class: vec![0; n] }
    }

    /// Builds a partition from arbitrary block labels, renumbering blocks by
    /// least element. Compatibility is not checked.
    pub fn from_labels(labels: &[usize]) -> Congruence {
        let mut renumber = std::collections::HashMap::new();
        let class = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { class }
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.class[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn block_count(&self) -> usize {
        self.class.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks, each sorted, ordered by least member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &c) in self.class.iter().enumerate() {
            blocks[c].push(x);
        }
        blocks
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = vec![usize::MAX; self.block_count()];
        self.class.iter().zip(&other.class).all(|(&mine, &theirs)| {
            if image[mine] == usize::MAX {
                image[mine] = theirs;
            }
            image[mine] == theirs
        })
    }

    /// Whether the partition is compatible with join and meet.
    pub fn is_compatible(&self, l: &Lattice) -> bool {
        let n = l.len();
        let mut rep = vec![usize::MAX; self.block_count()];
        for x in 0..n {
            if rep[self.class[x]] == usize::MAX {
                rep[self.class[x]] = x;
            }
        }
        // The pairs (x, rep(x)) generate the equivalence, so checking their
        // translates suffices.
        (0..n).all(|x| {
            let r = rep[self.class[x]];
            x == r
                || (0..n).all(|z| {
                    self.related(l.join(x, z), l.join(r, z))
                        && self.related(l.meet(x, z), l.meet(r, z))
                })
        })
    }
}

impl std::fmt::Display for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        f.write_str(&blocks.join(" "))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// The least congruence containing every pair in `seeds`.
///
/// Each merged pair is queued once; its join and meet translates by every
/// element are merged in turn. The pairs queued generate the final
/// equivalence and each has all its translates inside it, so the fixed
/// point is compatible.
pub fn generate_congruence(l: &Lattice, seeds: &[(usize, usize)]) -> Congruence {
    let n = l.len();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in seeds {
        if uf.union(a, b) {
            queue.push((a, b));
        }
    }
    while let Some((x, y)) = queue.pop() {
        for z in 0..n {
            for (u, v) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                if uf.union(u, v) {
                    queue.push((u, v));
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Congruence::from_labels(&labels)
}

/// `con(a, b)`: the least congruence identifying `a` and `b`.
pub fn principal_congruence(l: &Lattice, a: usize, b: usize) -> Congruence {
    generate_congruence(l, &[(a, b)])
}

/// The least congruence containing both arguments.
pub fn congruence_join(l: &Lattice, c1: &Congruence, c2: &Congruence) -> Congruence {
    let mut seeds = Vec::new();
    for c in [c1, c2] {
        for block in c.blocks() {
            seeds.extend(block.windows(2).map(|w| (w[0], w[1])));
        }
    }
    generate_congruence(l, &seeds)
}

/// The quasiorder `p ⊴ q` iff `con(p_*, p) <= con(q_*, q)` on the
/// join-irreducible elements, together with its quotient poset.
#[derive(Clone, Debug)]
pub struct JirQuasiorder {
    /// Join-irreducible elements, ascending.
    pub jir: Vec<usize>,
    /// `prime[i]` is `con(jir[i]_*, jir[i])`.
    pub prime: Vec<Congruence>,
    /// `rel[i][j]` means `jir[i] ⊴ jir[j]`.
    pub rel: Vec<Vec<bool>>,
    /// Quotient by mutual relatedness; class `c` sits at index `c`.
    pub qu_poset: Poset,
    /// `block_of[i]` is the quotient class of `jir[i]`. Classes are
    /// numbered by their least member.
    pub block_of: Vec<usize>,
}

impl JirQuasiorder {
    pub fn new(l: &Lattice) -> JirQuasiorder {
        let irr = l.irreducibles();
        let jir = irr.jir;
        let prime: Vec<Congruence> = jir
            .iter()
            .map(|&p| {
                principal_congruence(l, irr.lower_cover[p].expect("jir has a lower cover"), p)
            })
            .collect();
        let k = jir.len();
        let rel: Vec<Vec<bool>> = (0..k)
            .map(|i| (0..k).map(|j| prime[i].refines(&prime[j])).collect())
            .collect();
        let mut block_of = vec![usize::MAX; k];
        let mut classes = 0;
        for i in 0..k {
            if block_of[i] == usize::MAX {
                for j in i..k {
                    if rel[i][j] && rel[j][i] {
                        block_of[j] = classes;
                    }
                }
                classes += 1;
            }
        }
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if rel[i][j] && block_of[i] != block_of[j] {
                    pairs.push((block_of[i], block_of[j]));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let qu_poset =
            Poset::from_covers(classes, &pairs).expect("quotient of a quasiorder is a poset");
        JirQuasiorder {
            jir,
            prime,
            rel,
            qu_poset,
            block_of,
        }
    }

    /// One representative join-irreducible per quotient class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.qu_poset.len()];
        for (i, &b) in self.block_of.iter().enumerate() {
            if reps[b] == usize::MAX {
                reps[b] = i;
            }
        }
        reps
    }
}

pub fn jir_quasiorder(l: &Lattice) -> JirQuasiorder {
    JirQuasiorder::new(l)
}

/// `|Con(L)|`, as the number of order ideals of the quotient poset.
pub fn con_count(l: &Lattice) -> u128 {
    JirQuasiorder::new(l).qu_poset.count_downsets()
}

/// Every congruence, one per order ideal of the quotient poset, realized
/// as the join of the prime-quotient congruences of its members.
///
/// Fails when the number of congruences exceeds `cap`.
pub fn con_enumerate(l: &Lattice, cap: u128) -> Result<Vec<Congruence>> {
    let q = JirQuasiorder::new(l);
    let count = q.qu_poset.count_downsets();
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let reps = q.representatives();
    let mut ideals: Vec<Vec<usize>> = vec![Vec::new()];
    // Extend ideals along a linear extension: a class may join only when
    // all classes below it are already in.
    for c in q.qu_poset.linear_extension() {
        let below: Vec<usize> = q
            .qu_poset
            .down_set(c)
            .into_iter()
            .filter(|&d| d != c)
            .collect();
        let mut extended = Vec::new();
        for ideal in &ideals {
            if below.iter().all(|d| ideal.contains(d)) {
                let mut next = ideal.clone();
                next.push(c);
                extended.push(next);
            }
        }
        ideals.extend(extended);
    }
    debug_assert_eq!(ideals.len() as u128, count);
    let irr = l.irreducibles();
    let mut out: Vec<Congruence> = ideals
        .iter()
        .map(|ideal| {
            let seeds: Vec<(usize, usize)> = ideal
                .iter()
                .map(|&c| {
                    let p = q.jir[reps[c]];
                    (irr.lower_cover[p].expect("jir has a lower cover"), p)
                })
                .collect();
            generate_congruence(l, &seeds)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Largest lattice the partition oracle accepts.
pub const ORACLE_MAX: usize = 10;

/// `|Con(L)|` by testing every set partition of the elements for
/// compatibility. Independent of the quasiorder route.
pub fn con_count_oracle(l: &Lattice) -> Result<u128> {
    let n = l.len();
    if n > ORACLE_MAX {
        return Err(Error::Size(format!(
            "partition oracle is limited to {ORACLE_MAX} elements, got {n}"
        )));
    }
    let mut labels = vec![0usize; n];
    let mut count = 0u128;
    partitions(l, &mut labels, 1, 1, &mut count);
    Ok(count)
}

/// Restricted growth strings: `labels[i] <= max(labels[..i]) + 1`.
fn partitions(l: &Lattice, labels: &mut [usize], pos: usize, used: usize, count: &mut u128) {
    let n = labels.len();
    if pos == n {
        if compatible_labels(l, labels) {
            *count += 1;
        }
        return;
    }
    for b in 0..=used {
        labels[pos] = b;
        partitions(l, labels, pos + 1, used.max(b + 1), count);
    }
}

fn compatible_labels(l: &Lattice, labels: &[usize]) -> bool {
    let n = labels.len();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[labels[x]] == usize::MAX {
            rep[labels[x]] = x;
        }
    }
    (0..n).all(|x| {
        let r = rep[labels[x]];
        x == r
            || (0..n).all(|z| {
                labels[l.join(x, z)] == labels[l.join(r, z)]
                    && labels[l.meet(x, z)] == labels[l.meet(r, z)]
            })
    })
}

/// `|Con(L)| > 2^(|L| - 5)`, compared exactly (the threshold is a
/// fraction below one for `|L| < 5`).
pub fn has_many_congruences(l: &Lattice) -> bool {
    exceeds_threshold(con_count(l), l.len())
}

/// `count > 2^(n - 5)` in exact arithmetic.
pub fn exceeds_threshold(count: u128, n: usize) -> bool {
    if n >= 5 {
        let shift = n - 5;
        shift >= 128 || count > 1u128 << shift
    } else {
        // count * 2^(5 - n) > 1
        count
            .checked_shl((5 - n) as u32)
            .is_none_or(|scaled| scaled > 1)
    }
}

/// Structural conditions that force few congruences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FewCriteria {
    pub jred_count: usize,
    pub mred_count: usize,
    pub jred_ge4: bool,
    pub mred_ge4: bool,
    /// First pair `p < q` of join-irreducibles with
    /// `con(p_*, p) = con(q_*, q)`, if any.
    pub jir_collision: Option<(usize, usize)>,
}

impl FewCriteria {
    /// Whether the criteria alone force few congruences: at least four
    /// join- or meet-reducible elements, or exactly three join-reducible
    /// elements together with a collision.
    pub fn forces_few(&self) -> bool {
        self.jred_ge4 || self.mred_ge4 || (self.jred_count == 3 && self.jir_collision.is_some())
    }
}

pub fn few_criteria(l: &Lattice) -> FewCriteria {
    let irr = l.irreducibles();
    let q = JirQuasiorder::new(l);
    let mut jir_collision = None;
    'search: for i in 0..q.jir.len() {
        for j in i + 1..q.jir.len() {
            if q.prime[i] == q.prime[j] {
                jir_collision = Some((q.jir[i], q.jir[j]));
                break 'search;
            }
        }
    }
    FewCriteria {
        jred_count: irr.jred.len(),
        mred_count: irr.mred.len(),
        jred_ge4: irr.jred.len() >= 4,
        mred_ge4: irr.mred.len() >= 4,
        jir_collision,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::tests::n5;
    use crate::lattice::{make_boolean, make_chain, make_mk};

    // N5 labels: 0 bottom, a = 1, c = 3 (a < c), b = 2, top = 4.

    #[test]
    fn principal_identity() {
        let l = n5();
        for a in 0..5 {
            assert_eq!(principal_congruence(&l, a, a), Congruence::identity(5));
        }
    }

    #[test]
    fn principal_in_n5() {
        let l = n5();
        let c = principal_congruence(&l, 0, 2);
        assert_eq!(c.blocks(), vec![vec![0, 2], vec![1, 3, 4]]);
        let c = principal_congruence(&l, 1, 3);
        assert_eq!(c.blocks(), vec![vec![0], vec![1, 3], vec![2], vec![4]]);
    }

    #[test]
    fn join_of_congruences() {
        let l = n5();
        let ac = principal_congruence(&l, 1, 3);
        let ob = principal_congruence(&l, 0, 2);
        assert_eq!(congruence_join(&l, &Congruence::identity(5), &ac), ac);
        assert_eq!(congruence_join(&l, &ac, &ac), ac);
        let both = congruence_join(&l, &ac, &ob);
        assert_eq!(both, generate_congruence(&l, &[(1, 3), (0, 2)]));
        // a ≡ c and 0 ≡ b already collapse c ≡ top and a ≡ top; the two
        // blocks {0, b} and {a, c, top} stay apart.
        assert_eq!(both.blocks(), vec![vec![0, 2], vec![1, 3, 4]]);
        assert!(both.is_compatible(&l));
    }

    #[test]
    fn quasiorder_of_chain_is_antichain() {
        let q = jir_quasiorder(&make_chain(5).unwrap());
        assert_eq!(q.qu_poset.len(), 4);
        assert!(q.qu_poset.cover_pairs().is_empty());
    }

    #[test]
    fn quasiorder_of_n5() {
        let q = jir_quasiorder(&n5());
        // Three classes: [c] below [a] and [b], [a] and [b] incomparable.
        let expected = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(q.qu_poset.is_isomorphic(&expected));
        let c = q.block_of[q.jir.iter().position(|&x| x == 3).unwrap()];
        assert_eq!(q.qu_poset.minimal_elements(), vec![c]);
    }

    #[test]
    fn quasiorder_of_m3_is_a_point() {
        let q = jir_quasiorder(&make_mk(3).unwrap());
        assert_eq!(q.qu_poset.len(), 1);
        assert_eq!(q.block_of, vec![0, 0, 0]);
    }

    #[test]
    fn counts() {
        assert_eq!(con_count(&make_chain(5).unwrap()), 16);
        assert_eq!(con_count(&make_mk(3).unwrap()), 2);
        assert_eq!(con_count(&n5()), 5);
        assert_eq!(con_count(&make_boolean(3).unwrap()), 8);
        assert_eq!(con_count(&make_chain(1).unwrap()), 1);
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(con_count_oracle(&make_chain(4).unwrap()), Ok(8));
        assert_eq!(con_count_oracle(&n5()), Ok(5));
        assert_eq!(con_count_oracle(&make_mk(3).unwrap()), Ok(2));
        assert_eq!(con_count_oracle(&make_chain(1).unwrap()), Ok(1));
        assert!(matches!(
            con_count_oracle(&make_chain(11).unwrap()),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn enumerate_small() {
        let one = con_enumerate(&make_chain(1).unwrap(), 100).unwrap();
        assert_eq!(one, vec![Congruence::identity(1)]);
        let l = n5();
        let all = con_enumerate(&l, 100).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all.contains(&Congruence::identity(5)));
        assert!(all.contains(&Congruence::total(5)));
        assert!(all.iter().all(|c| c.is_compatible(&l)));
        assert_eq!(
            con_enumerate(&make_chain(3).unwrap(), 100).unwrap().len(),
            4
        );
        assert_eq!(
            con_enumerate(&make_chain(6).unwrap(), 8),
            Err(Error::CapExceeded { count: 32, cap: 8 })
        );
    }

    #[test]
    fn threshold() {
        assert!(has_many_congruences(&make_chain(5).unwrap()));
        assert!(!has_many_congruences(
            &crate::lattice::make_l_family(8).unwrap()
        ));
        assert!(has_many_congruences(&make_mk(3).unwrap()));
        assert!(has_many_congruences(&make_chain(1).unwrap()));
        assert!(exceeds_threshold(1, 4));
        assert!(!exceeds_threshold(1, 5));
        assert!(!exceeds_threshold(8, 8));
        assert!(exceeds_threshold(9, 8));
    }

    #[test]
    fn few_criteria_examples() {
        let f = few_criteria(&make_boolean(4).unwrap());
        assert!(f.jred_ge4);
        let f = few_criteria(&make_chain(6).unwrap());
        assert_eq!(
            f,
            FewCriteria {
                jred_count: 0,
                mred_count: 0,
                jred_ge4: false,
                mred_ge4: false,
                jir_collision: None
            }
        );
        let f = few_criteria(&make_mk(3).unwrap());
        assert_eq!(f.jred_count, 1);
        assert_eq!(f.jir_collision, Some((1, 2)));
        assert!(!f.forces_few());
    }

    #[test]
    fn refinement() {
        let id = Congruence::identity(4);
        let all = Congruence::total(4);
        assert!(id.refines(&all));
        assert!(!all.refines(&id));
        let mid = Congruence::from_labels(&[7, 7, 3, 3]);
        assert_eq!(mid.blocks(), vec![vec![0, 1], vec![2, 3]]);
        assert!(id.refines(&mid) && mid.refines(&all));
    }
}
