//! Finite lattices: validation, join/meet tables, irreducible elements,
//! transposed intervals and standard constructions.

mod build;

pub use build::{make_boolean, make_chain, make_l_family, make_mk, make_ordinal_sum, make_product};

use crate::bits::{bit, bits, Mask};
use crate::error::{Error, MissingBound, Result};
use crate::poset::Poset;

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.len())
            .field("covers", &self.poset.cover_pairs())
            .finish()
    }
}

/// Irreducible and reducible elements of a lattice, as sorted index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleSets {
    pub jir: Vec<usize>,
    pub mir: Vec<usize>,
    pub dir: Vec<usize>,
    pub jred: Vec<usize>,
    pub mred: Vec<usize>,
    /// `lower_cover[p]` is `Some(p_*)` exactly for join-irreducible `p`.
    pub lower_cover: Vec<Option<usize>>,
    /// `upper_cover[m]` is `Some(m^*)` exactly for meet-irreducible `m`.
    pub upper_cover: Vec<Option<usize>>,
}

impl Lattice {
    /// Checks that `p` is a lattice and tabulates joins and meets.
    ///
    /// Pairs are scanned in index order (join before meet), and the first
    /// pair without a least upper or greatest lower bound is reported.
    pub fn from_poset(p: Poset) -> Result<Lattice> {
        let n = p.len();
        if n == 0 {
            return Err(Error::EmptyLattice("the empty poset has no bottom"));
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let j =
                    least_of(&p, p.up_mask(x) & p.up_mask(y), true).ok_or(Error::NotLattice {
                        x,
                        y,
                        missing: MissingBound::Join,
                    })?;
                let m = least_of(&p, p.down_mask(x) & p.down_mask(y), false).ok_or(
                    Error::NotLattice {
                        x,
                        y,
                        missing: MissingBound::Meet,
                    },
                )?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let bottom = (1..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (1..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(Lattice {
            poset: p,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<Lattice> {
        Lattice::from_poset(Poset::from_covers(n, pairs)?)
    }

    #[inline]
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    /// Always false: lattices are nonempty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    /// Join of a nonempty list of elements.
    pub fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.bottom, |acc, &x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.top, |acc, &x| self.meet(acc, x))
    }

    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        self.poset.cover_pairs()
    }

    /// The dual lattice (same element indices, order reversed).
    pub fn dual(&self) -> Lattice {
        Lattice {
            poset: self.poset.dual(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Relabels elements: old `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Lattice {
        Lattice::from_poset(self.poset.relabel(perm)).expect("relabeling preserves lattices")
    }

    pub fn canonical_form(&self) -> crate::poset::CanonicalForm {
        self.poset.canonical_form()
    }

    /// The lattice relabeled into canonical position.
    pub fn canonical(&self) -> Lattice {
        self.relabel(&self.poset.canonical_labeling())
    }

    pub fn irreducibles(&self) -> IrreducibleSets {
        let n = self.len();
        let p = &self.poset;
        let mut sets = IrreducibleSets {
            jir: Vec::new(),
            mir: Vec::new(),
            dir: Vec::new(),
            jred: Vec::new(),
            mred: Vec::new(),
            lower_cover: vec![None; n],
            upper_cover: vec![None; n],
        };
        for x in 0..n {
            let lower = p.lower_cover_count(x);
            let upper = p.upper_cover_count(x);
            if lower == 1 {
                sets.jir.push(x);
                sets.lower_cover[x] = p.lower_covers_of(x).next();
            } else if lower >= 2 {
                sets.jred.push(x);
            }
            if upper == 1 {
                sets.mir.push(x);
                sets.upper_cover[x] = p.upper_covers_of(x).next();
            } else if upper >= 2 {
                sets.mred.push(x);
            }
            if lower == 1 && upper == 1 {
                sets.dir.push(x);
            }
        }
        sets
    }

    /// Whether `[a, b]` transposes up to `[c, d]`: `b ∧ c = a` and `b ∨ c = d`.
    pub fn transposes_up(&self, a: usize, b: usize, c: usize, d: usize) -> Result<bool> {
        self.check_interval(a, b)?;
        self.check_interval(c, d)?;
        Ok(self.meet(b, c) == a && self.join(b, c) == d)
    }

    /// Whether `[a, b]` transposes down to `[c, d]`, i.e. `[c, d]` transposes up to `[a, b]`.
    pub fn transposes_down(&self, a: usize, b: usize, c: usize, d: usize) -> Result<bool> {
        self.transposes_up(c, d, a, b)
    }

    fn check_interval(&self, lower: usize, upper: usize) -> Result<()> {
        let n = self.len();
        for index in [lower, upper] {
            if index >= n {
                return Err(Error::Index { index, n });
            }
        }
        if self.leq(lower, upper) {
            Ok(())
        } else {
            Err(Error::Interval { lower, upper })
        }
    }

    /// Exhaustive check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// First triple in index order violating distributivity.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Whether the subset is closed under this lattice's join and meet.
    pub(crate) fn is_sublattice_mask(&self, set: Mask) -> bool {
        bits(set).all(|x| {
            bits(set).all(|y| set & bit(self.join(x, y)) != 0 && set & bit(self.meet(x, y)) != 0)
        })
    }
}

fn least_of(p: &Poset, bounds: Mask, upper: bool) -> Option<usize> {
    bits(bounds).find(|&u| {
        let cone = if upper { p.up_mask(u) } else { p.down_mask(u) };
        bounds & !cone == 0
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn n5() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).unwrap()
    }

    #[test]
    fn chain_tables() {
        let c = make_chain(3).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(c.join(x, y), x.max(y));
                assert_eq!(c.meet(x, y), x.min(y));
            }
        }
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = Poset::antichain(2).unwrap();
        assert_eq!(
            Lattice::from_poset(p),
            Err(Error::NotLattice {
                x: 0,
                y: 1,
                missing: MissingBound::Join
            })
        );
    }

    #[test]
    fn empty_is_not_a_lattice() {
        assert!(matches!(
            Lattice::from_poset(Poset::antichain(0).unwrap()),
            Err(Error::EmptyLattice(_))
        ));
    }

    #[test]
    fn n5_tables() {
        let l = n5();
        assert_eq!(l.join(1, 2), 4);
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 4);
    }

    #[test]
    fn n5_irreducibles() {
        let irr = n5().irreducibles();
        assert_eq!(irr.jir, vec![1, 2, 3]);
        assert_eq!(irr.jred, vec![4]);
        assert_eq!(irr.lower_cover[3], Some(1));
        assert_eq!(irr.mir, vec![1, 2, 3]);
        assert_eq!(irr.mred, vec![0]);
        assert_eq!(irr.dir, vec![1, 2, 3]);
    }

    #[test]
    fn boolean_and_chain_irreducibles() {
        let irr = make_boolean(3).unwrap().irreducibles();
        assert_eq!(irr.jir.len(), 3);
        assert_eq!(irr.jred.len(), 4);
        let irr = make_chain(5).unwrap().irreducibles();
        assert_eq!(irr.jir, vec![1, 2, 3, 4]);
        assert!(irr.jred.is_empty());
    }

    #[test]
    fn transposition() {
        let l = n5();
        // [0, b] transposes up to [a, top] with a = 1, b = 2.
        assert_eq!(l.transposes_up(0, 2, 1, 4), Ok(true));
        assert_eq!(l.transposes_down(1, 4, 0, 2), Ok(true));
        for x in 0..5 {
            assert_eq!(l.transposes_up(x, x, x, x), Ok(true));
        }
        let c = make_chain(3).unwrap();
        assert_eq!(c.transposes_up(0, 1, 1, 2), Ok(false));
        assert_eq!(
            c.transposes_up(2, 1, 1, 2),
            Err(Error::Interval { lower: 2, upper: 1 })
        );
    }

    #[test]
    fn distributivity() {
        assert!(make_chain(4).unwrap().is_distributive());
        assert!(!n5().is_distributive());
        assert!(n5().distributivity_witness().is_some());
        assert!(make_boolean(3).unwrap().is_distributive());
        assert!(!make_mk(3).unwrap().is_distributive());
    }

    #[test]
    fn dual_swaps_operations() {
        let l = n5();
        let d = l.dual();
        assert_eq!(d.join(1, 2), l.meet(1, 2));
        assert_eq!(d.bottom(), l.top());
        assert_eq!(d.irreducibles().jir, l.irreducibles().mir);
    }
}
