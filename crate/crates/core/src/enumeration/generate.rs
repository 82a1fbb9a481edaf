//! Isomorph-free generation of lattices.
//!
//! Removing an atom from a lattice with at least three elements leaves a
//! lattice (atoms are join-irreducible, so no join is lost). Running that
//! backwards, every `n`-element lattice arises from an `(n-1)`-element one
//! by adding a new atom `j` together with its strict filter `U`. Duplicates
//! are removed by canonical form and each level is emitted in canonical
//! order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bits::{bit, bits, Mask};
use crate::error::{Error, Result};
use crate::lattice::{make_chain, Lattice};
use crate::poset::{CanonicalForm, Poset};

/// Default largest size for exhaustive enumeration.
pub const DEFAULT_MAX: usize = 9;

/// Hard ceiling even when the default is overridden.
pub const HARD_MAX: usize = 12;

/// All lattices of size `n` up to isomorphism, canonically labeled and in
/// canonical-form order. Sizes above [`DEFAULT_MAX`] are rejected.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>> {
    enumerate_lattices_with_max(n, DEFAULT_MAX)
}

/// As [`enumerate_lattices`] with an explicit size ceiling.
pub fn enumerate_lattices_with_max(n: usize, max: usize) -> Result<Vec<Lattice>> {
    check_range(n, max)?;
    Ok(enumerate_levels(n).pop().expect("at least one level"))
}

/// Levels `1..=n`: `levels[k - 1]` holds the `k`-element lattices.
pub fn enumerate_levels(n: usize) -> Vec<Vec<Lattice>> {
    let mut levels: Vec<Vec<Lattice>> = Vec::with_capacity(n);
    for size in 1..=n {
        let level = match size {
            1 | 2 => vec![make_chain(size).expect("small chain").canonical()],
            _ => next_level(levels.last().expect("previous level")),
        };
        levels.push(level);
    }
    levels
}

pub(crate) fn check_range(n: usize, max: usize) -> Result<()> {
    let max = max.min(HARD_MAX);
    if n == 0 || n > max {
        Err(Error::Size(format!(
            "lattice enumeration supports 1 <= n <= {max}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Every lattice one element larger than a lattice in `previous`.
pub fn next_level(previous: &[Lattice]) -> Vec<Lattice> {
    let found: Vec<(CanonicalForm, Lattice)> = previous
        .par_iter()
        .flat_map_iter(|l| {
            atom_extensions(l)
                .into_iter()
                .map(|ext| (ext.canonical_form(), ext))
        })
        .collect();
    let mut unique: BTreeMap<CanonicalForm, Lattice> = BTreeMap::new();
    for (form, l) in found {
        unique.entry(form).or_insert(l);
    }
    unique.into_values().map(|l| l.canonical()).collect()
}

/// All lattices obtained from `l` (with at least two elements) by adding a
/// new atom. The new element gets index `l.len()`.
pub fn atom_extensions(l: &Lattice) -> Vec<Lattice> {
    let n = l.len();
    assert!(
        n >= 2,
        "atom extension needs a lattice with two or more elements"
    );
    let p = l.poset();
    let bottom = l.bottom();
    // Non-bottom elements, top first, so that every element is decided
    // after all elements above it.
    let mut order: Vec<usize> = (0..n).filter(|&x| x != bottom).collect();
    order.sort_by_key(|&x| (p.up_mask(x).count_ones(), x));
    let mut filters = Vec::new();
    collect_filters(p, &order, 0, 0, &mut filters);
    filters
        .into_iter()
        .filter(|&u| u != 0 && admissible(l, u))
        .filter_map(|u| {
            let mut up: Vec<Mask> = (0..n).map(|x| p.up_mask(x)).collect();
            up[bottom] |= bit(n);
            up.push(bit(n) | u);
            let poset = Poset::from_up_sets(up).expect("adding an atom keeps a partial order");
            let ext = Lattice::from_poset(poset).ok();
            debug_assert!(ext.is_some(), "admissible filter must give a lattice");
            ext
        })
        .collect()
}

fn collect_filters(p: &Poset, order: &[usize], pos: usize, chosen: Mask, out: &mut Vec<Mask>) {
    if pos == order.len() {
        out.push(chosen);
        return;
    }
    let x = order[pos];
    let above = p.up_mask(x) & !bit(x);
    // Excluding x is always allowed; including it needs its whole filter.
    collect_filters(p, order, pos + 1, chosen, out);
    if above & !chosen == 0 {
        collect_filters(p, order, pos + 1, chosen | bit(x), out);
    }
}

/// Whether the new atom with strict filter `u` leaves a lattice: `u` must be
/// closed under meets that are not the bottom, and every old element must
/// have a least upper bound inside `u` (its join with the new atom).
fn admissible(l: &Lattice, u: Mask) -> bool {
    let bottom = l.bottom();
    for x in bits(u) {
        for y in bits(u) {
            let m = l.meet(x, y);
            if m != bottom && u & bit(m) == 0 {
                return false;
            }
        }
    }
    let p = l.poset();
    (0..l.len())
        .filter(|&y| y != bottom && u & bit(y) == 0)
        .all(|y| {
            let above = u & p.up_mask(y);
            let least = bits(above).fold(l.top(), |acc, z| l.meet(acc, z));
            above & bit(least) != 0
        })
}

/// Number of `n`-element lattices up to isomorphism by brute force over
/// naturally labeled posets.
///
/// Element `k` is added above a nonempty down-set of `0..k` that contains
/// `0`, so `0` is the unique minimum; the last element sits above
/// everything. Lattices among those posets are deduplicated by canonical
/// form. Shares no code with the atom-extension generator.
pub fn enumerate_lattices_oracle(n: usize) -> Result<u64> {
    if n == 0 || n > 7 {
        return Err(Error::Size(format!(
            "poset-filter oracle supports 1 <= n <= 7, got {n}"
        )));
    }
    if n <= 2 {
        return Ok(1);
    }
    let mut seen = std::collections::HashSet::new();
    let up = vec![bit(0)];
    grow(n, &up, &mut seen);
    Ok(seen.len() as u64)
}

fn grow(n: usize, up: &[Mask], seen: &mut std::collections::HashSet<CanonicalForm>) {
    let k = up.len();
    if k == n - 1 {
        let mut full_up = up.to_vec();
        for row in full_up.iter_mut() {
            *row |= bit(n - 1);
        }
        full_up.push(bit(n - 1));
        let poset = Poset::from_up_sets(full_up).expect("naturally labeled poset");
        if let Ok(l) = Lattice::from_poset(poset) {
            seen.insert(l.canonical_form());
        }
        return;
    }
    // Down-sets of 0..k containing 0.
    let mut downs = Vec::new();
    down_sets(up, k, 0, 0, &mut downs);
    for d in downs.into_iter().filter(|d| d & 1 == 1) {
        let mut next = up.to_vec();
        for x in bits(d) {
            next[x] |= bit(k);
        }
        next.push(bit(k));
        grow(n, &next, seen);
    }
}

/// Down-sets of the naturally labeled poset on `0..k`, deciding elements
/// from `k - 1` down so that everything above an element is settled first.
fn down_sets(up: &[Mask], k: usize, depth: usize, chosen: Mask, out: &mut Vec<Mask>) {
    if depth == k {
        out.push(chosen);
        return;
    }
    let x = k - 1 - depth;
    let above = up[x] & !bit(x);
    if above & chosen == 0 {
        down_sets(up, k, depth + 1, chosen, out);
    }
    down_sets(up, k, depth + 1, chosen | bit(x), out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let expected = [1usize, 1, 1, 2, 5, 15, 53];
        let levels = enumerate_levels(7);
        for (k, level) in levels.iter().enumerate() {
            assert_eq!(level.len(), expected[k], "n = {}", k + 1);
        }
    }

    #[test]
    fn oracle_counts() {
        let expected = [1u64, 1, 1, 2, 5, 15];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_lattices_oracle(k + 1), Ok(e));
        }
    }

    #[test]
    fn range_checks() {
        assert!(matches!(enumerate_lattices(0), Err(Error::Size(_))));
        assert!(matches!(enumerate_lattices(10), Err(Error::Size(_))));
        assert!(matches!(enumerate_lattices_oracle(8), Err(Error::Size(_))));
    }

    #[test]
    fn levels_are_canonical_and_distinct() {
        let level = enumerate_lattices(6).unwrap();
        let mut forms: Vec<_> = level.iter().map(|l| l.canonical_form()).collect();
        for (l, f) in level.iter().zip(&forms) {
            assert_eq!(l.canonical().poset(), l.poset());
            assert_eq!(&l.canonical_form(), f);
        }
        let before = forms.len();
        forms.dedup();
        assert_eq!(forms.len(), before);
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
    }
}
