use std::collections::HashSet;

use crate::bits::{bit, bits, full, Mask};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Whether the lattice can be reduced to two elements by repeatedly
/// deleting a doubly irreducible element. Each deletion leaves a
/// sublattice, so this builds a chain of sublattices of every size.
pub fn is_dismantlable(l: &Lattice) -> bool {
    let mut rest = full(l.len());
    while rest.count_ones() > 2 {
        match bits(rest).find(|&x| is_doubly_irreducible_in(l, rest, x)) {
            Some(x) => rest &= !bit(x),
            None => return false,
        }
    }
    true
}

/// `x` has exactly one lower and one upper cover inside the sublattice `set`.
fn is_doubly_irreducible_in(l: &Lattice, set: Mask, x: usize) -> bool {
    let p = l.poset();
    let below = p.down_mask(x) & set & !bit(x);
    let above = p.up_mask(x) & set & !bit(x);
    let lower_covers = bits(below)
        .filter(|&y| p.up_mask(y) & below & !bit(y) == 0)
        .count();
    let upper_covers = bits(above)
        .filter(|&y| p.down_mask(y) & above & !bit(y) == 0)
        .count();
    lower_covers == 1 && upper_covers == 1
}

/// Largest lattice accepted by [`is_dismantlable_exhaustive`].
pub const EXHAUSTIVE_MAX: usize = 20;

/// Searches directly for a chain `L_1 ⊂ L_2 ⊂ .. ⊂ L_n = L` of sublattices
/// with `|L_i| = i`, removing any element whose deletion keeps the set
/// closed under join and meet. Memoized over subsets.
pub fn is_dismantlable_exhaustive(l: &Lattice) -> Result<bool> {
    let n = l.len();
    if n > EXHAUSTIVE_MAX {
        return Err(Error::Size(format!(
            "exhaustive dismantling is limited to {EXHAUSTIVE_MAX} elements, got {n}"
        )));
    }
    let mut dead = HashSet::new();
    Ok(shrink(l, full(n), &mut dead))
}

fn shrink(l: &Lattice, set: Mask, dead: &mut HashSet<Mask>) -> bool {
    if set.count_ones() <= 1 {
        return true;
    }
    if dead.contains(&set) {
        return false;
    }
    for x in bits(set) {
        let smaller = set & !bit(x);
        if l.is_sublattice_mask(smaller) && shrink(l, smaller, dead) {
            return true;
        }
    }
    dead.insert(set);
    false
}
