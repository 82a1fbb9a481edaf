//! Induced-subposet containment by backtracking.

use super::Poset;
use crate::bits::{bit, bits, Mask};

/// An order embedding of `K` into `L`: `map[k]` is the image of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that `x <= y` in `k` iff `map(x) <= map(y)` in `l`.
    pub fn is_valid(&self, k: &Poset, l: &Poset) -> bool {
        if self.map.len() != k.len() || self.map.iter().any(|&y| y >= l.len()) {
            return false;
        }
        for x in 0..k.len() {
            for y in 0..k.len() {
                if x != y && self.map[x] == self.map[y] {
                    return false;
                }
                if k.leq(x, y) != l.leq(self.map[x], self.map[y]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for an embedding of `k` into `l` as an induced subposet.
///
/// Elements of `k` are placed in linear-extension order; each candidate
/// image must have at least as large an ideal and filter as the element it
/// represents and must relate to every already-placed image exactly as in
/// `k`. Candidates are tried lowest index first, so the result is
/// deterministic.
pub fn find_embedding(k: &Poset, l: &Poset) -> Option<Embedding> {
    if k.len() > l.len() {
        return None;
    }
    if k.is_empty() {
        return Some(Embedding { map: Vec::new() });
    }
    let order = k.linear_extension();
    let base: Vec<Mask> = order
        .iter()
        .map(|&x| {
            let need_down = k.down_mask(x).count_ones();
            let need_up = k.up_mask(x).count_ones();
            (0..l.len())
                .filter(|&y| {
                    l.down_mask(y).count_ones() >= need_down && l.up_mask(y).count_ones() >= need_up
                })
                .fold(0, |m, y| m | bit(y))
        })
        .collect();
    if base.contains(&0) {
        return None;
    }
    let mut map = vec![usize::MAX; k.len()];
    if place(k, l, &order, &base, 0, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn place(
    k: &Poset,
    l: &Poset,
    order: &[usize],
    base: &[Mask],
    depth: usize,
    used: Mask,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let all = l.all_mask();
    let mut candidates = base[depth] & !used;
    for &y in &order[..depth] {
        let image = map[y];
        candidates &= if k.leq(y, x) {
            l.up_mask(image)
        } else if k.leq(x, y) {
            l.down_mask(image)
        } else {
            all & !(l.up_mask(image) | l.down_mask(image))
        };
        if candidates == 0 {
            return false;
        }
    }
    for image in bits(candidates) {
        map[x] = image;
        if place(k, l, order, base, depth + 1, used | bit(image), map) {
            return true;
        }
    }
    map[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::n5;

    #[test]
    fn chain_into_n5() {
        let k = Poset::chain(3).unwrap();
        let e = find_embedding(&k, &n5()).unwrap();
        assert!(e.is_valid(&k, &n5()));
        assert_eq!(e.map, vec![0, 1, 3]);
    }

    #[test]
    fn antichain_not_in_chain() {
        let k = Poset::antichain(3).unwrap();
        let l = Poset::chain(8).unwrap();
        assert_eq!(find_embedding(&k, &l), None);
    }

    #[test]
    fn boolean_cube_into_itself() {
        let pairs: Vec<_> = (0..8usize)
            .flat_map(|x| {
                (0..3)
                    .filter(move |b| x >> b & 1 == 0)
                    .map(move |b| (x, x | 1 << b))
            })
            .collect();
        let b3 = Poset::from_covers(8, &pairs).unwrap();
        let e = find_embedding(&b3, &b3).unwrap();
        assert_eq!(e.map, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn empty_pattern_embeds() {
        let k = Poset::antichain(0).unwrap();
        assert_eq!(find_embedding(&k, &n5()).unwrap().map, Vec::<usize>::new());
    }
}
