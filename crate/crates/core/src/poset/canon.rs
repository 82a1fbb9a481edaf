//! Exact canonical labeling by partition refinement plus individualization.
//!
//! Elements are first split by label-independent invariants (ideal and
//! filter sizes, cover degrees), refined until equitable against the order
//! and cover relations, and then every remaining tie is broken by trying
//! each candidate in turn. The canonical form is the lexicographically
//! least relation matrix over all leaves of that search tree. Mutual twins
//! (same strict up-set and down-set) are interchangeable, so only one
//! member of each twin class is tried per branching cell.

use super::Poset;
use crate::bits::{bit, bits, Mask};

/// Byte string identifying a poset up to isomorphism.
///
/// The first byte is the element count, followed by the relation matrix of
/// the canonically labeled poset packed row-major, least significant bit
/// first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn from_rows(rows: &[Mask]) -> CanonicalForm {
        let n = rows.len();
        let mut bytes = vec![n as u8];
        let mut acc = 0u8;
        let mut filled = 0;
        for &row in rows {
            for j in 0..n {
                acc |= ((row >> j & 1) as u8) << filled;
                filled += 1;
                if filled == 8 {
                    bytes.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(acc);
        }
        CanonicalForm(bytes)
    }
}

struct Search<'a> {
    p: &'a Poset,
    twin: Vec<usize>,
    best: Option<(Vec<Mask>, Vec<usize>)>,
}

pub(super) fn canonical_labeling(p: &Poset) -> (CanonicalForm, Vec<usize>) {
    let n = p.len();
    if n == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    let twin = (0..n)
        .map(|x| {
            (0..x)
                .find(|&y| {
                    p.up_mask(x) & !bit(x) == p.up_mask(y) & !bit(y)
                        && p.down_mask(x) & !bit(x) == p.down_mask(y) & !bit(y)
                })
                .unwrap_or(x)
        })
        .collect();
    let mut elements: Vec<usize> = (0..n).collect();
    let key = |x: usize| {
        (
            p.down_mask(x).count_ones(),
            p.up_mask(x).count_ones(),
            p.lower_cover_count(x),
            p.upper_cover_count(x),
        )
    };
    elements.sort_by_key(|&x| key(x));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for x in elements {
        match cells.last_mut() {
            Some(cell) if key(cell[0]) == key(x) => cell.push(x),
            _ => cells.push(vec![x]),
        }
    }
    let mut search = Search {
        p,
        twin,
        best: None,
    };
    search.descend(cells);
    let (rows, perm) = search.best.expect("search visits at least one leaf");
    (CanonicalForm::from_rows(&rows), perm)
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.contains(&self.twin[v]) {
                continue;
            }
            tried.push(self.twin[v]);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }

    /// Splits cells by how each element relates to every current cell until
    /// nothing changes. Split order depends only on the signatures.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let p = self.p;
        loop {
            let masks: Vec<Mask> = cells
                .iter()
                .map(|c| c.iter().fold(0, |m, &x| m | bit(x)))
                .collect();
            let signature = |x: usize| -> Vec<u32> {
                let below = p.down_mask(x) & !bit(x);
                let above = p.up_mask(x) & !bit(x);
                let mut sig = Vec::with_capacity(masks.len() * 4);
                for &m in &masks {
                    sig.push((below & m).count_ones());
                    sig.push((above & m).count_ones());
                    sig.push((p.lower_cover_mask(x) & m).count_ones());
                    sig.push((p.upper_cover_mask(x) & m).count_ones());
                }
                sig
            };
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> =
                    cell.iter().map(|&x| (signature(x), x)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut part: Vec<usize> = keyed[start..i].iter().map(|k| k.1).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.p.len();
        let mut perm = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut rows = vec![0 as Mask; n];
        for x in 0..n {
            rows[perm[x]] = bits(self.p.up_mask(x)).fold(0, |acc, y| acc | bit(perm[y]));
        }
        let better = match &self.best {
            None => true,
            Some((best_rows, _)) => rows < *best_rows,
        };
        if better {
            self.best = Some((rows, perm));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::n5;
    use std::collections::HashMap;

    #[test]
    fn relabeled_chains_agree() {
        let a = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Poset::from_covers(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn chain_and_antichain_differ() {
        assert_ne!(
            Poset::chain(3).unwrap().canonical_form(),
            Poset::antichain(3).unwrap().canonical_form()
        );
    }

    #[test]
    fn n5_and_m3_differ() {
        let m3 = Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_ne!(n5().canonical_form(), m3.canonical_form());
    }

    #[test]
    fn canonical_poset_is_a_fixed_point() {
        let p = n5();
        let c = p.canonical_poset();
        assert_eq!(c.canonical_poset(), c);
        assert_eq!(c.canonical_form(), p.canonical_form());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for perm in permutations(n - 1) {
            for pos in 0..n {
                let mut p = perm.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }

    /// All labeled posets on `n` points, by brute force over relations.
    fn labeled_posets(n: usize) -> Vec<Poset> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        'outer: for mask in 0u64..(1u64 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &pr)| pr)
                .collect();
            // Must already be transitive and antisymmetric.
            for &(a, b) in &chosen {
                if chosen.contains(&(b, a)) {
                    continue 'outer;
                }
                for &(c, d) in &chosen {
                    if b == c && a != d && !chosen.contains(&(a, d)) {
                        continue 'outer;
                    }
                }
            }
            out.push(Poset::from_covers(n, &chosen).unwrap());
        }
        out
    }

    #[test]
    fn classes_match_orbit_counting() {
        // Labeled poset counts: 1, 1, 3, 19, 219, 4231.
        let expected_labeled = [1usize, 1, 3, 19, 219, 4231];
        for (n, &labeled) in expected_labeled.iter().enumerate() {
            let all = labeled_posets(n);
            assert_eq!(all.len(), labeled);
            let mut classes: HashMap<CanonicalForm, Vec<&Poset>> = HashMap::new();
            for p in &all {
                classes.entry(p.canonical_form()).or_default().push(p);
            }
            let perms = permutations(n);
            let factorial = perms.len();
            let mut total = 0;
            for members in classes.values() {
                let rep = members[0];
                let automorphisms = perms.iter().filter(|q| rep.relabel(q) == *rep).count();
                assert_eq!(members.len(), factorial / automorphisms);
                // Every relabeling of the representative lands in this class.
                for q in &perms {
                    assert_eq!(rep.relabel(q).canonical_form(), rep.canonical_form());
                }
                total += members.len();
            }
            assert_eq!(total, all.len());
        }
    }
}
