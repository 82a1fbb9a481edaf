//! The Kelly–Rival list of forbidden lattices.
//!
//! A finite lattice is planar exactly when neither it nor its dual contains
//! a member of this list as a subposet. The list holds one lattice from
//! each dual pair; `A_n` and `F_n` are self-dual.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::{find_embedding, Embedding};

/// One member of the forbidden list.
#[derive(Clone, Debug)]
pub struct KRCatalogEntry {
    /// Display name such as `A_2` or `B`.
    pub name: String,
    /// Family letter.
    pub family: char,
    /// Position in an infinite family; `None` for the sporadic members.
    pub index: Option<usize>,
    pub lattice: Lattice,
    pub size: usize,
    pub jir: usize,
    pub mir: usize,
    pub jred: usize,
    pub mred: usize,
}

impl KRCatalogEntry {
    fn new(family: char, index: Option<usize>, lattice: Lattice) -> KRCatalogEntry {
        let irr = lattice.irreducibles();
        let name = match index {
            Some(i) => format!("{family}_{i}"),
            None => family.to_string(),
        };
        KRCatalogEntry {
            name,
            family,
            index,
            size: lattice.len(),
            jir: irr.jir.len(),
            mir: irr.mir.len(),
            jred: irr.jred.len(),
            mred: irr.mred.len(),
            lattice,
        }
    }

    /// Fixture file stem, `<family>_<index>`; sporadic members use index 0.
    pub fn file_stem(&self) -> String {
        format!("{}_{}", self.family, self.index.unwrap_or(0))
    }

    /// `|Jred| >= 4` or `|Mred| >= 4`.
    pub fn has_four_reducibles(&self) -> bool {
        self.jred >= 4 || self.mred >= 4
    }
}

/// Members other than `E_0` and `F_0` that have only three join-reducible
/// and three meet-reducible elements.
pub const THREE_REDUCIBLE_EXCEPTIONS: &[&str] = &["G_0"];

/// Smallest member size.
pub const MIN_SIZE: usize = 8;

/// Size bound used when members are looked up by name.
pub const CATALOG_LIMIT: usize = 32;

struct Builder {
    n: usize,
    covers: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            n: 0,
            covers: Vec::new(),
        }
    }

    fn node(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn above(&mut self, below: &[usize]) -> usize {
        let x = self.node();
        for &y in below {
            self.covers.push((y, x));
        }
        x
    }

    /// Lower points `l_0..=l_k` above `base` and upper points `m_i` above
    /// `l_{i-1}` and `l_i`.
    fn fence(&mut self, base: usize, k: usize) -> (Vec<usize>, Vec<usize>) {
        let lows: Vec<usize> = (0..=k).map(|_| self.above(&[base])).collect();
        let highs = (1..=k)
            .map(|i| self.above(&[lows[i - 1], lows[i]]))
            .collect();
        (lows, highs)
    }

    fn finish(self) -> Lattice {
        Lattice::from_covers(self.n, &self.covers).expect("catalog shapes are lattices")
    }
}

/// `A_n`: the crown on `2(n + 3)` points with a bottom and a top added.
pub fn make_a(n: usize) -> Lattice {
    let k = n + 3;
    let mut b = Builder::new();
    let bottom = b.node();
    let atoms: Vec<usize> = (0..k).map(|_| b.above(&[bottom])).collect();
    let coatoms: Vec<usize> = (0..k)
        .map(|i| b.above(&[atoms[i], atoms[(i + 1) % k]]))
        .collect();
    b.above(&coatoms);
    b.finish()
}

/// `E_n`, `9 + 2n` elements.
pub fn make_e(n: usize) -> Lattice {
    let mut b = Builder::new();
    let bottom = b.node();
    let p = b.above(&[bottom]);
    let q = b.above(&[bottom]);
    let s = b.above(&[bottom]);
    let t = b.above(&[s]);
    let (lows, highs) = b.fence(s, n);
    let x = b.above(&[lows[0], p]);
    let y = b.above(&[lows[lows.len() - 1], q]);
    let mut under_top = vec![t, x, y];
    under_top.extend(highs);
    b.above(&under_top);
    b.finish().dual()
}

/// `F_n`, `9 + 2n` elements.
pub fn make_f(n: usize) -> Lattice {
    let mut b = Builder::new();
    let bottom = b.node();
    let p = b.above(&[bottom]);
    let s = b.above(&[bottom]);
    let t = b.above(&[s]);
    let (lows, highs) = b.fence(s, n);
    let x = b.above(&[lows[0]]);
    let y = b.above(&[lows[lows.len() - 1], p]);
    let mut under_w = vec![t, y];
    under_w.extend(highs);
    let w = b.above(&under_w);
    b.above(&[x, w]);
    b.finish()
}

/// Lower part shared by `G_n` and `H_n`: atoms `b` and `c`, `d` and `e`
/// above `c`, `f` above both atoms, then `n + 1` pairs `g_i, h_i` above
/// `f` joined by `v_i`. `h_1` covers `e` and each later `h_i` covers a side
/// point `s` above the previous `h`. Returns `(builder, bottom, d, g, h)`
/// for the last pair.
fn diamond_chain(n: usize) -> (Builder, usize, usize, usize, usize) {
    let mut b = Builder::new();
    let bottom = b.node();
    let atom = b.above(&[bottom]);
    let c = b.above(&[bottom]);
    let d = b.above(&[c]);
    let e = b.above(&[c]);
    let mut v = b.above(&[atom, c]);
    let mut side = e;
    let mut last = (0, 0);
    for i in 0..=n {
        let g = b.above(&[v]);
        let h = b.above(&[v, side]);
        if i < n {
            v = b.above(&[g, h]);
            side = b.above(&[h]);
        }
        last = (g, h);
    }
    (b, bottom, d, last.0, last.1)
}

/// `G_n`, `10 + 4n` elements, self-dual.
pub fn make_g(n: usize) -> Lattice {
    let (mut b, bottom, d, g, h) = diamond_chain(n);
    let a = b.above(&[bottom]);
    b.covers.push((a, h));
    b.above(&[d, g, h]);
    b.finish()
}

/// `H_n`, `11 + 4n` elements, self-dual.
pub fn make_h(n: usize) -> Lattice {
    let (mut b, _, d, g, h) = diamond_chain(n);
    let w = b.above(&[d, g, h]);
    let z = b.above(&[h]);
    b.above(&[w, z]);
    b.finish()
}

/// The sporadic members: letter, size, covers.
type Sporadic = (char, usize, &'static [(usize, usize)]);

const SPORADIC: &[Sporadic] = &[
    (
        'B',
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 7),
            (2, 6),
            (3, 5),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 8),
            (6, 8),
            (7, 8),
        ],
    ),
    (
        'C',
        9,
        &[
            (0, 1),
            (0, 2),
            (1, 7),
            (2, 3),
            (2, 4),
            (3, 6),
            (3, 7),
            (4, 5),
            (4, 7),
            (5, 8),
            (6, 8),
            (7, 8),
        ],
    ),
    (
        'D',
        9,
        &[
            (0, 1),
            (0, 2),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 7),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 8),
            (7, 8),
        ],
    ),
];

struct Family {
    letter: char,
    /// Size of the member with index 0.
    base: usize,
    /// Size increase per index.
    step: usize,
    make: fn(usize) -> Lattice,
}

const FAMILIES: &[Family] = &[
    Family {
        letter: 'A',
        base: 8,
        step: 2,
        make: make_a,
    },
    Family {
        letter: 'E',
        base: 9,
        step: 2,
        make: make_e,
    },
    Family {
        letter: 'F',
        base: 9,
        step: 2,
        make: make_f,
    },
    Family {
        letter: 'G',
        base: 10,
        step: 4,
        make: make_g,
    },
    Family {
        letter: 'H',
        base: 11,
        step: 4,
        make: make_h,
    },
];

/// All members with at most `max_size` elements, smallest first; ties are
/// broken by name. Every entry is checked against the structural facts the
/// list is known to satisfy.
pub fn kr_catalog(max_size: usize) -> Result<Vec<KRCatalogEntry>> {
    if max_size == 0 {
        return Err(Error::Size("catalog size bound must be at least 1".into()));
    }
    let mut entries = Vec::new();
    for f in FAMILIES {
        let mut i = 0;
        while f.base + i * f.step <= max_size {
            entries.push(KRCatalogEntry::new(f.letter, Some(i), (f.make)(i)));
            i += 1;
        }
    }
    for &(letter, size, covers) in SPORADIC {
        if size <= max_size {
            let l = Lattice::from_covers(size, covers).expect("catalog shapes are lattices");
            entries.push(KRCatalogEntry::new(letter, None, l));
        }
    }
    entries.sort_by(|a, b| (a.size, &a.name).cmp(&(b.size, &b.name)));
    for e in &entries {
        validate(e)?;
    }
    Ok(entries)
}

fn validate(e: &KRCatalogEntry) -> Result<()> {
    let fail = |invariant: &str| {
        Err(Error::CatalogValidation {
            entry: e.name.clone(),
            invariant: invariant.to_string(),
        })
    };
    if let Some(f) = FAMILIES.iter().find(|f| f.letter == e.family) {
        if e.size != f.base + e.index.unwrap_or(0) * f.step {
            return fail("size formula");
        }
    }
    if e.name == "E_0" || e.name == "F_0" {
        if e.jred != 3 || e.mred != 3 {
            return fail("|Jred| = |Mred| = 3");
        }
    } else if !e.has_four_reducibles() && !THREE_REDUCIBLE_EXCEPTIONS.contains(&e.name.as_str()) {
        return fail("|Jred| >= 4 or |Mred| >= 4");
    }
    if e.family == 'A' && e.lattice.dual().canonical_form() != e.lattice.canonical_form() {
        return fail("self-dual");
    }
    Ok(())
}

/// Entries up to this size are built once and shared.
const CACHED_SIZE: usize = 20;

fn cached() -> &'static [KRCatalogEntry] {
    static CACHE: OnceLock<Vec<KRCatalogEntry>> = OnceLock::new();
    CACHE.get_or_init(|| kr_catalog(CACHED_SIZE).expect("built-in catalog validates"))
}

/// Where a forbidden lattice was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub entry: String,
    pub embedding: Embedding,
    /// The embedding goes into the dual of the tested lattice.
    pub into_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: Option<Witness>,
}

/// Planarity by the forbidden-subposet criterion. Smaller entries are tried
/// first, each against `l` and then against its dual.
pub fn is_planar_kr(l: &Lattice) -> PlanarityVerdict {
    let n = l.len();
    let owned;
    let entries: &[KRCatalogEntry] = if n <= CACHED_SIZE {
        cached()
    } else {
        owned = kr_catalog(n).expect("built-in catalog validates");
        &owned
    };
    let dual = l.dual();
    for e in entries.iter().take_while(|e| e.size <= n) {
        for (target, into_dual) in [(l, false), (&dual, true)] {
            if let Some(embedding) = find_embedding(e.lattice.poset(), target.poset()) {
                return PlanarityVerdict {
                    planar: false,
                    witness: Some(Witness {
                        entry: e.name.clone(),
                        embedding,
                        into_dual,
                    }),
                };
            }
        }
    }
    PlanarityVerdict {
        planar: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::has_many_congruences;
    use crate::enumeration::enumerate_levels;
    use crate::planarity::is_planar_graph_oracle;

    fn entries() -> Vec<KRCatalogEntry> {
        kr_catalog(15).unwrap()
    }

    #[test]
    fn zero_bound_is_rejected() {
        assert!(matches!(kr_catalog(0), Err(Error::Size(_))));
        assert!(kr_catalog(MIN_SIZE - 1).unwrap().is_empty());
    }

    #[test]
    fn sizes_and_order() {
        let e = entries();
        assert_eq!(e[0].name, "A_0");
        assert_eq!(e[0].size, MIN_SIZE);
        assert!(e
            .windows(2)
            .all(|w| (w[0].size, &w[0].name) < (w[1].size, &w[1].name)));
        let names: Vec<&str> = e
            .iter()
            .filter(|x| x.size <= 11)
            .map(|x| x.name.as_str())
            .collect();
        assert_eq!(
            names,
            ["A_0", "B", "C", "D", "E_0", "F_0", "A_1", "G_0", "E_1", "F_1", "H_0"]
        );
    }

    #[test]
    fn diamond_families_against_search_output() {
        let same = |l: &Lattice, n: usize, covers: &[(usize, usize)]| {
            l.canonical_form() == Lattice::from_covers(n, covers).unwrap().canonical_form()
        };
        assert!(same(
            &make_g(0),
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 8),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 9),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 9),
                (8, 9)
            ]
        ));
        assert!(same(
            &make_g(1),
            14,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 12),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 13),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 10),
                (8, 9),
                (8, 10),
                (9, 12),
                (10, 11),
                (10, 12),
                (11, 13),
                (12, 13),
            ]
        ));
        assert!(same(
            &make_h(0),
            11,
            &[
                (0, 1),
                (0, 2),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 9),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 9),
                (7, 8),
                (7, 9),
                (8, 10),
                (9, 10),
            ]
        ));
        for i in 0..3 {
            assert_eq!(make_g(i).len(), 10 + 4 * i);
            assert_eq!(make_h(i).len(), 11 + 4 * i);
        }
    }

    #[test]
    fn every_entry_is_non_planar_and_minimal() {
        let all = entries();
        for e in &all {
            assert!(!is_planar_graph_oracle(&e.lattice), "{}", e.name);
            let n = e.size;
            for mask in 1u64..(1 << n) - 1 {
                let keep: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                if keep.len() < MIN_SIZE {
                    continue;
                }
                if let Ok(sub) = Lattice::from_poset(e.lattice.poset().induced(&keep)) {
                    assert!(is_planar_graph_oracle(&sub), "{} on {keep:?}", e.name);
                }
            }
            let dual = e.lattice.dual();
            for f in all.iter().filter(|f| f.name != e.name && f.size <= n) {
                for target in [&e.lattice, &dual] {
                    assert!(
                        find_embedding(f.lattice.poset(), target.poset()).is_none(),
                        "{} inside {}",
                        f.name,
                        e.name
                    );
                }
            }
        }
    }

    #[test]
    fn self_dual_families() {
        for e in entries()
            .iter()
            .filter(|e| matches!(e.family, 'A' | 'F' | 'G' | 'H'))
        {
            assert_eq!(
                e.lattice.dual().canonical_form(),
                e.lattice.canonical_form(),
                "{}",
                e.name
            );
        }
        for i in 0..3 {
            assert_ne!(
                make_e(i).dual().canonical_form(),
                make_e(i).canonical_form()
            );
        }
    }

    #[test]
    fn three_reducible_members() {
        for e in entries() {
            let three = !e.has_four_reducibles();
            let listed = e.name == "E_0"
                || e.name == "F_0"
                || THREE_REDUCIBLE_EXCEPTIONS.contains(&e.name.as_str());
            assert_eq!(three, listed, "{}", e.name);
        }
    }

    #[test]
    fn kr_matches_graph_on_small_lattices() {
        for level in enumerate_levels(9) {
            for l in &level {
                let v = is_planar_kr(l);
                assert_eq!(v.planar, is_planar_graph_oracle(l), "{:?}", l.cover_pairs());
            }
        }
    }

    #[test]
    fn three_reducible_members_force_few_congruences() {
        let small: Vec<KRCatalogEntry> = entries()
            .into_iter()
            .filter(|e| !e.has_four_reducibles())
            .collect();
        let mut seen = 0;
        for level in enumerate_levels(10) {
            for l in &level {
                let dual = l.dual();
                let contains = small.iter().any(|e| {
                    find_embedding(e.lattice.poset(), l.poset()).is_some()
                        || find_embedding(e.lattice.poset(), dual.poset()).is_some()
                });
                if contains {
                    seen += 1;
                    assert!(!has_many_congruences(l), "{:?}", l.cover_pairs());
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn witness_points_into_the_right_lattice() {
        let l = make_f(1);
        let v = is_planar_kr(&l);
        let w = v.witness.unwrap();
        assert_eq!(w.entry, "F_1");
        let big = make_a(2);
        assert_eq!(is_planar_kr(&big).witness.unwrap().entry, "A_2");
        assert!(is_planar_kr(&Lattice::from_covers(2, &[(0, 1)]).unwrap()).planar);
    }
}
