#![allow(dead_code)]

use std::sync::OnceLock;

use latcon::enumeration::{atom_extensions, enumerate_levels, next_level};
use latcon::lattice::make_chain;
use latcon::{Embedding, Lattice, Poset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All lattices of sizes `1..=10`, `levels()[k - 1]` holding size `k`.
pub fn levels() -> &'static [Vec<Lattice>] {
    static LEVELS: OnceLock<Vec<Vec<Lattice>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let mut levels = enumerate_levels(9);
        let ten = next_level(levels.last().unwrap());
        levels.push(ten);
        levels
    })
}

pub fn level(n: usize) -> &'static [Lattice] {
    &levels()[n - 1]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct classes of size `n`, chosen uniformly.
pub fn sample(n: usize, count: usize, seed: u64) -> Vec<&'static Lattice> {
    let all = level(n);
    let mut r = rng(seed);
    all.choose_multiple(&mut r, count.min(all.len())).collect()
}

/// A lattice of size `n` grown by random atom extensions from the
/// two-element chain.
pub fn grown(n: usize, r: &mut impl Rng) -> Lattice {
    let mut l = make_chain(n.clamp(1, 2)).unwrap();
    while l.len() < n {
        let ext = atom_extensions(&l);
        l = ext.choose(r).unwrap().clone();
    }
    l
}

/// A random poset on `k` points: `i < j` with probability `p` for
/// `i < j`, then closed transitively.
pub fn random_poset(k: usize, p: f64, r: &mut impl Rng) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if r.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_covers(k, &pairs).unwrap()
}

/// The distributive lattice of down-sets of `p`.
pub fn downset_lattice(p: &Poset) -> Lattice {
    let k = p.len();
    let downs: Vec<u64> = (0u64..1 << k)
        .filter(|&s| {
            (0..k).all(|x| s >> x & 1 == 0 || p.down_set(x).iter().all(|&y| s >> y & 1 == 1))
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, &s) in downs.iter().enumerate() {
        for x in 0..k {
            let t = s | 1 << x;
            if t != s {
                if let Ok(j) = downs.binary_search(&t) {
                    pairs.push((i, j));
                }
            }
        }
    }
    Lattice::from_covers(downs.len(), &pairs).unwrap()
}

/// Whether some injective order embedding of `k` into `l` exists, by
/// trying every injective map.
pub fn brute_force_embeds(k: &Poset, l: &Poset) -> bool {
    fn go(k: &Poset, l: &Poset, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == k.len() {
            return (0..i).all(|a| (0..i).all(|b| k.leq(a, b) == l.leq(map[a], map[b])));
        }
        for y in 0..l.len() {
            if !used[y] {
                used[y] = true;
                map.push(y);
                if go(k, l, map, used) {
                    return true;
                }
                map.pop();
                used[y] = false;
            }
        }
        false
    }
    go(k, l, &mut Vec::new(), &mut vec![false; l.len()])
}

/// Checks what an embedding of `k` into `l` forces on joins and on the
/// number of reducible elements, on both sides of the duality.
pub fn check_embedding_facts(k: &Lattice, l: &Lattice, e: &Embedding) -> Result<(), String> {
    check_join_side(k, l, e)?;
    check_join_side(&k.dual(), &l.dual(), e).map_err(|m| format!("dual: {m}"))
}

fn check_join_side(k: &Lattice, l: &Lattice, e: &Embedding) -> Result<(), String> {
    let m = &e.map;
    let n = k.len();
    let join_l = |xs: &[usize]| xs.iter().fold(l.bottom(), |acc, &x| l.join(acc, m[x]));
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        subsets.push(vec![a]);
        for b in a + 1..n {
            subsets.push(vec![a, b]);
            for c in b + 1..n {
                subsets.push(vec![a, b, c]);
            }
        }
    }
    for s in &subsets {
        let jk = k.join_all(s);
        if !l.leq(join_l(s), m[jk]) {
            return Err(format!("(a) fails for {s:?}"));
        }
    }
    let small: Vec<&Vec<usize>> = subsets.iter().filter(|s| s.len() <= 2).collect();
    for s in &small {
        for t in &small {
            if k.join_all(s) != k.join_all(t) && join_l(s) == join_l(t) {
                return Err(format!("(b) fails for {s:?} and {t:?}"));
            }
        }
    }
    let jred_k = k.irreducibles().jred.len();
    let jred_l = l.irreducibles().jred.len();
    if jred_l < jred_k {
        return Err(format!("(c) fails: {jred_l} < {jred_k}"));
    }
    if jred_l == jred_k {
        let par = |x: usize, y: usize| !k.leq(x, y) && !k.leq(y, x);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| par(x, y))
            .collect();
        for &(u1, u2) in &pairs {
            for &(v1, v2) in &pairs {
                if k.join(u1, u2) == k.join(v1, v2) && l.join(m[u1], m[u2]) != l.join(m[v1], m[v2])
                {
                    return Err(format!("(d) fails for {u1},{u2} and {v1},{v2}"));
                }
            }
        }
    }
    Ok(())
}

/// Subsets of `l` that happen to be lattices as induced subposets, with
/// the inclusion as embedding. Keeps at most `limit` of them.
pub fn induced_sublattice_posets(
    l: &Lattice,
    size: usize,
    limit: usize,
    r: &mut impl Rng,
) -> Vec<(Lattice, Embedding)> {
    let mut found = Vec::new();
    let n = l.len();
    for _ in 0..limit * 8 {
        if found.len() >= limit {
            break;
        }
        let mut pick: Vec<usize> = (0..n).collect();
        pick.shuffle(r);
        pick.truncate(size.min(n));
        pick.sort_unstable();
        if let Ok(k) = Lattice::from_poset(l.poset().induced(&pick)) {
            found.push((k, Embedding { map: pick }));
        }
    }
    found
}
