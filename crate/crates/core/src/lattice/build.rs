use super::Lattice;
use crate::bits::MAX_ELEMENTS;
use crate::error::{Error, Result};

fn check_size(what: &str, n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(Error::Size(format!(
            "{what} would have {n} elements; the limit is {MAX_ELEMENTS}"
        )))
    } else {
        Ok(())
    }
}

/// The `n`-element chain `0 < 1 < .. < n-1`.
pub fn make_chain(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::Size("a chain needs at least one element".into()));
    }
    check_size("chain", n)?;
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Lattice::from_covers(n, &pairs)
}

/// The Boolean lattice of subsets of a `k`-set; element `x` is the subset
/// with bitmask `x`.
pub fn make_boolean(k: usize) -> Result<Lattice> {
    if k >= 7 {
        return Err(Error::Size(format!(
            "boolean lattice 2^{k} exceeds {MAX_ELEMENTS} elements"
        )));
    }
    let n = 1usize << k;
    let pairs: Vec<_> = (0..n)
        .flat_map(|x| {
            (0..k)
                .filter(move |b| x >> b & 1 == 0)
                .map(move |b| (x, x | 1 << b))
        })
        .collect();
    Lattice::from_covers(n, &pairs)
}

/// `M_k`: bottom `0`, atoms `1..=k`, top `k + 1`.
pub fn make_mk(k: usize) -> Result<Lattice> {
    if k == 0 {
        return Err(Error::Size("M_k needs k >= 1".into()));
    }
    check_size("M_k", k + 2)?;
    let top = k + 1;
    let pairs: Vec<_> = (1..=k).flat_map(|a| [(0, a), (a, top)]).collect();
    Lattice::from_covers(k + 2, &pairs)
}

/// Ordinal sum: every element of `lower` sits below every element of
/// `upper`. `lower` keeps its indices; `upper` is shifted by `|lower|`.
pub fn make_ordinal_sum(lower: &Lattice, upper: &Lattice) -> Result<Lattice> {
    let shift = lower.len();
    check_size("ordinal sum", shift + upper.len())?;
    let mut pairs: Vec<(usize, usize)> = lower.cover_pairs().to_vec();
    pairs.extend(
        upper
            .cover_pairs()
            .iter()
            .map(|&(a, b)| (a + shift, b + shift)),
    );
    pairs.push((lower.top(), upper.bottom() + shift));
    Lattice::from_covers(shift + upper.len(), &pairs)
}

/// Direct product; `(i, j)` is element `i * |right| + j`.
pub fn make_product(left: &Lattice, right: &Lattice) -> Result<Lattice> {
    let (m, k) = (left.len(), right.len());
    check_size("product", m * k)?;
    let mut pairs = Vec::new();
    for &(a, b) in left.cover_pairs() {
        for j in 0..k {
            pairs.push((a * k + j, b * k + j));
        }
    }
    for &(a, b) in right.cover_pairs() {
        for i in 0..m {
            pairs.push((i * k + a, i * k + b));
        }
    }
    Lattice::from_covers(m * k, &pairs)
}

/// The sharpness family: `L(8)` is the eight-element Boolean lattice and
/// `L(n)` for `n > 8` is its ordinal sum with an `(n - 8)`-element chain.
pub fn make_l_family(n: usize) -> Result<Lattice> {
    if n < 8 {
        return Err(Error::Size(format!("L(n) needs n >= 8, got {n}")));
    }
    let cube = make_boolean(3)?;
    if n == 8 {
        Ok(cube)
    } else {
        make_ordinal_sum(&cube, &make_chain(n - 8)?)
    }
}
