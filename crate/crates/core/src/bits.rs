//! Small helpers for `u64` element sets.

pub(crate) type Mask = u64;

pub(crate) const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub(crate) fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn contains(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Iterator over set bits, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[inline]
pub(crate) fn bits(mask: Mask) -> Bits {
    Bits(mask)
}
