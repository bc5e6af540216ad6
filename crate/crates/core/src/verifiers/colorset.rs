use std::fmt;

use crate::graph::ColorId;

/// A subset of at most 32 interned colors, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColorSet(pub u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    #[inline]
    pub fn contains(self, c: ColorId) -> bool {
        self.0 >> c.0 & 1 == 1
    }

    #[inline]
    pub fn with(self, c: ColorId) -> ColorSet {
        ColorSet(self.0 | 1 << c.0)
    }

    #[inline]
    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = ColorId> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1).map(ColorId)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

impl FromIterator<ColorId> for ColorSet {
    fn from_iter<I: IntoIterator<Item = ColorId>>(iter: I) -> Self {
        iter.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }
}

/// Adds `s` to an antichain of minimal sets. Returns `false` when some member
/// is already a subset of `s`; otherwise drops the supersets of `s`.
pub(crate) fn insert_minimal(family: &mut Vec<ColorSet>, s: ColorSet) -> bool {
    if family.iter().any(|m| m.is_subset(s)) {
        return false;
    }
    family.retain(|m| !s.is_subset(*m));
    family.push(s);
    true
}

/// Color subset of unbounded width.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct ColorBits(Vec<u64>);

impl ColorBits {
    pub fn empty(k: usize) -> Self {
        ColorBits(vec![0; k.div_ceil(64).max(1)])
    }

    #[inline]
    pub fn contains(&self, c: ColorId) -> bool {
        self.0[c.index() / 64] >> (c.index() % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, c: ColorId) {
        self.0[c.index() / 64] |= 1 << (c.index() % 64);
    }

    pub fn with(&self, c: ColorId) -> Self {
        let mut out = self.clone();
        out.insert(c);
        out
    }

    pub fn and(&self, other: &ColorBits) -> Self {
        ColorBits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn is_subset(&self, other: &ColorBits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}
