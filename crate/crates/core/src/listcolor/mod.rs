//! List colouring and exhaustive `f`-choosability.
//!
//! Colours are small integers `0..=63`; a list is a [`ColorSet`] bitmask. The
//! choosability search enumerates list assignments from the pot `{1, ..., p}`.

mod choose;
mod enumerate;
mod hall;
mod solve;

pub use choose::{
    is_d_r_choosable, is_f_choosable, minimal_pot_bad_assignment, Choosability, ChoosabilityOptions,
    ChoosabilityVerdict, SearchStats,
};
pub use enumerate::{canonical_assignments, for_each_canonical_assignment};
pub use hall::{clique_list_colorable, system_of_distinct_representatives};
pub use solve::color_from_lists;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Highest usable colour index.
pub const MAX_COLOR: u32 = 63;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn first_k(k: usize) -> ColorSet {
        assert!(k <= MAX_COLOR as usize);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: u32) -> bool {
        c <= MAX_COLOR && self.0 >> c & 1 == 1
    }

    pub fn union(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 & o.0)
    }

    pub fn is_subset(self, o: ColorSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros();
            bits &= bits - 1;
            Some(c)
        })
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ColorSet(iter.into_iter().fold(0u64, |acc, c| {
            assert!(c <= MAX_COLOR, "colour {c} out of range");
            acc | 1 << c
        }))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("expected {expected} entries, one per vertex, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("pot of {0} colours exceeds the supported {MAX_COLOR}")]
    PotTooLarge(usize),
    #[error("colour {0} out of range 0..={MAX_COLOR}")]
    ColorOutOfRange(u32),
    #[error("declared pot_size {declared} does not match the {actual} colours used")]
    PotMismatch { declared: usize, actual: usize },
}

/// A list for every vertex. The pot is the union of the lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        ListAssignment { lists }
    }

    pub fn from_lists<I, L>(lists: I) -> Result<Self, ListError>
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = u32>,
    {
        let mut out = Vec::new();
        for l in lists {
            let mut set = 0u64;
            for c in l {
                if c > MAX_COLOR {
                    return Err(ListError::ColorOutOfRange(c));
                }
                set |= 1 << c;
            }
            out.push(ColorSet(set));
        }
        Ok(ListAssignment { lists: out })
    }

    /// Every vertex gets the same list.
    pub fn uniform(n: usize, list: ColorSet) -> Self {
        ListAssignment { lists: vec![list; n] }
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn pot(&self) -> ColorSet {
        self.lists.iter().fold(ColorSet::EMPTY, |a, &l| a.union(l))
    }

    pub fn pot_size(&self) -> usize {
        self.pot().len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(|l| l.len()).collect()
    }

    /// `Pot_H(L)` for the vertices of `h`.
    pub fn pot_of(&self, h: crate::graph::VertexSet) -> ColorSet {
        h.iter().fold(ColorSet::EMPTY, |a, v| a.union(self.lists[v]))
    }

    /// `true` when `|L(v)| = f(v)` for every vertex.
    pub fn is_f_assignment(&self, f: &[i64]) -> bool {
        self.lists.len() == f.len() && self.lists.iter().zip(f).all(|(l, &k)| l.len() as i64 == k)
    }

    fn as_vecs(&self) -> Vec<Vec<u32>> {
        self.lists.iter().map(|l| l.iter().collect()).collect()
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.lists.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct AssignmentRecord {
    pot_size: usize,
    lists: Vec<Vec<u32>>,
}

impl Serialize for ListAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AssignmentRecord { pot_size: self.pot_size(), lists: self.as_vecs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = AssignmentRecord::deserialize(d)?;
        let la = ListAssignment::from_lists(rec.lists).map_err(serde::de::Error::custom)?;
        if la.pot_size() != rec.pot_size {
            return Err(serde::de::Error::custom(ListError::PotMismatch {
                declared: rec.pot_size,
                actual: la.pot_size(),
            }));
        }
        Ok(la)
    }
}

/// A proper colouring with `c(v) ∈ L(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringWitness {
    pub colors: Vec<u32>,
}

impl ColoringWitness {
    pub fn is_valid(&self, g: &Graph, l: &ListAssignment) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().enumerate().all(|(v, &c)| l.list(v).contains(c))
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// `f(v) = d(v) - r`.
pub fn degree_minus(g: &Graph, r: i64) -> Vec<i64> {
    g.degrees().into_iter().map(|d| d as i64 - r).collect()
}
