use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set; a subset is one `u64` bitmask.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set `[1, n]`.
///
/// Element `e` is stored as bit `e - 1`. Comparing the masks numerically is
/// exactly colexicographic order, which is the canonical order everywhere in
/// this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    ground_n: u8,
}

pub(crate) fn ground_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::range(format!(
            "ground size {n} outside [1, {MAX_GROUND}]"
        )));
    }
    Ok(())
}

impl Subset {
    pub fn new(ground_n: usize, elements: &[usize]) -> Result<Self> {
        check_ground(ground_n)?;
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > ground_n {
                return Err(Error::range(format!(
                    "element {e} outside [1, {ground_n}]"
                )));
            }
            let bit = 1u64 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::range(format!("element {e} repeated")));
            }
            bits |= bit;
        }
        Ok(Subset {
            bits,
            ground_n: ground_n as u8,
        })
    }

    pub fn from_bits(ground_n: usize, bits: u64) -> Result<Self> {
        check_ground(ground_n)?;
        if bits & !ground_mask(ground_n) != 0 {
            return Err(Error::range(format!(
                "mask {bits:#x} has bits beyond [1, {ground_n}]"
            )));
        }
        Ok(Subset {
            bits,
            ground_n: ground_n as u8,
        })
    }

    /// Caller guarantees `1 <= ground_n <= 64` and `bits` fits.
    pub(crate) fn from_bits_unchecked(ground_n: usize, bits: u64) -> Self {
        debug_assert!(bits & !ground_mask(ground_n) == 0);
        Subset {
            bits,
            ground_n: ground_n as u8,
        }
    }

    pub fn empty(ground_n: usize) -> Result<Self> {
        Self::from_bits(ground_n, 0)
    }

    /// The whole ground set `[1, n]`.
    pub fn full(ground_n: usize) -> Result<Self> {
        check_ground(ground_n)?;
        Ok(Self::from_bits_unchecked(ground_n, ground_mask(ground_n)))
    }

    /// `[lo, hi]` as a subset of `[1, n]`; empty when `lo > hi`.
    pub fn interval(ground_n: usize, lo: usize, hi: usize) -> Result<Self> {
        check_ground(ground_n)?;
        if lo == 0 || hi > ground_n {
            return Err(Error::range(format!(
                "interval [{lo}, {hi}] outside [1, {ground_n}]"
            )));
        }
        if lo > hi {
            return Ok(Self::from_bits_unchecked(ground_n, 0));
        }
        let bits = ground_mask(hi) & !ground_mask(lo - 1);
        Ok(Self::from_bits_unchecked(ground_n, bits))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ground_n() && self.bits & (1u64 << (e - 1)) != 0
    }

    /// Members in increasing order.
    pub fn elements(&self) -> Elements {
        Elements { rest: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    pub fn max_element(&self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    fn same_ground(&self, other: &Subset) -> Result<()> {
        if self.ground_n != other.ground_n {
            return Err(Error::GroundMismatch {
                left: self.ground_n(),
                right: other.ground_n(),
            });
        }
        Ok(())
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.same_ground(other)?;
        Ok(Self::from_bits_unchecked(self.ground_n(), self.bits & other.bits))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_ground(other)?;
        Ok(Self::from_bits_unchecked(self.ground_n(), self.bits | other.bits))
    }

    pub fn with(&self, e: usize) -> Result<Subset> {
        if e == 0 || e > self.ground_n() {
            return Err(Error::range(format!(
                "element {e} outside [1, {}]",
                self.ground_n()
            )));
        }
        Ok(Self::from_bits_unchecked(self.ground_n(), self.bits | 1u64 << (e - 1)))
    }

    pub fn without(&self, e: usize) -> Subset {
        if e == 0 || e > self.ground_n() {
            return *self;
        }
        Self::from_bits_unchecked(self.ground_n(), self.bits & !(1u64 << (e - 1)))
    }
}

pub struct Elements {
    rest: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let e = self.rest.trailing_zeros() as usize + 1;
        self.rest &= self.rest - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.rest.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl Ord for Subset {
    /// Colexicographic order; ties broken by ground size.
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits
            .cmp(&other.bits)
            .then(self.ground_n.cmp(&other.ground_n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.ground_n)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

/// `|A ∩ B|`.
pub fn intersection_size(a: &Subset, b: &Subset) -> Result<usize> {
    a.same_ground(b)?;
    Ok((a.bits & b.bits).count_ones() as usize)
}

/// `window \ a`, for `a ⊆ window`.
pub fn complement_within(a: &Subset, window: &Subset) -> Result<Subset> {
    a.same_ground(window)?;
    if !a.is_subset_of(window) {
        return Err(Error::NotContained {
            set: *a,
            window: *window,
        });
    }
    Ok(Subset::from_bits_unchecked(a.ground_n(), window.bits & !a.bits))
}
