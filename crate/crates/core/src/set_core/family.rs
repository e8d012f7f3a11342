use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::colex::{binomial, k_subset_masks};
use super::subset::{ground_mask, Subset, MAX_GROUND};

/// A duplicate-free family of `k`-subsets of `[n]`, stored in colex order.
///
/// Two families are equal exactly when their canonical forms are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniformFamily {
    ground_n: usize,
    k: usize,
    sets: Vec<Subset>,
}

impl UniformFamily {
    /// Validates and canonicalizes `sets`.
    pub fn new(ground_n: usize, k: usize, mut sets: Vec<Subset>) -> Result<Self> {
        if ground_n == 0 || ground_n > MAX_GROUND {
            return Err(Error::range(format!(
                "ground size {ground_n} outside [1, {MAX_GROUND}]"
            )));
        }
        if k > ground_n {
            return Err(Error::range(format!("uniformity {k} exceeds ground size {ground_n}")));
        }
        for s in &sets {
            if s.ground_n() != ground_n {
                return Err(Error::GroundMismatch {
                    left: ground_n,
                    right: s.ground_n(),
                });
            }
            if s.len() != k {
                return Err(Error::Cardinality {
                    set: s.to_vec(),
                    expected: k,
                    found: s.len(),
                });
            }
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0].to_vec()));
        }
        Ok(UniformFamily { ground_n, k, sets })
    }

    /// Caller guarantees canonical order, uniformity, and a valid ground size.
    pub(crate) fn from_sorted_unchecked(ground_n: usize, k: usize, sets: Vec<Subset>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(sets.iter().all(|s| s.len() == k && s.ground_n() == ground_n));
        UniformFamily { ground_n, k, sets }
    }

    /// Canonical family from raw masks; sorts and deduplicates.
    pub(crate) fn from_masks(ground_n: usize, k: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let sets = masks
            .into_iter()
            .map(|m| Subset::from_bits_unchecked(ground_n, m))
            .collect();
        Self::from_sorted_unchecked(ground_n, k, sets)
    }

    pub fn empty(ground_n: usize, k: usize) -> Result<Self> {
        Self::new(ground_n, k, Vec::new())
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub(crate) fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.sets.iter().map(Subset::bits)
    }

    /// `∪F`.
    pub fn union(&self) -> Subset {
        let bits = self.masks().fold(0, |acc, m| acc | m);
        Subset::from_bits_unchecked(self.ground_n, bits)
    }

    /// `∩F`; the whole ground set for the empty family.
    pub fn common_intersection(&self) -> Subset {
        let bits = self.masks().fold(ground_mask(self.ground_n), |acc, m| acc & m);
        Subset::from_bits_unchecked(self.ground_n, bits)
    }

    fn pairs(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.sets
            .iter()
            .enumerate()
            .flat_map(move |(i, a)| self.sets[i + 1..].iter().map(move |b| (*a, *b)))
    }

    /// A disjoint pair of members, if there is one.
    pub fn disjoint_pair(&self) -> Option<(Subset, Subset)> {
        self.pairs().find(|(a, b)| a.bits() & b.bits() == 0)
    }

    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    /// Smallest `|A ∩ A'|` over distinct members together with a pair attaining it.
    pub fn min_intersection_witness(&self) -> Option<(usize, (Subset, Subset))> {
        let mut best: Option<(usize, (Subset, Subset))> = None;
        for (a, b) in self.pairs() {
            let size = (a.bits() & b.bits()).count_ones() as usize;
            if best.is_none_or(|(m, _)| size < m) {
                best = Some((size, (a, b)));
                if size == 0 {
                    break;
                }
            }
        }
        best
    }

    /// The largest `b` for which the family is `b`-intersecting; `None` with fewer than two members.
    pub fn min_pairwise_intersection(&self) -> Option<usize> {
        self.min_intersection_witness().map(|(m, _)| m)
    }

    /// The set `L` of pairwise intersection sizes.
    pub fn intersection_sizes(&self) -> BTreeSet<usize> {
        self.pairs()
            .map(|(a, b)| (a.bits() & b.bits()).count_ones() as usize)
            .collect()
    }
}

impl<'a> IntoIterator for &'a UniformFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Builds the canonical family from element lists.
pub fn make_family(ground_n: usize, k: usize, raw_sets: &[Vec<usize>]) -> Result<UniformFamily> {
    if ground_n == 0 || ground_n > MAX_GROUND {
        return Err(Error::range(format!(
            "ground size {ground_n} outside [1, {MAX_GROUND}]"
        )));
    }
    let sets = raw_sets
        .iter()
        .map(|raw| {
            if raw.len() != k {
                return Err(Error::Cardinality {
                    set: raw.clone(),
                    expected: k,
                    found: raw.len(),
                });
            }
            Subset::new(ground_n, raw)
        })
        .collect::<Result<Vec<_>>>()?;
    UniformFamily::new(ground_n, k, sets)
}

/// `([n] choose k)` in colex order.
pub fn all_k_subsets(n: usize, k: usize) -> Result<UniformFamily> {
    if n == 0 || n > MAX_GROUND || k > n {
        return Err(Error::range(format!("no {k}-subsets of [{n}]")));
    }
    if binomial(n, k) > 1 << 26 {
        return Err(Error::Scale(format!("C({n}, {k}) = {}", binomial(n, k))));
    }
    let sets = k_subset_masks(n, k)
        .map(|m| Subset::from_bits_unchecked(n, m))
        .collect();
    Ok(UniformFamily::from_sorted_unchecked(n, k, sets))
}

/// The `k`-subsets of `window`, colex order, on the ground of `window`.
pub fn k_subsets_of(window: &Subset, k: usize) -> Result<UniformFamily> {
    let n = window.ground_n();
    let width = window.len();
    if k > width {
        return UniformFamily::empty(n, k);
    }
    if binomial(width, k) > 1 << 26 {
        return Err(Error::Scale(format!("C({width}, {k}) = {}", binomial(width, k))));
    }
    let positions: Vec<usize> = window.elements().collect();
    let sets = k_subset_masks(width, k)
        .map(|compact| {
            let bits = Subset::from_bits_unchecked(width, compact)
                .elements()
                .fold(0u64, |acc, i| acc | 1u64 << (positions[i - 1] - 1));
            Subset::from_bits_unchecked(n, bits)
        })
        .collect();
    // spreading the compact masks over increasing positions keeps colex order
    Ok(UniformFamily::from_sorted_unchecked(n, k, sets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, raw: &[&[usize]]) -> UniformFamily {
        let raw: Vec<Vec<usize>> = raw.iter().map(|r| r.to_vec()).collect();
        make_family(n, k, &raw).unwrap()
    }

    #[test]
    fn make_family_canonicalizes() {
        let f = fam(3, 2, &[&[2, 3], &[1, 2]]);
        let order: Vec<Vec<usize>> = f.iter().map(Subset::to_vec).collect();
        assert_eq!(order, vec![vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn make_family_errors() {
        assert!(matches!(
            make_family(4, 2, &[vec![1, 2], vec![2, 1]]),
            Err(Error::Duplicate(_))
        ));
        assert!(matches!(
            make_family(4, 3, &[vec![1, 2]]),
            Err(Error::Cardinality { expected: 3, found: 2, .. })
        ));
        assert!(matches!(make_family(4, 2, &[vec![1, 5]]), Err(Error::Range(_))));
        assert!(matches!(make_family(4, 2, &[vec![1, 1]]), Err(Error::Range(_))));
    }

    #[test]
    fn intersecting_examples() {
        assert!(fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]).is_intersecting());
        assert!(!fam(4, 2, &[&[1, 2], &[3, 4]]).is_intersecting());
        assert!(UniformFamily::empty(4, 2).unwrap().is_intersecting());
    }

    #[test]
    fn min_pairwise_examples() {
        assert_eq!(all_k_subsets(4, 3).unwrap().min_pairwise_intersection(), Some(2));
        assert_eq!(fam(4, 2, &[&[1, 2], &[3, 4]]).min_pairwise_intersection(), Some(0));
        // {1,2,5} and {1,3,4} share only 1
        let f = fam(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]]);
        assert_eq!(f.min_pairwise_intersection(), Some(1));
        let f = fam(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert_eq!(f.min_pairwise_intersection(), Some(2));
        assert_eq!(fam(5, 3, &[&[1, 2, 3]]).min_pairwise_intersection(), None);
    }

    #[test]
    fn intersection_size_sets() {
        let star = fam(4, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(star.intersection_sizes(), BTreeSet::from([1]));
        let tri = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(tri.intersection_sizes(), BTreeSet::from([1]));
        let f = fam(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 5, 6]]);
        assert_eq!(f.intersection_sizes(), BTreeSet::from([1, 2]));
        assert!(fam(6, 3, &[&[1, 2, 3]]).intersection_sizes().is_empty());
    }

    #[test]
    fn complete_families() {
        assert_eq!(all_k_subsets(4, 2).unwrap().len(), 6);
        let zero = all_k_subsets(5, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero.sets()[0].is_empty());
        let full = all_k_subsets(5, 5).unwrap();
        assert_eq!(full.sets(), &[Subset::full(5).unwrap()]);
        assert!(all_k_subsets(4, 5).is_err());
    }

    #[test]
    fn window_subsets_match_filtered_complete_family() {
        let window = Subset::new(7, &[2, 3, 5, 7]).unwrap();
        for k in 0..=5 {
            let direct = k_subsets_of(&window, k).unwrap();
            let filtered: Vec<Subset> = all_k_subsets(7, k)
                .unwrap()
                .iter()
                .copied()
                .filter(|s| s.is_subset_of(&window))
                .collect();
            assert_eq!(direct.sets(), filtered.as_slice(), "k={k}");
        }
    }
}
