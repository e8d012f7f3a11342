//! Binomials, colex ranking, and k-subset enumeration.

use crate::error::{Error, Result};

use super::subset::{ground_mask, Subset, MAX_GROUND};

/// `C(n, k)`; zero when `k > n`. Exact for every `n <= 64`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Colex rank of `s` among the `|s|`-subsets: `sum_i C(e_i - 1, i)` over the
/// members `e_1 < e_2 < ...` (1-based `i`).
///
/// The rank does not depend on the ground size.
pub fn colex_rank(s: &Subset) -> u64 {
    s.elements()
        .enumerate()
        .map(|(i, e)| binomial(e - 1, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`] on the `k`-subsets of `[n]`.
pub fn colex_unrank(n: usize, k: usize, rank: u64) -> Result<Subset> {
    if n == 0 || n > MAX_GROUND || k > n {
        return Err(Error::range(format!("no {k}-subsets of [{n}]")));
    }
    let total = binomial(n, k);
    if rank >= total {
        return Err(Error::range(format!(
            "rank {rank} outside [0, {total}) for {k}-subsets of [{n}]"
        )));
    }
    let mut bits = 0u64;
    let mut rest = rank;
    let mut top = n;
    for i in (1..=k).rev() {
        // largest e with C(e - 1, i) <= rest
        let mut e = top;
        while binomial(e - 1, i) > rest {
            e -= 1;
        }
        rest -= binomial(e - 1, i);
        bits |= 1u64 << (e - 1);
        top = e - 1;
    }
    Ok(Subset::from_bits_unchecked(n, bits))
}

/// All `k`-subsets of `[n]` in colex order, as raw masks.
///
/// Gosper's hack: the next larger integer with the same popcount.
pub(crate) fn k_subset_masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = ground_mask(n);
    let first = if k > n { None } else { Some(ground_mask(k)) };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let (r, carry) = x.overflowing_add(c);
        if carry || r == 0 {
            return None;
        }
        let next = (((r ^ x) >> 2) / c) | r;
        (next & !limit == 0).then_some(next)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn rank_examples() {
        let s = |e: &[usize]| Subset::new(6, e).unwrap();
        assert_eq!(colex_rank(&s(&[1, 2])), 0);
        assert_eq!(colex_rank(&s(&[1, 3])), 1);
        assert_eq!(colex_rank(&s(&[2, 3])), 2);
        assert_eq!(colex_unrank(6, 2, 2).unwrap(), s(&[2, 3]));
        assert!(colex_unrank(4, 2, 6).is_err());
        assert!(colex_unrank(4, 5, 0).is_err());
    }

    #[test]
    fn round_trip_exhaustive_up_to_twelve() {
        for n in 1..=12 {
            for k in 0..=n {
                let masks: Vec<u64> = k_subset_masks(n, k).collect();
                assert_eq!(masks.len() as u64, binomial(n, k), "n={n} k={k}");
                for (r, &m) in masks.iter().enumerate() {
                    let s = Subset::from_bits(n, m).unwrap();
                    assert_eq!(s.len(), k);
                    assert_eq!(colex_rank(&s), r as u64);
                    assert_eq!(colex_unrank(n, k, r as u64).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn enumeration_at_the_word_boundary() {
        assert_eq!(k_subset_masks(64, 64).collect::<Vec<_>>(), vec![u64::MAX]);
        assert_eq!(k_subset_masks(64, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subset_masks(64, 1).count(), 64);
        assert_eq!(k_subset_masks(64, 63).count(), 64);
        assert_eq!(k_subset_masks(3, 4).count(), 0);
    }
}
