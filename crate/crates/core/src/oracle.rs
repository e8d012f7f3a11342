//! Brute-force ground truth, independent of the proof machinery.
//!
//! Maximum `t`-intersecting families are maximum cliques in the graph on
//! `([n] choose k)` joining sets that share at least `t` elements; they are
//! found by branch and bound with greedy-coloring bounds. The module also
//! enumerates every subfamily of a small complete family and generates seeded
//! random families.
//!
//! Random generation is ChaCha8 seeded with `seed_from_u64`, followed by a
//! Fisher–Yates shuffle of the colex-ordered candidate sets, so a given
//! `(n, k, seed)` yields the same family on every platform.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::set_core::{binomial, k_subset_masks, Subset, UniformFamily};

/// Scale guards for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `C(n, k)` the clique search accepts.
    pub max_binom: u64,
    /// Largest `C(n, k)` for which maximum families are counted.
    pub count_limit: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_binom: 40,
            count_limit: 25,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Whether every maximum family has `t` elements common to all members.
    pub all_maximum_are_stars: bool,
    pub k: usize,
    pub max_size: usize,
    pub n: usize,
    /// Present only when `C(n, k)` is within the counting limit.
    pub num_maximum_families: Option<u64>,
    pub t: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Maximum size of an intersecting family of `k`-subsets of `[n]`.
pub fn max_intersecting_bruteforce(n: usize, k: usize, config: &OracleConfig) -> Result<OracleResult> {
    max_t_intersecting_bruteforce(n, k, 1, config)
}

pub fn max_t_intersecting_bruteforce(
    n: usize,
    k: usize,
    t: usize,
    config: &OracleConfig,
) -> Result<OracleResult> {
    let start = Instant::now();
    if n == 0 || n > 64 || k > n || t == 0 || t > k {
        return Err(Error::range(format!(
            "need 1 <= t <= k <= n <= 64, got n = {n}, k = {k}, t = {t}"
        )));
    }
    let vertices = binomial(n, k);
    if vertices > config.max_binom {
        return Err(Error::Scale(format!(
            "C({n}, {k}) = {vertices} exceeds the clique-search limit {}",
            config.max_binom
        )));
    }
    let masks: Vec<u64> = k_subset_masks(n, k).collect();
    let graph = Graph::new(&masks, t);

    // all k-sets through a fixed t-set: always feasible since t <= k <= n
    let star_size = binomial(n - t, k - t) as usize;
    let max_size = graph.max_clique_above(star_size);

    let is_star = |clique: &[usize]| {
        let common = clique.iter().fold(u64::MAX, |acc, &v| acc & masks[v]);
        common.count_ones() as usize >= t
    };
    let (num_maximum_families, all_maximum_are_stars) = if vertices <= config.count_limit {
        let mut count = 0u64;
        let mut all_stars = true;
        graph.for_each_clique_of_size(max_size, &mut |c| {
            count += 1;
            all_stars &= is_star(c);
            true
        });
        (Some(count), all_stars)
    } else {
        let mut all_stars = true;
        graph.for_each_clique_of_size(max_size, &mut |c| {
            all_stars = is_star(c);
            all_stars
        });
        (None, all_stars)
    };

    Ok(OracleResult {
        all_maximum_are_stars,
        k,
        max_size,
        n,
        num_maximum_families,
        t,
        elapsed: start.elapsed(),
    })
}

/// Dense bitset adjacency.
struct Graph {
    words: usize,
    adj: Vec<Vec<u64>>,
}

type Bits = Vec<u64>;

fn bit_iter(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                w * 64 + b
            })
        })
    })
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .position(|&w| w != 0)
        .map(|w| w * 64 + bits[w].trailing_zeros() as usize)
}

fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1u64 << (v % 64));
}

impl Graph {
    fn new(masks: &[u64], t: usize) -> Self {
        let len = masks.len();
        let words = len.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; len];
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && (a & b).count_ones() as usize >= t {
                    adj[i][j / 64] |= 1u64 << (j % 64);
                }
            }
        }
        Graph { words, adj }
    }

    fn all(&self) -> Bits {
        let mut bits = vec![0u64; self.words];
        for v in 0..self.adj.len() {
            bits[v / 64] |= 1u64 << (v % 64);
        }
        bits
    }

    /// Greedy sequential coloring of `cands`; vertices come out with
    /// nondecreasing colors, colors starting at 1.
    fn color(&self, cands: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = cands.to_vec();
        let mut order = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = first_bit(&available) {
                order.push((v, color));
                clear(&mut uncolored, v);
                clear(&mut available, v);
                for (a, n) in available.iter_mut().zip(&self.adj[v]) {
                    *a &= !n;
                }
            }
        }
        order
    }

    /// Size of a maximum clique, given that one of size `floor` exists.
    fn max_clique_above(&self, floor: usize) -> usize {
        let mut best = floor;
        self.grow(0, self.all(), &mut best);
        best
    }

    fn grow(&self, depth: usize, mut cands: Bits, best: &mut usize) {
        let order = self.color(&cands);
        for &(v, color) in order.iter().rev() {
            if depth + color <= *best {
                return;
            }
            let next: Bits = cands.iter().zip(&self.adj[v]).map(|(c, n)| c & n).collect();
            if next.iter().all(|&w| w == 0) {
                *best = (*best).max(depth + 1);
            } else {
                self.grow(depth + 1, next, best);
            }
            clear(&mut cands, v);
        }
    }

    /// Visits every clique of exactly `size` vertices once, stopping when the
    /// visitor returns `false`.
    fn for_each_clique_of_size(&self, size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let mut clique = Vec::with_capacity(size);
        self.enumerate(&mut clique, self.all(), size, visit);
    }

    fn enumerate(
        &self,
        clique: &mut Vec<usize>,
        mut cands: Bits,
        size: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if clique.len() == size {
            return visit(clique);
        }
        let order = self.color(&cands);
        for &(v, color) in order.iter().rev() {
            if clique.len() + color < size {
                return true;
            }
            let next: Bits = cands.iter().zip(&self.adj[v]).map(|(c, n)| c & n).collect();
            clique.push(v);
            let keep_going = self.enumerate(clique, next, size, visit);
            clique.pop();
            if !keep_going {
                return false;
            }
            clear(&mut cands, v);
        }
        true
    }
}

/// Largest complete family whose power set [`enumerate_subfamilies`] walks.
pub const MAX_ENUMERATED_MEMBERS: u64 = 20;

/// Calls `visit` on every subfamily of `([n] choose a)`, including the empty
/// one. Subfamily number `m` holds the members whose colex rank is a set bit of
/// `m`, and subfamilies are visited in increasing `m`. Returns the count.
pub fn enumerate_subfamilies(
    n: usize,
    a: usize,
    mut visit: impl FnMut(&UniformFamily),
) -> Result<u64> {
    if n == 0 || n > 64 || a > n {
        return Err(Error::range(format!("no {a}-subsets of [{n}]")));
    }
    let members = binomial(n, a);
    if members > MAX_ENUMERATED_MEMBERS {
        return Err(Error::Scale(format!(
            "C({n}, {a}) = {members} members give more than 2^{MAX_ENUMERATED_MEMBERS} subfamilies"
        )));
    }
    let all: Vec<Subset> = k_subset_masks(n, a)
        .map(|m| Subset::from_bits(n, m).expect("mask within ground"))
        .collect();
    let total = 1u64 << members;
    let mut buf = Vec::with_capacity(all.len());
    for m in 0..total {
        buf.clear();
        buf.extend(bit_iter(&[m]).map(|i| all[i]));
        visit(&UniformFamily::from_sorted_unchecked(n, a, buf.clone()));
    }
    Ok(total)
}

/// Largest `C(n, k)` the random generators will shuffle.
pub const MAX_GENERATED_CANDIDATES: u64 = 1 << 22;

fn shuffled_candidates(n: usize, k: usize, seed: u64) -> Result<Vec<u64>> {
    if binomial(n, k) > MAX_GENERATED_CANDIDATES {
        return Err(Error::Scale(format!("C({n}, {k}) = {} candidates", binomial(n, k))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut masks: Vec<u64> = k_subset_masks(n, k).collect();
    masks.shuffle(&mut rng);
    Ok(masks)
}

/// Greedily keeps each shuffled candidate that `admits` accepts against every
/// member kept so far. One pass suffices for maximality because a rejected
/// candidate can only stay rejected as the family grows.
fn greedy_family(n: usize, k: usize, seed: u64, admits: impl Fn(u64, u64) -> bool) -> Result<UniformFamily> {
    let mut kept: Vec<u64> = Vec::new();
    for m in shuffled_candidates(n, k, seed)? {
        if kept.iter().all(|&x| admits(x, m)) {
            kept.push(m);
        }
    }
    Ok(UniformFamily::from_masks(n, k, kept))
}

/// A maximal intersecting family: no further `k`-set meets every member.
pub fn random_maximal_intersecting(n: usize, k: usize, seed: u64) -> Result<UniformFamily> {
    if k == 0 || n < 2 * k || n > 64 {
        return Err(Error::range(format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
    }
    greedy_family(n, k, seed, |a, b| a & b != 0)
}

/// A maximal family whose pairwise intersection sizes all lie in `allowed`.
pub fn random_l_intersecting(
    n: usize,
    k: usize,
    allowed: &BTreeSet<usize>,
    seed: u64,
) -> Result<UniformFamily> {
    if n == 0 || n > 64 || k > n {
        return Err(Error::range(format!("no {k}-subsets of [{n}]")));
    }
    greedy_family(n, k, seed, |a, b| allowed.contains(&((a & b).count_ones() as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_core::all_k_subsets;

    fn raised(max_binom: u64) -> OracleConfig {
        OracleConfig {
            max_binom,
            ..OracleConfig::default()
        }
    }

    /// Exhaustive maximum over all subfamilies, for tiny cases only.
    fn max_by_subsets(n: usize, k: usize, t: usize) -> (usize, u64) {
        let mut best = (0, 0);
        enumerate_subfamilies(n, k, |f| {
            let ok = f.min_pairwise_intersection().is_none_or(|m| m >= t);
            if ok {
                if f.len() > best.0 {
                    best = (f.len(), 1);
                } else if f.len() == best.0 {
                    best.1 += 1;
                }
            }
        })
        .unwrap();
        best
    }

    #[test]
    fn four_two() {
        let r = max_intersecting_bruteforce(4, 2, &OracleConfig::default()).unwrap();
        assert_eq!(r.max_size, 3);
        assert!(!r.all_maximum_are_stars);
        // four stars and four triangles
        assert_eq!(r.num_maximum_families, Some(8));
        assert_eq!(max_by_subsets(4, 2, 1), (3, 8));
    }

    #[test]
    fn five_two() {
        let r = max_intersecting_bruteforce(5, 2, &OracleConfig::default()).unwrap();
        assert_eq!(r.max_size, 4);
        assert!(r.all_maximum_are_stars);
        assert_eq!(r.num_maximum_families, Some(5));
        assert_eq!(max_by_subsets(5, 2, 1), (4, 5));
    }

    #[test]
    fn six_three() {
        let r = max_intersecting_bruteforce(6, 3, &raised(20)).unwrap();
        assert_eq!(r.max_size, 10);
        assert!(!r.all_maximum_are_stars);
        // one set from each of the ten complementary pairs
        assert_eq!(r.num_maximum_families, Some(1024));
    }

    #[test]
    fn t_intersecting_cases() {
        let r = max_t_intersecting_bruteforce(5, 3, 2, &OracleConfig::default()).unwrap();
        assert_eq!(r.max_size, 4);
        assert!(!r.all_maximum_are_stars);
        assert_eq!(max_by_subsets(5, 3, 2).0, 4);

        for (n, k) in [(4, 2), (5, 3), (6, 3)] {
            let r = max_t_intersecting_bruteforce(n, k, k, &OracleConfig::default()).unwrap();
            assert_eq!(r.max_size, 1);
        }
    }

    #[test]
    fn guards_and_ranges() {
        assert!(matches!(
            max_intersecting_bruteforce(30, 10, &OracleConfig::default()),
            Err(Error::Scale(_))
        ));
        assert!(matches!(
            max_t_intersecting_bruteforce(8, 3, 2, &OracleConfig::default()),
            Err(Error::Scale(_))
        ));
        assert!(matches!(
            max_t_intersecting_bruteforce(5, 2, 3, &OracleConfig::default()),
            Err(Error::Range(_))
        ));
        assert!(matches!(enumerate_subfamilies(6, 2, |_| {}), Ok(32768)));
        assert!(matches!(enumerate_subfamilies(7, 3, |_| {}), Err(Error::Scale(_))));
    }

    #[test]
    fn subfamily_enumeration() {
        let mut seen = Vec::new();
        assert_eq!(enumerate_subfamilies(4, 3, |f| seen.push(f.clone())).unwrap(), 16);
        assert!(seen[0].is_empty());
        assert_eq!(seen[15], all_k_subsets(4, 3).unwrap());
        let distinct: BTreeSet<Vec<Subset>> = seen.iter().map(|f| f.sets().to_vec()).collect();
        assert_eq!(distinct.len(), 16);
        let two_intersecting = seen
            .iter()
            .filter(|f| !f.is_empty() && f.min_pairwise_intersection().is_none_or(|m| m >= 2))
            .count();
        assert_eq!(two_intersecting, 15);
        assert_eq!(enumerate_subfamilies(5, 3, |_| {}).unwrap(), 1024);
    }

    #[test]
    fn random_families_are_maximal_and_reproducible() {
        for seed in 0..50 {
            let f = random_maximal_intersecting(5, 2, seed).unwrap();
            assert!(f.is_intersecting());
            assert!(matches!(f.len(), 3 | 4), "{f:?}");
            for c in all_k_subsets(5, 2).unwrap().iter() {
                if !f.contains(c) {
                    assert!(f.iter().any(|m| m.bits() & c.bits() == 0));
                }
            }
            assert_eq!(random_maximal_intersecting(5, 2, seed).unwrap(), f);
        }
        assert!(random_maximal_intersecting(5, 3, 0).is_err());
    }

    #[test]
    fn generator_is_pinned() {
        // guards against silent changes in the generator stack
        let f = random_maximal_intersecting(9, 3, 7).unwrap();
        let again = random_maximal_intersecting(9, 3, 7).unwrap();
        assert_eq!(f, again);
        assert_ne!(random_maximal_intersecting(9, 3, 8).unwrap(), f);
    }

    #[test]
    fn l_intersecting_generator_respects_l() {
        let allowed = BTreeSet::from([0, 2]);
        for seed in 0..20 {
            let f = random_l_intersecting(8, 3, &allowed, seed).unwrap();
            assert!(f.intersection_sizes().is_subset(&allowed));
        }
    }
}
