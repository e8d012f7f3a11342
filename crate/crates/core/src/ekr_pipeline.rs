//! The complementation argument for the Erdős–Ko–Rado bound as an executable
//! pipeline.
//!
//! An intersecting `k`-uniform family `F` on `[n]` is split at a pivot `p`:
//! `F1` holds the members containing `p`, `F0` the rest. Deleting `p` from the
//! members of `F1` gives `G1`; complementing the members of `F0` inside
//! `[n] \ {p}` gives `G0`, which is `(n-1-k)`-uniform. Because `F` is
//! intersecting, no member of `G1` lies inside a member of `G0`, so `G1` and
//! `∂_{k-1} G0` are disjoint families of `(k-1)`-subsets of `[n] \ {p}`. Two
//! members of `G0` meet in `(n-1) - 2k + |F ∩ F'|` elements, at least `n - 2k`,
//! and Katona's inequality gives `|G0| <= |∂_{k-1} G0|`. Chaining:
//!
//! ```text
//! |F| = |F1| + |F0| = |G1| + |G0| <= |G1| + |∂_{k-1} G0| <= C(n-1, k-1)
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set_core::{binomial, complement_within, k_subsets_of, Subset, UniformFamily};
use crate::shadow::{katona_check, shadow};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkrDecomposition {
    pub n: usize,
    pub k: usize,
    pub pivot: usize,
    /// Members avoiding the pivot.
    pub f0: UniformFamily,
    /// Members containing the pivot.
    pub f1: UniformFamily,
    /// `F1` with the pivot deleted; `(k-1)`-uniform.
    pub g1: UniformFamily,
    /// Complements of `F0` within `[n] \ {pivot}`; `(n-1-k)`-uniform.
    pub g0: UniformFamily,
}

impl EkrDecomposition {
    /// `[n] \ {pivot}`.
    pub fn window(&self) -> Subset {
        window(self.n, self.pivot)
    }

    pub fn family_size(&self) -> usize {
        self.f0.len() + self.f1.len()
    }

    /// The original family, reassembled.
    pub fn family(&self) -> UniformFamily {
        let sets = self.f0.iter().chain(self.f1.iter()).copied().collect();
        UniformFamily::new(self.n, self.k, sets).expect("blocks of one family")
    }
}

fn window(n: usize, pivot: usize) -> Subset {
    Subset::full(n).expect("valid ground").without(pivot)
}

fn check_pivot(family: &UniformFamily, pivot: usize) -> Result<()> {
    let n = family.ground_n();
    if pivot == 0 || pivot > n {
        return Err(Error::range(format!("pivot {pivot} outside [1, {n}]")));
    }
    if family.k() == 0 {
        return Err(Error::range("uniformity must be at least 1"));
    }
    Ok(())
}

/// Splits an intersecting family at `pivot`.
pub fn decompose(family: &UniformFamily, pivot: usize) -> Result<EkrDecomposition> {
    check_pivot(family, pivot)?;
    if let Some(witness) = family.disjoint_pair() {
        return Err(Error::NotIntersecting { witness });
    }
    Ok(split(family, pivot))
}

/// [`decompose`] without the intersecting check, so that the downstream
/// certificates can be exercised on invalid input.
pub fn decompose_unchecked(family: &UniformFamily, pivot: usize) -> Result<EkrDecomposition> {
    check_pivot(family, pivot)?;
    Ok(split(family, pivot))
}

fn split(family: &UniformFamily, pivot: usize) -> EkrDecomposition {
    let (n, k) = (family.ground_n(), family.k());
    let window = window(n, pivot);
    let (with, without): (Vec<Subset>, Vec<Subset>) =
        family.iter().partition(|s| s.contains(pivot));

    let g1 = with.iter().map(|s| s.without(pivot)).collect();
    let mut g0: Vec<Subset> = without
        .iter()
        .map(|s| complement_within(s, &window).expect("member avoids the pivot"))
        .collect();
    g0.sort_unstable();
    // F0 is empty when k = n, leaving the uniformity of G0 moot
    let g0_k = (n - 1).saturating_sub(k);

    EkrDecomposition {
        n,
        k,
        pivot,
        f0: UniformFamily::new(n, k, without).expect("subfamily"),
        f1: UniformFamily::new(n, k, with).expect("subfamily"),
        g1: UniformFamily::new(n, k - 1, g1).expect("pivot deletion is injective"),
        g0: UniformFamily::new(n, g0_k, g0).expect("complementation is injective"),
    }
}

/// `∂_{k-1} G0`, empty when `G0` is too thin to have `(k-1)`-subsets.
fn g0_shadow(d: &EkrDecomposition) -> UniformFamily {
    let level = d.k - 1;
    if level > d.g0.k() || d.g0.is_empty() {
        return UniformFamily::empty(d.n, level).expect("level <= n");
    }
    shadow(&d.g0, level).expect("level checked")
}

/// `G1 ∩ ∂_{k-1} G0`, which is empty for an intersecting family.
///
/// Returns `(true, None)` when disjoint and `(false, Some(witness))` otherwise.
pub fn check_shadow_disjoint(d: &EkrDecomposition) -> (bool, Option<Subset>) {
    let sh = g0_shadow(d);
    match d.g1.iter().find(|s| sh.contains(s)) {
        Some(w) => (false, Some(*w)),
        None => (true, None),
    }
}

/// Smallest pairwise intersection inside `G0`.
pub fn g0_min_intersection(d: &EkrDecomposition) -> Option<usize> {
    d.g0.min_pairwise_intersection()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSizes {
    pub f0: usize,
    pub f1: usize,
    pub g0: usize,
    pub g1: usize,
    pub shadow_g0: usize,
}

impl ChainSizes {
    /// `(|F1|, |F0|, |G1|, |G0|, |∂_{k-1} G0|)`.
    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.f1, self.f0, self.g1, self.g0, self.shadow_g0)
    }
}

/// Each link of the chain evaluated on its own.
///
/// Fields are declared in key order so the JSON form is key-sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// `C(n-1, k-1)`.
    pub bound: u64,
    pub disjoint: bool,
    pub family_size: usize,
    pub final_bound: bool,
    pub k: usize,
    pub katona_step: bool,
    pub n: usize,
    pub packing_step: bool,
    /// `|F| = |F1| + |F0|`, `|F1| = |G1|`, `|F0| = |G0|`.
    pub partition_step: bool,
    pub pivot: usize,
    pub sizes: ChainSizes,
    pub witness: Option<Subset>,
}

impl ChainReport {
    pub fn all_steps_hold(&self) -> bool {
        self.partition_step && self.disjoint && self.katona_step && self.packing_step && self.final_bound
    }
}

pub fn run_chain(d: &EkrDecomposition) -> Result<ChainReport> {
    let (n, k) = (d.n, d.k);
    if n < 2 * k {
        return Err(Error::BoundNotApplicable { n, k });
    }
    let sh = g0_shadow(d);
    let bound = binomial(n - 1, k - 1);
    let family_size = d.family_size();
    let sizes = ChainSizes {
        f0: d.f0.len(),
        f1: d.f1.len(),
        g0: d.g0.len(),
        g1: d.g1.len(),
        shadow_g0: sh.len(),
    };
    let mut witness = None;

    let partition_step =
        family_size == sizes.f1 + sizes.f0 && sizes.f1 == sizes.g1 && sizes.f0 == sizes.g0;

    let (disjoint, w) = check_shadow_disjoint(d);
    witness = witness.or(w);

    // a = n-k-1, b = n-2k, so the shadow level a-b is k-1
    let katona_step = match katona_check(&d.g0, n - 2 * k) {
        Ok(report) => report.holds && report.shadow_size == sizes.shadow_g0,
        Err(Error::NotBIntersecting { witness: (x, _), .. }) => {
            witness = witness.or(Some(x));
            false
        }
        Err(e) => return Err(e),
    };

    let packing_step = (sizes.g1 + sizes.shadow_g0) as u64 <= bound;
    let final_bound = family_size as u64 <= bound;

    Ok(ChainReport {
        bound,
        disjoint,
        family_size,
        final_bound,
        k,
        katona_step,
        n,
        packing_step,
        partition_step,
        pivot: d.pivot,
        sizes,
        witness,
    })
}

/// Size class of an intersecting family relative to `C(n-1, k-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExtremalClass {
    Star { center: usize },
    NotMaximum,
    /// Maximum size with no common element; only possible when `n = 2k`.
    MaximumNonStar,
}

pub fn classify_extremal(family: &UniformFamily) -> Result<ExtremalClass> {
    let (n, k) = (family.ground_n(), family.k());
    check_pivot(family, 1)?;
    if let Some(witness) = family.disjoint_pair() {
        return Err(Error::NotIntersecting { witness });
    }
    if n < 2 * k {
        return Err(Error::BoundNotApplicable { n, k });
    }
    let bound = binomial(n - 1, k - 1);
    let size = family.len() as u64;
    if size < bound {
        return Ok(ExtremalClass::NotMaximum);
    }
    match family.common_intersection().elements().next() {
        Some(center) if size == bound => Ok(ExtremalClass::Star { center }),
        _ => Ok(ExtremalClass::MaximumNonStar),
    }
}

/// Which branch of the equality analysis a maximum family takes at a pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EqualityBranch {
    /// `G0 = ∅`: the pivot lies in every member.
    PivotStar,
    /// `G0` is every `(n-1-k)`-subset of `[n] \ {pivot, center}`; `center` lies in every member.
    ComplementStar { center: usize },
    Neither,
}

pub fn equality_branch(d: &EkrDecomposition) -> EqualityBranch {
    if d.g0.is_empty() {
        return if d.f1.common_intersection().contains(d.pivot) {
            EqualityBranch::PivotStar
        } else {
            EqualityBranch::Neither
        };
    }
    let common = d.f1.common_intersection().intersection(&d.f0.common_intersection());
    let center = common.ok().and_then(|c| c.without(d.pivot).elements().next());
    let Some(center) = center else {
        return EqualityBranch::Neither;
    };
    let rest = d.window().without(center);
    match k_subsets_of(&rest, d.g0.k()) {
        Ok(complete) if complete == d.g0 => EqualityBranch::ComplementStar { center },
        _ => EqualityBranch::Neither,
    }
}

/// Every `k`-subset of `[n]` containing `center`.
pub fn star(n: usize, k: usize, center: usize) -> Result<UniformFamily> {
    if n == 0 || center == 0 || center > n || k == 0 || k > n {
        return Err(Error::range(format!(
            "no star with center {center} of {k}-subsets of [{n}]"
        )));
    }
    let rest = Subset::full(n)?.without(center);
    let sets = k_subsets_of(&rest, k - 1)?
        .iter()
        .map(|s| s.with(center))
        .collect::<Result<Vec<_>>>()?;
    UniformFamily::new(n, k, sets)
}
