//! The `s`-shadow operator and Katona's intersecting shadow inequality.
//!
//! For an `a`-uniform family whose members pairwise share at least `b`
//! elements, the `(a - b)`-shadow is at least as large as the family. Equality
//! holds when the family is empty, when `a = b` (a single member), or when the
//! family is all `a`-subsets of a `(2a - b)`-element set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set_core::{binomial, UniformFamily};

/// `∂_s A`: every `s`-set contained in some member of `A`.
///
/// Computed by repeatedly taking the one-step shadow `∂_{k-1}`. `∂_s ∅ = ∅`,
/// and for a nonempty family `∂_0 A = {∅}`.
pub fn shadow(family: &UniformFamily, s: usize) -> Result<UniformFamily> {
    let k = family.k();
    if s > k {
        return Err(Error::range(format!(
            "shadow level {s} exceeds uniformity {k}"
        )));
    }
    let mut current = family.clone();
    for level in (s..k).rev() {
        current = lower_shadow(&current, level);
    }
    Ok(current)
}

fn lower_shadow(family: &UniformFamily, level: usize) -> UniformFamily {
    let mut masks = Vec::with_capacity(family.len() * (level + 1));
    for m in family.masks() {
        let mut rest = m;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            masks.push(m & !low);
            rest &= rest - 1;
        }
    }
    UniformFamily::from_masks(family.ground_n(), level, masks)
}

/// Which equality case of the inequality a family falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum KatonaClass {
    EqualAB,
    Empty,
    /// Isomorphic to all `a`-subsets of a `(2a - b)`-set.
    #[serde(rename = "COMPLETE_ON_2A_MINUS_B")]
    CompleteOn2aMinusB,
    Strict,
}

impl KatonaClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            KatonaClass::EqualAB => "EQUAL_A_B",
            KatonaClass::Empty => "EMPTY",
            KatonaClass::CompleteOn2aMinusB => "COMPLETE_ON_2A_MINUS_B",
            KatonaClass::Strict => "STRICT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KatonaReport {
    pub a: usize,
    pub b: usize,
    pub family_size: usize,
    pub shadow_size: usize,
    pub holds: bool,
    pub extremal_class: KatonaClass,
}

fn validate(family: &UniformFamily, b: usize) -> Result<()> {
    let a = family.k();
    if b > a {
        return Err(Error::range(format!(
            "intersection bound {b} exceeds uniformity {a}"
        )));
    }
    match family.min_intersection_witness() {
        Some((shared, witness)) if shared < b => Err(Error::NotBIntersecting {
            b,
            shared,
            witness,
        }),
        _ => Ok(()),
    }
}

fn classify(family: &UniformFamily, b: usize) -> KatonaClass {
    let a = family.k();
    if family.is_empty() {
        KatonaClass::Empty
    } else if a == b {
        KatonaClass::EqualAB
    } else if family.union().len() == 2 * a - b
        && family.len() as u64 == binomial(2 * a - b, a)
    {
        KatonaClass::CompleteOn2aMinusB
    } else {
        KatonaClass::Strict
    }
}

/// Checks `|A| <= |∂_{a-b} A|` for a family asserted to be `b`-intersecting.
///
/// The assertion is validated first; a pair sharing fewer than `b` elements is
/// returned as [`Error::NotBIntersecting`].
pub fn katona_check(family: &UniformFamily, b: usize) -> Result<KatonaReport> {
    validate(family, b)?;
    let a = family.k();
    let shadow_size = shadow(family, a - b)?.len();
    Ok(KatonaReport {
        a,
        b,
        family_size: family.len(),
        shadow_size,
        holds: family.len() <= shadow_size,
        extremal_class: classify(family, b),
    })
}

pub fn classify_katona_equality(family: &UniformFamily, b: usize) -> Result<KatonaClass> {
    validate(family, b)?;
    Ok(classify(family, b))
}
