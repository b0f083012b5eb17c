//! Objects of the derived category of a curve, recorded by their slope-HN data.
//!
//! `Coh(C)` is hereditary, so every object is a direct sum of shifted sheaves
//! and every sheaf is filtered by slope-semistable pieces. A [`FormalObject`]
//! keeps exactly that data: a multiset of `(shift, semistable class)` pairs.
//! Extensions between pieces of equal phase are not tracked.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{is_semistable_class, NumClass, Slope};

/// A semistable class placed in cohomological shift `shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub shift: i64,
    pub class: NumClass,
}

impl Factor {
    pub const fn new(shift: i64, class: NumClass) -> Self {
        Self { shift, class }
    }

    pub(crate) fn slope(&self) -> Slope {
        // classes inside a FormalObject are semistable, hence nonzero with r >= 0
        self.class.slope().expect("semistable class has a slope")
    }

    /// The class this factor contributes to `K`: `(-1)^shift · class`.
    pub fn signed_class(&self) -> NumClass {
        if self.shift.rem_euclid(2) == 0 {
            self.class
        } else {
            -self.class
        }
    }
}

/// Canonical multiset of shifted semistable classes.
///
/// Sorted by shift descending then slope descending, with equal
/// `(shift, slope)` entries merged. The empty list is the zero object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FormalObject {
    factors: Vec<Factor>,
    genus: u32,
}

impl FormalObject {
    pub fn zero(genus: u32) -> Self {
        Self {
            factors: Vec::new(),
            genus,
        }
    }

    pub fn canonicalize(raw: &[Factor], genus: u32) -> Result<Self> {
        let mut merged: BTreeMap<(i64, Slope), NumClass> = BTreeMap::new();
        for (index, f) in raw.iter().enumerate() {
            if f.class.is_zero() {
                return Err(Error::ZeroClass);
            }
            if !is_semistable_class(genus, f.class)? {
                return Err(Error::NotSemistable {
                    index,
                    class: f.class,
                    genus,
                });
            }
            let slot = merged
                .entry((f.shift, f.slope()))
                .or_insert(NumClass::new(0, 0));
            *slot = *slot + f.class;
        }
        let factors = merged
            .into_iter()
            .rev()
            .map(|((shift, _), class)| Factor::new(shift, class))
            .collect();
        Ok(Self { factors, genus })
    }

    /// A single shifted semistable class.
    pub fn semistable(shift: i64, class: NumClass, genus: u32) -> Result<Self> {
        Self::canonicalize(&[Factor::new(shift, class)], genus)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn signed_class(&self) -> NumClass {
        signed_class(&self.factors)
    }

    /// `E[s]`.
    pub fn shifted(&self, s: i64) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|f| Factor::new(f.shift + s, f.class))
                .collect(),
            genus: self.genus,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::MixedGenus(self.genus, other.genus));
        }
        let mut all = self.factors.clone();
        all.extend_from_slice(&other.factors);
        Self::canonicalize(&all, self.genus)
    }

    /// Tensor by a line bundle of classical degree `e`.
    pub fn twisted(&self, e: i64) -> Self {
        let raw: Vec<Factor> = self
            .factors
            .iter()
            .map(|f| Factor::new(f.shift, f.class.twist(e)))
            .collect();
        // twisting preserves semistability and the relative order of slopes
        Self::canonicalize(&raw, self.genus).expect("twist of a canonical object")
    }
}

/// `Σ (−1)^k · c` over the given factors.
pub fn signed_class(factors: &[Factor]) -> NumClass {
    factors.iter().map(Factor::signed_class).sum()
}
