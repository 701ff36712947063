//! Triangular factorization in root subgroup coordinates.
//!
//! A [`Chart`] fixes a realization and a reduced word. [`forward_map`] sends
//! coordinates `ζ` to `g = l·u·h` and reads off ordered exponential
//! coordinates of `l` and `u`; [`inverse_map`] recovers `ζ` from them.

mod chart;
mod checks;
mod forward;
mod inverse;
mod jacobian;
mod ldu;
mod stratum;

pub use chart::Chart;
pub use checks::{delta_identity_check, weight_grading_check};
pub use forward::{forward_map, forward_product, ordered_exp_coords, ordered_exp_product};
pub(crate) use forward::unipotent_coords_of;
pub use inverse::{inverse_map, transpose_dual, DualCoords};
pub use jacobian::{jacobian_det_ad, jacobian_det_formula, jacobian_double_product, jacobian_matrix};
pub use ldu::{ldu, ldu_minors, Ldu};
pub use stratum::{detect_permutation, forward_map_stratum, reduced_word_of, stratum_word, weyl_rep_of};

use crate::error::{Error, Result};
use crate::field::Field;

/// Which unipotent subgroup a coordinate vector parametrizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `N⁻`, products of `exp(c f_τ)`
    Lower,
    /// `N⁺`, products of `exp(c e_τ)`
    Upper,
}

/// Root subgroup coordinates `(ζ_j⁻, ζ_j⁺)` and a diagonal torus element.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaCoords<F> {
    pub minus: Vec<F>,
    pub plus: Vec<F>,
    pub h: Vec<F>,
}

impl<F: Field> ZetaCoords<F> {
    pub fn new(minus: Vec<F>, plus: Vec<F>, h: Vec<F>) -> Result<Self> {
        if minus.len() != plus.len() {
            return Err(Error::invalid(format!("{} ζ⁻ values but {} ζ⁺ values", minus.len(), plus.len())));
        }
        Ok(ZetaCoords { minus, plus, h })
    }

    /// All coordinates zero, `h = 1`.
    pub fn zero(pairs: usize, size: usize) -> Self {
        ZetaCoords { minus: vec![F::zero(); pairs], plus: vec![F::zero(); pairs], h: vec![F::one(); size] }
    }

    /// Identity torus part.
    pub fn from_pairs(minus: Vec<F>, plus: Vec<F>, size: usize) -> Result<Self> {
        Self::new(minus, plus, vec![F::one(); size])
    }

    pub fn len(&self) -> usize {
        self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minus.is_empty()
    }

    /// `1 + ζ_j⁻ ζ_j⁺` (0-based `j`).
    pub fn factor(&self, j: usize) -> F {
        F::one().add(&self.minus[j].mul(&self.plus[j]))
    }
}

/// Ordered exponential coordinates `l`, `u` and the torus part `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedExpCoords<F> {
    pub l: Vec<F>,
    pub u: Vec<F>,
    pub h: Vec<F>,
}

impl<F: Field> OrderedExpCoords<F> {
    pub fn new(l: Vec<F>, u: Vec<F>, h: Vec<F>) -> Result<Self> {
        if l.len() != u.len() {
            return Err(Error::invalid(format!("{} l values but {} u values", l.len(), u.len())));
        }
        Ok(OrderedExpCoords { l, u, h })
    }

    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }
}
