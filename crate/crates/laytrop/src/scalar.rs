//! Layered scalars: pairs (layer, value) with max-plus value arithmetic,
//! the tangible/ghost split, the surpassing relations, and exploded
//! scalars refining a value with its leading field coefficient.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::semiring::{SortLayer, SortSemiring};
use std::cmp::Ordering;
use std::fmt;

/// A layered scalar: zero, or a value of the ordered monoid tagged with a
/// layer of the sorting semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LayeredScalar {
    Zero,
    El { layer: SortLayer, value: Rat },
}

pub use LayeredScalar::Zero;

impl LayeredScalar {
    /// Construct a nonzero scalar, validating the layer against the
    /// descriptor (the reserved zero layer is rejected).
    pub fn new(desc: &SortSemiring, layer: SortLayer, value: Rat) -> Result<Self> {
        if !desc.valid_layer(&layer, false) {
            return Err(Error::InvalidLayer(format!(
                "layer {layer} is not a nonzero-scalar layer of {desc}"
            )));
        }
        Ok(LayeredScalar::El { layer, value })
    }

    /// Tangible scalar (unit layer) with the given value.
    pub fn tangible(desc: &SortSemiring, value: Rat) -> Self {
        LayeredScalar::El {
            layer: desc.unit_layer(),
            value,
        }
    }

    /// Tangible scalar with an integer value.
    pub fn tint(desc: &SortSemiring, v: i64) -> Self {
        Self::tangible(desc, Rat::int(v))
    }

    /// Scalar with an integer value and finite layer (scalar descriptors).
    pub fn lint(v: i64, layer: u64) -> Self {
        LayeredScalar::El {
            layer: SortLayer::Fin(layer),
            value: Rat::int(v),
        }
    }

    /// The multiplicative unit: value 0 on the unit layer.
    pub fn unit(desc: &SortSemiring) -> Self {
        Self::tangible(desc, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LayeredScalar::Zero)
    }

    /// Sort map: the layer, with the reserved zero layer for zero.
    pub fn sort(&self, desc: &SortSemiring) -> SortLayer {
        match self {
            LayeredScalar::Zero => desc.zero_layer(),
            LayeredScalar::El { layer, .. } => layer.clone(),
        }
    }

    /// Value projection, absent for zero.
    pub fn nu_value(&self) -> Option<&Rat> {
        match self {
            LayeredScalar::Zero => None,
            LayeredScalar::El { value, .. } => Some(value),
        }
    }

    pub fn is_tangible(&self, desc: &SortSemiring) -> bool {
        match self {
            LayeredScalar::Zero => false,
            LayeredScalar::El { layer, .. } => *layer == desc.unit_layer(),
        }
    }

    pub fn is_ghost(&self, desc: &SortSemiring) -> bool {
        !self.is_zero() && !self.is_tangible(desc)
    }

    pub fn is_ghost_or_zero(&self, desc: &SortSemiring) -> bool {
        !self.is_tangible(desc)
    }

    /// Same value, retagged with the given layer; zero stays zero.
    pub fn retag(&self, desc: &SortSemiring, layer: SortLayer) -> Result<Self> {
        match self {
            LayeredScalar::Zero => Ok(LayeredScalar::Zero),
            LayeredScalar::El { value, .. } => Self::new(desc, layer, value.clone()),
        }
    }

    /// Same value on the unit layer; zero stays zero.
    pub fn retag_tangible(&self, desc: &SortSemiring) -> Self {
        match self {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { value, .. } => Self::tangible(desc, value.clone()),
        }
    }

    /// Image in the standard supertropical semiring: tangibles stay on
    /// layer 1, every other nonzero layer collapses to inf.
    pub fn collapse_supertropical(&self, desc: &SortSemiring) -> LayeredScalar {
        match self {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { value, .. } => {
                let layer = if self.is_tangible(desc) {
                    SortLayer::Fin(1)
                } else {
                    SortLayer::Inf
                };
                LayeredScalar::El {
                    layer,
                    value: value.clone(),
                }
            }
        }
    }
}

impl fmt::Display for LayeredScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayeredScalar::Zero => write!(f, "zero"),
            LayeredScalar::El { layer, value } => write!(f, "{value}^[{layer}]"),
        }
    }
}

/// Addition: the larger value wins; equal values merge by adding layers.
pub fn lscalar_add(desc: &SortSemiring, x: &LayeredScalar, y: &LayeredScalar) -> Result<LayeredScalar> {
    match (x, y) {
        (LayeredScalar::Zero, _) => Ok(y.clone()),
        (_, LayeredScalar::Zero) => Ok(x.clone()),
        (
            LayeredScalar::El { layer: k, value: a },
            LayeredScalar::El { layer: l, value: b },
        ) => match a.cmp(b) {
            Ordering::Greater => Ok(x.clone()),
            Ordering::Less => Ok(y.clone()),
            Ordering::Equal => Ok(LayeredScalar::El {
                layer: desc.layer_add(k, l)?,
                value: a.clone(),
            }),
        },
    }
}

/// Multiplication: values add, layers multiply; zero absorbs.
pub fn lscalar_mul(desc: &SortSemiring, x: &LayeredScalar, y: &LayeredScalar) -> Result<LayeredScalar> {
    match (x, y) {
        (LayeredScalar::Zero, _) | (_, LayeredScalar::Zero) => Ok(LayeredScalar::Zero),
        (
            LayeredScalar::El { layer: k, value: a },
            LayeredScalar::El { layer: l, value: b },
        ) => Ok(LayeredScalar::El {
            layer: desc.layer_mul(k, l)?,
            value: a + b,
        }),
    }
}

/// n-fold sum of a scalar: the value is unchanged and the layer picks up
/// the natural multiplier.
pub fn lscalar_nat_scale(desc: &SortSemiring, n: u64, x: &LayeredScalar) -> Result<LayeredScalar> {
    if n == 0 {
        return Ok(LayeredScalar::Zero);
    }
    match x {
        LayeredScalar::Zero => Ok(LayeredScalar::Zero),
        LayeredScalar::El { layer, value } => Ok(LayeredScalar::El {
            layer: desc.layer_nat_mul(n, layer)?,
            value: value.clone(),
        }),
    }
}

/// e-th power; the empty product is the unit scalar.
pub fn lscalar_pow(desc: &SortSemiring, x: &LayeredScalar, e: u32) -> Result<LayeredScalar> {
    if e == 0 {
        return Ok(LayeredScalar::unit(desc));
    }
    match x {
        LayeredScalar::Zero => Ok(LayeredScalar::Zero),
        LayeredScalar::El { layer, value } => Ok(LayeredScalar::El {
            layer: desc.layer_nat_pow(layer, e)?,
            value: value.mul_nat(e as u64),
        }),
    }
}

/// Value comparison forgetting layers; zero is nu-equal only to zero.
pub fn nu_eq(x: &LayeredScalar, y: &LayeredScalar) -> bool {
    match (x, y) {
        (LayeredScalar::Zero, LayeredScalar::Zero) => true,
        (LayeredScalar::El { value: a, .. }, LayeredScalar::El { value: b, .. }) => a == b,
        _ => false,
    }
}

/// The standard supertropical surpassing relation, read through the
/// tangible/ghost split of the ambient descriptor: a surpasses b when
/// a = b, or a = b + c for a ghost-or-zero c.
pub fn ghost_surpass(desc: &SortSemiring, a: &LayeredScalar, b: &LayeredScalar) -> bool {
    if a == b {
        return true;
    }
    match (a, b) {
        (LayeredScalar::Zero, _) => false,
        (_, LayeredScalar::Zero) => a.is_ghost(desc),
        (LayeredScalar::El { value: va, .. }, LayeredScalar::El { value: vb, .. }) => {
            if a.is_tangible(desc) {
                // a tangible and a != b: only b tangible of equal value
                // would do, and that case is structural equality.
                b.is_tangible(desc) && va == vb
            } else {
                va >= vb
            }
        }
    }
}

fn layer_geq(desc: &SortSemiring, k: &SortLayer, threshold: &SortLayer) -> Result<bool> {
    desc.layer_leq(threshold, k)
}

/// Does some c with layer >= `min_layer` satisfy b + c = a?
fn exists_addend(
    desc: &SortSemiring,
    b: &LayeredScalar,
    a: &LayeredScalar,
    min_layer: &SortLayer,
) -> Result<bool> {
    match (a, b) {
        (LayeredScalar::Zero, LayeredScalar::Zero) => {
            // only c = zero sums to zero
            layer_geq(desc, &desc.zero_layer(), min_layer)
        }
        (LayeredScalar::Zero, _) => Ok(false),
        (_, LayeredScalar::Zero) => layer_geq(desc, &a.sort(desc), min_layer),
        (
            LayeredScalar::El { layer: ka, value: va },
            LayeredScalar::El { layer: kb, value: vb },
        ) => match va.cmp(vb) {
            Ordering::Less => Ok(false),
            Ordering::Greater => layer_geq(desc, ka, min_layer),
            Ordering::Equal => {
                if a == b {
                    // any smaller-valued c of layer min_layer works, provided
                    // such a layer exists as a nonzero-scalar layer
                    if desc.valid_layer(min_layer, false) || desc.is_zero_layer(min_layer) {
                        return Ok(true);
                    }
                }
                for x in desc.addend_layers(kb, ka, false)? {
                    if layer_geq(desc, &x, min_layer)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        },
    }
}

/// The layered surpassing relation: a = b + c with c an s(b)-ghost
/// (layer >= s(b)), or a = b, or a nu-equal to b with s(a) >= s(b).
pub fn l_surpass(desc: &SortSemiring, a: &LayeredScalar, b: &LayeredScalar) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let sb = b.sort(desc);
    if exists_addend(desc, b, a, &sb)? {
        return Ok(true);
    }
    Ok(nu_eq(a, b) && layer_geq(desc, &a.sort(desc), &sb)?)
}

/// The surpassing (L, nu)-relation: layered surpassing plus nu-equality.
pub fn l_nu_surpass(desc: &SortSemiring, a: &LayeredScalar, b: &LayeredScalar) -> Result<bool> {
    Ok(nu_eq(a, b) && l_surpass(desc, a, b)?)
}

/// Strong ell-surpassing: a = b, or a = b + c with c a strong ell-ghost
/// (layer >= 2*ell), or a nu-equal to b with a itself a strong ell-ghost.
pub fn strong_l_surpass(
    desc: &SortSemiring,
    a: &LayeredScalar,
    b: &LayeredScalar,
    ell: &SortLayer,
) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let threshold = desc.layer_add(ell, ell)?;
    if exists_addend(desc, b, a, &threshold)? {
        return Ok(true);
    }
    Ok(nu_eq(a, b) && layer_geq(desc, &a.sort(desc), &threshold)?)
}

/// Exploded scalar: a field coefficient paired with a value. Coefficient 0
/// is the ghost layer; the dedicated zero is the image of the zero series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExplodedScalar {
    Zero,
    El { coeff: Rat, value: Rat },
}

impl ExplodedScalar {
    pub fn el(coeff: Rat, value: Rat) -> Self {
        ExplodedScalar::El { coeff, value }
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, ExplodedScalar::El { coeff, .. } if coeff.is_zero())
    }

    /// Projection to the standard supertropical scalar: nonzero coefficient
    /// maps to tangible, zero coefficient to ghost.
    pub fn to_supertropical(&self) -> LayeredScalar {
        match self {
            ExplodedScalar::Zero => LayeredScalar::Zero,
            ExplodedScalar::El { coeff, value } => LayeredScalar::El {
                layer: if coeff.is_zero() {
                    SortLayer::Inf
                } else {
                    SortLayer::Fin(1)
                },
                value: value.clone(),
            },
        }
    }
}

/// Exploded addition: larger value wins; equal values add coefficients,
/// possibly cancelling into the ghost layer.
pub fn exploded_add(x: &ExplodedScalar, y: &ExplodedScalar) -> ExplodedScalar {
    match (x, y) {
        (ExplodedScalar::Zero, _) => y.clone(),
        (_, ExplodedScalar::Zero) => x.clone(),
        (
            ExplodedScalar::El { coeff: c, value: a },
            ExplodedScalar::El { coeff: d, value: b },
        ) => match a.cmp(b) {
            Ordering::Greater => x.clone(),
            Ordering::Less => y.clone(),
            Ordering::Equal => ExplodedScalar::El {
                coeff: c + d,
                value: a.clone(),
            },
        },
    }
}

/// Exploded multiplication: coefficients multiply, values add.
pub fn exploded_mul(x: &ExplodedScalar, y: &ExplodedScalar) -> ExplodedScalar {
    match (x, y) {
        (ExplodedScalar::Zero, _) | (_, ExplodedScalar::Zero) => ExplodedScalar::Zero,
        (
            ExplodedScalar::El { coeff: c, value: a },
            ExplodedScalar::El { coeff: d, value: b },
        ) => ExplodedScalar::El {
            coeff: c * d,
            value: a + b,
        },
    }
}
