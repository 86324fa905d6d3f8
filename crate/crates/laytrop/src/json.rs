//! Wire formats: bit-exact JSON encodings of scalars, layers, polynomials,
//! matrices, and vector sets.
//!
//! Scalars: `"zero"` (or the accepted alias `"-inf"`), or an object
//! `{"v": "<p>/<q>", "l": <layer>}`. Layers are naturals, `"inf"`, or
//! two-element arrays for doubled pairs. Under the supertropical
//! descriptor the shorthand `{"v": ..., "g": true}` means the ghost layer
//! and a bare `{"v": ...}` means tangible; the shorthand is also what the
//! encoder emits there. Rationals travel as decimal-free strings.

use crate::error::{Error, Result};
use crate::linalg::{BilinearForm, VectorSet};
use crate::matrix::TropMatrix;
use crate::poly::TropPoly;
use crate::rat::Rat;
use crate::scalar::LayeredScalar;
use crate::semiring::{SortLayer, SortSemiring};
use serde::{Deserialize, Serialize};
use serde_json::Value;

fn layer_to_value(l: &SortLayer) -> Value {
    match l {
        SortLayer::Fin(n) => Value::from(*n),
        SortLayer::Inf => Value::from("inf"),
        SortLayer::Pair(a, b) => Value::Array(vec![layer_to_value(a), layer_to_value(b)]),
    }
}

fn layer_from_value(v: &Value) -> Result<SortLayer> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(SortLayer::Fin)
            .ok_or_else(|| Error::Parse(format!("layer {n} is not a natural number"))),
        Value::String(s) if s == "inf" => Ok(SortLayer::Inf),
        Value::Array(items) if items.len() == 2 => Ok(SortLayer::pair(
            layer_from_value(&items[0])?,
            layer_from_value(&items[1])?,
        )),
        other => Err(Error::Parse(format!("bad layer encoding {other}"))),
    }
}

/// Encode a scalar for the given descriptor.
pub fn scalar_to_value(desc: &SortSemiring, s: &LayeredScalar) -> Value {
    match s {
        LayeredScalar::Zero => Value::from("zero"),
        LayeredScalar::El { layer, value } => {
            let mut obj = serde_json::Map::new();
            obj.insert("v".into(), Value::from(value.to_string()));
            if *desc == SortSemiring::TwoLayer {
                if *layer == SortLayer::Inf {
                    obj.insert("g".into(), Value::from(true));
                }
            } else {
                obj.insert("l".into(), layer_to_value(layer));
            }
            Value::Object(obj)
        }
    }
}

/// Decode a scalar, validating the layer against the descriptor.
pub fn scalar_from_value(desc: &SortSemiring, v: &Value) -> Result<LayeredScalar> {
    match v {
        Value::String(s) if s == "zero" || s == "-inf" => Ok(LayeredScalar::Zero),
        Value::Object(obj) => {
            let value: Rat = obj
                .get("v")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Parse("scalar object needs a string field \"v\"".into()))?
                .parse()?;
            let layer = if let Some(l) = obj.get("l") {
                layer_from_value(l)?
            } else if obj.get("g").and_then(|g| g.as_bool()).unwrap_or(false) {
                SortLayer::Inf
            } else {
                desc.unit_layer()
            };
            LayeredScalar::new(desc, layer, value)
        }
        other => Err(Error::Parse(format!("bad scalar encoding {other}"))),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Value>>,
}

pub fn matrix_to_value(desc: &SortSemiring, m: &TropMatrix) -> Value {
    let data: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|x| scalar_to_value(desc, x))
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "data": data,
    })
}

pub fn matrix_from_value(desc: &SortSemiring, v: &Value) -> Result<TropMatrix> {
    let wire: MatrixWire = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(format!("bad matrix object: {e}")))?;
    if wire.data.len() != wire.rows {
        return Err(Error::Parse(format!(
            "matrix declares {} rows but carries {}",
            wire.rows,
            wire.data.len()
        )));
    }
    let mut rows = Vec::with_capacity(wire.rows);
    for r in &wire.data {
        if r.len() != wire.cols {
            return Err(Error::Parse(format!(
                "matrix declares {} cols but a row carries {}",
                wire.cols,
                r.len()
            )));
        }
        rows.push(
            r.iter()
                .map(|x| scalar_from_value(desc, x))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    TropMatrix::from_rows(desc.clone(), rows)
}

pub fn poly_to_value(desc: &SortSemiring, p: &TropPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            serde_json::json!({
                "exp": e,
                "coef": scalar_to_value(desc, c),
            })
        })
        .collect();
    serde_json::json!({
        "nvars": p.nvars(),
        "terms": terms,
    })
}

pub fn poly_from_value(desc: &SortSemiring, v: &Value) -> Result<TropPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polynomial must be an object".into()))?;
    let nvars = obj
        .get("nvars")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("polynomial needs \"nvars\"".into()))? as usize;
    let mut out = TropPoly::zero(desc.clone(), nvars);
    let terms = obj
        .get("terms")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("polynomial needs a \"terms\" array".into()))?;
    for t in terms {
        let t = t
            .as_object()
            .ok_or_else(|| Error::Parse("each term is an object".into()))?;
        let exp: Vec<u64> = t
            .get("exp")
            .and_then(|x| serde_json::from_value(x.clone()).ok())
            .ok_or_else(|| Error::Parse("term needs an \"exp\" array of naturals".into()))?;
        let coef = scalar_from_value(
            desc,
            t.get("coef")
                .ok_or_else(|| Error::Parse("term needs a \"coef\"".into()))?,
        )?;
        out.insert_term(exp, coef)?;
    }
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VectorSetWire {
    pub dim: usize,
    pub vectors: Vec<Vec<Value>>,
}

pub fn vector_set_to_value(desc: &SortSemiring, s: &VectorSet) -> Value {
    let vectors: Vec<Value> = s
        .vectors()
        .iter()
        .map(|v| Value::Array(v.iter().map(|x| scalar_to_value(desc, x)).collect()))
        .collect();
    serde_json::json!({
        "dim": s.dim(),
        "vectors": vectors,
    })
}

pub fn vector_set_from_value(desc: &SortSemiring, v: &Value) -> Result<VectorSet> {
    let wire: VectorSetWire = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(format!("bad vector set: {e}")))?;
    let mut vectors = Vec::with_capacity(wire.vectors.len());
    for row in &wire.vectors {
        vectors.push(
            row.iter()
                .map(|x| scalar_from_value(desc, x))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    VectorSet::new(desc.clone(), wire.dim, vectors)
}

pub fn vector_from_value(desc: &SortSemiring, v: &Value) -> Result<Vec<LayeredScalar>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("vector must be an array of scalars".into()))?
        .iter()
        .map(|x| scalar_from_value(desc, x))
        .collect()
}

pub fn vector_to_value(desc: &SortSemiring, v: &[LayeredScalar]) -> Value {
    Value::Array(v.iter().map(|x| scalar_to_value(desc, x)).collect())
}

pub fn bilinear_form_from_value(desc: &SortSemiring, v: &Value) -> Result<BilinearForm> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("bilinear form must be an object".into()))?;
    let gen = obj
        .get("gram_generator")
        .ok_or_else(|| Error::Parse("bilinear form needs \"gram_generator\"".into()))?;
    BilinearForm::new(matrix_from_value(desc, gen)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip_supertropical_shorthand() {
        let d = SortSemiring::TwoLayer;
        let tangible = LayeredScalar::tint(&d, 2);
        let v = scalar_to_value(&d, &tangible);
        assert_eq!(v, serde_json::json!({"v": "2"}));
        assert_eq!(scalar_from_value(&d, &v).unwrap(), tangible);

        let ghost = LayeredScalar::new(&d, SortLayer::Inf, Rat::int(5)).unwrap();
        let v = scalar_to_value(&d, &ghost);
        assert_eq!(v, serde_json::json!({"v": "5", "g": true}));
        assert_eq!(scalar_from_value(&d, &v).unwrap(), ghost);

        assert_eq!(
            scalar_from_value(&d, &serde_json::json!("-inf")).unwrap(),
            LayeredScalar::Zero
        );
        assert_eq!(
            scalar_to_value(&d, &LayeredScalar::Zero),
            serde_json::json!("zero")
        );
    }

    #[test]
    fn scalar_round_trip_layered() {
        let d = SortSemiring::Naturals;
        let s = LayeredScalar::new(&d, SortLayer::Fin(3), Rat::frac(-7, 2)).unwrap();
        let v = scalar_to_value(&d, &s);
        assert_eq!(v, serde_json::json!({"v": "-7/2", "l": 3}));
        assert_eq!(scalar_from_value(&d, &v).unwrap(), s);

        let dd = SortSemiring::doubled(SortSemiring::Naturals);
        let s = LayeredScalar::new(
            &dd,
            SortLayer::pair(SortLayer::Fin(1), SortLayer::Fin(2)),
            Rat::int(4),
        )
        .unwrap();
        let v = scalar_to_value(&dd, &s);
        assert_eq!(v, serde_json::json!({"v": "4", "l": [1, 2]}));
        assert_eq!(scalar_from_value(&dd, &v).unwrap(), s);
    }

    #[test]
    fn rejects_invalid_layers() {
        let d = SortSemiring::TwoLayer;
        assert!(scalar_from_value(&d, &serde_json::json!({"v": "1", "l": 3})).is_err());
        let n = SortSemiring::Naturals;
        assert!(scalar_from_value(&n, &serde_json::json!({"v": "1", "l": "inf"})).is_err());
        assert!(scalar_from_value(&n, &serde_json::json!({"v": "1", "l": 0})).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let d = SortSemiring::TwoLayer;
        let m = TropMatrix::tangible_from_ints(&d, &[&[0, 0], &[1, 2]]);
        let v = matrix_to_value(&d, &m);
        assert_eq!(matrix_from_value(&d, &v).unwrap(), m);
        assert!(matrix_from_value(&d, &serde_json::json!({"rows": 2, "cols": 2, "data": [[ "zero" ]]})).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let d = SortSemiring::Naturals;
        let p = TropPoly::univariate(
            d.clone(),
            &[LayeredScalar::lint(2, 1), LayeredScalar::lint(0, 3)],
        )
        .unwrap();
        let v = poly_to_value(&d, &p);
        assert_eq!(poly_from_value(&d, &v).unwrap(), p);
    }
}
