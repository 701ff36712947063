//! JSON shapes for coordinates, factorizations and errors.
//!
//! Scalars are strings such as `"3"`, `"-1/2"`, `"2-1/3*i"` or `"1*i"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{DualCoords, Ldu, OrderedExpCoords, ZetaCoords};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `{"pairs": [[ζ⁻, ζ⁺], …], "h": [...]}`; a missing `h` means the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZetaJson {
    pub pairs: Vec<[Scalar; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Scalar>>,
}

impl ZetaJson {
    pub fn into_coords(self, size: usize) -> Result<ZetaCoords<Scalar>> {
        let (minus, plus) = self.pairs.into_iter().map(|[m, p]| (m, p)).unzip();
        ZetaCoords::new(minus, plus, self.h.unwrap_or_else(|| vec![Scalar::one(); size]))
    }
}

impl From<&ZetaCoords<Scalar>> for ZetaJson {
    fn from(z: &ZetaCoords<Scalar>) -> Self {
        ZetaJson {
            pairs: z.minus.iter().zip(&z.plus).map(|(m, p)| [m.clone(), p.clone()]).collect(),
            h: Some(z.h.clone()),
        }
    }
}

/// `{"l": [...], "u": [...], "h": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordsJson {
    pub l: Vec<Scalar>,
    pub u: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Scalar>>,
}

impl CoordsJson {
    pub fn into_coords(self, size: usize) -> Result<OrderedExpCoords<Scalar>> {
        OrderedExpCoords::new(self.l, self.u, self.h.unwrap_or_else(|| vec![Scalar::one(); size]))
    }
}

impl From<&OrderedExpCoords<Scalar>> for CoordsJson {
    fn from(c: &OrderedExpCoords<Scalar>) -> Self {
        CoordsJson { l: c.l.clone(), u: c.u.clone(), h: Some(c.h.clone()) }
    }
}

/// Forward map output: the group element and its coordinates side by side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForwardJson {
    pub g: Matrix<Scalar>,
    pub l: Vec<Scalar>,
    pub u: Vec<Scalar>,
    pub h: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualJson {
    pub pairs: Vec<[Scalar; 2]>,
    pub h_dual: Vec<Scalar>,
}

impl From<&DualCoords<Scalar>> for DualJson {
    fn from(d: &DualCoords<Scalar>) -> Self {
        DualJson {
            pairs: d.minus.iter().zip(&d.plus).map(|(m, p)| [m.clone(), p.clone()]).collect(),
            h_dual: d.h_dual.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LduJson {
    pub l: Matrix<Scalar>,
    pub d: Vec<Scalar>,
    pub u: Matrix<Scalar>,
}

impl From<&Ldu<Scalar>> for LduJson {
    fn from(f: &Ldu<Scalar>) -> Self {
        LduJson { l: f.l.clone(), d: f.d.clone(), u: f.u.clone() }
    }
}

/// `{"kind": ..., "index": ..., "value": ..., "message": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub kind: String,
    pub index: Option<usize>,
    pub value: Option<String>,
    pub message: String,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        ErrorJson {
            kind: e.kind().to_string(),
            index: e.index(),
            value: e.value().map(str::to_string),
            message: e.to_string(),
        }
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}
