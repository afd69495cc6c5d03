//! JSON forms of lattices, isometries, planes and root sets, plus the named
//! built-ins accepted wherever a file is.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input. Rational
//! plane coordinates are strings `"p/q"` (integers are accepted as well).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::isometry::{permute_u_blocks, swap_involution_k3, Isometry};
use crate::lattice::{e8_minus, hyperbolic_plane, k3_lattice, Lattice, LatticeVector};
use crate::matrix::IntMatrix;
use crate::roots::{RationalPlane, RootSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                BigInt::from_str(v.trim())
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// A rational coordinate: `"p/q"`, `"p"`, or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub BigRational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(BigRational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(BigRational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonRational, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    pub gram: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
}

/// A lattice given by built-in name or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Named(String),
    Inline(LatticeJson),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsometryJson {
    pub lattice: LatticeRef,
    pub matrix: Vec<Vec<JsonInt>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneJson {
    pub ambient: LatticeRef,
    pub basis: Vec<Vec<JsonRational>>,
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(JsonInt).collect())
        .collect()
}

fn matrix_from_rows(cols: usize, rows: &[Vec<JsonInt>]) -> Result<IntMatrix> {
    IntMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect())
}

impl LatticeJson {
    pub fn from_lattice(l: &Lattice) -> Self {
        Self {
            rank: l.rank(),
            gram: int_rows(l.gram()),
            basis_labels: Some(l.labels().to_vec()),
        }
    }

    /// Rejects non-square, non-symmetric and degenerate Gram matrices.
    pub fn to_lattice(&self) -> Result<Lattice> {
        if self.gram.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: self.gram.len(),
            });
        }
        let l = Lattice::new(matrix_from_rows(self.rank, &self.gram)?)?;
        match &self.basis_labels {
            Some(labels) => l.with_labels(labels.clone()),
            None => Ok(l),
        }
    }
}

/// `"k3"`, `"u"` or `"e8_minus"`.
pub fn named_lattice(name: &str) -> Option<Lattice> {
    match name.trim() {
        "k3" => Some(k3_lattice()),
        "u" => Some(hyperbolic_plane()),
        "e8_minus" => Some(e8_minus()),
        _ => None,
    }
}

impl LatticeRef {
    pub fn resolve(&self) -> Result<Lattice> {
        match self {
            LatticeRef::Named(n) => named_lattice(n).ok_or_else(|| Error::Parse(format!("unknown lattice {n:?}"))),
            LatticeRef::Inline(l) => l.to_lattice(),
        }
    }
}

/// `"id"`, `"neg_id"`, `"swap_k3"` or `"perm_u(i,j)"`, all on the K3 lattice.
pub fn named_isometry(name: &str) -> Option<Result<Isometry>> {
    let name: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let k3 = || Arc::new(k3_lattice());
    match name.as_str() {
        "id" => Some(Ok(Isometry::identity(k3()))),
        "neg_id" => Some(Ok(Isometry::negation(k3()))),
        "swap_k3" => Some(Ok(swap_involution_k3())),
        _ => {
            let args = name.strip_prefix("perm_u(")?.strip_suffix(')')?;
            let (i, j) = args.split_once(',')?;
            Some(match (i.parse(), j.parse()) {
                (Ok(i), Ok(j)) => permute_u_blocks(i, j),
                _ => Err(Error::Parse(format!("bad perm_u arguments {args:?}"))),
            })
        }
    }
}

impl IsometryJson {
    pub fn from_isometry(a: &Isometry) -> Self {
        let lattice = if a.lattice().gram() == k3_lattice().gram() {
            LatticeRef::Named("k3".into())
        } else {
            LatticeRef::Inline(LatticeJson::from_lattice(a.lattice()))
        };
        Self {
            lattice,
            matrix: int_rows(a.matrix()),
        }
    }

    pub fn to_isometry(&self) -> Result<Isometry> {
        let l = Arc::new(self.lattice.resolve()?);
        let n = l.rank();
        if self.matrix.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: self.matrix.len(),
            });
        }
        Isometry::new(l, matrix_from_rows(n, &self.matrix)?)
    }
}

impl PlaneJson {
    pub fn from_plane(p: &RationalPlane) -> Self {
        let ambient = if p.ambient().gram() == k3_lattice().gram() {
            LatticeRef::Named("k3".into())
        } else {
            LatticeRef::Inline(LatticeJson::from_lattice(p.ambient()))
        };
        Self {
            ambient,
            basis: p
                .basis()
                .iter()
                .map(|v| v.iter().cloned().map(JsonRational).collect())
                .collect(),
        }
    }

    pub fn to_plane(&self) -> Result<RationalPlane> {
        let l = Arc::new(self.ambient.resolve()?);
        let basis = self
            .basis
            .iter()
            .map(|v| v.iter().map(|x| x.0.clone()).collect())
            .collect();
        RationalPlane::new(l, basis)
    }
}

pub fn vector_json(v: &LatticeVector) -> Vec<JsonInt> {
    v.0.iter().cloned().map(JsonInt).collect()
}

/// Roots as a list of integer coordinate lists.
pub fn roots_json(roots: &RootSet) -> Vec<Vec<JsonInt>> {
    roots.vectors().iter().map(vector_json).collect()
}

pub fn roots_from_json(l: &Lattice, rows: &[Vec<JsonInt>]) -> Result<RootSet> {
    let vectors = rows.iter().map(|r| LatticeVector(r.iter().map(|x| x.0.clone()).collect()));
    RootSet::new(l, vectors)
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    parse::<LatticeRef>(text)?.resolve()
}

pub fn parse_isometry(text: &str) -> Result<Isometry> {
    parse::<IsometryJson>(text)?.to_isometry()
}

pub fn parse_plane(text: &str) -> Result<RationalPlane> {
    parse::<PlaneJson>(text)?.to_plane()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_roundtrip() {
        let l = k3_lattice();
        let text = serde_json::to_string(&LatticeJson::from_lattice(&l)).unwrap();
        assert_eq!(parse_lattice(&text).unwrap(), l);
        assert_eq!(parse_lattice("\"e8_minus\"").unwrap(), e8_minus());
    }

    #[test]
    fn lattice_parser_rejects_asymmetry() {
        let err = parse_lattice(r#"{"rank": 2, "gram": [[0, 1], [2, 0]]}"#).unwrap_err();
        assert_eq!(err, Error::NotSymmetric(0, 1));
        assert!(parse_lattice(r#"{"rank": 3, "gram": [[0, 1], [1, 0]]}"#).is_err());
        assert!(parse_lattice(r#"{"rank": 2, "gram": [[0, 1.5], [1.5, 0]]}"#).is_err());
    }

    #[test]
    fn labels_default() {
        let l = parse_lattice(r#"{"rank": 1, "gram": [[-2]]}"#).unwrap();
        assert_eq!(l.labels(), ["b1"]);
    }

    #[test]
    fn big_integers_use_strings() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let text = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(text, format!("\"{big}\""));
        let back: JsonInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back.0, big);
    }

    #[test]
    fn named_isometries() {
        assert!(named_isometry("id").unwrap().unwrap().is_identity());
        assert!(named_isometry("swap_k3").unwrap().unwrap().is_involution());
        let p = named_isometry("perm_u(1, 3)").unwrap().unwrap();
        assert_eq!(p, permute_u_blocks(1, 3).unwrap());
        assert!(named_isometry("perm_u(1,4)").unwrap().is_err());
        assert!(named_isometry("nope").is_none());
    }

    #[test]
    fn isometry_roundtrip() {
        let a = swap_involution_k3();
        let text = serde_json::to_string(&IsometryJson::from_isometry(&a)).unwrap();
        assert!(text.starts_with(r#"{"lattice":"k3""#));
        assert_eq!(parse_isometry(&text).unwrap(), a);
    }

    #[test]
    fn isometry_parser_verifies() {
        let text = r#"{"lattice": "u", "matrix": [[1, 0], [0, -1]]}"#;
        assert!(matches!(parse_isometry(text), Err(Error::NotIsometry { .. })));
        let text = r#"{"lattice": {"rank": 2, "gram": [[0,1],[1,0]]}, "matrix": [[0, 1], [1, 0]]}"#;
        assert!(parse_isometry(text).unwrap().is_involution());
    }

    #[test]
    fn plane_parsing() {
        let mut rows = vec![vec!["0".to_string(); 22]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            row[2 * i] = "1/2".into();
            row[2 * i + 1] = "1/2".into();
        }
        let text = serde_json::json!({"ambient": "k3", "basis": rows}).to_string();
        let p = parse_plane(&text).unwrap();
        assert_eq!(p.dim(), 3);
        assert!(p.is_positive_definite());
        let again = serde_json::to_string(&PlaneJson::from_plane(&p)).unwrap();
        assert_eq!(parse_plane(&again).unwrap().basis(), p.basis());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational(" -3/6 ").unwrap(), BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn root_sets() {
        let l = hyperbolic_plane();
        let rows = vec![vec![JsonInt(1.into()), JsonInt((-1).into())]];
        let roots = roots_from_json(&l, &rows).unwrap();
        assert_eq!(roots.len(), 2);
        let out = serde_json::to_string(&roots_json(&roots)).unwrap();
        assert_eq!(out, "[[-1,1],[1,-1]]");
    }
}
