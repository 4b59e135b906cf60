//! Graded dimension vectors with exact integer entries.
//!
//! A [`GradedDims`] is the Poincaré polynomial `Σ dim H_k · t^k` of a space.
//! Entries are stored sparsely and never hold an explicit zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<u32, BigUint>,
}

impl GradedDims {
    /// The zero vector space.
    pub fn zero() -> Self {
        Self::default()
    }

    /// One dimension in degree 0 (the homology of a point).
    pub fn unit() -> Self {
        Self::monomial(0, 1u32)
    }

    pub fn monomial(degree: u32, dim: impl Into<BigUint>) -> Self {
        let mut out = Self::zero();
        out.add_at(degree, dim.into());
        out
    }

    /// Dense constructor: `dims[k]` is the dimension in degree `k`.
    pub fn from_dense<T: Into<BigUint> + Clone>(dims: &[T]) -> Self {
        let mut out = Self::zero();
        for (k, d) in dims.iter().enumerate() {
            out.add_at(k as u32, d.clone().into());
        }
        out
    }

    fn add_at(&mut self, degree: u32, dim: BigUint) {
        if dim.is_zero() {
            return;
        }
        *self.dims.entry(degree).or_default() += dim;
    }

    pub fn get(&self, degree: u32) -> BigUint {
        self.dims.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Nonzero `(degree, dimension)` entries in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.dims.iter().map(|(&k, d)| (k, d))
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.dims.keys().next_back().copied()
    }

    pub fn bottom_degree(&self) -> Option<u32> {
        self.dims.keys().next().copied()
    }

    /// Dimensions in degrees `0..=top_degree`, zeros included.
    pub fn to_dense(&self) -> Vec<BigUint> {
        match self.top_degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|k| self.get(k)).collect(),
        }
    }

    pub fn total_rank(&self) -> BigUint {
        self.dims.values().sum()
    }

    /// `Σ (-1)^k dim H_k`.
    pub fn euler_char(&self) -> BigInt {
        self.dims.iter().fold(BigInt::zero(), |acc, (&k, d)| {
            let d = BigInt::from(d.clone());
            if k % 2 == 0 {
                acc + d
            } else {
                acc - d
            }
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&k, d) in &other.dims {
            self.add_at(k, d.clone());
        }
    }

    /// Künneth product: `out[k] = Σ_j self[j] · other[k - j]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, a) in &self.dims {
            for (&j, b) in &other.dims {
                out.add_at(i + j, a * b);
            }
        }
        out
    }

    /// Moves every class up by `2 * codim` degrees; `codim` is the complex
    /// codimension of an attracting stratum.
    pub fn shift(&self, codim: u32) -> Self {
        Self {
            dims: self
                .dims
                .iter()
                .map(|(&k, d)| (k + 2 * codim, d.clone()))
                .collect(),
        }
    }

    /// Tensor product of all factors; the empty product is [`GradedDims::unit`].
    pub fn tensor_all<'a>(factors: impl IntoIterator<Item = &'a GradedDims>) -> Self {
        factors
            .into_iter()
            .fold(Self::unit(), |acc, f| acc.tensor(f))
    }

    /// Polynomial rendering, e.g. `1 + 2t + 2t^2 + 2t^3 + t^4`; the zero
    /// vector renders as `0`.
    pub fn to_polynomial_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .dims
            .iter()
            .map(|(&k, d)| {
                let coeff = if d.is_one() && k != 0 {
                    String::new()
                } else {
                    d.to_string()
                };
                match k {
                    0 => coeff,
                    1 => format!("{coeff}t"),
                    _ => format!("{coeff}t^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// JSON object `{"degree": dimension, ...}` in ascending degree, with
    /// dimensions as exact JSON integers.
    pub fn to_json_value(&self) -> serde_json::Value {
        let map = self
            .dims
            .iter()
            .map(|(k, d)| (k.to_string(), big_to_json(d)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, String> {
        let obj = value
            .as_object()
            .ok_or_else(|| "graded dimensions must be a JSON object".to_string())?;
        let mut out = Self::zero();
        for (k, v) in obj {
            let degree: u32 = k.parse().map_err(|_| format!("bad degree {k:?}"))?;
            let dim = match v {
                serde_json::Value::Number(n) => n
                    .to_string()
                    .parse::<BigUint>()
                    .map_err(|_| format!("bad dimension {n} in degree {degree}"))?,
                other => return Err(format!("bad dimension {other} in degree {degree}")),
            };
            out.add_at(degree, dim);
        }
        Ok(out)
    }
}

pub(crate) fn big_to_json(n: &BigUint) -> serde_json::Value {
    let number: serde_json::Number = n
        .to_string()
        .parse()
        .expect("decimal digits are a valid JSON number");
    serde_json::Value::Number(number)
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_polynomial_string())
    }
}

impl Serialize for GradedDims {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedDims {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Self::from_json_value(&value).map_err(D::Error::custom)
    }
}
