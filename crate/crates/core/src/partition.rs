//! Integer partitions stored by multiplicity.
//!
//! A partition `1^{a_1} 2^{a_2} 3^{a_3} ...` is stored as the sequence
//! `[a_1, a_2, a_3, ...]` with trailing zeros removed, so structural equality
//! is equality of partitions.
//!
//! Two text forms are understood:
//!
//! - exponent form `"1^2 3^1"` (a bare `"3"` means `3^1`);
//! - part-list form `"[3,1,1]"`.
//!
//! The empty partition prints as `"[]"`; the empty string, `"[]"` and `"∅"`
//! all parse to it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest weight accepted anywhere in the crate.
pub const MAX_WEIGHT: u64 = 64;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from multiplicities, `mult[0]` counting parts of
    /// size 1. Trailing zeros are dropped.
    pub fn from_multiplicities(mult: impl Into<Vec<u32>>) -> Result<Self> {
        let mut mult = mult.into();
        while mult.last() == Some(&0) {
            mult.pop();
        }
        let p = Self { mult };
        check_weight(p.weight())?;
        Ok(p)
    }

    /// Builds a partition from its parts, in any order. Zero parts are
    /// rejected.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let mut mult: Vec<u32> = Vec::new();
        let mut total: u64 = 0;
        for &part in parts {
            if part == 0 {
                return Err(Error::ParsePartition {
                    input: format!("{parts:?}"),
                    reason: "parts must be positive".into(),
                });
            }
            total += u64::from(part);
            check_weight(total)?;
            let idx = part as usize - 1;
            if mult.len() <= idx {
                mult.resize(idx + 1, 0);
            }
            mult[idx] += 1;
        }
        Ok(Self { mult })
    }

    /// `|p| = Σ i·a_i`.
    pub fn weight(&self) -> u64 {
        self.iter()
            .map(|(size, m)| u64::from(size) * u64::from(m))
            .sum()
    }

    /// `ℓ(p) = Σ a_i`.
    pub fn length(&self) -> u64 {
        self.mult.iter().map(|&m| u64::from(m)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Multiplicity of parts of the given size (0 for size 0).
    pub fn multiplicity(&self, size: u32) -> u32 {
        if size == 0 {
            return 0;
        }
        self.mult.get(size as usize - 1).copied().unwrap_or(0)
    }

    /// Canonical multiplicity sequence, without trailing zeros.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Largest part, 0 for the empty partition.
    pub fn max_part(&self) -> u32 {
        self.mult.len() as u32
    }

    /// `(size, multiplicity)` for every size that actually occurs, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(i, &m)| (i as u32 + 1, m))
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::with_capacity(self.length() as usize);
        for (size, m) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            parts.extend(std::iter::repeat_n(size, m as usize));
        }
        parts
    }

    /// Part-list rendering, e.g. `[3,1,1]`.
    pub fn to_part_list_string(&self) -> String {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

fn check_weight(weight: u64) -> Result<()> {
    if weight > MAX_WEIGHT {
        return Err(Error::WeightTooLarge {
            weight,
            max: MAX_WEIGHT,
        });
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        for (size, m) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{size}^{m}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let fail = |reason: &str| Error::ParsePartition {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        if let Some(rest) = s.strip_prefix('[') {
            let inner = rest.strip_suffix(']').ok_or_else(|| fail("missing ']'"))?;
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(Self::empty());
            }
            let parts = inner
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| fail("bad part")))
                .collect::<Result<Vec<_>>>()?;
            return Self::from_parts(&parts);
        }

        let mut mult: Vec<u32> = Vec::new();
        for token in s.split_whitespace() {
            let (size, m) = match token.split_once('^') {
                Some((size, m)) => (size, m.parse::<u32>().map_err(|_| fail("bad exponent"))?),
                None => (token, 1),
            };
            let size: u32 = size.parse().map_err(|_| fail("bad part size"))?;
            if size == 0 {
                return Err(fail("parts must be positive"));
            }
            let idx = size as usize - 1;
            if mult.len() <= idx {
                mult.resize(idx + 1, 0);
            }
            if mult[idx] != 0 {
                return Err(fail("repeated part size"));
            }
            mult[idx] = m;
        }
        Self::from_multiplicities(mult)
    }
}

/// Serialized in exponent form, e.g. `"1^2 3^1"`.
impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order of their part
/// lists: `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`.
pub fn enumerate_partitions(n: u64) -> Result<Vec<Partition>> {
    check_weight(n)?;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(n as u32, n as u32, &mut parts, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(parts).expect("weight already checked"));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        descend(remaining - part, part, parts, out);
        parts.pop();
    }
}

/// All ordered pairs `(α, β)` with `|α| + |β| = n`.
///
/// Pairs are grouped by `|α|` descending from `n` to 0; within a group `α`
/// and then `β` follow [`enumerate_partitions`] order.
pub fn enumerate_pairs(n: u64) -> Result<Vec<(Partition, Partition)>> {
    check_weight(n)?;
    let by_weight = (0..=n)
        .map(enumerate_partitions)
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for k in (0..=n as usize).rev() {
        for alpha in &by_weight[k] {
            for beta in &by_weight[n as usize - k] {
                out.push((alpha.clone(), beta.clone()));
            }
        }
    }
    Ok(out)
}
