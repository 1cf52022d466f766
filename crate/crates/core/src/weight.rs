use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::Error;

/// A weight in Dynkin-label coordinates, i.e. in the basis of fundamental
/// weights. `labels[i]` is the pairing with the i-th simple coroot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(SmallVec<[i32; 8]>);

impl Weight {
    pub fn new(labels: impl IntoIterator<Item = i32>) -> Self {
        Weight(labels.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// The i-th fundamental weight.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    pub fn labels_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn max_label(&self) -> i32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn scaled(&self, k: i32) -> Self {
        Weight(self.0.iter().map(|&a| a * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i32) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a + k * b).collect())
    }

    pub(crate) fn add_scaled_in_place(&mut self, other: &[i32], k: i32) {
        for (a, &b) in self.0.iter_mut().zip(other) {
            *a += k * b;
        }
    }
}

impl Index<usize> for Weight {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(SmallVec::from_vec(v))
    }
}

impl From<&[i32]> for Weight {
    fn from(v: &[i32]) -> Self {
        Weight(SmallVec::from_slice(v))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses a comma-separated label list such as `1,0,-2`. Surrounding
/// parentheses are tolerated.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(Error::InvalidArgument(format!("empty weight {s:?}")));
        }
        body.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad weight label {tok:?}")))
            })
            .collect::<Result<SmallVec<_>, _>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<i32>::deserialize(deserializer).map(Weight::from)
    }
}
