//! Integer vectors indexed by the positive roots of A_n.
//!
//! These hold Shi coefficient vectors, integral points of the variety and
//! admitted vectors alike. Reads at a reversed position (j, i) with j > i
//! resolve through the sign convention v_{j,i} = -v_{i,j}.

use crate::error::{Error, Result};
use crate::root::{num_positive_roots, positive_roots, root_index, PositiveRoot};
use serde_json::{Map, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    n: usize,
    /// entries[root_index(n, root)] = v_root, in the crate-wide root order
    entries: Vec<i64>,
}

impl RootVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; num_positive_roots(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != num_positive_roots(n) {
            return Err(Error::IndexOutOfRange(format!(
                "expected {} entries for rank {n}, got {}",
                num_positive_roots(n),
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, root: &PositiveRoot) -> i64 {
        self.entries[root_index(self.n, root)]
    }

    pub fn set(&mut self, root: &PositiveRoot, value: i64) {
        self.entries[root_index(self.n, root)] = value;
    }

    /// Signed read: v_{a,b} for any a != b, with v_{b,a} = -v_{a,b}.
    pub fn get_signed(&self, a: usize, b: usize) -> i64 {
        assert_ne!(a, b, "position ({a},{b}) is outside the root index set");
        if a < b {
            self.entries[root_index(self.n, &PositiveRoot::new(a, b).unwrap())]
        } else {
            -self.entries[root_index(self.n, &PositiveRoot::new(b, a).unwrap())]
        }
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        debug_assert_eq!(self.n, other.n);
        RootVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when every simple coordinate v_{i,i+1} vanishes.
    pub fn has_zero_simple_part(&self) -> bool {
        (1..=self.n).all(|i| self.get(&PositiveRoot::simple(i)) == 0)
    }

    /// The non-simple coordinates read in the crate-wide root order, i.e.
    /// the bracket form [v_{13}, v_{14}, ..., v_{24}, ...] with the simple
    /// part omitted.
    pub fn bracket(&self) -> Vec<i64> {
        positive_roots(self.n)
            .iter()
            .filter(|r| !r.is_simple())
            .map(|r| self.get(r))
            .collect()
    }

    /// Rebuild a vector with zero simple part from its bracket form.
    pub fn from_bracket(n: usize, bracket: &[i64]) -> Result<Self> {
        let non_simple: Vec<PositiveRoot> = positive_roots(n)
            .into_iter()
            .filter(|r| !r.is_simple())
            .collect();
        if bracket.len() != non_simple.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates for rank {n}, got {}",
                non_simple.len(),
                bracket.len()
            )));
        }
        let mut v = RootVector::zero(n);
        for (root, &value) in non_simple.iter().zip(bracket) {
            v.set(root, value);
        }
        Ok(v)
    }

    /// JSON object mapping "i,j" to the value, keys in the crate-wide order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for root in positive_roots(self.n) {
            map.insert(
                format!("{},{}", root.i(), root.j()),
                Value::from(self.get(&root)),
            );
        }
        Value::Object(map)
    }

    /// Same JSON form restricted to the non-simple positions.
    pub fn to_json_bracket(&self) -> Value {
        let mut map = Map::new();
        for root in positive_roots(self.n) {
            if !root.is_simple() {
                map.insert(
                    format!("{},{}", root.i(), root.j()),
                    Value::from(self.get(&root)),
                );
            }
        }
        Value::Object(map)
    }

    pub fn from_json(n: usize, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
        let mut v = RootVector::zero(n);
        for (key, entry) in obj {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::InvalidInput(format!("bad root key '{key}'")))?;
            let root = PositiveRoot::new(i, j)?;
            if root.j() > n + 1 {
                return Err(Error::IndexOutOfRange(format!(
                    "root ({i},{j}) does not fit in A_{n}"
                )));
            }
            let value = entry
                .as_i64()
                .ok_or_else(|| Error::InvalidInput(format!("non-integer value at '{key}'")))?;
            v.set(&root, value);
        }
        Ok(v)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bracket().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
