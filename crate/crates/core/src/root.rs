//! The root system of type A_n embedded in Z^{n+1}.
//!
//! Positive roots are the differences e_i - e_j with 1 <= i < j <= n+1.
//! Throughout the crate they are enumerated in the triangle-reading order
//! (1,2), (1,3), ..., (1,n+1), (2,3), ..., (n,n+1): diagonals of the root
//! triangle read left to right, each diagonal bottom to top. Matrices,
//! coefficient vectors and serialized output all share this one order.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A positive root e_i - e_j of A_n, stored as the index pair (i, j) with i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PositiveRoot {
    i: usize,
    j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::IndexOutOfRange(format!(
                "positive root requires 1 <= i < j, got ({i}, {j})"
            )));
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Height j - i; simple roots have height 1.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    /// The i-th simple root e_i - e_{i+1}.
    pub fn simple(i: usize) -> Self {
        Self { i, j: i + 1 }
    }

    /// The highest root e_1 - e_{n+1}.
    pub fn highest(n: usize) -> Self {
        Self { i: 1, j: n + 1 }
    }

    /// Inner product with another root under the standard embedding,
    /// (e_i - e_j, e_k - e_l). All roots of A_n are coroots of themselves.
    pub fn dot(&self, other: &PositiveRoot) -> i64 {
        let d = |a: usize, b: usize| i64::from(a == b);
        d(self.i, other.i) - d(self.i, other.j) - d(self.j, other.i) + d(self.j, other.j)
    }

    /// Image under a permutation: w(e_i - e_j) = e_{w(i)} - e_{w(j)},
    /// normalized to a positive root together with the sign.
    pub fn permuted(&self, w: &Permutation) -> (PositiveRoot, i64) {
        let a = w.apply(self.i);
        let b = w.apply(self.j);
        if a < b {
            (PositiveRoot { i: a, j: b }, 1)
        } else {
            (PositiveRoot { i: b, j: a }, -1)
        }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All positive roots of A_n in the crate-wide order.
pub fn positive_roots(n: usize) -> Vec<PositiveRoot> {
    let mut roots = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=(n + 1) {
            roots.push(PositiveRoot { i, j });
        }
    }
    roots
}

/// Number of positive roots m = n(n+1)/2.
pub fn num_positive_roots(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Index of a root in the `positive_roots(n)` enumeration.
pub fn root_index(n: usize, root: &PositiveRoot) -> usize {
    let (i, j) = (root.i, root.j);
    debug_assert!(j <= n + 1);
    // roots with first index < i, then offset inside the i-th row
    (i - 1) * (2 * n + 2 - i) / 2 + (j - i - 1)
}

/// An element of the root lattice ZΦ: an integer vector of length n+1 summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootLatticeVector {
    coords: Vec<i64>,
}

impl RootLatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::IndexOutOfRange(
                "root lattice vector needs length >= 2".into(),
            ));
        }
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::NotInRootLattice);
        }
        Ok(Self { coords })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![0; n + 1],
        }
    }

    /// Rank of the ambient root system (length - 1).
    pub fn rank(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// The root α = e_i - e_j as a lattice vector of the given rank.
    pub fn from_root(n: usize, root: &PositiveRoot) -> Self {
        let mut coords = vec![0; n + 1];
        coords[root.i - 1] = 1;
        coords[root.j - 1] = -1;
        Self { coords }
    }

    /// Pairing <x, α∨> = x_i - x_j for α = e_i - e_j.
    pub fn pair_root(&self, root: &PositiveRoot) -> i64 {
        self.coords[root.i - 1] - self.coords[root.j - 1]
    }

    pub fn add(&self, other: &RootLatticeVector) -> RootLatticeVector {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        RootLatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> RootLatticeVector {
        RootLatticeVector {
            coords: self.coords.iter().map(|c| k * c).collect(),
        }
    }

    pub fn neg(&self) -> RootLatticeVector {
        self.scale(-1)
    }

    /// Coordinate permutation: (w·x)_{w(i)} = x_i.
    pub fn permuted(&self, w: &Permutation) -> RootLatticeVector {
        let mut coords = vec![0; self.coords.len()];
        for i in 1..=self.coords.len() {
            coords[w.apply(i) - 1] = self.coords[i - 1];
        }
        RootLatticeVector { coords }
    }

    /// Coefficients c_1..c_n of x = Σ c_i α_i on the simple roots.
    /// These are the prefix sums of the coordinates.
    pub fn simple_root_coefficients(&self) -> Vec<i64> {
        let n = self.rank();
        let mut acc = 0;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            acc += self.coords[i];
            out.push(acc);
        }
        out
    }
}
