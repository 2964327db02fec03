//! The symmetric group S_{n+1} = W(A_n) in one-line notation.
//!
//! A permutation of rank n acts on {1, ..., n+1}. Composition is
//! (u * v)(i) = u(v(i)), so in products written left to right the rightmost
//! factor acts first.

use crate::error::{Error, Result};
use crate::root::PositiveRoot;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    /// images[i-1] = w(i), a bijection of {1, ..., n+1}
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n + 1).collect(),
        }
    }

    /// Build from one-line notation; validates that `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        if len < 2 {
            return Err(Error::NotAPermutation(len));
        }
        let mut seen = vec![false; len];
        for &v in &images {
            if v == 0 || v > len || seen[v - 1] {
                return Err(Error::NotAPermutation(len));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    /// Parse space-separated one-line notation, e.g. "2 3 1".
    pub fn parse(text: &str) -> Result<Self> {
        let images: Vec<usize> = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad permutation entry '{t}'")))
            })
            .collect::<Result<_>>()?;
        Self::from_images(images)
    }

    /// Rank n of the enclosing W(A_n); the permutation moves n+1 points.
    pub fn rank(&self) -> usize {
        self.images.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for i in 1..=self.images.len() {
            images[self.apply(i) - 1] = i;
        }
        Permutation { images }
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.images.len(), other.images.len());
        Permutation {
            images: (1..=self.images.len())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    /// Conjugate of `other` by self: self * other * self^{-1}.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    /// The transposition s_{k,l} swapping k and l, 1 <= k < l <= n+1.
    pub fn transposition(n: usize, k: usize, l: usize) -> Result<Self> {
        if k == 0 || k >= l || l > n + 1 {
            return Err(Error::IndexOutOfRange(format!(
                "transposition requires 1 <= k < l <= {}, got ({k}, {l})",
                n + 1
            )));
        }
        let mut p = Self::identity(n);
        p.images.swap(k - 1, l - 1);
        Ok(p)
    }

    /// The adjacent transposition s_i = (i, i+1), 1 <= i <= n.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange(format!(
                "generator index must lie in 1..={n}, got {i}"
            )));
        }
        Self::transposition(n, i, i + 1)
    }

    /// The long cycle (1 2 ... n+1): i -> i+1, n+1 -> 1.
    pub fn long_cycle(n: usize) -> Self {
        let mut images: Vec<usize> = (2..=n + 1).collect();
        images.push(1);
        Permutation { images }
    }

    /// Left-to-right product of adjacent transpositions `s_{word[0]} … s_{word[last]}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for &i in word {
            acc = acc.compose(&Self::simple_reflection(n, i)?);
        }
        Ok(acc)
    }

    /// A reduced word in adjacent transpositions, with `from_word` as inverse.
    /// Its length is the number of inversions.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        // Each step left-multiplies by the s_i swapping the values i, i+1
        // that appear out of order, dropping one inversion.
        loop {
            let inv = w.inverse();
            let mut found = None;
            for i in 1..=n {
                if inv.apply(i) > inv.apply(i + 1) {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    word.push(i);
                    w = Permutation::simple_reflection(n, i).unwrap().compose(&w);
                }
                None => break,
            }
        }
        word
    }

    /// Factorization into (not necessarily adjacent) transpositions, one
    /// chain per cycle: (a1 a2 ... ak) = (a1 a2)(a2 a3)...(a_{k-1} a_k).
    pub fn transposition_factors(&self) -> Vec<(usize, usize)> {
        let mut factors = Vec::new();
        for cycle in self.cycles() {
            for pair in cycle.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                factors.push(if a < b { (a, b) } else { (b, a) });
            }
        }
        factors
    }

    /// Nontrivial cycles, each starting at its smallest element, sorted by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let len = self.images.len();
        let mut seen = vec![false; len];
        let mut cycles = Vec::new();
        for start in 1..=len {
            if seen[start - 1] || self.apply(start) == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Whether this is a single (n+1)-cycle, i.e. a circular permutation.
    pub fn is_circular(&self) -> bool {
        // the orbit of 1 visits every point exactly when w is an (n+1)-cycle
        let mut seen = 1usize;
        let mut y = self.apply(1);
        while y != 1 {
            seen += 1;
            y = self.apply(y);
        }
        seen == self.images.len()
    }

    /// Inversion set N(w) = { e_i - e_j in Φ+ | w^{-1}(e_i - e_j) in Φ- }
    /// = { (i,j) : i < j and w^{-1}(i) > w^{-1}(j) }.
    pub fn inversion_set(&self) -> Vec<PositiveRoot> {
        let inv = self.inverse();
        let len = self.images.len();
        let mut set = Vec::new();
        for i in 1..len {
            for j in (i + 1)..=len {
                if inv.apply(i) > inv.apply(j) {
                    set.push(PositiveRoot::new(i, j).unwrap());
                }
            }
        }
        set
    }

    /// Coxeter length = number of inversions of the one-line notation.
    pub fn length(&self) -> usize {
        let len = self.images.len();
        let mut count = 0;
        for a in 0..len {
            for b in (a + 1)..len {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// One-line notation as space-separated text, e.g. "2 3 1".
    pub fn one_line(&self) -> String {
        self.images.iter().map(|v| v.to_string()).join(" ")
    }

    /// Cycle notation for display, e.g. "(1 2 3)"; identity prints "()".
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|v| v.to_string()).join(" ")))
            .collect()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

/// All permutations of S_{n+1} in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n + 1)
        .permutations(n + 1)
        .map(|images| Permutation { images })
        .collect()
}

/// All circular permutations ((n+1)-cycles) in lexicographic one-line order;
/// there are n! of them.
pub fn circular_permutations(n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(Permutation::is_circular)
        .collect()
}
