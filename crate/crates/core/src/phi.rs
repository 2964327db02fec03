//! The representation of the affine group by exact affine integer maps on
//! root-indexed vectors, built on reflections and extended by composition.
//!
//! For the reflection through the hyperplane of α at level p the linear part
//! permutes coordinates by γ ↦ s_α(γ) with a sign flip when the image root is
//! negative, and the translation part is
//!   v(γ) = −p·(α, s_α(γ)) − [s_α(γ) negative].
//! The defining contract, tested exhaustively at small rank, is the commuting
//! square  apply(f_affine(w), k_vector(u)) = k_vector(w·u).

use crate::affine::AffineElement;
use crate::perm::Permutation;
use crate::root::{num_positive_roots, positive_roots, root_index, PositiveRoot};
use crate::rootvec::RootVector;
use serde_json::{json, Value};

/// An affine map x ↦ Ax + a on root-indexed integer vectors, with A a signed
/// permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineIntegerMap {
    n: usize,
    matrix: Vec<Vec<i64>>,
    translation: Vec<i64>,
}

impl AffineIntegerMap {
    pub fn identity(n: usize) -> Self {
        let m = num_positive_roots(n);
        let mut matrix = vec![vec![0; m]; m];
        for (r, row) in matrix.iter_mut().enumerate() {
            row[r] = 1;
        }
        Self {
            n,
            matrix,
            translation: vec![0; m],
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Side length m = n(n+1)/2 of the matrix.
    pub fn dimension(&self) -> usize {
        self.translation.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// Functional composition: `self` applied after `other`.
    pub fn compose(&self, other: &AffineIntegerMap) -> AffineIntegerMap {
        assert_eq!(self.n, other.n, "rank mismatch in map composition");
        let m = self.dimension();
        let mut matrix = vec![vec![0; m]; m];
        let mut translation = self.translation.clone();
        for r in 0..m {
            for c in 0..m {
                // A is a signed permutation: each row has one nonzero entry
                let s = self.matrix[r][c];
                if s != 0 {
                    for (k, entry) in matrix[r].iter_mut().enumerate() {
                        *entry += s * other.matrix[c][k];
                    }
                    translation[r] += s * other.translation[c];
                }
            }
        }
        AffineIntegerMap {
            n: self.n,
            matrix,
            translation,
        }
    }

    /// Matrix·x + translation.
    pub fn apply(&self, x: &RootVector) -> RootVector {
        assert_eq!(self.n, x.rank(), "rank mismatch in map application");
        let entries = x.entries();
        let out: Vec<i64> = (0..self.dimension())
            .map(|r| {
                self.matrix[r]
                    .iter()
                    .zip(entries)
                    .map(|(a, x)| a * x)
                    .sum::<i64>()
                    + self.translation[r]
            })
            .collect();
        RootVector::from_entries(self.n, out).unwrap()
    }

    /// Exactly one ±1 per row and per column, all else zero.
    pub fn is_signed_permutation(&self) -> bool {
        let m = self.dimension();
        let mut col_used = vec![false; m];
        for row in &self.matrix {
            let mut row_nonzero = 0;
            for (c, &entry) in row.iter().enumerate() {
                match entry {
                    0 => {}
                    1 | -1 => {
                        row_nonzero += 1;
                        if col_used[c] {
                            return false;
                        }
                        col_used[c] = true;
                    }
                    _ => return false,
                }
            }
            if row_nonzero != 1 {
                return false;
            }
        }
        true
    }

    /// Debug dump: matrix rows in the global root order plus the translation.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "matrix": self.matrix,
            "translation": self.translation,
        })
    }
}

/// The map of the reflection s_{α,p}.
pub fn f_reflection(n: usize, alpha: &PositiveRoot, p: i64) -> AffineIntegerMap {
    let m = num_positive_roots(n);
    let s_alpha = Permutation::transposition(n, alpha.i(), alpha.j()).unwrap();
    let mut matrix = vec![vec![0; m]; m];
    let mut translation = vec![0; m];
    for gamma in positive_roots(n) {
        let col = root_index(n, &gamma);
        let (image, sign) = gamma.permuted(&s_alpha);
        matrix[root_index(n, &image)][col] = sign;
        translation[col] =
            -p * sign * alpha.dot(&image) - if sign < 0 { 1 } else { 0 };
    }
    AffineIntegerMap {
        n,
        matrix,
        translation,
    }
}

/// Left-to-right composition over a word of reflections (α, p); the rightmost
/// reflection acts first. Depends only on the group element of the word.
pub fn f_word(n: usize, word: &[(PositiveRoot, i64)]) -> AffineIntegerMap {
    word.iter().fold(AffineIntegerMap::identity(n), |acc, (alpha, p)| {
        acc.compose(&f_reflection(n, alpha, *p))
    })
}

/// The map of a finite permutation, through a reduced word in the simple
/// reflections at level 0.
pub fn f_permutation(w: &Permutation) -> AffineIntegerMap {
    let n = w.rank();
    let word: Vec<(PositiveRoot, i64)> = w
        .reduced_word()
        .into_iter()
        .map(|i| (PositiveRoot::simple(i), 0))
        .collect();
    f_word(n, &word)
}

/// The map of a general affine element τ_x·w̄: each simple-coordinate c_i of x
/// contributes the translation factor s_{α_i,c_i}·s_{α_i,0}, followed by the
/// finite part.
pub fn f_affine(w: &AffineElement) -> AffineIntegerMap {
    let n = w.rank();
    let mut word: Vec<(PositiveRoot, i64)> = Vec::new();
    for (i, c) in w.translation().simple_root_coefficients().iter().enumerate() {
        if *c != 0 {
            let alpha = PositiveRoot::simple(i + 1);
            word.push((alpha, *c));
            word.push((alpha, 0));
        }
    }
    word.extend(
        w.finite()
            .reduced_word()
            .into_iter()
            .map(|i| (PositiveRoot::simple(i), 0)),
    );
    f_word(n, &word)
}
