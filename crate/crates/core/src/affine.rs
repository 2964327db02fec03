//! Elements of the affine Weyl group of type Ã_n in semidirect-product
//! coordinates: w = τ_x · w̄ with x in the root lattice and w̄ in S_{n+1}.
//!
//! Such an element acts on sum-zero vectors by v -> w̄(v) + x. The affine
//! reflection s_{α,k} fixes the hyperplane <v, α∨> = k and is stored as
//! (kα, s_α), which is exactly s_{α,k}(v) = s_α(v) + kα.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::root::{PositiveRoot, RootLatticeVector};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    translation: RootLatticeVector,
    finite: Permutation,
}

impl AffineElement {
    pub fn new(translation: RootLatticeVector, finite: Permutation) -> Result<Self> {
        if translation.rank() != finite.rank() {
            return Err(Error::RankMismatch {
                expected: finite.rank(),
                found: translation.rank(),
            });
        }
        Ok(Self {
            translation,
            finite,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            translation: RootLatticeVector::zero(n),
            finite: Permutation::identity(n),
        }
    }

    pub fn from_permutation(finite: Permutation) -> Self {
        Self {
            translation: RootLatticeVector::zero(finite.rank()),
            finite,
        }
    }

    /// The pure translation τ_x.
    pub fn translation_by(x: RootLatticeVector) -> Self {
        let n = x.rank();
        Self {
            translation: x,
            finite: Permutation::identity(n),
        }
    }

    /// The affine reflection s_{α,k} = (kα, s_α).
    pub fn reflection(n: usize, alpha: &PositiveRoot, k: i64) -> Result<Self> {
        if alpha.j() > n + 1 {
            return Err(Error::IndexOutOfRange(format!(
                "root {alpha} does not fit in A_{n}"
            )));
        }
        Ok(Self {
            translation: RootLatticeVector::from_root(n, alpha).scale(k),
            finite: Permutation::transposition(n, alpha.i(), alpha.j())?,
        })
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn translation(&self) -> &RootLatticeVector {
        &self.translation
    }

    pub fn finite(&self) -> &Permutation {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    /// Semidirect product: (x, u)(y, v) = (x + u(y), uv).
    pub fn compose(&self, other: &AffineElement) -> Result<AffineElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(AffineElement {
            translation: self
                .translation
                .add(&other.translation.permuted(&self.finite)),
            finite: self.finite.compose(&other.finite),
        })
    }

    pub fn inverse(&self) -> AffineElement {
        let finite_inv = self.finite.inverse();
        AffineElement {
            translation: self.translation.neg().permuted(&finite_inv),
            finite: finite_inv,
        }
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t{:?} * [{}]",
            self.translation.coords(),
            self.finite.one_line()
        )
    }
}

/// The affine Coxeter generators s_1, ..., s_n, s_{θ,1} with θ the highest root.
pub fn affine_generators(n: usize) -> Vec<AffineElement> {
    let mut gens: Vec<AffineElement> = (1..=n)
        .map(|i| AffineElement::from_permutation(Permutation::simple_reflection(n, i).unwrap()))
        .collect();
    gens.push(AffineElement::reflection(n, &PositiveRoot::highest(n), 1).unwrap());
    gens
}

/// All distinct elements reachable by words of length <= radius in the
/// affine generators, in a deterministic breadth-first order.
pub fn generated_ball(n: usize, radius: usize) -> Vec<AffineElement> {
    let gens = affine_generators(n);
    let mut seen = std::collections::HashSet::new();
    let mut ball = vec![AffineElement::identity(n)];
    seen.insert(ball[0].clone());
    let mut frontier = ball.clone();
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let wg = w.compose(g).unwrap();
                if seen.insert(wg.clone()) {
                    next.push(wg);
                }
            }
        }
        ball.extend(next.iter().cloned());
        frontier = next;
    }
    ball
}
