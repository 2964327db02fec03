//! Shi coefficient vectors.
//!
//! Every affine element w corresponds to an alcove A_w, and for each
//! positive root α the alcove sits inside a unique unit strip
//! k(w,α) < <x, α∨> < k(w,α) + 1. The coefficient is read off exactly by
//! applying w to a fixed rational point inside the fundamental alcove and
//! taking floors: no case analysis and no floating point.
//!
//! The coefficient vector splits as k_{i,j}(w) = Σ_{r=i}^{j-1} k_{r,r+1}(w)
//! plus a remainder λ_{i,j}; `admitted_part` extracts λ, which always
//! satisfies the admissibility conditions (checked empirically in tests).

use crate::affine::AffineElement;
use crate::perm::Permutation;
use crate::root::{positive_roots, PositiveRoot};
use crate::rootvec::RootVector;

/// An exact rational point of the sum-zero hyperplane, stored as integer
/// numerators over one common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovePoint {
    numerators: Vec<i64>,
    denominator: i64,
}

impl AlcovePoint {
    pub fn rank(&self) -> usize {
        self.numerators.len() - 1
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// <p, α∨> as an exact fraction (numerator, denominator).
    pub fn pairing(&self, root: &PositiveRoot) -> (i64, i64) {
        (
            self.numerators[root.i() - 1] - self.numerators[root.j() - 1],
            self.denominator,
        )
    }

    /// floor(<p, α∨>).
    pub fn pairing_floor(&self, root: &PositiveRoot) -> i64 {
        let (num, den) = self.pairing(root);
        debug_assert!(num.rem_euclid(den) != 0, "point lies on a hyperplane");
        num.div_euclid(den)
    }

    /// Image under an affine element: w̄(p) + x.
    pub fn apply(&self, w: &AffineElement) -> AlcovePoint {
        let n1 = self.numerators.len();
        let mut numerators = vec![0; n1];
        for i in 1..=n1 {
            numerators[w.finite().apply(i) - 1] = self.numerators[i - 1];
        }
        for (v, x) in numerators.iter_mut().zip(w.translation().coords()) {
            *v += x * self.denominator;
        }
        AlcovePoint {
            numerators,
            denominator: self.denominator,
        }
    }
}

/// The point of the fundamental alcove with <p, e_i - e_j> = (j-i)/(n+1)
/// for every i < j. Coordinates are (n+2-2i)/(2(n+1)); they sum to zero and
/// every pairing lies strictly between 0 and 1.
pub fn fundamental_barycenter(n: usize) -> AlcovePoint {
    let denominator = 2 * (n as i64 + 1);
    let numerators = (1..=n as i64 + 1).map(|i| n as i64 + 2 - 2 * i).collect();
    AlcovePoint {
        numerators,
        denominator,
    }
}

/// The Shi coefficient vector (k(w,α))_{α in Φ+}.
pub fn k_vector(w: &AffineElement) -> RootVector {
    let n = w.rank();
    let image = fundamental_barycenter(n).apply(w);
    let mut out = RootVector::zero(n);
    for root in positive_roots(n) {
        out.set(&root, image.pairing_floor(&root));
    }
    out
}

/// Remainder of the coefficient vector over its simple part:
/// λ_{i,j} = k_{i,j} - Σ_{r=i}^{j-1} k_{r,r+1}. The simple part of the
/// result is identically zero. Accepts any vector; admissibility of the
/// output is a separate check.
pub fn admitted_part(k: &RootVector) -> RootVector {
    let n = k.rank();
    let mut out = RootVector::zero(n);
    for root in positive_roots(n) {
        let simple_sum: i64 = (root.i()..root.j())
            .map(|r| k.get(&PositiveRoot::simple(r)))
            .sum();
        out.set(&root, k.get(&root) - simple_sum);
    }
    out
}

/// Conjugator-free oracle used in tests: the k-vector of a pure translation
/// shifts entry-wise by the pairings <x, α∨>.
pub fn translation_shift(w: &AffineElement) -> RootVector {
    let n = w.rank();
    let mut out = RootVector::zero(n);
    for root in positive_roots(n) {
        out.set(&root, w.translation().pair_root(&root));
    }
    out
}

/// k-vector of a finite permutation (no translation part).
pub fn k_vector_of_permutation(w: &Permutation) -> RootVector {
    k_vector(&AffineElement::from_permutation(w.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::generated_ball;
    use crate::root::RootLatticeVector;

    #[test]
    fn barycenter_pairings_are_height_over_n_plus_one() {
        for n in 1..=6 {
            let p = fundamental_barycenter(n);
            assert_eq!(p.numerators().iter().sum::<i64>(), 0);
            for root in positive_roots(n) {
                let (num, den) = p.pairing(&root);
                // (j-i)/(n+1), strictly inside (0, 1)
                assert_eq!(num * (n as i64 + 1), root.height() as i64 * den);
                assert!(0 < num && num < den);
            }
        }
    }

    #[test]
    fn barycenter_n1_pairing_is_one_half() {
        let p = fundamental_barycenter(1);
        let (num, den) = p.pairing(&PositiveRoot::new(1, 2).unwrap());
        assert_eq!(2 * num, den);
    }

    #[test]
    fn k_vector_of_identity_is_zero() {
        for n in 1..=5 {
            assert_eq!(k_vector(&AffineElement::identity(n)), RootVector::zero(n));
        }
    }

    #[test]
    fn k_vector_of_s1_at_rank_two() {
        let w = AffineElement::from_permutation(Permutation::simple_reflection(2, 1).unwrap());
        assert_eq!(k_vector(&w).entries(), &[-1, 0, 0]);
    }

    #[test]
    fn k_vector_of_simple_translation_at_rank_two() {
        let alpha1 = RootLatticeVector::new(vec![1, -1, 0]).unwrap();
        let w = AffineElement::translation_by(alpha1);
        let k = k_vector(&w);
        assert_eq!(k.entries(), &[2, 1, -1]);
        // remainder: λ13 = 1 - (2 + (-1)) = 0
        let lambda = admitted_part(&k);
        assert_eq!(lambda.entries(), &[0, 0, 0]);
    }

    #[test]
    fn admitted_part_of_zero_is_zero() {
        assert_eq!(admitted_part(&RootVector::zero(4)), RootVector::zero(4));
    }

    #[test]
    fn admitted_part_has_zero_simple_part() {
        for w in generated_ball(3, 4) {
            assert!(admitted_part(&k_vector(&w)).has_zero_simple_part());
        }
    }

    #[test]
    fn translations_shift_k_vectors_by_pairings() {
        let n = 3;
        let x = RootLatticeVector::new(vec![2, -1, 0, -1]).unwrap();
        let tau = AffineElement::translation_by(x);
        for w in generated_ball(n, 3) {
            let shifted = k_vector(&tau.compose(&w).unwrap());
            let base = k_vector(&w).add(&translation_shift(&tau));
            assert_eq!(shifted, base);
        }
    }

    #[test]
    fn k_vector_injective_on_small_balls() {
        for n in 1..=3 {
            let ball = generated_ball(n, 6);
            let mut seen = std::collections::HashSet::new();
            for w in &ball {
                assert!(seen.insert(k_vector(w)), "collision at {w}");
            }
            assert_eq!(seen.len(), ball.len());
        }
    }
}
