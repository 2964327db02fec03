//! Admitted vectors, which index the irreducible components X^λ of the
//! variety, and the integral points of a component.
//!
//! A vector λ with zero simple part is admitted when
//!   λ_{i,j} + λ_{j,k} <= λ_{i,k} <= λ_{i,j} + λ_{j,k} + 1   for all i < j < k.
//! Integral points of X^λ satisfy x_{i,j} = Σ_{r=i}^{j-1} x_{r,r+1} + λ_{i,j};
//! the simple coordinates are free and λ is recovered by subtracting their
//! partial sums.

use crate::error::{Error, Result};
use crate::root::{positive_roots, PositiveRoot};
use crate::rootvec::RootVector;
use crate::shi::admitted_part;
use serde_json::{json, Value};
use std::fmt;

/// A validated admitted vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmittedVector {
    lambda: RootVector,
}

impl AdmittedVector {
    pub fn new(lambda: RootVector) -> Result<Self> {
        check_admitted(&lambda).map_err(Error::NotAdmitted)?;
        Ok(Self { lambda })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            lambda: RootVector::zero(n),
        }
    }

    pub fn from_bracket(n: usize, bracket: &[i64]) -> Result<Self> {
        Self::new(RootVector::from_bracket(n, bracket)?)
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    pub fn vector(&self) -> &RootVector {
        &self.lambda
    }

    pub fn get(&self, root: &PositiveRoot) -> i64 {
        self.lambda.get(root)
    }

    pub fn bracket(&self) -> Vec<i64> {
        self.lambda.bracket()
    }

    pub fn to_json(&self) -> Value {
        self.lambda.to_json_bracket()
    }
}

impl fmt::Display for AdmittedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)
    }
}

/// An integral point of the component X^λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralPoint {
    point: RootVector,
}

impl IntegralPoint {
    pub fn vector(&self) -> &RootVector {
        &self.point
    }

    pub fn into_vector(self) -> RootVector {
        self.point
    }
}

fn check_admitted(v: &RootVector) -> std::result::Result<(), String> {
    let n = v.rank();
    for i in 1..=n {
        let value = v.get(&PositiveRoot::simple(i));
        if value != 0 {
            return Err(format!("simple coordinate ({i},{}) = {value} != 0", i + 1));
        }
    }
    for i in 1..n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=(n + 1) {
                let ij = v.get(&PositiveRoot::new(i, j).unwrap());
                let jk = v.get(&PositiveRoot::new(j, k).unwrap());
                let ik = v.get(&PositiveRoot::new(i, k).unwrap());
                if !(ij + jk <= ik && ik <= ij + jk + 1) {
                    return Err(format!(
                        "triple ({i},{j},{k}): {ij}+{jk} <= {ik} <= {ij}+{jk}+1 fails"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Both admissibility conditions, on any root vector.
pub fn is_admitted(v: &RootVector) -> bool {
    check_admitted(v).is_ok()
}

/// All admitted vectors of rank n, sorted by their coordinate tuple in the
/// crate-wide root order. There are exactly n! of them.
///
/// Backtracks over the heights 2..=n: once every coordinate of smaller
/// height is fixed, the feasible interval for position (i, k) is
/// [max_j (λ_{i,j} + λ_{j,k}), min_j (λ_{i,j} + λ_{j,k}) + 1], which
/// contains at most two integers.
pub fn enumerate_admitted(n: usize) -> Vec<AdmittedVector> {
    // positions of height >= 2 ordered by (height, i)
    let mut slots: Vec<PositiveRoot> = positive_roots(n)
        .into_iter()
        .filter(|r| !r.is_simple())
        .collect();
    slots.sort_by_key(|r| (r.height(), r.i()));

    let mut out = Vec::new();
    let mut current = RootVector::zero(n);
    fn extend(
        slots: &[PositiveRoot],
        pos: usize,
        current: &mut RootVector,
        out: &mut Vec<AdmittedVector>,
    ) {
        if pos == slots.len() {
            out.push(AdmittedVector {
                lambda: current.clone(),
            });
            return;
        }
        let (i, k) = (slots[pos].i(), slots[pos].j());
        let mut lower = i64::MIN;
        let mut upper = i64::MAX;
        for j in (i + 1)..k {
            let sum = current.get(&PositiveRoot::new(i, j).unwrap())
                + current.get(&PositiveRoot::new(j, k).unwrap());
            lower = lower.max(sum);
            upper = upper.min(sum + 1);
        }
        for value in lower..=upper {
            current.set(&slots[pos], value);
            extend(slots, pos + 1, current, out);
        }
        current.set(&slots[pos], 0);
    }
    extend(&slots, 0, &mut current, &mut out);
    out.sort();
    out
}

/// The distinguished point of X^λ with all simple coordinates zero,
/// hence x_{i,j} = λ_{i,j}.
pub fn canonical_point(lambda: &AdmittedVector) -> IntegralPoint {
    IntegralPoint {
        point: lambda.vector().clone(),
    }
}

/// The component containing an integral point, i.e. the remainder
/// λ_{i,j} = x_{i,j} - Σ_{r=i}^{j-1} x_{r,r+1}. Fails with `NotOnVariety`
/// when the remainder is not admitted, which means x is not an integral
/// point of the variety.
pub fn component_of(x: &RootVector) -> Result<AdmittedVector> {
    let lambda = admitted_part(x);
    check_admitted(&lambda).map_err(Error::NotOnVariety)?;
    Ok(AdmittedVector { lambda })
}

/// JSON list form {"n": .., "admitted": [{"1,3": 0, ..}, ..]}.
pub fn admitted_to_json(n: usize, vectors: &[AdmittedVector]) -> Value {
    json!({
        "n": n,
        "admitted": vectors.iter().map(AdmittedVector::to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::generated_ball;
    use crate::shi::k_vector;

    fn brackets(vectors: &[AdmittedVector]) -> Vec<Vec<i64>> {
        vectors.iter().map(AdmittedVector::bracket).collect()
    }

    #[test]
    fn zero_vector_is_admitted() {
        assert!(is_admitted(&RootVector::zero(4)));
    }

    #[test]
    fn example_rank_three_vectors() {
        let good = RootVector::from_bracket(3, &[1, 2, 1]).unwrap();
        assert!(is_admitted(&good));
        let bad = RootVector::from_bracket(3, &[0, 2, 0]).unwrap();
        assert!(!is_admitted(&bad));
    }

    #[test]
    fn nonzero_simple_part_is_rejected() {
        let mut v = RootVector::zero(2);
        v.set(&PositiveRoot::simple(1), 1);
        assert!(!is_admitted(&v));
    }

    #[test]
    fn enumerate_small_ranks() {
        assert_eq!(brackets(&enumerate_admitted(1)), vec![Vec::<i64>::new()]);
        assert_eq!(brackets(&enumerate_admitted(2)), vec![vec![0], vec![1]]);
        let three = enumerate_admitted(3);
        assert_eq!(three.len(), 6);
        let expected: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
            vec![1, 2, 1],
        ];
        assert_eq!(brackets(&three), expected);
    }

    #[test]
    fn enumeration_counts_are_factorials() {
        let mut factorial = 1usize;
        for n in 1..=6 {
            factorial *= n;
            assert_eq!(enumerate_admitted(n).len(), factorial);
        }
    }

    #[test]
    fn enumeration_matches_boxed_brute_force() {
        // independent oracle: filter the full box Π [0, j-i-1] through is_admitted
        for n in 1..=5 {
            let slots: Vec<PositiveRoot> = positive_roots(n)
                .into_iter()
                .filter(|r| !r.is_simple())
                .collect();
            let mut found = Vec::new();
            let mut current = RootVector::zero(n);
            // depth-first product over the box
            fn rec(
                slots: &[PositiveRoot],
                pos: usize,
                current: &mut RootVector,
                found: &mut Vec<RootVector>,
            ) {
                if pos == slots.len() {
                    if is_admitted(current) {
                        found.push(current.clone());
                    }
                    return;
                }
                let bound = slots[pos].height() as i64 - 1;
                for value in 0..=bound {
                    current.set(&slots[pos], value);
                    rec(slots, pos + 1, current, found);
                }
                current.set(&slots[pos], 0);
            }
            rec(&slots, 0, &mut current, &mut found);
            found.sort();
            let enumerated: Vec<RootVector> = enumerate_admitted(n)
                .into_iter()
                .map(|a| a.vector().clone())
                .collect();
            assert_eq!(enumerated, found);
        }
    }

    #[test]
    fn enumerated_vectors_stay_inside_the_height_box() {
        for n in 1..=6 {
            for lambda in enumerate_admitted(n) {
                for root in positive_roots(n) {
                    let value = lambda.get(&root);
                    assert!(0 <= value && value < root.height() as i64);
                }
            }
        }
    }

    #[test]
    fn canonical_point_round_trip() {
        for lambda in enumerate_admitted(3) {
            let x = canonical_point(&lambda);
            assert_eq!(component_of(x.vector()).unwrap(), lambda);
        }
        let zero = AdmittedVector::zero(3);
        assert_eq!(canonical_point(&zero).vector(), &RootVector::zero(3));
    }

    #[test]
    fn free_simple_coordinates_do_not_change_component() {
        // build a point of X^λ from arbitrary simple values and read λ back
        let simple = [1i64, 0, 2];
        for lambda in enumerate_admitted(3) {
            let mut x = lambda.vector().clone();
            for i in 1..=3usize {
                for j in (i + 1)..=4usize {
                    let root = PositiveRoot::new(i, j).unwrap();
                    let partial: i64 = (i..j).map(|r| simple[r - 1]).sum();
                    x.set(&root, lambda.get(&root) + partial);
                }
            }
            assert_eq!(component_of(&x).unwrap(), lambda);
        }
    }

    #[test]
    fn component_of_rejects_off_variety_points() {
        let x = RootVector::from_bracket(3, &[0, 2, 0]).unwrap();
        assert!(matches!(component_of(&x), Err(Error::NotOnVariety(_))));
    }

    #[test]
    fn k_vectors_land_on_the_variety() {
        for w in generated_ball(3, 4) {
            assert!(component_of(&k_vector(&w)).is_ok());
        }
    }
}
