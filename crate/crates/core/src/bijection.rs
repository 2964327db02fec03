//! The bijection Ψ between circular permutations (full cycles on n+1 points)
//! and admitted vectors: a cycle c is written as σ·(1 2 ⋯ n+1)·σ⁻¹ with the
//! deterministic conjugator σ(i) = c^{i−1}(1), and Ψ(c) = σ ⋄ 0. Distinct
//! conjugators differ by a power of the long cycle, which fixes 0, so the
//! image is well defined. Ψ intertwines conjugation with the ⋄ action.

use crate::components::{enumerate_admitted, AdmittedVector};
use crate::diamond::diamond_general;
use crate::error::{Error, Result};
use crate::perm::{all_permutations, circular_permutations, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// The canonical conjugator sending the long cycle to c: σ(i) = c^{i−1}(1).
fn canonical_conjugator(c: &Permutation) -> Permutation {
    let mut images = Vec::with_capacity(c.degree());
    let mut point = 1;
    for _ in 0..c.degree() {
        images.push(point);
        point = c.apply(point);
    }
    Permutation::from_images(images).expect("orbit of a full cycle is a bijection")
}

/// Ψ: the admitted vector of a circular permutation.
pub fn to_component(c: &Permutation) -> Result<AdmittedVector> {
    if !c.is_circular() {
        return Err(Error::NotCircular(format!(
            "{} is not a full cycle on {} points",
            c,
            c.degree()
        )));
    }
    let sigma = canonical_conjugator(c);
    diamond_general(&sigma, &AdmittedVector::zero(c.rank()))
}

/// Ψ⁻¹ by direct search over all circular permutations.
pub fn from_component(lambda: &AdmittedVector) -> Result<Permutation> {
    for c in circular_permutations(lambda.rank()) {
        if &to_component(&c)? == lambda {
            return Ok(c);
        }
    }
    Err(Error::InvalidInput(format!(
        "no circular permutation maps to {lambda}"
    )))
}

/// The fully materialized bijection, entries sorted by one-line notation.
#[derive(Debug, Clone)]
pub struct BijectionTable {
    n: usize,
    entries: Vec<(Permutation, AdmittedVector)>,
}

impl BijectionTable {
    pub fn build(n: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for c in circular_permutations(n) {
            let lambda = to_component(&c)?;
            entries.push((c, lambda));
        }
        entries.sort_by(|a, b| a.0.images().cmp(b.0.images()));
        Ok(Self { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Permutation, AdmittedVector)] {
        &self.entries
    }

    pub fn forward(&self, c: &Permutation) -> Option<&AdmittedVector> {
        self.entries
            .iter()
            .find(|(cycle, _)| cycle == c)
            .map(|(_, lambda)| lambda)
    }

    pub fn inverse(&self, lambda: &AdmittedVector) -> Option<&Permutation> {
        self.entries
            .iter()
            .find(|(_, image)| image == lambda)
            .map(|(cycle, _)| cycle)
    }

    /// JSON table [{"cycle": "2 3 4 1", "lambda": {"1,3": 0, …}}, …].
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(c, lambda)| {
                    json!({"cycle": c.one_line(), "lambda": lambda.to_json()})
                })
                .collect(),
        )
    }
}

/// Exhaustive equivariance: Ψ(σcσ⁻¹) = σ ⋄ Ψ(c) over all σ and all cycles.
pub fn check_equivariance(n: usize) -> Result<bool> {
    let cycles = circular_permutations(n);
    for sigma in all_permutations(n) {
        for c in &cycles {
            if to_component(&sigma.conjugate(c))? != diamond_general(&sigma, &to_component(c)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Equivariance on `samples` seeded random pairs (σ, c), for ranks where the
/// exhaustive check is too large.
pub fn check_equivariance_random(n: usize, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (1..=n + 1).collect();
    for _ in 0..samples {
        points.shuffle(&mut rng);
        let sigma = Permutation::from_images(points.clone()).unwrap();
        // a uniform full cycle: close up a shuffled arrangement
        points.shuffle(&mut rng);
        let mut images = vec![0; n + 1];
        for pair in points.windows(2) {
            images[pair[0] - 1] = pair[1];
        }
        images[points[n] - 1] = points[0];
        let c = Permutation::from_images(images).unwrap();
        if to_component(&sigma.conjugate(&c))? != diamond_general(&sigma, &to_component(&c)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: the admitted vectors hit by Ψ, sorted, for comparison with
/// the enumeration.
pub fn bijection_image(n: usize) -> Result<Vec<AdmittedVector>> {
    let mut image: Vec<AdmittedVector> = circular_permutations(n)
        .iter()
        .map(to_component)
        .collect::<Result<_>>()?;
    image.sort();
    image.dedup();
    Ok(image)
}

/// Sanity helper used by the verification battery: the image must equal the
/// full admitted list with no collisions.
pub fn check_bijectivity(n: usize) -> Result<bool> {
    Ok(bijection_image(n)? == enumerate_admitted(n))
}
