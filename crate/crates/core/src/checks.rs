//! The self-verification battery: every module's defining property, bundled
//! as named checks runnable at a chosen rank with seeded randomness. The CLI
//! `verify` subcommand prints one line per check; any failure is an internal
//! invariant violation, not a user error.

use crate::affine::{affine_generators, AffineElement};
use crate::bijection::{check_bijectivity, check_equivariance, check_equivariance_random};
use crate::components::{component_of, enumerate_admitted, is_admitted, AdmittedVector};
use crate::diamond::{diamond_closed_form, diamond_general, diamond_matrix, diamond_stabilizer};
use crate::perm::{all_permutations, Permutation};
use crate::phi::{f_affine, f_word};
use crate::poset::{build_component_poset, build_cycle_poset, check_poset_isomorphism};
use crate::root::{positive_roots, PositiveRoot};
use crate::shi::k_vector;
use crate::wedge::{odot_closed_form, odot_generator, odot_permutation, theta, WedgeElement};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    fn pass(name: &'static str, details: String) -> Self {
        Self {
            name,
            passed: true,
            details,
        }
    }

    fn fail(name: &'static str, details: String) -> Self {
        Self {
            name,
            passed: false,
            details,
        }
    }

    fn from_result(name: &'static str, result: Result<String, String>) -> Self {
        match result {
            Ok(details) => Self::pass(name, details),
            Err(details) => Self::fail(name, details),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut points: Vec<usize> = (1..=n + 1).collect();
    points.shuffle(rng);
    Permutation::from_images(points).unwrap()
}

fn random_affine(n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> AffineElement {
    let generators = affine_generators(n);
    let len = rng.gen_range(0..=max_len);
    let mut acc = AffineElement::identity(n);
    for _ in 0..len {
        let g = &generators[rng.gen_range(0..generators.len())];
        acc = acc.compose(g).unwrap();
    }
    acc
}

fn check_enumeration(n: usize) -> Result<String, String> {
    let admitted = enumerate_admitted(n);
    let expected = factorial(n);
    if admitted.len() != expected {
        return Err(format!("count {} != {}!", admitted.len(), expected));
    }
    for lambda in &admitted {
        for root in positive_roots(n) {
            let v = lambda.get(&root);
            if v < 0 || v > root.height() as i64 - 1 {
                return Err(format!("{lambda} violates the height bound at {root}"));
            }
        }
    }
    Ok(format!("{} vectors, height bounds hold", admitted.len()))
}

fn check_shi_condition(
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<String, String> {
    for _ in 0..samples {
        let w = random_affine(n, 30, rng);
        let k = k_vector(&w);
        match component_of(&k) {
            Ok(lambda) => {
                if !is_admitted(lambda.vector()) {
                    return Err(format!("admitted part of {w} fails the conditions"));
                }
            }
            Err(e) => return Err(format!("k-vector of {w} is off the variety: {e}")),
        }
    }
    Ok(format!("{samples} random alcove vectors classified"))
}

fn check_commuting_diagram(
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<String, String> {
    for _ in 0..samples {
        let w = random_affine(n, 12, rng);
        let u = random_affine(n, 12, rng);
        let lhs = f_affine(&w).apply(&k_vector(&u));
        let rhs = k_vector(&w.compose(&u).unwrap());
        if lhs != rhs {
            return Err(format!("diagram breaks at w = {w}, u = {u}"));
        }
    }
    Ok(format!("{samples} random pairs commute"))
}

fn check_map_relations(n: usize) -> Result<String, String> {
    let simple = |indices: &[usize]| -> Vec<(PositiveRoot, i64)> {
        indices
            .iter()
            .map(|&i| (PositiveRoot::simple(i), 0))
            .collect()
    };
    for i in 1..=n {
        let twice = f_word(n, &simple(&[i, i]));
        if twice != f_word(n, &[]) {
            return Err(format!("s_{i} squared is not the identity map"));
        }
        if i < n {
            let a = f_word(n, &simple(&[i, i + 1, i]));
            let b = f_word(n, &simple(&[i + 1, i, i + 1]));
            if a != b {
                return Err(format!("braid relation fails at {i}"));
            }
        }
        for j in 1..=n {
            if i.abs_diff(j) >= 2 && f_word(n, &simple(&[i, j])) != f_word(n, &simple(&[j, i])) {
                return Err(format!("commutation fails at ({i},{j})"));
            }
        }
        if !f_word(n, &simple(&[i])).is_signed_permutation() {
            return Err(format!("s_{i} map is not a signed permutation"));
        }
    }
    Ok("involution, braid, commutation, signed-permutation".into())
}

fn check_wedge_action(n: usize) -> Result<String, String> {
    let basis: Vec<(usize, usize)> = positive_roots(n)
        .into_iter()
        .map(|r| (r.i(), r.j()))
        .collect();
    for &(k, l) in &basis {
        let y = WedgeElement::basis(n, k, l);
        for i in 1..=n {
            if odot_generator(i, &odot_generator(i, &y)) != y {
                return Err(format!("⊙ involution fails at s_{i} on e{k}∧e{l}"));
            }
            // intertwiner against the affine-map representation
            let map = crate::phi::f_reflection(n, &PositiveRoot::simple(i), 0);
            let x = crate::rootvec::RootVector::from_entries(n, {
                let mut e = vec![0; basis.len()];
                e[crate::root::root_index(n, &PositiveRoot::new(k, l).unwrap())] = 1;
                e
            })
            .unwrap();
            if theta(&map.apply(&x)) != odot_generator(i, &theta(&x)) {
                return Err(format!("intertwiner fails at s_{i} on e{k}∧e{l}"));
            }
        }
    }
    if n <= 4 {
        for w in all_permutations(n) {
            for &(k, l) in &basis {
                if odot_closed_form(&w, k, l)
                    != odot_permutation(&w, &WedgeElement::basis(n, k, l))
                {
                    return Err(format!("closed form differs from word path at {w}"));
                }
            }
        }
    }
    Ok("involution, intertwiner, closed form".into())
}

fn check_diamond_paths(n: usize) -> Result<String, String> {
    let admitted = enumerate_admitted(n);
    let mut checked = 0usize;
    for k in 1..=n {
        for l in (k + 1)..=(n + 1) {
            let t = Permutation::transposition(n, k, l).map_err(|e| e.to_string())?;
            for lambda in &admitted {
                let closed = diamond_closed_form(k, l, lambda).map_err(|e| e.to_string())?;
                let matrix = diamond_matrix(&t, lambda).map_err(|e| e.to_string())?;
                if closed != matrix {
                    return Err(format!("paths disagree at ({k} {l}) on {lambda}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} transposition actions agree on both paths"))
}

fn check_diamond_axioms(
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<String, String> {
    let admitted = enumerate_admitted(n);
    for lambda in &admitted {
        if &diamond_general(&Permutation::identity(n), lambda).map_err(|e| e.to_string())?
            != lambda
        {
            return Err(format!("identity moves {lambda}"));
        }
    }
    for _ in 0..samples {
        let u = random_permutation(n, rng);
        let v = random_permutation(n, rng);
        let lambda = &admitted[rng.gen_range(0..admitted.len())];
        let stepwise = diamond_general(&u, &diamond_general(&v, lambda).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let direct = diamond_general(&(&u * &v), lambda).map_err(|e| e.to_string())?;
        if stepwise != direct {
            return Err(format!("(uv)⋄λ ≠ u⋄(v⋄λ) at u = {u}, v = {v}, λ = {lambda}"));
        }
    }
    Ok(format!("identity + {samples} random associativity pairs"))
}

fn check_translation_invariance(
    n: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<String, String> {
    let admitted = enumerate_admitted(n);
    for _ in 0..samples {
        let w = random_affine(n, 12, rng);
        let lambda = &admitted[rng.gen_range(0..admitted.len())];
        let full = crate::diamond::diamond_affine(&w, lambda).map_err(|e| e.to_string())?;
        let finite = diamond_general(w.finite(), lambda).map_err(|e| e.to_string())?;
        if full != finite {
            return Err(format!("translation part moved the component at {w}"));
        }
    }
    Ok(format!("{samples} random affine elements"))
}

fn check_stabilizer(n: usize) -> Result<String, String> {
    let stab = diamond_stabilizer(&AdmittedVector::zero(n)).map_err(|e| e.to_string())?;
    if stab.len() != n + 1 {
        return Err(format!("stabilizer of 0 has order {}", stab.len()));
    }
    let c = Permutation::long_cycle(n);
    let mut acc = Permutation::identity(n);
    for _ in 0..=n {
        if !stab.contains(&acc) {
            return Err(format!("{acc} missing from the stabilizer"));
        }
        acc = &acc * &c;
    }
    Ok(format!("cyclic of order {}", n + 1))
}

fn check_bijection(n: usize, samples: usize, seed: u64) -> Result<String, String> {
    if !check_bijectivity(n).map_err(|e| e.to_string())? {
        return Err("image of the cycle map is not the admitted list".into());
    }
    if n <= 4 {
        if !check_equivariance(n).map_err(|e| e.to_string())? {
            return Err("exhaustive equivariance fails".into());
        }
        Ok(format!("bijective, equivariant on all {}·{} pairs", factorial(n + 1), factorial(n)))
    } else {
        if !check_equivariance_random(n, samples, seed).map_err(|e| e.to_string())? {
            return Err("random equivariance fails".into());
        }
        Ok(format!("bijective, equivariant on {samples} random pairs"))
    }
}

fn check_posets(n: usize) -> Result<String, String> {
    let poset = build_component_poset(n);
    if poset.minimal_elements().len() != 1 || poset.maximal_elements().len() != 1 {
        return Err("min/max are not unique".into());
    }
    if n <= 4 {
        let len = poset.elements().len();
        for a in 0..len {
            for b in 0..len {
                let dominated = positive_roots(n)
                    .iter()
                    .all(|r| poset.elements()[a].get(r) <= poset.elements()[b].get(r));
                if poset.leq(a, b) != dominated {
                    return Err(format!(
                        "cover order and product order differ at ({}, {})",
                        poset.elements()[a],
                        poset.elements()[b]
                    ));
                }
            }
        }
        if !check_poset_isomorphism(n).map_err(|e| e.to_string())? {
            return Err("transport to cycles is not a labeled isomorphism".into());
        }
        let unlabeled = build_cycle_poset(n).map_err(|e| e.to_string())?.unlabeled_covers();
        if !unlabeled.is_empty() {
            return Err(format!("{} covers have no transposition label", unlabeled.len()));
        }
    }
    let dot_a = poset.to_dot();
    let dot_b = build_component_poset(n).to_dot();
    if dot_a != dot_b {
        return Err("DOT export is not deterministic".into());
    }
    Ok(format!(
        "unique extremes, {} covers, deterministic export",
        poset.covers().len()
    ))
}

/// Names of the battery checks, in the order `run_all` reports them.
pub const CHECK_NAMES: [&str; 11] = [
    "enumeration-count-and-bounds",
    "shi-condition-on-random-alcoves",
    "commuting-diagram",
    "map-relations",
    "wedge-action",
    "diamond-two-paths",
    "diamond-action-axioms",
    "translation-invariance",
    "stabilizer-of-zero",
    "bijection-and-equivariance",
    "posets",
];

/// Run one check by its index in `CHECK_NAMES`. Each check derives its own
/// random stream from `seed` and the index, so a battery run gives the same
/// reports whether the checks execute serially or in parallel.
pub fn run_single(index: usize, n: usize, seed: u64, samples: usize) -> CheckReport {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
    let name = CHECK_NAMES[index];
    let result = match index {
        0 => check_enumeration(n),
        1 => check_shi_condition(n, samples, &mut rng),
        2 => check_commuting_diagram(n, samples.min(2000), &mut rng),
        3 => check_map_relations(n),
        4 => check_wedge_action(n),
        5 => check_diamond_paths(n),
        6 => check_diamond_axioms(n, samples.min(500), &mut rng),
        7 => check_translation_invariance(n, samples.min(500), &mut rng),
        8 => check_stabilizer(n),
        9 => check_bijection(n, samples, seed),
        _ => check_posets(n),
    };
    CheckReport::from_result(name, result)
}

/// Run the whole battery at rank `n`. Sampling sizes are scaled down where a
/// check is exhaustive at small rank; `seed` fixes all randomness.
pub fn run_all(n: usize, seed: u64, samples: usize) -> Vec<CheckReport> {
    (0..CHECK_NAMES.len())
        .map(|index| run_single(index, n, seed, samples))
        .collect()
}
