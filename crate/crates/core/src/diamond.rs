//! The induced action ⋄ of the finite symmetric group on admitted vectors,
//! by two independent routes:
//!
//! * matrix path — push the canonical point of X^λ through the affine
//!   integer map of w and extract the component of the image;
//! * closed form — for a transposition t = s_{k,ℓ} and each root e_i−e_j,
//!   (t⋄λ)_{i,j} = λ_{t(i),t(j)} − Σ_{p=i}^{j−1} λ_{t(p),t(p+1)} + |B_{i,j}|
//!   − [e_i−e_j inverted by t], where B_{i,j} counts the simple roots inside
//!   the window [i, j−1] that t inverts; general permutations factor into
//!   transpositions and iterate.
//!
//! The two routes are cross-validated exhaustively in the test suite.

use crate::affine::AffineElement;
use crate::components::{canonical_point, component_of, AdmittedVector};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::phi::{f_affine, f_permutation};
use crate::root::positive_roots;
use crate::rootvec::RootVector;
use std::collections::BTreeSet;

/// A transposition s_{k,ℓ} together with a window root e_i−e_j, the data
/// entering one coordinate of the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReflectionWindow {
    k: usize,
    l: usize,
    i: usize,
    j: usize,
}

impl ReflectionWindow {
    pub fn new(n: usize, k: usize, l: usize, i: usize, j: usize) -> Result<Self> {
        for (a, b) in [(k, l), (i, j)] {
            if a == 0 || a >= b || b > n + 1 {
                return Err(Error::IndexOutOfRange(format!(
                    "window needs 1 <= {a} < {b} <= {}",
                    n + 1
                )));
            }
        }
        Ok(Self { k, l, i, j })
    }

    /// The window positions p ∈ {i, …, j−1} with e_p−e_{p+1} inverted by
    /// s_{k,ℓ}: these are exactly p = k and p = ℓ−1.
    pub fn b_set(&self) -> Vec<usize> {
        let mut set = BTreeSet::new();
        for p in [self.k, self.l - 1] {
            if self.i <= p && p < self.j {
                set.insert(p);
            }
        }
        set.into_iter().collect()
    }

    /// The complement of `b_set` in {i, …, j−1}.
    pub fn a_set(&self) -> Vec<usize> {
        let b: BTreeSet<usize> = self.b_set().into_iter().collect();
        (self.i..self.j).filter(|p| !b.contains(p)).collect()
    }
}

/// |B_{i,j}(k,ℓ)|: how many simple roots inside the window [i, j−1] the
/// transposition inverts (k and ℓ−1 coincide when the transposition is
/// adjacent, counting once).
pub fn simple_inversions_count(win: &ReflectionWindow) -> usize {
    win.b_set().len()
}

/// The oriented sum Σ x_{t(p),t(p+1)} for p running from a to b−1, with
/// x_{u,v} = −x_{v,u} when u > v; reversed endpoints (a > b) negate the sum.
pub fn gamma_sum(t: &Permutation, x: &RootVector, a: usize, b: usize) -> i64 {
    if a > b {
        return -gamma_sum(t, x, b, a);
    }
    (a..b)
        .map(|p| x.get_signed(t.apply(p), t.apply(p + 1)))
        .sum()
}

fn closed_form_on_vector(
    n: usize,
    k: usize,
    l: usize,
    lambda: &RootVector,
) -> Result<RootVector> {
    let t = Permutation::transposition(n, k, l)?;
    let inversions = t.inversion_set();
    let mut out = RootVector::zero(n);
    for root in positive_roots(n) {
        let (i, j) = (root.i(), root.j());
        let window = ReflectionWindow::new(n, k, l, i, j)?;
        let value = lambda.get_signed(t.apply(i), t.apply(j)) - gamma_sum(&t, lambda, i, j)
            + simple_inversions_count(&window) as i64
            - i64::from(inversions.contains(&root));
        out.set(&root, value);
    }
    Ok(out)
}

/// Closed-form ⋄ of the transposition s_{k,ℓ}.
pub fn diamond_closed_form(
    k: usize,
    l: usize,
    lambda: &AdmittedVector,
) -> Result<AdmittedVector> {
    let out = closed_form_on_vector(lambda.rank(), k, l, lambda.vector())?;
    AdmittedVector::new(out).map_err(|e| Error::ResultNotAdmitted(e.to_string()))
}

/// Matrix-path ⋄ of an arbitrary permutation: transport the canonical point
/// through the affine integer map and classify the image.
pub fn diamond_matrix(w: &Permutation, lambda: &AdmittedVector) -> Result<AdmittedVector> {
    let image = f_permutation(w).apply(canonical_point(lambda).vector());
    component_of(&image)
}

/// ⋄ of an arbitrary permutation by factoring into transpositions and
/// iterating the closed form, rightmost factor first.
pub fn diamond_general(w: &Permutation, lambda: &AdmittedVector) -> Result<AdmittedVector> {
    let n = w.rank();
    if n != lambda.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank(),
            found: n,
        });
    }
    let mut current = lambda.clone();
    for (k, l) in w.transposition_factors().into_iter().rev() {
        current = diamond_closed_form(k, l, &current)?;
    }
    Ok(current)
}

/// ⋄ of an affine element through its map; the translation part never moves
/// the component, so this agrees with `diamond_general` on the finite part.
pub fn diamond_affine(w: &AffineElement, lambda: &AdmittedVector) -> Result<AdmittedVector> {
    let image = f_affine(w).apply(canonical_point(lambda).vector());
    component_of(&image)
}

/// The orbit of λ under the whole finite group, sorted; the action is
/// transitive, so this equals the full admitted list.
pub fn diamond_orbit(lambda: &AdmittedVector) -> Result<Vec<AdmittedVector>> {
    let n = lambda.rank();
    let mut seen = BTreeSet::new();
    let mut queue = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(current) = queue.pop() {
        for i in 1..=n {
            let next = diamond_closed_form(i, i + 1, &current)?;
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Brute-force stabilizer { σ : σ⋄λ = λ }, in lexicographic one-line order.
pub fn diamond_stabilizer(lambda: &AdmittedVector) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for sigma in all_permutations(lambda.rank()) {
        if &diamond_general(&sigma, lambda)? == lambda {
            out.push(sigma);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::generated_ball;
    use crate::components::enumerate_admitted;
    use crate::phi::f_word;
    use crate::root::{PositiveRoot, RootLatticeVector};

    fn admitted(n: usize, bracket: &[i64]) -> AdmittedVector {
        AdmittedVector::from_bracket(n, bracket).unwrap()
    }

    #[test]
    fn window_count_examples() {
        let count = |k, l, i, j| {
            simple_inversions_count(&ReflectionWindow::new(3, k, l, i, j).unwrap())
        };
        assert_eq!(count(1, 2, 1, 2), 1);
        assert_eq!(count(1, 4, 2, 3), 0);
        assert_eq!(count(1, 4, 1, 4), 2);
    }

    #[test]
    fn window_count_matches_inversion_oracle() {
        // independent oracle: count window positions whose simple root the
        // transposition actually inverts
        for n in 1..=4 {
            for k in 1..=n {
                for l in (k + 1)..=(n + 1) {
                    let t = Permutation::transposition(n, k, l).unwrap();
                    let inv = t.inversion_set();
                    for i in 1..=n {
                        for j in (i + 1)..=(n + 1) {
                            let expected = (i..j)
                                .filter(|&p| inv.contains(&PositiveRoot::simple(p)))
                                .count();
                            let win = ReflectionWindow::new(n, k, l, i, j).unwrap();
                            assert_eq!(simple_inversions_count(&win), expected);
                            let mut both = win.a_set();
                            both.extend(win.b_set());
                            both.sort_unstable();
                            assert_eq!(both, (i..j).collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_sum_examples() {
        let lambda = admitted(3, &[0, 1, 0]);
        let id = Permutation::identity(3);
        for i in 1..=3 {
            for j in (i + 1)..=4 {
                assert_eq!(gamma_sum(&id, lambda.vector(), i, j), 0);
            }
        }
        let t = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(gamma_sum(&t, lambda.vector(), 1, 3), 0);
        // splitting and orientation
        let u = Permutation::parse("3 1 4 2").unwrap();
        let x = RootVector::from_entries(3, vec![5, -3, 2, 7, -1, 4]).unwrap();
        for i in 1..=4usize {
            for r in i..=4usize {
                for j in r..=4usize {
                    assert_eq!(
                        gamma_sum(&u, &x, i, j),
                        gamma_sum(&u, &x, i, r) + gamma_sum(&u, &x, r, j)
                    );
                }
            }
        }
        assert_eq!(gamma_sum(&u, &x, 4, 1), -gamma_sum(&u, &x, 1, 4));
    }

    #[test]
    fn closed_form_symbolic_row() {
        // s_{1,2} ⋄ [λ13, λ14, λ24] = [−λ13+1, −λ13+λ24+1, −λ13+λ14]
        for lambda in enumerate_admitted(3) {
            let b = lambda.bracket();
            let (l13, l14, l24) = (b[0], b[1], b[2]);
            let image = diamond_closed_form(1, 2, &lambda).unwrap();
            assert_eq!(image.bracket(), vec![-l13 + 1, -l13 + l24 + 1, -l13 + l14]);
        }
    }

    #[test]
    fn action_table_of_simple_reflections_rank_three() {
        let columns = [
            [0, 0, 0],
            [0, 1, 0],
            [0, 1, 1],
            [1, 1, 1],
            [1, 1, 0],
            [1, 2, 1],
        ];
        let rows: [(usize, [[i64; 3]; 6]); 3] = [
            (1, [[1, 1, 0], [1, 1, 1], [1, 2, 1], [0, 1, 0], [0, 0, 0], [0, 1, 1]]),
            (2, [[1, 1, 1], [1, 2, 1], [1, 1, 0], [0, 0, 0], [0, 1, 1], [0, 1, 0]]),
            (3, [[0, 1, 1], [1, 1, 1], [0, 0, 0], [0, 1, 0], [1, 2, 1], [1, 1, 0]]),
        ];
        for (i, expected_row) in rows {
            let s = Permutation::simple_reflection(3, i).unwrap();
            for (col, expected) in columns.iter().zip(expected_row) {
                let lambda = admitted(3, col);
                let closed = diamond_closed_form(i, i + 1, &lambda).unwrap();
                let matrix = diamond_matrix(&s, &lambda).unwrap();
                assert_eq!(closed.bracket(), expected.to_vec(), "s_{i} closed on {col:?}");
                assert_eq!(matrix, closed, "paths disagree at s_{i} on {col:?}");
            }
        }
    }

    #[test]
    fn identity_acts_trivially() {
        for n in 1..=4 {
            let id = Permutation::identity(n);
            for lambda in enumerate_admitted(n) {
                assert_eq!(diamond_matrix(&id, &lambda).unwrap(), lambda);
                assert_eq!(diamond_general(&id, &lambda).unwrap(), lambda);
            }
        }
    }

    #[test]
    fn long_cycle_fixes_zero() {
        for n in 1..=5 {
            let zero = AdmittedVector::zero(n);
            let c = Permutation::long_cycle(n);
            assert_eq!(diamond_general(&c, &zero).unwrap(), zero);
        }
    }

    #[test]
    fn closed_form_equals_matrix_path() {
        for n in 1..=3 {
            for k in 1..=n {
                for l in (k + 1)..=(n + 1) {
                    let t = Permutation::transposition(n, k, l).unwrap();
                    for lambda in enumerate_admitted(n) {
                        assert_eq!(
                            diamond_closed_form(k, l, &lambda).unwrap(),
                            diamond_matrix(&t, &lambda).unwrap(),
                            "t = ({k} {l}), λ = {lambda}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn general_path_agrees_with_matrix_path() {
        for w in all_permutations(3) {
            for lambda in enumerate_admitted(3) {
                assert_eq!(
                    diamond_general(&w, &lambda).unwrap(),
                    diamond_matrix(&w, &lambda).unwrap(),
                    "w = {w}"
                );
            }
        }
    }

    #[test]
    fn action_axiom_holds() {
        for u in all_permutations(3) {
            for v in all_permutations(3) {
                let uv = &u * &v;
                for lambda in enumerate_admitted(3) {
                    let stepwise =
                        diamond_general(&u, &diamond_general(&v, &lambda).unwrap()).unwrap();
                    assert_eq!(diamond_general(&uv, &lambda).unwrap(), stepwise);
                }
            }
        }
    }

    #[test]
    fn translations_do_not_move_components() {
        let n = 3;
        for w in generated_ball(n, 3) {
            for lambda in enumerate_admitted(n).into_iter().take(3) {
                assert_eq!(
                    diamond_affine(&w, &lambda).unwrap(),
                    diamond_general(w.finite(), &lambda).unwrap(),
                    "w = {w}"
                );
            }
        }
        // a pure translation with large coordinates
        let x = RootLatticeVector::new(vec![5, -2, -7, 4]).unwrap();
        let tau = AffineElement::translation_by(x);
        for lambda in enumerate_admitted(n) {
            assert_eq!(diamond_affine(&tau, &lambda).unwrap(), lambda);
        }
    }

    #[test]
    fn integral_difference_identity() {
        // for x the canonical point of λ and y its image under F(t):
        // ∫_{t(i)}^{t(j)} γ(x) − ∫_i^j γ(y) = −Σ_p λ_{t(p),t(p+1)} + |B_{i,j}|
        for n in 1..=3 {
            for k in 1..=n {
                for l in (k + 1)..=(n + 1) {
                    let t = Permutation::transposition(n, k, l).unwrap();
                    let id = Permutation::identity(n);
                    let word = [(PositiveRoot::new(k, l).unwrap(), 0)];
                    let map = f_word(n, &word);
                    for lambda in enumerate_admitted(n) {
                        let x = canonical_point(&lambda).into_vector();
                        let y = map.apply(&x);
                        for root in positive_roots(n) {
                            let (i, j) = (root.i(), root.j());
                            let lhs = gamma_sum(&id, &x, t.apply(i), t.apply(j))
                                - gamma_sum(&id, &y, i, j);
                            let win = ReflectionWindow::new(n, k, l, i, j).unwrap();
                            let rhs = -gamma_sum(&t, lambda.vector(), i, j)
                                + simple_inversions_count(&win) as i64;
                            assert_eq!(lhs, rhs, "t=({k} {l}), λ={lambda}, root=({i},{j})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_is_everything() {
        for n in 1..=4 {
            let all = enumerate_admitted(n);
            let from_zero = diamond_orbit(&AdmittedVector::zero(n)).unwrap();
            assert_eq!(from_zero, all);
            let other = diamond_orbit(all.last().unwrap()).unwrap();
            assert_eq!(other, all);
        }
    }

    #[test]
    fn stabilizer_of_zero_is_the_cyclic_group() {
        for n in 1..=4 {
            let stab = diamond_stabilizer(&AdmittedVector::zero(n)).unwrap();
            assert_eq!(stab.len(), n + 1);
            let c = Permutation::long_cycle(n);
            let mut powers: Vec<Permutation> = Vec::new();
            let mut acc = Permutation::identity(n);
            for _ in 0..=n {
                powers.push(acc.clone());
                acc = &acc * &c;
            }
            powers.sort_by_key(|p| p.images().to_vec());
            let mut stab_sorted = stab.clone();
            stab_sorted.sort_by_key(|p| p.images().to_vec());
            assert_eq!(stab_sorted, powers);
        }
    }

    #[test]
    fn stabilizers_all_have_order_rank_plus_one() {
        for n in 1..=3 {
            for lambda in enumerate_admitted(n) {
                assert_eq!(diamond_stabilizer(&lambda).unwrap().len(), n + 1);
            }
        }
    }
}
