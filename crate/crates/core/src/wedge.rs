//! The non-linear diagonal action ⊙ of the symmetric group on integer
//! combinations of wedges e_i ∧ e_j, and the intertwiner Θ with the affine
//! integer-map representation.
//!
//! A generator acts by  s_i ⊙ Σ x_{r,s} e_r∧e_s = Σ x_{r,s} e_{s_i(r)}∧e_{s_i(s)}
//! − e_i∧e_{i+1}, with e_j∧e_i = −e_i∧e_j normalized eagerly. The subtracted
//! unit makes the action affine in each step and non-linear overall.

use crate::perm::Permutation;
use crate::root::{num_positive_roots, positive_roots, root_index, PositiveRoot};
use crate::rootvec::RootVector;
use std::fmt;

/// An integer combination Σ x_{i,j} e_i∧e_j over pairs 1 ≤ i < j ≤ n+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeElement {
    n: usize,
    coeffs: Vec<i64>,
}

impl WedgeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![0; num_positive_roots(n)],
        }
    }

    /// The basis wedge e_k ∧ e_ℓ, requiring k < ℓ.
    pub fn basis(n: usize, k: usize, l: usize) -> Self {
        let mut out = Self::zero(n);
        out.add_signed(k, l, 1);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Coefficient of e_k ∧ e_ℓ in either orientation: reading (ℓ, k) negates.
    pub fn coefficient(&self, k: usize, l: usize) -> i64 {
        assert!(k != l, "wedge e_{k}∧e_{k} is zero");
        if k < l {
            self.coeffs[self.index(k, l)]
        } else {
            -self.coeffs[self.index(l, k)]
        }
    }

    /// Add c·e_k∧e_ℓ, normalizing orientation.
    pub fn add_signed(&mut self, k: usize, l: usize, c: i64) {
        assert!(k != l, "wedge e_{k}∧e_{k} is zero");
        if k < l {
            let idx = self.index(k, l);
            self.coeffs[idx] += c;
        } else {
            let idx = self.index(l, k);
            self.coeffs[idx] -= c;
        }
    }

    pub fn add(&self, other: &WedgeElement) -> WedgeElement {
        assert_eq!(self.n, other.n, "rank mismatch");
        WedgeElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn index(&self, i: usize, j: usize) -> usize {
        root_index(self.n, &PositiveRoot::new(i, j).expect("ordered pair"))
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for root in positive_roots(self.n) {
            let c = self.coeffs[root_index(self.n, &root)];
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}·")?;
            }
            write!(f, "e{}∧e{}", root.i(), root.j())?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Relabel a root-indexed vector as a wedge combination, e_{i,j} ↦ e_i∧e_j.
pub fn theta(x: &RootVector) -> WedgeElement {
    WedgeElement {
        n: x.rank(),
        coeffs: x.entries().to_vec(),
    }
}

/// Inverse relabeling.
pub fn theta_inv(y: &WedgeElement) -> RootVector {
    RootVector::from_entries(y.n, y.coeffs.clone()).unwrap()
}

/// One generator step of ⊙: diagonal index permutation, then subtract one
/// unit of e_i∧e_{i+1}.
pub fn odot_generator(i: usize, y: &WedgeElement) -> WedgeElement {
    let n = y.n;
    assert!((1..=n).contains(&i), "generator index {i} out of range");
    let s = Permutation::simple_reflection(n, i).unwrap();
    let mut out = WedgeElement::zero(n);
    for root in positive_roots(n) {
        let c = y.coeffs[root_index(n, &root)];
        if c != 0 {
            out.add_signed(s.apply(root.i()), s.apply(root.j()), c);
        }
    }
    out.add_signed(i, i + 1, -1);
    out
}

/// Iterated ⊙ over a word in the generators, rightmost applied first. The
/// result depends only on the permutation the word represents.
pub fn odot_word(word: &[usize], y: &WedgeElement) -> WedgeElement {
    word.iter()
        .rev()
        .fold(y.clone(), |acc, &i| odot_generator(i, &acc))
}

/// ⊙ of an arbitrary permutation, through a reduced word.
pub fn odot_permutation(w: &Permutation, y: &WedgeElement) -> WedgeElement {
    odot_word(&w.reduced_word(), y)
}

/// The closed form on a basis wedge:
/// w ⊙ e_k∧e_ℓ = e_{w(k)}∧e_{w(ℓ)} − Σ_{(r,s) inverted by w} e_r∧e_s.
pub fn odot_closed_form(w: &Permutation, k: usize, l: usize) -> WedgeElement {
    assert!(k < l, "basis wedge needs k < ℓ");
    let mut out = WedgeElement::zero(w.rank());
    out.add_signed(w.apply(k), w.apply(l), 1);
    for root in w.inversion_set() {
        out.add_signed(root.i(), root.j(), -1);
    }
    out
}
