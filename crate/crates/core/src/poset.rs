//! The cover-relation poset on admitted vectors (coordinatewise order, covers
//! = unit increments labeled by the incremented root) and its transport to
//! circular permutations, where each cover is labeled — when possible — by a
//! transposition conjugating the lower cycle to the upper one. Both posets
//! export to Graphviz DOT and JSON with fully deterministic output.

use crate::bijection::BijectionTable;
use crate::components::{enumerate_admitted, is_admitted, AdmittedVector};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::root::{positive_roots, PositiveRoot};
use serde_json::{json, Value};
use std::path::Path;

/// Admitted vectors under the product order; covers increment one coordinate.
#[derive(Debug, Clone)]
pub struct ComponentPoset {
    n: usize,
    elements: Vec<AdmittedVector>,
    covers: Vec<(usize, usize, PositiveRoot)>,
}

/// A cover in the cycle poset: lower index, upper index, and the conjugating
/// transposition when one exists.
pub type CycleCover = (usize, usize, Option<(usize, usize)>);

/// Circular permutations with the order transported through the bijection;
/// cover labels are conjugating transpositions when one exists.
#[derive(Debug, Clone)]
pub struct CyclePoset {
    n: usize,
    elements: Vec<Permutation>,
    covers: Vec<CycleCover>,
}

impl ComponentPoset {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[AdmittedVector] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize, PositiveRoot)] {
        &self.covers
    }

    /// Indices reachable from `from` through upward cover chains, inclusive.
    fn up_set(&self, from: usize) -> Vec<bool> {
        let mut reach = vec![false; self.elements.len()];
        let mut stack = vec![from];
        reach[from] = true;
        while let Some(a) = stack.pop() {
            for &(lo, hi, _) in &self.covers {
                if lo == a && !reach[hi] {
                    reach[hi] = true;
                    stack.push(hi);
                }
            }
        }
        reach
    }

    /// λ ≤ μ in the order generated by the covers.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_set(a)[b]
    }

    /// Elements with no cover below / above them.
    pub fn minimal_elements(&self) -> Vec<&AdmittedVector> {
        self.extremes(true)
    }

    pub fn maximal_elements(&self) -> Vec<&AdmittedVector> {
        self.extremes(false)
    }

    fn extremes(&self, minimal: bool) -> Vec<&AdmittedVector> {
        (0..self.elements.len())
            .filter(|&i| {
                !self
                    .covers
                    .iter()
                    .any(|&(lo, hi, _)| if minimal { hi == i } else { lo == i })
            })
            .map(|i| &self.elements[i])
            .collect()
    }

    /// Diagnostic: every pair has a unique meet and join under `leq`.
    pub fn is_lattice(&self) -> bool {
        let len = self.elements.len();
        let ups: Vec<Vec<bool>> = (0..len).map(|i| self.up_set(i)).collect();
        for a in 0..len {
            for b in 0..len {
                // join: unique minimal common upper bound (meet is dual)
                for upper in [true, false] {
                    let common: Vec<usize> = (0..len)
                        .filter(|&c| {
                            if upper {
                                ups[a][c] && ups[b][c]
                            } else {
                                ups[c][a] && ups[c][b]
                            }
                        })
                        .collect();
                    let extreme: Vec<usize> = common
                        .iter()
                        .copied()
                        .filter(|&c| {
                            !common
                                .iter()
                                .any(|&d| d != c && if upper { ups[d][c] } else { ups[c][d] })
                        })
                        .collect();
                    if extreme.len() != 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph components {\n");
        for (i, lambda) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{lambda}\"];\n"));
        }
        for (lo, hi, root) in &self.covers {
            out.push_str(&format!(
                "  n{lo} -> n{hi} [label=\"({},{})\"];\n",
                root.i(),
                root.j()
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "nodes": self.elements.iter().map(AdmittedVector::to_json).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|(lo, hi, root)| json!({
                "from": lo,
                "to": hi,
                "label": format!("({},{})", root.i(), root.j()),
            })).collect::<Vec<_>>(),
        })
    }
}

impl CyclePoset {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn covers(&self) -> &[CycleCover] {
        &self.covers
    }

    /// Covers for which no single transposition conjugates lower to upper.
    pub fn unlabeled_covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .filter(|(_, _, label)| label.is_none())
            .map(|&(lo, hi, _)| (lo, hi))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cycles {\n");
        for (i, c) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.cycle_notation()));
        }
        for (lo, hi, label) in &self.covers {
            match label {
                Some((k, l)) => out.push_str(&format!(
                    "  n{lo} -> n{hi} [label=\"({k} {l})\"];\n"
                )),
                None => out.push_str(&format!("  n{lo} -> n{hi};\n")),
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "nodes": self.elements.iter().map(|c| Value::String(c.one_line())).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|(lo, hi, label)| json!({
                "from": lo,
                "to": hi,
                "label": label.map(|(k, l)| format!("({k} {l})")),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Admitted vectors with all unit-increment covers, both sides admitted.
pub fn build_component_poset(n: usize) -> ComponentPoset {
    let elements = enumerate_admitted(n);
    let index_of = |v: &AdmittedVector| elements.binary_search(v).ok();
    let mut covers = Vec::new();
    for (lo, lambda) in elements.iter().enumerate() {
        for root in positive_roots(n) {
            if root.is_simple() {
                continue;
            }
            let mut bumped = lambda.vector().clone();
            bumped.set(&root, bumped.get(&root) + 1);
            if is_admitted(&bumped) {
                let hi = index_of(&AdmittedVector::new(bumped).unwrap())
                    .expect("admitted vector missing from enumeration");
                covers.push((lo, hi, root));
            }
        }
    }
    ComponentPoset {
        n,
        elements,
        covers,
    }
}

/// Transport of the component poset through the inverse bijection, with a
/// lexicographic search for each cover's conjugating transposition.
pub fn build_cycle_poset(n: usize) -> Result<CyclePoset> {
    let component = build_component_poset(n);
    let table = BijectionTable::build(n)?;
    let elements: Vec<Permutation> = component
        .elements
        .iter()
        .map(|lambda| {
            table
                .inverse(lambda)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("{lambda} missing from bijection")))
        })
        .collect::<Result<_>>()?;
    let covers = component
        .covers
        .iter()
        .map(|&(lo, hi, _)| {
            let label = conjugating_transposition(n, &elements[lo], &elements[hi]);
            (lo, hi, label)
        })
        .collect();
    Ok(CyclePoset {
        n,
        elements,
        covers,
    })
}

/// The lexicographically first transposition t with t·lower·t = upper.
fn conjugating_transposition(
    n: usize,
    lower: &Permutation,
    upper: &Permutation,
) -> Option<(usize, usize)> {
    for k in 1..=n {
        for l in (k + 1)..=(n + 1) {
            let t = Permutation::transposition(n, k, l).unwrap();
            if &t.conjugate(lower) == upper {
                return Some((k, l));
            }
        }
    }
    None
}

/// Write DOT to a file.
pub fn export_dot(dot: &str, path: &Path) -> Result<()> {
    std::fs::write(path, dot).map_err(|e| Error::Io(e.to_string()))
}

/// The bijection transports the component order onto the cycle side and every
/// cover carries a valid transposition label.
pub fn check_poset_isomorphism(n: usize) -> Result<bool> {
    let component = build_component_poset(n);
    let cycles = build_cycle_poset(n)?;
    if component.elements.len() != cycles.elements.len()
        || component.covers.len() != cycles.covers.len()
    {
        return Ok(false);
    }
    for (&(clo, chi, _), &(ylo, yhi, label)) in
        component.covers.iter().zip(cycles.covers.iter())
    {
        if (clo, chi) != (ylo, yhi) {
            return Ok(false);
        }
        match label {
            Some((k, l)) => {
                let t = Permutation::transposition(n, k, l)?;
                if t.conjugate(&cycles.elements[ylo]) != cycles.elements[yhi] {
                    return Ok(false);
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}
