//! Finite groups of edge bijections and structural witnesses for them.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bijection::EdgeBijection;
use crate::error::{Error, Result};
use crate::families;
use crate::poset::Poset;

/// A set of edge bijections known to be closed under composition and inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupOnEdges {
    elements: Vec<EdgeBijection>,
}

/// Checks identity, closure and inverses. Elements are sorted and deduplicated.
pub fn verify_group(
    elements: impl IntoIterator<Item = EdgeBijection>,
) -> Result<FiniteGroupOnEdges> {
    let mut elements: Vec<EdgeBijection> = elements.into_iter().collect();
    elements.sort();
    elements.dedup();
    let Some(first) = elements.first() else {
        return Err(Error::NotAGroup("empty set".into()));
    };
    let size = first.len();
    if elements.iter().any(|t| t.len() != size) {
        return Err(Error::NotAGroup(
            "bijections act on sets of different sizes".into(),
        ));
    }
    if !first.is_identity() {
        // the identity is the least permutation, so it would sort first
        return Err(Error::NotAGroup("identity missing".into()));
    }
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if elements.binary_search(&a.compose(b)).is_err() {
                return Err(Error::NotClosed(i, j));
            }
        }
        if elements.binary_search(&a.inverse()).is_err() {
            return Err(Error::NotAGroup(format!(
                "element {i} has no inverse in the set"
            )));
        }
    }
    Ok(FiniteGroupOnEdges { elements })
}

impl FiniteGroupOnEdges {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[EdgeBijection] {
        &self.elements
    }

    pub fn contains(&self, theta: &EdgeBijection) -> bool {
        self.elements.binary_search(theta).is_ok()
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for t in &self.elements {
            *h.entry(t.order()).or_insert(0) += 1;
        }
        h
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(gens: &[EdgeBijection]) -> BTreeSet<EdgeBijection> {
        let Some(g) = gens.first() else {
            return BTreeSet::new();
        };
        let mut seen = BTreeSet::from([EdgeBijection::identity(g.len())]);
        let mut frontier = vec![EdgeBijection::identity(g.len())];
        while let Some(x) = frontier.pop() {
            for s in gens {
                let y = s.compose(&x);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// `(r, s)` with `|G| = 4n`, `r` of order `2n`, `s` of order 2,
    /// `s r s = r^{-1}` and `⟨r, s⟩ = G`.
    pub fn dihedral_generators(&self, n: usize) -> Option<(EdgeBijection, EdgeBijection)> {
        if self.order() != 4 * n {
            return None;
        }
        let rotations = self.elements.iter().filter(|r| r.order() == 2 * n);
        for r in rotations {
            let r_inv = r.inverse();
            for s in self.elements.iter().filter(|s| s.order() == 2) {
                if s.compose(r).compose(s) == r_inv
                    && Self::generated_by(&[r.clone(), s.clone()]).len() == self.order()
                {
                    return Some((r.clone(), s.clone()));
                }
            }
        }
        None
    }
}

pub fn dihedral_witness(group: &FiniteGroupOnEdges, n: usize) -> bool {
    group.dihedral_generators(n).is_some()
}

/// Orders found while checking a group on the edges of `Cr_n` against the
/// odd/even chain description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub order: usize,
    pub odd_preserving_order: usize,
    pub index: usize,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Checks that `G` is exactly the set of bijections sending the odd chains
/// of `Cr_n` onto the odd or the even chains, and that the odd-preserving
/// subgroup has index 2 and acts as `Sym(O) × Sym(E)`.
pub fn crown_parity_witness(group: &FiniteGroupOnEdges, n: usize) -> Result<ParityReport> {
    let poset = families::crown(n)?;
    let idx = |pairs: Vec<(usize, usize)>| -> BTreeSet<usize> {
        pairs
            .into_iter()
            .map(|(x, y)| poset.pair_index(x, y).expect("crown pair"))
            .collect()
    };
    let odd = idx(families::crown_odd_pairs(n));
    let even = idx(families::crown_even_pairs(n));
    if group.elements.first().map(EdgeBijection::len) != Some(poset.num_strict_pairs()) {
        return Err(Error::StructureMismatch(format!(
            "group does not act on the edges of Cr_{n}"
        )));
    }
    let mut preserving = Vec::new();
    for t in &group.elements {
        let image: BTreeSet<usize> = odd.iter().map(|&i| t.image(i)).collect();
        if image == odd {
            preserving.push(t);
        } else if image != even {
            return Err(Error::StructureMismatch(
                "an element mixes odd and even chains".into(),
            ));
        }
    }
    let h = factorial(n).pow(2);
    if group.order() != 2 * h {
        return Err(Error::StructureMismatch(format!(
            "order {} differs from 2(n!)^2 = {}",
            group.order(),
            2 * h
        )));
    }
    if preserving.len() != h {
        return Err(Error::StructureMismatch(format!(
            "odd-preserving subgroup has order {}, expected {h}",
            preserving.len()
        )));
    }
    let restrictions: BTreeSet<(Vec<usize>, Vec<usize>)> = preserving
        .iter()
        .map(|t| {
            (
                odd.iter().map(|&i| t.image(i)).collect(),
                even.iter().map(|&i| t.image(i)).collect(),
            )
        })
        .collect();
    if restrictions.len() != h {
        return Err(Error::StructureMismatch(
            "odd-preserving subgroup is not all of Sym(O) x Sym(E)".into(),
        ));
    }
    Ok(ParityReport {
        order: group.order(),
        odd_preserving_order: h,
        index: 2,
    })
}

/// Summary of a group for reports.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub element_orders: BTreeMap<usize, usize>,
    pub generators: Vec<Vec<[[usize; 2]; 2]>>,
    pub dihedral: Option<usize>,
}

/// Order, element-order histogram and a small generating set. For crowns,
/// `crown_size` also requests a dihedral presentation.
pub fn structure_report(
    group: &FiniteGroupOnEdges,
    poset: &Poset,
    crown_size: Option<usize>,
) -> StructureReport {
    let dihedral = crown_size.and_then(|n| group.dihedral_generators(n).map(|g| (n, g)));
    let gens = match &dihedral {
        Some((_, (r, s))) => vec![r.clone(), s.clone()],
        None => greedy_generators(group),
    };
    StructureReport {
        order: group.order(),
        element_orders: group.order_histogram(),
        generators: gens.iter().map(|g| g.json_pairs(poset)).collect(),
        dihedral: dihedral.map(|(n, _)| 2 * n),
    }
}

/// Adds elements in sorted order until they generate the group.
fn greedy_generators(group: &FiniteGroupOnEdges) -> Vec<EdgeBijection> {
    let mut gens: Vec<EdgeBijection> = Vec::new();
    let mut span = BTreeSet::from([group.elements[0].clone()]);
    for t in &group.elements {
        if span.len() == group.order() {
            break;
        }
        if !span.contains(t) {
            gens.push(t.clone());
            span = FiniteGroupOnEdges::generated_by(&gens);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::{Analyzer, EnumerationOptions};

    #[test]
    fn trivial_group() {
        let g = verify_group([EdgeBijection::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.order_histogram(), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn non_closed_set() {
        let t = EdgeBijection::from_perm(vec![1, 2, 0]).unwrap();
        assert!(matches!(
            verify_group([EdgeBijection::identity(3), t]),
            Err(Error::NotClosed(_, _))
        ));
        assert!(matches!(verify_group([]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn crown_groups() {
        for n in 2..=3 {
            let p = families::crown(n).unwrap();
            let a = Analyzer::new(&p);
            let am = verify_group(a.enumerate_am(&EnumerationOptions::default()).unwrap()).unwrap();
            let pg = verify_group(a.enumerate_p()).unwrap();
            assert_eq!(am.order(), 2 * factorial(n).pow(2));
            assert_eq!(pg.order(), 4 * n);
            assert!(dihedral_witness(&pg, n));
            let report = crown_parity_witness(&am, n).unwrap();
            assert_eq!(report.odd_preserving_order, factorial(n).pow(2));
            if n == 3 {
                assert!(!dihedral_witness(&am, n));
                assert!(matches!(
                    crown_parity_witness(&pg, n),
                    Err(Error::StructureMismatch(_))
                ));
            }
        }
    }

    #[test]
    fn report_generators_generate() {
        let p = families::kmn(2, 3).unwrap();
        let g = verify_group(Analyzer::new(&p).enumerate_p()).unwrap();
        let report = structure_report(&g, &p, None);
        assert_eq!(report.order, 12);
        let gens: Vec<EdgeBijection> = report
            .generators
            .iter()
            .map(|pairs| {
                EdgeBijection::from_json(&p, &serde_json::to_string(pairs).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(FiniteGroupOnEdges::generated_by(&gens).len(), 12);
    }
}
