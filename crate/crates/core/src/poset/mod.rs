//! Finite connected posets.
//!
//! A [`Poset`] is built from an arbitrary list of strict relations; the
//! transitive closure is taken and the result is validated (antisymmetry,
//! connectivity). All derived data (covers, extremal elements, length and
//! the strict-pair basis `B`) is cached at construction, so a `Poset` is
//! immutable and cheap to share between enumeration workers.

mod chains;
mod crowns;
mod maps;
mod parse;

pub use chains::{closed_semiwalks, for_each_closed_semiwalk, MaximalChain, Semiwalk};
pub use crowns::WeakCrown;
pub use maps::{MapKind, PosetMap};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// Row-major `n * n`; `leq[x * n + y]` iff `x <= y`.
    leq: Vec<bool>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    min_set: Vec<usize>,
    max_set: Vec<usize>,
    length: usize,
    strict_pairs: Vec<(usize, usize)>,
    pair_index: Vec<Option<usize>>,
}

impl Poset {
    /// Builds the poset generated by `relations` (pairs `(a, b)` meaning `a < b`).
    pub fn from_relations(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(j) = seen.insert(name.as_str(), i) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate element label {name:?} at positions {j} and {i}"
                )));
            }
        }
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "relation ({a}, {b}) out of range for {n} elements"
                )));
            }
            if a == b {
                return Err(Error::Cycle(names[a].clone(), names[b].clone()));
            }
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::Cycle(names[x].clone(), names[y].clone()));
                }
            }
        }

        let lt = |x: usize, y: usize| x != y && leq[x * n + y];

        // connectivity of the comparability graph
        let mut component = vec![usize::MAX; n];
        let mut stack = vec![0];
        component[0] = 0;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if component[y] == usize::MAX && (lt(x, y) || lt(y, x)) {
                    component[y] = 0;
                    stack.push(y);
                }
            }
        }
        if let Some(y) = component.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Disconnected(names[y].clone(), names[0].clone()));
        }

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        let min_set: Vec<usize> = (0..n).filter(|&x| lower_covers[x].is_empty()).collect();
        let max_set: Vec<usize> = (0..n).filter(|&x| upper_covers[x].is_empty()).collect();

        // height[x] = longest chain ending at x, filled in order of |down-set|
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&w| lt(w, x)).count());
        let mut height = vec![0usize; n];
        for &x in &order {
            height[x] = lower_covers[x]
                .iter()
                .map(|&w| height[w] + 1)
                .max()
                .unwrap_or(0);
        }
        let length = height.iter().copied().max().unwrap_or(0);

        let mut strict_pairs = Vec::new();
        let mut pair_index = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) {
                    pair_index[x * n + y] = Some(strict_pairs.len());
                    strict_pairs.push((x, y));
                }
            }
        }

        Ok(Poset {
            names,
            leq,
            upper_covers,
            lower_covers,
            min_set,
            max_set,
            length,
            strict_pairs,
            pair_index,
        })
    }

    /// Like [`Poset::from_relations`], with relations given by label.
    pub fn from_labeled<S: AsRef<str>>(labels: &[S], relations: &[(S, S)]) -> Result<Poset> {
        let names: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown element {s:?}")))
        };
        let rel = relations
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::from_relations(names, &rel)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper_covers[x].contains(&y)
    }

    /// Hasse edges `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn min_set(&self) -> &[usize] {
        &self.min_set
    }

    pub fn max_set(&self) -> &[usize] {
        &self.max_set
    }

    pub fn is_min(&self, x: usize) -> bool {
        self.lower_covers[x].is_empty()
    }

    pub fn is_max(&self, x: usize) -> bool {
        self.upper_covers[x].is_empty()
    }

    /// Neither minimal nor maximal.
    pub fn is_interior(&self, x: usize) -> bool {
        !self.is_min(x) && !self.is_max(x)
    }

    /// Maximum length `|C| - 1` over all chains `C`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// The basis `B = {e_xy : x < y}`, sorted by `(x, y)`.
    pub fn strict_pairs(&self) -> &[(usize, usize)] {
        &self.strict_pairs
    }

    pub fn num_strict_pairs(&self) -> usize {
        self.strict_pairs.len()
    }

    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        self.pair_index[x * self.len() + y]
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.strict_pairs[i]
    }

    /// Number of elements strictly below `x`.
    pub fn down_degree(&self, x: usize) -> usize {
        (0..self.len()).filter(|&w| self.lt(w, x)).count()
    }

    /// Number of elements strictly above `x`.
    pub fn up_degree(&self, x: usize) -> usize {
        (0..self.len()).filter(|&w| self.lt(x, w)).count()
    }

    pub fn pair_label(&self, (x, y): (usize, usize)) -> String {
        format!("{}<{}", self.names[x], self.names[y])
    }

    /// Serializes in the `poset v1` text format, listing the cover relations.
    pub fn to_text(&self) -> String {
        let relations: Vec<String> = self
            .covers()
            .into_iter()
            .map(|p| self.pair_label(p))
            .collect();
        format!(
            "poset v1\nelements: {}\nrelations: {}\n",
            self.names.join(" "),
            relations.join(" ")
        )
    }

    pub fn parse(text: &str) -> Result<Poset> {
        parse::parse_poset(text)
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poset> {
        Poset::parse(s)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn closure_and_caches() {
        let p = Poset::from_relations(labels(3), &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.strict_pairs(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(p.min_set(), &[0]);
        assert_eq!(p.max_set(), &[2]);
        assert_eq!(p.length(), 2);
        assert_eq!(p.pair_index(1, 2), Some(2));
        assert_eq!(p.pair_index(2, 1), None);
    }

    #[test]
    fn singleton() {
        let p = Poset::from_relations(labels(1), &[]).unwrap();
        assert_eq!(p.length(), 0);
        assert_eq!(p.min_set(), p.max_set());
        assert_eq!(p.num_strict_pairs(), 0);
    }

    #[test]
    fn rejects_cycles_and_disconnection() {
        assert!(matches!(
            Poset::from_relations(labels(2), &[(0, 1), (1, 0)]),
            Err(Error::Cycle(..))
        ));
        assert!(matches!(
            Poset::from_relations(labels(3), &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cycle(..))
        ));
        assert!(matches!(
            Poset::from_relations(labels(2), &[]),
            Err(Error::Disconnected(..))
        ));
        assert_eq!(Poset::from_relations(vec![], &[]), Err(Error::Empty));
    }

    #[test]
    fn min_and_max_disjoint_when_connected() {
        let p = Poset::from_relations(labels(4), &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert!(p.min_set().iter().all(|x| !p.max_set().contains(x)));
    }
}
