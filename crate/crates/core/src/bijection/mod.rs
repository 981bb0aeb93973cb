//! Bijections `θ: B -> B` of the strict pairs of a poset, and their
//! monotonicity on maximal chains.

mod admissible;
mod enumerate;
mod sigma;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{MaximalChain, Poset, PosetMap, WeakCrown};

pub use admissible::CountStats;
pub use enumerate::{EnumerationOptions, DEFAULT_BOUND};
pub use sigma::SignMap;

/// A permutation of the strict pairs of a poset, in `Poset::strict_pairs` order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeBijection {
    perm: Vec<usize>,
}

impl EdgeBijection {
    pub fn identity(size: usize) -> EdgeBijection {
        EdgeBijection {
            perm: (0..size).collect(),
        }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<EdgeBijection> {
        let mut seen = vec![false; perm.len()];
        if perm
            .iter()
            .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation"
            )));
        }
        Ok(EdgeBijection { perm })
    }

    /// Builds `θ` from its action on pairs.
    pub fn from_fn(
        poset: &Poset,
        mut f: impl FnMut((usize, usize)) -> (usize, usize),
    ) -> Result<EdgeBijection> {
        let perm = poset
            .strict_pairs()
            .iter()
            .map(|&p| {
                let (u, v) = f(p);
                poset.pair_index(u, v).ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "image of {} is not a strict pair",
                        poset.pair_label(p)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        EdgeBijection::from_perm(perm)
    }

    /// `λ̂` restricted to `B`.
    pub fn from_poset_map(poset: &Poset, lambda: &PosetMap) -> EdgeBijection {
        EdgeBijection::from_fn(poset, |p| lambda.image_pair(p))
            .expect("poset maps preserve strict pairs")
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn image_pair(&self, poset: &Poset, (x, y): (usize, usize)) -> (usize, usize) {
        poset.pair(self.perm[poset.pair_index(x, y).expect("strict pair")])
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EdgeBijection) -> EdgeBijection {
        EdgeBijection {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> EdgeBijection {
        let mut perm = vec![0; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j] = i;
        }
        EdgeBijection { perm }
    }

    /// Smallest `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            k += 1;
        }
        k
    }

    /// `[[[x,y],[u,v]], ...]` with element indices.
    pub fn to_json(&self, poset: &Poset) -> String {
        serde_json::to_string(&self.json_pairs(poset)).expect("serializable")
    }

    pub(crate) fn json_pairs(&self, poset: &Poset) -> Vec<[[usize; 2]; 2]> {
        poset
            .strict_pairs()
            .iter()
            .zip(&self.perm)
            .map(|(&(x, y), &j)| {
                let (u, v) = poset.pair(j);
                [[x, y], [u, v]]
            })
            .collect()
    }

    pub fn from_json(poset: &Poset, json: &str) -> Result<EdgeBijection> {
        let pairs: Vec<[[usize; 2]; 2]> = serde_json::from_str(json).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut perm = vec![usize::MAX; poset.num_strict_pairs()];
        for [[x, y], [u, v]] in pairs {
            let (Some(i), Some(j)) = (poset.pair_index(x, y), poset.pair_index(u, v)) else {
                return Err(Error::InvalidParameter(format!(
                    "[[{x},{y}],[{u},{v}]] is not a pair of strict pairs"
                )));
            };
            if perm[i] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "pair [{x},{y}] listed twice"
                )));
            }
            perm[i] = j;
        }
        if perm.contains(&usize::MAX) {
            return Err(Error::InvalidParameter(
                "some strict pair has no image".into(),
            ));
        }
        EdgeBijection::from_perm(perm)
    }

    /// One `a<b -> c<d` per line, using labels.
    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        struct D<'a>(&'a EdgeBijection, &'a Poset);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let (theta, p) = (self.0, self.1);
                for (i, &j) in theta.perm.iter().enumerate() {
                    writeln!(
                        f,
                        "{} -> {}",
                        p.pair_label(p.pair(i)),
                        p.pair_label(p.pair(j))
                    )?;
                }
                Ok(())
            }
        }
        D(self, poset)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Increasing,
    Decreasing,
    /// Two-element chains, where both conditions coincide.
    Both,
    None,
}

impl Direction {
    pub fn is_increasing(self) -> bool {
        matches!(self, Direction::Increasing | Direction::Both)
    }

    pub fn is_decreasing(self) -> bool {
        matches!(self, Direction::Decreasing | Direction::Both)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
            Direction::Both => "both",
            Direction::None => "none",
        })
    }
}

/// A poset with its maximal chains and weak crowns precomputed, for
/// repeated queries about edge bijections.
#[derive(Debug, Clone)]
pub struct Analyzer<'p> {
    poset: &'p Poset,
    chains: Vec<MaximalChain>,
    crowns: Vec<WeakCrown>,
    crown_walks: Vec<Vec<usize>>,
}

impl<'p> Analyzer<'p> {
    pub fn new(poset: &'p Poset) -> Analyzer<'p> {
        let chains = poset.maximal_chains();
        let crowns = poset.weak_crowns();
        let crown_walks = crowns.iter().map(WeakCrown::to_semiwalk).collect();
        Analyzer {
            poset,
            chains,
            crowns,
            crown_walks,
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn chains(&self) -> &[MaximalChain] {
        &self.chains
    }

    pub fn crowns(&self) -> &[WeakCrown] {
        &self.crowns
    }

    pub fn identity(&self) -> EdgeBijection {
        EdgeBijection::identity(self.poset.num_strict_pairs())
    }

    fn check_size(&self, theta: &EdgeBijection) {
        assert_eq!(
            theta.len(),
            self.poset.num_strict_pairs(),
            "bijection acts on a different number of pairs"
        );
    }

    fn img(&self, theta: &EdgeBijection, x: usize, y: usize) -> (usize, usize) {
        theta.image_pair(self.poset, (x, y))
    }

    /// The direction of `θ` on `C` together with the image chain `θ(C)`.
    pub fn monotone_image(
        &self,
        theta: &EdgeBijection,
        chain: &MaximalChain,
    ) -> (Direction, Option<MaximalChain>) {
        self.check_size(theta);
        let p = self.poset;
        let u = chain.elements();
        let m = u.len();
        if m < 2 {
            return (Direction::None, None);
        }
        let (v1, vm) = self.img(theta, u[0], u[m - 1]);
        if m == 2 {
            return match MaximalChain::new(p, vec![v1, vm]) {
                Ok(d) => (Direction::Both, Some(d)),
                Err(_) => (Direction::None, None),
            };
        }

        let mut inc = vec![v1];
        for &ui in &u[1..m - 1] {
            inc.push(self.img(theta, u[0], ui).1);
        }
        inc.push(vm);
        let inc_ok =
            (0..m).all(|i| (i + 1..m).all(|j| self.img(theta, u[i], u[j]) == (inc[i], inc[j])));
        if inc_ok {
            if let Ok(d) = MaximalChain::new(p, inc) {
                return (Direction::Increasing, Some(d));
            }
        }

        let mut dec = vec![v1];
        for k in 2..m {
            dec.push(self.img(theta, u[m - k], u[m - 1]).1);
        }
        dec.push(vm);
        let dec_ok = (0..m).all(|i| {
            (i + 1..m).all(|j| self.img(theta, u[i], u[j]) == (dec[m - 1 - j], dec[m - 1 - i]))
        });
        if dec_ok {
            if let Ok(d) = MaximalChain::new(p, dec) {
                return (Direction::Decreasing, Some(d));
            }
        }
        (Direction::None, None)
    }

    pub fn monotone_direction(&self, theta: &EdgeBijection, chain: &MaximalChain) -> Direction {
        self.monotone_image(theta, chain).0
    }

    /// Whether `θ` is monotone on every maximal chain.
    pub fn in_m(&self, theta: &EdgeBijection) -> bool {
        self.chains
            .iter()
            .all(|c| self.monotone_direction(theta, c) != Direction::None)
    }

    /// Directions of `θ` on every maximal chain, in chain order.
    pub fn directions(&self, theta: &EdgeBijection) -> Vec<Direction> {
        self.chains
            .iter()
            .map(|c| self.monotone_direction(theta, c))
            .collect()
    }

    /// A poset (anti-)automorphism `λ` with `θ = λ̂` on `B`, if any.
    pub fn proper_witness(&self, theta: &EdgeBijection) -> Option<PosetMap> {
        self.check_size(theta);
        self.poset
            .poset_maps()
            .into_iter()
            .find(|lambda| EdgeBijection::from_poset_map(self.poset, lambda) == *theta)
    }

    pub fn is_proper(&self, theta: &EdgeBijection) -> bool {
        self.proper_witness(theta).is_some()
    }

    /// Whether some non-disjoint pair of maximal chains has disjoint images.
    pub fn is_separating(&self, theta: &EdgeBijection) -> Result<bool> {
        let images = self.chain_images(theta)?;
        let n = self.chains.len();
        Ok((0..n).any(|i| {
            (i + 1..n).any(|j| {
                !self.chains[i].is_disjoint(&self.chains[j]) && images[i].is_disjoint(&images[j])
            })
        }))
    }

    /// `θ(C)` for every maximal chain `C`, in chain order.
    pub fn chain_images(&self, theta: &EdgeBijection) -> Result<Vec<MaximalChain>> {
        self.chains
            .iter()
            .map(|c| {
                self.monotone_image(theta, c).1.ok_or_else(|| {
                    Error::Precondition(format!(
                        "bijection is not monotone on {}",
                        c.labels(self.poset).join("<")
                    ))
                })
            })
            .collect()
    }

    pub(crate) fn require_m(&self, theta: &EdgeBijection) -> Result<()> {
        self.chain_images(theta).map(|_| ())
    }

    /// For a length-one poset with `|Min|, |Max| > 1`, the separating
    /// bijection built from two disjoint maximal chains and a path between them.
    pub fn separating_witness(&self) -> Option<EdgeBijection> {
        let p = self.poset;
        if p.length() != 1 || p.min_set().len() < 2 || p.max_set().len() < 2 {
            return None;
        }
        let pairs = p.strict_pairs();
        let (c, d) = pairs.iter().find_map(|&(x, y)| {
            pairs
                .iter()
                .find(|&&(u, v)| u != x && v != y)
                .map(|&(u, v)| ((x, y), (u, v)))
        })?;
        let path = comparability_path(p, c.0, d.0)?;
        // x = x_0 < x_1 > x_2: swap e_{x0 x1} with e_xy and e_{x2 x1} with e_uv
        let (x1, x2) = (path[1], path[2]);
        let mut perm: Vec<usize> = (0..pairs.len()).collect();
        let idx = |a: usize, b: usize| p.pair_index(a, b).expect("strict pair");
        perm.swap(idx(c.0, x1), idx(c.0, c.1));
        let (i, j) = (idx(x2, x1), idx(d.0, d.1));
        perm.swap(i, j);
        let theta = EdgeBijection::from_perm(perm).ok()?;
        matches!(self.is_separating(&theta), Ok(true)).then_some(theta)
    }
}

/// Shortest path from `a` to `b` in the comparability graph.
fn comparability_path(p: &Poset, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = p.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([a]);
    prev[a] = a;
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in (0..n).filter(|&y| p.comparable(x, y) && x != y) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
