use itertools::Itertools;
use rayon::prelude::*;

use super::{Analyzer, EdgeBijection};
use crate::error::{Error, Result};

/// Largest `|B|` for which the exhaustive enumerators run by default.
pub const DEFAULT_BOUND: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest `|B|` accepted by `enumerate_m` and `enumerate_am`.
    pub bound: usize,
    /// Worker threads; `0` is treated as `1`.
    pub jobs: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            bound: DEFAULT_BOUND,
            jobs: 1,
        }
    }
}

impl EnumerationOptions {
    pub fn with_bound(bound: usize) -> Self {
        EnumerationOptions {
            bound,
            ..Default::default()
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// A maximal chain as the list of `(source pair, target pair)` assignments
/// for each admissible choice of image chain and direction.
type Choices = Vec<Vec<(usize, usize)>>;

impl Analyzer<'_> {
    fn check_bound(&self, opts: &EnumerationOptions) -> Result<()> {
        let size = self.poset.num_strict_pairs();
        if size > opts.bound {
            return Err(Error::BoundExceeded {
                size,
                bound: opts.bound,
            });
        }
        Ok(())
    }

    /// All bijections monotone on maximal chains, sorted.
    pub fn enumerate_m(&self, opts: &EnumerationOptions) -> Result<Vec<EdgeBijection>> {
        self.check_bound(opts)?;
        Ok(opts.run(|| self.collect_m(|_| true)))
    }

    /// All admissible monotone bijections, sorted.
    pub fn enumerate_am(&self, opts: &EnumerationOptions) -> Result<Vec<EdgeBijection>> {
        self.check_bound(opts)?;
        Ok(opts.run(|| self.collect_m(|theta| self.admissible_unchecked(&theta.inverse()))))
    }

    /// Restrictions of induced maps of poset (anti-)automorphisms, sorted and deduplicated.
    pub fn enumerate_p(&self) -> Vec<EdgeBijection> {
        let mut out: Vec<EdgeBijection> = self
            .poset
            .poset_maps()
            .iter()
            .map(|lambda| EdgeBijection::from_poset_map(self.poset, lambda))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn collect_m(&self, keep: impl Fn(&EdgeBijection) -> bool + Sync) -> Vec<EdgeBijection> {
        let mut out = if self.poset.length() <= 1 {
            self.collect_symmetric(&keep)
        } else {
            self.collect_by_chains(&keep)
        };
        out.sort();
        out.dedup();
        out
    }

    /// Length at most one: every bijection of `B` is monotone.
    fn collect_symmetric(
        &self,
        keep: &(impl Fn(&EdgeBijection) -> bool + Sync),
    ) -> Vec<EdgeBijection> {
        let k = self.poset.num_strict_pairs();
        if k == 0 {
            return vec![EdgeBijection::identity(0)];
        }
        (0..k)
            .into_par_iter()
            .flat_map_iter(|first| {
                let rest: Vec<usize> = (0..k).filter(|&i| i != first).collect();
                rest.into_iter()
                    .permutations(k - 1)
                    .map(move |tail| {
                        let mut perm = Vec::with_capacity(k);
                        perm.push(first);
                        perm.extend(tail);
                        EdgeBijection { perm }
                    })
                    .filter(|theta| keep(theta))
            })
            .collect()
    }

    fn chain_choices(&self) -> Vec<Choices> {
        let p = self.poset;
        self.chains
            .iter()
            .map(|c| {
                let u = c.elements();
                let m = u.len();
                let mut choices = Vec::new();
                for d in self.chains.iter().filter(|d| d.len() == m) {
                    let v = d.elements();
                    let inc = c.pairs_by_position().map(|(i, j)| {
                        (
                            p.pair_index(u[i], u[j]).unwrap(),
                            p.pair_index(v[i], v[j]).unwrap(),
                        )
                    });
                    choices.push(inc.collect());
                    if m >= 3 {
                        let dec = c.pairs_by_position().map(|(i, j)| {
                            (
                                p.pair_index(u[i], u[j]).unwrap(),
                                p.pair_index(v[m - 1 - j], v[m - 1 - i]).unwrap(),
                            )
                        });
                        choices.push(dec.collect());
                    }
                }
                choices
            })
            .collect()
    }

    /// Assigns each maximal chain an image chain and direction, rejecting
    /// inconsistent or non-injective edge images.
    fn collect_by_chains(
        &self,
        keep: &(impl Fn(&EdgeBijection) -> bool + Sync),
    ) -> Vec<EdgeBijection> {
        let k = self.poset.num_strict_pairs();
        let choices = self.chain_choices();
        if choices.is_empty() {
            return Vec::new();
        }
        let search = |first: usize| {
            let mut state = Assignment::new(k);
            let mut out = Vec::new();
            if state.apply(&choices[0][first]) {
                state.extend(&choices, 1, keep, &mut out);
            }
            out
        };
        (0..choices[0].len())
            .into_par_iter()
            .flat_map_iter(search)
            .collect()
    }
}

struct Assignment {
    image: Vec<Option<usize>>,
    owner: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl Assignment {
    fn new(k: usize) -> Assignment {
        Assignment {
            image: vec![None; k],
            owner: vec![None; k],
            trail: Vec::new(),
        }
    }

    /// Records the assignments, or leaves the state unchanged and returns false on conflict.
    fn apply(&mut self, pairs: &[(usize, usize)]) -> bool {
        let mark = self.trail.len();
        for &(src, dst) in pairs {
            match self.image[src] {
                Some(d) if d == dst => continue,
                Some(_) => {
                    self.undo(mark);
                    return false;
                }
                None if self.owner[dst].is_some() => {
                    self.undo(mark);
                    return false;
                }
                None => {
                    self.image[src] = Some(dst);
                    self.owner[dst] = Some(src);
                    self.trail.push(src);
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let src = self.trail.pop().unwrap();
            let dst = self.image[src].take().unwrap();
            self.owner[dst] = None;
        }
    }

    fn extend(
        &mut self,
        choices: &[Choices],
        depth: usize,
        keep: &impl Fn(&EdgeBijection) -> bool,
        out: &mut Vec<EdgeBijection>,
    ) {
        if depth == choices.len() {
            // every strict pair lies on a maximal chain, so the map is total
            let perm = self.image.iter().map(|i| i.expect("total")).collect();
            let theta = EdgeBijection { perm };
            if keep(&theta) {
                out.push(theta);
            }
            return;
        }
        for choice in &choices[depth] {
            let mark = self.trail.len();
            if self.apply(choice) {
                self.extend(choices, depth + 1, keep, out);
                self.undo(mark);
            }
        }
    }
}
