//! Brute-force reference computations written directly from the definitions.
//! They only read the order relation of a `Poset` and never call the
//! library's chain, crown, enumeration or algebra code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use incidence_lie::Poset;
use itertools::Itertools;

pub struct Oracle<'p> {
    pub p: &'p Poset,
    pub pairs: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    pub chains: Vec<Vec<usize>>,
}

impl<'p> Oracle<'p> {
    pub fn new(p: &'p Poset) -> Oracle<'p> {
        let n = p.len();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if p.lt(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        // the library orders B the same way; the index map below makes the
        // oracle independent of that choice anyway
        let index = pairs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut chains = Vec::new();
        for x in 0..n {
            if (0..n).all(|w| !p.lt(w, x)) {
                extend(p, &mut vec![x], &mut chains);
            }
        }
        chains.sort();
        Oracle {
            p,
            pairs,
            index,
            chains,
        }
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.p.lt(x, y) && (0..self.p.len()).all(|z| !(self.p.lt(x, z) && self.p.lt(z, y)))
    }

    pub fn idx(&self, e: (usize, usize)) -> usize {
        self.index[&e]
    }

    pub fn is_min(&self, x: usize) -> bool {
        (0..self.p.len()).all(|w| !self.p.lt(w, x))
    }

    pub fn is_max(&self, x: usize) -> bool {
        (0..self.p.len()).all(|w| !self.p.lt(x, w))
    }

    /// `θ` as a permutation in the library's pair order, re-expressed in the
    /// oracle's order.
    pub fn lift(&self, perm: &[usize]) -> Vec<usize> {
        let lib = self.p.strict_pairs();
        let mut out = vec![0; self.pairs.len()];
        for (i, &j) in perm.iter().enumerate() {
            out[self.idx(lib[i])] = self.idx(lib[j]);
        }
        out
    }

    pub fn img(&self, theta: &[usize], e: (usize, usize)) -> (usize, usize) {
        self.pairs[theta[self.idx(e)]]
    }

    /// Image chain of `c` under `θ` with its orientation, if `θ` is increasing
    /// (`Some(false)`) or decreasing (`Some(true)`) on it.
    fn direction_on(&self, theta: &[usize], c: &[usize]) -> Vec<bool> {
        let m = c.len();
        let mut out = Vec::new();
        for d in self.chains.iter().filter(|d| d.len() == m) {
            let inc =
                (0..m).all(|i| (i + 1..m).all(|j| self.img(theta, (c[i], c[j])) == (d[i], d[j])));
            let dec = (0..m).all(|i| {
                (i + 1..m).all(|j| self.img(theta, (c[i], c[j])) == (d[m - 1 - j], d[m - 1 - i]))
            });
            if inc {
                out.push(false);
            }
            if dec {
                out.push(true);
            }
        }
        out
    }

    pub fn monotone(&self, theta: &[usize]) -> bool {
        self.chains
            .iter()
            .all(|c| !self.direction_on(theta, c).is_empty())
    }

    /// `(s+, s-, t+, t-)` at `z` along the closed sequence `walk`.
    pub fn stats(&self, theta: &[usize], walk: &[usize], z: usize) -> (usize, usize, usize, usize) {
        let n = self.p.len();
        let (mut sp, mut sm, mut tp, mut tm) = (0, 0, 0, 0);
        for s in walk.windows(2) {
            let (a, b) = (s[0], s[1]);
            let up = self.p.lt(a, b);
            let edge = if up { (a, b) } else { (b, a) };
            let from_z = (0..n).any(|w| self.p.lt(z, w) && self.img(theta, (z, w)) == edge);
            let into_z = (0..n).any(|w| self.p.lt(w, z) && self.img(theta, (w, z)) == edge);
            match (up, from_z, into_z) {
                (true, true, _) => sp += 1,
                (false, true, _) => sm += 1,
                _ => {}
            }
            match (up, into_z) {
                (true, true) => tp += 1,
                (false, true) => tm += 1,
                _ => {}
            }
        }
        (sp, sm, tp, tm)
    }

    pub fn balanced_on(&self, theta: &[usize], walk: &[usize]) -> bool {
        (0..self.p.len()).all(|z| {
            let (sp, sm, tp, tm) = self.stats(theta, walk, z);
            sp as i64 - sm as i64 == tp as i64 - tm as i64
        })
    }

    /// Closed walks along covers with `2..=max_steps` steps.
    pub fn closed_walks(&self, max_steps: usize) -> Vec<Vec<usize>> {
        let n = self.p.len();
        let nb: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| self.covers(x, y) || self.covers(y, x))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        fn go(nb: &[Vec<usize>], path: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            let steps = path.len() - 1;
            if steps >= 2 && path[0] == path[steps] {
                out.push(path.clone());
            }
            if steps == max {
                return;
            }
            for &y in &nb[path[steps]] {
                path.push(y);
                go(nb, path, max, out);
                path.pop();
            }
        }
        for x in 0..n {
            go(&nb, &mut vec![x], max_steps, &mut out);
        }
        out
    }

    /// Same test as [`Oracle::balanced_on`] for every walk. `θ` is a
    /// bijection, so each walk edge has exactly one preimage `e_ab`, which
    /// contributes to `s` at `a` and to `t` at `b`.
    pub fn admissible(&self, theta: &[usize], walks: &[Vec<usize>]) -> bool {
        let mut inverse = vec![0; theta.len()];
        for (i, &j) in theta.iter().enumerate() {
            inverse[j] = i;
        }
        let n = self.p.len();
        let mut balance = vec![0i64; n];
        walks.iter().all(|w| {
            balance.iter_mut().for_each(|b| *b = 0);
            for s in w.windows(2) {
                let up = self.p.lt(s[0], s[1]);
                let edge = if up { (s[0], s[1]) } else { (s[1], s[0]) };
                let (a, b) = self.pairs[inverse[self.idx(edge)]];
                let sign = if up { 1 } else { -1 };
                balance[a] += sign;
                balance[b] -= sign;
            }
            balance.iter().all(|&b| b == 0)
        })
    }

    /// All `(λ, anti)` with `λ` an order automorphism or anti-automorphism.
    pub fn poset_maps(&self) -> Vec<(Vec<usize>, bool)> {
        let n = self.p.len();
        let mut out = Vec::new();
        for perm in (0..n).permutations(n) {
            let iso = self.pairs.iter().all(|&(x, y)| self.p.lt(perm[x], perm[y]));
            let anti = self.pairs.iter().all(|&(x, y)| self.p.lt(perm[y], perm[x]));
            if iso {
                out.push((perm.clone(), false));
            }
            if anti {
                out.push((perm, true));
            }
        }
        out
    }

    pub fn induced(&self, lambda: &[usize], anti: bool) -> Vec<usize> {
        self.pairs
            .iter()
            .map(|&(x, y)| {
                let e = if anti {
                    (lambda[y], lambda[x])
                } else {
                    (lambda[x], lambda[y])
                };
                self.idx(e)
            })
            .collect()
    }

    pub fn proper_set(&self) -> BTreeSet<Vec<usize>> {
        self.poset_maps()
            .iter()
            .map(|(l, a)| self.induced(l, *a))
            .collect()
    }

    pub fn is_separating(&self, theta: &[usize]) -> bool {
        let image = |c: &[usize]| -> BTreeSet<usize> {
            c.windows(2)
                .flat_map(|w| {
                    let (u, v) = self.img(theta, (w[0], w[1]));
                    [u, v]
                })
                .collect()
        };
        let disjoint = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| a.is_disjoint(b);
        self.chains.iter().enumerate().any(|(i, c)| {
            self.chains[i + 1..].iter().any(|d| {
                let (sc, sd): (BTreeSet<usize>, BTreeSet<usize>) =
                    (c.iter().copied().collect(), d.iter().copied().collect());
                !disjoint(&sc, &sd) && disjoint(&image(c), &image(d))
            })
        })
    }

    /// Supports of the classes generated by sharing an element outside
    /// `Min ∪ Max`, as sorted label lists.
    pub fn class_supports(&self) -> Vec<Vec<String>> {
        let k = self.chains.len();
        let mut class: Vec<usize> = (0..k).collect();
        let linked = |a: &[usize], b: &[usize]| {
            a.iter()
                .any(|x| b.contains(x) && !self.is_min(*x) && !self.is_max(*x))
        };
        loop {
            let mut changed = false;
            for i in 0..k {
                for j in 0..k {
                    if linked(&self.chains[i], &self.chains[j]) && class[j] > class[i] {
                        class[j] = class[i];
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut supports: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for (i, c) in self.chains.iter().enumerate() {
            supports
                .entry(class[i])
                .or_default()
                .extend(c.iter().copied());
        }
        supports
            .values()
            .map(|s| s.iter().map(|&x| self.p.name(x).to_owned()).collect())
            .collect()
    }
}

fn extend(p: &Poset, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    let n = p.len();
    let covers: Vec<usize> = (0..n)
        .filter(|&y| p.lt(last, y) && (0..n).all(|z| !(p.lt(last, z) && p.lt(z, y))))
        .collect();
    if covers.is_empty() {
        out.push(path.clone());
        return;
    }
    for y in covers {
        path.push(y);
        extend(p, path, out);
        path.pop();
    }
}

/// All permutations of `0..n` as vectors.
pub fn all_bijections(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// `r` of order `2n`, `s` of order 2 with `s r s = r^{-1}` generating a group of order `4n`.
pub fn dihedral(group: &BTreeSet<Vec<usize>>, n: usize) -> bool {
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
    let order = |a: &[usize]| -> usize {
        let id: Vec<usize> = (0..a.len()).collect();
        let mut x = a.to_vec();
        let mut k = 1;
        while x != id {
            x = compose(a, &x);
            k += 1;
        }
        k
    };
    if group.len() != 4 * n {
        return false;
    }
    let inverse = |a: &[usize]| -> Vec<usize> {
        let mut inv = vec![0; a.len()];
        for (i, &j) in a.iter().enumerate() {
            inv[j] = i;
        }
        inv
    };
    for r in group.iter().filter(|r| order(r) == 2 * n) {
        for s in group.iter().filter(|s| order(s) == 2) {
            if compose(&compose(s, r), s) != inverse(r) {
                continue;
            }
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut frontier = vec![(0..r.len()).collect::<Vec<_>>()];
            while let Some(x) = frontier.pop() {
                if seen.insert(x.clone()) {
                    frontier.push(compose(r, &x));
                    frontier.push(compose(s, &x));
                }
            }
            if seen.len() == 4 * n {
                return true;
            }
        }
    }
    false
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        for i in r + 1..rows.len() {
            for j in c + 1..ncols {
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        r += 1;
    }
    r
}
