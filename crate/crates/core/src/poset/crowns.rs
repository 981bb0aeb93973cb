use super::{Poset, Semiwalk};

/// A weak `k`-crown `x_1 < y_1 > x_2 < y_2 > ... < y_k > x_1` on `2k` distinct
/// elements, stored in canonical form: the lexicographically smallest
/// `(mins, maxs)` over all rotations and both orientations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakCrown {
    mins: Vec<usize>,
    maxs: Vec<usize>,
}

impl WeakCrown {
    /// Canonicalizes an alternating cycle. Returns `None` unless the defining
    /// relations hold on `2k >= 4` distinct elements.
    pub fn new(poset: &Poset, mins: Vec<usize>, maxs: Vec<usize>) -> Option<WeakCrown> {
        let k = mins.len();
        if k < 2 || maxs.len() != k {
            return None;
        }
        let mut all: Vec<usize> = mins.iter().chain(&maxs).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * k {
            return None;
        }
        let holds =
            (0..k).all(|i| poset.lt(mins[i], maxs[i]) && poset.lt(mins[(i + 1) % k], maxs[i]));
        holds.then(|| WeakCrown { mins, maxs }.canonical())
    }

    fn canonical(&self) -> WeakCrown {
        let k = self.mins.len();
        // x_1 < y_k > x_k < y_{k-1} > ... > x_2 < y_1 > x_1
        let rev_mins: Vec<usize> = (0..k).map(|i| self.mins[(k - i) % k]).collect();
        let rev_maxs: Vec<usize> = (0..k).map(|i| self.maxs[k - 1 - i]).collect();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for (mins, maxs) in [(&self.mins, &self.maxs), (&rev_mins, &rev_maxs)] {
            for r in 0..k {
                let cand = (
                    (0..k).map(|i| mins[(i + r) % k]).collect::<Vec<_>>(),
                    (0..k).map(|i| maxs[(i + r) % k]).collect::<Vec<_>>(),
                );
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let (mins, maxs) = best.unwrap();
        WeakCrown { mins, maxs }
    }

    pub fn size(&self) -> usize {
        self.mins.len()
    }

    pub fn mins(&self) -> &[usize] {
        &self.mins
    }

    pub fn maxs(&self) -> &[usize] {
        &self.maxs
    }

    /// The closed semiwalk `x_1, y_1, x_2, y_2, ..., x_k, y_k, x_1`.
    pub fn to_semiwalk(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .mins
            .iter()
            .zip(&self.maxs)
            .flat_map(|(&x, &y)| [x, y])
            .collect();
        v.push(self.mins[0]);
        v
    }

    pub fn as_semiwalk(&self, poset: &Poset) -> Semiwalk {
        Semiwalk::new(poset, self.to_semiwalk()).expect("crown is a semiwalk")
    }
}

impl Poset {
    /// All weak crowns of every size, canonicalized and sorted.
    pub fn weak_crowns(&self) -> Vec<WeakCrown> {
        let n = self.len();
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut mins = Vec::new();
        let mut maxs = Vec::new();

        // x_1 is the smallest min index in canonical form; other mins must exceed it.
        fn grow(
            p: &Poset,
            used: &mut [bool],
            mins: &mut Vec<usize>,
            maxs: &mut Vec<usize>,
            out: &mut Vec<WeakCrown>,
        ) {
            let n = p.len();
            let first = mins[0];
            let last_min = *mins.last().unwrap();
            for y in 0..n {
                if used[y] || !p.lt(last_min, y) {
                    continue;
                }
                used[y] = true;
                maxs.push(y);
                if mins.len() >= 2 && p.lt(first, y) {
                    let c = WeakCrown {
                        mins: mins.clone(),
                        maxs: maxs.clone(),
                    };
                    if c.canonical() == c {
                        out.push(c);
                    }
                }
                if 2 * mins.len() + 2 <= n {
                    for x in first + 1..n {
                        if !used[x] && p.lt(x, y) {
                            used[x] = true;
                            mins.push(x);
                            grow(p, used, mins, maxs, out);
                            mins.pop();
                            used[x] = false;
                        }
                    }
                }
                maxs.pop();
                used[y] = false;
            }
        }

        for x in 0..n {
            used[x] = true;
            mins.push(x);
            grow(self, &mut used, &mut mins, &mut maxs, &mut out);
            mins.pop();
            used[x] = false;
        }
        out.sort();
        out
    }

    /// No weak crown subposet.
    pub fn is_crownless(&self) -> bool {
        self.weak_crowns().is_empty()
    }
}
