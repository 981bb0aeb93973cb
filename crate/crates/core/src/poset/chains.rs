use std::ops::ControlFlow;

use super::Poset;
use crate::error::{Error, Result};

/// A maximal chain `u_1 < u_2 < ... < u_m`, stored as increasing element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalChain {
    elements: Vec<usize>,
}

impl MaximalChain {
    /// Validates that `elements` is a maximal chain of `poset`.
    pub fn new(poset: &Poset, elements: Vec<usize>) -> Result<MaximalChain> {
        let ok = !elements.is_empty()
            && poset.is_min(elements[0])
            && poset.is_max(*elements.last().unwrap())
            && elements.windows(2).all(|w| poset.is_cover(w[0], w[1]));
        if ok {
            Ok(MaximalChain { elements })
        } else {
            Err(Error::InvalidParameter(format!(
                "{elements:?} is not a maximal chain"
            )))
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }

    pub fn max(&self) -> usize {
        *self.elements.last().unwrap()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == x)
    }

    pub fn is_disjoint(&self, other: &MaximalChain) -> bool {
        !self.elements.iter().any(|&x| other.contains(x))
    }

    /// All `(u_i, u_j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let e = &self.elements;
        (0..e.len()).flat_map(move |i| (i + 1..e.len()).map(move |j| (e[i], e[j])))
    }

    /// All position pairs `(i, j)` with `i < j`.
    pub fn pairs_by_position(&self) -> impl Iterator<Item = (usize, usize)> {
        let m = self.elements.len();
        (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
    }

    pub fn labels(&self, poset: &Poset) -> Vec<String> {
        self.elements
            .iter()
            .map(|&x| poset.name(x).to_owned())
            .collect()
    }
}

impl Poset {
    /// All maximal chains, sorted lexicographically by element index.
    pub fn maximal_chains(&self) -> Vec<MaximalChain> {
        fn extend(p: &Poset, path: &mut Vec<usize>, out: &mut Vec<MaximalChain>) {
            let top = *path.last().unwrap();
            if p.is_max(top) {
                out.push(MaximalChain {
                    elements: path.clone(),
                });
                return;
            }
            for &y in p.upper_covers(top) {
                path.push(y);
                extend(p, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        for &m in self.min_set() {
            extend(self, &mut vec![m], &mut out);
        }
        out.sort();
        out
    }
}

/// A sequence `u_0, ..., u_m` whose consecutive terms are distinct and comparable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semiwalk {
    vertices: Vec<usize>,
}

impl Semiwalk {
    pub fn new(poset: &Poset, vertices: Vec<usize>) -> Result<Semiwalk> {
        if vertices.is_empty() {
            return Err(Error::InvalidParameter("empty semiwalk".into()));
        }
        if let Some(w) = vertices
            .windows(2)
            .find(|w| w[0] == w[1] || !poset.comparable(w[0], w[1]))
        {
            return Err(Error::InvalidParameter(format!(
                "semiwalk step {} - {} joins incomparable or equal elements",
                poset.name(w[0]),
                poset.name(w[1])
            )));
        }
        Ok(Semiwalk { vertices })
    }

    /// Parses `a<b>c<...` using element labels.
    pub fn parse(poset: &Poset, text: &str) -> Result<Semiwalk> {
        let mut vertices = Vec::new();
        let mut expected = Vec::new();
        let mut label = String::new();
        let flush = |label: &mut String, vertices: &mut Vec<usize>| -> Result<()> {
            let x = poset
                .index_of(label.trim())
                .ok_or_else(|| Error::InvalidParameter(format!("unknown element {label:?}")))?;
            vertices.push(x);
            label.clear();
            Ok(())
        };
        for c in text.chars() {
            if c == '<' || c == '>' {
                flush(&mut label, &mut vertices)?;
                expected.push(c);
            } else {
                label.push(c);
            }
        }
        flush(&mut label, &mut vertices)?;
        for (i, dir) in expected.iter().enumerate() {
            let (a, b) = (vertices[i], vertices[i + 1]);
            let ok = if *dir == '<' {
                poset.lt(a, b)
            } else {
                poset.lt(b, a)
            };
            if !ok {
                return Err(Error::InvalidParameter(format!(
                    "{}{}{} does not hold",
                    poset.name(a),
                    dir,
                    poset.name(b)
                )));
            }
        }
        Semiwalk::new(poset, vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps `m`.
    pub fn steps(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() > 1 && self.vertices[0] == *self.vertices.last().unwrap()
    }

    /// For a closed semiwalk, the same cycle started at step `k`.
    pub fn rotated(&self, k: usize) -> Semiwalk {
        debug_assert!(self.is_closed());
        let m = self.steps();
        let vertices = (0..=m).map(|i| self.vertices[(i + k) % m]).collect();
        Semiwalk { vertices }
    }

    pub fn reversed(&self) -> Semiwalk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Semiwalk { vertices }
    }

    /// Removes `u_{k+1}, ..., u_{k+l-1}` when `u_k, ..., u_{k+l}` is a strictly
    /// monotone run. Returns `None` if the run is not monotone or `l < 2`.
    pub fn collapse_run(&self, poset: &Poset, k: usize, l: usize) -> Option<Semiwalk> {
        if l < 2 || k + l > self.steps() {
            return None;
        }
        let run = &self.vertices[k..=k + l];
        let up = run.windows(2).all(|w| poset.lt(w[0], w[1]));
        let down = run.windows(2).all(|w| poset.lt(w[1], w[0]));
        if !(up || down) {
            return None;
        }
        let mut vertices = self.vertices[..=k].to_vec();
        vertices.extend_from_slice(&self.vertices[k + l..]);
        Some(Semiwalk { vertices })
    }

    pub fn labels(&self, poset: &Poset) -> String {
        let mut s = poset.name(self.vertices[0]).to_owned();
        for w in self.vertices.windows(2) {
            s.push(if poset.lt(w[0], w[1]) { '<' } else { '>' });
            s.push_str(poset.name(w[1]));
        }
        s
    }
}

/// Visits every closed semiwalk with `2 <= m <= max_steps` steps, as a vertex slice
/// `u_0, ..., u_m` with `u_m = u_0`. Stops early when the visitor breaks.
pub fn for_each_closed_semiwalk<F>(poset: &Poset, max_steps: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = poset.len();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| x != y && poset.comparable(x, y))
                .collect()
        })
        .collect();

    fn dfs<F>(
        neighbours: &[Vec<usize>],
        path: &mut Vec<usize>,
        max_steps: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let steps = path.len() - 1;
        if steps >= 2 && path[0] == path[steps] {
            visit(path)?;
        }
        if steps == max_steps {
            return ControlFlow::Continue(());
        }
        let last = path[steps];
        for &y in &neighbours[last] {
            path.push(y);
            let flow = dfs(neighbours, path, max_steps, visit);
            path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    for start in 0..n {
        dfs(&neighbours, &mut vec![start], max_steps, &mut visit)?;
    }
    ControlFlow::Continue(())
}

/// All closed semiwalks of `2..=max_steps` steps, without identification of
/// rotations or reversals.
pub fn closed_semiwalks(poset: &Poset, max_steps: usize) -> Result<Vec<Semiwalk>> {
    if max_steps < 2 {
        return Err(Error::Precondition(format!(
            "closed semiwalks need at least 2 steps, got bound {max_steps}"
        )));
    }
    let mut out = Vec::new();
    let _ = for_each_closed_semiwalk(poset, max_steps, |walk| {
        out.push(Semiwalk {
            vertices: walk.to_vec(),
        });
        ControlFlow::Continue(())
    });
    Ok(out)
}
