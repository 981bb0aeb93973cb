use std::fmt;

use serde::{Deserialize, Serialize};

use super::Poset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MapKind {
    Iso,
    AntiIso,
}

impl MapKind {
    pub fn compose(self, other: MapKind) -> MapKind {
        if self == other {
            MapKind::Iso
        } else {
            MapKind::AntiIso
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::Iso => "iso",
            MapKind::AntiIso => "anti-iso",
        })
    }
}

/// An automorphism or anti-automorphism `λ` of a poset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetMap {
    perm: Vec<usize>,
    kind: MapKind,
}

impl PosetMap {
    pub fn new(poset: &Poset, perm: Vec<usize>, kind: MapKind) -> Result<PosetMap> {
        let n = poset.len();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
        {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of {n} elements"
            )));
        }
        let map = PosetMap { perm, kind };
        if !map.respects(poset) {
            return Err(Error::InvalidParameter(format!(
                "{:?} is not an {kind} of the poset",
                map.perm
            )));
        }
        Ok(map)
    }

    pub fn identity(poset: &Poset) -> PosetMap {
        PosetMap {
            perm: (0..poset.len()).collect(),
            kind: MapKind::Iso,
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `λ̂(e_xy)` on a strict pair: `(λx, λy)` or `(λy, λx)`.
    pub fn image_pair(&self, (x, y): (usize, usize)) -> (usize, usize) {
        match self.kind {
            MapKind::Iso => (self.perm[x], self.perm[y]),
            MapKind::AntiIso => (self.perm[y], self.perm[x]),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PosetMap) -> PosetMap {
        PosetMap {
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
            kind: self.kind.compose(other.kind),
        }
    }

    pub fn inverse(&self) -> PosetMap {
        let mut perm = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            perm[y] = x;
        }
        PosetMap {
            perm,
            kind: self.kind,
        }
    }

    pub fn respects(&self, poset: &Poset) -> bool {
        let n = poset.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (a, b) = match self.kind {
                    MapKind::Iso => (self.perm[x], self.perm[y]),
                    MapKind::AntiIso => (self.perm[y], self.perm[x]),
                };
                poset.leq(x, y) == poset.leq(a, b)
            })
        })
    }
}

impl Poset {
    /// All automorphisms followed by all anti-automorphisms, each group in
    /// lexicographic order of the permutation. A map that is both (only the
    /// identity of a singleton) is listed once, as `Iso`.
    pub fn poset_maps(&self) -> Vec<PosetMap> {
        let mut out = self.search_maps(MapKind::Iso);
        if self.num_strict_pairs() > 0 {
            out.extend(self.search_maps(MapKind::AntiIso));
        }
        out
    }

    pub fn automorphisms(&self) -> Vec<PosetMap> {
        self.search_maps(MapKind::Iso)
    }

    pub fn anti_automorphisms(&self) -> Vec<PosetMap> {
        self.search_maps(MapKind::AntiIso)
    }

    fn search_maps(&self, kind: MapKind) -> Vec<PosetMap> {
        let n = self.len();
        let down: Vec<usize> = (0..n).map(|x| self.down_degree(x)).collect();
        let up: Vec<usize> = (0..n).map(|x| self.up_degree(x)).collect();
        // candidate targets must match (down, up) degrees, swapped for anti-maps
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&t| match kind {
                        MapKind::Iso => down[t] == down[x] && up[t] == up[x],
                        MapKind::AntiIso => down[t] == up[x] && up[t] == down[x],
                    })
                    .collect()
            })
            .collect();

        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];

        fn assign(
            p: &Poset,
            kind: MapKind,
            candidates: &[Vec<usize>],
            x: usize,
            perm: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<PosetMap>,
        ) {
            let n = p.len();
            if x == n {
                out.push(PosetMap {
                    perm: perm.clone(),
                    kind,
                });
                return;
            }
            for &t in &candidates[x] {
                if used[t] {
                    continue;
                }
                let consistent = (0..x).all(|w| {
                    let s = perm[w];
                    match kind {
                        MapKind::Iso => p.leq(w, x) == p.leq(s, t) && p.leq(x, w) == p.leq(t, s),
                        MapKind::AntiIso => {
                            p.leq(w, x) == p.leq(t, s) && p.leq(x, w) == p.leq(s, t)
                        }
                    }
                });
                if consistent {
                    perm[x] = t;
                    used[t] = true;
                    assign(p, kind, candidates, x + 1, perm, used, out);
                    used[t] = false;
                }
            }
            perm[x] = usize::MAX;
        }

        assign(self, kind, &candidates, 0, &mut perm, &mut used, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn brute_force(p: &Poset) -> Vec<PosetMap> {
        let mut out = Vec::new();
        for kind in [MapKind::Iso, MapKind::AntiIso] {
            for perm in (0..p.len()).permutations(p.len()) {
                if let Ok(m) = PosetMap::new(p, perm, kind) {
                    if kind == MapKind::AntiIso && p.num_strict_pairs() == 0 {
                        continue;
                    }
                    out.push(m);
                }
            }
        }
        out
    }

    #[test]
    fn k23_has_twelve_automorphisms_and_no_anti() {
        let p = Poset::parse(
            "poset v1\nelements: x1 x2 y1 y2 y3\nrelations: x1<y1 x1<y2 x1<y3 x2<y1 x2<y2 x2<y3\n",
        )
        .unwrap();
        let maps = p.poset_maps();
        assert_eq!(maps.len(), 12);
        assert!(maps.iter().all(|m| m.kind() == MapKind::Iso));
        assert_eq!(maps, brute_force(&p));
    }

    #[test]
    fn two_chain_identity_and_flip() {
        let p = Poset::parse("poset v1\nelements: x y\nrelations: x<y\n").unwrap();
        let maps = p.poset_maps();
        assert_eq!(maps.len(), 2);
        assert_eq!(
            (maps[0].perm(), maps[0].kind()),
            (&[0, 1][..], MapKind::Iso)
        );
        assert_eq!(
            (maps[1].perm(), maps[1].kind()),
            (&[1, 0][..], MapKind::AntiIso)
        );
    }

    #[test]
    fn backtracking_matches_brute_force_on_small_posets() {
        for text in [
            "poset v1\nelements: 1 2 3 4 5 6\nrelations: 1<2 2<4 2<5 1<3 3<5 3<6\n",
            "poset v1\nelements: a b c d\nrelations: a<b c<b c<d\n",
            "poset v1\nelements: a b c d\nrelations: a<b a<c b<d c<d\n",
            "poset v1\nelements: a\nrelations:\n",
        ] {
            let p = Poset::parse(text).unwrap();
            assert_eq!(p.poset_maps(), brute_force(&p), "{text}");
        }
    }

    #[test]
    fn composition_of_kinds() {
        let p = Poset::parse("poset v1\nelements: a b c\nrelations: a<b b<c\n").unwrap();
        let flip = PosetMap::new(&p, vec![2, 1, 0], MapKind::AntiIso).unwrap();
        let id = flip.compose(&flip);
        assert_eq!(id, PosetMap::identity(&p));
        assert_eq!(flip.inverse(), flip);
        assert!(PosetMap::new(&p, vec![2, 1, 0], MapKind::Iso).is_err());
    }
}
