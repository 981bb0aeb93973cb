//! The linked relation on maximal chains, its equivalence classes and
//! supports, and the properness decision.

use serde::Serialize;

use crate::bijection::{Analyzer, Direction, EdgeBijection, EnumerationOptions};
use crate::error::{Error, Result};
use crate::poset::{MapKind, MaximalChain, Poset};

/// Whether `C` and `D` share an element outside `Min(X) ∪ Max(X)`.
pub fn linked(poset: &Poset, c: &MaximalChain, d: &MaximalChain) -> bool {
    c.elements()
        .iter()
        .any(|&x| poset.is_interior(x) && d.contains(x))
}

/// One class of maximal chains under the equivalence generated by [`linked`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainClass {
    /// Indices into `Poset::maximal_chains`, ascending.
    pub chains: Vec<usize>,
    /// Union of the member chains, ascending.
    pub support: Vec<usize>,
}

/// Classes ordered by their least chain, with chains in `Poset::maximal_chains` order.
pub fn chain_classes(poset: &Poset, chains: &[MaximalChain]) -> Vec<ChainClass> {
    let n = chains.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if linked(poset, &chains[i], &chains[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<ChainClass> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(ChainClass {
                chains: Vec::new(),
                support: Vec::new(),
            });
        }
        let class = &mut classes[slot[root]];
        class.chains.push(i);
        class.support.extend_from_slice(chains[i].elements());
    }
    for class in &mut classes {
        class.support.sort_unstable();
        class.support.dedup();
    }
    classes
}

#[derive(Serialize)]
struct ClassJson {
    chains: Vec<Vec<String>>,
    support: Vec<String>,
}

#[derive(Serialize)]
struct ClassReportJson {
    classes: Vec<ClassJson>,
}

/// `{"classes": [{"chains": [[labels]], "support": [labels]}]}`.
pub fn class_report_json(poset: &Poset, chains: &[MaximalChain], classes: &[ChainClass]) -> String {
    let report = ClassReportJson {
        classes: classes
            .iter()
            .map(|c| ClassJson {
                chains: c.chains.iter().map(|&i| chains[i].labels(poset)).collect(),
                support: c
                    .support
                    .iter()
                    .map(|&x| poset.name(x).to_owned())
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string(&report).expect("serializable")
}

/// An (anti-)isomorphism between the supports of a class and its image class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportMap {
    pub class: usize,
    pub target: usize,
    pub kind: MapKind,
    /// `(x, λ(x))` for `x` in the source support, ascending in `x`.
    pub map: Vec<(usize, usize)>,
}

/// Result of comparing the admissible monotone bijections with the proper ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub all_proper: bool,
    pub counterexample: Option<EdgeBijection>,
    pub am_order: usize,
    pub p_order: usize,
    pub class_count: usize,
}

impl Verdict {
    /// All maximal chains equivalent, which already forces every Lie automorphism to be proper.
    pub fn single_class(&self) -> bool {
        self.class_count == 1
    }

    pub fn to_json(&self, poset: &Poset) -> String {
        #[derive(Serialize)]
        struct V {
            all_proper: bool,
            am_order: usize,
            p_order: usize,
            class_count: usize,
            single_class_sufficient: bool,
            counterexample: Option<Vec<[[usize; 2]; 2]>>,
        }
        serde_json::to_string(&V {
            all_proper: self.all_proper,
            am_order: self.am_order,
            p_order: self.p_order,
            class_count: self.class_count,
            single_class_sufficient: self.single_class(),
            counterexample: self.counterexample.as_ref().map(|t| t.json_pairs(poset)),
        })
        .expect("serializable")
    }
}

impl Analyzer<'_> {
    pub fn chain_classes(&self) -> Vec<ChainClass> {
        chain_classes(self.poset(), self.chains())
    }

    /// `θ̃` on classes, checking that it is well defined, bijective and of
    /// constant direction on each class.
    pub fn induced_class_map(&self, theta: &EdgeBijection) -> Result<Vec<usize>> {
        let classes = self.chain_classes();
        self.class_map_with(theta, &classes).map(|(m, _)| m)
    }

    fn class_map_with(
        &self,
        theta: &EdgeBijection,
        classes: &[ChainClass],
    ) -> Result<(Vec<usize>, Vec<Direction>)> {
        let images = self.chain_images(theta)?;
        let directions = self.directions(theta);
        let chains = self.chains();
        let mut class_of = vec![0; chains.len()];
        for (k, class) in classes.iter().enumerate() {
            for &i in &class.chains {
                class_of[i] = k;
            }
        }
        let mut map = vec![usize::MAX; classes.len()];
        let mut dirs = vec![Direction::Both; classes.len()];
        for (i, image) in images.iter().enumerate() {
            let j = chains
                .binary_search(image)
                .expect("image of a maximal chain is maximal");
            let (a, b) = (class_of[i], class_of[j]);
            if map[a] == usize::MAX {
                map[a] = b;
            } else if map[a] != b {
                return Err(Error::WellDefinedness(format!(
                    "chains of class {a} map into classes {} and {b}",
                    map[a]
                )));
            }
            match (dirs[a], directions[i]) {
                (_, Direction::Both) => {}
                (Direction::Both, d) => dirs[a] = d,
                (d, e) if d != e => {
                    return Err(Error::WellDefinedness(format!(
                        "direction is not constant on class {a}"
                    )));
                }
                _ => {}
            }
        }
        let mut hit = vec![false; classes.len()];
        if map.iter().any(|&b| std::mem::replace(&mut hit[b], true)) {
            return Err(Error::WellDefinedness("class map is not injective".into()));
        }
        Ok((map, dirs))
    }

    /// For each class, the map `λ` between supports read off position-wise
    /// from chains and their images, verified to be an (anti-)isomorphism
    /// that induces `θ` on the support.
    pub fn support_maps(&self, theta: &EdgeBijection) -> Result<Vec<SupportMap>> {
        let p = self.poset();
        let classes = self.chain_classes();
        let (class_map, dirs) = self.class_map_with(theta, &classes)?;
        let images = self.chain_images(theta)?;
        let mut out = Vec::new();
        for (k, class) in classes.iter().enumerate() {
            let target = &classes[class_map[k]];
            if class.support.len() != target.support.len() {
                return Err(Error::Extraction(format!(
                    "supports of sizes {} and {} cannot be (anti-)isomorphic",
                    class.support.len(),
                    target.support.len()
                )));
            }
            let kind = if dirs[k] == Direction::Decreasing {
                MapKind::AntiIso
            } else {
                MapKind::Iso
            };
            let mut lambda = vec![usize::MAX; p.len()];
            for &i in &class.chains {
                let u = self.chains()[i].elements();
                let v = images[i].elements();
                let m = u.len();
                for (pos, &x) in u.iter().enumerate() {
                    let y = if kind == MapKind::Iso {
                        v[pos]
                    } else {
                        v[m - 1 - pos]
                    };
                    if lambda[x] != usize::MAX && lambda[x] != y {
                        return Err(Error::Extraction(format!(
                            "{} is sent to both {} and {}",
                            p.name(x),
                            p.name(lambda[x]),
                            p.name(y)
                        )));
                    }
                    lambda[x] = y;
                }
            }
            let mut image: Vec<usize> = class.support.iter().map(|&x| lambda[x]).collect();
            image.sort_unstable();
            if image != target.support {
                return Err(Error::Extraction(
                    "λ is not a bijection between the supports".into(),
                ));
            }
            for &x in &class.support {
                for &y in &class.support {
                    let (a, b) = match kind {
                        MapKind::Iso => (lambda[x], lambda[y]),
                        MapKind::AntiIso => (lambda[y], lambda[x]),
                    };
                    if p.leq(x, y) != p.leq(a, b) {
                        return Err(Error::Extraction(format!(
                            "λ is not an {kind} on {}, {}",
                            p.name(x),
                            p.name(y)
                        )));
                    }
                    if p.lt(x, y) && theta.image_pair(p, (x, y)) != (a, b) {
                        return Err(Error::Extraction(format!(
                            "θ differs from the map induced by λ on {}",
                            p.pair_label((x, y))
                        )));
                    }
                }
            }
            out.push(SupportMap {
                class: k,
                target: class_map[k],
                kind,
                map: class.support.iter().map(|&x| (x, lambda[x])).collect(),
            });
        }
        Ok(out)
    }

    /// Compares `AM(X)` with `P(X)` as sets.
    pub fn decide_all_proper(&self, opts: &EnumerationOptions) -> Result<Verdict> {
        let am = self.enumerate_am(opts)?;
        let p = self.enumerate_p();
        // both lists are sorted, and P is contained in AM
        let counterexample = am.iter().find(|t| p.binary_search(t).is_err()).cloned();
        Ok(Verdict {
            all_proper: counterexample.is_none() && am.len() == p.len(),
            counterexample,
            am_order: am.len(),
            p_order: p.len(),
            class_count: self.chain_classes().len(),
        })
    }
}
