//! Named verification blocks. Each block recomputes a family of facts about
//! posets, bijection groups and incidence algebras and reports every mismatch.

use std::ops::ControlFlow;

use crate::bijection::{Analyzer, Direction, EdgeBijection, EnumerationOptions};
use crate::error::{Error, Result};
use crate::families;
use crate::field::Field;
use crate::groups::{crown_parity_witness, dihedral_witness, verify_group};
use crate::incidence::IncidenceAlgebra;
use crate::poset::{for_each_closed_semiwalk, MapKind, Poset, Semiwalk};

/// Block names accepted by [`run_suite`], in criterion order.
pub const SUITES: [&str; 11] = [
    "crowns",
    "dichotomy",
    "bipartite",
    "crownless",
    "example20",
    "example6",
    "oracle",
    "sigma",
    "supports",
    "algebra",
    "properties",
];

/// Largest `|B|` of the posets used by the quantified blocks.
pub const SUITE_MAX_PAIRS: usize = 6;

/// Semiwalk length for the admissibility oracle.
pub const ORACLE_STEPS: usize = 8;

/// Semiwalk length for the shift, reversal and run-collapse checks.
pub const PROPERTY_STEPS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub enumeration: EnumerationOptions,
    pub field: Field,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub criterion: usize,
    pub name: &'static str,
    pub failures: Vec<String>,
    pub summary: String,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Checker {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    fn check(&mut self, cond: bool, message: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(message());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, expected: T) {
        if got != expected {
            self.failures
                .push(format!("{what}: got {got:?}, expected {expected:?}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Resolves a block name or number (`all`, `crowns`, `3`, ...).
pub fn suite_ids(name: &str) -> Result<Vec<usize>> {
    if name == "all" {
        return Ok((1..=SUITES.len()).collect());
    }
    if let Ok(k) = name.parse::<usize>() {
        if (1..=SUITES.len()).contains(&k) {
            return Ok(vec![k]);
        }
    }
    SUITES
        .iter()
        .position(|&s| s == name)
        .map(|i| vec![i + 1])
        .ok_or_else(|| Error::InvalidParameter(format!("unknown verification block {name:?}")))
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    suite_ids(name)?
        .into_iter()
        .map(|k| run_criterion(k, opts))
        .collect()
}

pub fn run_criterion(k: usize, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut c = Checker::default();
    match k {
        1 => crowns(&mut c, opts)?,
        2 => dichotomy(&mut c, opts)?,
        3 => bipartite(&mut c, opts)?,
        4 => crownless(&mut c, opts)?,
        5 => example20(&mut c)?,
        6 => example6(&mut c, opts)?,
        7 => oracle(&mut c, opts)?,
        8 => sigma(&mut c, opts)?,
        9 => supports(&mut c, opts)?,
        10 => algebra(&mut c, opts)?,
        11 => properties(&mut c, opts)?,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "no verification block {k}"
            )))
        }
    }
    Ok(CheckOutcome {
        criterion: k,
        name: SUITES[k - 1],
        failures: c.failures,
        summary: c.notes.join("; "),
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn crowns(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    for n in 2..=3 {
        let p = families::crown(n)?;
        let am = verify_group(Analyzer::new(&p).enumerate_am(&opts.enumeration)?)?;
        c.eq(&format!("|AM(Cr{n})|"), am.order(), 2 * factorial(n).pow(2));
        c.check(crown_parity_witness(&am, n).is_ok(), || {
            format!("parity structure of AM(Cr{n})")
        });
    }
    for n in 2..=5 {
        let p = families::crown(n)?;
        let pg = verify_group(Analyzer::new(&p).enumerate_p())?;
        c.eq(&format!("|P(Cr{n})|"), pg.order(), 4 * n);
        c.check(dihedral_witness(&pg, n), || {
            format!("no dihedral generators for P(Cr{n})")
        });
    }
    c.note("|AM(Cr2)|=8, |AM(Cr3)|=72, |P(Crn)|=4n for n=2..5, dihedral");
    Ok(())
}

fn dichotomy(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    for n in 2..=4 {
        let p = families::crown(n)?;
        let a = Analyzer::new(&p);
        let v = a.decide_all_proper(&opts.enumeration)?;
        c.eq(&format!("all proper for Cr{n}"), v.all_proper, n == 2);
        if let Some(theta) = &v.counterexample {
            c.check(a.is_admissible(theta)? && !a.is_proper(theta), || {
                format!("counterexample for Cr{n} is not in AM \\ P")
            });
        } else {
            c.check(n == 2, || format!("no counterexample for Cr{n}"));
        }
    }
    c.note("Cr2 all proper; Cr3, Cr4 have admissible non-proper bijections");
    Ok(())
}

fn bipartite(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    for (m, n, order) in [(2, 3, 12), (3, 3, 72)] {
        let p = families::kmn(m, n)?;
        let v = Analyzer::new(&p).decide_all_proper(&opts.enumeration)?;
        c.check(v.all_proper, || format!("K{m},{n} is not all proper"));
        c.eq(&format!("|AM(K{m},{n})|"), v.am_order, order);
        c.eq(&format!("|P(K{m},{n})|"), v.p_order, order);
    }
    c.note("K2,3: 12 = 12; K3,3: 72 = 72");
    Ok(())
}

fn crownless(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    for n in 3..=5 {
        let p = families::star(n)?;
        let a = Analyzer::new(&p);
        let m = a.enumerate_m(&opts.enumeration)?;
        let pp = a.enumerate_p();
        c.check(m == pp, || format!("M != P for star:{n}"));
        c.eq(&format!("|M(star:{n})|"), m.len(), factorial(n));
        c.eq(
            &format!("|Aut±(star:{n})|"),
            p.poset_maps().len(),
            factorial(n),
        );
    }
    for n in [4, 6] {
        let p = families::fence(n)?;
        let a = Analyzer::new(&p);
        c.check(p.is_crownless(), || format!("fence:{n} has a weak crown"));
        let m = a.enumerate_m(&opts.enumeration)?;
        let am = a.enumerate_am(&opts.enumeration)?;
        let pp = a.enumerate_p();
        c.check(m == am, || format!("AM != M on crownless fence:{n}"));
        c.check(m.len() > pp.len(), || format!("M = P for fence:{n}"));
        match a.separating_witness() {
            Some(theta) => {
                c.check(
                    a.in_m(&theta) && a.is_separating(&theta)? && !a.is_proper(&theta),
                    || format!("separating witness for fence:{n} is wrong"),
                );
                c.check(m.binary_search(&theta).is_ok(), || {
                    format!("witness for fence:{n} not enumerated")
                });
            }
            None => c
                .failures
                .push(format!("no separating witness for fence:{n}")),
        }
    }
    c.note("stars: M = P = n!; fences 4, 6: M != P with separating witness");
    Ok(())
}

fn example20(c: &mut Checker) -> Result<()> {
    let p = families::example20();
    let a = Analyzer::new(&p);
    let theta = families::example20_theta(&p)?;
    c.check(a.in_m(&theta), || "θ is not monotone".into());
    c.check(!a.is_admissible(&theta)?, || "θ is admissible".into());
    c.check(!a.is_admissible_oracle(&theta, 4)?, || {
        "semiwalk oracle accepts θ at length 4".into()
    });
    let walk = Semiwalk::parse(&p, "5<7>6<8>5")?;
    let z = p.index_of("7'").expect("label");
    c.eq(
        "count_stats at 7'",
        a.count_stats(&theta, &walk, z).as_tuple(),
        (0, 0, 0, 1),
    );
    c.note("θ monotone, not admissible, stats at 7' = (0,0,0,1)");
    Ok(())
}

fn example6(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let p = families::example6();
    let a = Analyzer::new(&p);
    let supports: Vec<Vec<&str>> = a
        .chain_classes()
        .iter()
        .map(|cl| cl.support.iter().map(|&x| p.name(x)).collect())
        .collect();
    c.eq(
        "supports",
        supports,
        vec![vec!["1", "2", "4", "5"], vec!["1", "3", "5", "6"]],
    );
    let am = a.enumerate_am(&opts.enumeration)?;
    c.eq("|AM(example:6)|", am.len(), 2);
    c.check(am.iter().all(|t| a.is_proper(t)), || {
        "improper element of AM(example:6)".into()
    });
    let v = a.decide_all_proper(&opts.enumeration)?;
    c.check(v.all_proper && v.class_count == 2, || {
        "example:6 is not all proper with two classes".into()
    });
    c.note("two classes, |AM| = 2, all proper");
    Ok(())
}

fn suite_analyzers(max_pairs: usize) -> Vec<(String, Poset)> {
    families::suite(max_pairs)
}

fn oracle(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let mut total = 0;
    for (name, p) in suite_analyzers(SUITE_MAX_PAIRS) {
        let a = Analyzer::new(&p);
        for theta in a.enumerate_m(&opts.enumeration)? {
            total += 1;
            let fast = a.is_admissible(&theta)?;
            let slow = a.is_admissible_oracle(&theta, ORACLE_STEPS)?;
            c.check(fast == slow, || {
                format!("{name}: crown check {fast}, semiwalk oracle {slow}")
            });
        }
    }
    c.note(format!("{total} monotone bijections agree"));
    Ok(())
}

fn sigma(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let mut total = 0;
    for (name, p) in suite_analyzers(SUITE_MAX_PAIRS) {
        let a = Analyzer::new(&p);
        for theta in a.enumerate_m(&opts.enumeration)? {
            total += 1;
            let s = a.build_compatible_sigma(&theta, opts.field)?;
            c.check(a.is_compatible(&s, &theta), || {
                format!("{name}: σ not compatible")
            });
        }
    }
    c.note(format!("{total} sign maps compatible"));
    Ok(())
}

fn supports(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let mut total = 0;
    for (name, p) in suite_analyzers(SUITE_MAX_PAIRS) {
        let a = Analyzer::new(&p);
        for theta in a.enumerate_am(&opts.enumeration)? {
            total += 1;
            if let Err(e) = a.support_maps(&theta) {
                c.failures.push(format!("{name}: {e}"));
            }
        }
    }
    c.note(format!("{total} admissible bijections with support maps"));
    Ok(())
}

fn algebra(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let mut posets: Vec<(String, Poset)> = families::suite(usize::MAX)
        .into_iter()
        .filter(|(_, p)| p.len() <= 6)
        .collect();
    posets.push(("example:6".into(), families::example6()));
    posets.push(("chain:1".into(), families::chain(1)?));
    for (name, p) in &posets {
        let alg = IncidenceAlgebra::new(p, opts.field);
        c.check(alg.commutator_space().same_as(&alg.radical_space()), || {
            format!("{name}: [I,I] differs from the radical")
        });
        let center = alg.center_space();
        c.check(
            center.dimension() == 1 && center.contains(&alg.to_vector(&alg.delta())),
            || format!("{name}: center is not spanned by δ"),
        );
        for lambda in p.poset_maps() {
            let hat = alg.induced_map(&lambda);
            let tau = match lambda.kind() {
                MapKind::Iso => hat.clone(),
                MapKind::AntiIso => hat.neg(),
            };
            c.check(alg.is_lie_automorphism(&tau), || {
                format!("{name}: ±λ̂ is not a Lie automorphism")
            });
            match alg.check_proper_decomposition(&tau, &tau) {
                Ok(nu) => c.check(nu.is_zero(), || format!("{name}: ν is nonzero")),
                Err(e) => c.failures.push(format!("{name}: {e}")),
            }
        }
    }
    c.note(format!("{} posets over {}", posets.len(), opts.field));
    Ok(())
}

fn properties(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let mut checked = 0usize;
    for (name, p) in suite_analyzers(SUITE_MAX_PAIRS) {
        let a = Analyzer::new(&p);
        let m = a.enumerate_m(&opts.enumeration)?;
        let am = a.enumerate_am(&opts.enumeration)?;
        for theta in &m {
            c.mixed_direction_checks(&name, &a, theta);
            checked += 1;
        }
        for theta in &m {
            walk_invariances(c, &name, &a, theta, PROPERTY_STEPS);
        }
        for theta in &am {
            repeated_endpoints(c, &name, &a, theta, PROPERTY_STEPS);
        }
    }
    crown_parity_criterion(c, opts)?;
    c.note(format!("{checked} monotone bijections"));
    Ok(())
}

fn walk_invariances(
    c: &mut Checker,
    name: &str,
    a: &Analyzer,
    theta: &EdgeBijection,
    steps: usize,
) {
    let p = a.poset();
    let _ = for_each_closed_semiwalk(p, steps, |walk| {
        let w = Semiwalk::new(p, walk.to_vec()).expect("semiwalk");
        let m = w.steps();
        for z in 0..p.len() {
            let base = a.count_stats(theta, &w, z);
            let rot = a.count_stats(theta, &w.rotated(1), z);
            let rev = a.count_stats(theta, &w.reversed(), z);
            c.check(base == rot, || {
                format!("{name}: shift changes counts on {}", w.labels(p))
            });
            c.check(
                (rev.s_plus, rev.s_minus, rev.t_plus, rev.t_minus)
                    == (base.s_minus, base.s_plus, base.t_minus, base.t_plus),
                || format!("{name}: reversal does not swap counts on {}", w.labels(p)),
            );
            for k in 0..m {
                for l in 2..=m - k {
                    if let Some(short) = w.collapse_run(p, k, l) {
                        let s = a.count_stats(theta, &short, z);
                        let d = |x: usize, y: usize| x as i64 - y as i64;
                        c.check(
                            d(base.s_plus, base.t_plus) == d(s.s_plus, s.t_plus)
                                && d(base.s_minus, base.t_minus) == d(s.s_minus, s.t_minus),
                            || {
                                format!(
                                    "{name}: collapsing a run of {} changes counts",
                                    w.labels(p)
                                )
                            },
                        );
                    }
                }
            }
        }
        ControlFlow::Continue(())
    });
}

/// Along a closed semiwalk, a minimal lower end (maximal upper end) of an
/// image edge occurs at least twice.
fn repeated_endpoints(
    c: &mut Checker,
    name: &str,
    a: &Analyzer,
    theta: &EdgeBijection,
    steps: usize,
) {
    let p = a.poset();
    let _ = for_each_closed_semiwalk(p, steps, |walk| {
        let images: Vec<(usize, usize)> = walk
            .windows(2)
            .map(|s| {
                let e = if p.lt(s[0], s[1]) {
                    (s[0], s[1])
                } else {
                    (s[1], s[0])
                };
                theta.image_pair(p, e)
            })
            .collect();
        for (i, &(x, y)) in images.iter().enumerate() {
            let others = || {
                images
                    .iter()
                    .enumerate()
                    .filter(move |&(j, _)| j != i)
                    .map(|(_, e)| *e)
            };
            if p.is_min(x) {
                c.check(others().any(|e| e.0 == x), || {
                    format!("{name}: minimal end used once")
                });
            }
            if p.is_max(y) {
                c.check(others().any(|e| e.1 == y), || {
                    format!("{name}: maximal end used once")
                });
            }
        }
        ControlFlow::Continue(())
    });
}

fn crown_parity_criterion(c: &mut Checker, opts: &VerifyOptions) -> Result<()> {
    let n = 3;
    let p = families::crown(n)?;
    let a = Analyzer::new(&p);
    let odd: Vec<usize> = families::crown_odd_pairs(n)
        .into_iter()
        .map(|(x, y)| p.pair_index(x, y).expect("pair"))
        .collect();
    let chains = a.chains();
    for theta in a.enumerate_m(&opts.enumeration)? {
        let opposite = (0..chains.len()).all(|i| {
            (i + 1..chains.len()).all(|j| {
                if chains[i].is_disjoint(&chains[j]) {
                    return true;
                }
                let parity = |k: usize| {
                    let e = chains[k].elements();
                    let (x, y) = (e[0], e[e.len() - 1]);
                    odd.contains(&theta.image(p.pair_index(x, y).expect("pair")))
                };
                parity(i) != parity(j)
            })
        });
        c.check(opposite == a.is_admissible(&theta)?, || {
            "Cr3 parity criterion disagrees with admissibility".into()
        });
    }
    Ok(())
}

impl Checker {
    /// For `C` increasing and `D` decreasing, shared elements lie in
    /// `Min ∪ Max`, and a shared `x < y` are the common extremes.
    fn mixed_direction_checks(&mut self, name: &str, a: &Analyzer, theta: &EdgeBijection) {
        let p = a.poset();
        let chains = a.chains();
        let dirs = a.directions(theta);
        for (i, ci) in chains.iter().enumerate() {
            for (j, cj) in chains.iter().enumerate() {
                if !(dirs[i].is_increasing() && dirs[j].is_decreasing())
                    || dirs[i] == Direction::None
                {
                    continue;
                }
                for &x in ci.elements().iter().filter(|&&x| cj.contains(x)) {
                    self.check(p.is_min(x) || p.is_max(x), || {
                        format!(
                            "{name}: {} shared by increasing and decreasing chains",
                            p.name(x)
                        )
                    });
                    for &y in ci
                        .elements()
                        .iter()
                        .filter(|&&y| cj.contains(y) && p.lt(x, y))
                    {
                        self.check(
                            x == ci.min() && x == cj.min() && y == ci.max() && y == cj.max(),
                            || format!("{name}: {}<{} inside both chains", p.name(x), p.name(y)),
                        );
                    }
                }
            }
        }
    }
}
