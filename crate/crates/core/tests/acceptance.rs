//! Acceptance criteria. Each criterion runs the library's verification block
//! and an independent brute-force recomputation from `oracle`, then prints
//! one PASS/FAIL line. Counts are exact; the only tolerances are the time
//! budgets.

mod oracle;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use incidence_lie::classes::class_report_json;
use incidence_lie::verify::{run_criterion, VerifyOptions};
use incidence_lie::{
    families, Analyzer, EdgeBijection, EnumerationOptions, Field, IncidenceAlgebra, Poset, Semiwalk,
};
use oracle::{all_bijections, dihedral, rank, Oracle};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: incidence_lie::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn opts() -> VerifyOptions {
    VerifyOptions {
        enumeration: EnumerationOptions {
            jobs: 4,
            ..Default::default()
        },
        field: Field::Rational,
    }
}

/// The library's own block for criterion `k` must pass.
fn harness(k: usize) -> Result<(), String> {
    let outcome = lib(run_criterion(k, &opts()))?;
    ensure(outcome.passed(), || {
        format!(
            "verification block {}: {}",
            outcome.name,
            outcome.failures.join("; ")
        )
    })
}

fn perms(ts: &[EdgeBijection], o: &Oracle) -> BTreeSet<Vec<usize>> {
    ts.iter().map(|t| o.lift(t.perm())).collect()
}

/// `M` and `AM` by scanning all of `S(B)` with the oracle.
fn brute_m_am(o: &Oracle, walk_steps: usize) -> (BTreeSet<Vec<usize>>, BTreeSet<Vec<usize>>) {
    let walks = o.closed_walks(walk_steps);
    let mut m = BTreeSet::new();
    let mut am = BTreeSet::new();
    for theta in all_bijections(o.pairs.len()) {
        if o.monotone(&theta) {
            if o.admissible(&theta, &walks) {
                am.insert(theta.clone());
            }
            m.insert(theta);
        }
    }
    (m, am)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn crown_orders() -> Check {
    harness(1)?;
    for n in 2..=3 {
        let p = lib(families::crown(n))?;
        let o = Oracle::new(&p);
        let (_, am) = brute_m_am(&o, 2 * n);
        ensure(am.len() == 2 * factorial(n).pow(2), || {
            format!("oracle |AM(Cr{n})| = {}", am.len())
        })?;
        let lib_am = lib(Analyzer::new(&p).enumerate_am(&EnumerationOptions::default()))?;
        ensure(perms(&lib_am, &o) == am, || {
            format!("AM(Cr{n}) differs from the oracle")
        })?;
    }
    for n in 2..=5 {
        let p = lib(families::crown(n))?;
        let o = Oracle::new(&p);
        let pset = o.proper_set();
        ensure(pset.len() == 4 * n, || {
            format!("oracle |P(Cr{n})| = {}", pset.len())
        })?;
        ensure(dihedral(&pset, n), || {
            format!("oracle finds no dihedral presentation of P(Cr{n})")
        })?;
        ensure(perms(&Analyzer::new(&p).enumerate_p(), &o) == pset, || {
            format!("P(Cr{n}) differs")
        })?;
    }
    Ok("|AM(Cr2)|=8 |AM(Cr3)|=72 |P(Crn)|=4n (n=2..5) dihedral".into())
}

fn dichotomy() -> Check {
    harness(2)?;
    let mut notes = Vec::new();
    for n in 2..=4 {
        let p = lib(families::crown(n))?;
        let o = Oracle::new(&p);
        let v = lib(Analyzer::new(&p).decide_all_proper(&opts().enumeration))?;
        ensure(v.all_proper == (n == 2), || {
            format!("Cr{n}: all_proper = {}", v.all_proper)
        })?;
        if n > 2 {
            let theta = v
                .counterexample
                .as_ref()
                .ok_or_else(|| format!("Cr{n}: no witness"))?;
            let t = o.lift(theta.perm());
            let walks = o.closed_walks(2 * n);
            ensure(o.monotone(&t) && o.admissible(&t, &walks), || {
                format!("Cr{n}: witness is not in AM")
            })?;
            ensure(!o.proper_set().contains(&t), || {
                format!("Cr{n}: witness is proper")
            })?;
            notes.push(format!("Cr{n} witness in AM\\P"));
        }
    }
    Ok(format!("Cr2 all proper; {}", notes.join(", ")))
}

fn bipartite() -> Check {
    harness(3)?;
    for (m, n, order) in [(2, 3, 12), (3, 3, 72)] {
        let p = lib(families::kmn(m, n))?;
        let o = Oracle::new(&p);
        let a = Analyzer::new(&p);
        let v = lib(a.decide_all_proper(&opts().enumeration))?;
        ensure(
            v.all_proper && v.am_order == order && v.p_order == order,
            || {
                format!(
                    "K{m},{n}: all_proper {} |AM| {} |P| {}",
                    v.all_proper, v.am_order, v.p_order
                )
            },
        )?;
        let pset = o.proper_set();
        ensure(pset.len() == order, || {
            format!("oracle |P(K{m},{n})| = {}", pset.len())
        })?;
        let walks = o.closed_walks(6);
        let am = perms(&lib(a.enumerate_am(&opts().enumeration))?, &o);
        ensure(am == pset, || format!("AM(K{m},{n}) is not the oracle's P"))?;
        ensure(am.iter().all(|t| o.admissible(t, &walks)), || {
            "oracle rejects an element of AM".into()
        })?;
        if m == 2 {
            let (_, brute) = brute_m_am(&o, 6);
            ensure(brute == pset, || {
                format!("oracle AM(K2,3) has {} elements", brute.len())
            })?;
        }
    }
    Ok("K2,3: |AM|=|P|=12; K3,3: |AM|=|P|=72".into())
}

fn crownless() -> Check {
    harness(4)?;
    for n in 3..=5 {
        let p = lib(families::star(n))?;
        let o = Oracle::new(&p);
        let (m, _) = brute_m_am(&o, 2);
        let pset = o.proper_set();
        ensure(m.len() == factorial(n) && m == pset, || {
            format!("star:{n}: |M| {} |P| {}", m.len(), pset.len())
        })?;
        ensure(o.poset_maps().len() == factorial(n), || {
            format!("star:{n}: |Aut±| differs")
        })?;
    }
    for n in [4, 6] {
        let p = lib(families::fence(n))?;
        let o = Oracle::new(&p);
        let (m, _) = brute_m_am(&o, 2);
        let pset = o.proper_set();
        ensure(m != pset, || format!("fence:{n}: M = P"))?;
        let w = Analyzer::new(&p)
            .separating_witness()
            .ok_or_else(|| format!("fence:{n}: no witness"))?;
        let t = o.lift(w.perm());
        ensure(
            m.contains(&t) && o.is_separating(&t) && !pset.contains(&t),
            || format!("fence:{n}: bad witness"),
        )?;
    }
    Ok("stars M=P=Aut±=n!; fences 4,6 M!=P with separating witness".into())
}

fn example20() -> Check {
    harness(5)?;
    let p = families::example20();
    let o = Oracle::new(&p);
    let a = Analyzer::new(&p);
    let theta = lib(families::example20_theta(&p))?;
    let t = o.lift(theta.perm());
    ensure(a.in_m(&theta) && o.monotone(&t), || {
        "θ is not monotone".into()
    })?;
    ensure(!lib(a.is_admissible(&theta))?, || {
        "library calls θ admissible".into()
    })?;
    let walk = lib(Semiwalk::parse(&p, "5<7>6<8>5"))?;
    let z = p.index_of("7'").ok_or("no 7'")?;
    let stats = a.count_stats(&theta, &walk, z).as_tuple();
    let oracle_stats = o.stats(&t, walk.vertices(), z);
    ensure(stats == (0, 0, 0, 1) && oracle_stats == stats, || {
        format!("count_stats {stats:?}, oracle {oracle_stats:?}")
    })?;
    ensure(!o.balanced_on(&t, walk.vertices()), || {
        "oracle finds the walk balanced".into()
    })?;
    Ok("in_M, not admissible, stats at 7' = (0,0,0,1)".into())
}

fn example6() -> Check {
    harness(6)?;
    let p = families::example6();
    let o = Oracle::new(&p);
    let a = Analyzer::new(&p);
    let supports = o.class_supports();
    let expected = vec![vec!["1", "2", "4", "5"], vec!["1", "3", "5", "6"]];
    ensure(supports == expected, || {
        format!("oracle supports {supports:?}")
    })?;
    let report = class_report_json(&p, a.chains(), &a.chain_classes());
    ensure(
        report.contains(r#""support":["1","2","4","5"]"#)
            && report.contains(r#""support":["1","3","5","6"]"#),
        || format!("class report {report}"),
    )?;
    let (_, am) = brute_m_am(&o, 8);
    ensure(am.len() == 2, || format!("oracle |AM| = {}", am.len()))?;
    ensure(am.is_subset(&o.proper_set()), || {
        "oracle AM element is not proper".into()
    })?;
    ensure(
        perms(&lib(a.enumerate_am(&opts().enumeration))?, &o) == am,
        || "library AM differs".into(),
    )?;
    let v = lib(a.decide_all_proper(&opts().enumeration))?;
    ensure(v.all_proper && v.class_count == 2, || {
        "not all proper with two classes".into()
    })?;
    Ok("2 classes {1,2,4,5} {1,3,5,6}; |AM|=2, both proper".into())
}

fn suite() -> Vec<(String, Poset)> {
    families::suite(6)
}

fn oracle_equivalence() -> Check {
    harness(7)?;
    let mut count = 0;
    for (name, p) in suite() {
        let o = Oracle::new(&p);
        let a = Analyzer::new(&p);
        let walks = o.closed_walks(10);
        for theta in lib(a.enumerate_m(&opts().enumeration))? {
            let t = o.lift(theta.perm());
            let fast = lib(a.is_admissible(&theta))?;
            ensure(fast == o.admissible(&t, &walks), || {
                format!("{name}: crown check disagrees with walk oracle")
            })?;
            count += 1;
        }
        let (m, _) = brute_m_am(&o, 2);
        ensure(
            m.len() == lib(a.enumerate_m(&opts().enumeration))?.len(),
            || format!("{name}: |M| differs"),
        )?;
    }
    Ok(format!(
        "{count} monotone bijections, crown check = closed-walk oracle"
    ))
}

fn sigma() -> Check {
    harness(8)?;
    let mut count = 0;
    for (name, p) in suite() {
        let o = Oracle::new(&p);
        let a = Analyzer::new(&p);
        for theta in lib(a.enumerate_m(&opts().enumeration))? {
            let s = lib(a.build_compatible_sigma(&theta, Field::Rational))?;
            let t = o.lift(theta.perm());
            let sign = |x: usize, y: usize| if s.get(&p, x, y).is_one() { 1 } else { -1 };
            for &(x, y) in &o.pairs {
                for &(y2, z) in &o.pairs {
                    if y2 != y {
                        continue;
                    }
                    let (a1, b1) = o.img(&t, (x, y));
                    let (a2, b2) = o.img(&t, (y, z));
                    let xz = o.img(&t, (x, z));
                    if b1 == a2 && (a1, b2) == xz {
                        ensure(sign(x, z) == sign(x, y) * sign(y, z), || {
                            format!("{name}: σ fails a product")
                        })?;
                    }
                    if b2 == a1 && (a2, b1) == xz {
                        ensure(sign(x, z) == -sign(x, y) * sign(y, z), || {
                            format!("{name}: σ fails a reversed product")
                        })?;
                    }
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} sign maps compatible"))
}

fn supports() -> Check {
    harness(9)?;
    let mut count = 0;
    for (name, p) in suite() {
        let o = Oracle::new(&p);
        let a = Analyzer::new(&p);
        let classes = a.chain_classes();
        for theta in lib(a.enumerate_am(&opts().enumeration))? {
            let t = o.lift(theta.perm());
            for s in lib(a.support_maps(&theta))? {
                let lambda: std::collections::BTreeMap<usize, usize> =
                    s.map.iter().copied().collect();
                let anti = s.kind == incidence_lie::MapKind::AntiIso;
                let image: BTreeSet<usize> = lambda.values().copied().collect();
                let target: BTreeSet<usize> = classes[s.target].support.iter().copied().collect();
                ensure(image == target, || {
                    format!("{name}: λ does not land on the target support")
                })?;
                for (&x, &lx) in &lambda {
                    for (&y, &ly) in &lambda {
                        if p.lt(x, y) {
                            let want = if anti { (ly, lx) } else { (lx, ly) };
                            ensure(o.img(&t, (x, y)) == want, || {
                                format!("{name}: θ differs from λ̂ on a support")
                            })?;
                        }
                    }
                }
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} admissible bijections agree with λ̂ on every support"
    ))
}

/// Structure constants of the basis `e_xy` (`x <= y`): `e_ab e_cd = [b = c] e_ad`.
fn bracket_rows(basis: &[(usize, usize)]) -> Vec<Vec<i128>> {
    let pos = |e: (usize, usize)| basis.iter().position(|&f| f == e);
    let mut rows = Vec::new();
    for &(a, b) in basis {
        for &(c, d) in basis {
            let mut v = vec![0i128; basis.len()];
            if b == c {
                v[pos((a, d)).unwrap()] += 1;
            }
            if d == a {
                v[pos((c, b)).unwrap()] -= 1;
            }
            rows.push(v);
        }
    }
    rows
}

fn algebra() -> Check {
    harness(10)?;
    let mut posets: Vec<(String, Poset)> = families::suite(usize::MAX)
        .into_iter()
        .filter(|(_, p)| p.len() <= 6)
        .collect();
    posets.push(("example:6".into(), families::example6()));
    for field in [Field::Rational, lib(Field::prime(7))?] {
        for (name, p) in &posets {
            let alg = IncidenceAlgebra::new(p, field);
            let basis: Vec<(usize, usize)> = alg.basis().to_vec();
            let o = Oracle::new(p);
            // [I, I]: rank of all brackets equals |B|, and every bracket lies in the radical
            let rows = bracket_rows(&basis);
            let diag: Vec<usize> = (0..basis.len())
                .filter(|&i| basis[i].0 == basis[i].1)
                .collect();
            ensure(rank(rows.clone()) == o.pairs.len(), || {
                format!("{name}: oracle dim [I,I] differs from |B|")
            })?;
            ensure(rows.iter().all(|r| diag.iter().all(|&i| r[i] == 0)), || {
                format!("{name}: bracket off the radical")
            })?;
            ensure(alg.commutator_space().dimension() == o.pairs.len(), || {
                format!("{name}: library dim [I,I]")
            })?;
            ensure(alg.commutator_space().same_as(&alg.radical_space()), || {
                format!("{name}: [I,I] != radical")
            })?;
            // center: kernel of f -> ([f, e_b])_b has dimension 1 and contains δ
            let k = basis.len();
            let mut eqs = Vec::new();
            for j in 0..k {
                for i in 0..k {
                    let col: Vec<i128> = (0..k).map(|f| rows[f * k + j][i]).collect();
                    eqs.push(col);
                }
            }
            ensure(k - rank(eqs) == 1, || {
                format!("{name}: oracle center dimension is not 1")
            })?;
            let center = alg.center_space();
            ensure(
                center.dimension() == 1 && center.contains(&alg.to_vector(&alg.delta())),
                || format!("{name}: library center is not span δ"),
            )?;
            for lambda in p.poset_maps() {
                let anti = lambda.kind() == incidence_lie::MapKind::AntiIso;
                let l = lambda.perm();
                let tau_of = |(x, y): (usize, usize)| -> ((usize, usize), i128) {
                    if anti {
                        ((l[y], l[x]), -1)
                    } else {
                        ((l[x], l[y]), 1)
                    }
                };
                for &(a, b) in &basis {
                    for &(c, d) in &basis {
                        // τ[e_ab, e_cd] against [τe_ab, τe_cd]
                        let mut lhs = std::collections::BTreeMap::<(usize, usize), i128>::new();
                        if b == c {
                            let (e, s) = tau_of((a, d));
                            *lhs.entry(e).or_default() += s;
                        }
                        if d == a {
                            let (e, s) = tau_of((c, b));
                            *lhs.entry(e).or_default() -= s;
                        }
                        let ((a1, b1), s1) = tau_of((a, b));
                        let ((c1, d1), s2) = tau_of((c, d));
                        let mut rhs = std::collections::BTreeMap::<(usize, usize), i128>::new();
                        if b1 == c1 {
                            *rhs.entry((a1, d1)).or_default() += s1 * s2;
                        }
                        if d1 == a1 {
                            *rhs.entry((c1, b1)).or_default() -= s1 * s2;
                        }
                        lhs.retain(|_, v| *v != 0);
                        rhs.retain(|_, v| *v != 0);
                        ensure(lhs == rhs, || {
                            format!("{name}: oracle finds ±λ̂ not a Lie map")
                        })?;
                    }
                }
                let hat = alg.induced_map(&lambda);
                let tau = if anti { hat.neg() } else { hat };
                ensure(alg.is_lie_automorphism(&tau), || {
                    format!("{name}: library rejects ±λ̂")
                })?;
                let nu = lib(alg.check_proper_decomposition(&tau, &tau))?;
                ensure(nu.is_zero(), || format!("{name}: ν != 0"))?;
            }
        }
    }
    Ok(format!("{} posets over q and fp:7", posets.len()))
}

fn properties() -> Check {
    harness(11)?;
    let mut count = 0;
    // literal counts agree with the oracle on short semiwalks
    for (name, p) in suite() {
        let o = Oracle::new(&p);
        let a = Analyzer::new(&p);
        let walks = incidence_lie::poset::closed_semiwalks(&p, 4).map_err(|e| e.to_string())?;
        for theta in lib(a.enumerate_m(&opts().enumeration))?.iter().step_by(7) {
            let t = o.lift(theta.perm());
            for w in &walks {
                for z in 0..p.len() {
                    let got = a.count_stats(theta, w, z).as_tuple();
                    ensure(got == o.stats(&t, w.vertices(), z), || {
                        format!("{name}: count_stats differs")
                    })?;
                }
            }
            count += 1;
        }
    }
    // parity criterion on Cr3, decided by the oracle alone
    let n = 3;
    let p = lib(families::crown(n))?;
    let o = Oracle::new(&p);
    let walks = o.closed_walks(2 * n);
    let odd: BTreeSet<(usize, usize)> = families::crown_odd_pairs(n).into_iter().collect();
    for t in all_bijections(o.pairs.len()) {
        let mut opposite = true;
        for (i, c) in o.chains.iter().enumerate() {
            for d in &o.chains[i + 1..] {
                if c.iter().any(|x| d.contains(x)) {
                    let pc = odd.contains(&o.img(&t, (c[0], c[1])));
                    let pd = odd.contains(&o.img(&t, (d[0], d[1])));
                    opposite &= pc != pd;
                }
            }
        }
        ensure(opposite == o.admissible(&t, &walks), || {
            "Cr3 parity criterion fails".into()
        })?;
    }
    Ok(format!(
        "library properties block; {count} bijections spot-checked; Cr3 parity on all 720"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("crown group orders", Duration::from_secs(60), crown_orders),
        (
            "properness dichotomy on crowns",
            Duration::from_secs(120),
            dichotomy,
        ),
        ("bipartite K_{m,n}", Duration::from_secs(600), bipartite),
        (
            "crownless length-1 criterion",
            Duration::from_secs(30),
            crownless,
        ),
        ("20-element example", Duration::from_secs(5), example20),
        ("6-element example", Duration::from_secs(10), example6),
        (
            "oracle equivalence",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        ("sign-map construction", Duration::from_secs(120), sigma),
        ("support isomorphisms", Duration::from_secs(120), supports),
        ("algebra layer", Duration::from_secs(60), algebra),
        ("property suites", Duration::from_secs(600), properties),
    ];
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        if filter.is_some_and(|f| f != k) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= *budget => (true, d),
            Ok(d) => (false, format!("{d}; over the {}s budget", budget.as_secs())),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {k:>2} {}: {name} ({:.2}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
