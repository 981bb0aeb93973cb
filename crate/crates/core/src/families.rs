//! Named poset families and fixtures.
//!
//! Selector strings: `chain:4`, `crown:3`, `kmn:2x3`, `fence:5`, `star:4`,
//! `example:6`, `example:20`.

use crate::bijection::EdgeBijection;
use crate::error::{Error, Result};
use crate::poset::Poset;

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message()))
    }
}

/// `1 < 2 < ... < n`.
pub fn chain(n: usize) -> Result<Poset> {
    require(n >= 1, || "chain needs at least one element".into())?;
    let relations: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_relations(numbered("", n), &relations)
}

/// `K_{1,n}`: `x1` below each of `y1..yn`.
pub fn star(n: usize) -> Result<Poset> {
    kmn(1, n)
}

/// The zigzag `1 < 2 > 3 < 4 > ...` on `n` elements.
pub fn fence(n: usize) -> Result<Poset> {
    require(n >= 1, || "fence needs at least one element".into())?;
    let relations: Vec<(usize, usize)> = (0..n.saturating_sub(1))
        .map(|i| if i % 2 == 0 { (i, i + 1) } else { (i + 1, i) })
        .collect();
    Poset::from_relations(numbered("", n), &relations)
}

/// `Cr_n` on `x1..xn, y1..yn`: `x_i < y_i`, `x_{i+1} < y_i`, `x_1 < y_n`.
pub fn crown(n: usize) -> Result<Poset> {
    require(n >= 2, || format!("crown needs n >= 2, got {n}"))?;
    let mut names = numbered("x", n);
    names.extend(numbered("y", n));
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push((i, n + i));
        relations.push(((i + 1) % n, n + i));
    }
    Poset::from_relations(names, &relations)
}

/// The odd chains `x_i < y_i` of [`crown`]`(n)`, as index pairs.
pub fn crown_odd_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, n + i)).collect()
}

/// The even chains `x_{i+1} < y_i` and `x_1 < y_n` of [`crown`]`(n)`.
pub fn crown_even_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| ((i + 1) % n, n + i)).collect()
}

/// `K_{m,n}`: every `x_i` below every `y_j`.
pub fn kmn(m: usize, n: usize) -> Result<Poset> {
    require(m >= 1 && n >= 1, || {
        format!("K_{{m,n}} needs m, n >= 1, got {m}, {n}")
    })?;
    let mut names = numbered("x", m);
    names.extend(numbered("y", n));
    let relations: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, m + j)))
        .collect();
    Poset::from_relations(names, &relations)
}

/// `1 < 2 < {4, 5}`, `1 < 3 < {5, 6}`.
pub fn example6() -> Poset {
    Poset::from_labeled(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("1", "2"),
            ("2", "4"),
            ("2", "5"),
            ("1", "3"),
            ("3", "5"),
            ("3", "6"),
        ],
    )
    .expect("valid fixture")
}

const EXAMPLE20_LABELS: [&str; 20] = [
    "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "1'", "2'", "3'", "4'", "5'", "6'", "7'",
    "8'", "9'", "7''",
];

/// Two halves glued at `10`: the left on `1..10`, the right on `1'..9'`, `7''`.
pub fn example20() -> Poset {
    let covers = [
        ("1", "5"),
        ("2", "5"),
        ("5", "7"),
        ("5", "8"),
        ("3", "6"),
        ("4", "6"),
        ("6", "7"),
        ("6", "8"),
        ("8", "9"),
        ("8", "10"),
        ("1'", "5'"),
        ("2'", "5'"),
        ("5'", "7''"),
        ("5'", "8'"),
        ("3'", "6'"),
        ("4'", "6'"),
        ("6'", "7'"),
        ("6'", "8'"),
        ("8'", "9'"),
        ("8'", "10"),
    ];
    Poset::from_labeled(&EXAMPLE20_LABELS, &covers).expect("valid fixture")
}

/// The monotone but inadmissible bijection of [`example20`] that swaps the
/// two halves by priming labels (`10` is its own prime).
///
/// Priming alone does not send `e_{1,7}`, `e_{2,7}` to pairs, so every pair
/// `(a, 7)` follows its chain: `a` in `{1, 2, 5}` goes to `(a', 7'')` and
/// `a` in `{3, 4, 6}` to `(a', 7')`. The map is an involution.
pub fn example20_theta(poset: &Poset) -> Result<EdgeBijection> {
    let label = |x: usize| poset.name(x).to_owned();
    let idx = |s: &str| poset.index_of(s).expect("label of example20");
    let prime = |s: &str| {
        if s == "10" {
            s.to_owned()
        } else {
            format!("{s}'")
        }
    };
    let unprime = |s: &str| {
        if s == "10" {
            s.to_owned()
        } else if s == "7''" {
            "7".to_owned()
        } else {
            s.trim_end_matches('\'').to_owned()
        }
    };
    EdgeBijection::from_fn(poset, |(x, y)| {
        let (a, b) = (label(x), label(y));
        if a.ends_with('\'') {
            (idx(&unprime(&a)), idx(&unprime(&b)))
        } else if b == "7" && matches!(a.as_str(), "1" | "2" | "5") {
            (idx(&prime(&a)), idx("7''"))
        } else {
            (idx(&prime(&a)), idx(&prime(&b)))
        }
    })
}

/// Parses a selector such as `crown:3` or `kmn:2x3`.
pub fn from_selector(selector: &str) -> Result<Poset> {
    let bad = || Error::InvalidParameter(format!("unknown family selector {selector:?}"));
    let (family, arg) = selector.split_once(':').ok_or_else(bad)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match family.trim() {
        "chain" => chain(num(arg)?),
        "star" => star(num(arg)?),
        "fence" => fence(num(arg)?),
        "crown" => crown(num(arg)?),
        "kmn" => {
            let (m, n) = arg.split_once('x').ok_or_else(bad)?;
            kmn(num(m)?, num(n)?)
        }
        "example" => match num(arg)? {
            6 => Ok(example6()),
            20 => Ok(example20()),
            _ => Err(bad()),
        },
        _ => Err(bad()),
    }
}

/// Small posets used by the quantified checks, with selector-like names.
/// Every member has at most `max_pairs` strict pairs.
pub fn suite(max_pairs: usize) -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    let mut push = |name: String, p: Result<Poset>| {
        if let Ok(p) = p {
            if p.num_strict_pairs() <= max_pairs {
                out.push((name, p));
            }
        }
    };
    for n in 2..=4 {
        push(format!("chain:{n}"), chain(n));
    }
    for n in 2..=6 {
        push(format!("star:{n}"), star(n));
    }
    for n in 3..=7 {
        push(format!("fence:{n}"), fence(n));
    }
    for n in 2..=3 {
        push(format!("crown:{n}"), crown(n));
    }
    push("kmn:2x3".into(), kmn(2, 3));
    push("kmn:3x2".into(), kmn(3, 2));
    push(
        "diamond".into(),
        Poset::from_labeled(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        ),
    );
    push(
        "y-shape".into(),
        Poset::from_labeled(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("c", "d")]),
    );
    push(
        "fork".into(),
        Poset::from_labeled(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("b", "d")]),
    );
    push(
        "chain-with-leg".into(),
        Poset::from_labeled(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "d")]),
    );
    push(
        "zigzag-2".into(),
        Poset::from_labeled(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("d", "c"), ("d", "e")],
        ),
    );
    out
}
