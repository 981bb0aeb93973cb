use super::Poset;
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the line-based `poset v1` format:
///
/// ```text
/// poset v1
/// elements: a b c
/// relations: a<b b<c
/// ```
///
/// `#` starts a comment and blank lines are ignored. Relations may be covers
/// or any strict pairs; the transitive closure is taken.
pub(super) fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, "poset v1")) => {}
        Some((no, other)) => {
            return Err(parse_error(
                no,
                format!("expected header `poset v1`, found {other:?}"),
            ))
        }
        None => return Err(parse_error(1, "empty input")),
    }

    let (elem_line, elements) = lines
        .next()
        .ok_or_else(|| parse_error(2, "missing `elements:` line"))?;
    let elements = elements
        .strip_prefix("elements:")
        .ok_or_else(|| parse_error(elem_line, "expected `elements:`"))?;
    let names: Vec<String> = elements.split_whitespace().map(str::to_owned).collect();
    if names.is_empty() {
        return Err(parse_error(elem_line, "no elements listed"));
    }
    for (i, name) in names.iter().enumerate() {
        if name.contains('<') {
            return Err(parse_error(
                elem_line,
                format!("label {name:?} contains `<`"),
            ));
        }
        if names[..i].contains(name) {
            return Err(parse_error(elem_line, format!("duplicate label {name:?}")));
        }
    }

    let (rel_line, relations) = lines
        .next()
        .ok_or_else(|| parse_error(elem_line + 1, "missing `relations:` line"))?;
    let relations = relations
        .strip_prefix("relations:")
        .ok_or_else(|| parse_error(rel_line, "expected `relations:`"))?;
    let lookup = |label: &str| {
        names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| parse_error(rel_line, format!("unknown element {label:?}")))
    };
    let mut pairs = Vec::new();
    for token in relations.split_whitespace() {
        let (a, b) = token
            .split_once('<')
            .filter(|(a, b)| !a.is_empty() && !b.is_empty() && !b.contains('<'))
            .ok_or_else(|| parse_error(rel_line, format!("malformed relation {token:?}")))?;
        pairs.push((lookup(a)?, lookup(b)?));
    }

    if let Some((no, extra)) = lines.next() {
        return Err(parse_error(no, format!("unexpected content {extra:?}")));
    }

    Poset::from_relations(names, &pairs)
}
