//! Parse a poset, then list its extremal elements, maximal chains and weak crowns.

use incidence_lie::Poset;

const DIAMOND_WITH_TAIL: &str = "\
poset v1
elements: a b c d e
relations: a<b a<c b<d c<d d<e
";

fn main() -> incidence_lie::Result<()> {
    let p = Poset::parse(DIAMOND_WITH_TAIL)?;
    println!("{p}");
    let names = |xs: &[usize]| xs.iter().map(|&x| p.name(x)).collect::<Vec<_>>().join(" ");
    println!(
        "min: {}  max: {}  length: {}",
        names(p.min_set()),
        names(p.max_set()),
        p.length()
    );
    println!("strict pairs |B| = {}", p.num_strict_pairs());
    for c in p.maximal_chains() {
        println!("chain {}", c.labels(&p).join(" < "));
    }
    let crowns = p.weak_crowns();
    println!("{} weak crowns", crowns.len());
    for w in &crowns {
        println!("  {}", w.as_semiwalk(&p).labels(&p));
    }

    match Poset::parse("poset v1\nelements: a b c\nrelations: a<b\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("a disconnected poset is rejected"),
    }
    Ok(())
}
