//! A monotone edge bijection that fails the counting identity on a closed semiwalk.

use incidence_lie::{families, Analyzer, Semiwalk};

fn main() -> incidence_lie::Result<()> {
    let p = families::example20();
    let a = Analyzer::new(&p);
    let theta = families::example20_theta(&p)?;
    println!(
        "|X| = {}, |B| = {}, weak crowns: {}",
        p.len(),
        p.num_strict_pairs(),
        a.crowns().len()
    );
    println!("monotone: {}", a.in_m(&theta));
    println!("admissible: {}", a.is_admissible(&theta)?);
    println!(
        "admissible on semiwalks of length <= 4: {}",
        a.is_admissible_oracle(&theta, 4)?
    );

    let walk = Semiwalk::parse(&p, "5<7>6<8>5")?;
    for label in ["5'", "6'", "7'", "7''", "8'"] {
        let z = p.index_of(label).expect("label");
        let s = a.count_stats(&theta, &walk, z);
        println!(
            "z = {label:>3}: (s+, s-, t+, t-) = {:?}, balanced: {}",
            s.as_tuple(),
            s.balanced()
        );
    }
    Ok(())
}
