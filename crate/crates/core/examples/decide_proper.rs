//! Decides whether every Lie automorphism is proper across several families.

use incidence_lie::{families, Analyzer, EnumerationOptions};

fn main() -> incidence_lie::Result<()> {
    let opts = EnumerationOptions {
        jobs: 4,
        ..Default::default()
    };
    let selectors = [
        "chain:4",
        "star:4",
        "fence:5",
        "crown:2",
        "crown:3",
        "kmn:2x3",
        "kmn:3x3",
        "example:6",
    ];
    println!(
        "{:<10} {:>6} {:>6} {:>8} {:>10}",
        "poset", "|AM|", "|P|", "classes", "all proper"
    );
    for sel in selectors {
        let p = families::from_selector(sel)?;
        let v = Analyzer::new(&p).decide_all_proper(&opts)?;
        println!(
            "{sel:<10} {:>6} {:>6} {:>8} {:>10}",
            v.am_order, v.p_order, v.class_count, v.all_proper
        );
        if let Some(theta) = &v.counterexample {
            print!("{}", theta.display(&p));
        }
    }
    Ok(())
}
