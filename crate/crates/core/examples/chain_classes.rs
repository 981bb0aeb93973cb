//! Classes of linked maximal chains and the support maps of admissible bijections.

use incidence_lie::classes::class_report_json;
use incidence_lie::{families, Analyzer, EnumerationOptions};

fn main() -> incidence_lie::Result<()> {
    let p = families::example6();
    let a = Analyzer::new(&p);
    let classes = a.chain_classes();
    println!("{}", class_report_json(&p, a.chains(), &classes));

    for theta in a.enumerate_am(&EnumerationOptions::default())? {
        println!("θ with class map {:?}:", a.induced_class_map(&theta)?);
        for s in a.support_maps(&theta)? {
            let pairs: Vec<String> = s
                .map
                .iter()
                .map(|&(x, y)| format!("{}->{}", p.name(x), p.name(y)))
                .collect();
            println!(
                "  class {} -> class {} ({}): {}",
                s.class,
                s.target,
                s.kind,
                pairs.join(" ")
            );
        }
    }
    Ok(())
}
