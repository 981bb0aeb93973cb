//! The groups M, AM and P of edge bijections on crowns, with their structure.

use incidence_lie::groups::{crown_parity_witness, structure_report, verify_group};
use incidence_lie::{families, Analyzer, EnumerationOptions};

fn main() -> incidence_lie::Result<()> {
    let opts = EnumerationOptions {
        jobs: 4,
        ..Default::default()
    };
    for n in 2..=4 {
        let p = families::crown(n)?;
        let a = Analyzer::new(&p);
        let m = verify_group(a.enumerate_m(&opts)?)?;
        let am = verify_group(a.enumerate_am(&opts)?)?;
        let pg = verify_group(a.enumerate_p())?;
        println!(
            "Cr{n}: |M| = {}, |AM| = {}, |P| = {}",
            m.order(),
            am.order(),
            pg.order()
        );

        let report = structure_report(&pg, &p, Some(n));
        println!(
            "  P element orders {:?}, dihedral rotation order {:?}",
            report.element_orders, report.dihedral
        );
        let parity = crown_parity_witness(&am, n)?;
        println!(
            "  AM keeps or swaps odd and even chains; odd-preserving subgroup of order {} and index {}",
            parity.odd_preserving_order, parity.index
        );
    }
    Ok(())
}
