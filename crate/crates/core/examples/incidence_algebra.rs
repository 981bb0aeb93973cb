//! Convolution, inverses, the commutator subspace and the center of I(X, K).

use incidence_lie::{families, Field, IncidenceAlgebra};

fn main() -> incidence_lie::Result<()> {
    let p = families::chain(3)?;
    for field in [Field::Rational, Field::prime(5)?] {
        let alg = IncidenceAlgebra::new(&p, field);
        println!("over {field}: dim I(X, K) = {}", alg.dim());

        // ζ: the constant function 1 on comparable pairs
        let mut zeta = alg.delta();
        for &(x, y) in p.strict_pairs() {
            zeta.set(x, y, field.one());
        }
        let mu = alg.inverse(&zeta)?;
        println!("  zeta = {zeta}");
        println!("  mu   = {mu}");
        println!("  zeta * mu = {}", alg.multiply(&zeta, &mu)?);

        let e12 = alg.unit(0, 1);
        let e23 = alg.unit(1, 2);
        println!("  [e12, e23] = {}", alg.bracket(&e12, &e23)?);

        let commutators = alg.commutator_space();
        println!(
            "  dim [I, I] = {}, equals the radical: {}",
            commutators.dimension(),
            commutators.same_as(&alg.radical_space())
        );
        let center = alg.center();
        println!(
            "  center spanned by {}",
            center
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(())
}
