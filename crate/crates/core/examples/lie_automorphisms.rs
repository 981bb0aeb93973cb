//! Induced maps of poset (anti-)automorphisms as Lie automorphisms, and the
//! proper decomposition check.

use incidence_lie::{families, Field, IncidenceAlgebra, MapKind};

fn main() -> incidence_lie::Result<()> {
    let p = families::fence(4)?;
    let alg = IncidenceAlgebra::new(&p, Field::Rational);
    for lambda in p.poset_maps() {
        let hat = alg.induced_map(&lambda);
        let tau = match lambda.kind() {
            MapKind::Iso => hat,
            MapKind::AntiIso => hat.neg(),
        };
        let nu = alg.check_proper_decomposition(&tau, &tau)?;
        println!(
            "{} {:?}: Lie automorphism {}, ν = 0: {}",
            lambda.kind(),
            lambda.perm(),
            alg.is_lie_automorphism(&tau),
            nu.is_zero()
        );
    }

    // an inner automorphism plus a central shift is still proper
    let mut f = alg.delta();
    f.set(0, 1, Field::Rational.from_int(3));
    let inner = alg.inner_map(&f)?;
    let shift = central_shift(&alg);
    let tau = inner.add(&shift);
    println!(
        "inner + central: Lie automorphism {}",
        alg.is_lie_automorphism(&tau)
    );
    println!(
        "decomposes against the inner part: {}",
        alg.check_proper_decomposition(&tau, &inner).is_ok()
    );
    println!(
        "fails against the identity: {}",
        alg.check_proper_decomposition(
            &tau,
            &incidence_lie::LinearMap::identity(Field::Rational, alg.dim())
        )
        .is_err()
    );
    Ok(())
}

/// Sends `e_x` to `e_x + δ` for the first element and kills everything else.
fn central_shift(alg: &IncidenceAlgebra) -> incidence_lie::LinearMap {
    let field = alg.field();
    let delta = alg.to_vector(&alg.delta());
    let columns = alg
        .basis()
        .iter()
        .map(|&(x, y)| {
            if (x, y) == (0, 0) {
                delta.clone()
            } else {
                vec![field.zero(); alg.dim()]
            }
        })
        .collect();
    incidence_lie::LinearMap::from_columns(field, columns).expect("square")
}
