//! Independent cross-checks of the expansion pipeline.
//!
//! The expansion matrix is normally produced by inverting the triangular
//! matrix of alternating Weyl-group sums. Here the same coefficients are
//! recovered by a second, structurally unrelated route: peel ch_lambda over
//! the exact B_mu multiplicity maps from the top of the order down. Before
//! peeling, every B_mu map is checked against a float evaluation of the raw
//! vertex-cone sum, which ties the exact maps to the defining formula.

use polychar::charmult::{sample_generic, CharCache};
use polychar::expansion::{a_matrix, brion_multiset_cached, default_order};
use polychar::polytope::brion_numeric;
use polychar::rootsys::{build, CartanData};
use rand::SeedableRng;

fn algebra(name: &str) -> CartanData {
    build(name.parse().unwrap()).unwrap()
}

fn check_peeling(cd: &CartanData, class: usize, max_level: i64, numeric_spot_checks: bool) {
    let cache = CharCache::new();
    let order = default_order(cd, class, max_level);
    if order.is_empty() {
        return;
    }
    let bmaps: Vec<_> = order
        .iter()
        .map(|mu| brion_multiset_cached(cd, &cache, mu).unwrap())
        .collect();

    if numeric_spot_checks {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xb10);
        for (mu, bm) in order.iter().zip(&bmaps) {
            for _ in 0..3 {
                let c = sample_generic(cd, mu, &mut rng).unwrap();
                let numeric = brion_numeric(cd, mu, &c).unwrap();
                let exact = bm.eval(&c);
                let rel = (numeric - exact).abs() / exact.abs().max(1.0);
                assert!(
                    rel < 1e-9,
                    "{} B_{mu}: float vertex sum {numeric} vs exact {exact}",
                    cd.id
                );
            }
        }
    }

    let am = a_matrix(cd, &order).unwrap();
    for (i, lam) in order.iter().enumerate() {
        let mut m = cache.weight_system(cd, lam).unwrap().as_ref().clone();
        let mut coeffs = vec![0i64; order.len()];
        for (j, mu) in order.iter().enumerate().rev() {
            let c = m.get(mu);
            if c != 0 {
                coeffs[j] = c;
                m.add_scaled(&bmaps[j], -c);
            }
        }
        assert!(
            m.is_empty(),
            "{} ch_{lam} must be an integer combination of the B maps",
            cd.id
        );
        assert_eq!(
            coeffs, am.rows[i],
            "{} expansion row of {lam}: peeling vs triangular inversion",
            cd.id
        );
    }
}

#[test]
fn peeling_matches_inversion_a2() {
    let cd = algebra("A2");
    for class in 0..3 {
        check_peeling(&cd, class, 6, false);
    }
}

#[test]
fn peeling_matches_inversion_c2() {
    let cd = algebra("C2");
    for class in 0..2 {
        check_peeling(&cd, class, 6, class == 0);
    }
}

#[test]
fn peeling_matches_inversion_g2() {
    check_peeling(&algebra("G2"), 0, 6, true);
}

#[test]
fn peeling_matches_inversion_a3() {
    let cd = algebra("A3");
    for class in 0..4 {
        check_peeling(&cd, class, 4, false);
    }
}

#[test]
fn peeling_matches_inversion_b3() {
    let cd = algebra("B3");
    for class in 0..2 {
        check_peeling(&cd, class, 5, class == 1);
    }
}
