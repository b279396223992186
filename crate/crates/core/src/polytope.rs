//! Weight polytopes and vertex-cone sums: exact lattice-point enumeration,
//! closed-form point counts for the low-rank algebras, numeric evaluation of
//! the vertex sum B_lambda, and a small generic evaluator for explicitly
//! given simple lattice polytopes with unimodular vertex cones.

use crate::error::{Error, Result};
use crate::linalg::is_unimodular_basis;
use crate::rootsys::{dominant_below, CartanData, EvaluationPoint, Weight};
use crate::weyl;

/// Lattice points of the weight polytope of `lam` in the shifted root
/// lattice lam + Q: all weights whose dominant representative lies below
/// `lam`. Sorted by (level, labels).
pub fn points(cd: &CartanData, lam: &Weight) -> Result<Vec<Weight>> {
    let dominants = dominant_below(cd, lam)?;
    let mut set = std::collections::BTreeSet::new();
    for mu in &dominants {
        for w in weyl::orbit(cd, mu) {
            set.insert(w);
        }
    }
    let mut out: Vec<Weight> = set.into_iter().collect();
    out.sort_by_key(|w| (cd.level(w), w.labels().to_vec()));
    Ok(out)
}

/// Closed-form lattice-point count of the weight polytope, for the algebras
/// where a printed polynomial exists (A2, C2, G2, A3).
pub fn count_closed_form(cd: &CartanData, lam: &Weight) -> Result<i64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let name = cd.id.to_string();
    let l = lam.labels();
    match name.as_str() {
        "A2" => {
            let (a, b) = (l[0], l[1]);
            let num = a * a + 4 * a * b + b * b + 3 * a + 3 * b + 2;
            assert!(num % 2 == 0);
            Ok(num / 2)
        }
        "C2" => {
            let (a, b) = (l[0], l[1]);
            Ok(a * a + 4 * a * b + 2 * b * b + 2 * a + 2 * b + 1)
        }
        "G2" => {
            let (a, b) = (l[0], l[1]);
            Ok(9 * a * a + 12 * a * b + 3 * b * b + 3 * a + 3 * b + 1)
        }
        "A3" => {
            let (a, b, c) = (l[0], l[1], l[2]);
            let linear = 11 * a + 14 * b + 11 * c;
            let quadratic = 4 * a * b + 3 * a * c + 4 * b * c + a * a + 2 * b * b + c * c;
            let cubic = 36 * a * b * c
                + 12 * a * b * b
                + 12 * b * b * c
                + 6 * a * a * b
                + 6 * b * c * c
                + 9 * a * a * c
                + 9 * a * c * c
                + a * a * a
                + 4 * b * b * b
                + c * c * c;
            let num = 6 + linear + 6 * quadratic + cubic;
            assert!(num % 6 == 0);
            Ok(num / 6)
        }
        _ => Err(Error::Unsupported(
            name,
            "no closed-form point count".to_string(),
        )),
    }
}

/// Numeric vertex sum B_lambda at a generic point: the sum over the full
/// Weyl group of e^{<c, w lam>} prod over simple roots of
/// (1 - e^{-<c, w a_i>})^{-1}. The full group is used even when `lam` is
/// stabilized by part of it.
pub fn brion_numeric(cd: &CartanData, lam: &Weight, c: &EvaluationPoint) -> Result<f64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let group = weyl::enumerate(cd)?;
    crate::charmult::check_generic(cd, &group, lam, c)?;
    let mut sum = 0.0;
    for w in &group {
        let mut term = c.pair(&w.apply(lam)).exp();
        for alpha in &cd.simple_root_weights {
            term /= 1.0 - (-c.pair(&w.apply(alpha))).exp();
        }
        sum += term;
    }
    Ok(sum)
}

/// Cone of feasible directions at one vertex of a lattice polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    pub apex: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
}

/// An explicitly presented simple lattice polytope: vertices plus one
/// feasible-direction cone per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericPolytope {
    pub dimension: usize,
    pub vertices: Vec<Vec<i64>>,
    pub cones: Vec<VertexCone>,
}

impl GenericPolytope {
    pub fn new(dimension: usize, cones: Vec<VertexCone>) -> Self {
        let vertices = cones.iter().map(|c| c.apex.clone()).collect();
        GenericPolytope {
            dimension,
            vertices,
            cones,
        }
    }
}

/// Evaluate the vertex-cone sum of an explicit polytope at a real point:
/// sum over vertices of e^{<c, v>} prod over generators of
/// (1 - e^{<c, u>})^{-1}. Every cone must be unimodular.
pub fn generic_brion_numeric(p: &GenericPolytope, c: &[f64]) -> Result<f64> {
    let pair = |v: &[i64]| -> f64 { v.iter().zip(c).map(|(&x, ci)| x as f64 * ci).sum() };
    for cone in &p.cones {
        if cone.generators.len() > p.dimension || !is_unimodular_basis(&cone.generators) {
            return Err(Error::NonUnimodularCone {
                vertex: cone.apex.clone(),
            });
        }
        for u in &cone.generators {
            let t = pair(u);
            if t.abs() < crate::charmult::GENERIC_MIN_PAIRING {
                return Err(Error::NearPole(format!(
                    "|<c, {u:?}>| = {:.3e} at vertex {:?}",
                    t.abs(),
                    cone.apex
                )));
            }
            if t.abs() > crate::charmult::GENERIC_MAX_PAIRING {
                return Err(Error::NearPole(format!(
                    "|<c, {u:?}>| = {:.3e} above overflow guard",
                    t.abs()
                )));
            }
        }
    }
    let mut sum = 0.0;
    for cone in &p.cones {
        let mut term = pair(&cone.apex).exp();
        for u in &cone.generators {
            term /= 1.0 - pair(u).exp();
        }
        sum += term;
    }
    Ok(sum)
}

/// The one-dimensional interval with vertices (2) and (7); its exponential
/// sum is e^{7c} + ... + e^{2c}.
pub fn example_interval() -> GenericPolytope {
    GenericPolytope::new(
        1,
        vec![
            VertexCone {
                apex: vec![7],
                generators: vec![vec![-1]],
            },
            VertexCone {
                apex: vec![2],
                generators: vec![vec![1]],
            },
        ],
    )
}

/// The lattice triangle with vertices (0,0), (1,0), (1,1); its only lattice
/// points are its vertices.
pub fn example_triangle() -> GenericPolytope {
    GenericPolytope::new(
        2,
        vec![
            VertexCone {
                apex: vec![1, 1],
                generators: vec![vec![-1, -1], vec![0, -1]],
            },
            VertexCone {
                apex: vec![1, 0],
                generators: vec![vec![-1, 0], vec![0, 1]],
            },
            VertexCone {
                apex: vec![0, 0],
                generators: vec![vec![1, 0], vec![1, 1]],
            },
        ],
    )
}

/// Exact lattice points of [`example_interval`], for oracle comparisons.
pub fn example_interval_points() -> Vec<Vec<i64>> {
    (2..=7).map(|k| vec![k]).collect()
}

/// Exact lattice points of [`example_triangle`].
pub fn example_triangle_points() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![1, 0], vec![1, 1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmult::{sample_generic, weight_system};
    use crate::rootsys::build;
    use rand::SeedableRng;

    fn algebra(name: &str) -> CartanData {
        build(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn a2_adjoint_points() {
        let a2 = algebra("A2");
        let pts = points(&a2, &Weight::new(vec![1, 1])).unwrap();
        assert_eq!(pts.len(), 7);
        assert!(pts.contains(&Weight::zero(2)));
    }

    #[test]
    fn single_point_for_zero() {
        let c2 = algebra("C2");
        assert_eq!(points(&c2, &Weight::zero(2)).unwrap(), vec![Weight::zero(2)]);
    }

    #[test]
    fn g2_adjoint_points() {
        let g2 = algebra("G2");
        let pts = points(&g2, &Weight::new(vec![1, 0])).unwrap();
        assert_eq!(pts.len(), 13);
    }

    #[test]
    fn points_contain_vertex_orbit_and_match_support() {
        for (name, lam) in [("A2", vec![2, 1]), ("C2", vec![1, 2]), ("G2", vec![1, 1])] {
            let cd = algebra(name);
            let lam = Weight::new(lam);
            let pts = points(&cd, &lam).unwrap();
            for v in weyl::orbit(&cd, &lam) {
                assert!(pts.contains(&v), "{name} vertex in points");
            }
            let ws = weight_system(&cd, &lam).unwrap();
            let support: Vec<Weight> = ws.sorted_entries(&cd).into_iter().map(|(w, _)| w).collect();
            assert_eq!(pts, support, "{name} points = character support");
        }
    }

    #[test]
    fn closed_form_examples() {
        let a2 = algebra("A2");
        assert_eq!(count_closed_form(&a2, &Weight::new(vec![1, 1])).unwrap(), 7);
        let g2 = algebra("G2");
        assert_eq!(count_closed_form(&g2, &Weight::new(vec![0, 3])).unwrap(), 37);
        let a3 = algebra("A3");
        assert_eq!(
            count_closed_form(&a3, &Weight::new(vec![1, 0, 1])).unwrap(),
            13
        );
        let b3 = algebra("B3");
        assert!(count_closed_form(&b3, &Weight::zero(3)).is_err());
    }

    #[test]
    fn closed_form_matches_enumeration_spot() {
        for (name, max) in [("A2", 5), ("C2", 5), ("G2", 4)] {
            let cd = algebra(name);
            for a in 0..=max {
                for b in 0..=max {
                    let lam = Weight::new(vec![a, b]);
                    if cd.level(&lam) > max {
                        continue;
                    }
                    assert_eq!(
                        points(&cd, &lam).unwrap().len() as i64,
                        count_closed_form(&cd, &lam).unwrap(),
                        "{name} {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn brion_numeric_trivial_is_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a2 = algebra("A2");
        let zero = Weight::zero(2);
        let c = sample_generic(&a2, &zero, &mut rng).unwrap();
        let b = brion_numeric(&a2, &zero, &c).unwrap();
        assert!((b - 1.0).abs() < 1e-9);
    }

    #[test]
    fn brion_numeric_matches_point_sum_for_adjoints() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (name, lam) in [("A2", vec![1, 1]), ("G2", vec![1, 0])] {
            let cd = algebra(name);
            let lam = Weight::new(lam);
            let pts = points(&cd, &lam).unwrap();
            for _ in 0..5 {
                let c = sample_generic(&cd, &lam, &mut rng).unwrap();
                let exact: f64 = pts.iter().map(|p| c.pair(p).exp()).sum();
                let b = brion_numeric(&cd, &lam, &c).unwrap();
                assert!(
                    (b - exact).abs() <= 1e-9 * exact.abs().max(1.0),
                    "{name}: {b} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn generic_interval_sum() {
        let p = example_interval();
        let c = [-0.37];
        let direct: f64 = example_interval_points()
            .iter()
            .map(|v| (v[0] as f64 * c[0]).exp())
            .sum();
        let brion = generic_brion_numeric(&p, &c).unwrap();
        assert!((brion - direct).abs() <= 1e-12 * direct.abs());
    }

    #[test]
    fn generic_triangle_sum() {
        let p = example_triangle();
        let c = [0.41, -0.93];
        let direct: f64 = example_triangle_points()
            .iter()
            .map(|v| (v[0] as f64 * c[0] + v[1] as f64 * c[1]).exp())
            .sum();
        let brion = generic_brion_numeric(&p, &c).unwrap();
        assert!((brion - direct).abs() <= 1e-12 * direct.abs());
    }

    #[test]
    fn degenerate_single_vertex() {
        let p = GenericPolytope::new(
            2,
            vec![VertexCone {
                apex: vec![3, -2],
                generators: vec![],
            }],
        );
        let c = [0.5, 0.25];
        let expected = (3.0 * 0.5 + -2.0 * 0.25f64).exp();
        assert!((generic_brion_numeric(&p, &c).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn non_unimodular_cone_rejected() {
        let p = GenericPolytope::new(
            2,
            vec![VertexCone {
                apex: vec![0, 0],
                generators: vec![vec![1, 0], vec![1, 3]],
            }],
        );
        assert!(matches!(
            generic_brion_numeric(&p, &[0.3, 0.4]),
            Err(Error::NonUnimodularCone { .. })
        ));
    }

    #[test]
    fn near_pole_rejected_for_generic_polytope() {
        let p = example_interval();
        assert!(matches!(
            generic_brion_numeric(&p, &[1e-9]),
            Err(Error::NearPole(_))
        ));
    }
}
