//! Characters as exact multiplicity maps, the Weyl dimension formula, and
//! floating-point evaluation of both closed forms of the character formula.
//!
//! The exact multiplicities come from the Freudenthal recursion; the two
//! numeric forms (alternating-sum quotient and vertex-product sum) exist to
//! cross-check that recursion and each other at generic evaluation points.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, Rat};
use crate::rootsys::{dominant_below, CartanData, EvaluationPoint, Weight};
use crate::weyl::{self, WeylElement};

/// Smallest allowed |<c, root>| at a generic evaluation point.
pub const GENERIC_MIN_PAIRING: f64 = 1e-3;
/// Largest allowed |<c, vector>| before exp() risks double overflow.
pub const GENERIC_MAX_PAIRING: f64 = 30.0;
/// Attempts made when sampling a generic evaluation point.
pub const GENERIC_SAMPLE_ATTEMPTS: usize = 50;

/// A finite formal sum of exponentials: map from weight to non-zero integer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultMap {
    entries: std::collections::BTreeMap<Weight, i64>,
}

impl MultMap {
    pub fn new() -> Self {
        MultMap::default()
    }

    pub fn singleton(w: Weight, m: i64) -> Self {
        let mut mm = MultMap::new();
        mm.add(w, m);
        mm
    }

    /// Add `m` to the coefficient of `w`, dropping the entry if it cancels.
    pub fn add(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &MultMap, k: i64) {
        for (w, &m) in other.iter() {
            self.add(w.clone(), k * m);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    /// Total multiplicity mass (the dimension, for a character).
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Numeric value of the formal sum at an evaluation point.
    pub fn eval(&self, c: &EvaluationPoint) -> f64 {
        self.entries
            .iter()
            .map(|(w, &m)| m as f64 * c.pair(w).exp())
            .sum()
    }

    /// Entries sorted by (level, labels); the deterministic print order.
    pub fn sorted_entries(&self, cd: &CartanData) -> Vec<(Weight, i64)> {
        let mut v: Vec<(Weight, i64)> = self
            .entries
            .iter()
            .map(|(w, &m)| (w.clone(), m))
            .collect();
        v.sort_by_key(|(w, _)| (cd.level(w), w.labels().to_vec()));
        v
    }
}

impl FromIterator<(Weight, i64)> for MultMap {
    fn from_iter<T: IntoIterator<Item = (Weight, i64)>>(iter: T) -> Self {
        let mut mm = MultMap::new();
        for (w, m) in iter {
            mm.add(w, m);
        }
        mm
    }
}

/// Exact weight system of the irreducible with highest weight `lam`,
/// computed by the Freudenthal recursion and expanded over full Weyl orbits.
pub fn weight_system(cd: &CartanData, lam: &Weight) -> Result<MultMap> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let dominants = dominant_below(cd, lam)?;

    // Process by increasing depth below lam.
    let mut by_depth: Vec<(i64, Weight)> = dominants
        .into_iter()
        .map(|mu| {
            let rc = cd
                .integer_root_coords(&lam.sub(&mu))
                .expect("dominant weights below lam lie in lam + Q");
            (rc.height(), mu)
        })
        .collect();
    by_depth.sort_by(|a, b| (a.0, a.1.labels()).cmp(&(b.0, b.1.labels())));

    let lam_rho = lam.add(&cd.rho);
    let lam_rho_norm = cd.inner(&lam_rho, &lam_rho);

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    for (depth, mu) in &by_depth {
        if *depth == 0 {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num = Rat::zero();
        for root in &cd.positive_roots {
            let mut k = 1i64;
            loop {
                let nu = mu.add(&root.weight.scaled(k));
                let dom = cd.dominant_representative_weight(&nu);
                let Some(&m) = mult.get(&dom) else { break };
                num += rat(m) * cd.inner(&nu, &root.weight);
                k += 1;
            }
        }
        let mu_rho = mu.add(&cd.rho);
        let den = lam_rho_norm - cd.inner(&mu_rho, &mu_rho);
        assert!(den.is_positive(), "Freudenthal denominator must be positive");
        let m = rat(2) * num / den;
        assert!(m.is_integer(), "Freudenthal multiplicity must be integral");
        let m = m.to_integer() as i64;
        assert!(m > 0, "weights below lam in lam + Q have positive multiplicity");
        mult.insert(mu.clone(), m);
    }

    let mut full = MultMap::new();
    for (mu, m) in mult {
        for w in weyl::orbit(cd, &mu) {
            full.add(w, m);
        }
    }
    Ok(full)
}

/// Dimension of the irreducible with highest weight `lam`, by the Weyl
/// dimension formula in exact rationals.
pub fn dim(cd: &CartanData, lam: &Weight) -> Result<i64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let lam_rho = lam.add(&cd.rho);
    let mut product = Rat::new(1, 1);
    for root in &cd.positive_roots {
        product *= cd.inner(&lam_rho, &root.weight) / cd.inner(&cd.rho, &root.weight);
    }
    assert!(
        product.is_integer(),
        "Weyl dimension formula must give an integer"
    );
    Ok(product.to_integer() as i64)
}

/// Check that an evaluation point is safely away from all denominator poles
/// and from exp() overflow for the weights involved.
pub fn check_generic(
    cd: &CartanData,
    group: &[WeylElement],
    lam: &Weight,
    c: &EvaluationPoint,
) -> Result<()> {
    if c.coords().len() != cd.rank() {
        return Err(Error::WeightLength {
            got: c.coords().len(),
            rank: cd.rank(),
        });
    }
    for root in &cd.positive_roots {
        let t = c.pair(&root.weight);
        if t.abs() < GENERIC_MIN_PAIRING {
            return Err(Error::NearPole(format!(
                "|<c, {}>| = {:.3e} below {GENERIC_MIN_PAIRING:e}",
                root.weight,
                t.abs()
            )));
        }
        if t.abs() > GENERIC_MAX_PAIRING {
            return Err(Error::NearPole(format!(
                "|<c, {}>| = {:.3e} above overflow guard {GENERIC_MAX_PAIRING}",
                root.weight,
                t.abs()
            )));
        }
    }
    let lam_rho = lam.add(&cd.rho);
    for w in group {
        for v in [lam, &lam_rho, &cd.rho] {
            let t = c.pair(&w.apply(v));
            if t.abs() > GENERIC_MAX_PAIRING {
                return Err(Error::NearPole(format!(
                    "|<c, w{v}>| = {:.3e} above overflow guard {GENERIC_MAX_PAIRING}",
                    t.abs()
                )));
            }
        }
    }
    Ok(())
}

/// Sample a generic evaluation point for `lam`: coordinates of magnitude in
/// [0.05, 2] with random signs, retried until the genericity check passes.
pub fn sample_generic<R: Rng + ?Sized>(
    cd: &CartanData,
    lam: &Weight,
    rng: &mut R,
) -> Result<EvaluationPoint> {
    let group = weyl::enumerate(cd)?;
    for _ in 0..GENERIC_SAMPLE_ATTEMPTS {
        let coords: Vec<f64> = (0..cd.rank())
            .map(|_| {
                let mag = rng.gen_range(0.05..=2.0);
                if rng.gen_bool(0.5) {
                    mag
                } else {
                    -mag
                }
            })
            .collect();
        let c = EvaluationPoint::new(coords);
        if check_generic(cd, &group, lam, &c).is_ok() {
            return Ok(c);
        }
    }
    Err(Error::NearPole(format!(
        "no generic point found in {GENERIC_SAMPLE_ATTEMPTS} attempts"
    )))
}

/// Character value at `c` from the quotient form: the alternating sum over
/// w(lam + rho) divided by the alternating sum over w(rho).
pub fn char_eval_quotient(cd: &CartanData, lam: &Weight, c: &EvaluationPoint) -> Result<f64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let group = weyl::enumerate(cd)?;
    check_generic(cd, &group, lam, c)?;
    let lam_rho = lam.add(&cd.rho);
    let mut num = 0.0;
    let mut den = 0.0;
    for w in &group {
        let s = w.det() as f64;
        num += s * c.pair(&w.apply(&lam_rho)).exp();
        den += s * c.pair(&w.apply(&cd.rho)).exp();
    }
    if den.abs() < f64::MIN_POSITIVE.sqrt() {
        return Err(Error::NearPole("denominator sum vanished".to_string()));
    }
    Ok(num / den)
}

/// Character value at `c` from the Weyl-symmetric product form:
/// sum over w of e^{<c, w lam>} prod over positive roots of
/// (1 - e^{-<c, w a>})^{-1}.
pub fn char_eval_brionform(cd: &CartanData, lam: &Weight, c: &EvaluationPoint) -> Result<f64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let group = weyl::enumerate(cd)?;
    check_generic(cd, &group, lam, c)?;
    let mut sum = 0.0;
    for w in &group {
        let mut term = c.pair(&w.apply(lam)).exp();
        for root in &cd.positive_roots {
            term /= 1.0 - (-c.pair(&w.apply(&root.weight))).exp();
        }
        sum += term;
    }
    Ok(sum)
}

/// Numeric value of the Weyl denominator product
/// e^{<c, rho>} prod (1 - e^{-<c, a>}).
pub fn denominator_product(cd: &CartanData, c: &EvaluationPoint) -> f64 {
    let mut p = c.pair(&cd.rho).exp();
    for root in &cd.positive_roots {
        p *= 1.0 - (-c.pair(&root.weight)).exp();
    }
    p
}

/// Numeric value of the alternating denominator sum over the Weyl group.
pub fn denominator_sum(cd: &CartanData, group: &[WeylElement], c: &EvaluationPoint) -> f64 {
    group
        .iter()
        .map(|w| w.det() as f64 * c.pair(&w.apply(&cd.rho)).exp())
        .sum()
}

/// Session cache of weight systems for one algebra. Behaves as a write-once
/// map; concurrent fills may duplicate work but always agree.
#[derive(Default)]
pub struct CharCache {
    map: Mutex<HashMap<Weight, Arc<MultMap>>>,
}

impl CharCache {
    pub fn new() -> Self {
        CharCache::default()
    }

    pub fn weight_system(&self, cd: &CartanData, lam: &Weight) -> Result<Arc<MultMap>> {
        if let Some(hit) = self.map.lock().unwrap().get(lam) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(weight_system(cd, lam)?);
        let mut guard = self.map.lock().unwrap();
        let entry = guard
            .entry(lam.clone())
            .or_insert_with(|| Arc::clone(&computed));
        Ok(Arc::clone(entry))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build;
    use rand::SeedableRng;

    fn algebra(name: &str) -> CartanData {
        build(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn multmap_cancels_zeros() {
        let mut mm = MultMap::new();
        mm.add(Weight::new(vec![1, 0]), 2);
        mm.add(Weight::new(vec![1, 0]), -2);
        assert!(mm.is_empty());
        mm.add(Weight::new(vec![0, 1]), 3);
        assert_eq!(mm.total(), 3);
    }

    #[test]
    fn a2_adjoint_weight_system() {
        let a2 = algebra("A2");
        let ws = weight_system(&a2, &Weight::new(vec![1, 1])).unwrap();
        assert_eq!(ws.len(), 7);
        assert_eq!(ws.total(), 8);
        assert_eq!(ws.get(&Weight::zero(2)), 2);
        for root in &a2.positive_roots {
            assert_eq!(ws.get(&root.weight), 1);
            assert_eq!(ws.get(&root.weight.neg()), 1);
        }
    }

    #[test]
    fn trivial_weight_system() {
        let g2 = algebra("G2");
        let ws = weight_system(&g2, &Weight::zero(2)).unwrap();
        assert_eq!(ws, MultMap::singleton(Weight::zero(2), 1));
    }

    #[test]
    fn g2_adjoint_weight_system() {
        let g2 = algebra("G2");
        let ws = weight_system(&g2, &Weight::new(vec![1, 0])).unwrap();
        assert_eq!(ws.len(), 13);
        assert_eq!(ws.total(), 14);
        assert_eq!(ws.get(&Weight::zero(2)), 2);
    }

    #[test]
    fn rejects_non_dominant() {
        let a2 = algebra("A2");
        assert!(weight_system(&a2, &Weight::new(vec![-1, 0])).is_err());
        assert!(dim(&a2, &Weight::new(vec![0, -2])).is_err());
    }

    #[test]
    fn dim_examples() {
        let a2 = algebra("A2");
        assert_eq!(dim(&a2, &Weight::new(vec![1, 1])).unwrap(), 8);
        let g2 = algebra("G2");
        assert_eq!(dim(&g2, &Weight::new(vec![1, 1])).unwrap(), 64);
        assert_eq!(dim(&g2, &Weight::new(vec![0, 3])).unwrap(), 77);
        assert_eq!(dim(&g2, &Weight::new(vec![2, 0])).unwrap(), 77);
        let a3 = algebra("A3");
        assert_eq!(dim(&a3, &Weight::new(vec![1, 0, 1])).unwrap(), 15);
    }

    #[test]
    fn weight_system_is_weyl_symmetric_and_sums_to_dim() {
        for (name, lam) in [
            ("A2", vec![2, 1]),
            ("C2", vec![1, 1]),
            ("G2", vec![0, 2]),
            ("A3", vec![1, 1, 0]),
        ] {
            let cd = algebra(name);
            let lam = Weight::new(lam);
            let ws = weight_system(&cd, &lam).unwrap();
            assert_eq!(ws.total(), dim(&cd, &lam).unwrap(), "{name}");
            for (w, &m) in ws.iter() {
                for im in weyl::orbit(&cd, w) {
                    assert_eq!(ws.get(&im), m, "{name} Weyl symmetry");
                }
            }
        }
    }

    #[test]
    fn char_evals_agree_with_exact_sum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let a2 = algebra("A2");
        let lam = Weight::new(vec![1, 1]);
        let ws = weight_system(&a2, &lam).unwrap();
        for _ in 0..5 {
            let c = sample_generic(&a2, &lam, &mut rng).unwrap();
            let exact = ws.eval(&c);
            let quot = char_eval_quotient(&a2, &lam, &c).unwrap();
            let brion = char_eval_brionform(&a2, &lam, &c).unwrap();
            assert!((quot - exact).abs() <= 1e-9 * exact.abs().max(1.0));
            assert!((brion - exact).abs() <= 1e-9 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn char_eval_of_trivial_is_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g2 = algebra("G2");
        let zero = Weight::zero(2);
        let c = sample_generic(&g2, &zero, &mut rng).unwrap();
        let quot = char_eval_quotient(&g2, &zero, &c).unwrap();
        let brion = char_eval_brionform(&g2, &zero, &c).unwrap();
        assert!((quot - 1.0).abs() < 1e-12);
        assert!((brion - 1.0).abs() < 1e-9);
    }

    #[test]
    fn near_pole_is_rejected() {
        let a2 = algebra("A2");
        let c = EvaluationPoint::new(vec![1e-9, 1e-9]);
        assert!(matches!(
            char_eval_quotient(&a2, &Weight::zero(2), &c),
            Err(Error::NearPole(_))
        ));
    }

    #[test]
    fn cache_returns_identical_maps() {
        let c2 = algebra("C2");
        let cache = CharCache::new();
        let lam = Weight::new(vec![1, 1]);
        let a = cache.weight_system(&c2, &lam).unwrap();
        let b = cache.weight_system(&c2, &lam).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, weight_system(&c2, &lam).unwrap());
    }
}
