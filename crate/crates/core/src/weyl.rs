//! Weyl group machinery: simple reflections, full-group enumeration, orbits,
//! dominant representatives, the shifted action, and inversion sets.
//!
//! Group elements are stored as integer matrices acting on Dynkin
//! coordinates. At the ranks this crate targets, dense enumeration is cheap
//! and composition is plain matrix multiplication.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{CartanData, RootCoords, Weight};

/// Full-group enumeration refuses to expand groups larger than this.
pub const ENUMERATION_BOUND: u64 = 1_000_000;

/// One Weyl group element: its matrix on Dynkin coordinates, cached sign,
/// and Coxeter length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    action: Vec<Vec<i64>>,
    det: i64,
    length: usize,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            action: identity_matrix(rank),
            det: 1,
            length: 0,
        }
    }

    /// Wrap an integer matrix known to represent a Weyl element, computing
    /// its determinant and inversion count.
    pub fn from_action(cd: &CartanData, action: Vec<Vec<i64>>) -> Self {
        let det = det_small(&action);
        debug_assert!(det == 1 || det == -1);
        let length = count_inversions(cd, &action);
        WeylElement {
            action,
            det,
            length,
        }
    }

    pub fn action(&self) -> &[Vec<i64>] {
        &self.action
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let labels = self
            .action
            .iter()
            .map(|row| row.iter().zip(w.labels()).map(|(&m, &x)| m * x).sum())
            .collect();
        Weight::new(labels)
    }

    /// Shifted (dot) action: w.x = w(x + rho) - rho.
    pub fn apply_shifted(&self, cd: &CartanData, w: &Weight) -> Weight {
        self.apply(&w.add(&cd.rho)).sub(&cd.rho)
    }
}

fn identity_matrix(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Left-multiply: out = r_i * m.
fn reflect_rows(cd: &CartanData, i: usize, m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cd.rank();
    let mut out = m.to_vec();
    let row_i = m[i].clone();
    for j in 0..rank {
        let a = cd.cartan[i][j];
        if a == 0 {
            continue;
        }
        for k in 0..rank {
            out[j][k] -= a * row_i[k];
        }
    }
    out
}

fn det_small(m: &[Vec<i64>]) -> i64 {
    // Fraction-free Gaussian elimination (Bareiss) on a copy.
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn count_inversions(cd: &CartanData, action: &[Vec<i64>]) -> usize {
    let mut count = 0;
    for root in &cd.positive_roots {
        let image = apply_matrix(action, &root.weight);
        let coords = cd
            .root_by_weight(&image)
            .expect("Weyl element must permute roots");
        if coords.is_nonpositive() {
            count += 1;
        }
    }
    count
}

fn apply_matrix(m: &[Vec<i64>], w: &Weight) -> Weight {
    Weight::new(
        m.iter()
            .map(|row| row.iter().zip(w.labels()).map(|(&a, &x)| a * x).sum())
            .collect(),
    )
}

/// Simple reflection r_i mu = mu - mu_i a_i (0-based index).
pub fn reflect(cd: &CartanData, i: usize, mu: &Weight) -> Result<Weight> {
    if i >= cd.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: cd.rank(),
        });
    }
    Ok(cd.reflect_raw(i, mu))
}

/// Enumerate the full Weyl group by breadth-first closure over the simple
/// reflections. Elements come back sorted by (length, action), with the
/// identity first.
pub fn enumerate(cd: &CartanData) -> Result<Vec<WeylElement>> {
    if cd.weyl_order > ENUMERATION_BOUND {
        return Err(Error::GroupTooLarge {
            order: cd.weyl_order,
            bound: ENUMERATION_BOUND,
        });
    }
    let rank = cd.rank();
    let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    let mut queue: VecDeque<(Vec<Vec<i64>>, usize)> = VecDeque::new();
    let start = identity_matrix(rank);
    seen.insert(start.clone(), 0);
    queue.push_back((start, 0));
    while let Some((m, len)) = queue.pop_front() {
        for i in 0..rank {
            let next = reflect_rows(cd, i, &m);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), len + 1);
                queue.push_back((next, len + 1));
            }
        }
    }
    assert_eq!(
        seen.len() as u64,
        cd.weyl_order,
        "enumerated group size must match the classical order"
    );
    let mut elements: Vec<WeylElement> = seen
        .into_iter()
        .map(|(action, length)| {
            let det = det_small(&action);
            WeylElement {
                action,
                det,
                length,
            }
        })
        .collect();
    elements.sort_by(|a, b| (a.length, &a.action).cmp(&(b.length, &b.action)));
    Ok(elements)
}

/// The Weyl orbit of a weight, sorted by (level, labels).
pub fn orbit(cd: &CartanData, lam: &Weight) -> Vec<Weight> {
    let rank = cd.rank();
    let mut seen: std::collections::BTreeSet<Weight> = std::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..rank {
            if w.get(i) == 0 {
                continue;
            }
            let r = cd.reflect_raw(i, &w);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_by_key(|w| (cd.level(w), w.labels().to_vec()));
    out
}

/// Dominant representative of the orbit of `mu`, together with an element
/// sending `mu` to it.
pub fn dominant_representative(cd: &CartanData, mu: &Weight) -> (Weight, WeylElement) {
    let mut x = mu.clone();
    let mut m = identity_matrix(cd.rank());
    while let Some(i) = x.labels().iter().position(|&l| l < 0) {
        x = cd.reflect_raw(i, &x);
        m = reflect_rows(cd, i, &m);
    }
    let elem = WeylElement::from_action(cd, m);
    (x, elem)
}

/// Result of reducing a character index through the shifted Weyl action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftedReduce {
    /// mu + rho lies on a wall; the character vanishes.
    Zero,
    /// ch_mu = sign * ch_dominant.
    Reduced { sign: i64, dominant: Weight },
}

/// Reduce an arbitrary weight to Zero or a signed dominant weight under the
/// shifted action, so that ch_mu = sign * ch_nu.
pub fn shifted_reduce(cd: &CartanData, mu: &Weight) -> ShiftedReduce {
    let mut x = mu.add(&cd.rho);
    let mut sign = 1i64;
    loop {
        if x.labels().iter().any(|&l| l == 0) {
            return ShiftedReduce::Zero;
        }
        match x.labels().iter().position(|&l| l < 0) {
            Some(i) => {
                x = cd.reflect_raw(i, &x);
                sign = -sign;
            }
            None => {
                return ShiftedReduce::Reduced {
                    sign,
                    dominant: x.sub(&cd.rho),
                }
            }
        }
    }
}

/// The inversion set R^w_< = {a in R_> | w a in R_<}, in positive-root order.
pub fn inversion_set(cd: &CartanData, w: &WeylElement) -> Vec<RootCoords> {
    let mut out = Vec::new();
    for root in &cd.positive_roots {
        let image = w.apply(&root.weight);
        let coords = cd
            .root_by_weight(&image)
            .expect("Weyl element must permute roots");
        if coords.is_nonpositive() {
            out.push(root.coords.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build;

    fn algebra(name: &str) -> CartanData {
        build(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let a2 = algebra("A2");
        assert_eq!(
            reflect(&a2, 0, &Weight::new(vec![1, 0])).unwrap(),
            Weight::new(vec![-1, 1])
        );
        // r_i fixes weights with mu_i = 0.
        assert_eq!(
            reflect(&a2, 0, &Weight::new(vec![0, 5])).unwrap(),
            Weight::new(vec![0, 5])
        );
        // r_i(rho) drops the i-th label to -1.
        let g2 = algebra("G2");
        let r = reflect(&g2, 1, &g2.rho).unwrap();
        assert_eq!(r.get(1), -1);
        assert!(reflect(&a2, 2, &Weight::zero(2)).is_err());
    }

    #[test]
    fn reflection_is_involution() {
        let c2 = algebra("C2");
        for labels in [[1, 0], [3, -2], [0, 7]] {
            let w = Weight::new(labels.to_vec());
            for i in 0..2 {
                let rr = reflect(&c2, i, &reflect(&c2, i, &w).unwrap()).unwrap();
                assert_eq!(rr, w);
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(&algebra("A2")).unwrap().len(), 6);
        assert_eq!(enumerate(&algebra("G2")).unwrap().len(), 12);
        assert_eq!(enumerate(&algebra("A3")).unwrap().len(), 24);
        let a2 = enumerate(&algebra("A2")).unwrap();
        assert_eq!(a2.iter().filter(|w| w.det() == 1).count(), 3);
        assert_eq!(a2[0], WeylElement::identity(2));
    }

    #[test]
    fn enumerate_rejects_large_groups() {
        let e7 = algebra("E7");
        assert!(matches!(
            enumerate(&e7),
            Err(Error::GroupTooLarge { order: 2_903_040, .. })
        ));
    }

    #[test]
    fn orbit_examples() {
        let g2 = algebra("G2");
        let long_roots = orbit(&g2, &Weight::new(vec![1, 0]));
        assert_eq!(long_roots.len(), 6);

        let a2 = algebra("A2");
        assert_eq!(orbit(&a2, &a2.rho).len(), 6);
        assert_eq!(orbit(&a2, &Weight::zero(2)), vec![Weight::zero(2)]);
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        for name in ["A3", "B3", "C2", "G2"] {
            let cd = algebra(name);
            let weights: Vec<Weight> = vec![
                Weight::zero(cd.rank()),
                Weight::fundamental(cd.rank(), 0),
                cd.rho.clone(),
            ];
            for w in weights {
                let orb = orbit(&cd, &w);
                assert_eq!(cd.weyl_order as usize % orb.len(), 0, "{name}");
                // Regular weights sweep the full group.
                if w == cd.rho {
                    assert_eq!(orb.len() as u64, cd.weyl_order);
                }
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a2 = algebra("A2");
        let (dom, w) = dominant_representative(&a2, &Weight::new(vec![-1, 1]));
        assert_eq!(dom, Weight::new(vec![1, 0]));
        assert_eq!(w.apply(&Weight::new(vec![-1, 1])), dom);

        let (dom2, id) = dominant_representative(&a2, &Weight::new(vec![2, 3]));
        assert_eq!(dom2, Weight::new(vec![2, 3]));
        assert_eq!(id, WeylElement::identity(2));

        let g2 = algebra("G2");
        let mu = Weight::new(vec![0, -1]);
        let (dom3, w3) = dominant_representative(&g2, &mu);
        assert!(g2.is_dominant(&dom3));
        assert!(orbit(&g2, &mu).contains(&dom3));
        assert_eq!(w3.apply(&mu), dom3);
    }

    #[test]
    fn dominant_representative_constant_on_orbits() {
        let c2 = algebra("C2");
        let lam = Weight::new(vec![2, 1]);
        let (dom, _) = dominant_representative(&c2, &lam);
        for w in orbit(&c2, &lam) {
            assert_eq!(dominant_representative(&c2, &w).0, dom);
        }
    }

    #[test]
    fn shifted_reduce_examples() {
        let a2 = algebra("A2");
        // Dominant weights reduce to themselves with sign +1.
        let lam = Weight::new(vec![2, 0]);
        assert_eq!(
            shifted_reduce(&a2, &lam),
            ShiftedReduce::Reduced {
                sign: 1,
                dominant: lam.clone()
            }
        );
        // A label of -1 puts mu + rho on a wall.
        assert_eq!(
            shifted_reduce(&a2, &Weight::new(vec![-1, 3])),
            ShiftedReduce::Zero
        );
        assert_eq!(
            shifted_reduce(&a2, &Weight::new(vec![-2, 1])),
            ShiftedReduce::Reduced {
                sign: -1,
                dominant: Weight::zero(2)
            }
        );
    }

    #[test]
    fn shifted_reduce_is_dot_equivariant() {
        let g2 = algebra("G2");
        let group = enumerate(&g2).unwrap();
        for mu in [Weight::new(vec![1, 2]), Weight::new(vec![0, 3])] {
            let base = shifted_reduce(&g2, &mu);
            for w in &group {
                let moved = w.apply_shifted(&g2, &mu);
                let got = shifted_reduce(&g2, &moved);
                match (&base, &got) {
                    (
                        ShiftedReduce::Reduced { sign, dominant },
                        ShiftedReduce::Reduced {
                            sign: s2,
                            dominant: d2,
                        },
                    ) => {
                        assert_eq!(dominant, d2);
                        assert_eq!(sign * w.det(), *s2);
                    }
                    (ShiftedReduce::Zero, ShiftedReduce::Zero) => {}
                    _ => panic!("orbit members must reduce consistently"),
                }
            }
        }
    }

    #[test]
    fn inversion_set_examples() {
        let a3 = algebra("A3");
        let group = enumerate(&a3).unwrap();
        assert!(inversion_set(&a3, &group[0]).is_empty());
        // Simple reflections invert exactly their own root.
        for i in 0..3 {
            let m = reflect_rows(&a3, i, &identity_matrix(3));
            let w = WeylElement::from_action(&a3, m);
            let inv = inversion_set(&a3, &w);
            assert_eq!(inv.len(), 1);
            assert_eq!(inv[0].coeffs()[i], 1);
            assert_eq!(inv[0].height(), 1);
        }
        // The longest element inverts every positive root.
        let longest = group.last().unwrap();
        assert_eq!(inversion_set(&a3, longest).len(), a3.positive_roots.len());
    }

    /// det w = (-1)^{inversions} and rho - w(rho) = -w(sum of the inversion
    /// set), for every element of every group through F4. The image form of
    /// the rho identity is the per-element-exact one; summing the inversion
    /// set of w^{-1} gives the same weight.
    #[test]
    fn inversion_identities_all_groups() {
        for name in [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
        ] {
            let cd = algebra(name);
            let group = enumerate(&cd).unwrap();
            for w in &group {
                let inv = inversion_set(&cd, w);
                assert_eq!(w.det(), if inv.len() % 2 == 0 { 1 } else { -1 });
                assert_eq!(w.length(), inv.len());
                let mut sum = Weight::zero(cd.rank());
                for coords in &inv {
                    sum = sum.add(&cd.root_coords_to_weight(coords));
                }
                assert_eq!(
                    cd.rho.sub(&w.apply(&cd.rho)),
                    w.apply(&sum).neg(),
                    "{name}"
                );
            }
        }
    }
}
