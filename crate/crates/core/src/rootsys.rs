//! Static data of finite simple root systems: Cartan matrices, positive
//! roots, the invariant quadratic form, distinguished weights, and the
//! lattice-congruence structure P/Q.
//!
//! Conventions (these fix every golden value downstream):
//!
//! * The Cartan matrix is `A[i][j] = 2(a_i, a_j)/(a_j, a_j)`, so the Dynkin
//!   labels of the simple root `a_i` are the i-th *row* of `A`.
//! * For C_r the short simple roots come first (`a_1` short for C2); for G2
//!   the second simple root `a_2` is short; for B_r and F4 the short roots
//!   sit at the high-index end.
//! * Long roots have squared length 2.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{invert_rational, rat, smith_normal_form, Rat};

/// Series letter of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A simple Lie algebra identified by series and rank, e.g. `A2`, `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    pub series: Series,
    pub rank: usize,
}

impl AlgebraId {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(AlgebraId { series, rank })
        } else {
            let reason = match series {
                Series::A => "series A requires rank >= 1",
                Series::B => "series B requires rank >= 2",
                Series::C => "series C requires rank >= 2",
                Series::D => "series D requires rank >= 3",
                Series::E => "series E requires rank in {6, 7, 8}",
                Series::F => "series F requires rank 4",
                Series::G => "series G requires rank 2",
            };
            Err(Error::InvalidAlgebra {
                series: series.letter(),
                rank,
                reason: reason.to_string(),
            })
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::ParseAlgebra(s.to_string()))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(Error::ParseAlgebra(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseAlgebra(s.to_string()))?;
        AlgebraId::new(series, rank)
    }
}

/// A weight in the fundamental-weight (Dynkin label) basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The i-th fundamental weight (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    /// Parse a comma-separated label list such as `"1,0,1"`.
    pub fn parse(s: &str, rank: usize) -> Result<Weight> {
        let labels: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let labels = labels.map_err(|_| Error::ParseWeight(s.to_string()))?;
        if labels.len() != rank {
            return Err(Error::WeightLength {
                got: labels.len(),
                rank,
            });
        }
        Ok(Weight(labels))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootCoords(Vec<i64>);

impl RootCoords {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootCoords(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        RootCoords(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RootCoords) -> RootCoords {
        RootCoords(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }
}

impl fmt::Display for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A positive root carried in both bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub coords: RootCoords,
    pub weight: Weight,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.coords.height()
    }
}

/// A real evaluation point; formal exponentials are evaluated through the
/// pairing `<c, mu> = sum_i c_i mu_i` on Dynkin coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationPoint(Vec<f64>);

impl EvaluationPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        EvaluationPoint(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn pair(&self, w: &Weight) -> f64 {
        self.0
            .iter()
            .zip(w.labels())
            .map(|(c, &x)| c * x as f64)
            .sum()
    }
}

/// Rational root-basis coordinates of a weight, with an integrality flag
/// marking membership in the root lattice Q.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRootCoords {
    pub coeffs: Vec<Rat>,
    pub integral: bool,
}

struct CongruenceMap {
    factors: Vec<i64>,
    row_transform: Vec<Vec<i64>>,
}

/// Immutable per-algebra record of all static root-system data.
pub struct CartanData {
    pub id: AlgebraId,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub qform: Vec<Vec<Rat>>,
    pub positive_roots: Vec<PositiveRoot>,
    pub simple_root_weights: Vec<Weight>,
    pub rho: Weight,
    pub theta: PositiveRoot,
    pub comarks: Vec<i64>,
    pub weyl_order: u64,
    pub center_order: u64,
    /// Squared lengths of the simple roots, long roots normalized to 2.
    pub simple_root_norms: Vec<Rat>,
    inv_cartan_t: Vec<Vec<Rat>>,
    congruence: CongruenceMap,
    root_index: HashMap<Weight, RootCoords>,
    cc_matrix: Vec<Vec<i64>>,
}

/// Construct the full static record for a valid algebra id.
pub fn build(id: AlgebraId) -> Result<CartanData> {
    // Re-validate so a hand-built id cannot smuggle in a bad pair.
    let id = AlgebraId::new(id.series, id.rank)?;
    let rank = id.rank;
    let cartan = cartan_matrix(id);

    let symmetrizers = symmetrizers(&cartan);
    let d_min = *symmetrizers.iter().min().expect("rank >= 1");
    let simple_root_norms: Vec<Rat> = symmetrizers
        .iter()
        .map(|&d| rat(2) * rat(d_min) / rat(d))
        .collect();

    let cartan_rat: Vec<Vec<Rat>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let cartan_t_rat: Vec<Vec<Rat>> = (0..rank)
        .map(|i| (0..rank).map(|j| rat(cartan[j][i])).collect())
        .collect();
    let inv_cartan = invert_rational(&cartan_rat);
    let inv_cartan_t = invert_rational(&cartan_t_rat);

    // (L^i, L^j) = (A^-1)_ij (a_j, a_j) / 2
    let qform: Vec<Vec<Rat>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| inv_cartan[i][j] * simple_root_norms[j] / rat(2))
                .collect()
        })
        .collect();

    let simple_root_weights: Vec<Weight> = cartan.iter().map(|row| Weight::new(row.clone())).collect();

    let (positive_roots, root_index) = generate_roots(&cartan, &simple_root_weights);
    let theta = positive_roots.last().expect("nonempty root system").clone();
    assert!(
        theta.weight.labels().iter().all(|&x| x >= 0),
        "highest root must be dominant"
    );
    assert!(
        positive_roots.len() < 2
            || positive_roots[positive_roots.len() - 2].height() < theta.height(),
        "highest root must be the unique root of maximal height"
    );

    let rho = Weight::new(vec![1; rank]);

    // theta is long, so theta-check = theta and the comarks are the
    // coefficients of theta-check over the simple coroots.
    let comarks: Vec<i64> = (0..rank)
        .map(|i| {
            let c = rat(theta.coords.coeffs()[i]) * simple_root_norms[i] / rat(2);
            assert!(c.is_integer(), "comarks must be integral");
            c.to_integer() as i64
        })
        .collect();

    let snf = smith_normal_form(&transpose(&cartan));
    let center_order: u64 = snf.factors.iter().map(|&d| d.unsigned_abs()).product();
    let congruence = CongruenceMap {
        factors: snf.factors,
        row_transform: snf.row_transform,
    };

    let mut cd = CartanData {
        id,
        weyl_order: weyl_order(id),
        center_order,
        cartan,
        symmetrizers,
        qform,
        positive_roots,
        simple_root_weights,
        rho,
        theta,
        comarks,
        inv_cartan_t,
        simple_root_norms,
        congruence,
        root_index,
        cc_matrix: Vec::new(),
    };
    cd.cc_matrix = charge_conjugation_matrix(&cd);
    Ok(cd)
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.id.rank
    }

    /// Apply the simple reflection r_i (0-based index) without bounds checks.
    pub(crate) fn reflect_raw(&self, i: usize, w: &Weight) -> Weight {
        let mut labels = w.labels().to_vec();
        let wi = labels[i];
        for (j, x) in labels.iter_mut().enumerate() {
            *x -= wi * self.cartan[i][j];
        }
        Weight::new(labels)
    }

    /// Rational simple-root coordinates of a weight, with integrality flag.
    pub fn to_root_coords(&self, w: &Weight) -> Result<RationalRootCoords> {
        self.check_len(w)?;
        let coeffs: Vec<Rat> = (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| self.inv_cartan_t[i][j] * rat(w.get(j)))
                    .sum()
            })
            .collect();
        let integral = coeffs.iter().all(|c| c.is_integer());
        Ok(RationalRootCoords { coeffs, integral })
    }

    /// Integer root coordinates when the weight lies in Q, else None.
    pub fn integer_root_coords(&self, w: &Weight) -> Option<RootCoords> {
        let rc = self.to_root_coords(w).ok()?;
        if !rc.integral {
            return None;
        }
        Some(RootCoords::new(
            rc.coeffs.iter().map(|c| c.to_integer() as i64).collect(),
        ))
    }

    /// The weight (Dynkin labels) of an integer root-lattice vector.
    pub fn root_coords_to_weight(&self, c: &RootCoords) -> Weight {
        let mut labels = vec![0i64; self.rank()];
        for (i, &ci) in c.coeffs().iter().enumerate() {
            for (j, l) in labels.iter_mut().enumerate() {
                *l += ci * self.cartan[i][j];
            }
        }
        Weight::new(labels)
    }

    /// Canonical index of the congruence class of `w` in P/Q. Class 0 is the
    /// root lattice itself.
    pub fn congruence_class(&self, w: &Weight) -> usize {
        let mut index = 0usize;
        for (i, &s) in self.congruence.factors.iter().enumerate() {
            if s <= 1 {
                continue;
            }
            let uw: i64 = self.congruence.row_transform[i]
                .iter()
                .zip(w.labels())
                .map(|(&u, &x)| u * x)
                .sum();
            index = index * (s as usize) + uw.rem_euclid(s) as usize;
        }
        index
    }

    /// Level of a weight: the comark-weighted label sum (lambda, theta).
    pub fn level(&self, w: &Weight) -> i64 {
        self.comarks
            .iter()
            .zip(w.labels())
            .map(|(&a, &x)| a * x)
            .sum()
    }

    /// Invariant bilinear form, normalized so long roots have (a, a) = 2.
    pub fn inner(&self, u: &Weight, v: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for (i, &ui) in u.labels().iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.labels().iter().enumerate() {
                if vj == 0 {
                    continue;
                }
                acc += rat(ui) * self.qform[i][j] * rat(vj);
            }
        }
        acc
    }

    /// Charge conjugation, the linear map -w0 with w0 the longest element.
    pub fn charge_conjugate(&self, w: &Weight) -> Weight {
        let labels = (0..self.rank())
            .map(|i| {
                self.cc_matrix[i]
                    .iter()
                    .zip(w.labels())
                    .map(|(&m, &x)| m * x)
                    .sum()
            })
            .collect();
        Weight::new(labels)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.labels().iter().all(|&x| x >= 0)
    }

    /// Dominance order: mu <= lam iff lam - mu is a non-negative integer
    /// combination of simple roots.
    pub fn dominance_le(&self, mu: &Weight, lam: &Weight) -> bool {
        let diff = lam.sub(mu);
        match self.to_root_coords(&diff) {
            Ok(rc) => rc.integral && rc.coeffs.iter().all(|c| !c.is_negative()),
            Err(_) => false,
        }
    }

    /// Dominant representative of the Weyl orbit of `w` (weight only).
    pub fn dominant_representative_weight(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        loop {
            match x.labels().iter().position(|&l| l < 0) {
                Some(i) => x = self.reflect_raw(i, &x),
                None => return x,
            }
        }
    }

    /// Look up the root coordinates of a root given in weight form.
    pub(crate) fn root_by_weight(&self, w: &Weight) -> Option<&RootCoords> {
        self.root_index.get(w)
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::WeightLength {
                got: w.len(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Sort key used for deterministic weight listings and the default
    /// matrix order: ascending level, ascending root height, then
    /// lexicographically descending labels.
    pub fn order_key(&self, w: &Weight) -> (i64, Rat, Vec<i64>) {
        let height: Rat = self
            .to_root_coords(w)
            .map(|rc| rc.coeffs.iter().sum())
            .unwrap_or_else(|_| Rat::zero());
        (
            self.level(w),
            height,
            w.labels().iter().map(|&x| -x).collect(),
        )
    }
}

/// All dominant weights mu <= lam (these lie in lam + Q automatically),
/// sorted by the default order. Includes lam itself.
pub fn dominant_below(cd: &CartanData, lam: &Weight) -> Result<Vec<Weight>> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let rc = cd.to_root_coords(lam)?;
    // A dominant mu has non-negative root coordinates, so the coefficient
    // vector of lam - mu is bounded by the root coordinates of lam.
    let bounds: Vec<i64> = rc.coeffs.iter().map(|c| c.floor().to_integer() as i64).collect();
    let rank = cd.rank();
    let mut out = Vec::new();
    let mut c = vec![0i64; rank];
    'outer: loop {
        let mut mu = lam.labels().to_vec();
        for (i, &ci) in c.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, m) in mu.iter_mut().enumerate() {
                *m -= ci * cd.cartan[i][j];
            }
        }
        if mu.iter().all(|&x| x >= 0) {
            out.push(Weight::new(mu));
        }
        // Odometer step over the box [0, bounds].
        for i in 0..rank {
            if c[i] < bounds[i] {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = 0;
        }
        break;
    }
    out.sort_by_cached_key(|w| cd.order_key(w));
    Ok(out)
}

/// All dominant weights of the given congruence class with level at most
/// `max_level`, in the default order.
pub fn dominant_up_to_level(cd: &CartanData, class: usize, max_level: i64) -> Vec<Weight> {
    let rank = cd.rank();
    let mut out = Vec::new();
    let mut labels = vec![0i64; rank];
    fn walk(
        cd: &CartanData,
        labels: &mut Vec<i64>,
        i: usize,
        remaining: i64,
        class: usize,
        out: &mut Vec<Weight>,
    ) {
        if i == labels.len() {
            let w = Weight::new(labels.clone());
            if cd.congruence_class(&w) == class {
                out.push(w);
            }
            return;
        }
        let step = cd.comarks[i];
        let mut v = 0;
        while v * step <= remaining {
            labels[i] = v;
            walk(cd, labels, i + 1, remaining - v * step, class, out);
            v += 1;
        }
        labels[i] = 0;
    }
    walk(cd, &mut labels, 0, max_level, class, &mut out);
    out.sort_by_cached_key(|w| cd.order_key(w));
    out
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    d[0] = Some(Rat::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i == j || cartan[i][j] == 0 || d[j].is_some() {
                continue;
            }
            // d_i A_ij = d_j A_ji
            d[j] = Some(d[i].unwrap() * rat(cartan[i][j]) / rat(cartan[j][i]));
            queue.push_back(j);
        }
    }
    let vals: Vec<Rat> = d
        .into_iter()
        .map(|x| x.expect("Dynkin diagram of a simple algebra is connected"))
        .collect();
    let lcm_den = vals
        .iter()
        .fold(1i128, |acc, v| num_integer::lcm(acc, *v.denom()));
    let ints: Vec<i128> = vals
        .iter()
        .map(|v| (*v * Rat::from_integer(lcm_den)).to_integer())
        .collect();
    let g = ints.iter().fold(0i128, |acc, &v| num_integer::gcd(acc, v));
    ints.iter().map(|&v| (v / g) as i64).collect()
}

/// Generate all roots by reflection closure from the simple roots and return
/// the positive ones sorted by (height, coords), plus a weight-form lookup
/// table over all roots.
fn generate_roots(
    cartan: &[Vec<i64>],
    simple_root_weights: &[Weight],
) -> (Vec<PositiveRoot>, HashMap<Weight, RootCoords>) {
    let rank = cartan.len();
    let mut seen: HashMap<Weight, RootCoords> = HashMap::new();
    let mut queue: VecDeque<(Weight, RootCoords)> = VecDeque::new();
    for i in 0..rank {
        let mut coords = vec![0i64; rank];
        coords[i] = 1;
        let entry = (simple_root_weights[i].clone(), RootCoords::new(coords));
        seen.insert(entry.0.clone(), entry.1.clone());
        queue.push_back(entry);
    }
    while let Some((w, c)) = queue.pop_front() {
        for i in 0..rank {
            let wi = w.get(i);
            if wi == 0 {
                continue;
            }
            let mut labels = w.labels().to_vec();
            for (j, x) in labels.iter_mut().enumerate() {
                *x -= wi * cartan[i][j];
            }
            let rw = Weight::new(labels);
            if seen.contains_key(&rw) {
                continue;
            }
            let mut coords = c.coeffs().to_vec();
            coords[i] -= wi;
            let rc = RootCoords::new(coords);
            seen.insert(rw.clone(), rc.clone());
            queue.push_back((rw, rc));
        }
    }
    let mut positives: Vec<PositiveRoot> = seen
        .iter()
        .filter(|(_, c)| c.is_nonnegative())
        .map(|(w, c)| PositiveRoot {
            coords: c.clone(),
            weight: w.clone(),
        })
        .collect();
    positives.sort_by(|a, b| {
        (a.height(), a.coords.coeffs())
            .cmp(&(b.height(), b.coords.coeffs()))
    });
    (positives, seen)
}

/// Matrix of -w0 on Dynkin coordinates, found by chasing -rho to dominance.
fn charge_conjugation_matrix(cd: &CartanData) -> Vec<Vec<i64>> {
    let rank = cd.rank();
    // Start from -I.
    let mut m: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { -1 } else { 0 }).collect())
        .collect();
    let mut x = cd.rho.neg();
    while let Some(i) = x.labels().iter().position(|&l| l < 0) {
        x = cd.reflect_raw(i, &x);
        // Left-multiply m by the reflection matrix R_i:
        // (R_i y)_j = y_j - A_ij y_i, so row j of R_i*M is M_j - A_ij M_i.
        let row_i: Vec<i64> = m[i].clone();
        for j in 0..rank {
            let a = cd.cartan[i][j];
            if a == 0 {
                continue;
            }
            for k in 0..rank {
                m[j][k] -= a * row_i[k];
            }
        }
    }
    assert_eq!(x, cd.rho, "-rho must reflect to rho");
    m
}

fn cartan_matrix(id: AlgebraId) -> Vec<Vec<i64>> {
    let r = id.rank;
    let mut m = vec![vec![0i64; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match id.series {
        Series::A => {
            for i in 0..r - 1 {
                link(&mut m, i, i + 1);
            }
        }
        Series::B => {
            for i in 0..r - 1 {
                link(&mut m, i, i + 1);
            }
            // a_r short: A_{r-1,r} = -2.
            m[r - 2][r - 1] = -2;
        }
        Series::C => {
            for i in 0..r - 1 {
                link(&mut m, i, i + 1);
            }
            // a_r long: A_{r,r-1} = -2.
            m[r - 1][r - 2] = -2;
        }
        Series::D => {
            for i in 0..r - 2 {
                link(&mut m, i, i + 1);
            }
            link(&mut m, r - 3, r - 1);
        }
        Series::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7(-8)), node 2 on node 4.
            link(&mut m, 0, 2);
            link(&mut m, 1, 3);
            for i in 2..r - 1 {
                link(&mut m, i, i + 1);
            }
        }
        Series::F => {
            link(&mut m, 0, 1);
            link(&mut m, 1, 2);
            link(&mut m, 2, 3);
            // a_3, a_4 short: A_{2,3} = -2.
            m[1][2] = -2;
        }
        Series::G => {
            // a_2 short: A_{1,2} = -3.
            m[0][1] = -3;
            m[1][0] = -1;
        }
    }
    m
}

fn weyl_order(id: AlgebraId) -> u64 {
    fn fact(n: u64) -> u64 {
        (1..=n).product()
    }
    let r = id.rank as u64;
    match id.series {
        Series::A => fact(r + 1),
        Series::B | Series::C => (1u64 << r) * fact(r),
        Series::D => (1u64 << (r - 1)) * fact(r),
        Series::E => match id.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1_152,
        Series::G => 12,
    }
}
