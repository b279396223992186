//! The triangular expansion relating characters to vertex sums: the signed
//! partition function F, the closed formula for the inverse coefficients,
//! exact triangular inversion, closed-pattern oracles for A2/C2, and the
//! verification scans for the two open conjectures.
//!
//! Everything in this module is exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use crate::charmult::{dim, CharCache, MultMap};
use crate::error::{Error, Result};
use crate::linalg::invert_unit_lower_triangular;
use crate::polytope;
use crate::rootsys::{dominant_below, dominant_up_to_level, CartanData, RootCoords, Weight};
use crate::weyl::{self, ShiftedReduce, WeylElement};

/// Enumerating the signed subset sums of R_> \ S is refused above this size.
pub const PARTITION_BOUND: usize = 24;

/// The signed partition function F: for each non-negative root-lattice
/// vector beta, the signed count of subsets of R_> \ S summing to beta.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionF {
    entries: BTreeMap<RootCoords, i64>,
}

impl PartitionF {
    pub fn get(&self, beta: &RootCoords) -> i64 {
        self.entries.get(beta).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RootCoords, &i64)> {
        self.entries.iter()
    }

    /// Signed total; vanishes for every algebra of rank >= 2.
    pub fn signed_total(&self) -> i64 {
        self.entries.values().sum()
    }
}

/// Expand prod over non-simple positive roots of (1 - e^{-gamma}) as a
/// signed sum of exponentials, indexed by root coordinates.
pub fn partition_f(cd: &CartanData) -> Result<PartitionF> {
    let nonsimple: Vec<&RootCoords> = cd
        .positive_roots
        .iter()
        .filter(|r| r.height() > 1)
        .map(|r| &r.coords)
        .collect();
    if nonsimple.len() > PARTITION_BOUND {
        return Err(Error::PartitionTooLarge {
            size: nonsimple.len(),
            bound: PARTITION_BOUND,
        });
    }
    let rank = cd.rank();
    let mut entries: BTreeMap<RootCoords, i64> = BTreeMap::new();
    for mask in 0u32..(1u32 << nonsimple.len()) {
        let mut sum = vec![0i64; rank];
        for (i, gamma) in nonsimple.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (s, &g) in sum.iter_mut().zip(gamma.coeffs()) {
                    *s += g;
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *entries.entry(RootCoords::new(sum)).or_insert(0) += sign;
    }
    entries.retain(|_, v| *v != 0);
    Ok(PartitionF { entries })
}

/// The raw expansion of B_lambda over shifted characters: the list
/// (F(beta), lambda - beta) for every nonzero F(beta), before any shifted
/// reduction. Sorted by the height of beta, so lambda itself comes first.
pub fn b_expand(cd: &CartanData, lam: &Weight) -> Result<Vec<(i64, Weight)>> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let f = partition_f(cd)?;
    let mut terms: Vec<(i64, Weight, i64, Vec<i64>)> = f
        .iter()
        .map(|(beta, &coeff)| {
            let shift = cd.root_coords_to_weight(beta);
            (coeff, lam.sub(&shift), beta.height(), beta.coeffs().to_vec())
        })
        .collect();
    terms.sort_by(|a, b| (a.2, &a.3).cmp(&(b.2, &b.3)));
    Ok(terms.into_iter().map(|(c, w, _, _)| (c, w)).collect())
}

/// Exact B_lambda as a multiplicity map: sum of F(beta) * ch_{lambda-beta},
/// with non-dominant indices resolved through the shifted Weyl action.
pub fn brion_multiset(cd: &CartanData, lam: &Weight) -> Result<MultMap> {
    brion_multiset_cached(cd, &CharCache::new(), lam)
}

/// [`brion_multiset`] with a shared character cache, for scans.
pub fn brion_multiset_cached(cd: &CartanData, cache: &CharCache, lam: &Weight) -> Result<MultMap> {
    let mut out = MultMap::new();
    for (coeff, x) in b_expand(cd, lam)? {
        match weyl::shifted_reduce(cd, &x) {
            ShiftedReduce::Zero => {}
            ShiftedReduce::Reduced { sign, dominant } => {
                let ws = cache.weight_system(cd, &dominant)?;
                out.add_scaled(&ws, coeff * sign);
            }
        }
    }
    Ok(out)
}

/// One coefficient of the inverse expansion: the alternating Weyl-group sum
/// of F(lambda - w.mu). Zero across congruence classes by convention.
pub fn a_inverse(cd: &CartanData, lam: &Weight, mu: &Weight) -> Result<i64> {
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    if !cd.is_dominant(mu) {
        return Err(Error::NonDominant(mu.clone()));
    }
    let f = partition_f(cd)?;
    let group = weyl::enumerate(cd)?;
    Ok(a_inverse_with(cd, &group, &f, lam, mu))
}

fn a_inverse_with(
    cd: &CartanData,
    group: &[WeylElement],
    f: &PartitionF,
    lam: &Weight,
    mu: &Weight,
) -> i64 {
    if cd.congruence_class(lam) != cd.congruence_class(mu) {
        return 0;
    }
    let mut total = 0i64;
    for w in group {
        let x = lam.sub(&w.apply_shifted(cd, mu));
        let Some(coords) = cd.integer_root_coords(&x) else {
            continue;
        };
        if !coords.is_nonnegative() {
            continue;
        }
        total += w.det() * f.get(&coords);
    }
    total
}

/// Which of the two mutually inverse coefficient matrices is held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// ch_lambda = sum A_{lambda,mu} B_mu
    A,
    /// B_lambda = sum A^{-1}_{lambda,mu} ch_mu
    AInverse,
}

/// A unit lower-triangular integer coefficient matrix over an explicit
/// ordered list of dominant weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMatrix {
    pub order: Vec<Weight>,
    pub rows: Vec<Vec<i64>>,
    pub kind: MatrixKind,
}

impl ExpansionMatrix {
    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn row_for(&self, lam: &Weight) -> Option<&[i64]> {
        let i = self.order.iter().position(|w| w == lam)?;
        Some(&self.rows[i])
    }

    /// Exact inverse on the same order, with the kind flipped.
    pub fn inverted(&self) -> ExpansionMatrix {
        ExpansionMatrix {
            order: self.order.clone(),
            rows: invert_unit_lower_triangular(&self.rows),
            kind: match self.kind {
                MatrixKind::A => MatrixKind::AInverse,
                MatrixKind::AInverse => MatrixKind::A,
            },
        }
    }
}

fn validate_order(cd: &CartanData, order: &[Weight]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for w in order {
        if !cd.is_dominant(w) {
            return Err(Error::NonDominant(w.clone()));
        }
        if !seen.insert(w.clone()) {
            return Err(Error::Unsupported(
                cd.id.to_string(),
                format!("duplicate weight {w} in order"),
            ));
        }
    }
    let mut missing: Vec<Weight> = Vec::new();
    for lam in order {
        for mu in dominant_below(cd, lam)? {
            if !seen.contains(&mu) && !missing.contains(&mu) {
                missing.push(mu);
            }
        }
    }
    if !missing.is_empty() {
        missing.sort_by_cached_key(|w| cd.order_key(w));
        return Err(Error::OrderNotDownwardClosed { missing });
    }
    Ok(())
}

/// The inverse-expansion matrix A^{-1} on an explicit order. The order must
/// be downward closed under dominance; the result is checked to be unit
/// lower triangular.
pub fn a_inverse_matrix(cd: &CartanData, order: &[Weight]) -> Result<ExpansionMatrix> {
    validate_order(cd, order)?;
    let f = partition_f(cd)?;
    let group = weyl::enumerate(cd)?;
    let n = order.len();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = a_inverse_with(cd, &group, &f, &order[i], &order[j]);
            if i == j {
                assert_eq!(v, 1, "diagonal of the inverse expansion must be 1");
            } else if j > i && v != 0 {
                return Err(Error::NotTriangular {
                    row: i,
                    col: j,
                    value: v,
                });
            }
            rows[i][j] = v;
        }
    }
    Ok(ExpansionMatrix {
        order: order.to_vec(),
        rows,
        kind: MatrixKind::AInverse,
    })
}

/// The expansion matrix A on an explicit order, by exact inversion of the
/// triangular A^{-1} on the same order.
pub fn a_matrix(cd: &CartanData, order: &[Weight]) -> Result<ExpansionMatrix> {
    Ok(a_inverse_matrix(cd, order)?.inverted())
}

/// Default order for a congruence class: all dominant weights of the class
/// up to `max_level`, sorted by (level, root height, descending labels).
pub fn default_order(cd: &CartanData, class: usize, max_level: i64) -> Vec<Weight> {
    dominant_up_to_level(cd, class, max_level)
}

/// One expansion row of a single character: the weights mu with nonzero
/// A_{lambda,mu}, with their coefficients, over the downward closure of
/// lambda.
pub fn expand_character(cd: &CartanData, lam: &Weight) -> Result<Vec<(Weight, i64)>> {
    let order = dominant_below(cd, lam)?;
    let am = a_matrix(cd, &order)?;
    let row = am.row_for(lam).expect("lam is in its own closure");
    Ok(order
        .iter()
        .zip(row)
        .filter(|(_, &v)| v != 0)
        .map(|(w, &v)| (w.clone(), v))
        .collect())
}

/// Expected expansion support for a C2 character, from the closed patterns:
/// blocks stepping down by 2 in the first label and by 1 in the second,
/// with a parity tail on the second-label axis when the first label is even.
pub fn c2_patterns(cd: &CartanData, lam: &Weight) -> Result<Vec<Weight>> {
    if cd.id.to_string() != "C2" {
        return Err(Error::Unsupported(
            cd.id.to_string(),
            "closed expansion patterns exist only for C2".to_string(),
        ));
    }
    if !cd.is_dominant(lam) {
        return Err(Error::NonDominant(lam.clone()));
    }
    let (l1, l2) = (lam.get(0), lam.get(1));
    let mut out: Vec<Weight> = Vec::new();
    let odd = l1 % 2 == 1;
    let mut i = 0;
    while if odd { i <= l1 - 1 } else { l1 >= 2 && i <= l1 - 2 } {
        for k in 0..=l2 {
            out.push(Weight::new(vec![l1 - i, l2 - k]));
        }
        i += 2;
    }
    if !odd {
        let mut m = l2;
        loop {
            out.push(Weight::new(vec![0, m]));
            if m < 2 {
                break;
            }
            m -= 2;
        }
    }
    out.sort_by_cached_key(|w| cd.order_key(w));
    Ok(out)
}

/// Per-weight record of the count identities.
#[derive(Clone, Debug)]
pub struct CountEntry {
    pub lam: Weight,
    pub level: i64,
    pub dim: i64,
    pub brion_total: i64,
    pub points_count: i64,
    pub closed_form: Option<i64>,
    /// dim = sum over sigma of A_{lam,sigma} * brion_total(sigma), exactly.
    pub identity_dim_ok: bool,
    /// brion_total = sum over mu of A^{-1}_{lam,mu} * dim(mu), exactly.
    pub identity_brion_ok: bool,
}

impl CountEntry {
    pub fn brion_matches_points(&self) -> bool {
        self.brion_total == self.points_count
    }

    pub fn closed_matches_points(&self) -> Option<bool> {
        self.closed_form.map(|c| c == self.points_count)
    }
}

/// Report of the dimension/count identities over a level range.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub algebra: String,
    pub max_level: i64,
    pub entries: Vec<CountEntry>,
}

impl CountReport {
    /// True when every exact identity held. Count mismatches between the
    /// Brion total and the polytope are conjecture material, not failures.
    pub fn identities_ok(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.identity_dim_ok && e.identity_brion_ok)
    }

    pub fn count_mismatches(&self) -> Vec<&CountEntry> {
        self.entries
            .iter()
            .filter(|e| {
                !e.brion_matches_points() || e.closed_matches_points() == Some(false)
            })
            .collect()
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "count identities for {} up to level {}",
            self.algebra, self.max_level
        )?;
        writeln!(
            f,
            "{:<12} {:>5} {:>8} {:>8} {:>8} {:>8}  {:<7} {:<9}",
            "lambda", "level", "dim", "brion", "points", "closed", "d=A.b", "b=Ainv.d"
        )?;
        for e in &self.entries {
            let closed = e
                .closed_form
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".to_string());
            writeln!(
                f,
                "{:<12} {:>5} {:>8} {:>8} {:>8} {:>8}  {:<7} {:<9}",
                e.lam.to_string(),
                e.level,
                e.dim,
                e.brion_total,
                e.points_count,
                closed,
                if e.identity_dim_ok { "ok" } else { "FAIL" },
                if e.identity_brion_ok { "ok" } else { "FAIL" },
            )?;
        }
        let mismatches = self.count_mismatches();
        if mismatches.is_empty() {
            writeln!(f, "all three counts agree everywhere")?;
        } else {
            for e in mismatches {
                writeln!(
                    f,
                    "count mismatch at {}: brion {} vs points {} vs closed {}",
                    e.lam,
                    e.brion_total,
                    e.points_count,
                    e.closed_form
                        .map(|c| c.to_string())
                        .unwrap_or_else(|| "-".to_string())
                )?;
            }
        }
        Ok(())
    }
}

/// Compute dimensions, Brion totals, point counts and the two exact count
/// identities for every dominant weight up to `max_level`.
pub fn verify_counts(cd: &CartanData, max_level: i64) -> Result<CountReport> {
    let cache = CharCache::new();
    let mut entries: Vec<CountEntry> = Vec::new();
    for class in 0..cd.center_order as usize {
        let order = default_order(cd, class, max_level);
        if order.is_empty() {
            continue;
        }
        let ainv = a_inverse_matrix(cd, &order)?;
        let am = ainv.inverted();
        let dims: Vec<i64> = order
            .iter()
            .map(|w| dim(cd, w))
            .collect::<Result<_>>()?;
        let btotals: Vec<i64> = order
            .iter()
            .map(|w| Ok(brion_multiset_cached(cd, &cache, w)?.total()))
            .collect::<Result<_>>()?;
        for (i, lam) in order.iter().enumerate() {
            let from_b: i64 = (0..order.len()).map(|j| am.get(i, j) * btotals[j]).sum();
            let from_d: i64 = (0..order.len()).map(|j| ainv.get(i, j) * dims[j]).sum();
            entries.push(CountEntry {
                lam: lam.clone(),
                level: cd.level(lam),
                dim: dims[i],
                brion_total: btotals[i],
                points_count: polytope::points(cd, lam)?.len() as i64,
                closed_form: polytope::count_closed_form(cd, lam).ok(),
                identity_dim_ok: from_b == dims[i],
                identity_brion_ok: from_d == btotals[i],
            });
        }
    }
    entries.sort_by_cached_key(|e| cd.order_key(&e.lam));
    Ok(CountReport {
        algebra: cd.id.to_string(),
        max_level,
        entries,
    })
}

/// A negative expansion coefficient (a counterexample to non-negativity).
#[derive(Clone, Debug)]
pub struct NegativeEntry {
    pub lam: Weight,
    pub mu: Weight,
    pub value: i64,
}

/// One weight where B_lambda differs from the 0/1 indicator of the weight
/// polytope.
#[derive(Clone, Debug)]
pub struct MismatchDetail {
    pub weight: Weight,
    pub brion_mult: i64,
    pub in_polytope: bool,
}

/// A highest weight whose Brion multiset is not the polytope indicator.
#[derive(Clone, Debug)]
pub struct IndicatorMismatch {
    pub lam: Weight,
    pub brion_total: i64,
    pub points_count: i64,
    pub details: Vec<MismatchDetail>,
}

/// Report of the two conjecture scans over a level range.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub algebra: String,
    pub max_level: i64,
    /// Negative entries of the expansion matrices (empty = no
    /// counterexample to non-negativity in range).
    pub negative_entries: Vec<NegativeEntry>,
    /// Weights where B_lambda is not the 0/1 polytope indicator (empty =
    /// the vertex-sum identity held everywhere in range).
    pub indicator_mismatches: Vec<IndicatorMismatch>,
}

impl ConjectureReport {
    pub fn has_negative_entries(&self) -> bool {
        !self.negative_entries.is_empty()
    }

    pub fn mismatch_for(&self, lam: &Weight) -> Option<&IndicatorMismatch> {
        self.indicator_mismatches.iter().find(|m| &m.lam == lam)
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conjecture scan for {} up to level {}",
            self.algebra, self.max_level
        )?;
        if self.negative_entries.is_empty() {
            writeln!(f, "negative expansion entries: none")?;
        } else {
            writeln!(f, "negative expansion entries:")?;
            for e in &self.negative_entries {
                writeln!(f, "  A[{}][{}] = {}", e.lam, e.mu, e.value)?;
            }
        }
        if self.indicator_mismatches.is_empty() {
            writeln!(f, "brion/polytope indicator mismatches: none")?;
        } else {
            writeln!(f, "brion/polytope indicator mismatches:")?;
            for m in &self.indicator_mismatches {
                writeln!(
                    f,
                    "  lambda {}: brion total {}, polytope points {}",
                    m.lam, m.brion_total, m.points_count
                )?;
                for d in &m.details {
                    writeln!(
                        f,
                        "    {}: brion mult {}, in polytope {}",
                        d.weight, d.brion_mult, d.in_polytope
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// Scan for negative expansion coefficients and for disagreements between
/// the exact Brion multiset and the polytope indicator, for every dominant
/// weight up to `max_level`.
pub fn verify_conjectures(cd: &CartanData, max_level: i64) -> Result<ConjectureReport> {
    let cache = CharCache::new();
    let mut negative_entries = Vec::new();
    let mut indicator_mismatches = Vec::new();
    let mut scanned: Vec<Weight> = Vec::new();
    for class in 0..cd.center_order as usize {
        let order = default_order(cd, class, max_level);
        if order.is_empty() {
            continue;
        }
        let am = a_matrix(cd, &order)?;
        for (i, lam) in order.iter().enumerate() {
            for (j, mu) in order.iter().enumerate() {
                if am.get(i, j) < 0 {
                    negative_entries.push(NegativeEntry {
                        lam: lam.clone(),
                        mu: mu.clone(),
                        value: am.get(i, j),
                    });
                }
            }
        }
        scanned.extend(order);
    }
    scanned.sort_by_cached_key(|w| cd.order_key(w));
    for lam in &scanned {
        let mm = brion_multiset_cached(cd, &cache, lam)?;
        let pts = polytope::points(cd, lam)?;
        let pset: std::collections::BTreeSet<&Weight> = pts.iter().collect();
        let mut details = Vec::new();
        for (w, &m) in mm.iter() {
            if m != 1 || !pset.contains(w) {
                details.push(MismatchDetail {
                    weight: w.clone(),
                    brion_mult: m,
                    in_polytope: pset.contains(w),
                });
            }
        }
        for &p in &pset {
            if mm.get(p) == 0 {
                details.push(MismatchDetail {
                    weight: p.clone(),
                    brion_mult: 0,
                    in_polytope: true,
                });
            }
        }
        if !details.is_empty() {
            details.sort_by_key(|d| (cd.level(&d.weight), d.weight.labels().to_vec()));
            indicator_mismatches.push(IndicatorMismatch {
                lam: lam.clone(),
                brion_total: mm.total(),
                points_count: pts.len() as i64,
                details,
            });
        }
    }
    Ok(ConjectureReport {
        algebra: cd.id.to_string(),
        max_level,
        negative_entries,
        indicator_mismatches,
    })
}
