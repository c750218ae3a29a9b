//! Decomposition summaries, weight-multiplicity tables, the closed-form
//! decomposition generators, and the comparison engine that checks them
//! against the brute-force component search.
//!
//! All summaries are truncated by the ω_0-coefficient: a summary with
//! `complete_below = c` lists every component lowest weight with n_0 <= c
//! and exact per-weight multiplicities at every weight with n_0 <= c.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::classical::{
    decompose_classical_tensor, realize_classical_crystal, SpinClass,
};
use crate::crystal::{word_weight, Atom, Word};
use crate::error::Error;
use crate::roots::{
    classical_restriction, lift, xi_weight, AlgebraType, ClassicalWeight, Family,
    RootData, Weight,
};
use crate::supercrystal;

/// Weight multiplicities, exact at every weight with n_0 <= complete_below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub entries: BTreeMap<Weight, u64>,
    pub complete_below: i64,
}

impl WeightTable {
    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(
        words: I,
        ty: AlgebraType,
        complete_below: i64,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for w in words {
            *entries.entry(word_weight(w, ty)).or_insert(0) += 1;
        }
        WeightTable { entries, complete_below }
    }

    pub fn singleton(w: Weight) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(w, 1);
        WeightTable { entries, complete_below: i64::MAX / 2 }
    }

    /// Multiplicities of a tensor product: the convolution of the factor
    /// tables. Weights of every crystal here have n_0 >= 0, so the result
    /// is exact below the smaller completeness bound.
    pub fn convolve(&self, other: &WeightTable) -> WeightTable {
        let cb = self.complete_below.min(other.complete_below);
        let mut entries = BTreeMap::new();
        for (wa, ma) in &self.entries {
            for (wb, mb) in &other.entries {
                let w = wa.add(wb);
                if w.n0() <= cb {
                    *entries.entry(w).or_insert(0) += ma * mb;
                }
            }
        }
        WeightTable { entries, complete_below: cb }
    }

    /// Shift every weight by d copies of ω_0.
    pub fn shifted_omega0(&self, d: i64) -> WeightTable {
        let entries = self
            .entries
            .iter()
            .map(|(w, m)| {
                let mut v = w.0.clone();
                v[0] += d;
                (Weight(v), *m)
            })
            .collect();
        WeightTable {
            entries,
            complete_below: self.complete_below.saturating_add(d),
        }
    }

    pub fn restricted(&self, max_n0: i64) -> WeightTable {
        WeightTable {
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| w.n0() <= max_n0)
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
            complete_below: self.complete_below.min(max_n0),
        }
    }

    /// Pointwise sum of tables (for summing component tables).
    pub fn accumulate(&mut self, other: &WeightTable) {
        self.complete_below = self.complete_below.min(other.complete_below);
        for (w, m) in &other.entries {
            *self.entries.entry(w.clone()).or_insert(0) += m;
        }
    }

    pub fn empty(complete_below: i64) -> Self {
        WeightTable { entries: BTreeMap::new(), complete_below }
    }
}

/// A multiset of component lowest weights plus the per-weight multiplicity
/// table of the underlying crystal, tagged with the truncation level.
#[derive(Clone, Debug)]
pub struct DecompositionSummary {
    pub summands: BTreeMap<Weight, u64>,
    pub per_weight: WeightTable,
    pub cap: i64,
    pub complete_below: i64,
}

#[derive(Serialize, Deserialize)]
struct SummandEntry {
    weight: Weight,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct SummaryRepr {
    cap: i64,
    components: Vec<SummandEntry>,
    complete_below: i64,
}

impl Serialize for DecompositionSummary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SummaryRepr {
            cap: self.cap,
            components: self
                .summands
                .iter()
                .map(|(w, m)| SummandEntry { weight: w.clone(), multiplicity: *m })
                .collect(),
            complete_below: self.complete_below,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompositionSummary {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SummaryRepr::deserialize(d)?;
        Ok(DecompositionSummary {
            summands: r
                .components
                .into_iter()
                .map(|e| (e.weight, e.multiplicity))
                .collect(),
            per_weight: WeightTable::empty(r.complete_below),
            cap: r.cap,
            complete_below: r.complete_below,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MultiplicityMismatch {
    pub weight: Weight,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompareReport {
    pub status: String,
    pub missing: Vec<SummandDelta>,
    pub extra: Vec<SummandDelta>,
    pub multiplicity_mismatches: Vec<MultiplicityMismatch>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummandDelta {
    pub weight: Weight,
    pub multiplicity: u64,
}

impl CompareReport {
    pub fn is_match(&self) -> bool {
        self.status == "match"
    }
}

/// Multiset equality of summands and equality of the per-weight tables,
/// restricted to weights with n_0 below both completeness bounds.
pub fn compare(predicted: &DecompositionSummary, observed: &DecompositionSummary) -> Result<CompareReport, Error> {
    if predicted.cap != observed.cap {
        return Err(Error::CapMismatch(predicted.cap, observed.cap));
    }
    let bound = predicted.complete_below.min(observed.complete_below);
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    let mut keys: Vec<&Weight> = predicted.summands.keys().chain(observed.summands.keys()).collect();
    keys.sort();
    keys.dedup();
    for w in keys {
        if w.n0() > bound {
            continue;
        }
        let p = predicted.summands.get(w).copied().unwrap_or(0);
        let o = observed.summands.get(w).copied().unwrap_or(0);
        if o > p {
            missing.push(SummandDelta { weight: w.clone(), multiplicity: o - p });
        } else if p > o {
            extra.push(SummandDelta { weight: w.clone(), multiplicity: p - o });
        }
    }
    let mut multiplicity_mismatches = Vec::new();
    let tb = predicted
        .per_weight
        .complete_below
        .min(observed.per_weight.complete_below)
        .min(bound);
    let mut wkeys: Vec<&Weight> = predicted
        .per_weight
        .entries
        .keys()
        .chain(observed.per_weight.entries.keys())
        .collect();
    wkeys.sort();
    wkeys.dedup();
    for w in wkeys {
        if w.n0() > tb {
            continue;
        }
        let p = predicted.per_weight.entries.get(w).copied().unwrap_or(0);
        let o = observed.per_weight.entries.get(w).copied().unwrap_or(0);
        if p != o {
            multiplicity_mismatches.push(MultiplicityMismatch {
                weight: w.clone(),
                expected: p,
                actual: o,
            });
        }
    }
    let status = if missing.is_empty() && extra.is_empty() && multiplicity_mismatches.is_empty() {
        "match"
    } else {
        "diff"
    };
    Ok(CompareReport {
        status: status.to_string(),
        missing,
        extra,
        multiplicity_mismatches,
    })
}

/// The z-levels of the classical component −Ξ_k inside B(ω_0); each value z
/// heads an arithmetic progression z, z+2, z+4, …
pub fn z_levels(k: usize, prime: bool, ty: AlgebraType) -> Vec<i64> {
    let n = ty.n as i64;
    match ty.family {
        Family::D => {
            if prime || k == ty.n {
                vec![n]
            } else if k == 0 {
                vec![1, 2 * n + 1]
            } else {
                vec![k as i64, 2 * n - k as i64]
            }
        }
        Family::B => {
            if k == 0 {
                vec![1, 2 * n + 2]
            } else {
                vec![k as i64, 2 * n - k as i64 + 1]
            }
        }
    }
}

/// Label of a classical component of a superalgebra crystal: the classical
/// lowest weight and the ω_0-coefficient of its classical-lowest vertex.
pub type ComponentLabel = (ClassicalWeight, i64);

/// The closed-form label multiset of B(ω_0), truncated at level <= cap.
pub fn omega0_formula(ty: AlgebraType, cap: i64) -> BTreeMap<ComponentLabel, u64> {
    let mut out = BTreeMap::new();
    let mut push = |nu: ClassicalWeight, zs: Vec<i64>| {
        for z in zs {
            let mut l = z;
            while l <= cap {
                *out.entry((nu.clone(), l)).or_insert(0) += 1;
                l += 2;
            }
        }
    };
    for k in 0..=ty.n {
        let nu = ClassicalWeight(xi_weight(k, ty).0.iter().map(|c| -c).collect());
        push(nu, z_levels(k, false, ty));
    }
    if ty.family == Family::D {
        let nu = ClassicalWeight(crate::roots::xi_prime_weight(ty).0.iter().map(|c| -c).collect());
        push(nu, z_levels(ty.n, true, ty));
    }
    out
}

/// The closed-form summand list of the spin ⊗ spin product, truncated at
/// ω_0-coefficient <= cap. The D family pairs the plus class with itself
/// for even N and with the minus class for odd N.
pub fn spin_spin_formula(
    ty: AlgebraType,
    second: SpinClass,
    cap: i64,
) -> Result<BTreeMap<Weight, u64>, Error> {
    let n = ty.n;
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    let add_xi = |k: usize, out: &mut BTreeMap<Weight, u64>| {
        let cl = ClassicalWeight(xi_weight(k, ty).0.iter().map(|c| -c).collect());
        *out.entry(lift(&cl, 0)).or_insert(0) += 1;
    };
    match (ty.family, second) {
        (Family::D, SpinClass::Plus) => {
            if n % 2 != 0 {
                return Err(Error::InvalidCombination(format!(
                    "{ty}: the plus ⊗ plus product is used for even N"
                )));
            }
            for k in (2..=n).step_by(2) {
                add_xi(k, &mut out);
            }
            let mut l = 1;
            while l <= cap {
                *out.entry(lift(&ClassicalWeight::zero(ty), l)).or_insert(0) += 1;
                l += 2;
            }
        }
        (Family::D, SpinClass::Minus) => {
            if n % 2 != 1 {
                return Err(Error::InvalidCombination(format!(
                    "{ty}: the plus ⊗ minus product is used for odd N"
                )));
            }
            for k in (2..=n - 1).step_by(2) {
                add_xi(k, &mut out);
            }
            let mut l = 1;
            while l <= cap {
                *out.entry(lift(&ClassicalWeight::zero(ty), l)).or_insert(0) += 1;
                l += 2;
            }
        }
        (Family::B, SpinClass::Plus) => {
            for k in 1..=n {
                add_xi(k, &mut out);
            }
            let mut l = 1;
            while l <= cap {
                *out.entry(lift(&ClassicalWeight::zero(ty), l)).or_insert(0) += 1;
                l += 1;
            }
        }
        (Family::B, SpinClass::Minus) => {
            return Err(Error::InvalidCombination(
                "the B family has a single spin crystal".into(),
            ));
        }
    }
    Ok(out)
}

/// The non-negative integer a(μ) attached to a component
/// B̄(μ) ⊂ B̄(ν) ⊗ B̄(λ_cl): the α_1-coefficient (α_1 + α_2 for D(2,1)) in
/// the expansion of μ − ν − λ_cl over the classical simple roots. This is
/// the ω_0-offset the component seed acquires inside the superalgebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AValue(pub i64);

pub fn a_value(
    mu: &ClassicalWeight,
    nu: &ClassicalWeight,
    lambda_cl: &ClassicalWeight,
    rd: &RootData,
) -> Result<AValue, Error> {
    let target = mu.sub(nu).sub(lambda_cl);
    let coeffs = rd.expand_in_classical_roots(&target)?;
    let a = match (rd.ty.family, rd.ty.n) {
        (Family::D, 2) => coeffs[0] + coeffs[1],
        _ => coeffs[0],
    };
    Ok(AValue(a))
}

/// Classical tensor decomposition data used by the closed-form generators:
/// component lowest weights of B̄(nu) ⊗ B̄(lambda), with their a-values.
fn classical_pairs(
    nu: &ClassicalWeight,
    lambda: &ClassicalWeight,
    ty: AlgebraType,
    rd: &RootData,
) -> Result<Vec<(ClassicalWeight, AValue)>, Error> {
    let left = realize_classical_crystal(nu, ty)?;
    let right = realize_classical_crystal(lambda, ty)?;
    let comps = decompose_classical_tensor(&[&left, &right], ty);
    comps
        .into_iter()
        .map(|c| {
            let a = a_value(&c.lowest_weight, nu, lambda, rd)?;
            Ok((c.lowest_weight, a))
        })
        .collect()
}

/// The closed-form classical-component labels of the typical crystal
/// B(λ) with n_0(λ) = 1, truncated at level <= cap.
pub fn typical_structure_formula(
    lambda: &Weight,
    ty: AlgebraType,
    cap: i64,
) -> Result<BTreeMap<ComponentLabel, u64>, Error> {
    if lambda.n0() != 1 {
        return Err(Error::Atypical(lambda.to_string()));
    }
    let rd = RootData::new(ty);
    let lambda_cl = classical_restriction(lambda);
    let mut out: BTreeMap<ComponentLabel, u64> = BTreeMap::new();
    for (k, prime, nu) in w_iter(ty) {
        let zs = z_levels(k, prime, ty);
        for (mu, a) in classical_pairs(&nu, &lambda_cl, ty, &rd)? {
            for z in &zs {
                let mut l = z + a.0;
                while l <= cap {
                    *out.entry((mu.clone(), l)).or_insert(0) += 1;
                    l += 2;
                }
            }
        }
    }
    Ok(out)
}

/// Iterate the label set W as (k, prime, −Ξ) triples.
fn w_iter(ty: AlgebraType) -> Vec<(usize, bool, ClassicalWeight)> {
    let mut out: Vec<(usize, bool, ClassicalWeight)> = (0..=ty.n)
        .map(|k| {
            (
                k,
                false,
                ClassicalWeight(xi_weight(k, ty).0.iter().map(|c| -c).collect()),
            )
        })
        .collect();
    if ty.family == Family::D {
        out.push((
            ty.n,
            true,
            ClassicalWeight(crate::roots::xi_prime_weight(ty).0.iter().map(|c| -c).collect()),
        ));
    }
    out
}

/// The closed-form decomposition of B(λ′ + ω_0) ⊗ B(λ + ω_0), both factors
/// typical with ω_0-coefficient one, truncated at ω_0-coefficient <= cap.
/// λ and λ′ are the purely classical parts (ω_0-coefficient zero).
pub fn main_theorem(
    lambda_prime: &Weight,
    lambda: &Weight,
    ty: AlgebraType,
    cap: i64,
) -> Result<BTreeMap<Weight, u64>, Error> {
    for w in [lambda_prime, lambda] {
        if w.n0() != 0 || !classical_restriction(w).is_antidominant() {
            return Err(Error::NotAntidominant(w.to_string()));
        }
    }
    let rd = RootData::new(ty);
    let lambda_cl = classical_restriction(lambda);
    let lambda_prime_cl = classical_restriction(lambda_prime);
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (k, prime, nu) in w_iter(ty) {
        let zs = z_levels(k, prime, ty);
        for (mu_j, a_j) in classical_pairs(&nu, &lambda_cl, ty, &rd)? {
            for (mu_jk, a_jk) in classical_pairs(&lambda_prime_cl, &mu_j, ty, &rd)? {
                for z in &zs {
                    let base = z + a_j.0 + a_jk.0 + 1;
                    let mut c = base;
                    while c <= cap {
                        *out.entry(lift(&mu_jk, c)).or_insert(0) += 1;
                        c += 2;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Exact weight-multiplicity table of the irreducible crystal B(μ),
/// truncated at n_0 <= cap. Typical weights go through the product model;
/// the atypical weights arising in the spin ⊗ spin fixtures are handled by
/// component search from their known lowest vertices.
pub fn irreducible_weight_table(mu: &Weight, ty: AlgebraType, cap: i64) -> Result<WeightTable, Error> {
    let n = ty.n;
    if mu.is_zero() {
        return Ok(WeightTable::singleton(Weight::zero(ty)).restricted(cap));
    }
    let n0 = mu.n0();
    let cl = classical_restriction(mu);
    if n0 >= 1 {
        if !cl.is_antidominant() {
            return Err(Error::UnsupportedFactor(mu.to_string()));
        }
        let om = supercrystal::build_omega0(ty, cap as u32);
        let om_table = WeightTable::from_words(om.iter(), ty, cap);
        let classical = realize_classical_crystal(&cl, ty)?;
        let cl_table = WeightTable::from_words(classical.vertices.iter(), ty, i64::MAX / 2);
        return Ok(om_table.convolve(&cl_table).shifted_omega0(n0 - 1).restricted(cap));
    }
    if !cl.is_antidominant() {
        return Err(Error::UnsupportedFactor(mu.to_string()));
    }
    let minus_lambda_n = {
        let mut v = vec![0i64; n];
        v[n - 1] = -1;
        ClassicalWeight(v)
    };
    if cl == minus_lambda_n {
        let atoms = supercrystal::super_spin_atoms(ty, SpinClass::Plus, cap as u32);
        let words: Vec<Word> = atoms.into_iter().map(|a| vec![a]).collect();
        return Ok(WeightTable::from_words(words.iter(), ty, cap));
    }
    if ty.family == Family::D {
        let mut v = vec![0i64; n];
        v[n - 2] = -1;
        if cl == ClassicalWeight(v) {
            let atoms = supercrystal::super_spin_atoms(ty, SpinClass::Minus, cap as u32);
            let words: Vec<Word> = atoms.into_iter().map(|a| vec![a]).collect();
            return Ok(WeightTable::from_words(words.iter(), ty, cap));
        }
    }
    // components of the spin ⊗ spin product: lowest vertex
    // (+,…,+)_0 ⊗ (+^k, −,…,−)_0
    for k in 1..=n {
        let xi = ClassicalWeight(xi_weight(k, ty).0.iter().map(|c| -c).collect());
        if cl == xi {
            let pattern = (((1u32 << n) - 1) >> k) << k;
            let seed: Word = vec![Atom::new(0, 0), Atom::new(pattern, 0)];
            let comp = supercrystal::super_component(&seed, ty, cap as u32);
            return Ok(WeightTable::from_words(comp.iter(), ty, cap));
        }
    }
    Err(Error::UnsupportedFactor(mu.to_string()))
}

/// Assemble a predicted summary: the given summand multiset plus the
/// per-weight table obtained by summing the summands' exact tables.
pub fn predicted_summary(
    summands: BTreeMap<Weight, u64>,
    ty: AlgebraType,
    cap: i64,
) -> Result<DecompositionSummary, Error> {
    let mut table = WeightTable::empty(cap);
    for (w, m) in &summands {
        let t = irreducible_weight_table(w, ty, cap)?;
        for _ in 0..*m {
            table.accumulate(&t);
        }
    }
    table.complete_below = cap;
    Ok(DecompositionSummary {
        summands,
        per_weight: table,
        cap,
        complete_below: cap,
    })
}

/// The spin ⊗ spin product as a full predicted summary.
pub fn spin_spin_summary(
    ty: AlgebraType,
    second: SpinClass,
    cap: i64,
) -> Result<DecompositionSummary, Error> {
    let summands = spin_spin_formula(ty, second, cap)?;
    predicted_summary(summands, ty, cap)
}

/// The main-theorem product as a full predicted summary.
pub fn main_theorem_summary(
    lambda_prime: &Weight,
    lambda: &Weight,
    ty: AlgebraType,
    cap: i64,
) -> Result<DecompositionSummary, Error> {
    let summands = main_theorem(lambda_prime, lambda, ty, cap)?;
    predicted_summary(summands, ty, cap)
}

/// Multiset of (classical weight, level) labels rendered as a summary-like
/// map for comparisons of B(ω_0) structure.
pub fn labels_as_weights(labels: &BTreeMap<ComponentLabel, u64>) -> BTreeMap<Weight, u64> {
    labels
        .iter()
        .map(|((cl, l), m)| (lift(cl, *l), *m))
        .collect()
}
