//! Truncated crystals of the superalgebra: the spin crystals B(−ω_N) and
//! B(−ω_{N−1}), the component B(ω_0) of their tensor square, product models
//! of typical crystals, lowest-vector search, classical-component labelling
//! and the 0-arrow structure.
//!
//! Every crystal is a set of tensor words truncated by the total level
//! Σk of the atoms. A vertex of weight n_0ω_0 + … has n_0 >= Σk, and the
//! operators 1…N preserve Σk while ẽ_0/f̃_0 move it by one, so a truncation
//! at Σk <= cap contains every vertex whose weight has n_0 <= cap and every
//! classical component whose level is at most cap: truncated results are
//! exact below the cap, not approximate.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::classical::{classical_lowest_word, SpinClass};
use crate::crystal::{
    apply, apply_indexed, is_classical_lowest, is_lowest, word_classical_weight, word_level,
    word_weight, Atom, Dir, Word,
};
use crate::decomposition::{ComponentLabel, DecompositionSummary, WeightTable};
use crate::error::Error;
use crate::roots::{classical_restriction, AlgebraType, ClassicalWeight, Family, Weight};

/// Atoms of the super spin crystal with level at most `cap`. For the D
/// family the level parity is locked to the parity class of the sign
/// vector; the B family has no constraint.
pub fn super_spin_atoms(ty: AlgebraType, class: SpinClass, cap: u32) -> Vec<Atom> {
    let mut out = Vec::new();
    let base_parity = match (ty.family, class) {
        (Family::B, _) => None,
        (Family::D, SpinClass::Plus) => Some(0),
        (Family::D, SpinClass::Minus) => Some(1),
    };
    for level in 0..=cap {
        for signs in 0..(1u32 << ty.n) {
            let ok = match base_parity {
                None => true,
                Some(p) => signs.count_ones() % 2 == (p + level) % 2,
            };
            if ok {
                out.push(Atom::new(signs, level));
            }
        }
    }
    out
}

/// Lowest vertex of the super spin crystal: (+,…,+)_0 for the plus class,
/// (+,…,+,−)_0 for the minus class.
pub fn super_spin_lowest(ty: AlgebraType, class: SpinClass) -> Word {
    vec![Atom::new(crate::classical::spin_lowest(ty, class), 0)]
}

/// Seed word of B(ω_0): (+,…,+)_0 ⊗ (−,…,−)_0, the classical-lowest vertex
/// of the level-1 trivial component of the spin ⊗ spin product.
pub fn omega0_seed(ty: AlgebraType) -> Word {
    vec![Atom::new(0, 0), Atom::new((1u32 << ty.n) - 1, 0)]
}

/// Connected component of a seed under all operators 0…N, truncated at
/// total level <= cap; deterministic enumeration order.
pub fn super_component(seed: &Word, ty: AlgebraType, cap: u32) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    if word_level(seed) <= cap {
        seen.insert(seed.clone());
        queue.push_back(seed.clone());
    }
    while let Some(w) = queue.pop_front() {
        for i in 0..=ty.n {
            for dir in [Dir::Raise, Dir::Lower] {
                if let Some(next) = apply(dir, i, &w, ty) {
                    if word_level(&next) <= cap && seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The crystal B(ω_0), truncated at total level <= cap.
pub fn build_omega0(ty: AlgebraType, cap: u32) -> Vec<Word> {
    super_component(&omega0_seed(ty), ty, cap)
}

/// Append the lowest vertex of B(ω_0): the level-shift map
/// B(λ + nω_0) → B(λ + (n+1)ω_0), b ↦ b ⊗ u_{ω_0}.
pub fn shift_word(word: &[Atom], ty: AlgebraType) -> Word {
    let mut out = word.to_vec();
    out.extend(omega0_seed(ty));
    out
}

/// A supported crystal factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    /// B(−ω_N), the super spin crystal.
    SpinPlus,
    /// B(−ω_{N−1}); D family only.
    SpinMinus,
    /// The one-vertex crystal B(0).
    Trivial,
    /// B(λ) for typical λ (ω_0-coefficient >= 1, classical part
    /// antidominant), realized as B(ω_0) ⊗ B̄(λ_cl) with shift padding.
    Typical(Weight),
}

impl Model {
    /// Map a weight in the standing form onto a supported factor.
    pub fn from_weight(w: &Weight, ty: AlgebraType) -> Result<Model, Error> {
        let n = ty.n;
        if w.is_zero() {
            return Ok(Model::Trivial);
        }
        if w.n0() >= 1 {
            if classical_restriction(w).is_antidominant() {
                return Ok(Model::Typical(w.clone()));
            }
            return Err(Error::UnsupportedFactor(w.to_string()));
        }
        let mut spin_plus = vec![0i64; n + 1];
        spin_plus[n] = -1;
        if w.0 == spin_plus {
            return Ok(Model::SpinPlus);
        }
        if ty.family == Family::D {
            let mut spin_minus = vec![0i64; n + 1];
            spin_minus[n - 1] = -1;
            if w.0 == spin_minus {
                return Ok(Model::SpinMinus);
            }
        }
        Err(Error::UnsupportedFactor(w.to_string()))
    }

    /// The unique lowest vertex.
    pub fn lowest(&self, ty: AlgebraType) -> Result<Word, Error> {
        match self {
            Model::SpinPlus => Ok(super_spin_lowest(ty, SpinClass::Plus)),
            Model::SpinMinus => {
                if ty.family != Family::D {
                    return Err(Error::UnsupportedFactor("spin-minus factor needs the D family".into()));
                }
                Ok(super_spin_lowest(ty, SpinClass::Minus))
            }
            Model::Trivial => Ok(Vec::new()),
            Model::Typical(w) => {
                if w.n0() < 1 {
                    return Err(Error::Atypical(w.to_string()));
                }
                let cl = classical_restriction(w);
                if !cl.is_antidominant() {
                    return Err(Error::NotAntidominant(w.to_string()));
                }
                let mut seed = omega0_seed(ty);
                seed.extend(classical_lowest_word(&cl, ty)?);
                for _ in 1..w.n0() {
                    seed.extend(omega0_seed(ty));
                }
                Ok(seed)
            }
        }
    }

    /// All vertices with total level <= cap.
    pub fn vertices(&self, ty: AlgebraType, cap: u32) -> Result<Vec<Word>, Error> {
        match self {
            Model::SpinPlus => Ok(super_spin_atoms(ty, SpinClass::Plus, cap)
                .into_iter()
                .map(|a| vec![a])
                .collect()),
            Model::SpinMinus => {
                if ty.family != Family::D {
                    return Err(Error::UnsupportedFactor("spin-minus factor needs the D family".into()));
                }
                Ok(super_spin_atoms(ty, SpinClass::Minus, cap)
                    .into_iter()
                    .map(|a| vec![a])
                    .collect())
            }
            Model::Trivial => Ok(vec![Vec::new()]),
            Model::Typical(_) => Ok(super_component(&self.lowest(ty)?, ty, cap)),
        }
    }

    pub fn weight_table(&self, ty: AlgebraType, cap: u32) -> Result<WeightTable, Error> {
        let vs = self.vertices(ty, cap)?;
        Ok(WeightTable::from_words(vs.iter(), ty, cap as i64))
    }
}

/// The product model of a typical crystal B(λ) with n_0(λ) = 1: the full
/// product set of B(ω_0) with the classical crystal of λ_cl.
pub fn typical_model(lambda: &Weight, ty: AlgebraType, cap: u32) -> Result<Vec<Word>, Error> {
    if lambda.n0() != 1 {
        return Err(Error::Atypical(lambda.to_string()));
    }
    Model::Typical(lambda.clone()).vertices(ty, cap)
}

/// Decompose a tensor product of supported factors by enumerating its
/// lowest vertices. Every lowest vertex of a product has a lowest first
/// tensor factor, so candidates are u_1 ⊗ v with v running over the
/// truncated product of the remaining factors.
pub fn decompose_super(factors: &[Model], ty: AlgebraType, cap: u32) -> Result<DecompositionSummary, Error> {
    let capi = cap as i64;
    if factors.is_empty() {
        return Ok(DecompositionSummary {
            summands: BTreeMap::from([(Weight::zero(ty), 1)]),
            per_weight: WeightTable::singleton(Weight::zero(ty)).restricted(capi),
            cap: capi,
            complete_below: capi,
        });
    }
    let u1 = factors[0].lowest(ty)?;
    debug_assert!(is_lowest(&u1, ty));

    // truncated vertex sets of the remaining factors
    let mut rest: Vec<Word> = vec![Vec::new()];
    for f in &factors[1..] {
        let vs = f.vertices(ty, cap)?;
        let mut next = Vec::new();
        for prefix in &rest {
            let used = word_level(prefix);
            for v in &vs {
                if used + word_level(v) <= cap {
                    let mut w = prefix.clone();
                    w.extend_from_slice(v);
                    next.push(w);
                }
            }
        }
        rest = next;
    }

    let mut summands: BTreeMap<Weight, u64> = BTreeMap::new();
    for v in &rest {
        let mut cand = u1.clone();
        cand.extend_from_slice(v);
        if is_lowest(&cand, ty) {
            let w = word_weight(&cand, ty);
            if w.n0() <= capi {
                *summands.entry(w).or_insert(0) += 1;
            }
        }
    }

    // product multiplicities: convolution of the factor tables
    let mut per_weight = factors[0].weight_table(ty, cap)?;
    for f in &factors[1..] {
        per_weight = per_weight.convolve(&f.weight_table(ty, cap)?);
    }

    Ok(DecompositionSummary {
        summands,
        per_weight,
        cap: capi,
        complete_below: capi,
    })
}

/// A classical component of a truncated super crystal.
#[derive(Clone, Debug)]
pub struct LabeledComponent {
    pub weight: ClassicalWeight,
    pub level: i64,
    pub members: Vec<Word>,
}

/// Partition a truncated vertex set into classical components (operators
/// 1…N) and label each by (classical lowest weight, ω_0-coefficient of its
/// classical-lowest vertex).
pub fn label_super_components(vertices: &[Word], ty: AlgebraType) -> Vec<LabeledComponent> {
    let all: BTreeSet<Word> = vertices.iter().cloned().collect();
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut out = Vec::new();
    for seed in &all {
        if visited.contains(seed) {
            continue;
        }
        let comp = crate::classical::classical_component(seed, ty);
        let mut lowest: Option<&Word> = None;
        for w in &comp {
            debug_assert!(all.contains(w), "vertex set is not classically closed");
            visited.insert(w.clone());
            if is_classical_lowest(w, ty) {
                assert!(lowest.is_none(), "two classical-lowest vertices in one component");
                lowest = Some(w);
            }
        }
        let low = lowest.expect("classical component without a lowest vertex");
        out.push(LabeledComponent {
            weight: word_classical_weight(low, ty),
            level: word_weight(low, ty).n0(),
            members: comp.clone(),
        });
    }
    out
}

/// The label multiset of [`label_super_components`].
pub fn label_multiset(vertices: &[Word], ty: AlgebraType) -> BTreeMap<ComponentLabel, u64> {
    let mut out = BTreeMap::new();
    for c in label_super_components(vertices, ty) {
        *out.entry((c.weight, c.level)).or_insert(0) += 1;
    }
    out
}

/// Which tensor factor an f̃_0 edge acted on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Side {
    L,
    R,
}

/// An observed f̃_0 edge between classical components.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ZeroArrow {
    pub source: ComponentLabel,
    pub target: ComponentLabel,
    pub side: Side,
}

/// All f̃_0 edges of a truncated two-factor product, labelled by source and
/// target classical components and by the factor that was acted on.
/// `boundary` is the number of atoms belonging to the first factor.
pub fn zero_arrow_relations(
    vertices: &[Word],
    boundary: usize,
    ty: AlgebraType,
) -> Vec<(ZeroArrow, u64)> {
    let comps = label_super_components(vertices, ty);
    let mut label_of: BTreeMap<&Word, ComponentLabel> = BTreeMap::new();
    for c in &comps {
        for w in &c.members {
            label_of.insert(w, (c.weight.clone(), c.level));
        }
    }
    let mut out: BTreeMap<ZeroArrow, u64> = BTreeMap::new();
    for w in vertices {
        if let Some((next, idx)) = apply_indexed(Dir::Lower, 0, w, ty) {
            let source = label_of.get(w).expect("source not labelled").clone();
            let target = label_of.get(&next).expect("0-arrow leaves the vertex set").clone();
            let side = if idx < boundary { Side::L } else { Side::R };
            *out.entry(ZeroArrow { source, target, side }).or_insert(0) += 1;
        }
    }
    out.into_iter().collect()
}

/// Label kinds over the Ξ-chain, used to state the 0-arrow rules.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum XiKind {
    K(usize),
    Prime,
}

fn xi_kind(w: &ClassicalWeight, ty: AlgebraType) -> Option<XiKind> {
    for k in 0..=ty.n {
        let xi = crate::roots::xi_weight(k, ty);
        if w.0.iter().zip(&xi.0).all(|(a, b)| *a == -b) {
            return Some(XiKind::K(k));
        }
    }
    if ty.family == Family::D {
        let xi = crate::roots::xi_prime_weight(ty);
        if w.0.iter().zip(&xi.0).all(|(a, b)| *a == -b) {
            return Some(XiKind::Prime);
        }
    }
    None
}

/// Whether an observed 0-arrow is allowed by the closed-form 0-arrow rules
/// for the spin ⊗ spin products (with the Λ_{N−1} ↔ Λ_N mirror applied to
/// the two top labels of the D family).
pub fn zero_arrow_allowed(arrow: &ZeroArrow, ty: AlgebraType) -> bool {
    let n = ty.n;
    let (src_w, l) = &arrow.source;
    let (dst_w, lp) = &arrow.target;
    let (s, t) = match (xi_kind(src_w, ty), xi_kind(dst_w, ty)) {
        (Some(s), Some(t)) => (s, t),
        _ => return false,
    };
    let l = *l;
    let lp = *lp;
    use XiKind::{Prime, K};
    match (ty.family, arrow.side) {
        (Family::D, Side::R) => match (s, t) {
            (K(k), K(t)) if (2..=n).contains(&k) && t == k - 1 => lp == l - 1,
            (Prime, K(t)) if t == n - 1 => lp == l - 1,
            (K(1), K(0)) => lp == l,
            _ => false,
        },
        (Family::D, Side::L) => match (s, t) {
            (K(s), K(t)) if s + 1 == t && t <= n - 1 && s >= 1 => lp == l - 1,
            (K(0), K(1)) => lp == l - 2,
            (K(s), K(t)) if s == n && t == n - 1 => lp == l - 1,
            (Prime, K(t)) if t == n - 1 => lp == l - 1,
            (K(s), K(t)) if s == n - 1 && t == n => lp == l - 1,
            (K(s), Prime) if s == n - 1 => lp == l - 1,
            _ => false,
        },
        (Family::B, Side::R) => match (s, t) {
            (K(k), K(t)) if (2..=n).contains(&k) && t == k - 1 => lp == l - 1,
            (K(1), K(0)) => lp == l,
            _ => false,
        },
        (Family::B, Side::L) => match (s, t) {
            (K(s), K(t)) if s + 1 == t && t <= n => lp == l - 1,
            (K(0), K(1)) => lp == l - 2,
            (K(s), K(t)) if s == n && t == n => lp == l - 1,
            _ => false,
        },
    }
}

/// Crystal-axiom violations on a truncated vertex set: the raise/lower
/// inversion (axiom B4), the weight step by a simple root, and the
/// non-negative ⟨h_0, ·⟩ pairing. Vertices within one level of the cap are
/// exempt from the raise direction of index 0 so that truncation itself is
/// never reported.
pub fn check_axioms(vertices: &[Word], ty: AlgebraType, cap: u32) -> Vec<String> {
    let rd = crate::roots::RootData::new(ty);
    let mut bad = Vec::new();
    for w in vertices {
        let wt = word_weight(w, ty);
        if wt.n0() < 0 {
            bad.push(format!("negative h_0 pairing at {}", crate::crystal::render_word(w, ty)));
        }
        let lvl = word_level(w);
        for i in 0..=ty.n {
            if !(i == 0 && lvl + 1 > cap) {
                if let Some(up) = apply(Dir::Raise, i, w, ty) {
                    if apply(Dir::Lower, i, &up, ty).as_deref() != Some(&w[..]) {
                        bad.push(format!(
                            "axiom B4 fails upward at {} index {i}",
                            crate::crystal::render_word(w, ty)
                        ));
                    }
                    if word_weight(&up, ty) != wt.add(&rd.alpha_weight(i)) {
                        bad.push(format!(
                            "weight step fails at {} index {i}",
                            crate::crystal::render_word(w, ty)
                        ));
                    }
                }
            }
            if let Some(down) = apply(Dir::Lower, i, w, ty) {
                if apply(Dir::Raise, i, &down, ty).as_deref() != Some(&w[..]) {
                    bad.push(format!(
                        "axiom B4 fails downward at {} index {i}",
                        crate::crystal::render_word(w, ty)
                    ));
                }
                if word_weight(&down, ty) != wt.sub(&rd.alpha_weight(i)) {
                    bad.push(format!(
                        "weight step fails downward at {} index {i}",
                        crate::crystal::render_word(w, ty)
                    ));
                }
            }
        }
    }
    bad
}

/// The truncated full vertex set of a tensor product of factors.
pub fn product_vertices(factors: &[Model], ty: AlgebraType, cap: u32) -> Result<Vec<Word>, Error> {
    let mut acc: Vec<Word> = vec![Vec::new()];
    for f in factors {
        let vs = f.vertices(ty, cap)?;
        let mut next = Vec::new();
        for prefix in &acc {
            let used = word_level(prefix);
            for v in &vs {
                if used + word_level(v) <= cap {
                    let mut w = prefix.clone();
                    w.extend_from_slice(v);
                    next.push(w);
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}
