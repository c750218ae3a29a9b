//! Finite crystals of the even subalgebra: spin crystals as sign vectors,
//! realization of the crystal with a given antidominant lowest weight inside
//! a tensor power of spin crystals, and a brute-force tensor-product
//! decomposition by connected-component search under the operators 1…N.
//!
//! The component search is the independent oracle against which the
//! closed-form classifications are checked.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::crystal::{apply, is_classical_lowest, word_classical_weight, Atom, Dir, Word};
use crate::error::Error;
use crate::roots::{AlgebraType, ClassicalWeight, Family};

/// Parity class of a D-family spin crystal; the B family has a single spin
/// crystal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpinClass {
    /// Even number of "−" entries; lowest weight −Λ_N.
    Plus,
    /// Odd number of "−" entries; lowest weight −Λ_{N−1}. D family only.
    Minus,
}

/// Sign vectors of the requested spin crystal.
pub fn spin_elements(ty: AlgebraType, class: SpinClass) -> Vec<u32> {
    let all = 0..(1u32 << ty.n);
    match ty.family {
        Family::B => all.collect(),
        Family::D => {
            let want = match class {
                SpinClass::Plus => 0,
                SpinClass::Minus => 1,
            };
            all.filter(|s| s.count_ones() % 2 == want).collect()
        }
    }
}

/// Lowest-weight sign vector of the spin crystal: all "+" for the plus
/// class, a single trailing "−" for the minus class.
pub fn spin_lowest(ty: AlgebraType, class: SpinClass) -> u32 {
    match class {
        SpinClass::Plus => 0,
        SpinClass::Minus => {
            debug_assert_eq!(ty.family, Family::D);
            1 << (ty.n - 1)
        }
    }
}

/// A finite classical crystal: a set of level-0 tensor words closed under
/// the operators 1…N, with its unique lowest vertex.
#[derive(Clone, Debug)]
pub struct ClassicalCrystal {
    pub ty: AlgebraType,
    pub vertices: Vec<Word>,
    pub lowest: Word,
}

impl ClassicalCrystal {
    pub fn lowest_weight(&self) -> ClassicalWeight {
        word_classical_weight(&self.lowest, self.ty)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Weight multiplicities over the classical weight lattice.
    pub fn weight_multiplicities(&self) -> BTreeMap<ClassicalWeight, u64> {
        let mut out = BTreeMap::new();
        for w in &self.vertices {
            *out.entry(word_classical_weight(w, self.ty)).or_insert(0) += 1;
        }
        out
    }
}

/// Connected component of a seed word under the operators 1…N (both
/// directions), enumerated in a deterministic order.
pub fn classical_component(seed: &Word, ty: AlgebraType) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(w) = queue.pop_front() {
        for i in 1..=ty.n {
            for dir in [Dir::Raise, Dir::Lower] {
                if let Some(next) = apply(dir, i, &w, ty) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The seed word for the crystal with lowest weight −Λ_i: a single spin
/// lowest vector for the tail nodes, a two-atom spin pair otherwise.
fn fundamental_seed(i: usize, ty: AlgebraType) -> Vec<Atom> {
    let n = ty.n;
    let atom = |signs: u32| Atom::new(signs, 0);
    // sign vector (+^i, −^(N−i))
    let pattern = |i: usize| (((1u32 << n) - 1) >> i) << i;
    match ty.family {
        Family::D => {
            if i == n {
                vec![atom(spin_lowest(ty, SpinClass::Plus))]
            } else if i == n - 1 {
                vec![atom(spin_lowest(ty, SpinClass::Minus))]
            } else {
                vec![atom(0), atom(pattern(i))]
            }
        }
        Family::B => {
            if i == n {
                vec![atom(0)]
            } else {
                vec![atom(0), atom(pattern(i))]
            }
        }
    }
}

/// The classical-lowest tensor word of weight Λ = −Σ n_iΛ_i: a
/// concatenation of spin lowest-weight words, one block per fundamental.
pub fn classical_lowest_word(lambda: &ClassicalWeight, ty: AlgebraType) -> Result<Word, Error> {
    if !lambda.is_antidominant() {
        return Err(Error::NotAntidominant(lambda.to_string()));
    }
    let mut seed: Word = Vec::new();
    for (idx, c) in lambda.0.iter().enumerate() {
        let i = idx + 1;
        for _ in 0..(-c) {
            seed.extend(fundamental_seed(i, ty));
        }
    }
    debug_assert!(is_classical_lowest(&seed, ty));
    debug_assert_eq!(word_classical_weight(&seed, ty), *lambda);
    Ok(seed)
}

/// Build the classical crystal with antidominant lowest weight
/// Λ = −Σ n_iΛ_i as the connected component of a concatenation of spin
/// lowest-weight words.
pub fn realize_classical_crystal(lambda: &ClassicalWeight, ty: AlgebraType) -> Result<ClassicalCrystal, Error> {
    let seed = classical_lowest_word(lambda, ty)?;
    let vertices = classical_component(&seed, ty);
    Ok(ClassicalCrystal {
        ty,
        vertices,
        lowest: seed,
    })
}

/// One connected component of a classical tensor product.
#[derive(Clone, Debug)]
pub struct Component {
    pub lowest_weight: ClassicalWeight,
    pub lowest_vertex: Word,
    pub size: usize,
}

/// Partition the full vertex set of a tensor product of finite classical
/// crystals into connected components under the operators 1…N. Components
/// are reported in the deterministic order of their smallest vertex.
pub fn decompose_classical_tensor(factors: &[&ClassicalCrystal], ty: AlgebraType) -> Vec<Component> {
    let mut all: BTreeSet<Word> = BTreeSet::new();
    let mut stack: Vec<Word> = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::new();
        for prefix in &stack {
            for v in &f.vertices {
                let mut w = prefix.clone();
                w.extend_from_slice(v);
                next.push(w);
            }
        }
        stack = next;
    }
    for w in stack {
        all.insert(w);
    }

    let mut components = Vec::new();
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    for seed in &all {
        if visited.contains(seed) {
            continue;
        }
        let comp = classical_component(seed, ty);
        let mut lowest = None;
        for w in &comp {
            visited.insert(w.clone());
            if is_classical_lowest(w, ty) {
                assert!(lowest.is_none(), "two lowest vertices in one component");
                lowest = Some(w.clone());
            }
        }
        let lowest_vertex = lowest.expect("component without a lowest vertex");
        components.push(Component {
            lowest_weight: word_classical_weight(&lowest_vertex, ty),
            lowest_vertex,
            size: comp.len(),
        });
    }
    components
}

/// The spin crystal as a [`ClassicalCrystal`] of one-atom words.
pub fn spin_crystal(ty: AlgebraType, class: SpinClass) -> ClassicalCrystal {
    let vertices: Vec<Word> = spin_elements(ty, class)
        .into_iter()
        .map(|s| vec![Atom::new(s, 0)])
        .collect();
    ClassicalCrystal {
        ty,
        vertices,
        lowest: vec![Atom::new(spin_lowest(ty, class), 0)],
    }
}
