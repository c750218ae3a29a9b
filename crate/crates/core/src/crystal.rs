//! Tensor words of spin atoms and their Kashiwara operators.
//!
//! An [`Atom`] is a ± sign vector of length N together with a non-negative
//! level; the level-0 operators move between levels, the operators 1…N act
//! on the sign vector alone. Vertices of every crystal in this crate are
//! flat tensor words of atoms, associated to the left; purely classical
//! vertices are words whose atoms all sit at level 0 and are only ever hit
//! by the operators 1…N.
//!
//! The tensor rule here has the inequalities mirrored relative to the
//! ordinary Kac–Moody convention (the l-values of the even simple roots are
//! negative), and the 0-operators route by the ⟨h_0, ·⟩ pairing of the left
//! tensor prefix rather than by string lengths.

use crate::roots::{AlgebraType, ClassicalWeight, Family, Weight};

/// Sign vector (bit i-1 set means "−" at position i) plus level.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Atom {
    pub signs: u32,
    pub level: u32,
}

impl Atom {
    pub fn new(signs: u32, level: u32) -> Self {
        Atom { signs, level }
    }

    /// Number of "−" entries.
    pub fn minus_count(&self, n: usize) -> u32 {
        (self.signs & ((1u32 << n) - 1)).count_ones()
    }

    /// ⟨h_0, wt⟩ of the atom: level, plus one when the first sign is "−".
    pub fn n0(&self) -> i64 {
        self.level as i64 + ((self.signs & 1) as i64)
    }

    /// Classical weight of the sign vector in the Λ-basis.
    pub fn classical_weight(&self, ty: AlgebraType) -> ClassicalWeight {
        let n = ty.n;
        let bit = |p: usize| ((self.signs >> (p - 1)) & 1) as i64;
        let mut c = Vec::with_capacity(n);
        for j in 1..n {
            c.push(bit(j) - bit(j + 1));
        }
        match ty.family {
            Family::D => c.push(bit(n - 1) + bit(n) - 1),
            Family::B => c.push(2 * bit(n) - 1),
        }
        ClassicalWeight(c)
    }

    /// Weight in the ω-basis.
    pub fn weight(&self, ty: AlgebraType) -> Weight {
        let cl = self.classical_weight(ty);
        let mut v = Vec::with_capacity(ty.n + 1);
        v.push(self.n0());
        v.extend_from_slice(&cl.0);
        Weight(v)
    }

    pub fn render(&self, ty: AlgebraType) -> String {
        let mut s = String::from("(");
        for p in 1..=ty.n {
            s.push(if (self.signs >> (p - 1)) & 1 == 1 { '-' } else { '+' });
        }
        s.push_str(&format!(")_{}", self.level));
        s
    }
}

/// A tensor word of atoms (left associated).
pub type Word = Vec<Atom>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    /// The raising operators ẽ_i.
    Raise,
    /// The lowering operators f̃_i.
    Lower,
}

/// Classical raising operator ẽ_i on a sign vector, i = 1…N.
pub fn spin_raise(i: usize, signs: u32, ty: AlgebraType) -> Option<u32> {
    let n = ty.n;
    debug_assert!(i >= 1 && i <= n);
    let minus = |p: usize| signs & (1 << (p - 1)) != 0;
    if i < n {
        // (+,−) at positions (i, i+1) becomes (−,+)
        if !minus(i) && minus(i + 1) {
            Some(signs ^ (1 << (i - 1)) ^ (1 << i))
        } else {
            None
        }
    } else {
        match ty.family {
            Family::D => {
                if !minus(n - 1) && !minus(n) {
                    Some(signs | (1 << (n - 2)) | (1 << (n - 1)))
                } else {
                    None
                }
            }
            Family::B => {
                if !minus(n) {
                    Some(signs | (1 << (n - 1)))
                } else {
                    None
                }
            }
        }
    }
}

/// Classical lowering operator f̃_i on a sign vector, i = 1…N.
pub fn spin_lower(i: usize, signs: u32, ty: AlgebraType) -> Option<u32> {
    let n = ty.n;
    debug_assert!(i >= 1 && i <= n);
    let minus = |p: usize| signs & (1 << (p - 1)) != 0;
    if i < n {
        // (−,+) at positions (i, i+1) becomes (+,−)
        if minus(i) && !minus(i + 1) {
            Some(signs ^ (1 << (i - 1)) ^ (1 << i))
        } else {
            None
        }
    } else {
        match ty.family {
            Family::D => {
                if minus(n - 1) && minus(n) {
                    Some(signs & !((1 << (n - 2)) | (1 << (n - 1))))
                } else {
                    None
                }
            }
            Family::B => {
                if minus(n) {
                    Some(signs & !(1 << (n - 1)))
                } else {
                    None
                }
            }
        }
    }
}

/// ẽ_i or f̃_i on a sign vector.
pub fn spin_kashiwara(dir: Dir, i: usize, signs: u32, ty: AlgebraType) -> Option<u32> {
    match dir {
        Dir::Raise => spin_raise(i, signs, ty),
        Dir::Lower => spin_lower(i, signs, ty),
    }
}

/// Kashiwara operator on a single atom, i = 0…N. For i = 0: ẽ_0 turns
/// (−, s)_k into (+, s)_{k+1}; f̃_0 turns (+, s)_{k+1} into (−, s)_k and
/// kills (+, s)_0 and every (−, …).
pub fn atom_kashiwara(dir: Dir, i: usize, a: Atom, ty: AlgebraType) -> Option<Atom> {
    if i == 0 {
        match dir {
            Dir::Raise => {
                if a.signs & 1 == 1 {
                    Some(Atom::new(a.signs & !1, a.level + 1))
                } else {
                    None
                }
            }
            Dir::Lower => {
                if a.signs & 1 == 0 && a.level >= 1 {
                    Some(Atom::new(a.signs | 1, a.level - 1))
                } else {
                    None
                }
            }
        }
    } else {
        spin_kashiwara(dir, i, a.signs, ty).map(|s| Atom::new(s, a.level))
    }
}

/// String lengths (ε_i, φ_i) of a single atom, i = 1…N; both are 0 or 1.
pub fn atom_eps_phi(i: usize, a: Atom, ty: AlgebraType) -> (i64, i64) {
    let e = spin_raise(i, a.signs, ty).is_some() as i64;
    let p = spin_lower(i, a.signs, ty).is_some() as i64;
    (e, p)
}

/// String lengths (ε_i, φ_i) of a word, i = 1…N, by the left fold
/// ε(b₁⊗b₂) = ε(b₂) + max(0, ε(b₁) − φ(b₂)),
/// φ(b₁⊗b₂) = φ(b₁) + max(0, φ(b₂) − ε(b₁)).
pub fn eps_phi(i: usize, word: &[Atom], ty: AlgebraType) -> (i64, i64) {
    assert!(i >= 1, "string lengths are defined for the indices 1..=N only");
    let mut e = 0i64;
    let mut p = 0i64;
    for a in word {
        let (ea, pa) = atom_eps_phi(i, *a, ty);
        let enew = ea + (e - pa).max(0);
        let pnew = p + (pa - e).max(0);
        e = enew;
        p = pnew;
    }
    (e, p)
}

/// Apply ẽ_i or f̃_i to a word and also report which atom was acted on.
pub fn apply_indexed(dir: Dir, i: usize, word: &[Atom], ty: AlgebraType) -> Option<(Word, usize)> {
    if word.is_empty() {
        return None;
    }
    let m = word.len();
    let target = if i == 0 {
        // route to the first atom with ⟨h_0, wt⟩ > 0, or the last atom when
        // the whole prefix pairs to zero
        word.iter().position(|a| a.n0() > 0).unwrap_or(m - 1)
    } else {
        // prefix string lengths, then descend from the right
        let mut pref = Vec::with_capacity(m);
        let mut e = 0i64;
        let mut p = 0i64;
        pref.push((e, p));
        for a in &word[..m - 1] {
            let (ea, pa) = atom_eps_phi(i, *a, ty);
            let enew = ea + (e - pa).max(0);
            let pnew = p + (pa - e).max(0);
            e = enew;
            p = pnew;
            pref.push((e, p));
        }
        let mut t = 0usize;
        for k in (2..=m).rev() {
            let (_, pa) = atom_eps_phi(i, word[k - 1], ty);
            let eprefix = pref[k - 1].0;
            let hit = match dir {
                Dir::Raise => eprefix <= pa,
                Dir::Lower => eprefix < pa,
            };
            if hit {
                t = k - 1;
                break;
            }
        }
        t
    };
    let moved = atom_kashiwara(dir, i, word[target], ty)?;
    let mut out = word.to_vec();
    out[target] = moved;
    Some((out, target))
}

/// Apply ẽ_i or f̃_i to a word; None encodes 0.
pub fn apply(dir: Dir, i: usize, word: &[Atom], ty: AlgebraType) -> Option<Word> {
    apply_indexed(dir, i, word, ty).map(|(w, _)| w)
}

/// Sum of the atom weights.
pub fn word_weight(word: &[Atom], ty: AlgebraType) -> Weight {
    let mut w = Weight::zero(ty);
    for a in word {
        w = w.add(&a.weight(ty));
    }
    w
}

pub fn word_classical_weight(word: &[Atom], ty: AlgebraType) -> ClassicalWeight {
    let mut w = ClassicalWeight::zero(ty);
    for a in word {
        w = w.add(&a.classical_weight(ty));
    }
    w
}

/// Total level Σk over the atoms (the truncation parameter).
pub fn word_level(word: &[Atom]) -> u32 {
    word.iter().map(|a| a.level).sum()
}

/// All f̃_i vanish for 0 <= i <= N.
pub fn is_lowest(word: &[Atom], ty: AlgebraType) -> bool {
    (0..=ty.n).all(|i| apply(Dir::Lower, i, word, ty).is_none())
}

/// All f̃_i vanish for 1 <= i <= N.
pub fn is_classical_lowest(word: &[Atom], ty: AlgebraType) -> bool {
    (1..=ty.n).all(|i| apply(Dir::Lower, i, word, ty).is_none())
}

pub fn render_word(word: &[Atom], ty: AlgebraType) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|a| a.render(ty)).collect::<Vec<_>>().join("(x)")
}
