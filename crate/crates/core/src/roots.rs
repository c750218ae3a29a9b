//! Root data for the two algebra families: Cartan matrices, fundamental
//! weights, the invariant bilinear form, typicality, and weight arithmetic.
//!
//! Weights live in the lattice P = ⊕ Zω_i and are stored as exact integer
//! coordinate vectors in the ω-basis (index 0 is the odd node). The dual
//! pairing ⟨h_i, ω_j⟩ = δ_ij makes pairings trivial in this basis; the
//! orthogonal coordinates (δ, ε_1, …, ε_N) carry the bilinear form and are
//! exact rationals with denominator dividing 2.

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    D,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::D => write!(f, "D"),
            Family::B => write!(f, "B"),
        }
    }
}

/// One of the algebras D(N,1) or B(N,1), N >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraType {
    pub family: Family,
    pub n: usize,
}

impl AlgebraType {
    pub fn new(family: Family, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Rank(n));
        }
        Ok(AlgebraType { family, n })
    }

    /// Number of simple roots, including the odd node 0.
    pub fn node_count(&self) -> usize {
        self.n + 1
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},1)", self.family, self.n)
    }
}

/// Weight in the ω-basis: coefficient vector (c_0, c_1, …, c_N), meaning
/// Σ c_i ω_i. The paper's standing form n_0ω_0 − Σ n_iω_i corresponds to
/// c_0 = n_0, c_i = −n_i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(ty: AlgebraType) -> Self {
        Weight(vec![0; ty.node_count()])
    }

    pub fn omega(i: usize, ty: AlgebraType) -> Self {
        let mut w = Self::zero(ty);
        w.0[i] = 1;
        w
    }

    pub fn n0(&self) -> i64 {
        self.0[0]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, s: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a == 1 {
                write!(f, "w{i}")?;
            } else {
                write!(f, "{a}*w{i}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    omega: Vec<i64>,
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WeightRepr { omega: self.0.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Weight(WeightRepr::deserialize(d)?.omega))
    }
}

/// Weight of the even subalgebra in its fundamental-weight basis:
/// coefficients (c_1, …, c_N) of Σ c_i Λ_i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassicalWeight(pub Vec<i64>);

impl ClassicalWeight {
    pub fn zero(ty: AlgebraType) -> Self {
        ClassicalWeight(vec![0; ty.n])
    }

    pub fn lambda(i: usize, ty: AlgebraType) -> Self {
        let mut w = Self::zero(ty);
        w.0[i - 1] = 1;
        w
    }

    pub fn add(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    /// All coefficients of −Σ n_iΛ_i non-negative, i.e. all stored
    /// coordinates <= 0.
    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|c| *c <= 0)
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a == 1 {
                write!(f, "L{}", i + 1)?;
            } else {
                write!(f, "{a}*L{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Drop the ω_0 coefficient: n_0ω_0 − Σ n_iω_i ↦ −Σ n_iΛ_i.
pub fn classical_restriction(w: &Weight) -> ClassicalWeight {
    ClassicalWeight(w.0[1..].to_vec())
}

/// Attach an ω_0 coefficient to a classical weight.
pub fn lift(cw: &ClassicalWeight, n0: i64) -> Weight {
    let mut v = Vec::with_capacity(cw.0.len() + 1);
    v.push(n0);
    v.extend_from_slice(&cw.0);
    Weight(v)
}

/// Exact rational vector in the orthogonal basis (δ, ε_1, …, ε_N).
pub type Ortho = Vec<Rational64>;

fn ortho_zero(dim: usize) -> Ortho {
    vec![Rational64::zero(); dim]
}

fn ortho_add(a: &Ortho, b: &Ortho) -> Ortho {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn ortho_sub(a: &Ortho, b: &Ortho) -> Ortho {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn ortho_scale(a: &Ortho, s: Rational64) -> Ortho {
    a.iter().map(|x| x * s).collect()
}

/// Root data: Cartan matrix, l-values, parities, simple roots and
/// fundamental weights in orthogonal coordinates, positive roots and ρ.
#[derive(Clone, Debug)]
pub struct RootData {
    pub ty: AlgebraType,
    pub lvalues: Vec<i64>,
    pub parity: Vec<u8>,
    /// (δ,δ) under the invariant form; (ε_i,ε_i) is its negative.
    pub form_scale: i64,
    pub alpha_ortho: Vec<Ortho>,
    pub omega_ortho: Vec<Ortho>,
    pub cartan: Vec<Vec<i64>>,
    pub positive_even: Vec<Ortho>,
    pub positive_odd: Vec<Ortho>,
    /// Positive half of the odd roots entering the typicality criterion.
    pub odd_bar_positive: Vec<Ortho>,
    pub rho: Ortho,
}

impl RootData {
    pub fn new(ty: AlgebraType) -> Self {
        let n = ty.n;
        let dim = n + 1;
        let half = Rational64::new(1, 2);
        let one = Rational64::from_integer(1);

        let delta = |v: &mut Ortho| v[0] = v[0] + one;
        let eps = |v: &mut Ortho, i: usize, s: i64| v[i] = v[i] + Rational64::from_integer(s);

        // simple roots
        let mut alpha: Vec<Ortho> = Vec::with_capacity(dim);
        {
            let mut a0 = ortho_zero(dim);
            delta(&mut a0);
            eps(&mut a0, 1, -1);
            alpha.push(a0);
        }
        for i in 1..n {
            let mut a = ortho_zero(dim);
            eps(&mut a, i, 1);
            eps(&mut a, i + 1, -1);
            alpha.push(a);
        }
        {
            let mut an = ortho_zero(dim);
            match ty.family {
                Family::D => {
                    eps(&mut an, n - 1, 1);
                    eps(&mut an, n, 1);
                }
                Family::B => {
                    eps(&mut an, n, 1);
                }
            }
            alpha.push(an);
        }

        // fundamental weights
        let mut omega: Vec<Ortho> = Vec::with_capacity(dim);
        {
            let mut w0 = ortho_zero(dim);
            delta(&mut w0);
            omega.push(w0);
        }
        let plain_range = match ty.family {
            Family::D => 1..=n.saturating_sub(2),
            Family::B => 1..=n - 1,
        };
        for i in plain_range {
            let mut w = ortho_zero(dim);
            w[0] = -one;
            for j in 1..=i {
                eps(&mut w, j, 1);
            }
            omega.push(w);
        }
        match ty.family {
            Family::D => {
                let mut wm = ortho_zero(dim);
                wm[0] = -half;
                for j in 1..n {
                    wm[j] = half;
                }
                wm[n] = -half;
                omega.push(wm);
                let mut wn = ortho_zero(dim);
                wn[0] = -half;
                for j in 1..=n {
                    wn[j] = half;
                }
                omega.push(wn);
            }
            Family::B => {
                let mut wn = ortho_zero(dim);
                wn[0] = -half;
                for j in 1..=n {
                    wn[j] = half;
                }
                omega.push(wn);
            }
        }
        debug_assert_eq!(omega.len(), dim);

        let (lvalues, form_scale) = match ty.family {
            Family::D => {
                let mut l = vec![-1i64; dim];
                l[0] = 1;
                (l, 1)
            }
            Family::B => {
                let mut l = vec![-2i64; dim];
                l[0] = 2;
                l[n] = -1;
                (l, 2)
            }
        };

        let mut parity = vec![0u8; dim];
        parity[0] = 1;

        // positive roots
        let mut positive_even: Vec<Ortho> = Vec::new();
        let mut positive_odd: Vec<Ortho> = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let mut d = ortho_zero(dim);
                eps(&mut d, i, 1);
                eps(&mut d, j, -1);
                positive_even.push(d);
                let mut s = ortho_zero(dim);
                eps(&mut s, i, 1);
                eps(&mut s, j, 1);
                positive_even.push(s);
            }
        }
        if ty.family == Family::B {
            for i in 1..=n {
                let mut s = ortho_zero(dim);
                eps(&mut s, i, 1);
                positive_even.push(s);
            }
        }
        {
            let mut twodelta = ortho_zero(dim);
            twodelta[0] = Rational64::from_integer(2);
            positive_even.push(twodelta);
        }
        let mut odd_bar_positive: Vec<Ortho> = Vec::new();
        for i in 1..=n {
            for s in [1i64, -1] {
                let mut b = ortho_zero(dim);
                delta(&mut b);
                eps(&mut b, i, s);
                positive_odd.push(b.clone());
                odd_bar_positive.push(b);
            }
        }
        if ty.family == Family::B {
            let mut d = ortho_zero(dim);
            delta(&mut d);
            positive_odd.push(d);
        }

        let mut rho = ortho_zero(dim);
        for b in &positive_even {
            rho = ortho_add(&rho, b);
        }
        for b in &positive_odd {
            rho = ortho_sub(&rho, b);
        }

        // Cartan matrix from duality: a_ij = (α_i, α_j) / l_i
        let form = |a: &Ortho, b: &Ortho| -> Rational64 {
            let mut acc = a[0] * b[0];
            for k in 1..dim {
                acc -= a[k] * b[k];
            }
            acc * Rational64::from_integer(form_scale)
        };
        let mut cartan = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let v = form(&alpha[i], &alpha[j]) / Rational64::from_integer(lvalues[i]);
                assert!(v.is_integer(), "non-integer Cartan entry at ({i},{j})");
                cartan[i][j] = v.to_integer();
            }
        }

        RootData {
            ty,
            lvalues,
            parity,
            form_scale,
            alpha_ortho: alpha,
            omega_ortho: omega,
            cartan,
            positive_even,
            positive_odd,
            odd_bar_positive,
            rho,
        }
    }

    /// Orthogonal coordinates of a weight.
    pub fn to_orthogonal(&self, w: &Weight) -> Ortho {
        let mut acc = ortho_zero(self.ty.node_count());
        for (i, c) in w.0.iter().enumerate() {
            if *c != 0 {
                acc = ortho_add(&acc, &ortho_scale(&self.omega_ortho[i], Rational64::from_integer(*c)));
            }
        }
        acc
    }

    /// The invariant symmetric bilinear form in orthogonal coordinates.
    pub fn bilinear_ortho(&self, a: &Ortho, b: &Ortho) -> Rational64 {
        let mut acc = a[0] * b[0];
        for k in 1..a.len() {
            acc -= a[k] * b[k];
        }
        acc * Rational64::from_integer(self.form_scale)
    }

    pub fn bilinear(&self, a: &Weight, b: &Weight) -> Rational64 {
        self.bilinear_ortho(&self.to_orthogonal(a), &self.to_orthogonal(b))
    }

    /// ⟨h_i, x⟩ for an orthogonal-coordinate vector, via the defining
    /// identity l_i⟨h_i, x⟩ = (α_i, x).
    pub fn pairing_ortho(&self, i: usize, x: &Ortho) -> Rational64 {
        self.bilinear_ortho(&self.alpha_ortho[i], x) / Rational64::from_integer(self.lvalues[i])
    }

    /// ⟨h_i, λ⟩; trivial in the ω-basis.
    pub fn pairing(&self, i: usize, w: &Weight) -> i64 {
        w.0[i]
    }

    /// Simple root α_j in the ω-basis (column j of the Cartan matrix).
    pub fn alpha_weight(&self, j: usize) -> Weight {
        Weight((0..self.ty.node_count()).map(|i| self.cartan[i][j]).collect())
    }

    /// Classical simple root α_j (j >= 1) in the Λ-basis.
    pub fn classical_alpha(&self, j: usize) -> ClassicalWeight {
        ClassicalWeight((1..=self.ty.n).map(|i| self.cartan[i][j]).collect())
    }

    /// Typicality: (λ − ρ, β) != 0 for every odd root β in the reduced set.
    pub fn is_typical(&self, lambda: &Weight) -> bool {
        let x = ortho_sub(&self.to_orthogonal(lambda), &self.rho);
        self.odd_bar_positive
            .iter()
            .all(|b| !self.bilinear_ortho(&x, b).is_zero())
    }

    /// Solve Σ c_j α_j^cl = target over the classical simple roots; the
    /// coefficients must come out as non-negative integers.
    pub fn expand_in_classical_roots(&self, target: &ClassicalWeight) -> Result<Vec<i64>, Error> {
        let n = self.ty.n;
        // matrix[i][j] = Λ_i-coefficient of α_j^cl  (classical Cartan a_ij)
        let mut m: Vec<Vec<Rational64>> = (1..=n)
            .map(|i| (1..=n).map(|j| Rational64::from_integer(self.cartan[i][j])).collect())
            .collect();
        let mut rhs: Vec<Rational64> = target.0.iter().map(|c| Rational64::from_integer(*c)).collect();
        // Gaussian elimination with exact rationals
        for col in 0..n {
            let piv = (col..n)
                .find(|r| !m[*r][col].is_zero())
                .expect("classical Cartan matrix is invertible");
            m.swap(col, piv);
            rhs.swap(col, piv);
            let p = m[col][col];
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col] / p;
                    for c in col..n {
                        let v = m[col][c];
                        m[r][c] = m[r][c] - f * v;
                    }
                    let v = rhs[col];
                    rhs[r] = rhs[r] - f * v;
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = rhs[i] / m[i][i];
            if !v.is_integer() || v.to_integer() < 0 {
                return Err(Error::BadRootExpansion(format!(
                    "{target} expands with coefficient {v} at alpha_{}",
                    i + 1
                )));
            }
            out.push(v.to_integer());
        }
        Ok(out)
    }
}

/// The Cartan matrix of the algebra, rows and columns indexed 0…N.
pub fn cartan_matrix(ty: AlgebraType) -> Vec<Vec<i64>> {
    RootData::new(ty).cartan
}

/// The classical weight Ξ_k labelling the spin ⊗ spin components:
/// Ξ_0 = 0, Ξ_k = Λ_k away from the tail of the diagram, and
/// Ξ_{N−1} = Λ_{N−1} + Λ_N, Ξ_N = 2Λ_N for the D family
/// (Ξ_k = Λ_k for k ≤ N−1, Ξ_N = 2Λ_N for the B family).
pub fn xi_weight(k: usize, ty: AlgebraType) -> ClassicalWeight {
    let n = ty.n;
    assert!(k <= n);
    let mut w = ClassicalWeight::zero(ty);
    if k == 0 {
        return w;
    }
    match ty.family {
        Family::D => {
            if k <= n - 2 {
                w.0[k - 1] = 1;
            } else if k == n - 1 {
                w.0[n - 2] = 1;
                w.0[n - 1] = 1;
            } else {
                w.0[n - 1] = 2;
            }
        }
        Family::B => {
            if k <= n - 1 {
                w.0[k - 1] = 1;
            } else {
                w.0[n - 1] = 2;
            }
        }
    }
    w
}

/// The second top label Ξ_N′ = 2Λ_{N−1} of the D family.
pub fn xi_prime_weight(ty: AlgebraType) -> ClassicalWeight {
    assert_eq!(ty.family, Family::D);
    let mut w = ClassicalWeight::zero(ty);
    w.0[ty.n - 2] = 2;
    w
}

/// The label set W of the classical components of B(ω_0):
/// −Ξ_0, …, −Ξ_N plus −Ξ_N′ for the D family.
pub fn w_label_set(ty: AlgebraType) -> Vec<ClassicalWeight> {
    let mut out: Vec<ClassicalWeight> = (0..=ty.n)
        .map(|k| ClassicalWeight(xi_weight(k, ty).0.iter().map(|c| -c).collect()))
        .collect();
    if ty.family == Family::D {
        out.push(ClassicalWeight(xi_prime_weight(ty).0.iter().map(|c| -c).collect()));
    }
    out
}

/// Render orthogonal coordinates as exact rational strings.
pub fn ortho_strings(x: &Ortho) -> Vec<String> {
    x.iter().map(|r| r.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> AlgebraType {
        AlgebraType::new(Family::D, n).unwrap()
    }

    fn b(n: usize) -> AlgebraType {
        AlgebraType::new(Family::B, n).unwrap()
    }

    /// The paper's standing form n_0ω_0 − Σ n_iω_i.
    fn standing(ty: AlgebraType, n0: i64, ns: &[i64]) -> Weight {
        let mut v = vec![n0];
        v.extend(ns.iter().map(|x| -x));
        assert_eq!(v.len(), ty.node_count());
        Weight(v)
    }

    #[test]
    fn rank_bound() {
        assert!(AlgebraType::new(Family::D, 1).is_err());
        assert!(AlgebraType::new(Family::B, 2).is_ok());
    }

    #[test]
    fn cartan_d4_entries() {
        let c = cartan_matrix(d(4));
        assert_eq!(c[0][1], 1);
        assert_eq!(c[1][0], -1);
        assert_eq!(c[0][0], 0);
        assert_eq!(c[2][4], -1); // node N-2 attaches to node N
        assert_eq!(c[3][4], 0); // spin nodes not adjacent
        assert_eq!(c[4][3], 0);
    }

    #[test]
    fn cartan_d2_has_both_tails_on_the_odd_node() {
        // nodes 1 and 2 both attach to node 0; no 1-2 edge
        let c = cartan_matrix(d(2));
        assert_eq!(c, vec![vec![0, 1, 1], vec![-1, 2, 0], vec![-1, 0, 2]]);
    }

    #[test]
    fn cartan_b3_bottom_rows() {
        let c = cartan_matrix(b(3));
        assert_eq!(c[2], vec![0, -1, 2, -1]);
        assert_eq!(c[3], vec![0, 0, -2, 2]);
        assert_eq!(c[0], vec![0, 1, 0, 0]);
    }

    #[test]
    fn omega_duality_both_families() {
        // ⟨h_i, ω_j⟩ = δ_ij computed from the stored orthogonal data
        for ty in [d(2), d(3), d(4), d(5), d(6), b(2), b(3), b(4), b(5), b(6)] {
            let rd = RootData::new(ty);
            for i in 0..ty.node_count() {
                for j in 0..ty.node_count() {
                    let p = rd.pairing_ortho(i, &rd.omega_ortho[j]);
                    let expect = if i == j { 1 } else { 0 };
                    assert_eq!(p, Rational64::from_integer(expect), "{ty} h_{i} w_{j}");
                }
            }
        }
    }

    #[test]
    fn cartan_duality_reproduced() {
        for ty in [d(2), d(3), d(4), d(5), d(6), b(2), b(3), b(4), b(5), b(6)] {
            let rd = RootData::new(ty);
            for i in 0..ty.node_count() {
                for j in 0..ty.node_count() {
                    let p = rd.pairing_ortho(i, &rd.alpha_ortho[j]);
                    assert_eq!(p, Rational64::from_integer(rd.cartan[i][j]));
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let rd = RootData::new(d(4));
        // ω_0 = δ
        assert_eq!(rd.to_orthogonal(&Weight::omega(0, d(4)))[0], Rational64::from_integer(1));
        // ω_4 = (−δ + ε_1 + ε_2 + ε_3 + ε_4)/2
        let w4 = rd.to_orthogonal(&Weight::omega(4, d(4)));
        assert_eq!(w4[0], Rational64::new(-1, 2));
        for k in 1..=4 {
            assert_eq!(w4[k], Rational64::new(1, 2));
        }
        // zero weight maps to zero
        let z = rd.to_orthogonal(&Weight::zero(d(4)));
        assert!(z.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn bilinear_examples() {
        let rd = RootData::new(d(3));
        let dim = 4;
        let mut delta = ortho_zero(dim);
        delta[0] = Rational64::from_integer(1);
        assert_eq!(rd.bilinear_ortho(&delta, &delta), Rational64::from_integer(1));
        let mut e1 = ortho_zero(dim);
        e1[1] = Rational64::from_integer(1);
        let mut e2 = ortho_zero(dim);
        e2[2] = Rational64::from_integer(1);
        assert!(rd.bilinear_ortho(&e1, &e2).is_zero());
    }

    #[test]
    fn defining_identity_of_the_form() {
        // l_i ⟨h_i, ω_j⟩ = (α_i, ω_j) for all i, j; N = 3, both families
        for ty in [d(3), b(3)] {
            let rd = RootData::new(ty);
            for i in 0..ty.node_count() {
                for j in 0..ty.node_count() {
                    let lhs = Rational64::from_integer(rd.lvalues[i])
                        * Rational64::from_integer(rd.pairing(i, &Weight::omega(j, ty)));
                    let rhs = rd.bilinear_ortho(&rd.alpha_ortho[i], &rd.omega_ortho[j]);
                    assert_eq!(lhs, rhs, "{ty} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn rho_matches_positive_root_sums() {
        for ty in [d(2), d(3), d(4), b(2), b(3), b(4)] {
            let rd = RootData::new(ty);
            let mut acc = ortho_zero(ty.node_count());
            for r in &rd.positive_even {
                acc = ortho_add(&acc, r);
            }
            for r in &rd.positive_odd {
                acc = ortho_sub(&acc, r);
            }
            assert_eq!(acc, rd.rho, "{ty}");
        }
    }

    #[test]
    fn typicality_examples() {
        let rd4 = RootData::new(d(4));
        assert!(!rd4.is_typical(&standing(d(4), 0, &[0, 0, 0, 1]))); // −ω_4
        assert!(rd4.is_typical(&standing(d(4), 1, &[0, 0, 0, 1]))); // ω_0 − ω_4
        let rd2 = RootData::new(d(2));
        assert!(!rd2.is_typical(&Weight::zero(d(2))));
    }

    #[test]
    fn typicality_shortcut_on_samples() {
        // n_0 >= 1 iff typical, for standing-form weights
        let mut state = 12345u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for family in [Family::D, Family::B] {
            for n in 2..=5 {
                let ty = AlgebraType::new(family, n).unwrap();
                let rd = RootData::new(ty);
                for _ in 0..40 {
                    let n0 = next() % 4;
                    let ns: Vec<i64> = (0..n).map(|_| next() % 5).collect();
                    let w = standing(ty, n0, &ns);
                    assert_eq!(rd.is_typical(&w), n0 >= 1, "{ty} {w}");
                }
            }
        }
    }

    #[test]
    fn restriction_and_lift() {
        let ty = d(3);
        let w = standing(ty, 3, &[0, 1, 0]); // 3ω_0 − ω_2
        let cl = classical_restriction(&w);
        assert_eq!(cl, ClassicalWeight(vec![0, -1, 0]));
        assert_eq!(lift(&cl, 3), w);
        assert_eq!(classical_restriction(&Weight::zero(ty)), ClassicalWeight::zero(ty));
    }

    #[test]
    fn weight_json_round_trip() {
        let w = Weight(vec![1, 0, -2]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"omega":[1,0,-2]}"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(w, back);
    }

    #[test]
    fn classical_root_expansion() {
        // 2Λ_4 = α_1 + 2α_2 + α_3 + 2α_4 in D(4)
        let rd = RootData::new(d(4));
        let c = rd
            .expand_in_classical_roots(&ClassicalWeight(vec![0, 0, 0, 2]))
            .unwrap();
        assert_eq!(c, vec![1, 2, 1, 2]);
        // a negative expansion is rejected
        assert!(rd
            .expand_in_classical_roots(&ClassicalWeight(vec![0, 0, 0, -2]))
            .is_err());
    }
}
