//! Single-column tableaux for spin crystal elements, two-column skew
//! tableaux, the semistandard predicate, and the component classification
//! of a pair of spin elements by the semistandard/not-semistandard sandwich.
//!
//! Letters are 1, …, N, N̄, …, 1̄. For the D family the letters N and N̄
//! share a level in the column order (a column never contains both, since a
//! letter and its bar may not appear together); row comparisons treat them
//! as equal. For the B family the order is total with N strictly below N̄.

use crate::error::Error;
use crate::roots::{xi_weight, AlgebraType, ClassicalWeight, Family};

/// A letter a or ā with 1 <= a <= N.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Letter {
    pub value: usize,
    pub barred: bool,
}

impl Letter {
    /// Position in the column order; N and N̄ coincide for the D family.
    pub fn level(&self, ty: AlgebraType) -> usize {
        if !self.barred {
            self.value
        } else {
            match ty.family {
                Family::D => 2 * ty.n - self.value,
                Family::B => 2 * ty.n + 1 - self.value,
            }
        }
    }

    pub fn render(&self) -> String {
        if self.barred {
            format!("{}~", self.value)
        } else {
            format!("{}", self.value)
        }
    }
}

/// The single-column tableau of a spin element: the letter a stands for the
/// a-th "+", the letter ā for the a-th "−"; entries are sorted by level.
pub fn to_tableau(signs: u32, ty: AlgebraType) -> Vec<Letter> {
    let mut col: Vec<Letter> = (1..=ty.n)
        .map(|a| Letter {
            value: a,
            barred: (signs >> (a - 1)) & 1 == 1,
        })
        .collect();
    col.sort_by_key(|l| l.level(ty));
    col
}

/// Inverse of [`to_tableau`]: the column must contain each letter value
/// exactly once, in any order.
pub fn from_tableau(col: &[Letter], ty: AlgebraType) -> Result<u32, Error> {
    let n = ty.n;
    if col.len() != n {
        return Err(Error::BadColumn(format!("expected {n} letters, got {}", col.len())));
    }
    let mut seen = vec![false; n + 1];
    let mut signs = 0u32;
    for l in col {
        if l.value < 1 || l.value > n || seen[l.value] {
            return Err(Error::BadColumn(format!("bad or repeated letter value {}", l.value)));
        }
        seen[l.value] = true;
        if l.barred {
            signs |= 1 << (l.value - 1);
        }
    }
    Ok(signs)
}

/// Two columns of height N drawn side by side with `overlap` two-box rows:
/// the right column holds a_1…a_N, the left column b_1…b_N, and row r pairs
/// b_r with a_{N-overlap+r}.
#[derive(Clone, Debug)]
pub struct SkewTableau {
    pub right: Vec<Letter>,
    pub left: Vec<Letter>,
    pub overlap: usize,
}

fn column_is_valid(col: &[Letter], ty: AlgebraType) -> bool {
    if col.len() != ty.n {
        return false;
    }
    if col.iter().any(|l| l.value < 1 || l.value > ty.n) {
        return false;
    }
    // a letter and its bar never appear together
    for (i, a) in col.iter().enumerate() {
        for b in &col[i + 1..] {
            if a.value == b.value && a.barred != b.barred {
                return false;
            }
        }
    }
    // strictly increasing in the column order
    col.windows(2).all(|w| w[0].level(ty) < w[1].level(ty))
}

impl SkewTableau {
    /// Both columns satisfy the column conditions and every two-box row is
    /// weakly increasing from left to right.
    pub fn is_semistandard(&self, ty: AlgebraType) -> bool {
        let n = ty.n;
        if self.overlap > n {
            return false;
        }
        if !column_is_valid(&self.right, ty) || !column_is_valid(&self.left, ty) {
            return false;
        }
        (1..=self.overlap).all(|r| {
            self.left[r - 1].level(ty) <= self.right[n - self.overlap + r - 1].level(ty)
        })
    }
}

/// Label of the connected component, in the classical tensor square of the
/// spin crystals, that contains the pair u ⊗ v of spin elements. Returns
/// the lowest weight −Ξ_k. The D-family pair must have u in the even-parity
/// class; the case split follows the parity class of v.
pub fn koga_component(u: u32, v: u32, ty: AlgebraType) -> Result<ClassicalWeight, Error> {
    let n = ty.n;
    let skew = |k: usize| SkewTableau {
        right: to_tableau(u, ty),
        left: to_tableau(v, ty),
        overlap: k,
    };
    let matched: Vec<bool> = (0..=n).map(|k| skew(k).is_semistandard(ty)).collect();

    let candidates: Vec<usize> = match ty.family {
        Family::D => {
            let u_par = (u.count_ones() % 2) as usize;
            if u_par != 0 {
                return Err(Error::BadColumn(
                    "first factor must lie in the even-parity spin crystal".into(),
                ));
            }
            let v_par = (v.count_ones() % 2) as usize;
            (0..=n)
                .filter(|k| {
                    if v_par == 0 {
                        k % 2 == n % 2
                    } else {
                        *k <= n - 1 && k % 2 == (n - 1) % 2
                    }
                })
                .collect()
        }
        Family::B => (0..=n).collect(),
    };
    let step = match ty.family {
        Family::D => 2,
        Family::B => 1,
    };
    let top = *candidates.last().expect("candidate list is never empty");
    let mut hits = Vec::new();
    for &k in &candidates {
        let ok = if k == top {
            matched[k]
        } else {
            matched[k] && !matched[k + step]
        };
        if ok {
            hits.push(k);
        }
    }
    if hits.len() != 1 {
        return Err(Error::BadColumn(format!(
            "classification not unique for u={u:#b}, v={v:#b}: k in {hits:?}"
        )));
    }
    let xi = xi_weight(hits[0], ty);
    Ok(ClassicalWeight(xi.0.iter().map(|c| -c).collect()))
}

pub fn render_column(col: &[Letter]) -> String {
    let body: Vec<String> = col.iter().map(|l| l.render()).collect();
    format!("t({})", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn d(n: usize) -> AlgebraType {
        AlgebraType::new(Family::D, n).unwrap()
    }

    fn b(n: usize) -> AlgebraType {
        AlgebraType::new(Family::B, n).unwrap()
    }

    fn signs(s: &str) -> u32 {
        let mut out = 0u32;
        for (i, c) in s.chars().enumerate() {
            if c == '-' {
                out |= 1 << i;
            }
        }
        out
    }

    #[test]
    fn tableau_of_all_plus() {
        let col = to_tableau(signs("++++"), d(4));
        assert_eq!(render_column(&col), "t(1,2,3,4)");
    }

    #[test]
    fn tableau_sorts_barred_letters() {
        // (+,+,−,−) has letters {1, 2, 3̄, 4̄}; the column order puts 4̄
        // below 3̄ for the D family
        let col = to_tableau(signs("++--"), d(4));
        assert_eq!(render_column(&col), "t(1,2,4~,3~)");
    }

    #[test]
    fn tableau_round_trip_exhaustive() {
        for n in 2..=6 {
            for ty in [d(n), b(n)] {
                for s in 0..(1u32 << n) {
                    let col = to_tableau(s, ty);
                    assert_eq!(from_tableau(&col, ty).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn from_tableau_rejects_malformed_columns() {
        let ty = d(3);
        // repeated value
        let col = vec![
            Letter { value: 1, barred: false },
            Letter { value: 1, barred: true },
            Letter { value: 2, barred: false },
        ];
        assert!(from_tableau(&col, ty).is_err());
        // wrong length
        assert!(from_tableau(&col[..2], ty).is_err());
    }

    #[test]
    fn semistandard_examples() {
        let ty = d(4);
        // overlap 0: no row constraints, any two valid columns
        let t0 = SkewTableau {
            right: to_tableau(signs("+-+-"), ty),
            left: to_tableau(signs("-+-+"), ty),
            overlap: 0,
        };
        assert!(t0.is_semistandard(ty));
        // the component-(−Ξ_2) lowest pair: right from (+,+,+,+), left from
        // (+,+,−,−), overlap 2
        let t2 = SkewTableau {
            right: to_tableau(signs("++++"), ty),
            left: to_tableau(signs("++--"), ty),
            overlap: 2,
        };
        assert!(t2.is_semistandard(ty));
        // breaking one row inequality breaks the predicate: left column
        // (2̄,1̄,…) against right (1,2,…) at full overlap
        let t_bad = SkewTableau {
            right: to_tableau(signs("++++"), ty),
            left: to_tableau(signs("----"), ty),
            overlap: 4,
        };
        assert!(!t_bad.is_semistandard(ty));
    }

    #[test]
    fn koga_lowest_pair_examples() {
        let ty = d(4);
        // (+,+,+,+) ⊗ (+,+,−,−) is the lowest pair of the −Ξ_2 component
        let w = koga_component(signs("++++"), signs("++--"), ty).unwrap();
        assert_eq!(w, ClassicalWeight(vec![0, -1, 0, 0]));
        // (+,+,+,+) ⊗ (+,+,+,+) lies in −Ξ_4 = −2Λ_4
        let w = koga_component(signs("++++"), signs("++++"), ty).unwrap();
        assert_eq!(w, ClassicalWeight(vec![0, 0, 0, -2]));
    }

    #[test]
    fn koga_row_comparison_with_top_letters() {
        // N = 2 mixed pair: the single component is −Ξ_1 = −Λ_1 − Λ_2, and
        // the (2, 2̄) row comparison must pass
        let ty = d(2);
        let w = koga_component(signs("--"), signs("-+"), ty).unwrap();
        assert_eq!(w, ClassicalWeight(vec![-1, -1]));
    }

    #[test]
    fn koga_b_family_examples() {
        let ty = b(2);
        assert_eq!(
            koga_component(signs("++"), signs("--"), ty).unwrap(),
            ClassicalWeight(vec![0, 0])
        );
        assert_eq!(
            koga_component(signs("++"), signs("+-"), ty).unwrap(),
            ClassicalWeight(vec![-1, 0])
        );
        assert_eq!(
            koga_component(signs("++"), signs("++"), ty).unwrap(),
            ClassicalWeight(vec![0, -2])
        );
    }
}
