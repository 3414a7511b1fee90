//! Finite crystallographic root systems of types A through E.
//!
//! Simple roots are numbered in the Bourbaki convention and indexed from 0
//! internally (node `i` here is `α_{i+1}` in the usual notation). Every
//! root is stored as its integer coefficient vector over the simple roots.
//!
//! | type | node chain (1-based)                         | cominuscule nodes   |
//! |------|----------------------------------------------|---------------------|
//! | A_n  | 1 - 2 - ... - n                              | all                 |
//! | B_n  | 1 - ... - (n-1) => n   (α_n short)           | 1                   |
//! | C_n  | 1 - ... - (n-1) <= n   (α_n long)            | n                   |
//! | D_n  | 1 - ... - (n-2), (n-2) - (n-1), (n-2) - n    | 1, n-1, n           |
//! | E_6  | 1 - 3 - 4 - 5 - 6, 2 - 4                     | 1, 6                |
//! | E_7  | 1 - 3 - 4 - 5 - 6 - 7, 2 - 4                 | 7                   |

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Classical family letter of a root system.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            _ => None,
        }
    }
}

/// A type label such as `D4`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType(family.letter(), rank))
        }
    }

    /// Cartan matrix with entry `(i, j)` equal to `<α_j, α_i^∨>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            // α_n short: <α_{n-1}, α_n^∨> = -2
            Family::B => a[n - 1][n - 2] = -2,
            // α_n long: <α_n, α_{n-1}^∨> = -2
            Family::C => a[n - 2][n - 1] = -2,
            _ => {}
        }
        a
    }

    /// Squared lengths of the simple roots, normalised so short roots have 2.
    pub fn simple_norms(self) -> Vec<i32> {
        let n = self.rank;
        match self.family {
            Family::B => (0..n).map(|i| if i == n - 1 { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i == n - 1 { 4 } else { 2 }).collect(),
            _ => vec![2; n],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root, written as `Σ n_i α_i`.
///
/// Positive roots have all coefficients `>= 0`, negative roots all `<= 0`;
/// mixed-sign vectors are rejected by [`Root::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Result<Root> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        if coeffs.iter().all(|&c| c == 0) || !(pos || neg) {
            return Err(Error::NotARoot(coeffs));
        }
        Ok(Root { coeffs })
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    /// Coefficient `n_i` of `α_i`.
    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i]
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Indices of simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect()
    }

    /// Supported inside `nodes`.
    pub fn supported_on(&self, nodes: &[usize]) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || nodes.contains(&i))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// Canonical order on positive roots: height first, then coefficient vectors
/// in decreasing lexicographic order (so `α_1, α_2, ...` at height one).
pub fn root_order(a: &[i32], b: &[i32]) -> Ordering {
    let ha: i32 = a.iter().sum();
    let hb: i32 = b.iter().sum();
    ha.cmp(&hb).then_with(|| b.cmp(a))
}

/// A finite root system with its Cartan data and positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i32>>,
    norms: Vec<i32>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type
    }
}

impl RootSystem {
    /// Builds the root system of the given type. E_8, F_4 and G_2 are not
    /// representable: none of them has a cominuscule node.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        let ty = CartanType::new(family, rank)?;
        let cartan = ty.cartan_matrix();
        let norms = ty.simple_norms();
        let positive = enumerate_positive(&cartan);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        Ok(RootSystem {
            cartan_type: ty,
            cartan,
            norms,
            positive,
            index,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Position of a positive root in [`RootSystem::positive_roots`].
    pub fn positive_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i32> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// `<α, α_j^∨> = Σ_i n_i(α) · cartan[j][i]`.
    pub fn pairing(&self, coeffs: &[i32], j: usize) -> i32 {
        coeffs.iter().zip(&self.cartan[j]).map(|(c, a)| c * a).sum()
    }

    /// Simple reflection `σ_j(α) = α - <α, α_j^∨> α_j`.
    pub fn reflect(&self, root: &Root, j: usize) -> Root {
        let mut coeffs = root.coeffs.clone();
        coeffs[j] -= self.pairing(&root.coeffs, j);
        Root { coeffs }
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root system is nonempty")
    }

    /// Squared length of simple root `i` (short roots have length² 2).
    pub fn simple_norm(&self, i: usize) -> i32 {
        self.norms[i]
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
                s += x * y * self.cartan[i][j] * self.norms[i] / 2;
            }
        }
        s
    }

    pub fn norm(&self, a: &[i32]) -> i32 {
        self.inner(a, a)
    }

    /// Nodes adjacent to `i` in the Dynkin diagram.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// Edge multiplicity `cartan[i][j] * cartan[j][i]`.
    pub fn edge(&self, i: usize, j: usize) -> i32 {
        if i == j {
            0
        } else {
            self.cartan[i][j] * self.cartan[j][i]
        }
    }

    /// Positive roots supported on the given node set.
    pub fn positive_roots_on(&self, nodes: &[usize]) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| r.supported_on(nodes))
            .cloned()
            .collect()
    }

    /// Largest `p` with `β - p·α` a root (the α-string through β starts at
    /// `β - pα`).
    pub fn string_down(&self, alpha: &[i32], beta: &[i32]) -> i32 {
        let mut p = 0;
        let mut cur: Vec<i32> = beta.to_vec();
        loop {
            for (c, a) in cur.iter_mut().zip(alpha) {
                *c -= a;
            }
            if cur.iter().all(|&c| c == 0) || !self.is_root(&cur) {
                return p;
            }
            p += 1;
        }
    }
}

/// Positive roots by height: `α + α_j` is a root exactly when the
/// `α_j`-string through `α` continues upward, i.e. `p - <α, α_j^∨> > 0`.
fn enumerate_positive(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let pairing =
        |c: &[i32], j: usize| -> i32 { c.iter().zip(&cartan[j]).map(|(a, b)| a * b).sum() };
    let mut all: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i32>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for root in &layer {
            for j in 0..n {
                // p: how far down the α_j string goes from root
                let mut p = 0;
                let mut cur = root.clone();
                loop {
                    cur[j] -= 1;
                    if cur[j] < 0 || !known.contains(&cur) {
                        break;
                    }
                    p += 1;
                }
                let is_simple_j = root.iter().enumerate().all(|(i, &c)| c == (i == j) as i32);
                if is_simple_j {
                    continue;
                }
                let q = p - pairing(root, j);
                if q > 0 {
                    let mut up = root.clone();
                    up[j] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| root_order(a, b));
    all.into_iter().map(|coeffs| Root { coeffs }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    #[test]
    fn classical_counts() {
        for n in 1..=7 {
            assert_eq!(rs(Family::A, n).num_positive(), n * (n + 1) / 2);
        }
        for n in 2..=7 {
            assert_eq!(rs(Family::B, n).num_positive(), n * n);
            assert_eq!(rs(Family::C, n).num_positive(), n * n);
        }
        for n in 3..=7 {
            assert_eq!(rs(Family::D, n).num_positive(), n * (n - 1));
        }
        assert_eq!(rs(Family::E, 6).num_positive(), 36);
        assert_eq!(rs(Family::E, 7).num_positive(), 63);
    }

    #[test]
    fn a2_roots() {
        let a2 = rs(Family::A, 2);
        let got: Vec<_> = a2
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(a2.is_root(&[1, 1]));
        assert!(!a2.is_root(&[2, 0]));
        assert_eq!(a2.pairing(&[1, 1], 0), 1);
        let s = a2.reflect(&Root::simple(2, 0), 1);
        assert_eq!(s.coeffs(), &[1, 1]);
        assert_eq!(a2.reflect(&Root::simple(2, 1), 1).coeffs(), &[0, -1]);
    }

    #[test]
    fn invalid_types() {
        assert_eq!(
            RootSystem::build(Family::E, 8).unwrap_err(),
            Error::InvalidType('E', 8)
        );
        assert!(RootSystem::build(Family::B, 1).is_err());
        assert!(RootSystem::build(Family::D, 2).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Family::A, 3).highest_root().coeffs(), &[1, 1, 1]);
        assert_eq!(rs(Family::C, 3).highest_root().coeffs(), &[2, 2, 1]);
        assert_eq!(rs(Family::B, 3).highest_root().coeffs(), &[1, 2, 2]);
        assert_eq!(rs(Family::D, 5).highest_root().coeffs(), &[1, 2, 2, 1, 1]);
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.highest_root().height(), 11);
        assert_eq!(e6.highest_root().coeffs(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(
            rs(Family::E, 7).highest_root().coeffs(),
            &[2, 2, 3, 4, 3, 2, 1]
        );
    }

    #[test]
    fn d4_pairings() {
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.num_positive(), 12);
        assert!(d4.is_root(&[1, 1, 1, 1]));
        // branch node is α_2
        assert_eq!(d4.pairing(d4.highest_root().coeffs(), 1), 1);
        let lambda = Root::new(vec![1, 2, 1, 1]).unwrap();
        assert_eq!(d4.reflect(&lambda, 0), lambda);
    }

    #[test]
    fn mixed_sign_rejected() {
        assert!(Root::new(vec![1, -1]).is_err());
        assert!(Root::new(vec![0, 0]).is_err());
        assert!(Root::new(vec![-1, -1]).is_ok());
    }

    #[test]
    fn symmetric_form() {
        for (f, n) in [(Family::B, 4), (Family::C, 4), (Family::E, 6)] {
            let r = rs(f, n);
            for i in 0..n {
                for j in 0..n {
                    let a = Root::simple(n, i);
                    let b = Root::simple(n, j);
                    assert_eq!(
                        r.inner(a.coeffs(), b.coeffs()),
                        r.inner(b.coeffs(), a.coeffs())
                    );
                }
            }
        }
    }

    #[test]
    fn reflections_permute_positive_roots() {
        let types = [
            (Family::A, 5),
            (Family::B, 5),
            (Family::C, 5),
            (Family::D, 6),
            (Family::E, 6),
            (Family::E, 7),
        ];
        for (f, n) in types {
            let r = rs(f, n);
            for j in 0..n {
                let simple = Root::simple(n, j);
                let mut image: Vec<Vec<i32>> = r
                    .positive_roots()
                    .iter()
                    .filter(|a| **a != simple)
                    .map(|a| r.reflect(a, j).coeffs().to_vec())
                    .collect();
                image.sort();
                let mut orig: Vec<Vec<i32>> = r
                    .positive_roots()
                    .iter()
                    .filter(|a| **a != simple)
                    .map(|a| a.coeffs().to_vec())
                    .collect();
                orig.sort();
                assert_eq!(image, orig, "{f:?}{n} node {j}");
                for a in r.positive_roots() {
                    assert_eq!(&r.reflect(&r.reflect(a, j), j), a);
                }
            }
        }
    }

    #[test]
    fn root_strings_unbroken() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 5),
            (Family::D, 5),
        ] {
            let r = rs(f, n);
            let mut all: Vec<Vec<i32>> = r
                .positive_roots()
                .iter()
                .map(|a| a.coeffs().to_vec())
                .collect();
            all.extend(r.positive_roots().iter().map(|a| a.neg().coeffs().to_vec()));
            for a in &all {
                for b in &all {
                    if a.iter().zip(b).all(|(x, y)| x == y || x == &-y)
                        && (a == b || a.iter().zip(b).all(|(x, y)| *x == -y))
                    {
                        continue;
                    }
                    let ks: Vec<i32> = (-4..=4)
                        .filter(|&k| {
                            let v: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + k * y).collect();
                            r.is_root(&v)
                        })
                        .collect();
                    if let (Some(lo), Some(hi)) = (ks.first(), ks.last()) {
                        assert_eq!(ks.len() as i32, hi - lo + 1, "{a:?} + k{b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic_enumeration() {
        let a = rs(Family::E, 7);
        let b = rs(Family::E, 7);
        assert_eq!(a.positive_roots(), b.positive_roots());
    }

    #[test]
    fn closure_under_simple_steps() {
        for (f, n) in [
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 7),
        ] {
            let r = rs(f, n);
            for a in r.positive_roots().iter().filter(|a| a.height() > 1) {
                let reachable = (0..n).any(|j| {
                    let mut c = a.coeffs().to_vec();
                    c[j] -= 1;
                    c[j] >= 0 && r.positive_index(&c).is_some()
                });
                assert!(reachable, "{a}");
            }
        }
    }
}
