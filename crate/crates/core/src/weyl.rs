//! Weyl group elements as reduced words with their inversion sets, minimal
//! coset representatives for cominuscule parabolics, and the Weyl dimension
//! formula for Levi subalgebras.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// A Weyl group element given by a reduced word `σ_{s1} σ_{s2} ... σ_{sk}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElt {
    pub word: Vec<usize>,
    pub inversions: Vec<Root>,
}

impl WeylElt {
    pub fn identity() -> WeylElt {
        WeylElt {
            word: Vec::new(),
            inversions: Vec::new(),
        }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElt> {
        let inversions = inversion_set(rs, word)?;
        Ok(WeylElt {
            word: word.to_vec(),
            inversions,
        })
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, rs: &RootSystem, root: &Root) -> Root {
        apply(rs, &self.word, root)
    }

    pub fn apply_inverse(&self, rs: &RootSystem, root: &Root) -> Root {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        apply(rs, &rev, root)
    }
}

/// `w(α)`, applying the letters of the word right to left.
pub fn apply(rs: &RootSystem, word: &[usize], root: &Root) -> Root {
    word.iter()
        .rev()
        .fold(root.clone(), |acc, &j| rs.reflect(&acc, j))
}

/// `Δ(w) = {σ_{s1}⋯σ_{s(i-1)}(α_{si})}`; fails unless the word is reduced.
pub fn inversion_set(rs: &RootSystem, word: &[usize]) -> Result<Vec<Root>> {
    let n = rs.rank();
    let mut out: Vec<Root> = Vec::with_capacity(word.len());
    for (i, &j) in word.iter().enumerate() {
        if j >= n {
            return Err(Error::IndexOutOfRange(j, n));
        }
        let r = apply(rs, &word[..i], &Root::simple(n, j));
        if !r.is_positive() || out.contains(&r) {
            return Err(Error::NonReducedWord(word.to_vec()));
        }
        out.push(r);
    }
    Ok(out)
}

/// Positive roots with `n_γ = 1`, which span `m` for cominuscule `γ`.
pub fn m_roots(rs: &RootSystem, gamma: usize) -> Result<Vec<Root>> {
    if gamma >= rs.rank() {
        return Err(Error::IndexOutOfRange(gamma, rs.rank()));
    }
    if rs.highest_root().coeff(gamma) != 1 {
        return Err(Error::NotCominuscule(gamma));
    }
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| r.coeff(gamma) == 1)
        .cloned()
        .collect())
}

/// A minimal coset representative for the maximal parabolic at `gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRep {
    pub elt: WeylElt,
    pub gamma: usize,
    /// Inversion set as a bitmask over the positions of `m_roots`.
    pub ideal: u64,
}

impl CosetRep {
    pub fn length(&self) -> usize {
        self.elt.length()
    }

    /// Positions in `m_roots` of the inversion set, ascending.
    pub fn ideal_indices(&self) -> Vec<usize> {
        mask_indices(self.ideal)
    }
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn mask_of(m: &[Root], roots: &[Root]) -> u64 {
    roots.iter().fold(0u64, |acc, r| {
        let pos = m.iter().position(|x| x == r).expect("root lies in m");
        acc | 1 << pos
    })
}

/// `W^P` by breadth-first search over reduced words: `wσ_j` is kept when
/// `w(α_j)` lies in `Δ(m)`. Words are extended in increasing simple index;
/// the first word reaching an inversion set is kept.
pub fn enumerate_wp_bfs(rs: &RootSystem, gamma: usize) -> Result<Vec<Vec<CosetRep>>> {
    let m = m_roots(rs, gamma)?;
    let mut levels = vec![vec![CosetRep {
        elt: WeylElt::identity(),
        gamma,
        ideal: 0,
    }]];
    loop {
        let mut next: Vec<CosetRep> = Vec::new();
        let mut seen: HashMap<u64, ()> = HashMap::new();
        for w in levels.last().unwrap() {
            for j in 0..rs.rank() {
                let r = w.elt.apply(rs, &Root::simple(rs.rank(), j));
                if !r.is_positive() || r.coeff(gamma) != 1 {
                    continue;
                }
                let pos = m.iter().position(|x| *x == r).unwrap();
                let ideal = w.ideal | 1 << pos;
                if seen.insert(ideal, ()).is_some() {
                    continue;
                }
                let mut word = w.elt.word.clone();
                word.push(j);
                let mut inversions = w.elt.inversions.clone();
                inversions.push(r);
                next.push(CosetRep {
                    elt: WeylElt { word, inversions },
                    gamma,
                    ideal,
                });
            }
        }
        if next.is_empty() {
            return Ok(levels);
        }
        levels.push(next);
    }
}

/// Lower order ideals of `(Δ(m), ≤)`, grouped by size, each level sorted by
/// mask.
pub fn enumerate_ideals(rs: &RootSystem, gamma: usize) -> Result<Vec<Vec<u64>>> {
    let m = m_roots(rs, gamma)?;
    // below[i]: mask of elements strictly below m[i]
    let below: Vec<u64> = m
        .iter()
        .map(|b| {
            m.iter().enumerate().fold(0u64, |acc, (i, a)| {
                let le = a != b && a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| x <= y);
                if le {
                    acc | 1 << i
                } else {
                    acc
                }
            })
        })
        .collect();
    let mut levels = vec![vec![0u64]];
    loop {
        let mut next: Vec<u64> = Vec::new();
        for &ideal in levels.last().unwrap() {
            for (i, &b) in below.iter().enumerate() {
                if ideal >> i & 1 == 0 && b & !ideal == 0 {
                    next.push(ideal | 1 << i);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.is_empty() {
            return Ok(levels);
        }
        levels.push(next);
    }
}

/// `W^P` grouped by length. Both the reduced-word search and the order-ideal
/// enumeration are run and required to agree.
pub fn enumerate_wp(rs: &RootSystem, gamma: usize) -> Result<Vec<Vec<CosetRep>>> {
    let bfs = enumerate_wp_bfs(rs, gamma)?;
    let ideals = enumerate_ideals(rs, gamma)?;
    let m = m_roots(rs, gamma)?;
    let agree = bfs.len() == ideals.len()
        && bfs.iter().zip(&ideals).all(|(b, i)| {
            let mut masks: Vec<u64> = b.iter().map(|c| c.ideal).collect();
            masks.sort_unstable();
            masks == *i
        });
    if !agree {
        return Err(Error::InternalContradiction(format!(
            "W^P enumerations disagree for node {}",
            gamma + 1
        )));
    }
    for level in &bfs {
        for c in level {
            let inv = inversion_set(rs, &c.elt.word)?;
            if mask_of(&m, &inv) != c.ideal {
                return Err(Error::InternalContradiction(format!(
                    "inversion set of {:?} differs from its ideal",
                    c.elt.word
                )));
            }
        }
    }
    Ok(bfs)
}

/// Number of elements of `W^P` of each length.
pub fn length_profile(levels: &[Vec<CosetRep>]) -> Vec<usize> {
    levels.iter().map(Vec::len).collect()
}

/// `κ`, the longest element of `W`.
pub fn longest_element(rs: &RootSystem) -> WeylElt {
    let all: Vec<usize> = (0..rs.rank()).collect();
    longest_in_parabolic(rs, &all)
}

/// Longest element of the parabolic subgroup generated by `nodes`. Its
/// inversion set is every positive root supported on `nodes`.
pub fn longest_in_parabolic(rs: &RootSystem, nodes: &[usize]) -> WeylElt {
    let n = rs.rank();
    let mut w = WeylElt::identity();
    'grow: loop {
        for &j in nodes {
            let r = w.apply(rs, &Root::simple(n, j));
            if r.is_positive() {
                w.word.push(j);
                w.inversions.push(r);
                continue 'grow;
            }
        }
        return w;
    }
}

/// Weyl dimension formula for the Levi subalgebra with simple roots
/// `levi_nodes`, at the weight with Dynkin labels `labels` (one per Levi
/// node, in the given order).
pub fn weyl_dim(rs: &RootSystem, levi_nodes: &[usize], labels: &[i64]) -> Result<u64> {
    assert_eq!(levi_nodes.len(), labels.len(), "one label per Levi node");
    if labels.iter().any(|&l| l < 0) {
        return Err(Error::NonDominantWeight(labels.to_vec()));
    }
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for alpha in rs.positive_roots_on(levi_nodes) {
        let norm = rs.norm(alpha.coeffs()) as i64;
        // <μ, α^∨> = Σ c_i μ_i |α_i|²/|α|²
        let mut lam = BigRational::zero();
        let mut rho = BigRational::zero();
        for (k, &i) in levi_nodes.iter().enumerate() {
            let c = alpha.coeff(i) as i64;
            if c == 0 {
                continue;
            }
            let w = BigRational::new(
                BigInt::from(c * rs.simple_norm(i) as i64),
                BigInt::from(norm),
            );
            lam += &w * BigInt::from(labels[k]);
            rho += w;
        }
        num *= &lam + &rho;
        den *= rho;
    }
    let d = num / den;
    assert!(d.is_integer(), "Weyl dimension must be integral");
    Ok(d.to_integer().to_u64().expect("dimension fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::D, 5),
            (Family::E, 6),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            let k = longest_element(&rs);
            assert_eq!(k.length(), rs.num_positive());
            for r in rs.positive_roots() {
                assert!(!k.apply(&rs, r).is_positive());
            }
        }
    }

    #[test]
    fn apply_basics() {
        let a2 = rs(Family::A, 2);
        let a1 = Root::simple(2, 1);
        assert_eq!(apply(&a2, &[], &a1), a1);
        assert_eq!(apply(&a2, &[0], &a1).coeffs(), &[1, 1]);
        let a3 = rs(Family::A, 3);
        // σ1σ2σ3(α3) = σ1σ2(-α3) = σ1(-α2-α3) = -α1-α2-α3
        assert_eq!(
            apply(&a3, &[0, 1, 2], &Root::simple(3, 2)).coeffs(),
            &[-1, -1, -1]
        );
        assert_eq!(inversion_set(&a3, &[0, 1, 2]).unwrap().len(), 3);
    }

    #[test]
    fn inversion_sets() {
        for n in 4..=7 {
            let d = rs(Family::D, n);
            let word: Vec<usize> = (0..n - 1).collect();
            let inv = inversion_set(&d, &word).unwrap();
            let expected: Vec<Vec<i32>> = (1..n)
                .map(|len| (0..n).map(|i| (i < len) as i32).collect())
                .collect();
            let got: Vec<Vec<i32>> = inv.iter().map(|r| r.coeffs().to_vec()).collect();
            assert_eq!(got, expected);
        }
        let a3 = rs(Family::A, 3);
        assert_eq!(inversion_set(&a3, &[2]).unwrap(), vec![Root::simple(3, 2)]);
        let mut got: Vec<Vec<i32>> = inversion_set(&a3, &[1, 0, 2, 1])
            .unwrap()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        got.sort();
        let mut want: Vec<Vec<i32>> = m_roots(&a3, 1)
            .unwrap()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            inversion_set(&a3, &[0, 0]).unwrap_err(),
            Error::NonReducedWord(vec![0, 0])
        );
        assert!(inversion_set(&a3, &[0, 1, 0, 1]).is_err());
    }

    #[test]
    fn grassmannian_profiles() {
        let a3 = rs(Family::A, 3);
        let wp = enumerate_wp(&a3, 1).unwrap();
        assert_eq!(length_profile(&wp), vec![1, 1, 2, 1, 1]);
        for n in 2..=7usize {
            let a = rs(Family::A, n - 1);
            for m in 1..n {
                let wp = enumerate_wp(&a, m - 1).unwrap();
                let total: usize = wp.iter().map(Vec::len).sum();
                assert_eq!(total as u64, binom(n as u64, m as u64));
            }
        }
    }

    #[test]
    fn quadric_profile() {
        let d4 = rs(Family::D, 4);
        let wp = enumerate_wp(&d4, 0).unwrap();
        assert_eq!(length_profile(&wp), vec![1, 1, 1, 2, 1, 1, 1]);
        let d5 = rs(Family::D, 5);
        assert_eq!(
            length_profile(&enumerate_wp(&d5, 0).unwrap()),
            vec![1, 1, 1, 1, 2, 1, 1, 1, 1]
        );
        let b3 = rs(Family::B, 3);
        assert_eq!(length_profile(&enumerate_wp(&b3, 0).unwrap()), vec![1; 6]);
    }

    #[test]
    fn exceptional_sizes() {
        let e6 = rs(Family::E, 6);
        let n: usize = enumerate_wp(&e6, 0).unwrap().iter().map(Vec::len).sum();
        assert_eq!(n, 27);
        let e7 = rs(Family::E, 7);
        let wp = enumerate_wp(&e7, 6).unwrap();
        assert_eq!(wp.iter().map(Vec::len).sum::<usize>(), 56);
        assert_eq!(wp.len(), 28);
    }

    #[test]
    fn not_cominuscule() {
        let e6 = rs(Family::E, 6);
        assert_eq!(enumerate_wp(&e6, 1).unwrap_err(), Error::NotCominuscule(1));
        let c3 = rs(Family::C, 3);
        assert!(m_roots(&c3, 0).is_err());
    }

    #[test]
    fn poincare_palindromic() {
        let cases = [
            (Family::A, 5, 2),
            (Family::B, 4, 0),
            (Family::C, 4, 3),
            (Family::D, 5, 4),
            (Family::E, 6, 0),
            (Family::E, 7, 6),
        ];
        for (f, n, g) in cases {
            let p = length_profile(&enumerate_wp(&rs(f, n), g).unwrap());
            let mut r = p.clone();
            r.reverse();
            assert_eq!(p, r);
            assert_eq!(p[0], 1);
        }
    }

    #[test]
    fn longest_elements() {
        let d5 = rs(Family::D, 5);
        let w = longest_in_parabolic(&d5, &[1]);
        assert_eq!(w.word, vec![1]);
        let a3 = rs(Family::A, 3);
        assert_eq!(longest_in_parabolic(&a3, &[0, 1]).length(), 3);
        let w = longest_in_parabolic(&d5, &[1, 2, 3, 4]);
        assert_eq!(w.length(), 12);
        let mut inv: Vec<Vec<i32>> = w.inversions.iter().map(|r| r.coeffs().to_vec()).collect();
        inv.sort();
        let mut sub: Vec<Vec<i32>> = d5
            .positive_roots_on(&[1, 2, 3, 4])
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        sub.sort();
        assert_eq!(inv, sub);
        assert_eq!(inversion_set(&d5, &w.word).unwrap(), w.inversions);
    }

    #[test]
    fn weyl_dimensions() {
        let a3 = rs(Family::A, 3);
        assert_eq!(weyl_dim(&a3, &[0, 2], &[0, 0]).unwrap(), 1);
        assert_eq!(weyl_dim(&a3, &[0], &[1]).unwrap(), 2);
        assert_eq!(weyl_dim(&a3, &[0, 2], &[2, 0]).unwrap(), 3);
        let a2 = rs(Family::A, 2);
        assert_eq!(weyl_dim(&a2, &[0, 1], &[1, 1]).unwrap(), 8);
        // C3 fundamental reps: 6, 14, 14
        let c3 = rs(Family::C, 3);
        assert_eq!(weyl_dim(&c3, &[0, 1, 2], &[1, 0, 0]).unwrap(), 6);
        assert_eq!(weyl_dim(&c3, &[0, 1, 2], &[0, 1, 0]).unwrap(), 14);
        assert_eq!(weyl_dim(&c3, &[0, 1, 2], &[0, 0, 1]).unwrap(), 14);
        // B3 spin rep: 8; vector: 7
        let b3 = rs(Family::B, 3);
        assert_eq!(weyl_dim(&b3, &[0, 1, 2], &[0, 0, 1]).unwrap(), 8);
        assert_eq!(weyl_dim(&b3, &[0, 1, 2], &[1, 0, 0]).unwrap(), 7);
        let e7 = rs(Family::E, 7);
        let all: Vec<usize> = (0..7).collect();
        assert_eq!(weyl_dim(&e7, &all, &[0, 0, 0, 0, 0, 0, 1]).unwrap(), 56);
        assert_eq!(
            weyl_dim(&a2, &[0, 1], &[-1, 0]).unwrap_err(),
            Error::NonDominantWeight(vec![-1, 0])
        );
    }
}
