//! The exterior algebra `∧m` with its Levi action.
//!
//! A monomial is a bitmask over positions in `Δ(m)`; it stands for the
//! wedge of the root vectors in increasing position order.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::chevalley::ChevalleyBasis;
use crate::diagram::MarkedDiagram;
use crate::root_system::Root;

/// Sparse homogeneous element of `∧^k m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeVector {
    pub grade: usize,
    pub terms: BTreeMap<u64, BigRational>,
}

impl WedgeVector {
    pub fn zero(grade: usize) -> WedgeVector {
        WedgeVector {
            grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mask: u64) -> WedgeVector {
        WedgeVector {
            grade: mask.count_ones() as usize,
            terms: BTreeMap::from([(mask, BigRational::one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u64, c: BigRational) {
        debug_assert_eq!(mask.count_ones() as usize, self.grade);
        let e = self.terms.entry(mask).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> WedgeVector {
        let mut out = WedgeVector::zero(self.grade);
        if !c.is_zero() {
            for (m, v) in &self.terms {
                out.terms.insert(*m, v * c);
            }
        }
        out
    }

    pub fn plus(&self, other: &WedgeVector) -> WedgeVector {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(*m, v.clone());
        }
        out
    }
}

/// Weight of a monomial: the sum of its roots.
pub fn mask_weight(md: &MarkedDiagram, mask: u64) -> Vec<i32> {
    let mut w = vec![0; md.rank()];
    for (i, r) in md.m_roots().iter().enumerate() {
        if mask >> i & 1 == 1 {
            for (a, b) in w.iter_mut().zip(r.coeffs()) {
                *a += b;
            }
        }
    }
    w
}

/// `ad(x_β)` on `m` for every Levi root `β`, tabulated on root positions.
#[derive(Debug, Clone)]
pub struct LeviAction {
    /// Chevalley-basis index of each Levi root.
    pub levi: Vec<usize>,
    /// Per Levi root (keyed by Chevalley index): for each position `s` of
    /// `Δ(m)`, the image `(t, N_{β,α_s})` when `β + α_s ∈ Δ(m)`.
    table: HashMap<usize, Vec<Option<(usize, i64)>>>,
    /// Chevalley indices of `α_j` and `-α_j` for Levi simple `j`.
    pub raising: Vec<usize>,
    pub lowering: Vec<usize>,
}

impl LeviAction {
    pub fn new(cb: &ChevalleyBasis, md: &MarkedDiagram) -> LeviAction {
        let g = md.gamma;
        let m = md.m_roots();
        let levi: Vec<usize> = (0..cb.num_roots())
            .filter(|&r| cb.root(r)[g] == 0)
            .collect();
        let mut table = HashMap::new();
        for &b in &levi {
            let row = m
                .iter()
                .map(|a| {
                    let s: Vec<i32> = a
                        .coeffs()
                        .iter()
                        .zip(cb.root(b))
                        .map(|(x, y)| x + y)
                        .collect();
                    let t = m.iter().position(|x| x.coeffs() == s.as_slice())?;
                    Some((t, cb.n(cb.root(b), a.coeffs())))
                })
                .collect();
            table.insert(b, row);
        }
        let n = md.rank();
        let simple = |sign: i32| -> Vec<usize> {
            md.levi_nodes()
                .into_iter()
                .map(|j| {
                    let mut c = vec![0; n];
                    c[j] = sign;
                    cb.root_index(&c).expect("simple roots are roots")
                })
                .collect()
        };
        LeviAction {
            levi,
            table,
            raising: simple(1),
            lowering: simple(-1),
        }
    }

    /// `ad(x_β)` applied to a root vector of `m`.
    pub fn on_root(&self, beta: usize, s: usize) -> Option<(usize, i64)> {
        self.table[&beta][s]
    }

    /// Leibniz extension of `ad(x_β)` to `∧^k m`.
    pub fn act(&self, beta: usize, v: &WedgeVector) -> WedgeVector {
        let row = &self.table[&beta];
        let mut out = WedgeVector::zero(v.grade);
        for (&mask, c) in &v.terms {
            let mut rest = mask;
            while rest != 0 {
                let s = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let Some((t, n)) = row[s] else { continue };
                if mask >> t & 1 == 1 {
                    continue;
                }
                let new_mask = mask & !(1 << s) | 1 << t;
                let (lo, hi) = if s < t { (s, t) } else { (t, s) };
                let between = (mask >> (lo + 1)) & ((1u64 << (hi - lo - 1)) - 1);
                let sign = if between.count_ones().is_multiple_of(2) {
                    n
                } else {
                    -n
                };
                out.add_term(new_mask, c * BigRational::from_integer(BigInt::from(sign)));
            }
        }
        out
    }
}

/// `<μ, β^∨>` for a weight `μ` given as a root-lattice vector.
pub fn coroot_pairing(md: &MarkedDiagram, mu: &[i32], beta: &Root) -> BigRational {
    let rs = &md.rs;
    BigRational::new(
        BigInt::from(2 * rs.inner(mu, beta.coeffs())),
        BigInt::from(rs.norm(beta.coeffs())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::chevalley::build_chevalley;
    use crate::root_system::Family;

    #[test]
    fn annihilated_monomial() {
        let md = MarkedDiagram::new(Family::A, 3, 1).unwrap();
        let cb = build_chevalley(&md).unwrap();
        let act = LeviAction::new(&cb, &md);
        // top wedge is killed by everything
        let top = WedgeVector::monomial((1 << md.dim()) - 1);
        for &b in &act.levi {
            assert!(act.act(b, &top).is_zero());
        }
    }

    #[test]
    fn sl2_relation() {
        for (f, n, g) in [
            (Family::A, 4, 1),
            (Family::D, 4, 0),
            (Family::C, 3, 2),
            (Family::E, 6, 0),
        ] {
            let md = MarkedDiagram::new(f, n, g).unwrap();
            let cb = build_chevalley(&md).unwrap();
            let act = LeviAction::new(&cb, &md);
            let dim = md.dim();
            for &b in &act.levi {
                let beta = Root::new(cb.root(b).to_vec()).unwrap();
                if !beta.is_positive() {
                    continue;
                }
                let nb = cb.root_index(beta.neg().coeffs()).unwrap();
                for mask in [0b111u64, 0b1011, 0b110101, (1 << dim) - 1 - 0b10] {
                    let mask = mask & ((1 << dim) - 1);
                    let v = WedgeVector::monomial(mask);
                    let lhs = act
                        .act(b, &act.act(nb, &v))
                        .plus(&act.act(nb, &act.act(b, &v)).scaled(&-BigRational::one()));
                    let h = coroot_pairing(&md, &mask_weight(&md, mask), &beta);
                    assert_eq!(lhs, v.scaled(&h), "{f:?}{n} β={beta} mask={mask:b}");
                }
            }
        }
    }
}
