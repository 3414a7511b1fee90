//! Chevalley basis structure constants `N_{r,s}` over all roots, fixed by
//! the extraspecial-pair construction.

use std::collections::HashMap;

use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

type Q = Ratio<i64>;

/// Structure constants `[e_r, e_s] = N_{r,s} e_{r+s}` for a Chevalley basis,
/// with `[e_r, e_{-r}] = h_r` and `[h_i, e_r] = <r, α_i^∨> e_r`.
#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    /// Positive roots first (in root-system order), then their negatives.
    roots: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    /// Dense table over root index pairs; 0 when `r + s` is not a root.
    n: Vec<i64>,
}

impl ChevalleyBasis {
    /// All extraspecial signs `+1`.
    pub fn new(rs: &RootSystem) -> Result<ChevalleyBasis> {
        Self::build(rs, None)
    }

    /// Extraspecial signs drawn from a seeded generator.
    pub fn with_sign_seed(rs: &RootSystem, seed: u64) -> Result<ChevalleyBasis> {
        Self::build(rs, Some(seed))
    }

    fn build(rs: &RootSystem, seed: Option<u64>) -> Result<ChevalleyBasis> {
        let pos: Vec<Vec<i32>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        let np = pos.len();
        let mut roots = pos.clone();
        roots.extend(
            pos.iter()
                .map(|c| c.iter().map(|x| -x).collect::<Vec<i32>>()),
        );
        let index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut cb = ChevalleyBasis {
            rs: rs.clone(),
            roots,
            index,
            n: vec![0; 4 * np * np],
        };
        let mut rng = seed.map(StdRng::seed_from_u64);
        // Special pairs (a, b), a < b in the positive order, grouped by sum.
        let mut special: Vec<Vec<(usize, usize)>> = vec![Vec::new(); np];
        for a in 0..np {
            for b in a + 1..np {
                let s = cb.sum(a, b);
                if let Some(&x) = cb.index.get(&s) {
                    special[x].push((a, b));
                }
            }
        }
        // Positive roots are already ordered by height.
        for (xi, pairs) in special.iter().enumerate() {
            let Some(&(a, b)) = pairs.first() else {
                continue;
            };
            let p = rs.string_down(&cb.roots[a], &cb.roots[b]) as i64;
            let flip = rng.as_mut().is_some_and(|g| g.gen_bool(0.5));
            let sign = if flip { -1 } else { 1 };
            cb.set_positive_pair(a, b, sign * (p + 1));
            let xi_norm = cb.norm(xi);
            for &(c, d) in &pairs[1..] {
                // Carter's formula for the remaining special pairs of ξ.
                let mut acc = Q::from_integer(0);
                let bc = cb.diff(b, c);
                if let Some(&bc_i) = cb.index.get(&bc) {
                    let t = cb.n_mixed(b, cb.neg(c))? * cb.n_mixed(a, cb.neg(d))?;
                    acc += Q::new(t, rs.norm(&cb.roots[bc_i]) as i64);
                }
                let ac = cb.diff(a, c);
                if let Some(&ac_i) = cb.index.get(&ac) {
                    let t = cb.n_mixed(cb.neg(c), a)? * cb.n_mixed(b, cb.neg(d))?;
                    acc += Q::new(t, rs.norm(&cb.roots[ac_i]) as i64);
                }
                let val = acc * Q::new(xi_norm, cb.n[cb.at(a, b)]);
                if !val.is_integer() {
                    return Err(Error::JacobiFailure(format!(
                        "non-integral constant for pair ({}, {})",
                        Root::new(cb.roots[c].clone())?,
                        Root::new(cb.roots[d].clone())?
                    )));
                }
                cb.set_positive_pair(c, d, val.to_integer());
            }
        }
        // Fill every remaining pair from the positive ones.
        for r in 0..2 * np {
            for s in 0..2 * np {
                if cb.n[cb.at(r, s)] == 0 && cb.index.contains_key(&cb.sum(r, s)) {
                    let v = cb.n_mixed(r, s)?;
                    let at = cb.at(r, s);
                    cb.n[at] = v;
                }
            }
        }
        Ok(cb)
    }

    fn at(&self, r: usize, s: usize) -> usize {
        r * self.roots.len() + s
    }

    fn np(&self) -> usize {
        self.roots.len() / 2
    }

    fn neg(&self, r: usize) -> usize {
        let np = self.np();
        if r < np {
            r + np
        } else {
            r - np
        }
    }

    fn is_pos(&self, r: usize) -> bool {
        r < self.np()
    }

    fn sum(&self, r: usize, s: usize) -> Vec<i32> {
        self.roots[r]
            .iter()
            .zip(&self.roots[s])
            .map(|(x, y)| x + y)
            .collect()
    }

    fn diff(&self, r: usize, s: usize) -> Vec<i32> {
        self.roots[r]
            .iter()
            .zip(&self.roots[s])
            .map(|(x, y)| x - y)
            .collect()
    }

    fn norm(&self, r: usize) -> i64 {
        self.rs.norm(&self.roots[r]) as i64
    }

    fn set_positive_pair(&mut self, a: usize, b: usize, v: i64) {
        let (ab, ba) = (self.at(a, b), self.at(b, a));
        self.n[ab] = v;
        self.n[ba] = -v;
        let (na, nb) = (self.neg(a), self.neg(b));
        let (ab, ba) = (self.at(na, nb), self.at(nb, na));
        self.n[ab] = -v;
        self.n[ba] = v;
    }

    /// `N_{r,s}` from constants on positive pairs of smaller height.
    fn n_mixed(&self, r: usize, s: usize) -> Result<i64> {
        let stored = self.n[self.at(r, s)];
        if stored != 0 {
            return Ok(stored);
        }
        let sum = self.sum(r, s);
        let Some(&x) = self.index.get(&sum) else {
            return Ok(0);
        };
        let (pr, ps) = (self.is_pos(r), self.is_pos(s));
        if pr == ps {
            return Err(Error::JacobiFailure(format!(
                "constant for {:?} used before it was fixed",
                sum
            )));
        }
        let (a, b, flip) = if pr { (r, s, 1) } else { (s, r, -1) };
        // a > 0 > b, c = -(a + b): N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        let c = self.neg(x);
        let v = if self.is_pos(x) {
            let inner = self.n_mixed(self.neg(b), self.neg(c))?;
            Q::new(-self.norm(c) * inner, self.norm(a))
        } else {
            let inner = self.n_mixed(c, a)?;
            Q::new(self.norm(c) * inner, self.norm(b))
        };
        if !v.is_integer() {
            return Err(Error::JacobiFailure(format!(
                "non-integral constant for {:?}",
                sum
            )));
        }
        Ok(flip * v.to_integer())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, r: usize) -> &[i32] {
        &self.roots[r]
    }

    pub fn root_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// `N_{r,s}` for coefficient vectors; 0 when `r + s` is not a root.
    pub fn n(&self, r: &[i32], s: &[i32]) -> i64 {
        match (self.root_index(r), self.root_index(s)) {
            (Some(i), Some(j)) => self.n[self.at(i, j)],
            _ => 0,
        }
    }

    /// `N_{r,s}` by root index.
    pub fn n_idx(&self, r: usize, s: usize) -> i64 {
        self.n[self.at(r, s)]
    }

    /// Coroot `r^∨` in the basis `α_i^∨`.
    fn coroot(&self, r: usize) -> Vec<i64> {
        let norm = self.norm(r);
        self.roots[r]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let v = c as i64 * self.rs.simple_norm(i) as i64;
                assert_eq!(v % norm, 0, "coroots are integral");
                v / norm
            })
            .collect()
    }

    /// Bracket of basis elements. Elements `0..num_roots` are `e_r`, the
    /// next `rank` are `h_i = α_i^∨`.
    fn bracket_basis(&self, x: usize, y: usize) -> Vec<(usize, i64)> {
        let nr = self.num_roots();
        match (x < nr, y < nr) {
            (true, true) => {
                if self.neg(x) == y {
                    self.coroot(x)
                        .into_iter()
                        .enumerate()
                        .filter(|&(_, c)| c != 0)
                        .map(|(i, c)| (nr + i, c))
                        .collect()
                } else {
                    let v = self.n[self.at(x, y)];
                    if v == 0 {
                        Vec::new()
                    } else {
                        vec![(self.index[&self.sum(x, y)], v)]
                    }
                }
            }
            (false, true) => {
                let p = self.rs.pairing(&self.roots[y], x - nr) as i64;
                if p == 0 {
                    Vec::new()
                } else {
                    vec![(y, p)]
                }
            }
            (true, false) => self
                .bracket_basis(y, x)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect(),
            (false, false) => Vec::new(),
        }
    }

    fn bracket_vec(&self, x: usize, v: &HashMap<usize, i64>) -> HashMap<usize, i64> {
        let mut out: HashMap<usize, i64> = HashMap::new();
        for (&y, &c) in v {
            for (k, d) in self.bracket_basis(x, y) {
                *out.entry(k).or_default() += c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Jacobi identity `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on basis
    /// elements.
    fn jacobi(&self, x: usize, y: usize, z: usize) -> Result<()> {
        let one = |a: usize| HashMap::from([(a, 1i64)]);
        let t1 = self.bracket_vec(x, &self.bracket_vec(y, &one(z)));
        let t2 = self.bracket_vec(y, &self.bracket_vec(z, &one(x)));
        let t3 = self.bracket_vec(z, &self.bracket_vec(x, &one(y)));
        let mut total = t1;
        for (k, c) in t2.into_iter().chain(t3) {
            *total.entry(k).or_default() += c;
        }
        if total.values().any(|&c| c != 0) {
            return Err(Error::JacobiFailure(format!(
                "basis triple ({x}, {y}, {z})"
            )));
        }
        Ok(())
    }

    /// Jacobi identity on every triple of basis elements of `g`.
    pub fn check_jacobi_full(&self) -> Result<()> {
        let total = self.num_roots() + self.rs.rank();
        for x in 0..total {
            for y in x + 1..total {
                for z in y + 1..total {
                    self.jacobi(x, y, z)?;
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity on triples (Levi root, Levi root, root of `m`): the
    /// action of the Levi on `m` is a representation.
    pub fn check_jacobi_levi_m(&self, md: &MarkedDiagram) -> Result<()> {
        let g = md.gamma;
        let levi: Vec<usize> = (0..self.num_roots())
            .filter(|&r| self.roots[r][g] == 0)
            .collect();
        let m: Vec<usize> = (0..self.num_roots())
            .filter(|&r| self.roots[r][g] == 1)
            .collect();
        for (i, &x) in levi.iter().enumerate() {
            for &y in &levi[i + 1..] {
                for &z in &m {
                    self.jacobi(x, y, z)?;
                }
            }
        }
        Ok(())
    }
}

/// Chevalley basis for a Hermitian symmetric space, self-checked on the
/// Levi action on `m`.
pub fn build_chevalley(md: &MarkedDiagram) -> Result<ChevalleyBasis> {
    md.require_hermitian()?;
    let cb = ChevalleyBasis::new(&md.rs)?;
    cb.check_jacobi_levi_m(md)?;
    Ok(cb)
}

/// Same as [`build_chevalley`] with extraspecial signs drawn from `seed`.
pub fn build_chevalley_with_signs(md: &MarkedDiagram, seed: u64) -> Result<ChevalleyBasis> {
    md.require_hermitian()?;
    let cb = ChevalleyBasis::with_sign_seed(&md.rs, seed)?;
    cb.check_jacobi_levi_m(md)?;
    Ok(cb)
}
