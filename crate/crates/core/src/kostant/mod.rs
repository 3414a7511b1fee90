//! Kostant's decomposition `∧^k m = ⊕_{w ∈ W^P(k)} I_w`, membership of
//! wedge vectors in a component, and direct computations of the Lie
//! algebra cohomology groups attached to a smooth Schubert variety.

pub mod chevalley;
pub mod linalg;
pub mod wedge;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use chevalley::{build_chevalley, build_chevalley_with_signs, ChevalleyBasis};
pub use wedge::{LeviAction, WedgeVector};

use crate::diagram::{MarkedDiagram, SchubertClass};
use crate::error::{Error, Result};
use crate::rigidity::DEntry;
use crate::root_system::Root;
use crate::weyl;
use linalg::{Echelon, SparseVec};
use wedge::mask_weight;

/// Largest `C(|Δ(m)|, k)` an oracle touching `∧^k m` will accept.
pub const DEFAULT_ORACLE_BOUND: u128 = 200_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Everything needed to compute in `∧m` for one Hermitian symmetric space.
#[derive(Debug, Clone)]
pub struct Kostant {
    pub md: MarkedDiagram,
    pub cb: ChevalleyBasis,
    pub action: LeviAction,
    pub bound: u128,
}

impl Kostant {
    pub fn new(md: &MarkedDiagram, bound: u128) -> Result<Kostant> {
        Self::from_basis(md, build_chevalley(md)?, bound)
    }

    /// Uses extraspecial signs drawn from `seed`.
    pub fn with_sign_seed(md: &MarkedDiagram, bound: u128, seed: u64) -> Result<Kostant> {
        Self::from_basis(md, build_chevalley_with_signs(md, seed)?, bound)
    }

    fn from_basis(md: &MarkedDiagram, cb: ChevalleyBasis, bound: u128) -> Result<Kostant> {
        let action = LeviAction::new(&cb, md);
        Ok(Kostant {
            md: md.clone(),
            cb,
            action,
            bound,
        })
    }

    /// Fails with `OracleTooLarge` when `∧^k m` exceeds the bound.
    pub fn check_bound(&self, k: usize) -> Result<()> {
        let needed = binomial(self.md.dim(), k);
        if needed > self.bound {
            return Err(Error::OracleTooLarge {
                needed,
                bound: self.bound,
            });
        }
        Ok(())
    }

    fn gamma_position(&self) -> usize {
        let g = Root::simple(self.md.rank(), self.md.gamma);
        self.md.m_index(&g).expect("α_γ lies in m")
    }

    /// Weight spaces of `I_w` reached from the extreme monomial by simple
    /// raising operators. With a target weight, only weights below it are
    /// visited.
    fn weight_spaces(
        &self,
        ideal: u64,
        target: Option<&[i32]>,
    ) -> Result<BTreeMap<Vec<i32>, Echelon<u64>>> {
        let e = WedgeVector::monomial(ideal);
        for &lo in &self.action.lowering {
            if !self.action.act(lo, &e).is_zero() {
                return Err(Error::InternalContradiction(format!(
                    "extreme monomial {ideal:#b} is not a lowest weight vector"
                )));
            }
        }
        let below = |w: &[i32]| target.is_none_or(|t| t.iter().zip(w).all(|(a, b)| a >= b));
        let mut spaces: BTreeMap<Vec<i32>, Echelon<u64>> = BTreeMap::new();
        let w0 = mask_weight(&self.md, ideal);
        if !below(&w0) {
            return Ok(spaces);
        }
        let mut start = Echelon::new();
        start.insert(e.terms);
        spaces.insert(w0.clone(), start);
        let mut level: BTreeSet<Vec<i32>> = BTreeSet::from([w0]);
        while !level.is_empty() {
            let mut next: BTreeSet<Vec<i32>> = BTreeSet::new();
            for nu in &level {
                let rows: Vec<SparseVec<u64>> = spaces[nu].rows().cloned().collect();
                for (&raise, j) in self.action.raising.iter().zip(self.md.levi_nodes()) {
                    let mut w = nu.clone();
                    w[j] += 1;
                    if !below(&w) {
                        continue;
                    }
                    for row in &rows {
                        let img = self.action.act(
                            raise,
                            &WedgeVector {
                                grade: ideal.count_ones() as usize,
                                terms: row.clone(),
                            },
                        );
                        if !img.is_zero() {
                            spaces.entry(w.clone()).or_default().insert(img.terms);
                            next.insert(w.clone());
                        }
                    }
                }
            }
            level = next;
        }
        Ok(spaces)
    }

    /// The component `I_w` generated from `e_{Δ(w)}`.
    pub fn generate_component(&self, w: &weyl::CosetRep) -> Result<KostantComponent> {
        let k = w.length();
        self.check_bound(k)?;
        let spaces = self.weight_spaces(w.ideal, None)?;
        let basis: Vec<WedgeVector> = spaces
            .values()
            .flat_map(|e| e.rows().cloned())
            .map(|terms| WedgeVector { grade: k, terms })
            .collect();
        Ok(KostantComponent {
            word: w.elt.word.clone(),
            ideal: w.ideal,
            k,
            extreme: WedgeVector::monomial(w.ideal),
            dim: basis.len(),
            basis,
        })
    }

    /// All components of `∧^k m`.
    pub fn decompose(&self, k: usize) -> Result<Vec<KostantComponent>> {
        self.check_bound(k)?;
        let levels = weyl::enumerate_wp(&self.md.rs, self.md.gamma)?;
        match levels.get(k) {
            None => Ok(Vec::new()),
            Some(level) => level.iter().map(|w| self.generate_component(w)).collect(),
        }
    }

    /// Whether the weight vector `phi` lies in the component with extreme
    /// monomial `ideal`.
    pub fn contains(&self, ideal: u64, phi: &WedgeVector) -> Result<bool> {
        self.check_bound(phi.grade)?;
        let Some(&first) = phi.terms.keys().next() else {
            return Ok(true);
        };
        let mu = mask_weight(&self.md, first);
        if phi.terms.keys().any(|&m| mask_weight(&self.md, m) != mu) {
            return Err(Error::PreconditionFailed(
                "vector is not a weight vector".into(),
            ));
        }
        let w0 = mask_weight(&self.md, ideal);
        let diff: Vec<i32> = mu.iter().zip(&w0).map(|(a, b)| a - b).collect();
        if diff[self.md.gamma] != 0 || diff.iter().any(|&d| d < 0) {
            return Ok(false);
        }
        let spaces = self.weight_spaces(ideal, Some(&mu))?;
        Ok(spaces.get(&mu).is_some_and(|e| e.contains(&phi.terms)))
    }

    /// The monomial `x_{σ_γ(λ)} ∧ v_2 ∧ ... ∧ v_k`, where `v_1 = x_γ` and the
    /// `v_i` run over the root vectors of `n_w`.
    pub fn phi_mask(&self, sc: &SchubertClass, lambda: &Root) -> Result<u64> {
        let sigma = self.md.rs.reflect(lambda, self.md.gamma);
        let Some(s) = self.md.m_index(&sigma) else {
            return Err(Error::NotInM(sigma.coeffs().to_vec()));
        };
        let g = self.gamma_position();
        let nw = sc.nw_mask(&self.md);
        if s != g && nw >> s & 1 == 1 {
            return Err(Error::DegenerateWedge(sigma.coeffs().to_vec()));
        }
        Ok(nw & !(1 << g) | 1 << s)
    }

    /// Whether `φ^k_λ` lies in `I_w` for the coset representative of `δ`.
    pub fn membership_test(&self, sc: &SchubertClass, lambda: &Root) -> Result<bool> {
        let phi = self.phi_mask(sc, lambda)?;
        self.check_bound(sc.k)?;
        self.contains(sc.nw_mask(&self.md), &WedgeVector::monomial(phi))
    }

    /// `dim H^{1,1}(B_w)`: the kernel of
    /// `∂ : n_w^* ⊗ m_w → ∧² n_w^* ⊗ m/n_w`.
    pub fn h11_oracle(&self, sc: &SchubertClass) -> usize {
        h11(&self.cb, &self.md, sc)
    }

    /// `dim H^1(n_w, m_w + m/n_w)` with its two pieces.
    pub fn h1_oracle(&self, sc: &SchubertClass) -> H1 {
        h1(&self.cb, &self.md, sc)
    }
}

/// One summand `I_w` of `∧^k m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantComponent {
    pub word: Vec<usize>,
    pub ideal: u64,
    pub k: usize,
    pub extreme: WedgeVector,
    pub basis: Vec<WedgeVector>,
    pub dim: usize,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coordinates `(a, b, y)` of `x_A^* ∧ x_B^* ⊗ x_Y`.
type Col = SparseVec<(usize, usize, usize)>;

/// Columns of `∂`, one per `x_A^* ⊗ x_X`, grouped by weight `X - A`.
fn h11_columns(cb: &ChevalleyBasis, sc: &SchubertClass) -> BTreeMap<Vec<i32>, Vec<Col>> {
    let nw = &sc.delta_nw;
    let mut blocks: BTreeMap<Vec<i32>, Vec<Col>> = BTreeMap::new();
    for (a, ra) in nw.iter().enumerate() {
        for rx in &sc.delta_mw {
            let mut col: Col = BTreeMap::new();
            for (b, rb) in nw.iter().enumerate() {
                if a == b {
                    continue;
                }
                let n = cb.n(rx.coeffs(), rb.coeffs());
                if n == 0 {
                    continue;
                }
                let t: Vec<i32> = rx
                    .coeffs()
                    .iter()
                    .zip(rb.coeffs())
                    .map(|(x, y)| x + y)
                    .collect();
                if nw.iter().any(|r| r.coeffs() == t.as_slice()) {
                    continue;
                }
                let t = cb.root_index(&t).expect("bracket lands on a root");
                let (key, sign) = if a < b {
                    ((a, b, t), n)
                } else {
                    ((b, a, t), -n)
                };
                col.insert(key, q(sign));
            }
            let wt: Vec<i32> = rx
                .coeffs()
                .iter()
                .zip(ra.coeffs())
                .map(|(x, y)| x - y)
                .collect();
            blocks.entry(wt).or_default().push(col);
        }
    }
    blocks
}

pub fn h11(cb: &ChevalleyBasis, _md: &MarkedDiagram, sc: &SchubertClass) -> usize {
    h11_columns(cb, sc)
        .into_values()
        .map(|cols| cols.len() - linalg::rank(cols))
        .sum()
}

/// Pieces of `H^1(n_w, m_w + m/n_w)`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1 {
    /// Kernel on `n_w^* ⊗ m_w`; equals `dim H^{1,1}(B_w)`.
    pub kernel: usize,
    /// Cokernel of `m_w → n_w^* ⊗ m/n_w`.
    pub cokernel: usize,
    pub total: usize,
}

pub fn h1(cb: &ChevalleyBasis, md: &MarkedDiagram, sc: &SchubertClass) -> H1 {
    let kernel = h11(cb, md, sc);
    let quotient: Vec<&Root> = sc
        .delta_m
        .iter()
        .filter(|r| !sc.delta_nw.contains(r))
        .collect();
    let dim_target = sc.delta_nw.len() * quotient.len();
    let images = sc.delta_mw.iter().map(|rx| {
        let mut v: SparseVec<(usize, usize)> = BTreeMap::new();
        for (a, ra) in sc.delta_nw.iter().enumerate() {
            let n = cb.n(rx.coeffs(), ra.coeffs());
            if n != 0 {
                let t: Vec<i32> = rx
                    .coeffs()
                    .iter()
                    .zip(ra.coeffs())
                    .map(|(x, y)| x + y)
                    .collect();
                let t = quotient
                    .iter()
                    .position(|r| r.coeffs() == t.as_slice())
                    .expect("bracket lands in m/n_w");
                v.insert((a, t), q(n));
            }
        }
        v
    });
    let cokernel = dim_target - linalg::rank(images);
    H1 {
        kernel,
        cokernel,
        total: kernel + cokernel,
    }
}

/// Nodes of `l_w`: `S \ (N(δ) ∪ {γ})`.
pub fn lw_nodes(md: &MarkedDiagram, sc: &SchubertClass) -> Vec<usize> {
    (0..md.rank())
        .filter(|&j| j != md.gamma && !sc.delta.neighborhood.contains(&j))
        .collect()
}

/// Dimension of the irreducible `l_w`-module with extreme vector
/// `x_γ^* ⊗ x_{σ_γ(λ)}`, of highest weight `σ_γ(λ) - γ`.
pub fn h1_summand_dim(md: &MarkedDiagram, sc: &SchubertClass, entry: &DEntry) -> Result<u64> {
    let nodes = lw_nodes(md, sc);
    let mut mu = entry.sigma.coeffs().to_vec();
    mu[md.gamma] -= 1;
    let labels: Vec<i64> = nodes
        .iter()
        .map(|&j| md.rs.pairing(&mu, j) as i64)
        .collect();
    weyl::weyl_dim(&md.rs, &nodes, &labels)
}
