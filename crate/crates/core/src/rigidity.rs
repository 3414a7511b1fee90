//! Fibres of the neighbourhood map `n_{N(δ)}`, their maximal-height roots,
//! the sets `D`, `D'`, `D''`, and Schubert rigidity certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{MarkedDiagram, MarkedType, SchubertClass, Subdiagram};
use crate::error::{Error, Result};
use crate::root_system::{root_order, Root, RootSystem};

/// One element `λ_i` of `D` together with its fibre index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DEntry {
    /// `(n_β(λ))_{β ∈ N(δ)}`, never all zero.
    pub index: Vec<u32>,
    pub lambda: Root,
    /// `σ_γ(λ)`.
    pub sigma: Root,
    /// `n_γ(σ_γ(λ))`.
    pub defect: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSets {
    pub gamma: usize,
    pub neighborhood: Vec<usize>,
    /// Sorted by the height-then-lex order of `λ`.
    pub entries: Vec<DEntry>,
}

impl DSets {
    pub fn d(&self) -> Vec<Root> {
        self.entries.iter().map(|e| e.lambda.clone()).collect()
    }

    pub fn dprime(&self) -> Vec<Root> {
        self.with_defect(0)
    }

    pub fn ddoubleprime(&self) -> Vec<Root> {
        self.with_defect(1)
    }

    fn with_defect(&self, d: i32) -> Vec<Root> {
        self.entries
            .iter()
            .filter(|e| e.defect == d)
            .map(|e| e.lambda.clone())
            .collect()
    }
}

/// `Σ_{β ∈ N(γ)} n_β(λ) - n_γ(λ)`, with `N(γ)` the neighbours of `γ` in the
/// ambient diagram. Agrees with `n_γ(σ_γ(λ))` whenever every edge at `γ`
/// has `<α_β, α_γ^∨> = -1`.
pub fn defect_arithmetic(rs: &RootSystem, gamma: usize, lambda: &Root) -> i32 {
    rs.neighbors(gamma)
        .iter()
        .map(|&b| lambda.coeff(b))
        .sum::<i32>()
        - lambda.coeff(gamma)
}

/// `D` for the pair `(δ, γ)` inside an arbitrary ambient root system.
pub fn compute_d_general(rs: &RootSystem, gamma: usize, delta: &Subdiagram) -> Result<DSets> {
    let nb = &delta.neighborhood;
    let mut fibers: BTreeMap<Vec<u32>, Vec<&Root>> = BTreeMap::new();
    for r in rs.positive_roots() {
        let idx: Vec<u32> = nb.iter().map(|&b| r.coeff(b) as u32).collect();
        if idx.iter().any(|&c| c > 0) {
            fibers.entry(idx).or_default().push(r);
        }
    }
    let mut entries = Vec::with_capacity(fibers.len());
    for (index, members) in fibers {
        let top = members
            .iter()
            .map(|r| r.height())
            .max()
            .expect("fibres are nonempty");
        let maxima: Vec<&&Root> = members.iter().filter(|r| r.height() == top).collect();
        if maxima.len() != 1 {
            return Err(Error::NonUniqueMaximum(index));
        }
        let lambda = (*maxima[0]).clone();
        let sigma = rs.reflect(&lambda, gamma);
        let defect = sigma.coeff(gamma);
        entries.push(DEntry {
            index,
            lambda,
            sigma,
            defect,
        });
    }
    entries.sort_by(|a, b| root_order(a.lambda.coeffs(), b.lambda.coeffs()));
    Ok(DSets {
        gamma,
        neighborhood: nb.clone(),
        entries,
    })
}

/// `D` for a smooth Schubert variety of a Hermitian symmetric space.
pub fn compute_d(md: &MarkedDiagram, sc: &SchubertClass) -> Result<DSets> {
    md.require_hermitian()?;
    compute_d_general(&md.rs, md.gamma, &sc.delta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SchubertVerdict {
    CertifiedRigid,
    /// `D' ≠ ∅`; the witness is its first element.
    NoCertificate {
        witness: Root,
    },
}

/// Certified rigid when `D' = ∅`. A non-`LinearA` pair with `D' ≠ ∅`
/// contradicts the vanishing lemma and is reported as an error.
pub fn schubert_rigidity_certificate(ds: &DSets, delta: &Subdiagram) -> Result<SchubertVerdict> {
    match ds.dprime().into_iter().next() {
        None => Ok(SchubertVerdict::CertifiedRigid),
        Some(witness) if delta.marked_type == MarkedType::LinearA => {
            Ok(SchubertVerdict::NoCertificate { witness })
        }
        Some(witness) => Err(Error::InternalContradiction(format!(
            "{} subdiagram {:?} has λ = {} with n_γ(σ_γ λ) = 0",
            delta.marked_type, delta.nodes, witness
        ))),
    }
}

/// Schubert rigidity in `G/Q` for a maximal parabolic `Q` at any node
/// `γ`, when `(δ, γ)` is itself cominuscule and not `LinearA`.
pub fn general_rigidity(rs: &RootSystem, gamma: usize, nodes: &[usize]) -> Result<SchubertVerdict> {
    let delta = Subdiagram::with_gamma(rs, gamma, nodes)?;
    let sub_roots = rs.positive_roots_on(&delta.nodes);
    let top = sub_roots
        .iter()
        .max_by(|a, b| root_order(a.coeffs(), b.coeffs()))
        .expect("δ is nonempty");
    if top.coeff(gamma) != 1 {
        return Err(Error::PreconditionFailed(format!(
            "(δ, γ) = ({:?}, {}) is not cominuscule",
            delta.nodes, gamma
        )));
    }
    if delta.marked_type == MarkedType::LinearA {
        return Err(Error::PreconditionFailed(
            "(δ, γ) is of type (A_k, α_1)".into(),
        ));
    }
    let nw: Vec<&Root> = sub_roots.iter().filter(|r| r.coeff(gamma) == 1).collect();
    for a in &nw {
        for b in &nw {
            let s: Vec<i32> = a
                .coeffs()
                .iter()
                .zip(b.coeffs())
                .map(|(x, y)| x + y)
                .collect();
            if rs.is_root(&s) {
                return Err(Error::PreconditionFailed(format!(
                    "n_w is not abelian: {a} + {b} is a root"
                )));
            }
        }
    }
    let ds = compute_d_general(rs, gamma, &delta)?;
    schubert_rigidity_certificate(&ds, &delta)
}
