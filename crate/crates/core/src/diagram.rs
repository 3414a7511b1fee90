//! Marked Dynkin diagrams `(D(G), γ)`, their connected subdiagrams `δ ∋ γ`
//! (the smooth Schubert varieties), and the root sets attached to a pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Family, Root, RootSystem};
use crate::weyl::{self, CosetRep, WeylElt};

/// A root system with a marked node.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkedDiagram {
    pub rs: RootSystem,
    pub gamma: usize,
    /// Coefficient of `α_γ` in the highest root is 1.
    pub hermitian: bool,
    /// `G/P` is an odd-dimensional quadric.
    pub odd_quadric: bool,
    m: Vec<Root>,
}

impl MarkedDiagram {
    pub fn new(family: Family, rank: usize, gamma: usize) -> Result<MarkedDiagram> {
        let rs = RootSystem::build(family, rank)?;
        Self::from_root_system(rs, gamma)
    }

    pub fn from_root_system(rs: RootSystem, gamma: usize) -> Result<MarkedDiagram> {
        if gamma >= rs.rank() {
            return Err(Error::IndexOutOfRange(gamma, rs.rank()));
        }
        let hermitian = rs.highest_root().coeff(gamma) == 1;
        let m = if hermitian {
            weyl::m_roots(&rs, gamma)?
        } else {
            Vec::new()
        };
        let ty = rs.cartan_type;
        // B_n/P_1 is the quadric Q^{2n-1}; C_2/P_2 is isomorphic to it.
        let odd_quadric = hermitian
            && ((ty.family == Family::B && gamma == 0) || (ty.family == Family::C && ty.rank == 2));
        Ok(MarkedDiagram {
            rs,
            gamma,
            hermitian,
            odd_quadric,
            m,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `Δ(m)`: positive roots with `n_γ = 1`.
    pub fn m_roots(&self) -> &[Root] {
        &self.m
    }

    /// `dim G/P = |Δ(m)|`.
    pub fn dim(&self) -> usize {
        self.m.len()
    }

    /// Position of a root in [`MarkedDiagram::m_roots`].
    pub fn m_index(&self, root: &Root) -> Option<usize> {
        self.m.iter().position(|r| r == root)
    }

    /// Nodes of the Levi factor, `S \ {γ}`.
    pub fn levi_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| i != self.gamma).collect()
    }

    pub fn require_hermitian(&self) -> Result<()> {
        if self.hermitian {
            Ok(())
        } else {
            Err(Error::NotCominuscule(self.gamma))
        }
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.rs.cartan_type, self.gamma + 1)
    }
}

/// Type of a marked pair `(δ, γ)`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MarkedType {
    /// `(A_k, α_1)`: a linear space.
    LinearA,
    /// `(A_k, α_j)` with `γ` interior: a sub-Grassmannian.
    MiddleA,
    /// `(D_ℓ, γ)` with `γ` a leaf.
    DType,
    /// `(C_ℓ, α_ℓ)`, including `(C_2, α_2) ≅ (B_2, α_1)`.
    CType,
    /// `(B_ℓ, α_1)` with `ℓ ≥ 3`.
    BType,
    /// `(E_6, α_1)`, `(E_6, α_6)` or `(E_7, α_7)`.
    EType,
    /// Not a cominuscule marked pair.
    Other,
}

impl MarkedType {
    pub fn name(self) -> &'static str {
        match self {
            MarkedType::LinearA => "LinearA",
            MarkedType::MiddleA => "MiddleA",
            MarkedType::DType => "DType",
            MarkedType::CType => "CType",
            MarkedType::BType => "BType",
            MarkedType::EType => "EType",
            MarkedType::Other => "Other",
        }
    }
}

impl fmt::Display for MarkedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies the induced subdiagram on `nodes` with marked node `gamma`.
pub fn classify(rs: &RootSystem, nodes: &[usize], gamma: usize) -> MarkedType {
    if nodes.len() == 1 {
        return MarkedType::LinearA;
    }
    let inside = |j: &usize| nodes.contains(j);
    let nbrs = |i: usize| -> Vec<usize> { rs.neighbors(i).into_iter().filter(inside).collect() };
    let degree = |i: usize| nbrs(i).len();
    if let Some(&branch) = nodes.iter().find(|&&i| degree(i) >= 3) {
        // arm lengths from the branch node
        let mut arms: Vec<(usize, usize)> = nbrs(branch)
            .into_iter()
            .map(|start| {
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next: Vec<usize> = nbrs(cur).into_iter().filter(|&x| x != prev).collect();
                    match next.as_slice() {
                        [] => return (len, cur),
                        [x] => {
                            prev = cur;
                            cur = *x;
                            len += 1;
                        }
                        _ => unreachable!("types A-E have one branch node"),
                    }
                }
            })
            .collect();
        arms.sort();
        let lens: Vec<usize> = arms.iter().map(|a| a.0).collect();
        let leaf = |len: usize| arms.iter().any(|&(l, end)| l == len && end == gamma);
        return match lens.as_slice() {
            [1, 1, _] => {
                if degree(gamma) == 1 {
                    MarkedType::DType
                } else {
                    MarkedType::Other
                }
            }
            [1, 2, 2] if leaf(2) => MarkedType::EType,
            [1, 2, 3] if leaf(3) => MarkedType::EType,
            _ => MarkedType::Other,
        };
    }
    let double = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .find(|&(i, j)| rs.edge(i, j) == 2);
    match double {
        None => {
            if degree(gamma) == 1 {
                MarkedType::LinearA
            } else {
                MarkedType::MiddleA
            }
        }
        Some((i, j)) => {
            let (long, short) = if rs.simple_norm(i) > rs.simple_norm(j) {
                (i, j)
            } else {
                (j, i)
            };
            let long_end = degree(long) == 1;
            if long_end && gamma == long {
                MarkedType::CType
            } else if !long_end && degree(gamma) == 1 && gamma != short && nodes.len() >= 3 {
                MarkedType::BType
            } else {
                MarkedType::Other
            }
        }
    }
}

fn is_connected(rs: &RootSystem, nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let mut seen = vec![nodes[0]];
    let mut stack = vec![nodes[0]];
    while let Some(i) = stack.pop() {
        for j in rs.neighbors(i) {
            if nodes.contains(&j) && !seen.contains(&j) {
                seen.push(j);
                stack.push(j);
            }
        }
    }
    seen.len() == nodes.len()
}

/// A connected subdiagram `δ` containing the marked node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subdiagram {
    pub nodes: Vec<usize>,
    /// `N(δ)`: nodes outside `δ` joined to `δ` by an edge.
    pub neighborhood: Vec<usize>,
    pub marked_type: MarkedType,
}

impl Subdiagram {
    pub fn new(md: &MarkedDiagram, nodes: &[usize]) -> Result<Subdiagram> {
        Self::with_gamma(&md.rs, md.gamma, nodes)
    }

    /// Same as [`Subdiagram::new`] for an arbitrary ambient root system.
    pub fn with_gamma(rs: &RootSystem, gamma: usize, nodes: &[usize]) -> Result<Subdiagram> {
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        if let Some(&bad) = nodes.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange(bad, rs.rank()));
        }
        if !nodes.contains(&gamma) {
            return Err(Error::InvalidSubdiagram(nodes, "marked node missing"));
        }
        if !is_connected(rs, &nodes) {
            return Err(Error::InvalidSubdiagram(nodes, "not connected"));
        }
        let neighborhood = (0..rs.rank())
            .filter(|j| !nodes.contains(j) && nodes.iter().any(|&i| rs.edge(i, *j) != 0))
            .collect();
        let marked_type = classify(rs, &nodes, gamma);
        Ok(Subdiagram {
            nodes,
            neighborhood,
            marked_type,
        })
    }

    pub fn is_full(&self, md: &MarkedDiagram) -> bool {
        self.nodes.len() == md.rank()
    }

    /// 1-based node labels.
    pub fn labels(&self) -> Vec<usize> {
        self.nodes.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, other: &Subdiagram) -> bool {
        other.nodes.iter().all(|i| self.nodes.contains(i))
    }
}

/// Every Hermitian symmetric space of rank at most `max_rank`.
pub fn catalog(max_rank: usize) -> Vec<MarkedDiagram> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<MarkedDiagram>, f: Family, n: usize, g: usize| {
        let md = MarkedDiagram::new(f, n, g).expect("catalog entries are valid");
        if md.hermitian {
            out.push(md);
        }
    };
    for n in 1..=max_rank {
        for g in 0..n {
            push(&mut out, Family::A, n, g);
        }
    }
    for n in 2..=max_rank {
        push(&mut out, Family::B, n, 0);
    }
    for n in 2..=max_rank {
        push(&mut out, Family::C, n, n - 1);
    }
    for n in 3..=max_rank {
        push(&mut out, Family::D, n, 0);
        push(&mut out, Family::D, n, n - 2);
        push(&mut out, Family::D, n, n - 1);
    }
    if max_rank >= 6 {
        push(&mut out, Family::E, 6, 0);
        push(&mut out, Family::E, 6, 5);
    }
    if max_rank >= 7 {
        push(&mut out, Family::E, 7, 6);
    }
    out
}

/// Connected subdiagrams containing `γ`, ordered by size then nodes.
pub fn smooth_schubert_varieties(md: &MarkedDiagram, include_full: bool) -> Vec<Subdiagram> {
    let n = md.rank();
    let mut out: Vec<Subdiagram> = (1u32..1 << n)
        .filter(|mask| mask >> md.gamma & 1 == 1)
        .filter_map(|mask| {
            let nodes: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            Subdiagram::new(md, &nodes).ok()
        })
        .filter(|d| include_full || !d.is_full(md))
        .collect();
    out.sort_by(|a, b| {
        a.nodes
            .len()
            .cmp(&b.nodes.len())
            .then_with(|| a.nodes.cmp(&b.nodes))
    });
    out
}

/// The root sets attached to `(G/P, δ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertClass {
    pub delta: Subdiagram,
    pub k: usize,
    /// Some `n_β > 0` with `β ∈ N(δ)`.
    pub delta_n: Vec<Root>,
    /// `n_γ = 1`.
    pub delta_m: Vec<Root>,
    /// `n_γ = 0` and some `n_β > 0` with `β ∈ N(δ)`.
    pub delta_mw: Vec<Root>,
    /// `n_γ = 1` and `n_β = 0` for all `β ∈ N(δ)`.
    pub delta_nw: Vec<Root>,
}

pub fn schubert_class(md: &MarkedDiagram, delta: &Subdiagram) -> SchubertClass {
    let g = md.gamma;
    let touches = |r: &Root| delta.neighborhood.iter().any(|&b| r.coeff(b) > 0);
    let pos = md.rs.positive_roots();
    let filter =
        |p: &dyn Fn(&Root) -> bool| -> Vec<Root> { pos.iter().filter(|r| p(r)).cloned().collect() };
    let delta_n = filter(&|r| touches(r));
    let delta_m = filter(&|r| r.coeff(g) == 1);
    let delta_mw = filter(&|r| r.coeff(g) == 0 && touches(r));
    let delta_nw = filter(&|r| r.coeff(g) == 1 && !touches(r));
    SchubertClass {
        delta: delta.clone(),
        k: delta_nw.len(),
        delta_n,
        delta_m,
        delta_mw,
        delta_nw,
    }
}

impl SchubertClass {
    /// Minimal coset representative whose inversion set is `Δ(n_w)`.
    pub fn coset_rep(&self, md: &MarkedDiagram) -> CosetRep {
        let n = md.rank();
        let mut order = self.delta_nw.clone();
        order.sort_by(|a, b| crate::root_system::root_order(a.coeffs(), b.coeffs()));
        let mut elt = WeylElt::identity();
        let mut ideal = 0u64;
        for r in order {
            let j = (0..n)
                .find(|&j| elt.apply(&md.rs, &Root::simple(n, j)) == r)
                .expect("Δ(n_w) is a lower order ideal");
            elt.word.push(j);
            ideal |= 1 << md.m_index(&r).expect("Δ(n_w) ⊆ Δ(m)");
            elt.inversions.push(r);
        }
        CosetRep {
            elt,
            gamma: md.gamma,
            ideal,
        }
    }

    /// Positions of `Δ(n_w)` in `Δ(m)`.
    pub fn nw_mask(&self, md: &MarkedDiagram) -> u64 {
        self.delta_nw
            .iter()
            .fold(0, |acc, r| acc | 1 << md.m_index(r).expect("Δ(n_w) ⊆ Δ(m)"))
    }
}

/// `k_{G/P}`: the largest `j` with `|W^P(i)| = 1` for every `i ≤ j`.
pub fn k_invariant(md: &MarkedDiagram) -> Result<usize> {
    md.require_hermitian()?;
    let profile = weyl::length_profile(&weyl::enumerate_wp(&md.rs, md.gamma)?);
    Ok(profile.iter().take_while(|&&c| c == 1).count() - 1)
}

/// Number of nodes on the chain from `γ` to the branch node, inclusive.
/// `None` when the diagram has no branch node.
pub fn k_diagrammatic(md: &MarkedDiagram) -> Option<usize> {
    let rs = &md.rs;
    let branch = (0..rs.rank()).find(|&i| rs.neighbors(i).len() >= 3)?;
    let mut dist = vec![usize::MAX; rs.rank()];
    dist[md.gamma] = 0;
    let mut queue = std::collections::VecDeque::from([md.gamma]);
    while let Some(i) = queue.pop_front() {
        for j in rs.neighbors(i) {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    Some(dist[branch] + 1)
}

/// A maximal `LinearA` subdiagram containing `δ` (possibly `δ` itself).
pub fn maximal_linear_extension(md: &MarkedDiagram, delta: &Subdiagram) -> Result<Subdiagram> {
    if delta.marked_type != MarkedType::LinearA {
        return Err(Error::WrongType(delta.marked_type.name().to_string()));
    }
    let mut cur = delta.clone();
    'grow: loop {
        for d in smooth_schubert_varieties(md, true) {
            if d.marked_type == MarkedType::LinearA
                && d.nodes.len() > cur.nodes.len()
                && d.contains(&cur)
            {
                cur = d;
                continue 'grow;
            }
        }
        return Ok(cur);
    }
}

/// No strictly larger `LinearA` subdiagram contains `δ`.
pub fn is_maximal_linear(md: &MarkedDiagram, delta: &Subdiagram) -> Result<bool> {
    Ok(maximal_linear_extension(md, delta)?.nodes.len() == delta.nodes.len())
}

/// Simple roots of the stabilizer `P_w`, `S ∩ w^{-1}(Δ_P ∪ Δ^-)`, where `w` is
/// the longest element of the parabolic subgroup of `δ` and `Δ_P` the Levi
/// roots. The recovered set `S ∩ w^{-1}Δ^-` is checked against `δ`.
pub fn stabilizer_nodes(md: &MarkedDiagram, delta: &Subdiagram) -> Result<Vec<usize>> {
    let n = md.rank();
    let w = weyl::longest_in_parabolic(&md.rs, &delta.nodes);
    let images: Vec<Root> = (0..n)
        .map(|j| w.apply_inverse(&md.rs, &Root::simple(n, j)))
        .collect();
    let recovered: Vec<usize> = (0..n).filter(|&j| !images[j].is_positive()).collect();
    if recovered != delta.nodes {
        return Err(Error::ConsistencyFailure(format!(
            "recovered nodes {:?} differ from δ {:?}",
            recovered, delta.nodes
        )));
    }
    Ok((0..n)
        .filter(|&j| !images[j].is_positive() || images[j].coeff(md.gamma) == 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(f: Family, n: usize, g: usize) -> MarkedDiagram {
        MarkedDiagram::new(f, n, g - 1).unwrap()
    }

    fn sub(m: &MarkedDiagram, labels: &[usize]) -> Subdiagram {
        let nodes: Vec<usize> = labels.iter().map(|l| l - 1).collect();
        Subdiagram::new(m, &nodes).unwrap()
    }

    #[test]
    fn catalog_membership() {
        let c3: Vec<String> = catalog(3).iter().map(|m| m.to_string()).collect();
        assert_eq!(
            c3,
            [
                "A1:1", "A2:1", "A2:2", "A3:1", "A3:2", "A3:3", "B2:1", "B3:1", "C2:2", "C3:3",
                "D3:1", "D3:2", "D3:3"
            ]
        );
        assert!(!md(Family::E, 6, 2).hermitian);
        assert!(!md(Family::C, 3, 1).hermitian);
        let c7 = catalog(7);
        assert!(c7.iter().all(|m| m.hermitian));
        assert_eq!(
            c7.iter()
                .filter(|m| m.cartan_type().family == Family::E)
                .count(),
            3
        );
        assert!(c7
            .iter()
            .filter(|m| m.odd_quadric)
            .all(|m| m.dim() % 2 == 1));
    }

    #[test]
    fn dimensions() {
        for m in catalog(7) {
            let ty = m.cartan_type();
            let n = ty.rank;
            let g = m.gamma + 1;
            let expected = match (ty.family, g) {
                (Family::A, g) => g * (n + 1 - g),
                (Family::B, _) => 2 * n - 1,
                (Family::C, _) => n * (n + 1) / 2,
                (Family::D, 1) => 2 * n - 2,
                (Family::D, _) => n * (n - 1) / 2,
                (Family::E, _) if n == 6 => 16,
                (Family::E, _) => 27,
            };
            assert_eq!(m.dim(), expected, "{m}");
        }
    }

    #[test]
    fn m_is_abelian() {
        for m in catalog(7) {
            for a in m.m_roots() {
                for b in m.m_roots() {
                    let s: Vec<i32> = a
                        .coeffs()
                        .iter()
                        .zip(b.coeffs())
                        .map(|(x, y)| x + y)
                        .collect();
                    assert!(!m.rs.is_root(&s));
                }
            }
        }
    }

    #[test]
    fn subdiagrams_a3() {
        let m = md(Family::A, 3, 2);
        let got: Vec<(Vec<usize>, MarkedType)> = smooth_schubert_varieties(&m, true)
            .iter()
            .map(|d| (d.labels(), d.marked_type))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![2], MarkedType::LinearA),
                (vec![1, 2], MarkedType::LinearA),
                (vec![2, 3], MarkedType::LinearA),
                (vec![1, 2, 3], MarkedType::MiddleA),
            ]
        );
        assert_eq!(smooth_schubert_varieties(&m, false).len(), 3);
    }

    #[test]
    fn subdiagrams_d4_c3() {
        let m = md(Family::D, 4, 1);
        let got: Vec<(Vec<usize>, MarkedType)> = smooth_schubert_varieties(&m, true)
            .iter()
            .map(|d| (d.labels(), d.marked_type))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![1], MarkedType::LinearA),
                (vec![1, 2], MarkedType::LinearA),
                (vec![1, 2, 3], MarkedType::LinearA),
                (vec![1, 2, 4], MarkedType::LinearA),
                (vec![1, 2, 3, 4], MarkedType::DType),
            ]
        );
        let c = md(Family::C, 3, 3);
        let got: Vec<MarkedType> = smooth_schubert_varieties(&c, true)
            .iter()
            .map(|d| d.marked_type)
            .collect();
        assert_eq!(
            got,
            vec![MarkedType::LinearA, MarkedType::CType, MarkedType::CType]
        );
    }

    #[test]
    fn classification_extras() {
        let b4 = md(Family::B, 4, 1);
        assert_eq!(sub(&b4, &[1, 2, 3, 4]).marked_type, MarkedType::BType);
        assert_eq!(sub(&b4, &[1, 2, 3]).marked_type, MarkedType::LinearA);
        let b2 = md(Family::B, 2, 1);
        assert_eq!(sub(&b2, &[1, 2]).marked_type, MarkedType::CType);
        let e6 = md(Family::E, 6, 1);
        assert_eq!(sub(&e6, &[1, 2, 3, 4, 5, 6]).marked_type, MarkedType::EType);
        assert_eq!(sub(&e6, &[1, 2, 3, 4, 5]).marked_type, MarkedType::DType);
        assert_eq!(sub(&e6, &[1, 3, 4, 5]).marked_type, MarkedType::LinearA);
        let e7 = md(Family::E, 7, 7);
        assert_eq!(sub(&e7, &[2, 3, 4, 5, 6, 7]).marked_type, MarkedType::DType);
        let d5 = md(Family::D, 5, 2);
        assert_eq!(sub(&d5, &[2, 3, 4, 5]).marked_type, MarkedType::DType);
        assert_eq!(sub(&d5, &[1, 2, 3]).marked_type, MarkedType::MiddleA);
        let d3 = md(Family::D, 3, 1);
        assert_eq!(sub(&d3, &[1, 2, 3]).marked_type, MarkedType::MiddleA);
        assert_eq!(
            sub(&md(Family::D, 3, 2), &[1, 2, 3]).marked_type,
            MarkedType::LinearA
        );
    }

    #[test]
    fn invalid_subdiagrams() {
        let m = md(Family::A, 4, 2);
        assert!(matches!(
            Subdiagram::new(&m, &[0, 3]),
            Err(Error::InvalidSubdiagram(_, "marked node missing"))
        ));
        assert!(matches!(
            Subdiagram::new(&m, &[1, 3]),
            Err(Error::InvalidSubdiagram(_, "not connected"))
        ));
    }

    #[test]
    fn schubert_class_examples() {
        for n in 4..=7 {
            let m = md(Family::D, n, 1);
            let labels: Vec<usize> = (1..n).collect();
            let sc = schubert_class(&m, &sub(&m, &labels));
            assert_eq!(sc.k, n - 1);
            let got: Vec<Vec<i32>> = sc.delta_nw.iter().map(|r| r.coeffs().to_vec()).collect();
            let want: Vec<Vec<i32>> = (1..n)
                .map(|l| (0..n).map(|i| (i < l) as i32).collect())
                .collect();
            assert_eq!(got, want);
        }
        let a5 = md(Family::A, 5, 3);
        let d = sub(&a5, &[2, 3, 4]);
        assert_eq!(d.neighborhood, vec![0, 4]);
        assert_eq!(schubert_class(&a5, &d).k, 4);
        let sc = schubert_class(&a5, &sub(&a5, &[3]));
        assert_eq!(sc.k, 1);
        assert_eq!(sc.delta_nw, vec![Root::simple(5, 2)]);
    }

    #[test]
    fn root_set_relations() {
        for m in catalog(6) {
            for d in smooth_schubert_varieties(&m, true) {
                let sc = schubert_class(&m, &d);
                assert_eq!(sc.delta_m.len(), m.dim());
                assert!(sc.delta_nw.iter().all(|r| sc.delta_m.contains(r)));
                assert!(sc.delta_mw.iter().all(|r| !sc.delta_m.contains(r)));
                let mut union: Vec<Root> = sc.delta_mw.clone();
                union.extend(
                    sc.delta_m
                        .iter()
                        .filter(|r| !sc.delta_nw.contains(r))
                        .cloned(),
                );
                assert_eq!(union.len(), sc.delta_n.len());
                assert!(union.iter().all(|r| sc.delta_n.contains(r)));
                let on_delta: Vec<Root> =
                    m.rs.positive_roots_on(&d.nodes)
                        .into_iter()
                        .filter(|r| r.coeff(m.gamma) == 1)
                        .collect();
                assert_eq!(on_delta, sc.delta_nw);
                let w = weyl::longest_in_parabolic(&m.rs, &d.nodes);
                let mut inv: Vec<Root> = w
                    .inversions
                    .into_iter()
                    .filter(|r| r.coeff(m.gamma) == 1)
                    .collect();
                inv.sort_by(|a, b| crate::root_system::root_order(a.coeffs(), b.coeffs()));
                assert_eq!(inv, sc.delta_nw);
                let rep = sc.coset_rep(&m);
                assert_eq!(
                    weyl::inversion_set(&m.rs, &rep.elt.word).unwrap().len(),
                    sc.k
                );
            }
        }
    }

    #[test]
    fn k_values() {
        assert_eq!(k_invariant(&md(Family::D, 5, 1)).unwrap(), 3);
        for n in 4..=8 {
            for m in 2..=n - 2 {
                assert_eq!(k_invariant(&md(Family::A, n - 1, m)).unwrap(), 1);
            }
        }
        for n in 1..=7 {
            assert_eq!(k_invariant(&md(Family::A, n, 1)).unwrap(), n);
        }
        for n in 4..=7 {
            assert_eq!(k_invariant(&md(Family::D, n, 1)).unwrap(), n - 2);
            assert_eq!(k_invariant(&md(Family::D, n, n)).unwrap(), 2);
        }
        assert_eq!(k_invariant(&md(Family::E, 6, 1)).unwrap(), 3);
        assert_eq!(k_invariant(&md(Family::E, 7, 7)).unwrap(), 4);
        assert_eq!(k_invariant(&md(Family::C, 4, 4)).unwrap(), 2);
        for m in catalog(7) {
            if let Some(kd) = k_diagrammatic(&m) {
                assert_eq!(kd, k_invariant(&m).unwrap(), "{m}");
            }
        }
    }

    #[test]
    fn maximal_linear() {
        let d4 = md(Family::D, 4, 1);
        assert!(is_maximal_linear(&d4, &sub(&d4, &[1, 2, 3])).unwrap());
        assert!(!is_maximal_linear(&d4, &sub(&d4, &[1, 2])).unwrap());
        let a3 = md(Family::A, 3, 1);
        assert!(is_maximal_linear(&a3, &sub(&a3, &[1, 2, 3])).unwrap());
        assert!(matches!(
            is_maximal_linear(&d4, &sub(&d4, &[1, 2, 3, 4])),
            Err(Error::WrongType(_))
        ));
        let c4 = md(Family::C, 4, 4);
        assert!(is_maximal_linear(&c4, &sub(&c4, &[4])).unwrap());
    }

    #[test]
    fn stabilizers() {
        let a3 = md(Family::A, 3, 2);
        assert_eq!(stabilizer_nodes(&a3, &sub(&a3, &[2])).unwrap(), vec![1]);
        let a4 = md(Family::A, 4, 2);
        assert_eq!(
            stabilizer_nodes(&a4, &sub(&a4, &[1, 2])).unwrap(),
            vec![0, 1, 3]
        );
        let d4 = md(Family::D, 4, 1);
        assert_eq!(
            stabilizer_nodes(&d4, &sub(&d4, &[1, 2, 3, 4])).unwrap(),
            vec![0, 1, 2, 3]
        );
        for m in catalog(7) {
            for d in smooth_schubert_varieties(&m, true) {
                let s = stabilizer_nodes(&m, &d).unwrap();
                assert!(d.nodes.iter().all(|i| s.contains(i)));
            }
        }
    }
}
