//! Partitions, semistandard tableaux and Kostka numbers, with the weight
//! obstruction for rectangular Schubert varieties in Grassmannians.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{schubert_class, MarkedDiagram, Subdiagram};
use crate::error::{Error, Result};
use crate::kostant::{Kostant, WedgeVector};
use crate::rigidity::compute_d;
use crate::root_system::{Family, Root};

/// A weakly decreasing sequence of nonnegative parts; trailing zeros are
/// dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                what: "partition",
                token: format!("{parts:?}"),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// The rectangle `(p^q)`: `q` rows of length `p`.
    pub fn rectangle(p: u32, q: u32) -> Partition {
        Partition(if p == 0 {
            Vec::new()
        } else {
            vec![p; q as usize]
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a'_i = #{j : a_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&a| a >= i).count() as u32)
                .collect(),
        )
    }

    /// `a* = (n-m-a_m, ..., n-m-a_1)` for `a` inside the `m × (n-m)` box.
    pub fn dual(&self, m: usize, n: usize) -> Result<Partition> {
        let width = n
            .checked_sub(m)
            .ok_or(Error::OutOfBox(self.0.clone(), m, 0))? as u32;
        if self.len() > m || self.0.first().is_some_and(|&a| a > width) {
            return Err(Error::OutOfBox(self.0.clone(), m, width as usize));
        }
        let padded: Vec<u32> = (0..m)
            .map(|i| self.0.get(i).copied().unwrap_or(0))
            .collect();
        Partition::new(padded.iter().rev().map(|a| width - a).collect())
    }

    /// All partitions of `k` inside the `rows × cols` box, in reverse
    /// lexicographic order.
    pub fn boxed(k: u32, rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(k: u32, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if k == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for part in (1..=max.min(k)).rev() {
                cur.push(part);
                rec(k - part, rows - 1, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        Partition::new(parse_list(s, "partition")?)
    }
}

pub(crate) fn parse_list(s: &str, what: &'static str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| Error::Parse {
                what,
                token: t.trim().to_string(),
            })
        })
        .collect()
}

/// Ways to add a horizontal strip of size `k` to `inner` staying inside
/// `outer`.
fn horizontal_strips(inner: &[u32], outer: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn rec(
        i: usize,
        left: u32,
        inner: &[u32],
        outer: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == outer.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let base = inner.get(i).copied().unwrap_or(0);
        // a horizontal strip never extends row i past the old row i-1
        let cap = if i == 0 {
            outer[0]
        } else {
            outer[i].min(inner[i - 1])
        };
        for new in base..=cap.max(base) {
            let add = new - base;
            if add > left {
                break;
            }
            cur.push(new);
            rec(i + 1, left - add, inner, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        k,
        inner,
        outer,
        &mut Vec::with_capacity(outer.len()),
        &mut out,
    );
    out
}

fn count_fillings(shape: &[u32], content: &[u32]) -> u64 {
    let mut memo: HashMap<(usize, Vec<u32>), u64> = HashMap::new();
    fn rec(
        step: usize,
        cur: Vec<u32>,
        shape: &[u32],
        content: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        if step == content.len() {
            return (cur == shape) as u64;
        }
        if let Some(&v) = memo.get(&(step, cur.clone())) {
            return v;
        }
        let total = horizontal_strips(&cur, shape, content[step])
            .into_iter()
            .map(|next| rec(step + 1, next, shape, content, memo))
            .sum();
        memo.insert((step, cur), total);
        total
    }
    rec(0, vec![0; shape.len()], shape, content, &mut memo)
}

/// Number of semistandard tableaux of shape `a` and content `b`
/// (`b_i` copies of `i`).
pub fn kostka(a: &Partition, b: &[u32]) -> Result<u64> {
    let content: u32 = b.iter().sum();
    if content != a.size() {
        return Err(Error::ContentMismatch {
            content,
            boxes: a.size(),
        });
    }
    Ok(count_fillings(a.parts(), b))
}

pub fn kostka_positive(a: &Partition, b: &[u32]) -> Result<bool> {
    Ok(kostka(a, b)? > 0)
}

/// `dim S_a(C^n)`: semistandard tableaux of shape `a` with entries `≤ n`.
pub fn schur_dim(a: &Partition, n: usize) -> u64 {
    if a.len() > n {
        return 0;
    }
    let shape = a.parts();
    let mut memo: HashMap<(usize, Vec<u32>), u64> = HashMap::new();
    fn rec(
        step: usize,
        n: usize,
        cur: Vec<u32>,
        shape: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        if cur == shape {
            return 1;
        }
        if step == n {
            return 0;
        }
        if let Some(&v) = memo.get(&(step, cur.clone())) {
            return v;
        }
        let remaining: u32 = shape.iter().sum::<u32>() - cur.iter().sum::<u32>();
        let total = (0..=remaining)
            .flat_map(|k| horizontal_strips(&cur, shape, k))
            .map(|next| rec(step + 1, n, next, shape, memo))
            .sum();
        memo.insert((step, cur), total);
        total
    }
    rec(0, n, vec![0; shape.len()], shape, &mut memo)
}

/// Which Schur factor rules out a weight.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    E,
    Q,
}

/// Why `φ_λ` cannot lie in `I_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// The content of `φ_λ` is not a weight of one Schur factor.
    Direct {
        side: Side,
        e_content: Vec<u32>,
        q_content: Vec<u32>,
    },
    /// `ad(x_β) φ_λ` is nonzero with a weight that is not a weight of `I_w`.
    Lowered {
        beta: Root,
        side: Side,
        e_content: Vec<u32>,
        q_content: Vec<u32>,
    },
    /// No weight argument found here; the reduction step is taken as given.
    ReducedPerPaper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum EqualityVerdict {
    EqualityCertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannCertificate {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// Each `λ ∈ D''` with its obstruction.
    pub entries: Vec<(Root, Obstruction)>,
    /// Membership of each `φ_λ` in `I_w`, when the oracle was run.
    pub membership: Option<Vec<bool>>,
    pub verdict: EqualityVerdict,
}

/// `(E-content, Q-content)` of a monomial in `∧^k(E ⊗ Q^*)`: the root
/// `α_a + ... + α_b` (with `a ≤ m ≤ b`) is `e_i^* ⊗ q_j` for
/// `i = m - a + 1`, `j = b - m + 1`.
pub fn grassmann_contents(
    md: &MarkedDiagram,
    mask: u64,
    m: usize,
    n: usize,
) -> (Vec<u32>, Vec<u32>) {
    let mut e = vec![0u32; m];
    let mut qc = vec![0u32; n - m];
    for (idx, r) in md.m_roots().iter().enumerate() {
        if mask >> idx & 1 == 0 {
            continue;
        }
        let supp = r.support();
        let a = supp[0] + 1;
        let b = supp[supp.len() - 1] + 1;
        e[m - a] += 1;
        qc[b - m] += 1;
    }
    (e, qc)
}

fn obstructed_side(
    shape_e: &Partition,
    shape_q: &Partition,
    e: &[u32],
    qc: &[u32],
) -> Result<Option<Side>> {
    if !kostka_positive(shape_e, e)? {
        Ok(Some(Side::E))
    } else if !kostka_positive(shape_q, qc)? {
        Ok(Some(Side::Q))
    } else {
        Ok(None)
    }
}

/// The subdiagram `α_{m-q+1}, ..., α_{m+p-1}` of `(A_{n-1}, α_m)`, 1-based.
pub fn rectangle_subdiagram(md: &MarkedDiagram, p: usize, q: usize) -> Result<Subdiagram> {
    let m = md.gamma + 1;
    let nodes: Vec<usize> = (m - q..m + p - 1).collect();
    Subdiagram::new(md, &nodes)
}

/// Weight obstructions showing `φ_λ ∉ I_w` for every `λ ∈ D''` of the
/// rectangle `a = (p^q)` in `Gr(m, n)`. With a [`Kostant`] context the
/// remaining cases are handled by one lowering step and all verdicts are
/// cross-checked by the membership oracle when within its bound.
pub fn grassmann_equality_certificate(
    m: usize,
    n: usize,
    p: usize,
    q: usize,
    kostant: Option<&Kostant>,
) -> Result<GrassmannCertificate> {
    if (p, q) == (1, 1) {
        return Err(Error::ExcludedCase);
    }
    if q < 1 || q > m || p < 1 || p + m > n {
        return Err(Error::OutOfBox(vec![p as u32; q], m, n.saturating_sub(m)));
    }
    let md = MarkedDiagram::new(Family::A, n - 1, m - 1)?;
    let delta = rectangle_subdiagram(&md, p, q)?;
    let sc = schubert_class(&md, &delta);
    let ds = compute_d(&md, &sc)?;
    let shape_e = Partition::rectangle(p as u32, q as u32);
    let shape_q = shape_e.conjugate();
    let ko = kostant;
    if ko.is_some_and(|k| k.md != md) {
        return Err(Error::PreconditionFailed(
            "Kostant context is for another space".into(),
        ));
    }
    let mut entries = Vec::new();
    for lambda in ds.ddoubleprime() {
        let sigma = md.rs.reflect(&lambda, md.gamma);
        let g = md.m_index(&Root::simple(n - 1, m - 1)).expect("α_γ ∈ m");
        let s = md
            .m_index(&sigma)
            .ok_or_else(|| Error::NotInM(sigma.coeffs().to_vec()))?;
        let nw = sc.nw_mask(&md);
        if s != g && nw >> s & 1 == 1 {
            return Err(Error::DegenerateWedge(sigma.coeffs().to_vec()));
        }
        let phi = nw & !(1 << g) | 1 << s;
        let (e, qc) = grassmann_contents(&md, phi, m, n);
        let obstruction = if let Some(side) = obstructed_side(&shape_e, &shape_q, &e, &qc)? {
            Obstruction::Direct {
                side,
                e_content: e,
                q_content: qc,
            }
        } else if let Some(ko) = ko {
            lowered(ko, &shape_e, &shape_q, phi, m, n)?.unwrap_or(Obstruction::ReducedPerPaper)
        } else {
            Obstruction::ReducedPerPaper
        };
        entries.push((lambda, obstruction));
    }
    let membership = match ko {
        Some(ko) if ko.check_bound(sc.k).is_ok() => {
            let verdicts = entries
                .iter()
                .map(|(l, _)| ko.membership_test(&sc, l))
                .collect::<Result<Vec<bool>>>()?;
            if verdicts.iter().any(|&v| v) {
                return Err(Error::InternalContradiction(format!(
                    "a weight-obstructed φ lies in I_w for Gr({m},{n}), (p,q) = ({p},{q})"
                )));
            }
            Some(verdicts)
        }
        _ => None,
    };
    Ok(GrassmannCertificate {
        m,
        n,
        p,
        q,
        entries,
        membership,
        verdict: EqualityVerdict::EqualityCertified,
    })
}

fn lowered(
    ko: &Kostant,
    shape_e: &Partition,
    shape_q: &Partition,
    phi: u64,
    m: usize,
    n: usize,
) -> Result<Option<Obstruction>> {
    let v = WedgeVector::monomial(phi);
    for &b in &ko.action.levi {
        let img = ko.action.act(b, &v);
        let Some(&mask) = img.terms.keys().next() else {
            continue;
        };
        let (e, qc) = grassmann_contents(&ko.md, mask, m, n);
        if let Some(side) = obstructed_side(shape_e, shape_q, &e, &qc)? {
            return Ok(Some(Obstruction::Lowered {
                beta: Root::new(ko.cb.root(b).to_vec())?,
                side,
                e_content: e,
                q_content: qc,
            }));
        }
    }
    Ok(None)
}
