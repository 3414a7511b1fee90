//! Schur-rigidity verdicts, their expected values, catalog verification and
//! serialization.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{
    catalog, is_maximal_linear, k_invariant, maximal_linear_extension, schubert_class,
    smooth_schubert_varieties, MarkedDiagram, MarkedType, SchubertClass, Subdiagram,
};
use crate::error::{Error, Result};
use crate::kostant::Kostant;
use crate::rigidity::{compute_d, schubert_rigidity_certificate, DSets, SchubertVerdict};
use crate::root_system::{Family, Root};
use crate::schur::{grassmann_equality_certificate, Obstruction};
use crate::weyl;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceId {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    /// 1-based marked node.
    pub gamma: usize,
}

impl SpaceId {
    fn of(md: &MarkedDiagram) -> SpaceId {
        SpaceId {
            family: md.rs.cartan_type.family.letter().to_string(),
            rank: md.rank(),
            gamma: md.gamma + 1,
        }
    }
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}:{}", self.family, self.rank, self.gamma)
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchubertCert {
    /// `D' = ∅`.
    CertifiedByDprime,
    /// Maximal linear space with `D' ≠ ∅`; rigidity taken from the literature.
    AssertedMaximalLinear,
    None,
}

/// Which published argument covers an equality `B_w = R_w` that was not
/// machine-checked.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PaperReason {
    /// Linear chains.
    SchurHSS,
    /// `D`- and `C`-type subdiagrams.
    SchurHSSD,
    /// Sub-Grassmannians.
    #[serde(rename = "smoothSchur")]
    SmoothSchur,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EqualityCert {
    CertifiedByMembership,
    CertifiedByKostka,
    AssertedByPaper(PaperReason),
    None,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    SchurRigid,
    NotSchurRigid,
    NotCertified,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::SchurRigid => "SchurRigid",
            Verdict::NotSchurRigid => "NotSchurRigid",
            Verdict::NotCertified => "NotCertified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub space: SpaceId,
    /// 1-based nodes of `δ`.
    pub delta: Vec<usize>,
    pub delta_type: MarkedType,
    pub k: usize,
    pub k_gp: usize,
    #[serde(rename = "D")]
    pub d: Vec<Root>,
    #[serde(rename = "Dprime")]
    pub dprime: Vec<Root>,
    #[serde(rename = "Ddoubleprime")]
    pub ddoubleprime: Vec<Root>,
    pub schubert_cert: SchubertCert,
    pub equality_cert: EqualityCert,
    pub homology_rank_one: bool,
    pub trivial: bool,
    pub verdict: Verdict,
    pub expected: Verdict,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RigidityReport {
    /// A `SchurRigid` verdict resting on a cited rather than computed step.
    pub fn is_asserted(&self) -> bool {
        self.verdict == Verdict::SchurRigid
            && (matches!(self.equality_cert, EqualityCert::AssertedByPaper(_))
                || self.schubert_cert == SchubertCert::AssertedMaximalLinear)
    }
}

/// Per-space data shared by every `δ`.
pub struct SpaceContext {
    pub md: MarkedDiagram,
    pub k_gp: usize,
    pub profile: Vec<usize>,
    pub kostant: Kostant,
}

impl SpaceContext {
    pub fn new(md: &MarkedDiagram, bound: u128, sign_seed: Option<u64>) -> Result<SpaceContext> {
        md.require_hermitian()?;
        let profile = weyl::length_profile(&weyl::enumerate_wp(&md.rs, md.gamma)?);
        let kostant = match sign_seed {
            Some(seed) => Kostant::with_sign_seed(md, bound, seed)?,
            None => Kostant::new(md, bound)?,
        };
        Ok(SpaceContext {
            md: md.clone(),
            k_gp: k_invariant(md)?,
            profile,
            kostant,
        })
    }
}

/// Expected verdict: not Schur rigid exactly for odd quadrics and
/// non-maximal linear spaces.
pub fn expected_verdict(md: &MarkedDiagram, delta: &Subdiagram) -> Result<Verdict> {
    if delta.is_full(md) {
        return Ok(Verdict::SchurRigid);
    }
    if md.odd_quadric
        || (delta.marked_type == MarkedType::LinearA && !is_maximal_linear(md, delta)?)
    {
        Ok(Verdict::NotSchurRigid)
    } else {
        Ok(Verdict::SchurRigid)
    }
}

fn schubert_cert(md: &MarkedDiagram, ds: &DSets, delta: &Subdiagram) -> Result<SchubertCert> {
    Ok(match schubert_rigidity_certificate(ds, delta)? {
        SchubertVerdict::CertifiedRigid => SchubertCert::CertifiedByDprime,
        SchubertVerdict::NoCertificate { .. } if is_maximal_linear(md, delta)? => {
            SchubertCert::AssertedMaximalLinear
        }
        SchubertVerdict::NoCertificate { .. } => SchubertCert::None,
    })
}

fn paper_reason(t: MarkedType) -> Option<PaperReason> {
    match t {
        MarkedType::LinearA => Some(PaperReason::SchurHSS),
        MarkedType::DType | MarkedType::CType => Some(PaperReason::SchurHSSD),
        MarkedType::MiddleA => Some(PaperReason::SmoothSchur),
        _ => None,
    }
}

fn equality_cert(
    ctx: &SpaceContext,
    sc: &SchubertClass,
    ds: &DSets,
) -> Result<(EqualityCert, Option<String>)> {
    let md = &ctx.md;
    let dpp = ds.ddoubleprime();
    if dpp.is_empty() {
        return Ok((EqualityCert::CertifiedByMembership, None));
    }
    if ctx.kostant.check_bound(sc.k).is_ok() {
        for lambda in &dpp {
            match ctx.kostant.membership_test(sc, lambda) {
                Ok(false) => {}
                Ok(true) => {
                    return Ok((
                        EqualityCert::None,
                        Some(format!("phi for {lambda} lies in I_w")),
                    ))
                }
                Err(Error::DegenerateWedge(c)) => {
                    return Ok((
                        EqualityCert::None,
                        Some(format!("degenerate wedge at {c:?}")),
                    ));
                }
                Err(e) => return Err(e),
            }
        }
        return Ok((EqualityCert::CertifiedByMembership, None));
    }
    let t = sc.delta.marked_type;
    if md.rs.cartan_type.family == Family::A
        && matches!(t, MarkedType::LinearA | MarkedType::MiddleA)
    {
        let n = md.rank() + 1;
        let m = md.gamma + 1;
        let first = sc.delta.nodes[0] + 1;
        let last = sc.delta.nodes[sc.delta.nodes.len() - 1] + 1;
        let (p, q) = (last + 1 - m, m + 1 - first);
        match grassmann_equality_certificate(m, n, p, q, Some(&ctx.kostant)) {
            Ok(cert)
                if cert
                    .entries
                    .iter()
                    .all(|(_, o)| *o != Obstruction::ReducedPerPaper) =>
            {
                return Ok((EqualityCert::CertifiedByKostka, None));
            }
            Ok(_) | Err(Error::ExcludedCase) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(match paper_reason(t) {
        Some(r) => (
            EqualityCert::AssertedByPaper(r),
            Some(format!("oracle bound exceeded (C({}, {}))", md.dim(), sc.k)),
        ),
        None => (EqualityCert::None, Some("no certificate available".into())),
    })
}

/// Combines every certificate for `δ` into a report.
pub fn assemble(ctx: &SpaceContext, delta: &Subdiagram) -> Result<RigidityReport> {
    let md = &ctx.md;
    let sc = schubert_class(md, delta);
    let ds = compute_d(md, &sc)?;
    let trivial = delta.is_full(md);
    let homology_rank_one = ctx.profile[sc.k] == 1;
    let linear_nonmax = delta.marked_type == MarkedType::LinearA && !is_maximal_linear(md, delta)?;
    let s_cert = schubert_cert(md, &ds, delta)?;
    let (e_cert, verdict, note) = if trivial {
        (
            EqualityCert::CertifiedByMembership,
            Verdict::SchurRigid,
            Some("trivial: X_w = G/P".to_string()),
        )
    } else if homology_rank_one && sc.k < md.dim() {
        (
            EqualityCert::None,
            Verdict::NotSchurRigid,
            Some(format!("H_{} has rank one", 2 * sc.k)),
        )
    } else if linear_nonmax {
        let ext = maximal_linear_extension(md, delta)?;
        let note = format!(
            "contained in the maximal linear space {:?}; thm1: Z_k(G/P,[X_w]) consists of Schubert varieties",
            ext.labels()
        );
        (EqualityCert::None, Verdict::NotSchurRigid, Some(note))
    } else {
        let (e, why) = equality_cert(ctx, &sc, &ds)?;
        let v = if s_cert != SchubertCert::None && e != EqualityCert::None {
            Verdict::SchurRigid
        } else {
            Verdict::NotCertified
        };
        (e, v, why)
    };
    let expected = expected_verdict(md, delta)?;
    Ok(RigidityReport {
        space: SpaceId::of(md),
        delta: delta.labels(),
        delta_type: delta.marked_type,
        k: sc.k,
        k_gp: ctx.k_gp,
        d: ds.d(),
        dprime: ds.dprime(),
        ddoubleprime: ds.ddoubleprime(),
        schubert_cert: s_cert,
        equality_cert: e_cert,
        homology_rank_one,
        trivial,
        verdict,
        expected,
        matches: verdict == expected,
        note,
    })
}

/// Report for one `(space, δ)` with `δ` given as 0-based nodes.
pub fn report_for(md: &MarkedDiagram, nodes: &[usize], bound: u128) -> Result<RigidityReport> {
    let ctx = SpaceContext::new(md, bound, None)?;
    let delta = Subdiagram::new(md, nodes)?;
    assemble(&ctx, &delta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    /// Matches that rest on an asserted certificate.
    pub asserted: usize,
    /// Full diagrams, excluded from the counts above.
    pub trivial: usize,
}

impl Summary {
    pub fn of(reports: &[RigidityReport]) -> Summary {
        let counted: Vec<_> = reports.iter().filter(|r| !r.trivial).collect();
        Summary {
            total: counted.len(),
            matched: counted.iter().filter(|r| r.matches).count(),
            mismatched: counted.iter().filter(|r| !r.matches).count(),
            asserted: counted
                .iter()
                .filter(|r| r.matches && r.is_asserted())
                .count(),
            trivial: reports.len() - counted.len(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub bound: u128,
    pub sign_seed: Option<u64>,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: 7,
            bound: crate::kostant::DEFAULT_ORACLE_BOUND,
            sign_seed: None,
            jobs: 1,
        }
    }
}

/// Reports for every smooth Schubert variety (full diagram included) of
/// every cataloged space, in catalog order.
pub fn catalog_reports(opts: &VerifyOptions) -> Result<Vec<RigidityReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    pool.install(|| {
        let spaces = catalog(opts.max_rank);
        let contexts = spaces
            .par_iter()
            .map(|md| SpaceContext::new(md, opts.bound, opts.sign_seed))
            .collect::<Result<Vec<_>>>()?;
        let work: Vec<(&SpaceContext, Subdiagram)> = contexts
            .iter()
            .flat_map(|ctx| {
                smooth_schubert_varieties(&ctx.md, true)
                    .into_iter()
                    .map(move |d| (ctx, d))
            })
            .collect();
        work.par_iter().map(|(ctx, d)| assemble(ctx, d)).collect()
    })
}

/// Runs the catalog; any mismatch is an error carrying the offending
/// reports.
pub fn verify_main_theorem(opts: &VerifyOptions) -> Result<Summary> {
    let reports = catalog_reports(opts)?;
    let summary = Summary::of(&reports);
    if summary.mismatched > 0 {
        return Err(Error::MismatchFound {
            reports: reports
                .into_iter()
                .filter(|r| !r.trivial && !r.matches)
                .collect(),
        });
    }
    Ok(summary)
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Csv,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

fn roots_str(rs: &[Root]) -> String {
    serde_json::to_string(rs).expect("roots serialize")
}

fn cert_str<T: Serialize>(c: &T) -> String {
    match serde_json::to_value(c).expect("certificates serialize") {
        serde_json::Value::String(s) => s,
        serde_json::Value::Object(o) => o
            .iter()
            .map(|(k, v)| format!("{k}({})", v.as_str().unwrap_or_default()))
            .collect(),
        v => v.to_string(),
    }
}

const COLUMNS: [&str; 14] = [
    "space",
    "delta",
    "delta_type",
    "k",
    "k_gp",
    "D",
    "Dprime",
    "Ddoubleprime",
    "schubert_cert",
    "equality_cert",
    "homology_rank_one",
    "verdict",
    "expected",
    "match",
];

fn row(r: &RigidityReport) -> [String; 14] {
    [
        r.space.to_string(),
        serde_json::to_string(&r.delta).expect("nodes serialize"),
        r.delta_type.to_string(),
        r.k.to_string(),
        r.k_gp.to_string(),
        roots_str(&r.d),
        roots_str(&r.dprime),
        roots_str(&r.ddoubleprime),
        cert_str(&r.schubert_cert),
        cert_str(&r.equality_cert),
        r.homology_rank_one.to_string(),
        r.verdict.name().to_string(),
        r.expected.name().to_string(),
        r.matches.to_string(),
    ]
}

/// Serializes reports. A single report becomes a JSON object, several an
/// array.
pub fn emit(reports: &[RigidityReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = if let [one] = reports {
                serde_json::to_string_pretty(one)
            } else {
                serde_json::to_string_pretty(reports)
            }
            .map_err(|e| Error::Parse {
                what: "json",
                token: e.to_string(),
            })?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse {
                what: "csv",
                token: e.to_string(),
            };
            w.write_record(COLUMNS).map_err(io)?;
            for r in reports {
                w.write_record(row(r)).map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| io(e.into_error().into()))?)
                .expect("csv is utf-8")
        }
        Format::Table => {
            let skip = [5, 6, 7];
            let rows: Vec<[String; 14]> = reports.iter().map(row).collect();
            let cols: Vec<usize> = (0..COLUMNS.len()).filter(|c| !skip.contains(c)).collect();
            let width: Vec<usize> = cols
                .iter()
                .map(|&c| {
                    rows.iter()
                        .map(|r| r[c].chars().count())
                        .chain([COLUMNS[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut out = String::new();
            let mut line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&width)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            };
            line(cols.iter().map(|&c| COLUMNS[c]).collect());
            for r in &rows {
                line(cols.iter().map(|&c| r[c].as_str()).collect());
            }
            out
        }
        Format::Dot => {
            let mut out = String::new();
            for r in reports {
                let md = MarkedDiagram::new(
                    Family::from_letter(r.space.family.chars().next().unwrap_or('?')).ok_or_else(
                        || Error::Parse {
                            what: "family",
                            token: r.space.family.clone(),
                        },
                    )?,
                    r.space.rank,
                    r.space.gamma - 1,
                )?;
                out.push_str(&dot(&md, &r.delta));
            }
            out
        }
    })
}

/// The marked diagram with `γ` drawn as "×" and the 1-based nodes of
/// `delta` boxed.
pub fn dot(md: &MarkedDiagram, delta: &[usize]) -> String {
    let n = md.rank();
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{md}\" {{");
    let _ = writeln!(out, "  rankdir=LR;");
    for i in 0..n {
        let label = if i == md.gamma {
            "×".to_string()
        } else {
            format!("α{}", i + 1)
        };
        let shape = if delta.contains(&(i + 1)) {
            "box"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  a{} [label=\"{label}\", shape={shape}];", i + 1);
    }
    for i in 0..n {
        for j in i + 1..n {
            match md.rs.edge(i, j) {
                0 => {}
                1 => {
                    let _ = writeln!(out, "  a{} -- a{};", i + 1, j + 1);
                }
                k => {
                    // the arrow points to the shorter root
                    let (long, short) = if md.rs.simple_norm(i) > md.rs.simple_norm(j) {
                        (i, j)
                    } else {
                        (j, i)
                    };
                    let colors = vec!["black"; k as usize].join(":invis:");
                    let _ = writeln!(
                        out,
                        "  a{} -- a{} [color=\"{colors}\", dir=forward, arrowhead=vee];",
                        long + 1,
                        short + 1
                    );
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
