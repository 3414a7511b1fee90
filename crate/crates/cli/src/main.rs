mod spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hss_rigidity::diagram::{
    catalog, k_invariant, schubert_class, smooth_schubert_varieties, Subdiagram,
};
use hss_rigidity::kostant::{Kostant, DEFAULT_ORACLE_BOUND};
use hss_rigidity::report::{catalog_reports, emit, report_for, Format, Summary, VerifyOptions};
use hss_rigidity::rigidity::compute_d;
use hss_rigidity::schur::{kostka, Partition};
use hss_rigidity::{Error, Result};

#[derive(Parser)]
#[command(
    name = "schubert-rigidity",
    version,
    about = "Schur rigidity of smooth Schubert varieties in Hermitian symmetric spaces"
)]
struct Cli {
    /// Largest C(dim m, k) the wedge-power oracles will touch; 0 disables them.
    #[arg(long, global = true, env = "SCHUBERT_ORACLE_BOUND", default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Hermitian symmetric spaces up to a given rank.
    ListSpaces {
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
    },
    /// Enumerate the smooth Schubert varieties of a space.
    Schubert { space: String },
    /// Rigidity report for one smooth Schubert variety.
    Rigidity {
        space: String,
        /// 1-based nodes of the subdiagram, e.g. 2,3,4.
        #[arg(long)]
        delta: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Irreducible Levi components of the k-th wedge power of m.
    Decompose {
        space: String,
        #[arg(short)]
        k: usize,
    },
    /// Run one of the exact oracles.
    Oracle {
        kind: OracleKind,
        space: String,
        #[arg(long)]
        delta: String,
        /// Root coefficients for the membership test; defaults to all of D''.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Check computed against expected verdicts over the whole catalog.
    VerifyMainTheorem {
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
        /// Print every report in this format before the summary.
        #[arg(long)]
        format: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Draw the extraspecial structure-constant signs from this seed.
        #[arg(long)]
        sign_seed: Option<u64>,
    },
    /// Tableau combinatorics.
    Tableau {
        #[command(subcommand)]
        op: TableauOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    H11,
    H1,
    Membership,
}

#[derive(Subcommand)]
enum TableauOp {
    /// Number of semistandard tableaux of shape SHAPE and content CONTENT.
    Kostka { shape: String, content: String },
}

fn subdiagram(
    space: &str,
    delta: &str,
) -> Result<(hss_rigidity::diagram::MarkedDiagram, Subdiagram)> {
    let md = spec::parse_space(space)?;
    let nodes = spec::parse_nodes(delta, md.rank())?;
    let sd = Subdiagram::new(&md, &nodes)?;
    Ok((md, sd))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let bound = cli.oracle_bound;
    let mut out = String::new();
    match cli.command {
        Command::ListSpaces { max_rank } => {
            for md in catalog(max_rank) {
                let tag = if md.odd_quadric { "  odd quadric" } else { "" };
                out += &format!("{md}\tdim={}\tk={}{tag}\n", md.dim(), k_invariant(&md)?);
            }
        }
        Command::Schubert { space } => {
            let md = spec::parse_space(&space)?;
            for d in smooth_schubert_varieties(&md, true) {
                let sc = schubert_class(&md, &d);
                let nodes: Vec<String> = d.labels().iter().map(usize::to_string).collect();
                out += &format!("{}\t{}\tdim={}\n", nodes.join(","), d.marked_type, sc.k);
            }
        }
        Command::Rigidity {
            space,
            delta,
            format,
        } => {
            let format: Format = format.parse()?;
            let md = spec::parse_space(&space)?;
            let nodes = spec::parse_nodes(&delta, md.rank())?;
            let r = report_for(&md, &nodes, bound)?;
            out = emit(&[r], format)?;
        }
        Command::Decompose { space, k } => {
            let md = spec::parse_space(&space)?;
            let ko = Kostant::new(&md, bound)?;
            let comps = ko.decompose(k)?;
            let total: usize = comps.iter().map(|c| c.dim).sum();
            for c in &comps {
                let word: Vec<String> = c.word.iter().map(|j| format!("s{}", j + 1)).collect();
                let roots: Vec<String> = md
                    .m_roots()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| c.ideal >> i & 1 == 1)
                    .map(|(_, r)| r.to_string())
                    .collect();
                let word = if word.is_empty() {
                    "1".to_string()
                } else {
                    word.join(" ")
                };
                out += &format!(
                    "w = {word}\tdim = {}\tDelta(w) = {{{}}}\n",
                    c.dim,
                    roots.join(", ")
                );
            }
            out += &format!("total {total} = C({}, {k})\n", md.dim());
        }
        Command::Oracle {
            kind,
            space,
            delta,
            lambda,
        } => {
            let (md, sd) = subdiagram(&space, &delta)?;
            let sc = schubert_class(&md, &sd);
            let ko = Kostant::new(&md, bound)?;
            match kind {
                OracleKind::H11 => out += &format!("{}\n", ko.h11_oracle(&sc)),
                OracleKind::H1 => {
                    let h = ko.h1_oracle(&sc);
                    out += &format!(
                        "kernel={} cokernel={} total={}\n",
                        h.kernel, h.cokernel, h.total
                    );
                }
                OracleKind::Membership => {
                    let lambdas = match lambda {
                        Some(l) => vec![spec::parse_root(&l, md.rank())?],
                        None => compute_d(&md, &sc)?.ddoubleprime(),
                    };
                    for l in lambdas {
                        let inside = ko.membership_test(&sc, &l)?;
                        out += &format!("{l}\t{}\n", if inside { "in I_w" } else { "not in I_w" });
                    }
                }
            }
        }
        Command::VerifyMainTheorem {
            max_rank,
            format,
            jobs,
            sign_seed,
        } => {
            let format = format.map(|f| f.parse::<Format>()).transpose()?;
            let opts = VerifyOptions {
                max_rank,
                bound,
                sign_seed,
                jobs,
            };
            let reports = catalog_reports(&opts)?;
            let s = Summary::of(&reports);
            if let Some(f) = format {
                out += &emit(&reports, f)?;
            }
            let bad: Vec<_> = reports
                .iter()
                .filter(|r| !r.trivial && !r.matches)
                .cloned()
                .collect();
            if !bad.is_empty() && format.is_none() {
                out += &emit(&bad, Format::Table)?;
            }
            out += &format!(
                "total={} matched={} mismatched={} asserted={} trivial={}\n",
                s.total, s.matched, s.mismatched, s.asserted, s.trivial
            );
            return Ok((out, s.mismatched == 0));
        }
        Command::Tableau {
            op: TableauOp::Kostka { shape, content },
        } => {
            let a: Partition = shape.parse()?;
            let b: Vec<u32> = content
                .split(',')
                .map(|t| {
                    t.trim().parse().map_err(|_| Error::Parse {
                        what: "content",
                        token: t.trim().to_string(),
                    })
                })
                .collect::<Result<_>>()?;
            out += &format!("{}\n", kostka(&a, &b)?);
        }
    }
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
