//! Parsing of space, node-list and root arguments.

use hss_rigidity::diagram::MarkedDiagram;
use hss_rigidity::root_system::{Family, Root};
use hss_rigidity::{Error, Result};

fn parse_err(what: &'static str, token: &str) -> Error {
    Error::Parse {
        what,
        token: token.to_string(),
    }
}

fn num(what: &'static str, token: &str) -> Result<usize> {
    token.trim().parse().map_err(|_| parse_err(what, token))
}

/// `TYPErank:gamma` (e.g. `A5:3`, 1-based `gamma`), or one of the names
/// `gr(m,n)`, `qN`, `lgN`, `sN`, `pN`, `e6`, `e7`.
pub fn parse_space(s: &str) -> Result<MarkedDiagram> {
    let (family, rank, gamma) = resolve(s)?;
    let fam = Family::from_letter(family).ok_or_else(|| parse_err("space", s))?;
    if gamma == 0 || gamma > rank {
        return Err(parse_err("marked node", s));
    }
    let md = MarkedDiagram::new(fam, rank, gamma - 1).map_err(|_| parse_err("space", s))?;
    if !md.hermitian {
        return Err(Error::NotCominuscule(gamma));
    }
    Ok(md)
}

fn resolve(s: &str) -> Result<(char, usize, usize)> {
    let t = s.trim().to_ascii_lowercase();
    if let Some(args) = t.strip_prefix("gr(").and_then(|r| r.strip_suffix(')')) {
        let (m, n) = args.split_once(',').ok_or_else(|| parse_err("space", s))?;
        let (m, n) = (num("space", m)?, num("space", n)?);
        if n < 2 || m == 0 || m >= n {
            return Err(parse_err("space", s));
        }
        return Ok(('A', n - 1, m));
    }
    if let Some((head, gamma)) = t.split_once(':') {
        let mut chars = head.chars();
        let family = chars.next().ok_or_else(|| parse_err("space", s))?;
        return Ok((
            family.to_ascii_uppercase(),
            num("rank", chars.as_str())?,
            num("marked node", gamma)?,
        ));
    }
    let named = |prefix: &str| t.strip_prefix(prefix).map(|r| num("space", r));
    if let Some(n) = named("lg") {
        let n = n?;
        return Ok(('C', n, n));
    }
    if let Some(n) = named("q") {
        return match n? {
            d if d >= 3 && d % 2 == 1 => Ok(('B', d.div_ceil(2), 1)),
            d if d >= 4 => Ok(('D', d / 2 + 1, 1)),
            _ => Err(parse_err("space", s)),
        };
    }
    if let Some(n) = named("s") {
        let n = n?;
        return Ok(('D', n, n));
    }
    if let Some(n) = named("p") {
        return Ok(('A', n?, 1));
    }
    match t.as_str() {
        "e6" => Ok(('E', 6, 1)),
        "e7" => Ok(('E', 7, 7)),
        _ => Err(parse_err("space", s)),
    }
}

/// 1-based comma-separated nodes, returned 0-based.
pub fn parse_nodes(s: &str, rank: usize) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| match num("node", t)? {
            0 => Err(parse_err("node", t)),
            j if j > rank => Err(Error::IndexOutOfRange(j, rank)),
            j => Ok(j - 1),
        })
        .collect()
}

pub fn parse_root(s: &str, rank: usize) -> Result<Root> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|_| parse_err("root", t)))
        .collect::<Result<Vec<i32>>>()?;
    if coeffs.len() != rank {
        return Err(parse_err("root", s));
    }
    Root::new(coeffs)
}
