//! The group-spec text grammar: named groups, explicit permutation
//! generators in 1-indexed cycle notation, and the two combinators
//! `product(a,b)` and `swapwreath(a)`.
//!
//! Parsing and serialization round-trip through a canonical form:
//! `spec.to_string()` always reparses to the same AST.

use std::fmt;

use dpjordan_core::examples;
use dpjordan_core::weyl;
use dpjordan_core::{Caps, PermGroup, Permutation};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Symmetries of the regular n-gon, order 2n.
    Dihedral(usize),
    Wd5,
    ExDp4_32,
    ExDp6 {
        n: usize,
    },
    ExDp8Product,
    ExDp8S5,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    SwapWreath(Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, CliError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(CliError::spec("empty group spec"));
        }
        if let Some(inner) = strip_call(text, "product") {
            let args = split_top_level(inner)?;
            if args.len() != 2 {
                return Err(CliError::spec("product(...) takes exactly two specs"));
            }
            return Ok(GroupSpec::Product(
                Box::new(GroupSpec::parse(args[0])?),
                Box::new(GroupSpec::parse(args[1])?),
            ));
        }
        if let Some(inner) = strip_call(text, "swapwreath") {
            return Ok(GroupSpec::SwapWreath(Box::new(GroupSpec::parse(inner)?)));
        }
        if let Some(rest) = text.strip_prefix("perm:") {
            return parse_perm(rest);
        }
        if let Some(rest) = text.strip_prefix("cyclic:") {
            return Ok(GroupSpec::Cyclic(parse_count(rest, "cyclic order")?));
        }
        if let Some(rest) = text.strip_prefix("dihedral:") {
            return Ok(GroupSpec::Dihedral(parse_count(rest, "dihedral degree")?));
        }
        match text {
            "wd5" => return Ok(GroupSpec::Wd5),
            "ex-dp4-32" => return Ok(GroupSpec::ExDp4_32),
            "ex-dp8-product" => return Ok(GroupSpec::ExDp8Product),
            "ex-dp8-s5" => return Ok(GroupSpec::ExDp8S5),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("ex-dp6:n=") {
            return Ok(GroupSpec::ExDp6 {
                n: parse_count(rest, "ex-dp6 parameter")?,
            });
        }
        if let Some(rest) = text.strip_prefix('s') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                return Ok(GroupSpec::Symmetric(parse_count(rest, "symmetric degree")?));
            }
        }
        if let Some(rest) = text.strip_prefix('a') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                return Ok(GroupSpec::Alternating(parse_count(
                    rest,
                    "alternating degree",
                )?));
            }
        }
        Err(CliError::spec(&format!("unrecognized group spec `{text}`")))
    }

    pub fn build(&self, caps: &Caps) -> Result<PermGroup, CliError> {
        match self {
            GroupSpec::Perm { degree, generators } => {
                PermGroup::generate(*degree, generators.clone(), caps).map_err(CliError::from)
            }
            GroupSpec::Symmetric(n) => {
                require(*n >= 1, "symmetric degree must be at least 1")?;
                PermGroup::symmetric(*n, caps).map_err(CliError::from)
            }
            GroupSpec::Alternating(n) => {
                require(*n >= 1, "alternating degree must be at least 1")?;
                PermGroup::alternating(*n, caps).map_err(CliError::from)
            }
            GroupSpec::Cyclic(n) => PermGroup::cyclic(*n, caps).map_err(CliError::from),
            GroupSpec::Dihedral(n) => {
                require(*n >= 3, "dihedral degree must be at least 3")?;
                PermGroup::dihedral(*n, caps).map_err(CliError::from)
            }
            GroupSpec::Wd5 => weyl::full_group(caps).map_err(CliError::from),
            GroupSpec::ExDp4_32 => examples::dp4_sign_group(caps).map_err(CliError::from),
            GroupSpec::ExDp6 { n } => examples::dp6_group(*n, caps).map_err(CliError::from),
            GroupSpec::ExDp8Product => examples::dp8_product_group(caps).map_err(CliError::from),
            GroupSpec::ExDp8S5 => examples::dp8_s5_group(caps).map_err(CliError::from),
            GroupSpec::Product(a, b) => {
                let left = a.build(caps)?;
                let right = b.build(caps)?;
                PermGroup::direct_product(&left, &right, caps).map_err(CliError::from)
            }
            GroupSpec::SwapWreath(a) => {
                let base = a.build(caps)?;
                examples::swap_wreath(&base, caps).map_err(CliError::from)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Perm { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                write!(f, "perm:{degree}:{}", gens.join(";"))
            }
            GroupSpec::Symmetric(n) => write!(f, "s{n}"),
            GroupSpec::Alternating(n) => write!(f, "a{n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Wd5 => write!(f, "wd5"),
            GroupSpec::ExDp4_32 => write!(f, "ex-dp4-32"),
            GroupSpec::ExDp6 { n } => write!(f, "ex-dp6:n={n}"),
            GroupSpec::ExDp8Product => write!(f, "ex-dp8-product"),
            GroupSpec::ExDp8S5 => write!(f, "ex-dp8-s5"),
            GroupSpec::Product(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::SwapWreath(a) => write!(f, "swapwreath({a})"),
        }
    }
}

fn require(cond: bool, message: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::spec(message))
    }
}

fn parse_count(text: &str, what: &str) -> Result<usize, CliError> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| CliError::spec(&format!("invalid {what} `{text}`")))
}

/// Strips `name(` ... `)` around the whole string, if present.
fn strip_call<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    let body = text.strip_prefix(name)?.strip_prefix('(')?;
    body.strip_suffix(')')
}

/// Splits on commas at parenthesis depth zero.
fn split_top_level(text: &str) -> Result<Vec<&str>, CliError> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| CliError::spec("unbalanced parentheses"))?;
            }
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(CliError::spec("unbalanced parentheses"));
    }
    parts.push(text[start..].trim());
    Ok(parts)
}

fn parse_perm(rest: &str) -> Result<GroupSpec, CliError> {
    let (degree_text, gens_text) = rest
        .split_once(':')
        .ok_or_else(|| CliError::spec("perm spec needs `perm:<degree>:<gens>`"))?;
    let degree = parse_count(degree_text, "permutation degree")?;
    if degree == 0 {
        return Err(CliError::spec("permutation degree must be at least 1"));
    }
    let mut generators = Vec::new();
    for gen_text in gens_text.split(';') {
        let gen_text = gen_text.trim();
        if gen_text.is_empty() {
            continue;
        }
        generators.push(parse_cycles(gen_text, degree)?);
    }
    Ok(GroupSpec::Perm { degree, generators })
}

/// Parses a product of 1-indexed cycles like "(1 2 3)(4 5)"; cycles are
/// applied right to left. "()" is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, CliError> {
    let text = text.trim();
    if !text.starts_with('(') || !text.ends_with(')') {
        return Err(CliError::spec(&format!(
            "cycles must be parenthesized, got `{text}`"
        )));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for chunk in text[1..text.len() - 1].split(")(") {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for token in chunk.split_whitespace() {
            let point: usize = token
                .parse()
                .map_err(|_| CliError::spec(&format!("invalid point `{token}`")))?;
            if point == 0 || point > degree {
                return Err(CliError::spec(&format!(
                    "point {point} is outside 1..{degree}"
                )));
            }
            cycle.push(point - 1);
        }
        if cycle.len() < 2 {
            return Err(CliError::spec("cycles need at least two points"));
        }
        cycles.push(cycle);
    }
    Permutation::from_cycles(degree, &cycles).map_err(CliError::from)
}
