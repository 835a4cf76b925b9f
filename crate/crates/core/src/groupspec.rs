//! Group specifications: generators in cycle notation, or a named group.
//!
//! Grammar: generators separated by `;`, each a product of disjoint cycles
//! `(a b c)(d e)` over the points `1..=n`, with `()` for the identity.
//! Whitespace is ignored except as a separator between points.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{closure, PermError, PermGroup, Permutation, MAX_DEGREE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupSpecError {
    #[error("empty group specification")]
    Empty,
    #[error("empty generator at position {0}")]
    EmptyGenerator(usize),
    #[error("unbalanced parentheses in {0:?}")]
    Unbalanced(String),
    #[error("unexpected {0:?} in {1:?}")]
    BadToken(String, String),
    #[error("point {0} repeated in {1:?}")]
    RepeatedPoint(usize, String),
    #[error("point {point} exceeds n = {n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("degree must be between 1 and {MAX_DEGREE}, got {0}")]
    Degree(usize),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub n: usize,
    /// Canonical cycle notation of each generator.
    pub generators: Vec<String>,
    pub name: Option<String>,
}

impl GroupSpec {
    pub fn permutations(&self) -> Result<Vec<Permutation>, GroupSpecError> {
        self.generators.iter().map(|g| parse_permutation(self.n, g)).collect()
    }

    pub fn group(&self) -> Result<PermGroup, GroupSpecError> {
        Ok(closure(self.n, &self.permutations()?)?)
    }
}

fn check_degree(n: usize) -> Result<(), GroupSpecError> {
    if n == 0 || n > MAX_DEGREE {
        return Err(GroupSpecError::Degree(n));
    }
    Ok(())
}

/// Parses `;`-separated generators acting on `{1..n}`.
pub fn parse_group_spec(n: usize, text: &str) -> Result<GroupSpec, GroupSpecError> {
    check_degree(n)?;
    if text.trim().is_empty() {
        return Err(GroupSpecError::Empty);
    }
    let mut generators = Vec::new();
    for (i, part) in text.split(';').enumerate() {
        if part.trim().is_empty() {
            return Err(GroupSpecError::EmptyGenerator(i + 1));
        }
        generators.push(parse_permutation(n, part)?.to_string());
    }
    Ok(GroupSpec { n, generators, name: None })
}

/// Parses one product of disjoint cycles.
pub fn parse_permutation(n: usize, text: &str) -> Result<Permutation, GroupSpecError> {
    let cycles = parse_cycles(text)?;
    let mut seen = vec![false; n + 1];
    for &p in cycles.iter().flatten() {
        if p > n {
            return Err(GroupSpecError::PointOutOfRange { point: p, n });
        }
        if seen[p] {
            return Err(GroupSpecError::RepeatedPoint(p, text.trim().to_string()));
        }
        seen[p] = true;
    }
    let cycles: Vec<Vec<usize>> = cycles.into_iter().filter(|c| c.len() > 1).collect();
    Ok(Permutation::from_cycles(n, &cycles)?)
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, GroupSpecError> {
    let unbalanced = || GroupSpecError::Unbalanced(text.trim().to_string());
    let bad = |t: &str| GroupSpecError::BadToken(t.to_string(), text.trim().to_string());
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        match ch {
            '(' if current.is_none() => current = Some(Vec::new()),
            '(' => return Err(unbalanced()),
            ')' => cycles.push(current.take().ok_or_else(unbalanced)?),
            c if c.is_whitespace() => {}
            c if c.is_ascii_digit() => {
                let cycle = current.as_mut().ok_or_else(|| bad(&c.to_string()))?;
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let tok = &text[i..end];
                match tok.parse::<usize>() {
                    Ok(p) if p >= 1 => cycle.push(p),
                    _ => return Err(bad(tok)),
                }
            }
            c => return Err(bad(&c.to_string())),
        }
    }
    if current.is_some() {
        return Err(unbalanced());
    }
    if cycles.is_empty() {
        return Err(bad(text.trim()));
    }
    Ok(cycles)
}

/// Expands `S_k`, `C_k`, `A_k` (written `S4` or `S_4`) and `V4`.
pub fn named_group(name: &str) -> Result<GroupSpec, GroupSpecError> {
    let unknown = || GroupSpecError::UnknownName(name.to_string());
    let key = name.trim();
    if key.eq_ignore_ascii_case("V4") {
        return Ok(GroupSpec {
            n: 4,
            generators: vec!["(1 2)(3 4)".into(), "(1 3)(2 4)".into()],
            name: Some("V4".into()),
        });
    }
    let mut it = key.chars();
    let family = it.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let rest = it.as_str();
    let k: usize = rest.strip_prefix('_').unwrap_or(rest).parse().map_err(|_| unknown())?;
    check_degree(k)?;
    let full_cycle = Permutation::from_cycles(k, &[(1..=k).collect()])?;
    let mut gens = match family {
        'S' => vec![Permutation::from_cycles(k, &[vec![1, 2.min(k)]])?, full_cycle],
        'C' => vec![full_cycle],
        'A' => (3..=k).map(|i| Permutation::from_cycles(k, &[vec![1, 2, i]])).collect::<Result<_, _>>()?,
        _ => return Err(unknown()),
    };
    gens.retain(|g| !g.is_identity());
    gens.dedup();
    if gens.is_empty() {
        gens.push(Permutation::identity(k));
    }
    Ok(GroupSpec {
        n: k,
        generators: gens.iter().map(Permutation::to_string).collect(),
        name: Some(format!("{family}{k}")),
    })
}
