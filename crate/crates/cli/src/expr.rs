//! Group expressions (`S3 x Z2 x Z2`) and coordinate tuples (`(213,1,0)`).

use std::sync::Arc;

use goursat_core::catalog::MAX_PERMUTATION_DEGREE;
use goursat_core::{direct_product, make_group, Elem, FiniteGroup, GroupKind, Limits};
use thiserror::Error;

use crate::CliError;

/// A product of catalog atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupExpr {
    pub atoms: Vec<GroupKind>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unsupported atom {atom:?} at position {position}")]
    UnsupportedAtom { position: usize, atom: String },
    #[error("parameter out of range at position {position}: {detail}")]
    Parameter { position: usize, detail: String },
}

struct Cursor<'a> {
    /// `(byte offset, char)` with whitespace removed.
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { chars, pos: 0, text }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of input".to_string(), |c| format!("{c:?}"))
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            expected,
            found: self.found(),
        }
    }

    fn number(&mut self) -> Result<(usize, String), ParseError> {
        let start = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(self.syntax("a number"));
        }
        Ok((start, digits))
    }
}

/// Parses `Z<n>`, `S<n>`, `A<n>`, `D<n>`, `Q8` and `1` separated by `x`.
/// Whitespace is ignored and letters are case-insensitive.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut cur = Cursor::new(text);
    let mut atoms = vec![parse_atom(&mut cur)?];
    while let Some(c) = cur.peek() {
        if c.eq_ignore_ascii_case(&'x') {
            cur.pos += 1;
            atoms.push(parse_atom(&mut cur)?);
        } else {
            return Err(cur.syntax("'x' or end of input"));
        }
    }
    Ok(GroupExpr { atoms })
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<GroupKind, ParseError> {
    let start = cur.offset();
    let Some(head) = cur.peek() else {
        return Err(cur.syntax("a group atom (Z<n>, S<n>, A<n>, D<n>, Q8 or 1)"));
    };
    if head == '1' {
        cur.pos += 1;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(cur.syntax("'x' or end of input"));
        }
        return Ok(GroupKind::Trivial);
    }
    let letter = head.to_ascii_uppercase();
    if !matches!(letter, 'Z' | 'S' | 'A' | 'D' | 'Q') {
        return Err(cur.syntax("a group atom (Z<n>, S<n>, A<n>, D<n>, Q8 or 1)"));
    }
    cur.pos += 1;
    let (num_pos, digits) = cur.number()?;
    let param_error = |detail: String| ParseError::Parameter {
        position: num_pos,
        detail,
    };
    let n: usize = digits
        .parse()
        .map_err(|_| param_error(format!("{letter}{digits} is too large")))?;
    match letter {
        'Q' if n == 8 => Ok(GroupKind::Quaternion8),
        'Q' => Err(ParseError::UnsupportedAtom {
            position: start,
            atom: format!("Q{digits}"),
        }),
        _ if n == 0 => Err(param_error(format!("{letter}0 has no elements"))),
        'S' | 'A' if n > MAX_PERMUTATION_DEGREE => Err(param_error(format!(
            "{letter}{n}: degree must be at most {MAX_PERMUTATION_DEGREE}"
        ))),
        'Z' => Ok(GroupKind::Cyclic(n)),
        'S' => Ok(GroupKind::Symmetric(n)),
        'A' => Ok(GroupKind::Alternating(n)),
        'D' => Ok(GroupKind::Dihedral(n)),
        _ => unreachable!(),
    }
}

impl GroupExpr {
    /// The product of the atoms, as an `n`-factor direct product.
    pub fn build(&self, limits: &Limits) -> Result<Arc<FiniteGroup>, CliError> {
        let factors = self
            .atoms
            .iter()
            .map(|&k| make_group(k, limits))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(direct_product(&factors, limits)?.into_group())
    }
}

/// Parses a comma-separated list of coordinate tuples such as
/// `(1,0),(0,1)` into element indices of `group`.
pub fn parse_tuples(text: &str, group: &Arc<FiniteGroup>) -> Result<Vec<Elem>, CliError> {
    let factors = group.factor_list();
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    if cur.peek().is_none() {
        return Ok(out);
    }
    loop {
        if cur.peek() != Some('(') {
            return Err(cur.syntax("'('").into());
        }
        cur.pos += 1;
        let mut coords = Vec::with_capacity(factors.len());
        loop {
            let start = cur.offset();
            let mut token = String::new();
            while let Some(c) = cur.peek().filter(|&c| c != ',' && c != ')' && c != '(') {
                token.push(c);
                cur.pos += 1;
            }
            if token.is_empty() {
                return Err(cur.syntax("a coordinate").into());
            }
            let k = coords.len();
            let factor = factors.get(k).ok_or_else(|| CliError::Tuple {
                position: start,
                detail: format!("more than {} coordinates", factors.len()),
            })?;
            let x = factor.element_by_label(&token).ok_or_else(|| CliError::Tuple {
                position: start,
                detail: format!("{token:?} is not an element of {}", factor.label()),
            })?;
            coords.push(x);
            match cur.peek() {
                Some(',') => cur.pos += 1,
                Some(')') => {
                    cur.pos += 1;
                    break;
                }
                _ => return Err(cur.syntax("',' or ')'").into()),
            }
        }
        if coords.len() != factors.len() {
            return Err(CliError::Tuple {
                position: cur.offset(),
                detail: format!("expected {} coordinates, found {}", factors.len(), coords.len()),
            });
        }
        out.push(goursat_core::DirectProduct::view(group).encode(&coords)?);
        match cur.peek() {
            None => return Ok(out),
            Some(',') => cur.pos += 1,
            _ => return Err(cur.syntax("',' or end of input").into()),
        }
    }
}
