//! Text notations for semigroups.
//!
//! Two forms are accepted:
//!
//! * set form `0,6,9,10,12,14->` — the listed elements plus every integer
//!   from the last listed one onward;
//! * generator form `6,9,10` — a generating system, closed up on parse.
//!
//! Printing a semigroup (its `Display` impl) always produces canonical set
//! form, and parse/print round-trip exactly on canonical strings.

use thiserror::Error;

use crate::semigroup::{GeneratorList, NumericalSemigroup, SemigroupError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("parse error at column {column}: {message}")]
    Syntax { message: String, column: usize },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Splits a comma-separated integer list, reporting the 1-based column of
/// the first offending character on failure.
fn parse_int_list(text: &str) -> Result<Vec<i64>, NotationError> {
    let mut out = Vec::new();
    let mut column = 1usize;
    if text.trim().is_empty() {
        return Err(NotationError::Syntax {
            message: "empty integer list".to_string(),
            column,
        });
    }
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let offset = piece.len() - piece.trim_start().len();
        match trimmed.parse::<i64>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(NotationError::Syntax {
                    message: format!("expected an integer, found {trimmed:?}"),
                    column: column + offset,
                })
            }
        }
        column += piece.len() + 1; // past the comma
    }
    Ok(out)
}

/// Parses set form: an element list with a trailing `->`.
pub fn parse_element_set(text: &str) -> Result<NumericalSemigroup, NotationError> {
    let trimmed = text.trim();
    let Some(list) = trimmed.strip_suffix("->") else {
        return Err(NotationError::Syntax {
            message: "set form must end with \"->\"".to_string(),
            column: trimmed.len().max(1),
        });
    };
    let elements = parse_int_list(list)?;
    let declared = elements.iter().copied().max().unwrap_or(0);
    Ok(NumericalSemigroup::from_small_elements(&elements, declared)?)
}

/// Parses generator form: a plain comma-separated list of generators.
pub fn parse_generator_list(text: &str) -> Result<GeneratorList, NotationError> {
    Ok(GeneratorList::new(parse_int_list(text.trim())?)?)
}

/// Parses either notation, dispatching on the trailing `->`: set form if
/// present, otherwise generator form (taking the closure).
pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, NotationError> {
    let trimmed = text.trim();
    if trimmed.ends_with("->") {
        parse_element_set(trimmed)
    } else {
        Ok(NumericalSemigroup::from_generators(&parse_generator_list(
            trimmed,
        )?)?)
    }
}
