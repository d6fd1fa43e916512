//! Named graphs, transcribed graph lists and split/threshold recognition.

pub mod figures;
pub mod named;
pub mod recognize;

pub use figures::{figure_family, figure_graphs, Figure, FigureInstance};
pub use named::{
    bull, butterfly, claw, complete, complete_bipartite, cycle, gem, named, path, two_k2,
    NamedGraph,
};
pub use recognize::{
    is_pseudo_split, is_split, is_threshold, pseudo_split_family, split_by_degree_sequence,
    split_family, threshold_by_creation_sequence, threshold_family,
};

use crate::error::FamilyError;
use crate::hfree::{elm, Family};

/// Forbidden family for one lowercase token: `claw`, `2k2`, `p4`, `c4`,
/// `c5`, `split`, `pseudo_split`, `threshold`, or any name accepted by
/// [`named`], which stands for the one-graph family.
pub fn family_by_token(token: &str) -> Result<Family, FamilyError> {
    match token.trim().to_ascii_lowercase().as_str() {
        "split" => Ok(split_family()),
        "pseudo_split" | "pseudo-split" => Ok(pseudo_split_family()),
        "threshold" => Ok(threshold_family()),
        _ => Ok(Family::single(named(token)?.graph)),
    }
}

/// Comma-separated tokens, united and reduced by [`elm`].
pub fn family_from_list(list: &str) -> Result<Family, FamilyError> {
    let mut fam = Family::default();
    for token in list.split(',').filter(|t| !t.trim().is_empty()) {
        fam = fam.union(&family_by_token(token)?);
    }
    if fam.is_empty() {
        return Err(FamilyError::UnknownName(list.to_string()));
    }
    Ok(elm(&fam))
}
