//! JSON documents for every structure in the crate.
//!
//! Documents refer to objects, morphisms and elements by name. Printing is
//! canonical (declaration order, tables in index order), so parsing a
//! printed document and printing it again gives identical bytes.

mod category;
mod prof;
mod skew;
mod warping;

use std::collections::HashMap;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::error::StructureError;
use crate::fincore::{FinCat, MorId, ObjId};

pub use category::{CategoryDoc, FunctorDoc, MapDoc, MonadDoc, MwMonadDoc, NatTransDoc};
pub use prof::{HomBundleDoc, ProfDoc};
pub use skew::{BicatDoc, CompDoc, HomDoc, SkewMonCatDoc, TensorDoc};
pub use warping::{AlgebraDoc, ExtensionDoc, WarpingDoc};

/// A problem with a document, located by a JSON path such as
/// `$.comp[3][1]`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {error}")]
pub struct FormatError {
    pub path: String,
    pub error: StructureError,
}

pub type FResult<T> = std::result::Result<T, FormatError>;

pub(crate) fn at(path: impl Into<String>, error: StructureError) -> FormatError {
    FormatError {
        path: path.into(),
        error,
    }
}

/// Parses a document, reporting the JSON path of any schema mismatch.
pub fn parse<T: DeserializeOwned>(text: &str) -> FResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." { "$".to_string() } else { format!("$.{path}") };
        at(path, StructureError::Malformed(e.into_inner().to_string()))
    })
}

/// Canonical text of a document: pretty-printed with a trailing newline.
pub fn print<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub(crate) fn obj(c: &FinCat, name: &str, path: &str) -> FResult<ObjId> {
    c.object_index(name)
        .ok_or_else(|| at(path, StructureError::Dangling(format!("object {name}"))))
}

pub(crate) fn mor(c: &FinCat, name: &str, path: &str) -> FResult<MorId> {
    c.morphism_index(name)
        .ok_or_else(|| at(path, StructureError::Dangling(format!("morphism {name}"))))
}

pub(crate) fn index_of(names: &[String], name: &str, what: &str, path: &str) -> FResult<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| at(path, StructureError::Dangling(format!("{what} {name}"))))
}

/// Collects keyed entries into a dense table of length `n`, rejecting
/// duplicates and gaps. `key_name` renders a missing key.
pub(crate) fn dense<T>(
    n: usize,
    entries: impl IntoIterator<Item = FResult<(usize, T)>>,
    path: &str,
    key_name: impl Fn(usize) -> String,
) -> FResult<Vec<T>> {
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for (i, e) in entries.into_iter().enumerate() {
        let (k, v) = e?;
        if out[k].replace(v).is_some() {
            return Err(at(
                format!("{path}[{i}]"),
                StructureError::Malformed(format!("duplicate entry for {}", key_name(k))),
            ));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| at(path, StructureError::Malformed(format!("missing entry for {}", key_name(k)))))
        })
        .collect()
}

/// Collects keyed entries into a map, rejecting duplicates. Totality is
/// left to the structure's own checks.
pub(crate) fn keyed<K: Eq + Hash + std::fmt::Debug, T>(
    entries: impl IntoIterator<Item = FResult<(K, T)>>,
    path: &str,
) -> FResult<HashMap<K, T>> {
    let mut out = HashMap::new();
    for (i, e) in entries.into_iter().enumerate() {
        let (k, v) = e?;
        if out.insert(k, v).is_some() {
            return Err(at(
                format!("{path}[{i}]"),
                StructureError::Malformed("duplicate key".into()),
            ));
        }
    }
    Ok(out)
}
