//! JSON forms of certificates. Matrices and `λ` values are text in the
//! element grammar over `ring[X]`.

use serde::{Deserialize, Serialize};

use super::higman::StableEquivCert;
use super::matrix::{poly_ring, PolyMatrix};
use super::word::{ElemWord, Transvection};
use crate::error::{Error, Result};
use crate::ring::{RingDescriptor, RingElem};

pub const CERT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
struct LetterJson {
    i: usize,
    j: usize,
    lambda: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct StableJson {
    schema: u32,
    kind: String,
    ring: String,
    size: usize,
    source: String,
    target: String,
    left: Vec<LetterJson>,
    right: Vec<LetterJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct WordJson {
    schema: u32,
    kind: String,
    ring: String,
    size: usize,
    target: String,
    letters: Vec<LetterJson>,
}

fn letters_to_json(w: &ElemWord) -> Vec<LetterJson> {
    w.letters()
        .iter()
        .map(|l| LetterJson {
            i: l.i,
            j: l.j,
            lambda: l.lambda.to_bare_string(),
        })
        .collect()
}

fn word_from_json(base: &RingDescriptor, size: usize, letters: &[LetterJson]) -> Result<ElemWord> {
    let ring = poly_ring(base)?;
    let letters = letters
        .iter()
        .map(|l| {
            Ok(Transvection {
                i: l.i,
                j: l.j,
                lambda: RingElem::parse(&ring, &l.lambda)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ElemWord::new(base, size, letters)
}

fn check_header(schema: u32, kind: &str, want: &str) -> Result<()> {
    if schema != CERT_SCHEMA {
        return Err(Error::Parse(format!("unsupported schema {schema}")));
    }
    if kind != want {
        return Err(Error::Parse(format!("expected kind {want:?}, found {kind:?}")));
    }
    Ok(())
}

impl StableEquivCert {
    pub fn to_json(&self) -> String {
        let j = StableJson {
            schema: CERT_SCHEMA,
            kind: "stable_equivalence".into(),
            ring: self.source().base().to_string(),
            size: self.size(),
            source: self.source().to_string(),
            target: self.target().to_string(),
            left: letters_to_json(self.left()),
            right: letters_to_json(self.right()),
        };
        serde_json::to_string_pretty(&j).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: StableJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_header(j.schema, &j.kind, "stable_equivalence")?;
        let base: RingDescriptor = j.ring.parse()?;
        StableEquivCert::new(
            j.size,
            word_from_json(&base, j.size, &j.left)?,
            word_from_json(&base, j.size, &j.right)?,
            PolyMatrix::parse(&base, &j.source)?,
            PolyMatrix::parse(&base, &j.target)?,
        )
    }
}

/// A word claimed to multiply out to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordCert {
    pub word: ElemWord,
    pub target: PolyMatrix,
}

impl WordCert {
    pub fn replay(&self) -> bool {
        self.word.size() == self.target.size() && self.word.product() == self.target
    }

    pub fn to_json(&self) -> String {
        let j = WordJson {
            schema: CERT_SCHEMA,
            kind: "elementary_word".into(),
            ring: self.target.base().to_string(),
            size: self.word.size(),
            target: self.target.to_string(),
            letters: letters_to_json(&self.word),
        };
        serde_json::to_string_pretty(&j).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: WordJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_header(j.schema, &j.kind, "elementary_word")?;
        let base: RingDescriptor = j.ring.parse()?;
        Ok(WordCert {
            word: word_from_json(&base, j.size, &j.letters)?,
            target: PolyMatrix::parse(&base, &j.target)?,
        })
    }
}
