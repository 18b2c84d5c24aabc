//! Reading and checking any emitted JSON artifact.

use std::fmt;

use serde_json::Value as Json;

use crate::derivation::{verify_derivation_log, DerivationLog, Rejection};
use crate::error::{Error, Result};
use crate::k1::{StableEquivCert, WordCert};

#[derive(Clone, Debug)]
pub enum Artifact {
    Log(DerivationLog),
    StableEquivalence(StableEquivCert),
    ElementaryWord(WordCert),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Rejection),
    /// A certificate whose words do not multiply out as claimed.
    ReplayFailed,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted => f.write_str("accepted"),
            Verdict::Rejected(r) => write!(f, "rejected: {r}"),
            Verdict::ReplayFailed => f.write_str("rejected: certificate does not replay"),
        }
    }
}

pub fn parse_artifact(s: &str) -> Result<Artifact> {
    let v: Json = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if v.get("steps").is_some() {
        return DerivationLog::from_json(s)
            .map(Artifact::Log)
            .map_err(|e| Error::Parse(e.to_string()));
    }
    match v.get("kind").and_then(Json::as_str) {
        Some("stable_equivalence") => StableEquivCert::from_json(s).map(Artifact::StableEquivalence),
        Some("elementary_word") => WordCert::from_json(s).map(Artifact::ElementaryWord),
        other => Err(Error::Parse(format!("unrecognised artifact kind {other:?}"))),
    }
}

impl Artifact {
    pub fn verify(&self) -> Verdict {
        match self {
            Artifact::Log(log) => match verify_derivation_log(log) {
                Ok(()) => Verdict::Accepted,
                Err(r) => Verdict::Rejected(r),
            },
            Artifact::StableEquivalence(c) if c.replay() => Verdict::Accepted,
            Artifact::ElementaryWord(c) if c.replay() => Verdict::Accepted,
            _ => Verdict::ReplayFailed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k1::{higman_linearize, PolyMatrix};
    use crate::witt::SeriesUnit;

    #[test]
    fn dispatch_by_shape() {
        let f = SeriesUnit::parse(&"Z/5".parse().unwrap(), 3, "1").unwrap();
        let log = crate::series::trivialize_k_torsion(&f, 2).unwrap();
        let a = parse_artifact(&log.to_json()).unwrap();
        assert!(matches!(a, Artifact::Log(_)));
        assert!(a.verify().accepted());

        let m = PolyMatrix::parse(&"Z".parse().unwrap(), "[[1 + X^2]]").unwrap();
        let (_, cert) = higman_linearize(&m).unwrap();
        let a = parse_artifact(&cert.to_json()).unwrap();
        assert!(a.verify().accepted());

        assert!(parse_artifact("{\"kind\": \"other\"}").is_err());
        assert!(parse_artifact("not json").is_err());
    }
}
