use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::liecore::{classify_element, Element, ElementKind, LieAlgebra, Subspace};

/// One step of an embedding run: the elements adjoined under `rule` and the
/// subspace reached afterwards.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    pub adjoined: Vec<Element>,
    /// Auxiliary element that produced the adjoined ones, such as the real
    /// semisimple element whose eigenvectors were taken.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Element>,
    pub result: Subspace,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingTrace {
    pub algorithm: String,
    pub input: Subspace,
    pub steps: Vec<TraceStep>,
    pub result: Subspace,
}

impl EmbeddingTrace {
    pub fn new(algorithm: &str, input: &Subspace) -> Self {
        EmbeddingTrace {
            algorithm: algorithm.into(),
            input: input.clone(),
            steps: vec![],
            result: input.clone(),
        }
    }

    /// Adjoins `elems` to the current result and records the step.
    pub fn push(&mut self, rule: &str, elems: Vec<Element>, witness: Option<Element>) -> &Subspace {
        self.result = self.result.extend(&elems);
        self.steps.push(TraceStep { rule: rule.into(), adjoined: elems, witness, result: self.result.clone() });
        &self.result
    }

    /// Replays the recorded steps from the input and checks every
    /// intermediate subspace and the final result.
    pub fn replay(&self) -> Result<Subspace> {
        let mut cur = self.input.clone();
        for (i, s) in self.steps.iter().enumerate() {
            cur = cur.extend(&s.adjoined);
            if cur != s.result {
                return Err(LieError::Invariant(format!("trace step {i} ({}) does not replay", s.rule)));
            }
        }
        if cur != self.result {
            return Err(LieError::Invariant("trace result does not replay".into()));
        }
        Ok(cur)
    }

    /// Checks that every adjoined element has the kind its rule requires.
    pub fn check_kinds(&self, l: &LieAlgebra) -> Result<()> {
        let want = match self.algorithm.as_str() {
            "nilpotent" | "abelian-nilpotent" => ElementKind::Nilpotent,
            "real-torus" => ElementKind::RealSemisimple,
            "compact-torus" => ElementKind::CompactSemisimple,
            other => return Err(LieError::Invariant(format!("unknown algorithm {other}"))),
        };
        for s in &self.steps {
            for e in &s.adjoined {
                let kind = classify_element(l, e)?.kind;
                if kind != want {
                    return Err(LieError::Invariant(format!(
                        "{} adjoined {} of kind {kind:?}",
                        s.rule,
                        l.format_element(e)
                    )));
                }
            }
        }
        Ok(())
    }
}
