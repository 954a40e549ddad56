//! Violation records shared by the structural validators.

use serde::Serialize;

use crate::fincat::{MorId, ObjId};

/// One broken instance of a structural law, with the witnessing ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    IdentityTyping { object: ObjId, identity: MorId },
    MissingComposite { g: MorId, f: MorId },
    CompositeTyping { g: MorId, f: MorId, composite: MorId },
    LeftIdentity { f: MorId },
    RightIdentity { f: MorId },
    Associativity { h: MorId, g: MorId, f: MorId },

    FunctorShape { detail: String },
    FunctorTyping { f: MorId },
    FunctorIdentity { object: ObjId },
    FunctorComposition { g: MorId, f: MorId },

    ComponentTyping { object: ObjId },
    Naturality { f: MorId },

    TensorTyping { f: MorId, g: MorId },
    TensorIdentity { a: ObjId, b: ObjId },
    Interchange { g: MorId, g2: MorId, f: MorId, f2: MorId },
    ObjectAssociativity { a: ObjId, b: ObjId, c: ObjId },
    MorphismAssociativity { f: MorId, g: MorId, h: MorId },

    Phi2Typing { x: ObjId, y: ObjId },
    Phi2Naturality { f: MorId, g: MorId },
    Phi2Associativity { x: ObjId, y: ObjId, z: ObjId },
}

/// Every violation found by a validator; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}
