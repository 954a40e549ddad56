//! Multiplicative functors and everything built on them: unit
//! compatibilities in both senses, lifts to categories of units, monoidal
//! natural transformations and monoids.

mod audit;
mod compat;
mod lift;
mod monoid;
mod nat;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{FinCategory, Functor, MorId, ObjId};
use crate::tensor::SemiMonCat;
use crate::units::{cartesian, SaavedraUnit};
use crate::validation::{ValidationReport, Violation};

pub use audit::{functor_pair_audit, FunctorPairAudit};
pub use compat::{
    check_lr_compat, check_saavedra_compat_lax, check_saavedra_compat_strong, equivalence_audit, image_is_unit,
    image_unit, lax_special_cases_audit, CompatContext, EquivalenceVerdicts, LaxSaavedraParts, LaxSpecialCases,
    LrSides, Strength,
};
pub use lift::{compat_from_lift, enumerate_lifts, lift_to_unit_categories};
pub use monoid::{
    is_classical_monoid, is_gentle_arrow, is_monoid_homomorphism, is_saavedra_monoid, is_semi_monoid,
    monoid_as_lax_functor, monoid_audit, Monoid, MonoidAudit,
};
pub use nat::{
    auto_unit_condition, check_monoidal_nt, enumerate_multiplicative_transformations, AutoUnitCondition,
    MonoidalNatTrans, NtVerdict,
};

/// A functor between semi-monoidal categories with a comparison family
/// `φ₂(X, Y): F X ⊗ F Y -> F (X ⊗ Y)`. Strong when every component is
/// invertible, lax otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeFunctor {
    source: Arc<SemiMonCat>,
    target: Arc<SemiMonCat>,
    functor: Functor,
    phi2: Vec<MorId>,
}

impl MultiplicativeFunctor {
    pub fn new(source: Arc<SemiMonCat>, target: Arc<SemiMonCat>, functor: Functor, phi2: Vec<MorId>) -> Result<Self> {
        if functor.source() != source.category() || functor.target() != target.category() {
            return Err(Error::Shape("functor ends differ from the semi-monoidal categories".into()));
        }
        let n = source.category().object_count();
        if phi2.len() != n * n || phi2.iter().any(|f| f.0 >= target.category().morphism_count()) {
            return Err(Error::Shape("phi2 needs one in-range component per pair of objects".into()));
        }
        Ok(MultiplicativeFunctor { source, target, functor, phi2 })
    }

    /// The identity functor with identity comparisons.
    pub fn identity(s: Arc<SemiMonCat>) -> Self {
        let c = s.category().clone();
        let phi2 =
            c.objects().flat_map(|x| c.objects().map(move |y| (x, y))).map(|(x, y)| c.id(s.tensor_obj(x, y))).collect();
        MultiplicativeFunctor { source: s.clone(), target: s, functor: Functor::identity(c), phi2 }
    }

    pub fn source(&self) -> &Arc<SemiMonCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SemiMonCat> {
        &self.target
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.functor.obj(a)
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.functor.mor(f)
    }

    pub fn phi2(&self, x: ObjId, y: ObjId) -> MorId {
        self.phi2[x.0 * self.source.category().object_count() + y.0]
    }

    pub fn phi2_components(&self) -> &[MorId] {
        &self.phi2
    }

    pub fn is_strong(&self) -> bool {
        let d = self.target.category();
        self.phi2.iter().all(|&f| d.is_iso(f).is_some())
    }

    /// Functor laws, typing of `φ₂`, naturality in both arguments and the
    /// associativity square.
    pub fn validate(&self) -> ValidationReport {
        let (c, d) = (self.source.category(), self.target.category());
        let (s, t) = (&*self.source, &*self.target);
        let mut report = self.functor.validate();
        if !report.is_valid() {
            return report;
        }
        for x in c.objects() {
            for y in c.objects() {
                let p = self.phi2(x, y);
                if d.dom(p) != t.tensor_obj(self.obj(x), self.obj(y)) || d.cod(p) != self.obj(s.tensor_obj(x, y)) {
                    report.push(Violation::Phi2Typing { x, y });
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                let left = d.compose(self.mor(s.tensor_mor(f, g)), self.phi2(c.dom(f), c.dom(g)));
                let right = d.compose(self.phi2(c.cod(f), c.cod(g)), t.tensor_mor(self.mor(f), self.mor(g)));
                if left != right {
                    report.push(Violation::Phi2Naturality { f, g });
                }
            }
        }
        for x in c.objects() {
            for y in c.objects() {
                for z in c.objects() {
                    let (xy, yz) = (s.tensor_obj(x, y), s.tensor_obj(y, z));
                    let left = d.compose(self.phi2(xy, z), t.whisker_right(self.phi2(x, y), self.obj(z)));
                    let right = d.compose(self.phi2(x, yz), t.whisker_left(self.obj(x), self.phi2(y, z)));
                    if left != right {
                        report.push(Violation::Phi2Associativity { x, y, z });
                    }
                }
            }
        }
        report
    }
}

/// Designated units on the source and target of a functor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitPair {
    pub source: SaavedraUnit,
    pub target: SaavedraUnit,
}

/// Every functor `c -> d`, in canonical order (object map, then morphism
/// map, both lexicographic).
pub fn enumerate_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>, budget: &mut Budget) -> Result<Vec<Functor>> {
    let object_choices: Vec<Vec<ObjId>> = c.objects().map(|_| d.objects().collect()).collect();
    let mut out = Vec::new();
    for omap in cartesian(&object_choices, budget)? {
        let morphism_choices: Vec<Vec<MorId>> = c
            .morphisms()
            .map(|f| {
                if c.is_identity(f) {
                    vec![d.id(omap[c.dom(f).0])]
                } else {
                    d.hom(omap[c.dom(f).0], omap[c.cod(f).0]).to_vec()
                }
            })
            .collect();
        for mmap in cartesian(&morphism_choices, budget)? {
            let f = Functor::new(c.clone(), d.clone(), omap.clone(), mmap)?;
            if f.validate().is_valid() {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Every multiplicative functor (lax or strong) `s -> t`.
pub fn enumerate_multiplicative(
    s: &Arc<SemiMonCat>,
    t: &Arc<SemiMonCat>,
    budget: &mut Budget,
) -> Result<Vec<MultiplicativeFunctor>> {
    let (c, d) = (s.category(), t.category());
    let mut out = Vec::new();
    for f in enumerate_functors(c, d, budget)? {
        let choices: Vec<Vec<MorId>> = c
            .objects()
            .flat_map(|x| c.objects().map(move |y| (x, y)))
            .map(|(x, y)| d.hom(t.tensor_obj(f.obj(x), f.obj(y)), f.obj(s.tensor_obj(x, y))).to_vec())
            .collect();
        for phi2 in cartesian(&choices, budget)? {
            let mf = MultiplicativeFunctor::new(s.clone(), t.clone(), f.clone(), phi2)?;
            if mf.validate().is_valid() {
                out.push(mf);
            }
        }
    }
    Ok(out)
}
