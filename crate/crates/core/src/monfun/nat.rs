use serde::Serialize;

use super::MultiplicativeFunctor;
use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{MorId, NatTransformation, ObjId};
use crate::units::cartesian;

/// A natural transformation between multiplicative functors, each carrying
/// a unit comparison out of the same target unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalNatTrans {
    pub from: MultiplicativeFunctor,
    pub to: MultiplicativeFunctor,
    pub phi0: MorId,
    pub gamma0: MorId,
    /// The source unit object `I`.
    pub unit: ObjId,
    pub components: Vec<MorId>,
}

impl MonoidalNatTrans {
    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NtVerdict {
    pub natural: bool,
    pub multiplicative: bool,
    /// `u_I ∘ φ₀ = γ₀`
    pub unit_triangle: bool,
}

impl NtVerdict {
    pub fn monoidal(&self) -> bool {
        self.natural && self.multiplicative && self.unit_triangle
    }
}

fn multiplicative(from: &MultiplicativeFunctor, to: &MultiplicativeFunctor, components: &[MorId]) -> bool {
    let (s, t) = (from.source(), from.target());
    let (c, d) = (s.category(), t.category());
    c.objects().all(|x| {
        c.objects().all(|y| {
            let left = d.compose(components[s.tensor_obj(x, y).0], from.phi2(x, y));
            let right = d.compose(to.phi2(x, y), t.tensor_mor(components[x.0], components[y.0]));
            left == right
        })
    })
}

pub fn check_monoidal_nt(u: &MonoidalNatTrans) -> Result<NtVerdict> {
    if u.from.source() != u.to.source() || u.from.target() != u.to.target() {
        return Err(Error::Shape("transformation between functors with different ends".into()));
    }
    let nt = NatTransformation::new(u.from.functor().clone(), u.to.functor().clone(), u.components.clone())?;
    let d = u.from.target().category();
    let ui = u.component(u.unit);
    if d.dom(u.phi0) != d.dom(u.gamma0) || d.cod(u.phi0) != d.dom(ui) || d.cod(u.gamma0) != d.cod(ui) {
        return Err(Error::Typing("unit comparisons do not fit the component at I".into()));
    }
    let natural = nt.validate().is_valid();
    Ok(NtVerdict {
        natural,
        multiplicative: natural && multiplicative(&u.from, &u.to, &u.components),
        unit_triangle: d.compose(ui, u.phi0) == u.gamma0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AutoUnitCondition {
    /// `u_I` is tensor cancellable.
    pub applies: bool,
    pub holds: bool,
}

/// Whether the component at `I` is tensor cancellable, and whether the unit
/// triangle holds. For a multiplicative transformation between functors
/// with strong compatibilities, the first implies the second; a failure is
/// reported as a theorem violation.
pub fn auto_unit_condition(u: &MonoidalNatTrans) -> Result<AutoUnitCondition> {
    let verdict = check_monoidal_nt(u)?;
    let t = u.from.target();
    let applies = match t.is_tensor_cancellable(u.component(u.unit)) {
        Ok(b) => b,
        Err(Error::NotCancellable { .. }) => false,
        Err(e) => return Err(e),
    };
    let holds = verdict.unit_triangle;
    if applies && verdict.natural && verdict.multiplicative && !holds {
        return Err(Error::violation(
            "a tensor cancellable component at I satisfies the unit condition",
            t.category().morphism_name(u.component(u.unit)).to_string(),
        ));
    }
    Ok(AutoUnitCondition { applies, holds })
}

/// All natural, multiplicative transformations `from => to`.
pub fn enumerate_multiplicative_transformations(
    from: &MultiplicativeFunctor,
    to: &MultiplicativeFunctor,
    budget: &mut Budget,
) -> Result<Vec<Vec<MorId>>> {
    let (c, d) = (from.source().category(), from.target().category());
    let choices: Vec<Vec<MorId>> = c.objects().map(|x| d.hom(from.obj(x), to.obj(x)).to_vec()).collect();
    let mut out = Vec::new();
    for components in cartesian(&choices, budget)? {
        let nt = NatTransformation::new(from.functor().clone(), to.functor().clone(), components.clone())?;
        if !nt.validate().is_valid() {
            continue;
        }
        if multiplicative(from, to, &components) {
            out.push(components);
        }
    }
    Ok(out)
}
