use super::compat::{check_saavedra_compat_strong, image_is_unit, image_unit, CompatContext};
use super::{enumerate_multiplicative, MultiplicativeFunctor};
use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{Functor, MorId};
use crate::units::{unit_label, UnitCategory};

/// The strong multiplicative functor `U(C) -> U(D)` over `F`: units go to
/// their images, unit morphisms to their images, and `φ₂` components are
/// the connecting morphisms of `U(D)`. Every component is checked to lie
/// over the corresponding datum of `F`.
pub fn lift_to_unit_categories(
    ctx: &CompatContext<'_>,
    phi0: MorId,
    uc: &UnitCategory,
    ud: &UnitCategory,
) -> Result<MultiplicativeFunctor> {
    if !check_saavedra_compat_strong(ctx, phi0)? {
        return Err(Error::Precondition("no strong compatibility to lift".into()));
    }
    image_unit(ctx, phi0)?;
    let f = ctx.functor;
    let (t, d) = (f.target(), f.target().category());
    let (ucat, udcat) = (uc.category.category(), ud.category.category());
    let mut omap = Vec::with_capacity(uc.units.len());
    for u in &uc.units {
        let image = image_is_unit(f, u)
            .ok_or_else(|| Error::violation("images of all units are units", unit_label(f.source().category(), u)))?;
        let pos = ud
            .position(&image)
            .ok_or_else(|| Error::violation("images of all units are units", unit_label(d, &image)))?;
        omap.push(pos);
    }
    let mut mmap = Vec::with_capacity(ucat.morphism_count());
    for psi in ucat.morphisms() {
        let m = ud.connecting(omap[ucat.dom(psi).0], omap[ucat.cod(psi).0]);
        if ud.forget.mor(m) != f.mor(uc.forget.mor(psi)) {
            return Err(Error::violation(
                "images of unit morphisms are unit morphisms",
                ucat.morphism_name(psi).to_string(),
            ));
        }
        mmap.push(m);
    }
    let functor = Functor::new(ucat.clone(), udcat.clone(), omap.clone(), mmap)?;
    let mut phi2 = Vec::with_capacity(omap.len() * omap.len());
    for a in ucat.objects() {
        for b in ucat.objects() {
            let from = ud.category.tensor_obj(omap[a.0], omap[b.0]);
            let to = omap[uc.category.tensor_obj(a, b).0];
            let m = ud.connecting(from, to);
            let (x, y) = (uc.forget.obj(a), uc.forget.obj(b));
            if ud.forget.mor(m) != f.phi2(x, y) {
                return Err(Error::violation(
                    "phi2 on units is a morphism of units",
                    format!("{} ⊗ {}", ucat.object_name(a), ucat.object_name(b)),
                ));
            }
            phi2.push(m);
        }
    }
    let lift = MultiplicativeFunctor::new(uc.category.clone(), ud.category.clone(), functor, phi2)?;
    let report = lift.validate();
    if !report.is_valid() || !lift.is_strong() {
        return Err(Error::violation("the lift is strong multiplicative", format!("{:?}", report.violations)));
    }
    if !square_commutes(f, &lift, uc, ud) {
        return Err(Error::violation("the lift commutes with the forgetful functors", t.name().to_string()));
    }
    Ok(lift)
}

/// `forget_D ∘ L = F ∘ forget_C` on objects, morphisms and `φ₂`.
fn square_commutes(
    f: &MultiplicativeFunctor,
    lift: &MultiplicativeFunctor,
    uc: &UnitCategory,
    ud: &UnitCategory,
) -> bool {
    let ucat = uc.category.category();
    ucat.objects().all(|a| ud.forget.obj(lift.obj(a)) == f.obj(uc.forget.obj(a)))
        && ucat.morphisms().all(|m| ud.forget.mor(lift.mor(m)) == f.mor(uc.forget.mor(m)))
        && ucat.objects().all(|a| {
            ucat.objects().all(|b| ud.forget.mor(lift.phi2(a, b)) == f.phi2(uc.forget.obj(a), uc.forget.obj(b)))
        })
}

/// Reads a compatibility off a lift: the connecting morphism from `J` to
/// the lifted `I`. `None` if the lift does not lie over `F`; a theorem
/// violation if the extracted arrow is not a compatibility.
pub fn compat_from_lift(
    ctx: &CompatContext<'_>,
    lift: &MultiplicativeFunctor,
    uc: &UnitCategory,
    ud: &UnitCategory,
) -> Result<Option<MorId>> {
    if !square_commutes(ctx.functor, lift, uc, ud) {
        return Ok(None);
    }
    let i = uc.position(&ctx.units.source).ok_or_else(|| Error::Precondition("source unit is not in U(C)".into()))?;
    let j = ud.position(&ctx.units.target).ok_or_else(|| Error::Precondition("target unit is not in U(D)".into()))?;
    let phi0 = ud.forget.mor(ud.connecting(j, lift.obj(i)));
    if !check_saavedra_compat_strong(ctx, phi0)? {
        return Err(Error::violation(
            "a lift yields a compatibility",
            ctx.functor.target().category().morphism_name(phi0).to_string(),
        ));
    }
    Ok(Some(phi0))
}

/// Every strong multiplicative functor `U(C) -> U(D)` lying over `F`.
pub fn enumerate_lifts(
    f: &MultiplicativeFunctor,
    uc: &UnitCategory,
    ud: &UnitCategory,
    budget: &mut Budget,
) -> Result<Vec<MultiplicativeFunctor>> {
    let all = enumerate_multiplicative(&uc.category, &ud.category, budget)?;
    Ok(all.into_iter().filter(|l| l.is_strong() && square_commutes(f, l, uc, ud)).collect())
}
